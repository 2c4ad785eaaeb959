"""Free-group word algebra on signed generator indices.

A word is a tuple of nonzero ints: ``+i`` is the generator ``s_i`` and
``-i`` its inverse. All public operations return freely reduced words.
Generator-image maps (``GroupHom``) perform letterwise substitution; they
are the carriers for the conjugation maps produced by quiver mutation.
"""

from __future__ import annotations

import dataclasses
import re
from typing import Iterable, Mapping

from .errors import GeneratorSetMismatchError, ParseError, UnknownGeneratorError

Word = tuple[int, ...]


def free_reduce(letters: Iterable[int]) -> Word:
    """Cancel adjacent inverse pairs until no ``(+i, -i)`` pair remains."""
    stack: list[int] = []
    for x in letters:
        if x == 0:
            raise ParseError("word letters must be nonzero signed integers")
        if stack and stack[-1] == -x:
            stack.pop()
        else:
            stack.append(x)
    return tuple(stack)


def invert(word: Iterable[int]) -> Word:
    return tuple(-x for x in reversed(tuple(word)))


def concat(*words: Iterable[int]) -> Word:
    out: list[int] = []
    for w in words:
        out.extend(w)
    return free_reduce(out)


def parse_word(text: str) -> Word:
    """Parse the ``"s1 s2 s3^-1"`` syntax into a signed tuple."""
    letters: list[int] = []
    for token in text.split():
        m = re.fullmatch(r"s(\d+)(\^-1)?", token)
        if not m:
            raise ParseError(f"bad word token: {token!r}")
        i = int(m.group(1))
        if i == 0:
            raise ParseError("generator indices start at 1")
        letters.append(-i if m.group(2) else i)
    return free_reduce(letters)


def format_word(word: Iterable[int]) -> str:
    return " ".join(f"s{x}" if x > 0 else f"s{-x}^-1" for x in word)


@dataclasses.dataclass(frozen=True)
class GroupHom:
    """A homomorphism of free groups given by images of the generators.

    ``images[i]`` is the (freely reduced) image word of ``s_i``; the image
    of ``s_i^-1`` is the inverse word. Source and target generator sets
    are carried along so that compositions can be checked.
    """

    source: tuple[int, ...]
    target: tuple[int, ...]
    images: Mapping[int, Word]

    def __post_init__(self) -> None:
        images = {i: free_reduce(w) for i, w in self.images.items()}
        object.__setattr__(self, "source", tuple(sorted(self.source)))
        object.__setattr__(self, "target", tuple(sorted(self.target)))
        object.__setattr__(self, "images", images)
        missing = set(self.source) - set(images)
        if missing:
            raise UnknownGeneratorError(f"no image for generators {sorted(missing)}")
        used = {abs(x) for w in images.values() for x in w}
        stray = used - set(self.target)
        if stray:
            raise UnknownGeneratorError(f"images use unknown targets {sorted(stray)}")

    def __call__(self, word: Iterable[int]) -> Word:
        return apply_hom(self, word)

    def is_identity_on_generators(self) -> bool:
        return all(self.images[i] == (i,) for i in self.source)


def identity_hom(generators: Iterable[int]) -> GroupHom:
    gens = tuple(generators)
    return GroupHom(gens, gens, {i: (i,) for i in gens})


def apply_hom(hom: GroupHom, word: Iterable[int]) -> Word:
    """Substitute generator images letterwise and freely reduce."""
    out: list[int] = []
    allowed = set(hom.source)
    for x in word:
        if abs(x) not in allowed:
            raise UnknownGeneratorError(f"generator {abs(x)} not in source")
        image = hom.images[abs(x)]
        out.extend(image if x > 0 else invert(image))
    return free_reduce(out)


def compose(outer: GroupHom, inner: GroupHom) -> GroupHom:
    """The composite ``outer after inner`` (apply ``inner`` first)."""
    if inner.target != outer.source:
        raise GeneratorSetMismatchError(
            f"target {inner.target} of inner map != source {outer.source} of outer map"
        )
    return GroupHom(
        inner.source,
        outer.target,
        {i: apply_hom(outer, w) for i, w in inner.images.items()},
    )
