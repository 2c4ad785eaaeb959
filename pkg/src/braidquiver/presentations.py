"""Group presentations read off a mutation-Dynkin quiver.

Generators are the quiver vertices. Relators are single freely reduced
words ``u * v^-1`` rather than equations, each tagged with its
provenance: ``commuting`` for non-adjacent pairs, ``braid`` for
adjacent pairs, ``cycle:r`` for the rotation-``r`` relator of a
chordless oriented cycle, and ``square`` for the Coxeter quotient.
All cycle rotations are emitted; minimality is a theorem the
verification sweeps check, not an encoding choice.
"""

from __future__ import annotations

import dataclasses
import itertools

from .quivers import Quiver, chordless_cycles, require_mutation_dynkin
from .words import Word, concat, free_reduce, invert


@dataclasses.dataclass(frozen=True)
class Relator:
    word: Word
    kind: str

    def __post_init__(self) -> None:
        object.__setattr__(self, "word", free_reduce(self.word))


@dataclasses.dataclass(frozen=True)
class Presentation:
    generators: tuple[int, ...]
    relators: tuple[Relator, ...]

    def words(self, kind_prefix: str | None = None) -> list[Word]:
        return [
            r.word
            for r in self.relators
            if kind_prefix is None or r.kind.startswith(kind_prefix)
        ]

    def to_json(self) -> dict:
        return {
            "generators": list(self.generators),
            "relators": [{"word": list(r.word), "kind": r.kind} for r in self.relators],
        }


def _cycle_word(cycle: tuple[int, ...], rotation: int) -> Word:
    """``s_1 s_2 ... s_n s_1 ... s_{n-2}`` read from the given rotation."""
    n = len(cycle)
    letters = [cycle[(rotation + i) % n] for i in range(n)]
    letters += [cycle[(rotation + i) % n] for i in range(n - 2)]
    return tuple(letters)


def presentation_of(quiver: Quiver) -> Presentation:
    """Commuting, braid, and chordless-cycle rotation relators of the quiver."""
    require_mutation_dynkin(quiver)
    arrow_set = set(quiver.arrows)
    relators: list[Relator] = []
    for i, j in itertools.combinations(quiver.vertices, 2):
        if (i, j) in arrow_set or (j, i) in arrow_set:
            relators.append(Relator((i, j, i, -j, -i, -j), "braid"))
        else:
            relators.append(Relator((i, j, -i, -j), "commuting"))
    for cycle in chordless_cycles(quiver):
        n = len(cycle)
        for r in range(n - 1):
            word = concat(_cycle_word(cycle.vertices, r), invert(_cycle_word(cycle.vertices, r + 1)))
            relators.append(Relator(word, f"cycle:{r}"))
    return Presentation(quiver.vertices, tuple(relators))


def coxeter_presentation_of(quiver: Quiver) -> Presentation:
    """The quotient presentation with the generator squares added."""
    base = presentation_of(quiver)
    squares = tuple(Relator((i, i), "square") for i in quiver.vertices)
    return Presentation(base.generators, base.relators + squares)


def cycle_rotation_words(quiver: Quiver) -> list[tuple[tuple[int, ...], int, Word]]:
    """Every rotation word of every chordless cycle (for the one-implies-all check)."""
    out = []
    for cycle in chordless_cycles(quiver):
        n = len(cycle)
        for r in range(n):
            out.append((cycle.vertices, r, _cycle_word(cycle.vertices, r)))
    return out


def barot_marsh_relators(quiver: Quiver) -> list[Word]:
    """For each chordless oriented cycle and rotation, the squared zigzag
    ``(s_1 ... s_{n-1} s_n s_{n-1} ... s_2)^2`` (trivial in the Coxeter quotient)."""
    require_mutation_dynkin(quiver)
    out: list[Word] = []
    for cycle in chordless_cycles(quiver):
        n = len(cycle)
        for r in range(n):
            rotated = [cycle.vertices[(r + i) % n] for i in range(n)]
            half = rotated[:-1] + [rotated[-1]] + rotated[1:-1][::-1]
            out.append(free_reduce(tuple(half + half)))
    return out
