"""Word problem for ADE braid groups via greedy Garside normal forms.

Simples are Weyl group elements; the Garside element is the positive
lift of the longest element, and inverse letters are rewritten through
it, commuting the inverse powers to the front with the diagram
automorphism. The inner repair loop lives in a swappable kernel: the
compiled ``_nfcore_c`` when available, else the pure-Python ``_nfcore``
(force the latter with ``BQM_PURE=1``).
"""

from __future__ import annotations

import dataclasses
import os

from . import _nfcore
from .errors import UnknownVertexError
from .weyl import (
    DynkinType,
    WeylElement,
    evaluate,
    reduced_word,
    weyl_table,
)

if os.environ.get("BQM_PURE"):
    _kernel = _nfcore
else:
    try:
        from . import _nfcore_c as _kernel  # type: ignore[no-redef]
    except ImportError:
        _kernel = _nfcore

KERNEL = _kernel.IMPLEMENTATION


@dataclasses.dataclass(frozen=True)
class GarsideNF:
    """Left-weighted normal form ``delta^p x_1 ... x_l``.

    Factors are Weyl elements, none the identity or the longest
    element; adjacent pairs satisfy the left-weighted descent condition.
    Two words are equal in the braid group iff their forms agree.
    """

    dtype: DynkinType
    delta_power: int
    factors: tuple[WeylElement, ...]

    @property
    def is_trivial(self) -> bool:
        return self.delta_power == 0 and not self.factors

    def canonical_length(self) -> int:
        return len(self.factors)

    def to_json(self) -> dict:
        return {
            "delta_power": self.delta_power,
            "factors": [[list(row) for row in f.matrix] for f in self.factors],
            "factor_words": [
                " ".join(f"s{i}" for i in reduced_word(f)) for f in self.factors
            ],
        }


def _check_word(dtype: DynkinType, word: tuple[int, ...]) -> None:
    for x in word:
        if x == 0 or abs(x) > dtype.rank:
            raise UnknownVertexError(f"generator {x} not valid for {dtype}")


def _core_normal_form(dtype: DynkinType, word: tuple[int, ...]) -> tuple[int, list[int]]:
    table = weyl_table(dtype)
    return _kernel.normal_form_core(
        0,
        [],
        list(word),
        table.n,
        table.rm,
        table.lm,
        table.rd,
        table.ld,
        table.tau,
        table.gen,
        table.w0_gen,
        table.w0,
    )


def normal_form(dtype: DynkinType, word: tuple[int, ...]) -> GarsideNF:
    """Canonical form of a word in the generators of the braid group."""
    _check_word(dtype, word)
    table = weyl_table(dtype)
    p, factors = _core_normal_form(dtype, word)
    return GarsideNF(dtype, p, tuple(table.element(x) for x in factors))


def is_trivial(dtype: DynkinType, word: tuple[int, ...]) -> bool:
    _check_word(dtype, word)
    p, factors = _core_normal_form(dtype, word)
    return p == 0 and not factors


def equal(dtype: DynkinType, w1: tuple[int, ...], w2: tuple[int, ...]) -> bool:
    return is_trivial(dtype, tuple(w1) + tuple(-x for x in reversed(w2)))


def delta_word(dtype: DynkinType) -> tuple[int, ...]:
    """A positive word lifting the longest element (the Garside element)."""
    table = weyl_table(dtype)
    return reduced_word(table.element(table.w0))


def structurally_left_weighted(nf: GarsideNF) -> bool:
    """Re-check the descent condition of adjacent factors from scratch."""
    table = weyl_table(nf.dtype)
    indices = [table.index[f.matrix] for f in nf.factors]
    if any(x == 0 or x == table.w0 for x in indices):
        return False
    return _kernel.is_left_weighted(indices, table.n, table.rd, table.ld)


def weyl_image(dtype: DynkinType, word: tuple[int, ...]) -> WeylElement:
    """The image in the Weyl quotient (a necessary condition for equality)."""
    return evaluate(dtype, word)
