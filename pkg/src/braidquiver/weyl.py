"""Exact realization of ADE Weyl groups on the root lattice.

Elements are integer matrices in the basis of simple roots (column ``j``
is the image of the ``j``-th simple root). Lengths, descents and the
longest element are read off the action on positive roots, so one code
path serves all three families. ``WeylTable`` additionally enumerates a
whole group once and tabulates generator multiplication, descent masks
and the diagram automorphism; the Garside solver runs on those tables.
"""

from __future__ import annotations

import dataclasses
import functools
import os
import threading
from array import array
from typing import Iterable

from .errors import BudgetExceededError, ParseError, UnknownVertexError

Matrix = tuple[tuple[int, ...], ...]

DEFAULT_WEYL_BUDGET = 10**6

_KNOWN_ORDERS = {
    ("E", 6): 51840,
    ("E", 7): 2903040,
    ("E", 8): 696729600,
}


def _weyl_budget() -> int:
    return int(os.environ.get("BQM_MAX_WEYL", DEFAULT_WEYL_BUDGET))


@dataclasses.dataclass(frozen=True, order=True)
class DynkinType:
    """An ADE diagram: family A (n>=1), D (n>=4) or E (n in 6..8)."""

    family: str
    rank: int

    def __post_init__(self) -> None:
        ok = (
            (self.family == "A" and self.rank >= 1)
            or (self.family == "D" and self.rank >= 4)
            or (self.family == "E" and self.rank in (6, 7, 8))
        )
        if not ok:
            raise ParseError(f"not an ADE type: {self.family}{self.rank}")

    @staticmethod
    def parse(text: str) -> "DynkinType":
        text = text.strip()
        if len(text) < 2 or text[0] not in "ADE" or not text[1:].isdigit():
            raise ParseError(f"bad Dynkin type string: {text!r}")
        return DynkinType(text[0], int(text[1:]))

    def __str__(self) -> str:
        return f"{self.family}{self.rank}"

    @property
    def vertices(self) -> tuple[int, ...]:
        return tuple(range(1, self.rank + 1))

    def edges(self) -> list[tuple[int, int]]:
        n = self.rank
        if self.family == "A":
            return [(i, i + 1) for i in range(1, n)]
        if self.family == "D":
            return [(1, 3), (2, 3)] + [(i, i + 1) for i in range(3, n)]
        return [(1, 3), (2, 4), (3, 4)] + [(i, i + 1) for i in range(4, n)]

    def cartan(self) -> Matrix:
        n = self.rank
        c = [[0] * n for _ in range(n)]
        for i in range(n):
            c[i][i] = 2
        for a, b in self.edges():
            c[a - 1][b - 1] = -1
            c[b - 1][a - 1] = -1
        return tuple(tuple(row) for row in c)

    def order(self) -> int:
        """|W| by closed form; used only to gate enumeration budgets."""
        n = self.rank
        if self.family == "A":
            return _factorial(n + 1)
        if self.family == "D":
            return 2 ** (n - 1) * _factorial(n)
        return _KNOWN_ORDERS[("E", n)]


def _factorial(n: int) -> int:
    out = 1
    for i in range(2, n + 1):
        out *= i
    return out


def _identity(n: int) -> Matrix:
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def _mat_mul(a: Matrix, b: Matrix) -> Matrix:
    n = len(a)
    bt = tuple(zip(*b))
    return tuple(
        tuple(sum(ra[k] * cb[k] for k in range(n)) for cb in bt) for ra in a
    )


def _mul_gen_right(m: Matrix, i: int, cartan: Matrix) -> Matrix:
    """m * s_i via column operations (column j -= C[i][j] * column i)."""
    crow = cartan[i]
    rows = []
    for row in m:
        vi = row[i]
        rows.append(tuple(-vi if j == i else row[j] - crow[j] * vi for j in range(len(row))))
    return tuple(rows)


def _mul_gen_left(m: Matrix, i: int, cartan: Matrix) -> Matrix:
    """s_i * m via a single row operation (row i -= <alpha_i^vee, -> pairing)."""
    crow = cartan[i]
    n = len(m)
    new_row_i = tuple(
        -m[i][j] - sum(crow[b] * m[b][j] for b in range(n) if b != i)
        for j in range(n)
    )
    return tuple(new_row_i if a == i else m[a] for a in range(n))


@dataclasses.dataclass(frozen=True)
class WeylElement:
    """A Weyl group element with its reflection-representation matrix."""

    dtype: DynkinType
    matrix: Matrix

    def __mul__(self, other: "WeylElement") -> "WeylElement":
        if other.dtype != self.dtype:
            raise ParseError("cannot multiply elements of different types")
        return WeylElement(self.dtype, _mat_mul(self.matrix, other.matrix))

    def is_identity(self) -> bool:
        return self.matrix == _identity(self.dtype.rank)

    def apply(self, root: tuple[int, ...]) -> tuple[int, ...]:
        return tuple(
            sum(self.matrix[a][j] * root[j] for j in range(len(root)))
            for a in range(len(root))
        )

    @property
    def length(self) -> int:
        return _length(self.dtype, self.matrix)

    def inverse(self) -> "WeylElement":
        word = reduced_word(self)
        return evaluate(self.dtype, tuple(reversed(word)))


@functools.lru_cache(maxsize=None)
def positive_roots(dtype: DynkinType) -> tuple[tuple[int, ...], ...]:
    """Closure of the simple roots under simple reflections, positive part."""
    n = dtype.rank
    cartan = dtype.cartan()
    simples = [tuple(1 if j == i else 0 for j in range(n)) for i in range(n)]
    seen = set(simples)
    frontier = list(simples)
    while frontier:
        nxt = []
        for beta in frontier:
            for i in range(n):
                pairing = sum(cartan[i][j] * beta[j] for j in range(n))
                image = tuple(
                    beta[j] - pairing if j == i else beta[j] for j in range(n)
                )
                if image not in seen:
                    seen.add(image)
                    nxt.append(image)
        frontier = nxt
    return tuple(sorted(beta for beta in seen if all(x >= 0 for x in beta)))


@functools.lru_cache(maxsize=200000)
def _length(dtype: DynkinType, matrix: Matrix) -> int:
    count = 0
    n = dtype.rank
    for beta in positive_roots(dtype):
        image = [
            sum(matrix[a][j] * beta[j] for j in range(n)) for a in range(n)
        ]
        if all(x <= 0 for x in image):
            count += 1
    return count


def identity_element(dtype: DynkinType) -> WeylElement:
    return WeylElement(dtype, _identity(dtype.rank))


def simple_reflection(dtype: DynkinType, i: int) -> WeylElement:
    if i not in dtype.vertices:
        raise UnknownVertexError(f"vertex {i} not in {dtype}")
    cartan = dtype.cartan()
    return WeylElement(dtype, _mul_gen_right(_identity(dtype.rank), i - 1, cartan))


def evaluate(dtype: DynkinType, word: Iterable[int]) -> WeylElement:
    """Product of simple reflections; inverse letters fold to the same matrix."""
    cartan = dtype.cartan()
    m = _identity(dtype.rank)
    for x in word:
        i = abs(x)
        if i not in dtype.vertices:
            raise UnknownVertexError(f"generator {i} not in {dtype}")
        m = _mul_gen_right(m, i - 1, cartan)
    return WeylElement(dtype, m)


def right_descents(w: WeylElement) -> frozenset[int]:
    """{i : w(alpha_i) is a negative root} = {i : l(w s_i) < l(w)}."""
    n = w.dtype.rank
    out = set()
    for i in range(n):
        col = [w.matrix[a][i] for a in range(n)]
        if all(x <= 0 for x in col):
            out.add(i + 1)
    return frozenset(out)


def descents(w: WeylElement, side: str) -> frozenset[int]:
    if side == "right":
        return right_descents(w)
    if side == "left":
        return right_descents(w.inverse())
    raise ParseError(f"side must be 'left' or 'right', got {side!r}")


def reduced_word(w: WeylElement) -> tuple[int, ...]:
    """A reduced word, by repeatedly stripping the least right descent."""
    cartan = w.dtype.cartan()
    m = w.matrix
    rev: list[int] = []
    ident = _identity(w.dtype.rank)
    while m != ident:
        ds = right_descents(WeylElement(w.dtype, m))
        i = min(ds)
        rev.append(i)
        m = _mul_gen_right(m, i - 1, cartan)
    return tuple(reversed(rev))


def longest_element(dtype: DynkinType) -> WeylElement:
    """Greedy ascent: multiply any non-descent generator until stuck."""
    cartan = dtype.cartan()
    m = _identity(dtype.rank)
    n = dtype.rank
    while True:
        w = WeylElement(dtype, m)
        free = [i for i in range(1, n + 1) if i not in right_descents(w)]
        if not free:
            return w
        m = _mul_gen_right(m, free[0] - 1, cartan)


def diagram_automorphism(dtype: DynkinType) -> dict[int, int]:
    """The permutation tau with w0 s_i w0 = s_{tau(i)}."""
    w0 = longest_element(dtype)
    out: dict[int, int] = {}
    gens = {simple_reflection(dtype, j).matrix: j for j in dtype.vertices}
    for i in dtype.vertices:
        conj = _mat_mul(_mat_mul(w0.matrix, simple_reflection(dtype, i).matrix), w0.matrix)
        out[i] = gens[conj]
    return out


def group_order(dtype: DynkinType) -> int:
    """Order of W by breadth-first closure (subject to BQM_MAX_WEYL)."""
    return weyl_table(dtype).size


class WeylTable:
    """Tabulated Weyl group: elements indexed along a BFS from the identity.

    Arrays (all indexed by element):
      rm, lm     flat generator multiplication tables (x * s_i, s_i * x)
      rd, ld     descent bitmasks (bit i-1 set when i is a descent)
      tau        conjugation by the longest element
      inv        inverses
      length     Coxeter lengths
    """

    def __init__(self, dtype: DynkinType):
        budget = _weyl_budget()
        if dtype.order() > budget:
            raise BudgetExceededError(
                f"|W({dtype})| = {dtype.order()} exceeds BQM_MAX_WEYL={budget}; "
                "word-problem tables are desk-scale only"
            )
        self.dtype = dtype
        n = dtype.rank
        cartan = dtype.cartan()
        ident = _identity(n)
        index: dict[Matrix, int] = {ident: 0}
        mats: list[Matrix] = [ident]
        parent = array("i", [-1])
        letter = array("i", [-1])
        length = array("i", [0])
        frontier = [0]
        while frontier:
            nxt = []
            for x in frontier:
                for i in range(n):
                    m = _mul_gen_right(mats[x], i, cartan)
                    y = index.get(m)
                    if y is None:
                        y = len(mats)
                        index[m] = y
                        mats.append(m)
                        parent.append(x)
                        letter.append(i)
                        length.append(length[x] + 1)
                        nxt.append(y)
            frontier = nxt
        size = len(mats)
        rm = array("i", [0]) * (size * n)
        for x in range(size):
            for i in range(n):
                rm[x * n + i] = index[_mul_gen_right(mats[x], i, cartan)]

        inv = array("i", [0]) * size
        for x in range(size):
            w: list[int] = []
            y = x
            while y != 0:
                w.append(letter[y])
                y = parent[y]
            acc = 0  # x = s_{w[-1]} ... s_{w[0]}, so the reversed word inverts it
            for i in w:
                acc = rm[acc * n + i]
            inv[x] = acc

        lm = array("i", [0]) * (size * n)
        for x in range(size):
            ix = inv[x]
            for i in range(n):
                lm[x * n + i] = inv[rm[ix * n + i]]

        rd = array("i", [0]) * size
        for x in range(size):
            mask = 0
            for i in range(n):
                if length[rm[x * n + i]] < length[x]:
                    mask |= 1 << i
            rd[x] = mask
        ld = array("i", [rd[inv[x]] for x in range(size)])

        w0 = max(range(size), key=lambda x: length[x])
        auto = diagram_automorphism(dtype)
        gperm = [auto[i + 1] - 1 for i in range(n)]
        tau = array("i", [0]) * size
        for x in range(size):
            w = []
            y = x
            while y != 0:
                w.append(letter[y])
                y = parent[y]
            acc = 0
            for i in reversed(w):
                acc = rm[acc * n + gperm[i]]
            tau[x] = acc

        self.size = size
        self.n = n
        self.mats = mats
        self.index = index
        self.rm = rm
        self.lm = lm
        self.rd = rd
        self.ld = ld
        self.inv = inv
        self.tau = tau
        self.length = length
        self.w0 = w0
        self.gen = array("i", [index[simple_reflection(dtype, i + 1).matrix] for i in range(n)])
        self.w0_gen = array("i", [rm[w0 * n + i] for i in range(n)])

    def element(self, x: int) -> WeylElement:
        return WeylElement(self.dtype, self.mats[x])


_tables: dict[DynkinType, WeylTable] = {}
_tables_lock = threading.Lock()


def weyl_table(dtype: DynkinType) -> WeylTable:
    with _tables_lock:
        table = _tables.get(dtype)
        if table is None:
            table = WeylTable(dtype)
            _tables[dtype] = table
        return table
