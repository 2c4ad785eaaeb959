"""Quivers with potential: cyclic derivatives, premutation, reduction.

Arrows are named objects (the quiver layer's (source, target) pairs are
not enough once premutation manufactures composites next to existing
arrows). A potential maps canonical cyclic paths, stored as the
lexicographically least rotation of their arrow-name sequence, to
nonzero rational coefficients. All coefficient arithmetic is exact.
"""

from __future__ import annotations

import dataclasses
from fractions import Fraction
from typing import Iterable, Mapping

from .errors import (
    BraidQuiverError,
    InvalidQuiverError,
    ParseError,
    ReductionError,
    UnknownVertexError,
)
from .quivers import Quiver, chordless_cycles


@dataclasses.dataclass(frozen=True, order=True)
class Arrow:
    name: str
    src: int
    tgt: int

    def to_json(self) -> list:
        return [self.name, self.src, self.tgt]


Path = tuple[Arrow, ...]


def _is_cycle(path: Path) -> bool:
    return bool(path) and all(
        path[i].tgt == path[(i + 1) % len(path)].src for i in range(len(path))
    )


def canonical_cycle(path: Path) -> Path:
    """The lexicographically least rotation (by arrow names)."""
    if not _is_cycle(path):
        raise BraidQuiverError(f"not a cyclic path: {path}")
    rotations = [path[i:] + path[:i] for i in range(len(path))]
    return min(rotations, key=lambda p: tuple(a.name for a in p))


class Potential(dict):
    """Map from canonical cycles to nonzero rational coefficients."""

    def __init__(self, terms: Mapping[Path, Fraction] | Iterable[tuple[Path, Fraction]] = ()):
        super().__init__()
        items = terms.items() if isinstance(terms, Mapping) else terms
        for path, coeff in items:
            self.add(path, coeff)

    def add(self, path: Path, coeff: Fraction | int) -> None:
        coeff = Fraction(coeff)
        if coeff == 0:
            return
        key = canonical_cycle(tuple(path))
        new = self.get(key, Fraction(0)) + coeff
        if new == 0:
            self.pop(key, None)
        else:
            self[key] = new

    def copy(self) -> "Potential":
        out = Potential()
        dict.update(out, self)
        return out

    def max_degree(self) -> int:
        return max((len(k) for k in self), default=0)


@dataclasses.dataclass(frozen=True)
class QP:
    """A quiver with potential over named arrows.

    ``vertices``/``arrows`` may contain 2-cycles mid-mutation; ``reduce``
    restores the reduced form (no 2-cycles anywhere).
    """

    vertices: tuple[int, ...]
    arrows: tuple[Arrow, ...]
    potential: Potential

    @staticmethod
    def make(
        vertices: Iterable[int],
        arrows: Iterable[Arrow],
        potential: Potential | None = None,
    ) -> "QP":
        vs = tuple(sorted(set(vertices)))
        ars = tuple(sorted(arrows))
        names = [a.name for a in ars]
        if len(set(names)) != len(names):
            raise InvalidQuiverError("duplicate arrow names")
        vset = set(vs)
        for a in ars:
            if a.src not in vset or a.tgt not in vset:
                raise UnknownVertexError(f"arrow {a} uses unknown vertex")
            if a.src == a.tgt:
                raise InvalidQuiverError(f"loop {a}")
        pot = potential.copy() if potential else Potential()
        known = set(ars)
        for path in pot:
            for a in path:
                if a not in known:
                    raise BraidQuiverError(f"potential uses unknown arrow {a}")
        return QP(vs, ars, pot)

    def quiver(self) -> Quiver:
        """The underlying pair quiver; requires the 2-cycle-free invariant."""
        return Quiver.make(self.vertices, [(a.src, a.tgt) for a in self.arrows])

    def two_cycle_pairs(self) -> list[tuple[Arrow, Arrow]]:
        by_ends = {(a.src, a.tgt): a for a in self.arrows}
        out = []
        for a in self.arrows:
            b = by_ends.get((a.tgt, a.src))
            if b is not None and a.name < b.name:
                out.append((a, b))
        return out

    def is_reduced(self) -> bool:
        return not self.two_cycle_pairs() and all(len(k) >= 3 for k in self.potential)

    def to_json(self) -> dict:
        return {
            "vertices": list(self.vertices),
            "arrows": [a.to_json() for a in self.arrows],
            "potential": potential_to_json(self.potential),
        }

    @staticmethod
    def from_json(data: dict) -> "QP":
        try:
            vertices = [int(v) for v in data["vertices"]]
            arrows = [Arrow(str(n), int(s), int(t)) for n, s, t in data["arrows"]]
            pot_data = data.get("potential", {"terms": []})
        except (KeyError, TypeError, ValueError) as exc:
            raise ParseError(f"bad QP JSON: {exc}") from exc
        return QP.make(vertices, arrows, potential_from_json(pot_data))


def potential_to_json(potential: Potential) -> dict:
    terms = []
    for path in sorted(potential, key=lambda p: (len(p), tuple(a.name for a in p))):
        terms.append(
            {"cycle": [a.to_json() for a in path], "coeff": str(potential[path])}
        )
    return {"terms": terms}


def potential_from_json(data: dict) -> Potential:
    try:
        pot = Potential()
        for term in data["terms"]:
            path = tuple(Arrow(str(n), int(s), int(t)) for n, s, t in term["cycle"])
            pot.add(path, Fraction(term["coeff"]))
        return pot
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"bad potential JSON: {exc}") from exc


def from_quiver(quiver: Quiver, potential: Potential | None = None) -> QP:
    """Name the arrows of a pair quiver ``a{src}_{tgt}``."""
    arrows = [Arrow(f"a{s}_{t}", s, t) for s, t in quiver.arrows]
    return QP.make(quiver.vertices, arrows, potential)


def arrow_cycles_of(qp: QP) -> list[Path]:
    """Chordless cycles of the underlying quiver as canonical arrow paths."""
    by_ends = {(a.src, a.tgt): a for a in qp.arrows}
    out = []
    for cyc in chordless_cycles(qp.quiver()):
        if not cyc.oriented:
            continue
        n = len(cyc.vertices)
        path = tuple(
            by_ends[(cyc.vertices[i], cyc.vertices[(i + 1) % n])] for i in range(n)
        )
        out.append(canonical_cycle(path))
    return out


def sum_of_chordless_cycles(quiver: Quiver) -> QP:
    """The canonical potential: coefficient one on every chordless cycle."""
    qp = from_quiver(quiver)
    pot = Potential()
    for path in arrow_cycles_of(qp):
        pot.add(path, 1)
    return QP.make(qp.vertices, qp.arrows, pot)


def cyclic_derivative(potential: Potential, arrow: Arrow) -> list[tuple[Fraction, Path]]:
    """Sum over occurrences: rotate the cycle to start just after the
    arrow, delete the arrow. Paths run tgt(arrow) -> src(arrow)."""
    out: dict[Path, Fraction] = {}
    for path, coeff in potential.items():
        for i, a in enumerate(path):
            if a == arrow:
                rest = path[i + 1 :] + path[:i]
                out[rest] = out.get(rest, Fraction(0)) + coeff
    return [(c, p) for p, c in sorted(out.items(), key=lambda kv: tuple(a.name for a in kv[0])) if c != 0]


def premutate(qp: QP, k: int) -> QP:
    """The non-reduced mutation at ``k``: reverse the arrows at ``k``,
    add one composite per path through ``k``, and append the composite
    cycles to the rewritten potential."""
    if k not in qp.vertices:
        raise UnknownVertexError(f"vertex {k} not in QP")
    for a, b in qp.two_cycle_pairs():
        if k in (a.src, a.tgt):
            raise BraidQuiverError(f"vertex {k} lies on the 2-cycle ({a}, {b})")
    into = [a for a in qp.arrows if a.tgt == k]
    outof = [a for a in qp.arrows if a.src == k]
    stars = {a: Arrow(a.name + "*", a.tgt, a.src) for a in into + outof}
    composite = {
        (a, b): Arrow(f"[{b.name}{a.name}]", a.src, b.tgt)
        for a in into
        for b in outof
    }
    arrows = [a for a in qp.arrows if k not in (a.src, a.tgt)]
    arrows += list(stars.values()) + list(composite.values())

    pot = Potential()
    for path, coeff in qp.potential.items():
        rot = None  # rotate so the cycle does not start or end at k
        for i in range(len(path)):
            if path[i].src != k:
                rot = path[i:] + path[:i]
                break
        if rot is None:
            raise BraidQuiverError("potential cycle supported entirely at k")
        new_path: list[Arrow] = []
        i = 0
        while i < len(rot):
            a = rot[i]
            if a.tgt == k:
                b = rot[(i + 1) % len(rot)]
                if b.src != k:
                    raise BraidQuiverError("cycle enters k without leaving")
                new_path.append(composite[(a, b)])
                i += 2
            else:
                new_path.append(a)
                i += 1
        pot.add(tuple(new_path), coeff)
    for a in into:
        for b in outof:
            pot.add((composite[(a, b)], stars[b], stars[a]), 1)
    return QP.make(qp.vertices, arrows, pot)


def _substitute(
    potential: Potential, corrections: dict[Arrow, list[tuple[Fraction, Path]]]
) -> Potential:
    """Apply arrow -> arrow + correction to every term and re-expand."""
    out = Potential()
    for path, coeff in potential.items():
        expansions: list[tuple[Fraction, list[Arrow]]] = [(coeff, [])]
        for a in path:
            if a in corrections:
                new: list[tuple[Fraction, list[Arrow]]] = []
                for c, prefix in expansions:
                    new.append((c, prefix + [a]))
                    for cc, corr in corrections[a]:
                        new.append((c * cc, prefix + list(corr)))
                expansions = new
            else:
                expansions = [(c, prefix + [a]) for c, prefix in expansions]
        for c, full in expansions:
            out.add(tuple(full), c)
    return out


def reduce(qp: QP, degree_cap: int | None = None) -> QP:
    """Split off the trivial part: kill each 2-cycle term by the
    right-equivalence substitutions, then delete its arrows."""
    if degree_cap is None:
        longest = max((len(c) for c in arrow_cycles_of_ambient(qp)), default=3)
        degree_cap = longest + 2
    arrows = list(qp.arrows)
    pot = qp.potential.copy()
    guard = 0
    while True:
        guard += 1
        if guard > 100:
            raise ReductionError("reduction did not converge (pair loop)")
        pair_key = next((key for key in pot if len(key) == 2), None)
        if pair_key is None:
            break
        u, v = pair_key
        rounds = 0
        while True:
            lam = pot.get(canonical_cycle((u, v)), Fraction(0))
            if lam == 0:
                raise ReductionError(f"2-cycle term ({u.name},{v.name}) vanished mid-reduction")
            mixed = [
                key
                for key in pot
                if len(key) > 2 and any(a in (u, v) for a in key)
            ]
            if not mixed:
                break
            rounds += 1
            if rounds > degree_cap:
                raise ReductionError(
                    f"2-cycle ({u.name},{v.name}) still mixed after {rounds} rounds"
                )
            du = [(c, p) for c, p in cyclic_derivative(pot, u) if len(p) >= 2]
            dv = [(c, p) for c, p in cyclic_derivative(pot, v) if len(p) >= 2]
            corrections = {
                u: [(-c / lam, p) for c, p in dv],
                v: [(-c / lam, p) for c, p in du],
            }
            pot = _substitute(pot, corrections)
        pot.pop(canonical_cycle((u, v)))
        arrows = [a for a in arrows if a not in (u, v)]
        for key in pot:
            if u in key or v in key:
                raise ReductionError("dangling reference to a deleted arrow")
    out = QP.make(qp.vertices, arrows, pot)
    if out.two_cycle_pairs():
        raise ReductionError("quiver still has 2-cycles but no matching terms")
    return out


def arrow_cycles_of_ambient(qp: QP) -> list[Path]:
    """Chordless cycles when the quiver may still carry 2-cycles (used
    only for the degree cap; 2-cycles themselves are skipped)."""
    try:
        return arrow_cycles_of(qp)
    except InvalidQuiverError:
        return [k for k in qp.potential if len(k) >= 3]


def qp_mutate(qp: QP, k: int) -> QP:
    """DWZ mutation: reduce(premutate); the quiver part must agree with
    plain quiver mutation."""
    from .quivers import mutate as quiver_mutate

    out = reduce(premutate(qp, k))
    expected = quiver_mutate(qp.quiver(), k)
    if out.quiver() != expected:
        raise BraidQuiverError(
            f"mutated QP quiver {out.quiver().arrows} != FZ mutation {expected.arrows}"
        )
    return out


def rename_arrows(qp: QP) -> QP:
    """Fresh canonical names (a{src}_{tgt}); a cosmetic right equivalence."""
    mapping = {a: Arrow(f"a{a.src}_{a.tgt}", a.src, a.tgt) for a in qp.arrows}
    pot = Potential()
    for path, coeff in qp.potential.items():
        pot.add(tuple(mapping[a] for a in path), coeff)
    return QP.make(qp.vertices, list(mapping.values()), pot)


def state_key(qp: QP) -> tuple:
    """Hashable key identifying the QP up to arrow renaming."""
    renamed = rename_arrows(qp)
    return (
        renamed.vertices,
        renamed.arrows,
        tuple(sorted((k, renamed.potential[k]) for k in renamed.potential)),
    )


@dataclasses.dataclass(frozen=True)
class CanonicalFormReport:
    canonical: bool
    support_ok: bool
    missing: tuple[Path, ...]
    extra: tuple[Path, ...]
    scalars: dict | None
    message: str

    def to_json(self) -> dict:
        return {
            "canonical": self.canonical,
            "support_ok": self.support_ok,
            "missing": [[a.to_json() for a in p] for p in self.missing],
            "extra": [[a.to_json() for a in p] for p in self.extra],
            "scalars": None
            if self.scalars is None
            else {a.name: str(s) for a, s in self.scalars.items()},
            "message": self.message,
        }


def _solve_unit_system(
    cycles: list[Path], arrows: list[Arrow], targets: list[Fraction]
) -> dict[Arrow, Fraction] | None:
    """Find per-arrow nonzero rationals with prescribed cycle products.

    Multiplicative system solved factor by factor: the sign component
    over GF(2), each prime exponent by rational elimination on the same
    0/1 incidence matrix (integrality of the particular solution is
    checked; unit targets always yield integral solutions).
    """
    primes: set[int] = set()

    def factor(x: Fraction) -> dict[int, int]:
        out: dict[int, int] = {}
        for value, sign in ((x.numerator, 1), (x.denominator, -1)):
            value = abs(value)
            d = 2
            while d * d <= value:
                while value % d == 0:
                    out[d] = out.get(d, 0) + sign
                    value //= d
                d += 1
            if value > 1:
                out[value] = out.get(value, 0) + sign
        return out

    factored = [factor(t) for t in targets]
    for f in factored:
        primes.update(f)
    index = {a: i for i, a in enumerate(arrows)}
    rows = [[Fraction(1 if a in cyc else 0) for a in arrows] for cyc in cycles]

    def solve(rhs: list[Fraction]) -> list[Fraction] | None:
        mat = [row[:] + [b] for row, b in zip(rows, rhs)]
        n_cols = len(arrows)
        pivots = []
        r = 0
        for c in range(n_cols):
            pivot = next((i for i in range(r, len(mat)) if mat[i][c] != 0), None)
            if pivot is None:
                continue
            mat[r], mat[pivot] = mat[pivot], mat[r]
            scale = mat[r][c]
            mat[r] = [x / scale for x in mat[r]]
            for i in range(len(mat)):
                if i != r and mat[i][c] != 0:
                    factor_ = mat[i][c]
                    mat[i] = [x - factor_ * y for x, y in zip(mat[i], mat[r])]
            pivots.append(c)
            r += 1
        for i in range(r, len(mat)):
            if mat[i][n_cols] != 0:
                return None
        sol = [Fraction(0)] * n_cols
        for row_idx, c in enumerate(pivots):
            sol[c] = mat[row_idx][n_cols]
        return sol

    # sign component: exact GF(2) elimination on the same incidence rows
    width = len(arrows)
    gf2_rows = []
    for row, target in zip(rows, targets):
        bits = 0
        for c, entry in enumerate(row):
            if entry:
                bits |= 1 << c
        gf2_rows.append((bits, 1 if target < 0 else 0))
    pivots_gf2: dict[int, tuple[int, int]] = {}
    for bits, rhs in gf2_rows:
        for c, (pbits, prhs) in pivots_gf2.items():
            if bits >> c & 1:
                bits ^= pbits
                rhs ^= prhs
        if bits:
            pivot = (bits & -bits).bit_length() - 1
            pivots_gf2[pivot] = (bits, rhs)
        elif rhs:
            return None
    sign_sol = [Fraction(0)] * width
    for c in sorted(pivots_gf2, reverse=True):
        bits, rhs = pivots_gf2[c]
        acc = rhs
        for other in range(c + 1, width):
            if bits >> other & 1 and sign_sol[other]:
                acc ^= 1
        sign_sol[c] = Fraction(acc)
    exps: dict[int, list[Fraction]] = {}
    for p in sorted(primes):
        rhs = [Fraction(-f.get(p, 0)) for f in factored]  # target is lambda^-1
        sol = solve(rhs)
        if sol is None or any(x.denominator != 1 for x in sol):
            return None
        exps[p] = sol
    out: dict[Arrow, Fraction] = {}
    for a in arrows:
        i = index[a]
        val = Fraction(-1 if int(sign_sol[i]) % 2 else 1)
        for p, sol in exps.items():
            val *= Fraction(p) ** int(sol[i])
        out[a] = val
    return out


def is_canonical_form(qp: QP) -> CanonicalFormReport:
    """Support must be exactly the chordless cycles, and the coefficients
    must rescale to one by a diagonal change of arrows."""
    if not qp.is_reduced():
        return CanonicalFormReport(
            False, False, (), (), None, "QP is not reduced"
        )
    cycles = arrow_cycles_of(qp)
    support = set(qp.potential)
    cycset = set(cycles)
    missing = tuple(sorted(cycset - support, key=lambda p: tuple(a.name for a in p)))
    extra = tuple(sorted(support - cycset, key=lambda p: tuple(a.name for a in p)))
    if missing or extra:
        return CanonicalFormReport(
            False,
            False,
            missing,
            extra,
            None,
            "support differs from the set of chordless cycles",
        )
    targets = [qp.potential[c] for c in cycles]
    scalars = _solve_unit_system(cycles, list(qp.arrows), targets)
    if scalars is None:
        return CanonicalFormReport(
            False, True, (), (), None, "coefficients are not rescalable to one"
        )
    for cyc, lam in zip(cycles, targets):
        prod = Fraction(1)
        for a in cyc:
            prod *= scalars[a]
        assert prod == 1 / lam
    return CanonicalFormReport(True, True, (), (), scalars, "canonical")
