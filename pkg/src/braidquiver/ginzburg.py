"""Presentation-level 3-CY dg-algebra of a QP and its K0 shadow.

The doubled graded quiver keeps the original arrows in degree 0, adds a
reversed arrow in degree -1 per arrow and a loop in degree -2 per
vertex; the differential sends each reversed arrow to the cyclic
derivative of the potential and each loop to the signed sum of
composites through its vertex. d^2 = 0 is checked symbolically. On K0
the generators act by transvections against the Euler form; every
presentation relator must map to the identity matrix (a necessary
condition only; faithfulness is out of scope).
"""

from __future__ import annotations

import dataclasses
from fractions import Fraction

from .errors import BraidQuiverError, UnknownVertexError
from .presentations import presentation_of
from .qp import QP, Arrow, cyclic_derivative
from .quivers import Quiver
from .words import GroupHom

DEGREE = {"arrow": 0, "dual": -1, "loop": -2}


@dataclasses.dataclass(frozen=True, order=True)
class GradedArrow:
    kind: str  # arrow | dual | loop
    name: str
    src: int
    tgt: int

    @property
    def degree(self) -> int:
        return DEGREE[self.kind]


PathTerm = tuple[GradedArrow, ...]
PathSum = dict[PathTerm, Fraction]


def _add_term(target: PathSum, path: PathTerm, coeff: Fraction) -> None:
    if coeff == 0:
        return
    new = target.get(path, Fraction(0)) + coeff
    if new == 0:
        target.pop(path, None)
    else:
        target[path] = new


@dataclasses.dataclass(frozen=True)
class GinzburgPresentation:
    """Graded arrows plus the differential on generators."""

    qp: QP
    arrows: tuple[GradedArrow, ...]
    differential: dict[GradedArrow, PathSum]

    def generators_of_degree(self, degree: int) -> list[GradedArrow]:
        return [a for a in self.arrows if a.degree == degree]


def _lift(arrow: Arrow) -> GradedArrow:
    return GradedArrow("arrow", arrow.name, arrow.src, arrow.tgt)


def _dual(arrow: Arrow) -> GradedArrow:
    return GradedArrow("dual", arrow.name + "*", arrow.tgt, arrow.src)


def ginzburg_presentation(qp: QP) -> GinzburgPresentation:
    if not qp.is_reduced():
        raise BraidQuiverError("Ginzburg presentation expects a reduced QP")
    arrows: list[GradedArrow] = [_lift(a) for a in qp.arrows]
    arrows += [_dual(a) for a in qp.arrows]
    loops = {i: GradedArrow("loop", f"t{i}", i, i) for i in qp.vertices}
    arrows += list(loops.values())

    differential: dict[GradedArrow, PathSum] = {}
    for a in qp.arrows:
        differential[_lift(a)] = {}
    for a in qp.arrows:
        image: PathSum = {}
        for coeff, path in cyclic_derivative(qp.potential, a):
            _add_term(image, tuple(_lift(x) for x in path), coeff)
        differential[_dual(a)] = image
    for i in qp.vertices:
        image = {}
        for a in qp.arrows:
            if a.src == i:
                _add_term(image, (_lift(a), _dual(a)), Fraction(1))
            if a.tgt == i:
                _add_term(image, (_dual(a), _lift(a)), Fraction(-1))
        differential[loops[i]] = image
    return GinzburgPresentation(qp, tuple(sorted(arrows)), differential)


def apply_differential(pres: GinzburgPresentation, path_sum: PathSum) -> PathSum:
    """Extend d to products by the graded Leibniz rule."""
    out: PathSum = {}
    for path, coeff in path_sum.items():
        sign = 1
        for i, gen in enumerate(path):
            for dpath, dcoeff in pres.differential[gen].items():
                new = path[:i] + dpath + path[i + 1 :]
                if _composable(new):
                    _add_term(out, new, coeff * dcoeff * sign)
            sign *= -1 if gen.degree % 2 else 1
    return out


def _composable(path: PathTerm) -> bool:
    return all(path[i].tgt == path[i + 1].src for i in range(len(path) - 1))


def d_squared_defects(pres: GinzburgPresentation) -> dict[GradedArrow, PathSum]:
    """d(d(g)) per generator; empty sums everywhere iff d^2 = 0."""
    out = {}
    for gen in pres.arrows:
        defect = apply_differential(pres, pres.differential[gen])
        if defect:
            out[gen] = defect
    return out


def commutator_defect(qp: QP) -> PathSum:
    """The path-space identity sum_a [a, d_a W]; must vanish identically."""
    out: PathSum = {}
    for a in qp.arrows:
        for coeff, path in cyclic_derivative(qp.potential, a):
            left = (_lift(a),) + tuple(_lift(x) for x in path)
            right = tuple(_lift(x) for x in path) + (_lift(a),)
            if _composable(left):
                _add_term(out, left, coeff)
            if _composable(right):
                _add_term(out, right, -coeff)
    return out


# -- hom dimensions, Euler form, transvections ---------------------------------


def hom_dims(quiver: Quiver, i: int, j: int) -> list[int]:
    """Graded hom dimensions between vertex simples, degrees 0..3."""
    if i not in quiver.vertices or j not in quiver.vertices:
        raise UnknownVertexError(f"bad vertices ({i},{j})")
    delta = 1 if i == j else 0
    fwd = sum(1 for s, t in quiver.arrows if (s, t) == (i, j))
    bwd = sum(1 for s, t in quiver.arrows if (s, t) == (j, i))
    return [delta, fwd, bwd, delta]


def euler_form(quiver: Quiver) -> list[list[int]]:
    """Antisymmetric matrix chi[i][j] = #(j->i) - #(i->j) over sorted vertices."""
    index = {v: i for i, v in enumerate(quiver.vertices)}
    n = quiver.rank
    chi = [[0] * n for _ in range(n)]
    for s, t in quiver.arrows:
        chi[index[t]][index[s]] += 1
        chi[index[s]][index[t]] -= 1
    return chi


def twist_matrix(quiver: Quiver, i: int, inverse: bool = False) -> list[list[int]]:
    """The transvection x -> x - chi(e_i, x) e_i on K0 (column convention)."""
    if i not in quiver.vertices:
        raise UnknownVertexError(f"vertex {i} not in quiver")
    chi = euler_form(quiver)
    index = {v: k for k, v in enumerate(quiver.vertices)}
    n = quiver.rank
    row = index[i]
    out = [[1 if a == b else 0 for b in range(n)] for a in range(n)]
    sign = 1 if inverse else -1
    for b in range(n):
        out[row][b] += sign * chi[row][b]
    return out


def _mat_identity(n: int) -> list[list[int]]:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def _apply_twist_left(
    matrix: list[list[int]], chi_row: list[int], row: int, sign: int
) -> list[list[int]]:
    """Left-multiply by a transvection: only one row changes."""
    n = len(matrix)
    out = [r[:] for r in matrix]
    for b in range(n):
        acc = 0
        for c in range(n):
            acc += chi_row[c] * matrix[c][b]
        out[row][b] += sign * acc
    return out


def k0_representation(quiver: Quiver, word: tuple[int, ...]) -> list[list[int]]:
    """Product of transvections over the letters of the word (exact ints)."""
    chi = euler_form(quiver)
    index = {v: k for k, v in enumerate(quiver.vertices)}
    n = quiver.rank
    out = _mat_identity(n)
    for letter in reversed(word):
        i = index.get(abs(letter))
        if i is None:
            raise UnknownVertexError(f"generator {abs(letter)} not in quiver")
        out = _apply_twist_left(out, chi[i], i, -1 if letter > 0 else 1)
    return out


@dataclasses.dataclass(frozen=True)
class K0Report:
    relators_checked: int
    failures: tuple[str, ...]

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_json(self) -> dict:
        return {
            "relators_checked": self.relators_checked,
            "failures": list(self.failures),
        }


def verify_relations_k0(quiver: Quiver) -> K0Report:
    """Every presentation relator must act as the identity on K0."""
    pres = presentation_of(quiver)
    ident = _mat_identity(quiver.rank)
    failures = []
    for relator in pres.relators:
        if k0_representation(quiver, relator.word) != ident:
            failures.append(f"{relator.kind}: {relator.word}")
    return K0Report(len(pres.relators), tuple(failures))


def pullback_representation_ok(quiver: Quiver, k: int) -> bool:
    """Push the source generators through the mutation map and represent
    them by the mutated quiver's transvections; the source relators must
    still act as the identity."""
    from .mutation_maps import phi
    from .quivers import mutate

    mutated = mutate(quiver, k)
    hom: GroupHom = phi(quiver, k)
    pres = presentation_of(quiver)
    ident = _mat_identity(quiver.rank)
    for relator in pres.relators:
        image = hom(relator.word)
        if k0_representation(mutated, image) != ident:
            return False
    return True
