"""Acceptance sweeps: each criterion is a function returning a result
record; the CLI's ``verify all`` and the test suite share these."""

from __future__ import annotations

import dataclasses
import itertools
import random
import time

from . import garside, surface
from .ginzburg import (
    commutator_defect,
    d_squared_defects,
    ginzburg_presentation,
    hom_dims,
    verify_relations_k0,
)
from .mutation_maps import phi, transport
from .presentations import (
    barot_marsh_relators,
    coxeter_presentation_of,
    cycle_rotation_words,
    presentation_of,
)
from .qp import QP, from_quiver, is_canonical_form, qp_mutate, rename_arrows, state_key
from .quivers import (
    MutationClass,
    Quiver,
    chordless_cycles,
    dynkin_quiver,
    dynkin_shape,
    mutate,
    mutation_class,
)
from .weyl import DynkinType, diagram_automorphism, evaluate, weyl_table
from .words import Word, compose, free_reduce, invert

_class_cache: dict[DynkinType, MutationClass] = {}


def cached_class(dtype: DynkinType, workers: int = 1) -> MutationClass:
    if dtype not in _class_cache:
        _class_cache[dtype] = mutation_class(dynkin_quiver(dtype), workers=workers)
    return _class_cache[dtype]


@dataclasses.dataclass
class CriterionResult:
    name: str
    ok: bool
    detail: str
    seconds: float

    def line(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        return f"{status}  {self.name}  [{self.seconds:.1f}s]  {self.detail}"


def _timed(func):
    def wrapper(*args, **kwargs) -> CriterionResult:
        start = time.time()
        name, ok, detail = func(*args, **kwargs)
        return CriterionResult(name, ok, detail, time.time() - start)

    return wrapper


def _types(spec: str, max_rank: int | None = None) -> list[DynkinType]:
    out = []
    for token in spec.split():
        family, lo, hi = token[0], *map(int, token[1:].split("-"))
        for n in range(lo, hi + 1):
            if max_rank is not None and n > max_rank:
                continue
            try:
                out.append(DynkinType(family, n))
            except Exception:
                pass
    return out


@_timed
def check_involution_two_finiteness(max_rank: int | None = None):
    """Criterion: mutation involution and 2-finiteness over all classes."""
    types = _types("A3-8 D4-8 E6-8", max_rank)
    quivers = 0
    for dtype in types:
        for member in cached_class(dtype).members:
            quivers += 1
            q = member.quiver
            if not q.simply_laced():
                return "involution+2-finiteness", False, f"multiplicity > 1 in {dtype}"
            if any(not c.oriented for c in chordless_cycles(q)):
                return "involution+2-finiteness", False, f"unoriented cycle in {dtype}"
            for k in q.vertices:
                if mutate(mutate(q, k), k) != q:
                    return "involution+2-finiteness", False, f"involution broken at {dtype}"
    detail = f"{quivers} quivers over {len(types)} types"
    return "involution+2-finiteness", True, detail


def _labelled_bfs_oracle(seed: Quiver) -> int:
    """Independent oracle: labelled closure, then brute-force iso classes."""
    visited = {seed.arrows}
    frontier = [seed]
    while frontier:
        nxt = []
        for q in frontier:
            for k in q.vertices:
                m = mutate(q, k)
                if m.arrows not in visited:
                    visited.add(m.arrows)
                    nxt.append(m)
        frontier = nxt

    def iso_key(arrows: tuple) -> tuple:
        verts = sorted(seed.vertices)
        best = None
        for perm in itertools.permutations(range(len(verts))):
            relabel = {v: perm[i] for i, v in enumerate(verts)}
            key = tuple(sorted((relabel[s], relabel[t]) for s, t in arrows))
            if best is None or key < best:
                best = key
        return best

    return len({iso_key(arrows) for arrows in visited})


@_timed
def check_class_stability(max_rank: int | None = None):
    """Criterion: counts equal the labelled-BFS oracle and are stable
    across runs and worker counts."""
    for dtype in _types("A3-5 D4-4", max_rank):
        seed = dynkin_quiver(dtype)
        oracle = _labelled_bfs_oracle(seed)
        counts = {
            len(mutation_class(seed, workers=w)) for w in (1, 2, 4)
        }
        counts.add(len(cached_class(dtype)))
        if counts != {oracle}:
            return "class-stability", False, f"{dtype}: counts {counts} vs oracle {oracle}"
    return "class-stability", True, "oracle and worker counts agree (A3-A5, D4)"


def _standardizer_for(member_quiver: Quiver, extra: tuple[int, ...], back_path: tuple[int, ...]):
    """Transport hom from ``mutate(member, extra)`` back to the Dynkin seed."""
    start = member_quiver
    for k in extra:
        start = mutate(start, k)
    final, hom = transport(start, tuple(extra[::-1]) + back_path)
    shape = dynkin_shape(final)
    assert shape is not None
    dtype, node_of = shape
    relabel = {v: node_of[v] for v in final.vertices}

    def to_weyl(word: Word) -> Word:
        image = hom(word)
        return tuple(relabel[x] if x > 0 else -relabel[-x] for x in image)

    return dtype, to_weyl


@_timed
def check_weyl_soundness(max_rank: int | None = None):
    """Criterion: relators die in W; group orders match."""
    for dtype in _types("A2-7 D4-6 E6-6", max_rank):
        order = weyl_table(dtype).size
        if dtype.family == "A":
            expect = 1
            for i in range(2, dtype.rank + 2):
                expect *= i
            if order != expect:
                return "weyl-soundness", False, f"|W({dtype})| = {order} != {expect}"
        for member in cached_class(dtype).members:
            q = member.quiver
            target, to_weyl = _standardizer_for(q, (), tuple(member.path[::-1]))
            words = [r.word for r in coxeter_presentation_of(q).relators]
            words += barot_marsh_relators(q)
            for word in words:
                if not evaluate(target, to_weyl(word)).is_identity():
                    return "weyl-soundness", False, f"relator alive in W for {dtype}"
    return "weyl-soundness", True, "all relators die in W; orders match (A2-A7, D4-D6, E6)"


@_timed
def check_phi_sweep(max_rank: int | None = None):
    """Criterion: relator images under phi are Garside-trivial, and the
    double application is conjugation by the mutation vertex."""
    words_checked = 0
    for dtype in _types("A3-6 D4-6 E6-6", max_rank):
        for member in cached_class(dtype).members:
            q = member.quiver
            back = tuple(member.path[::-1])
            pres = presentation_of(q)
            for k in q.vertices:
                hom = phi(q, k)
                target, to_weyl = _standardizer_for(q, (k,), back)
                for relator in pres.relators:
                    image = hom(relator.word)
                    if not garside.is_trivial(target, to_weyl(image)):
                        return (
                            "phi-well-defined",
                            False,
                            f"relator image alive in B_Delta ({dtype}, k={k})",
                        )
                    words_checked += 1
                double = compose(phi(mutate(q, k), k), hom)
                for i in q.vertices:
                    # conjugation by the mutation vertex: literal for k and
                    # its neighbours, via the commuting relator otherwise
                    # (that relator's triviality is certified above)
                    adjacent = (i, k) in q.arrows or (k, i) in q.arrows
                    expect = free_reduce((k, i, -k)) if adjacent or i == k else (i,)
                    if double.images[i] != expect:
                        return "phi-well-defined", False, f"double phi not conj ({dtype})"
    return "phi-well-defined", True, f"{words_checked} relator images trivial in B_Delta"


@_timed
def check_one_implies_all(max_rank: int | None = None):
    """Criterion: every rotated cycle relator is Garside-trivial."""
    checked = 0
    for dtype in _types("D4-5", max_rank):
        for member in cached_class(dtype).members:
            q = member.quiver
            target, to_weyl = _standardizer_for(q, (), tuple(member.path[::-1]))
            rotations = cycle_rotation_words(q)
            by_cycle: dict[tuple, list[Word]] = {}
            for cyc, rot, word in rotations:
                by_cycle.setdefault(cyc, []).append(word)
            for words in by_cycle.values():
                n = len(words)
                for r in range(n):
                    relator = free_reduce(words[r] + invert(words[(r + 1) % n]))
                    if not garside.is_trivial(target, to_weyl(relator)):
                        return "one-implies-all", False, f"rotation relator alive ({dtype})"
                    checked += 1
    return "one-implies-all", True, f"{checked} rotated cycle relators trivial (D4-D5)"


@_timed
def check_garside_consistency(max_rank: int | None = None, words_per_type: int = 1000):
    """Criterion: random-word self-consistency of the normal form."""
    rng = random.Random(20240817)
    for dtype in _types("A2-5 D4-4 E6-6", max_rank):
        table = weyl_table(dtype)
        delta = garside.delta_word(dtype)
        tau = diagram_automorphism(dtype)
        n = dtype.rank
        for i in range(1, n + 1):
            if not garside.equal(dtype, delta + (i,), (tau[i],) + delta):
                return "garside-consistency", False, f"delta twist broken ({dtype})"
        for _ in range(words_per_type):
            length = rng.randint(0, 30)
            word = tuple(rng.choice((1, -1)) * rng.randint(1, n) for _ in range(length))
            if not garside.is_trivial(dtype, word + invert(word)):
                return "garside-consistency", False, f"w w^-1 not trivial ({dtype})"
            nf = garside.normal_form(dtype, word)
            if not garside.structurally_left_weighted(nf):
                return "garside-consistency", False, f"NF not left-weighted ({dtype})"
            if word:
                j = rng.randrange(len(word))
                a = rng.randint(1, n)
                padded = word[:j] + (a, -a) + word[j:]
                if not garside.equal(dtype, word, padded):
                    return "garside-consistency", False, f"padded word not equal ({dtype})"
                if evaluate(dtype, word).matrix != evaluate(dtype, padded).matrix:
                    return "garside-consistency", False, f"Weyl images differ ({dtype})"
        half = delta + delta
        for _ in range(50):
            length = rng.randint(0, 20)
            word = tuple(rng.choice((1, -1)) * rng.randint(1, n) for _ in range(length))
            if not garside.equal(dtype, half + word, word + half):
                return "garside-consistency", False, f"delta^2 not central ({dtype})"
    return "garside-consistency", True, "random-word properties hold (A2-A5, D4, E6)"


def _catalan(k: int) -> int:
    c = [1] + [0] * k
    for i in range(1, k + 1):
        c[i] = sum(c[j] * c[i - 1 - j] for j in range(i))
    return c[k]


@_timed
def check_surface(max_rank: int | None = None):
    """Criterion: Catalan counts, flip involution/uniqueness, the
    flip/mutation square, and the initial-triangulation fixtures."""
    a5 = surface.quiver_of(surface.initial_triangulation(DynkinType("A", 5)))
    if a5.arrows != ((2, 1), (3, 2), (4, 3), (5, 4)):
        return "surface", False, f"A5 fixture quiver {a5.arrows}"
    d7 = surface.quiver_of(surface.initial_triangulation(DynkinType("D", 7)))
    if d7.arrows != ((2, 1), (3, 2), (4, 3), (5, 4), (5, 6), (5, 7)):
        return "surface", False, f"D7 fixture quiver {d7.arrows}"
    for dtype in _types("A2-7", max_rank):
        tris = surface.enumerate_triangulations(dtype)
        if len(tris) != _catalan(dtype.rank + 1):
            return "surface", False, f"{dtype}: {len(tris)} != Catalan"
        graph = surface.braid_graph(tris[0])
        if not graph.is_tree():
            return "surface", False, f"{dtype}: braid graph not a tree"
    pairs = 0
    for dtype in _types("A2-6 D4-5", max_rank):
        for tri in surface.enumerate_triangulations(dtype):
            labels = tri.labels()
            quiver = surface.quiver_of(tri, labels)
            graph = surface.braid_graph(tri)
            if len(graph.edges) != dtype.rank:
                return "surface", False, f"dual edge count wrong ({dtype})"
            if dtype.family == "A" and not graph.is_tree():
                return "surface", False, f"type A dual graph not a tree ({dtype})"
            for arc in tri.arcs:
                replacement = surface.flip_replacement(tri, arc)
                flipped = tri.replace(arc, replacement)
                if surface.flip_replacement(flipped, replacement) != arc:
                    return "surface", False, f"flip not involutive ({dtype})"
                relabel = dict(labels)
                relabel[replacement] = relabel.pop(arc)
                if surface.quiver_of(flipped, relabel) != mutate(quiver, labels[arc]):
                    return "surface", False, f"flip/mutation square broken ({dtype})"
                pairs += 1
    return "surface", True, f"Catalan counts, fixtures, {pairs} flip/mutation squares"


_qp_state_cache: dict[tuple[DynkinType, int], list[QP]] = {}


def _qp_states(dtype: DynkinType, depth: int) -> list[QP]:
    """QP states reachable within ``depth`` mutations of the zero-potential
    seed, BFS with dedup up to arrow renaming (so every path of length at
    most ``depth`` ends at one of these states)."""
    key = (dtype, depth)
    if key not in _qp_state_cache:
        seed = rename_arrows(from_quiver(dynkin_quiver(dtype)))
        seen = {state_key(seed)}
        states = []
        frontier = [seed]
        for _ in range(depth):
            nxt = []
            for qp in frontier:
                for k in qp.vertices:
                    out = rename_arrows(qp_mutate(qp, k))
                    skey = state_key(out)
                    if skey not in seen:
                        seen.add(skey)
                        nxt.append(out)
            frontier = nxt
            states.extend(frontier)
        _qp_state_cache[key] = states
    return _qp_state_cache[key]


@_timed
def check_qp_stability(max_rank: int | None = None, depth: int = 6):
    """Criterion: along every mutation path, the quiver part tracks FZ
    mutation (asserted inside qp_mutate) and the potential stays
    canonical."""
    states = 0
    for dtype in _types("A3-7 D4-6", max_rank):
        seed = rename_arrows(from_quiver(dynkin_quiver(dtype)))
        report = is_canonical_form(seed)
        if not report.canonical:
            return "qp-canonical", False, f"seed not canonical ({dtype})"
        for qp in _qp_states(dtype, depth):
            states += 1
            report = is_canonical_form(qp)
            if not report.canonical:
                return "qp-canonical", False, f"non-canonical state ({dtype}): {report.message}"
    return "qp-canonical", True, f"{states} mutated QP states canonical (depth {depth})"


@_timed
def check_dg_k0(max_rank: int | None = None, depth: int = 6):
    """Criterion: d^2 = 0, hom-dimension table symmetry, and identity
    relator matrices on K0."""
    for dtype in _types("A3-7 D4-6", max_rank):
        for qp in _qp_states(dtype, depth):
            pres = ginzburg_presentation(qp)
            if d_squared_defects(pres):
                return "dg-k0", False, f"d^2 != 0 ({dtype})"
            if commutator_defect(qp):
                return "dg-k0", False, f"commutator identity fails ({dtype})"
    relators = 0
    for dtype in _types("A3-7 D4-6 E6-6", max_rank):
        for member in cached_class(dtype).members:
            q = member.quiver
            for i in q.vertices:
                for j in q.vertices:
                    dims = hom_dims(q, i, j)
                    if dims != list(reversed(hom_dims(q, j, i))):
                        return "dg-k0", False, f"hom table asymmetry ({dtype})"
            report = verify_relations_k0(q)
            relators += report.relators_checked
            if not report.ok:
                return "dg-k0", False, f"K0 relator failure ({dtype}): {report.failures[0]}"
    return "dg-k0", True, f"d^2=0 sweeps clean; {relators} relators act as identity on K0"


ALL_CRITERIA = [
    check_involution_two_finiteness,
    check_class_stability,
    check_weyl_soundness,
    check_phi_sweep,
    check_one_implies_all,
    check_garside_consistency,
    check_surface,
    check_qp_stability,
    check_dg_k0,
]


def run_all(max_rank: int | None = None) -> list[CriterionResult]:
    return [criterion(max_rank) for criterion in ALL_CRITERIA]
