"""Quivers and Fomin-Zelevinsky mutation.

Quivers are loop-free and 2-cycle-free directed graphs on small integer
vertex ids. Arrows are stored as an ordered multiset of (source, target)
pairs so that the composite-adding step of mutation is a direct
transcription of the defining procedure. Everything is immutable and
pure; mutation-class enumeration can fan out over threads.
"""

from __future__ import annotations

import dataclasses
import os
from collections import Counter
from concurrent.futures import ThreadPoolExecutor
from typing import Iterable

from .errors import (
    BudgetExceededError,
    InvalidQuiverError,
    NotMutationDynkinError,
    UnknownVertexError,
)
from .weyl import DynkinType

DEFAULT_CLASS_BUDGET = 10**6


def _class_budget() -> int:
    return int(os.environ.get("BQM_MAX_CLASS", DEFAULT_CLASS_BUDGET))


@dataclasses.dataclass(frozen=True)
class Quiver:
    """A finite quiver without loops or oriented 2-cycles."""

    vertices: tuple[int, ...]
    arrows: tuple[tuple[int, int], ...]

    @staticmethod
    def make(vertices: Iterable[int], arrows: Iterable[tuple[int, int]]) -> "Quiver":
        vs = tuple(sorted(set(vertices)))
        ars = tuple(sorted((int(s), int(t)) for s, t in arrows))
        vset = set(vs)
        for s, t in ars:
            if s not in vset or t not in vset:
                raise UnknownVertexError(f"arrow ({s},{t}) uses unknown vertex")
            if s == t:
                raise InvalidQuiverError(f"loop at vertex {s}")
        pairs = set(ars)
        for s, t in ars:
            if (t, s) in pairs:
                raise InvalidQuiverError(f"oriented 2-cycle between {s} and {t}")
        return Quiver(vs, ars)

    @property
    def rank(self) -> int:
        return len(self.vertices)

    def arrow_multiplicities(self) -> Counter:
        return Counter(self.arrows)

    def simply_laced(self) -> bool:
        """True when every arrow has multiplicity one."""
        return all(m == 1 for m in self.arrow_multiplicities().values())

    def neighbours(self, v: int) -> set[int]:
        out = {t for s, t in self.arrows if s == v}
        out |= {s for s, t in self.arrows if t == v}
        return out

    def to_json(self) -> dict:
        return {"vertices": list(self.vertices), "arrows": [list(a) for a in self.arrows]}

    @staticmethod
    def from_json(data: dict) -> "Quiver":
        try:
            return Quiver.make(data["vertices"], [tuple(a) for a in data["arrows"]])
        except (KeyError, TypeError, ValueError) as exc:
            raise InvalidQuiverError(f"bad quiver JSON: {exc}") from exc


def mutate(quiver: Quiver, k: int) -> Quiver:
    """Fomin-Zelevinsky mutation at ``k``: compose, reverse, cancel."""
    if k not in quiver.vertices:
        raise UnknownVertexError(f"vertex {k} not in quiver")
    counts: Counter = Counter()
    into_k = [s for s, t in quiver.arrows if t == k]
    outof_k = [t for s, t in quiver.arrows if s == k]
    for s, t in quiver.arrows:
        if s == k or t == k:
            counts[(t, s)] += 1  # reverse arrows incident with k
        else:
            counts[(s, t)] += 1
    for i in into_k:  # one composite per path i -> k -> j
        for j in outof_k:
            counts[(i, j)] += 1
    arrows: list[tuple[int, int]] = []
    for s, t in {(min(a), max(a)) for a in counts}:
        net = counts.get((s, t), 0) - counts.get((t, s), 0)
        if net > 0:
            arrows.extend([(s, t)] * net)
        elif net < 0:
            arrows.extend([(t, s)] * (-net))
    return Quiver(quiver.vertices, tuple(sorted(arrows)))


@dataclasses.dataclass(frozen=True)
class ChordlessCycle:
    """A chordless cycle of the underlying graph, up to rotation.

    ``vertices`` is the canonical traversal: oriented cycles start at
    their least vertex and follow the arrows; unoriented ones take the
    lexicographically least rotation/reflection.
    """

    vertices: tuple[int, ...]
    oriented: bool

    def __len__(self) -> int:
        return len(self.vertices)


def _canonical_cycle(cycle: list[int], arrow_set: set[tuple[int, int]]) -> ChordlessCycle:
    n = len(cycle)
    oriented = all((cycle[i], cycle[(i + 1) % n]) in arrow_set for i in range(n))
    reverse_oriented = all((cycle[(i + 1) % n], cycle[i]) in arrow_set for i in range(n))
    if reverse_oriented and not oriented:
        cycle = [cycle[0]] + list(reversed(cycle[1:]))
        oriented = True
    start = cycle.index(min(cycle))
    rotated = tuple(cycle[start:] + cycle[:start])
    if not oriented:
        alt = (rotated[0],) + tuple(reversed(rotated[1:]))
        rotated = min(rotated, alt)
    return ChordlessCycle(rotated, oriented)


def chordless_cycles(quiver: Quiver) -> list[ChordlessCycle]:
    """All chordless cycles of the underlying graph, once up to rotation.

    Paths grow from their least vertex; a vertex adjacent to the base may
    only close the cycle (extending past it would leave a chord), and a
    new vertex may never touch the interior of the path.
    """
    adj: dict[int, set[int]] = {v: quiver.neighbours(v) for v in quiver.vertices}
    arrow_set = set(quiver.arrows)
    found: dict[tuple[int, ...], ChordlessCycle] = {}

    def extend(path: list[int]) -> None:
        base, last = path[0], path[-1]
        if len(path) >= 3 and base in adj[last]:
            if path[1] < last:
                cyc = _canonical_cycle(path, arrow_set)
                found[cyc.vertices] = cyc
            return
        middles = set(path[1:-1])
        for nxt in sorted(adj[last]):
            if nxt <= base or nxt in path or adj[nxt] & middles:
                continue
            extend(path + [nxt])

    for base in quiver.vertices:
        extend([base])
    return sorted(found.values(), key=lambda c: (len(c), c.vertices))


def is_two_finite_member(quiver: Quiver) -> bool:
    """Multiplicity-one arrows and all chordless cycles oriented."""
    return quiver.simply_laced() and all(c.oriented for c in chordless_cycles(quiver))


# -- exchange matrices -------------------------------------------------------


def to_exchange_matrix(quiver: Quiver) -> list[list[int]]:
    """Skew-symmetric matrix ``B[x][y] = #(x->y) - #(y->x)`` over sorted vertices."""
    index = {v: i for i, v in enumerate(quiver.vertices)}
    n = quiver.rank
    b = [[0] * n for _ in range(n)]
    for s, t in quiver.arrows:
        b[index[s]][index[t]] += 1
        b[index[t]][index[s]] -= 1
    return b


def from_exchange_matrix(matrix: list[list[int]], vertices: Iterable[int] | None = None) -> Quiver:
    n = len(matrix)
    if any(len(row) != n for row in matrix):
        raise InvalidQuiverError("exchange matrix must be square")
    for i in range(n):
        for j in range(n):
            if matrix[i][j] != -matrix[j][i]:
                raise InvalidQuiverError("exchange matrix must be skew-symmetric")
    vs = tuple(vertices) if vertices is not None else tuple(range(1, n + 1))
    if len(vs) != n:
        raise InvalidQuiverError("vertex list does not match matrix size")
    arrows = []
    for i in range(n):
        for j in range(n):
            if matrix[i][j] > 0:
                arrows.extend([(vs[i], vs[j])] * matrix[i][j])
    return Quiver.make(vs, arrows)


# -- isomorphism --------------------------------------------------------------

_canon_cache: dict[tuple, tuple] = {}


def canonical_key(quiver: Quiver) -> tuple:
    """A label-independent key: the maximal adjacency encoding.

    Vertices are assigned positions one at a time; each placement
    contributes a row recording arrows to already-placed vertices. The
    search keeps only branches that maximise the row sequence, which
    prunes to the automorphism orbits (adjacency-first, so oriented
    cycles stay near-linear instead of factorial).
    """
    cache_key = (quiver.vertices, quiver.arrows)
    cached = _canon_cache.get(cache_key)
    if cached is not None:
        return cached
    n = quiver.rank
    idx = {v: i for i, v in enumerate(quiver.vertices)}
    out = [0] * n
    into = [0] * n
    for s, t in quiver.arrows:
        out[idx[s]] |= 1 << idx[t]
        into[idx[t]] |= 1 << idx[s]

    connected = [out[v] | into[v] != 0 for v in range(n)]

    best: list[int] = []
    partials: list[tuple[tuple[int, ...], int]] = [((), 0)]  # (placed, used-mask)
    for pos in range(n):
        best_row = -1
        nxt: list[tuple[tuple[int, ...], int]] = []
        for placed, used in partials:
            for v in range(n):
                if used >> v & 1:
                    continue
                row = 0
                for slot, u in enumerate(placed):
                    if out[v] >> u & 1:
                        row |= 1 << (2 * slot)
                    if into[v] >> u & 1:
                        row |= 1 << (2 * slot + 1)
                if row > best_row:
                    best_row = row
                    nxt = [(placed + (v,), used | 1 << v)]
                elif row == best_row:
                    nxt.append((placed + (v,), used | 1 << v))
        best.append(best_row)
        # future rows only see placements of vertices that carry arrows,
        # so branches differing in isolated-vertex order are merged
        seen: dict[tuple, tuple[tuple[int, ...], int]] = {}
        for placed, used in nxt:
            sig = (used, tuple((slot, u) for slot, u in enumerate(placed) if connected[u]))
            seen.setdefault(sig, (placed, used))
        partials = list(seen.values())
    key = (n, tuple(best))
    _canon_cache[cache_key] = key
    return key


def is_isomorphic(a: Quiver, b: Quiver) -> bool:
    return canonical_key(a) == canonical_key(b)


# -- mutation classes ----------------------------------------------------------


@dataclasses.dataclass(frozen=True)
class ClassMember:
    quiver: Quiver
    path: tuple[int, ...]  # mutation path from the seed to this member


@dataclasses.dataclass(frozen=True)
class MutationClass:
    seed: Quiver
    members: tuple[ClassMember, ...]  # one representative per iso class

    def __len__(self) -> int:
        return len(self.members)

    def quivers(self) -> list[Quiver]:
        return [m.quiver for m in self.members]


def mutation_class(
    seed: Quiver, budget: int | None = None, workers: int = 1
) -> MutationClass:
    """Closure of ``seed`` under mutation, deduplicated up to isomorphism.

    BFS over iso classes: each discovered class stores the labelled
    quiver that first reached it together with its mutation path from
    the seed, so replaying the path from the seed reproduces the stored
    member exactly. Frontier expansion may fan out over threads; the
    merge is serial and order-independent, so counts and members are
    stable across runs and worker counts.
    """
    if budget is None:
        budget = _class_budget()
    visited: dict[tuple, tuple[Quiver, tuple[int, ...]]] = {
        canonical_key(seed): (seed, ())
    }
    frontier: list[tuple[Quiver, tuple[int, ...]]] = [(seed, ())]
    vertices = seed.vertices

    def expand(item: tuple[Quiver, tuple[int, ...]]) -> list[tuple[tuple, Quiver, tuple[int, ...]]]:
        q, path = item
        out = []
        for k in vertices:
            m = mutate(q, k)
            out.append((canonical_key(m), m, path + (k,)))
        return out

    while frontier:
        if workers > 1:
            with ThreadPoolExecutor(max_workers=workers) as pool:
                batches = list(pool.map(expand, frontier))
        else:
            batches = [expand(item) for item in frontier]
        nxt: list[tuple[Quiver, tuple[int, ...]]] = []
        for batch in batches:
            for key, q, path in batch:
                if key not in visited:
                    visited[key] = (q, path)
                    nxt.append((q, path))
        if len(visited) > budget:
            raise BudgetExceededError(
                f"mutation class exceeded budget of {budget} members; "
                "the seed is likely not mutation-Dynkin"
            )
        frontier = nxt
    members = tuple(
        ClassMember(q, path)
        for q, path in sorted(visited.values(), key=lambda m: (len(m[1]), m[0].arrows))
    )
    return MutationClass(seed, members)


# -- Dynkin recognition --------------------------------------------------------


def dynkin_shape(quiver: Quiver) -> tuple[DynkinType, dict[int, int]] | None:
    """If the underlying graph is an ADE diagram, its type and the map
    from quiver vertices to standard diagram nodes; otherwise None."""
    n = quiver.rank
    if not quiver.simply_laced():
        return None
    edges = {frozenset(a) for a in quiver.arrows}
    if len(edges) != len(quiver.arrows) or len(edges) != n - 1:
        return None
    adj: dict[int, list[int]] = {v: [] for v in quiver.vertices}
    for e in edges:
        a, b = tuple(e)
        adj[a].append(b)
        adj[b].append(a)
    # connectivity
    seen = {quiver.vertices[0]}
    stack = [quiver.vertices[0]]
    while stack:
        for u in adj[stack.pop()]:
            if u not in seen:
                seen.add(u)
                stack.append(u)
    if len(seen) != n:
        return None
    degs = {v: len(adj[v]) for v in quiver.vertices}
    if any(d > 3 for d in degs.values()):
        return None
    branch = [v for v, d in degs.items() if d == 3]
    if len(branch) > 1:
        return None

    def walk(start: int, first: int) -> list[int]:
        arm = [first]
        prev, cur = start, first
        while degs[cur] == 2:
            nxt = [u for u in adj[cur] if u != prev][0]
            arm.append(nxt)
            prev, cur = cur, nxt
        return arm

    if not branch:
        if n == 1:
            return DynkinType("A", 1), {quiver.vertices[0]: 1}
        end = min(v for v, d in degs.items() if d == 1)
        arm = walk(end, [u for u in adj[end]][0])
        mapping = {end: 1}
        for i, v in enumerate(arm, start=2):
            mapping[v] = i
        return DynkinType("A", n), mapping

    b = branch[0]
    arms = sorted((walk(b, u) for u in adj[b]), key=len)
    lens = [len(a) for a in arms]
    if lens[0] != 1:
        return None
    if lens[1] == 1:
        # D_n: the two short arms are nodes 1, 2; the long arm runs 4..n
        mapping = {arms[0][0]: 1, arms[1][0]: 2, b: 3}
        for i, v in enumerate(arms[2], start=4):
            mapping[v] = i
        return DynkinType("D", n), mapping
    if lens[1] == 2 and lens[2] in (2, 3, 4):
        # E_n in Bourbaki numbering: branch is node 4
        mapping = {arms[0][0]: 2, b: 4, arms[1][1]: 1, arms[1][0]: 3}
        for i, v in enumerate(arms[2], start=5):
            mapping[v] = i
        return DynkinType("E", n), mapping
    return None


def dynkin_type(
    quiver: Quiver, budget: int | None = None
) -> DynkinType | None:
    """ADE type of the mutation class, or None if no member is Dynkin."""
    try:
        t, _, _ = path_to_dynkin(quiver, budget)
        return t
    except NotMutationDynkinError:
        return None


def path_to_dynkin(
    quiver: Quiver, budget: int | None = None
) -> tuple[DynkinType, tuple[int, ...], Quiver]:
    """BFS until a Dynkin-shaped member appears; returns (type, path, member)."""
    if budget is None:
        budget = _class_budget()
    shape = dynkin_shape(quiver)
    if shape is not None:
        return shape[0], (), quiver
    visited = {canonical_key(quiver)}
    frontier: list[tuple[Quiver, tuple[int, ...]]] = [(quiver, ())]
    while frontier:
        nxt = []
        for q, base in frontier:
            for k in q.vertices:
                m = mutate(q, k)
                key = canonical_key(m)
                if key in visited:
                    continue
                visited.add(key)
                shape = dynkin_shape(m)
                if shape is not None:
                    return shape[0], base + (k,), m
                nxt.append((m, base + (k,)))
        if len(visited) > budget:
            raise BudgetExceededError(
                f"no Dynkin member found within budget of {budget} members"
            )
        frontier = nxt
    raise NotMutationDynkinError("mutation class closed without a Dynkin member")


def require_mutation_dynkin(quiver: Quiver) -> None:
    """Cheap local check used as a precondition by presentation builders."""
    if not quiver.simply_laced():
        raise NotMutationDynkinError("arrow multiplicities above one")
    bad = [c for c in chordless_cycles(quiver) if not c.oriented]
    if bad:
        raise NotMutationDynkinError(f"non-oriented chordless cycle {bad[0].vertices}")


def dynkin_quiver(dtype: DynkinType) -> Quiver:
    """A standard orientation of the diagram: arrows from lower to higher node."""
    edges = dtype.edges()
    return Quiver.make(range(1, dtype.rank + 1), [tuple(sorted(e)) for e in edges])
