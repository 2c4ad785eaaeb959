"""Combinatorial surfaces: polygon triangulations (type A) and tagged
triangulations of the once-punctured polygon (type D).

Boundary vertices are numbered 1..m clockwise. A type-A arc is a chord
{a, b} stored with a < b. A type-D peripheral arc is an ORDERED pair
(a, b): the arc from a to b whose clockwise side (the open interval
from a to b) is the puncture-free one; (a, b) and (b, a) are the two
distinct arcs joining a and b. A radius joins a boundary vertex to the
puncture and carries a plain or notched tag.

Crossing tests lift arcs to chords of the 2m-gon double cover branched
at the puncture, where crossing is plain endpoint interleaving; radii
pass through the branch point and keep their own rule (equal tags at
distinct bases, any tags at a shared base). Faces come from an explicit
rotation system, which also yields the dual (braid) graph and the
puzzle-piece quiver.
"""

from __future__ import annotations

import dataclasses
import itertools
from typing import Iterable, Union

from .errors import BraidQuiverError, ParseError, UnknownVertexError
from .quivers import Quiver
from .weyl import DynkinType

PLAIN = "plain"
NOTCHED = "notched"


@dataclasses.dataclass(frozen=True, order=True)
class PeripheralArc:
    a: int
    b: int

    def to_json(self) -> dict:
        return {"peripheral": [self.a, self.b]}


@dataclasses.dataclass(frozen=True, order=True)
class RadiusArc:
    base: int
    tag: str

    def to_json(self) -> dict:
        return {"radius": [self.base, self.tag]}


TaggedArc = Union[PeripheralArc, RadiusArc]


def arc_from_json(data: dict) -> TaggedArc:
    if "peripheral" in data:
        a, b = data["peripheral"]
        return PeripheralArc(int(a), int(b))
    if "radius" in data:
        base, tag = data["radius"]
        if tag not in (PLAIN, NOTCHED):
            raise ParseError(f"bad radius tag {tag!r}")
        return RadiusArc(int(base), tag)
    raise ParseError(f"bad arc JSON: {data}")


def _sort_key(arc: TaggedArc) -> tuple:
    if isinstance(arc, PeripheralArc):
        return (0, arc.a, arc.b)
    return (1, arc.base, 0 if arc.tag == PLAIN else 1)


def marked_points(dtype: DynkinType) -> int:
    """Boundary marked points: n+3 for A_n, n for D_n."""
    if dtype.family == "A":
        return dtype.rank + 3
    if dtype.family == "D":
        return dtype.rank
    raise ParseError(f"no surface model for type {dtype}")


@dataclasses.dataclass(frozen=True)
class Triangulation:
    dtype: DynkinType
    arcs: tuple[TaggedArc, ...]

    @staticmethod
    def make(dtype: DynkinType, arcs: Iterable[TaggedArc]) -> "Triangulation":
        arcs = tuple(sorted(set(arcs), key=_sort_key))
        for arc in arcs:
            _validate_arc(dtype, arc)
        for x, y in itertools.combinations(arcs, 2):
            if not compatible(dtype, x, y):
                raise BraidQuiverError(f"incompatible arcs {x} and {y}")
        if len(arcs) != dtype.rank:
            raise BraidQuiverError(
                f"{len(arcs)} arcs given; a {dtype} triangulation has {dtype.rank}"
            )
        return Triangulation(dtype, arcs)

    def replace(self, old: TaggedArc, new: TaggedArc) -> "Triangulation":
        rest = [a for a in self.arcs if a != old]
        return Triangulation.make(self.dtype, rest + [new])

    def labels(self) -> dict[TaggedArc, int]:
        """Default arc labelling: 1..n in sorted order."""
        return {arc: i for i, arc in enumerate(self.arcs, start=1)}

    def to_json(self) -> dict:
        return {"type": str(self.dtype), "arcs": [a.to_json() for a in self.arcs]}

    @staticmethod
    def from_json(data: dict) -> "Triangulation":
        try:
            dtype = DynkinType.parse(data["type"])
            arcs = [arc_from_json(a) for a in data["arcs"]]
        except (KeyError, TypeError, ValueError) as exc:
            raise ParseError(f"bad triangulation JSON: {exc}") from exc
        return Triangulation.make(dtype, arcs)


def _validate_arc(dtype: DynkinType, arc: TaggedArc) -> None:
    m = marked_points(dtype)
    if isinstance(arc, RadiusArc):
        if dtype.family != "D":
            raise BraidQuiverError("radii exist only on the punctured disk")
        if not 1 <= arc.base <= m:
            raise UnknownVertexError(f"boundary vertex {arc.base} not in 1..{m}")
        if arc.tag not in (PLAIN, NOTCHED):
            raise ParseError(f"bad tag {arc.tag!r}")
        return
    a, b = arc.a, arc.b
    if not (1 <= a <= m and 1 <= b <= m) or a == b:
        raise UnknownVertexError(f"bad peripheral endpoints ({a},{b}) for m={m}")
    if dtype.family == "A":
        if a > b:
            raise ParseError("type A chords are stored with a < b")
        if b - a < 2 or b - a > m - 2:
            raise BraidQuiverError(f"chord ({a},{b}) is boundary-parallel")
    else:
        if (b - a) % m < 2:
            raise BraidQuiverError(
                f"peripheral ({a},{b}) cuts off an empty region (clockwise side)"
            )


def all_arcs(dtype: DynkinType) -> list[TaggedArc]:
    m = marked_points(dtype)
    arcs: list[TaggedArc] = []
    if dtype.family == "A":
        for a in range(1, m + 1):
            for b in range(a + 2, m + 1):
                if not (a == 1 and b == m):
                    arcs.append(PeripheralArc(a, b))
    else:
        for a in range(1, m + 1):
            for b in range(1, m + 1):
                if a != b and (b - a) % m >= 2:
                    arcs.append(PeripheralArc(a, b))
        for x in range(1, m + 1):
            arcs.append(RadiusArc(x, PLAIN))
            arcs.append(RadiusArc(x, NOTCHED))
    return sorted(arcs, key=_sort_key)


def _chords(arc: PeripheralArc, m: int, family: str) -> list[tuple[int, int]]:
    """Lifts to the double cover: position pairs (p, p+d) with 0 < d < m."""
    if family == "A":
        return [(arc.a, arc.b)]
    d = (arc.b - arc.a) % m
    return [(arc.a, arc.a + d), (arc.a + m, arc.a + m + d)]


def _chords_cross(c1: tuple[int, int], c2: tuple[int, int], span: int) -> bool:
    """Strict interleaving of endpoints around a cycle of length ``span``."""

    def inside(p: int, q: int, x: int) -> bool:
        return 0 < (x - p) % span < (q - p) % span

    p, q = c1
    r, s = c2
    if {p % span, q % span} & {r % span, s % span}:
        return False
    return inside(p, q, r) != inside(p, q, s)


def compatible(dtype: DynkinType, x: TaggedArc, y: TaggedArc) -> bool:
    """Whether the two tagged arcs can coexist in a triangulation."""
    _validate_arc(dtype, x)
    _validate_arc(dtype, y)
    m = marked_points(dtype)
    if x == y:
        return True
    if isinstance(x, RadiusArc) and isinstance(y, RadiusArc):
        return x.base == y.base or x.tag == y.tag
    if isinstance(x, RadiusArc) or isinstance(y, RadiusArc):
        radius, chord = (x, y) if isinstance(x, RadiusArc) else (y, x)
        assert isinstance(chord, PeripheralArc)
        diameter = (radius.base, radius.base + m)
        return not any(
            _chords_cross(diameter, c, 2 * m) for c in _chords(chord, m, "D")
        )
    assert isinstance(x, PeripheralArc) and isinstance(y, PeripheralArc)
    span = m if dtype.family == "A" else 2 * m
    return not any(
        _chords_cross(c1, c2, span)
        for c1 in _chords(x, m, dtype.family)
        for c2 in _chords(y, m, dtype.family)
    )


def initial_triangulation(dtype: DynkinType) -> Triangulation:
    """Type A: the fan from vertex 1. Type D: fan from 1, the arc around
    the puncture from 1 to m, and the two opposite-tag radii at m."""
    if dtype.family not in ("A", "D"):
        raise ParseError(f"no surface model for type {dtype}")
    m = marked_points(dtype)
    if dtype.family == "A":
        arcs: list[TaggedArc] = [PeripheralArc(1, j) for j in range(3, m)]
    else:
        arcs = [PeripheralArc(1, j) for j in range(3, m + 1)]
        arcs += [RadiusArc(m, PLAIN), RadiusArc(m, NOTCHED)]
    return Triangulation.make(dtype, arcs)


def flip_replacement(tri: Triangulation, arc: TaggedArc) -> TaggedArc:
    """The unique arc completing ``tri - arc`` differently."""
    if arc not in tri.arcs:
        raise BraidQuiverError(f"arc {arc} not in triangulation")
    rest = [a for a in tri.arcs if a != arc]
    candidates = [
        c
        for c in all_arcs(tri.dtype)
        if c != arc
        and c not in rest
        and all(compatible(tri.dtype, c, r) for r in rest)
    ]
    if len(candidates) != 1:
        raise BraidQuiverError(
            f"flip of {arc} has {len(candidates)} completions, expected exactly 1"
        )
    return candidates[0]


def flip(tri: Triangulation, arc: TaggedArc) -> Triangulation:
    return tri.replace(arc, flip_replacement(tri, arc))


def enumerate_triangulations(dtype: DynkinType, budget: int = 10**5) -> list[Triangulation]:
    """Closure of the initial triangulation under flips."""
    start = initial_triangulation(dtype)
    seen = {start.arcs: start}
    frontier = [start]
    while frontier:
        nxt = []
        for tri in frontier:
            for arc in tri.arcs:
                out = flip(tri, arc)
                if out.arcs not in seen:
                    seen[out.arcs] = out
                    nxt.append(out)
        if len(seen) > budget:
            raise BraidQuiverError(f"flip closure exceeded budget {budget}")
        frontier = nxt
    return sorted(seen.values(), key=lambda t: tuple(map(_sort_key, t.arcs)))


# -- rotation system, faces, dual graph ---------------------------------------

_PUNCTURE = 0

Edge = tuple  # ("bseg", (v, w)) or ("arc", TaggedArc)
End = tuple  # (Edge, side) with side 0 at the first endpoint


def _edge_endpoints(edge: Edge) -> tuple[int, int]:
    kind, payload = edge
    if kind == "bseg":
        return payload
    if isinstance(payload, RadiusArc):
        return (payload.base, _PUNCTURE)
    return (payload.a, payload.b)


def _rotation_at(v: int, edges: list[Edge], m: int, family: str) -> list[End]:
    """Counterclockwise end order at vertex ``v``.

    The sweep starts along the boundary toward the clockwise neighbour
    and rotates through the interior. Peripheral ends sort by how far
    clockwise the arc reaches; in type D the outgoing ends (clockwise
    cap) come before the radii, which come before the arriving ends.
    At the puncture, radii sort by the angle of their base; the two
    ends of a same-base tag pair reverse their boundary order so the
    thin digon between them closes up.
    """
    if v == _PUNCTURE:
        ends = [
            (e, 1)
            for e in edges
            if e[0] == "arc" and isinstance(e[1], RadiusArc)
        ]
        return sorted(
            ends,
            key=lambda end: (
                end[0][1].base,
                0 if end[0][1].tag == NOTCHED else 1,
            ),
        )
    first: list[End] = []
    last: list[End] = []
    radii: list[End] = []
    peripherals: list[tuple[tuple, End]] = []
    for e in edges:
        kind, payload = e
        if kind == "bseg":
            a, b = payload
            if a == v:
                first.append((e, 0))
            elif b == v:
                last.append((e, 1))
            continue
        if isinstance(payload, RadiusArc):
            if payload.base == v:
                radii.append((e, 0))
            continue
        if payload.a == v:
            # outgoing: group 0, clockwise reach ascending
            peripherals.append(((0 if family == "D" else 1, (payload.b - v) % m, 0), (e, 0)))
        elif payload.b == v:
            # arriving: group 2, cap size descending = reach ascending
            peripherals.append(((2 if family == "D" else 1, (payload.a - v) % m, 1), (e, 1)))
    radii.sort(key=lambda end: 0 if end[0][1].tag == PLAIN else 1)
    peripherals.sort(key=lambda item: item[0])
    order = list(first)
    placed_radii = False
    for key, end in peripherals:
        if family == "D" and not placed_radii and key[0] == 2:
            order.extend(radii)
            placed_radii = True
        order.append(end)
    if not placed_radii:
        order.extend(radii)
    order.extend(last)
    return order


def _faces(tri: Triangulation) -> list[list[tuple[Edge, int]]]:
    """Interior faces as cyclic lists of directed edges (edge, flow).

    Flow 0 walks the edge from its first endpoint to its second. The
    next directed edge turns clockwise at the head vertex, so faces are
    traced with the interior kept on a fixed side; the orbit consisting
    of all boundary segments is the outer face and is dropped.
    """
    m = marked_points(tri.dtype)
    edges: list[Edge] = [("bseg", (v, v % m + 1)) for v in range(1, m + 1)]
    edges += [("arc", a) for a in tri.arcs]
    if tri.dtype.family == "A":
        vertices = list(range(1, m + 1))
    else:
        vertices = [_PUNCTURE] + list(range(1, m + 1))
    rotations = {v: _rotation_at(v, edges, m, tri.dtype.family) for v in vertices}

    def step(edge: Edge, flow: int) -> tuple[Edge, int]:
        head = _edge_endpoints(edge)[1] if flow == 0 else _edge_endpoints(edge)[0]
        rot = rotations[head]
        idx = None
        for i, (e2, s2) in enumerate(rot):
            if e2 == edge and s2 == (1 if flow == 0 else 0):
                idx = i
                break
        assert idx is not None, (edge, flow, head)
        e2, s2 = rot[(idx - 1) % len(rot)]
        return (e2, 0 if s2 == 0 else 1)

    remaining = {(e, f) for e in edges for f in (0, 1)}
    orbits: list[list[tuple[Edge, int]]] = []
    while remaining:
        start = sorted(remaining, key=lambda d: (repr(d[0]), d[1]))[0]
        orbit = []
        cur = start
        while True:
            orbit.append(cur)
            remaining.discard(cur)
            cur = step(*cur)
            if cur == start:
                break
        orbits.append(orbit)
    inner = []
    for orbit in orbits:
        kinds = {e[0] for e, _ in orbit}
        if kinds == {"bseg"} and len(orbit) == m:
            continue
        inner.append(orbit)
    return inner


@dataclasses.dataclass(frozen=True)
class BraidGraph:
    """Dual graph: faces as vertices, arcs as edges between the two
    faces they bound (parallel edges allowed)."""

    face_count: int
    edges: tuple[tuple[int, int, TaggedArc], ...]

    def is_tree(self) -> bool:
        if len(self.edges) != self.face_count - 1:
            return False
        parent = list(range(self.face_count))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for a, b, _ in self.edges:
            ra, rb = find(a), find(b)
            if ra == rb:
                return False
            parent[ra] = rb
        return True


def braid_graph(tri: Triangulation) -> BraidGraph:
    faces = _faces(tri)
    location: dict[TaggedArc, list[int]] = {}
    for idx, orbit in enumerate(faces):
        for (kind, payload), _ in orbit:
            if kind == "arc":
                location.setdefault(payload, []).append(idx)
    edges = []
    for arc in tri.arcs:
        sides = location.get(arc, [])
        if len(sides) != 2:
            raise BraidQuiverError(f"arc {arc} bounds {len(sides)} faces, expected 2")
        edges.append((min(sides), max(sides), arc))
    return BraidGraph(len(faces), tuple(edges))


def quiver_of(
    tri: Triangulation, labels: dict[TaggedArc, int] | None = None
) -> Quiver:
    """The quiver of the triangulation, glued from puzzle pieces.

    Triangle faces contribute a cyclic arrow triple on their internal
    sides; the once-punctured digon piece (the two opposite-tag radii)
    contributes its five-arrow pattern; boundary segments drop out and
    opposite arrows from adjacent pieces cancel.
    """
    if labels is None:
        labels = tri.labels()
    faces = _faces(tri)
    pair_counts: dict[tuple[TaggedArc, TaggedArc], int] = {}

    def add_arrow(src: TaggedArc | None, dst: TaggedArc | None) -> None:
        if src is None or dst is None:
            return
        pair_counts[(src, dst)] = pair_counts.get((src, dst), 0) + 1

    for orbit in faces:
        cyc = [payload if kind == "arc" else None for (kind, payload), _ in orbit]
        size = len(cyc)
        radii = [i for i, arc in enumerate(cyc) if isinstance(arc, RadiusArc)]
        if size == 2:
            continue  # thin digon between the two same-base radii
        if size == 3:
            for i in range(3):
                add_arrow(cyc[i], cyc[(i + 1) % 3])
            continue
        if size == 4 and len(radii) == 2:
            gap = (radii[1] - radii[0]) % 4
            if gap not in (1, 3):
                raise BraidQuiverError("radii not adjacent in digon-piece face")
            first_radius = radii[0] if gap == 1 else radii[1]
            # chirality pinned by the flip/mutation commutation sweep: the
            # digon side traced out of the tag pair receives from both radii
            receiver = cyc[(first_radius + 2) % 4]
            emitter = cyc[(first_radius - 1) % 4]
            for i in radii:
                add_arrow(cyc[i], receiver)
                add_arrow(emitter, cyc[i])
            add_arrow(receiver, emitter)
            continue
        raise BraidQuiverError(f"unexpected face of size {size} with {len(radii)} radii")

    arrows: list[tuple[int, int]] = []
    for src, dst in {frozenset(p) for p in pair_counts}:
        net = pair_counts.get((src, dst), 0) - pair_counts.get((dst, src), 0)
        if net > 0:
            arrows.extend([(labels[src], labels[dst])] * net)
        elif net < 0:
            arrows.extend([(labels[dst], labels[src])] * (-net))
    return Quiver.make(sorted(labels.values()), arrows)
