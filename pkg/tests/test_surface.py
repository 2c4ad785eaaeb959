import itertools

import pytest

from braidquiver.errors import BraidQuiverError, ParseError
from braidquiver.quivers import dynkin_type, mutate
from braidquiver.surface import (
    NOTCHED,
    PLAIN,
    PeripheralArc,
    RadiusArc,
    Triangulation,
    all_arcs,
    braid_graph,
    compatible,
    enumerate_triangulations,
    flip,
    flip_replacement,
    initial_triangulation,
    marked_points,
    quiver_of,
)
from braidquiver.weyl import DynkinType

A2 = DynkinType.parse("A2")
A5 = DynkinType.parse("A5")
D4 = DynkinType.parse("D4")
D7 = DynkinType.parse("D7")


def test_marked_points():
    assert marked_points(A5) == 8
    assert marked_points(D7) == 7
    with pytest.raises(ParseError):
        marked_points(DynkinType.parse("E6"))


def test_arc_counts():
    # polygon diagonals: m(m-3)/2; punctured polygon: n^2 tagged arcs
    assert len(all_arcs(A2)) == 5
    assert len(all_arcs(A5)) == 20
    assert len(all_arcs(D4)) == 16
    assert len(all_arcs(DynkinType.parse("D5"))) == 25


def test_compatibility_examples():
    # nested chords do not cross
    assert compatible(A5, PeripheralArc(1, 4), PeripheralArc(1, 3))
    assert not compatible(A5, PeripheralArc(1, 4), PeripheralArc(3, 6))
    # opposite tags at the same base coexist; at different bases they clash
    assert compatible(D4, RadiusArc(1, PLAIN), RadiusArc(1, NOTCHED))
    assert not compatible(D4, RadiusArc(1, PLAIN), RadiusArc(2, NOTCHED))
    assert compatible(D4, RadiusArc(1, PLAIN), RadiusArc(2, PLAIN))
    # a radius crosses a peripheral arc exactly when its base is capped
    assert not compatible(D4, RadiusArc(2, PLAIN), PeripheralArc(1, 3))
    assert compatible(D4, RadiusArc(4, PLAIN), PeripheralArc(1, 3))
    # the two arcs joining the same endpoints around the puncture coexist
    assert compatible(D4, PeripheralArc(1, 3), PeripheralArc(3, 1))


def test_initial_triangulations():
    tri = initial_triangulation(A5)
    assert len(tri.arcs) == 5
    assert quiver_of(tri).arrows == ((2, 1), (3, 2), (4, 3), (5, 4))
    tri7 = initial_triangulation(D7)
    assert len(tri7.arcs) == 7
    # fan as printed; the tag-pair fork points outward, the orientation
    # forced by the flip/mutation square (the drawn figure mirrors it)
    assert quiver_of(tri7).arrows == ((2, 1), (3, 2), (4, 3), (5, 4), (5, 6), (5, 7))


def test_flip_examples():
    # flipping the diagonal of a square swaps the diagonals
    sq = Triangulation.make(DynkinType.parse("A1"), [PeripheralArc(1, 3)])
    assert flip_replacement(sq, PeripheralArc(1, 3)) == PeripheralArc(2, 4)
    tri = initial_triangulation(D4)
    # flipping the notched radius lands a plain radius at the far corner
    replacement = flip_replacement(tri, RadiusArc(4, NOTCHED))
    assert replacement == RadiusArc(1, PLAIN)
    flipped = flip(tri, RadiusArc(4, NOTCHED))
    assert flip_replacement(flipped, replacement) == RadiusArc(4, NOTCHED)
    with pytest.raises(BraidQuiverError):
        flip(tri, RadiusArc(2, PLAIN))


def test_flip_involution_everywhere():
    for dtype in (DynkinType.parse("A3"), D4):
        for tri in enumerate_triangulations(dtype):
            for arc in tri.arcs:
                replacement = flip_replacement(tri, arc)
                back = flip_replacement(tri.replace(arc, replacement), replacement)
                assert back == arc


def test_enumeration_counts():
    assert len(enumerate_triangulations(A2)) == 5
    assert len(enumerate_triangulations(DynkinType.parse("A4"))) == 42
    d4 = enumerate_triangulations(D4)
    assert len(d4) == brute_force_count(D4) == 50


def test_enumeration_count_d5_oracle():
    d5 = DynkinType.parse("D5")
    assert len(enumerate_triangulations(d5)) == brute_force_count(d5) == 182


def brute_force_count(dtype):
    """Maximal compatible arc subsets, enumerated directly."""
    arcs = all_arcs(dtype)
    count = 0
    for subset in itertools.combinations(arcs, dtype.rank):
        if all(compatible(dtype, x, y) for x, y in itertools.combinations(subset, 2)):
            count += 1
    return count


def test_quiver_matches_mutation():
    for dtype in (DynkinType.parse("A3"), D4):
        for tri in enumerate_triangulations(dtype):
            labels = tri.labels()
            quiver = quiver_of(tri, labels)
            assert dynkin_type(quiver) == dtype
            for arc in tri.arcs:
                replacement = flip_replacement(tri, arc)
                relabel = dict(labels)
                relabel[replacement] = relabel.pop(arc)
                assert quiver_of(tri.replace(arc, replacement), relabel) == mutate(
                    quiver, labels[arc]
                )


def test_no_surface_model_for_type_e():
    with pytest.raises(ParseError):
        initial_triangulation(DynkinType.parse("E6"))


def test_braid_graph():
    tri = initial_triangulation(A5)
    graph = braid_graph(tri)
    assert graph.face_count == 6
    assert len(graph.edges) == 5
    assert graph.is_tree()
    # the fan's dual graph is a path: every face meets at most two arcs
    degree = [0] * graph.face_count
    for a, b, _ in graph.edges:
        degree[a] += 1
        degree[b] += 1
    assert sorted(degree) == [1, 1, 2, 2, 2, 2]
    tri7 = initial_triangulation(D7)
    graph7 = braid_graph(tri7)
    assert graph7.face_count == 7
    assert len(graph7.edges) == 7
    assert not graph7.is_tree()
    # the two radii bound the same pair of faces (a doubled dual edge)
    radii_edges = [e for e in graph7.edges if isinstance(e[2], RadiusArc)]
    assert len(radii_edges) == 2
    assert {radii_edges[0][:2], radii_edges[1][:2]} == {radii_edges[0][:2]}
    for dtype in (A2, DynkinType.parse("A3"), DynkinType.parse("A4")):
        for tri in enumerate_triangulations(dtype):
            assert braid_graph(tri).is_tree()


def test_triangulation_validation():
    with pytest.raises(BraidQuiverError):
        Triangulation.make(A2, [PeripheralArc(1, 3)])  # not maximal
    with pytest.raises(BraidQuiverError):
        Triangulation.make(
            A2, [PeripheralArc(1, 3), PeripheralArc(2, 4)]
        )  # crossing


def test_json_roundtrip():
    tri = initial_triangulation(D4)
    data = tri.to_json()
    assert data["type"] == "D4"
    assert {"radius": [4, "notched"]} in data["arcs"]
    assert Triangulation.from_json(data) == tri
