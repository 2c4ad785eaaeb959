import pytest

from braidquiver.errors import BudgetExceededError, ParseError, UnknownVertexError
from braidquiver.weyl import (
    DynkinType,
    descents,
    diagram_automorphism,
    evaluate,
    group_order,
    identity_element,
    longest_element,
    positive_roots,
    reduced_word,
    simple_reflection,
    weyl_table,
)

A2 = DynkinType.parse("A2")
A3 = DynkinType.parse("A3")


def test_type_parsing():
    assert str(DynkinType.parse("D6")) == "D6"
    for bad in ("B3", "D3", "E9", "A0", "foo"):
        with pytest.raises(ParseError):
            DynkinType.parse(bad)


def test_simple_reflection_examples():
    s1 = simple_reflection(A2, 1)
    assert (s1 * s1).is_identity()
    assert s1.length == 1
    s2 = simple_reflection(A2, 2)
    product = s1 * s2
    cube = product * product * product
    assert cube.is_identity()
    with pytest.raises(UnknownVertexError):
        simple_reflection(A2, 5)


def test_evaluate_examples():
    assert evaluate(A2, ()).is_identity()
    assert evaluate(A2, (1, 2, 1)).matrix == evaluate(A2, (2, 1, 2)).matrix
    # inverse letters fold onto the same reflections
    assert evaluate(A2, (-1,)).matrix == simple_reflection(A2, 1).matrix


def test_positive_root_counts():
    # the classic counts: A_n: n(n+1)/2, D_n: n(n-1), E8: 120
    assert len(positive_roots(A3)) == 6
    assert len(positive_roots(DynkinType.parse("D4"))) == 12
    assert len(positive_roots(DynkinType.parse("E8"))) == 120


def test_longest_element():
    a1 = DynkinType.parse("A1")
    assert longest_element(a1).length == 1
    w0 = longest_element(A3)
    assert w0.length == 6 == len(positive_roots(A3))
    assert (w0 * w0).is_identity()
    assert longest_element(DynkinType.parse("E8")).length == 120


def test_descents():
    assert descents(identity_element(A2), "right") == frozenset()
    w0 = longest_element(A3)
    assert descents(w0, "right") == frozenset({1, 2, 3})
    assert descents(w0, "left") == frozenset({1, 2, 3})
    s1 = simple_reflection(A2, 1)
    assert descents(s1, "right") == frozenset({1})
    with pytest.raises(ParseError):
        descents(s1, "sideways")


def test_length_changes_by_one():
    w = evaluate(A3, (1, 3, 2, 1))
    for i in (1, 2, 3):
        si = simple_reflection(A3, i)
        assert abs((w * si).length - w.length) == 1


def test_reduced_word_roundtrip():
    w = evaluate(A3, (1, 2, 3, 1, 2))
    word = reduced_word(w)
    assert len(word) == w.length
    assert evaluate(A3, word).matrix == w.matrix


def test_group_orders():
    assert group_order(A2) == 6
    assert group_order(DynkinType.parse("D4")) == 192
    for n in range(1, 8):
        expect = 1
        for i in range(2, n + 2):
            expect *= i
        assert group_order(DynkinType.parse(f"A{n}")) == expect


def test_group_order_budget():
    with pytest.raises(BudgetExceededError):
        weyl_table(DynkinType.parse("E8"))


def test_diagram_automorphism():
    assert diagram_automorphism(A3) == {1: 3, 2: 2, 3: 1}
    assert diagram_automorphism(DynkinType.parse("D4"))[3] == 3
    # w0 of A2 swaps the two nodes
    assert diagram_automorphism(A2) == {1: 2, 2: 1}


def test_table_consistency():
    table = weyl_table(A3)
    assert table.size == 24
    n = table.n
    for x in (0, 1, 5, 17, 23):
        assert table.inv[table.inv[x]] == x
        assert table.tau[table.tau[x]] == x
        for i in range(n):
            assert table.length[table.rm[x * n + i]] in (
                table.length[x] - 1,
                table.length[x] + 1,
            )


def test_table_descent_masks_match_matrix_descents():
    table = weyl_table(A3)
    for x in range(table.size):
        element = table.element(x)
        mask_right = {i + 1 for i in range(table.n) if table.rd[x] >> i & 1}
        mask_left = {i + 1 for i in range(table.n) if table.ld[x] >> i & 1}
        assert mask_right == set(descents(element, "right"))
        assert mask_left == set(descents(element, "left"))
