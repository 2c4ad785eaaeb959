import random

import pytest

from braidquiver import _nfcore, garside
from braidquiver.errors import UnknownVertexError
from braidquiver.weyl import (
    DynkinType,
    diagram_automorphism,
    evaluate,
    simple_reflection,
    weyl_table,
)
from braidquiver.words import invert

A2 = DynkinType.parse("A2")
A3 = DynkinType.parse("A3")
D4 = DynkinType.parse("D4")


def brute_normal_form_positive(dtype, word):
    """Independent oracle for positive words: close the word under braid
    and commutation rewrites, then greedily split off the longest prefix
    that is a reduced expression."""
    n = dtype.rank
    rules = []
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            if i == j:
                continue
            si, sj = simple_reflection(dtype, i), simple_reflection(dtype, j)
            if (si * sj * si).matrix == (sj * si * sj).matrix and not (si * sj).matrix == (sj * si).matrix:
                rules.append(((i, j, i), (j, i, j)))
            elif (si * sj).matrix == (sj * si).matrix:
                rules.append(((i, j), (j, i)))

    def closure(w):
        seen = {w}
        frontier = [w]
        while frontier:
            nxt = []
            for u in frontier:
                for old, new in rules:
                    for pos in range(len(u) - len(old) + 1):
                        if u[pos : pos + len(old)] == old:
                            v = u[:pos] + new + u[pos + len(old) :]
                            if v not in seen:
                                seen.add(v)
                                nxt.append(v)
            frontier = nxt
        return seen

    from braidquiver.weyl import longest_element

    w0 = longest_element(dtype)
    factors = []
    current = word
    while current:
        best = None
        for u in closure(current):
            for cut in range(len(u), 0, -1):
                prefix = u[:cut]
                if evaluate(dtype, prefix).length == cut:
                    if best is None or cut > best[0]:
                        best = (cut, prefix, u)
                    break
        cut, prefix, chosen = best
        factors.append(evaluate(dtype, prefix))
        current = chosen[cut:]
    p = 0
    while factors and factors[0].matrix == w0.matrix:
        factors.pop(0)
        p += 1
    return p, factors


def test_normal_form_examples():
    assert garside.normal_form(A2, (1, 2, 1, -2, -1, -2)).is_trivial
    nf = garside.normal_form(A2, (1,))
    assert nf.delta_power == 0
    assert [f.matrix for f in nf.factors] == [simple_reflection(A2, 1).matrix]
    with pytest.raises(UnknownVertexError):
        garside.normal_form(A2, (3,))


def test_normal_form_against_brute_oracle():
    word = (1, 2, 1, 2)
    p, factors = brute_normal_form_positive(A2, word)
    assert (p, [f.matrix for f in factors]) == (1, [simple_reflection(A2, 2).matrix])
    nf = garside.normal_form(A2, word)
    assert nf.delta_power == p
    assert [f.matrix for f in nf.factors] == [f.matrix for f in factors]


def test_more_brute_oracle_words():
    rng = random.Random(7)
    for dtype in (A2, A3):
        for _ in range(25):
            word = tuple(rng.randint(1, dtype.rank) for _ in range(rng.randint(0, 6)))
            p, factors = brute_normal_form_positive(dtype, word)
            nf = garside.normal_form(dtype, word)
            assert nf.delta_power == p
            assert [f.matrix for f in nf.factors] == [f.matrix for f in factors]


def test_equality_examples():
    assert garside.equal(A2, (1, 2, 1), (2, 1, 2))
    assert garside.equal(A2, (1, 2), (1, 2))
    assert not garside.is_trivial(A2, (1,))
    assert not garside.equal(A2, (1,), (2,))


def test_delta_properties():
    for dtype in (A2, A3, D4):
        delta = garside.delta_word(dtype)
        tau = diagram_automorphism(dtype)
        rng = random.Random(11)
        for i in range(1, dtype.rank + 1):
            assert garside.equal(dtype, delta + (i,), (tau[i],) + delta)
        for _ in range(30):
            w = tuple(
                rng.choice((1, -1)) * rng.randint(1, dtype.rank) for _ in range(rng.randint(0, 25))
            )
            assert garside.is_trivial(dtype, w + invert(w))
            assert garside.equal(dtype, delta + delta + w, w + delta + delta)


def test_left_weighted_structure():
    rng = random.Random(13)
    for _ in range(40):
        w = tuple(rng.choice((1, -1)) * rng.randint(1, 4) for _ in range(rng.randint(0, 25)))
        nf = garside.normal_form(D4, w)
        assert garside.structurally_left_weighted(nf)
        table = weyl_table(D4)
        for f in nf.factors:
            assert not f.is_identity()
            assert table.index[f.matrix] != table.w0


def test_equality_implies_weyl_equality():
    rng = random.Random(17)
    for _ in range(40):
        w1 = tuple(rng.choice((1, -1)) * rng.randint(1, 3) for _ in range(rng.randint(0, 15)))
        w2 = tuple(rng.choice((1, -1)) * rng.randint(1, 3) for _ in range(rng.randint(0, 15)))
        if garside.equal(A3, w1, w2):
            assert evaluate(A3, w1).matrix == evaluate(A3, w2).matrix
        if evaluate(A3, w1).matrix != evaluate(A3, w2).matrix:
            assert not garside.equal(A3, w1, w2)


def test_kernel_parity():
    """The pure-Python kernel and the active kernel agree exactly."""
    table = weyl_table(A3)
    rng = random.Random(23)
    for _ in range(60):
        word = [rng.choice((1, -1)) * rng.randint(1, 3) for _ in range(rng.randint(0, 20))]
        expected = garside._core_normal_form(A3, tuple(word))
        pure = _nfcore.normal_form_core(
            0, [], word, table.n, table.rm, table.lm, table.rd, table.ld,
            table.tau, table.gen, table.w0_gen, table.w0,
        )
        assert tuple(expected[1]) == tuple(pure[1]) and expected[0] == pure[0]


def test_nf_rebuild_roundtrip():
    """Decoding the normal form back into letters recovers the element."""
    rng = random.Random(31)
    for dtype in (A2, A3, D4):
        delta = garside.delta_word(dtype)
        for _ in range(30):
            word = tuple(
                rng.choice((1, -1)) * rng.randint(1, dtype.rank)
                for _ in range(rng.randint(0, 25))
            )
            nf = garside.normal_form(dtype, word)
            rebuilt: tuple[int, ...] = ()
            if nf.delta_power >= 0:
                rebuilt += delta * nf.delta_power
            else:
                rebuilt += invert(delta) * (-nf.delta_power)
            for factor in nf.factors:
                rebuilt += reduced_word_of(factor)
            assert garside.equal(dtype, word, rebuilt)
            again = garside.normal_form(dtype, rebuilt)
            assert again.delta_power == nf.delta_power
            assert [f.matrix for f in again.factors] == [f.matrix for f in nf.factors]


def reduced_word_of(element):
    from braidquiver.weyl import reduced_word

    return reduced_word(element)


def test_rank_one_edge_cases():
    a1 = DynkinType.parse("A1")
    assert garside.is_trivial(a1, (1, -1))
    nf = garside.normal_form(a1, (1, 1))
    # the only generator is the Garside element, so its square is delta^2
    assert nf.delta_power == 2 and nf.factors == ()
    assert garside.normal_form(a1, (-1,)).delta_power == -1
    assert garside.equal(a1, (1, 1, -1), (1,))


def test_nf_json():
    nf = garside.normal_form(A2, (1, 2))
    data = nf.to_json()
    assert data["delta_power"] == 0
    assert data["factor_words"] == ["s1 s2"]
    assert data["factors"] == [[[0, -1], [1, -1]]]
