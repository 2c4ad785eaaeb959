import pytest
from hypothesis import given
from hypothesis import strategies as st

from braidquiver.errors import GeneratorSetMismatchError, ParseError, UnknownGeneratorError
from braidquiver.words import (
    GroupHom,
    apply_hom,
    compose,
    concat,
    format_word,
    free_reduce,
    identity_hom,
    invert,
    parse_word,
)

letters = st.integers(min_value=-4, max_value=4).filter(lambda x: x != 0)
words = st.lists(letters, max_size=30).map(tuple)


def test_free_reduce_examples():
    assert free_reduce((1, -1)) == ()
    assert free_reduce((1, 2, -2, -1)) == ()
    assert free_reduce((1, 2, -2, 3)) == (1, 3)


@given(words)
def test_free_reduce_idempotent_and_shorter(w):
    once = free_reduce(w)
    assert free_reduce(once) == once
    assert len(once) <= len(w)


@given(words)
def test_inverse_cancels(w):
    assert free_reduce(w + invert(w)) == ()


def test_parse_and_format():
    assert parse_word("s1 s2 s3^-1") == (1, 2, -3)
    assert format_word((1, -2)) == "s1 s2^-1"
    assert parse_word(format_word((3, -1, 2))) == (3, -1, 2)
    with pytest.raises(ParseError):
        parse_word("x7")
    with pytest.raises(ParseError):
        parse_word("s0")


def test_apply_hom_conjugation():
    # generator with an arrow into the mutation vertex conjugates through it
    h = GroupHom((1, 2), (1, 2), {1: (2, 1, -2), 2: (2,)})
    assert apply_hom(h, (1,)) == (2, 1, -2)
    assert apply_hom(h, (2,)) == (2,)
    assert apply_hom(h, (1, -1)) == ()
    with pytest.raises(UnknownGeneratorError):
        apply_hom(h, (3,))


@given(words, words)
def test_apply_hom_is_homomorphism(u, v):
    h = GroupHom((1, 2, 3, 4), (1, 2, 3, 4), {1: (2, 1, -2), 2: (2,), 3: (4, 3), 4: (4,)})
    assert apply_hom(h, concat(u, v)) == concat(apply_hom(h, u), apply_hom(h, v))
    assert apply_hom(h, invert(u)) == invert(apply_hom(h, u))


def test_compose():
    gens = (1, 2)
    ident = identity_hom(gens)
    h = GroupHom(gens, gens, {1: (2, 1, -2), 2: (2,)})
    assert compose(h, ident).images == h.images
    assert compose(ident, h).images == h.images
    hh = compose(h, h)
    assert hh.images[1] == (2, 2, 1, -2, -2)
    with pytest.raises(GeneratorSetMismatchError):
        compose(h, identity_hom((1, 2, 3)))


def test_hom_validation():
    with pytest.raises(UnknownGeneratorError):
        GroupHom((1, 2), (1,), {1: (1,), 2: (2,)})
    with pytest.raises(UnknownGeneratorError):
        GroupHom((1, 2), (1, 2), {1: (1,)})
