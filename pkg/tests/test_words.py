import pytest
from hypothesis import given, strategies as st

from gammaplus.words import (
    EMPTY,
    ExponentVector,
    Letter,
    ReducedWord,
    exponent_vector,
    invert,
    multiply,
    reduce,
    substitute,
)

W = ReducedWord.parse

letters = st.lists(st.sampled_from([1, -1, 2, -2]), max_size=64)
words = letters.map(ReducedWord)


def test_reduce_cancellation():
    assert reduce([1, 2, -2, 1]) == W("xx")


def test_reduce_empty():
    assert reduce([]) == EMPTY


def test_reduce_nested_cancellation():
    assert reduce([1, -2, 2, -1, 2]) == W("y")


@given(letters)
def test_reduce_idempotent(seq):
    once = reduce(seq)
    assert reduce(once.letters) == once


def test_multiply_examples():
    assert W("xY") * W("yx") == W("xx")
    assert W("xy") * EMPTY == W("xy")
    assert W("xy") * W("YX") == EMPTY


def test_invert_examples():
    assert invert(W("xy")) == W("YX")
    assert invert(EMPTY) == EMPTY
    assert invert(W("xxY")) == W("yXX")


def test_substitute_examples():
    assert substitute(W("xy"), W("xy"), W("y")) == W("xyy")
    assert substitute(W("x"), W("x"), W("y")) == W("x")
    assert substitute(W("Y"), W("x"), W("xyx")) == W("XYX")


def test_exponent_vector_examples():
    assert exponent_vector(W("xyy")) == ExponentVector(1, 2)
    assert exponent_vector(EMPTY) == ExponentVector(0, 0)
    assert exponent_vector(W("YXy")) == ExponentVector(-1, 0)


@given(words, words, words)
def test_multiply_associative(w, v, u):
    assert (w * v) * u == w * (v * u)


@given(words)
def test_identity_element(w):
    assert w * EMPTY == w == EMPTY * w


@given(words)
def test_invert_involution(w):
    assert invert(invert(w)) == w
    assert w * invert(w) == EMPTY


@given(words, words)
def test_invert_antihomomorphism(w, v):
    assert invert(multiply(w, v)) == multiply(invert(v), invert(w))


@given(words, words, words, words)
def test_substitute_homomorphism(w, v, ix, iy):
    assert substitute(w * v, ix, iy) == substitute(w, ix, iy) * substitute(v, ix, iy)


@given(words, words, words)
def test_exponent_vector_of_substitution(w, ix, iy):
    a, b = exponent_vector(w)
    ex, ey = exponent_vector(ix), exponent_vector(iy)
    assert exponent_vector(substitute(w, ix, iy)) == ExponentVector(
        a * ex.a + b * ey.a, a * ex.b + b * ey.b
    )


def test_parse_reduces():
    assert W("xyYx") == W("xx")
    assert W("xyYX") == EMPTY
    assert str(W("xyY")) == "x"


def test_empty_prints_as_one():
    assert str(EMPTY) == "1"
    assert W("1") == EMPTY


def test_parse_rejects_garbage():
    with pytest.raises(ValueError):
        ReducedWord.parse("xz")


@given(words)
def test_text_round_trip(w):
    assert ReducedWord.parse(str(w)) == w


def test_pow():
    assert W("x") ** 3 == W("xxx")
    assert W("xy") ** -2 == W("YXYX")
    assert W("xy") ** 0 == EMPTY


def test_letter_conversion():
    l = Letter("x", -1)
    assert l.code == -1
    assert Letter.from_code(-1) == l
    assert ReducedWord([Letter("x", 1), Letter("y", 1)]) == W("xy")
    with pytest.raises(ValueError):
        Letter.from_code(3)


def test_rejects_bad_letters():
    with pytest.raises(ValueError):
        ReducedWord([5])
