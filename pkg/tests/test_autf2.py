import pytest
from hypothesis import given, strategies as st

from gammaplus import verify
from gammaplus.autf2 import (
    AX,
    AY,
    U,
    V,
    FreeAutomorphism,
    apply,
    basic,
    compose,
    equal,
    gamma1,
    gamma2,
    gamma3,
    gamma4,
    inner_automorphism,
    invert_aut,
    named_constants,
    parse_aut,
    rho,
)
from gammaplus.sl2 import IDENTITY, Mat2, MINUS_IDENTITY
from gammaplus.words import ReducedWord

W = ReducedWord.parse

aut_words = st.lists(st.sampled_from([U, -U, V, -V, AX, -AX, AY, -AY]), max_size=12)
auts = aut_words.map(FreeAutomorphism)
free_words = st.lists(st.sampled_from([1, -1, 2, -2]), max_size=32).map(ReducedWord)

RHO_OF_LETTER = {
    U: Mat2(1, 0, 1, 1),
    -U: Mat2(1, 0, -1, 1),
    V: Mat2(1, 1, 0, 1),
    -V: Mat2(1, -1, 0, 1),
    AX: IDENTITY,
    -AX: IDENTITY,
    AY: IDENTITY,
    -AY: IDENTITY,
}


def rho_from_word(f):
    """Independent route to the abelianized matrix: a plain product of
    generator matrices along the word."""
    m = IDENTITY
    for code in f.word:
        m = m * RHO_OF_LETTER[code]
    return m


def test_basic_images():
    u, v, ax = basic("u"), basic("v"), basic("ax")
    assert (u.image_x, u.image_y) == (W("xy"), W("y"))
    assert (v.image_x, v.image_y) == (W("x"), W("xy"))
    assert (ax.image_x, ax.image_y) == (W("x"), W("xyX"))
    uinv = basic("u", -1)
    assert (uinv.image_x, uinv.image_y) == (W("xY"), W("y"))


def test_basic_rejects_garbage():
    with pytest.raises(KeyError):
        basic("w")
    with pytest.raises(ValueError):
        basic("u", 2)


def test_compose_examples():
    u = basic("u")
    uu = compose(u, u)
    assert (uu.image_x, uu.image_y) == (W("xyy"), W("y"))
    assert compose(u, FreeAutomorphism.identity()) == u
    f = compose(basic("ax", -1), compose(basic("v"), basic("v")))
    assert (f.image_x, f.image_y) == (W("x"), W("xyx"))


def test_invert_examples():
    u = basic("u")
    assert invert_aut(u) == basic("u", -1)
    assert invert_aut(FreeAutomorphism.identity()).is_identity
    uv = compose(u, basic("v"))
    assert invert_aut(uv) == compose(invert_aut(basic("v")), invert_aut(u))


@given(auts)
def test_inverse_two_sided(f):
    assert compose(f, invert_aut(f)).is_identity
    assert compose(invert_aut(f), f).is_identity


def test_apply_examples():
    assert apply(gamma4(), W("x")) == W("YXy")
    assert apply(FreeAutomorphism.identity(), W("xYx")) == W("xYx")
    for n in (1, 3, 5):
        assert apply(gamma2(n), W("y")) == W("x" * n + "y")


@given(auts, free_words, free_words)
def test_apply_is_homomorphism(f, w, v):
    assert apply(f, w * v) == apply(f, w) * apply(f, v)


def test_equal_examples():
    u, v, ax, ay = (basic(n) for n in ("u", "v", "ax", "ay"))
    assert equal(u * ax * invert_aut(u), ax * ay)
    assert not equal(u, v)
    assert equal(parse_aut("(v u^-1 v)^4"), parse_aut("ax ay^-1 ax^-1 ay"))


def test_presentation_relations_hold():
    items = verify.check_presentation()
    assert all(item.ok for item in items), [i.name for i in items if not i.ok]


def test_rho_examples():
    assert rho(basic("u")) == Mat2(1, 0, 1, 1)
    assert rho(basic("v")) == Mat2(1, 1, 0, 1)
    assert rho(basic("ax")) == IDENTITY
    assert rho(gamma4()) == MINUS_IDENTITY


@given(auts, auts)
def test_rho_homomorphism(f, g):
    assert rho(compose(f, g)) == rho(f) * rho(g)


@given(auts)
def test_rho_matches_word_product(f):
    assert rho(f) == rho_from_word(f)
    assert rho(f).det == 1


def test_named_constants():
    c = named_constants(3)
    p, q = c["p"], c["q"]
    assert p.word == (-AX, -U, V, -U)
    assert (p.image_x, p.image_y) == (W("Y"), W("x"))
    assert q.word == (-AX, -AX, -U, V, -U, -U)
    assert (q.image_x, q.image_y) == (W("XY"), W("x"))
    assert (c["gamma1"].image_x, c["gamma1"].image_y) == (W("xyy"), W("y"))
    assert (c["gamma2"].image_x, c["gamma2"].image_y) == (W("x"), W("xxxy"))
    assert (c["gamma3"].image_x, c["gamma3"].image_y) == (W("x"), W("xyx"))
    assert (c["gamma4"].image_x, c["gamma4"].image_y) == (W("YXy"), W("Y"))


def test_gamma_rho_matrices():
    n = 3
    assert rho(gamma1()) == Mat2(1, 0, 2, 1)
    assert rho(gamma2(n)) == Mat2(1, n, 0, 1)
    assert rho(gamma3()) == Mat2(1, 2, 0, 1)
    assert rho(gamma4()) == Mat2(-1, 0, 0, -1)


def test_inner_automorphism():
    a = inner_automorphism(W("xy"))
    assert a == compose(basic("ax"), basic("ay"))
    assert apply(a, W("y")) == W("xy") * W("y") * W("YX")


def test_parse_aut_examples():
    assert parse_aut("u^2") == gamma1()
    c = named_constants(3)
    assert parse_aut("p q^-1") == compose(c["p"], invert_aut(c["q"]))
    with pytest.raises(ValueError):
        parse_aut("zz")


def test_parse_aut_parentheses():
    assert parse_aut("(u v)^2") == parse_aut("u v u v")
    assert parse_aut("(u v)^-1") == parse_aut("v^-1 u^-1")
    with pytest.raises(ValueError):
        parse_aut("(u v")
    with pytest.raises(ValueError):
        parse_aut("u v)")


def test_parse_identity():
    assert parse_aut("1").is_identity


@given(auts)
def test_print_parse_round_trip(f):
    g = parse_aut(str(f))
    assert g == f and g.word == f.word


def test_word_cancellation_on_construction():
    assert FreeAutomorphism((U, -U, V)).word == (V,)


def test_exponent_matrix_has_det_one():
    # determinant +1 certifies membership in the special subgroup
    for f in (basic("u"), gamma4(), parse_aut("p q p^-1")):
        assert rho(f).det == 1
