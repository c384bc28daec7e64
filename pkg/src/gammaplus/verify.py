"""Named verification suites: presentation relations, the dihedral
generator identities, and the order-128 fixtures.

Each suite returns a list of CheckItem records so callers (CLI, tests)
can render or assert item by item.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import autf2, sl2, slsub
from .autf2 import FreeAutomorphism, gamma1, gamma2, gamma3, gamma4, inner_automorphism, parse_aut
from .epi import act, act_letters, make_epi, orbit_stabilizer
from .fixtures import load_g128_presentation, load_table1, load_table2, load_witness
from .groups import DEFAULT_MAX_COSETS, dihedral, table_from_presentation
from .sl2 import Mat2, eval_word, in_gamma
from .words import ReducedWord

_X = ReducedWord.parse("x")
_Y = ReducedWord.parse("y")


@dataclass(frozen=True)
class CheckItem:
    name: str
    ok: bool
    detail: str = ""


def check_presentation() -> list[CheckItem]:
    """The defining relations of the special automorphism group as
    identities of cached images, plus the two SL2(Z) relators."""
    u, v = autf2.basic("u"), autf2.basic("v")
    ax, ay = autf2.basic("ax"), autf2.basic("ay")
    ident = FreeAutomorphism.identity()
    relations = [
        ("u ax u^-1 = ax ay", u * ax * u.inverse(), ax * ay),
        ("u ay u^-1 = ay", u * ay * u.inverse(), ay),
        ("v ax v^-1 = ax", v * ax * v.inverse(), ax),
        ("v ay v^-1 = ax ay", v * ay * v.inverse(), ax * ay),
        ("v u^-1 v u v^-1 u = 1", parse_aut("v u^-1 v u v^-1 u"), ident),
        ("(v u^-1 v)^4 = ax ay^-1 ax^-1 ay", parse_aut("(v u^-1 v)^4"), parse_aut("ax ay^-1 ax^-1 ay")),
    ]
    items = [CheckItem(name, autf2.equal(lhs, rhs)) for name, lhs, rhs in relations]
    items.append(CheckItem("e2 e1^-1 e2 e1 e2^-1 e1 = I", eval_word(sl2.RELATOR_1) == sl2.IDENTITY))
    items.append(CheckItem("(e2 e1^-1 e2)^4 = I", eval_word(sl2.RELATOR_2) == sl2.IDENTITY))
    return items


def check_dihedral_identities(n: int) -> list[CheckItem]:
    """Word identities from the four-generator description of the
    stabilizer of x -> r, y -> s in the dihedral group of order 2n,
    one table for odd n and one for even n."""
    if n < 3:
        raise ValueError("dihedral groups require n >= 3")
    g1, g2, g3, g4 = gamma1(), gamma2(n), gamma3(), gamma4()
    D = dihedral(n)
    pi0 = make_epi(D, D.label_index("r"), D.label_index("s"))
    alpha = inner_automorphism
    x, y = _X, _Y
    a_y2 = alpha(y ** 2)
    items = [
        CheckItem("phi1 = gamma1", parse_aut("u^2") == g1),
        CheckItem("alpha_{y^2} = gamma1^-1 gamma4^-1 gamma1 gamma4",
                  a_y2 == g1.inverse() * g4.inverse() * g1 * g4),
    ]
    if n % 2:
        half = (n + 1) // 2
        phi2 = g2.inverse() * g3 ** half
        a_xn = alpha(x ** n)
        items += [
            CheckItem("phi2 = gamma2^-1 gamma3^((n+1)/2)",
                      (phi2.image_x, phi2.image_y) == (x, x ** ((1 - n) // 2) * y * x ** half)),
            CheckItem("alpha_{x^n} = gamma2^2 gamma3^-n", a_xn == g2 ** 2 * g3 ** (-n)),
            CheckItem("alpha_{y x^n y^-1}",
                      alpha(y * x ** n * y.inverse())
                      == g4.inverse() * a_y2.inverse() * a_xn.inverse() * a_y2 * g4),
        ]
        for k in range(1, n):
            items.append(CheckItem(
                f"alpha_{{x^{k} y x^{k - n} y}}",
                alpha(x ** k * y * x ** (k - n) * y)
                == g3 ** k * g4 * a_y2.inverse() * a_xn * g3 ** (-k) * g4,
            ))
            items.append(CheckItem(
                f"alpha_{{y x^{k} y x^{k - n}}}",
                alpha(y * x ** k * y * x ** (k - n))
                == a_y2 * g4 * g3 ** k * g4.inverse() * g3 ** (-k) * a_xn.inverse(),
            ))
        stabilizers = [("phi1", parse_aut("u^2")), ("phi2", phi2)]
        items.append(CheckItem("rho(phi2) = [[1,1],[0,1]]", phi2.rho() == Mat2(1, 1, 0, 1)))
    else:
        half = n // 2
        a_xh = alpha(x ** half)
        items += [
            CheckItem("alpha_{x^(n/2)} = gamma2 gamma3^-(n/2)", a_xh == g2 * g3 ** (-half)),
            CheckItem("alpha_{y x^(n/2) y^-1}",
                      alpha(y * x ** half * y.inverse())
                      == g4.inverse() * a_y2.inverse() * a_xh.inverse() * a_y2 * g4),
        ]
        for k in range(1, half):
            items.append(CheckItem(
                f"alpha_{{x^{k} y x^{k - half} y}}",
                alpha(x ** k * y * x ** (k - half) * y)
                == g3 ** k * g4 * a_y2.inverse() * a_xh * g3 ** (-k) * g4,
            ))
            items.append(CheckItem(
                f"alpha_{{y x^{k} y x^{k - half}}}",
                alpha(y * x ** k * y * x ** (k - half))
                == a_y2 * g4 * g3 ** k * g4.inverse() * g3 ** (-k) * a_xh.inverse(),
            ))
        stabilizers = [("phi1", parse_aut("u^2")), ("phi3", g3), ("phi4", g4)]
    for name, f in stabilizers:
        items.append(CheckItem(f"{name} stabilizes pi0", act(f, pi0) == pi0))
    return items


def _g128_subgroup(fixtures_dir, max_cosets: int):
    pres = load_g128_presentation(fixtures_dir)
    table = table_from_presentation(pres, max_cosets)
    seed = make_epi(table, table.label_index("g1"), table.label_index("g2"))
    result = orbit_stabilizer(seed)
    mats = sl2.rho_subgroup_generators(result.stabilizer_gens)
    return seed, result, slsub.build(mats, max_cosets)


def check_table1(fixtures_dir=None, max_cosets: int = DEFAULT_MAX_COSETS) -> list[CheckItem]:
    """Every word of the first table stabilizes the epimorphism onto
    the order-128 group."""
    pres = load_g128_presentation(fixtures_dir)
    table = table_from_presentation(pres, max_cosets)
    seed = make_epi(table, table.label_index("g1"), table.label_index("g2"))
    items = []
    for i, f in enumerate(load_table1(fixtures_dir), start=1):
        items.append(CheckItem(f"table1 word {i} stabilizes", act_letters(seed, f.word) == seed))
    return items


def check_table2(fixtures_dir=None, max_cosets: int = DEFAULT_MAX_COSETS) -> list[CheckItem]:
    """Every matrix of the second table lies in the abelianized
    stabilizer image, and together they generate it (equal index)."""
    _, _, subgroup = _g128_subgroup(fixtures_dir, max_cosets)
    mats = [eval_word(w) for w in load_table2(fixtures_dir)]
    items = [
        CheckItem(f"table2 word {i} is a member", slsub.contains(subgroup, m))
        for i, m in enumerate(mats, start=1)
    ]
    regenerated = slsub.build(list(dict.fromkeys(mats)), max_cosets)
    items.append(CheckItem(
        f"table2 generates the image (index {regenerated.index})",
        regenerated.index == subgroup.index,
        f"stabilizer image has index {subgroup.index}",
    ))
    return items


def check_witness(fixtures_dir=None, max_cosets: int = DEFAULT_MAX_COSETS) -> list[CheckItem]:
    """The level-8 witness word: evaluation, determinant, congruence
    class, and rejection by membership."""
    word = load_witness(fixtures_dir)
    mat = eval_word(word)
    expected = Mat2(-327, -80, 560, 137)
    items = [
        CheckItem("witness evaluates to [[-327,-80],[560,137]]", mat == expected),
        CheckItem("witness determinant is 1", mat.det == 1),
        CheckItem("witness is congruent to I mod 8", in_gamma(mat, 8, 8)),
    ]
    _, _, subgroup = _g128_subgroup(fixtures_dir, max_cosets)
    items.append(CheckItem("witness is rejected by membership", not slsub.contains(subgroup, mat)))
    return items
