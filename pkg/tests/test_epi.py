import itertools

import pytest
from hypothesis import given, settings, strategies as st

from gammaplus.autf2 import AX, AY, U, V, FreeAutomorphism, basic, compose
from gammaplus.epi import (
    ACTING_LETTERS,
    Epimorphism,
    NotSurjective,
    abelianized_epi,
    act,
    act_letters,
    inner_index,
    kernel_orbit_census,
    make_epi,
    orbit_length,
    orbit_stabilizer,
    same_kernel,
)
from gammaplus.groups import CapExceeded, abelian, center, dihedral, from_permutations


def d3_seed():
    d = dihedral(3)
    return make_epi(d, d.label_index("r"), d.label_index("s"))


def test_make_epi_accepts_generating_pair():
    e = d3_seed()
    assert e.pair == (1, 3)


def test_make_epi_rejects_non_generating_pair():
    with pytest.raises(NotSurjective):
        make_epi(abelian(2, 1), 0, 0)
    with pytest.raises(NotSurjective):
        make_epi(dihedral(4), 1, 2)  # <r> only


def test_make_epi_range_check():
    with pytest.raises(ValueError):
        make_epi(abelian(2, 1), 0, 5)


def test_act_generator_formulas():
    e = d3_seed()
    g = e.group
    eu = act(basic("u"), e)
    assert eu.pair == (g.mul[e.gx][e.gy], e.gy)
    ev = act(basic("v"), e)
    assert ev.pair == (e.gx, g.mul[e.gx][e.gy])
    assert act(FreeAutomorphism.identity(), e) == e


aut_words = st.lists(st.sampled_from([U, -U, V, -V, AX, -AX, AY, -AY]), max_size=10)


@given(aut_words, aut_words)
@settings(max_examples=60)
def test_act_is_right_action(wf, wg):
    f, g = FreeAutomorphism(wf), FreeAutomorphism(wg)
    e = d3_seed()
    assert act(compose(f, g), e) == act(g, act(f, e))


def test_act_composition_order_matters():
    # Exactly one composition law can hold; exhibit a triple separating
    # the two candidate conventions.
    e = d3_seed()
    f, g = basic("u"), basic("ax")
    fg = compose(f, g)
    assert act(fg, e) == act(g, act(f, e))
    assert act(fg, e) != act(f, act(g, e))


@given(aut_words)
@settings(max_examples=60)
def test_act_matches_letterwise_action(word):
    f = FreeAutomorphism(word)
    e = d3_seed()
    assert act(f, e) == act_letters(e, f.word)


def test_orbit_lengths():
    assert orbit_length(make_epi(abelian(2, 1), 1, 0)) == 3
    assert orbit_length(d3_seed()) == 18
    g = abelian(4, 2)
    assert orbit_length(make_epi(g, g.label_index("(1,0)"), g.label_index("(0,1)"))) == 24


def test_orbit_length_independent_of_seed_for_dihedral():
    d = dihedral(5)
    lengths = {
        orbit_length(Epimorphism(d, a, b))
        for a in range(10)
        for b in range(10)
        if len(d.closure((a, b))) == 10
    }
    assert lengths == {30}


def test_orbit_closed_under_generators():
    res = orbit_stabilizer(d3_seed())
    pts = set(res.orbit)
    for pair in res.orbit:
        e = Epimorphism(res.seed.group, *pair)
        for code in ACTING_LETTERS:
            assert act_letters(e, (code,)).pair in pts


def test_orbit_reversed_generator_order():
    seed = d3_seed()
    forward = orbit_stabilizer(seed)
    backward = orbit_stabilizer(seed, tuple(reversed(ACTING_LETTERS)))
    assert forward.length == backward.length
    assert set(forward.orbit) == set(backward.orbit)


def test_schreier_tree_words_reach_points():
    res = orbit_stabilizer(d3_seed())
    for i, pair in enumerate(res.orbit):
        assert act_letters(res.seed, res.tree_word(i)).pair == pair


@pytest.mark.parametrize("make_group,seed_labels", [
    (lambda: dihedral(4), ("r", "s")),
    (lambda: abelian(4, 2), ("(1,0)", "(0,1)")),
])
def test_schreier_generators_stabilize_seed(make_group, seed_labels):
    g = make_group()
    seed = make_epi(g, g.label_index(seed_labels[0]), g.label_index(seed_labels[1]))
    res = orbit_stabilizer(seed)
    assert res.stabilizer_gens
    for f in res.stabilizer_gens:
        assert act(f, seed) == seed
        assert not f.is_identity


def test_stabilizer_generators_are_deduplicated():
    res = orbit_stabilizer(d3_seed())
    assert len({(f.image_x, f.image_y) for f in res.stabilizer_gens}) == len(res.stabilizer_gens)


@pytest.mark.parametrize("n", [4, 5])
def test_stabilizer_also_fixes_abelianized(n):
    d = dihedral(n)
    seed = make_epi(d, d.label_index("r"), d.label_index("s"))
    bar = abelianized_epi(seed)
    for f in orbit_stabilizer(seed).stabilizer_gens:
        assert act(f, bar) == bar


def test_inner_index():
    assert inner_index(d3_seed()) == 6
    d4 = dihedral(4)
    assert inner_index(make_epi(d4, d4.label_index("r"), d4.label_index("s"))) == 4
    g = abelian(4, 2)
    assert inner_index(make_epi(g, g.label_index("(1,0)"), g.label_index("(0,1)"))) == 1


@pytest.mark.parametrize("group", [dihedral(3), dihedral(6), abelian(6, 2)])
def test_inner_index_equals_center_index(group):
    pairs = (
        (a, b)
        for a in range(group.order)
        for b in range(group.order)
        if len(group.closure((a, b))) == group.order
    )
    a, b = next(pairs)
    e = make_epi(group, a, b)
    assert inner_index(e) == group.order // len(center(group))


def brute_force_same_kernel(e1, e2):
    """Oracle: search all generator-image pairs for an automorphism
    carrying one pair to the other, verifying the full table."""
    g = e1.group
    n = g.order
    for a, b in itertools.product(range(n), repeat=2):
        if len(g.closure((a, b))) != n:
            continue
        fmap = [-1] * n
        fmap[0] = 0
        queue = [0]
        consistent = True
        while queue and consistent:
            c = queue.pop()
            for s, t in ((e1.gx, a), (e1.gy, b)):
                d, fd = g.mul[c][s], g.mul[fmap[c]][t]
                if fmap[d] == -1:
                    fmap[d] = fd
                    queue.append(d)
                elif fmap[d] != fd:
                    consistent = False
        if not consistent or len(set(fmap)) != n:
            continue
        if all(
            fmap[g.mul[i][j]] == g.mul[fmap[i]][fmap[j]]
            for i in range(n)
            for j in range(n)
        ):
            if (a, b) == (e2.gx, e2.gy):
                return True
    return False


def test_same_kernel_reflexive():
    e = d3_seed()
    assert same_kernel(e, e)


def test_same_kernel_dihedral_example():
    d = dihedral(3)
    e1 = make_epi(d, d.label_index("r"), d.label_index("s"))
    e2 = make_epi(d, d.label_index("r2"), d.label_index("sr"))
    assert same_kernel(e1, e2)
    assert brute_force_same_kernel(e1, e2)


def test_same_kernel_conjugate_pairs():
    e = d3_seed()
    conj = act(basic("ax"), e)
    assert same_kernel(e, conj)


def test_same_kernel_matches_brute_force_on_d4():
    d = dihedral(4)
    epis = [
        Epimorphism(d, a, b)
        for a in range(8)
        for b in range(8)
        if len(d.closure((a, b))) == 8
    ]
    e0 = epis[0]
    for e in epis[:12]:
        assert same_kernel(e0, e) == brute_force_same_kernel(e0, e)


def test_same_kernel_rejects_mixed_groups():
    with pytest.raises(ValueError):
        same_kernel(d3_seed(), make_epi(abelian(2, 1), 1, 0))


def test_same_kernel_a5_cross_orbit(a5_table):
    census = kernel_orbit_census(a5_table)
    reps = [Epimorphism(a5_table, *row.representative) for row in census.rows]
    big = next(e for e, row in zip(reps, census.rows) if row.orbit_length == 1080)
    small = next(e for e, row in zip(reps, census.rows) if row.orbit_length == 600)
    assert not same_kernel(big, small)
    # oracle: conjugation by the full symmetric group realizes every
    # automorphism of the alternating group
    perms = [p for p in itertools.permutations(range(5))]
    elements = _a5_elements()
    gx1, gy1 = elements[big.gx], elements[big.gy]
    gx2, gy2 = elements[small.gx], elements[small.gy]
    found = False
    for s in perms:
        conj = lambda p: tuple(s[p[_inv(s)[i]]] for i in range(5))
        if conj(gx1) == gx2 and conj(gy1) == gy2:
            found = True
    assert not found


def _inv(p):
    out = [0] * len(p)
    for i, v in enumerate(p):
        out[v] = i
    return out


def _a5_elements():
    """The alternating group's elements in the same breadth-first order
    used by from_permutations."""
    gens = [(1, 2, 3, 4, 0), (1, 2, 0, 3, 4)]
    elements = [tuple(range(5))]
    index = {elements[0]: 0}
    frontier = [elements[0]]
    while frontier:
        nxt = []
        for p in frontier:
            for g in gens:
                q = tuple(g[p[k]] for k in range(5))
                if q not in index:
                    index[q] = len(elements)
                    elements.append(q)
                    nxt.append(q)
        frontier = nxt
    return elements


def test_abelianized_epi_dihedral():
    bar3 = abelianized_epi(d3_seed())
    assert bar3.group.order == 2
    assert bar3.gx == 0 and bar3.gy != 0
    d4 = dihedral(4)
    bar4 = abelianized_epi(make_epi(d4, d4.label_index("r"), d4.label_index("s")))
    assert bar4.group.order == 4
    assert all(bar4.group.element_order(i) <= 2 for i in range(4))


def test_abelianized_epi_abelian_is_isomorphic():
    g = abelian(4, 2)
    e = make_epi(g, g.label_index("(1,0)"), g.label_index("(0,1)"))
    bar = abelianized_epi(e)
    assert bar.group.order == g.order


def test_census_abelian_single_orbit():
    report = kernel_orbit_census(abelian(4, 2))
    assert len(report.rows) == 1
    assert report.kernel_orbit_count == 1
    assert report.rows[0].orbit_length == 24
    assert report.rows[0].stabilizer_index == 24


def test_census_dihedral_single_kernel_orbit():
    # two epimorphism orbits of length 30, exchanged by an automorphism
    # of the target, so a single orbit on the set of kernels
    report = kernel_orbit_census(dihedral(5))
    assert report.kernel_orbit_count == 1
    assert report.epimorphism_count == 60
    assert [row.orbit_length for row in report.rows] == [30, 30]
    assert report.transitive_on_kernels


def test_census_cap():
    with pytest.raises(CapExceeded):
        kernel_orbit_census(dihedral(8), cap=10)


def test_census_a5(a5_table):
    report = kernel_orbit_census(a5_table)
    assert report.epimorphism_count == 2280
    assert report.kernel_count == 19
    assert report.kernel_orbit_count == 2
    assert sorted(row.orbit_length for row in report.rows) == [600, 600, 1080]
    assert not report.transitive_on_kernels
