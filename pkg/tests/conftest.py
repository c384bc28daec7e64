import pytest

from gammaplus import sl2, slsub
from gammaplus.epi import make_epi, orbit_stabilizer
from gammaplus.fixtures import load_g128_presentation
from gammaplus.groups import from_permutations, table_from_presentation

# standard 5-cycle and 3-cycle generating the alternating group
A5_GENERATORS = [(1, 2, 3, 4, 0), (1, 2, 0, 3, 4)]


@pytest.fixture(scope="session")
def g128_table():
    return table_from_presentation(load_g128_presentation())


@pytest.fixture(scope="session")
def g128_seed(g128_table):
    return make_epi(g128_table, g128_table.label_index("g1"), g128_table.label_index("g2"))


@pytest.fixture(scope="session")
def g128_orbit(g128_seed):
    return orbit_stabilizer(g128_seed)


@pytest.fixture(scope="session")
def g128_subgroup(g128_orbit):
    return slsub.build(sl2.rho_subgroup_generators(g128_orbit.stabilizer_gens))


@pytest.fixture(scope="session")
def a5_table():
    return from_permutations(A5_GENERATORS)
