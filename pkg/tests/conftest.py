"""Shared fixtures.  The algebra objects are deterministic and immutable,
so session scope just avoids rebuilding tables."""

import pytest

from chaingeom import projline, representations as reps, rings
from chaingeom.fields import make_field


@pytest.fixture(scope="session")
def gf2():
    return make_field(2, 1)


@pytest.fixture(scope="session")
def gf3():
    return make_field(3, 1)


@pytest.fixture(scope="session")
def gf4():
    return make_field(2, 2)


@pytest.fixture(scope="session")
def gf9():
    return make_field(3, 2)


@pytest.fixture(scope="session")
def m2_gf2(gf2):
    return rings.matrix_ring(2, gf2)


@pytest.fixture(scope="session")
def m2_gf3(gf3):
    return rings.matrix_ring(2, gf3)


@pytest.fixture(scope="session")
def line_m2_gf2(m2_gf2):
    return projline.projective_line(m2_gf2)


@pytest.fixture(scope="session")
def line_m2_gf3(m2_gf3):
    return projline.projective_line(m2_gf3)


@pytest.fixture(scope="session")
def emb_gf4_regular(gf4, m2_gf2):
    return rings.embed_subfield(gf4, m2_gf2, "regular")


@pytest.fixture(scope="session")
def emb_gf9_regular(gf9, m2_gf3):
    return rings.embed_subfield(gf9, m2_gf3, "regular")


@pytest.fixture(scope="session")
def emb_gf2_scalar(gf2, m2_gf2):
    return rings.embed_subfield(gf2, m2_gf2, "scalar")


@pytest.fixture(scope="session")
def orbit_gf4(line_m2_gf2, emb_gf4_regular):
    return projline.enumerate_chains(line_m2_gf2, emb_gf4_regular)


@pytest.fixture(scope="session")
def orbit_scalar_gf2(line_m2_gf2, emb_gf2_scalar):
    return projline.enumerate_chains(line_m2_gf2, emb_gf2_scalar)


@pytest.fixture(scope="session")
def orbit_gf9(line_m2_gf3, emb_gf9_regular):
    return projline.enumerate_chains(line_m2_gf3, emb_gf9_regular)


@pytest.fixture(scope="session")
def nat_m2_gf2(m2_gf2):
    return reps.natural_representation(m2_gf2)


@pytest.fixture(scope="session")
def nat_m2_gf3(m2_gf3):
    return reps.natural_representation(m2_gf3)
