import pytest

from sdmat import build_instance, enumerate_endos, enumerate_matrices


@pytest.fixture(scope="session")
def s3():
    return build_instance("dihedral:3")


@pytest.fixture(scope="session")
def klein():
    return build_instance("klein")


@pytest.fixture(scope="session")
def d4():
    return build_instance("dihedral:4")


@pytest.fixture(scope="session")
def s3_matrices(s3):
    mats = enumerate_matrices(s3)
    mats.sort(key=lambda m: m.key())
    return mats


@pytest.fixture(scope="session")
def klein_matrices(klein):
    mats = enumerate_matrices(klein)
    mats.sort(key=lambda m: m.key())
    return mats


@pytest.fixture(scope="session")
def d4_matrices(d4):
    mats = enumerate_matrices(d4)
    mats.sort(key=lambda m: m.key())
    return mats


@pytest.fixture(scope="session")
def s3_census(s3):
    return enumerate_endos(s3.group)


@pytest.fixture(scope="session")
def klein_census(klein):
    return enumerate_endos(klein.group)
