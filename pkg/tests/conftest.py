import pytest

from hopfcalc.dsl import load_spec


@pytest.fixture(scope="session")
def z2():
    return load_spec("builtin:z2").build()


@pytest.fixture(scope="session")
def z3():
    return load_spec("builtin:z3").build()


@pytest.fixture(scope="session")
def s3():
    return load_spec("builtin:s3").build()


@pytest.fixture(scope="session")
def all_calculi(z2, z3, s3):
    return {"z2": z2, "z3": z3, "s3": s3}
