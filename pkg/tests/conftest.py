import pytest

from bolext.bol import h3, s2, z1, z2, z3
from bolext.exactlin import PrimeField, RATIONALS
from bolext.extensions import e_h3
from bolext.representation import trivial_representation


@pytest.fixture(scope="session")
def Q():
    return RATIONALS


@pytest.fixture(scope="session")
def F5():
    return PrimeField(5)


@pytest.fixture(scope="session")
def F7():
    return PrimeField(7)


@pytest.fixture
def fixtures_q(Q):
    return {"z1": z1(Q), "z2": z2(Q), "z3": z3(Q), "s2": s2(Q), "h3": h3(Q)}


@pytest.fixture
def fixtures_f5(F5):
    return {"z1": z1(F5), "z2": z2(F5), "z3": z3(F5), "s2": s2(F5), "h3": h3(F5)}


@pytest.fixture
def t1_q(Q):
    return trivial_representation(Q, 2)


@pytest.fixture
def t1_f5(F5):
    return trivial_representation(F5, 2)


@pytest.fixture
def ext_h3_f5(F5):
    return e_h3(F5)


def corpus_dir():
    from importlib.resources import files
    return files("bolext") / "corpus"
