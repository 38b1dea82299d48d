from functools import lru_cache

import pytest

from kdecomp.enumeration import enumerate_semirings
from kdecomp.ideals import Ideal, mask_of
from kdecomp.semiring import boolean, chain, direct_product, integers_mod
from kdecomp.sweep import verify_semiring


@lru_cache(maxsize=None)
def census(n):
    return tuple(enumerate_semirings(n))


@lru_cache(maxsize=None)
def census_upto(n):
    return tuple(S for k in range(2, n + 1) for S in census(k))


@lru_cache(maxsize=None)
def sweep_reports(n):
    return tuple(verify_semiring(S) for S in census_upto(n))


def by_label(S, *labels):
    """Ideal of S given by element labels (chain values, product pairs, ...)."""
    return Ideal(S, mask_of(S.index(lab) for lab in labels))


@pytest.fixture(scope="session")
def B():
    return boolean()


@pytest.fixture(scope="session")
def Z2():
    return integers_mod(2)


@pytest.fixture(scope="session")
def Z4():
    return integers_mod(4)


@pytest.fixture(scope="session")
def C3():
    return chain(3)


@pytest.fixture(scope="session")
def BxB():
    return direct_product(boolean(), boolean())


@pytest.fixture(scope="session")
def BxB_parts(BxB):
    """(B x 0, 0 x B) as ideals."""
    return by_label(BxB, "(0,0)", "(1,0)"), by_label(BxB, "(0,0)", "(0,1)")


@pytest.fixture(scope="session")
def counterexample():
    """Order-4 semiring whose zero ideal is k-irreducible but not primary."""
    return next(S for S in census(4) if S.name == "4_0007")


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
