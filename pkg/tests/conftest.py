from __future__ import annotations

import pytest

from cyclosemi.cyclotomy import cyclotomic_factorization, semigroup_polynomial
from cyclosemi.enumeration import enumerate_all_with_frobenius, enumerate_symmetric_with_frobenius

# criterion number -> (description, passed)
ACCEPTANCE: dict[int, tuple[str, bool]] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE):
        desc, ok = ACCEPTANCE[n]
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] criterion {n}: {desc}")


@pytest.fixture(scope="session")
def brute_corpus():
    """Every numerical semigroup with Frobenius number 1..19."""
    return {F: enumerate_all_with_frobenius(F) for F in range(1, 20)}


@pytest.fixture(scope="session")
def symmetric_corpus():
    """Every symmetric numerical semigroup with Frobenius number at most 40."""
    return [S for F in range(1, 41, 2) for S in enumerate_symmetric_with_frobenius(F)]


@pytest.fixture(scope="session")
def cyclotomic_corpus(symmetric_corpus):
    """(S, factorization) for the cyclotomic members of the symmetric corpus."""
    out = []
    for S in symmetric_corpus:
        fac = cyclotomic_factorization(semigroup_polynomial(S))
        if fac.cyclotomic:
            out.append((S, fac))
    return out


@pytest.fixture(scope="session")
def census70():
    from cyclosemi.enumeration import cyclotomic_census

    return cyclotomic_census(70)
