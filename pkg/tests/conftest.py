import pytest

from legdga import FreeAlgebra, k6_2, k6_2_rules

ACCEPTANCE_RESULTS = {}


@pytest.fixture(scope="session")
def K():
    return k6_2()


@pytest.fixture(scope="session")
def A(K):
    return K.algebra


@pytest.fixture(scope="session")
def AB():
    """The two-generator target algebra: al in degree -1, be in degree 1."""
    return FreeAlgebra.from_degrees({"al": -1, "be": 1})


@pytest.fixture(scope="session")
def ba_system():
    return k6_2_rules()


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE_RESULTS):
        ok, title = ACCEPTANCE_RESULTS[n]
        terminalreporter.write_line(f"criterion {n}: {'PASS' if ok else 'FAIL'}  {title}")
