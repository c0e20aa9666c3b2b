import os

from hypothesis import HealthCheck, settings

from cyclicspec.higgs import CyclicHiggsData
from cyclicspec.polyalg.matrix import Matrix
from cyclicspec.polyalg.poly import poly_ring

settings.register_profile("default", deadline=None, max_examples=40,
                          suppress_health_check=[HealthCheck.too_slow])
settings.register_profile("ci", deadline=None, max_examples=100,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


def xmat(F, rows):
    """Matrix over F[x]; entries are ascending coefficient lists or scalars."""
    return Matrix(poly_ring(F, "x"), rows)


def higgs(F, dims, *phis):
    m = len(dims)
    return CyclicHiggsData(m, F, dims, [xmat(F, A) for A in phis])


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
