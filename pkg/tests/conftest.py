import numpy as np
import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from fuzzyorder import GODEL, LUKASIEWICZ, PRODUCT, TNorm

settings.register_profile("default", max_examples=200, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

LUK_PROD = TNorm.ordinal_sum([(0.0, 0.5, "lukasiewicz"), (0.5, 1.0, "product")])
GAPPED = TNorm.ordinal_sum([(0.2, 0.4, "product"), (0.6, 0.9, "lukasiewicz")])

TNORMS = {"godel": GODEL, "lukasiewicz": LUKASIEWICZ, "product": PRODUCT,
          "luk_prod": LUK_PROD, "gapped": GAPPED}


@pytest.fixture(params=list(TNORMS), ids=list(TNORMS))
def tnorm(request):
    return TNORMS[request.param]


def truth_values():
    """Uniform floats plus the points where t-norms change behaviour."""
    special = st.sampled_from([0.0, 1.0, 0.2, 0.4, 0.5, 0.6, 0.9])
    return st.one_of(special, st.floats(0.0, 1.0, allow_nan=False))


tnorms = st.sampled_from(list(TNORMS.values()))
seeds = st.integers(0, 2**32 - 1)


def rng(seed=0):
    return np.random.default_rng(seed)


# -- acceptance summary ------------------------------------------------------

ACCEPTANCE: dict[int, str] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(ACCEPTANCE):
        terminalreporter.write_line(ACCEPTANCE[k])
