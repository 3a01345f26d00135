import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from _oracles import max_admissible
from conftest import TNORMS, tnorms, truth_values
from fuzzyorder import GODEL, LUKASIEWICZ
from fuzzyorder.diagonal import DiagArrow, compose, left_residual, right_residual
from fuzzyorder.errors import TypeMismatch
from fuzzyorder.tnorm import EPS


@st.composite
def arrows(draw, src=None, dst=None):
    a = draw(truth_values()) if src is None else src
    b = draw(truth_values()) if dst is None else dst
    v = draw(st.floats(0.0, 1.0)) * min(a, b)
    return DiagArrow(a, b, v)


def test_compose_example():
    beta = DiagArrow(0.8, 0.9, 0.7)
    alpha = DiagArrow(0.6, 0.8, 0.5)
    g = compose(LUKASIEWICZ, beta, alpha)
    assert (g.src, g.dst) == (0.6, 0.9)
    assert g.value == pytest.approx(0.4)


def test_unit_and_bottom(tnorm):
    alpha = DiagArrow(0.6, 0.8, 0.5)
    assert compose(tnorm, DiagArrow.unit(0.8), alpha).value == pytest.approx(0.5)
    assert compose(tnorm, alpha, DiagArrow.unit(0.6)).value == pytest.approx(0.5)
    assert compose(tnorm, DiagArrow(0.8, 0.3, 0.3), DiagArrow(0.6, 0.8, 0.0)).value == 0.0


def test_type_mismatch():
    with pytest.raises(TypeMismatch):
        compose(GODEL, DiagArrow(0.7, 0.7, 0.5), DiagArrow(0.5, 0.6, 0.5))
    with pytest.raises(TypeMismatch):
        left_residual(GODEL, DiagArrow(0.5, 0.5, 0.5), DiagArrow(0.6, 0.6, 0.5))
    with pytest.raises(TypeMismatch):
        right_residual(GODEL, DiagArrow(0.5, 0.6, 0.5), DiagArrow(0.5, 0.5, 0.5))


def test_arrow_bounds():
    with pytest.raises(ValueError):
        DiagArrow(0.3, 0.8, 0.5)
    with pytest.raises(ValueError):
        DiagArrow(1.2, 0.8, 0.5)


def test_left_residual_godel_example():
    r = left_residual(GODEL, DiagArrow(0.6, 0.5, 0.3), DiagArrow(0.6, 0.7, 0.4))
    assert (r.src, r.dst, r.value) == (0.7, 0.5, pytest.approx(0.3))


def test_right_residual_examples(tnorm):
    gamma = DiagArrow(0.6, 0.5, 0.3)
    assert right_residual(tnorm, DiagArrow.unit(0.5), gamma).value == pytest.approx(0.3)
    top = right_residual(tnorm, DiagArrow(0.7, 0.5, 0.0), gamma)
    assert top.value == pytest.approx(min(0.6, 0.7))


@given(tnorms, st.data())
def test_associativity(t, data):
    a1 = data.draw(arrows())
    a2 = data.draw(arrows(src=a1.dst))
    a3 = data.draw(arrows(src=a2.dst))
    lhs = compose(t, a3, compose(t, a2, a1)).value
    rhs = compose(t, compose(t, a3, a2), a1).value
    assert abs(lhs - rhs) <= EPS


@given(tnorms, st.data())
def test_two_forms_of_composite(t, data):
    alpha = data.draw(arrows())
    beta = data.draw(arrows(src=alpha.dst))
    b = alpha.dst
    alt = t.tensor(t.residuum(b, beta.value), alpha.value)
    assert abs(compose(t, beta, alpha).value - alt) <= EPS


@given(tnorms, st.data())
def test_distributes_over_max(t, data):
    alpha = data.draw(arrows())
    b1 = data.draw(arrows(src=alpha.dst))
    b2 = data.draw(arrows(src=alpha.dst, dst=b1.dst))
    joined = DiagArrow(b1.src, b1.dst, max(b1.value, b2.value))
    lhs = compose(t, joined, alpha).value
    assert abs(lhs - max(compose(t, b1, alpha).value, compose(t, b2, alpha).value)) <= EPS


@given(tnorms, st.data())
def test_residual_adjunctions(t, data):
    alpha = data.draw(arrows())
    gamma = data.draw(arrows(src=alpha.src))
    beta = data.draw(arrows(src=alpha.dst, dst=gamma.dst))
    lr = left_residual(t, gamma, alpha).value
    rr = right_residual(t, beta, gamma).value
    comp = compose(t, beta, alpha).value
    assume(abs(comp - gamma.value) > 1e-7)  # away from the boundary
    assume(abs(beta.value - lr) > 1e-7 and abs(alpha.value - rr) > 1e-7)
    below = comp <= gamma.value
    assert below == (beta.value <= lr)
    assert below == (alpha.value <= rr)


@pytest.mark.parametrize("name", list(TNORMS))
def test_residuals_against_grid_oracle(name):
    """The closed forms are the largest admissible arrows on a 2**-8 grid."""
    t = TNORMS[name]
    grid = [0.0, 0.15, 0.3, 0.5, 0.65, 0.8, 1.0]
    for a in grid:
        for b in grid:
            for c in grid:
                for frac in (0.0, 0.5, 1.0):
                    alpha = DiagArrow(a, b, frac * min(a, b))
                    gamma = DiagArrow(a, c, frac * min(a, c) * 0.9)
                    lr = left_residual(t, gamma, alpha)
                    assert compose(t, lr, alpha).value <= gamma.value + EPS
                    # beta o alpha = beta & (b -> alpha), straight from the definition
                    best = max_admissible(
                        lambda v: t.tensor(v, t.residuum(b, alpha.value)) <= gamma.value + EPS, min(b, c))
                    assert lr.value >= best - EPS

                    beta = DiagArrow(b, c, frac * min(b, c))
                    rr = right_residual(t, beta, gamma)
                    assert compose(t, beta, rr).value <= gamma.value + EPS
                    best = max_admissible(
                        lambda v: t.tensor(beta.value, t.residuum(b, v)) <= gamma.value + EPS, min(a, b))
                    assert rr.value >= best - EPS
