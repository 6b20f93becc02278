import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from subordination.dominant import (
    DominantSpec,
    JanowskiParams,
    chi,
    chi_limit_at_zero,
    ode_residual,
    q_beta_derivatives,
    q_beta_eval,
    xi,
    xi_limit_at_zero,
)
from subordination.errors import DomainError

janowski = st.tuples(st.floats(-0.95, 0.95), st.floats(-0.95, 1.0)).filter(
    lambda ab: ab[0] < ab[1] - 1e-3
).map(lambda ab: JanowskiParams(ab[1], ab[0]))
betas = st.floats(0.01, 50.0)


def taylor_q(d, z, n=400):
    # q_beta = 1 + sum (A - B)(-B)^(k-1)/(1 + k beta) z^k
    A, B = d.params.A, d.params.B
    k = np.arange(1, n + 1)
    return 1 + np.sum((A - B) * (-B) ** (k - 1) / (1 + k * d.beta) * z**k)


@pytest.mark.parametrize("A,B", [(1.0, -0.5), (0.5, -0.25), (0.75, 0.25), (1.0, 0.0)])
def test_matches_taylor_coefficients(A, B):
    d = DominantSpec(0.7, JanowskiParams(A, B))
    for z in (0.3, -0.6 + 0.2j, 0.9j):
        assert q_beta_eval(d, z) == pytest.approx(taylor_q(d, z), abs=1e-12)


def test_frozen_endpoints_beta1_A1_Bhalf():
    d = DominantSpec(1.0, JanowskiParams(1.0, -0.5))
    assert chi(d) == pytest.approx(0.4327906486, abs=1e-9)
    assert xi(d) == pytest.approx(2.1588830834, abs=1e-9)


def test_b0_endpoints_closed_form():
    d = DominantSpec(1.0, JanowskiParams(1.0, 0.0))
    assert chi(d) == pytest.approx(0.5, abs=1e-15)
    assert xi(d) == pytest.approx(1.5, abs=1e-15)
    assert q_beta_eval(d, 1.0) == pytest.approx(1.5, abs=1e-15)


def test_endpoints_agree_with_boundary_evaluation(p_neg):
    d = DominantSpec(2.0, p_neg)
    assert q_beta_eval(d, -1.0).real == pytest.approx(chi(d), abs=1e-11)
    assert q_beta_eval(d, 1.0).real == pytest.approx(xi(d), abs=1e-11)


def test_q_at_zero_is_one(p_neg):
    assert q_beta_eval(DominantSpec(0.3, p_neg), 0.0) == 1.0


@pytest.mark.parametrize(
    "A,B,msg",
    [(0.5, 0.6, "B < A"), (1.5, 0.0, "A <= 1"), (0.5, -1.5, "-1 <= B"), (0.5, 0.5, "B < A")],
)
def test_invalid_params_name_the_invariant(A, B, msg):
    with pytest.raises(DomainError, match=msg):
        JanowskiParams(A, B)


def test_nonpositive_beta_rejected(p_neg):
    with pytest.raises(DomainError, match="beta > 0"):
        DominantSpec(0.0, p_neg)


def test_unit_circle_rejected_when_b_minus_one():
    d = DominantSpec(1.0, JanowskiParams(1.0, -1.0))
    with pytest.raises(DomainError):
        q_beta_eval(d, 1.0)
    # inside the disc is fine
    assert np.isfinite(q_beta_eval(d, 0.5))


def test_outside_disc_rejected(p_neg):
    with pytest.raises(DomainError):
        q_beta_eval(DominantSpec(1.0, p_neg), 1.01)


def test_janowski_disk():
    c, r = JanowskiParams(1.0, -0.5).disk
    assert c == pytest.approx(1.5 / 0.75)
    assert r == pytest.approx(1.5 / 0.75)
    with pytest.raises(DomainError):
        JanowskiParams(1.0, -1.0).disk


def test_derivatives_by_finite_difference(p_neg):
    d = DominantSpec(0.8, p_neg)
    z, h = 0.4 + 0.3j, 1e-5
    dq, d2q = q_beta_derivatives(d, z)
    assert dq == pytest.approx((q_beta_eval(d, z + h) - q_beta_eval(d, z - h)) / (2 * h), rel=1e-8)
    dq_p, _ = q_beta_derivatives(d, z + h)
    dq_m, _ = q_beta_derivatives(d, z - h)
    assert d2q == pytest.approx((dq_p - dq_m) / (2 * h), rel=1e-7)


@settings(max_examples=60, deadline=None)
@given(betas, janowski, st.floats(0.05, 0.95), st.floats(0, 2 * math.pi))
def test_ode_residual_small(beta, p, r, th):
    z = r * complex(math.cos(th), math.sin(th))
    assert abs(ode_residual(DominantSpec(beta, p), z)) <= 1e-8


@settings(max_examples=80, deadline=None)
@given(betas, janowski)
def test_endpoint_ordering(beta, p):
    d = DominantSpec(beta, p)
    lo, hi = chi(d), xi(d)
    assert chi_limit_at_zero(p) - 1e-12 <= lo <= 1.0 <= hi <= xi_limit_at_zero(p) + 1e-12


@settings(max_examples=60, deadline=None)
@given(betas, st.floats(1.01, 5.0), janowski)
def test_endpoints_monotone_in_beta(beta, factor, p):
    small, big = DominantSpec(beta, p), DominantSpec(beta * factor, p)
    assert chi(small) <= chi(big) + 1e-13
    assert xi(small) >= xi(big) - 1e-13


def test_limits_at_small_beta(p_neg):
    d = DominantSpec(1e-7, p_neg)
    assert chi(d) == pytest.approx(chi_limit_at_zero(p_neg), abs=1e-6)
    assert xi(d) == pytest.approx(xi_limit_at_zero(p_neg), abs=1e-6)


@settings(max_examples=30, deadline=None)
@given(janowski)
def test_large_beta_tends_to_one(p):
    d = DominantSpec(1e6, p)
    assert abs(chi(d) - 1) < 1e-5 and abs(xi(d) - 1) < 1e-5
