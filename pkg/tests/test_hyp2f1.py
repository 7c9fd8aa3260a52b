# test_hyp2f1.py
"""Gauss 2F1: trivial identities, frozen references, transformation
degeneracies, property batteries (Euler, contiguous, derivative), error
paths, and an arbitrary-precision cross-check battery."""

import cmath
import math

import numpy as np
import pytest

from kgscatter import (
    CPoleError,
    Hyp2F1Params,
    NoConvergence,
    gauss_2f1,
    gauss_2f1_derivative,
    log_gamma,
)

from conftest import random_complex, random_disk

try:
    import mpmath

    HAVE_MPMATH = True
except ImportError:
    HAVE_MPMATH = False


def f21(a, b, c, z):
    return gauss_2f1(Hyp2F1Params(a=a, b=b, c=c, z=z))


# frozen references (arbitrary-precision direct series + Pfaff oracle,
# computed before the build and pinned)
REF_COMPLEX_PFAFF = complex(0.21372730900338417488, -0.25862472151121674163)
# a=0.5+1i, b=1-0.5i, c=1.5, z=-3
REF_LOG_SERIES = 1.1889164797957745964            # a=b=1, c=2, z=0.3
REF_DERIV_LOG = 0.79884982925217991684            # (ab/c) 2F1(2,2;3;0.3)
REF_DEGEN_ONEMZ = 1.5632682129720699535           # a=1/3, b=2/3, c=1, z=0.9
REF_DEGEN_INV = 0.19121407311550818063            # a=0.5, b=2.5, c=1.2, z=-8
REF_COMPLEX_Z = complex(0.77157001588662666996, -0.041513846452016206898)
# a=1+1i, b=0.5, c=2, z=-0.8+0.6i
REF_GAUSS_SUM = 1.1054192265872007202             # a=0.3, b=0.4, c=2, z=1
REF_DEGEN_ONEMZ_1 = 1.226406933302572737          # a=b=0.5, c=2, z=0.95
REF_TERMINATING = 609.54688445251058681           # a=-3, b=2.2, c=0.9, z=-4
REF_DEGEN_INV_FAR = 0.15541233018917777518        # a=0.5, b=2.5, c=1.2, z=-12
REF_CORNER_ONEMZ = complex(1.2146136546741967385, 0.089783122781737015778)
# a=b=0.5, c=2, z=1+0.15i (no convergent series reachable)
REF_CORNER_INV = complex(0.065976869126245889184, 0.16687076658580014832)
# a=0.5, b=2.5, c=1.2, z=6+6i
REF_DEGEN_REROUTE = complex(1.2563372129794605419, 0.30511866182305746046)
# a=0.4, b=0.9, c=2.3, z=1.3+0.3i


# ---------------------------------------------------------------------------
# trivial branches
# ---------------------------------------------------------------------------
def test_z_zero_is_one():
    assert f21(0.7 + 0.2j, -1.3, 2.5 - 1j, 0.0) == 1.0


def test_binomial_b_equals_c():
    a, z = 0.7 + 0.3j, 0.4 - 0.2j
    got = f21(a, 1.1 - 0.5j, 1.1 - 0.5j, z)
    want = cmath.exp(-a * cmath.log(1.0 - z))
    assert abs(got - want) < 1e-14 * abs(want)


def test_binomial_a_equals_c():
    b, z = -0.4 + 1j, 0.3 + 0.1j
    got = f21(2.2, b, 2.2, z)
    want = cmath.exp(-b * cmath.log(1.0 - z))
    assert abs(got - want) < 1e-14 * abs(want)


def test_gauss_summation_at_z_one():
    got = f21(0.3, 0.4, 2.1, 1.0)
    want = cmath.exp(
        log_gamma(2.1) + log_gamma(2.1 - 0.3 - 0.4)
        - log_gamma(2.1 - 0.3) - log_gamma(2.1 - 0.4)
    )
    assert abs(got - want) < 1e-12 * abs(want)


def test_gauss_summation_frozen():
    assert abs(f21(0.3, 0.4, 2.0, 1.0) - REF_GAUSS_SUM) < 1e-12


def test_terminating_polynomial_frozen():
    # a = -3 exact: cubic in z, valid far outside the unit disk
    assert abs(f21(-3.0, 2.2, 0.9, -4.0) - REF_TERMINATING) < 1e-11 * REF_TERMINATING


def test_terminating_before_c_pole():
    # c = -5 is a pole, but a = -2 terminates the series first
    a, b, c, z = -2.0, 1.7, -5.0, 0.6
    want = 1.0 + a * b / c * z + a * (a + 1) * b * (b + 1) / (c * (c + 1)) / 2.0 * z * z
    assert abs(f21(a, b, c, z) - want) < 1e-14 * abs(want)


# ---------------------------------------------------------------------------
# frozen references off the trivial paths
# ---------------------------------------------------------------------------
def test_frozen_series_value():
    assert abs(f21(1.0, 1.0, 2.0, 0.3) - REF_LOG_SERIES) < 1e-13
    # analytic identity: 2F1(1,1;2;z) = -ln(1-z)/z
    assert abs(f21(1.0, 1.0, 2.0, 0.3) + math.log(0.7) / 0.3) < 1e-14


def test_frozen_pfaff_value():
    got = f21(0.5 + 1j, 1 - 0.5j, 1.5, -3.0)
    assert abs(got - REF_COMPLEX_PFAFF) < 1e-12


def test_frozen_complex_argument():
    got = f21(1 + 1j, 0.5, 2.0, -0.8 + 0.6j)
    assert abs(got - REF_COMPLEX_Z) < 1e-12


def test_degenerate_one_minus_z_zero_diff():
    # c - a - b = 0: logarithmic case, rerouted to the direct series
    got = f21(1.0 / 3.0, 2.0 / 3.0, 1.0, 0.9)
    assert abs(got - REF_DEGEN_ONEMZ) < 5e-9 * REF_DEGEN_ONEMZ


def test_degenerate_one_minus_z_unit_diff():
    # c - a - b = 1
    got = f21(0.5, 0.5, 2.0, 0.95)
    assert abs(got - REF_DEGEN_ONEMZ_1) < 5e-9 * REF_DEGEN_ONEMZ_1


def test_degenerate_inverse_z():
    # b - a = 2: degenerate 1/z formula, dodged by the Pfaff map
    got = f21(0.5, 2.5, 1.2, -8.0)
    assert abs(got - REF_DEGEN_INV) < 5e-9 * REF_DEGEN_INV


def test_degenerate_inverse_z_far():
    # b - a = 2 with |z| large enough that the 1/z map wins the argmin;
    # the handler must fall back to the (slower) Pfaff series
    got = f21(0.5, 2.5, 1.2, -12.0)
    assert abs(got - REF_DEGEN_INV_FAR) < 5e-9 * REF_DEGEN_INV_FAR


def test_degenerate_cornered_one_minus_z():
    # integer c - a - b with z near the unit circle: every series map has
    # modulus ~1, so only the conjugate-perturbation average is left
    got = f21(0.5, 0.5, 2.0, 1.0 + 0.15j)
    assert abs(got - REF_CORNER_ONEMZ) < 5e-9 * abs(REF_CORNER_ONEMZ)


def test_degenerate_cornered_inverse_z():
    # integer b - a with |z| large and no convergent series fallback
    got = f21(0.5, 2.5, 1.2, 6.0 + 6.0j)
    assert abs(got - REF_CORNER_INV) < 5e-9 * abs(REF_CORNER_INV)


def test_degenerate_reroutes_to_inverse_z():
    # integer c - a - b near z = 1 but |z| > 1: the non-degenerate 1/z
    # map still converges and takes over
    got = f21(0.4, 0.9, 2.3, 1.3 + 0.3j)
    assert abs(got - REF_DEGEN_REROUTE) < 5e-9 * abs(REF_DEGEN_REROUTE)


# ---------------------------------------------------------------------------
# derivative operation
# ---------------------------------------------------------------------------
def test_derivative_at_zero_is_ab_over_c():
    a, b, c = 0.7 + 0.1j, -1.2, 1.9
    got = gauss_2f1_derivative(Hyp2F1Params(a=a, b=b, c=c, z=0.0))
    assert abs(got - a * b / c) < 1e-14 * abs(a * b / c)


def test_derivative_frozen_log_case():
    got = gauss_2f1_derivative(Hyp2F1Params(a=1.0, b=1.0, c=2.0, z=0.3))
    assert abs(got - REF_DERIV_LOG) < 1e-12


def test_derivative_a_zero_is_zero():
    assert gauss_2f1_derivative(Hyp2F1Params(a=0.0, b=1.3, c=0.7, z=0.5)) == 0.0


def test_derivative_c_zero_raises():
    with pytest.raises(CPoleError):
        gauss_2f1_derivative(Hyp2F1Params(a=1.0, b=1.0, c=0.0, z=0.1))


def test_derivative_matches_finite_differences(rng):
    # relative 1e-6 at random interior points
    h = 1e-6
    for _ in range(200):
        a, b = random_complex(rng, 2, re_lo=-2, re_hi=2, im_lo=-2, im_hi=2)
        c = complex(rng.uniform(0.3, 3.0), rng.uniform(-2, 2))
        z = complex(rng.uniform(-0.4, 0.4), rng.uniform(-0.4, 0.4))
        d = gauss_2f1_derivative(Hyp2F1Params(a=a, b=b, c=c, z=z))
        fd = (f21(a, b, c, z + h) - f21(a, b, c, z - h)) / (2 * h)
        assert abs(d - fd) <= 1e-6 * max(1.0, abs(d))


# ---------------------------------------------------------------------------
# symmetry and property batteries
# ---------------------------------------------------------------------------
def test_ab_symmetry_bit_for_bit(rng):
    for _ in range(100):
        a, b = random_complex(rng, 2)
        c = complex(rng.uniform(0.3, 3.0), rng.uniform(-2, 2))
        z = complex(*rng.uniform(-0.8, 0.8, 2))
        v1 = f21(a, b, c, z)
        v2 = f21(b, a, c, z)
        assert v1 == v2  # exact, not approximate


def _euler_draws(rng, n):
    # |z| <= 0.9, |z-1| >= 0.1; parameters bounded, c away from poles
    out = []
    while len(out) < n:
        z = random_disk(rng, 1, 0.9)[0]
        if abs(z - 1.0) < 0.1:
            continue
        a, b = random_complex(rng, 2, re_lo=-2.5, re_hi=2.5, im_lo=-2.5, im_hi=2.5)
        c = complex(rng.uniform(0.4, 3.5), rng.uniform(-2.5, 2.5))
        out.append((a, b, c, z))
    return out


def test_euler_transform_battery(rng):
    # 2F1(a,b;c;z) = (1-z)^(c-a-b) 2F1(c-a, c-b; c; z), relative 1e-9
    draws = _euler_draws(rng, 1000)
    worst = 0.0
    for a, b, c, z in draws:
        lhs = f21(a, b, c, z)
        rhs = cmath.exp((c - a - b) * cmath.log(1.0 - z)) * f21(c - a, c - b, c, z)
        rel = abs(lhs - rhs) / max(1e-300, abs(lhs), abs(rhs))
        worst = max(worst, rel)
    assert worst < 1e-9, f"worst Euler relative gap {worst:.3e}"


def test_contiguous_relation_battery(rng):
    # (c-a) F(a-1) + (2a - c + (b-a) z) F(a) + a (z-1) F(a+1) = 0
    draws = _euler_draws(rng, 1000)
    worst = 0.0
    for a, b, c, z in draws:
        fm = f21(a - 1, b, c, z)
        f0 = f21(a, b, c, z)
        fp = f21(a + 1, b, c, z)
        resid = (c - a) * fm + (2 * a - c + (b - a) * z) * f0 + a * (z - 1) * fp
        scale = max(abs((c - a) * fm), abs(f0), abs(a * (z - 1) * fp), 1e-300)
        worst = max(worst, abs(resid) / scale)
    assert worst < 1e-9, f"worst contiguous relative residual {worst:.3e}"


# ---------------------------------------------------------------------------
# error paths
# ---------------------------------------------------------------------------
def test_c_pole_raises():
    with pytest.raises(CPoleError):
        f21(0.5, 1.7, -2.0, 0.3)


def test_c_pole_after_termination_raises():
    # a = -7 terminates at degree 7, but the c = -3 pole hits at n = 3 first
    with pytest.raises(CPoleError):
        f21(-7.0, 1.1, -3.0, 0.4)


def test_no_convergence_on_unit_circle_vertex():
    # z = e^{i pi/3}: all four mapped arguments have modulus 1,
    # and Re(c-a-b) < 0 rules the boundary sum out
    z = cmath.exp(1j * math.pi / 3.0)
    with pytest.raises(NoConvergence):
        f21(1.2, 1.3, 1.0, z)


def test_divergent_gauss_sum_raises():
    # z = 1 with Re(c-a-b) <= 0 diverges
    with pytest.raises(NoConvergence):
        f21(1.0, 1.5, 2.0, 1.0)


# ---------------------------------------------------------------------------
# arbitrary-precision cross-check (test-only oracle)
# ---------------------------------------------------------------------------
@pytest.mark.skipif(not HAVE_MPMATH, reason="mpmath not installed")
def test_against_arbitrary_precision(rng):
    mpmath.mp.dps = 30
    checked = 0
    worst = 0.0
    while checked < 150:
        z = random_disk(rng, 1, 0.9)[0]
        if abs(z - 1.0) < 0.15:
            continue
        a, b = random_complex(rng, 2, re_lo=-2, re_hi=2, im_lo=-2, im_hi=2)
        c = complex(rng.uniform(0.4, 3.0), rng.uniform(-2, 2))
        got = f21(a, b, c, z)
        want = complex(mpmath.hyp2f1(a, b, c, z))
        rel = abs(got - want) / max(1.0, abs(want))
        worst = max(worst, rel)
        checked += 1
    assert worst < 1e-9, f"worst gap vs mpmath {worst:.3e}"


@pytest.mark.skipif(not HAVE_MPMATH, reason="mpmath not installed")
def test_production_argument_range_vs_mpmath(rng):
    # the matcher evaluates at z = -q with exponent-shaped parameters:
    # sample that exact pattern including q > 1 (non-series regime)
    mpmath.mp.dps = 30
    worst = 0.0
    for _ in range(60):
        q = rng.uniform(0.3, 5.0)
        k = rng.uniform(0.05, 3.0)
        alpha = rng.uniform(0.5, 3.0)
        mu = 1j * k / (2 * alpha)
        nu = 0.5 - 0.5 * cmath.sqrt(complex(1.0 - rng.uniform(0.0, 200.0), 0.0))
        a, b, c = mu + nu + mu, mu + nu - mu, 1 + 2 * mu
        got = f21(a, b, c, -q)
        want = complex(mpmath.hyp2f1(a, b, c, -q))
        rel = abs(got - want) / max(1.0, abs(want))
        worst = max(worst, rel)
    assert worst < 1e-9, f"worst matcher-pattern gap vs mpmath {worst:.3e}"
