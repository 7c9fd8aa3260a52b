# _kernels.py
"""Compiled numerical core.

Every hot loop lives here as a scalar-math kernel decorated through the
_jit shim, so the same code runs under numba @njit (default) or as plain
Python when KGSCATTER_NUMBA disables compilation.  Kernels signal failure
through integer status codes; the public wrapper modules translate them
into the typed exceptions of kgscatter.errors.

Contents
--------
- complex log-gamma (Lanczos, 15 terms, g = 607/128, reflection for
  Re z < 1/2)
- Gauss hypergeometric 2F1 for complex parameters and argument:
  direct series for |z| <= 1/2, else the linear transformation
  (z/(z-1), 1-z, or 1/z) minimizing the mapped modulus; integer parameter
  degeneracies of the 1-z and 1/z formulas handled by averaging two
  evaluations perturbed +-1e-7 along the imaginary axis
- the potential profile g*t/(1+q*t)^2, t = exp(-2*alpha*|x|)
- fundamental-solution evaluation (value and x-derivative) on either
  half-line and the 2x2 origin matching for scattering amplitudes
- the bound-state Wronskian residual
- adaptive Dormand-Prince 4(5) integrators: complex plane-wave
  back-integration for scattering, real two-sided shooting with per-step
  renormalization and node counting for bound states
"""

import cmath
import math

import numpy as np

from ._jit import njit

# ---------------------------------------------------------------------------
# status codes (kernels cannot raise rich exceptions)
# ---------------------------------------------------------------------------
OK = 0
ERR_NO_CONVERGENCE = 1
ERR_C_POLE = 2
ERR_DEGENERATE = 3
ERR_STEP_LIMIT = 4
ERR_BOX_SMALL = 5
ERR_OVERFLOW = 6
ERR_SINGULAR = 7

_SERIES_TOL = 1e-14
_SERIES_MAX_TERMS = 5000
_DEGEN_TOL = 1e-3          # distance to an integer that flags a gamma
                           # transform as ill-conditioned (two O(1/d) terms
                           # cancel to O(1): noise grows like 1e-13/d)
_DEGEN_EPS = 1e-3          # imaginary perturbation for the cornered cases;
                           # Richardson over eps and eps/2 cancels the
                           # O(eps^2) truncation, leaving O(1e-13/eps) noise
_FALLBACK_MAX = 0.98       # largest series modulus accepted as a degeneracy
                           # fallback (0.98^n reaches 1e-16 within the cap)
_SINGULAR_DET = 1e-13

# internal branch/degeneracy markers
_DEG_ONEMZ = 101           # c-a-b near an integer in the 1-z formula
_DEG_INV = 102             # b-a near an integer in the 1/z formula

# ---------------------------------------------------------------------------
# complex log-gamma: Lanczos approximation, g = 607/128, 15 coefficients
# ---------------------------------------------------------------------------
_LANCZOS_G = 607.0 / 128.0
_LANCZOS_COEF = np.array([
    0.99999999999999709182,
    57.156235665862923517,
    -59.597960355475491248,
    14.136097974741747174,
    -0.49191381609762019978,
    0.33994649984811888699e-4,
    0.46523628927048575665e-4,
    -0.98374475304879564677e-4,
    0.15808870322491248884e-3,
    -0.21026444172410488319e-3,
    0.21743961811521264320e-3,
    -0.16431810653676389022e-3,
    0.84418223983852743293e-4,
    -0.26190838401581408670e-4,
    0.36899182659531622704e-5,
])
_HALF_LOG_TWO_PI = 0.91893853320467274178


@njit(cache=True, nogil=True)
def _lgamma_right(z):
    # valid for Re z >= 0.5
    zz = z - 1.0
    s = complex(_LANCZOS_COEF[0], 0.0)
    for k in range(1, 15):
        s += _LANCZOS_COEF[k] / (zz + k)
    t = zz + _LANCZOS_G + 0.5
    return _HALF_LOG_TWO_PI + (zz + 0.5) * cmath.log(t) - t + cmath.log(s)


@njit(cache=True, nogil=True)
def _sinpi(z):
    # sin(pi z) with argument reduction to the nearest integer; the naive
    # form loses all relative accuracy for z within ~1e-6 of a negative
    # integer (ulp of pi*z swamps the tiny result)
    m = math.floor(z.real + 0.5)
    r = complex(z.real - m, z.imag)
    s = cmath.sin(math.pi * r)
    if int(m) % 2 != 0:
        return -s
    return s


@njit(cache=True, nogil=True)
def lgamma_c(z):
    """log Gamma(z), principal branch up to 2*pi*i on the reflected half
    plane (every consumer exponentiates sums of these)."""
    if z.real >= 0.5:
        return _lgamma_right(z)
    # reflection: Gamma(z) Gamma(1-z) = pi / sin(pi z)
    return (
        complex(1.1447298858494001741, 0.0)  # log(pi)
        - cmath.log(_sinpi(z))
        - _lgamma_right(1.0 - z)
    )


@njit(cache=True, nogil=True)
def _is_nonpos_int(z, tol):
    if abs(z.imag) > tol:
        return False
    n = math.floor(z.real + 0.5)
    return n <= 0.0 and abs(z.real - n) <= tol


@njit(cache=True, nogil=True)
def _is_exact_nonpos_int(z):
    if z.imag != 0.0:
        return False
    n = math.floor(z.real + 0.5)
    return n <= 0.0 and z.real == n


@njit(cache=True, nogil=True)
def _near_int(z, tol):
    if abs(z.imag) > tol:
        return False
    n = math.floor(z.real + 0.5)
    return abs(z.real - n) <= tol


@njit(cache=True, nogil=True)
def _rgamma(z):
    # 1/Gamma(z); exactly zero at the poles
    if _is_nonpos_int(z, 1e-300):
        return complex(0.0, 0.0)
    return cmath.exp(-lgamma_c(z))


# ---------------------------------------------------------------------------
# 2F1 direct series
# ---------------------------------------------------------------------------
@njit(cache=True, nogil=True)
def _series_2f1(a, b, c, z):
    term = complex(1.0, 0.0)
    total = complex(1.0, 0.0)
    small = 0
    for n in range(_SERIES_MAX_TERMS):
        an = a + n
        bn = b + n
        if (an.real == 0.0 and an.imag == 0.0) or (bn.real == 0.0 and bn.imag == 0.0):
            return total, OK  # series terminated exactly
        cn = c + n
        if abs(cn) < 1e-290:
            return total, ERR_C_POLE
        term = term * an * bn / (cn * (n + 1.0)) * z
        total += term
        if not (math.isfinite(total.real) and math.isfinite(total.imag)):
            return total, ERR_NO_CONVERGENCE
        if abs(term) <= _SERIES_TOL * abs(total):
            small += 1
            if small >= 2:
                return total, OK
        else:
            small = 0
    return total, ERR_NO_CONVERGENCE


# ---------------------------------------------------------------------------
# 2F1 transformation branches
# ---------------------------------------------------------------------------
@njit(cache=True, nogil=True)
def _eval_branch(branch, a, b, c, z):
    if branch == 0:
        return _series_2f1(a, b, c, z)

    if branch == 1:
        # Pfaff: F(a,b;c;z) = (1-z)^(-a) F(a, c-b; c; z/(z-1))
        zp = z / (z - 1.0)
        v, st = _series_2f1(a, c - b, c, zp)
        return cmath.exp(-a * cmath.log(1.0 - z)) * v, st

    if branch == 2:
        # 1-z connection formula; breaks down when s = c-a-b is an integer
        u = 1.0 - z
        s = c - a - b
        if _is_nonpos_int(s, 1e-12) or _is_nonpos_int(-s, 1e-12) or _near_int(s, 1e-12):
            return complex(0.0, 0.0), ERR_DEGENERATE
        v1, st1 = _series_2f1(a, b, a + b - c + 1.0, u)
        if st1 != OK:
            return complex(0.0, 0.0), st1
        v2, st2 = _series_2f1(c - a, c - b, s + 1.0, u)
        if st2 != OK:
            return complex(0.0, 0.0), st2
        coef1 = cmath.exp(lgamma_c(c) + lgamma_c(s)) * _rgamma(c - a) * _rgamma(c - b)
        coef2 = (
            cmath.exp(lgamma_c(c) + lgamma_c(-s) + s * cmath.log(u))
            * _rgamma(a)
            * _rgamma(b)
        )
        return coef1 * v1 + coef2 * v2, OK

    # branch == 3: 1/z connection formula; breaks down when d = b-a is an integer
    w = 1.0 / z
    d = b - a
    if _near_int(d, 1e-12):
        return complex(0.0, 0.0), ERR_DEGENERATE
    v1, st1 = _series_2f1(a, a - c + 1.0, 1.0 - d, w)
    if st1 != OK:
        return complex(0.0, 0.0), st1
    v2, st2 = _series_2f1(b, b - c + 1.0, 1.0 + d, w)
    if st2 != OK:
        return complex(0.0, 0.0), st2
    coef1 = (
        cmath.exp(lgamma_c(c) + lgamma_c(d) - a * cmath.log(-z))
        * _rgamma(b)
        * _rgamma(c - a)
    )
    coef2 = (
        cmath.exp(lgamma_c(c) + lgamma_c(-d) - b * cmath.log(-z))
        * _rgamma(a)
        * _rgamma(c - b)
    )
    return coef1 * v1 + coef2 * v2, OK


@njit(cache=True, nogil=True)
def hyp2f1_kernel(a, b, c, z):
    """2F1(a,b;c;z) on the principal branch.  Returns (value, status)."""
    # canonical (a,b) ordering makes a<->b symmetry bit-for-bit exact
    if (b.real < a.real) or (b.real == a.real and b.imag < a.imag):
        a, b = b, a

    if z.real == 0.0 and z.imag == 0.0:
        return complex(1.0, 0.0), OK
    if b == c:
        return cmath.exp(-a * cmath.log(1.0 - z)), OK
    if a == c:
        return cmath.exp(-b * cmath.log(1.0 - z)), OK

    a_term = _is_exact_nonpos_int(a)
    b_term = _is_exact_nonpos_int(b)
    if a_term or b_term:
        # polynomial case: the direct sum terminates (or hits the c pole
        # first, which the series reports)
        return _series_2f1(a, b, c, z)
    if _is_nonpos_int(c, 1e-12):
        return complex(0.0, 0.0), ERR_C_POLE

    if z.real == 1.0 and z.imag == 0.0:
        s = c - a - b
        if s.real <= 0.0:
            return complex(0.0, 0.0), ERR_NO_CONVERGENCE
        val = cmath.exp(lgamma_c(c) + lgamma_c(s)) * _rgamma(c - a) * _rgamma(c - b)
        return val, OK

    az = abs(z)
    if az <= 0.5:
        return _eval_branch(0, a, b, c, z)

    # pick the transformation with the smallest mapped argument; gamma-free
    # maps (Pfaff, identity) win ties
    m_pf = abs(z / (z - 1.0))
    m_id = az
    m_om = abs(1.0 - z)
    m_iv = 1.0 / az
    if z.real < 0.0 and m_pf <= 0.9:
        # negative axis: Pfaff maps to (0,1) where the terms keep one sign;
        # the smaller-modulus 1/z map alternates and cancels for the large
        # imaginary parameters the matcher produces
        return _eval_branch(1, a, b, c, z)
    branch = 1
    best = m_pf
    if m_id < best:
        branch = 0
        best = m_id
    if m_om < best:
        branch = 2
        best = m_om
    if m_iv < best:
        branch = 3
        best = m_iv

    deg2 = branch == 2 and _near_int(c - a - b, _DEGEN_TOL)
    deg3 = branch == 3 and _near_int(b - a, _DEGEN_TOL)
    if deg2 or deg3:
        # the two-term connection formulas cancel catastrophically near an
        # integer parameter difference (each term ~1/d); reroute to a
        # gamma-free series whenever one converges
        if m_pf <= _FALLBACK_MAX:
            return _eval_branch(1, a, b, c, z)
        if m_id <= _FALLBACK_MAX:
            return _eval_branch(0, a, b, c, z)
        if deg2 and m_iv <= _FALLBACK_MAX and not _near_int(b - a, _DEGEN_TOL):
            return _eval_branch(3, a, b, c, z)
        if deg3 and m_om <= _FALLBACK_MAX and not _near_int(c - a - b, _DEGEN_TOL):
            return _eval_branch(2, a, b, c, z)
        # cornered near the unit circle: average conjugate perturbations
        # (the pole term is odd in the shift, so each pair average is good
        # to O(eps^2)), then Richardson the eps and eps/2 pairs
        e1 = complex(0.0, _DEGEN_EPS)
        e2 = complex(0.0, 0.5 * _DEGEN_EPS)
        if deg2:
            v1, s1 = _eval_branch(2, a, b, c + e1, z)
            v2, s2 = _eval_branch(2, a, b, c - e1, z)
            v3, s3 = _eval_branch(2, a, b, c + e2, z)
            v4, s4 = _eval_branch(2, a, b, c - e2, z)
        else:
            v1, s1 = _eval_branch(3, a + e1, b, c, z)
            v2, s2 = _eval_branch(3, a - e1, b, c, z)
            v3, s3 = _eval_branch(3, a + e2, b, c, z)
            v4, s4 = _eval_branch(3, a - e2, b, c, z)
        if s1 == OK and s2 == OK and s3 == OK and s4 == OK:
            return (2.0 * (v3 + v4) - 0.5 * (v1 + v2)) / 3.0, OK
        return complex(0.0, 0.0), ERR_DEGENERATE
    return _eval_branch(branch, a, b, c, z)


# ---------------------------------------------------------------------------
# potential profile
# ---------------------------------------------------------------------------
@njit(cache=True, nogil=True)
def potential_value(g, q, alpha, x):
    # g = 4*lam*(lam-1) for the barrier form, -v0/2 for the well remap
    t = math.exp(-2.0 * alpha * abs(x))
    r = 1.0 + q * t
    return g * t / (r * r)


# ---------------------------------------------------------------------------
# fundamental solutions and origin matching
# ---------------------------------------------------------------------------
@njit(cache=True, nogil=True)
def basis_at(s, nu, delta, q, alpha, x, left):
    """One fundamental solution w^s (1+w)^nu 2F1(a,b;c;-w) and d/dx.

    w = q e^{2 alpha x} on the left half-line, q e^{-2 alpha x} on the
    right.  The prefactor uses the modulus-only power w^s = exp(s ln w):
    with s imaginary this keeps the asymptotic plane waves unimodular, so
    the squared amplitude ratios are flux ratios.  Returns
    (value, derivative, status).
    """
    if left:
        w = q * math.exp(2.0 * alpha * x)
    else:
        w = q * math.exp(-2.0 * alpha * x)
    z = complex(-w, 0.0)
    a = s + nu + delta
    b = s + nu - delta
    c = 1.0 + 2.0 * s
    fv, st = hyp2f1_kernel(a, b, c, z)
    if st != OK:
        return complex(0.0, 0.0), complex(0.0, 0.0), st
    fd, st2 = hyp2f1_kernel(a + 1.0, b + 1.0, c + 1.0, z)
    if st2 != OK:
        return complex(0.0, 0.0), complex(0.0, 0.0), st2
    fd = (a * b / c) * fd
    pref = cmath.exp(s * math.log(w) + nu * math.log1p(w))
    val = pref * fv
    # d/dx [w^s (1+w)^nu F(-w)] with dw/dx = +-2 alpha w
    bracket = s * fv + nu * (w / (1.0 + w)) * fv - w * fd
    der = 2.0 * alpha * pref * bracket
    if not left:
        der = -der
    return val, der, OK


@njit(cache=True, nogil=True)
def scatter_matching_kernel(E, m, g, q, alpha):
    """Match the closed-form solutions at x=0 for unit incident amplitude.

    Returns (B, D, R, T, defect, |det|, status): B and D are the reflected
    and transmitted amplitudes, R = |B|^2, T = |D|^2.
    """
    zero = complex(0.0, 0.0)
    k = math.sqrt(E * E - m * m)
    mu = complex(0.0, k / (2.0 * alpha))
    delta = mu
    rad = complex(1.0 - 2.0 * g * (E + m) / (alpha * alpha * q), 0.0)
    nu = 0.5 - 0.5 * cmath.sqrt(rad)

    pv, pd, st = basis_at(mu, nu, delta, q, alpha, 0.0, True)
    if st != OK:
        return zero, zero, 0.0, 0.0, 0.0, 0.0, st
    mv, md, st = basis_at(-mu, nu, delta, q, alpha, 0.0, True)
    if st != OK:
        return zero, zero, 0.0, 0.0, 0.0, 0.0, st
    rv, rd, st = basis_at(-mu, nu, delta, q, alpha, 0.0, False)
    if st != OK:
        return zero, zero, 0.0, 0.0, 0.0, 0.0, st

    # A=1, C=0:  B*mv - D*rv = -pv ;  B*md - D*rd = -pd
    det = rv * md - mv * rd
    absdet = abs(det)
    if absdet < _SINGULAR_DET:
        return zero, zero, 0.0, 0.0, 0.0, absdet, ERR_SINGULAR
    B = (pv * rd - rv * pd) / det
    D = (pv * md - mv * pd) / det
    R = abs(B) ** 2
    T = abs(D) ** 2
    defect = abs(R + T - 1.0)
    return B, D, R, T, defect, absdet, OK


@njit(cache=True, nogil=True)
def bound_residual_kernel(E, m, v0, q, alpha):
    """Wronskian of the two decaying solutions at x=0, normalized.

    Real for real parameters; roots in E are the bound-state energies.
    Returns (residual, status).
    """
    kappa = math.sqrt(m * m - E * E)
    # decaying branch on each side: the kept exponent is +kappa/(2 alpha),
    # so psi ~ e^{-kappa |x|} at both infinities
    mu1 = complex(kappa / (2.0 * alpha), 0.0)
    delta1 = mu1
    rad = complex(1.0 + (E + m) * v0 / (alpha * alpha * q), 0.0)
    nu1 = 0.5 - 0.5 * cmath.sqrt(rad)

    lv, ld, st = basis_at(mu1, nu1, delta1, q, alpha, 0.0, True)
    if st != OK:
        return 0.0, st
    rv, rd, st = basis_at(mu1, nu1, delta1, q, alpha, 0.0, False)
    if st != OK:
        return 0.0, st
    wr = lv * rd - ld * rv
    norm = max(1.0, abs(lv * rv))
    return wr.real / norm, OK


# ---------------------------------------------------------------------------
# Dormand-Prince 4(5) coefficients
# ---------------------------------------------------------------------------
_A21 = 1.0 / 5.0
_A31 = 3.0 / 40.0
_A32 = 9.0 / 40.0
_A41 = 44.0 / 45.0
_A42 = -56.0 / 15.0
_A43 = 32.0 / 9.0
_A51 = 19372.0 / 6561.0
_A52 = -25360.0 / 2187.0
_A53 = 64448.0 / 6561.0
_A54 = -212.0 / 729.0
_A61 = 9017.0 / 3168.0
_A62 = -355.0 / 33.0
_A63 = 46732.0 / 5247.0
_A64 = 49.0 / 176.0
_A65 = -5103.0 / 18656.0
_B1 = 35.0 / 384.0
_B3 = 500.0 / 1113.0
_B4 = 125.0 / 192.0
_B5 = -2187.0 / 6784.0
_B6 = 11.0 / 84.0
_C2 = 1.0 / 5.0
_C3 = 3.0 / 10.0
_C4 = 4.0 / 5.0
_C5 = 8.0 / 9.0
# error weights: 5th-order minus embedded 4th-order
_E1 = 71.0 / 57600.0
_E3 = -71.0 / 16695.0
_E4 = 71.0 / 1920.0
_E5 = -17253.0 / 339200.0
_E6 = 22.0 / 525.0
_E7 = -1.0 / 40.0


@njit(cache=True, nogil=True)
def _wave_coeff(E, m, g, q, alpha, x):
    # psi'' = w(x) psi  with  w = 2 (E+m) V(x) - (E^2 - m^2)
    return 2.0 * (E + m) * potential_value(g, q, alpha, x) - (E * E - m * m)


@njit(cache=True, nogil=True)
def oracle_scatter_kernel(E, m, g, q, alpha, L, rtol, atol, max_steps):
    """Direct integration reference for (R, T).

    Starts a pure transmitted wave e^{ikx} at x=+L, integrates to x=-L,
    and reads the incident/reflected amplitudes off the free solution:
    a+ = (psi + psi'/(ik)) e^{-ikx}/2, a- = (psi - psi'/(ik)) e^{ikx}/2.
    The decomposition is re-checked at x = -L + 1/alpha; drift beyond 1e-8
    flags the box as too small.  Returns (R, T, drift, status).
    """
    k = math.sqrt(E * E - m * m)
    ik = complex(0.0, k)

    x = L
    y1 = cmath.exp(ik * L)
    y2 = ik * y1
    f11 = y2
    f12 = _wave_coeff(E, m, g, q, alpha, x) * y1

    h = -min(0.05 * L, 0.1 / max(k, 0.1))
    steps = 0
    r1 = 0.0
    t1 = 0.0

    for phase in range(2):
        if phase == 0:
            target = -L + 1.0 / alpha
        else:
            target = -L
        while x > target:
            if steps >= max_steps:
                return 0.0, 0.0, 0.0, ERR_STEP_LIMIT
            steps += 1
            final = False
            if x + h <= target:
                h = target - x
                final = True
            # stages (FSAL: f1 carried over)
            u1 = y1 + h * _A21 * f11
            u2 = y2 + h * _A21 * f12
            f21 = u2
            f22 = _wave_coeff(E, m, g, q, alpha, x + _C2 * h) * u1
            u1 = y1 + h * (_A31 * f11 + _A32 * f21)
            u2 = y2 + h * (_A31 * f12 + _A32 * f22)
            f31 = u2
            f32 = _wave_coeff(E, m, g, q, alpha, x + _C3 * h) * u1
            u1 = y1 + h * (_A41 * f11 + _A42 * f21 + _A43 * f31)
            u2 = y2 + h * (_A41 * f12 + _A42 * f22 + _A43 * f32)
            f41 = u2
            f42 = _wave_coeff(E, m, g, q, alpha, x + _C4 * h) * u1
            u1 = y1 + h * (_A51 * f11 + _A52 * f21 + _A53 * f31 + _A54 * f41)
            u2 = y2 + h * (_A51 * f12 + _A52 * f22 + _A53 * f32 + _A54 * f42)
            f51 = u2
            f52 = _wave_coeff(E, m, g, q, alpha, x + _C5 * h) * u1
            u1 = y1 + h * (_A61 * f11 + _A62 * f21 + _A63 * f31 + _A64 * f41 + _A65 * f51)
            u2 = y2 + h * (_A61 * f12 + _A62 * f22 + _A63 * f32 + _A64 * f42 + _A65 * f52)
            f61 = u2
            f62 = _wave_coeff(E, m, g, q, alpha, x + h) * u1
            n1 = y1 + h * (_B1 * f11 + _B3 * f31 + _B4 * f41 + _B5 * f51 + _B6 * f61)
            n2 = y2 + h * (_B1 * f12 + _B3 * f32 + _B4 * f42 + _B5 * f52 + _B6 * f62)
            f71 = n2
            f72 = _wave_coeff(E, m, g, q, alpha, x + h) * n1

            e1 = h * (_E1 * f11 + _E3 * f31 + _E4 * f41 + _E5 * f51 + _E6 * f61 + _E7 * f71)
            e2 = h * (_E1 * f12 + _E3 * f32 + _E4 * f42 + _E5 * f52 + _E6 * f62 + _E7 * f72)
            sc1 = atol + rtol * max(abs(y1), abs(n1))
            sc2 = atol + rtol * max(abs(y2), abs(n2))
            err = math.sqrt(0.5 * ((abs(e1) / sc1) ** 2 + (abs(e2) / sc2) ** 2))

            if err <= 1.0:
                x = target if final else x + h
                y1 = n1
                y2 = n2
                f11 = f71
                f12 = f72
                if not (math.isfinite(y1.real) and math.isfinite(y1.imag)):
                    return 0.0, 0.0, 0.0, ERR_OVERFLOW
            if err == 0.0:
                fac = 5.0
            else:
                fac = 0.9 * err ** -0.2
                if fac < 0.2:
                    fac = 0.2
                elif fac > 5.0:
                    fac = 5.0
            h = h * fac
            if abs(h) < 1e-14 * max(1.0, abs(x)):
                return 0.0, 0.0, 0.0, ERR_STEP_LIMIT

        ap = 0.5 * (y1 + y2 / ik) * cmath.exp(-ik * x)
        am = 0.5 * (y1 - y2 / ik) * cmath.exp(ik * x)
        ap2 = abs(ap) ** 2
        if ap2 == 0.0:
            return 0.0, 0.0, 0.0, ERR_OVERFLOW
        if phase == 0:
            r1 = abs(am) ** 2 / ap2
            t1 = 1.0 / ap2
        else:
            r2 = abs(am) ** 2 / ap2
            t2 = 1.0 / ap2
            drift = max(abs(r1 - r2), abs(t1 - t2))
            status = OK
            if drift > 1e-8:
                status = ERR_BOX_SMALL
            return r2, t2, drift, status
    return 0.0, 0.0, 0.0, ERR_STEP_LIMIT  # unreachable


@njit(cache=True, nogil=True)
def oracle_shoot_kernel(E, m, v0, q, alpha, L, rtol, atol, max_steps):
    """Two-sided shooting for the bound problem.

    Integrates the decaying solution from each box edge to the origin with
    per-step renormalization (guards e^{kappa L} overflow) and counts the
    interior sign changes of psi on each side.  Returns
    (psiL, dpsiL, psiR, dpsiR, flips_left, flips_right,
     junction_sign_left, junction_sign_right, status):
    the psi values are the origin samples (arbitrary positive per-side
    scale), the junction signs are the signs of the last samples strictly
    before the origin.
    """
    kappa = math.sqrt(m * m - E * E)
    g = -0.5 * v0
    kk = kappa * kappa

    psi_out = np.zeros(4)
    flips = np.zeros(2, dtype=np.int64)
    jsign = np.zeros(2)
    steps = 0

    for side in range(2):
        if side == 0:
            x = -L
            y1 = 1.0
            y2 = kappa
        else:
            x = L
            y1 = 1.0
            y2 = -kappa
        f11 = y2
        f12 = (2.0 * (E + m) * potential_value(g, q, alpha, x) + kk) * y1
        h = min(0.05 * L, 0.5 / max(kappa, alpha))
        if side == 1:
            h = -h
        sign_prev = 1.0
        nflips = 0

        while (side == 0 and x < 0.0) or (side == 1 and x > 0.0):
            if steps >= max_steps:
                return psi_out[0], psi_out[1], psi_out[2], psi_out[3], 0, 0, 0.0, 0.0, ERR_STEP_LIMIT
            steps += 1
            final = False
            if side == 0 and x + h >= 0.0:
                h = -x
                final = True
            elif side == 1 and x + h <= 0.0:
                h = -x
                final = True
            u1 = y1 + h * _A21 * f11
            u2 = y2 + h * _A21 * f12
            f21 = u2
            f22 = (2.0 * (E + m) * potential_value(g, q, alpha, x + _C2 * h) + kk) * u1
            u1 = y1 + h * (_A31 * f11 + _A32 * f21)
            u2 = y2 + h * (_A31 * f12 + _A32 * f22)
            f31 = u2
            f32 = (2.0 * (E + m) * potential_value(g, q, alpha, x + _C3 * h) + kk) * u1
            u1 = y1 + h * (_A41 * f11 + _A42 * f21 + _A43 * f31)
            u2 = y2 + h * (_A41 * f12 + _A42 * f22 + _A43 * f32)
            f41 = u2
            f42 = (2.0 * (E + m) * potential_value(g, q, alpha, x + _C4 * h) + kk) * u1
            u1 = y1 + h * (_A51 * f11 + _A52 * f21 + _A53 * f31 + _A54 * f41)
            u2 = y2 + h * (_A51 * f12 + _A52 * f22 + _A53 * f32 + _A54 * f42)
            f51 = u2
            f52 = (2.0 * (E + m) * potential_value(g, q, alpha, x + _C5 * h) + kk) * u1
            u1 = y1 + h * (_A61 * f11 + _A62 * f21 + _A63 * f31 + _A64 * f41 + _A65 * f51)
            u2 = y2 + h * (_A61 * f12 + _A62 * f22 + _A63 * f32 + _A64 * f42 + _A65 * f52)
            f61 = u2
            f62 = (2.0 * (E + m) * potential_value(g, q, alpha, x + h) + kk) * u1
            n1 = y1 + h * (_B1 * f11 + _B3 * f31 + _B4 * f41 + _B5 * f51 + _B6 * f61)
            n2 = y2 + h * (_B1 * f12 + _B3 * f32 + _B4 * f42 + _B5 * f52 + _B6 * f62)
            f71 = n2
            f72 = (2.0 * (E + m) * potential_value(g, q, alpha, x + h) + kk) * n1

            e1 = h * (_E1 * f11 + _E3 * f31 + _E4 * f41 + _E5 * f51 + _E6 * f61 + _E7 * f71)
            e2 = h * (_E1 * f12 + _E3 * f32 + _E4 * f42 + _E5 * f52 + _E6 * f62 + _E7 * f72)
            sc1 = atol + rtol * max(abs(y1), abs(n1))
            sc2 = atol + rtol * max(abs(y2), abs(n2))
            err = math.sqrt(0.5 * ((e1 / sc1) ** 2 + (e2 / sc2) ** 2))

            if err <= 1.0:
                x = 0.0 if final else x + h
                y1 = n1
                y2 = n2
                f11 = f71
                f12 = f72
                if not (math.isfinite(y1) and math.isfinite(y2)):
                    return psi_out[0], psi_out[1], psi_out[2], psi_out[3], 0, 0, 0.0, 0.0, ERR_OVERFLOW
                if final:
                    jsign[side] = sign_prev
                    psi_out[2 * side] = y1
                    psi_out[2 * side + 1] = y2
                else:
                    s_new = 1.0 if y1 > 0.0 else (-1.0 if y1 < 0.0 else sign_prev)
                    if s_new * sign_prev < 0.0:
                        nflips += 1
                    sign_prev = s_new
                    mag = max(abs(y1), abs(y2))
                    if mag > 1e100:
                        y1 /= mag
                        y2 /= mag
                        f11 /= mag
                        f12 /= mag
            if err == 0.0:
                fac = 5.0
            else:
                fac = 0.9 * err ** -0.2
                if fac < 0.2:
                    fac = 0.2
                elif fac > 5.0:
                    fac = 5.0
            h = h * fac
            if abs(h) < 1e-14 * max(1.0, abs(x)):
                return psi_out[0], psi_out[1], psi_out[2], psi_out[3], 0, 0, 0.0, 0.0, ERR_STEP_LIMIT
        flips[side] = nflips

    return (
        psi_out[0], psi_out[1], psi_out[2], psi_out[3],
        flips[0], flips[1], jsign[0], jsign[1], OK,
    )
