# scattering.py
"""Closed-form scattering observables for the deformed hyperbolic barrier.

With equal scalar and vector coupling the relativistic wave equation for
psi reduces to

    psi'' + [E^2 - m^2 - 2 (E + m) V(x)] psi = 0        (hbar = c = 1)

On each half-line the substitution w = q e^{+-2 alpha x} turns this into
the hypergeometric equation, so the general solution is a pair of terms

    w^{+-mu} (1 + w)^{nu} 2F1(+-mu + nu + delta, +-mu + nu - delta;
                              1 +- 2 mu; -w)

with mu = delta = ik/(2 alpha), k = sqrt(E^2 - m^2), and

    nu = 1/2 - 1/2 sqrt(1 - 8 (E + m) lam (lam - 1) / (alpha^2 q))

(principal square root, minus branch).  Scattering boundary conditions fix
the coefficients: unit incident wave A = 1 from the left, no incoming wave
from the right C = 0.  Continuity of psi and psi' at x = 0 is a 2x2
complex linear system for the reflected amplitude B and transmitted
amplitude D, solved directly by evaluating the two sides at the origin
(never by transcribing printed closed-form tables).  R = |B|^2, T = |D|^2:
the asymptotic momenta on the two sides are equal, so the flux ratio is
the pure modulus-squared ratio.

Prefactors are computed as w^s = exp(s ln w) with w > 0, which keeps the
asymptotic plane waves unimodular; R and T are invariant under any global
rephasing of the basis, so only consistency between the two half-lines
matters.
"""

import cmath
import logging
import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import List, Sequence, Tuple

from . import _kernels
from .errors import KgscatterError, SingularMatching, SubBarrierEnergy
from .hyp2f1 import _status_raise
from .potential import PotentialParams

__all__ = [
    "KinematicsDiagnostics",
    "ScatterKinematics",
    "ScatteringResult",
    "WaveSample",
    "kinematics",
    "psi_left",
    "psi_right",
    "solve_matching",
    "current_density",
    "sweep",
]

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class KinematicsDiagnostics:
    """Intermediates of the hypergeometric reduction (diagnostic only).

    gamma1 = gamma3 = (E^2 - m^2) / (4 alpha^2)
    gamma2 = (2 / alpha^2) ((E + m) lam (lam - 1) / q + (m^2 - E^2) / 4)
    """

    gamma1: float
    gamma2: float
    gamma3: float


@dataclass(frozen=True)
class ScatterKinematics:
    """Exponent set of the scattering solutions at energy E.

    Attributes
    ----------
    energy : float
        E with E > m.
    k : float
        Momentum, k^2 = E^2 - m^2.
    mu, nu, delta : complex
        Exponents of the left-side solution; mu = delta = ik/(2 alpha),
        nu on the minus branch of the square root.
    diagnostics : KinematicsDiagnostics
        The gamma intermediates.

    The x > 0 exponent set (mu_tilde, nu_tilde, delta_tilde) equals the
    x < 0 set because the profile is even; exposed as properties.
    """

    energy: float
    k: float
    mu: complex
    nu: complex
    delta: complex
    diagnostics: KinematicsDiagnostics

    @property
    def mu_tilde(self) -> complex:
        return self.mu

    @property
    def nu_tilde(self) -> complex:
        return self.nu

    @property
    def delta_tilde(self) -> complex:
        return self.delta


@dataclass(frozen=True)
class ScatteringResult:
    """Amplitudes and coefficients from the origin matching.

    r_amp = B/A, t_amp = D/A, reflection = |B/A|^2, transmission = |D/A|^2,
    unitarity_defect = |R + T - 1| (recorded, asserted small in tests).
    """

    r_amp: complex
    t_amp: complex
    reflection: float
    transmission: float
    unitarity_defect: float


@dataclass(frozen=True)
class WaveSample:
    """Wavefunction value and derivative at one point."""

    x: float
    psi: complex
    dpsi: complex


def kinematics(E: float, p: PotentialParams) -> ScatterKinematics:
    """Exponents and diagnostics for a scattering state at energy E > m."""
    m = p.mass
    if not (E > m):
        raise SubBarrierEnergy(
            f"scattering needs E > m, got E={E}, m={m}; use bound_states below m"
        )
    k = math.sqrt(E * E - m * m)
    alpha = p.alpha
    mu = complex(0.0, k / (2.0 * alpha))
    rad = complex(1.0 - 8.0 * (E + m) * p.lam * (p.lam - 1.0) / (alpha**2 * p.q), 0.0)
    nu = 0.5 - 0.5 * cmath.sqrt(rad)
    a2 = alpha * alpha
    g1 = (E * E - m * m) / (4.0 * a2)
    g2 = (2.0 / a2) * ((E + m) * p.lam * (p.lam - 1.0) / p.q + (m * m - E * E) / 4.0)
    diag = KinematicsDiagnostics(gamma1=g1, gamma2=g2, gamma3=g1)
    return ScatterKinematics(energy=E, k=k, mu=mu, nu=nu, delta=mu, diagnostics=diag)


def _combine(kin, p, x, c_plus, c_minus, left):
    # sum of the +mu and -mu basis terms with given coefficients
    total_v = complex(0.0, 0.0)
    total_d = complex(0.0, 0.0)
    for coeff, s in ((c_plus, kin.mu), (c_minus, -kin.mu)):
        if coeff == 0:
            continue
        v, d, st = _kernels.basis_at(s, kin.nu, kin.delta, p.q, p.alpha, float(x), left)
        if st != _kernels.OK:
            _status_raise(st, f"basis_at(x={x}, left={left})")
        total_v += coeff * v
        total_d += coeff * d
    return total_v, total_d


def psi_left(
    kin: ScatterKinematics,
    p: PotentialParams,
    x: float,
    coeff_a: complex,
    coeff_b: complex,
) -> WaveSample:
    """Left-side solution A*(+mu term) + B*(-mu term) at x <= 0.

    The +mu term carries e^{+ikx} (right-moving: incident), the -mu term
    e^{-ikx} (reflected) as x -> -inf.
    """
    v, d = _combine(kin, p, x, coeff_a, coeff_b, True)
    return WaveSample(x=float(x), psi=v, dpsi=d)


def psi_right(
    kin: ScatterKinematics,
    p: PotentialParams,
    x: float,
    coeff_c: complex,
    coeff_d: complex,
) -> WaveSample:
    """Right-side solution C*(+mu term) + D*(-mu term) at x >= 0.

    In w = q e^{-2 alpha x} the +mu term carries e^{-ikx} (left-moving:
    incoming from +inf), the -mu term e^{+ikx} (transmitted) as x -> +inf.
    """
    v, d = _combine(kin, p, x, coeff_c, coeff_d, False)
    return WaveSample(x=float(x), psi=v, dpsi=d)


def solve_matching(E: float, p: PotentialParams) -> ScatteringResult:
    """Match psi and psi' at the origin for A=1, C=0; return amplitudes."""
    m = p.mass
    if not (E > m):
        raise SubBarrierEnergy(
            f"scattering needs E > m, got E={E}, m={m}; use bound_states below m"
        )
    g = 4.0 * p.lam * (p.lam - 1.0)
    B, D, R, T, defect, absdet, status = _kernels.scatter_matching_kernel(
        float(E), float(m), g, float(p.q), float(p.alpha)
    )
    if status == _kernels.ERR_SINGULAR:
        raise SingularMatching(f"matching determinant |det|={absdet:g} at E={E}")
    if status != _kernels.OK:
        _status_raise(status, f"solve_matching(E={E})")
    return ScatteringResult(
        r_amp=B, t_amp=D, reflection=R, transmission=T, unitarity_defect=defect
    )


def current_density(w: WaveSample, mass: float) -> float:
    """Probability current J = Im(conj(psi) * dpsi) / mass."""
    return ((w.psi.conjugate() * w.dpsi).imag) / mass


def _thread_count() -> int:
    raw = os.environ.get("KGSCATTER_THREADS", "1").strip()
    try:
        n = int(raw) if raw else 1
    except ValueError:
        n = 1
    return max(1, n)


def sweep(
    p: PotentialParams, e_grid: Sequence[float]
) -> List[Tuple[float, float, float, float]]:
    """Per-energy (E, R, T, defect) rows in grid order.

    Failed points (matching singularities, convergence failures, E <= m)
    are recorded as NaN rows and logged; the sweep continues.  Grid points
    are independent, so KGSCATTER_THREADS > 1 evaluates them concurrently
    with unchanged output ordering.
    """

    def one(E: float) -> Tuple[float, float, float, float]:
        try:
            res = solve_matching(E, p)
        except KgscatterError as exc:
            logger.warning("sweep point E=%s failed: %s", E, exc)
            return (float(E), math.nan, math.nan, math.nan)
        return (float(E), res.reflection, res.transmission, res.unitarity_defect)

    threads = _thread_count()
    if threads == 1:
        return [one(E) for E in e_grid]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(one, e_grid))
