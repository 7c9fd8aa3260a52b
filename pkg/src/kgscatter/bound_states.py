# bound_states.py
"""Discrete spectrum of the attractive deformed hyperbolic well.

For |E| < m the wave equation

    psi'' + [E^2 - m^2 - 2 (E + m) V(x)] psi = 0,
    V(x) = -(V0/2) e^{-2 alpha |x|} / (1 + q e^{-2 alpha |x|})^2

has normalizable solutions only at discrete energies.  On each half-line
the decaying solution is the single hypergeometric basis term whose
exponent kappa/(2 alpha) > 0 multiplies the vanishing variable
w = q e^{-2 alpha |x|}, with

    kappa = sqrt(m^2 - E^2),   mu1 = delta1 = kappa / (2 alpha),
    nu1 = 1/2 - 1/2 sqrt(1 + (E + m) V0 / (alpha^2 q))

(the nu1 radicand carries the coefficient obtained by substituting the
well coupling into the ODE and re-deriving; the principal square root with
the minus branch).  A bound state exists exactly when the left and right
decaying solutions are linearly dependent at the origin, i.e. when their
Wronskian W = psi_L(0) psi_R'(0) - psi_L'(0) psi_R(0) vanishes.  The
residual is W normalized by max(1, |psi_L(0) psi_R(0)|) to tame overall
scale; roots in E are bracketed on a grid and refined by bisection.
"""

import cmath
import logging
import math
from dataclasses import dataclass
from typing import List, Optional, Tuple

import numpy as np

from . import _kernels, ode_oracle
from .errors import OutOfWell, RootLost
from .hyp2f1 import _status_raise
from .potential import WellParams

__all__ = [
    "BoundDiagnostics",
    "BoundKinematics",
    "BoundStateResult",
    "bound_kinematics",
    "quantization_residual",
    "find_bound_states",
    "nonrelativistic_map",
]

logger = logging.getLogger(__name__)

_SCAN_EPS_FRAC = 1e-6      # grid stays this fraction of m away from +-m
_BISECT_TOL_FRAC = 1e-10   # bisection width target, fraction of m
_PAIR_TOL_FRAC = 1e-6      # analytic/oracle pairing tolerance, fraction of m


@dataclass(frozen=True)
class BoundDiagnostics:
    """Intermediates of the hypergeometric reduction (diagnostic only).

    beta1 = beta3 = (E^2 - m^2) / (4 alpha^2)
    beta2 = -((E^2 - m^2) + V0 (E + m) / (2 q)) / (2 alpha^2)
    """

    beta1: float
    beta2: float
    beta3: float


@dataclass(frozen=True)
class BoundKinematics:
    """Exponent set of the decaying solutions at energy E, |E| < m.

    mu1 = delta1 = kappa/(2 alpha) is the exponent of the branch kept on
    each side (positive real part, so psi ~ e^{-kappa |x|} at infinity);
    nu1 is on the minus branch of its square root.
    """

    energy: float
    kappa: float
    mu1: complex
    nu1: complex
    delta1: complex
    diagnostics: BoundDiagnostics


@dataclass(frozen=True)
class BoundStateResult:
    """Sorted bound-state energies with per-root bookkeeping.

    energies strictly increasing in (-m, m); residuals are the quantization
    residual at each accepted root; node_counts come from the shooting
    oracle when cross-validation is on, else from spectral ordering; lost
    records brackets whose refinement failed (scan continues past them).
    """

    energies: List[float]
    residuals: List[float]
    node_counts: List[int]
    lost: List[Tuple[float, float]]


def bound_kinematics(E: float, w: WellParams) -> BoundKinematics:
    """Exponents and diagnostics for a candidate bound energy |E| < m."""
    m = w.mass
    if not (abs(E) < m):
        raise OutOfWell(f"bound states need |E| < m, got E={E}, m={m}")
    kappa = math.sqrt(m * m - E * E)
    alpha = w.alpha
    mu1 = complex(kappa / (2.0 * alpha), 0.0)
    rad = complex(1.0 + (E + m) * w.v0 / (alpha * alpha * w.q), 0.0)
    nu1 = 0.5 - 0.5 * cmath.sqrt(rad)
    a2 = alpha * alpha
    b1 = (E * E - m * m) / (4.0 * a2)
    b2 = -((E * E - m * m) + w.v0 * (E + m) / (2.0 * w.q)) / (2.0 * a2)
    diag = BoundDiagnostics(beta1=b1, beta2=b2, beta3=b1)
    return BoundKinematics(
        energy=E, kappa=kappa, mu1=mu1, nu1=nu1, delta1=mu1, diagnostics=diag
    )


def quantization_residual(E: float, w: WellParams) -> float:
    """Normalized Wronskian of the two decaying solutions at x = 0.

    Real-valued for real parameters; its roots in E are the bound-state
    energies.
    """
    m = w.mass
    if not (abs(E) < m):
        raise OutOfWell(f"bound states need |E| < m, got E={E}, m={m}")
    res, status = _kernels.bound_residual_kernel(
        float(E), float(m), float(w.v0), float(w.q), float(w.alpha)
    )
    if status != _kernels.OK:
        _status_raise(status, f"quantization_residual(E={E})")
    return res


def _bisect(w: WellParams, lo: float, hi: float, flo: float) -> Optional[float]:
    tol = _BISECT_TOL_FRAC * w.mass
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        if hi - lo < tol:
            return mid
        fmid = quantization_residual(mid, w)
        if fmid == 0.0:
            return mid
        if (flo < 0) != (fmid < 0):
            hi = mid
        else:
            lo = mid
            flo = fmid
    return None


def find_bound_states(
    w: WellParams, grid_n: int = 512, cross_validate: bool = True
) -> BoundStateResult:
    """Scan, bracket, and bisect the quantization residual over (-m, m).

    The grid keeps 1e-6*m clear of the endpoints; each sign change is
    refined to |dE| < 1e-10*m.  With cross_validate on, every root is
    paired against the direct shooting integration and annotated with the
    oracle's node count; unpaired roots are logged.  Failed refinements
    raise nothing: they are logged, recorded in .lost, and the scan
    continues.
    """
    if grid_n < 64:
        raise ValueError(f"grid_n must be >= 64, got {grid_n}")
    m = w.mass
    if w.v0 == 0.0:
        return BoundStateResult(energies=[], residuals=[], node_counts=[], lost=[])
    eps = _SCAN_EPS_FRAC * m
    grid = np.linspace(-m + eps, m - eps, int(grid_n))
    vals = np.array([quantization_residual(float(e), w) for e in grid])

    roots: List[float] = []
    lost: List[Tuple[float, float]] = []
    for i in range(len(grid) - 1):
        flo, fhi = vals[i], vals[i + 1]
        if flo == 0.0:
            roots.append(float(grid[i]))
            continue
        if (flo < 0) == (fhi < 0):
            continue
        try:
            root = _bisect(w, float(grid[i]), float(grid[i + 1]), float(flo))
        except Exception as exc:  # residual evaluation failed mid-refinement
            logger.warning("bracket [%g, %g] lost: %s", grid[i], grid[i + 1], exc)
            root = None
        if root is None:
            lost.append((float(grid[i]), float(grid[i + 1])))
            logger.warning(
                "RootLost: bracket [%g, %g] failed to converge", grid[i], grid[i + 1]
            )
            continue
        roots.append(root)
    if vals[-1] == 0.0:
        roots.append(float(grid[-1]))

    roots.sort()
    residuals = [quantization_residual(e, w) for e in roots]

    if cross_validate and roots:
        o_energies, o_nodes = ode_oracle.find_bound_states_numeric(w, grid_n=grid_n)
        pair_tol = _PAIR_TOL_FRAC * m
        node_counts = []
        for idx, e in enumerate(roots):
            if o_energies:
                j = int(np.argmin([abs(e - oe) for oe in o_energies]))
                if abs(e - o_energies[j]) < pair_tol:
                    node_counts.append(int(o_nodes[j]))
                    continue
            logger.warning("root E=%g has no oracle partner within %g", e, pair_tol)
            node_counts.append(idx)
        if len(o_energies) != len(roots):
            logger.warning(
                "root count mismatch: analytic %d vs oracle %d",
                len(roots),
                len(o_energies),
            )
    else:
        # one-dimensional spectra are ordered by node count
        node_counts = list(range(len(roots)))

    return BoundStateResult(
        energies=roots, residuals=residuals, node_counts=node_counts, lost=lost
    )


def nonrelativistic_map(E: float, m: float) -> Tuple[float, float]:
    """The substitution pair (E - m, E + m) for the nonrelativistic
    cross-reference of the cusp limit; diagnostic only."""
    return (E - m, E + m)
