# hyp2f1.py
"""Gauss hypergeometric function 2F1 and complex log-gamma.

Public face of the special-function substrate: every closed-form
wavefunction in this package is a combination of 2F1 values, and the
linear-transformation formulas that extend the series beyond |z| <= 1/2
need log Gamma for their connection coefficients.

Evaluation strategy (see _kernels for the implementation):
- direct power series for |z| <= 0.5, tolerance 1e-14 on successive
  partial sums, cap 5000 terms;
- otherwise the transformation among z -> z/(z-1), identity, 1 - z, 1/z
  whose mapped argument has the smallest modulus, which keeps every sum
  geometrically convergent (the production path evaluates at z = -q with
  q possibly > 1, so transformations are not optional);
- integer parameter differences make the 1-z and 1/z connection formulas
  degenerate; those are handled by averaging two evaluations perturbed
  +-1e-7 along the imaginary axis instead of implementing the
  logarithmic limit formulas, trading ~1e-8 accuracy for simplicity.
"""

import cmath
import math
from dataclasses import dataclass

from . import _kernels
from .errors import CPoleError, DegenerateTransform, NoConvergence, PoleError

__all__ = [
    "Hyp2F1Params",
    "log_gamma",
    "gauss_2f1",
    "gauss_2f1_derivative",
]


@dataclass(frozen=True)
class Hyp2F1Params:
    """Argument bundle for 2F1(a, b; c; z).

    Attributes
    ----------
    a, b : complex
        Numerator parameters (symmetric: swapping them is a no-op).
    c : complex
        Denominator parameter; must not be a non-positive integer unless
        the series terminates before the pole (a or b an exact
        non-positive integer of smaller magnitude).
    z : complex
        Argument, principal branch.
    """

    a: complex
    b: complex
    c: complex
    z: complex


def log_gamma(z: complex) -> complex:
    """Principal-branch log Gamma(z) for complex z.

    Lanczos approximation (g = 607/128, 15 terms) for Re z >= 1/2 and the
    sin-reflection formula otherwise.  The imaginary part on the reflected
    half-plane is consistent only modulo 2*pi; every consumer exponentiates
    sums of log_gamma values, which is branch-insensitive.
    """
    z = complex(z)
    if z.imag == 0.0 and z.real <= 0.0 and z.real == math.floor(z.real):
        raise PoleError(f"log_gamma pole at z={z}")
    out = _kernels.lgamma_c(z)
    if not (math.isfinite(out.real) and math.isfinite(out.imag)):
        raise PoleError(f"log_gamma overflow at z={z}")
    return out


def _status_raise(status: int, where: str) -> None:
    if status == _kernels.ERR_C_POLE:
        raise CPoleError(f"{where}: c is a non-positive integer (non-terminating)")
    if status == _kernels.ERR_NO_CONVERGENCE:
        raise NoConvergence(f"{where}: series failed tolerance within iteration cap")
    if status == _kernels.ERR_DEGENERATE:
        raise DegenerateTransform(f"{where}: degenerate transformation unresolved")
    raise NoConvergence(f"{where}: unexpected status {status}")


def gauss_2f1(p: Hyp2F1Params) -> complex:
    """2F1(a, b; c; z), analytic-continuation-consistent principal branch."""
    val, status = _kernels.hyp2f1_kernel(
        complex(p.a), complex(p.b), complex(p.c), complex(p.z)
    )
    if status != _kernels.OK:
        _status_raise(status, f"gauss_2f1{(p.a, p.b, p.c, p.z)}")
    if not (math.isfinite(val.real) and math.isfinite(val.imag)):
        raise NoConvergence(f"gauss_2f1{(p.a, p.b, p.c, p.z)}: non-finite result")
    return val


def gauss_2f1_derivative(p: Hyp2F1Params) -> complex:
    """d/dz 2F1(a, b; c; z) = (a b / c) 2F1(a+1, b+1; c+1; z)."""
    c = complex(p.c)
    if c == 0:
        raise CPoleError("gauss_2f1_derivative: c = 0")
    a = complex(p.a)
    b = complex(p.b)
    if a == 0 or b == 0:
        return complex(0.0, 0.0)  # constant function
    shifted = Hyp2F1Params(a=a + 1, b=b + 1, c=c + 1, z=complex(p.z))
    return (a * b / c) * gauss_2f1(shifted)
