# potential.py
"""The q-deformed hyperbolic barrier/well profile.

Canonical form, symmetric about the origin:

    V(x) = 4 lam (lam - 1) e^{-2 alpha |x|} / (1 + q e^{-2 alpha |x|})^2

lam > 1 (or lam < 0) gives a barrier, lam in {0, 1} the free particle.
q > 0 deforms the shape: the peak height 4 lam (lam-1)/(1+q)^2 falls with
q, and the q -> 0 limit is the cusp profile 4 lam (lam-1) e^{-2 alpha |x|}.

The attractive well used for bound states is the same profile with the
strength remapped, 8 lam (lam - 1) -> -V0, i.e. the prefactor 4 lam (lam-1)
replaced by -V0/2; the Klein-Gordon coupling 2 (E + m) V(x) then carries
the -V0 (E + m) combination the bound-state exponents are built from.
"""

from dataclasses import dataclass
from typing import List, Tuple, Union

import numpy as np

from . import _kernels
from .errors import BadRange

__all__ = [
    "PotentialParams",
    "WellParams",
    "evaluate",
    "well_evaluate",
    "profile",
]


@dataclass(frozen=True)
class PotentialParams:
    """Barrier parameterization.

    Attributes
    ----------
    lam : float
        Height parameter lam (dimensionless); strength is 4 lam (lam - 1).
        lam in {0, 1} means free particle.  ("lambda" is a keyword, hence
        the short field name.)
    q : float
        Deformation parameter, > 0.
    alpha : float
        Inverse range, > 0.
    mass : float
        Particle mass m, > 0 (natural units).
    """

    lam: float
    q: float
    alpha: float
    mass: float

    def __post_init__(self):
        if not (self.q > 0):
            raise ValueError(f"q must be > 0, got {self.q}")
        if not (self.alpha > 0):
            raise ValueError(f"alpha must be > 0, got {self.alpha}")
        if not (self.mass > 0):
            raise ValueError(f"mass must be > 0, got {self.mass}")

    @property
    def strength(self) -> float:
        # the 4 lam (lam - 1) prefactor of the profile
        return 4.0 * self.lam * (self.lam - 1.0)


@dataclass(frozen=True)
class WellParams:
    """Attractive well parameterization (strength remap 8 lam (lam-1) -> -V0).

    Attributes
    ----------
    v0 : float
        Well depth V0 >= 0 (v0 = 0 is the free particle, kept legal so the
        empty-spectrum paths stay exercisable).
    q, alpha, mass : float
        As in PotentialParams.
    """

    v0: float
    q: float
    alpha: float
    mass: float

    def __post_init__(self):
        if not (self.v0 >= 0):
            raise ValueError(f"v0 must be >= 0, got {self.v0}")
        if not (self.q > 0):
            raise ValueError(f"q must be > 0, got {self.q}")
        if not (self.alpha > 0):
            raise ValueError(f"alpha must be > 0, got {self.alpha}")
        if not (self.mass > 0):
            raise ValueError(f"mass must be > 0, got {self.mass}")

    @property
    def strength(self) -> float:
        # profile prefactor: -V0/2, so that 2 (E+m) V carries -V0 (E+m)
        return -0.5 * self.v0


def _eval_strength(g: float, q: float, alpha: float, x):
    if np.ndim(x) == 0:
        return _kernels.potential_value(g, q, alpha, float(x))
    x = np.asarray(x, dtype=float)
    t = np.exp(-2.0 * alpha * np.abs(x))
    return g * t / (1.0 + q * t) ** 2


def evaluate(p: PotentialParams, x):
    """V(x) for the barrier form; scalar in, float out; array in, array out."""
    return _eval_strength(p.strength, p.q, p.alpha, x)


def well_evaluate(w: WellParams, x):
    """V(x) for the attractive well (strength -V0/2)."""
    return _eval_strength(w.strength, w.q, w.alpha, x)


def profile(
    p: Union[PotentialParams, WellParams],
    x_min: float,
    x_max: float,
    n: int,
) -> List[Tuple[float, float]]:
    """n uniform samples of (x, V(x)) on [x_min, x_max], endpoints included."""
    if not (x_min < x_max):
        raise BadRange(f"need x_min < x_max, got [{x_min}, {x_max}]")
    if n < 2:
        raise BadRange(f"need n >= 2 samples, got {n}")
    xs = np.linspace(x_min, x_max, int(n))
    if isinstance(p, WellParams):
        vs = well_evaluate(p, xs)
    else:
        vs = evaluate(p, xs)
    return [(float(x), float(v)) for x, v in zip(xs, vs)]
