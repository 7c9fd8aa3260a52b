# errors.py
"""Exception types raised by kgscatter operations."""


class KgscatterError(Exception):
    """Base class for all kgscatter errors."""


class PoleError(KgscatterError):
    """log_gamma evaluated at a non-positive integer."""


class CPoleError(KgscatterError):
    """2F1 parameter c is a non-positive integer and the series does not
    terminate before the pole."""


class NoConvergence(KgscatterError):
    """A series failed to reach tolerance within the iteration cap."""


class DegenerateTransform(KgscatterError):
    """A linear transformation hit an integer parameter difference and the
    perturbation fallback also failed."""


class SubBarrierEnergy(KgscatterError):
    """Scattering requested at |E| <= m; use the bound-state solver."""


class OutOfWell(KgscatterError):
    """Bound-state quantity requested at |E| >= m."""


class SingularMatching(KgscatterError):
    """The 2x2 matching determinant fell below threshold."""


class RootLost(KgscatterError):
    """Bracket refinement failed to converge on a sign change."""


class StepLimit(KgscatterError):
    """ODE integrator exceeded its step budget."""


class OverflowGuard(KgscatterError):
    """ODE solution became non-finite despite per-step renormalization."""


class BoxTooSmall(KgscatterError):
    """Asymptotic decomposition drifts between re-check points; the
    integration box does not reach the free region."""


class BadRange(KgscatterError):
    """Malformed grid or interval specification."""
