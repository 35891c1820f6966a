"""Exception hierarchy shared by all solver layers.

Every failure mode that callers are expected to branch on gets its own
class; messages carry enough context (cell, time, residual) to debug a
batch run from the log alone.
"""


class MpSourceError(Exception):
    """Base class for all package errors."""


class GridMismatchError(MpSourceError):
    """Two fields that must share a grid do not."""


class NonFiniteFieldError(MpSourceError):
    """A field contains NaN or infinite entries."""


class CflViolationError(MpSourceError):
    """The advective CFL bound is violated.

    Carries the offending cell index and the local CFL number.
    """

    def __init__(self, cell, cfl, dt):
        self.cell = cell
        self.cfl = cfl
        self.dt = dt
        super().__init__(
            f"CFL violation at cell {cell}: local Courant number {cfl:.6g} > 1 "
            f"for dt={dt:.6g}"
        )


class SolverConvergenceError(MpSourceError):
    """An iterative linear solve exhausted its iteration budget."""

    def __init__(self, what, iterations, residual, tolerance):
        self.what = what
        self.iterations = iterations
        self.residual = residual
        self.tolerance = tolerance
        super().__init__(
            f"{what}: no convergence after {iterations} iterations "
            f"(residual {residual:.3e}, tolerance {tolerance:.3e})"
        )


class CoercivityError(MpSourceError):
    """Density bounds do not guarantee a positive-definite operator."""


class StalePotentialError(MpSourceError):
    """A potential field is used whose zero-mean normalization is broken."""


class InvariantViolationError(MpSourceError):
    """A state invariant (divergence, bounds, mean) failed after a step."""

    def __init__(self, name, value, threshold, t):
        self.name = name
        self.value = value
        self.threshold = threshold
        self.t = t
        super().__init__(
            f"invariant '{name}' violated at t={t:.6g}: "
            f"value {value:.3e} exceeds threshold {threshold:.3e}"
        )


class ProbeValidationError(MpSourceError):
    """A probe pair fails its admissibility requirements."""


class DegeneracyError(MpSourceError):
    """A denominator series dropped below its positivity threshold."""

    def __init__(self, which, t, value, threshold):
        self.which = which
        self.t = t
        self.value = value
        self.threshold = threshold
        super().__init__(
            f"degenerate {which} at t={t:.6g}: |{which}|={abs(value):.3e} "
            f"< threshold {threshold:.3e}; sources are locally unidentifiable"
        )


class IncompatibleDataError(MpSourceError):
    """Measured series disagree with the initial state at t=0."""

    def __init__(self, residual_u, residual_w, tolerance):
        self.residual_u = residual_u
        self.residual_w = residual_w
        self.tolerance = tolerance
        super().__init__(
            f"observation incompatible with initial state: residuals "
            f"({residual_u:.3e}, {residual_w:.3e}) exceed tolerance {tolerance:.3e}"
        )


class AlignmentError(MpSourceError):
    """Trajectory and observation time grids do not match."""


class TooFewSamplesError(MpSourceError):
    """A series operation needs more samples than were provided."""


class ConfigError(MpSourceError):
    """A run configuration is malformed or violates a model hypothesis."""


class ObservationParseError(MpSourceError):
    """A measurement CSV could not be parsed."""

    def __init__(self, path, line_number, message):
        self.path = path
        self.line_number = line_number
        super().__init__(f"{path}:{line_number}: {message}")
