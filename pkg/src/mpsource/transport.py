"""Mass-density transport by first-order monotone upwinding.

The continuity update is written in advective form,

    rho' = rho - dt * (u . grad rho)_upwind,

expanded so that each new cell value is an explicit convex combination of
the old cell and its upwind neighbors.  Convexity makes the maximum
principle exact (not merely approximate): min/max of rho can never expand,
whatever the face velocity field does, as long as the per-cell Courant sum
stays at or below one.  That bound is checked and enforced here, cell by
cell, because the density bounds are load-bearing for the coercivity of
the potential solve and for the denominator guards of the inversion.

Walls are impermeable (wall-face velocities are zero for any admissible
velocity field), so no ghost densities are needed.  When the discrete face
divergence of u vanishes, the advective and conservative flux forms
coincide and total mass is conserved to rounding.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import CflViolationError, GridMismatchError, NonFiniteFieldError
from .grid import ScalarField, VectorField

# slack on the recorded bounds: convex combinations can overshoot by rounding
BOUNDS_SLACK = 1e-12


@dataclass
class DensityField:
    """Cell density plus the initial bounds it must stay inside."""

    field: ScalarField
    alpha: float
    beta: float

    def __post_init__(self):
        if not self.alpha > 0:
            raise ValueError(f"lower density bound must be positive, got {self.alpha}")
        if self.beta < self.alpha:
            raise ValueError("density bounds are inverted")
        self.check_bounds()

    @classmethod
    def from_initial(cls, field: ScalarField):
        vals = field.values
        return cls(field, float(vals.min()), float(vals.max()))

    @property
    def grid(self):
        return self.field.grid

    @property
    def values(self):
        return self.field.values

    def check_bounds(self, slack=BOUNDS_SLACK):
        lo = float(self.values.min())
        hi = float(self.values.max())
        if lo < self.alpha - slack or hi > self.beta + slack:
            raise ValueError(
                f"density out of bounds: [{lo:.17g}, {hi:.17g}] "
                f"not within [{self.alpha:.17g}, {self.beta:.17g}]"
            )

    def copy(self):
        return DensityField(self.field.copy(), self.alpha, self.beta)


def courant_numbers(u: VectorField, dt: float):
    """Per-cell Courant sum of the upwind update (must be <= 1)."""
    g = u.grid
    ue = u.x[1:, :]
    uw = u.x[:-1, :]
    vn = u.y[:, 1:]
    vs = u.y[:, :-1]
    return dt * (
        (np.maximum(uw, 0.0) - np.minimum(ue, 0.0)) / g.dx
        + (np.maximum(vs, 0.0) - np.minimum(vn, 0.0)) / g.dy
    )


def advect_density(rho: DensityField, u: VectorField, dt: float) -> DensityField:
    """One upwind transport step; preserves [alpha, beta] exactly."""
    if dt < 0:
        raise ValueError("dt must be nonnegative")
    if not (np.all(np.isfinite(u.x)) and np.all(np.isfinite(u.y))):
        raise NonFiniteFieldError("velocity contains non-finite values")
    g = rho.grid
    if u.grid != g:
        raise GridMismatchError("velocity grid does not match density grid")

    cfl = courant_numbers(u, dt)
    if np.any(cfl > 1.0):
        cell = np.unravel_index(int(np.argmax(cfl)), cfl.shape)
        raise CflViolationError(tuple(int(c) for c in cell), float(cfl[cell]), dt)

    r = rho.values
    ue = u.x[1:, :]
    uw = u.x[:-1, :]
    vn = u.y[:, 1:]
    vs = u.y[:, :-1]

    # neighbor differences; edge columns padded with the cell itself so the
    # (identically zero) wall-face coefficients multiply a finite number
    de = np.zeros_like(r)
    de[:-1, :] = r[1:, :] - r[:-1, :]
    dw = np.zeros_like(r)
    dw[1:, :] = r[:-1, :] - r[1:, :]
    dn = np.zeros_like(r)
    dn[:, :-1] = r[:, 1:] - r[:, :-1]
    ds = np.zeros_like(r)
    ds[:, 1:] = r[:, :-1] - r[:, 1:]

    new = r + dt * (
        (-np.minimum(ue, 0.0) * de + np.maximum(uw, 0.0) * dw) / g.dx
        + (-np.minimum(vn, 0.0) * dn + np.maximum(vs, 0.0) * ds) / g.dy
    )
    return DensityField(ScalarField(g, new), rho.alpha, rho.beta)
