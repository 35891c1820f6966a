"""Variable-coefficient Neumann problems: scalar potential and projection.

Both elliptic solves in the pipeline share one structure,

    div(c grad s) = rhs   in the domain,
    c ds/dn       = given flux (possibly zero) on the walls,
    mean(s)       = 0,

with a strictly positive face coefficient c.  On the MAC layout the
operator A s = -div(c grad_int s) assembled from interior-face gradients is
symmetric positive semidefinite with the constants as its only nullspace,
so CG applies once the right-hand side is projected onto mean zero.  The
prescribed wall fluxes never appear in A: they are moved to the right-hand
side, where they cancel exactly against the flux divergence of the data
(the discrete compatibility condition holds by construction, so the mean
projection only mops up rounding).

Preconditioner: the constant-coefficient Neumann Laplacian scaled by the
mean coefficient, inverted exactly with a type-II cosine transform.  The
density bounds keep the coefficient contrast mild, so a handful of CG
iterations reach 1e-10 relative residuals.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
import scipy.fft

from .errors import CoercivityError, NonFiniteFieldError, SolverConvergenceError
from .grid import Grid, ScalarField, VectorField, face_averages, gradient
from .transport import DensityField


@dataclass
class PotentialProblem:
    """div(rho grad h) = div(rho m) with flux condition dh/dn = m.n."""

    rho: DensityField
    m: VectorField
    tolerance: float = 1e-10
    max_iterations: int = 2000


@dataclass
class SolveStats:
    iterations: int
    residual: float
    rhs_norm: float


class NeumannPoisson:
    """Matrix-free -div(c grad .) on cell centers with zero wall flux."""

    def __init__(self, grid: Grid, coef_x, coef_y):
        # coef_x on x-faces (nx+1, ny), coef_y on y-faces (nx, ny+1);
        # wall-face entries are never read.
        self.grid = grid
        self.cx = coef_x[1:-1, :]
        self.cy = coef_y[:, 1:-1]
        if np.any(self.cx <= 0) or np.any(self.cy <= 0):
            raise CoercivityError("face coefficients must be strictly positive")
        cbar = 0.5 * (float(self.cx.mean()) + float(self.cy.mean()))
        lam_x = (2.0 - 2.0 * np.cos(np.pi * np.arange(grid.nx) / grid.nx)) / grid.dx**2
        lam_y = (2.0 - 2.0 * np.cos(np.pi * np.arange(grid.ny) / grid.ny)) / grid.dy**2
        lam = cbar * (lam_x[:, None] + lam_y[None, :])
        lam[0, 0] = 1.0  # constant mode, zeroed explicitly in apply_inverse
        self._lam = lam

    def apply(self, x):
        g = self.grid
        fx = self.cx * (x[1:, :] - x[:-1, :]) / g.dx
        fy = self.cy * (x[:, 1:] - x[:, :-1]) / g.dy
        out = np.zeros_like(x)
        out[:-1, :] -= fx / g.dx
        out[1:, :] += fx / g.dx
        out[:, :-1] -= fy / g.dy
        out[:, 1:] += fy / g.dy
        return out

    def precondition(self, r):
        rhat = scipy.fft.dctn(r, type=2, norm="ortho")
        rhat /= self._lam
        rhat[0, 0] = 0.0
        return scipy.fft.idctn(rhat, type=2, norm="ortho")

    def solve(self, rhs, rtol=1e-10, atol_inf=0.0, max_iterations=2000, what="poisson"):
        """PCG on the mean-zero subspace; returns (solution, stats).

        Stops when ||r||_2 <= rtol * ||b||_2 or ||r||_inf <= atol_inf
        (whichever criterion is enabled and met first).
        """
        b = rhs - rhs.mean()
        bnorm = float(np.linalg.norm(b))
        x = np.zeros_like(b)
        if bnorm == 0.0:
            return x, SolveStats(0, 0.0, 0.0)
        r = b.copy()
        z = self.precondition(r)
        p = z.copy()
        rz = float(np.sum(r * z))
        resid = float(np.linalg.norm(r))
        it = 0

        def done(res2, res_inf):
            if res2 <= rtol * bnorm:
                return True
            return atol_inf > 0.0 and res_inf <= atol_inf

        while not done(resid, float(np.max(np.abs(r)))):
            if it >= max_iterations:
                raise SolverConvergenceError(what, it, resid / bnorm, rtol)
            ap = self.apply(p)
            alpha = rz / float(np.sum(p * ap))
            x += alpha * p
            r -= alpha * ap
            r -= r.mean()  # keep the iteration in the mean-zero subspace
            z = self.precondition(r)
            rz_new = float(np.sum(r * z))
            p = z + (rz_new / rz) * p
            rz = rz_new
            resid = float(np.linalg.norm(r))
            it += 1
        return x - x.mean(), SolveStats(it, resid, bnorm)


def density_face_coefficients(rho: DensityField):
    return face_averages(rho.field)


def potential_rhs(rho: DensityField, m: VectorField):
    """-div(rho m) assembled from interior faces only.

    The wall-face fluxes of rho*m cancel against the prescribed flux
    rho dh/dn = rho m.n, so dropping both keeps the discrete system exactly
    compatible (the rhs telescopes to zero mean).
    """
    g = rho.grid
    cx, cy = density_face_coefficients(rho)
    fx = cx[1:-1, :] * m.x[1:-1, :]
    fy = cy[:, 1:-1] * m.y[:, 1:-1]
    out = np.zeros((g.nx, g.ny))
    out[:-1, :] += fx / g.dx
    out[1:, :] -= fx / g.dx
    out[:, :-1] += fy / g.dy
    out[:, 1:] -= fy / g.dy
    return out


_last_stats: SolveStats | None = None


def last_solve_stats() -> SolveStats | None:
    """Stats of the most recent solve_potential call (diagnostics channel)."""
    return _last_stats


def solve_potential(problem: PotentialProblem) -> ScalarField:
    """Solve for the zero-mean potential h of the force representation."""
    global _last_stats
    rho, m = problem.rho, problem.m
    if float(rho.values.min()) <= 0:
        raise CoercivityError(
            f"density minimum {rho.values.min():.3e} is not positive"
        )
    if not (np.all(np.isfinite(m.x)) and np.all(np.isfinite(m.y))):
        raise NonFiniteFieldError("force shape m contains non-finite values")
    cx, cy = density_face_coefficients(rho)
    op = NeumannPoisson(rho.grid, cx, cy)
    rhs = potential_rhs(rho, m)
    h, stats = op.solve(
        rhs,
        rtol=problem.tolerance,
        max_iterations=problem.max_iterations,
        what="potential solve",
    )
    _last_stats = stats
    return ScalarField(rho.grid, h)


def potential_gradient(h: ScalarField) -> VectorField:
    """Face-staggered gradient of the potential (same stencil as `gradient`)."""
    return gradient(h)
