"""Staggered (MAC) rectangular grid, discrete fields, and discrete operators.

Layout for an nx-by-ny grid of extent lx-by-ly (dx = lx/nx, dy = ly/ny),
first array index along x:

    scalars   s[i, j]    cell centers   ((i+0.5) dx, (j+0.5) dy)   shape (nx, ny)
    x-faces   vx[i, j]   vertical faces (i dx, (j+0.5) dy)         shape (nx+1, ny)
    y-faces   vy[i, j]   horizontal faces ((i+0.5) dx, j dy)       shape (nx, ny+1)
    nodes     (i dx, j dy)                                         shape (nx+1, ny+1)

Walls are the faces i in {0, nx} and j in {0, ny}; all four sides are
no-slip.  The outward unit normal on each wall face is the corresponding
axis unit vector, (-1,0)/(+1,0) on the west/east walls and (0,-1)/(0,+1)
on the south/north walls.

Ghost conventions (used wherever a stencil needs off-domain values):
  * velocity-like quantities (u, w): reflection ghosts implementing
    homogeneous Dirichlet, ghost = -interior;
  * density/potential-like quantities (rho, h, p): homogeneous Neumann,
    ghost = interior.

Two structural identities hold exactly (to rounding) by construction:
  * divergence(curl_of_scalar(w)) == 0 at every cell, because the curl is
    built as the node-difference curl of a corner-averaged stream;
  * curl_of_vector(gradient(s)) == 0 at interior cells, because the node
    curl of a staggered gradient telescopes to zero.

Quadrature is the midpoint rule: scalar products weight every cell by
dx*dy; face samples take full weight at interior faces and half weight at
wall faces (trapezoid closure along the staggered direction).
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import GridMismatchError, NonFiniteFieldError


@dataclass(frozen=True)
class Grid:
    """Uniform staggered grid on [0, lx] x [0, ly] with no-slip walls."""

    nx: int
    ny: int
    lx: float = 1.0
    ly: float = 1.0

    def __post_init__(self):
        if self.nx < 4 or self.ny < 4:
            raise ValueError(f"grid must be at least 4x4, got {self.nx}x{self.ny}")
        if not (self.lx > 0 and self.ly > 0):
            raise ValueError("domain extents must be positive")

    @property
    def dx(self):
        return self.lx / self.nx

    @property
    def dy(self):
        return self.ly / self.ny

    @property
    def cell_area(self):
        return self.dx * self.dy

    @property
    def area(self):
        return self.lx * self.ly

    def cell_centers(self):
        """Meshgrid (x, y) of cell-center coordinates, shape (nx, ny) each."""
        x = (np.arange(self.nx) + 0.5) * self.dx
        y = (np.arange(self.ny) + 0.5) * self.dy
        return np.meshgrid(x, y, indexing="ij")

    def nodes(self):
        """Meshgrid (x, y) of node coordinates, shape (nx+1, ny+1) each."""
        x = np.arange(self.nx + 1) * self.dx
        y = np.arange(self.ny + 1) * self.dy
        return np.meshgrid(x, y, indexing="ij")

    def xface_centers(self):
        x = np.arange(self.nx + 1) * self.dx
        y = (np.arange(self.ny) + 0.5) * self.dy
        return np.meshgrid(x, y, indexing="ij")

    def yface_centers(self):
        x = (np.arange(self.nx) + 0.5) * self.dx
        y = np.arange(self.ny + 1) * self.dy
        return np.meshgrid(x, y, indexing="ij")


def _check_finite(name, arr):
    if not np.all(np.isfinite(arr)):
        raise NonFiniteFieldError(f"{name} contains non-finite values")


@dataclass
class ScalarField:
    """Cell-centered scalar samples; value semantics (operations copy)."""

    grid: Grid
    values: np.ndarray

    def __post_init__(self):
        self.values = np.asarray(self.values, dtype=float)
        if self.values.shape != (self.grid.nx, self.grid.ny):
            raise ValueError(
                f"scalar field shape {self.values.shape} does not match grid "
                f"({self.grid.nx}, {self.grid.ny})"
            )
        _check_finite("scalar field", self.values)

    @classmethod
    def zeros(cls, grid):
        return cls(grid, np.zeros((grid.nx, grid.ny)))

    @classmethod
    def full(cls, grid, value):
        return cls(grid, np.full((grid.nx, grid.ny), float(value)))

    @classmethod
    def from_function(cls, grid, fn):
        x, y = grid.cell_centers()
        return cls(grid, np.asarray(fn(x, y), dtype=float))

    def copy(self):
        return ScalarField(self.grid, self.values.copy())


@dataclass
class VectorField:
    """Face-staggered vector samples: x on vertical faces, y on horizontal."""

    grid: Grid
    x: np.ndarray
    y: np.ndarray

    def __post_init__(self):
        self.x = np.asarray(self.x, dtype=float)
        self.y = np.asarray(self.y, dtype=float)
        nx, ny = self.grid.nx, self.grid.ny
        if self.x.shape != (nx + 1, ny):
            raise ValueError(f"x-component shape {self.x.shape} != {(nx + 1, ny)}")
        if self.y.shape != (nx, ny + 1):
            raise ValueError(f"y-component shape {self.y.shape} != {(nx, ny + 1)}")
        _check_finite("vector field", self.x)
        _check_finite("vector field", self.y)

    @classmethod
    def zeros(cls, grid):
        return cls(
            grid,
            np.zeros((grid.nx + 1, grid.ny)),
            np.zeros((grid.nx, grid.ny + 1)),
        )

    @classmethod
    def from_functions(cls, grid, fx, fy):
        xu, yu = grid.xface_centers()
        xv, yv = grid.yface_centers()
        return cls(grid, np.asarray(fx(xu, yu), float), np.asarray(fy(xv, yv), float))

    @classmethod
    def from_node_stream(cls, grid, stream_fn, zero_boundary=False):
        """Rotated gradient of a node-sampled stream function.

        The returned field is discretely divergence-free at every cell and
        vanishes on wall faces whenever the stream is constant along each
        wall, both exactly.  `zero_boundary` snaps the wall-node stream
        values to zero first (for streams that vanish there analytically
        but carry rounding residue like sin(pi)**2).
        """
        xn, yn = grid.nodes()
        s = np.asarray(stream_fn(xn, yn), dtype=float)
        if zero_boundary:
            s[0, :] = s[-1, :] = 0.0
            s[:, 0] = s[:, -1] = 0.0
        vx = (s[:, 1:] - s[:, :-1]) / grid.dy
        vy = -(s[1:, :] - s[:-1, :]) / grid.dx
        return cls(grid, vx, vy)

    def copy(self):
        return VectorField(self.grid, self.x.copy(), self.y.copy())


def _same_grid(a, b):
    if a.grid is not b.grid and a.grid != b.grid:
        raise GridMismatchError(f"fields live on different grids: {a.grid} vs {b.grid}")


# ---------------------------------------------------------------------------
# ghost padding
# ---------------------------------------------------------------------------


def pad_scalar(s_values, bc):
    """Pad a (nx, ny) array with one ghost layer.

    bc='neumann' reflects values (ghost = interior); bc='dirichlet' mirrors
    with sign flip so the wall value is zero.  Corner ghosts combine both
    reflections (sign +1 for dirichlet: flipped twice).
    """
    if bc == "neumann":
        return np.pad(s_values, 1, mode="edge")
    if bc == "dirichlet":
        p = np.empty((s_values.shape[0] + 2, s_values.shape[1] + 2))
        p[1:-1, 1:-1] = s_values
        p[0, 1:-1] = -s_values[0, :]
        p[-1, 1:-1] = -s_values[-1, :]
        p[1:-1, 0] = -s_values[:, 0]
        p[1:-1, -1] = -s_values[:, -1]
        p[0, 0] = s_values[0, 0]
        p[0, -1] = s_values[0, -1]
        p[-1, 0] = s_values[-1, 0]
        p[-1, -1] = s_values[-1, -1]
        return p
    raise ValueError(f"unknown boundary convention {bc!r}")


# ---------------------------------------------------------------------------
# first-order operators
# ---------------------------------------------------------------------------


def gradient(s: ScalarField) -> VectorField:
    """Staggered gradient: cell differences onto faces, one-sided at walls."""
    g, v = s.grid, s.values
    gx = np.empty((g.nx + 1, g.ny))
    gx[1:-1, :] = (v[1:, :] - v[:-1, :]) / g.dx
    gx[0, :] = (v[1, :] - v[0, :]) / g.dx
    gx[-1, :] = (v[-1, :] - v[-2, :]) / g.dx
    gy = np.empty((g.nx, g.ny + 1))
    gy[:, 1:-1] = (v[:, 1:] - v[:, :-1]) / g.dy
    gy[:, 0] = (v[:, 1] - v[:, 0]) / g.dy
    gy[:, -1] = (v[:, -1] - v[:, -2]) / g.dy
    return VectorField(g, gx, gy)


def divergence(v: VectorField) -> ScalarField:
    """Per-cell flux difference of face values."""
    g = v.grid
    vals = (v.x[1:, :] - v.x[:-1, :]) / g.dx + (v.y[:, 1:] - v.y[:, :-1]) / g.dy
    return ScalarField(g, vals)


def node_average(s: ScalarField, bc="dirichlet") -> np.ndarray:
    """Average cell values onto nodes, shape (nx+1, ny+1), using ghosts."""
    p = pad_scalar(s.values, bc)
    return 0.25 * (p[:-1, :-1] + p[1:, :-1] + p[:-1, 1:] + p[1:, 1:])


def curl_of_scalar(w: ScalarField) -> VectorField:
    """2D curl of a scalar: (d_y w, -d_x w) on faces.

    Built as the node-difference curl of the corner-averaged field so the
    discrete divergence of the result vanishes identically; boundary faces
    use the homogeneous-Dirichlet ghost convention.
    """
    g = w.grid
    wn = node_average(w, bc="dirichlet")
    cx = (wn[:, 1:] - wn[:, :-1]) / g.dy
    cy = -(wn[1:, :] - wn[:-1, :]) / g.dx
    return VectorField(g, cx, cy)


def node_curl(v: VectorField) -> np.ndarray:
    """d_x v_y - d_y v_x at nodes, shape (nx+1, ny+1).

    Wall rows use the reflection ghosts of no-slip velocity (tangential
    ghost = -interior), so for a genuine velocity field the wall values are
    the physical wall vorticity.
    """
    g = v.grid
    px = np.empty((g.nx + 1, g.ny + 2))  # v.x padded in y with dirichlet ghosts
    px[:, 1:-1] = v.x
    px[:, 0] = -v.x[:, 0]
    px[:, -1] = -v.x[:, -1]
    py = np.empty((g.nx + 2, g.ny + 1))
    py[1:-1, :] = v.y
    py[0, :] = -v.y[0, :]
    py[-1, :] = -v.y[-1, :]
    return (py[1:, :] - py[:-1, :]) / g.dx - (px[:, 1:] - px[:, :-1]) / g.dy


def curl_of_vector(v: VectorField) -> ScalarField:
    """Scalar curl d_x v_y - d_y v_x at cell centers (corner averaged)."""
    nc = node_curl(v)
    vals = 0.25 * (nc[:-1, :-1] + nc[1:, :-1] + nc[:-1, 1:] + nc[1:, 1:])
    return ScalarField(v.grid, vals)


def laplacian(s: ScalarField, bc="neumann") -> ScalarField:
    """Five-point Laplacian with the ghost convention of `bc`."""
    g = s.grid
    p = pad_scalar(s.values, bc)
    vals = (p[2:, 1:-1] - 2.0 * p[1:-1, 1:-1] + p[:-2, 1:-1]) / g.dx**2 + (
        p[1:-1, 2:] - 2.0 * p[1:-1, 1:-1] + p[1:-1, :-2]
    ) / g.dy**2
    return ScalarField(g, vals)


def laplacian_vec(v: VectorField) -> VectorField:
    """Five-point Laplacian of a no-slip velocity field.

    Normal wall faces are constrained (output zero there); tangential
    off-domain neighbors use reflection ghosts.
    """
    g = v.grid
    lx = np.zeros_like(v.x)
    px = np.empty((g.nx + 1, g.ny + 2))
    px[:, 1:-1] = v.x
    px[:, 0] = -v.x[:, 0]
    px[:, -1] = -v.x[:, -1]
    lx[1:-1, :] = (v.x[2:, :] - 2.0 * v.x[1:-1, :] + v.x[:-2, :]) / g.dx**2 + (
        px[1:-1, 2:] - 2.0 * px[1:-1, 1:-1] + px[1:-1, :-2]
    ) / g.dy**2
    ly = np.zeros_like(v.y)
    py = np.empty((g.nx + 2, g.ny + 1))
    py[1:-1, :] = v.y
    py[0, :] = -v.y[0, :]
    py[-1, :] = -v.y[-1, :]
    ly[:, 1:-1] = (v.y[:, 2:] - 2.0 * v.y[:, 1:-1] + v.y[:, :-2]) / g.dy**2 + (
        py[2:, 1:-1] - 2.0 * py[1:-1, 1:-1] + py[:-2, 1:-1]
    ) / g.dx**2
    return VectorField(g, lx, ly)


# ---------------------------------------------------------------------------
# quadrature
# ---------------------------------------------------------------------------


def _xface_weights(grid):
    w = np.full((grid.nx + 1, grid.ny), grid.cell_area)
    w[0, :] *= 0.5
    w[-1, :] *= 0.5
    return w


def _yface_weights(grid):
    w = np.full((grid.nx, grid.ny + 1), grid.cell_area)
    w[:, 0] *= 0.5
    w[:, -1] *= 0.5
    return w


def inner_product(a, b) -> float:
    """Midpoint-rule L2 scalar product of two same-grid fields."""
    _same_grid(a, b)
    if isinstance(a, ScalarField) and isinstance(b, ScalarField):
        return float(np.sum(a.values * b.values)) * a.grid.cell_area
    if isinstance(a, VectorField) and isinstance(b, VectorField):
        return float(
            np.sum(a.x * b.x * _xface_weights(a.grid))
            + np.sum(a.y * b.y * _yface_weights(a.grid))
        )
    raise GridMismatchError(
        f"cannot combine {type(a).__name__} with {type(b).__name__}"
    )


def integrate(s) -> float:
    if isinstance(s, ScalarField):
        return float(np.sum(s.values)) * s.grid.cell_area
    raise GridMismatchError("integrate expects a scalar field")


def l2_norm(a) -> float:
    return float(np.sqrt(max(inner_product(a, a), 0.0)))


def max_abs(a) -> float:
    if isinstance(a, ScalarField):
        return float(np.max(np.abs(a.values))) if a.values.size else 0.0
    return float(max(np.max(np.abs(a.x)), np.max(np.abs(a.y))))


def interior_gradient_sq_norm(s: ScalarField) -> float:
    """L2 norm squared of the interior-face gradient (wall faces excluded).

    This is the quantity entering the weighted-form energy identity of the
    potential solve, where wall fluxes are prescribed rather than derived
    from cell differences.
    """
    g = s.grid
    gx = (s.values[1:, :] - s.values[:-1, :]) / g.dx
    gy = (s.values[:, 1:] - s.values[:, :-1]) / g.dy
    return (float(np.sum(gx**2)) + float(np.sum(gy**2))) * g.cell_area


# ---------------------------------------------------------------------------
# interpolation and weak-form helpers
# ---------------------------------------------------------------------------


def center_components(v: VectorField):
    """Interpolate both face components to cell centers; two (nx, ny) arrays."""
    cx = 0.5 * (v.x[1:, :] + v.x[:-1, :])
    cy = 0.5 * (v.y[:, 1:] + v.y[:, :-1])
    return cx, cy


def face_averages(s: ScalarField):
    """Arithmetic cell-to-face averages (edge cells extended to wall faces)."""
    p = np.pad(s.values, ((1, 1), (0, 0)), mode="edge")
    fx = 0.5 * (p[1:, :] + p[:-1, :])
    q = np.pad(s.values, ((0, 0), (1, 1)), mode="edge")
    fy = 0.5 * (q[:, 1:] + q[:, :-1])
    return fx, fy


def grad_inner_vector(u: VectorField, v: VectorField) -> float:
    """(grad u, grad v) for no-slip face fields, exact adjoint form.

    Matches -(laplacian_vec(u), v) to rounding whenever v vanishes on wall
    faces, because the derivative samples and weights are exactly those of
    the summation-by-parts of the ghost Laplacian: in-line derivatives at
    cells/centers with full weight, cross derivatives at nodes with
    trapezoidal weights and ghost gradients 2*value/h at walls.
    """
    _same_grid(u, v)
    g = u.grid
    total = 0.0
    # x-component: d/dx at cell centers, d/dy at x-face node rows
    dux = (u.x[1:, :] - u.x[:-1, :]) / g.dx
    dvx = (v.x[1:, :] - v.x[:-1, :]) / g.dx
    total += float(np.sum(dux * dvx)) * g.cell_area
    wy = np.ones(g.ny + 1)
    wy[0] = wy[-1] = 0.5
    duy = np.empty((g.nx + 1, g.ny + 1))
    duy[:, 1:-1] = (u.x[:, 1:] - u.x[:, :-1]) / g.dy
    duy[:, 0] = 2.0 * u.x[:, 0] / g.dy
    duy[:, -1] = -2.0 * u.x[:, -1] / g.dy
    dvy = np.empty_like(duy)
    dvy[:, 1:-1] = (v.x[:, 1:] - v.x[:, :-1]) / g.dy
    dvy[:, 0] = 2.0 * v.x[:, 0] / g.dy
    dvy[:, -1] = -2.0 * v.x[:, -1] / g.dy
    wx = np.ones((g.nx + 1, 1))
    wx[0] = wx[-1] = 0.5
    total += float(np.sum(duy * dvy * wy[None, :] * wx)) * g.cell_area
    # y-component, mirrored
    duy2 = (u.y[:, 1:] - u.y[:, :-1]) / g.dy
    dvy2 = (v.y[:, 1:] - v.y[:, :-1]) / g.dy
    total += float(np.sum(duy2 * dvy2)) * g.cell_area
    wx2 = np.ones(g.nx + 1)
    wx2[0] = wx2[-1] = 0.5
    dux2 = np.empty((g.nx + 1, g.ny + 1))
    dux2[1:-1, :] = (u.y[1:, :] - u.y[:-1, :]) / g.dx
    dux2[0, :] = 2.0 * u.y[0, :] / g.dx
    dux2[-1, :] = -2.0 * u.y[-1, :] / g.dx
    dvx2 = np.empty_like(dux2)
    dvx2[1:-1, :] = (v.y[1:, :] - v.y[:-1, :]) / g.dx
    dvx2[0, :] = 2.0 * v.y[0, :] / g.dx
    dvx2[-1, :] = -2.0 * v.y[-1, :] / g.dx
    wy2 = np.ones((1, g.ny + 1))
    wy2[0, 0] = wy2[0, -1] = 0.5
    total += float(np.sum(dux2 * dvx2 * wx2[:, None] * wy2)) * g.cell_area
    return total


def grad_inner_scalar(a: ScalarField, b: ScalarField) -> float:
    """(grad a, grad b) for homogeneous-Dirichlet cell fields, adjoint form.

    Matches -(laplacian(a, 'dirichlet'), b) to rounding.
    """
    _same_grid(a, b)
    g = a.grid
    av, bv = a.values, b.values
    dax = np.empty((g.nx + 1, g.ny))
    dax[1:-1, :] = (av[1:, :] - av[:-1, :]) / g.dx
    dax[0, :] = 2.0 * av[0, :] / g.dx
    dax[-1, :] = -2.0 * av[-1, :] / g.dx
    dbx = np.empty_like(dax)
    dbx[1:-1, :] = (bv[1:, :] - bv[:-1, :]) / g.dx
    dbx[0, :] = 2.0 * bv[0, :] / g.dx
    dbx[-1, :] = -2.0 * bv[-1, :] / g.dx
    wx = np.ones((g.nx + 1, 1))
    wx[0] = wx[-1] = 0.5
    total = float(np.sum(dax * dbx * wx)) * g.cell_area
    day = np.empty((g.nx, g.ny + 1))
    day[:, 1:-1] = (av[:, 1:] - av[:, :-1]) / g.dy
    day[:, 0] = 2.0 * av[:, 0] / g.dy
    day[:, -1] = -2.0 * av[:, -1] / g.dy
    dby = np.empty_like(day)
    dby[:, 1:-1] = (bv[:, 1:] - bv[:, :-1]) / g.dy
    dby[:, 0] = 2.0 * bv[:, 0] / g.dy
    dby[:, -1] = -2.0 * bv[:, -1] / g.dy
    wy = np.ones((1, g.ny + 1))
    wy[0, 0] = wy[0, -1] = 0.5
    total += float(np.sum(day * dby * wy)) * g.cell_area
    return total


def velocity_gradient_at_centers(v: VectorField):
    """All four entries of grad v interpolated to cell centers.

    Returns (dx_vx, dy_vx, dx_vy, dy_vy) as (nx, ny) arrays.  In-line
    derivatives are exact center values; cross derivatives are averaged
    from the node samples of `node-difference` form with no-slip ghosts.
    """
    g = v.grid
    dx_vx = (v.x[1:, :] - v.x[:-1, :]) / g.dx
    dy_vy = (v.y[:, 1:] - v.y[:, :-1]) / g.dy
    # d/dy of vx at nodes, then corner-average to centers
    px = np.empty((g.nx + 1, g.ny + 2))
    px[:, 1:-1] = v.x
    px[:, 0] = -v.x[:, 0]
    px[:, -1] = -v.x[:, -1]
    dy_vx_nodes = (px[:, 1:] - px[:, :-1]) / g.dy
    dy_vx = 0.25 * (
        dy_vx_nodes[:-1, :-1]
        + dy_vx_nodes[1:, :-1]
        + dy_vx_nodes[:-1, 1:]
        + dy_vx_nodes[1:, 1:]
    )
    py = np.empty((g.nx + 2, g.ny + 1))
    py[1:-1, :] = v.y
    py[0, :] = -v.y[0, :]
    py[-1, :] = -v.y[-1, :]
    dx_vy_nodes = (py[1:, :] - py[:-1, :]) / g.dx
    dx_vy = 0.25 * (
        dx_vy_nodes[:-1, :-1]
        + dx_vy_nodes[1:, :-1]
        + dx_vy_nodes[:-1, 1:]
        + dx_vy_nodes[1:, 1:]
    )
    return dx_vx, dy_vx, dx_vy, dy_vy


def scalar_gradient_at_centers(s: ScalarField, bc="dirichlet"):
    """(d_x s, d_y s) at cell centers by averaging the staggered gradient."""
    g = s.grid
    p = pad_scalar(s.values, bc)
    gx_faces = (p[1:, 1:-1] - p[:-1, 1:-1]) / g.dx  # (nx+1, ny) incl. wall ghosts
    gy_faces = (p[1:-1, 1:] - p[1:-1, :-1]) / g.dy
    gx = 0.5 * (gx_faces[1:, :] + gx_faces[:-1, :])
    gy = 0.5 * (gy_faces[:, 1:] + gy_faces[:, :-1])
    return gx, gy


# ---------------------------------------------------------------------------
# serialization: plain-text grid format
# ---------------------------------------------------------------------------
#
# Header line: `nx ny lx ly kind` with kind in {scalar, vector}; then values
# row-major (one y-row per line for scalars; for vectors the x-component
# block (nx+1 lines of ny values, one x-face row per line) followed by the
# y-component block (nx lines of ny+1 values)).  %.17g round-trips doubles.


def _fmt_row(row):
    return " ".join(f"{v:.17g}" for v in row)


def save_field(path, fld):
    g = fld.grid
    lines = []
    if isinstance(fld, ScalarField):
        lines.append(f"{g.nx} {g.ny} {g.lx:.17g} {g.ly:.17g} scalar")
        lines.extend(_fmt_row(fld.values[i, :]) for i in range(g.nx))
    elif isinstance(fld, VectorField):
        lines.append(f"{g.nx} {g.ny} {g.lx:.17g} {g.ly:.17g} vector")
        lines.extend(_fmt_row(fld.x[i, :]) for i in range(g.nx + 1))
        lines.extend(_fmt_row(fld.y[i, :]) for i in range(g.nx))
    else:
        raise TypeError(f"cannot serialize {type(fld).__name__}")
    with open(path, "w") as f:
        f.write("\n".join(lines) + "\n")


def load_field(path, grid=None):
    with open(path) as f:
        header = f.readline().split()
        nx, ny = int(header[0]), int(header[1])
        lx, ly = float(header[2]), float(header[3])
        kind = header[4]
        g = grid if grid is not None else Grid(nx, ny, lx, ly)
        if (g.nx, g.ny) != (nx, ny):
            raise GridMismatchError(f"file grid {nx}x{ny} != target {g.nx}x{g.ny}")
        rows = [np.array(line.split(), dtype=float) for line in f if line.strip()]
    if kind == "scalar":
        return ScalarField(g, np.vstack(rows))
    if kind == "vector":
        x = np.vstack(rows[: nx + 1])
        y = np.vstack(rows[nx + 1 :])
        return VectorField(g, x, y)
    raise ValueError(f"unknown field kind {kind!r} in {path}")
