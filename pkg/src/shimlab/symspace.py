"""Models of the two symmetric spaces and their tangent-fiber integrals.

Ball case: negative lines of diag(1,1,-1) in affine chart (z1, z2),
|z1|^2 + |z2|^2 < 1, metric scaled so the minimum of the sectional
curvature is -1 (holomorphic sectional curvature -1); the scale constant
BALL_METRIC_SCALE = 4 multiplies the unit-Bergman metric and every density
here derives from it.  Bidisk case: two upper-half-plane factors, each of
curvature -1.

The fiber machinery evaluates a (1,1)-coefficient matrix on projectivized
tangent directions and averages it over the fiber: over all of P^1 in the
ball case, over the isometry-graph circle (1 : e^{i t}) in the bidisk case.
Both averages converge to half the trace of the coefficient matrix.
"""

from __future__ import annotations

from dataclasses import dataclass

import mpmath as mp
import numpy as np

from .errors import (
    NotPositiveError,
    OutsideDomainError,
    ZeroDirectionError,
)
from .hermitian import HermitianForm, conjugator, orthogonal_completion

# Metric normalization: the complex hyperbolic metric with holomorphic
# sectional curvature -1 (sectional curvature pinched in [-1, -1/4]) is
# BALL_METRIC_SCALE times the metric -dd^c log(1 - |z|^2).
BALL_METRIC_SCALE = 4.0

# Density of the surface volume form against Lebesgue measure at the center.
BALL_AREA_DENSITY_CENTER = BALL_METRIC_SCALE ** 2


@dataclass(frozen=True)
class BallPoint:
    """Affine-chart point of the complex 2-ball."""

    z1: complex
    z2: complex
    chart: str = "affine"

    def __post_init__(self):
        if abs(self.z1) ** 2 + abs(self.z2) ** 2 >= 1.0:
            raise OutsideDomainError(
                f"({self.z1}, {self.z2}) is not inside the unit ball")

    def radius_sq(self) -> float:
        return abs(self.z1) ** 2 + abs(self.z2) ** 2


@dataclass(frozen=True)
class BidiskPoint:
    """Point of H x H, both coordinates in the upper half plane."""

    w1: complex
    w2: complex

    def __post_init__(self):
        if not (self.w1.imag > 0 and self.w2.imag > 0):
            raise OutsideDomainError(
                f"({self.w1}, {self.w2}) is not in the product of half planes")


@dataclass(frozen=True)
class OneOneForm:
    """Coefficient matrix (a_ij) of a real (1,1)-form at a point; must be
    Hermitian: a[1][0] == conj(a[0][1]), real diagonal."""

    coeffs: tuple

    def __post_init__(self):
        a = self.coeffs
        if len(a) != 2 or any(len(r) != 2 for r in a):
            raise ValueError("coefficient matrix must be 2x2")
        if abs(complex(a[0][0]).imag) > 0 or abs(complex(a[1][1]).imag) > 0:
            raise ValueError("diagonal coefficients must be real")
        if abs(complex(a[0][1]) - complex(a[1][0]).conjugate()) > 0:
            raise ValueError("coefficient matrix must be Hermitian")

    @classmethod
    def make(cls, a11, a12, a22) -> "OneOneForm":
        return cls(((complex(a11), complex(a12)),
                    (complex(a12).conjugate(), complex(a22))))

    @classmethod
    def kahler(cls) -> "OneOneForm":
        return cls.make(1.0, 0.0, 1.0)

    def trace_half(self) -> float:
        return (complex(self.coeffs[0][0]).real
                + complex(self.coeffs[1][1]).real) / 2.0


@dataclass(frozen=True)
class TangentDirection:
    """Projective class of a nonzero tangent vector (v1, v2)."""

    v1: complex
    v2: complex

    def __post_init__(self):
        if self.v1 == 0 and self.v2 == 0:
            raise ZeroDirectionError("tangent direction must be nonzero")


def direction_value(alpha: OneOneForm, direction) -> float:
    """Value of the (1,1)-coefficient matrix on a projective direction:

        (a11 |v1|^2 + a22 |v2|^2 + 2 Im(a12 v1 conj(v2))) / (|v1|^2 + |v2|^2)

    Real, invariant under complex rescaling of (v1, v2).  Accepts floats or
    mpmath values for the direction; the arithmetic follows the input type.
    """
    if isinstance(direction, TangentDirection):
        v1, v2 = direction.v1, direction.v2
    else:
        v1, v2 = direction
    if v1 == 0 and v2 == 0:
        raise ZeroDirectionError("tangent direction must be nonzero")
    a11 = complex(alpha.coeffs[0][0]).real
    a22 = complex(alpha.coeffs[1][1]).real
    a12 = complex(alpha.coeffs[0][1])
    n1 = v1 * _conj(v1)
    n2 = v2 * _conj(v2)
    cross = v1 * _conj(v2)
    cross_term = a12.real * _im(cross) + a12.imag * _re(cross)
    return (a11 * _re(n1) + a22 * _re(n2) + 2 * cross_term) / (_re(n1) + _re(n2))


def _conj(x):
    return x.conjugate() if hasattr(x, "conjugate") else complex(x).conjugate()


def _re(x):
    return x.real


def _im(x):
    return x.imag


def _gauss_legendre(order: int):
    return np.polynomial.legendre.leggauss(order)


def fiber_average(alpha: OneOneForm, case: str, quadrature_order: int) -> float:
    """Average of the direction function over one tangent fiber.

    Ball case: integral over P^1 against the unit-mass Fubini-Study area,
    tensor Gauss-Legendre in the polar angle and trapezoid in the phase.
    Bidisk case: trapezoid average over the circle of isometry graphs.
    Both tend to (a11 + a22)/2.
    """
    if quadrature_order < 4:
        raise ValueError("quadrature_order must be >= 4")
    a11 = complex(alpha.coeffs[0][0]).real
    a22 = complex(alpha.coeffs[1][1]).real
    a12 = complex(alpha.coeffs[0][1])
    n_phase = 2 * quadrature_order
    phases = np.exp(-1j * (2.0 * np.pi * np.arange(n_phase) / n_phase))
    if case in ("one", "bidisk"):
        # directions (1, e^{it}) / sqrt(2): v1 conj(v2) = e^{-it} / 2
        vals = 0.5 * a11 + 0.5 * a22 + np.imag(a12 * phases)
        return float(np.mean(vals))
    if case in ("two", "ball"):
        nodes, weights = _gauss_legendre(quadrature_order)
        theta = 0.25 * np.pi * (nodes + 1.0)  # [0, pi/2]
        wq = 0.25 * np.pi * weights
        c, s = np.cos(theta), np.sin(theta)
        # FS probability measure: sin(2 theta) dtheta x dphi/(2 pi);
        # the phase mean enters linearly through Im(a12 * mean(phases))
        base = a11 * c * c + a22 * s * s
        cross_mean = float(np.imag(a12 * np.mean(phases)))
        fiber = base + 2.0 * c * s * cross_mean
        return float(np.sum(wq * np.sin(2.0 * theta) * fiber))
    raise ValueError(f"unknown case {case!r}")


def fiber_average_dense(alpha: OneOneForm, case: str, quadrature_order: int) -> float:
    """Same integral as fiber_average but evaluating the direction function
    pointwise on the full tensor grid (no analytic phase shortcut); used as
    the slow cross-check in tests."""
    if quadrature_order < 4:
        raise ValueError("quadrature_order must be >= 4")
    n_phase = 2 * quadrature_order
    ts = 2.0 * np.pi * np.arange(n_phase) / n_phase
    if case in ("one", "bidisk"):
        vals = [direction_value(alpha, (1.0, complex(np.cos(t), np.sin(t))))
                for t in ts]
        return float(np.mean(vals))
    nodes, weights = _gauss_legendre(quadrature_order)
    theta = 0.25 * np.pi * (nodes + 1.0)
    wq = 0.25 * np.pi * weights
    total = 0.0
    for th, w in zip(theta, wq):
        ring = [direction_value(
            alpha, (np.cos(th), np.sin(th) * complex(np.cos(t), np.sin(t))))
            for t in ts]
        total += w * np.sin(2.0 * th) * float(np.mean(ring))
    return total


def kahler_area_density(case: str, point, metric_scale: float = BALL_METRIC_SCALE) -> float:
    """Density of the invariant surface volume against Lebesgue measure in
    the model coordinates.

    Bidisk: product of (Im w_k)^-2, one factor per half plane (value 1 per
    factor at (i, i)).  Ball: det of the scaled metric,
    metric_scale^2 / (1 - |z|^2)^3, equal to the squared scale constant at
    the center.
    """
    if case in ("one", "bidisk"):
        if not isinstance(point, BidiskPoint):
            point = BidiskPoint(complex(point[0]), complex(point[1]))
        return float(1.0 / (point.w1.imag ** 2 * point.w2.imag ** 2))
    if case in ("two", "ball"):
        if not isinstance(point, BallPoint):
            point = BallPoint(complex(point[0]), complex(point[1]))
        r2 = point.radius_sq()
        return float(metric_scale ** 2 / (1.0 - r2) ** 3)
    raise ValueError(f"unknown case {case!r}")


def disk_area(radius: float) -> float:
    """Area of a hyperbolic disk of the given radius at curvature -1."""
    return float(2.0 * np.pi * (np.cosh(radius) - 1.0))


class GeodesicDisk:
    """Holomorphic parametrization of the negative lines orthogonal to an
    h-positive vector.

    The unit-disk coordinate carries the curvature -1 Poincare metric
    (the induced metric on a totally geodesic complex curve under the
    BALL_METRIC_SCALE normalization), so hyperbolic-polar sampling in w is
    area-uniform sampling on the curve.
    """

    def __init__(self, form: HermitianForm, line, precision: int = 100):
        from .hermitian import vector_sign

        if vector_sign(form, line) <= 0:
            raise NotPositiveError("geodesic disk needs an h-positive line")
        self.form = form
        self.line = tuple(line)
        self.basis = orthogonal_completion(form, line)
        self.precision = precision
        self._g_mp = conjugator(form, self.basis, precision)
        self.matrix = np.array(
            [[complex(self._g_mp[i, j]) for j in range(3)] for i in range(3)],
            dtype=np.complex128,
        )

    def homogeneous(self, w: complex) -> np.ndarray:
        """Homogeneous coordinates of the curve point at disk coordinate w."""
        return self.matrix @ np.array([0.0, w, 1.0], dtype=np.complex128)

    def point(self, w: complex) -> BallPoint:
        p = self.homogeneous(w)
        return BallPoint(complex(p[0] / p[2]), complex(p[1] / p[2]))

    def homogeneous_mp(self, w):
        with mp.workdps(self.precision):
            vec = [self._g_mp[i, 1] * w + self._g_mp[i, 2] for i in range(3)]
            return vec

    def orthogonality_residual(self, w) -> float:
        """|h(line, point(w))| at working precision; 0 for exact geometry."""
        with mp.workdps(self.precision):
            p = self.homogeneous_mp(mp.mpc(w))
            gram = [[_mpc_of(self.form.gram[i][j]) for j in range(3)]
                    for i in range(3)]
            val = mp.mpc(0)
            for i in range(3):
                for j in range(3):
                    li = _mpc_of_vec(self.line[i])
                    val += mp.conj(li) * gram[i][j] * p[j]
            return float(abs(val))


def _mpc_of(q):
    return mp.mpc(mp.mpf(q.num.a) / q.den, mp.mpf(q.num.b) / q.den)


def _mpc_of_vec(c):
    from .gaussian import QuadInt, QuadRat

    if isinstance(c, QuadInt):
        return mp.mpc(c.a, c.b)
    if isinstance(c, QuadRat):
        return _mpc_of(c)
    return mp.mpc(c)


def ball_delta(x: np.ndarray, y: np.ndarray) -> np.ndarray:
    """cosh^2 of half the distance between negative lines (homogeneous)."""
    pair = (np.conj(x[..., 0]) * y[..., 0] + np.conj(x[..., 1]) * y[..., 1]
            - np.conj(x[..., 2]) * y[..., 2])
    nx = (np.abs(x[..., 0]) ** 2 + np.abs(x[..., 1]) ** 2
          - np.abs(x[..., 2]) ** 2)
    ny = (np.abs(y[..., 0]) ** 2 + np.abs(y[..., 1]) ** 2
          - np.abs(y[..., 2]) ** 2)
    return (np.abs(pair) ** 2) / (nx * ny)


def ball_distance(x: np.ndarray, y: np.ndarray) -> np.ndarray:
    """Distance in the curvature-normalized ball metric."""
    d = np.maximum(ball_delta(x, y), 1.0)
    return 2.0 * np.arccosh(np.sqrt(d))


def halfplane_distance(z: np.ndarray, w: np.ndarray) -> np.ndarray:
    u = 1.0 + (np.abs(z - w) ** 2) / (2.0 * z.imag * w.imag)
    return np.arccosh(np.maximum(u, 1.0))


def bidisk_distance_sq(p: np.ndarray, q: np.ndarray) -> np.ndarray:
    """Squared product distance on H x H (points as (..., 2) complex)."""
    return (halfplane_distance(p[..., 0], q[..., 0]) ** 2
            + halfplane_distance(p[..., 1], q[..., 1]) ** 2)


def sample_disk_radius(u: float, radius: float) -> float:
    """Inverse-CDF radius draw: area-uniform in a curvature -1 disk."""
    return float(np.arccosh(1.0 + u * (np.cosh(radius) - 1.0)))


def disk_coordinate(r: float, theta: float) -> complex:
    """Poincare-disk coordinate of the polar point (r, theta), curvature -1."""
    rho = np.tanh(0.5 * r)
    return complex(rho * np.cos(theta), rho * np.sin(theta))
