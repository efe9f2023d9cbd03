"""Order-weight generators for axisymmetric directivity designs.

Every generator returns a WeightVector holding the per-degree gains a_0..a_N
that shape the truncated Dirac expansion

    g(x) = 1/S_{D-2} sum_n a_n / N_n^2 P_n(x)

into a particular beam: the plain truncation (basic / max-DI), the largest
energy-vector design (max-rE), the front-to-back-ratio optimum (supercardioid)
and its power-law approximation, the sidelobe-free higher-order cardioid
(inphase), max-flat designs with a prescribed split of flatness degrees, and
spherical-cap windows.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .errors import (
    DegenerateProblem,
    DomainError,
    InvalidFlatness,
    NoConvergence,
    RangeWarning,
    ZeroPressure,
)
from .quadrature import gram_front, integrate_axisym
from .ultraspherical import Dimension, derivative, eval_sequence, norms_squared

__all__ = [
    "Normalization",
    "WeightVector",
    "MaxReSolution",
    "basic",
    "max_re",
    "supercardioid",
    "supercardioid_approx",
    "inphase",
    "maxflat",
    "cap",
    "cap_trapezoid",
]


class Normalization(str, Enum):
    """Scaling conventions for a weight vector.

    A0_UNITY pins a_0 = 1, G1_UNITY pins the on-axis pattern value g(1) = 1,
    RAW keeps whatever scale the generator produced.
    """

    A0_UNITY = "a0"
    G1_UNITY = "g1"
    RAW = "raw"


@dataclass(frozen=True)
class WeightVector:
    """Design weights a_0..a_N for one dimension, tagged with their scaling."""

    dim: Dimension
    a: np.ndarray
    normalization: Normalization

    def __post_init__(self) -> None:
        arr = np.atleast_1d(np.asarray(self.a, dtype=float)).copy()
        if arr.ndim != 1 or arr.size == 0:
            raise DomainError("weights must be a non-empty 1-d sequence")
        arr.setflags(write=False)
        object.__setattr__(self, "a", arr)
        object.__setattr__(self, "normalization", Normalization(self.normalization))

    @property
    def order(self) -> int:
        return self.a.size - 1

    def front_value(self) -> float:
        """Pattern value on axis, g(1) = sum a_n / (S_{D-2} N_n^2)."""
        n2 = norms_squared(self.order, self.dim)
        return float(np.sum(self.a / (self.dim.subsurface * n2)))

    def normalized(self, kind: Normalization | str) -> "WeightVector":
        """Return a copy rescaled to the requested convention."""
        kind = Normalization(kind)
        if kind is Normalization.RAW or kind is self.normalization:
            return WeightVector(self.dim, self.a, kind)
        if kind is Normalization.A0_UNITY:
            if self.a[0] == 0.0:
                raise ZeroPressure("cannot normalize to a_0 = 1 when a_0 = 0")
            return WeightVector(self.dim, self.a / self.a[0], kind)
        scale = self.front_value()
        if scale == 0.0:
            raise DomainError("cannot normalize to g(1) = 1 when g(1) = 0")
        return WeightVector(self.dim, self.a / scale, kind)


@dataclass(frozen=True)
class MaxReSolution:
    """Max-rE weights together with the root that generated them.

    r_e_max is the largest root of P_{N+1}; it equals the rE metric of the
    weights.  It lies in (0, 1) for every N >= 1 (for N = 0 the only root of
    P_1 is 0 and the weights degenerate to the omnidirectional pattern).
    """

    weights: WeightVector
    r_e_max: float
    iterations: int


def basic(order: int, dim: Dimension) -> WeightVector:
    """Unweighted truncation a_n = 1: narrowest main lobe, maximum directivity."""
    if order < 0:
        raise DomainError("order must be >= 0")
    return WeightVector(dim, np.ones(order + 1), Normalization.A0_UNITY)


def _poly_top(x: float, deg: int, dim: Dimension) -> float:
    return float(eval_sequence(x, deg, dim)[deg])


def _largest_root_bisect(deg: int, dim: Dimension) -> float:
    """Largest root of P_deg by scanning from x = 1 for the first sign change.

    P_deg(1) = 1 > 0, so the first bracket found while walking down in the
    angle variable contains the largest root regardless of D.
    """
    steps = 8 * (deg + 2)
    prev_x, prev_f = 1.0, 1.0
    for j in range(1, steps + 1):
        x = math.cos(math.pi * j / steps)
        f = _poly_top(x, deg, dim)
        if f <= 0.0:
            lo, hi, flo = x, prev_x, f
            break
        prev_x, prev_f = x, f
    else:  # pragma: no cover - P_deg always changes sign on (-1, 1)
        raise NoConvergence("no sign change found for the largest root")
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        if mid == lo or mid == hi:
            break
        fm = _poly_top(mid, deg, dim)
        if fm <= 0.0:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def max_re(order: int, dim: Dimension) -> MaxReSolution:
    """Weights a_n = P_n(r) at the largest root r of P_{N+1}, maximizing rE.

    Newton iteration starts from cos(137.9 deg / (N + 1.51)) for D >= 2.5 and
    from the Chebyshev root cos(pi / (2 (N + 1))) otherwise; both guesses sit
    near the target root for their dimension range.  If Newton steps out of
    (0, 1) the largest root is re-bracketed by a scan from x = 1 and bisected
    instead, which cannot pick an interior root.
    """
    if order < 0:
        raise DomainError("order must be >= 0")
    if order == 0:
        # P_1 = x: the root is 0 exactly and the pattern is omnidirectional.
        return MaxReSolution(
            WeightVector(dim, np.ones(1), Normalization.A0_UNITY), 0.0, 0
        )
    deg = order + 1
    if dim.d >= 2.5:
        x = math.cos(math.radians(137.9) / (order + 1.51))
    else:
        x = math.cos(math.pi / (2.0 * (order + 1.0)))
    iterations = 0
    converged = False
    for _ in range(100):
        iterations += 1
        f = _poly_top(x, deg, dim)
        df = derivative(x, deg, dim)
        step = f / df
        x_new = x - step
        if abs(step) < 1e-15:
            x = x_new
            converged = True
            break
        if not (0.0 < x_new < 1.0):
            x = _largest_root_bisect(deg, dim)
            iterations += 1
            converged = True
            break
        x = x_new
    if not converged:
        raise NoConvergence(f"max-rE Newton did not converge for N={order}, D={dim.d}")
    weights = eval_sequence(x, order, dim)
    return MaxReSolution(
        WeightVector(dim, weights, Normalization.A0_UNITY), float(x), iterations
    )


def _jacobi_eigh(matrix: np.ndarray, tol: float = 1e-13, max_sweeps: int = 60):
    """Eigendecomposition of a small dense symmetric matrix by cyclic Jacobi rotations.

    Sweeps run until the off-diagonal Frobenius norm drops below `tol`
    (absolute; Gram matrices in this package are O(1)-scaled).  Returns
    eigenvalues ascending and the matching orthonormal eigenvector columns.
    """
    a = np.array(matrix, dtype=float)
    n = a.shape[0]
    v = np.eye(n)
    off_mask = ~np.eye(n, dtype=bool)

    def off_norm() -> float:
        return math.sqrt(float(np.sum(a[off_mask] ** 2)))

    for _ in range(max_sweeps):
        if off_norm() < tol:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if apq == 0.0:
                    continue
                tau = (a[q, q] - a[p, p]) / (2.0 * apq)
                if abs(tau) > 1e150:  # asymptotic rotation, avoids tau^2 overflow
                    t = 0.5 / tau
                else:
                    t = math.copysign(1.0, tau) / (abs(tau) + math.sqrt(1.0 + tau * tau))
                c = 1.0 / math.sqrt(1.0 + t * t)
                s = t * c
                rot_p = c * a[:, p] - s * a[:, q]
                rot_q = s * a[:, p] + c * a[:, q]
                a[:, p], a[:, q] = rot_p, rot_q
                rot_p = c * a[p, :] - s * a[q, :]
                rot_q = s * a[p, :] + c * a[q, :]
                a[p, :], a[q, :] = rot_p, rot_q
                a[p, q] = a[q, p] = 0.0
                vot_p = c * v[:, p] - s * v[:, q]
                vot_q = s * v[:, p] + c * v[:, q]
                v[:, p], v[:, q] = vot_p, vot_q
    order = np.argsort(np.diag(a))
    return np.diag(a)[order], v[:, order]


def supercardioid(order: int, dim: Dimension) -> WeightVector:
    """Weights maximizing the front-to-back energy ratio FBR = a^T G_f a / a^T G_b a.

    G_f is the front-half Gram matrix and (G_b)_nm = (-1)^(n+m) (G_f)_nm its
    back-half counterpart.  The generalized Rayleigh quotient is reduced by a
    Cholesky factor of G_b to a standard symmetric problem, solved by cyclic
    Jacobi rotations; the eigenvector of the largest eigenvalue is
    back-substituted, sign-fixed so g(1) > 0, and normalized to a_0 = 1.
    """
    if order < 1:
        raise DomainError("supercardioid requires order >= 1")
    gram = gram_front(order, dim)
    g_f = gram.entries
    g_b = gram.back_entries
    try:
        chol = np.linalg.cholesky(g_b)
    except np.linalg.LinAlgError as exc:
        raise DegenerateProblem("back-half Gram matrix is not positive definite") from exc
    reduced = np.linalg.solve(chol, np.linalg.solve(chol, g_f).T).T
    reduced = 0.5 * (reduced + reduced.T)
    eigvals, eigvecs = _jacobi_eigh(reduced)
    y = eigvecs[:, int(np.argmax(eigvals))]
    a = np.linalg.solve(chol.T, y)
    vec = WeightVector(dim, a, Normalization.RAW)
    if vec.front_value() < 0.0:
        vec = WeightVector(dim, -a, Normalization.RAW)
    return vec.normalized(Normalization.A0_UNITY)


def supercardioid_approx(order: int, dim: Dimension) -> WeightVector:
    """Power-law shortcut a_n = (a_n,inphase)^beta to the supercardioid weights.

    beta = (0.73 N + 0.67 D - 1.11) / (N + 1.11 D - 1.5), an empirical fit for
    1 <= N <= 10 and D in [2, 3]; outside that range a RangeWarning is issued
    and the formula extrapolates.
    """
    if order < 0:
        raise DomainError("order must be >= 0")
    if not (1 <= order <= 10) or not (2.0 <= dim.d <= 3.0):
        warnings.warn(
            f"supercardioid_approx fitted for 1 <= N <= 10, 2 <= D <= 3; "
            f"got N={order}, D={dim.d}",
            RangeWarning,
            stacklevel=2,
        )
    exponent = (0.73 * order + 0.67 * dim.d - 1.11) / (order + 1.11 * dim.d - 1.5)
    a = inphase(order, dim).a ** exponent
    return WeightVector(dim, a, Normalization.A0_UNITY)


def inphase(order: int, dim: Dimension) -> WeightVector:
    """Sidelobe-free weights a_n = N! (N+D-2)! / ((N-n)! (N+n+D-2)!).

    The pattern is proportional to (1+x)^N, an N-fold zero at the anti-axis
    point.  Factorial ratios go through log-Gamma so real D and orders up to
    64 stay in range.
    """
    if order < 0:
        raise DomainError("order must be >= 0")
    d = dim.d
    base = math.lgamma(order + 1.0) + math.lgamma(order + d - 1.0)
    a = np.array(
        [
            math.exp(base - math.lgamma(order - n + 1.0) - math.lgamma(order + n + d - 1.0))
            for n in range(order + 1)
        ]
    )
    return WeightVector(dim, a, Normalization.A0_UNITY)


def maxflat(order: int, flat_l: int, dim: Dimension) -> WeightVector:
    """Max-flat (Butterworth) design with L flatness degrees at x = 1.

    The pattern is the integral of (1-x)^L (1+x)^M with N = L + M + 1, so it
    rises from g(-1) = 0 with M-degree flatness to g(1) = 1 with L-degree
    flatness.  Weights follow the forward iteration

        a_{n+1} = -[(N-n+1)(n-1) a_{n-1} + 2 dN (n+alpha) a_n]
                  / ((N+n+2 alpha+1)(n+2 alpha+1)),   dN = L - M,

    from a_1 = 1; a_0 is fixed by g(-1) = 0 and the result is scaled to
    G1_UNITY.  L = 0 reproduces the inphase weights.
    """
    if not (0 <= flat_l <= order - 1):
        raise InvalidFlatness(
            f"flat_l must satisfy 0 <= L <= N-1, got L={flat_l}, N={order}"
        )
    m_deg = order - flat_l - 1
    delta = float(flat_l - m_deg)
    alpha = dim.alpha
    a = np.zeros(order + 1)
    a[1] = 1.0
    for n in range(1, order):
        a[n + 1] = -(
            (order - n + 1.0) * (n - 1.0) * a[n - 1]
            + 2.0 * delta * (n + alpha) * a[n]
        ) / ((order + n + 2.0 * alpha + 1.0) * (n + 2.0 * alpha + 1.0))
    n2 = norms_squared(order, dim)
    ratio = n2[0] / n2
    signs = (-1.0) ** np.arange(order + 1)
    a[0] = -float(np.sum(signs[1:] * ratio[1:] * a[1:]))
    b = float(np.sum((1.0 - signs[1:]) * ratio[1:] * a[1:]))
    vec = WeightVector(dim, a / b, Normalization.RAW)
    return vec.normalized(Normalization.G1_UNITY)


def cap(order: int, x0: float, dim: Dimension) -> WeightVector:
    """Expansion weights of the spherical-cap indicator of the region x >= x0.

    a_n = w(x0)/(2n + 2 alpha) [P_{n-1}(x0) - P_{n+1}(x0)] for n >= 1.  The
    zeroth weight is the cap area integral: arccos(x0) for D = 2, 1 - x0 for
    D = 3, and the quadrature of w over [x0, 1] for any other dimension
    (standing in for the hypergeometric closed form).
    """
    if order < 0:
        raise DomainError("order must be >= 0")
    if not (-1.0 < x0 < 1.0):
        raise DomainError(f"cap boundary must satisfy -1 < x0 < 1, got {x0}")
    a = np.empty(order + 1)
    if dim.d == 2.0:
        a[0] = math.acos(x0)
    elif dim.d == 3.0:
        a[0] = 1.0 - x0
    else:
        a[0] = integrate_axisym(np.ones_like, dim, 0, lower=x0)
    if order >= 1:
        seq = eval_sequence(x0, order + 1, dim)
        w0 = (1.0 - x0 * x0) ** (dim.alpha - 0.5)
        n = np.arange(1, order + 1)
        a[1:] = w0 / (2.0 * n + 2.0 * dim.alpha) * (seq[n - 1] - seq[n + 1])
    return WeightVector(dim, a, Normalization.RAW)


def cap_trapezoid(order: int, spacing_deg: float, dim: Dimension) -> WeightVector:
    """Trapezoidal window from the product of two differently sized caps.

    The caps have boundaries x0 = cos(1.375 s / 2) and cos(0.75 s / 2) for the
    spacing angle s; multiplying their weight sequences realizes the angular
    convolution of the two indicator functions.
    """
    if not (0.0 < spacing_deg < 180.0 / 1.375):
        raise DomainError(
            f"spacing must satisfy 0 < s < {180.0 / 1.375:.3f} deg, got {spacing_deg}"
        )
    s = math.radians(spacing_deg)
    wide = cap(order, math.cos(1.375 * s / 2.0), dim)
    narrow = cap(order, math.cos(0.75 * s / 2.0), dim)
    return WeightVector(dim, wide.a * narrow.a, Normalization.RAW)
