"""Numerical integration oracle for the axisymmetric measure w(x) = (1-x^2)^((D-3)/2).

For integer D the substitution x = cos(phi) turns int f(x) w(x) dx into
int f(cos phi) sin(phi)^(D-2) dphi, a smooth integrand that one Gauss-Legendre
rule integrates spectrally for every bound pair, including the D = 2 endpoint
singularity of w itself.  For non-integer D the substituted integrand keeps
algebraic endpoint singularities in its derivatives and Gauss-Legendre decays
only polynomially, so those dimensions use Gauss-Jacobi rules on x instead,
which absorb the fractional weight exactly.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np
from scipy import special as sps

from .errors import DomainError
from .ultraspherical import Dimension, eval_sequence, norms_squared

__all__ = ["integrate_axisym", "transform_coeffs", "GramMatrix", "gram_front", "gram_closed_form"]


@lru_cache(maxsize=128)
def _legendre_rule(count: int):
    return np.polynomial.legendre.leggauss(count)


@lru_cache(maxsize=128)
def _jacobi_rule(count: int, a: float, b: float):
    return sps.roots_jacobi(count, a, b)


def _node_count(degree_hint: int, dim: Dimension) -> int:
    return max(64, degree_hint + math.ceil(dim.d) + 16)


def _rule(dim: Dimension, count: int, lower: float, upper: float):
    """Nodes x_i and weights q_i with sum q_i f(x_i) ~= int_lower^upper f w dx."""
    d = dim.d
    if d == math.floor(d):
        phi_lo = math.acos(upper)
        phi_hi = math.acos(lower)
        t, w = _legendre_rule(count)
        half = 0.5 * (phi_hi - phi_lo)
        phi = phi_lo + half * (t + 1.0)
        return np.cos(phi), half * w * np.sin(phi) ** (d - 2.0)
    a = dim.alpha - 0.5
    if lower == -1.0 and upper == 1.0:
        return _jacobi_rule(count, a, a)
    if upper == 1.0:
        # map [-1,1] -> [lower,1]; (1-x)^a becomes the Jacobi factor (1-u)^a
        u, w = _jacobi_rule(count, a, 0.0)
        scale = 0.5 * (1.0 - lower)
        x = lower + scale * (u + 1.0)
        return x, w * scale ** (a + 1.0) * (1.0 + x) ** a
    if lower == -1.0:
        u, w = _jacobi_rule(count, 0.0, a)
        scale = 0.5 * (upper + 1.0)
        x = -1.0 + scale * (u + 1.0)
        return x, w * scale ** (a + 1.0) * (1.0 - x) ** a
    # interior range: w is smooth there, plain Gauss-Legendre on x
    t, w = _legendre_rule(count)
    half = 0.5 * (upper - lower)
    x = lower + half * (t + 1.0)
    return x, half * w * (1.0 - x * x) ** a


def integrate_axisym(f, dim: Dimension, degree_hint: int = 0,
                     lower: float = -1.0, upper: float = 1.0) -> float:
    """Integral of f(x) (1-x^2)^((D-3)/2) dx over [lower, upper] within [-1, 1].

    Parameters
    ----------
    f : callable
        Accepts a numpy array of points in [-1, 1] and returns values of the
        same shape.  Must be finite on the open interval.
    dim : Dimension
    degree_hint : int
        Polynomial degree of f if f is polynomial; sizes the rule as
        max(64, degree_hint + ceil(D) + 16) nodes.
    lower, upper : float
        Integration bounds, -1 <= lower < upper <= 1.
    """
    if degree_hint < 0:
        raise DomainError("degree_hint must be >= 0")
    if not (-1.0 <= lower < upper <= 1.0):
        raise DomainError(f"invalid integration bounds [{lower}, {upper}]")
    x, q = _rule(dim, _node_count(degree_hint, dim), lower, upper)
    return float(np.dot(q, np.asarray(f(x), dtype=float)))


def transform_coeffs(f, max_degree: int, dim: Dimension, degree_hint: int = 0) -> np.ndarray:
    """Expansion coefficients gamma_n = (1/N_n^2) int f(x) P_n(x) w(x) dx for n <= N.

    Inverts the orthogonal expansion f = sum gamma_n P_n; `degree_hint` is the
    polynomial degree of f if known (the rule is sized for f times P_N).
    """
    if max_degree < 0:
        raise DomainError("max_degree must be >= 0")
    x, q = _rule(dim, _node_count(degree_hint + max_degree, dim), -1.0, 1.0)
    common = np.asarray(f(x), dtype=float) * q
    seq = eval_sequence(x, max_degree, dim)
    return (seq @ common) / norms_squared(max_degree, dim)


@dataclass(frozen=True)
class GramMatrix:
    """Half-interval Gram matrix g_nm = int_0^1 P_n P_m / (N_n^2 N_m^2) w dx.

    entries is symmetric with same-parity off-diagonal entries exactly zero
    (those integrands are even, so the half-interval integral inherits full
    orthogonality).  back_entries flips the sign pattern to integrate over
    [-1, 0] instead.
    """

    order: int
    dim: Dimension
    entries: np.ndarray

    @property
    def back_entries(self) -> np.ndarray:
        """Gram matrix of the back half-interval, b_nm = (-1)^(n+m) g_nm."""
        sign = (-1.0) ** np.arange(self.order + 1)
        return self.entries * np.outer(sign, sign)


def gram_front(max_degree: int, dim: Dimension) -> GramMatrix:
    """Numeric front-half Gram matrix of the normalized polynomials.

    The scaling 1/(N_n^2 N_m^2) matches the pattern convention
    g(x) = sum a_n / (S_{D-2} N_n^2) P_n(x), which makes a^T G a proportional
    to the front-half energy of the pattern.
    """
    if max_degree < 0:
        raise DomainError("max_degree must be >= 0")
    x, q = _rule(dim, _node_count(2 * max_degree, dim), 0.0, 1.0)
    seq = eval_sequence(x, max_degree, dim) / norms_squared(max_degree, dim)[:, None]
    g = np.empty((max_degree + 1, max_degree + 1), dtype=float)
    for n in range(max_degree + 1):
        for m in range(n, max_degree + 1):
            if m != n and (m - n) % 2 == 0:
                val = 0.0
            else:
                val = float(np.dot(seq[n] * seq[m], q))
            g[n, m] = val
            g[m, n] = val
    return GramMatrix(order=max_degree, dim=dim, entries=g)


def gram_closed_form(max_degree: int, dim: Dimension) -> np.ndarray:
    """Closed-form cross-check of `gram_front`.

    Diagonal entries are 1/(2 N_n^2); opposite-parity entries follow from the
    boundary term of the Sturm-Liouville identity evaluated at x = 0,

        int_0^1 P_n P_m w dx = [P_n'(0) P_m(0) - P_m'(0) P_n(0)] / (lambda_n - lambda_m)

    with lambda_n = n (n + D - 2).  Same-parity off-diagonal entries vanish.
    """
    from .ultraspherical import derivative, value_at_zero

    n2 = norms_squared(max_degree, dim)
    d = dim.d
    lam = np.array([n * (n + d - 2.0) for n in range(max_degree + 1)])
    p0 = np.array([value_at_zero(n, dim) for n in range(max_degree + 1)])
    dp0 = np.array([derivative(0.0, n, dim) for n in range(max_degree + 1)])
    g = np.zeros((max_degree + 1, max_degree + 1), dtype=float)
    for n in range(max_degree + 1):
        g[n, n] = 1.0 / (2.0 * n2[n])
        for m in range(n + 1, max_degree + 1):
            if (m - n) % 2 == 0:
                continue
            raw = (dp0[n] * p0[m] - dp0[m] * p0[n]) / (lam[n] - lam[m])
            g[n, m] = g[m, n] = raw / (n2[n] * n2[m])
    return g
