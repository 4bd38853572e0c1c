"""Scalar root finding, Legendre polynomials and finite differences."""

from __future__ import annotations

import math
import sys
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .errors import DomainError, MaxIterExceeded, NoSignChange

_EPS = sys.float_info.epsilon


@dataclass(frozen=True)
class RootConfig:
    rel_tol: float = 1e-12
    abs_tol: float = 1e-18
    max_iter: int = 200

    def __post_init__(self):
        if not (self.rel_tol > 0 and self.abs_tol > 0):
            raise DomainError("tolerances must be positive", "RootConfig")
        if self.max_iter < 1:
            raise DomainError("max_iter must be >= 1", "RootConfig")


DEFAULT_ROOT = RootConfig()


@dataclass(frozen=True)
class RootResult:
    """Converged root together with the final bracket ``[lo, hi]``."""

    root: float
    lo: float
    hi: float
    iterations: int


def brent(
    f: Callable[[float], float], lo: float, hi: float, cfg: RootConfig = DEFAULT_ROOT
) -> RootResult:
    """Brent's method (bisection + secant + inverse quadratic interpolation).

    The returned bracket always contains a sign change and the root estimate
    is the endpoint with the smaller residual.
    """
    a, b = float(lo), float(hi)
    fa, fb = f(a), f(b)
    if fa == 0.0:
        return RootResult(a, a, a, 0)
    if fb == 0.0:
        return RootResult(b, b, b, 0)
    if math.copysign(1.0, fa) == math.copysign(1.0, fb):
        raise NoSignChange(
            f"f({a:g})={fa:g} and f({b:g})={fb:g} have the same sign", "solve_bracketed"
        )

    c, fc = a, fa
    d = e = b - a
    for it in range(1, cfg.max_iter + 1):
        if (fb > 0) == (fc > 0):
            c, fc = a, fa
            d = e = b - a
        if abs(fc) < abs(fb):
            a, b, c = b, c, b
            fa, fb, fc = fb, fc, fb

        tol = 0.5 * max(cfg.abs_tol, cfg.rel_tol * abs(b), 4.0 * _EPS * abs(b))
        xm = 0.5 * (c - b)
        if fb == 0.0:
            return RootResult(b, b, b, it)
        if abs(xm) <= tol:
            return RootResult(b, min(b, c), max(b, c), it)

        if abs(e) >= tol and abs(fa) > abs(fb):
            s = fb / fa
            if a == c:
                p = 2.0 * xm * s
                q = 1.0 - s
            else:
                q = fa / fc
                r = fb / fc
                p = s * (2.0 * xm * q * (q - r) - (b - a) * (r - 1.0))
                q = (q - 1.0) * (r - 1.0) * (s - 1.0)
            if p > 0:
                q = -q
            p = abs(p)
            if 2.0 * p < min(3.0 * xm * q - abs(tol * q), abs(e * q)):
                e, d = d, p / q
            else:
                d = e = xm
        else:
            d = e = xm

        a, fa = b, fb
        b += d if abs(d) > tol else math.copysign(tol, xm)
        fb = f(b)

    raise MaxIterExceeded(f"no convergence after {cfg.max_iter} iterations", "solve_bracketed")


def solve_bracketed(
    f: Callable[[float], float], lo: float, hi: float, cfg: RootConfig = DEFAULT_ROOT
) -> float:
    return brent(f, lo, hi, cfg).root


def expand_bracket(
    f: Callable[[float], float],
    lo: float,
    step: float,
    growth: float = 2.0,
    max_span: float | None = None,
) -> tuple[float, float]:
    """Scan upward from ``lo`` with geometrically growing steps.

    Returns the first interval whose end values differ in sign (or hit zero).
    ``max_span`` defaults to 1e4 times the initial step.
    """
    if not step > 0:
        raise DomainError("step must be > 0", "expand_bracket")
    if not growth > 1:
        raise DomainError("growth must be > 1", "expand_bracket")
    if max_span is None:
        max_span = 1e4 * step
    limit = lo + max_span

    a, fa = lo, f(lo)
    if fa == 0.0:
        return a, a
    width = step
    while a < limit:
        b = min(a + width, limit)
        fb = f(b)
        if fb == 0.0 or (fa > 0) != (fb > 0):
            return a, b
        a, fa = b, fb
        width *= growth
    raise NoSignChange(f"no sign change in [{lo:g}, {limit:g}]", "expand_bracket")


def legendre(n: int, x):
    """P_n(x) by the three-term recurrence. Accepts scalars or arrays."""
    if n < 0:
        raise DomainError("degree must be >= 0", "legendre")
    xa = np.asarray(x, dtype=float)
    if np.any(np.abs(xa) > 1.0):
        raise DomainError("argument outside [-1, 1]", "legendre")
    return legendre_table(n, x)[n]


def legendre_table(n_max: int, x) -> list:
    """[P_0(x), ..., P_n_max(x)] without domain checks."""
    p_prev = np.ones_like(np.asarray(x, dtype=float))
    if np.ndim(p_prev) == 0:
        p_prev = float(p_prev)
        x = float(x)
    out = [p_prev]
    if n_max == 0:
        return out
    p = x * 1.0
    out.append(p)
    for k in range(1, n_max):
        p_prev, p = p, ((2 * k + 1) * x * p - k * p_prev) / (k + 1)
        out.append(p)
    return out


def central_diff(f: Callable[[float], float], x: float, h: float) -> float:
    if not h > 0:
        raise DomainError("step must be > 0", "central_diff")
    return (f(x + h) - f(x - h)) / (2.0 * h)
