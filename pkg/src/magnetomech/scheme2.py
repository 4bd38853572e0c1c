"""Superconducting ring levitated above a fixed magnet sphere.

The ring (flux qubit) floats at height ``h`` above a point dipole. The
levitation model is governed by the dimensionless load

    alpha = 16 pi^2 r^2 g rho R^5 (ln(8R/r) - 2) / (mu0 m_mag^2)

and the height solves ``alpha = 6x / (1 + x^2)^4`` with ``x = h/R`` on the
branch ``x > 1/sqrt(7)``. The right-hand side peaks at 1.3293, above which no
stable levitation exists.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass, replace

from .core import CONSTANTS, MagnetSphere, SCRing
from .errors import DomainError, NoSignChange, UnstableTrapError
from .numerics import DEFAULT_ROOT, RootConfig, brent, expand_bracket

STABILITY_BOUND = 1.329
MARGINAL_X = 1.0 / math.sqrt(7.0)


def height_load_curve(x: float) -> float:
    """6x / (1 + x^2)^4, the restoring-force shape versus x = h/R."""
    return 6.0 * x / (1.0 + x * x) ** 4


#: Exact peak of :func:`height_load_curve`, at x^2 = 1/7.
LOAD_PEAK = height_load_curve(MARGINAL_X)


@dataclass(frozen=True)
class Scheme2Config:
    magnet: MagnetSphere
    ring: SCRing

    def with_loop_radius(self, R: float) -> "Scheme2Config":
        return replace(self, ring=replace(self.ring, loop_radius_R=R))


@dataclass(frozen=True)
class LevitationSolution:
    height_h: float
    trap_freq_hz: float
    stability_alpha: float
    stable: bool


def _log_factor(ring: SCRing, op: str) -> float:
    val = math.log(8.0 * ring.loop_radius_R / ring.wire_radius_r) - 2.0
    if val <= 0:
        raise DomainError("requires ln(8R/r) > 2", op)
    return val


def stability_parameter(cfg: Scheme2Config) -> float:
    ring = cfg.ring
    m = cfg.magnet.moment
    if m == 0:
        raise DomainError("magnet moment is zero", "stability_parameter")
    return (
        16.0
        * math.pi**2
        * ring.wire_radius_r**2
        * CONSTANTS.g_accel
        * ring.density_rho
        * ring.loop_radius_R**5
        * _log_factor(ring, "stability_parameter")
        / (CONSTANTS.mu0 * m**2)
    )


def critical_radius(cfg: Scheme2Config, root_cfg: RootConfig = DEFAULT_ROOT) -> float:
    """Largest loop radius with alpha < 1.329. The configured R is ignored."""
    r = cfg.ring.wire_radius_r

    def f(R):
        return stability_parameter(cfg.with_loop_radius(R)) - STABILITY_BOUND

    lo, hi = 10.0 * r, 1e4 * r
    try:
        return brent(f, lo, hi, root_cfg).root
    except NoSignChange as exc:
        raise NoSignChange(f"alpha does not cross {STABILITY_BOUND} in [10r, 1e4 r]",
                           "critical_radius") from exc


def height_ratio(alpha: float, root_cfg: RootConfig = DEFAULT_ROOT) -> float:
    """Stable-branch solution x = h/R of alpha = 6x/(1+x^2)^4."""
    if alpha >= LOAD_PEAK:
        raise UnstableTrapError(f"no equilibrium for alpha={alpha:.6g}", "equilibrium_height")
    if not alpha > 0:
        raise DomainError("alpha must be > 0", "equilibrium_height")

    def f(x):
        return alpha - height_load_curve(x)

    # f(MARGINAL_X) < 0 and f -> alpha > 0 as x -> infinity
    lo, hi = expand_bracket(f, MARGINAL_X, 0.1, 2.0, 1e6)
    return brent(f, lo, hi, root_cfg).root


def equilibrium_height(cfg: Scheme2Config, root_cfg: RootConfig = DEFAULT_ROOT) -> float:
    alpha = stability_parameter(cfg)
    if alpha >= STABILITY_BOUND:
        raise UnstableTrapError(
            f"requires alpha < {STABILITY_BOUND} (alpha={alpha:.6g})", "equilibrium_height"
        )
    return height_ratio(alpha, root_cfg) * cfg.ring.loop_radius_R


def trap_frequency_hz(cfg: Scheme2Config, h: float) -> float:
    ring = cfg.ring
    R, r = ring.loop_radius_R, ring.wire_radius_r
    x = h / R
    stiff = 7.0 * x * x - 1.0
    if stiff < 0:
        raise UnstableTrapError("requires h/R > 1/sqrt(7)", "trap_frequency_hz")
    m = cfg.magnet.moment
    num = 3.0 * CONSTANTS.mu0 * m**2 * stiff
    den = (
        128.0
        * math.pi**4
        * r**2
        * ring.density_rho
        * R**6
        * _log_factor(ring, "trap_frequency_hz")
        * (1.0 + x * x) ** 5
    )
    return math.sqrt(num / den)


def levitate(cfg: Scheme2Config) -> LevitationSolution:
    alpha = stability_parameter(cfg)
    if alpha >= STABILITY_BOUND:
        return LevitationSolution(math.nan, math.nan, alpha, False)
    h = equilibrium_height(cfg)
    return LevitationSolution(h, trap_frequency_hz(cfg, h), alpha, True)


def superposition_extent(cfg: Scheme2Config, h: float, omega_z: float) -> float:
    """Separation 2 z_eq for qubit current I at height h, small-shift limit."""
    ring = cfg.ring
    dz = (
        3.0
        * CONSTANTS.mu0
        * cfg.magnet.moment
        * abs(ring.current_I)
        * ring.loop_radius_R**2
        / (2.0 * ring.wire_radius_r**2 * ring.density_rho * omega_z**2 * h**4)
    )
    if dz > 0.1 * h:
        warnings.warn(
            f"superposition extent {dz:.3g} m exceeds h/10; small-shift formula unreliable",
            stacklevel=2,
        )
    return dz


def equilibrium_shift_hz(cfg: Scheme2Config, h: float, nu_z: float) -> float:
    """z_eq written with the ordinary trap frequency; equals half the extent."""
    return 0.5 * superposition_extent(cfg, h, 2.0 * math.pi * nu_z)


def ring_mass(ring: SCRing) -> float:
    return 2.0 * math.pi**2 * ring.loop_radius_R * ring.wire_radius_r**2 * ring.density_rho


def ring_inductance(ring: SCRing) -> float:
    return CONSTANTS.mu0 * ring.loop_radius_R * _log_factor(ring, "ring_inductance")


def ring_moment(ring: SCRing) -> float:
    return ring.current_I * math.pi * ring.loop_radius_R**2


def flux_quantization_current(p: float, R: float) -> float:
    if not R > 0:
        raise DomainError("R must be > 0", "flux_quantization_current")
    return 2.0 * p * CONSTANTS.Phi0 / (CONSTANTS.mu0 * math.pi * R)


__all__ = [
    "LOAD_PEAK",
    "MARGINAL_X",
    "STABILITY_BOUND",
    "LevitationSolution",
    "Scheme2Config",
    "critical_radius",
    "equilibrium_height",
    "equilibrium_shift_hz",
    "flux_quantization_current",
    "height_load_curve",
    "height_ratio",
    "levitate",
    "ring_inductance",
    "ring_mass",
    "ring_moment",
    "stability_parameter",
    "superposition_extent",
    "trap_frequency_hz",
]
