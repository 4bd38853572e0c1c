"""On-axis field of two coaxial rings carrying opposite currents (anti-Helmholtz)."""

from __future__ import annotations

from dataclasses import dataclass

from .core import CONSTANTS
from .errors import DomainError

OPTIMAL_ETA = 0.5


@dataclass(frozen=True)
class RingPairConfig:
    """Rings of radius R at z = +eta*R and z = -eta*R."""

    loop_radius_R: float
    current_I: float
    eta: float = OPTIMAL_ETA

    def __post_init__(self):
        if not self.loop_radius_R > 0:
            raise DomainError("loop_radius_R must be > 0", "RingPairConfig")
        if not self.eta > 0:
            raise DomainError("eta must be > 0", "RingPairConfig")


def axial_field(z: float, cfg: RingPairConfig) -> float:
    R, s = cfg.loop_radius_R, cfg.eta * cfg.loop_radius_R
    pref = CONSTANTS.mu0 * cfg.current_I * R**2 / 2.0
    return pref * (((z - s) ** 2 + R**2) ** -1.5 - ((z + s) ** 2 + R**2) ** -1.5)


def axial_gradient(z: float, cfg: RingPairConfig) -> float:
    R, s = cfg.loop_radius_R, cfg.eta * cfg.loop_radius_R
    pref = -1.5 * CONSTANTS.mu0 * cfg.current_I * R**2
    return pref * (
        (z - s) * ((z - s) ** 2 + R**2) ** -2.5 - (z + s) * ((z + s) ** 2 + R**2) ** -2.5
    )


def gradient_shape(eta: float) -> float:
    """eta (1 + eta^2)^(-5/2): the eta-dependence of the gradient at the midpoint."""
    return eta * (1.0 + eta * eta) ** -2.5


def gradient_at_origin(cfg: RingPairConfig) -> float:
    return 3.0 * CONSTANTS.mu0 * cfg.current_I / cfg.loop_radius_R**2 * gradient_shape(cfg.eta)


def optimal_eta() -> float:
    # d/deta of eta (1+eta^2)^(-5/2) is (1 - 4 eta^2)(1+eta^2)^(-7/2)
    return OPTIMAL_ETA

