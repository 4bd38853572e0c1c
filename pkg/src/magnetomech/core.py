"""Physical constants, material types and the external field of a magnetized sphere."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NewType

import numpy as np

from .errors import DomainError

# Angular frequency (rad/s) and ordinary frequency (Hz) are kept apart by type.
AngularFrequency = NewType("AngularFrequency", float)
Frequency = NewType("Frequency", float)


def hz_to_rad_s(nu: float) -> AngularFrequency:
    return AngularFrequency(2.0 * math.pi * nu)


def rad_s_to_hz(omega: float) -> Frequency:
    return Frequency(omega / (2.0 * math.pi))


@dataclass(frozen=True)
class PhysicalConstants:
    mu0: float = 4e-7 * math.pi  # H/m
    hbar: float = 1.054571817e-34  # J s
    kB: float = 1.380649e-23  # J/K
    g_accel: float = 9.80665  # m/s^2
    Phi0: float = 2.068e-15  # Wb

    def __post_init__(self):
        for name in ("mu0", "hbar", "kB", "g_accel", "Phi0"):
            if not getattr(self, name) > 0:
                raise DomainError(f"{name} must be positive", "PhysicalConstants")


CONSTANTS = PhysicalConstants()

#: Critical field of aluminium used for the flux-qubit safety check, T.
ALUMINIUM_CRITICAL_FIELD = 9.78e-3


def _require(cond: bool, message: str, op: str) -> None:
    if not cond:
        raise DomainError(message, op)


@dataclass(frozen=True)
class MagnetSphere:
    """Uniformly magnetized sphere, moment along +z."""

    radius_a: float
    remanence_Br: float
    density_rho: float

    def __post_init__(self):
        _require(self.radius_a > 0, "radius_a must be > 0", "MagnetSphere")
        _require(self.remanence_Br >= 0, "remanence_Br must be >= 0", "MagnetSphere")
        _require(self.density_rho > 0, "density_rho must be > 0", "MagnetSphere")

    @property
    def volume(self) -> float:
        return 4.0 / 3.0 * math.pi * self.radius_a**3

    @property
    def mass(self) -> float:
        return self.density_rho * self.volume

    @property
    def moment(self) -> float:
        return magnet_moment(self)


@dataclass(frozen=True)
class SCRing:
    """Superconducting ring (flux qubit) of loop radius R and wire radius r."""

    loop_radius_R: float
    wire_radius_r: float
    density_rho: float
    current_I: float = 0.0
    critical_field_Bc: float = ALUMINIUM_CRITICAL_FIELD

    def __post_init__(self):
        _require(self.wire_radius_r > 0, "wire_radius_r must be > 0", "SCRing")
        _require(
            self.wire_radius_r < self.loop_radius_R,
            "wire_radius_r must be smaller than loop_radius_R",
            "SCRing",
        )
        _require(self.density_rho > 0, "density_rho must be > 0", "SCRing")
        _require(self.critical_field_Bc > 0, "critical_field_Bc must be > 0", "SCRing")


@dataclass(frozen=True)
class GasEnvironment:
    """Residual gas around the oscillator. Defaults: helium at 1e-6 Pa, 0.3 K."""

    pressure_Pg: float = 1e-6
    temperature_T: float = 0.3
    gas_molecule_mass_Mg: float = 6.65e-27

    def __post_init__(self):
        _require(self.pressure_Pg > 0, "pressure_Pg must be > 0", "GasEnvironment")
        _require(self.temperature_T > 0, "temperature_T must be > 0", "GasEnvironment")
        _require(
            self.gas_molecule_mass_Mg > 0, "gas_molecule_mass_Mg must be > 0", "GasEnvironment"
        )


def magnet_moment(sphere: MagnetSphere) -> float:
    """Dipole moment B_r V / mu0 of a uniformly magnetized sphere, A m^2."""
    return sphere.remanence_Br * sphere.volume / CONSTANTS.mu0


def dipole_field(moment: float, point) -> np.ndarray:
    """Flux density of a z-directed point dipole at the origin.

    Exact outside a uniformly magnetized sphere of any radius.

    Args:
        moment: dipole moment along +z, A m^2.
        point: Cartesian coordinates (x, y, z) in m.

    Returns:
        B vector in T.
    """
    p = np.asarray(point, dtype=float)
    r = float(np.linalg.norm(p))
    if r == 0.0:
        raise DomainError("field point coincides with the dipole", "dipole_field")
    rhat = p / r
    mhat = np.array([0.0, 0.0, 1.0])
    return CONSTANTS.mu0 / (4.0 * math.pi) * moment * (3.0 * rhat[2] * rhat - mhat) / r**3
