"""Gas-collision Q-factor of a levitated sphere or a thin torus."""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .core import CONSTANTS, GasEnvironment
from .errors import DomainError


@dataclass(frozen=True)
class OscillatorDampingSpec:
    """``radius_r`` is the sphere radius, or the cross-section radius of a torus."""

    density_rho: float
    radius_r: float
    omega_z: float
    env: GasEnvironment = field(default_factory=GasEnvironment)

    def __post_init__(self):
        if not (self.density_rho > 0 and self.radius_r > 0 and self.omega_z > 0):
            raise DomainError("density, radius and omega must be > 0", "OscillatorDampingSpec")


def thermal_speed(env: GasEnvironment) -> float:
    """RMS speed sqrt(3 kB T / M_g) of the gas molecules, m/s."""
    return math.sqrt(3.0 * CONSTANTS.kB * env.temperature_T / env.gas_molecule_mass_Mg)


def volume_per_drag(spec: OscillatorDampingSpec, amplitude: float) -> float:
    """V / F_g for oscillation amplitude ``amplitude``, m^3/N."""
    env = spec.env
    return (
        2.0
        * spec.radius_r
        / 3.0
        * thermal_speed(env)
        / (env.pressure_Pg * spec.omega_z * amplitude)
    )


def q_from_drag(spec: OscillatorDampingSpec, amplitude: float) -> float:
    """Q = (pi/4) rho omega^2 A V / F_g, with the drag evaluated at amplitude A."""
    return (
        math.pi
        / 4.0
        * spec.density_rho
        * spec.omega_z**2
        * amplitude
        * volume_per_drag(spec, amplitude)
    )


def gas_q(spec: OscillatorDampingSpec) -> float:
    return (
        math.pi
        / 6.0
        * spec.density_rho
        * spec.radius_r
        * spec.omega_z
        / spec.env.pressure_Pg
        * thermal_speed(spec.env)
    )
