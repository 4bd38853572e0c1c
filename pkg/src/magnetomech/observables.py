"""Zero-point motion and the superposition-size figure of merit."""

from __future__ import annotations

import math
from dataclasses import dataclass

from .core import CONSTANTS, AngularFrequency, Frequency, hz_to_rad_s, rad_s_to_hz
from .errors import DomainError


@dataclass(frozen=True)
class OscillatorState:
    mass_M: float
    omega_z: float

    def __post_init__(self):
        if not (self.mass_M > 0 and self.omega_z > 0):
            raise DomainError("mass and omega must be > 0", "OscillatorState")


def zero_point_motion(state: OscillatorState) -> float:
    return math.sqrt(CONSTANTS.hbar / (2.0 * state.mass_M * state.omega_z))


def chi_ratio(delta_z: float, state: OscillatorState) -> float:
    """Superposition extent in units of the zero-point width."""
    return delta_z / zero_point_motion(state)


def stiffness_to_omega(k: float, M: float) -> AngularFrequency:
    if not (k > 0 and M > 0):
        raise DomainError("k and M must be > 0", "stiffness_to_omega")
    return AngularFrequency(math.sqrt(k / M))


def omega_to_nu(omega: float) -> Frequency:
    return rad_s_to_hz(omega)


def nu_to_omega(nu: float) -> AngularFrequency:
    return hz_to_rad_s(nu)
