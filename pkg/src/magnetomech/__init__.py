"""Numerical models for massive spatial superpositions driven by flux qubits.

Submodules:

* ``core`` - constants, magnet/ring/gas types, point-dipole field
* ``numerics`` - Brent root finding, Legendre polynomials, finite differences
* ``ringfield`` - on-axis field of an anti-Helmholtz ring pair
* ``scheme1`` - levitated magnet actuated by two flux-qubit rings
* ``scheme2`` - flux-qubit ring levitated above a magnet sphere
* ``meissner`` - superconducting sphere between two dipoles, with backaction
* ``damping`` - gas-collision Q-factor
* ``observables`` - zero-point motion and superposition ratio
* ``config``, ``runner``, ``cli`` - config files, sweeps and the command line
"""

from .core import CONSTANTS, GasEnvironment, MagnetSphere, PhysicalConstants, SCRing
from .errors import (
    DomainError,
    MaxIterExceeded,
    ModelError,
    NoSignChange,
    SeriesTruncationError,
    UnstableTrapError,
)

__version__ = "0.1.0"

__all__ = [
    "CONSTANTS",
    "DomainError",
    "GasEnvironment",
    "MagnetSphere",
    "MaxIterExceeded",
    "ModelError",
    "NoSignChange",
    "PhysicalConstants",
    "SCRing",
    "SeriesTruncationError",
    "UnstableTrapError",
]
