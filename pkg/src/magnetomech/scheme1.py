"""Levitated magnetic microsphere pushed by a pair of flux-qubit rings.

The sphere sits in a harmonic trap of angular frequency ``omega_z``. A ring
pair in anti-Helmholtz configuration applies the force ``m0 dB_z/dz``; the
displaced equilibrium for the two qubit states gives the superposition
extent ``delta_z = 2 z_eq``. Both the moment and the trap force scale with
the sphere volume, so the magnet radius drops out.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Sequence

import numpy as np

from .core import ALUMINIUM_CRITICAL_FIELD, CONSTANTS, MagnetSphere, dipole_field
from .errors import DomainError
from .numerics import DEFAULT_ROOT, RootConfig, brent, expand_bracket
from .ringfield import RingPairConfig, axial_gradient, gradient_at_origin

# Root scan starts this far (relative to R) from zero so the first bracket
# is the continuous-from-zero branch.
_SCAN_START = 1e-6
_SCAN_SPAN = 1e4


@dataclass(frozen=True)
class Scheme1Config:
    magnet: MagnetSphere
    rings: RingPairConfig
    trap_omega_z: float

    def __post_init__(self):
        if not self.trap_omega_z > 0:
            raise DomainError("trap_omega_z must be > 0", "Scheme1Config")

    def with_magnet_radius(self, radius: float) -> "Scheme1Config":
        return replace(self, magnet=replace(self.magnet, radius_a=radius))


def _drive_rings(cfg: Scheme1Config) -> RingPairConfig:
    # Opposite current only swaps the two qubit branches.
    return replace(cfg.rings, current_I=abs(cfg.rings.current_I))


def _compliance(cfg: Scheme1Config) -> float:
    """B_r / (mu0 rho omega^2): displacement per unit field gradient, m^2/T."""
    m = cfg.magnet
    return m.remanence_Br / (CONSTANTS.mu0 * m.density_rho * cfg.trap_omega_z**2)


def residual(delta_z: float, cfg: Scheme1Config) -> float:
    """Force balance at z_eq = delta_z / 2, divided by rho V omega^2 (units m).

    Negative at zero for a nonzero drive and growing linearly for large
    ``delta_z``.
    """
    z = 0.5 * delta_z
    return z - _compliance(cfg) * axial_gradient(z, _drive_rings(cfg))


def solve_superposition_extent(cfg: Scheme1Config, root_cfg: RootConfig = DEFAULT_ROOT) -> float:
    """Smallest positive root of :func:`residual`."""
    R = cfg.rings.loop_radius_R

    def f(dz):
        return residual(dz, cfg)

    lo, hi = expand_bracket(f, 0.0, _SCAN_START * R, 2.0, _SCAN_SPAN * R)
    if lo == hi:
        return lo
    return brent(f, lo, hi, root_cfg).root


def count_sign_changes(cfg: Scheme1Config, points: int = 400) -> int:
    """Sign changes of the residual on a log grid over [1e-9 R, 1e4 R].

    More than one flags a multi-root (double-well) regime.
    """
    R = cfg.rings.loop_radius_R
    grid = np.logspace(-9, 4, points) * R
    vals = np.array([residual(x, cfg) for x in grid])
    signs = np.sign(vals)
    signs = signs[signs != 0]
    return int(np.count_nonzero(signs[1:] != signs[:-1]))


def linearized_extent(cfg: Scheme1Config) -> float:
    return 2.0 * _compliance(cfg) * gradient_at_origin(_drive_rings(cfg))


def critical_field_check(
    cfg: Scheme1Config,
    sphere_offsets_z: Sequence[float] = (0.0,),
    critical_field: float = ALUMINIUM_CRITICAL_FIELD,
) -> float:
    """Worst-case margin B_c - |B| of the magnet's field on the ring wires.

    One probe per ring at (R, 0, +-eta R) suffices by axial symmetry. The
    magnet is displaced along z by each offset in turn. Positive means safe.
    """
    R = cfg.rings.loop_radius_R
    s = cfg.rings.eta * R
    moment = cfg.magnet.moment
    worst = 0.0
    for z0 in sphere_offsets_z:
        for zr in (s, -s):
            probe = (R, 0.0, zr - z0)
            if np.linalg.norm(probe) <= cfg.magnet.radius_a:
                raise DomainError("ring wire lies inside the magnet sphere", "critical_field_check")
            b = dipole_field(moment, probe)
            worst = max(worst, float(np.linalg.norm(b)))
    return critical_field - worst
