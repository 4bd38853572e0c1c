"""Superconducting sphere held between two antiparallel point dipoles.

Geometry: the sphere (radius ``gamma``) is centred at the origin; a dipole
of moment ``+m z`` sits at ``z = d_plus`` and one of moment ``-m z`` at
``z = -d_minus``. The dipole potential is expanded in Legendre polynomials
about the sphere centre, and the induced (Meissner) potential
``sum C_n P_n(cos t) / r^(n+1)`` is fixed by requiring zero normal field on
the sphere surface. Scalar potentials carry the mu0 factor, so ``B = -grad``
and their unit is T m.

Sign convention for forces and fields: the k-hat (z) component.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass

from .core import CONSTANTS, MagnetSphere
from .errors import DomainError, SeriesTruncationError, UnstableTrapError
from .numerics import legendre_table

#: Stiffness from the finite-element comparison model, N/m. Reporting only.
COMSOL_REFERENCE_STIFFNESS = 0.32

FULL_COEFF = 384.0
ASYMPTOTIC_COEFF = 4992.0
NO_BACKACTION_COEFF = 3072.0


@dataclass(frozen=True)
class DipolePairTrap:
    moment_m: float
    d_plus: float
    d_minus: float
    sphere_radius_gamma: float
    sphere_mass: float = 0.0

    def __post_init__(self):
        if not (self.moment_m >= 0 and self.d_plus > 0 and self.d_minus > 0):
            raise DomainError("moment and distances must be positive", "DipolePairTrap")
        if not 0 <= self.sphere_radius_gamma < min(self.d_plus, self.d_minus):
            raise DomainError("sphere must fit between the dipoles", "DipolePairTrap")
        if self.sphere_mass < 0:
            raise DomainError("sphere_mass must be >= 0", "DipolePairTrap")

    @classmethod
    def from_gap(
        cls,
        moment_m: float,
        gap_d: float,
        sphere_radius_gamma: float,
        displacement: float = 0.0,
        sphere_mass: float = 0.0,
    ) -> "DipolePairTrap":
        """Dipoles ``gap_d`` apart, sphere displaced upward by ``displacement``."""
        return cls(
            moment_m,
            0.5 * gap_d - displacement,
            0.5 * gap_d + displacement,
            sphere_radius_gamma,
            sphere_mass,
        )

    @classmethod
    def from_magnets(
        cls,
        magnet: MagnetSphere,
        gap_d: float,
        sphere_radius_gamma: float,
        sphere_density: float = 0.0,
        displacement: float = 0.0,
    ) -> "DipolePairTrap":
        mass = sphere_density * 4.0 / 3.0 * math.pi * sphere_radius_gamma**3
        return cls.from_gap(magnet.moment, gap_d, sphere_radius_gamma, displacement, mass)

    @property
    def gap(self) -> float:
        return self.d_plus + self.d_minus

    @property
    def displacement(self) -> float:
        return 0.5 * (self.d_minus - self.d_plus)

    @property
    def field_scale(self) -> float:
        """On-axis field of one dipole at the sphere centre, T."""
        return CONSTANTS.mu0 * self.moment_m / (2.0 * math.pi * min(self.d_plus, self.d_minus) ** 3)


@dataclass(frozen=True)
class SeriesControl:
    n_max: int = 60
    tail_rel_bound: float = 1e-13

    def __post_init__(self):
        if self.n_max < 2:
            raise DomainError("n_max must be >= 2", "SeriesControl")


DEFAULT_SERIES = SeriesControl()


def _k(trap: DipolePairTrap) -> float:
    return CONSTANTS.mu0 * trap.moment_m / (4.0 * math.pi)


def _pair_factor(n: int, trap: DipolePairTrap) -> float:
    """(1/d+)^(n+2) + (-1/d-)^(n+2)."""
    return (1.0 / trap.d_plus) ** (n + 2) + (-1.0 / trap.d_minus) ** (n + 2)


def _scaled_pair(n: int, r: float, trap: DipolePairTrap) -> float:
    """r^(n+2) times :func:`_pair_factor`; stays finite where the powers would not."""
    return (r / trap.d_plus) ** (n + 2) + (-r / trap.d_minus) ** (n + 2)


def _sum_checked(terms: list[float], series: SeriesControl, op: str) -> float:
    total = math.fsum(terms)
    scale = math.fsum(abs(t) for t in terms)
    if abs(terms[-1]) > series.tail_rel_bound * scale:
        raise SeriesTruncationError(
            f"last term {terms[-1]:.3g} exceeds {series.tail_rel_bound:g} of the series magnitude",
            op,
        )
    return total


def _check_inside(r: float, trap: DipolePairTrap, op: str) -> None:
    if not 0 <= r < min(trap.d_plus, trap.d_minus):
        raise DomainError("series requires 0 <= r < min(d_plus, d_minus)", op)


def potential_dipoles(
    r: float, theta: float, trap: DipolePairTrap, series: SeriesControl = DEFAULT_SERIES
) -> float:
    """Legendre series of the two-dipole potential about the sphere centre."""
    _check_inside(r, trap, "potential_dipoles")
    if r == 0:
        return -_k(trap) * _pair_factor(0, trap)
    P = legendre_table(series.n_max, math.cos(theta))
    terms = [(n + 1) * P[n] * _scaled_pair(n, r, trap) / r**2 for n in range(series.n_max + 1)]
    return -_k(trap) * _sum_checked(terms, series, "potential_dipoles")


def potential_dipoles_closed(r: float, theta: float, trap: DipolePairTrap) -> float:
    """Direct sum of the two point-dipole potentials (no expansion)."""
    x, z = r * math.sin(theta), r * math.cos(theta)
    total = 0.0
    for sign, z0 in ((1.0, trap.d_plus), (-1.0, -trap.d_minus)):
        pz = z - z0
        dist = math.hypot(x, pz)
        if dist == 0.0:
            raise DomainError("point coincides with a dipole", "potential_dipoles_closed")
        total += sign * pz / dist**3
    return _k(trap) * total


def coefficient_Cn(n: int, trap: DipolePairTrap) -> float:
    if n < 0:
        raise DomainError("n must be >= 0", "coefficient_Cn")
    g = trap.sphere_radius_gamma
    if n == 0 or g == 0:
        return 0.0
    return -_k(trap) * n * _scaled_pair(n, g, trap) * g ** (n - 1)


def potential_induced(
    r: float, theta: float, trap: DipolePairTrap, series: SeriesControl = DEFAULT_SERIES
) -> float:
    if r <= trap.sphere_radius_gamma:
        raise DomainError("induced potential defined for r > gamma", "potential_induced")
    g = trap.sphere_radius_gamma
    if g == 0:
        return 0.0
    P = legendre_table(series.n_max, math.cos(theta))
    # C_n / r^(n+1) with the gamma powers folded into (g/r)^(n+1)
    terms = [
        -n * _scaled_pair(n, g, trap) * (g / r) ** (n + 1) / g**2 * P[n]
        for n in range(series.n_max + 1)
    ]
    return _k(trap) * _sum_checked(terms, series, "potential_induced")


def _radial_terms(r: float, theta: float, trap: DipolePairTrap, n_max: int):
    P = legendre_table(n_max, math.cos(theta))
    k = _k(trap)
    g = trap.sphere_radius_gamma
    dip, ind = [], []
    for n in range(n_max + 1):
        c = k * n * (n + 1) * P[n]
        if r == 0:
            dip.append(c * _pair_factor(n, trap) if n == 1 else 0.0)
        else:
            dip.append(c * _scaled_pair(n, r, trap) / r**3)
        ind.append(-c * _scaled_pair(n, g, trap) * (g / r) ** (n + 2) / g**3 if g else 0.0)
    return dip, ind


def radial_field_dipoles(
    r: float, theta: float, trap: DipolePairTrap, series: SeriesControl = DEFAULT_SERIES
) -> float:
    _check_inside(r, trap, "radial_field_dipoles")
    dip, _ = _radial_terms(r, theta, trap, series.n_max)
    return _sum_checked(dip, series, "radial_field_dipoles")


def radial_field_induced(
    r: float, theta: float, trap: DipolePairTrap, series: SeriesControl = DEFAULT_SERIES
) -> float:
    if r < trap.sphere_radius_gamma or r == 0:
        raise DomainError("induced field defined for r >= gamma", "radial_field_induced")
    _, ind = _radial_terms(r, theta, trap, series.n_max)
    return _sum_checked(ind, series, "radial_field_induced")


def surface_radial_field(
    theta: float, trap: DipolePairTrap, series: SeriesControl = DEFAULT_SERIES
) -> float:
    """Total normal field on the sphere surface; zero by construction of C_n."""
    g = trap.sphere_radius_gamma
    if g == 0:
        return 0.0
    dip, ind = _radial_terms(g, theta, trap, series.n_max)
    return math.fsum(dip + ind)


def axial_field_dipoles(z: float, trap: DipolePairTrap) -> float:
    """B_z of the two dipoles on the axis.

    Between the dipoles this is -(mu0 m / 2 pi)[1/(z-d+)^3 + 1/(z+d-)^3];
    the absolute values keep the field direction right outside that span.
    """
    u, v = z - trap.d_plus, z + trap.d_minus
    if u == 0 or v == 0:
        raise DomainError("field is singular at a dipole", "axial_field_dipoles")
    return 2.0 * _k(trap) * (1.0 / abs(u) ** 3 - 1.0 / abs(v) ** 3)


def axial_gradient_dipoles(z: float, trap: DipolePairTrap) -> float:
    u, v = z - trap.d_plus, z + trap.d_minus
    if u == 0 or v == 0:
        raise DomainError("field is singular at a dipole", "axial_gradient_dipoles")
    return -6.0 * _k(trap) * (math.copysign(1.0, u) / u**4 - math.copysign(1.0, v) / v**4)


def _induced_closed_upper(z: float, trap: DipolePairTrap) -> float:
    g2 = trap.sphere_radius_gamma**2
    return (
        2.0
        * _k(trap)
        * trap.sphere_radius_gamma**3
        * (1.0 / (g2 - z * trap.d_plus) ** 3 + 1.0 / (g2 + z * trap.d_minus) ** 3)
    )


def axial_field_induced(z: float, trap: DipolePairTrap) -> float:
    """Closed-form B_z of the sphere's induced field on the axis, |z| > gamma."""
    g = trap.sphere_radius_gamma
    if g == 0:
        return 0.0
    if abs(z) < g:
        raise DomainError("induced field is defined outside the sphere", "axial_field_induced")
    upper = _induced_closed_upper(z, trap)
    return upper if z > 0 else -upper


def axial_field_induced_series(
    z: float, trap: DipolePairTrap, series: SeriesControl = DEFAULT_SERIES
) -> float:
    """Same quantity from the Legendre series (P_n(+-1) = (+-1)^n)."""
    g = trap.sphere_radius_gamma
    if abs(z) < g or z == 0:
        raise DomainError("induced field is defined outside the sphere", "axial_field_induced")
    s = 1.0 if z > 0 else -1.0
    az = abs(z)
    terms = [
        n * (n + 1) * _scaled_pair(n, g, trap) * (g / az) ** (n + 2) / g**3 * s**n
        for n in range(series.n_max + 1)
    ]
    return -s * _k(trap) * _sum_checked(terms, series, "axial_field_induced_series")


def total_axial_field(z: float, trap: DipolePairTrap) -> float:
    """Dipole plus induced field; exactly zero inside the sphere."""
    if abs(z) <= trap.sphere_radius_gamma:
        return 0.0
    return axial_field_dipoles(z, trap) + axial_field_induced(z, trap)


def force_on_sphere(trap: DipolePairTrap) -> float:
    """Axial force on the sphere including the induced-field backaction, N."""
    g = trap.sphere_radius_gamma
    g2 = g * g
    dp, dm = trap.d_plus, trap.d_minus
    bracket = (
        2.0 * dm / (g2 - dm * dm) ** 4
        - 2.0 * dp / (g2 - dp * dp) ** 4
        + (dm - dp) / (g2 + dp * dm) ** 4
    )
    return 1.5 * CONSTANTS.mu0 * trap.moment_m**2 / (2.0 * math.pi) * g**3 * bracket


def _prefactor(trap: DipolePairTrap) -> float:
    return CONSTANTS.mu0 * trap.moment_m**2 / math.pi * trap.sphere_radius_gamma**3


def stiffness_full(d: float, trap: DipolePairTrap) -> float:
    """Small-displacement stiffness, exact in gamma/d."""
    g2 = trap.sphere_radius_gamma**2
    if not d > 2.0 * trap.sphere_radius_gamma:
        raise DomainError("requires d > 2 gamma", "stiffness_full")
    d2 = d * d
    return (
        FULL_COEFF
        * _prefactor(trap)
        * ((14.0 * d2 + 8.0 * g2) / (d2 - 4.0 * g2) ** 5 - 1.0 / (d2 + 4.0 * g2) ** 4)
    )


def _warn_close(d: float, trap: DipolePairTrap) -> None:
    if d < 10.0 * trap.sphere_radius_gamma:
        warnings.warn("d < 10 gamma: asymptotic stiffness is inaccurate", stacklevel=3)


def _leading_scale(d: float, trap: DipolePairTrap) -> float:
    # Mantissa trimmed to 47 bits so both leading-order coefficients multiply
    # it exactly; their stiffness ratio is then exactly 13/8 in floating point.
    mant, exp = math.frexp(_prefactor(trap) / d**8)
    return math.ldexp(round(mant * 2.0**47), exp - 47)


def stiffness_asymptotic(d: float, trap: DipolePairTrap) -> float:
    """Leading term for d >> 2 gamma."""
    _warn_close(d, trap)
    return ASYMPTOTIC_COEFF * _leading_scale(d, trap)


def stiffness_no_backaction(d: float, trap: DipolePairTrap) -> float:
    """Leading stiffness when the sphere is a chi = -1 perturbation of the dipole field."""
    _warn_close(d, trap)
    return NO_BACKACTION_COEFF * _leading_scale(d, trap)


def no_backaction_force(z: float, trap: DipolePairTrap) -> float:
    """-(V/mu0) B dB/dz on the axis of a symmetric trap, sphere centre at z."""
    sym = DipolePairTrap.from_gap(trap.moment_m, trap.gap, 0.0)
    volume = 4.0 / 3.0 * math.pi * trap.sphere_radius_gamma**3
    return -volume / CONSTANTS.mu0 * axial_field_dipoles(z, sym) * axial_gradient_dipoles(z, sym)


def equilibrium_sag_and_frequency(trap: DipolePairTrap, k_z: float) -> tuple[float, float]:
    """Gravitational sag -M g / k and trap angular frequency sqrt(k / M)."""
    if not k_z > 0:
        raise UnstableTrapError("requires k_z > 0", "equilibrium_sag_and_frequency")
    mass = trap.sphere_mass
    sag = -mass * CONSTANTS.g_accel / k_z
    omega = math.sqrt(k_z / mass) if mass > 0 else math.inf
    return sag, omega
