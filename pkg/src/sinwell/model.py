"""Domain types, unit conventions and parameter maps for the well family.

Everything is expressed in atomic units (hbar = m = 1): lengths in bohr-like
units, energies in hartree-like units.  The potential family supported here is

    V(x) = (k**2 lam**2 / 2) * [ A / cos^2(k lam x / 2)
                               + B / sin^2(k lam x / 2)
                               + C * cos(k lam x) ],      lam = pi / L,

on the interval 0 < x < L: a trigonometric Poschl-Teller pair of strengths
A and B plus a cosine-shaped well bottom of strength C with harmonic index k.
The dimensionless "reduced" energy used throughout is eps = 2 E / (k lam)**2.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DomainError, SingularityError

#: Smallest admissible Poschl-Teller coupling; below it the basis exponents
#: mu, nu = sqrt(4*coupling + 1/4) turn complex.
MIN_COUPLING = -1.0 / 16.0

#: Default pole-avoidance distance for potential_value, relative to L.
DEFAULT_GUARD_FACTOR = 1e-12


def _check_well(k, L):
    if not isinstance(k, int) or isinstance(k, bool) or k < 1:
        raise DomainError(f"harmonic index k must be an integer >= 1, got {k!r}")
    if not (L > 0.0) or not math.isfinite(L):
        raise DomainError(f"well width L must be positive and finite, got {L!r}")


@dataclass(frozen=True)
class PotentialSpec:
    """Couplings (A, B, C), harmonic index k and well width L."""

    A: float = 0.0
    B: float = 0.0
    C: float = 0.0
    k: int = 1
    L: float = math.pi

    def __post_init__(self):
        _check_well(self.k, self.L)
        if self.A < MIN_COUPLING:
            raise DomainError(f"coupling A={self.A} below {MIN_COUPLING}")
        if self.B < MIN_COUPLING:
            raise DomainError(f"coupling B={self.B} below {MIN_COUPLING}")

    @property
    def lam(self) -> float:
        """Scale parameter pi / L (inverse length)."""
        return math.pi / self.L


@dataclass(frozen=True)
class BasisParams:
    """Jacobi parameters (mu, nu) and weight exponents (alpha, beta).

    Tied together by 2*alpha = nu + 1/2, 2*beta = mu + 1/2 with
    alpha*(alpha - 1/2) = A and beta*(beta - 1/2) = B.
    """

    mu: float
    nu: float
    alpha: float
    beta: float

    def __post_init__(self):
        if not (self.mu > -1.0 and self.nu > -1.0):
            raise DomainError(f"mu, nu must exceed -1, got ({self.mu}, {self.nu})")


@dataclass(frozen=True)
class ReducedEnergy:
    """A physical energy E together with its dimensionless reduction epsilon."""

    epsilon: float
    E: float


def reduced_energy(E: float, k: int, L: float) -> ReducedEnergy:
    """Convert a physical energy to the reduced value eps = 2 E / (k lam)**2."""
    _check_well(k, L)
    lam = math.pi / L
    eps = 2.0 * E / (k * k * lam * lam)
    return ReducedEnergy(epsilon=eps, E=E)


def physical_energy(epsilon: float, k: int, L: float) -> float:
    """Inverse conversion: E = (1/2) k**2 lam**2 * epsilon."""
    _check_well(k, L)
    lam = math.pi / L
    return 0.5 * (k * k) * (lam * lam) * epsilon


def basis_params_from_couplings(A: float, B: float) -> BasisParams:
    """Map couplings (A, B) to basis parameters via nu^2 = 4A + 1/4, mu^2 = 4B + 1/4.

    The nonnegative roots are taken: that is the branch selecting basis
    functions that vanish at both walls, and it keeps mu, nu > -1 on the whole
    admissible coupling range A, B >= -1/16.
    """
    for name, c in (("A", A), ("B", B)):
        if c < MIN_COUPLING:
            raise DomainError(f"coupling {name}={c} below {MIN_COUPLING}")
    nu = math.sqrt(4.0 * A + 0.25)
    mu = math.sqrt(4.0 * B + 0.25)
    alpha = (nu + 0.5) / 2.0
    beta = (mu + 0.5) / 2.0
    return BasisParams(mu=mu, nu=nu, alpha=alpha, beta=beta)


def potential_value(spec: PotentialSpec, x: float, guard: float | None = None) -> float:
    """Evaluate V(x) for the given potential, in energy a.u.

    Parameters
    ----------
    spec : PotentialSpec
        Potential parameters.
    x : float
        Position, strictly inside (0, L).
    guard : float, optional
        Minimal allowed distance to a pole of the 1/cos^2 or 1/sin^2 terms
        (only relevant when A or B is nonzero).  Defaults to 1e-12 * L.

    Raises
    ------
    DomainError
        If x is outside (0, L).
    SingularityError
        If x lies within `guard` of a pole of an active singular term.
    """
    if not (0.0 < x < spec.L):
        raise DomainError(f"x={x} outside the open interval (0, {spec.L})")
    if guard is None:
        guard = DEFAULT_GUARD_FACTOR * spec.L

    lam = spec.lam
    half = 0.5 * spec.k * lam * x
    # Poles sit at integer multiples of L/k: odd multiples for the 1/cos^2
    # term, even multiples for the 1/sin^2 term.
    step = spec.L / spec.k
    u = x / step
    if spec.A != 0.0:
        nearest_odd = 2.0 * math.floor((u - 1.0) / 2.0 + 0.5) + 1.0
        if abs(u - nearest_odd) * step < guard:
            raise SingularityError(f"x={x} within {guard} of a 1/cos^2 pole")
    if spec.B != 0.0:
        nearest_even = 2.0 * math.floor(u / 2.0 + 0.5)
        if abs(u - nearest_even) * step < guard:
            raise SingularityError(f"x={x} within {guard} of a 1/sin^2 pole")

    value = spec.C * math.cos(spec.k * lam * x)
    if spec.A != 0.0:
        value += spec.A / math.cos(half) ** 2
    if spec.B != 0.0:
        value += spec.B / math.sin(half) ** 2
    return 0.5 * (spec.k * lam) ** 2 * value
