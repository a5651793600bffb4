"""Energy spectra of the well family, in reduced and physical units."""

from __future__ import annotations

import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import NamedTuple, Sequence

import numpy as np

from .errors import DomainError
from .jacobi import hamiltonian_matrix
from .model import PotentialSpec, basis_params_from_couplings, physical_energy
from .recursion import recursion_matrix
from .tridiag import eigenvalues

DEFAULT_N = 20
DEFAULT_LEVELS = 11

#: Environment variable capping the number of worker threads used by sweeps.
THREADS_ENV = "SINWELL_THREADS"


class Level(NamedTuple):
    n: int
    epsilon: float
    E: float


class ConvergenceRow(NamedTuple):
    N: int
    n: int
    epsilon: float


class SweepRow(NamedTuple):
    C: float
    n: int
    epsilon: float
    E: float


class KlauderRow(NamedTuple):
    n: int
    E_limit: float
    E_flat: float


@dataclass(frozen=True)
class Spectrum:
    """Ordered bound-state levels for one potential at one truncation size."""

    levels: tuple[Level, ...]
    N: int
    spec: PotentialSpec

    def __post_init__(self):
        eps = [lv.epsilon for lv in self.levels]
        if any(b <= a for a, b in zip(eps, eps[1:])):
            raise DomainError("reduced energies must be strictly increasing")

    @property
    def epsilons(self) -> np.ndarray:
        return np.array([lv.epsilon for lv in self.levels])

    @property
    def energies(self) -> np.ndarray:
        return np.array([lv.E for lv in self.levels])


def _check_sizes(N, levels):
    for name, v in (("N", N), ("levels", levels)):
        if not isinstance(v, int) or isinstance(v, bool) or v < 1:
            raise DomainError(f"{name} must be an integer >= 1, got {v!r}")
    if levels > N:
        raise DomainError(f"levels={levels} exceeds truncation N={N}")


def _build(eps, k, L, spec, N):
    levels = tuple(
        Level(n=i, epsilon=float(e), E=physical_energy(float(e), k, L))
        for i, e in enumerate(eps)
    )
    return Spectrum(levels=levels, N=N, spec=spec)


def solve_sinusoidal_well(
    C: float,
    k: int = 1,
    L: float = math.pi,
    N: int = DEFAULT_N,
    levels: int = DEFAULT_LEVELS,
) -> Spectrum:
    """Spectrum of the cosine-bottom well (A = B = 0).

    Diagonalises the N x N matrix with diagonal (n + 1)^2 and off-diagonal
    C/2; reduced eigenvalues are converted to physical energies through
    E = (1/2) k^2 lam^2 eps.  C = 0 short-circuits to the exact levels
    (n + 1)^2 so that the uncoupled case carries no eigensolver noise.
    """
    _check_sizes(N, levels)
    spec = PotentialSpec(A=0.0, B=0.0, C=C, k=k, L=L)
    if C == 0.0:
        eps = (np.arange(levels, dtype=float) + 1.0) ** 2
    else:
        eps = eigenvalues(recursion_matrix(C, N), levels)
    return _build(eps, k, L, spec, N)


def solve_general(
    A: float,
    B: float,
    C: float,
    k: int = 1,
    L: float = math.pi,
    N: int = DEFAULT_N,
    levels: int | None = None,
) -> Spectrum:
    """Spectrum for the full (A, B, C) family through the Jacobi-basis matrix.

    When `levels` is omitted it defaults to min(11, N - 2): for general basis
    parameters the topmost truncated eigenvalues are not converged, so a small
    guard band is kept (use `convergence_report` to inspect the raw behaviour).
    C = 0 returns the closed-form levels (n + (mu + nu + 1)/2)^2 exactly.
    """
    if levels is None:
        levels = max(1, min(DEFAULT_LEVELS, N - 2))
    _check_sizes(N, levels)
    spec = PotentialSpec(A=A, B=B, C=C, k=k, L=L)
    params = basis_params_from_couplings(A, B)
    shift = (params.mu + params.nu + 1.0) / 2.0
    if C == 0.0:
        eps = (np.arange(levels, dtype=float) + shift) ** 2
    else:
        eps = eigenvalues(hamiltonian_matrix(C, params.mu, params.nu, N), levels)
    return _build(eps, k, L, spec, N)


def poschl_teller_spectrum(
    A: float,
    B: float,
    k: int = 1,
    L: float = math.pi,
    n_max: int = DEFAULT_LEVELS,
) -> Spectrum:
    """Closed-form trigonometric Poschl-Teller levels E_n = (1/2) k^2 lam^2 (n + (mu+nu+1)/2)^2."""
    if not isinstance(n_max, int) or isinstance(n_max, bool) or n_max < 1:
        raise DomainError(f"n_max must be an integer >= 1, got {n_max!r}")
    spec = PotentialSpec(A=A, B=B, C=0.0, k=k, L=L)
    params = basis_params_from_couplings(A, B)
    shift = (params.mu + params.nu + 1.0) / 2.0
    eps = (np.arange(n_max, dtype=float) + shift) ** 2
    return _build(eps, k, L, spec, n_max)


def convergence_report(
    C: float,
    k: int,
    L: float,
    N_list: Sequence[int],
    levels: int,
) -> list[ConvergenceRow]:
    """Reduced levels for each truncation size in N_list, for convergence study."""
    if not N_list:
        raise DomainError("N_list must be nonempty")
    rows = []
    for N in N_list:
        spec = solve_sinusoidal_well(C, k=k, L=L, N=N, levels=levels)
        rows.extend(ConvergenceRow(N=N, n=lv.n, epsilon=lv.epsilon) for lv in spec.levels)
    return rows


def _thread_cap() -> int:
    raw = os.environ.get(THREADS_ENV)
    if raw is None:
        return 1
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def sweep_coupling(
    C_values: Sequence[float],
    k: int = 1,
    L: float = math.pi,
    N: int = DEFAULT_N,
    levels: int = DEFAULT_LEVELS,
) -> list[SweepRow]:
    """One spectrum per coupling value, flattened and ordered by (C, n).

    Entries are independent pure computations; SINWELL_THREADS (optional
    integer) caps the worker threads.  Output order always follows the input
    order of C_values, never completion order.
    """
    if len(C_values) == 0:
        raise DomainError("C_values must be nonempty")

    def solve_one(C):
        return solve_sinusoidal_well(C, k=k, L=L, N=N, levels=levels)

    workers = min(_thread_cap(), len(C_values))
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            spectra = list(pool.map(solve_one, C_values))
    else:
        spectra = [solve_one(C) for C in C_values]

    rows = []
    for C, spec in zip(C_values, spectra):
        rows.extend(
            SweepRow(C=float(C), n=lv.n, epsilon=lv.epsilon, E=lv.E) for lv in spec.levels
        )
    return rows


def klauder_gap(
    k: int,
    L: float = math.pi,
    N: int = DEFAULT_N,
    levels: int = DEFAULT_LEVELS,
) -> list[KlauderRow]:
    """Compare the C -> 0 limit of the spectrum with the true flat-bottom levels.

    The coupling-to-zero limit gives E = (1/2) k^2 lam^2 (n + 1)^2, while the
    flat well has E = (1/2) lam^2 (n + 1)^2: for k >= 2 switching the cosine
    deformation off does NOT recover the undeformed well (the levels stay a
    factor k^2 too high), because the sine basis spans only every k-th mode.
    """
    _check_sizes(N, levels)
    limit = solve_sinusoidal_well(0.0, k=k, L=L, N=N, levels=levels)
    flat = solve_sinusoidal_well(0.0, k=1, L=L, N=N, levels=levels)
    return [
        KlauderRow(n=a.n, E_limit=a.E, E_flat=b.E)
        for a, b in zip(limit.levels, flat.levels)
    ]
