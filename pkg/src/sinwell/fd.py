"""Independent finite-difference reference solver on a Dirichlet grid.

Discretises -(1/2) psi'' + V(x) psi = E psi on [0, L] with second-order
central differences over M interior points (diagonal 1/h^2 + V(x_i),
off-diagonal -1/(2 h^2)), reusing the tridiagonal eigensolver.  This is the
brute-force cross-check for the spectral route; it sees the FULL spectrum,
which for harmonic index k >= 2 is a strict superset of what the sine basis
sin((n+1) k pi x / L) can represent, since the cosine coupling never leaves
that subspace.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, NumericalError
from .model import PotentialSpec, potential_value
from .spectrum import solve_sinusoidal_well
from .tridiag import SymTridiag, eigenvalues

MIN_POINTS = 16


@dataclass(frozen=True)
class FdGrid:
    """Uniform interior grid: M points with spacing h = L / (M + 1)."""

    points: int
    h: float

    def __post_init__(self):
        if not isinstance(self.points, int) or isinstance(self.points, bool) or self.points < MIN_POINTS:
            raise DomainError(f"need at least {MIN_POINTS} interior points, got {self.points!r}")
        if not (self.h > 0.0):
            raise DomainError(f"grid spacing must be positive, got {self.h!r}")


def fd_matrix(spec: PotentialSpec, M: int) -> tuple[SymTridiag, FdGrid]:
    """Assemble the FD Hamiltonian for a bounded (A = B = 0) potential."""
    if spec.A != 0.0 or spec.B != 0.0:
        raise DomainError(
            "the finite-difference oracle handles only bounded potentials (A = B = 0)"
        )
    grid = FdGrid(points=M, h=spec.L / (M + 1))
    xs = (np.arange(M) + 1.0) * grid.h
    v = np.array([potential_value(spec, float(x)) for x in xs])
    diag = 1.0 / grid.h**2 + v
    off = np.full(M - 1, -0.5 / grid.h**2)
    return SymTridiag(diag=diag, offdiag=off), grid


def fd_spectrum(spec: PotentialSpec, M: int, count: int) -> np.ndarray:
    """Lowest `count` FD energies, ascending."""
    if not isinstance(count, int) or isinstance(count, bool) or not (1 <= count <= M):
        raise DomainError(f"count must satisfy 1 <= count <= M, got {count!r}")
    T, _ = fd_matrix(spec, M)
    return eigenvalues(T, count)


def richardson_pair(spec: PotentialSpec, M: int, count: int) -> np.ndarray:
    """h^2-eliminated energies from the M and 2M grids: (4 E_2M - E_M) / 3."""
    coarse = fd_spectrum(spec, M, count)
    fine = fd_spectrum(spec, 2 * M, count)
    return (4.0 * fine - coarse) / 3.0


@dataclass(frozen=True)
class SubsetMatch:
    level: int
    E_spectral: float
    E_fd: float
    diff: float
    matched: bool


@dataclass(frozen=True)
class SubsetReport:
    """Outcome of matching spectral-method energies against the FD spectrum.

    `missing` lists the FD energies below the highest matched one that no
    spectral level claims: empty for k = 1, nonempty for k >= 2 where the sine
    basis covers only an invariant subspace of the full problem.
    """

    matches: tuple[SubsetMatch, ...]
    missing: tuple[float, ...]
    fd_energies: tuple[float, ...]
    tol: float

    @property
    def all_matched(self) -> bool:
        return all(m.matched for m in self.matches)


def subset_check(
    C: float,
    k: int = 1,
    L: float = math.pi,
    N: int = 20,
    levels: int = 5,
    M: int = 2048,
    tol: float = 1e-4,
    fd_count: int | None = None,
) -> SubsetReport:
    """Match every spectral-method energy to an FD energy within `tol`.

    FD energies come from Richardson extrapolation on the (M, 2M) grid pair.
    `fd_count` defaults to k * levels + 2, enough to cover the spectral range
    because the spectral levels are (asymptotically) every k-th FD level.
    """
    if not (tol > 0.0):
        raise DomainError(f"tol must be positive, got {tol!r}")
    spectral = solve_sinusoidal_well(C, k=k, L=L, N=N, levels=levels).energies
    if fd_count is None:
        fd_count = k * levels + 2
    fd = richardson_pair(PotentialSpec(A=0.0, B=0.0, C=C, k=k, L=L), M, fd_count)
    if fd[-1] < spectral[-1] - tol:
        raise NumericalError(
            f"FD list (top {fd[-1]:.6g}) does not cover the spectral range "
            f"(top {spectral[-1]:.6g}); increase fd_count"
        )

    matches = []
    claimed = set()
    for n, E in enumerate(spectral):
        j = int(np.argmin(np.abs(fd - E)))
        diff = float(abs(fd[j] - E))
        ok = diff <= tol
        if ok:
            claimed.add(j)
        matches.append(
            SubsetMatch(level=n, E_spectral=float(E), E_fd=float(fd[j]), diff=diff, matched=ok)
        )

    matched_fd = [m.E_fd for m in matches if m.matched]
    ceiling = max(matched_fd) if matched_fd else -np.inf
    missing = tuple(
        float(E) for j, E in enumerate(fd) if j not in claimed and E < ceiling
    )
    return SubsetReport(
        matches=tuple(matches),
        missing=missing,
        fd_energies=tuple(float(E) for E in fd),
        tol=tol,
    )
