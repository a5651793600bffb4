"""Eigenfunction synthesis psi_n(x) = sum_m f_m phi_m(x) for the cosine well.

Coefficients can be produced three ways: the forward recursion
f_m = omega(eps_n) Q_m(eps_n), the backward minimal-solution recursion, or
directly as the unit eigenvector of the truncated matrix.  The forward route
is the naive construction and deteriorates beyond a computable term count
(roundoff excites the growing solution of the recursion), so it is truncated
at the detected crossover; the eigenvector route is backward stable for every
N and is the default.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, GrowthError
from .jacobi import basis_function
from .model import PotentialSpec
from .recursion import backward_q_sequence, q_sequence, recursion_matrix
from .tridiag import eigenvalues, eigenvector

METHODS = ("forward", "backward", "eigenvector")

#: Couplings below this magnitude are treated as zero: the recursion degrades
#: into 0/0 noise long before, and the exact limit is a single basis term.
ZERO_COUPLING = 1e-200

#: Default scan length for the stability diagnostics.
GUARD_SCAN = 60


class StabilityWarning(UserWarning):
    """Requested synthesis size exceeds the reliable forward-recursion range."""


@dataclass(frozen=True)
class EigenstateExpansion:
    """Unit-norm expansion coefficients of one level over the sine basis."""

    level: int
    epsilon: float
    coefficients: np.ndarray
    N_syn: int
    method: str

    def __post_init__(self):
        c = np.array(self.coefficients, dtype=float, copy=True)
        if c.ndim != 1 or c.size != self.N_syn:
            raise DomainError("coefficients must be 1-d with N_syn entries")
        if abs(float(c @ c) - 1.0) > 1e-10:
            raise DomainError("coefficients must be normalised over the truncation")
        c.setflags(write=False)
        object.__setattr__(self, "coefficients", c)


@dataclass(frozen=True)
class WavefunctionSamples:
    """psi sampled on a uniform grid over [0, L]; endpoints are exactly zero."""

    grid: np.ndarray
    values: np.ndarray
    level: int
    spec: PotentialSpec

    def __post_init__(self):
        g = np.array(self.grid, dtype=float, copy=True)
        v = np.array(self.values, dtype=float, copy=True)
        if g.shape != v.shape or g.ndim != 1 or g.size < 2:
            raise DomainError("grid and values must be matching 1-d arrays, >= 2 points")
        if v[0] != 0.0 or v[-1] != 0.0:
            raise DomainError("boundary samples must be exactly zero")
        g.setflags(write=False)
        v.setflags(write=False)
        object.__setattr__(self, "grid", g)
        object.__setattr__(self, "values", v)


def _is_zero_coupling(C: float) -> bool:
    return abs(C) < ZERO_COUPLING


def _forward_abs(C: float, epsilon: float, m_max: int) -> np.ndarray:
    """|Q_m| by forward recursion, stopping early at the overflow guard."""
    vals = [1.0]
    if m_max > 1:
        vals.append(2.0 * (epsilon - 1.0) / C)
    t = 2.0 / C
    for n in range(1, m_max - 1):
        nxt = t * ((epsilon - (n + 1) ** 2) * vals[n]) - vals[n - 1]
        if abs(nxt) > 1e150:
            break
        vals.append(nxt)
    return np.abs(np.array(vals))


def stability_cutoff(C: float, epsilon: float, m_max: int = GUARD_SCAN) -> int:
    """Number of forward-recursion terms that are numerically reliable.

    Forward values of Q_m(eps) at a bound-state energy decay beyond the
    turning point m ~ sqrt(eps) until roundoff contamination (which grows)
    takes over; the index of minimal |Q_m| marks the crossover.  Coefficients
    past it are garbage and synthesis should stop there.
    """
    if _is_zero_coupling(C):
        raise DomainError("stability cutoff is defined for nonzero coupling only")
    a = _forward_abs(C, epsilon, m_max)
    start = min(int(math.ceil(math.sqrt(max(epsilon, 0.0)))) + 1, a.size - 1)
    m_star = start + int(np.argmin(a[start:]))
    return m_star + 1


def instability_edge(C: float, epsilon: float, m_max: int = GUARD_SCAN) -> int:
    """Largest term count before forward contamination reaches the Q_0 scale.

    Beyond the crossover the contaminated |Q_m| grow; once they pass |Q_0| = 1
    an untruncated synthesis is visibly dominated by noise.  The edge depends
    on the coupling (it computes to 13..14 terms at C = 5 for the low levels)
    and is reported as data, not asserted as a rule.
    """
    if _is_zero_coupling(C):
        raise DomainError("instability edge is defined for nonzero coupling only")
    a = _forward_abs(C, epsilon, m_max)
    cut = stability_cutoff(C, epsilon, m_max)
    for m in range(cut - 1, a.size):
        if a[m] >= a[0]:
            return m
    return a.size


def reduced_level(C: float, N: int, level: int) -> float:
    """Reduced eigenvalue eps_level of the N x N truncation."""
    if not isinstance(level, int) or isinstance(level, bool) or level < 0:
        raise DomainError(f"level must be a nonnegative integer, got {level!r}")
    if level >= N:
        raise DomainError(f"level={level} requires N > level, got N={N}")
    if _is_zero_coupling(C):
        return float((level + 1) ** 2)
    return float(eigenvalues(recursion_matrix(C, N), level + 1)[level])


def eigenstate_coefficients(
    C: float,
    N: int,
    level: int,
    method: str = "eigenvector",
) -> EigenstateExpansion:
    """Unit-norm coefficients f_m of eigenstate `level` in the N-term basis.

    method="eigenvector" (default) is stable for every N.  "forward" realises
    f_m = omega Q_m and truncates at the computed stability cutoff with a
    StabilityWarning when N exceeds it; "backward" uses the minimal-solution
    recursion and is stable like the eigenvector route.  All methods agree in
    the reliable regime and share the sign convention of a positive leading
    significant coefficient.
    """
    if method not in METHODS:
        raise DomainError(f"unknown method {method!r}; choose from {METHODS}")
    eps = reduced_level(C, N, level)

    if _is_zero_coupling(C):
        if method != "eigenvector":
            raise DomainError("forward/backward methods require a nonzero coupling")
        coeffs = np.zeros(N)
        coeffs[level] = 1.0
        return EigenstateExpansion(level, eps, coeffs, N, method)

    if method == "forward":
        q = q_sequence(eps, C, N).values
        cut = min(N, stability_cutoff(C, eps, m_max=max(N, GUARD_SCAN)))
        if cut < N:
            warnings.warn(
                f"forward synthesis truncated at {cut} of {N} requested terms "
                f"(coefficients beyond the |Q| minimum are contaminated)",
                StabilityWarning,
                stacklevel=2,
            )
            q = q[:cut]
        coeffs = q / np.linalg.norm(q)
        n_syn = q.size
    elif method == "backward":
        q = backward_q_sequence(eps, C, N)
        coeffs = q / np.linalg.norm(q)
        n_syn = N
    else:
        pair = eigenvector(recursion_matrix(C, N), eps)
        coeffs = pair.vector
        n_syn = N
    if coeffs[0] < 0.0:
        coeffs = -coeffs
    return EigenstateExpansion(level, eps, np.asarray(coeffs), n_syn, method)


def sample_wavefunction(
    C: float,
    k: int = 1,
    L: float = math.pi,
    N: int = 20,
    level: int = 0,
    grid_points: int = 1024,
    method: str = "eigenvector",
) -> WavefunctionSamples:
    """Sample psi_level on a uniform inclusive grid of [0, L].

    Warns with StabilityWarning when N exceeds the computed instability edge
    of the forward recursion (the regime where the naive synthesis would be
    visibly unstable); the default eigenvector coefficients remain accurate
    regardless.  The overall sign is fixed by psi'(0) > 0.
    """
    if not isinstance(grid_points, int) or isinstance(grid_points, bool) or grid_points < 2:
        raise DomainError(f"grid_points must be an integer >= 2, got {grid_points!r}")
    exp = eigenstate_coefficients(C, N, level, method=method)
    if not _is_zero_coupling(C) and N > instability_edge(C, exp.epsilon, m_max=max(N + 1, GUARD_SCAN)):
        warnings.warn(
            f"requested N={N} exceeds the forward-stability edge at C={C}, "
            f"eps={exp.epsilon:.6g}",
            StabilityWarning,
            stacklevel=2,
        )

    grid = np.linspace(0.0, L, grid_points)
    psi = np.zeros_like(grid)
    coeffs = exp.coefficients
    if float(np.dot(coeffs, np.arange(1, coeffs.size + 1))) < 0.0:
        coeffs = -coeffs
    for m, f in enumerate(coeffs):
        psi += f * basis_function(m, k, L, grid)
    psi[0] = 0.0
    psi[-1] = 0.0
    return WavefunctionSamples(
        grid=grid, values=psi, level=level, spec=PotentialSpec(A=0.0, B=0.0, C=C, k=k, L=L)
    )


def off_spectrum_tail(C: float, N: int, epsilon: float) -> float:
    """Fraction of the N-term kernel carried by the upper half of the Q values.

    Small (well under 0.1) at true eigenvalues, where the coefficients decay;
    approaches 1 away from the spectrum as the growing solution dominates.  A
    recursion overflow is itself a maximal off-spectrum signal and reports 1.
    """
    if _is_zero_coupling(C):
        raise DomainError("tail diagnostic requires a nonzero coupling")
    try:
        q = q_sequence(epsilon, C, N).values
    except GrowthError:
        return 1.0
    total = float(np.dot(q, q))
    return float(np.dot(q[N // 2 :], q[N // 2 :]) / total)
