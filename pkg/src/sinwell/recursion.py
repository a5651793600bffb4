"""Three-term recursion polynomials of the sinusoidal well and their kernel.

Expanding an eigenstate of reduced energy eps over the sine basis turns the
wave equation into the recursion

    eps f_n = (n + 1)^2 f_n + (C/2) (f_{n-1} + f_{n+1}),     n >= 1,
    eps f_0 = f_0 + (C/2) f_1,

so f_n(eps) = omega(eps) Q_n(eps) where the Q_n are polynomials fixed by
Q_0 = 1 and omega = K(eps)^(-1/2) with kernel K(eps) = sum_n Q_n(eps)^2.
The zeros of Q_N are exactly the eigenvalues of the N x N truncation of the
matrix with diagonal (n + 1)^2 and constant off-diagonal C/2 (the classical
correspondence between orthogonal-polynomial recurrences and their Jacobi
matrix), which is how they are computed here; forward recursion is reserved
for polynomial values, where it is legitimate.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DomainError, GrowthError, NumericalError
from .tridiag import SymTridiag, eigenvalues

#: Forward and backward recursions abort once |Q_n| passes this bound.
GROWTH_LIMIT = 1e150


@dataclass(frozen=True)
class QSequence:
    """Values Q_0 .. Q_{N-1} of the recursion polynomials at one energy."""

    coupling: float
    epsilon: float
    values: np.ndarray

    def __post_init__(self):
        vals = np.array(self.values, dtype=float, copy=True)
        if vals.ndim != 1 or vals.size < 1:
            raise DomainError("values must be a nonempty 1-d sequence")
        if vals[0] != 1.0:
            raise DomainError("Q_0 must equal 1 exactly")
        vals.setflags(write=False)
        object.__setattr__(self, "values", vals)

    @property
    def n_terms(self) -> int:
        return self.values.size


@dataclass(frozen=True)
class KernelValue:
    """Kernel K = sum Q_n^2 and the normalising factor omega = 1/sqrt(K)."""

    K: float
    omega: float


def _check_args(C, N):
    if C == 0.0:
        raise DomainError("coupling C must be nonzero (C = 0 is the diagonal case)")
    if not isinstance(N, int) or isinstance(N, bool) or N < 1:
        raise DomainError(f"N must be an integer >= 1, got {N!r}")


def recursion_matrix(C: float, N: int) -> SymTridiag:
    """The N x N Jacobi matrix of the recursion: diag (n+1)^2, off-diagonal C/2."""
    if not isinstance(N, int) or isinstance(N, bool) or N < 1:
        raise DomainError(f"N must be an integer >= 1, got {N!r}")
    diag = (np.arange(N, dtype=float) + 1.0) ** 2
    off = np.full(N - 1, 0.5 * C)
    return SymTridiag(diag=diag, offdiag=off)


def q_sequence(epsilon: float, C: float, N: int) -> QSequence:
    """Q_0 .. Q_{N-1} by forward recursion.

    Raises GrowthError once a value exceeds the overflow guard, which signals
    an energy far outside the spectral region or an N too large for forward
    recursion (the recursion admits a dominant growing solution).
    """
    _check_args(C, N)
    q = np.zeros(N)
    q[0] = 1.0
    if N > 1:
        q[1] = 2.0 * (epsilon - 1.0) / C
    t = 2.0 / C
    for n in range(1, N - 1):
        q[n + 1] = t * ((epsilon - (n + 1) ** 2) * q[n]) - q[n - 1]
        if abs(q[n + 1]) > GROWTH_LIMIT:
            raise GrowthError(
                f"|Q_{n + 1}| exceeded {GROWTH_LIMIT:g} at eps={epsilon!r}, C={C!r}"
            )
    return QSequence(coupling=C, epsilon=epsilon, values=q)


def backward_q_sequence(epsilon: float, C: float, N: int) -> np.ndarray:
    """Q_0 .. Q_{N-1} by minimal-solution (Miller-style) backward recursion.

    Recurs downward from (Q_N, Q_{N-1}) = (0, 1) and re-imposes the Q_0 = 1
    normalisation.  At an eigenvalue of the N x N truncation this reproduces
    the polynomial values exactly in principle and stably in practice, because
    downward recursion damps the component along the growing solution that
    ruins the forward direction.
    """
    _check_args(C, N)
    q = np.zeros(N + 1)
    q[N] = 0.0
    q[N - 1] = 1.0
    t = 2.0 / C
    for n in range(N - 1, 0, -1):
        q[n - 1] = t * ((epsilon - (n + 1) ** 2) * q[n]) - q[n + 1]
        if abs(q[n - 1]) > GROWTH_LIMIT:
            raise GrowthError(
                f"backward recursion exceeded {GROWTH_LIMIT:g} at eps={epsilon!r}"
            )
    if q[0] == 0.0:
        raise NumericalError("backward recursion produced Q_0 = 0; cannot normalise")
    return q[:N] / q[0]


def kernel(epsilon: float, C: float, N: int) -> KernelValue:
    """Kernel K(eps) truncated at N terms, and omega = K^(-1/2).

    The truncation is deliberately the same N used for the spectrum: then the
    normalised coefficients omega(eps_j) Q_m(eps_j) coincide with the unit
    eigenvector of the N x N matrix.
    """
    q = q_sequence(epsilon, C, N)
    K = float(np.dot(q.values, q.values))
    return KernelValue(K=K, omega=K ** -0.5)


def qn_zeros(N: int, C: float) -> np.ndarray:
    """All N zeros of Q_N, ascending: the eigenvalues of the N x N truncation."""
    _check_args(C, N)
    return eigenvalues(recursion_matrix(C, N), N)
