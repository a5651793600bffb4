"""Jacobi polynomials, position-operator matrix elements and the sine basis.

The working basis on the reference interval y in [-1, 1] is

    phi_n(y) = A_n (1 + y)^alpha (1 - y)^beta P_n^(mu, nu)(y),

whose parameters are tied to the potential couplings (see `model`).  In this
basis the wave operator of the well family is tridiagonal: the diagonal
carries (n + (mu + nu + 1)/2)^2 and the only off-diagonal contribution is the
coupling C times the matrix element <n|y|m> of the position operator, which
vanishes for |n - m| >= 2.  For A = B = 0 the basis reduces to plain sines of
the box coordinate and is synthesised in x-space by `basis_function`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError
from .model import BasisParams
from .tridiag import SymTridiag

#: Normalisation conventions for `basis_function`.
CONVENTIONS = ("orthonormal", "sqrt-pi")


def _check_jacobi_params(mu, nu):
    if not (mu > -1.0) or not (nu > -1.0):
        raise DomainError(f"Jacobi parameters must exceed -1, got ({mu}, {nu})")


def jacobi_eval(n: int, mu: float, nu: float, y):
    """Evaluate the Jacobi polynomial P_n^(mu, nu)(y) on [-1, 1].

    Uses the forward three-term recurrence in the degree, which is benign on
    the orthogonality interval for the degrees used here (relative accuracy
    around 1e-12 up to n = 200).  `y` may be a scalar or an ndarray.

    The parameter convention is the standard one: mu pairs with the (1 - y)
    factor of the weight and nu with (1 + y), so P_n^(mu, nu)(1) equals
    binomial(n + mu, n).
    """
    if not isinstance(n, int) or isinstance(n, bool) or n < 0:
        raise DomainError(f"degree must be a nonnegative integer, got {n!r}")
    _check_jacobi_params(mu, nu)
    y_arr = np.asarray(y, dtype=float)
    if np.any(np.abs(y_arr) > 1.0):
        raise DomainError("evaluation points must lie in [-1, 1]")

    p_prev = np.ones_like(y_arr)
    if n == 0:
        return float(p_prev) if np.isscalar(y) else p_prev
    p = (mu + 1.0) + (mu + nu + 2.0) * (y_arr - 1.0) / 2.0
    for j in range(2, n + 1):
        s = 2.0 * j + mu + nu
        c1 = 2.0 * j * (j + mu + nu) * (s - 2.0)
        c2 = (s - 1.0) * ((s * (s - 2.0)) * y_arr + (mu * mu - nu * nu))
        c3 = 2.0 * (j + mu - 1.0) * (j + nu - 1.0) * s
        p, p_prev = (c2 * p - c3 * p_prev) / c1, p
    return float(p) if np.isscalar(y) else p


def y_matrix_element(n: int, m: int, mu: float, nu: float) -> float:
    """Matrix element <n|y|m> of the position operator in the Jacobi basis.

    Nonzero only on the tridiagonal band.  The diagonal at n = 0 uses the
    cancelled form (nu - mu)/(mu + nu + 2) so that mu + nu = 0 stays finite,
    and the off-diagonal factors are grouped so the symmetric case
    mu = nu = 1/2 comes out exactly 1/2.
    """
    for name, i in (("n", n), ("m", m)):
        if not isinstance(i, int) or isinstance(i, bool) or i < 0:
            raise DomainError(f"index {name} must be a nonnegative integer, got {i!r}")
    _check_jacobi_params(mu, nu)

    if abs(n - m) >= 2:
        return 0.0
    if n == m:
        if n == 0:
            return (nu - mu) / (mu + nu + 2.0)
        s = 2.0 * n + mu + nu
        return (nu - mu) * (nu + mu) / (s * (s + 2.0))
    if m == n + 1:
        s = 2.0 * n + mu + nu
        r1 = ((n + 1.0) * (n + mu + nu + 1.0)) / ((s + 1.0) * (s + 3.0))
        r2 = (n + mu + 1.0) * (n + nu + 1.0)
        return 2.0 * math.sqrt(r1) * math.sqrt(r2) / (s + 2.0)
    # m == n - 1: the same expression shifted one row down
    s = 2.0 * n + mu + nu
    r1 = (n * (n + mu + nu)) / ((s - 1.0) * (s + 1.0))
    r2 = (n + mu) * (n + nu)
    return 2.0 * math.sqrt(r1) * math.sqrt(r2) / s


def hamiltonian_matrix(C: float, mu: float, nu: float, N: int) -> SymTridiag:
    """N x N reduced Hamiltonian: diag (n + (mu+nu+1)/2)^2 + C <n|y|n>, off C <n|y|n+1>.

    Its eigenvalues are the reduced energies eps = 2E/(k lam)^2 of the well
    family.  For mu = nu = 1/2 this is exactly the matrix with diagonal
    (n + 1)^2 and constant off-diagonal C/2.
    """
    if not isinstance(N, int) or isinstance(N, bool) or N < 1:
        raise DomainError(f"N must be an integer >= 1, got {N!r}")
    _check_jacobi_params(mu, nu)
    shift = (mu + nu + 1.0) / 2.0
    ns = np.arange(N, dtype=float)
    diag = (ns + shift) ** 2
    diag += C * np.array([y_matrix_element(i, i, mu, nu) for i in range(N)])
    off = C * np.array([y_matrix_element(i, i + 1, mu, nu) for i in range(N - 1)])
    return SymTridiag(diag=diag, offdiag=off)


@dataclass(frozen=True)
class BasisFunctionSpec:
    """One fully specified basis function: index, parameters, geometry, constant.

    x-space synthesis is available for the sine case mu = nu = 1/2 (the wells
    without wall singularities), where the function is
    normalization * sin((n+1) k pi x / L) and vanishes at both walls.  General
    parameters enter only through matrix elements: y = cos(k lam x) folds
    [0, L] onto [-1, 1] k times, so no single-valued x-space form exists.
    """

    n: int
    params: BasisParams
    k: int
    L: float
    normalization: float

    def __post_init__(self):
        if not isinstance(self.n, int) or isinstance(self.n, bool) or self.n < 0:
            raise DomainError(f"index must be a nonnegative integer, got {self.n!r}")
        if not isinstance(self.k, int) or isinstance(self.k, bool) or self.k < 1:
            raise DomainError(f"harmonic index must be an integer >= 1, got {self.k!r}")
        if not (self.L > 0.0):
            raise DomainError(f"well width must be positive, got {self.L!r}")
        if not (self.normalization > 0.0):
            raise DomainError("normalization constant must be positive")

    @property
    def is_sine(self) -> bool:
        return self.params.mu == 0.5 and self.params.nu == 0.5

    def evaluate(self, x):
        if not self.is_sine:
            raise DomainError(
                "x-space synthesis is defined only for the sine case mu = nu = 1/2"
            )
        return _sine_values(self.n, self.k, self.L, x, self.normalization)


def _sine_values(n, k, L, x, const):
    x_arr = np.asarray(x, dtype=float)
    if np.any((x_arr < 0.0) | (x_arr > L)):
        raise DomainError(f"x must lie in [0, {L}]")
    vals = const * np.sin((n + 1) * k * (math.pi / L) * x_arr)
    vals = np.where((x_arr == 0.0) | (x_arr == L), 0.0, vals)
    return float(vals) if np.isscalar(x) else vals


def basis_function(n: int, k: int, L: float, x, convention: str = "orthonormal"):
    """Sine basis function for the A = B = 0 case, evaluated at x in [0, L].

    phi_n(x) = c * sin((n + 1) k pi x / L).  The default "orthonormal"
    convention uses c = sqrt(2/L), making the family orthonormal under the
    plain dx inner product on [0, L]; "sqrt-pi" records the alternative
    constant c = 1/sqrt(pi).  The spectrum never depends on this choice.

    Endpoint values are exactly zero; `x` may be a scalar or an ndarray.
    """
    if not isinstance(n, int) or isinstance(n, bool) or n < 0:
        raise DomainError(f"index must be a nonnegative integer, got {n!r}")
    if not isinstance(k, int) or isinstance(k, bool) or k < 1:
        raise DomainError(f"harmonic index k must be an integer >= 1, got {k!r}")
    if not (L > 0.0):
        raise DomainError(f"well width must be positive, got {L!r}")
    if convention not in CONVENTIONS:
        raise DomainError(f"unknown convention {convention!r}; choose from {CONVENTIONS}")
    const = math.sqrt(2.0 / L) if convention == "orthonormal" else 1.0 / math.sqrt(math.pi)
    return _sine_values(n, k, L, x, const)
