"""Self-contained symmetric tridiagonal eigensolver.

Eigenvalues are found by Sturm-sequence bisection (selectable lowest-k,
deterministic, trivially verifiable through the counting function) and
eigenvectors by inverse iteration with a partially pivoted tridiagonal LU.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass

import numpy as np

from .errors import ConvergenceError, DomainError

#: Bisection brackets are narrowed at least to this width times the spectral
#: scale max(|diag|) + 2 max(|offdiag|); in practice bisection is continued
#: all the way to floating-point gap exhaustion.
BISECT_WIDTH_FACTOR = 1e-13
MAX_BISECT_ITER = 160
MAX_INVERSE_ITER = 50
#: Replacement for exact-zero pivots in Sturm sequences.
ZERO_PIVOT = 1e-300


class DegenerateClusterWarning(RuntimeWarning):
    """Two eigenvalues lie within 1e-12 of each other relative to scale."""


@dataclass(frozen=True)
class SymTridiag:
    """Symmetric tridiagonal matrix stored as diagonal + off-diagonal."""

    diag: np.ndarray
    offdiag: np.ndarray

    def __post_init__(self):
        d = np.array(self.diag, dtype=float, copy=True)
        e = np.array(self.offdiag, dtype=float, copy=True)
        if d.ndim != 1 or e.ndim != 1:
            raise DomainError("diag and offdiag must be one-dimensional")
        if d.size < 1:
            raise DomainError("matrix must have at least one row")
        if e.size != d.size - 1:
            raise DomainError(
                f"offdiag length {e.size} inconsistent with diag length {d.size}"
            )
        if not (np.all(np.isfinite(d)) and np.all(np.isfinite(e))):
            raise DomainError("matrix entries must be finite")
        d.setflags(write=False)
        e.setflags(write=False)
        object.__setattr__(self, "diag", d)
        object.__setattr__(self, "offdiag", e)

    @property
    def n(self) -> int:
        return self.diag.size

    def norm_bound(self) -> float:
        """Infinity-norm style bound max|d| + 2 max|e|."""
        emax = float(np.max(np.abs(self.offdiag))) if self.n > 1 else 0.0
        return float(np.max(np.abs(self.diag))) + 2.0 * emax

    def gershgorin(self) -> tuple[float, float]:
        """Interval guaranteed to contain every eigenvalue."""
        if self.n == 1:
            d0 = float(self.diag[0])
            return d0, d0
        r = np.zeros(self.n)
        r[:-1] += np.abs(self.offdiag)
        r[1:] += np.abs(self.offdiag)
        return float(np.min(self.diag - r)), float(np.max(self.diag + r))

    def matvec(self, v: np.ndarray) -> np.ndarray:
        v = np.asarray(v, dtype=float)
        out = self.diag * v
        if self.n > 1:
            out[:-1] += self.offdiag * v[1:]
            out[1:] += self.offdiag * v[:-1]
        return out


@dataclass(frozen=True)
class EigenPair:
    """An eigenvalue with its unit-norm eigenvector.

    Sign convention: the first component of magnitude above 1e-12 is positive.
    """

    value: float
    vector: np.ndarray


def _sturm_counts(diag, e2, xs):
    """Number of eigenvalues strictly below each shift in `xs`.

    Runs the pivot recurrence q_i = (d_i - x) - e_{i-1}^2 / q_{i-1} and counts
    negative pivots; vectorised over the shift points.  Exact-zero pivots are
    perturbed; an overflowing ratio self-heals one step later, so no special
    casing is needed beyond silencing the FP warnings.
    """
    xs = np.atleast_1d(np.asarray(xs, dtype=float))
    with np.errstate(over="ignore", divide="ignore", invalid="ignore"):
        q = diag[0] - xs
        count = (q < 0).astype(np.int64)
        for i in range(1, diag.size):
            q = np.where(q == 0.0, ZERO_PIVOT, q)
            q = (diag[i] - xs) - e2[i - 1] / q
            count += q < 0
    return count


def _last_pivots(diag, e2, xs):
    """Final pivot of the recurrence (the ratio det_N / det_{N-1}) at each shift."""
    xs = np.atleast_1d(np.asarray(xs, dtype=float))
    with np.errstate(over="ignore", divide="ignore", invalid="ignore"):
        q = diag[0] - xs
        for i in range(1, diag.size):
            q = np.where(q == 0.0, ZERO_PIVOT, q)
            q = (diag[i] - xs) - e2[i - 1] / q
    return q


def sturm_count(T: SymTridiag, x: float) -> int:
    """Count eigenvalues of T strictly less than x."""
    if not np.isfinite(x):
        raise DomainError(f"shift must be finite, got {x!r}")
    e2 = T.offdiag * T.offdiag
    return int(_sturm_counts(T.diag, e2, [x])[0])


def eigenvalues(T: SymTridiag, count: int) -> np.ndarray:
    """The `count` smallest eigenvalues of T in ascending order.

    Each eigenvalue is isolated by counting-function bisection inside the
    Gershgorin interval.  Bisection runs until the brackets are exhausted at
    floating-point resolution (always well below the contractual width
    BISECT_WIDTH_FACTOR * scale), then a guarded secant step on the final
    pivot polishes the estimate.
    """
    if not isinstance(count, int) or isinstance(count, bool):
        raise DomainError(f"count must be an integer, got {count!r}")
    if not (1 <= count <= T.n):
        raise DomainError(f"count={count} outside 1..{T.n}")

    diag = T.diag
    e2 = T.offdiag * T.offdiag
    glo, ghi = T.gershgorin()
    scale = T.norm_bound()
    target = BISECT_WIDTH_FACTOR * max(1.0, scale)

    idx = np.arange(count)
    lo = np.full(count, glo)
    hi = np.full(count, ghi)
    if glo == ghi:  # 1x1 matrix
        return np.full(count, glo)

    for _ in range(MAX_BISECT_ITER):
        mid = 0.5 * (lo + hi)
        active = (mid > lo) & (mid < hi)
        if not active.any():
            break
        c = _sturm_counts(diag, e2, mid)
        go_down = (c >= idx + 1) & active
        go_up = ~go_down & active
        hi = np.where(go_down, mid, hi)
        lo = np.where(go_up, mid, lo)
    else:
        if np.any(hi - lo > target):
            raise ConvergenceError(
                "bisection exceeded the iteration cap without reaching the "
                "requested bracket width (pathological input?)"
            )

    # One secant step on the last pivot; fall back to the midpoint whenever the
    # pivot does not change sign across the (already tiny) bracket.
    mid = 0.5 * (lo + hi)
    f_lo = _last_pivots(diag, e2, lo)
    f_hi = _last_pivots(diag, e2, hi)
    with np.errstate(over="ignore", divide="ignore", invalid="ignore"):
        denom = f_hi - f_lo
        sec = hi - f_hi * (hi - lo) / denom
        ok = (
            np.isfinite(sec)
            & (sec >= lo)
            & (sec <= hi)
            & (np.sign(f_lo) != np.sign(f_hi))
            & (denom != 0.0)
        )
    return np.where(ok, sec, mid)


def _lu_factor_shifted(T: SymTridiag, sigma: float):
    """Partially pivoted LU of (T - sigma I); LAPACK-style gttrf layout."""
    n = T.n
    d = np.asarray(T.diag - sigma, dtype=float).copy()
    dl = T.offdiag.copy() if n > 1 else np.zeros(0)
    du = T.offdiag.copy() if n > 1 else np.zeros(0)
    du2 = np.zeros(max(n - 2, 0))
    swap = np.zeros(max(n - 1, 0), dtype=bool)
    for i in range(n - 1):
        if abs(d[i]) >= abs(dl[i]):
            if d[i] != 0.0:
                fact = dl[i] / d[i]
            else:
                fact = 0.0
            dl[i] = fact
            d[i + 1] -= fact * du[i]
        else:
            fact = d[i] / dl[i]
            d[i] = dl[i]
            dl[i] = fact
            tmp = du[i]
            du[i] = d[i + 1]
            d[i + 1] = tmp - fact * d[i + 1]
            if i < n - 2:
                du2[i] = du[i + 1]
                du[i + 1] = -fact * du[i + 1]
            swap[i] = True
    # Near-singular pivots are expected (sigma sits on an eigenvalue); nudge
    # them so the solve stays finite, which is the standard inverse-iteration
    # device.
    tiny = np.finfo(float).tiny * max(1.0, T.norm_bound()) / np.finfo(float).eps
    d[d == 0.0] = tiny
    return dl, d, du, du2, swap


def _lu_solve(factors, b):
    dl, d, du, du2, swap = factors
    n = d.size
    x = np.asarray(b, dtype=float).copy()
    for i in range(n - 1):
        if swap[i]:
            x[i], x[i + 1] = x[i + 1], x[i]
        x[i + 1] -= dl[i] * x[i]
    x[n - 1] /= d[n - 1]
    if n > 1:
        x[n - 2] = (x[n - 2] - du[n - 2] * x[n - 1]) / d[n - 2]
    for i in range(n - 3, -1, -1):
        x[i] = (x[i] - du[i] * x[i + 1] - du2[i] * x[i + 2]) / d[i]
    return x


def _fix_sign(v: np.ndarray) -> np.ndarray:
    for comp in v:
        if abs(comp) > 1e-12:
            return -v if comp < 0 else v
    return v


def eigenvector(T: SymTridiag, value: float) -> EigenPair:
    """Inverse iteration at shift `value`; returns a refined EigenPair.

    `value` must approximate an eigenvalue (within ~1e-8 of scale).  The
    returned eigenvalue is the Rayleigh quotient of the converged vector.
    Starts from the deterministic all-ones vector and re-seeds once with
    alternating signs if the residual stagnates.
    """
    if not np.isfinite(value):
        raise DomainError(f"value must be finite, got {value!r}")
    n = T.n
    scale = max(1.0, T.norm_bound())
    delta = 1e-12 * scale
    if sturm_count(T, value + delta) - sturm_count(T, value - delta) > 1:
        warnings.warn(
            f"two eigenvalues within {delta:g} of {value!r}; eigenvector may "
            "mix the cluster",
            DegenerateClusterWarning,
            stacklevel=2,
        )

    factors = _lu_factor_shifted(T, value)
    v = np.ones(n) / np.sqrt(n)
    tol = 1e-11 * scale
    prev_res = np.inf
    reseeded = False
    for _ in range(MAX_INVERSE_ITER):
        w = _lu_solve(factors, v)
        peak = float(np.max(np.abs(w)))  # pre-scale: components can reach ~1/pivot
        if not np.isfinite(peak) or peak == 0.0:
            w = np.ones(n)
            peak = 1.0
        w = w / peak
        w /= float(np.linalg.norm(w))
        theta = float(w @ T.matvec(w))
        res = float(np.max(np.abs(T.matvec(w) - theta * w)))
        if res <= tol:
            w = _fix_sign(w)
            w /= float(np.linalg.norm(w))
            w.setflags(write=False)
            return EigenPair(value=theta, vector=w)
        if res >= 0.5 * prev_res and not reseeded:
            # stagnation: restart from the alternating-sign vector
            v = np.where(np.arange(n) % 2 == 0, 1.0, -1.0) / np.sqrt(n)
            reseeded = True
            prev_res = np.inf
            continue
        prev_res = res
        v = w
    raise ConvergenceError(
        f"inverse iteration did not converge at shift {value!r}; "
        "is the shift close to an eigenvalue?"
    )
