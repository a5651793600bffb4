"""Built-in validation suite wired to the CLI `validate` command.

Each check is a self-contained pass/fail criterion with a fixed tolerance:
golden spectrum values, convergence, perturbative tail behaviour, agreement
with the finite-difference solver, the k >= 2 spectrum-subset structure, the
coupling-off gap, polynomial/eigenvector identities, coupling-sign symmetry,
the closed-form limit and wavefunction properties.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass

import numpy as np

from . import fd, recursion, spectrum, wavefunction
from .model import PotentialSpec
from .tridiag import eigenvector

#: Golden reduced energies of the cosine well at C = 5, N = 20, to 13
#: significant digits (convergence in N is checked separately).
REFERENCE_EPS = (
    -0.5955395589892,
    4.3453451696558,
    9.3549646941810,
    16.2001100732554,
    25.1266923657196,
    36.0875520021223,
    49.0641568653649,
    64.0490437059898,
    81.0387114884928,
    100.0313345578344,
    121.0258834242971,
)


@dataclass(frozen=True)
class CheckResult:
    cid: str
    passed: bool
    detail: str


def _simpson(y: np.ndarray, dx: float) -> float:
    """Composite Simpson rule; requires an odd number of samples."""
    if y.size % 2 != 1:
        raise ValueError("Simpson rule needs an odd sample count")
    w = np.ones(y.size)
    w[1:-1:2] = 4.0
    w[2:-1:2] = 2.0
    return float(np.dot(w, y) * dx / 3.0)


def _count_nodes(psi: np.ndarray) -> int:
    interior = psi[1:-1]
    significant = interior[np.abs(interior) > 1e-9 * np.max(np.abs(interior))]
    signs = np.sign(significant)
    return int(np.sum(signs[1:] != signs[:-1]))


def check_reference_spectrum() -> CheckResult:
    t0 = time.perf_counter()
    spec = spectrum.solve_sinusoidal_well(5.0, k=1, L=math.pi, N=20, levels=11)
    elapsed = time.perf_counter() - t0
    err = float(np.max(np.abs(spec.epsilons - np.array(REFERENCE_EPS))))
    ok = err <= 1e-10 and elapsed < 0.1
    return CheckResult(
        "reference-spectrum-golden", ok, f"max |eps - reference| = {err:.3e} (tol 1e-10), {elapsed:.3f} s"
    )


def check_convergence() -> CheckResult:
    t0 = time.perf_counter()
    e20 = spectrum.solve_sinusoidal_well(5.0, N=20, levels=11).epsilons
    e40 = spectrum.solve_sinusoidal_well(5.0, N=40, levels=11).epsilons
    elapsed = time.perf_counter() - t0
    err = float(np.max(np.abs(e20 - e40)))
    ok = err < 1e-12 and elapsed < 0.1
    return CheckResult(
        "convergence-N20-N40", ok, f"max |eps(20) - eps(40)| = {err:.3e} (tol 1e-12), {elapsed:.3f} s"
    )


def check_perturbative_tail() -> CheckResult:
    eps = spectrum.solve_sinusoidal_well(5.0, N=20, levels=11).epsilons
    worst = 0.0
    for n in (9, 10):
        second_order = 25.0 / (2.0 * (2 * n + 1) * (2 * n + 3))
        worst = max(worst, abs((eps[n] - (n + 1) ** 2) - second_order))
    ok = worst < 2e-3
    return CheckResult(
        "perturbative-tail", ok, f"max deviation from 2nd-order shift = {worst:.3e} (tol 2e-3)"
    )


def check_fd_agreement() -> CheckResult:
    t0 = time.perf_counter()
    spec = PotentialSpec(A=0.0, B=0.0, C=5.0, k=1, L=math.pi)
    e0 = fd.richardson_pair(spec, M=2048, count=1)[0]
    elapsed = time.perf_counter() - t0
    err = abs(2.0 * e0 - REFERENCE_EPS[0])
    ok = err < 1e-5 and elapsed < 5.0
    return CheckResult(
        "fd-oracle-k1", ok, f"|2 E0_fd - eps0| = {err:.3e} (tol 1e-5), {elapsed:.2f} s"
    )


def check_spectrum_subset_k2() -> CheckResult:
    report = fd.subset_check(5.0, k=2, L=math.pi, N=20, levels=5, M=2048, tol=1e-4)
    ok = report.all_matched and len(report.missing) >= 4
    return CheckResult(
        "spectrum-subset-k2",
        ok,
        f"matched {sum(m.matched for m in report.matches)}/5 within 1e-4, "
        f"{len(report.missing)} extra FD levels below the 5th match (need >= 4)",
    )


def check_klauder_gap() -> CheckResult:
    rows = spectrum.klauder_gap(k=2, L=math.pi)
    ratios = [row.E_limit / row.E_flat for row in rows]
    ok = all(r == 4.0 for r in ratios)
    return CheckResult(
        "klauder-gap-k2", ok, f"E_limit/E_flat = {ratios[0]:.1f} exactly for all {len(rows)} levels"
    )


def check_qn_roots() -> CheckResult:
    N, C = 10, 5.0
    zeros = recursion.qn_zeros(N, C)
    T = recursion.recursion_matrix(C, N)
    glo, ghi = T.gershgorin()

    def q_end(eps):
        return recursion.q_sequence(eps, C, N + 1).values[N]

    xs = np.linspace(glo, ghi, 20001)
    vals = np.array([q_end(x) for x in xs])
    roots = []
    for i in range(xs.size - 1):
        if np.sign(vals[i]) != np.sign(vals[i + 1]):
            a, b, fa = xs[i], xs[i + 1], vals[i]
            for _ in range(80):
                mid = 0.5 * (a + b)
                fm = q_end(mid)
                if np.sign(fm) == np.sign(fa):
                    a, fa = mid, fm
                else:
                    b = mid
            roots.append(0.5 * (a + b))
    if len(roots) != N:
        return CheckResult("qn-roots-vs-eigenvalues", False, f"found {len(roots)} of {N} roots")
    err = float(np.max(np.abs(np.array(roots) - zeros)))
    ok = err <= 1e-8
    return CheckResult(
        "qn-roots-vs-eigenvalues", ok, f"max |sign-change root - eigenvalue| = {err:.3e} (tol 1e-8)"
    )


def check_eigenvector_identity() -> CheckResult:
    N, C = 13, 5.0
    eps0 = float(recursion.qn_zeros(N, C)[0])
    pair = eigenvector(recursion.recursion_matrix(C, N), eps0)
    q = recursion.backward_q_sequence(eps0, C, N)
    f = q / np.linalg.norm(q)
    err = float(np.max(np.abs(pair.vector - f)))  # both carry a positive leading entry
    ok = err <= 1e-8
    return CheckResult(
        "eigenvector-vs-omegaQ", ok, f"max |v_m - omega Q_m| = {err:.3e} (tol 1e-8)"
    )


def check_coupling_sign() -> CheckResult:
    plus = spectrum.solve_sinusoidal_well(5.0, N=20, levels=11).epsilons
    minus = spectrum.solve_sinusoidal_well(-5.0, N=20, levels=11).epsilons
    spec_err = float(np.max(np.abs(plus - minus)))
    parity_exact = True
    for eps in (plus[0], 3.7, plus[4], plus[10]):
        qp = recursion.q_sequence(float(eps), 5.0, 20).values
        qm = recursion.q_sequence(float(eps), -5.0, 20).values
        signs = (-1.0) ** np.arange(20)
        if not np.array_equal(qm, signs * qp):
            parity_exact = False
    ok = spec_err <= 1e-13 and parity_exact
    return CheckResult(
        "coupling-sign-invariance",
        ok,
        f"max |eps(+5) - eps(-5)| = {spec_err:.3e} (tol 1e-13), "
        f"Q parity exact: {parity_exact}",
    )


def check_poschl_teller_closed_form() -> CheckResult:
    got = spectrum.solve_general(0.75, 0.75, 0.0, k=1, L=math.pi, N=40, levels=6)
    mu = math.sqrt(4 * 0.75 + 0.25)
    shift = (2.0 * mu + 1.0) / 2.0
    expect = 0.5 * np.array([(n + shift) ** 2 for n in range(6)])
    err = float(np.max(np.abs(got.energies - expect)))
    ok = err <= 1e-10
    return CheckResult(
        "poschl-teller-closed-form", ok, f"max |E - closed form| = {err:.3e} (tol 1e-10)"
    )


def check_wavefunction_properties() -> CheckResult:
    C, k, L, N = 5.0, 1, math.pi, 13
    problems = []

    samples = [
        wavefunction.sample_wavefunction(C, k=k, L=L, N=N, level=lvl, grid_points=4097)
        for lvl in range(5)
    ]
    dx = L / 4096
    for lvl, s in enumerate(samples):
        if s.values[0] != 0.0 or s.values[-1] != 0.0:
            problems.append(f"level {lvl}: endpoints not exactly zero")
        norm = _simpson(s.values**2, dx)
        if abs(norm - 1.0) > 1e-6:
            problems.append(f"level {lvl}: norm {norm!r}")
    for lvl in range(5):
        nodes = _count_nodes(
            wavefunction.sample_wavefunction(C, k=k, L=L, N=N, level=lvl, grid_points=4096).values
        )
        if nodes != lvl:
            problems.append(f"level {lvl}: {nodes} nodes")
    worst_overlap = 0.0
    for i in range(4):
        for j in range(i + 1, 4):
            overlap = abs(_simpson(samples[i].values * samples[j].values, dx))
            worst_overlap = max(worst_overlap, overlap)
    if worst_overlap >= 1e-4:
        problems.append(f"max off-diagonal overlap {worst_overlap:.3e}")

    ok = not problems
    detail = (
        f"endpoints exact, norms within 1e-6, nodes 0..4, max overlap {worst_overlap:.2e}"
        if ok
        else "; ".join(problems)
    )
    return CheckResult("wavefunction-properties", ok, detail)


CHECKS = (
    ("reference-spectrum-golden", check_reference_spectrum),
    ("convergence-N20-N40", check_convergence),
    ("perturbative-tail", check_perturbative_tail),
    ("fd-oracle-k1", check_fd_agreement),
    ("spectrum-subset-k2", check_spectrum_subset_k2),
    ("klauder-gap-k2", check_klauder_gap),
    ("qn-roots-vs-eigenvalues", check_qn_roots),
    ("eigenvector-vs-omegaQ", check_eigenvector_identity),
    ("coupling-sign-invariance", check_coupling_sign),
    ("poschl-teller-closed-form", check_poschl_teller_closed_form),
    ("wavefunction-properties", check_wavefunction_properties),
)


def run_all() -> list[CheckResult]:
    """Run every validation check in order and collect the results."""
    return [fn() for _, fn in CHECKS]
