"""Spectral solver for the 1D infinite potential well with a sinusoidal bottom.

Expands bound states over a sine (Jacobi) basis in which the wave operator of
the potential family

    V(x) = (k^2 lam^2 / 2) [A / cos^2(k lam x / 2) + B / sin^2(k lam x / 2)
                            + C cos(k lam x)],   lam = pi / L,

is symmetric tridiagonal, so the eigenproblem reduces to a three-term
recursion for the expansion coefficients.  Ships a self-contained symmetric
tridiagonal eigensolver, the recursion-polynomial machinery, eigenfunction
synthesis with stability diagnostics, an independent finite-difference
reference solver, and a CSV/JSON-emitting CLI (`sinwell`).
"""

from .errors import (
    ConvergenceError,
    DomainError,
    GrowthError,
    NumericalError,
    SingularityError,
)
from .fd import FdGrid, SubsetReport, fd_spectrum, richardson_pair, subset_check
from .jacobi import (
    BasisFunctionSpec,
    basis_function,
    hamiltonian_matrix,
    jacobi_eval,
    y_matrix_element,
)
from .model import (
    BasisParams,
    PotentialSpec,
    ReducedEnergy,
    basis_params_from_couplings,
    physical_energy,
    potential_value,
    reduced_energy,
)
from .recursion import (
    KernelValue,
    QSequence,
    backward_q_sequence,
    kernel,
    q_sequence,
    qn_zeros,
    recursion_matrix,
)
from .spectrum import (
    Spectrum,
    convergence_report,
    klauder_gap,
    poschl_teller_spectrum,
    solve_general,
    solve_sinusoidal_well,
    sweep_coupling,
)
from .tridiag import EigenPair, SymTridiag, eigenvalues, eigenvector, sturm_count
from .wavefunction import (
    EigenstateExpansion,
    StabilityWarning,
    WavefunctionSamples,
    eigenstate_coefficients,
    instability_edge,
    off_spectrum_tail,
    sample_wavefunction,
    stability_cutoff,
)

__version__ = "0.1.0"

__all__ = [
    "BasisFunctionSpec",
    "BasisParams",
    "ConvergenceError",
    "DomainError",
    "EigenPair",
    "EigenstateExpansion",
    "FdGrid",
    "GrowthError",
    "KernelValue",
    "NumericalError",
    "PotentialSpec",
    "QSequence",
    "ReducedEnergy",
    "SingularityError",
    "Spectrum",
    "StabilityWarning",
    "SubsetReport",
    "SymTridiag",
    "WavefunctionSamples",
    "backward_q_sequence",
    "basis_function",
    "basis_params_from_couplings",
    "convergence_report",
    "eigenstate_coefficients",
    "eigenvalues",
    "eigenvector",
    "fd_spectrum",
    "hamiltonian_matrix",
    "instability_edge",
    "jacobi_eval",
    "kernel",
    "klauder_gap",
    "off_spectrum_tail",
    "physical_energy",
    "poschl_teller_spectrum",
    "potential_value",
    "q_sequence",
    "qn_zeros",
    "recursion_matrix",
    "reduced_energy",
    "richardson_pair",
    "sample_wavefunction",
    "solve_general",
    "solve_sinusoidal_well",
    "stability_cutoff",
    "sturm_count",
    "subset_check",
    "sweep_coupling",
    "y_matrix_element",
]
