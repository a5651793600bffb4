"""Tests for Jacobi evaluation, position-operator elements and the sine basis."""

import math

import numpy as np
import pytest
from scipy.integrate import quad
from scipy.special import eval_jacobi, roots_jacobi

from sinwell.errors import DomainError
from sinwell.jacobi import (
    BasisFunctionSpec,
    basis_function,
    hamiltonian_matrix,
    jacobi_eval,
    y_matrix_element,
)
from sinwell.model import basis_params_from_couplings


class TestJacobiEval:
    def test_degree_zero_is_one(self):
        for mu, nu, y in [(0.5, 0.5, -0.3), (2.0, -0.5, 1.0), (0.0, 0.0, 0.0)]:
            assert jacobi_eval(0, mu, nu, y) == 1.0

    def test_degree_one_legendre(self):
        assert jacobi_eval(1, 0.0, 0.0, 0.3) == pytest.approx(0.3, abs=1e-15)

    def test_value_at_right_endpoint(self):
        # P_n^(mu, nu)(1) = binomial(n + mu, n)
        assert jacobi_eval(2, 0.5, 0.5, 1.0) == pytest.approx(1.875, abs=1e-14)
        assert jacobi_eval(3, 2.0, 0.0, 1.0) == pytest.approx(10.0, abs=1e-12)

    @pytest.mark.parametrize("mu,nu", [(0.5, 0.5), (0.0, 0.0), (1.25, -0.4), (3.0, 0.5)])
    def test_against_scipy_up_to_n200(self, mu, nu):
        ys = np.linspace(-1.0, 1.0, 21)
        for n in (1, 2, 5, 20, 77, 200):
            mine = jacobi_eval(n, mu, nu, ys)
            ref = eval_jacobi(n, mu, nu, ys)
            scale = np.maximum(1.0, np.abs(ref))
            assert np.max(np.abs(mine - ref) / scale) < 1e-12

    def test_vectorised_matches_scalar(self):
        ys = np.array([-0.9, 0.0, 0.4])
        vec = jacobi_eval(4, 0.5, 1.5, ys)
        assert vec == pytest.approx([jacobi_eval(4, 0.5, 1.5, float(y)) for y in ys])

    def test_domain_errors(self):
        with pytest.raises(DomainError):
            jacobi_eval(2, -1.0, 0.0, 0.5)
        with pytest.raises(DomainError):
            jacobi_eval(2, 0.0, -1.5, 0.5)
        with pytest.raises(DomainError):
            jacobi_eval(-1, 0.0, 0.0, 0.5)
        with pytest.raises(DomainError):
            jacobi_eval(2, 0.0, 0.0, 1.5)


class TestYMatrixElement:
    def test_symmetric_parameters_have_zero_diagonal(self):
        for mu in (0.0, 0.5, 2.3):
            for n in range(6):
                assert y_matrix_element(n, n, mu, mu) == 0.0

    def test_sine_case_offdiagonal_is_exactly_half(self):
        for n in range(40):
            assert y_matrix_element(n, n + 1, 0.5, 0.5) == 0.5
            assert y_matrix_element(n + 1, n, 0.5, 0.5) == 0.5

    def test_band_is_tridiagonal(self):
        for n, m in [(5, 2), (0, 2), (3, 7), (9, 11)]:
            assert y_matrix_element(n, m, 0.8, -0.2) == 0.0

    @pytest.mark.parametrize("mu,nu", [(0.5, 0.5), (0.0, 0.0), (1.7, 0.3), (-0.4, 2.0)])
    def test_symmetry_of_offdiagonal(self, mu, nu):
        for n in range(8):
            up = y_matrix_element(n, n + 1, mu, nu)
            down = y_matrix_element(n + 1, n, mu, nu)
            assert abs(up - down) <= 1e-14

    def test_legendre_first_offdiagonal(self):
        assert y_matrix_element(0, 1, 0.0, 0.0) == pytest.approx(1 / math.sqrt(3), abs=1e-15)

    def test_zero_sum_parameters_diagonal_is_finite(self):
        # mu + nu = 0 at n = 0 is a removable 0/0 of the raw formula
        assert y_matrix_element(0, 0, 0.0, 0.0) == 0.0
        val = y_matrix_element(0, 0, 0.5, -0.5)
        assert val == pytest.approx((-0.5 - 0.5) / 2.0, abs=1e-15)

    def test_sine_case_quadrature_oracle(self):
        # in the box coordinate: <n|y|m> = (2/pi) int_0^pi sin((n+1)t) cos t sin((m+1)t) dt
        for n, m in [(0, 0), (0, 1), (1, 2), (3, 4), (2, 2)]:
            ref, _ = quad(
                lambda t: math.sin((n + 1) * t) * math.cos(t) * math.sin((m + 1) * t),
                0.0,
                math.pi,
            )
            assert y_matrix_element(n, m, 0.5, 0.5) == pytest.approx(2 / math.pi * ref, abs=1e-10)

    @pytest.mark.parametrize("mu,nu", [(0.0, 0.0), (0.5, 1.5), (2.0, 0.25), (-0.3, 0.7)])
    def test_general_parameters_against_gauss_jacobi_quadrature(self, mu, nu):
        # <n|y|m> over orthonormal polynomials with weight (1-y)^mu (1+y)^nu;
        # Gauss-Jacobi quadrature is exact for these polynomial integrands.
        nodes, weights = roots_jacobi(12, mu, nu)

        def norm(n):
            vals = jacobi_eval(n, mu, nu, nodes)
            return math.sqrt(float(weights @ (vals * vals)))

        for n, m in [(0, 0), (1, 1), (0, 1), (1, 2), (4, 5), (3, 3)]:
            pn = jacobi_eval(n, mu, nu, nodes) / norm(n)
            pm = jacobi_eval(m, mu, nu, nodes) / norm(m)
            ref = float(weights @ (pn * nodes * pm))
            assert y_matrix_element(n, m, mu, nu) == pytest.approx(ref, abs=1e-12)


class TestHamiltonianMatrix:
    def test_sine_case_reduces_exactly(self):
        T = hamiltonian_matrix(7.3, 0.5, 0.5, 25)
        assert np.array_equal(T.diag, (np.arange(25) + 1.0) ** 2)
        assert np.array_equal(T.offdiag, np.full(24, 7.3 / 2.0))

    def test_zero_coupling_is_diagonal(self):
        T = hamiltonian_matrix(0.0, 1.3, 0.2, 8)
        assert np.all(T.offdiag == 0.0)
        shift = (1.3 + 0.2 + 1.0) / 2.0
        assert T.diag == pytest.approx((np.arange(8) + shift) ** 2, abs=1e-13)

    def test_legendre_two_by_two_example(self):
        T = hamiltonian_matrix(1.0, 0.0, 0.0, 2)
        assert T.diag == pytest.approx([0.25, 2.25], abs=1e-15)
        assert T.offdiag[0] == pytest.approx(1 / math.sqrt(3), abs=1e-15)

    def test_rejects_bad_size(self):
        with pytest.raises(DomainError):
            hamiltonian_matrix(1.0, 0.5, 0.5, 0)


class TestBasisFunction:
    def test_vanishes_exactly_at_both_walls(self):
        for n, k, L in [(0, 1, math.pi), (3, 2, 1.0), (7, 3, 2.5)]:
            assert basis_function(n, k, L, 0.0) == 0.0
            assert basis_function(n, k, L, L) == 0.0

    def test_orthonormal_value_at_midpoint(self):
        assert basis_function(0, 1, math.pi, math.pi / 2) == pytest.approx(
            math.sqrt(2 / math.pi), abs=1e-15
        )

    def test_orthonormality_under_dx_inner_product(self):
        L = 2.0
        for k in (1, 2):
            for n, m in [(0, 0), (1, 1), (0, 1), (2, 3)]:
                val, _ = quad(
                    lambda x: basis_function(n, k, L, x) * basis_function(m, k, L, x),
                    0.0,
                    L,
                    limit=200,
                )
                assert val == pytest.approx(1.0 if n == m else 0.0, abs=1e-10)

    def test_sqrt_pi_convention_constant(self):
        x = 0.7
        ratio = basis_function(2, 1, math.pi, x, convention="sqrt-pi") / basis_function(
            2, 1, math.pi, x
        )
        assert ratio == pytest.approx((1 / math.sqrt(math.pi)) / math.sqrt(2 / math.pi), abs=1e-15)

    def test_domain_and_convention_errors(self):
        with pytest.raises(DomainError):
            basis_function(0, 1, math.pi, -0.1)
        with pytest.raises(DomainError):
            basis_function(0, 1, math.pi, 3.2)
        with pytest.raises(DomainError):
            basis_function(0, 1, math.pi, 0.5, convention="angular")


class TestBasisFunctionSpec:
    def test_sine_case_matches_basis_function(self):
        params = basis_params_from_couplings(0.0, 0.0)
        fn = BasisFunctionSpec(n=2, params=params, k=1, L=math.pi, normalization=math.sqrt(2 / math.pi))
        assert fn.is_sine
        xs = np.linspace(0.0, math.pi, 11)
        assert fn.evaluate(xs) == pytest.approx(basis_function(2, 1, math.pi, xs))
        assert fn.evaluate(0.0) == 0.0 and fn.evaluate(math.pi) == 0.0

    def test_general_parameters_have_no_x_space_form(self):
        params = basis_params_from_couplings(0.75, 0.0)
        fn = BasisFunctionSpec(n=0, params=params, k=2, L=1.0, normalization=1.0)
        assert not fn.is_sine
        with pytest.raises(DomainError):
            fn.evaluate(0.5)

    def test_field_validation(self):
        params = basis_params_from_couplings(0.0, 0.0)
        with pytest.raises(DomainError):
            BasisFunctionSpec(n=-1, params=params, k=1, L=1.0, normalization=1.0)
        with pytest.raises(DomainError):
            BasisFunctionSpec(n=0, params=params, k=1, L=1.0, normalization=0.0)
