"""Boundary-value solve, closed-form vector, quotient, swap-gap certificate."""

import math
import random

import numpy as np
import pytest

from spectramin.analytic import (
    boundary_det,
    boundary_matrix,
    f_limit,
    f_value,
    hub_identity_residuals,
    log_form_t,
    path_cycle_swap_gap,
    perron_closed_form,
    quotient_matrix_symmetric,
    rho_analytic,
    swap_gap_direct,
    t_of_rho,
)
from spectramin.graphs import (
    InvalidParameterError,
    build_bicyclic,
    spec_B,
    spec_P,
)
from spectramin.spectral import perron_pair, rho_numeric


class TestInterpolant:
    def test_boundary_values(self):
        rng = random.Random(0)
        for _ in range(50):
            t = rng.uniform(0.01, 3)
            k = rng.randint(1, 30)
            a, b = rng.uniform(0.1, 4), rng.uniform(0.1, 4)
            assert abs(f_value(0, t, k, a, b) - a) < 1e-12
            assert abs(f_value(k, t, k, a, b) - b) < 1e-12

    def test_symmetry_equal_endpoints(self):
        for i in range(0, 8):
            v1 = f_value(i, 0.9, 7, 1.7, 1.7)
            v2 = f_value(7 - i, 0.9, 7, 1.7, 1.7)
            assert abs(v1 - v2) < 1e-13

    def test_hand_value(self):
        # sinh(ln 2) = 3/4 and sinh(2 ln 2) = 15/8, so f_1 = (3/4 + 3/4)/(15/8)
        assert abs(f_value(1, math.log(2), 2, 1, 1) - 0.8) < 1e-14

    def test_difference_equation(self):
        rng = random.Random(1)
        for _ in range(300):
            t = rng.uniform(0.01, 3)
            k = rng.randint(2, 40)
            a, b = rng.uniform(0.1, 5), rng.uniform(0.1, 5)
            i = rng.randint(0, k - 2)
            lhs = 2 * math.cosh(t) * f_value(i + 1, t, k, a, b)
            rhs = f_value(i, t, k, a, b) + f_value(i + 2, t, k, a, b)
            assert abs(lhs - rhs) <= 1e-11 * max(1.0, abs(lhs))

    def test_large_kt_no_overflow(self):
        # near the chain end the value is ~e^{-t}; deep inside it underflows to 0
        v = f_value(1, 2.0, 1000, 1.0, 1.0)
        assert abs(v - math.exp(-2.0)) < 1e-6
        assert 0.0 <= f_value(500, 2.0, 1000, 1.0, 1.0) < 1e-200

    def test_t_zero_limit(self):
        # as t -> 0 the interpolant degenerates to linear interpolation
        for i in range(0, 6):
            lim = f_limit(i, 5, 2.0, 3.0)
            assert abs(f_value(i, 1e-6, 5, 2.0, 3.0) - lim) < 1e-9

    def test_rejects_nonpositive_t(self):
        with pytest.raises(InvalidParameterError):
            f_value(1, 0.0, 3, 1, 1)

    def test_first_value_decreasing_in_length(self):
        # f_1(t, x, 1, 1) strictly decreases in x for each fixed t > 0
        for t in (0.05, 0.3, 1.0, 2.5):
            vals = [f_value(1, t, x, 1, 1) for x in range(1, 15)]
            assert all(v1 > v2 for v1, v2 in zip(vals, vals[1:]))


class TestTofRho:
    def test_exact_points(self):
        assert t_of_rho(2.0) == 0.0
        assert abs(t_of_rho(2.5) - math.log(2)) < 1e-14

    def test_round_trip(self):
        for rho in (2.1, 2.0000001, 3.7, 25.0):
            assert abs(2 * math.cosh(t_of_rho(rho)) - rho) < 1e-13 * max(1, rho)

    def test_log_form_agrees(self):
        for rho in (2.01, 2.5, 4.0):
            assert abs(log_form_t(rho) - t_of_rho(rho)) < 1e-13

    def test_rejects_below_two(self):
        with pytest.raises(InvalidParameterError):
            t_of_rho(1.99)


class TestBoundaryMatrix:
    def test_symmetric_kernel_direction(self):
        # m = q: the system is symmetric and (1, 1) spans the kernel at the root
        g, _ = build_bicyclic(spec_B(4, 2, 4))
        rho = perron_pair(g).rho
        mat = boundary_matrix(4, 2, 4, rho)
        v = mat @ np.array([1.0, 1.0])
        assert np.max(np.abs(v)) < 1e-8

    def test_det_zero_exactly_at_rho(self):
        g, _ = build_bicyclic(spec_B(5, 2, 3))
        rho = perron_pair(g).rho
        assert abs(boundary_det(5, 2, 3, rho)) < 1e-9
        assert abs(boundary_det(5, 2, 3, rho + 0.5)) > 1e-4

    def test_matrix_is_symmetric(self):
        mat = boundary_matrix(5, 3, 4, 2.4)
        assert mat[0, 1] == mat[1, 0]


class TestRhoAnalytic:
    @pytest.mark.parametrize("m,p,q", [(4, 2, 4), (5, 2, 3), (3, 1, 3), (9, 9, 9)])
    def test_matches_power_iteration(self, m, p, q):
        sol = rho_analytic(m, p, q)
        g, _ = build_bicyclic(spec_B(m, p, q))
        assert abs(sol.rho - perron_pair(g).rho) < 1e-9

    def test_sign_facts(self):
        assert abs(rho_analytic(4, 2, 4).a - rho_analytic(4, 2, 4).b) < 1e-10
        sol = rho_analytic(5, 2, 3)
        assert sol.a < sol.b  # bigger cycle gets the smaller hub value
        sol = rho_analytic(3, 2, 5)
        assert sol.a > sol.b

    def test_full_vector_matches_eigensolver(self):
        for m, p, q in [(3, 1, 3), (5, 3, 4)]:
            sol = rho_analytic(m, p, q)
            x = perron_closed_form(sol)
            x = x / np.linalg.norm(x)
            g, _ = build_bicyclic(spec_B(m, p, q))
            assert np.max(np.abs(x - perron_pair(g).perron)) < 1e-8

    def test_vector_satisfies_eigen_equation_everywhere(self):
        sol = rho_analytic(4, 2, 4)
        g, _ = build_bicyclic(spec_B(4, 2, 4))
        x = perron_closed_form(sol)
        ax = g.adjacency_matrix() @ x
        assert np.max(np.abs(ax - sol.rho * x)) < 1e-10

    def test_symmetric_vector_under_swap(self):
        sol = rho_analytic(4, 2, 4)
        x = perron_closed_form(sol)
        g, lab = build_bicyclic(spec_B(4, 2, 4))
        walk_a = (lab.hub_a,) + lab.seg_m
        walk_b = (lab.hub_b,) + lab.seg_q
        for u, v in zip(walk_a, walk_b):
            assert abs(x[u] - x[v]) < 1e-10

    def test_normalization(self):
        sol = rho_analytic(7, 3, 4)
        assert min(sol.a, sol.b) == 1.0

    def test_residuals_small(self):
        sol = rho_analytic(6, 5, 8)
        assert max(sol.residual_a, sol.residual_b) <= 1e-10

    def test_rearranged_identities(self):
        for m, p, q in [(3, 1, 3), (5, 2, 3), (4, 7, 9), (8, 3, 6)]:
            r1, r2 = hub_identity_residuals(rho_analytic(m, p, q))
            assert max(r1, r2) < 1e-10


class TestQuotient:
    @pytest.mark.parametrize("m,p", [(3, 1), (4, 3), (6, 2), (8, 8)])
    def test_top_eigenvalue_matches(self, m, p):
        qm = quotient_matrix_symmetric(m, p)
        gb, _ = build_bicyclic(spec_B(m, p, m))
        gp, _ = build_bicyclic(spec_P(m, p, m))
        assert abs(qm.top_eigenvalue() - perron_pair(gb).rho) < 1e-9
        assert abs(qm.top_eigenvalue() - perron_pair(gp).rho) < 1e-9

    def test_classes_partition(self):
        qm = quotient_matrix_symmetric(5, 4)
        n = 5 + 4 + 5 - 1
        seen = sorted(v for cls in qm.classes for v in cls)
        assert seen == list(range(n))

    def test_integer_counts(self):
        qm = quotient_matrix_symmetric(4, 2)
        assert np.array_equal(qm.matrix, np.round(qm.matrix))
        assert np.all(qm.matrix >= 0)

    def test_equality_over_grid(self):
        from spectramin.spectral import compare_rho_certified

        for m in range(3, 9):
            for p in range(1, 9):
                gb, _ = build_bicyclic(spec_B(m, p, m))
                gp, _ = build_bicyclic(spec_P(m, p, m))
                assert compare_rho_certified(gb, gp) == "equal", (m, p)


class TestSwapGap:
    @pytest.mark.parametrize("m,p", [(3, 5), (5, 3), (4, 7), (9, 3)])
    def test_positive_and_matches_direct(self, m, p):
        gap = path_cycle_swap_gap(m, p)
        assert gap > 0
        assert abs(gap - swap_gap_direct(m, p)) < 1e-9

    def test_certifies_ordering(self):
        for m, p in [(3, 5), (7, 4)]:
            a = rho_numeric(build_bicyclic(spec_B(m, p, m))[0])
            b = rho_numeric(build_bicyclic(spec_B(m, m, p))[0])
            assert a < b

    def test_rejects_equal_parameters(self):
        with pytest.raises(InvalidParameterError):
            path_cycle_swap_gap(4, 4)
