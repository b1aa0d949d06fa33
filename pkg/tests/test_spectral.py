"""Spectral routes: power iteration, dense solver, exact polynomials, brackets."""

import random
from fractions import Fraction

import numpy as np
import pytest

from spectramin import exactpoly as xp
from spectramin.graphs import (
    Graph,
    InvalidInputError,
    build_bicyclic,
    build_complete,
    build_cycle,
    double_fork_tree,
    is_connected,
    spec_B,
    spec_P,
)
from spectramin.spectral import (
    char_poly,
    compare_rho_certified,
    full_spectrum,
    interlacing_holds,
    perron_pair,
    rho_bracket,
    rho_numeric,
)


def random_connected(rng, n, p=0.4) -> Graph:
    while True:
        g = Graph(n, [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p])
        if is_connected(g):
            return g


class TestExactPoly:
    def test_sturm_counts(self):
        # (x-1)(x-2)(x-3) = x^3 - 6x^2 + 11x - 6
        p = (-6, 11, -6, 1)
        chain = xp.sturm_chain(p)
        assert xp.count_roots_in(chain, Fraction(0), Fraction(4)) == 3
        assert xp.count_roots_in(chain, Fraction(3, 2), Fraction(5, 2)) == 1
        assert xp.count_roots_in(chain, Fraction(4), Fraction(9)) == 0

    def test_sturm_with_multiplicities(self):
        # (x-1)^2 (x+2): distinct roots 1 and -2
        p = (2, -3, 0, 1)
        chain = xp.sturm_chain(p)
        assert xp.count_roots_in(chain, Fraction(-3), Fraction(3)) == 2

    def test_gcd(self):
        f = (-2, 1)  # x - 2
        g = (2, -3, 1)  # (x-1)(x-2)
        assert xp.poly_gcd(f, g) == (-2, 1)
        assert xp.degree(xp.poly_gcd((1, 1), (1, 0, 1))) == 0

    def test_deflate(self):
        q, mult = xp.deflate_root((-4, 0, 1), 2)  # x^2 - 4
        assert mult == 1 and q == (2, 1)

    def test_serialization_round_trip(self):
        p = (3, 12, 11, -4, -7, 0, 1)
        assert xp.poly_from_line(xp.poly_to_line(p)) == p


class TestCharPoly:
    def test_known(self):
        assert char_poly(build_cycle(3)).coeffs == (-2, -3, 0, 1)
        assert char_poly(Graph(2, [(0, 1)])).coeffs == (-1, 0, 1)
        assert char_poly(Graph(1)).coeffs == (0, 1)

    def test_monic_traceless(self):
        rng = random.Random(1)
        for _ in range(50):
            g = random_connected(rng, rng.randint(2, 9))
            c = char_poly(g).coeffs
            assert c[-1] == 1
            assert c[-2] == 0  # adjacency trace is zero

    def test_matches_numpy_roots(self):
        rng = random.Random(2)
        for _ in range(40):
            g = random_connected(rng, rng.randint(2, 8))
            coeffs = char_poly(g).coeffs
            roots = np.sort(np.roots(list(reversed(coeffs))).real)
            eig = np.sort(np.linalg.eigvalsh(g.adjacency_matrix()))
            assert np.allclose(roots, eig, atol=1e-6)

    def test_largest_root_matches_perron(self):
        g, _ = build_bicyclic(spec_B(3, 1, 3))
        coeffs = char_poly(g).coeffs
        top = max(np.roots(list(reversed(coeffs))).real)
        assert abs(top - perron_pair(g).rho) < 1e-9


class TestPerronPair:
    def test_cycles_are_two(self):
        for n in range(3, 51):
            res = perron_pair(build_cycle(n))
            assert abs(res.rho - 2.0) < 1e-10
            assert res.residual <= 1e-10
            assert np.all(res.perron > 0)

    def test_complete(self):
        res = perron_pair(build_complete(4))
        assert abs(res.rho - 3.0) < 1e-12
        assert np.allclose(res.perron, 0.5, atol=1e-9)

    def test_unit_norm_and_positive(self):
        rng = random.Random(3)
        for _ in range(50):
            g = random_connected(rng, rng.randint(2, 10))
            res = perron_pair(g)
            assert abs(np.linalg.norm(res.perron) - 1.0) < 1e-12
            assert np.min(res.perron) > 0

    def test_rejects_disconnected(self):
        with pytest.raises(InvalidInputError):
            perron_pair(Graph(4, [(0, 1), (2, 3)]))

    def test_bicyclic_against_bracket(self):
        g, _ = build_bicyclic(spec_B(3, 3, 3))
        res = perron_pair(g)
        br = rho_bracket(g, Fraction(1, 10**12))
        assert abs(res.rho - float(br.midpoint())) < 1e-9


class TestFullSpectrum:
    def test_known(self):
        assert np.allclose(full_spectrum(build_cycle(4)), [2, 0, 0, -2], atol=1e-9)
        assert np.allclose(full_spectrum(build_complete(4)), [3, -1, -1, -1], atol=1e-9)

    def test_double_fork_top_is_two(self):
        for n in (6, 7, 10, 20, 30):
            sp = full_spectrum(double_fork_tree(n))
            assert abs(sp[0] - 2.0) < 1e-10

    def test_cap(self):
        with pytest.raises(InvalidInputError):
            full_spectrum(build_cycle(4), dense_cap=3)

    def test_top_simple_on_families(self):
        for m, p, q in [(3, 1, 3), (5, 4, 7), (9, 9, 9)]:
            sp = full_spectrum(build_bicyclic(spec_B(m, p, q))[0])
            assert sp[0] - sp[1] > 1e-10


class TestRhoBracket:
    def test_cycle_exact_two(self):
        br = rho_bracket(build_cycle(5), Fraction(1, 10**12))
        assert br.lo < 2 <= br.hi
        assert br.width <= Fraction(1, 10**12)

    def test_complete_graph(self):
        br = rho_bracket(build_complete(4))
        assert br.lo < 3 <= br.hi

    def test_width_validation(self):
        with pytest.raises(Exception):
            rho_bracket(build_cycle(4), Fraction(0))

    def test_midpoint_matches_numeric(self):
        rng = random.Random(4)
        for _ in range(30):
            g = random_connected(rng, rng.randint(2, 9))
            br = rho_bracket(g, Fraction(1, 10**10))
            assert abs(float(br.midpoint()) - rho_numeric(g)) < 1e-9

    def test_disjoint_brackets_certify_order(self):
        a = build_bicyclic(spec_B(3, 3, 3))[0]
        b = build_bicyclic(spec_B(3, 1, 5))[0]
        ba = rho_bracket(a, Fraction(1, 10**9))
        bb = rho_bracket(b, Fraction(1, 10**9))
        assert ba.hi <= bb.lo
        assert compare_rho_certified(a, b) == "less"

    def test_bisection_oracle(self):
        # independent oracle: plain float bisection on the characteristic
        # polynomial from its numpy evaluation
        g, _ = build_bicyclic(spec_B(3, 3, 3))
        coeffs = list(reversed(char_poly(g).coeffs))
        lo, hi = 2.0, 4.0
        for _ in range(80):
            mid = (lo + hi) / 2
            if np.polyval(coeffs, mid) < 0:
                lo = mid
            else:
                hi = mid
        br = rho_bracket(g, Fraction(1, 10**12))
        assert abs(float(br.midpoint()) - (lo + hi) / 2) < 1e-9


class TestCompareCertified:
    def test_equal_family_pairs(self):
        for m, p in [(3, 1), (4, 2), (5, 4)]:
            a = build_bicyclic(spec_P(m, p, m))[0]
            b = build_bicyclic(spec_B(m, p, m))[0]
            assert compare_rho_certified(a, b) == "equal"

    def test_equal_cycles(self):
        assert compare_rho_certified(build_cycle(5), build_cycle(8)) == "equal"

    def test_strict_pair(self):
        b434 = build_bicyclic(spec_B(4, 3, 4))[0]
        b443 = build_bicyclic(spec_B(4, 4, 3))[0]
        assert compare_rho_certified(b434, b443) == "less"
        assert compare_rho_certified(b443, b434) == "greater"

    def test_irrational_equality_via_gcd(self):
        a = build_bicyclic(spec_B(3, 3, 3))[0]
        b = build_bicyclic(spec_B(3, 2, 5))[0]  # also rho = (1 + sqrt 13)/2
        assert compare_rho_certified(a, b) == "equal"

    def test_consistent_with_numeric(self):
        rng = random.Random(6)
        for _ in range(25):
            g1 = random_connected(rng, rng.randint(3, 8))
            g2 = random_connected(rng, rng.randint(3, 8))
            verdict = compare_rho_certified(g1, g2)
            r1, r2 = rho_numeric(g1), rho_numeric(g2)
            if verdict == "less":
                assert r1 < r2 + 1e-9
            elif verdict == "greater":
                assert r2 < r1 + 1e-9
            elif verdict == "equal":
                assert abs(r1 - r2) < 1e-9


class TestInterlacing:
    def test_simple_cases(self):
        assert interlacing_holds(build_complete(4), [0, 1, 2])
        g = build_cycle(6)
        assert interlacing_holds(g, list(range(6)))

    def test_random_sweep(self):
        rng = random.Random(8)
        done = 0
        while done < 200:
            n = rng.randint(3, 12)
            g = random_connected(rng, n, 0.4)
            k = rng.randint(1, n)
            subset = rng.sample(range(n), k)
            assert interlacing_holds(g, subset)
            done += 1


class TestNonTreeFloor:
    def test_all_non_trees_up_to_7(self):
        from spectramin.enumeration import enumerate_connected

        for n in range(3, 8):
            for g in enumerate_connected(n):
                if g.edge_count < n:
                    continue
                r = rho_numeric(g)
                assert r >= 2.0 - 1e-10
                if abs(r - 2.0) < 1e-10:
                    assert sorted(g.degrees()) == [2] * n  # only the cycle
