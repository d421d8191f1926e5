import math

import numpy as np
import pytest

from shoreline.numerics import (Bracket, NumericalError, RandomStream, find_root,
                                integrate, lambert_w0, minimize_scalar, next_uniform,
                                solve_system2, uniform_block)

TWO_PI = 2.0 * math.pi


class TestBracket:
    def test_valid(self):
        b = Bracket(0.0, 1.0)
        assert b.width == 1.0

    def test_degenerate(self):
        with pytest.raises(ValueError):
            Bracket(1.0, 1.0)
        with pytest.raises(ValueError):
            Bracket(2.0, 1.0)

    def test_non_finite(self):
        with pytest.raises(ValueError):
            Bracket(0.0, math.inf)


class TestFindRoot:
    def test_linear(self):
        r = find_root(lambda x: x - 1.0, Bracket(0.0, 2.0), 1e-12)
        assert r.converged
        assert r.root_or_argmin == pytest.approx(1.0, abs=1e-12)

    def test_sqrt2(self):
        r = find_root(lambda x: x * x - 2.0, Bracket(1.0, 2.0), 1e-12)
        assert r.root_or_argmin == pytest.approx(math.sqrt(2.0), abs=1e-10)
        assert abs(r.residual_or_value) <= 1e-12

    def test_against_dense_scan(self):
        # independent oracle: locate the sign change of f on a 1e6-point grid
        f = lambda th: math.exp(0.5 * th) * math.cos(th) - 1.0
        grid = np.linspace(0.1, 1.5, 1_000_001)
        vals = np.exp(0.5 * grid) * np.cos(grid) - 1.0
        (flips,) = np.nonzero(np.sign(vals[:-1]) != np.sign(vals[1:]))
        assert flips.size == 1
        lo, hi = grid[flips[0]], grid[flips[0] + 1]
        r = find_root(f, Bracket(0.1, 1.5), 1e-12)
        assert lo <= r.root_or_argmin <= hi
        # theta = 0 is itself a root, so the wider bracket returns it at once
        assert find_root(f, Bracket(0.0, 1.5), 1e-12).root_or_argmin == 0.0

    def test_invalid_bracket(self):
        with pytest.raises(ValueError, match="invalid bracket"):
            find_root(lambda x: x * x + 1.0, Bracket(-1.0, 1.0), 1e-12)

    def test_non_finite_evaluation(self):
        def f(x):
            return math.nan if 0.4 < x < 0.6 else x - 0.5

        with pytest.raises(NumericalError, match="non-finite"):
            find_root(f, Bracket(0.0, 1.0), 1e-12)

    def test_root_stays_in_bracket(self):
        rng = RandomStream(42)
        for _ in range(50):
            a = next_uniform(rng, -3.0, 0.0)
            b = next_uniform(rng, 0.5, 4.0)
            c = next_uniform(rng, a + 0.1, b - 0.1) if b - 0.2 > a + 0.1 else 0.25
            r = find_root(lambda x: math.tanh(x - c), Bracket(a, b), 1e-13)
            assert a <= r.root_or_argmin <= b
            assert r.root_or_argmin == pytest.approx(c, abs=1e-10)


class TestMinimizeScalar:
    def test_parabola(self):
        r = minimize_scalar(lambda x: (x - 3.0) ** 2, Bracket(0.0, 10.0), 1e-10)
        assert r.root_or_argmin == pytest.approx(3.0, abs=1e-9)

    def test_am_gm(self):
        r = minimize_scalar(lambda x: x + 1.0 / x, Bracket(0.1, 10.0), 1e-10)
        assert r.root_or_argmin == pytest.approx(1.0, abs=1e-9)
        assert r.residual_or_value == pytest.approx(2.0, abs=1e-12)

    def test_mixed_ratio_curve(self):
        r = minimize_scalar(lambda g: 1.0 + (g + 1.0) / math.log(g), Bracket(2.0, 6.0),
                            1e-10)
        assert r.root_or_argmin == pytest.approx(3.591121476669, abs=1e-8)

    def test_local_optimality(self):
        tol = 1e-10
        for f, lo, hi in [(lambda x: (x - 3.0) ** 2, 0.0, 10.0),
                          (lambda x: x + 1.0 / x, 0.1, 10.0),
                          (lambda x: math.cosh(x - 0.7), -2.0, 4.0)]:
            r = minimize_scalar(f, Bracket(lo, hi), tol)
            x = r.root_or_argmin
            assert f(x) <= f(x + 10.0 * tol) + 1e-15
            assert f(x) <= f(x - 10.0 * tol) + 1e-15


class TestSolveSystem2:
    def test_linear(self):
        assert solve_system2(lambda x, y: (x - 1.0, y - 2.0), (0.0, 0.0), 1e-12) == \
            pytest.approx((1.0, 2.0), abs=1e-12)

    def test_circle_line(self):
        x, y = solve_system2(lambda x, y: (x * x + y * y - 1.0, x - y), (1.0, 0.0), 1e-13)
        assert (x, y) == pytest.approx((1 / math.sqrt(2), 1 / math.sqrt(2)), abs=1e-12)

    def test_contact_angle_system(self):
        # the transcendental system behind the min-max spiral, solved raw
        def F(a, b):
            return (1.0 / math.tan(a) + 1.0 / math.tan(b)
                    - (TWO_PI - a - b) / math.cos(a) ** 2,
                    math.cos(a) / math.cos(b)
                    - math.exp((TWO_PI - a - b) * math.tan(a)))

        a, b = solve_system2(F, (0.2, 1.2), 1e-13)
        assert math.tan(a) == pytest.approx(0.2124695594, abs=1e-9)
        assert 0.0 < b < 0.5 * math.pi

    def test_singular_jacobian(self):
        with pytest.raises(NumericalError, match="singular"):
            solve_system2(lambda x, y: (x + y, x + y), (1.0, 1.0), 1e-12)


class TestIntegrate:
    def test_identity(self):
        assert integrate(lambda x: x, 0.0, 1.0, 1e-12) == pytest.approx(0.5, abs=1e-11)

    def test_sin(self):
        assert integrate(math.sin, 0.0, math.pi, 1e-12) == pytest.approx(2.0, abs=1e-11)

    def test_coil_ratio_piece(self):
        # delta(x)/x for gamma = 2 on its first whole bracket above 1
        got = integrate(lambda x: 1.0 + 8.0 / x, 1.0, 2.0, 1e-11)
        assert got == pytest.approx(1.0 + 8.0 * math.log(2.0), abs=1e-10)

    def test_endpoint_singularity(self):
        got = integrate(lambda x: 1.0 / math.sqrt(x), 0.0, 1.0, 1e-9)
        assert got == pytest.approx(2.0, abs=2e-9)

    def test_additive(self):
        f = lambda x: math.exp(-x) * math.sin(3.0 * x)
        tol = 1e-10
        parts = integrate(f, 0.0, 0.7, tol) + integrate(f, 0.7, 2.0, tol)
        whole = integrate(f, 0.0, 2.0, tol)
        assert abs(parts - whole) <= 3.0 * tol

    def test_non_finite(self):
        with pytest.raises(NumericalError, match="non-finite"):
            integrate(lambda x: 1.0 / (x - 0.5), 0.0, 1.0, 1e-9)

    def test_reversed_and_empty(self):
        assert integrate(lambda x: x, 1.0, 1.0, 1e-12) == 0.0
        assert integrate(lambda x: x, 1.0, 0.0, 1e-12) == pytest.approx(-0.5, abs=1e-11)


class TestLambertW:
    def test_fixed_points(self):
        assert lambert_w0(0.0) == 0.0
        assert lambert_w0(math.e) == pytest.approx(1.0, abs=1e-14)

    def test_reciprocal_at_inv_e(self):
        w = lambert_w0(1.0 / math.e)
        assert 1.0 / w == pytest.approx(3.591121476669, abs=1e-10)

    @pytest.mark.parametrize("x", [-0.3, 0.0, 0.5, 1.0, 10.0, 100.0])
    def test_defining_identity(self, x):
        w = lambert_w0(x)
        assert abs(w * math.exp(w) - x) <= 1e-12 * max(1.0, abs(x))

    def test_branch_point(self):
        assert lambert_w0(-1.0 / math.e) == pytest.approx(-1.0, abs=1e-7)

    def test_domain_error(self):
        with pytest.raises(ValueError):
            lambert_w0(-0.4)


class TestRandomStream:
    def test_range_contract(self):
        stream = RandomStream(1)
        u = next_uniform(stream, 0.0, 1.0)
        assert 0.0 <= u < 1.0
        assert stream.position == 1

    def test_determinism(self):
        a = [next_uniform(RandomStream(9, i)) for i in range(100)]
        s = RandomStream(9)
        b = [next_uniform(s) for _ in range(100)]
        assert a == b

    def test_block_matches_scalar(self):
        blk = uniform_block(31337, 5, 200)
        s = RandomStream(31337, 5)
        assert [next_uniform(s) for _ in range(200)] == list(blk)

    def test_clt_mean(self):
        us = uniform_block(1, 0, 1_000_000)
        assert abs(us.mean() - 0.5) < 0.002  # 3 sigma = 3/(sqrt(12)*1e3)

    def test_interval_mapping(self):
        s = RandomStream(4)
        vals = [next_uniform(s, -2.0, 5.0) for _ in range(1000)]
        assert all(-2.0 <= v < 5.0 for v in vals)

    def test_bad_interval(self):
        with pytest.raises(ValueError):
            next_uniform(RandomStream(1), 1.0, 1.0)
