import math

import numpy as np
import pytest

from shoreline.coil import (Coil, CoilHit, MixedStrategy, average_ratio, bracket_index,
                            bracket_integral_neg, bracket_integral_pos,
                            mixed_expected_ratio, optimal_minmax_coil,
                            optimal_minmean_coil, optimal_mixed, path_length_to,
                            position, ratio_extrema, travel_distance, worst_case_ratio)
from shoreline.numerics import RandomStream, integrate, lambert_w0, next_uniform


class TestPosition:
    def test_start(self):
        assert position(Coil(2.0), 0.0) == 1.0

    def test_turning_points(self):
        c = Coil(2.0)
        assert position(c, 2.0) == 4.0
        assert position(c, 1.0) == -2.0
        assert position(c, 3.0) == -8.0

    def test_mid_segment(self):
        assert position(Coil(2.0), 0.5) == pytest.approx(-0.5)

    def test_continuity_at_integers(self):
        rng = RandomStream(2)
        for _ in range(40):
            g = next_uniform(rng, 1.1, 8.0)
            c = Coil(g)
            k = int(next_uniform(rng, -5.0, 6.0))
            eps = 1e-9
            left = position(c, k - eps)
            right = position(c, k + eps)
            scale = max(1.0, abs(position(c, float(k))))
            assert abs(left - right) <= 1e-7 * scale


class TestPathLength:
    def test_geometric_series_at_zero(self):
        # all sweeps below t = 0 sum to (gamma+1)/(gamma-1)
        assert path_length_to(Coil(2.0), 0.0) == pytest.approx(3.0)

    def test_vanishes_far_back(self):
        assert path_length_to(Coil(2.0), -200.0) == pytest.approx(0.0, abs=1e-55)

    def test_single_segment_increment(self):
        c = Coil(2.0)
        assert path_length_to(c, 2.0) - path_length_to(c, 1.0) == pytest.approx(6.0)

    def test_strictly_increasing(self):
        c = Coil(1.7)
        ts = np.linspace(-3.0, 4.0, 200)
        vals = [path_length_to(c, float(t)) for t in ts]
        assert all(b > a for a, b in zip(vals, vals[1:]))


class TestBracketIndex:
    def test_boundary_power(self):
        assert bracket_index(Coil(2.0), 1.0) == -1  # 1/4 < 1 <= 1

    def test_interior_positive(self):
        assert bracket_index(Coil(2.0), 3.0) == 0  # 1 < 3 <= 4

    def test_negative_unit(self):
        assert bracket_index(Coil(2.0), -1.0) == 0  # 1/2 < 1 <= 2

    def test_zero_target(self):
        with pytest.raises(ValueError, match="origin"):
            bracket_index(Coil(2.0), 0.0)

    def test_inequalities_always_hold(self):
        rng = RandomStream(8)
        for _ in range(500):
            g = next_uniform(rng, 1.05, 9.0)
            exp = next_uniform(rng, -6.0, 6.0)
            x = g ** exp if next_uniform(rng) < 0.5 else -(g ** exp)
            i = bracket_index(Coil(g), x)
            if x > 0:
                assert g ** (2 * i) < x <= g ** (2 * i + 2)
            else:
                assert g ** (2 * i - 1) < -x <= g ** (2 * i + 1)

    def test_exact_powers(self):
        g = 2.0
        c = Coil(g)
        for k in range(-4, 5):
            i = bracket_index(c, g ** (2 * k))
            assert i == k - 1  # X = gamma^(2i+2) boundary belongs to bracket i
            j = bracket_index(c, -(g ** (2 * k + 1)))
            assert j == k  # -X = gamma^(2j+1) boundary belongs to bracket j


class TestTravelDistance:
    def test_unit_targets(self):
        c = Coil(2.0)
        assert travel_distance(c, 1.0).delta == 3.0
        assert travel_distance(c, -1.0).delta == 5.0

    def test_interior_target(self):
        assert travel_distance(Coil(2.0), 3.0).delta == 11.0

    def test_hit_fields(self):
        hit = travel_distance(Coil(2.0), 3.0)
        assert hit.target == 3.0
        assert hit.index == 0
        assert hit.delta >= abs(hit.target)

    def test_self_similarity(self):
        rng = RandomStream(21)
        for _ in range(200):
            g = next_uniform(rng, 1.1, 8.0)
            mag = g ** next_uniform(rng, -6.0, 4.0)
            x = mag if next_uniform(rng) < 0.5 else -mag
            c = Coil(g)
            d1 = travel_distance(c, x).delta
            d2 = travel_distance(c, g * g * x).delta
            assert d2 == pytest.approx(g * g * d1, rel=1e-9)


class TestWorstCaseRatio:
    def test_optimum_value(self):
        assert worst_case_ratio(Coil(2.0)) == 9.0

    def test_gamma_three(self):
        assert worst_case_ratio(Coil(3.0)) == 10.0

    def test_scan_approaches_from_below(self):
        g = 2.4
        c = Coil(g)
        xs = np.concatenate([g ** np.linspace(-3.0, 3.0, 50_000),
                             g ** (2.0 * np.arange(-1, 2)) * (1 + 1e-9)])
        ratios = [travel_distance(c, float(x)).delta / x for x in xs]
        top = max(ratios)
        assert top <= worst_case_ratio(c)
        assert top >= worst_case_ratio(c) * (1.0 - 1e-3)

    def test_nine_is_global_floor(self):
        for g in np.linspace(1.2, 6.0, 60):
            assert worst_case_ratio(Coil(float(g))) >= 9.0 - 1e-12

    def test_optimal_coil(self):
        gamma, ratio = optimal_minmax_coil()
        assert gamma == pytest.approx(2.0, abs=1e-9)
        assert ratio == pytest.approx(9.0, abs=1e-9)
        assert worst_case_ratio(Coil(1.9)) > 9.0
        assert worst_case_ratio(Coil(2.1)) > 9.0


class TestBracketIntegrals:
    def test_positive_piece_against_quadrature(self):
        rng = RandomStream(31)
        for _ in range(10):
            g = next_uniform(rng, 1.2, 5.0)
            i = int(next_uniform(rng, -2.0, 3.0))
            x = g ** (2 * i) * (1.0 + next_uniform(rng) * (g * g - 1.0))
            c = 2.0 * g ** (2 * i + 2) / (g - 1.0)
            got = bracket_integral_pos(i, g, x)
            want = integrate(lambda s: 1.0 + c / s, g ** (2 * i), x, 1e-10)
            assert got == pytest.approx(want, abs=1e-9 * max(1.0, abs(want)))

    def test_negative_piece_against_quadrature(self):
        g, j = 2.0, 1
        x = -6.0  # gamma^(2j-1) = 2 < 6 <= 8 = gamma^(2j+1)
        c = 2.0 * g ** (2 * j + 1) / (g - 1.0)
        got = bracket_integral_neg(j, g, x)
        want = integrate(lambda s: -1.0 + c / s, x, -(g ** (2 * j - 1)), 1e-10)
        assert got == pytest.approx(want, abs=1e-9)

    def test_empty_intervals(self):
        assert bracket_integral_pos(2, 1.9, 1.9 ** 4) == 0.0
        assert bracket_integral_neg(1, 1.9, -(1.9 ** 1)) == 0.0


class TestAverageRatio:
    def test_quadrature_oracle(self):
        # integrate delta(s)/|s| over [-x0, x0] directly, splitting at the
        # jump points of delta; the integrand is bounded, so the skipped
        # (-1e-8, 1e-8) sliver contributes less than 9 * 2e-8
        g, x0 = 2.0, 1.7
        c = Coil(g)

        def ratio(s):
            return travel_distance(c, float(s)).delta / abs(s)

        def jump_powers(parity):
            # powers gamma^(2k + parity) inside [1e-8, x0)
            out = []
            k = -30
            while g ** (2 * k + parity) < x0:
                p = g ** (2 * k + parity)
                if p >= 1e-8:
                    out.append(p)
                k += 1
            return out

        total = 0.0
        splits = [1e-8] + jump_powers(0) + [x0]
        for a, b in zip(splits, splits[1:]):
            total += integrate(ratio, a, b, 1e-10)
        splits = [-x0] + [-p for p in reversed(jump_powers(1))] + [-1e-8]
        for a, b in zip(splits, splits[1:]):
            total += integrate(ratio, a, b, 1e-10)
        approx = total / (2.0 * x0)
        assert average_ratio(c, x0) == pytest.approx(approx, abs=1e-6)

    def test_log_periodicity(self):
        rng = RandomStream(41)
        for _ in range(50):
            g = next_uniform(rng, 1.2, 6.0)
            x = g ** next_uniform(rng, -3.0, 3.0)
            c = Coil(g)
            assert average_ratio(c, g * g * x) == pytest.approx(
                average_ratio(c, x), rel=1e-9)

    def test_bounded_by_extrema(self):
        rng = RandomStream(43)
        for g in (1.5, 2.0, 3.0, 5.0, 8.0):
            c = Coil(g)
            ext = ratio_extrema(c)
            assert ext.min_value < ext.max_value
            for _ in range(200):
                x = g ** next_uniform(rng, -4.0, 4.0)
                val = average_ratio(c, x)
                assert ext.min_value - 1e-9 <= val <= ext.max_value + 1e-9

    def test_requires_positive(self):
        with pytest.raises(ValueError):
            average_ratio(Coil(2.0), -1.0)


class TestRatioExtrema:
    def test_gamma_two_closed_forms(self):
        ext = ratio_extrema(Coil(2.0))
        assert ext.min_value == pytest.approx(1.0 + 6.0 * math.log(2.0), abs=1e-14)
        assert ext.max_value == pytest.approx(1.0 + 12.0 / math.e, abs=1e-14)

    def test_scan_matches_gamma_three(self):
        g = 3.0
        c = Coil(g)
        ext = ratio_extrema(c)
        xs = np.exp(np.linspace(0.0, 2.0 * math.log(g), 10_000))
        vals = np.array([average_ratio(c, float(x)) for x in xs])
        assert float(vals.min()) == pytest.approx(ext.min_value, abs=1e-5)
        assert float(vals.max()) == pytest.approx(ext.max_value, abs=1e-5)

    def test_minimum_attained_at_even_powers(self):
        for g in (1.7, 2.0, 4.2):
            ext = ratio_extrema(Coil(g))
            assert average_ratio(Coil(g), 1.0) == pytest.approx(ext.min_value, rel=1e-12)
            assert average_ratio(Coil(g), g * g) == pytest.approx(ext.min_value, rel=1e-12)


class TestOptimalMinmeanCoil:
    def test_published_constants(self):
        opt = optimal_minmean_coil()
        assert opt.gamma_for_min == pytest.approx(5.7041372673, abs=1e-8)
        assert opt.mean_min == pytest.approx(4.0089813375, abs=1e-8)
        assert opt.gamma_for_max == pytest.approx(3.2232549401, abs=1e-8)
        assert opt.mean_max == pytest.approx(4.8131558458, abs=1e-8)

    def test_both_beat_worst_case_guarantee(self):
        opt = optimal_minmean_coil()
        assert opt.mean_min < 9.0
        assert opt.mean_max < 9.0


class TestMixedStrategy:
    def test_gamma_e(self):
        assert mixed_expected_ratio(math.e).expected_ratio == pytest.approx(
            2.0 + math.e, rel=1e-15)

    def test_gamma_two(self):
        assert mixed_expected_ratio(2.0).expected_ratio == pytest.approx(
            1.0 + 3.0 / math.log(2.0), rel=1e-15)

    def test_stationarity_identity_at_optimum(self):
        g = 3.591121476669
        # first-order condition ln(gamma) = (gamma+1)/gamma
        assert math.log(g) == pytest.approx((g + 1.0) / g, abs=1e-12)
        assert mixed_expected_ratio(g).expected_ratio == pytest.approx(1.0 + g, abs=1e-11)

    def test_optimal_mixed(self):
        strat = optimal_mixed()
        assert strat.gamma == pytest.approx(3.591121476669, abs=1e-10)
        assert strat.gamma == pytest.approx(1.0 / lambert_w0(1.0 / math.e), rel=1e-15)
        assert strat.expected_ratio == pytest.approx(1.0 + strat.gamma, abs=1e-10)

    def test_beats_deterministic_candidates(self):
        best = optimal_mixed().expected_ratio
        assert best < 4.8131558458
        for g in (2.0, 3.0, 5.0):
            assert best < mixed_expected_ratio(g).expected_ratio

    def test_domain_error(self):
        with pytest.raises(ValueError):
            mixed_expected_ratio(1.0)

    def test_type_invariant(self):
        with pytest.raises(ValueError):
            MixedStrategy(gamma=2.0, expected_ratio=4.0)


def test_coil_validation():
    with pytest.raises(ValueError):
        Coil(1.0)
    with pytest.raises(ValueError):
        CoilHit(target=1.0, index=0, delta=0.5)
