"""Exact iteration: invariant preservation, periods, height growth."""

import random
from fractions import Fraction

import pytest

from fermatgroups import circle, stroboscope
from fermatgroups.errors import InvalidArgumentError
from fermatgroups.rationals import INF, height


class TestIterate:
    def test_heights_for_half(self):
        trajectory = stroboscope.iterate(Fraction(1, 2), (1, 0), 3)
        assert trajectory.heights == [5, 25, 125]
        assert trajectory.points[2] == (Fraction(-117, 125), Fraction(44, 125))
        assert trajectory.period is None

    def test_quarter_turn_period(self):
        trajectory = stroboscope.iterate(Fraction(1), (1, 0), 4)
        assert trajectory.points[-1] == (Fraction(1), Fraction(0))
        assert trajectory.period == 4
        assert trajectory.heights == [1, 1, 1, 1]

    def test_half_turn_period(self):
        trajectory = stroboscope.iterate(INF, (Fraction(3, 5), Fraction(4, 5)), 2)
        assert trajectory.period == 2
        assert trajectory.points[0] == (Fraction(-3, 5), Fraction(-4, 5))

    def test_invariant_preserved_bit_exactly(self):
        trajectory = stroboscope.iterate(Fraction(1, 2), (Fraction(3, 5), Fraction(4, 5)), 200)
        for x, y in trajectory.points:
            assert x * x + y * y == 1

    def test_zero_steps(self):
        trajectory = stroboscope.iterate(Fraction(1, 2), (1, 0), 0)
        assert trajectory.points == [] and trajectory.period is None

    def test_rejects_off_curve_start(self):
        with pytest.raises(InvalidArgumentError):
            stroboscope.iterate(Fraction(1, 2), (1, 1), 3)

    def test_rejects_negative_steps(self):
        with pytest.raises(InvalidArgumentError):
            stroboscope.iterate(Fraction(1, 2), (1, 0), -1)

    def test_matches_matrix_power(self):
        # independent route: a single exact matrix power per step count
        delta = Fraction(2, 7)
        start = (Fraction(-3, 5), Fraction(4, 5))
        trajectory = stroboscope.iterate(delta, start, 12)
        matrix = circle.rotation_matrix(delta)
        for step, point in enumerate(trajectory.points, start=1):
            assert (matrix**step).apply(*start) == point


class TestPowerParameter:
    def test_doubling(self):
        assert stroboscope.power_parameter(Fraction(1, 2), 2) == Fraction(4, 3)

    def test_zeroth_power_is_identity(self):
        assert stroboscope.power_parameter(Fraction(5, 7), 0) == 0

    def test_quarter_turn_cycle(self):
        values = [stroboscope.power_parameter(Fraction(1), m) for m in range(5)]
        assert values[0] == 0
        assert values[1] == 1
        assert values[2] is INF
        assert values[3] == -1
        assert values[4] == 0

    def test_matches_matrix_power(self):
        rng = random.Random(64)
        deltas = [INF, Fraction(0), Fraction(1)]
        deltas += [Fraction(rng.randint(-9, 9), rng.randint(1, 9)) for _ in range(5)]
        for delta in deltas:
            matrix = circle.rotation_matrix(delta)
            for m in range(65):
                parameter = stroboscope.power_parameter(delta, m)
                assert circle.rotation_matrix(parameter) == matrix**m

    def test_rejects_negative_power(self):
        with pytest.raises(InvalidArgumentError):
            stroboscope.power_parameter(Fraction(1, 2), -1)


class TestPeriodCheck:
    def test_known_periods(self):
        assert stroboscope.period_check(Fraction(0), 10) == 1
        assert stroboscope.period_check(Fraction(1), 10) == 4
        assert stroboscope.period_check(Fraction(-1), 10) == 4
        assert stroboscope.period_check(INF, 10) == 2

    def test_generic_parameter_is_aperiodic(self):
        assert stroboscope.period_check(Fraction(1, 2), 10_000) is None

    def test_matches_power_parameter(self):
        # the homogeneous-coordinate fold is the same composition law, so
        # the reported period is the first vanishing power parameter
        limit = 30
        for delta in (Fraction(1, 2), Fraction(2, 3), Fraction(1), INF, Fraction(0)):
            expected = None
            for m in range(1, limit + 1):
                if stroboscope.power_parameter(delta, m) == 0:
                    expected = m
                    break
            assert stroboscope.period_check(delta, limit) == expected

    def test_only_special_parameters_are_periodic_small_sweep(self):
        from fermatgroups.search import reduced_fractions

        periodic = []
        for delta in reduced_fractions(6) + [INF]:
            if stroboscope.period_check(delta, 500) is not None:
                periodic.append(delta)
        assert set(periodic) == {Fraction(0), Fraction(1), Fraction(-1), INF}

    def test_limit_zero_finds_nothing(self):
        assert stroboscope.period_check(Fraction(0), 0) is None


class TestHeightProfile:
    def test_geometric_growth_for_half(self):
        trajectory = stroboscope.iterate(Fraction(1, 2), (1, 0), 6)
        profile = stroboscope.height_profile(trajectory)
        assert profile.heights == [5, 25, 125, 625, 3125, 15625]
        assert profile.ratios == [Fraction(5)] * 5
        import math

        assert abs(profile.log_slope - math.log(5)) < 1e-9

    def test_periodic_trajectory_has_zero_slope(self):
        trajectory = stroboscope.iterate(Fraction(1), (1, 0), 8)
        profile = stroboscope.height_profile(trajectory)
        assert profile.log_slope == 0.0

    def test_heights_strictly_increase_for_generic_parameters(self):
        from fermatgroups.search import reduced_fractions

        for delta in reduced_fractions(10):
            if delta in (0, 1, -1):
                continue
            trajectory = stroboscope.iterate(delta, (1, 0), 50)
            for earlier, later in zip(trajectory.heights, trajectory.heights[1:]):
                assert later > earlier

    def test_empty_trajectory_rejected(self):
        trajectory = stroboscope.iterate(Fraction(1, 2), (1, 0), 0)
        with pytest.raises(InvalidArgumentError):
            stroboscope.height_profile(trajectory)
