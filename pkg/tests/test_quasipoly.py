import math
from fractions import Fraction

import pytest

from plengths import (
    SampleWindow,
    WindowTooShortError,
    qp_detect,
    qp_fit,
    step_difference,
    verify_qp_attributes,
)
from plengths.quasipoly import differences_vanish, sample_extremal

INF = math.inf


class TestStepDifference:
    def test_squares_step_one(self):
        w = SampleWindow(0, (0, 1, 4, 9, 16))
        assert step_difference(w, 1).values == (1, 3, 5, 7)

    def test_squares_step_two(self):
        w = SampleWindow(0, (0, 1, 4, 9, 16))
        d = step_difference(w, 2)
        assert d.values == (4, 8, 12)
        assert d.start == 0

    def test_too_short(self):
        with pytest.raises(WindowTooShortError):
            step_difference(SampleWindow(0, (1, 2, 3)), 5)


class TestQpFit:
    def test_plain_square(self):
        w = SampleWindow(0, tuple(n * n for n in range(10)))
        rep = qp_fit(w, 2, 1)
        assert rep.fitted
        qp = rep.quasipoly
        assert qp.degree == 2 and qp.period == 1
        assert qp.constant_leading() == 1

    def test_min_square_length(self, semigroups):
        w = sample_extremal(semigroups[(2, 3)], 2, "min", 200, 260)
        rep = qp_fit(w, 2, 13)
        assert rep.fitted
        assert rep.quasipoly.constant_leading() == Fraction(1, 13)

    def test_min_ordinary_length(self, semigroups):
        w = sample_extremal(semigroups[(2, 3)], 1, "min", 10, 40)
        rep = qp_fit(w, 1, 3)
        assert rep.fitted
        assert rep.quasipoly.constant_leading() == Fraction(1, 3)

    def test_rejects_short_window(self):
        with pytest.raises(WindowTooShortError):
            qp_fit(SampleWindow(0, (1, 2, 3, 4)), 2, 2)

    def test_negative_when_not_polynomial(self):
        w = SampleWindow(0, tuple(2**n for n in range(12)))
        rep = qp_fit(w, 2, 1)
        assert not rep.fitted

    def test_trims_inflated_degree(self):
        w = SampleWindow(0, tuple(3 * n + 1 for n in range(12)))
        rep = qp_fit(w, 2, 1)
        assert rep.fitted and rep.quasipoly.degree == 1

    def test_reproduces_every_sample(self, semigroups):
        w = sample_extremal(semigroups[(3, 5, 7)], INF, "min", 230, 320)
        rep = qp_fit(w, 1, 15)
        assert rep.fitted
        for i, v in enumerate(w.values):
            assert rep.quasipoly.evaluate(w.start + i) == v


class TestQpDetect:
    def test_constant_sequence(self):
        rep = qp_detect(SampleWindow(5, (7,) * 30), 2, 5)
        assert rep.fitted
        assert rep.quasipoly.degree == 0 and rep.quasipoly.period == 1

    def test_min_max_coordinate(self, semigroups):
        w = sample_extremal(semigroups[(2, 3)], INF, "min", 30, 100)
        rep = qp_detect(w, 2, 10)
        assert rep.fitted
        assert rep.quasipoly.degree == 1 and rep.quasipoly.period == 5

    def test_min_cubes_not_quasipolynomial_small_grid(self, semigroups):
        w = sample_extremal(semigroups[(2, 3)], 3, "min", 100, 460)
        rep = qp_detect(w, 2, 20)
        assert not rep.fitted
        assert rep.searched_degree == 2 and rep.searched_period == 20

    def test_detect_needs_room_for_whole_grid(self):
        with pytest.raises(WindowTooShortError):
            qp_detect(SampleWindow(0, (1,) * 20), 2, 10)

    def test_minimal_period_divides_other_fits(self):
        coeffs = [(1, 2), (5, 2), (0, 2), (3, 2)]  # degree 1, period 4
        vals = tuple(coeffs[n % 4][0] + coeffs[n % 4][1] * n for n in range(60))
        w = SampleWindow(0, vals)
        rep = qp_detect(w, 2, 12)
        assert rep.fitted and rep.quasipoly.period == 4
        for period in range(1, 13):
            fits = differences_vanish(w, 2, period)
            assert fits == (period % 4 == 0)

    def test_json_round(self, semigroups):
        w = sample_extremal(semigroups[(2, 3)], 2, "min", 200, 260)
        out = qp_fit(w, 2, 13).to_json()
        assert out["outcome"] == "fitted"
        assert out["degree"] == 2 and out["period"] == 13
        assert out["leading_coefficients"] == ["1/13"] * 13

    def test_difference_identity(self, semigroups):
        """d-fold period-step differencing of a fit with constant leading
        coefficient c leaves the constant c * d! * period^d."""
        w = sample_extremal(semigroups[(2, 3)], 2, "min", 200, 280)
        rep = qp_fit(w, 2, 13)
        c = rep.quasipoly.constant_leading()
        expect = c * 2 * 13**2
        d = step_difference(step_difference(w, 13), 13)
        assert all(v == expect for v in d.values)


class TestAttributeTable:
    def test_all_rows_smallest_semigroup(self, semigroups):
        reports = verify_qp_attributes(semigroups[(2, 3)])
        assert all(r.passed for r in reports)
        by_name = {r.row.name: r for r in reports}
        assert by_name["l2_min"].row.period == 13
        assert by_name["l2_min"].fitted_leading == (Fraction(1, 13),) * 13
        assert by_name["l0_max"].fitted_leading == (Fraction(2),)

    def test_explicit_window(self, semigroups):
        S = semigroups[(2, 3)]
        reports = verify_qp_attributes(S, (200, 600))
        assert all(r.passed for r in reports)

    def test_window_must_clear_threshold(self, semigroups):
        with pytest.raises(ValueError):
            verify_qp_attributes(semigroups[(2, 3)], (10, 600))
