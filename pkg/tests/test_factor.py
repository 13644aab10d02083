import math

import pytest

from plengths import (
    BudgetExceededError,
    NotInSemigroupError,
    ThresholdNotMetError,
    closed_len_recurrence,
    closed_max_inf,
    closed_min_inf,
    extremal_plength,
    extremal_values,
    factorizations,
    min2_integer_minimizer,
    min2_shift_check,
    plength,
)
from plengths.factor import is_factorization

INF = math.inf


class TestPlength:
    def test_square_sum(self):
        assert plength((3, 2), 2) == 13

    def test_max_coordinate(self):
        assert plength((3, 2), INF) == 3
        assert plength((), INF) == 0

    def test_support_count(self):
        assert plength((3, 0), 0) == 1
        assert plength((0, 0, 0), 0) == 0
        assert plength((1, 2, 3), 0) == 3

    def test_rejects_bad_exponent(self):
        with pytest.raises(ValueError):
            plength((1, 2), -1)
        with pytest.raises(ValueError):
            plength((1, 2), 1.5)


class TestFactorizations:
    def test_two_ways_to_six(self, semigroups):
        assert set(factorizations(semigroups[(2, 3)], 6)) == {(3, 0), (0, 2)}

    def test_identity_has_empty_factorization(self, semigroups):
        assert factorizations(semigroups[(2, 3)], 0) == [(0, 0)]

    def test_gap_has_none(self, semigroups):
        assert factorizations(semigroups[(2, 3)], 1) == []

    def test_all_solutions_sum_back(self, semigroups):
        for gens, S in semigroups.items():
            for n in (0, 17, 60, 121):
                for z in factorizations(S, n):
                    assert is_factorization(S, n, z)

    def test_is_factorization_rejects(self, semigroups):
        S = semigroups[(2, 3)]
        assert not is_factorization(S, 6, (3, 1))
        assert not is_factorization(S, 6, (3,))
        assert not is_factorization(S, 6, (-3, 4))

    def test_budget(self, semigroups):
        with pytest.raises(BudgetExceededError):
            factorizations(semigroups[(2, 3)], 300, cap=3)


class TestExtremal:
    def test_min_square_example(self, semigroups):
        res = extremal_plength(semigroups[(2, 3)], 12, 2, "min")
        assert res.value == 13 and res.witness == (3, 2)

    def test_min_max_coordinate(self, semigroups):
        assert extremal_plength(semigroups[(2, 3)], 26, INF, "min").value == 6

    def test_max_max_coordinate_with_witness(self, semigroups):
        res = extremal_plength(semigroups[(2, 3)], 21, INF, "max")
        assert res.value == 9 and res.witness == (9, 1)

    def test_gap_raises(self, semigroups):
        with pytest.raises(NotInSemigroupError):
            extremal_plength(semigroups[(6, 9, 20)], 43, 1, "min")

    def test_witness_attains_value(self, semigroups):
        for S in semigroups.values():
            for n in (44, 100, 155):
                for p in (0, 1, 2, 3, INF):
                    for mode in ("min", "max"):
                        res = extremal_plength(S, n, p, mode)
                        assert plength(res.witness, p) == res.value

    def test_matches_enumeration_up_to_400(self, semigroups):
        """Solver equals the full-enumeration optimum for every member."""
        exps = (0, 1, 2, 3, INF)
        for gens, S in semigroups.items():
            tables = {
                (p, mode): extremal_values(S, 400, p, mode)
                for p in exps
                for mode in ("min", "max")
            }
            for n in range(401):
                zs = factorizations(S, n)
                if not zs:
                    assert all(t[n] is None for t in tables.values())
                    continue
                for p in exps:
                    lengths = [plength(z, p) for z in zs]
                    assert tables[(p, "min")][n] == min(lengths), (gens, n, p)
                    assert tables[(p, "max")][n] == max(lengths), (gens, n, p)

    def test_monotone_sandwich(self, semigroups):
        for gens, S in semigroups.items():
            k = len(gens)
            for n in (50, 123, 200):
                for z in factorizations(S, n):
                    linf, l1 = plength(z, INF), plength(z, 1)
                    assert linf <= l1 <= k * linf


class TestClosedForms:
    def test_max_inf_examples(self, semigroups):
        assert closed_max_inf(semigroups[(2, 3)], 21) == 9
        assert closed_max_inf(semigroups[(2, 3)], 22) == 11
        assert closed_max_inf(semigroups[(3, 5, 7)], 136) == 43

    def test_max_inf_threshold(self, semigroups):
        with pytest.raises(ThresholdNotMetError):
            closed_max_inf(semigroups[(2, 3)], 20)
        with pytest.raises(ThresholdNotMetError):
            closed_max_inf(semigroups[(3, 5, 7)], 135)

    def test_min_inf_examples(self, semigroups):
        S = semigroups[(2, 3)]
        assert closed_min_inf(S, 26) == 6
        assert closed_min_inf(S, 27) == 6
        assert closed_min_inf(S, 30) == 6

    def test_min_inf_threshold(self, semigroups):
        with pytest.raises(ThresholdNotMetError):
            closed_min_inf(semigroups[(2, 3)], 25)

    def test_len_recurrence_examples(self, semigroups):
        S = semigroups[(2, 3)]
        assert closed_len_recurrence(S, 100, "min") == 34
        assert closed_len_recurrence(S, 100, "max") == 50
        with pytest.raises(ThresholdNotMetError):
            closed_len_recurrence(semigroups[(3, 5, 7)], 7, "max")

    def test_len_recurrence_base_stays_inside(self, semigroups):
        # unwinding from 4 in (2, 3) must stop at 4, not step to the gap at 1
        S = semigroups[(2, 3)]
        assert closed_len_recurrence(S, 4, "min") == 2

    def test_closed_forms_match_solver(self, semigroups):
        for gens, S in semigroups.items():
            g1, g = gens[0], sum(gens)
            t_max = g1 * g1 * g
            for n in range(t_max + 1, t_max + 60):
                if S.contains(n):
                    assert closed_max_inf(S, n) == extremal_plength(S, n, INF, "max").value
            t_min = g * g
            for n in range(t_min + 1, t_min + 60):
                if S.contains(n):
                    assert closed_min_inf(S, n) == extremal_plength(S, n, INF, "min").value


class TestMin2:
    def brute_integer_min(self, gens, n, radius=30):
        """exhaustive box around the scaled projection, small n only"""
        k = len(gens)
        N = sum(g * g for g in gens)
        best = None
        centers = [round(n * g / N) for g in gens]

        def rec(i, acc, partial):
            nonlocal best
            if i == k - 1:
                rem = n - sum(p * g for p, g in zip(partial, gens[:-1]))
                if rem % gens[-1]:
                    return
                v = acc + (rem // gens[-1]) ** 2
                if best is None or v < best:
                    best = v
                return
            for z in range(centers[i] - radius, centers[i] + radius + 1):
                rec(i + 1, acc + z * z, partial + [z])

        rec(0, 0, [])
        return best

    def test_matches_brute_force(self, semigroups):
        for gens in ((2, 3), (3, 5, 7)):
            S = semigroups[gens]
            for n in range(0, 40):
                res = min2_integer_minimizer(S, n)
                assert sum(z * g for z, g in zip(res.witness, gens)) == n
                assert res.value == sum(z * z for z in res.witness)
                assert res.value == self.brute_integer_min(gens, n)

    def test_never_above_nonnegative_minimum(self, semigroups):
        S = semigroups[(2, 3)]
        vals = extremal_values(S, 80, 2, "min")
        for n in range(81):
            if vals[n] is not None:
                assert min2_integer_minimizer(S, n).value <= vals[n]

    def test_shift_examples(self, semigroups):
        assert min2_shift_check(semigroups[(2, 3)], 0)
        assert min2_shift_check(semigroups[(2, 3)], 12)
        assert min2_shift_check(semigroups[(3, 5, 7)], 40)
