"""Closed-form path counts against spec'd values and each other."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from jumppaths import bruteforce
from jumppaths.errors import GuardError
from jumppaths.exactmath import binom
from jumppaths.pathcount import (
    alternating_binomial_identity,
    at_least_k_stationary,
    count_table,
    relaxed_count,
    restricted_count,
    restricted_count_2d,
    total_paths,
    unrestricted_count,
    unrestricted_count_by_recurrence,
)


def relaxed_oracle(point, n):
    """Count weakly decreasing length-n sequences point -> origin with
    stationary repeats allowed, by direct recursion."""
    if n == 0:
        return 1 if all(x == 0 for x in point) else 0
    total = 0
    from itertools import product

    for nxt in product(*(range(x + 1) for x in point)):
        total += relaxed_oracle(nxt, n - 1)
    return total


class TestRelaxed:
    def test_one_dimensional_small(self):
        assert relaxed_count((1,), 1) == 1 == relaxed_oracle((1,), 1)
        # the two sequences are (1,1,0) and (1,0,0)
        assert relaxed_count((1,), 2) == 2 == relaxed_oracle((1,), 2)

    def test_zero_length_from_nonzero_point(self):
        assert relaxed_count((2, 2), 0) == 0

    @settings(max_examples=40)
    @given(
        st.lists(st.integers(min_value=0, max_value=3), min_size=1, max_size=3),
        st.integers(min_value=1, max_value=4),
    )
    def test_matches_oracle(self, point, n):
        assert relaxed_count(tuple(point), n) == relaxed_oracle(tuple(point), n)


class TestStationary:
    def test_formula_values(self):
        assert at_least_k_stationary((1,), 2, 1) == 2 * relaxed_count((1,), 1) == 2
        assert at_least_k_stationary((2, 2), 3, 3) == 0

    def test_k_zero_is_relaxed(self):
        for pt in [(1,), (2, 3), (1, 1, 2)]:
            for n in range(4):
                assert at_least_k_stationary(pt, n, 0) == relaxed_count(pt, n)

    def test_rejects_k_above_n(self):
        with pytest.raises(ValueError):
            at_least_k_stationary((1, 1), 2, 3)


class TestRestricted:
    def test_small_values_against_enumeration(self):
        assert restricted_count((1, 1), 1) == 1
        assert restricted_count((1, 1), 2) == len(
            [p for p in bruteforce.enumerate_restricted((1, 1)) if len(p) == 3]
        )

    def test_one_dimensional_chain_count(self):
        # chains 3 > x > 0 for the two-jump case: x in {1, 2}
        assert restricted_count((3,), 2) == 2
        for p in range(8):
            for n in range(p + 2):
                assert restricted_count((p,), n) == (
                    binom(p - 1, n - 1) if n else int(p == 0)
                )

    def test_too_long_paths_vanish(self):
        assert restricted_count((2, 3), 6) == 0
        assert restricted_count_2d(2, 3, 6) == 0

    def test_origin_base_cases(self):
        assert restricted_count((0, 0), 0) == 1
        assert restricted_count((0, 0), 1) == 0
        assert restricted_count((0, 0, 0), 2) == 0
        assert restricted_count_2d(0, 0, 0) == 1
        assert restricted_count_2d(0, 0, 3) == 0

    def test_2d_form_hand_values(self):
        assert restricted_count_2d(1, 1, 2) == 2
        assert restricted_count_2d(1, 1, 1) == 1
        assert restricted_count_2d(2, 2, 5) == 0

    def test_two_forms_agree_including_axes(self):
        for p in range(9):
            for q in range(9):
                for n in range(p + q + 2):
                    assert restricted_count((p, q), n) == restricted_count_2d(p, q, n)

    def test_symmetry(self):
        for p in range(7):
            for q in range(7):
                for n in range(p + q + 1):
                    assert restricted_count_2d(p, q, n) == restricted_count_2d(q, p, n)

    def test_inclusion_exclusion_resummation(self):
        # direct alternating sum over stationary counts; degenerate at the
        # exact origin, which is skipped
        points = [(3,), (2, 2), (1, 3), (0, 2), (1, 1, 2), (2, 0, 1)]
        for pt in points:
            for n in range(1, sum(pt) + 2):
                resummed = sum(
                    (-1) ** k * binom(n, k) * relaxed_count(pt, n - k)
                    for k in range(n)
                )
                assert resummed == restricted_count(pt, n)


class TestUnrestricted:
    def test_hand_values(self):
        assert unrestricted_count(1, 1, 1) == 3
        assert unrestricted_count(0, 0, 0) == 1
        assert unrestricted_count(2, 2, 2) == 19

    def test_empty_path_convention(self):
        for p in range(5):
            for q in range(5):
                assert unrestricted_count(p, q, 0) == 1

    def test_recurrence_route(self):
        assert unrestricted_count_by_recurrence(1, 1, 1) == 3
        assert unrestricted_count_by_recurrence(0, 5, 2) == binom(5, 2) == 10
        for p in range(8):
            for q in range(8):
                for n in range(p + q + 2):
                    assert unrestricted_count_by_recurrence(p, q, n) == unrestricted_count(p, q, n)

    def test_shift_identity_small(self):
        for p in range(8):
            for q in range(8):
                for n in range(p + q + 2):
                    g_n = restricted_count((p, q), n)
                    g_n1 = restricted_count((p, q), n + 1)
                    assert unrestricted_count(p, q, n) == g_n + g_n1

    def test_support(self):
        for p in range(6):
            for q in range(6):
                assert unrestricted_count(p, q, p + q + 1) == 0
                if (p, q) != (0, 0):
                    assert unrestricted_count(p, q, p + q) > 0

    @settings(max_examples=60)
    @given(
        st.integers(min_value=0, max_value=25),
        st.integers(min_value=0, max_value=25),
        st.integers(min_value=0, max_value=50),
    )
    def test_symmetry_property(self, p, q, n):
        assert unrestricted_count(p, q, n) == unrestricted_count(q, p, n)


class TestTotals:
    def test_reference_grid(self):
        expected = [
            [1, 2, 4, 8],
            [2, 6, 16, 40],
            [4, 16, 52, 152],
            [8, 40, 152, 504],
        ]
        for y in range(4):
            for x in range(4):
                assert total_paths((x, y)) == expected[y][x]

    def test_equals_length_sum(self):
        for p in range(7):
            for q in range(7):
                assert total_paths((p, q)) == sum(
                    unrestricted_count(p, q, n) for n in range(p + q + 1)
                )

    def test_one_and_three_dimensional(self):
        assert total_paths((0,)) == 1
        assert total_paths((3,)) == 8
        # recursion oracle: S(p) = 1 + sum over the dominated box minus p
        from itertools import product

        def s_oracle(pt):
            total = 1
            for a in product(*(range(x + 1) for x in pt)):
                if a != pt:
                    total += s_oracle(a)
            return total

        assert total_paths((1, 1, 1)) == s_oracle((1, 1, 1))
        assert total_paths((2, 1, 2)) == s_oracle((2, 1, 2))

    def test_box_guard(self):
        with pytest.raises(GuardError):
            total_paths((10**4, 10**4))


class TestAlternatingIdentity:
    def test_hand_values(self):
        assert alternating_binomial_identity(2, 1, 1) == (2, 2)
        assert alternating_binomial_identity(0, 3, 2) == (0, 0)

    def test_single_term_when_n_zero(self):
        for m in range(6):
            for k in range(m + 2):
                lhs, rhs = alternating_binomial_identity(m, 0, k)
                assert lhs == rhs == binom(m, k)

    @settings(max_examples=80)
    @given(
        st.integers(min_value=0, max_value=30),
        st.integers(min_value=0, max_value=30),
        st.integers(min_value=0, max_value=35),
    )
    def test_identity_holds(self, m, n, k):
        lhs, rhs = alternating_binomial_identity(m, n, k)
        assert lhs == rhs


class TestCountTable:
    def test_restricted_table(self):
        table = count_table((2, 2))
        assert table.origin == (2, 2)
        assert table.counts == {
            n: restricted_count((2, 2), n) for n in range(5)
        }

    def test_unrestricted_table_matches_closed_form(self):
        table = count_table((3, 2), restricted=False)
        assert table.counts == {n: unrestricted_count(3, 2, n) for n in range(6)}
        assert table.total() == total_paths((3, 2))

    def test_any_dimension(self):
        table = count_table((1, 1, 1), restricted=False)
        assert table.total() == total_paths((1, 1, 1))


class TestValidation:
    def test_rejects_negative_coordinates(self):
        with pytest.raises(ValueError):
            relaxed_count((-1, 2), 1)
        with pytest.raises(ValueError):
            unrestricted_count(1, -2, 1)

    def test_rejects_negative_length(self):
        with pytest.raises(ValueError):
            restricted_count((1, 1), -1)

    def test_rejects_empty_point(self):
        with pytest.raises(ValueError):
            total_paths(())
