#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Tests de fórmulas cerradas, recurrencias, serie truncada y relación de doble Hurwitz
"""

import os
import sys
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

# Agregar el directorio del proyecto al path
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from errors import BoundsError, InexactDivisionError, exact_div
from factorisations import count_monotone_double, count_star
from formulas import (
    RationalSeries,
    catalan,
    central_factorial,
    count_paired_partitions,
    double_hurwitz_relation_holds,
    double_hurwitz_relation_sides,
    formula_table,
    identity_recurrence_holds,
    monotone_double_full_cycle,
    monotone_double_identity,
    recurrence_representative,
    sinh_formula_count,
    star_recurrence,
    stirling2,
)
from perm_core import Partition, Permutation, partitions


class TestSequences:
    """Test suite for the integer sequences"""

    def test_values(self):
        assert stirling2(5, 2) == 15
        assert central_factorial(3, 2) == 5
        assert [catalan(m) for m in range(5)] == [1, 1, 2, 5, 14]

    def test_paired_partitions_match_central_factorial(self):
        for m in range(5):
            for k in range(m + 1):
                assert count_paired_partitions(m, k) == central_factorial(m, k), f"m={m} k={k}"

    def test_exact_division(self):
        assert exact_div(15, 3) == 5
        with pytest.raises(InexactDivisionError):
            exact_div(7, 2)


class TestRationalSeries:
    """Test suite for truncated exact series"""

    def test_reciprocal(self):
        kernel = RationalSeries.sinh_kernel(6)
        assert kernel * kernel.reciprocal() == RationalSeries.one(6)
        assert kernel ** -2 == (kernel * kernel).reciprocal()

    def test_kernel_coefficients(self):
        kernel = RationalSeries.sinh_kernel(4)
        assert kernel.coefficient(0) == 1
        assert kernel.coefficient(2) == Fraction(1, 24)
        assert kernel.coefficient(3) == 0
        assert kernel.coefficient(4) == Fraction(1, 1920)

    def test_no_reciprocal_without_constant(self):
        with pytest.raises(ZeroDivisionError):
            RationalSeries(3, (0, 1)).reciprocal()

    @given(
        st.lists(st.fractions(max_denominator=20), min_size=4, max_size=4),
        st.lists(st.fractions(max_denominator=20), min_size=4, max_size=4),
    )
    def test_product_commutes(self, a, b):
        x, y = RationalSeries(3, tuple(a)), RationalSeries(3, tuple(b))
        assert x * y == y * x

    @given(st.integers(min_value=-3, max_value=3))
    def test_rescale_is_multiplicative(self, factor):
        kernel = RationalSeries.sinh_kernel(4)
        assert (kernel * kernel).rescale(factor) == kernel.rescale(factor) * kernel.rescale(factor)


class TestSinhFormula:
    """Test suite for the hyperbolic sine formula"""

    def test_values(self):
        assert sinh_formula_count(Partition((2,)), 0) == 1
        assert sinh_formula_count(Partition((2, 1)), 0) == 2
        assert sinh_formula_count(Partition((3,)), 1) == 5

    def test_degree_one(self):
        assert sinh_formula_count(Partition((1,)), 0) == 1
        assert sinh_formula_count(Partition((1,)), 1) == 0

    def test_matches_counts(self):
        for n in range(1, 5):
            for shape in partitions(n):
                for g in range(2):
                    omega = shape.representative()
                    value = sinh_formula_count(shape, g)
                    assert value == count_star(omega, g) == count_monotone_double(omega, g), f"{shape} g={g}"


class TestClosedForms:
    """Test suite for full-cycle and identity closed forms"""

    def test_full_cycle(self):
        assert monotone_double_full_cycle(3, 0) == 1
        assert monotone_double_full_cycle(3, 1) == 5
        assert monotone_double_full_cycle(2, 0) == 1

    def test_identity(self):
        assert monotone_double_identity(3, 0) == 4
        assert monotone_double_identity(3, 1) == 20
        assert monotone_double_identity(1, 0) == 1

    def test_identity_recurrence(self):
        for n in range(2, 6):
            for g in range(4):
                assert identity_recurrence_holds(n, g), f"n={n} g={g}"

    def test_against_dp(self):
        for n in range(2, 5):
            for g in range(2):
                cycle = Partition((n,)).representative()
                assert monotone_double_full_cycle(n, g) == count_monotone_double(cycle, g)
                assert monotone_double_identity(n, g) == count_monotone_double(Permutation.identity(n), g)


class TestStarRecurrence:
    """Test suite for the join-cut recurrence"""

    def test_initial_values(self):
        assert star_recurrence(1, Partition(()), 0) == 1
        assert star_recurrence(2, Partition(()), 0) == 1
        assert star_recurrence(1, Partition((1,)), 0) == 1
        assert star_recurrence(1, Partition((1, 1)), 0) == 4

    def test_representative(self):
        omega = recurrence_representative(2, Partition((1,)))
        assert str(omega) == "(1)(2 3)"

    def test_matches_star_counts(self):
        for total in range(1, 5):
            for i in range(1, total + 1):
                for shape in partitions(total - i):
                    for g in range(2):
                        omega = recurrence_representative(i, shape)
                        assert star_recurrence(i, shape, g) == count_star(omega, g), f"i={i} {shape} g={g}"


class TestDoubleHurwitzRelation:
    """Test suite for the double Hurwitz relation"""

    def test_small_sides(self):
        assert double_hurwitz_relation_sides(Partition((2,)), 0) == (2, 2)
        assert double_hurwitz_relation_sides(Partition((1, 1)), 0) == (6, 6)
        assert double_hurwitz_relation_sides(Partition((2,)), 1) == (18, 18)

    def test_holds_up_to_degree_three(self):
        for n in range(1, 4):
            for shape in partitions(n):
                assert double_hurwitz_relation_holds(shape, 0), str(shape)

    def test_bound(self):
        with pytest.raises(BoundsError) as exc:
            double_hurwitz_relation_sides(Partition((4,)), 0)
        assert "relation n" in str(exc.value)


class TestFormulaTable:
    """Test suite for the formula cross-check table"""

    def test_rows_agree(self):
        rows = formula_table(3, 1)
        assert all(row['all_agree'] for row in rows)
        assert len(rows) == 2 * (1 + 2 + 3)

    def test_closed_form_column(self):
        rows = {(row['partition'], row['genus']): row for row in formula_table(3, 0)}
        assert rows[("[3]", 0)]['closed_form'] == 1
        assert rows[("[1,1,1]", 0)]['closed_form'] == 4
        assert rows[("[2,1]", 0)]['closed_form'] is None
