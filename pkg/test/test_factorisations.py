#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Tests de las cuatro familias: validación, listado y conteo por programación dinámica
"""

import os
import sys

import pytest

# Agregar el directorio del proyecto al path
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from errors import ConditionViolation
from factorisations import (
    count_monotone,
    count_monotone_double,
    count_star,
    count_star_unconstrained,
    double_hurwitz_b,
    enumerate_double_hurwitz,
    enumerate_monotone,
    enumerate_monotone_double,
    enumerate_star,
    iter_double_hurwitz,
    make_monotone,
    make_monotone_double,
    make_star,
    monotone_double_count_for_class,
    star_count_for_class,
    strictly_monotone_factorisation,
    validate_monotone_double,
    validate_star,
)
from perm_core import Partition, Permutation, TotalOrder, Transposition, all_orders, all_permutations, product


def P(text, n=None):
    return Permutation.parse(text, n)


class TestStar:
    """Test suite for transitive star factorisations"""

    def test_small_example_counts(self):
        assert count_star(P("(1 2)(3)"), 0) == 2
        assert count_star(P("(1)(2 3)"), 0) == 2

    def test_unconstrained_counts(self):
        assert count_star_unconstrained(P("(1 2)(3)"), 3) == 2
        assert count_star_unconstrained(P("(1)(2 3)"), 3) == 3

    def test_listing(self):
        found = enumerate_star(P("(1 2)(3)"), 0, 3)
        assert [f.legs for f in found] == [(1, 2, 1), (2, 1, 2)]
        assert found[0].render() == "((1 3),(2 3),(1 3))"
        assert found[0].to_dict()['family'] == 'star'

    def test_listing_matches_dp(self):
        for n in range(1, 4):
            for omega in all_permutations(n):
                for g in range(2):
                    assert len(enumerate_star(omega, g, n)) == count_star(omega, g), f"{omega} g={g}"

    def test_root_and_class_invariance(self):
        for omega in all_permutations(4):
            values = {count_star(omega, 0, root) for root in range(1, 5)}
            assert values == {star_count_for_class(omega.cycle_type(), 0)}

    def test_validation_reports_every_violation(self):
        ok, data, errors = validate_star((1, 1), P("(2 3)", 3), 3)
        assert not ok
        assert any(e.startswith("condition product violated") for e in errors)
        assert "condition transitivity violated: (2 3) never appears" in errors

    def test_make_star_raises_condition(self):
        with pytest.raises(ConditionViolation) as exc:
            make_star((1, 3), P("(1 3)", 3), 3)
        assert exc.value.condition == "root"

    def test_make_star_computes_genus(self):
        f = make_star((1, 2, 1), P("(1 2)(3)"), 3)
        assert f.genus == 0


class TestMonotone:
    """Test suite for monotone factorisations"""

    def test_listing_natural(self):
        found = enumerate_monotone(P("(1 3 2)"), 0)
        assert [f.render() for f in found] == ["((1 2),(2 3))", "((2 3),(1 3))"]

    def test_listing_matches_dp_for_every_order(self):
        for order in all_orders(3):
            for omega in all_permutations(3):
                for g in range(2):
                    listed = len(enumerate_monotone(omega, g, order))
                    assert listed == count_monotone(omega, g, order), f"{omega} {order} g={g}"

    def test_count_does_not_depend_on_order(self):
        for omega in all_permutations(4):
            values = {count_monotone(omega, 1, order) for order in all_orders(4)[::5]}
            assert len(values) == 1

    def test_make_monotone_rejects_decreasing(self):
        factors = (Transposition(1, 3), Transposition(1, 2))
        with pytest.raises(ConditionViolation) as exc:
            make_monotone(factors, product(factors, 3), TotalOrder.natural(3))
        assert exc.value.condition == "monotone"

    def test_strictly_monotone(self):
        assert strictly_monotone_factorisation(P("(1 2 3)")) == (Transposition(1, 2), Transposition(1, 3))
        assert strictly_monotone_factorisation(P("e", 3)) == ()
        for omega in all_permutations(4):
            factors = strictly_monotone_factorisation(omega)
            assert product(factors, 4) == omega
            assert [t.b for t in factors] == sorted({t.b for t in factors})


class TestMonotoneDouble:
    """Test suite for monotone double factorisations"""

    def test_listing(self):
        found = enumerate_monotone_double(P("(1 2)(3)"), 0)
        assert [f.render() for f in found] == ["((1 2 3),(1 3))", "((1 3 2),(2 3))"]

    def test_identity_count(self):
        assert count_monotone_double(P("e", 3), 0) == 4
        assert len(enumerate_monotone_double(P("e", 3), 0)) == 4

    def test_full_cycle_count(self):
        assert count_monotone_double(P("(1 2 3)"), 0) == 1
        assert count_monotone_double(P("(1 2 3)"), 1) == 5

    def test_equals_star_count(self):
        for n in range(1, 5):
            for omega in all_permutations(n):
                for g in range(2):
                    assert count_monotone_double(omega, g) == count_star(omega, g), f"{omega} g={g}"

    def test_validation(self):
        ok, _, errors = validate_monotone_double(P("(1 2)(3)"), (Transposition(1, 2),), P("e", 3))
        assert not ok
        assert errors[0].startswith("condition full-cycle violated")

    def test_make_monotone_double(self):
        md = make_monotone_double(P("(1 2 3)"), (Transposition(1, 3),), P("(1 2)(3)"))
        assert md.genus == 0
        with pytest.raises(ConditionViolation) as exc:
            make_monotone_double(P("(1 2)(3)"), (Transposition(1, 2),), P("e", 3))
        assert exc.value.condition == "full-cycle"

    def test_class_level_count(self):
        assert monotone_double_count_for_class(Partition((1, 1, 1)), 0) == 4
        assert monotone_double_count_for_class(Partition((3,)), 1) == 5


class TestDoubleHurwitz:
    """Test suite for double Hurwitz counts"""

    def test_counts(self):
        assert enumerate_double_hurwitz(3, Partition((3,)), Partition((2, 1)), 0) == 6
        assert double_hurwitz_b(Partition((2, 1)), 0) == 2
        assert enumerate_double_hurwitz(2, Partition((2,)), Partition((2,)), 0) == 1

    def test_identity_target_uses_two_factors(self):
        assert enumerate_double_hurwitz(3, Partition((3,)), Partition((1, 1, 1)), 0) == 6

    def test_listing_matches_dp(self):
        for alpha in [Partition((3,)), Partition((2, 1))]:
            for beta in [Partition((3,)), Partition((2, 1)), Partition((1, 1, 1))]:
                listed = sum(1 for _ in iter_double_hurwitz(3, alpha, beta, 0))
                assert listed == enumerate_double_hurwitz(3, alpha, beta, 0), f"{alpha} {beta}"
