#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Tests del sustrato: permutaciones, transposiciones, particiones, órdenes y órbitas
"""

import os
import sys

import pytest
from hypothesis import given
from hypothesis import strategies as st

# Agregar el directorio del proyecto al path
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from errors import DegreeMismatchError, FactorisationError
from perm_core import (
    JoinCut,
    Partition,
    Permutation,
    TotalOrder,
    Transposition,
    all_permutations,
    canonical_conjugator,
    compose,
    conjugate,
    full_cycles,
    is_transitive,
    join_cut,
    order_from_conjugator,
    orbits,
    partitions,
    product,
    simple_reflection_decomposition,
)


class TestPermutation:
    """Test suite for permutation parsing and arithmetic"""

    def test_parse_and_render(self):
        p = Permutation.parse("(1 2)(3)")
        assert p.n == 3
        assert str(p) == "(1 2)(3)"
        assert p.images == (2, 1, 3)

    def test_parse_commas_and_explicit_degree(self):
        assert Permutation.parse("(1,3)", n=4).images == (3, 2, 1, 4)

    def test_identity_needs_degree(self):
        with pytest.raises(FactorisationError):
            Permutation.parse("e")
        assert Permutation.parse("e", n=3).is_identity()

    def test_rejects_repeated_symbol(self):
        with pytest.raises(FactorisationError):
            Permutation.parse("(1 2)(2 3)")

    def test_left_to_right_composition(self):
        p = Permutation.parse("(1 2)(3)")
        q = Permutation.parse("(1)(2 3)")
        assert compose(p, q)(1) == q(p(1)) == 3
        assert str(p * q) == "(1 3 2)"

    def test_star_product_example(self):
        assert str(product([Transposition(1, 3), Transposition(2, 3)], 3)) == "(1 2 3)"

    def test_degree_mismatch(self):
        with pytest.raises(DegreeMismatchError):
            compose(Permutation.identity(2), Permutation.identity(3))

    def test_cycle_data(self):
        p = Permutation.parse("(1 2 3)(4 5)(6)")
        assert p.num_cycles() == 3
        assert p.cycle_type() == Partition((3, 2, 1))
        assert p.reflection_length() == 3
        assert p.fixed_points() == [6]

    def test_conjugate_relabels_symbols(self):
        omega = Permutation.parse("(1 2)(3)")
        delta = Permutation.parse("(1 3)")
        assert str(conjugate(omega, delta)) == "(1)(2 3)"

    @given(st.permutations(range(1, 7)))
    def test_inverse_composes_to_identity(self, images):
        p = Permutation(tuple(images))
        assert (p * p.inverse()).is_identity()
        assert (p.inverse() * p).is_identity()

    @given(st.permutations(range(1, 6)), st.permutations(range(1, 6)))
    def test_conjugation_preserves_cycle_type(self, a, b):
        p, by = Permutation(tuple(a)), Permutation(tuple(b))
        assert conjugate(p, by).cycle_type() == p.cycle_type()

    @given(st.permutations(range(1, 6)))
    def test_render_parses_back(self, images):
        p = Permutation(tuple(images))
        assert Permutation.parse(str(p)) == p


class TestTransposition:
    """Test suite for transpositions"""

    def test_normalised(self):
        t = Transposition(3, 1)
        assert (t.a, t.b) == (1, 3)
        assert str(t) == "(1 3)"

    def test_rejects_fixed_symbol(self):
        with pytest.raises(FactorisationError):
            Transposition(2, 2)

    def test_other_and_contains(self):
        t = Transposition(2, 5)
        assert t.contains(5) and not t.contains(3)
        assert t.other(2) == 5
        with pytest.raises(FactorisationError):
            t.other(1)

    def test_display_under_order(self):
        order = TotalOrder.parse("1<3<2")
        assert Transposition(2, 3).display(order) == "(3 2)"
        assert Transposition(1, 2).display(order) == "(1 2)"


class TestPartitions:
    """Test suite for partitions and class data"""

    def test_partitions_of_four(self):
        assert [str(p) for p in partitions(4)] == ["[4]", "[3,1]", "[2,2]", "[2,1,1]", "[1,1,1,1]"]

    def test_parse(self):
        assert Partition.parse("[3,1]") == Partition((1, 3))
        assert Partition.parse("[]").size == 0
        with pytest.raises(FactorisationError):
            Partition.parse("[a]")

    def test_class_sizes_sum_to_factorial(self):
        for n in range(1, 6):
            assert sum(p.class_size() for p in partitions(n)) == len(all_permutations(n))
        assert Partition((2, 2)).class_size() == 3

    def test_union_and_remove(self):
        shape = Partition((2, 1))
        assert shape.union_part(3) == Partition((3, 2, 1))
        assert shape.remove_part(2) == Partition((1,))

    def test_representative(self):
        assert str(Partition((2, 1)).representative()) == "(1 2)(3)"


class TestOrders:
    """Test suite for total orders and conjugators"""

    def test_swap_adjacent(self):
        order = TotalOrder.natural(3)
        assert str(order.swap_adjacent(2)) == "1<3<2"
        with pytest.raises(FactorisationError):
            order.swap_adjacent(3)

    def test_order_from_conjugator(self):
        assert str(order_from_conjugator(Permutation.parse("(1 3)"))) == "3<2<1"

    def test_simple_reflection_decomposition(self):
        assert simple_reflection_decomposition(TotalOrder.parse("2<1<3")) == [1]
        assert simple_reflection_decomposition(TotalOrder.parse("3<2<1")) == [1, 2, 1]
        assert simple_reflection_decomposition(TotalOrder.natural(4)) == []

    def test_decomposition_rebuilds_order(self):
        for order in [TotalOrder(p.images) for p in all_permutations(4)]:
            current = TotalOrder.natural(4)
            for j in simple_reflection_decomposition(order):
                current = current.swap_adjacent(j)
            assert current == order, f"swaps do not rebuild {order}"

    def test_canonical_conjugator(self):
        for omega in all_permutations(4):
            for gamma in all_permutations(4):
                if omega.cycle_type() != gamma.cycle_type():
                    continue
                delta = canonical_conjugator(omega, gamma)
                assert conjugate(omega, delta) == gamma

    def test_canonical_conjugator_rejects_other_class(self):
        with pytest.raises(FactorisationError):
            canonical_conjugator(Permutation.parse("(1 2)(3)"), Permutation.parse("(1 2 3)"))


class TestOrbits:
    """Test suite for orbits and join-cut classification"""

    def test_disconnected(self):
        result = orbits([Transposition(1, 2), Transposition(3, 4)], 4)
        assert not result.is_transitive
        assert str(result) == "{{1,2}, {3,4}}"
        assert result.labels() == (1, 1, 3, 3)

    def test_transitive_star(self):
        assert is_transitive([Transposition(1, 3), Transposition(2, 3)], 3)

    def test_empty_factorisation_only_transitive_in_degree_one(self):
        assert is_transitive([], 1)
        assert not is_transitive([], 2)

    def test_join_cut(self):
        assert join_cut(Permutation.identity(3), Transposition(1, 2)) is JoinCut.JOIN
        assert join_cut(Permutation.parse("(1 2)(3)"), Transposition(1, 2)) is JoinCut.CUT

    def test_full_cycles(self):
        cycles = full_cycles(4)
        assert len(cycles) == 6
        assert all(c.num_cycles() == 1 for c in cycles)
        assert full_cycles(1) == (Permutation.identity(1),)
