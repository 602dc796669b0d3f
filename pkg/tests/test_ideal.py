import random
from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from nil.errors import GraphError, IdealError
from nil.ideal import (
    MonomialIdeal,
    contains,
    contains_power,
    edge_ideal,
    exp_add,
    minimalize,
    power,
    restrict,
    support,
)
from nil.wgraph import WeightedGraph, build_graph

from _oracles import brute_minimalize, random_exponent, random_ideal

exponents = st.lists(st.integers(min_value=0, max_value=4), min_size=1, max_size=4)


def exponent_sets(n):
    return st.lists(
        st.tuples(*[st.integers(min_value=0, max_value=3)] * n),
        min_size=1,
        max_size=6,
    )


class TestMonomialIdeal:
    def test_rejects_non_antichain(self):
        with pytest.raises(IdealError, match="antichain"):
            MonomialIdeal(2, [(1, 1), (2, 2)])

    def test_rejects_negative_entries(self):
        with pytest.raises(IdealError):
            MonomialIdeal(2, [(1, -1)])

    def test_rejects_length_mismatch(self):
        with pytest.raises(IdealError):
            MonomialIdeal(2, [(1, 1, 1)])

    def test_sorted_deterministically(self):
        I = MonomialIdeal(2, [(0, 2), (2, 0), (1, 1)])
        assert I.gens == ((0, 2), (1, 1), (2, 0))

    def test_zero_ideal_sentinel(self):
        assert MonomialIdeal(3, []).is_zero


class TestEdgeIdeal:
    def test_single_weighted_edge(self):
        G = build_graph(2, [(1, 2, 2)])
        assert edge_ideal(G).gens == ((2, 2),)

    def test_triangle(self):
        G = build_graph(3, [(1, 2, 1), (2, 3, 1), (1, 3, 1)])
        assert edge_ideal(G).gens == ((0, 1, 1), (1, 0, 1), (1, 1, 0))

    def test_weighted_path(self):
        G = build_graph(3, [(1, 2, 2), (2, 3, 3)])
        assert edge_ideal(G).gens == ((0, 3, 3), (2, 2, 0))

    def test_edgeless_rejected(self):
        with pytest.raises(GraphError, match="zero ideal"):
            edge_ideal(WeightedGraph(3))


class TestMinimalize:
    def test_divisible_dropped(self):
        assert minimalize({(1, 1), (2, 2)}).gens == ((1, 1),)

    def test_antichain_unchanged(self):
        gens = {(2, 0), (0, 2), (1, 1)}
        assert set(minimalize(gens).gens) == gens

    def test_empty_rejected(self):
        with pytest.raises(IdealError, match="empty"):
            minimalize(set())

    @given(exponent_sets(3))
    def test_idempotent_and_matches_definition(self, exps):
        once = minimalize(exps)
        assert minimalize(once.gens) == once
        assert once == brute_minimalize(exps)

    @given(exponent_sets(2), st.randoms(use_true_random=False))
    def test_order_independent(self, exps, rng):
        shuffled = list(exps)
        rng.shuffle(shuffled)
        assert minimalize(exps) == minimalize(shuffled)


class TestPower:
    def test_principal_square(self):
        assert power(MonomialIdeal(2, [(1, 1)]), 2).gens == ((2, 2),)

    def test_triangle_square(self):
        I = MonomialIdeal(3, [(1, 1, 0), (0, 1, 1), (1, 0, 1)])
        expected = {(2, 2, 0), (0, 2, 2), (2, 0, 2), (1, 2, 1), (2, 1, 1), (1, 1, 2)}
        assert set(power(I, 2).gens) == expected

    def test_power_one_is_identity(self):
        I = MonomialIdeal(3, [(1, 1, 0), (0, 1, 1)])
        assert power(I, 1) == I

    def test_zero_exponent_rejected(self):
        with pytest.raises(IdealError):
            power(MonomialIdeal(2, [(1, 1)]), 0)

    def test_additivity(self):
        rng = random.Random(5)
        for _ in range(40):
            I = random_ideal(rng)
            for s, t in ((1, 1), (1, 2), (2, 1)):
                left = power(I, s + t)
                sums = {
                    exp_add(a, b)
                    for a in power(I, s).gens
                    for b in power(I, t).gens
                }
                assert left == minimalize(sums)


class TestContains:
    def test_examples(self):
        I = MonomialIdeal(3, [(2, 2, 0), (0, 3, 3)])
        assert contains(I, (2, 3, 0))
        assert not contains(I, (1, 2, 1))
        assert contains(I, (2, 2, 0))

    def test_length_mismatch(self):
        with pytest.raises(IdealError):
            contains(MonomialIdeal(2, [(1, 1)]), (1, 1, 1))

    @given(
        st.tuples(*[st.integers(min_value=0, max_value=3)] * 3),
        st.tuples(*[st.integers(min_value=0, max_value=3)] * 3),
    )
    def test_monotone(self, a, delta):
        I = MonomialIdeal(3, [(2, 1, 0), (0, 1, 2), (1, 0, 1)])
        bigger = exp_add(a, delta)
        if contains(I, a):
            assert contains(I, bigger)


class TestContainsPower:
    def test_f4_witness_not_in_square(self):
        I = MonomialIdeal(5, [(1, 1, 0, 0, 0), (0, 1, 1, 0, 0), (1, 0, 1, 0, 0), (0, 0, 0, 2, 2)])
        assert not contains_power(I, (1, 1, 1, 1, 1), 2)

    def test_sums_of_generators_always_in(self):
        I = MonomialIdeal(5, [(1, 1, 0, 0, 0), (0, 1, 1, 0, 0), (1, 0, 1, 0, 0), (0, 0, 0, 2, 2)])
        for a in I.gens:
            for b in I.gens:
                assert contains_power(I, exp_add(a, b), 2)

    def test_t_one_agrees_with_contains(self):
        rng = random.Random(9)
        for _ in range(60):
            I = random_ideal(rng)
            a = random_exponent(rng, I.n, entry_max=5)
            assert contains_power(I, a, 1) == contains(I, a)

    def test_brute_force_equivalence(self):
        rng = random.Random(29)
        for _ in range(250):
            I = random_ideal(rng, n_max=5)
            t = rng.randint(1, 3)
            pt = power(I, t)
            a = random_exponent(rng, I.n, entry_max=6)
            assert contains_power(I, a, t) == contains(pt, a)

    def test_exhaustive_tiny(self):
        I = MonomialIdeal(2, [(2, 1), (0, 3)])
        for t in (1, 2, 3):
            pt = power(I, t)
            for a in product(range(7), repeat=2):
                assert contains_power(I, a, t) == contains(pt, a)


class TestRestrict:
    def test_drop_unsupported_generator(self):
        I = MonomialIdeal(3, [(2, 2, 0), (0, 3, 3)])
        assert restrict(I, {1, 2}).gens == ((2, 2, 0),)

    def test_full_set_identity(self):
        I = MonomialIdeal(3, [(2, 2, 0), (0, 3, 3)])
        assert restrict(I, {1, 2, 3}) == I

    def test_empty_gives_zero_ideal(self):
        I = MonomialIdeal(3, [(2, 2, 0), (0, 3, 3)])
        assert restrict(I, set()).is_zero

    def test_out_of_range(self):
        with pytest.raises(IdealError):
            restrict(MonomialIdeal(2, [(1, 1)]), {3})

    def test_commutes_with_power(self):
        rng = random.Random(31)
        checked = 0
        while checked < 50:
            I = random_ideal(rng)
            V = {v for v in range(1, I.n + 1) if rng.random() < 0.6}
            IV = restrict(I, V)
            if IV.is_zero:
                continue
            checked += 1
            for k in (2, 3):
                assert restrict(power(I, k), V) == power(IV, k)


class TestSupport:
    def test_examples(self):
        assert support((2, 0, 1)) == {1, 3}
        assert support((0, 0)) == frozenset()
        assert support((1, 1, 1)) == {1, 2, 3}
