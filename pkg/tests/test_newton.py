import pytest
from hypothesis import given, strategies as st

from conftest import I, artinian_ideals
from oracles import closure_bruteforce, lower_hull_normals_2d
from monres.errors import DimensionMismatch, NotArtinianError, ZeroIdealError
from monres.ideal import MonIdeal, bounding_box, contains, divides, maximal_ideal_power, product, pure_powers
from monres.newton import (
    compact_facets,
    ideal_order,
    integral_closure,
    is_integrally_closed,
    ord,
    rees_valuations,
)

M2 = maximal_ideal_power(2, 2)


def facets(J):
    return [(f.normal, f.offset) for f in compact_facets(J).facets]


class TestOrd:
    @pytest.mark.parametrize("rho,a,expected", [((2, 3), (1, 1), 5), ((1, 1), (0, 0), 0), ((1, 0), (3, 7), 3)])
    def test_examples(self, rho, a, expected):
        assert ord(rho, a) == expected

    def test_mismatch(self):
        with pytest.raises(DimensionMismatch):
            ord((1, 1), (1, 1, 1))


class TestIdealOrder:
    def test_examples(self):
        assert ideal_order((2, 3), I((3, 0), (0, 2))) == 6
        assert ideal_order((1, 1), M2) == 2
        assert ideal_order((1, 0), I((3, 0), (0, 2))) == 0

    def test_zero_ideal(self):
        with pytest.raises(ZeroIdealError):
            ideal_order((1, 1), MonIdeal.zero(2))

    @given(artinian_ideals(), artinian_ideals(), st.data())
    def test_additive_on_products(self, J, K, data):
        if J.dim != K.dim:
            return
        rho = data.draw(st.tuples(*[st.integers(0, 5)] * J.dim).filter(any))
        assert ideal_order(rho, product(J, K)) == ideal_order(rho, J) + ideal_order(rho, K)


class TestCompactFacets:
    def test_examples(self):
        assert facets(M2) == [((1, 1), 2)]
        assert facets(I((3, 0), (0, 2))) == [((2, 3), 6)]
        assert facets(I((2, 0), (1, 1), (0, 3))) == [((1, 1), 2), ((2, 1), 3)]

    def test_dimension_one(self):
        assert facets(I((5,))) == [((1,), 5)]
        assert integral_closure(I((5,))) == I((5,))

    def test_non_artinian(self):
        with pytest.raises(NotArtinianError):
            compact_facets(I((2, 0), (1, 1)))

    def test_corpus_matches_hull_oracle(self, corpus):
        for J in corpus:
            assert facets(J) == lower_hull_normals_2d(J.gens)

    @given(artinian_ideals())
    def test_facet_invariants(self, J):
        for f in compact_facets(J).facets:
            assert all(x > 0 for x in f.normal)
            assert all(ord(f.normal, g) >= f.offset for g in J.gens)
            tight = [g for g in J.gens if ord(f.normal, g) == f.offset]
            assert len(tight) >= J.dim

    def test_three_variables(self):
        assert facets(maximal_ideal_power(3, 2)) == [((1, 1, 1), 2)]
        assert facets(pure_powers((2, 3, 5))) == [((15, 10, 6), 30)]


class TestClosure:
    def test_examples(self):
        assert integral_closure(I((2, 0), (0, 2))) == M2
        assert integral_closure(I((3, 0), (0, 2))) == I((3, 0), (2, 1), (0, 2))
        assert integral_closure(M2) == M2

    def test_is_integrally_closed(self):
        assert is_integrally_closed(M2)
        assert not is_integrally_closed(I((2, 0), (0, 2)))
        assert not is_integrally_closed(pure_powers((2, 2)))

    def test_corpus_matches_bruteforce(self, corpus):
        for J in corpus:
            assert sorted(integral_closure(J).gens) == closure_bruteforce(J.gens)

    def test_three_variable_bruteforce(self):
        for J in [pure_powers((2, 2, 2)), I((3, 0, 0), (0, 2, 0), (0, 0, 2), (1, 1, 1)), maximal_ideal_power(3, 2)]:
            assert sorted(integral_closure(J).gens) == closure_bruteforce(J.gens, max_k=6)

    @given(artinian_ideals())
    def test_extensive_idempotent_boxed(self, J):
        cl = integral_closure(J)
        assert all(contains(cl, g) for g in J.gens)
        assert integral_closure(cl) == cl
        upper = bounding_box(J)
        assert all(divides(g, upper) for g in cl.gens)


class TestRees:
    def test_examples(self):
        assert rees_valuations(I((3, 0), (0, 2))) == [((2, 3), 6)]
        for ell in range(1, 5):
            assert rees_valuations(pure_powers((ell,) * 3)) == [((1, 1, 1), ell)]
        assert rees_valuations(M2) == [((1, 1), 2)]

    @given(st.lists(st.integers(1, 6), min_size=2, max_size=3))
    def test_complete_intersection_equal_orders(self, beta):
        J = pure_powers(beta)
        (rho, r), = rees_valuations(J)
        assert all(ord(rho, g) == r for g in J.gens)
