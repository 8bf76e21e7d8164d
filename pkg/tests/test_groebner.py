import itertools
import random

import pytest
from hypothesis import assume, given, strategies as st

from partruth.errors import ResourceLimitExceeded
from partruth.groebner import (Ideal, elimination_ideal, groebner_basis, ideal_intersection,
                               ideal_membership, ideal_quotient, ideals_equal, is_trivial,
                               s_polynomial, saturation)
from partruth.limits import resource_limits
from partruth.polyring import MonomialOrder, Ring, normal_form

from conftest import bounded_degree

R3 = Ring(("x", "y", "z"))
LEX = MonomialOrder.lex()
GREVLEX = MonomialOrder.grevlex()
CIRCLES = Ideal.parse(("u", "v", "m", "n"), ["u^2 + v^2 - 3", "(u - 2)^2 + v^2 - 3",
                                             "m^2 + n^2 - 3", "(m - 2)^2 + n^2 - 3"])

ideals = st.lists(bounded_degree(R3), min_size=1, max_size=3).map(
    lambda gens: Ideal(R3, tuple(gens)))
orders = st.sampled_from([LEX, GREVLEX, MonomialOrder.block(["x"], "grevlex", "grevlex")])


def strs(x):
    return [str(g) for g in (x.generators if isinstance(x, Ideal) else x.elements)]


def assert_groebner(gb):
    """Every S-polynomial reduces to zero and the basis is reduced."""
    G = list(gb.elements)
    for f, g in itertools.combinations(G, 2):
        assert normal_form(s_polynomial(f, g, gb.order), G, gb.order).is_zero
    leads = [g.with_order(gb.order).leading_monomial for g in G]
    for i, g in enumerate(G):
        g = g.with_order(gb.order)
        assert g.leading_coefficient == 1
        for j, lm in enumerate(leads):
            if i != j:
                for m, _ in g.terms:
                    assert not all(a <= b for a, b in zip(lm, m))
    assert leads == sorted(leads, key=gb.order.key(gb.ring))


def power_member(f, g, I, bound=10):
    h = g
    for _ in range(bound + 1):
        if ideal_membership(h, I):
            return True
        h = h * f
    return False


class TestExamples:
    def test_single_generator(self):
        assert strs(groebner_basis(Ideal.parse(["x"], ["x^2 - 2"]), LEX)) == ["x^2 - 2"]

    def test_coprime_pair_stays(self):
        assert sorted(strs(groebner_basis(Ideal.parse(R3, ["x*y", "x*z"]), LEX))) == \
            ["x*y", "x*z"]

    def test_linear_system(self):
        assert strs(groebner_basis(Ideal.parse(["x", "y"], ["x - y", "x + y"]), LEX)) == \
            ["y", "x"]

    def test_zero_and_unit_ideals(self):
        assert groebner_basis(Ideal(R3, ())).elements == ()
        gb = groebner_basis(Ideal.parse(R3, ["x", "x - 1"]))
        assert gb.is_unit and strs(gb) == ["1"]

    def test_circles_basis(self):
        assert sorted(strs(groebner_basis(CIRCLES))) == ["m - 1", "n^2 - 2", "u - 1", "v^2 - 2"]

    def test_membership(self):
        I = Ideal.parse(R3, ["x"])
        assert ideal_membership(R3.parse("x"), I)
        assert not ideal_membership(R3.parse("y"), I)
        assert not ideal_membership(CIRCLES.ring.parse("u*n - v*m + 2*v"), CIRCLES)

    def test_triviality(self):
        assert is_trivial(Ideal.parse(["x"], ["x", "x - 1"]))
        assert not is_trivial(Ideal.parse(["x"], ["x^2 + 1"]))
        assert not is_trivial(CIRCLES)

    def test_elimination(self):
        assert strs(elimination_ideal(Ideal.parse(["x", "y"], ["x - y", "y - 1"]), ["y"])) \
            == ["y - 1"]
        assert elimination_ideal(Ideal.parse(["x", "y"], ["x*y"]), ["x"]).generators == ()
        two = Ideal.parse(["u", "v"], ["u^2 + v^2 - 3", "(u - 2)^2 + v^2 - 3"])
        assert strs(elimination_ideal(two, ["v"])) == ["v^2 - 2"]

    def test_elimination_to_constants(self):
        assert strs(elimination_ideal(Ideal.parse(["x"], ["x", "x - 1"]), [])) == ["1"]
        assert elimination_ideal(Ideal.parse(["x"], ["x"]), []).generators == ()

    def test_saturation(self):
        xy = ("x", "y")
        assert strs(saturation(Ideal.parse(xy, ["x*y"]), R3.parse("y").to_ring(Ring(xy)))) \
            == ["x"]
        ring = Ring(xy)
        assert strs(saturation(Ideal.parse(xy, ["x"]), ring.parse("y"))) == ["x"]
        assert strs(saturation(Ideal.parse(xy, ["x^2"]), ring.parse("x"))) == ["1"]

    def test_quotient(self):
        ring = Ring(("x", "y"))
        assert strs(ideal_quotient(Ideal.parse(ring, ["x"]), ring.parse("x"))) == ["1"]
        assert strs(ideal_quotient(Ideal.parse(ring, ["x*y"]), ring.parse("y"))) == ["x"]
        assert strs(ideal_quotient(Ideal.parse(ring, ["x"]), ring.parse("y"))) == ["x"]

    def test_intersection(self):
        ring = Ring(("x", "y"))
        I = ideal_intersection(Ideal.parse(ring, ["x"]), Ideal.parse(ring, ["y"]))
        assert strs(I) == ["x*y"]

    def test_resource_limit_is_reported(self):
        I = Ideal.parse(("a", "b", "c", "d"), ["a^3*b - c^2*d + 7", "b^3*c - a*d^2 - 1",
                                               "c^3*d - a^2*b + 2", "d^3*a - b*c^2 - 3"])
        with pytest.raises(ResourceLimitExceeded):
            with resource_limits(max_basis_size=3):
                groebner_basis(I, LEX)

    def test_fixture_bases_are_groebner(self):
        assert_groebner(groebner_basis(CIRCLES))
        assert_groebner(groebner_basis(CIRCLES, LEX))


class TestProperties:
    @given(ideals, orders)
    def test_s_polynomials_reduce_to_zero(self, I, order):
        assert_groebner(groebner_basis(I, order))

    @given(ideals, orders, st.randoms(use_true_random=False))
    def test_invariant_under_permutation_and_scaling(self, I, order, rnd):
        gens = list(I.generators)
        rnd.shuffle(gens)
        gens = [g * rnd.choice([-3, 2, 5, -1]) for g in gens]
        assert groebner_basis(Ideal(R3, tuple(gens)), order).elements == \
            groebner_basis(I, order).elements

    @given(ideals)
    def test_generators_are_members(self, I):
        gb = groebner_basis(I)
        for g in I.generators:
            assert gb.contains(g)

    @given(ideals, st.sampled_from([["x"], ["y", "z"], ["z"], ["x", "z"]]))
    def test_elimination_soundness(self, I, keep):
        E = elimination_ideal(I, keep)
        for g in E.generators:
            assert g.support() <= set(keep)
            assert ideal_membership(g, I)

    @given(ideals, bounded_degree(R3, degree=2, max_terms=2))
    def test_saturation_soundness(self, I, f):
        assume(not f.is_zero)
        S = saturation(I, f)
        for g in S.generators:
            assert power_member(f, g, I)
        for h in I.generators:
            assert ideal_membership(h, S)

    @given(ideals, bounded_degree(R3, degree=2, max_terms=2))
    def test_quotient_soundness(self, I, f):
        assume(not f.is_zero)
        Q = ideal_quotient(I, f)
        for g in Q.generators:
            assert ideal_membership(f * g, I)
        for h in I.generators:
            assert ideal_membership(h, Q)

    @given(ideals, ideals)
    def test_intersection_contains_products(self, I, J):
        K = ideal_intersection(I, J)
        for a in I.generators[:2]:
            for b in J.generators[:2]:
                assert ideal_membership(a * b, K)
        for g in K.generators:
            assert ideal_membership(g, I) and ideal_membership(g, J)

    def test_deterministic_across_runs(self):
        rnd = random.Random(7)
        ring = R3
        gens = []
        for _ in range(3):
            d = {}
            for _ in range(3):
                m = tuple(rnd.randint(0, 2) for _ in range(3))
                d[m] = rnd.randint(-4, 4)
            gens.append(ring.zero() + type(ring.one())(ring, d))
        I = Ideal(ring, tuple(g for g in gens if not g.is_zero))
        a = groebner_basis(I, LEX).elements
        assert ideals_equal(I, Ideal(ring, a))
        assert groebner_basis(Ideal(ring, a), LEX).elements == a
