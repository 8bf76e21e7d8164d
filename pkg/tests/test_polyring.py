from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from partruth.errors import ParseError, RingMismatchError
from partruth.polyring import (MAX_EXPONENT, MonomialOrder, Polynomial, Ring,
                               divide_exact, normal_form, parse_polynomial, poly_gcd,
                               squarefree_part)

from conftest import polynomials

R = Ring(("x", "y", "z"))
P = polynomials(R)


def p(text, ring=R):
    return parse_polynomial(text, ring)


class TestRing:
    def test_rejects_duplicates_and_bad_names(self):
        with pytest.raises(ValueError):
            Ring(("x", "x"))
        with pytest.raises(ValueError):
            Ring(("1x",))

    def test_extend_puts_new_names_first(self):
        assert R.extend("t").names == ("t", "x", "y", "z")

    def test_fresh_name_avoids_clashes(self):
        r = Ring(("t", "x"))
        assert r.fresh_name("t") not in r
        assert R.fresh_name("t") == "t"


class TestParsing:
    @pytest.mark.parametrize("text, expected", [
        ("u^2+v^2-3", "u^2 + v^2 - 3"),
        ("(u-2)^2 + v^2 - 3", "u^2 + v^2 - 4*u + 1"),
        ("-x", "-x"),
        ("1/2*x - 3/4", "1/2*x - 3/4"),
        ("x*y - y*x", "0"),
        ("2*(x+y)^2", "2*x^2 + 4*x*y + 2*y^2"),
    ])
    def test_canonical_printing(self, text, expected):
        ring = Ring(("u", "v", "x", "y"))
        assert str(parse_polynomial(text, ring)) == expected

    @pytest.mark.parametrize("text", ["x y", "2x", "x^-1", "x^y", "x +", "(x", "x ** 2",
                                      "w", "x^1.5", ""])
    def test_rejects_malformed(self, text):
        with pytest.raises(ParseError):
            p(text)

    def test_error_reports_position(self):
        with pytest.raises(ParseError) as info:
            p("x + * y")
        assert info.value.position is not None

    @given(P)
    def test_print_parse_roundtrip(self, f):
        assert p(str(f)) == f


class TestArithmetic:
    @given(P, P, P)
    def test_ring_axioms(self, a, b, c):
        assert a + b == b + a
        assert a * b == b * a
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a - a == R.zero()

    @given(P, st.integers(0, 3))
    def test_power_is_repeated_product(self, a, k):
        expected = R.one()
        for _ in range(k):
            expected = expected * a
        assert a ** k == expected

    def test_mixed_rings_rejected(self):
        with pytest.raises(RingMismatchError):
            p("x") + parse_polynomial("x", Ring(("x",)))

    def test_exponent_overflow(self):
        with pytest.raises(OverflowError):
            Polynomial(R, {(MAX_EXPONENT + 1, 0, 0): 1})

    def test_leading_term_depends_on_order(self):
        f = p("x*z^2 + y^3")
        assert f.leading_monomial == (0, 3, 0)        # grevlex: tie on degree, fewer z
        assert f.with_order(MonomialOrder.lex()).leading_monomial == (1, 0, 2)

    def test_block_order_compares_front_block_first(self):
        order = MonomialOrder.block(["z"], "grevlex", "grevlex")
        f = p("x^5 + z").with_order(order)
        assert f.leading_monomial == (0, 0, 1)

    def test_derivative_and_subs(self):
        f = p("x^3*y + 2*x")
        assert f.derivative("x") == p("3*x^2*y + 2")
        assert f.subs({"x": 2}) == p("8*y + 4")
        assert f.subs({"y": p("x")}) == p("x^4 + 2*x")

    def test_monic_and_primitive(self):
        f = p("2*x - 4/3")
        assert f.monic() == p("x - 2/3")
        assert f.primitive() == p("3*x - 2")
        assert f.integer_content() == Fraction(2, 3)


class TestDivision:
    @given(P, P)
    def test_exact_division_recovers_factor(self, a, b):
        if b.is_zero:
            return
        assert divide_exact(a * b, b) == a

    @given(P, P, P)
    def test_gcd_divides_and_contains_common_factor(self, a, b, c):
        if c.is_zero or (a.is_zero and b.is_zero):
            return
        g = poly_gcd(a * c, b * c)
        divide_exact(a * c, g)
        divide_exact(b * c, g)
        divide_exact(g, poly_gcd(c, c))

    def test_gcd_examples(self):
        assert poly_gcd(p("x^2 - y^2"), p("x^2 + 2*x*y + y^2")) == p("x + y")
        assert poly_gcd(p("x^2 + 1"), p("x + 1")) == R.one()

    def test_squarefree_part(self):
        assert squarefree_part(p("(x - y)^3 * (x + 1)"), "x") == p("x^2 - x*y + x - y")
        assert squarefree_part(p("y^2*(x^2 - 2)"), "x") == p("x^2 - 2")
        assert squarefree_part(p("x^2"), "x") == p("x")

    def test_normal_form_remainder_is_reduced(self):
        f = p("x^2*y + x*y^2 + y^2")
        G = [p("x*y - 1"), p("y^2 - 1")]
        r = normal_form(f, G, MonomialOrder.lex())
        assert r == p("x + y + 1")
