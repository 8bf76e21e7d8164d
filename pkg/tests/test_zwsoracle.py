import random

import pytest

from partruth.classifier import Statement, classify, generally_true_test
from partruth.errors import NotIndependentError, NotZeroDimensionalError
from partruth.groebner import Ideal, ideals_equal
from partruth.polyring import Ring
from partruth.zwsoracle import (ZeroDivisorStatus, extend_to_function_field, radical,
                                radical_zero_dimensional, zero_divisor_status, zws_status,
                                zws_status_by_saturation, zws_test)

from conftest import random_statement_data

XYZ = Ring(("x", "y", "z"))
TRIANGLES_RING = ("u1", "u2", "x1", "x2", "x3", "x4", "x5", "x6")
TRIANGLES = Ideal.parse(TRIANGLES_RING, [
    "x5^2 + x6^2 - 1", "(x5 - 1)^2 + x6^2 - 1",
    "(x1 - u1)^2 + (x2 - u2)^2 - (u1 - 1)^2 - u2^2",
    "(x1 - 1)^2 + x2^2 - (u1 - 1)^2 - u2^2",
    "(x3^2 + x4^2) - (u1^2 + u2^2)", "(x3 - u1)^2 + (x4 - u2)^2 - (u1^2 + u2^2)"])
TRIANGLES_THESIS = TRIANGLES.ring.parse("(x5 - x3)^2 + (x6 - x4)^2 - (x1 - u1)^2 - (x2 - u2)^2")
CIRCLES = Ideal.parse(("u", "v", "m", "n"), ["u^2 + v^2 - 3", "(u - 2)^2 + v^2 - 3",
                                             "m^2 + n^2 - 3", "(m - 2)^2 + n^2 - 3"])
CIRCLES_THESIS = CIRCLES.ring.parse("u*n - v*(m - 2)")
XY_X2 = Ideal.parse(XYZ, ["x*y", "x^2"])


def basis_strs(E):
    return sorted(str(g) for g in E.basis.elements)


class TestExtension:
    def test_generators_already_a_basis(self):
        E = extend_to_function_field(XY_X2, ["z"])
        assert E.parameters == ("z",) and E.main_vars == ("x", "y")
        assert basis_strs(E) == ["x*y", "x^2"]

    def test_leading_coefficient_recorded(self):
        ring = Ring(("x", "z"))
        E = extend_to_function_field(Ideal.parse(ring, ["z*x - 1"]), ["z"])
        assert basis_strs(E) == ["x*z - 1"]
        assert [str(c) for c in E.leading_coefficients] == ["z"]
        # x - 1/z is in the extension: z * (x - 1/z) = z*x - 1
        assert E.contains(ring.parse("z*x - 1"))
        assert not E.contains(ring.parse("x"))

    def test_example_is_zero_dimensional_with_six_minimal_elements(self):
        E = extend_to_function_field(TRIANGLES, ["u1", "u2"])
        assert len(E.minimal_basis()) == 6
        for g in E.basis.elements:
            assert not g.support() <= {"u1", "u2"}

    def test_dependent_parameters_rejected(self):
        with pytest.raises(NotIndependentError):
            extend_to_function_field(Ideal.parse(XYZ, ["x*y", "x*z"]), ["x", "y"])

    @pytest.mark.parametrize("H, Y", [(TRIANGLES, ["u1", "u2"]), (CIRCLES, []), (XY_X2, ["z"])])
    def test_original_generators_reduce_to_zero(self, H, Y):
        E = extend_to_function_field(H, Y)
        for h in H.generators:
            assert E.normal_form(h).is_zero


class TestRadical:
    def test_positive_dimensional_extension(self):
        E = extend_to_function_field(XY_X2, ["z"])
        with pytest.raises(NotZeroDimensionalError):
            radical_zero_dimensional(E)
        assert basis_strs(radical(E)) == ["x"]

    def test_squarefree_generator_unchanged(self):
        E = extend_to_function_field(Ideal.parse(("x",), ["x^2 - 2"]), [])
        assert basis_strs(radical_zero_dimensional(E)) == ["x^2 - 2"]

    def test_squares_removed(self):
        E = extend_to_function_field(Ideal.parse(("x", "y"), ["x^2", "y^2"]), [])
        assert basis_strs(radical_zero_dimensional(E)) == ["x", "y"]

    def test_parameters_in_eliminant(self):
        ring = Ring(("x", "s"))
        E = extend_to_function_field(Ideal.parse(ring, ["(x - s)^2*(x + 1)"]), ["s"])
        R = radical_zero_dimensional(E)
        assert R.contains(ring.parse("(x - s)*(x + 1)"))
        assert not R.contains(ring.parse("x - s"))

    @pytest.mark.parametrize("H, Y", [(TRIANGLES, ["u1", "u2"]), (CIRCLES, []),
                                      (Ideal.parse(("x", "y"), ["x^2", "y^3"]), [])])
    def test_idempotent(self, H, Y):
        once = radical_zero_dimensional(extend_to_function_field(H, Y))
        twice = radical_zero_dimensional(once)
        assert once.basis.elements == twice.basis.elements

    def test_radical_contains_original(self):
        R = radical_zero_dimensional(extend_to_function_field(TRIANGLES, ["u1", "u2"]))
        for h in TRIANGLES.generators:
            assert R.contains(h)


class TestZeroDivisors:
    def radical_x(self):
        return radical(extend_to_function_field(XY_X2, ["z"]))

    def test_regular(self):
        assert zero_divisor_status(XYZ.parse("y"), self.radical_x()) is ZeroDivisorStatus.REGULAR

    def test_zero(self):
        assert zero_divisor_status(XYZ.parse("x"), self.radical_x()) is ZeroDivisorStatus.ZERO

    def test_example_thesis_is_a_zero_divisor(self):
        R = radical(extend_to_function_field(TRIANGLES, ["u1", "u2"]))
        assert zero_divisor_status(TRIANGLES_THESIS, R) is ZeroDivisorStatus.ZERODIVISOR

    @pytest.mark.parametrize("H, f, Y, expected", [
        (TRIANGLES, TRIANGLES_THESIS, ["u1", "u2"], True),
        (XY_X2, XYZ.parse("y"), ["z"], False),
        (CIRCLES, CIRCLES_THESIS, [], True),
    ])
    def test_zws(self, H, f, Y, expected):
        assert zws_test(H, f, Y) is expected

    @pytest.mark.parametrize("H, f, Y", [
        (TRIANGLES, TRIANGLES_THESIS, ["u1", "u2"]),
        (XY_X2, XYZ.parse("y"), ["z"]),
        (XY_X2, XYZ.parse("y"), ["y", "z"]),
        (CIRCLES, CIRCLES_THESIS, []),
        (Ideal.parse(("x", "y"), ["x*y"]), Ring(("x", "y")).parse("y"), ["x"]),
    ])
    def test_saturation_route_agrees(self, H, f, Y):
        assert zws_status(H, f, Y) is zws_status_by_saturation(H, f, Y)


def _random_cases(seed, count):
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        ring, hyps, f = random_statement_data(rng)
        report = classify(Statement(ring, hyps, f))
        if report.dimension >= 0:
            out.append((Ideal(ring, hyps), f, report.independent_set_used))
    return out


RANDOM_CASES = _random_cases(11, 40)


@pytest.mark.parametrize("H, f, Y", RANDOM_CASES)
def test_zero_status_iff_generally_true(H, f, Y):
    zero = zws_status(H, f, Y) is ZeroDivisorStatus.ZERO
    assert zero == generally_true_test(H, f, Y)[0]


@pytest.mark.parametrize("H, f, Y", RANDOM_CASES)
def test_radical_and_saturation_routes_agree(H, f, Y):
    assert zws_status(H, f, Y) is zws_status_by_saturation(H, f, Y)


@pytest.mark.parametrize("H, f, Y", RANDOM_CASES[:15])
def test_random_radical_idempotent(H, f, Y):
    once = radical(extend_to_function_field(H, Y))
    assert radical(once).basis.elements == once.basis.elements
    assert ideals_equal(once.ideal(), radical_zero_dimensional(once).ideal())
