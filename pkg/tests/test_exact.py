"""
Tests for exact scalars and the expression parser
"""
from fractions import Fraction

import pytest

from src.exact import ParamSpace, Scalar, parse_expr, scalar_add, scalar_eval, scalar_mul
from src.exceptions import (
    ExponentError,
    ExpressionSyntaxError,
    MissingParameterError,
    ParamSpaceMismatchError,
    UnknownIdentifierError,
)

SPACE = ParamSpace(["a", "b"])


def parse(text: str) -> Scalar:
    return parse_expr(text, SPACE)


class TestParamSpace:
    def test_rejects_invalid_identifier(self):
        with pytest.raises(ValueError):
            ParamSpace(["1a"])

    def test_rejects_duplicates(self):
        with pytest.raises(ValueError):
            ParamSpace(["a", "a"])

    def test_membership_and_index(self):
        assert "b" in SPACE
        assert "c" not in SPACE
        assert SPACE.index("b") == 1
        assert SPACE.extended(["c"]).names == ("a", "b", "c")

    def test_unknown_variable(self):
        with pytest.raises(KeyError):
            SPACE.var("c")


class TestScalar:
    def test_canonical_form_drops_zero_terms(self):
        a, b = SPACE.variables()
        assert (a + b - a).terms == b.terms
        assert (a - a).is_zero()

    def test_printing_order(self):
        assert str(parse("(a + 1)^2")) == "a^2 + 2*a + 1"
        assert str(parse("b - a")) == "-a + b"
        assert str(parse("1/2*a - 3/4")) == "1/2*a - 3/4"
        assert str(SPACE.zero()) == "0"

    def test_rational_coefficients_are_reduced(self):
        assert parse("3/6") == Fraction(1, 2)
        assert parse("2/4*a") == parse("1/2*a")

    def test_equality_with_rationals(self):
        assert SPACE.const(3) == 3
        assert parse("a") != 1

    def test_space_mismatch(self):
        other = ParamSpace(["c"])
        with pytest.raises(ParamSpaceMismatchError):
            SPACE.var("a") + other.var("c")

    def test_division_only_by_constants(self):
        assert parse("4*a") / 2 == parse("2*a")
        with pytest.raises(ZeroDivisionError):
            parse("a") / parse("b")
        with pytest.raises(ZeroDivisionError):
            parse("a") / 0

    def test_substitute_is_partial(self):
        value = parse("a*b + b^2").substitute({"a": 2})
        assert value == parse("2*b + b^2")

    def test_evaluate_requires_every_parameter(self):
        with pytest.raises(MissingParameterError) as excinfo:
            parse("a + b").evaluate({"a": 1})
        assert excinfo.value.missing == ["b"]
        assert parse("a + b").evaluate({"a": 1, "b": Fraction(1, 3)}) == Fraction(4, 3)

    @pytest.mark.parametrize("point", [{"a": 0, "b": 0}, {"a": 2, "b": -1}, {"a": Fraction(1, 2), "b": Fraction(-3, 7)}])
    def test_evaluation_is_a_ring_homomorphism(self, point):
        x, y = parse("a^2 - 3*b"), parse("1/2*a*b + 1")
        assert scalar_eval(scalar_add(x, y), point) == scalar_eval(x, point) + scalar_eval(y, point)
        assert scalar_eval(scalar_mul(x, y), point) == scalar_eval(x, point) * scalar_eval(y, point)
        assert scalar_eval(x, point).degree() <= 0

    def test_normalized(self):
        assert parse("2*a - 4*b").normalized() == parse("a - 2*b")
        assert parse("-3*a^2 + b").normalized() == parse("a^2 - 1/3*b")

    def test_rebased(self):
        wide = ParamSpace(["x", "a", "b"])
        assert parse("a*b").rebased(wide) == parse_expr("a*b", wide)

    def test_degree_and_parameters(self):
        value = parse("a^3*b + 2")
        assert value.degree() == 4
        assert value.parameters() == ["a", "b"]
        assert SPACE.zero().degree() == -1


class TestParser:
    def test_precedence(self):
        assert parse("1 + 2*3") == 7
        assert parse("-a^2") == -(parse("a") * parse("a"))
        assert parse("2^3") == 8
        assert parse("(a - b)*(a + b)") == parse("a^2 - b^2")

    def test_unknown_identifier_reports_column(self):
        with pytest.raises(UnknownIdentifierError) as excinfo:
            parse("a + z")
        assert excinfo.value.line == 1
        assert excinfo.value.column == 5

    @pytest.mark.parametrize("text", ["a^-1", "a^b", "a^(2)"])
    def test_exponent_must_be_literal(self, text):
        with pytest.raises(ExponentError):
            parse(text)

    @pytest.mark.parametrize("text", ["1/0", "(a + 1", "a $ 1", "2a", "a +", ""])
    def test_malformed_input(self, text):
        with pytest.raises(ExpressionSyntaxError):
            parse(text)

    def test_multiline_positions(self):
        with pytest.raises(UnknownIdentifierError) as excinfo:
            parse("a +\n  q")
        assert (excinfo.value.line, excinfo.value.column) == (2, 3)

    def test_shifted_error_keeps_type(self):
        error = UnknownIdentifierError("unknown identifier 'q'", 1, 3)
        moved = error.shifted(7, 10)
        assert isinstance(moved, UnknownIdentifierError)
        assert (moved.line, moved.column) == (7, 13)
