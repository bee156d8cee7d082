# tests/test_parser.py
import pytest

from monomial_intersection.algebra.core import Monomial, PrimeIdeal, format_ideal
from monomial_intersection.cli.parser import (
    parse_ideal,
    parse_ideal_with_names,
    parse_monomial,
    parse_prime,
    parse_vars,
    tokenize,
)
from monomial_intersection.utils.errors import IdealParseError


def test_indexed_names_fill_up_to_largest_index():
    ideal, names = parse_ideal_with_names("x1*x3^2")
    assert names == ("x1", "x2", "x3")
    assert ideal.generators == (Monomial((1, 0, 2)),)


def test_letters_keep_first_appearance_order():
    _, names = parse_ideal_with_names("(y*x, z)")
    assert names == ("y", "x", "z")


def test_juxtaposition_and_star_are_the_same():
    assert parse_ideal("xyz, x^2") == parse_ideal("x*y*z, x^2")


def test_explicit_vars_fix_dimension():
    ideal = parse_ideal("x2", parse_vars("4"))
    assert ideal.ambient_dim == 4
    assert parse_vars("x,y,z") == ("x", "y", "z")
    assert parse_vars("xyz") == ("x", "y", "z")


def test_unit_and_zero_ideal():
    names = ("x", "y")
    assert parse_ideal("1, x", names).is_unit()
    assert parse_ideal("(0)", names).is_zero()


def test_zero_ideal_without_vars_is_an_error():
    with pytest.raises(IdealParseError):
        parse_ideal("(0)")


def test_mixed_names_are_rejected():
    with pytest.raises(IdealParseError):
        parse_ideal("x1, y")


def test_unknown_variable_reports_position():
    with pytest.raises(IdealParseError) as exc:
        parse_ideal("x, w", ("x", "y"))
    assert exc.value.position == 3


def test_coefficients_and_garbage_are_rejected():
    with pytest.raises(IdealParseError):
        parse_ideal("2*x")
    with pytest.raises(IdealParseError):
        parse_ideal("x + y")
    with pytest.raises(IdealParseError):
        parse_ideal("(x, y")
    with pytest.raises(IdealParseError):
        parse_ideal("   ")


def test_tokenize_positions():
    toks = tokenize("x1^2*y")
    assert [(t.kind, t.text, t.pos) for t in toks] == [
        ("name", "x1", 0), ("op", "^", 2), ("num", "2", 3), ("op", "*", 4), ("name", "y", 5), ("end", "", 6),
    ]


def test_parse_monomial_and_prime():
    names = ("x", "y", "z")
    assert parse_monomial("x*z^2", names) == Monomial((1, 0, 2))
    with pytest.raises(IdealParseError):
        parse_monomial("x, y", names)
    assert parse_prime("(x,z)", names) == PrimeIdeal(3, frozenset({0, 2}))
    assert parse_prime("1,3", names) == PrimeIdeal(3, frozenset({0, 2}))
    with pytest.raises(IdealParseError):
        parse_prime("4", names)
    with pytest.raises(IdealParseError):
        parse_prime("x*y", names)


@pytest.mark.parametrize("text", [
    "x1^3*x2, x1^3*x3, x1^2*x2^2, x1^2*x2*x3, x1*x2^2*x3",
    "xy, xz, yz",
    "x^2, x*y, x*z, x*t, y*z*t",
])
def test_print_then_parse_gives_the_same_ideal(text):
    ideal, names = parse_ideal_with_names(text)
    assert parse_ideal(format_ideal(ideal, names), names) == ideal
