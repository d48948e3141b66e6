import pytest

from sympow.exceptions import ParseError, RingError
from sympow.polyring import parse_poly, parse_ring
from sympow.utils.parser import RingText, parse_ring_text, split_identifier, split_top_level, tokenize


def test_ring_text():
    assert parse_ring_text("Fp(7)[a,b]") == RingText("Fp", 7, ("a", "b"))
    assert parse_ring_text("QQ[x, y, z]") == RingText("QQ", None, ("x", "y", "z"))


def test_ring_errors():
    with pytest.raises(RingError):
        parse_ring("Fp(4)[x]")
    with pytest.raises(RingError):
        parse_ring("Fp(2)[x]")
    with pytest.raises(RingError):
        parse_ring("QQ[x,x]")
    with pytest.raises(ParseError) as info:
        parse_ring("RR[x]")
    assert info.value.position == 0
    with pytest.raises(ParseError):
        parse_ring("QQ[x,y")


def test_tokenize_rejects_stray_character():
    with pytest.raises(ParseError) as info:
        tokenize("x$y")
    assert info.value.position == 1


def test_split_identifier():
    assert split_identifier("yzw", ["x", "y", "z", "w"]) == [1, 2, 3]
    assert split_identifier("xyx", ["x", "xy", "y"]) == [1, 0]
    assert split_identifier("x2", ["x", "y"]) is None


def test_juxtaposition():
    R = parse_ring("QQ[x,y,z,w]")
    assert parse_poly(R, "yzw") == parse_poly(R, "y*z*w")
    assert parse_poly(R, "2xz") == parse_poly(R, "2*x*z")
    assert parse_poly(R, "x^2y") == parse_poly(R, "x^2*y")
    assert parse_poly(R, "(x+1)(x-1)") == parse_poly(R, "x^2 - 1")


def test_exponent_binds_to_last_variable():
    R = parse_ring("QQ[x,y,z,w]")
    assert parse_poly(R, "xy^2") == parse_poly(R, "x*y^2")
    assert parse_poly(R, "yw^2") == parse_poly(R, "y*w^2")
    assert parse_poly(R, "2xz^2 - y^2w") == parse_poly(R, "2*x*z^2 - y^2*w")
    assert parse_poly(R, "xyz^0") == parse_poly(R, "x*y")
    S = parse_ring("QQ[x1,x2]")
    assert parse_poly(S, "x1x2^3") == parse_poly(S, "x1*x2^3")


def test_unknown_variable_position():
    R = parse_ring("QQ[x,y]")
    with pytest.raises(ParseError, match="unknown variable") as info:
        parse_poly(R, "x + q")
    assert info.value.position == 4


def test_malformed_input():
    R = parse_ring("QQ[x,y]")
    with pytest.raises(ParseError, match="malformed exponent"):
        parse_poly(R, "x^y")
    with pytest.raises(ParseError, match="malformed exponent"):
        parse_poly(R, "x^")
    with pytest.raises(ParseError, match="division by zero"):
        parse_poly(R, "1/0 x")
    with pytest.raises(ParseError, match="empty polynomial"):
        parse_poly(R, "   ")
    with pytest.raises(ParseError):
        parse_poly(R, "x +")


def test_coefficient_outside_prime_field():
    R = parse_ring("Fp(7)[x]")
    with pytest.raises(ParseError, match="not in Fp"):
        parse_poly(R, "1/7 x")
    assert parse_poly(R, "8x") == parse_poly(R, "x")


def test_split_top_level():
    assert split_top_level("(x+y)*(x-y), x^2") == [(0, "(x+y)*(x-y)"), (13, "x^2")]
    assert split_top_level("f(a, b)") == [(0, "f(a, b)")]
    with pytest.raises(ParseError, match="empty list entry"):
        split_top_level("x, , y")
