import pytest

from sympow.exceptions import PreconditionError, RingError, RingMismatchError
from sympow.polyring import CoefficientField, MonomialOrder, OrderKind, parse_poly, parse_ring


def test_print_parse_fixed_point(xyz):
    for text in ("2xz + y^2", "x^2 - 1", "-x", "1/2x", "x*y*z - 3/4y^3 + z"):
        p = parse_poly(xyz, text)
        assert parse_poly(xyz, str(p)) == p


def test_format(xyz):
    assert str(parse_poly(xyz, "x^2 - 1")) == "x^2 - 1"
    assert str(parse_poly(xyz, "-x")) == "-x"
    assert str(parse_poly(xyz, "1/2x")) == "1/2*x"
    assert str(parse_poly(xyz, "2xz + y^2")) == "y^2 + 2*x*z"
    assert str(xyz.zero()) == "0"


def test_prime_field_prints_symmetric():
    R = parse_ring("Fp(7)[x]")
    assert str(parse_poly(R, "6x")) == "-x"


def test_field_validation():
    with pytest.raises(ValueError):
        CoefficientField.prime(4)
    with pytest.raises(ValueError):
        CoefficientField.prime(2)
    assert CoefficientField.prime(32003).modulus == 32003


def test_order_parse():
    assert MonomialOrder.parse("lex") == MonomialOrder.lex()
    assert MonomialOrder.parse("elim(2)").kind == OrderKind.ELIMINATION
    with pytest.raises(ValueError):
        MonomialOrder.parse("foo")


def test_inspection(xyz):
    p = parse_poly(xyz, "x^2y + z^3")
    assert p.degree() == 3
    assert p.is_homogeneous()
    assert not parse_poly(xyz, "x + 1").is_homogeneous()
    assert parse_poly(xyz, "xyz").is_monomial()
    assert xyz.zero().degree() == -1
    assert p.variables_used() == (0, 1, 2)


def test_arithmetic(xyz):
    x, y, z = xyz.gens()
    assert (x + y) * (x - y) == x ** 2 - y ** 2
    assert 2 * x - x == x
    assert (x + 1) ** 0 == 1
    with pytest.raises(PreconditionError):
        x ** -1


def test_exact_divide(xyz):
    x, y, _ = xyz.gens()
    assert (x ** 2 - y ** 2).exact_divide(x - y) == x + y
    assert (x ** 2 + 1).exact_divide(x) is None
    with pytest.raises(ZeroDivisionError):
        x.exact_divide(xyz.zero())


def test_substitute(xyz):
    x, y, z = xyz.gens()
    assert (x + y).substitute([x ** 2, y ** 2, z]) == x ** 2 + y ** 2
    assert (x * y).substitute([y, x, z]) == x * y
    with pytest.raises(PreconditionError):
        x.substitute([x, y])


def test_ring_mismatch(xy):
    other = parse_ring("QQ[x,z]")
    with pytest.raises(RingMismatchError):
        xy.gen("x") + other.gen("x")
    with pytest.raises(RingError):
        xy.gen("z")


def test_ring_helpers(xy):
    extended = parse_ring("QQ[t,x]").extend("t")
    assert extended.variables == ("t_", "t", "x")
    assert xy.monomial((1, 2)) == parse_poly(xy, "xy^2")
    with pytest.raises(PreconditionError):
        xy.monomial((1, 2, 3))
    assert xy.same_ring(xy.with_order(MonomialOrder.lex()))


def test_equality_and_hash(xy):
    assert parse_poly(xy, "xy") == parse_poly(xy, "yx")
    assert hash(parse_poly(xy, "x + y")) == hash(parse_poly(xy, "y + x"))
    assert len({parse_poly(xy, "x"), parse_poly(xy, "1*x")}) == 1
