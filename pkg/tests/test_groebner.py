import pytest

from sympow.exceptions import GuardAbort, PreconditionError
from sympow.groebner import contains, groebner, macaulay_contains, normal_form, verify_certificate
from sympow.polyring import MonomialOrder, parse_poly, parse_polys, parse_ring
from sympow.utils.guards import guarded


def test_lex_basis(xy):
    gens = parse_polys(xy, ["x^2 + 2xy^2", "xy + 2y^3 - 1"])
    gb = groebner(gens, MonomialOrder.lex())
    assert list(gb.gens) == parse_polys(xy, ["x", "y^3 - 1/2"])
    assert verify_certificate(gb)


def test_grlex_basis(xy):
    gens = parse_polys(xy, ["x^3 - 2xy", "x^2y + x - 2y^2"])
    gb = groebner(gens, MonomialOrder.grlex())
    assert set(gb.gens) == set(parse_polys(xy, ["x^2", "xy", "y^2 - 1/2x"]))
    assert verify_certificate(gb)


def test_twisted_cubic_lex(xyz):
    gb = groebner(parse_polys(xyz, ["-x^2 + y", "-x^3 + z"]), MonomialOrder.lex())
    assert set(gb.gens) == set(parse_polys(xyz, ["x^2 - y", "xy - z", "xz - y^2", "y^3 - z^2"]))


def test_unit_and_zero(xy):
    x, _ = xy.gens()
    assert groebner([x, x - 1]).is_unit()
    assert groebner([], ring=xy).is_zero()
    with pytest.raises(PreconditionError):
        groebner([])


def test_prime_field_basis():
    R = parse_ring("Fp(5)[x,y]")
    gb = groebner(parse_polys(R, ["2x - y", "x + 2y"]))
    # over F_5 the two lines coincide
    assert len(gb) == 1
    assert verify_certificate(gb)


def test_membership(hankel):
    R = hankel.ring
    x3 = R.gen("x3")
    f = hankel.gens[0] * x3 + hankel.gens[2] * R.gen("x0")
    assert contains(hankel, f)
    assert contains(list(hankel.gens), f)
    assert not contains(hankel, R.gen("x1") ** 2)
    assert not normal_form(f, hankel.groebner())


def test_macaulay_oracle(xy):
    gens = parse_polys(xy, ["x^2", "y^2"])
    assert not macaulay_contains(gens, parse_poly(xy, "xy"))
    assert macaulay_contains(gens, parse_poly(xy, "x^2y + 3xy^2"))
    assert macaulay_contains(gens, xy.zero())
    with pytest.raises(PreconditionError):
        macaulay_contains(gens, parse_poly(xy, "x + 1"))


def test_degree_guard_on_input(xy):
    x, _ = xy.gens()
    with guarded(degree=3):
        with pytest.raises(GuardAbort) as info:
            groebner([x ** 4])
    assert info.value.guard == "degree"


def test_stats_recorded(hankel):
    gb = hankel.groebner()
    assert gb.stats.pairs_considered >= 0
    assert len(gb) == 3
