import pytest

from sympow.exceptions import GuardAbort, PreconditionError, RingMismatchError
from sympow.ideal import (
    Ideal,
    colon,
    colon_element,
    dimension,
    eliminate,
    height,
    intersect_all,
    is_saturated,
    krull_dimension,
    min_gens,
    saturate,
)
from sympow.polyring import parse_poly, parse_ring
from sympow.utils.guards import guarded


def ideal(ring, *texts):
    return Ideal.parse(ring, texts)


def test_operators(xy):
    X, Y = ideal(xy, "x"), ideal(xy, "y")
    assert X + Y == ideal(xy, "x", "y")
    assert X * Y == ideal(xy, "xy")
    assert X & Y == ideal(xy, "xy")
    assert ideal(xy, "x", "y") ** 2 == ideal(xy, "x^2", "xy", "y^2")
    assert X * Y <= X
    assert X + Y >= Y
    assert not X <= Y
    assert parse_poly(xy, "x^2y") in X


def test_power_domain(xy):
    with pytest.raises(PreconditionError):
        ideal(xy, "x") ** 0
    with guarded(degree=3):
        with pytest.raises(GuardAbort):
            ideal(xy, "x^2") ** 2


def test_zero_ideal_needs_ring():
    with pytest.raises(PreconditionError):
        Ideal([])


def test_ring_mismatch(xy):
    with pytest.raises(RingMismatchError):
        ideal(xy, "x") + ideal(parse_ring("QQ[x,z]"), "z")


def test_colon(xy):
    I = ideal(xy, "x^2", "xy")
    assert colon_element(I, xy.gen("x")) == ideal(xy, "x", "y")
    assert colon(I, Ideal.irrelevant(xy)) == ideal(xy, "x")
    # x + y is a nonzerodivisor modulo xy
    assert colon_element(ideal(xy, "xy"), parse_poly(xy, "x + y")) == ideal(xy, "xy")


def test_saturate(xy):
    I = ideal(xy, "x^2", "xy")
    saturated, s = saturate(I, Ideal.irrelevant(xy))
    assert saturated == ideal(xy, "x")
    assert s == 1
    assert not is_saturated(I)
    assert is_saturated(ideal(xy, "x"))


def test_intersect_all(xyz):
    primes = [ideal(xyz, "x", "y"), ideal(xyz, "x", "z"), ideal(xyz, "y", "z")]
    assert intersect_all(primes) == ideal(xyz, "xy", "xz", "yz")


def test_eliminate(xyz):
    I = ideal(xyz, "x - y", "y - z")
    assert eliminate(I, 1) == ideal(xyz, "y - z")
    with pytest.raises(PreconditionError):
        eliminate(I, 3)


def test_min_gens(xy):
    mu, gens = min_gens(ideal(xy, "x", "x^2", "xy", "y"))
    assert mu == 2
    assert set(gens) == {xy.gen("x"), xy.gen("y")}
    with pytest.raises(PreconditionError):
        min_gens(ideal(xy, "x + 1"))


def test_hankel_profile(hankel):
    profile = dimension(hankel)
    assert (profile.dim, profile.height, profile.mu) == (2, 2, 3)
    assert profile.ambient_dim == 4
    assert profile.predicates().perfect


def test_dimension_edge_cases(xyz):
    assert krull_dimension(Ideal.zero(xyz)) == 3
    assert height(Ideal.irrelevant(xyz)) == 3
    with pytest.raises(PreconditionError):
        krull_dimension(Ideal.unit(xyz))
    assert dimension(Ideal.zero(xyz)).mu == 0


def test_reduced_keeps_ideal(tetrahedron):
    assert tetrahedron.reduced() == tetrahedron
    assert not tetrahedron.is_unit()
    assert tetrahedron.is_homogeneous()
