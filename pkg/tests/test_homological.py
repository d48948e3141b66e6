import pytest

from sympow import fixtures
from sympow.exceptions import PreconditionError
from sympow.homological import (
    StrongCM,
    betti_numerator,
    depth,
    hilbert_function,
    hilbert_numerator,
    numerator_coefficients,
    predicates,
    resolve,
    staircase_count,
)
from sympow.ideal import Ideal, power


def test_hankel_resolution(hankel):
    resolution = resolve(hankel)
    assert resolution.ranks == [1, 3, 2]
    assert resolution.pd == 2
    assert resolution.betti_table() == {0: {0: 1}, 1: {2: 3}, 2: {3: 2}}
    assert resolution.euler_characteristic() == 0
    assert resolution.is_minimal()
    assert resolution.is_complex()


def test_first_differential_generates_ideal(hankel):
    resolution = resolve(hankel)
    row = resolution.differential(1)[0]
    assert Ideal(row, ring=hankel.ring) == hankel
    with pytest.raises(PreconditionError):
        resolution.differential(3)


def test_koszul_complex(xyz):
    resolution = resolve(Ideal.irrelevant(xyz))
    assert resolution.ranks == [1, 3, 3, 1]
    assert resolution.rows() == [[1, 3, 3, 1]]
    assert "total:" in resolution.format_table()


def test_pentagon_betti_numbers():
    resolution = resolve(fixtures.pentagon())
    assert resolution.ranks == [1, 5, 5, 1]
    assert resolution.pd == 3
    assert resolution.is_complex()


def test_resolve_rejects_bad_input(xy):
    with pytest.raises(PreconditionError):
        resolve(Ideal.parse(xy, ["x + 1"]))
    with pytest.raises(PreconditionError):
        resolve(Ideal.unit(xy))


def test_hankel_predicates(hankel):
    flags = predicates(hankel)
    assert flags.perfect
    assert flags.cohen_macaulay
    assert (flags.height, flags.mu, flags.pd) == (2, 3, 2)
    assert flags.almost_complete_intersection
    assert not flags.complete_intersection
    assert flags.strongly_cm_certified == StrongCM.CRITERION_I
    assert flags.gorenstein_type == 2


def test_macaulay_curve_is_not_cm():
    flags = predicates(fixtures.macaulay_curve())
    assert (flags.mu, flags.depth, flags.dim) == (4, 1, 2)
    assert not flags.cohen_macaulay
    assert flags.strongly_cm_certified == StrongCM.UNKNOWN


def test_complete_intersection(xyz):
    flags = predicates(Ideal.parse(xyz, ["x", "y^2"]))
    assert flags.complete_intersection
    assert flags.strongly_cm_certified == StrongCM.CRITERION_I


def test_tetrahedron_depth(tetrahedron):
    assert depth(tetrahedron) == 2


@pytest.mark.slow
def test_tetrahedron_power_depths(tetrahedron):
    assert depth(power(tetrahedron, 2)) == 1
    assert depth(power(tetrahedron, 3)) == 0


def test_hilbert_numerator_matches_betti(hankel):
    numerator = hilbert_numerator(hankel)
    assert numerator_coefficients(numerator) == [1, 0, -3, 2]
    assert numerator == betti_numerator(resolve(hankel))


def test_hilbert_function_counts_standard_monomials(hankel, tetrahedron):
    for I in (hankel, tetrahedron):
        numerator = hilbert_numerator(I)
        for degree in range(6):
            assert hilbert_function(numerator, I.ring.ngens, degree) == staircase_count(I, degree)
    # twisted cubic: 3t + 1
    assert staircase_count(hankel, 3) == 10
