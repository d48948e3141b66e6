import asyncio

import pytest

from sympow import fixtures
from sympow.exceptions import PreconditionError, StrategyError
from sympow.ideal import Ideal
from sympow.monomial import MonomialIdeal, VarPrime
from sympow.polyring import parse_poly
from sympow.symbolic import (
    Justification,
    StrategyKind,
    SymbolicReport,
    SymbolicRequest,
    arigidity_scan,
    certify_witness,
    compare,
    create_strategy,
    get_available_strategies,
    localization_consistent,
    rigidity_scan,
    symbolic_power,
)
from sympow.utils.guards import guarded


def prime_intersection():
    return create_strategy("minimal-prime-intersection")


def test_registry():
    assert get_available_strategies() == sorted(k.value for k in StrategyKind)
    with pytest.raises(StrategyError, match="not found"):
        create_strategy("bogus")
    with pytest.raises(StrategyError, match="unknown justification"):
        create_strategy("saturation-at-irrelevant", justification="because")
    with pytest.raises(StrategyError):
        create_strategy("minimal-prime-intersection", justification="dim1-radical")
    with pytest.raises(StrategyError):
        create_strategy("user-element-saturation")


def test_saturation_needs_justification(three_edges):
    with pytest.raises(StrategyError, match="needs a justification"):
        compare(three_edges, 2, create_strategy("saturation-at-irrelevant"))


def test_three_edges_square(three_edges):
    report = compare(three_edges, 2, prime_intersection())
    assert report.equal is False
    assert str(report.witness) == "x*y*z"
    assert report.witness_degree == 3
    assert report.depth_positive is False
    assert report.justification == Justification.SQUAREFREE_MONOMIAL


def test_saturation_agrees_with_prime_intersection(three_edges):
    strategy = create_strategy("saturation-at-irrelevant", justification="dim1-radical")
    report = compare(three_edges, 2, strategy)
    assert report.equal is False
    assert str(report.witness) == "x*y*z"
    assert report.sat_exponent >= 1
    assert report.asserted == []
    assert symbolic_power(three_edges, 2, strategy) == symbolic_power(three_edges, 2, prime_intersection())


def test_element_saturation(three_edges):
    strategy = create_strategy("user-element-saturation", element="x + y + z")
    report = compare(three_edges, 2, strategy)
    assert report.equal is False
    assert report.witness_degree == 3
    assert report.justification == Justification.USER_OVERRIDE
    assert report.asserted

    with pytest.raises(StrategyError):
        compare(three_edges, 2, create_strategy("user-element-saturation", element="xy"))


def test_witness_certificates(three_edges):
    R = three_edges.ring
    new, outside, ordinary = (parse_poly(R, t) for t in ("xyz", "xy", "x^2y^2"))
    strategies = [
        prime_intersection(),
        create_strategy("saturation-at-irrelevant", justification="dim1-radical"),
        create_strategy("user-element-saturation", element="x + y + z"),
    ]
    for strategy in strategies:
        response = strategy.process(SymbolicRequest(ideal=three_edges, n=2))
        assert certify_witness(new, response), strategy.kind
        assert not certify_witness(outside, response), strategy.kind
        assert not certify_witness(ordinary, response), strategy.kind

    response = prime_intersection().process(SymbolicRequest(ideal=three_edges, n=2))
    assert len(response.components) == 3


def test_validity_checks(hankel, xy):
    with pytest.raises(StrategyError):
        compare(hankel, 2, prime_intersection())
    with pytest.raises(StrategyError, match="dim R/I = 1"):
        compare(hankel, 2, create_strategy("saturation-at-irrelevant", justification="dim1-saturated"))
    with pytest.raises(StrategyError):
        compare(Ideal.parse(xy, ["x + 1"]), 2, create_strategy("saturation-at-irrelevant", justification="user-override"))


def test_dim1_saturated_is_checked():
    I = fixtures.monomial_map(2)[0].base_ideal
    strategy = create_strategy("saturation-at-irrelevant", justification="dim1-saturated")
    note = strategy.ensure_valid(I)
    assert "I is m-saturated" in note.checked
    assert note.fully_checked


def test_unique_prime_is_recorded_as_asserted():
    F, _ = fixtures.polar_map()
    strategy = create_strategy("saturation-at-irrelevant", justification="unique-minimal-prime-dim1-homogeneous")
    report = compare(F.base_ideal, 2, strategy)
    assert report.equal is False
    assert "I has a unique minimal prime" in report.asserted


def test_exponent_domain(three_edges):
    with pytest.raises(PreconditionError):
        compare(three_edges, 0, prime_intersection())
    with pytest.raises(PreconditionError):
        rigidity_scan(three_edges, 1, prime_intersection())


def test_report_validation():
    with pytest.raises(ValueError):
        SymbolicReport(
            n=1,
            equal=False,
            strategy=StrategyKind.SATURATION,
            justification=Justification.DIM1_RADICAL,
        )


def test_report_json(three_edges):
    data = compare(three_edges, 2, prime_intersection()).model_dump(mode="json")
    assert data["witness"] == "x*y*z"
    assert data["strategy"] == "minimal-prime-intersection"


def test_scan(three_edges):
    scan = rigidity_scan(three_edges, 3, prime_intersection())
    assert [r.equal for r in scan.reports] == [True, False, False]
    assert scan.first_failure == 2
    assert scan.summary == "first failure n=2"


def test_concurrent_scan_matches_sequential(three_edges):
    sequential = rigidity_scan(three_edges, 3, prime_intersection())
    concurrent = rigidity_scan(three_edges, 3, prime_intersection(), concurrent=True)
    assert concurrent.model_dump(mode="json") == sequential.model_dump(mode="json")

    awaited = asyncio.run(arigidity_scan(three_edges, 3, prime_intersection()))
    assert awaited.summary == sequential.summary


def test_rigid_ideal(hankel):
    strategy = create_strategy("saturation-at-irrelevant", justification="locally-CI")
    scan = rigidity_scan(hankel, 2, strategy)
    assert scan.first_failure is None
    assert scan.summary == "rigid up to n=2"


def test_guard_abort_is_recorded_per_exponent(three_edges):
    with guarded(degree=3):
        scan = rigidity_scan(three_edges, 3, prime_intersection())
    assert [r.n for r in scan.reports] == [1, 2, 3]
    assert scan.reports[1].equal is None
    assert scan.reports[2].equal is None
    assert "degree" in scan.reports[1].error
    assert scan.first_failure is None
    assert "guard abort" in scan.summary
    assert 2 in scan.aborted


def test_power_contained_in_symbolic_power(tetrahedron):
    strategy = prime_intersection()
    for n in (1, 2):
        assert tetrahedron ** n <= symbolic_power(tetrahedron, n, strategy)


def test_tetrahedron_square_witness(tetrahedron):
    report = compare(tetrahedron, 2, prime_intersection())
    assert report.equal is False
    assert str(report.witness) == "x*y*z*w"
    assert report.depth_positive is True


def test_localization_commutes(three_edges):
    I = MonomialIdeal.from_ideal(three_edges)
    for P in (VarPrime(vars=(0, 1)), VarPrime(vars=(0, 1, 2))):
        for n in (1, 2, 3):
            assert localization_consistent(I, P, n)
    with pytest.raises(PreconditionError):
        localization_consistent(I, VarPrime(vars=(0,)), 2)
