from itertools import permutations

import pytest

from sympow.exceptions import GuardAbort, PreconditionError
from sympow.ideal import Ideal
from sympow.monomial import (
    GraphClass,
    GraphKind,
    MonomialIdeal,
    VarPrime,
    Verdict,
    all_four_vertex_graphs,
    classify_edges,
    classify_graph,
    in_variety,
    is_g_infinity,
    is_locally_ci,
    localize_at_monomial_prime,
    minimal_primes,
    minimalize,
    monomial_symbolic_power,
    prime_power,
    squarefree_or_none,
)
from sympow.polyring import parse_ring
from sympow.utils.guards import guarded


def test_minimalize():
    assert minimalize([(1, 1), (1, 0), (2, 0), (0, 1)]) == ((1, 0), (0, 1))


def test_of_minimalizes(xy):
    I = MonomialIdeal.parse(xy, ["x", "xy"])
    assert I.gens == ((1, 0),)
    assert I.mu() == 1


def test_from_ideal(xy):
    with pytest.raises(PreconditionError):
        MonomialIdeal.from_ideal(Ideal.parse(xy, ["x + y"]))
    assert squarefree_or_none(Ideal.parse(xy, ["x^2"])) is None
    assert squarefree_or_none(Ideal.parse(xy, ["xy"])) is not None


def test_minimal_primes(three_edges):
    I = MonomialIdeal.from_ideal(three_edges)
    primes = minimal_primes(I)
    assert [P.vars for P in primes] == [(0, 1), (0, 2), (1, 2)]
    assert I.height() == 2


def test_cover_guard(tetrahedron):
    I = MonomialIdeal.from_ideal(tetrahedron)
    with guarded(cover_variables=3):
        with pytest.raises(GuardAbort):
            minimal_primes(I)


def test_symbolic_square(three_edges):
    I = MonomialIdeal.from_ideal(three_edges)
    S = monomial_symbolic_power(I, 2)
    assert S.contains((1, 1, 1))
    assert not I.power(2).contains((1, 1, 1))
    assert I.power(2).to_ideal() <= S.to_ideal()


@pytest.mark.parametrize("n, witness", [(2, (1, 1, 1)), (3, (2, 2, 1))])
def test_symbolic_power_exceeds_power(three_edges, n, witness):
    I = MonomialIdeal.from_ideal(three_edges)
    assert monomial_symbolic_power(I, n).contains(witness)
    assert not I.power(n).contains(witness)


def test_localization(three_edges):
    I = MonomialIdeal.from_ideal(three_edges)
    P = VarPrime(vars=(0, 1))
    assert in_variety(I, P)
    assert localize_at_monomial_prime(I, P).gens == ((1, 0, 0), (0, 1, 0))
    assert not in_variety(I, VarPrime(vars=(0,)))


def test_locally_ci(three_edges, tetrahedron):
    assert is_locally_ci(MonomialIdeal.from_ideal(three_edges)) == (True, None)
    ok, witness = is_locally_ci(MonomialIdeal.from_ideal(tetrahedron))
    assert not ok
    assert witness == VarPrime(vars=(0, 1, 2))


def test_g_infinity(three_edges):
    assert is_g_infinity(MonomialIdeal.from_ideal(three_edges))
    R = parse_ring("QQ[x,y,z,w]")
    complete_graph = MonomialIdeal.parse(R, ["xy", "xz", "xw", "yz", "yw", "zw"])
    assert not is_g_infinity(complete_graph)


def test_eleven_graph_classes():
    classes = [classify_edges(edges) for edges in all_four_vertex_graphs()]
    assert len(classes) == 11
    assert len({c.name for c in classes}) == 11


def _signature(c: GraphClass):
    return c.kind, c.name, c.verdict, c.complement_height, c.locally_ci


def test_classification_ignores_vertex_labels():
    ring = parse_ring("QQ[x1,x2,x3,x4]")
    for edges in all_four_vertex_graphs():
        expected = _signature(classify_edges(edges))
        for perm in permutations(range(1, 5)):
            relabeled = [(perm[a - 1], perm[b - 1]) for a, b in edges]
            assert _signature(classify_edges(relabeled)) == expected, (edges, perm)
            non_edges = [(a, b) for a in range(1, 5) for b in range(a + 1, 5)
                         if (a, b) not in {tuple(sorted(e)) for e in relabeled}]
            if not non_edges:
                continue
            I = prime_power(VarPrime(vars=(non_edges[0][0] - 1, non_edges[0][1] - 1)), ring, 1)
            for a, b in non_edges[1:]:
                I = I.intersect(prime_power(VarPrime(vars=(a - 1, b - 1)), ring, 1))
            assert classify_graph(I).kind == expected[0], (edges, perm)


def test_path_is_locally_ci():
    c = classify_edges([(1, 2), (2, 3), (3, 4)])
    assert c.kind == GraphKind.PATH4
    assert c.verdict == Verdict.LOCALLY_CI
    assert c.locally_ci is True
    assert c.complement_height == 2


def test_paw_and_diamond_have_height_one():
    paw = classify_edges([(1, 2), (1, 3), (2, 3), (3, 4)])
    assert paw.kind == GraphKind.PAW
    assert paw.verdict == Verdict.HEIGHT_ONE
    assert paw.complement_ideal == ["x1*x4", "x2*x4"]
    assert paw.complement_height == 1

    diamond = classify_edges([(1, 2), (1, 4), (2, 3), (2, 4), (3, 4)])
    assert diamond.kind == GraphKind.DIAMOND
    assert diamond.complement_ideal == ["x1*x3"]
    assert diamond.complement_height == 1


def test_complete_graph_is_tetrahedral():
    c = classify_edges([(a, b) for a in range(1, 5) for b in range(a + 1, 5)])
    assert c.verdict == Verdict.TETRAHEDRAL
    assert c.complement_ideal == []
    assert c.complement_height is None


def test_classify_graph_from_ideal():
    R = parse_ring("QQ[x1,x2,x3,x4]")
    I = MonomialIdeal.parse(R, ["x1*x2", "x1*x4", "x2*x3", "x3*x4"])
    assert classify_graph(I).kind == GraphKind.CYCLE4
    with pytest.raises(PreconditionError):
        classify_graph(MonomialIdeal.parse(parse_ring("QQ[x,y,z]"), ["xy"]))


def test_bad_edge():
    with pytest.raises(PreconditionError):
        classify_edges([(1, 5)])
