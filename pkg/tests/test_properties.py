"""Seeded randomized checks of the engines against independent oracles."""

import random
from itertools import combinations

from sympow.groebner import contains, macaulay_contains, monomials_of_degree
from sympow.homological import betti_numerator, hilbert_numerator, resolve
from sympow.ideal import intersect_all, power
from sympow.monomial import (
    MonomialIdeal,
    VarPrime,
    in_variety,
    minimal_primes,
    monomial_symbolic_power,
)
from sympow.polyring import MonomialOrder, parse_ring
from sympow.symbolic import create_strategy, localization_consistent, symbolic_power

RINGS = {n: parse_ring("QQ[" + ",".join(f"x{i}" for i in range(n)) + "]") for n in (2, 3, 4)}

ORDERS = [
    MonomialOrder.lex(),
    MonomialOrder.grlex(),
    MonomialOrder.grevlex(),
    MonomialOrder.elimination(1),
    MonomialOrder.elimination(2),
    MonomialOrder.grevlex_last(0),
    MonomialOrder.grevlex_last(2),
]


def random_form(rng: random.Random, ring, degree: int, terms: int):
    monomials = monomials_of_degree(ring.ngens, degree)
    p = ring.zero()
    for m in rng.sample(monomials, k=min(terms, len(monomials))):
        p = p + ring.monomial(m, rng.choice([-3, -2, -1, 1, 2, 3]))
    return p


def random_squarefree(rng: random.Random, ring) -> MonomialIdeal:
    d = ring.ngens
    supports = [s for size in (1, 2, 3) for s in combinations(range(d), size) if size < d]
    chosen = rng.sample(supports, k=rng.randint(1, min(4, len(supports))))
    return MonomialIdeal.of(ring, (tuple(1 if i in s else 0 for i in range(d)) for s in chosen))


def membership_instances(seed: int, count: int):
    rng = random.Random(seed)
    for _ in range(count):
        ring = RINGS[rng.choice((2, 3, 4))]
        gens = [random_form(rng, ring, rng.randint(1, 2), rng.randint(1, 3)) for _ in range(rng.randint(1, 3))]
        target = rng.randint(2, 4)
        if rng.random() < 0.5:
            # a combination of the generators is always a member
            p = ring.zero()
            for g in gens:
                if g.degree() <= target:
                    p = p + random_form(rng, ring, target - g.degree(), 2) * g
        else:
            p = random_form(rng, ring, target, rng.randint(1, 4))
        yield gens, p


def test_groebner_membership_matches_macaulay_oracle():
    for gens, p in membership_instances(seed=20261019, count=100):
        assert contains(gens, p) == macaulay_contains(gens, p), (gens, p)


def test_monomial_symbolic_power_matches_general_intersection():
    rng = random.Random(7)
    for _ in range(50):
        ring = RINGS[rng.choice((3, 4))]
        I = random_squarefree(rng, ring)
        n = rng.choice((1, 2))
        expected = intersect_all([power(P.to_ideal(ring), n) for P in minimal_primes(I)])
        assert monomial_symbolic_power(I, n).to_ideal() == expected, (I, n)
        assert I.power(n).to_ideal() == power(I.to_ideal(), n)


def test_power_lies_in_symbolic_power():
    rng = random.Random(11)
    strategy = create_strategy("minimal-prime-intersection")
    for _ in range(20):
        I = random_squarefree(rng, RINGS[rng.choice((3, 4))]).to_ideal()
        for n in (1, 2, 3):
            assert power(I, n) <= symbolic_power(I, n, strategy)


def test_resolutions_satisfy_auslander_buchsbaum():
    rng = random.Random(13)
    for _ in range(20):
        ring = RINGS[rng.choice((3, 4))]
        I = random_squarefree(rng, ring).to_ideal()
        if rng.random() < 0.3:
            I = power(I, 2)
        resolution = resolve(I)
        d = ring.ngens
        assert 0 <= resolution.pd <= d
        assert resolution.euler_characteristic() == 0
        assert resolution.is_complex()
        assert resolution.is_minimal()
        assert hilbert_numerator(I) == betti_numerator(resolution)


def test_localization_consistency():
    rng = random.Random(17)
    for _ in range(20):
        ring = RINGS[4]
        I = random_squarefree(rng, ring)
        primes = [
            VarPrime(vars=s) for size in (1, 2, 3, 4) for s in combinations(range(4), size)
            if in_variety(I, VarPrime(vars=s))
        ]
        P = rng.choice(primes)
        for n in (1, 2, 3):
            assert localization_consistent(I, P, n)


def test_monomial_orders_are_multiplicative_total_orders():
    rng = random.Random(19)
    one = (0, 0, 0, 0)

    def exponent():
        return tuple(rng.randint(0, 3) for _ in range(4))

    for order in ORDERS:
        for _ in range(100):
            a, b, c = exponent(), exponent(), exponent()
            ab = order.compare(a, b)
            assert ab == -order.compare(b, a), (order, a, b)
            assert (ab == 0) == (a == b)
            shifted = tuple(x + y for x, y in zip(a, c)), tuple(x + y for x, y in zip(b, c))
            assert order.compare(*shifted) == ab, (order, a, b, c)
            if a != one:
                assert order.compare(one, a) < 0
            if ab < 0 and order.compare(b, c) < 0:
                assert order.compare(a, c) < 0
