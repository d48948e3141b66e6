# sympow/ideal.py
"""
Ideals and the ideal arithmetic built on the Groebner engine.

Intersections use the auxiliary-variable construction, colons are
intersect-and-divide, and saturation iterates the colon so that the
stabilization exponent comes back as a certificate.
"""

import threading
from itertools import combinations, combinations_with_replacement
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from pydantic import BaseModel, Field, PrivateAttr

from .exceptions import GuardAbort, PreconditionError, SympowError
from .groebner import GroebnerBasis, groebner, normal_form
from .polyring import MonomialOrder, Poly, RingSpec, common_ring
from .utils.guards import check_degree, current_guards
from .utils.logger import logger

GREVLEX = MonomialOrder.grevlex()


class Ideal:
    """
    Ideal of a polynomial ring given by generators.

    Reduced Groebner bases are computed on demand and cached per monomial
    order. The cache is guarded by a lock so one Ideal may be shared by
    concurrent workers.
    """

    __slots__ = ("ring", "gens", "homogeneous", "_cache", "_lock")

    def __init__(self, gens: Iterable[Poly], ring: Optional[RingSpec] = None):
        gens = [g for g in gens if g]
        if gens:
            inferred = common_ring(gens)
            if ring is not None:
                ring.require_same(inferred)
            else:
                ring = inferred
        elif ring is None:
            raise PreconditionError("the zero ideal needs an explicit ring")
        self.ring: RingSpec = ring
        self.gens: Tuple[Poly, ...] = tuple(gens)
        self.homogeneous: bool = all(g.is_homogeneous() for g in self.gens)
        self._cache: Dict[MonomialOrder, GroebnerBasis] = {}
        self._lock = threading.Lock()

    # ----- constructors -----

    @classmethod
    def parse(cls, ring: RingSpec, texts: Iterable[str]) -> "Ideal":
        return cls([ring.parse_poly(text) for text in texts], ring=ring)

    @classmethod
    def irrelevant(cls, ring: RingSpec) -> "Ideal":
        """The ideal of all variables."""
        return cls(ring.gens(), ring=ring)

    @classmethod
    def unit(cls, ring: RingSpec) -> "Ideal":
        return cls([ring.one()], ring=ring)

    @classmethod
    def zero(cls, ring: RingSpec) -> "Ideal":
        return cls([], ring=ring)

    # ----- Groebner data -----

    def groebner(self, order: Optional[MonomialOrder] = None) -> GroebnerBasis:
        order = order or GREVLEX
        with self._lock:
            gb = self._cache.get(order)
            if gb is None:
                gb = groebner(list(self.gens), order, ring=self.ring)
                self._cache[order] = gb
        return gb

    def contains(self, p: Poly) -> bool:
        self.ring.require_same(p.ring)
        return not normal_form(p, self.groebner())

    def __contains__(self, p: Poly) -> bool:
        return self.contains(p)

    def is_zero(self) -> bool:
        return not self.gens

    def is_unit(self) -> bool:
        return self.groebner().is_unit()

    def is_homogeneous(self) -> bool:
        return self.homogeneous

    def reduced(self) -> "Ideal":
        """Same ideal, generated by its reduced grevlex basis."""
        return Ideal(self.groebner().gens, ring=self.ring)

    # ----- operators -----

    def __add__(self, other: "Ideal") -> "Ideal":
        self.ring.require_same(other.ring)
        return Ideal(self.gens + other.gens, ring=self.ring)

    def __mul__(self, other: "Ideal") -> "Ideal":
        return product(self, other)

    def __pow__(self, n: int) -> "Ideal":
        return power(self, n)

    def __and__(self, other: "Ideal") -> "Ideal":
        return intersect(self, other)

    def __le__(self, other: "Ideal") -> bool:
        return is_subset(self, other)

    def __ge__(self, other: "Ideal") -> bool:
        return is_subset(other, self)

    def __eq__(self, other):
        if not isinstance(other, Ideal):
            return NotImplemented
        return equal(self, other)

    __hash__ = None

    def __repr__(self):
        body = ", ".join(str(g) for g in self.gens) or "0"
        return f"Ideal({body}; {self.ring})"


# ===== basic operations =====

def _require_same(I: Ideal, J: Ideal) -> None:
    I.ring.require_same(J.ring)


def is_subset(I: Ideal, J: Ideal) -> bool:
    """I ⊆ J, generator by generator."""
    _require_same(I, J)
    gb = J.groebner()
    return all(not normal_form(g, gb) for g in I.gens)


def equal(I: Ideal, J: Ideal) -> bool:
    """True iff the reduced grevlex bases coincide."""
    _require_same(I, J)
    return I.groebner(GREVLEX) == J.groebner(GREVLEX)


def product(I: Ideal, J: Ideal) -> Ideal:
    _require_same(I, J)
    return Ideal([f * g for f in I.gens for g in J.gens], ring=I.ring)


def power(I: Ideal, n: int) -> Ideal:
    """
    Ordinary power: all degree-n multiset products of generators.

    Raises:
        PreconditionError: n < 1
        GuardAbort: Products would exceed the degree guard
    """
    if not isinstance(n, int) or n < 1:
        raise PreconditionError(f"power exponent must be a positive integer, got {n!r}")
    if n == 1:
        return I
    if I.gens:
        check_degree(n * max(g.degree() for g in I.gens), f"power {n}")

    seen = set()
    products: List[Poly] = []
    for combo in combinations_with_replacement(range(len(I.gens)), n):
        p = I.ring.one()
        for i in combo:
            p = p * I.gens[i]
        if p not in seen:
            seen.add(p)
            products.append(p)
    logger.debug(f"🔗 [Ideal] power {n}: {len(products)} products of {len(I.gens)} generators")
    return Ideal(products, ring=I.ring)


def eliminate(I: Ideal, k: int) -> Ideal:
    """
    I ∩ k[x_{k+1}, ..., x_d], via the reduced basis for elim(k).

    The result stays in the ring of I; its generators involve only the
    last d - k variables.
    """
    if not 0 < k < I.ring.ngens:
        raise PreconditionError(f"cannot eliminate {k} of {I.ring.ngens} variables")
    gb = I.groebner(MonomialOrder.elimination(k))
    kept = [g for g in gb.gens if not any(any(m[:k]) for m in g.rep)]
    return Ideal([Poly(I.ring, g.rep.set_ring(I.ring.sympy_ring())) for g in kept], ring=I.ring)


def intersect(I: Ideal, J: Ideal) -> Ideal:
    """
    I ∩ J as the elimination of t from t*I + (1 - t)*J.
    """
    _require_same(I, J)
    ring = I.ring
    if I.is_zero() or J.is_zero():
        return Ideal.zero(ring)

    extended = ring.extend("t")
    t = extended.gens()[0]
    gens = [t * g.lift(extended) for g in I.gens]
    gens += [(1 - t) * h.lift(extended) for h in J.gens]
    eliminated = eliminate(Ideal(gens, ring=extended), 1)
    result = Ideal([g.restrict(ring, 1) for g in eliminated.gens], ring=ring)
    logger.debug(f"🔗 [Ideal] intersection has {len(result.gens)} generators")
    return result


def intersect_all(ideals: Sequence[Ideal]) -> Ideal:
    if not ideals:
        raise PreconditionError("empty intersection")
    result = ideals[0]
    for other in ideals[1:]:
        result = intersect(result, other)
    return result


def _single_variable(g: Poly) -> Optional[int]:
    if g.is_monomial() and g.degree() == 1:
        return g.variables_used()[0]
    return None


def _colon_variable(I: Ideal, index: int) -> Ideal:
    # For homogeneous I and grevlex with x_index last, x_index divides a
    # basis element exactly when it divides its leading monomial.
    gb = I.groebner(MonomialOrder.grevlex_last(index))
    variable = I.ring.gens()[index]
    gens = []
    for g in gb.gens:
        g = Poly(I.ring, g.rep.set_ring(I.ring.sympy_ring()))
        if g.leading_monomial(MonomialOrder.grevlex_last(index))[index]:
            g = g.exact_divide(variable)
        gens.append(g)
    return Ideal(gens, ring=I.ring)


def colon_element(I: Ideal, g: Poly) -> Ideal:
    """(I : g) = (I ∩ (g)) / g."""
    I.ring.require_same(g.ring)
    if not g:
        return Ideal.unit(I.ring)
    index = _single_variable(g)
    if index is not None and I.homogeneous and I.gens:
        return _colon_variable(I, index)

    meet = intersect(I, Ideal([g], ring=I.ring))
    quotients = []
    for h in meet.gens:
        q = h.exact_divide(g)
        if q is None:
            raise SympowError(f"{h} in I ∩ ({g}) is not divisible by {g}")
        quotients.append(q)
    return Ideal(quotients, ring=I.ring)


def colon(I: Ideal, J: Ideal) -> Ideal:
    """
    (I : J) = {r : rJ ⊆ I} as the intersection of (I : g) over generators g of J.
    """
    _require_same(I, J)
    if J.is_zero():
        return Ideal.unit(I.ring)
    return intersect_all([colon_element(I, g) for g in J.gens])


def saturate(I: Ideal, J: Ideal) -> Tuple[Ideal, int]:
    """
    (I : J^∞) by iterating the colon.

    Returns:
        The saturation and the least s with (I : J^s) = (I : J^(s+1))

    Raises:
        GuardAbort: No stabilization within the iteration guard
    """
    _require_same(I, J)
    limit = current_guards().saturation_iterations
    current = I
    for s in range(limit):
        following = colon(current, J)
        if equal(following, current):
            logger.debug(f"🔗 [Ideal] saturation stabilized at s={s}")
            return current, s
        current = following
    raise GuardAbort("saturation iterations", limit, limit + 1, "saturate")


def is_saturated(I: Ideal) -> bool:
    """I equals its saturation at the irrelevant ideal."""
    saturated, s = saturate(I, Ideal.irrelevant(I.ring))
    return s == 0


# ===== numerical invariants =====

def min_gens(I: Ideal) -> Tuple[int, List[Poly]]:
    """
    μ(I) and a minimal homogeneous generating set (graded Nakayama).

    Generators are scanned by increasing degree, input order breaking ties;
    a generator is dropped when it lies in (remaining generators) + m*I.

    Raises:
        PreconditionError: Non-homogeneous generators
    """
    if not I.homogeneous:
        raise PreconditionError("min_gens needs a homogeneous ideal")
    variables = I.ring.gens()
    m_times_I = [x * g for g in I.gens for x in variables]
    current = sorted(I.gens, key=lambda g: g.degree())
    i = 0
    while i < len(current):
        others = current[:i] + current[i + 1:]
        if Ideal(others + m_times_I, ring=I.ring).contains(current[i]):
            del current[i]
        else:
            i += 1
    return len(current), current


class IdealProfile(BaseModel):
    """Dimension bookkeeping of R/I; homological flags are filled lazily."""

    dim: int = Field(description="Krull dimension of R/I")
    height: int = Field(description="ht(I) = d - dim(R/I)")
    mu: Optional[int] = Field(default=None, description="Minimal number of homogeneous generators")
    ambient_dim: int = Field(description="Number of variables d")
    homogeneous: bool = Field(default=True)
    min_generators: List[str] = Field(default_factory=list, description="A minimal generating set, printed")

    _ideal: Optional[Ideal] = PrivateAttr(default=None)
    _predicates: object = PrivateAttr(default=None)

    def predicates(self):
        """PredicateSet of the profiled ideal (computed on first use)."""
        if self._predicates is None:
            if self._ideal is None:
                raise PreconditionError("profile is detached from its ideal")
            from .homological import predicates as compute_predicates
            self._predicates = compute_predicates(self._ideal)
        return self._predicates


def _dimension_from_leads(nvars: int, leads: Sequence[Tuple[int, ...]]) -> int:
    supports = [frozenset(i for i, e in enumerate(m) if e) for m in leads]
    for size in range(nvars, -1, -1):
        for subset in combinations(range(nvars), size):
            chosen = frozenset(subset)
            if not any(support <= chosen for support in supports):
                return size
    return 0


def krull_dimension(I: Ideal) -> int:
    """
    dim(R/I) from the initial ideal: the largest variable set containing the
    support of no leading monomial of the grevlex basis.

    Raises:
        PreconditionError: Unit ideal
    """
    gb = I.groebner(GREVLEX)
    if gb.is_unit():
        raise PreconditionError("the unit ideal has no dimension")
    return _dimension_from_leads(I.ring.ngens, gb.leading_monomials())


def dimension(I: Ideal) -> IdealProfile:
    """Profile of R/I: dimension, height and (for homogeneous I) μ."""
    d = I.ring.ngens
    dim = krull_dimension(I)
    mu, gens = (None, [])
    if I.homogeneous and not I.is_zero():
        mu, gens = min_gens(I)
    elif I.is_zero():
        mu = 0
    profile = IdealProfile(
        dim=dim,
        height=d - dim,
        mu=mu,
        ambient_dim=d,
        homogeneous=I.homogeneous,
        min_generators=[str(g) for g in gens],
    )
    profile._ideal = I
    return profile


def height(I: Ideal) -> int:
    return I.ring.ngens - krull_dimension(I)


__all__ = [
    "Ideal",
    "IdealProfile",
    "is_subset",
    "equal",
    "product",
    "power",
    "eliminate",
    "intersect",
    "intersect_all",
    "colon_element",
    "colon",
    "saturate",
    "is_saturated",
    "min_gens",
    "krull_dimension",
    "dimension",
    "height",
]
