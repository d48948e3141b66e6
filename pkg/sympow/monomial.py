# sympow/monomial.py
"""
Combinatorial algorithms for (square-free) monomial ideals.

Minimal primes are minimal vertex covers of the generator hypergraph,
symbolic powers are intersections of prime powers, and localization at a
monomial prime sends the variables outside the prime to 1.
"""

from enum import Enum
from itertools import combinations, combinations_with_replacement, permutations
from typing import Iterable, List, Optional, Sequence, Tuple

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from .exceptions import GuardAbort, PreconditionError
from .ideal import Ideal
from .polyring import Monomial, RingSpec, monomial_divides, monomial_lcm
from .utils.guards import current_guards
from .utils.logger import logger


def minimalize(monomials: Iterable[Monomial]) -> Tuple[Monomial, ...]:
    """Minimal antichain under divisibility, sorted by degree then lex-descending."""
    ordered = sorted(set(monomials), key=_sort_key)
    kept: List[Monomial] = []
    for m in ordered:
        if not any(monomial_divides(g, m) for g in kept):
            kept.append(m)
    return tuple(kept)


def _sort_key(m: Monomial):
    return (sum(m), tuple(-e for e in m))


def _support(m: Monomial) -> frozenset:
    return frozenset(i for i, e in enumerate(m) if e)


class VarPrime(BaseModel):
    """Prime ideal generated by a set of variables (0-based indices)."""

    model_config = ConfigDict(frozen=True)

    vars: Tuple[int, ...] = Field(description="Sorted variable indices")

    @field_validator("vars")
    @classmethod
    def _check_vars(cls, value: Tuple[int, ...]) -> Tuple[int, ...]:
        if not value:
            raise ValueError("a variable prime needs at least one variable")
        if len(set(value)) != len(value) or any(i < 0 for i in value):
            raise ValueError(f"bad variable indices {value}")
        return tuple(sorted(value))

    @property
    def size(self) -> int:
        return len(self.vars)

    def contains_support(self, m: Monomial) -> bool:
        return bool(_support(m) & set(self.vars))

    def to_ideal(self, ring: RingSpec) -> Ideal:
        gens = ring.gens()
        return Ideal([gens[i] for i in self.vars], ring=ring)

    def label(self, ring: RingSpec) -> str:
        return "(" + ",".join(ring.variables[i] for i in self.vars) + ")"


class MonomialIdeal(BaseModel):
    """
    Monomial ideal held by its minimal generators.

    Build with ``MonomialIdeal.of`` to minimalize arbitrary monomial lists.
    """

    model_config = ConfigDict(frozen=True)

    ring: RingSpec
    gens: Tuple[Monomial, ...] = Field(description="Minimal generating antichain, sorted")

    @model_validator(mode="after")
    def _check_antichain(self):
        for m in self.gens:
            if len(m) != self.ring.ngens or any(e < 0 for e in m):
                raise ValueError(f"exponent vector {m} does not fit {self.ring}")
        if self.gens != minimalize(self.gens):
            raise ValueError("generators must be a sorted minimal antichain")
        return self

    @classmethod
    def of(cls, ring: RingSpec, monomials: Iterable[Monomial]) -> "MonomialIdeal":
        return cls(ring=ring, gens=minimalize(tuple(m) for m in monomials))

    @classmethod
    def parse(cls, ring: RingSpec, texts: Iterable[str]) -> "MonomialIdeal":
        return cls.from_ideal(Ideal.parse(ring, texts))

    @classmethod
    def from_ideal(cls, I: Ideal) -> "MonomialIdeal":
        """
        Convert an Ideal whose reduced basis consists of monomials.

        Raises:
            PreconditionError: The ideal is not monomial
        """
        if all(g.is_monomial() for g in I.gens):
            return cls.of(I.ring, (g.leading_monomial() for g in I.gens))
        gb = I.groebner()
        if not all(g.is_monomial() for g in gb.gens):
            raise PreconditionError(f"{I} is not a monomial ideal")
        return cls.of(I.ring, (g.leading_monomial() for g in gb.gens))

    @property
    def squarefree(self) -> bool:
        return all(e <= 1 for m in self.gens for e in m)

    def is_zero(self) -> bool:
        return not self.gens

    def to_ideal(self) -> Ideal:
        return Ideal([self.ring.monomial(m) for m in self.gens], ring=self.ring)

    def contains(self, m: Monomial) -> bool:
        return any(monomial_divides(g, m) for g in self.gens)

    def intersect(self, other: "MonomialIdeal") -> "MonomialIdeal":
        """Intersection via pairwise lcm of generators."""
        self.ring.require_same(other.ring)
        return MonomialIdeal.of(self.ring, (monomial_lcm(a, b) for a in self.gens for b in other.gens))

    def power(self, n: int) -> "MonomialIdeal":
        if n < 1:
            raise PreconditionError(f"power exponent must be positive, got {n}")
        products = []
        for combo in combinations_with_replacement(self.gens, n):
            products.append(tuple(map(sum, zip(*combo))))
        return MonomialIdeal.of(self.ring, products)

    def mu(self) -> int:
        return len(self.gens)

    def height(self) -> int:
        """Smallest minimal prime (square-free ideals)."""
        if not self.gens:
            return 0
        if any(not any(m) for m in self.gens):
            raise PreconditionError("the unit ideal has no height")
        return min(p.size for p in minimal_primes(self))

    def __str__(self):
        if not self.gens:
            return "(0)"
        return "(" + ", ".join(str(self.ring.monomial(m)) for m in self.gens) + ")"


def squarefree_or_none(I: Ideal) -> Optional[MonomialIdeal]:
    """The square-free monomial form of I, or None when I is not one."""
    try:
        monomial = MonomialIdeal.from_ideal(I)
    except PreconditionError:
        return None
    return monomial if monomial.squarefree else None


# ===== primes and symbolic powers =====

def _require_squarefree(I: MonomialIdeal) -> None:
    if not I.squarefree:
        raise PreconditionError(f"{I} is not square-free")


def minimal_primes(I: MonomialIdeal) -> List[VarPrime]:
    """
    Minimal vertex covers of the generator supports, by exhaustive search.

    Raises:
        PreconditionError: Non-square-free input
        GuardAbort: More variables than the cover-search guard allows
    """
    _require_squarefree(I)
    d = I.ring.ngens
    limit = current_guards().cover_variables
    if d > limit:
        raise GuardAbort("cover variables", limit, d, "minimal_primes")
    supports = [_support(m) for m in I.gens]
    if any(not s for s in supports):
        return []

    covers: List[frozenset] = []
    for size in range(1, d + 1):
        for subset in combinations(range(d), size):
            chosen = frozenset(subset)
            if any(c <= chosen for c in covers):
                continue
            if all(s & chosen for s in supports):
                covers.append(chosen)
    return [VarPrime(vars=tuple(sorted(c))) for c in covers]


def prime_power(P: VarPrime, ring: RingSpec, n: int) -> MonomialIdeal:
    monomials = []
    for combo in combinations_with_replacement(P.vars, n):
        exps = [0] * ring.ngens
        for i in combo:
            exps[i] += 1
        monomials.append(tuple(exps))
    return MonomialIdeal.of(ring, monomials)


def monomial_symbolic_power(I: MonomialIdeal, n: int) -> MonomialIdeal:
    """I^(n) as the intersection of P^n over the minimal primes P of I."""
    if n < 1:
        raise PreconditionError(f"symbolic power exponent must be positive, got {n}")
    primes = minimal_primes(I)
    if not primes:
        return I
    result = prime_power(primes[0], I.ring, n)
    for P in primes[1:]:
        result = result.intersect(prime_power(P, I.ring, n))
    logger.debug(f"🔢 [Monomial] symbolic power {n} over {len(primes)} primes: {len(result.gens)} generators")
    return result


# ===== localization =====

def in_variety(I: MonomialIdeal, P: VarPrime) -> bool:
    """P ∈ V(I), i.e. every generator meets P."""
    return all(P.contains_support(m) for m in I.gens)


def localize_at_monomial_prime(I: MonomialIdeal, P: VarPrime) -> MonomialIdeal:
    """
    Image of I after sending every variable outside P to 1.

    Raises:
        PreconditionError: P not in V(I)
    """
    if not in_variety(I, P):
        raise PreconditionError(f"{P.label(I.ring)} does not contain {I}")
    keep = set(P.vars)
    images = [tuple(e if i in keep else 0 for i, e in enumerate(m)) for m in I.gens]
    return MonomialIdeal.of(I.ring, images)


def _primes_in_variety(I: MonomialIdeal, include_maximal: bool) -> List[VarPrime]:
    d = I.ring.ngens
    top = d if include_maximal else d - 1
    found = []
    for size in range(1, top + 1):
        for subset in combinations(range(d), size):
            P = VarPrime(vars=subset)
            if in_variety(I, P):
                found.append(P)
    return found


def is_locally_ci(I: MonomialIdeal) -> Tuple[bool, Optional[VarPrime]]:
    """
    Complete intersection at every monomial prime of V(I) other than m.

    Returns:
        (True, None), or (False, first offending prime)
    """
    _require_squarefree(I)
    for P in _primes_in_variety(I, include_maximal=False):
        local = localize_at_monomial_prime(I, P)
        if local.mu() != local.height():
            logger.debug(f"🔢 [Monomial] not CI at {P.label(I.ring)}: mu={local.mu()} ht={local.height()}")
            return False, P
    return True, None


def is_g_infinity(I: MonomialIdeal) -> bool:
    """μ(I_P) ≤ ht(P) for every monomial prime P ∈ V(I), m included."""
    _require_squarefree(I)
    for P in _primes_in_variety(I, include_maximal=True):
        if localize_at_monomial_prime(I, P).mu() > P.size:
            return False
    return True


# ===== four-vertex graphs =====

class GraphKind(str, Enum):
    PATH4 = "path4"
    CYCLE4 = "cycle4"
    TWO_DISJOINT_EDGES = "two-disjoint-edges"
    PAW = "paw"
    DIAMOND = "diamond"
    TRIANGLE_PLUS_ISOLATED = "triangle-plus-isolated"
    K4 = "K4"
    OTHER = "other"

    def __str__(self):
        return self.value


class Verdict(str, Enum):
    LOCALLY_CI = "locally-CI"
    HEIGHT_ONE = "excluded: height one"
    TETRAHEDRAL = "excluded: tetrahedral"
    NOT_PATH_OR_CYCLE = "excluded: not a path, cycle or two disjoint edges"

    def __str__(self):
        return self.value


Edge = Tuple[int, int]

_ALL_PAIRS: Tuple[Edge, ...] = tuple(combinations(range(1, 5), 2))


class GraphClass(BaseModel):
    """Classification of a graph on vertices {1..4}."""

    edges: List[Edge] = Field(description="Edges as sorted 1-based vertex pairs")
    kind: GraphKind
    name: str = Field(description="Isomorphism class name, including the 'other' subclasses")
    verdict: Verdict
    complement_ideal: List[str] = Field(description="Edge ideal of the complement graph")
    complement_height: Optional[int] = Field(default=None, description="Height of the complement edge ideal")
    locally_ci: Optional[bool] = Field(default=None, description="Machine check of the intersection ideal (rigid candidates)")
    note: str = ""

    def edge_list(self) -> str:
        return " ".join(f"{a}-{b}" for a, b in self.edges) or "(no edges)"


def _normalize_edges(edges: Iterable[Sequence[int]]) -> List[Edge]:
    result = set()
    for edge in edges:
        a, b = edge
        if a == b or not (1 <= a <= 4 and 1 <= b <= 4):
            raise PreconditionError(f"bad edge {edge} on vertices 1..4")
        result.add((min(a, b), max(a, b)))
    return sorted(result)


def _graph_name(edges: List[Edge]) -> Tuple[GraphKind, str]:
    degrees = [0] * 5
    for a, b in edges:
        degrees[a] += 1
        degrees[b] += 1
    signature = (len(edges), tuple(sorted(degrees[1:])))
    table = {
        (0, (0, 0, 0, 0)): (GraphKind.OTHER, "empty"),
        (1, (0, 0, 1, 1)): (GraphKind.OTHER, "single-edge"),
        (2, (1, 1, 1, 1)): (GraphKind.TWO_DISJOINT_EDGES, "two-disjoint-edges"),
        (2, (0, 1, 1, 2)): (GraphKind.OTHER, "path3-plus-isolated"),
        (3, (0, 2, 2, 2)): (GraphKind.TRIANGLE_PLUS_ISOLATED, "triangle-plus-isolated"),
        (3, (1, 1, 1, 3)): (GraphKind.OTHER, "star"),
        (3, (1, 1, 2, 2)): (GraphKind.PATH4, "path4"),
        (4, (2, 2, 2, 2)): (GraphKind.CYCLE4, "cycle4"),
        (4, (1, 2, 2, 3)): (GraphKind.PAW, "paw"),
        (5, (2, 2, 3, 3)): (GraphKind.DIAMOND, "diamond"),
        (6, (3, 3, 3, 3)): (GraphKind.K4, "K4"),
    }
    return table[signature]


def _four_variable_ring() -> RingSpec:
    return RingSpec.parse("QQ[x1,x2,x3,x4]")


def classify_edges(edges: Iterable[Sequence[int]], ring: Optional[RingSpec] = None) -> GraphClass:
    """
    Classify a graph on {1..4} and report the verdict for its ideal.

    The complement edge ideal is built and its height computed; for the
    locally-CI classes the intersection of (x_i, x_j) over non-edges is
    checked by machine.
    """
    ring = ring or _four_variable_ring()
    if ring.ngens != 4:
        raise PreconditionError("graph classification needs exactly four variables")
    edges = _normalize_edges(edges)
    kind, name = _graph_name(edges)
    non_edges = [pair for pair in _ALL_PAIRS if pair not in edges]

    def pair_monomial(pair: Edge) -> Monomial:
        exps = [0] * 4
        exps[pair[0] - 1] = exps[pair[1] - 1] = 1
        return tuple(exps)

    complement = MonomialIdeal.of(ring, (pair_monomial(p) for p in non_edges))
    complement_height = complement.height() if complement.gens else None

    locally_ci = None
    note = ""
    if kind in (GraphKind.PATH4, GraphKind.CYCLE4, GraphKind.TWO_DISJOINT_EDGES):
        verdict = Verdict.LOCALLY_CI
        primes = [VarPrime(vars=(a - 1, b - 1)) for a, b in non_edges]
        intersection = prime_power(primes[0], ring, 1)
        for P in primes[1:]:
            intersection = intersection.intersect(prime_power(P, ring, 1))
        locally_ci, _ = is_locally_ci(intersection)
        note = "connected graph" if kind != GraphKind.TWO_DISJOINT_EDGES else "disjoint edges"
    elif kind in (GraphKind.PAW, GraphKind.DIAMOND, GraphKind.TRIANGLE_PLUS_ISOLATED):
        verdict = Verdict.HEIGHT_ONE
    elif kind == GraphKind.K4:
        verdict = Verdict.TETRAHEDRAL
    else:
        verdict = Verdict.NOT_PATH_OR_CYCLE

    return GraphClass(
        edges=edges,
        kind=kind,
        name=name,
        verdict=verdict,
        complement_ideal=[str(ring.monomial(m)) for m in complement.gens],
        complement_height=complement_height,
        locally_ci=locally_ci,
        note=note,
    )


def classify_graph(I: MonomialIdeal) -> GraphClass:
    """
    Graph of a square-free height-two unmixed ideal in four variables.

    {i, j} is an edge iff (x_i, x_j) is not a minimal prime of I.

    Raises:
        PreconditionError: Wrong variable count, not square-free, or a minimal
            prime of size other than two
    """
    if I.ring.ngens != 4:
        raise PreconditionError(f"graph classification needs 4 variables, got {I.ring.ngens}")
    _require_squarefree(I)
    primes = minimal_primes(I)
    if not primes:
        raise PreconditionError(f"{I} has no minimal primes")
    odd = [P for P in primes if P.size != 2]
    if odd:
        raise PreconditionError(
            f"{I} is not unmixed of height two: minimal prime {odd[0].label(I.ring)} has size {odd[0].size}"
        )
    components = {(P.vars[0] + 1, P.vars[1] + 1) for P in primes}
    edges = [pair for pair in _ALL_PAIRS if pair not in components]
    return classify_edges(edges, I.ring)


def all_four_vertex_graphs() -> List[List[Edge]]:
    """One representative per isomorphism class (11 classes)."""
    seen = set()
    representatives: List[List[Edge]] = []
    for mask in range(1 << len(_ALL_PAIRS)):
        edges = [pair for bit, pair in enumerate(_ALL_PAIRS) if mask >> bit & 1]
        canonical = min(
            tuple(sorted(tuple(sorted((perm[a - 1], perm[b - 1]))) for a, b in edges))
            for perm in permutations(range(1, 5))
        )
        if canonical not in seen:
            seen.add(canonical)
            representatives.append(list(canonical))
    return representatives


__all__ = [
    "minimalize",
    "VarPrime",
    "MonomialIdeal",
    "squarefree_or_none",
    "minimal_primes",
    "prime_power",
    "monomial_symbolic_power",
    "in_variety",
    "localize_at_monomial_prime",
    "is_locally_ci",
    "is_g_infinity",
    "GraphKind",
    "Verdict",
    "GraphClass",
    "classify_edges",
    "classify_graph",
    "all_four_vertex_graphs",
]
