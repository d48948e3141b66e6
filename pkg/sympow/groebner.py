# sympow/groebner.py
"""
Buchberger engine.

Normal pair selection (smallest lcm first) with Gebauer-Moeller pair
elimination, full tail reduction and a final interreduction, so the
output is the unique reduced Groebner basis for the chosen order.
"""

from itertools import combinations, combinations_with_replacement
from typing import Dict, List, Optional, Sequence, Set, Tuple

from pydantic import BaseModel, Field
from sympy.polys.matrices import DomainMatrix

from .exceptions import PreconditionError
from .polyring import Monomial, MonomialOrder, Poly, RingSpec, common_ring
from .utils.guards import Deadline, check_degree
from .utils.logger import logger


class GroebnerStats(BaseModel):
    """Bookkeeping of one Buchberger run."""

    pairs_considered: int = Field(default=0, description="Critical pairs whose S-polynomial was reduced")
    pairs_pruned: int = Field(default=0, description="Pairs discarded by Gebauer-Moeller criteria")
    reductions: int = Field(default=0, description="Normal-form computations performed")
    zero_reductions: int = Field(default=0, description="S-polynomials that reduced to zero")
    max_degree: int = Field(default=0, description="Largest total degree of a basis element seen")
    seconds: float = Field(default=0.0, description="Wall-clock time (not part of JSON reports)")


class GroebnerBasis:
    """
    Reduced Groebner basis of an ideal for one monomial order.

    ``gens`` are monic, interreduced and sorted by descending leading monomial.
    """

    __slots__ = ("ring", "order", "gens", "stats", "_reps")

    def __init__(self, ring: RingSpec, order: MonomialOrder, reps: list, stats: Optional[GroebnerStats] = None):
        self.ring = ring.with_order(order)
        self.order = order
        self._reps = list(reps)
        self.gens: Tuple[Poly, ...] = tuple(Poly(self.ring, r) for r in self._reps)
        self.stats = stats or GroebnerStats()

    @property
    def reps(self) -> list:
        return self._reps

    def leading_monomials(self) -> List[Monomial]:
        return [r.LM for r in self._reps]

    def is_unit(self) -> bool:
        return len(self._reps) == 1 and self._reps[0].is_ground and bool(self._reps[0])

    def is_zero(self) -> bool:
        return not self._reps

    def normal_form(self, p: Poly) -> Poly:
        return normal_form(p, self)

    def contains(self, p: Poly) -> bool:
        return not normal_form(p, self)

    def __len__(self):
        return len(self._reps)

    def __iter__(self):
        return iter(self.gens)

    def __eq__(self, other):
        if not isinstance(other, GroebnerBasis):
            return NotImplemented
        return (
            self.ring.same_ring(other.ring)
            and self.order == other.order
            and len(self._reps) == len(other._reps)
            and all(dict.__eq__(a, b) for a, b in zip(self._reps, other._reps))
        )

    def __repr__(self):
        return f"GroebnerBasis([{', '.join(str(g) for g in self.gens)}], order={self.order})"


# ===== Buchberger =====

def _spoly(p1, p2, ring):
    lcm = ring.monomial_lcm(p1.LM, p2.LM)
    m1 = ring.monomial_div(lcm, p1.LM)
    m2 = ring.monomial_div(lcm, p2.LM)
    return p1.mul_monom(m1) - p2.mul_monom(m2)


class _Buchberger:
    """One run of the algorithm over a fixed sympy ring (order baked in)."""

    def __init__(self, ring, context: str):
        self.ring = ring
        self.order = ring.order
        self.stats = GroebnerStats()
        self.deadline = Deadline(context)
        self.context = context
        self.f: list = []
        self.index: Dict[object, int] = {}

    def normal(self, g, basis: Sequence[int]) -> Optional[Tuple[Monomial, int]]:
        self.stats.reductions += 1
        h = g.rem([self.f[j] for j in basis])
        if not h:
            return None
        h = h.monic()
        if h not in self.index:
            degree = max(sum(m) for m in h.itermonoms())
            check_degree(degree, self.context)
            self.stats.max_degree = max(self.stats.max_degree, degree)
            self.index[h] = len(self.f)
            self.f.append(h)
        return h.LM, self.index[h]

    def update(self, G: Set[int], B: Set[Tuple[int, int]], ih: int):
        ring, f = self.ring, self.f
        lcm, div, mul = ring.monomial_lcm, ring.monomial_div, ring.monomial_mul
        mh = f[ih].LM

        # new pairs (h, g)
        C = set(G)
        D = set()
        while C:
            ig = C.pop()
            mg = f[ig].LM
            lcm_hg = lcm(mh, mg)

            def lcm_divides(ip):
                return div(lcm_hg, lcm(mh, f[ip].LM))

            if mul(mh, mg) == lcm_hg or (
                not any(lcm_divides(ipx) for ipx in C)
                and not any(lcm_divides(pr[1]) for pr in D)
            ):
                D.add((ih, ig))
            else:
                self.stats.pairs_pruned += 1

        E = set()
        while D:
            ih_, ig = D.pop()
            mg = f[ig].LM
            if mul(mh, mg) != lcm(mh, mg):
                E.add((ih_, ig))
            else:
                self.stats.pairs_pruned += 1

        # old pairs
        B_new = set()
        while B:
            ig1, ig2 = B.pop()
            mg1, mg2 = f[ig1].LM, f[ig2].LM
            lcm12 = lcm(mg1, mg2)
            if not div(lcm12, mh) or lcm(mg1, mh) == lcm12 or lcm(mg2, mh) == lcm12:
                B_new.add((ig1, ig2))
            else:
                self.stats.pairs_pruned += 1
        B_new |= E

        # basis elements whose leading monomial h's divides
        G_new = {ig for ig in G if not div(f[ig].LM, mh)}
        G_new.add(ih)
        return G_new, B_new

    def run(self, polys: list) -> list:
        order = self.order
        if not polys:
            return []

        # interreduce the input first
        f1 = list(polys)
        while True:
            f = f1[:]
            f1 = []
            for i, p in enumerate(f):
                r = p.rem(f[:i])
                if r:
                    f1.append(r.monic())
            if f == f1:
                break

        self.f = []
        self.index = {}
        for h in f:
            if h not in self.index:
                self.index[h] = len(self.f)
                self.f.append(h)
        F = set(range(len(self.f)))
        G: Set[int] = set()
        CP: Set[Tuple[int, int]] = set()

        while F:
            h = min((self.f[x] for x in F), key=lambda p: order(p.LM))
            ih = self.index[h]
            F.remove(ih)
            G, CP = self.update(G, CP, ih)

        lcm = self.ring.monomial_lcm
        while CP:
            self.deadline.check()
            ig1, ig2 = min(CP, key=lambda pair: order(lcm(self.f[pair[0]].LM, self.f[pair[1]].LM)))
            CP.remove((ig1, ig2))
            self.stats.pairs_considered += 1

            s = _spoly(self.f[ig1], self.f[ig2], self.ring)
            divisors = sorted(G, key=lambda g: order(self.f[g].LM))
            ht = self.normal(s, divisors)
            if ht:
                G, CP = self.update(G, CP, ht[1])
            else:
                self.stats.zero_reductions += 1

        reduced = set()
        for ig in G:
            ht = self.normal(self.f[ig], sorted(G - {ig}))
            if ht:
                reduced.add(ht[1])
        return sorted((self.f[ig] for ig in reduced), key=lambda p: order(p.LM), reverse=True)


def groebner(gens: Sequence[Poly], order: Optional[MonomialOrder] = None, ring: Optional[RingSpec] = None) -> GroebnerBasis:
    """
    Reduced Groebner basis of the ideal generated by ``gens``.

    Args:
        gens: Generators, all in one ring; zero generators are discarded
        order: Monomial order, default the ring's own
        ring: Ring to use when ``gens`` is empty

    Raises:
        RingMismatchError: Generators in different rings
        GuardAbort: Degree or time guard fired
    """
    if gens:
        ring = common_ring(gens)
    elif ring is None:
        raise PreconditionError("cannot infer the ring of an empty generator list")
    order = order or ring.order
    sring = ring.sympy_ring(order)

    reps = []
    for g in gens:
        if g:
            check_degree(g.degree(), "groebner input")
            reps.append(g.in_order(order))

    engine = _Buchberger(sring, context=f"groebner over {ring} ({order})")
    basis = engine.run(reps)
    engine.stats.seconds = engine.deadline.elapsed
    logger.debug(
        f"🧮 [GB] {len(reps)} gens -> {len(basis)} in {ring} ({order}); "
        f"pairs={engine.stats.pairs_considered} pruned={engine.stats.pairs_pruned} "
        f"zero={engine.stats.zero_reductions} maxdeg={engine.stats.max_degree}"
    )
    return GroebnerBasis(ring, order, basis, engine.stats)


def normal_form(p: Poly, gb: GroebnerBasis) -> Poly:
    """Remainder of ``p`` under full multivariate division by ``gb``."""
    gb.ring.require_same(p.ring)
    rep = p.in_order(gb.order)
    if not gb.reps:
        return Poly(gb.ring, rep)
    return Poly(gb.ring, rep.rem(gb.reps))


def contains(ideal, p: Poly) -> bool:
    """
    Ideal membership through the reduced Groebner basis.

    Args:
        ideal: An ``Ideal``, a ``GroebnerBasis`` or a list of generators
        p: Candidate element
    """
    if isinstance(ideal, GroebnerBasis):
        gb = ideal
    elif hasattr(ideal, "groebner"):
        gb = ideal.groebner()
    else:
        gb = groebner(list(ideal), ring=p.ring)
    return not normal_form(p, gb)


def verify_certificate(gb: GroebnerBasis) -> bool:
    """
    Re-check Buchberger's criterion and reducedness from the basis alone.

    Every S-polynomial must reduce to zero, every generator must be monic,
    and no term of a generator may be divisible by another leading monomial.
    """
    sring = gb.ring.sympy_ring(gb.order)
    reps = gb.reps
    one = sring.domain.one
    leads = [r.LM for r in reps]
    for r in reps:
        if r.LC != one:
            return False
    for i, r in enumerate(reps):
        for monom in r.itermonoms():
            for j, lead in enumerate(leads):
                if j != i and sring.monomial_div(monom, lead) is not None:
                    return False
    for a, b in combinations(reps, 2):
        if _spoly(a, b, sring).rem(reps):
            return False
    return True


# ===== Macaulay-matrix oracle =====

def monomials_of_degree(nvars: int, degree: int) -> List[Monomial]:
    result = []
    for combo in combinations_with_replacement(range(nvars), degree):
        exps = [0] * nvars
        for i in combo:
            exps[i] += 1
        result.append(tuple(exps))
    return result


def macaulay_contains(gens: Sequence[Poly], p: Poly) -> bool:
    """
    Membership of a homogeneous ``p`` in the ideal of homogeneous ``gens``.

    Decided by exact linear algebra on the degree slice of ``p``: p lies in
    the ideal iff it is in the span of all products monomial*generator of
    that degree. Independent of any Groebner basis.
    """
    ring = common_ring(list(gens) + [p])
    if not p:
        return True
    if not p.is_homogeneous() or not all(g.is_homogeneous() for g in gens if g):
        raise PreconditionError("the Macaulay oracle needs homogeneous input")
    t = p.degree()
    rows = monomials_of_degree(ring.ngens, t)
    row_index = {m: i for i, m in enumerate(rows)}
    domain = ring.domain
    columns: List[List] = []
    for g in gens:
        if not g or g.degree() > t:
            continue
        for m in monomials_of_degree(ring.ngens, t - g.degree()):
            product = g.rep.mul_monom(m)
            column = [domain.zero] * len(rows)
            for monom, coeff in product.items():
                column[row_index[monom]] = coeff
            columns.append(column)
    if not columns:
        return False

    target = [domain.zero] * len(rows)
    for monom, coeff in p.rep.items():
        target[row_index[monom]] = coeff

    def to_matrix(cols):
        data = [[col[i] for col in cols] for i in range(len(rows))]
        return DomainMatrix(data, (len(rows), len(cols)), domain)

    base = to_matrix(columns).rank()
    augmented = to_matrix(columns + [target]).rank()
    return base == augmented


__all__ = [
    "GroebnerStats",
    "GroebnerBasis",
    "groebner",
    "normal_form",
    "contains",
    "verify_certificate",
    "macaulay_contains",
    "monomials_of_degree",
]
