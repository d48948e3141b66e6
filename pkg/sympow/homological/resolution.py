# sympow/homological/resolution.py
"""
Minimal graded free resolutions of R/I.

Schreyer's algorithm builds a resolution from the reduced Groebner basis of
I: the S-pair syzygies of a Groebner basis are a Groebner basis of the
syzygy module under the induced order, so the construction iterates without
further Buchberger runs. The result is usually not minimal; constant entries
are cancelled afterwards until it is.
"""

from collections import defaultdict
from typing import Dict, List, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, PrivateAttr
from sympy.polys.orderings import grevlex

from ..exceptions import PreconditionError, SympowError
from ..ideal import GREVLEX, Ideal
from ..monomial import minimalize
from ..polyring import Monomial, Poly, RingSpec, monomial_div, monomial_divides, monomial_lcm, monomial_mul
from ..utils.guards import Deadline, check_degree
from ..utils.logger import logger

Term = Tuple[int, Monomial]
Vector = Dict[Term, object]
Column = Dict[int, object]


class _Schreyer:
    """
    Frame of a Schreyer resolution.

    ``images[k][i]`` is the image of the i-th basis vector of F_k, a vector in
    F_{k-1} keyed by (component, monomial); F_0 = R has the single component 0.
    ``leads[k][i]`` is its leading term under the order induced on F_{k-1}.
    """

    def __init__(self, ring: RingSpec, context: str):
        self.ring = ring
        self.domain = ring.domain
        self.nvars = ring.ngens
        self.images: List[List[Vector]] = [[]]
        self.leads: List[List[Term]] = [[]]
        self.degrees: List[List[int]] = [[0]]
        self.deadline = Deadline(context)
        self.context = context

    # ----- induced orders -----

    def key(self, level: int, comp: int, monom: Monomial):
        """Sort key of the term monom*e_comp of F_level."""
        tiebreak = []
        while level > 0:
            tiebreak.append(-comp)
            comp, lead = self.leads[level][comp]
            monom = monomial_mul(monom, lead)
            level -= 1
        return (grevlex(monom), *reversed(tiebreak))

    def lead(self, vector: Vector, level: int) -> Term:
        return max(vector, key=lambda term: self.key(level, *term))

    def _install(self, vectors: List[Vector], level: int) -> None:
        """Sort the images of F_level's basis and record leads and degrees."""
        leads = [self.lead(v, level - 1) for v in vectors]
        order = sorted(range(len(vectors)), key=lambda i: (leads[i][0], tuple(-e for e in leads[i][1])))
        vectors = [vectors[i] for i in order]
        leads = [leads[i] for i in order]
        below = self.degrees[level - 1]
        degrees = [sum(m) + below[c] for c, m in leads]
        for degree in degrees:
            check_degree(degree, self.context)
        self.images.append(vectors)
        self.leads.append(leads)
        self.degrees.append(degrees)

    # ----- division and syzygies -----

    def reduce(self, vector: Vector, level: int) -> Dict[int, Dict[Monomial, object]]:
        """Quotients of ``vector`` (in F_{level-1}) by the images of F_level's basis."""
        zero = self.domain.zero
        gens, leads = self.images[level], self.leads[level]
        by_comp: Dict[int, List[int]] = defaultdict(list)
        for i, (c, _) in enumerate(leads):
            by_comp[c].append(i)

        remaining = dict(vector)
        quotients: Dict[int, Dict[Monomial, object]] = defaultdict(dict)
        while remaining:
            comp, monom = self.lead(remaining, level - 1)
            coeff = remaining[(comp, monom)]
            for i in by_comp[comp]:
                if monomial_divides(leads[i][1], monom):
                    break
            else:
                raise SympowError(f"syzygy S-vector did not reduce to zero at level {level}")
            shift = monomial_div(monom, leads[i][1])
            factor = self.domain.quo(coeff, gens[i][leads[i]])
            quotients[i][shift] = quotients[i].get(shift, zero) + factor
            for (c, m), value in gens[i].items():
                term = (c, monomial_mul(m, shift))
                updated = remaining.get(term, zero) - factor * value
                if updated:
                    remaining[term] = updated
                else:
                    remaining.pop(term, None)
        return quotients

    def _shifted(self, vector: Vector, shift: Monomial, scale) -> Vector:
        return {(c, monomial_mul(m, shift)): scale * v for (c, m), v in vector.items()}

    def syzygies(self, level: int) -> List[Vector]:
        """Schreyer syzygies among the images of F_level's basis, pruned to minimal leads."""
        domain = self.domain
        gens, leads = self.images[level], self.leads[level]
        by_comp: Dict[int, List[int]] = defaultdict(list)
        for i, (c, _) in enumerate(leads):
            by_comp[c].append(i)

        result: List[Vector] = []
        for i, (comp, mi) in enumerate(leads):
            candidates: Dict[Monomial, int] = {}
            for j in by_comp[comp]:
                if j > i:
                    shift = monomial_div(monomial_lcm(mi, leads[j][1]), mi)
                    candidates.setdefault(shift, j)
            for shift_i in minimalize(candidates):
                self.deadline.check()
                j = candidates[shift_i]
                mj = leads[j][1]
                shift_j = monomial_div(monomial_lcm(mi, mj), mj)
                ci = domain.quo(domain.one, gens[i][leads[i]])
                cj = domain.quo(domain.one, gens[j][leads[j]])

                s = self._shifted(gens[i], shift_i, ci)
                for term, value in self._shifted(gens[j], shift_j, cj).items():
                    updated = s.get(term, domain.zero) - value
                    if updated:
                        s[term] = updated
                    else:
                        s.pop(term, None)

                syzygy: Vector = {(i, shift_i): ci, (j, shift_j): -cj}
                for l, quotient in self.reduce(s, level).items():
                    for m, value in quotient.items():
                        updated = syzygy.get((l, m), domain.zero) - value
                        if updated:
                            syzygy[(l, m)] = updated
                        else:
                            syzygy.pop((l, m), None)
                result.append(syzygy)
        return result

    def run(self, basis: List[Vector]) -> None:
        if not basis:
            return
        self._install(basis, 1)
        level = 1
        while True:
            syzygies = self.syzygies(level)
            logger.debug(f"📐 [Resolve] level {level + 1}: {len(syzygies)} Schreyer syzygies")
            if not syzygies:
                return
            if level > self.nvars:
                raise SympowError(f"Schreyer resolution exceeded length {self.nvars + 1}")
            self._install(syzygies, level + 1)
            level += 1


# ===== minimalization =====

def _to_columns(frame: _Schreyer, sring) -> List[Optional[List[Column]]]:
    maps: List[Optional[List[Column]]] = [None]
    for level in range(1, len(frame.images)):
        columns = []
        for vector in frame.images[level]:
            grouped: Dict[int, Dict[Monomial, object]] = defaultdict(dict)
            for (c, m), value in vector.items():
                grouped[c][m] = value
            columns.append({c: sring.from_dict(terms) for c, terms in grouped.items()})
        maps.append(columns)
    return maps


def _find_unit(maps) -> Optional[Tuple[int, int, int]]:
    for k in range(1, len(maps)):
        for b, column in enumerate(maps[k]):
            for a, entry in column.items():
                if entry.is_ground:
                    return k, a, b
    return None


def _drop_row(columns: List[Column], row: int) -> None:
    for index, column in enumerate(columns):
        columns[index] = {(r if r < row else r - 1): e for r, e in column.items() if r != row}


def _cancel(maps, degrees: List[List[int]], k: int, a: int, b: int) -> None:
    """Split off the unit entry (a, b) of φ_k."""
    if k == 1:
        raise SympowError("a unit entry in φ_1 means the ideal is not proper")
    columns = maps[k]
    pivot = columns[b]
    unit = pivot[a].LC
    for index, column in enumerate(columns):
        if index == b or a not in column:
            continue
        factor = column[a].quo_ground(unit)
        for r, entry in pivot.items():
            updated = column.get(r, 0) - factor * entry
            if updated:
                column[r] = updated
            else:
                column.pop(r, None)
    del columns[b]
    _drop_row(columns, a)
    if k + 1 < len(maps):
        _drop_row(maps[k + 1], b)
    del maps[k - 1][a]
    del degrees[k][b]
    del degrees[k - 1][a]


def _minimalize(maps, degrees: List[List[int]]) -> int:
    cancelled = 0
    while True:
        found = _find_unit(maps)
        if found is None:
            break
        _cancel(maps, degrees, *found)
        cancelled += 1
    while len(degrees) > 1 and not degrees[-1]:
        degrees.pop()
        maps.pop()
    return cancelled


# ===== public model =====

class Resolution(BaseModel):
    """
    Minimal graded free resolution 0 → F_pd → … → F_1 → F_0 = R → R/I.

    ``degrees[i]`` lists the internal degrees of the basis of F_i in basis
    order, so b_{i,j} counts the occurrences of j in ``degrees[i]``.
    """

    model_config = ConfigDict(arbitrary_types_allowed=True)

    ring: RingSpec
    degrees: List[List[int]] = Field(description="Internal degrees of the basis of each F_i")
    ranks: List[int] = Field(description="Ranks of F_0, F_1, ...")
    pd: int = Field(description="Projective dimension of R/I")
    cancelled: int = Field(default=0, description="Unit entries split off during minimalization")

    _maps: list = PrivateAttr(default_factory=list)
    _ideal: Optional[Ideal] = PrivateAttr(default=None)

    def betti(self, i: int, j: int) -> int:
        if not 0 <= i < len(self.degrees):
            return 0
        return self.degrees[i].count(j)

    def betti_table(self) -> Dict[int, Dict[int, int]]:
        """{i: {j: b_ij}} with zero entries omitted."""
        table: Dict[int, Dict[int, int]] = {}
        for i, degrees in enumerate(self.degrees):
            counts: Dict[int, int] = {}
            for j in sorted(degrees):
                counts[j] = counts.get(j, 0) + 1
            table[i] = counts
        return table

    def rows(self) -> List[List[int]]:
        """Macaulay2 display: row r, column i holds b_{i,i+r}."""
        regularity = max((j - i for i, degrees in enumerate(self.degrees) for j in degrees), default=0)
        return [[self.betti(i, i + r) for i in range(self.pd + 1)] for r in range(regularity + 1)]

    def format_table(self) -> str:
        rows = self.rows()
        width = max([len(str(n)) for n in self.ranks] + [len(str(self.pd)), 1])
        lines = [" " * 7 + " ".join(f"{i:>{width}}" for i in range(self.pd + 1))]
        lines.append(f"{'total:':>7}" + " ".join(f"{n:>{width}}" for n in self.ranks))
        for r, row in enumerate(rows):
            cells = " ".join(f"{(b if b else '.'):>{width}}" for b in row)
            lines.append(f"{str(r) + ':':>7}" + cells)
        return "\n".join(lines)

    def euler_characteristic(self) -> int:
        return sum((-1) ** i * n for i, n in enumerate(self.ranks))

    def differential(self, k: int) -> List[List[Poly]]:
        """φ_k : F_k → F_{k-1} as a rows × columns matrix of Polys."""
        if not 1 <= k <= self.pd:
            raise PreconditionError(f"no differential φ_{k} in a resolution of length {self.pd}")
        ring = self.ring.with_order(GREVLEX)
        zero = ring.zero()
        columns = self._maps[k]
        return [
            [Poly(ring, column[r]) if r in column else zero for column in columns]
            for r in range(self.ranks[k - 1])
        ]

    def is_minimal(self) -> bool:
        """No differential has a nonzero constant entry."""
        return _find_unit(self._maps) is None

    def is_complex(self) -> bool:
        """φ_1 generates I and φ_k ∘ φ_{k+1} = 0 for every k."""
        if self._ideal is not None and self.pd >= 1:
            ring = self.ring.with_order(GREVLEX)
            image = Ideal([Poly(ring, e) for column in self._maps[1] for e in column.values()], ring=self._ideal.ring)
            if image != self._ideal:
                return False
        for k in range(1, self.pd):
            lower, upper = self._maps[k], self._maps[k + 1]
            for column in upper:
                total: Dict[int, object] = {}
                for r, entry in column.items():
                    for row, value in lower[r].items():
                        total[row] = total.get(row, 0) + entry * value
                if any(total.values()):
                    return False
        return True


def resolve(I: Ideal) -> Resolution:
    """
    Minimal graded free resolution of R/I.

    Raises:
        PreconditionError: I not homogeneous, or the unit ideal
        GuardAbort: Degree or time guard fired
    """
    if not I.homogeneous:
        raise PreconditionError("resolve needs a homogeneous ideal")
    gb = I.groebner(GREVLEX)
    if gb.is_unit():
        raise PreconditionError("the unit ideal has no resolution of R/I")

    ring = I.ring.with_order(GREVLEX)
    frame = _Schreyer(ring, context=f"resolve over {ring}")
    frame.run([{(0, m): c for m, c in rep.items()} for rep in gb.reps])

    maps = _to_columns(frame, ring.sympy_ring())
    degrees = [list(d) for d in frame.degrees]
    sizes = [len(d) for d in degrees]
    cancelled = _minimalize(maps, degrees)

    resolution = Resolution(
        ring=I.ring,
        degrees=degrees,
        ranks=[len(d) for d in degrees],
        pd=len(degrees) - 1,
        cancelled=cancelled,
    )
    resolution._maps = maps
    resolution._ideal = I
    logger.debug(
        f"📐 [Resolve] Schreyer ranks {sizes} -> minimal {resolution.ranks} "
        f"({cancelled} cancellations, {frame.deadline.elapsed:.2f}s)"
    )
    return resolution


def depth(I: Ideal) -> int:
    """depth(R/I) = d - pd(R/I) (Auslander-Buchsbaum)."""
    return I.ring.ngens - resolve(I).pd


__all__ = ["Resolution", "resolve", "depth"]
