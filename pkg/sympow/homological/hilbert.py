# sympow/homological/hilbert.py
"""
Hilbert series numerators from initial ideals.

HS(R/I) = K(t) / (1 - t)^d where K depends only on the monomial ideal in(I).
K is computed by pivoting on variables:

    K(J) = K(J + (x)) + t * K(J : x)

until the generators are pairwise coprime, where K(J) = Π (1 - t^deg m).
"""

from math import comb
from typing import List, Sequence

from sympy.polys.domains import ZZ
from sympy.polys.rings import ring as poly_ring

from ..exceptions import PreconditionError
from ..groebner import monomials_of_degree
from ..ideal import GREVLEX, Ideal
from ..monomial import minimalize
from ..polyring import Monomial, monomial_divides
from .resolution import Resolution

T_RING, T = poly_ring("t", ZZ)


def _coprime(gens: Sequence[Monomial]) -> bool:
    seen = set()
    for m in gens:
        support = {i for i, e in enumerate(m) if e}
        if support & seen:
            return False
        seen |= support
    return True


def _pivot_variable(gens: Sequence[Monomial]) -> int:
    """Variable occurring in the most generators, lowest index on ties."""
    counts = [sum(1 for m in gens if m[i]) for i in range(len(gens[0]))]
    return max(range(len(counts)), key=lambda i: (counts[i], -i))


def monomial_numerator(monomials: Sequence[Monomial]):
    """K(t) of R/J for the monomial ideal J generated by ``monomials``."""
    gens = list(minimalize(monomials))
    if not gens:
        return T_RING.one
    if any(not any(m) for m in gens):
        return T_RING.zero
    if _coprime(gens):
        result = T_RING.one
        for m in gens:
            result *= T_RING.one - T ** sum(m)
        return result

    i = _pivot_variable(gens)
    pivot = tuple(1 if k == i else 0 for k in range(len(gens[0])))
    plus = gens + [pivot]
    colon = [tuple(e - 1 if k == i and e else e for k, e in enumerate(m)) for m in gens]
    return monomial_numerator(plus) + T * monomial_numerator(colon)


def hilbert_numerator(I: Ideal):
    """
    K(t) of R/I from the grevlex initial ideal, as an element of ZZ[t].

    Raises:
        PreconditionError: I not homogeneous
    """
    if not I.homogeneous:
        raise PreconditionError("Hilbert series need a homogeneous ideal")
    gb = I.groebner(GREVLEX)
    if gb.is_zero():
        return T_RING.one
    return monomial_numerator(gb.leading_monomials())


def betti_numerator(resolution: Resolution):
    """Σ (-1)^i b_{i,j} t^j."""
    result = T_RING.zero
    for i, degrees in enumerate(resolution.degrees):
        for j in degrees:
            result += (-1) ** i * T ** j
    return result


def hilbert_function(numerator, nvars: int, degree: int) -> int:
    """dim_k (R/I)_degree from K(t), expanding 1/(1-t)^d."""
    total = 0
    for (power,), coeff in numerator.items():
        if power <= degree:
            total += int(coeff) * comb(degree - power + nvars - 1, nvars - 1)
    return total


def staircase_count(I: Ideal, degree: int) -> int:
    """Standard monomials of the given degree: those outside the initial ideal."""
    leads: List[Monomial] = I.groebner(GREVLEX).leading_monomials()
    return sum(
        1 for m in monomials_of_degree(I.ring.ngens, degree)
        if not any(monomial_divides(lead, m) for lead in leads)
    )


def numerator_coefficients(numerator) -> List[int]:
    """Coefficients of K(t) from t^0 upwards."""
    if not numerator:
        return []
    coefficients = [0] * (numerator.degree() + 1)
    for (power,), coeff in numerator.items():
        coefficients[power] = int(coeff)
    return coefficients


__all__ = [
    "T_RING",
    "monomial_numerator",
    "hilbert_numerator",
    "betti_numerator",
    "hilbert_function",
    "staircase_count",
    "numerator_coefficients",
]
