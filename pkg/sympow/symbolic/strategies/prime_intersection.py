# sympow/symbolic/strategies/prime_intersection.py
"""I^(n) = ∩ P^n over the minimal primes of a square-free monomial ideal."""

from ...exceptions import PreconditionError, StrategyError
from ...ideal import Ideal
from ...monomial import MonomialIdeal, minimal_primes, monomial_symbolic_power, prime_power
from .base import (
    BaseSymbolicStrategy,
    Justification,
    StrategyKind,
    SymbolicRequest,
    SymbolicResponse,
    ValidityNote,
)


class PrimeIntersectionStrategy(BaseSymbolicStrategy):
    """Exact for square-free monomial ideals, refused for everything else."""

    kind = StrategyKind.PRIME_INTERSECTION
    justifications = (Justification.SQUAREFREE_MONOMIAL,)

    def _monomial(self, ideal: Ideal) -> MonomialIdeal:
        try:
            monomial = MonomialIdeal.from_ideal(ideal)
        except PreconditionError as e:
            raise StrategyError(f"{self.kind} needs a monomial ideal: {e}") from None
        if not monomial.squarefree:
            raise StrategyError(f"{self.kind} needs a square-free monomial ideal, got {monomial}")
        return monomial

    def validate(self, ideal: Ideal) -> ValidityNote:
        if ideal.is_zero():
            raise StrategyError("symbolic powers of the zero ideal are not compared")
        monomial = self._monomial(ideal)
        if not minimal_primes(monomial):
            raise StrategyError("the unit ideal has no symbolic powers to compare")
        return ValidityNote(
            strategy=self.kind,
            justification=Justification.SQUAREFREE_MONOMIAL,
            licence="a square-free monomial ideal is the intersection of its minimal variable primes",
            checked=("I is a square-free monomial ideal",),
        )

    def process(self, request: SymbolicRequest) -> SymbolicResponse:
        note = self.ensure_valid(request.ideal)
        monomial = self._monomial(request.ideal)
        ring = request.ideal.ring
        return SymbolicResponse(
            power=monomial.power(request.n).to_ideal(),
            symbolic=monomial_symbolic_power(monomial, request.n).to_ideal(),
            components=[prime_power(P, ring, request.n).to_ideal() for P in minimal_primes(monomial)],
            note=note,
        )
