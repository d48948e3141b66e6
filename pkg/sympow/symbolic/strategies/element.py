# sympow/symbolic/strategies/element.py
"""I^(n) as (I^n : f^∞) for a caller-supplied element f."""

from typing import Optional

from ...exceptions import StrategyError
from ...ideal import Ideal, power, saturate
from ...polyring import Poly
from .base import (
    BaseSymbolicStrategy,
    Justification,
    StrategyKind,
    SymbolicRequest,
    SymbolicResponse,
    ValidityNote,
)


class ElementSaturationStrategy(BaseSymbolicStrategy):
    """
    Saturate at a principal ideal (f).

    Correct when f avoids every minimal prime of I and lies in every embedded
    prime of I^n; that is the caller's assertion.

    Args:
        element: f, in the ring of the ideal (a Poly, or text parsed there)
    """

    kind = StrategyKind.ELEMENT
    justifications = (Justification.USER_OVERRIDE,)

    def __init__(self, justification: Optional[Justification] = None, element=None, **config):
        super().__init__(justification or Justification.USER_OVERRIDE, **config)
        if element is None:
            raise StrategyError(f"{self.kind} needs an element f")
        self.element = element

    def _element(self, ideal: Ideal) -> Poly:
        if isinstance(self.element, Poly):
            ideal.ring.require_same(self.element.ring)
            return self.element
        return ideal.ring.parse_poly(str(self.element))

    def validate(self, ideal: Ideal) -> ValidityNote:
        if ideal.is_zero():
            raise StrategyError("symbolic powers of the zero ideal are not compared")
        f = self._element(ideal)
        if not f:
            raise StrategyError("saturating at the zero element is meaningless")
        if ideal.contains(f):
            raise StrategyError(f"{f} lies in I, so it meets every minimal prime")
        return ValidityNote(
            strategy=self.kind,
            justification=Justification.USER_OVERRIDE,
            licence=f"the caller states that I^(n) = (I^n : ({f})^∞)",
            checked=(f"{f} is not in I",),
            asserted=(f"{f} avoids the minimal primes of I and lies in every embedded prime of I^n",),
        )

    def process(self, request: SymbolicRequest) -> SymbolicResponse:
        note = self.ensure_valid(request.ideal)
        f = self._element(request.ideal)
        P = power(request.ideal, request.n)
        J = Ideal([f], ring=request.ideal.ring)
        S, s = saturate(P, J)
        return SymbolicResponse(power=P, symbolic=S, sat_exponent=s, saturated_by=J, note=note)
