# sympow/symbolic/strategies/saturation.py
"""I^(n) as the saturation (I^n : m^∞)."""

from typing import List

from ...exceptions import StrategyError
from ...ideal import Ideal, is_saturated, krull_dimension, power, saturate
from ...monomial import is_locally_ci, squarefree_or_none
from ...utils.logger import logger
from .base import (
    BaseSymbolicStrategy,
    Justification,
    StrategyKind,
    SymbolicRequest,
    SymbolicResponse,
    ValidityNote,
)

_LICENCES = {
    Justification.DIM1_RADICAL: "a radical ideal of dimension one has I^(n)/I^n = H^0_m(R/I^n)",
    Justification.LOCALLY_CI: "a locally complete intersection ideal has I^(n)/I^n = H^0_m(R/I^n)",
    Justification.UNIQUE_PRIME_DIM1: "with one minimal prime p of dimension one, m is the only other homogeneous prime over I",
    Justification.DIM1_SATURATED: "a saturated homogeneous ideal of dimension one has only minimal associated primes",
    Justification.USER_OVERRIDE: "the caller states that I^(n) = (I^n : m^∞)",
}


class SaturationStrategy(BaseSymbolicStrategy):
    """
    SaturationStrategy - symbolic powers by saturating at the irrelevant ideal.

    Needs a declared justification. Checkable parts are checked; the rest is
    recorded as asserted in the ValidityNote.
    """

    kind = StrategyKind.SATURATION
    justifications = (
        Justification.DIM1_RADICAL,
        Justification.LOCALLY_CI,
        Justification.UNIQUE_PRIME_DIM1,
        Justification.DIM1_SATURATED,
        Justification.USER_OVERRIDE,
    )

    def validate(self, ideal: Ideal) -> ValidityNote:
        if self.justification is None:
            allowed = ", ".join(j.value for j in self.justifications)
            raise StrategyError(f"{self.kind} needs a justification ({allowed})")
        justification = self.justification
        checked: List[str] = []
        asserted: List[str] = []
        self.require_proper_homogeneous(ideal, checked)

        if justification in (Justification.DIM1_RADICAL, Justification.UNIQUE_PRIME_DIM1, Justification.DIM1_SATURATED):
            dim = krull_dimension(ideal)
            if dim != 1:
                raise StrategyError(f"{justification} needs dim R/I = 1, got {dim}")
            checked.append("dim R/I = 1")

        if justification == Justification.DIM1_RADICAL:
            if squarefree_or_none(ideal) is not None:
                checked.append("I is radical (square-free monomial)")
            else:
                asserted.append("I is radical")
        elif justification == Justification.LOCALLY_CI:
            monomial = squarefree_or_none(ideal)
            if monomial is not None:
                ok, witness = is_locally_ci(monomial)
                if not ok:
                    raise StrategyError(f"I is not locally a complete intersection: fails at {witness.label(ideal.ring)}")
                checked.append("I is locally a complete intersection (monomial localizations)")
            else:
                asserted.append("I is locally a complete intersection off m")
            if not is_saturated(ideal):
                raise StrategyError("a locally complete intersection ideal used here must be m-saturated")
            checked.append("I is m-saturated")
        elif justification == Justification.UNIQUE_PRIME_DIM1:
            asserted.append("I has a unique minimal prime")
        elif justification == Justification.DIM1_SATURATED:
            if not is_saturated(ideal):
                raise StrategyError("dim1-saturated needs I = (I : m^∞)")
            checked.append("I is m-saturated")
        else:
            asserted.append("I^(n) = (I^n : m^∞)")

        note = ValidityNote(
            strategy=self.kind,
            justification=justification,
            licence=_LICENCES[justification],
            checked=tuple(checked),
            asserted=tuple(asserted),
        )
        logger.debug(f"🔣 [Symbolic] {self.kind} valid by {justification}: checked={note.checked} asserted={note.asserted}")
        return note

    def process(self, request: SymbolicRequest) -> SymbolicResponse:
        note = self.ensure_valid(request.ideal)
        ideal = request.ideal
        P = power(ideal, request.n)
        m = Ideal.irrelevant(ideal.ring)
        S, s = saturate(P, m)
        return SymbolicResponse(power=P, symbolic=S, sat_exponent=s, saturation=S, saturated_by=m, note=note)
