# sympow/symbolic/compare.py
"""
Comparing ordinary and symbolic powers.

``compare`` produces one SymbolicReport per exponent; ``rigidity_scan`` and
its asyncio twin ``arigidity_scan`` run independent comparisons over a range
of exponents and summarize the first failure.
"""

import asyncio
from typing import List, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, field_serializer, model_validator

from ..exceptions import GuardAbort, PreconditionError, SympowError
from ..groebner import contains, groebner
from ..ideal import GREVLEX, Ideal, equal, is_saturated, power
from ..monomial import MonomialIdeal, VarPrime, localize_at_monomial_prime, monomial_symbolic_power
from ..polyring import Poly
from ..utils.logger import logger
from .strategies import BaseSymbolicStrategy, Justification, StrategyKind, SymbolicRequest, SymbolicResponse


class SymbolicReport(BaseModel):
    """
    Verdict for one exponent: I^n against I^(n).

    ``equal`` is None only when a guard aborted the comparison; ``error``
    then carries the diagnostic.
    """

    model_config = ConfigDict(arbitrary_types_allowed=True)

    n: int = Field(ge=1)
    equal: Optional[bool] = None
    witness: Optional[Poly] = Field(default=None, description="Minimal-degree element of I^(n) outside I^n")
    witness_degree: Optional[int] = None
    sat_exponent: Optional[int] = None
    depth_positive: Optional[bool] = Field(default=None, description="I^n = (I^n : m^∞)")
    strategy: StrategyKind
    justification: Justification
    asserted: List[str] = Field(default_factory=list, description="Hypotheses taken on trust")
    error: Optional[str] = None

    @model_validator(mode="after")
    def _witness_matches_verdict(self):
        if self.equal is False and self.witness is None:
            raise ValueError("an unequal verdict needs a witness")
        if self.equal is True and self.witness is not None:
            raise ValueError("an equal verdict carries no witness")
        return self

    @field_serializer("witness")
    def _serialize_witness(self, witness: Optional[Poly]):
        return None if witness is None else str(witness)

    def verdict(self) -> str:
        if self.equal is None:
            return "aborted"
        return "equal" if self.equal else "unequal"


def _witness(ordinary: Ideal, symbolic: Ideal) -> Poly:
    """Smallest-degree reduced-basis element of I^(n) outside I^n; ties go to the smaller leading monomial."""
    key = GREVLEX.key()
    candidates = [g for g in symbolic.groebner(GREVLEX).gens if not ordinary.contains(g)]
    if not candidates:
        raise SympowError("I^(n) differs from I^n but no basis element of I^(n) lies outside I^n")
    return min(candidates, key=lambda g: (g.degree(), key(g.leading_monomial(GREVLEX))))


def certify_witness(w: Poly, response: SymbolicResponse) -> bool:
    """
    w lies in I^(n) and outside I^n, checked against a fresh basis of the
    generators of I^n rather than the basis the witness was taken from.

    Membership in I^(n) is shown from how the strategy built it: w in every
    component of the intersection, or w * J^s inside I^n for a saturation.
    """
    power_gb = groebner(list(response.power.gens))
    if contains(power_gb, w):
        return False
    if response.components:
        return all(contains(list(c.gens), w) for c in response.components)
    if response.saturated_by is not None and response.sat_exponent is not None:
        s = response.sat_exponent
        multipliers = power(response.saturated_by, s).gens if s else [w.ring.one()]
        return all(contains(power_gb, w * g) for g in multipliers)
    return contains(list(response.symbolic.gens), w)


def _evaluate(I: Ideal, n: int, strategy: BaseSymbolicStrategy) -> Tuple[SymbolicReport, Ideal, Ideal]:
    note = strategy.ensure_valid(I)
    response = strategy.process(SymbolicRequest(ideal=I, n=n))
    P, S = response.power, response.symbolic

    is_equal = equal(P, S)
    witness = None
    if not is_equal:
        witness = _witness(P, S)
        if not certify_witness(witness, response):
            raise SympowError(f"witness {witness} failed re-verification at n={n}")

    if response.saturation is not None:
        depth_positive = equal(P, response.saturation)
    else:
        depth_positive = is_saturated(P)

    report = SymbolicReport(
        n=n,
        equal=is_equal,
        witness=witness,
        witness_degree=witness.degree() if witness is not None else None,
        sat_exponent=response.sat_exponent,
        depth_positive=depth_positive,
        strategy=note.strategy,
        justification=note.justification,
        asserted=list(note.asserted),
    )
    logger.info(
        f"🔣 [Symbolic] n={n}: {report.verdict()}"
        + (f", witness {witness} (degree {witness.degree()})" if witness is not None else "")
        + f", depth_positive={depth_positive}"
    )
    return report, P, S


def symbolic_power(I: Ideal, n: int, strategy: BaseSymbolicStrategy) -> Ideal:
    """
    I^(n) under ``strategy``; always contains I^n.

    Raises:
        StrategyError: Invalid strategy/ideal combination
        GuardAbort: A resource guard fired
    """
    if n < 1:
        raise PreconditionError(f"symbolic power exponent must be positive, got {n}")
    strategy.ensure_valid(I)
    return strategy.symbolic_power(I, n)


def compare(I: Ideal, n: int, strategy: BaseSymbolicStrategy) -> SymbolicReport:
    """
    Compare I^n with I^(n).

    On inequality the witness is re-verified by raw membership: it lies in
    I^(n) and not in I^n.
    """
    if n < 1:
        raise PreconditionError(f"exponent must be positive, got {n}")
    return _evaluate(I, n, strategy)[0]


# ===== scans =====

class RigidityScan(BaseModel):
    """Reports for n = 1..n_max in exponent order, plus a one-line summary."""

    n_max: int
    reports: List[SymbolicReport]
    first_failure: Optional[int] = None
    summary: str

    @property
    def aborted(self) -> List[int]:
        return [r.n for r in self.reports if r.equal is None]


def _aborted_report(n: int, strategy: BaseSymbolicStrategy, error: GuardAbort) -> SymbolicReport:
    logger.warning(f"🔣 [Scan] n={n} aborted: {error}")
    note = strategy.last_note
    return SymbolicReport(
        n=n,
        strategy=strategy.kind,
        justification=note.justification if note else (strategy.justification or Justification.USER_OVERRIDE),
        asserted=list(note.asserted) if note else [],
        error=str(error),
    )


def evaluate(I: Ideal, n: int, strategy: BaseSymbolicStrategy) -> Tuple[SymbolicReport, Optional[Ideal], Optional[Ideal]]:
    """One exponent of a scan: (report, I^n, I^(n)), or an aborted report and two Nones."""
    try:
        return _evaluate(I, n, strategy)
    except GuardAbort as e:
        return _aborted_report(n, strategy, e), None, None


def _scan_one(I: Ideal, n: int, strategy: BaseSymbolicStrategy) -> SymbolicReport:
    return evaluate(I, n, strategy)[0]


def summarize(reports: List[SymbolicReport]) -> Tuple[Optional[int], str]:
    for report in reports:
        if report.equal is False:
            return report.n, f"first failure n={report.n}"
    rigid_to = 0
    for report in reports:
        if report.equal is not True:
            break
        rigid_to = report.n
    summary = f"rigid up to n={rigid_to}"
    aborted = [r.n for r in reports if r.equal is None]
    if aborted:
        summary += f" (guard abort at n={', '.join(map(str, aborted))})"
    return None, summary


def _check_scan_args(n_max: int) -> None:
    if n_max < 2:
        raise PreconditionError(f"a rigidity scan needs n_max >= 2, got {n_max}")


def rigidity_scan(I: Ideal, n_max: int, strategy: BaseSymbolicStrategy, concurrent: bool = False) -> RigidityScan:
    """
    Compare I^n with I^(n) for n = 1..n_max, each exponent independently.

    A guard abort at one exponent is recorded in its report and the scan
    continues. With ``concurrent=True`` the exponents run in worker threads
    (see ``arigidity_scan``); the result is the same.
    """
    _check_scan_args(n_max)
    if concurrent:
        try:
            asyncio.get_running_loop()
        except RuntimeError:
            return asyncio.run(arigidity_scan(I, n_max, strategy))
        raise RuntimeError("rigidity_scan(concurrent=True) cannot run inside an event loop; await arigidity_scan instead")
    strategy.ensure_valid(I)
    reports = [_scan_one(I, n, strategy) for n in range(1, n_max + 1)]
    first_failure, summary = summarize(reports)
    logger.info(f"🔣 [Scan] {summary}")
    return RigidityScan(n_max=n_max, reports=reports, first_failure=first_failure, summary=summary)


async def arigidity_scan(I: Ideal, n_max: int, strategy: BaseSymbolicStrategy) -> RigidityScan:
    """Async twin of ``rigidity_scan``: exponents run concurrently, reports stay in order."""
    _check_scan_args(n_max)
    await asyncio.to_thread(strategy.ensure_valid, I)
    reports = await asyncio.gather(
        *(asyncio.to_thread(_scan_one, I, n, strategy) for n in range(1, n_max + 1))
    )
    first_failure, summary = summarize(list(reports))
    logger.info(f"🔣 [Scan] {summary}")
    return RigidityScan(n_max=n_max, reports=list(reports), first_failure=first_failure, summary=summary)


# ===== localization =====

def localization_consistent(I: MonomialIdeal, P: VarPrime, n: int) -> bool:
    """
    Localization commutes with symbolic powers: (I^(n))_P = (I_P)^(n).

    Raises:
        PreconditionError: I not square-free, or P not in V(I)
    """
    left = localize_at_monomial_prime(monomial_symbolic_power(I, n), P)
    right = monomial_symbolic_power(localize_at_monomial_prime(I, P), n)
    return left == right


__all__ = [
    "SymbolicReport",
    "RigidityScan",
    "symbolic_power",
    "compare",
    "rigidity_scan",
    "arigidity_scan",
    "evaluate",
    "certify_witness",
    "summarize",
    "localization_consistent",
]
