# sympow/cremona.py
"""
Cremona transformations: verified inverse pairs and the non-rigidity probe.

A map F = (f_0, ..., f_n) of degree d with inverse G = (g_0, ..., g_n) of
degree d' satisfies g_i(f) = D·x_i for one form D of degree dd' - 1. When
the base ideal I = (f) has positive depth and the quotients I^(l)/I^l are
zero or m-primary, I^l = I^(l) below l = d' and D is a witness of
I^d' != I^(d').
"""

import asyncio
from enum import Enum
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from pydantic import BaseModel, ConfigDict, Field, ValidationError, field_serializer, model_validator

from .exceptions import PreconditionError
from .groebner import contains
from .ideal import Ideal, height, is_saturated
from .polyring import Poly, RingSpec, common_ring
from .symbolic.compare import SymbolicReport, evaluate
from .symbolic.strategies import BaseSymbolicStrategy
from .utils.logger import logger


class CremonaMap(BaseModel):
    """Forms f_0..f_n of one degree d >= 2 in n+1 variables."""

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    ring: RingSpec
    forms: Tuple[Poly, ...]

    @model_validator(mode="after")
    def _check_forms(self):
        forms: Sequence[Poly] = self.forms
        if len(forms) < 2:
            raise PreconditionError("a Cremona map needs at least two forms")
        if len(forms) != self.ring.ngens:
            raise PreconditionError(f"{len(forms)} forms for {self.ring.ngens} variables")
        degrees = set()
        for f in forms:
            self.ring.require_same(f.ring)
            if not f or not f.is_homogeneous():
                raise PreconditionError(f"form {f} is not a nonzero homogeneous polynomial")
            degrees.add(f.degree())
        if len(degrees) != 1:
            raise PreconditionError(f"forms have different degrees {sorted(degrees)}")
        if degrees.pop() < 2:
            raise PreconditionError("forms of a Cremona map must have degree >= 2")
        return self

    @classmethod
    def of(cls, forms: Sequence[Poly], ring: Optional[RingSpec] = None) -> "CremonaMap":
        """
        Raises:
            PreconditionError: Wrong number of forms, mixed or low degree
        """
        forms = list(forms)
        if ring is None:
            ring = common_ring(forms)
        try:
            return cls(ring=ring, forms=tuple(forms))
        except ValidationError as e:
            message = e.errors()[0]["msg"].removeprefix("Value error, ")
            raise PreconditionError(message) from None

    @classmethod
    def parse(cls, ring: RingSpec, texts: Iterable[str]) -> "CremonaMap":
        return cls.of([ring.parse_poly(text) for text in texts], ring=ring)

    @property
    def degree(self) -> int:
        return self.forms[0].degree()

    @property
    def base_ideal(self) -> Ideal:
        return Ideal(self.forms, ring=self.ring)

    def __str__(self):
        return "(" + ", ".join(str(f) for f in self.forms) + ")"


class HypothesisStatus(str, Enum):
    CHECKED = "checked"
    ASSERTED = "asserted"
    VIOLATED = "violated"
    UNKNOWN = "unknown"

    def __str__(self):
        return self.value


class Hypothesis(str, Enum):
    """Hypotheses under which a Cremona base ideal fails rigidity exactly at d'."""

    DEPTH_POSITIVE = "depth-positive"
    QUOTIENTS_PRIMARY = "quotients-m-primary"
    REES_S2 = "rees-s2"

    def __str__(self):
        return self.value


class CremonaCheck(BaseModel):
    model_config = ConfigDict(arbitrary_types_allowed=True)

    verified: bool
    D: Optional[Poly] = Field(default=None, description="Source inversion: g_i(f) = D·x_i")
    d: int = Field(description="Degree of the forms of F")
    d_prime: int = Field(description="Degree of the inverse representatives G")
    deg_D: Optional[int] = None
    gabber_ok: bool = Field(description="d' <= d^(n-1)")
    predicted_failure: int = Field(description="Exponent of the predicted first failure, d'")
    diagnostic: Optional[str] = None

    @model_validator(mode="after")
    def _degree_law(self):
        if self.verified:
            if self.D is None:
                raise ValueError("a verified inverse pair carries its source inversion")
            if self.deg_D != self.d * self.d_prime - 1:
                raise ValueError(f"deg D = {self.deg_D}, expected {self.d * self.d_prime - 1}")
        return self

    @field_serializer("D")
    def _serialize_d(self, D: Optional[Poly]):
        return None if D is None else str(D)


def gabber_bound(d: int, n: int) -> int:
    """Largest possible inverse degree of a Cremona map of degree d on P^n."""
    if d < 1 or n < 1:
        raise PreconditionError(f"gabber_bound needs d, n >= 1, got d={d}, n={n}")
    return d ** (n - 1)


def verify_inverse(F: CremonaMap, G: CremonaMap) -> CremonaCheck:
    """
    Check that G inverts F by expanding g_i(f_0, ..., f_n).

    Failure to invert is a verdict, not an error: ``verified`` is False and
    ``diagnostic`` says which identity broke.

    Raises:
        RingMismatchError: F and G over different rings
    """
    F.ring.require_same(G.ring)
    ring = F.ring
    d, d_prime = F.degree, G.degree
    n = ring.ngens - 1
    check = dict(d=d, d_prime=d_prime, gabber_ok=d_prime <= gabber_bound(d, n), predicted_failure=d_prime)

    composed = [g.substitute(list(F.forms)) for g in G.forms]
    x = ring.gens()
    D = composed[0].exact_divide(x[0])
    if D is None:
        diagnostic = f"g_0(f) = {composed[0]} is not divisible by {x[0]}"
        logger.info(f"[Cremona] not an inverse pair: {diagnostic}")
        return CremonaCheck(verified=False, diagnostic=diagnostic, **check)

    for i, value in enumerate(composed):
        if value.degree() != d * d_prime:
            diagnostic = f"g_{i}(f) has degree {value.degree()}, expected {d * d_prime}"
            return CremonaCheck(verified=False, diagnostic=diagnostic, **check)
        if value != D * x[i]:
            diagnostic = f"g_{i}(f) != D·{x[i]} with D = {D}"
            logger.info(f"[Cremona] not an inverse pair: {diagnostic}")
            return CremonaCheck(verified=False, diagnostic=diagnostic, **check)

    logger.info(f"[Cremona] inverse verified: d={d}, d'={d_prime}, D={D}")
    return CremonaCheck(verified=True, D=D, deg_D=D.degree(), **check)


def depth_positive_check(F: CremonaMap) -> bool:
    """depth(R/I) > 0 for the base ideal, tested as I = (I : m^∞)."""
    return is_saturated(F.base_ideal)


# ===== non-rigidity probe =====

class ProbeReport(BaseModel):
    model_config = ConfigDict(arbitrary_types_allowed=True)

    check: CremonaCheck
    reports: List[SymbolicReport]
    hypotheses: Dict[Hypothesis, HypothesisStatus]
    base_height: int
    predicted_failure: int
    observed_failure: Optional[int] = None
    d_in_symbolic: Optional[bool] = Field(default=None, description="D in I^(d'); None when d' was not reached")
    d_in_power: Optional[bool] = Field(default=None, description="D in I^d'; None when d' was not reached")
    confirmed: bool = Field(default=False, description="Failure first observed at d' and witnessed by D")
    minimal_degree_ok: Optional[bool] = Field(default=None, description="The witness at d' has degree dd' - 1")

    @property
    def hypothesis_violated(self) -> bool:
        return HypothesisStatus.VIOLATED in self.hypotheses.values()


def _hypothesis(name: str) -> Hypothesis:
    try:
        return Hypothesis(name)
    except ValueError:
        known = [h.value for h in Hypothesis]
        raise PreconditionError(f"unknown hypothesis '{name}', expected one of {known}") from None


def _probe_exponents(I: Ideal, exponents: List[int], strategy: BaseSymbolicStrategy, concurrent: bool):
    if not concurrent:
        return [evaluate(I, l, strategy) for l in exponents]

    async def gather():
        return await asyncio.gather(*(asyncio.to_thread(evaluate, I, l, strategy) for l in exponents))

    return asyncio.run(gather())


def nonrigidity_probe(
        F: CremonaMap,
        G: CremonaMap,
        strategy: BaseSymbolicStrategy,
        check_up_to: int,
        asserted: Iterable[str] = (),
        concurrent: bool = False,
) -> ProbeReport:
    """
    Compare I^l with I^(l) for l = 1..min(check_up_to, d') on the base ideal of F.

    Args:
        F, G: Inverse pair; G is only used to certify the pair and find D
        strategy: How I^(l) is computed; validated against the base ideal
        check_up_to: Largest exponent to examine
        asserted: Hypothesis names the caller vouches for ("quotients-m-primary", "rees-s2")
        concurrent: Evaluate exponents in worker threads

    Raises:
        PreconditionError: G does not invert F, or check_up_to < 1
        StrategyError: The strategy does not apply to the base ideal
    """
    if check_up_to < 1:
        raise PreconditionError(f"check_up_to must be positive, got {check_up_to}")
    check = verify_inverse(F, G)
    if not check.verified:
        raise PreconditionError(f"not a verified inverse pair: {check.diagnostic}")
    asserted = {_hypothesis(name) for name in asserted}

    I = F.base_ideal
    strategy.ensure_valid(I)
    d_prime = check.d_prime
    top = min(check_up_to, d_prime)
    outcomes = _probe_exponents(I, list(range(1, top + 1)), strategy, concurrent)
    reports = [report for report, _, _ in outcomes]

    hypotheses: Dict[Hypothesis, HypothesisStatus] = {}
    hypotheses[Hypothesis.DEPTH_POSITIVE] = (
        HypothesisStatus.CHECKED if depth_positive_check(F) else HypothesisStatus.VIOLATED
    )
    # a nonzero I^(l)/I^l with I^l saturated has positive depth, so it is not m-primary
    if any(r.equal is False and r.depth_positive for r in reports):
        hypotheses[Hypothesis.QUOTIENTS_PRIMARY] = HypothesisStatus.VIOLATED
    elif Hypothesis.QUOTIENTS_PRIMARY in asserted:
        hypotheses[Hypothesis.QUOTIENTS_PRIMARY] = HypothesisStatus.ASSERTED
    else:
        hypotheses[Hypothesis.QUOTIENTS_PRIMARY] = HypothesisStatus.UNKNOWN
    hypotheses[Hypothesis.REES_S2] = (
        HypothesisStatus.ASSERTED if Hypothesis.REES_S2 in asserted else HypothesisStatus.UNKNOWN
    )

    observed = next((r.n for r in reports if r.equal is False), None)
    d_in_symbolic = d_in_power = minimal_degree_ok = None
    if top == d_prime:
        report, power, symbolic = outcomes[-1]
        if symbolic is not None:
            d_in_symbolic = contains(symbolic, check.D)
            d_in_power = contains(power.gens, check.D)
        if report.witness is not None:
            minimal_degree_ok = report.witness_degree == check.deg_D

    confirmed = observed == d_prime and bool(d_in_symbolic) and d_in_power is False
    probe = ProbeReport(
        check=check,
        reports=reports,
        hypotheses=hypotheses,
        base_height=height(I),
        predicted_failure=d_prime,
        observed_failure=observed,
        d_in_symbolic=d_in_symbolic,
        d_in_power=d_in_power,
        confirmed=confirmed,
        minimal_degree_ok=minimal_degree_ok,
    )
    statuses = ", ".join(f"{k}={v}" for k, v in hypotheses.items())
    logger.info(f"[Cremona] probe: predicted failure at {d_prime}, observed {observed}, confirmed={confirmed} ({statuses})")
    return probe


__all__ = [
    "CremonaMap",
    "CremonaCheck",
    "HypothesisStatus",
    "Hypothesis",
    "ProbeReport",
    "gabber_bound",
    "verify_inverse",
    "depth_positive_check",
    "nonrigidity_probe",
]
