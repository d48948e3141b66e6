# sympow/symbolic/strategies/base.py
"""Base class for symbolic-power strategies."""

from abc import ABC, abstractmethod
from enum import Enum
from typing import List, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field

from ...exceptions import StrategyError
from ...ideal import Ideal


class StrategyKind(str, Enum):
    SATURATION = "saturation-at-irrelevant"
    PRIME_INTERSECTION = "minimal-prime-intersection"
    ELEMENT = "user-element-saturation"

    def __str__(self):
        return self.value


class Justification(str, Enum):
    """The fact that makes a strategy compute I^(n)."""

    DIM1_RADICAL = "dim1-radical"
    LOCALLY_CI = "locally-CI"
    UNIQUE_PRIME_DIM1 = "unique-minimal-prime-dim1-homogeneous"
    DIM1_SATURATED = "dim1-saturated"
    USER_OVERRIDE = "user-override"
    SQUAREFREE_MONOMIAL = "squarefree-monomial"

    def __str__(self):
        return self.value


class ValidityNote(BaseModel):
    """Provenance of a strategy/ideal pairing: what was checked, what was taken on trust."""

    model_config = ConfigDict(frozen=True)

    strategy: StrategyKind
    justification: Justification
    licence: str = Field(description="The statement that makes the strategy compute I^(n)")
    checked: Tuple[str, ...] = Field(default=(), description="Facts verified by computation")
    asserted: Tuple[str, ...] = Field(default=(), description="Facts the caller vouches for")

    @property
    def fully_checked(self) -> bool:
        return not self.asserted


class SymbolicRequest(BaseModel):
    """Symbolic power request."""

    model_config = ConfigDict(arbitrary_types_allowed=True)

    ideal: Ideal
    n: int = Field(ge=1)


class SymbolicResponse(BaseModel):
    """Symbolic power response."""

    model_config = ConfigDict(arbitrary_types_allowed=True)

    power: Ideal = Field(description="I^n")
    symbolic: Ideal = Field(description="I^(n)")
    sat_exponent: Optional[int] = Field(default=None, description="Stabilization exponent of the saturation, if one ran")
    saturation: Optional[Ideal] = Field(default=None, description="(I^n : m^∞) when the strategy computed it")
    saturated_by: Optional[Ideal] = Field(default=None, description="J with I^(n) = (I^n : J^s), s = sat_exponent")
    components: List[Ideal] = Field(default_factory=list, description="Ideals whose intersection is I^(n)")
    note: ValidityNote


class BaseSymbolicStrategy(ABC):
    """
    Abstract base class for symbolic-power strategies.

    A strategy is only as good as the fact licensing it, so ``validate``
    must run before ``process``; ``ensure_valid`` caches the note for the
    last validated ideal so scans validate once.
    """

    kind: StrategyKind
    justifications: Tuple[Justification, ...] = ()

    def __init__(self, justification: Optional[Justification] = None, **config):
        if justification is not None:
            justification = Justification(justification)
            if justification not in self.justifications:
                allowed = ", ".join(j.value for j in self.justifications)
                raise StrategyError(f"{self.kind} does not accept justification {justification}; allowed: {allowed}")
        self.justification = justification
        self.config = config
        self._validated: Optional[Tuple[Ideal, ValidityNote]] = None

    @abstractmethod
    def validate(self, ideal: Ideal) -> ValidityNote:
        """
        Check the strategy's hypotheses on ``ideal``.

        Raises:
            StrategyError: The pairing is invalid or a checkable hypothesis fails
        """
        pass

    @abstractmethod
    def process(self, request: SymbolicRequest) -> SymbolicResponse:
        """Compute I^n and I^(n) for a validated ideal."""
        pass

    def ensure_valid(self, ideal: Ideal) -> ValidityNote:
        cached = self._validated
        if cached is not None and cached[0] is ideal:
            return cached[1]
        note = self.validate(ideal)
        self._validated = (ideal, note)
        return note

    @property
    def last_note(self) -> Optional[ValidityNote]:
        return self._validated[1] if self._validated else None

    def symbolic_power(self, ideal: Ideal, n: int) -> Ideal:
        return self.process(SymbolicRequest(ideal=ideal, n=n)).symbolic

    @staticmethod
    def require_proper_homogeneous(ideal: Ideal, checked: List[str]) -> None:
        if ideal.is_zero():
            raise StrategyError("symbolic powers of the zero ideal are not compared")
        if not ideal.homogeneous:
            raise StrategyError("saturation at the irrelevant ideal needs a homogeneous ideal")
        if ideal.is_unit():
            raise StrategyError("the unit ideal has no symbolic powers to compare")
        checked.append("I is homogeneous and proper")

    def __repr__(self):
        suffix = f", {self.justification}" if self.justification else ""
        return f"{type(self).__name__}({self.kind}{suffix})"
