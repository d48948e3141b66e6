# sympow/symbolic/strategies/__init__.py
"""
Strategy registry.

Strategies are looked up by their kind name, so scenario files and the CLI
can name them as text.
"""

from typing import Dict, List, Optional, Type

from ...exceptions import StrategyError
from .base import (
    BaseSymbolicStrategy,
    Justification,
    StrategyKind,
    SymbolicRequest,
    SymbolicResponse,
    ValidityNote,
)
from .element import ElementSaturationStrategy
from .prime_intersection import PrimeIntersectionStrategy
from .saturation import SaturationStrategy

_STRATEGIES: Dict[str, Type[BaseSymbolicStrategy]] = {}


def register_strategy(name: str, strategy_class: Type[BaseSymbolicStrategy]) -> None:
    """Register a strategy class under ``name`` (case-insensitive)."""
    _STRATEGIES[name.lower()] = strategy_class


def create_strategy(
        name: str,
        justification: Optional[str] = None,
        **config
) -> BaseSymbolicStrategy:
    """
    Build a strategy instance (factory).

    Args:
        name: Strategy kind, e.g. "saturation-at-irrelevant"
        justification: Justification name, required by the saturation strategy
        **config: Strategy-specific parameters (``element`` for user-element-saturation)

    Raises:
        StrategyError: Unknown strategy or justification
    """
    key = name.lower()
    if key not in _STRATEGIES:
        raise StrategyError(
            f"Strategy '{name}' not found. "
            f"Available strategies: {get_available_strategies()}"
        )
    if justification is not None:
        try:
            justification = Justification(justification)
        except ValueError:
            known = [j.value for j in Justification]
            raise StrategyError(f"unknown justification '{justification}', expected one of {known}") from None
    return _STRATEGIES[key](justification=justification, **config)


def get_available_strategies() -> List[str]:
    return sorted(_STRATEGIES)


register_strategy(StrategyKind.SATURATION.value, SaturationStrategy)
register_strategy(StrategyKind.PRIME_INTERSECTION.value, PrimeIntersectionStrategy)
register_strategy(StrategyKind.ELEMENT.value, ElementSaturationStrategy)

__all__ = [
    "BaseSymbolicStrategy",
    "StrategyKind",
    "Justification",
    "ValidityNote",
    "SymbolicRequest",
    "SymbolicResponse",
    "SaturationStrategy",
    "PrimeIntersectionStrategy",
    "ElementSaturationStrategy",
    "register_strategy",
    "create_strategy",
    "get_available_strategies",
]
