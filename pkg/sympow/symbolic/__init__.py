# sympow/symbolic/__init__.py
from .compare import (
    RigidityScan,
    SymbolicReport,
    arigidity_scan,
    certify_witness,
    compare,
    evaluate,
    localization_consistent,
    rigidity_scan,
    summarize,
    symbolic_power,
)
from .strategies import (
    BaseSymbolicStrategy,
    ElementSaturationStrategy,
    Justification,
    PrimeIntersectionStrategy,
    SaturationStrategy,
    StrategyKind,
    SymbolicRequest,
    SymbolicResponse,
    ValidityNote,
    create_strategy,
    get_available_strategies,
    register_strategy,
)

__all__ = [
    "SymbolicReport",
    "RigidityScan",
    "symbolic_power",
    "compare",
    "evaluate",
    "certify_witness",
    "rigidity_scan",
    "arigidity_scan",
    "summarize",
    "localization_consistent",
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
