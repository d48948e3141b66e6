# sympow/__init__.py
"""
sympow: exact symbolic powers, free resolutions and Cremona maps.

Polynomials live in a RingSpec (coefficients QQ or F_p, named variables, a
monomial order); everything above that is exact.

Example:
>>> import sympow
>>> R = sympow.parse_ring("QQ[x,y,z,w]")
>>> I = sympow.Ideal.parse(R, ["yzw", "xzw", "xyw", "xyz"])
>>> strategy = sympow.create_strategy("minimal-prime-intersection")
>>> sympow.compare(I, 2, strategy).equal
False
>>>
>>> # Cremona inverse pair: G(F(x)) = D * x
>>> F, G = sympow.fixtures.polar_map()
>>> str(sympow.verify_inverse(F, G).D)
'2*x^3'
"""

__version__ = "0.1.0"

from . import fixtures
from .config import SympowConfig, load_config
from .cremona import (
    CremonaCheck, CremonaMap, Hypothesis, HypothesisStatus, ProbeReport,
    depth_positive_check, gabber_bound, nonrigidity_probe, verify_inverse
)
from .exceptions import (
    SympowError, ParseError, RingError, RingMismatchError, GuardAbort,
    StrategyError, PreconditionError, ScenarioError
)
from .groebner import GroebnerBasis, contains, groebner
from .homological import PredicateSet, Resolution, depth, predicates, resolve
from .ideal import (
    Ideal, IdealProfile, colon, dimension, equal, height, intersect,
    is_saturated, krull_dimension, min_gens, power, saturate
)
from .monomial import (
    GraphClass, MonomialIdeal, VarPrime, classify_edges, classify_graph,
    is_g_infinity, is_locally_ci, minimal_primes, monomial_symbolic_power
)
from .polyring import MonomialOrder, Poly, RingSpec, parse_poly, parse_ring
# Symbolic powers
from .symbolic import (
    BaseSymbolicStrategy, ElementSaturationStrategy, PrimeIntersectionStrategy,
    RigidityScan, SaturationStrategy, SymbolicReport, compare, create_strategy,
    get_available_strategies, register_strategy, rigidity_scan, symbolic_power
)
from .utils.guards import Guards, guarded


# Export the public API
__all__ = [
    # Rings and polynomials
    'RingSpec',
    'MonomialOrder',
    'Poly',
    'parse_ring',
    'parse_poly',

    # Ideals
    'GroebnerBasis',
    'groebner',
    'contains',
    'Ideal',
    'IdealProfile',
    'equal',
    'power',
    'intersect',
    'colon',
    'saturate',
    'is_saturated',
    'min_gens',
    'dimension',
    'krull_dimension',
    'height',

    # Homological algebra
    'Resolution',
    'resolve',
    'depth',
    'PredicateSet',
    'predicates',

    # Monomial ideals
    'MonomialIdeal',
    'VarPrime',
    'minimal_primes',
    'monomial_symbolic_power',
    'is_locally_ci',
    'is_g_infinity',
    'GraphClass',
    'classify_edges',
    'classify_graph',

    # Symbolic powers
    'BaseSymbolicStrategy',
    'SaturationStrategy',
    'PrimeIntersectionStrategy',
    'ElementSaturationStrategy',
    'register_strategy',
    'create_strategy',
    'get_available_strategies',
    'SymbolicReport',
    'RigidityScan',
    'symbolic_power',
    'compare',
    'rigidity_scan',

    # Cremona maps
    'CremonaMap',
    'CremonaCheck',
    'ProbeReport',
    'Hypothesis',
    'HypothesisStatus',
    'verify_inverse',
    'gabber_bound',
    'depth_positive_check',
    'nonrigidity_probe',

    # Exceptions
    'SympowError',
    'ParseError',
    'RingError',
    'RingMismatchError',
    'GuardAbort',
    'StrategyError',
    'PreconditionError',
    'ScenarioError',

    # Configuration
    'Guards',
    'guarded',
    'SympowConfig',
    'load_config',
    'fixtures',

    # Version
    '__version__',
]
