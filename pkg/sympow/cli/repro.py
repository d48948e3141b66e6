# sympow/cli/repro.py
"""
Built-in reproduction cases.

Each case recomputes a known result and diffs every quantity against its
expected value. Witnesses are re-checked with raw membership calls on
generator lists, not through the strategy that produced them.
"""

from typing import Any, Callable, Dict, List, Optional, Tuple

from pydantic import BaseModel, Field

from .. import fixtures
from ..cremona import CremonaMap, Hypothesis, HypothesisStatus, depth_positive_check, gabber_bound, nonrigidity_probe, verify_inverse
from ..exceptions import ScenarioError
from ..groebner import contains
from ..homological import predicates, resolve
from ..ideal import Ideal, dimension, height, power
from ..monomial import GraphKind, Verdict, all_four_vertex_graphs, classify_edges
from ..symbolic import StrategyKind, compare, create_strategy, rigidity_scan, symbolic_power
from ..utils.logger import logger


class ReproCheck(BaseModel):
    name: str
    expected: Any
    observed: Any
    ok: bool


class ReproOutcome(BaseModel):
    """Result of one case: every check with expected and observed values."""

    id: str
    claim: str
    checks: List[ReproCheck] = Field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.ok for c in self.checks)

    def failures(self) -> List[ReproCheck]:
        return [c for c in self.checks if not c.ok]


class ReproCase(BaseModel):
    id: str
    claim: str = Field(description="The statement the case reproduces")
    slow: bool = Field(default=False, description="Needs minutes rather than seconds")


class _Checks:
    def __init__(self):
        self.items: List[ReproCheck] = []

    def expect(self, name: str, expected, observed) -> None:
        self.items.append(ReproCheck(name=name, expected=expected, observed=observed, ok=expected == observed))


_CASES: Dict[str, Tuple[ReproCase, Callable[[_Checks], None]]] = {}


def _case(case_id: str, claim: str, slow: bool = False):
    def register(runner: Callable[[_Checks], None]):
        _CASES[case_id] = (ReproCase(id=case_id, claim=claim, slow=slow), runner)
        return runner
    return register


def _pd(I: Ideal, n: int) -> int:
    return resolve(power(I, n)).pd


def _outside_power(I: Ideal, n: int, symbolic: Ideal, w) -> bool:
    """w in I^(n) and w not in I^n, by membership against generator lists."""
    return contains(list(symbolic.gens), w) and not contains(list(power(I, n).gens), w)


# ===== cases =====

@_case("hankel", "twisted cubic: perfect of height two, powers equal symbolic powers")
def _hankel(checks: _Checks) -> None:
    I = fixtures.hankel()
    flags = predicates(I)
    checks.expect("height", 2, flags.height)
    checks.expect("mu", 3, flags.mu)
    checks.expect("perfect", True, flags.perfect)
    checks.expect("strongly CM", "yes-by-criterion-i", flags.strongly_cm_certified.value)
    strategy = create_strategy(StrategyKind.SATURATION.value, justification="locally-CI")
    for n in (2, 3):
        checks.expect(f"I^{n} = I^({n})", True, compare(I, n, strategy).equal)


@_case(
    "tetrahedron",
    "triple products in four variables: I^(2) != I^2 with witness x^m yzw; depth of R/I^n is 2, 1, 0",
    slow=True,
)
def _tetrahedron(checks: _Checks) -> None:
    I = fixtures.tetrahedron()
    ring = I.ring
    for n, expected in ((1, 2), (2, 1), (3, 0)):
        checks.expect(f"depth R/I^{n}", expected, ring.ngens - _pd(I, n))

    strategy = create_strategy(StrategyKind.PRIME_INTERSECTION.value)
    report = compare(I, 2, strategy)
    checks.expect("I^2 = I^(2)", False, report.equal)
    w = report.witness
    yzw = ring.parse_poly("yzw")
    m = w.degree() - 3 if w is not None else None
    checks.expect("witness is x^m yzw, m >= 1", True, w is not None and m >= 1 and w == ring.parse_poly(f"x^{m}") * yzw)
    S = symbolic_power(I, 2, strategy)
    checks.expect("witness in I^(2) \\ I^2", True, w is not None and _outside_power(I, 2, S, w))
    checks.expect("x^2yzw in I^(2) \\ I^2", True, _outside_power(I, 2, S, ring.parse_poly("x^2yzw")))
    checks.expect("depth R/I^2 > 0", True, report.depth_positive)


@_case(
    "pentagon",
    "pentagon: pd R/I = 3 with Betti numbers 1, 5, 5, 1; pd R/I^2 = 3 and I^2 = I^(2); pd R/I^3 = 5 and I^3 != I^(3)",
    slow=True,
)
def _pentagon(checks: _Checks) -> None:
    I = fixtures.pentagon()
    d = I.ring.ngens
    resolution = resolve(I)
    checks.expect("ranks of R/I", [1, 5, 5, 1], resolution.ranks)
    pds = {n: _pd(I, n) for n in (1, 2, 3)}
    checks.expect("pd R/I", 3, pds[1])
    checks.expect("pd R/I^2", 3, pds[2])
    checks.expect("pd R/I^3", 5, pds[3])

    strategy = create_strategy(StrategyKind.PRIME_INTERSECTION.value)
    for n, expected in ((2, True), (3, False)):
        report = compare(I, n, strategy)
        checks.expect(f"I^{n} = I^({n})", expected, report.equal)
        # depth zero means m is associated to I^n, which no symbolic power has
        checks.expect(f"pd route agrees at n={n}", report.equal, pds[n] < d)
        if report.witness is not None:
            S = symbolic_power(I, n, strategy)
            checks.expect(f"witness re-verified at n={n}", True, _outside_power(I, n, S, report.witness))


@_case(
    "macaulay-curve",
    "rational quartic curve: four generators, depth 1 < dim 2, I^2 = I^(2)",
)
def _macaulay_curve(checks: _Checks) -> None:
    I = fixtures.macaulay_curve()
    flags = predicates(I)
    checks.expect("mu", 4, flags.mu)
    checks.expect("depth R/I", 1, flags.depth)
    checks.expect("dim R/I", 2, flags.dim)
    checks.expect("Cohen-Macaulay", False, flags.cohen_macaulay)
    strategy = create_strategy(StrategyKind.SATURATION.value, justification="locally-CI")
    checks.expect("I^2 = I^(2)", True, compare(I, 2, strategy).equal)


def _monomial_map_case(d: int):
    def run(checks: _Checks) -> None:
        F, G = fixtures.monomial_map(d)
        check = verify_inverse(F, G)
        checks.expect("inverse verified", True, check.verified)
        checks.expect("deg D", d * d - 1, check.deg_D)
        I = F.base_ideal
        strategy = create_strategy(StrategyKind.SATURATION.value, justification="dim1-saturated")
        scan = rigidity_scan(I, d, strategy)
        verdicts = [r.equal for r in scan.reports]
        checks.expect("I^n = I^(n) for n < d, not at d", [True] * (d - 1) + [False], verdicts)
        failure = scan.reports[-1]
        checks.expect("witness degree", d * d - 1, failure.witness_degree)
        S = symbolic_power(I, d, strategy)
        checks.expect("D in I^(d) \\ I^d", True, _outside_power(I, d, S, check.D))
    return run


for _d in (2, 3):
    _case(
        f"monomial-map-{_d}",
        f"monomial Cremona map of degree {_d}: I^n = I^(n) below {_d}, failure at {_d} with witness degree {_d * _d - 1}",
    )(_monomial_map_case(_d))


@_case(
    "tetrahedron-map",
    "cubic involution: self-inverse with d = d' = 3 and deg D = 8; failure already at 2 because I^(2)/I^2 is not m-primary",
)
def _tetrahedron_map(checks: _Checks) -> None:
    F, G = fixtures.tetrahedron_map()
    check = verify_inverse(F, G)
    checks.expect("inverse verified", True, check.verified)
    checks.expect("d, d'", (3, 3), (check.d, check.d_prime))
    checks.expect("deg D", 8, check.deg_D)
    strategy = create_strategy(StrategyKind.PRIME_INTERSECTION.value)
    probe = nonrigidity_probe(F, G, strategy, check_up_to=3)
    checks.expect("I^(2) = I^2", False, probe.reports[1].equal)
    checks.expect("quotients m-primary", HypothesisStatus.VIOLATED.value, probe.hypotheses[Hypothesis.QUOTIENTS_PRIMARY].value)
    checks.expect("observed failure", 2, probe.observed_failure)
    checks.expect("predicted failure", 3, probe.predicted_failure)


@_case(
    "polar-map",
    "polar quadratic map: base ideal (2xz + y^2, xy, x^2) has I^(2) != I^2; computed height 2 differs from the quoted codimension 1",
)
def _polar_map(checks: _Checks) -> None:
    F, G = fixtures.polar_map()
    I = F.base_ideal
    check = verify_inverse(F, G)
    checks.expect("inverse verified", True, check.verified)
    computed = height(I)
    checks.expect("height", 2, computed)
    checks.expect("height discrepancy flagged", True, computed != fixtures.POLAR_MAP_QUOTED_HEIGHT)
    strategy = create_strategy(StrategyKind.SATURATION.value, justification="unique-minimal-prime-dim1-homogeneous")
    report = compare(I, 2, strategy)
    checks.expect("I^2 = I^(2)", False, report.equal)
    probe = nonrigidity_probe(F, G, strategy, check_up_to=2)
    checks.expect("observed failure", 2, probe.observed_failure)
    checks.expect("D in I^(2) \\ I^2", (True, False), (probe.d_in_symbolic, probe.d_in_power))


@_case(
    "five-variable-base",
    "five-variable base ideal: the last variable is regular, so depth R/I > 0; d' = d^(n-1) = 8 sits on the bound",
)
def _five_variable_base(checks: _Checks) -> None:
    I = fixtures.five_variable_base()
    F = CremonaMap.of(I.gens, ring=I.ring)
    checks.expect("depth R/I > 0", True, depth_positive_check(F))
    checks.expect("d^(n-1)", 8, gabber_bound(2, 4))
    # no inverse representatives are available, so d' itself stays unverified
    checks.expect("dim R/I", 1, dimension(I).dim)


_EXPECTED_VERDICTS = {
    GraphKind.PATH4: Verdict.LOCALLY_CI,
    GraphKind.CYCLE4: Verdict.LOCALLY_CI,
    GraphKind.TWO_DISJOINT_EDGES: Verdict.LOCALLY_CI,
    GraphKind.PAW: Verdict.HEIGHT_ONE,
    GraphKind.DIAMOND: Verdict.HEIGHT_ONE,
    GraphKind.TRIANGLE_PLUS_ISOLATED: Verdict.HEIGHT_ONE,
    GraphKind.K4: Verdict.TETRAHEDRAL,
    GraphKind.OTHER: Verdict.NOT_PATH_OR_CYCLE,
}


@_case(
    "four-vertex-graphs",
    "graphs on four vertices: paths, cycles and two disjoint edges give locally CI ideals; paw, diamond and triangle are height one",
)
def _four_vertex_graphs(checks: _Checks) -> None:
    classes = [classify_edges(edges) for edges in all_four_vertex_graphs()]
    checks.expect("isomorphism classes", 11, len(classes))
    for c in classes:
        checks.expect(f"{c.name} verdict", _EXPECTED_VERDICTS[c.kind].value, c.verdict.value)
        if c.verdict == Verdict.HEIGHT_ONE:
            checks.expect(f"{c.name} complement height", 1, c.complement_height)
        if c.verdict == Verdict.LOCALLY_CI:
            checks.expect(f"{c.name} locally CI by machine", True, c.locally_ci)


@_case(
    "three-edges",
    "(xy, xz, yz): I = I^(1) while I^2 and I^3 miss xyz-type elements",
)
def _three_edges(checks: _Checks) -> None:
    I = fixtures.three_edges()
    strategy = create_strategy(StrategyKind.PRIME_INTERSECTION.value)
    scan = rigidity_scan(I, 3, strategy)
    checks.expect("verdicts n=1..3", [True, False, False], [r.equal for r in scan.reports])
    checks.expect("witness at n=2", "x*y*z", str(scan.reports[1].witness))


# ===== lookup =====

def get_available_cases() -> List[str]:
    return sorted(_CASES)


def resolve_case_id(name: str) -> str:
    """
    Raises:
        ScenarioError: Unknown case
    """
    if name in _CASES:
        return name
    raise ScenarioError(f"Repro case '{name}' not found. Available cases: {get_available_cases()}")


def get_case(name: str) -> ReproCase:
    return _CASES[resolve_case_id(name)][0]


def run_case(name: str) -> ReproOutcome:
    case, runner = _CASES[resolve_case_id(name)]
    checks = _Checks()
    runner(checks)
    outcome = ReproOutcome(id=case.id, claim=case.claim, checks=checks.items)
    if outcome.passed:
        logger.info(f"[CLI] repro {case.id}: pass ({len(outcome.checks)} checks)")
    else:
        logger.warning(f"[CLI] repro {case.id}: FAIL {[c.name for c in outcome.failures()]}")
    return outcome


def run_cases(names: Optional[List[str]] = None, include_slow: bool = True) -> List[ReproOutcome]:
    """Run the named cases, or every case (skipping slow ones unless asked)."""
    if names:
        return [run_case(name) for name in names]
    return [run_case(case_id) for case_id in get_available_cases() if include_slow or not _CASES[case_id][0].slow]


__all__ = [
    "ReproCase",
    "ReproCheck",
    "ReproOutcome",
    "get_available_cases",
    "get_case",
    "resolve_case_id",
    "run_case",
    "run_cases",
]
