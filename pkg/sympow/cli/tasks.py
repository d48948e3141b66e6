# sympow/cli/tasks.py
"""
The work behind each CLI command and scenario task.

Every function returns a TaskResult; exceptions propagate to the caller,
which maps them to exit codes.
"""

from typing import Iterable, List, Optional, Sequence

from ..cremona import CremonaMap, nonrigidity_probe, verify_inverse
from ..exceptions import GuardAbort, PreconditionError
from ..homological import predicates, resolve
from ..ideal import Ideal, dimension
from ..monomial import (
    MonomialIdeal,
    all_four_vertex_graphs,
    classify_edges,
    classify_graph,
    is_g_infinity,
    is_locally_ci,
    squarefree_or_none,
)
from ..symbolic import BaseSymbolicStrategy, Justification, StrategyKind, create_strategy, evaluate, rigidity_scan
from ..utils.logger import logger
from .report import TaskResult, dump, grid, kv_table, report_rows

AUTO = "auto"


def build_strategy(
        I: Ideal,
        name: Optional[str] = None,
        justification: Optional[str] = None,
        element: Optional[str] = None,
) -> BaseSymbolicStrategy:
    """
    Strategy for ``I`` by name.

    "auto" picks the prime intersection for square-free monomial ideals and
    saturation otherwise; saturation without a justification falls back to
    dim1-saturated, the one justification that is checked in full.
    """
    name = name or AUTO
    if name == AUTO:
        if squarefree_or_none(I) is not None and justification is None:
            name = StrategyKind.PRIME_INTERSECTION.value
        else:
            name = StrategyKind.SATURATION.value
            justification = justification or Justification.DIM1_SATURATED.value
    config = {}
    if element is not None:
        config["element"] = element
    strategy = create_strategy(name, justification=justification, **config)
    logger.debug(f"[CLI] strategy {strategy!r}")
    return strategy


# ===== ideal tasks =====

def profile_task(I: Ideal) -> TaskResult:
    """
    Dimension data, then predicates and monomial checks. A guard abort in a
    later stage keeps what the earlier stages found and marks the result aborted.
    """
    profile = dimension(I)
    payload = {
        "ring": str(I.ring),
        "generators": [str(g) for g in I.gens],
        "profile": dump(profile),
    }
    pairs = [
        ("ring", I.ring),
        ("dim R/I", profile.dim),
        ("height", profile.height),
        ("mu", profile.mu),
        ("homogeneous", profile.homogeneous),
    ]
    aborted = False
    if I.homogeneous and not I.is_zero():
        try:
            flags = predicates(I)
        except GuardAbort as e:
            logger.warning(f"[CLI] predicates aborted: {e}")
            payload["predicates"] = {"error": str(e)}
            pairs.append(("predicates", f"aborted ({e})"))
            aborted = True
        else:
            payload["predicates"] = dump(flags)
            pairs += [
                ("pd R/I", flags.pd),
                ("depth R/I", flags.depth),
                ("perfect", flags.perfect),
                ("Cohen-Macaulay", flags.cohen_macaulay),
                ("complete intersection", flags.complete_intersection),
                ("almost complete intersection", flags.almost_complete_intersection),
                ("strongly CM", flags.strongly_cm_certified),
            ]
    monomial = squarefree_or_none(I)
    if monomial is not None:
        try:
            ok, witness = is_locally_ci(monomial)
            g_inf = is_g_infinity(monomial)
        except GuardAbort as e:
            logger.warning(f"[CLI] monomial checks aborted: {e}")
            payload["monomial"] = {"error": str(e)}
            pairs.append(("monomial checks", f"aborted ({e})"))
            aborted = True
        else:
            payload["monomial"] = {
                "locally_ci": ok,
                "locally_ci_failure": witness.label(I.ring) if witness is not None else None,
                "g_infinity": g_inf,
            }
            pairs += [("locally CI", ok), ("G-infinity", g_inf)]
    if profile.min_generators:
        pairs.append(("minimal generators", ", ".join(profile.min_generators)))
    return TaskResult(task="profile", payload=payload, text=kv_table(pairs), aborted=aborted)


def resolve_task(I: Ideal, powers: Sequence[int] = (1,)) -> TaskResult:
    """Resolutions of R/I^n for each n in ``powers``."""
    payload = {"ring": str(I.ring), "generators": [str(g) for g in I.gens], "resolutions": []}
    blocks: List[str] = []
    aborted = False
    for n in powers:
        title = "R/I" if n == 1 else f"R/I^{n}"
        try:
            resolution = resolve(I if n == 1 else I ** n)
        except GuardAbort as e:
            logger.warning(f"[CLI] resolution of {title} aborted: {e}")
            payload["resolutions"].append({"n": n, "error": str(e)})
            blocks.append(f"{title}: aborted ({e})")
            aborted = True
            continue
        depth = I.ring.ngens - resolution.pd
        payload["resolutions"].append({
            "n": n,
            "ranks": resolution.ranks,
            "betti": {str(i): {str(j): b for j, b in row.items()} for i, row in resolution.betti_table().items()},
            "pd": resolution.pd,
            "depth": depth,
        })
        blocks.append(f"{title}: pd = {resolution.pd}, depth = {depth}\n{resolution.format_table()}")
    return TaskResult(task="resolve", payload=payload, text="\n\n".join(blocks), aborted=aborted)


def compare_task(I: Ideal, n: int, strategy: BaseSymbolicStrategy) -> TaskResult:
    """A guard abort yields an aborted report (exit code 2), not an exception."""
    if n < 1:
        raise PreconditionError(f"exponent must be positive, got {n}")
    report = evaluate(I, n, strategy)[0]
    payload = {"report": dump(report), "validity": dump(strategy.last_note)}
    return TaskResult(task="compare", payload=payload, text=report_rows([report]), aborted=report.equal is None)


def scan_task(I: Ideal, n_max: int, strategy: BaseSymbolicStrategy, concurrent: bool = False) -> TaskResult:
    scan = rigidity_scan(I, n_max, strategy, concurrent=concurrent)
    payload = {
        "reports": [dump(r) for r in scan.reports],
        "summary": scan.summary,
        "first_failure": scan.first_failure,
        "validity": dump(strategy.last_note),
    }
    text = report_rows(scan.reports) + f"\n\n{scan.summary}"
    return TaskResult(task="scan", payload=payload, text=text, aborted=bool(scan.aborted))


# ===== graphs =====

def classify_task(edges: Optional[Iterable[Sequence[int]]] = None, ideal: Optional[Ideal] = None) -> TaskResult:
    """One graph from explicit edges or a monomial ideal; all eleven classes when neither is given."""
    if edges is not None and ideal is not None:
        raise PreconditionError("classify takes edges or an ideal, not both")
    if ideal is not None:
        monomial = MonomialIdeal.from_ideal(ideal)
        classes = [classify_graph(monomial)]
    elif edges is not None:
        classes = [classify_edges(edges)]
    else:
        classes = [classify_edges(e) for e in all_four_vertex_graphs()]
    rows = [
        [c.name, c.edge_list(), ", ".join(c.complement_ideal) or "(0)", c.complement_height, c.verdict, c.locally_ci]
        for c in classes
    ]
    text = grid(["class", "edges", "complement ideal", "height", "verdict", "locally CI"], rows)
    return TaskResult(task="classify", payload={"classes": [dump(c) for c in classes]}, text=text)


# ===== Cremona maps =====

def cremona_verify_task(F: CremonaMap, G: CremonaMap) -> TaskResult:
    check = verify_inverse(F, G)
    payload = {"F": [str(f) for f in F.forms], "G": [str(g) for g in G.forms], "check": dump(check)}
    pairs = [
        ("verified", check.verified),
        ("d", check.d),
        ("d'", check.d_prime),
        ("D", check.D),
        ("deg D", check.deg_D),
        ("within d^(n-1)", check.gabber_ok),
        ("predicted failure", check.predicted_failure),
    ]
    if check.diagnostic:
        pairs.append(("diagnostic", check.diagnostic))
    return TaskResult(task="cremona-verify", payload=payload, text=kv_table(pairs))


def cremona_probe_task(
        F: CremonaMap,
        G: CremonaMap,
        strategy: BaseSymbolicStrategy,
        check_up_to: int,
        asserted: Iterable[str] = (),
        concurrent: bool = False,
) -> TaskResult:
    probe = nonrigidity_probe(F, G, strategy, check_up_to, asserted=asserted, concurrent=concurrent)
    payload = dump(probe)
    hypotheses = ", ".join(f"{k}: {v}" for k, v in probe.hypotheses.items())
    pairs = [
        ("D", probe.check.D),
        ("d, d'", f"{probe.check.d}, {probe.check.d_prime}"),
        ("height of base ideal", probe.base_height),
        ("predicted failure", probe.predicted_failure),
        ("observed failure", probe.observed_failure),
        ("D in I^(d')", probe.d_in_symbolic),
        ("D in I^d'", probe.d_in_power),
        ("confirmed", probe.confirmed),
        ("witness degree dd'-1", probe.minimal_degree_ok),
        ("hypotheses", hypotheses),
    ]
    text = report_rows(probe.reports) + "\n\n" + kv_table(pairs)
    aborted = any(r.equal is None for r in probe.reports)
    return TaskResult(task="cremona-probe", payload=payload, text=text, aborted=aborted)


__all__ = [
    "AUTO",
    "build_strategy",
    "profile_task",
    "resolve_task",
    "compare_task",
    "scan_task",
    "classify_task",
    "cremona_verify_task",
    "cremona_probe_task",
]
