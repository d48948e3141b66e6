# sympow/cli/main.py
"""
sympow command line.

Exit codes: 0 completed, 1 input error (or a failed reproduction), 2 guard abort.
"""

import argparse
import sys
from typing import Callable, List, Optional, Sequence

from .. import __version__
from ..config import SympowConfig, load_config
from ..cremona import CremonaMap
from ..exceptions import GuardAbort, SympowError
from ..fixtures import IDEALS, MAPS, named_ideal, named_map
from ..ideal import Ideal
from ..polyring import parse_poly, parse_ring
from ..symbolic import get_available_strategies
from ..utils.guards import guarded
from ..utils.logger import configure_logging, logger
from ..utils.parser import split_top_level
from . import repro, tasks
from .report import TaskResult, kv_table, write_json
from .scenario import Scenario, execute, parse_edges

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_GUARD = 2


# ===== argument helpers =====

def _polys_from_args(ring_text: str, texts: Sequence[str]):
    ring = parse_ring(ring_text)
    pieces = [piece for text in texts for _, piece in split_top_level(text)]
    return ring, [parse_poly(ring, piece) for piece in pieces]


def _ideal_from_args(args) -> Ideal:
    if args.fixture:
        return named_ideal(args.fixture)
    if not args.ring or not args.gens:
        raise SympowError("give RING and generators, or --fixture NAME")
    ring, polys = _polys_from_args(args.ring, args.gens)
    return Ideal(polys, ring=ring)


def _maps_from_args(args):
    if args.fixture:
        return named_map(args.fixture)
    if not args.ring or not args.forms or not args.inverse:
        raise SympowError("give RING --forms ... --inverse ..., or --fixture NAME")
    ring, forms = _polys_from_args(args.ring, args.forms)
    _, inverse = _polys_from_args(args.ring, args.inverse)
    return CremonaMap.of(forms, ring=ring), CremonaMap.of(inverse, ring=ring)


def _strategy(args, config: SympowConfig, I: Ideal):
    name = args.strategy or config.default_strategy
    justification = args.justification
    if justification is None and args.strategy is None:
        justification = config.default_justification
    return tasks.build_strategy(I, name, justification, args.element)


# ===== commands =====

def cmd_profile(args, config: SympowConfig) -> List[TaskResult]:
    return [tasks.profile_task(_ideal_from_args(args))]


def cmd_resolve(args, config: SympowConfig) -> List[TaskResult]:
    return [tasks.resolve_task(_ideal_from_args(args), args.powers or [1])]


def cmd_compare(args, config: SympowConfig) -> List[TaskResult]:
    I = _ideal_from_args(args)
    return [tasks.compare_task(I, args.n, _strategy(args, config, I))]


def cmd_scan(args, config: SympowConfig) -> List[TaskResult]:
    I = _ideal_from_args(args)
    return [tasks.scan_task(I, args.n_max, _strategy(args, config, I), concurrent=args.concurrent)]


def cmd_classify(args, config: SympowConfig) -> List[TaskResult]:
    if args.all:
        return [tasks.classify_task()]
    if args.edges:
        return [tasks.classify_task(edges=parse_edges(args.edges))]
    return [tasks.classify_task(ideal=_ideal_from_args(args))]


def cmd_cremona_verify(args, config: SympowConfig) -> List[TaskResult]:
    F, G = _maps_from_args(args)
    return [tasks.cremona_verify_task(F, G)]


def cmd_cremona_probe(args, config: SympowConfig) -> List[TaskResult]:
    F, G = _maps_from_args(args)
    strategy = _strategy(args, config, F.base_ideal)
    return [tasks.cremona_probe_task(
        F, G, strategy, args.check_up_to, asserted=args.asserted or (), concurrent=args.concurrent
    )]


def cmd_repro(args, config: SympowConfig) -> List[TaskResult]:
    names = None if args.case == "all" else [args.case]
    outcomes = repro.run_cases(names, include_slow=not args.skip_slow)
    results = []
    for outcome in outcomes:
        lines = [f"[{'PASS' if outcome.passed else 'FAIL'}] {outcome.id}: {outcome.claim}"]
        for check in outcome.checks:
            mark = "ok" if check.ok else "MISMATCH"
            lines.append(f"    {mark:<8} {check.name}: expected {check.expected}, observed {check.observed}")
        results.append(TaskResult(task="repro", payload=outcome.model_dump(mode="json"), text="\n".join(lines)))
    args.repro_failed = any(not o.passed for o in outcomes)
    return results


def cmd_run(args, config: SympowConfig) -> List[TaskResult]:
    scenario = Scenario.load(args.scenario)
    if scenario.json_path and not args.json:
        args.json = scenario.json_path
    with guarded(scenario.guards(config.guards)):
        return [execute(scenario, config.default_strategy)]


# ===== parser =====

def _common_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", metavar="PATH", help="Also write the report as JSON to PATH")
    common.add_argument("--guard-degree", type=int, metavar="N", help="Largest total degree any computation may reach")
    common.add_argument("--guard-seconds", type=float, metavar="S", help="Soft time budget per Groebner basis call")
    common.add_argument("--config", metavar="PATH", help="YAML configuration file")
    common.add_argument("-v", "--verbose", action="count", default=0, help="More logging (-v info, -vv debug)")
    return common


def _add_ideal_args(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("ring", nargs="?", help="Ring, e.g. 'QQ[x,y,z]' or 'Fp(32003)[x,y]'")
    parser.add_argument("gens", nargs="*", help="Generators (separate arguments or one comma-separated list)")
    parser.add_argument("--fixture", choices=sorted(IDEALS), help="Use a built-in ideal")


def _add_strategy_args(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--strategy",
        help=f"One of {', '.join(get_available_strategies())}, or '{tasks.AUTO}' (default from config)",
    )
    parser.add_argument("--justification", help="Why the strategy computes symbolic powers, e.g. dim1-radical")
    parser.add_argument("--element", help="f for user-element-saturation")


def _add_map_args(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("ring", nargs="?", help="Ring of both maps")
    parser.add_argument("--forms", nargs="+", help="Forms f_0..f_n")
    parser.add_argument("--inverse", nargs="+", help="Inverse representatives g_0..g_n")
    parser.add_argument("--fixture", choices=sorted(MAPS), help="Use a built-in inverse pair")


def build_parser() -> argparse.ArgumentParser:
    common = _common_parser()
    parser = argparse.ArgumentParser(
        prog="sympow",
        description="Symbolic powers, free resolutions and Cremona maps, computed exactly.",
        parents=[common],
    )
    parser.add_argument("--version", action="version", version=f"sympow {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("profile", parents=[common], help="Dimension, height, generators and homological flags")
    _add_ideal_args(p)
    p.set_defaults(handler=cmd_profile)

    p = sub.add_parser("resolve", parents=[common], help="Minimal free resolution and Betti table of R/I^n")
    _add_ideal_args(p)
    p.add_argument("--powers", type=int, nargs="+", metavar="N", help="Exponents n to resolve (default 1)")
    p.set_defaults(handler=cmd_resolve)

    p = sub.add_parser("compare", parents=[common], help="Compare I^n with I^(n)")
    _add_ideal_args(p)
    _add_strategy_args(p)
    p.add_argument("-n", type=int, required=True, help="Exponent")
    p.set_defaults(handler=cmd_compare)

    p = sub.add_parser("scan", parents=[common], help="Compare I^n with I^(n) for n = 1..N")
    _add_ideal_args(p)
    _add_strategy_args(p)
    p.add_argument("--n-max", type=int, required=True, metavar="N")
    p.add_argument("--concurrent", action="store_true", help="Evaluate exponents in worker threads")
    p.set_defaults(handler=cmd_scan)

    p = sub.add_parser("classify", parents=[common], help="Classify graphs on four vertices")
    _add_ideal_args(p)
    p.add_argument("--edges", help="Edges such as '1-2 2-3 3-4'")
    p.add_argument("--all", action="store_true", help="All eleven isomorphism classes")
    p.set_defaults(handler=cmd_classify)

    cremona = sub.add_parser("cremona", help="Cremona inverse pairs")
    cremona_sub = cremona.add_subparsers(dest="cremona_command", required=True)
    p = cremona_sub.add_parser("verify", parents=[common], help="Check that G inverts F and extract D")
    _add_map_args(p)
    p.set_defaults(handler=cmd_cremona_verify)
    p = cremona_sub.add_parser("probe", parents=[common], help="Look for the predicted first failure at d'")
    _add_map_args(p)
    _add_strategy_args(p)
    p.add_argument("--check-up-to", type=int, required=True, metavar="N")
    p.add_argument("--assert", dest="asserted", action="append", metavar="HYPOTHESIS",
                   help="Hypothesis taken on trust: quotients-m-primary or rees-s2 (repeatable)")
    p.add_argument("--concurrent", action="store_true", help="Evaluate exponents in worker threads")
    p.set_defaults(handler=cmd_cremona_probe)

    p = sub.add_parser("repro", parents=[common], help="Run built-in reproduction cases")
    p.add_argument("case", help=f"'all' or one of {', '.join(repro.get_available_cases())}")
    p.add_argument("--skip-slow", action="store_true", help="With 'all', skip cases that take minutes")
    p.set_defaults(handler=cmd_repro)

    p = sub.add_parser("run", parents=[common], help="Execute a scenario file")
    p.add_argument("scenario", help="Path to the scenario file")
    p.set_defaults(handler=cmd_run)
    return parser


# ===== entry point =====

def _emit(results: List[TaskResult], json_path: Optional[str]) -> None:
    for result in results:
        if result.text:
            print(result.text)
    if json_path:
        write_json(json_path, results)
        logger.info(f"[CLI] JSON report written to {json_path}")


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.verbose:
        configure_logging("DEBUG" if args.verbose > 1 else "INFO")

    try:
        config = load_config(args.config).with_overrides(degree=args.guard_degree, seconds=args.guard_seconds)
    except (FileNotFoundError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT
    if config.log_level and not args.verbose:
        configure_logging(config.log_level)

    handler: Callable = args.handler
    try:
        with guarded(config.guards):
            results = handler(args, config)
    except GuardAbort as e:
        logger.warning(f"[CLI] guard abort: {e}")
        print(f"aborted: {e}", file=sys.stderr)
        partial = TaskResult(
            task=args.command,
            payload={"error": str(e), "guard": e.guard, "limit": str(e.limit), "observed": str(e.observed)},
            text=kv_table([("aborted", e)]),
            aborted=True,
        )
        _emit([partial], args.json)
        return EXIT_GUARD
    except (SympowError, FileNotFoundError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT

    _emit(results, args.json)
    if any(r.aborted for r in results):
        return EXIT_GUARD
    if getattr(args, "repro_failed", False):
        return EXIT_INPUT
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
