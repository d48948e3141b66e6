# sympow/cli/scenario.py
"""
Scenario files: one task per file, flat ``key: value`` lines.

Example::

    # rigidity of the tetrahedron ideal
    task: scan
    ideal: tetrahedron
    n_max: 3
    strategy: minimal-prime-intersection

Polynomial lists are comma-separated outside parentheses. ``ideal`` and
``map`` may name a built-in fixture instead of listing generators.
"""

from enum import Enum
from pathlib import Path
from typing import Dict, List, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, PrivateAttr, ValidationError, model_validator

from ..cremona import CremonaMap
from ..exceptions import ParseError, ScenarioError
from ..fixtures import IDEALS, MAPS, named_ideal, named_map
from ..ideal import Ideal
from ..polyring import Poly, RingSpec, parse_poly, parse_ring
from ..utils.guards import Guards, guarded
from ..utils.logger import logger
from ..utils.parser import split_top_level
from .report import TaskResult
from . import tasks


class Task(str, Enum):
    PROFILE = "profile"
    RESOLVE = "resolve"
    COMPARE = "compare"
    SCAN = "scan"
    CLASSIFY = "classify"
    CREMONA_VERIFY = "cremona-verify"
    CREMONA_PROBE = "cremona-probe"

    def __str__(self):
        return self.value


_REQUIRED = {
    Task.PROFILE: ("ideal",),
    Task.RESOLVE: ("ideal",),
    Task.COMPARE: ("ideal", "n"),
    Task.SCAN: ("ideal", "n_max"),
    Task.CLASSIFY: (),
    Task.CREMONA_VERIFY: ("map",),
    Task.CREMONA_PROBE: ("map", "check_up_to"),
}

_KEY_ALIASES = {"assert": "asserted", "json": "json_path"}

# (line, column of the value), 1-based
Position = Tuple[int, int]


class Scenario(BaseModel):
    """A parsed scenario file; polynomial text is resolved lazily in its ring."""

    model_config = ConfigDict(extra="forbid")

    task: Task
    ring: Optional[str] = None
    ideal: Optional[str] = None
    map: Optional[str] = Field(default=None, description="Fixture name of an inverse pair")
    forms: Optional[str] = None
    inverse: Optional[str] = None
    edges: Optional[str] = Field(default=None, description="Graph on 1..4, e.g. '1-2, 2-3'")
    n: Optional[int] = Field(default=None, ge=1)
    n_max: Optional[int] = Field(default=None, ge=2)
    powers: Optional[str] = Field(default=None, description="Exponents to resolve, e.g. '1, 2, 3'")
    check_up_to: Optional[int] = Field(default=None, ge=1)
    strategy: Optional[str] = None
    justification: Optional[str] = None
    element: Optional[str] = None
    asserted: List[str] = Field(default_factory=list)
    concurrent: bool = False
    guard_degree: Optional[int] = Field(default=None, gt=0)
    guard_seconds: Optional[float] = Field(default=None, gt=0)
    json_path: Optional[str] = Field(default=None, description="Where to write the JSON report (key: json)")

    _positions: Dict[str, Position] = PrivateAttr(default_factory=dict)

    @model_validator(mode="after")
    def _inputs_present(self):
        # forms + inverse stand in for map
        for key in _REQUIRED[self.task]:
            if key == "map" and self.map is None and self.forms is not None and self.inverse is not None:
                continue
            if getattr(self, key) is None:
                raise ValueError(f"task '{self.task}' needs '{key}'")
        return self

    # ----- reading -----

    @classmethod
    def parse(cls, text: str) -> "Scenario":
        """
        Raises:
            ScenarioError: Unknown or duplicate key, missing key, bad value
        """
        values: Dict[str, str] = {}
        positions: Dict[str, Position] = {}
        for number, raw in enumerate(text.splitlines(), start=1):
            line = raw.split("#", 1)[0]
            if not line.strip():
                continue
            if ":" not in line:
                raise ScenarioError("expected 'key: value'", line=number, column=len(raw) - len(raw.lstrip()) + 1)
            key, value = line.split(":", 1)
            name = key.strip().replace("-", "_")
            name = _KEY_ALIASES.get(name, name)
            if name not in cls.model_fields:
                raise ScenarioError(f"unknown key '{key.strip()}'", line=number, column=raw.index(key.strip()) + 1)
            if name in values:
                raise ScenarioError(f"duplicate key '{key.strip()}'", line=number, column=raw.index(key.strip()) + 1)
            column = len(key) + 2 + (len(value) - len(value.lstrip()))
            values[name] = value.strip()
            positions[name] = (number, column)

        if "task" not in values:
            raise ScenarioError("missing key 'task'")
        data: Dict[str, object] = dict(values)
        if "asserted" in data:
            data["asserted"] = [piece for _, piece in split_top_level(values["asserted"])]
        try:
            scenario = cls(**data)
        except ValidationError as e:
            error = e.errors()[0]
            field = str(error["loc"][0]) if error["loc"] else "task"
            line, column = positions.get(field, positions["task"])
            raise ScenarioError(f"{field}: {error['msg']}", line=line, column=column) from None
        scenario._positions = positions
        return scenario

    @classmethod
    def load(cls, path: str) -> "Scenario":
        file = Path(path)
        if not file.exists():
            raise FileNotFoundError(f"Scenario file not found: {path}")
        return cls.parse(file.read_text(encoding="utf-8"))

    # ----- inputs -----

    def _ring(self) -> RingSpec:
        if self.ring is None:
            raise ScenarioError("polynomials need a 'ring' line")
        line, column = self._positions.get("ring", (None, None))
        try:
            return parse_ring(self.ring)
        except ParseError as e:
            raise e.located(line, column - 1) if line else e

    def _polys(self, key: str, ring: RingSpec) -> List[Poly]:
        text = getattr(self, key)
        line, column = self._positions.get(key, (None, None))
        polys = []
        try:
            pieces = split_top_level(text)
        except ParseError as e:
            raise e.located(line, column - 1) if line else e
        for offset, piece in pieces:
            try:
                polys.append(parse_poly(ring, piece))
            except ParseError as e:
                raise e.located(line, column - 1 + offset) if line else e
        return polys

    def ideal_input(self) -> Ideal:
        if self.ideal in IDEALS:
            named = named_ideal(self.ideal)
            if self.ring is not None and not self._ring().same_ring(named.ring):
                line, column = self._positions["ring"]
                raise ScenarioError(
                    f"'{self.ideal}' lives in {named.ring}, not {self.ring}", line=line, column=column
                )
            return named
        ring = self._ring()
        return Ideal(self._polys("ideal", ring), ring=ring)

    def map_input(self) -> Tuple[CremonaMap, CremonaMap]:
        if self.map is not None:
            if self.map not in MAPS:
                line, column = self._positions["map"]
                raise ScenarioError(f"unknown map '{self.map}'. Available maps: {sorted(MAPS)}", line=line, column=column)
            return named_map(self.map)
        ring = self._ring()
        return (
            CremonaMap.of(self._polys("forms", ring), ring=ring),
            CremonaMap.of(self._polys("inverse", ring), ring=ring),
        )

    def edges_input(self) -> Optional[List[Tuple[int, int]]]:
        if self.edges is None:
            return None
        return parse_edges(self.edges)

    def powers_input(self) -> List[int]:
        if self.powers is None:
            return [1]
        try:
            return [int(piece) for _, piece in split_top_level(self.powers)]
        except ValueError:
            line, column = self._positions["powers"]
            raise ScenarioError(f"powers must be integers, got '{self.powers}'", line=line, column=column) from None

    def guards(self, base: Guards) -> Guards:
        update = {}
        if self.guard_degree is not None:
            update["degree"] = self.guard_degree
        if self.guard_seconds is not None:
            update["seconds"] = self.guard_seconds
        return base.model_copy(update=update) if update else base


def parse_edges(text: str) -> List[Tuple[int, int]]:
    """'1-2, 2-3' or '1-2 2-3' into vertex pairs."""
    edges = []
    for piece in text.replace(",", " ").split():
        parts = piece.split("-")
        if len(parts) != 2 or not all(p.isdigit() for p in parts):
            raise ScenarioError(f"bad edge '{piece}', expected 'a-b'")
        edges.append((int(parts[0]), int(parts[1])))
    return edges


def execute(scenario: Scenario, default_strategy: Optional[str] = None) -> TaskResult:
    """Run the scenario's task under the active guards."""
    task = scenario.task
    logger.info(f"[CLI] running task {task}")
    if task == Task.PROFILE:
        return tasks.profile_task(scenario.ideal_input())
    if task == Task.RESOLVE:
        return tasks.resolve_task(scenario.ideal_input(), scenario.powers_input())
    if task == Task.CLASSIFY:
        ideal = scenario.ideal_input() if scenario.ideal is not None else None
        return tasks.classify_task(edges=scenario.edges_input(), ideal=ideal)

    if task in (Task.COMPARE, Task.SCAN):
        I = scenario.ideal_input()
        strategy = tasks.build_strategy(
            I, scenario.strategy or default_strategy, scenario.justification, scenario.element
        )
        if task == Task.COMPARE:
            return tasks.compare_task(I, scenario.n, strategy)
        return tasks.scan_task(I, scenario.n_max, strategy, concurrent=scenario.concurrent)

    F, G = scenario.map_input()
    if task == Task.CREMONA_VERIFY:
        return tasks.cremona_verify_task(F, G)
    strategy = tasks.build_strategy(
        F.base_ideal, scenario.strategy or default_strategy, scenario.justification, scenario.element
    )
    return tasks.cremona_probe_task(
        F, G, strategy, scenario.check_up_to, asserted=scenario.asserted, concurrent=scenario.concurrent
    )


def run_scenario(path: str, base_guards: Optional[Guards] = None, default_strategy: Optional[str] = None) -> TaskResult:
    """
    Load and execute a scenario file; its guard keys override ``base_guards``.

    Raises:
        ScenarioError, ParseError: Malformed file
        GuardAbort: A guard fired outside a per-exponent scan
    """
    scenario = Scenario.load(path)
    with guarded(scenario.guards(base_guards or Guards())):
        return execute(scenario, default_strategy)


__all__ = ["Task", "Scenario", "parse_edges", "execute", "run_scenario"]
