# sympow/cli/report.py
"""Console tables and versioned JSON payloads."""

import json
from pathlib import Path
from typing import Any, Dict, Iterable, List, Optional, Sequence, Tuple

from pydantic import BaseModel, Field

from ..symbolic import SymbolicReport

SCHEMA_VERSION = 1


class TaskResult(BaseModel):
    """Outcome of one CLI task: a JSON-ready payload and its console rendering."""

    task: str
    payload: Dict[str, Any] = Field(default_factory=dict)
    text: str = ""
    aborted: bool = Field(default=False, description="A guard fired; the payload is partial")


def envelope(results: Sequence[TaskResult]) -> Dict[str, Any]:
    body = [{"task": r.task, "aborted": r.aborted, "result": r.payload} for r in results]
    return {"schema_version": SCHEMA_VERSION, "results": body}


def to_json(results: Sequence[TaskResult]) -> str:
    """Deterministic JSON: sorted keys, no timestamps."""
    return json.dumps(envelope(results), sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def write_json(path: str, results: Sequence[TaskResult]) -> None:
    target = Path(path)
    if target.parent and not target.parent.exists():
        target.parent.mkdir(parents=True, exist_ok=True)
    target.write_text(to_json(results), encoding="utf-8")


def kv_table(pairs: Iterable[Tuple[str, Any]]) -> str:
    pairs = [(k, "-" if v is None else str(v)) for k, v in pairs]
    if not pairs:
        return ""
    width = max(len(k) for k, _ in pairs)
    return "\n".join(f"{k:<{width}}  {v}" for k, v in pairs)


def grid(header: Sequence[str], rows: List[Sequence[Any]]) -> str:
    cells = [[str(c) for c in header]] + [["-" if c is None else str(c) for c in row] for row in rows]
    widths = [max(len(row[i]) for row in cells) for i in range(len(header))]
    lines = ["  ".join(c.ljust(w) for c, w in zip(row, widths)).rstrip() for row in cells]
    lines.insert(1, "  ".join("-" * w for w in widths))
    return "\n".join(lines)


def report_rows(reports: Iterable[SymbolicReport]) -> str:
    rows = [
        [r.n, r.verdict(), r.witness, r.witness_degree, r.sat_exponent, r.depth_positive, r.error]
        for r in reports
    ]
    return grid(["n", "verdict", "witness", "deg", "sat", "depth>0", "error"], rows)


def dump(model: Optional[BaseModel]) -> Optional[Dict[str, Any]]:
    return None if model is None else model.model_dump(mode="json")


__all__ = ["SCHEMA_VERSION", "TaskResult", "envelope", "to_json", "write_json", "kv_table", "grid", "report_rows", "dump"]
