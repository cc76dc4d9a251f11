"""Check records and report serialization.

The structured report body is deterministic: the same inputs give the same
bytes.  Wall-clock data lives only in a separate header file.
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any

SCHEMA_VERSION = "1.0"

# every check id prefix maps to one location in the argument being verified
LOCATIONS: dict[str, str] = {
    "local-groups": "local groups (C2)^3 x| E: irreducible characters and orthogonality",
    "lzero": "L0 lattices of the local groups: ranks and basis shapes",
    "landrock": "(k, l) table for blocks with defect group (C2)^3 and its inverse",
    "norm8": "norm-8 vectors in L0: admissible coefficient supports",
    "symbol-identity": "symbol identity c + h+ + h- - 2 rank in the classical defect bounds",
    "classical-defects": "lower bounds on unipotent 2-defects for classical groups",
    "exceptional": "2-defects of named unipotent characters of exceptional groups",
    "tables-e6": "small 2-defect tables for E6(q) and 2E6(q)",
    "f4": "isolated centralizers in F4(q): no combined 2-defect 2 or 3",
    "e8": "E8(q), E6(q)-torus case: nonvanishing via a Zsigmondy prime",
    "zsigmondy": "primitive prime divisors p_n and their cyclotomic divisibility",
    "sylow": "Sylow 2-subgroups of SL2(q), PGL2(q), PSL2(q)",
    "isometry": "extension of the L0 isometry to a perfect isometry",
}


def location(check_id: str) -> str:
    return LOCATIONS[check_id.split("/", 1)[0]]


def _plain(x: Any) -> Any:
    """JSON-ready copy with deterministic key order and no tuples or sets."""
    if isinstance(x, dict):
        return {str(k): _plain(v) for k, v in sorted(x.items(), key=lambda kv: str(kv[0]))}
    if isinstance(x, (list, tuple)):
        return [_plain(v) for v in x]
    if isinstance(x, (set, frozenset)):
        return sorted(_plain(v) for v in x)
    if hasattr(x, "to_text"):
        return x.to_text()
    if hasattr(x, "value") and not isinstance(x, (int, str)):
        return x.value
    return x


@dataclass
class Check:
    id: str
    passed: bool
    details: dict = field(default_factory=dict)

    @property
    def status(self) -> str:
        return "pass" if self.passed else "fail"

    def to_dict(self) -> dict:
        return {"id": self.id, "location": location(self.id), "status": self.status,
                "details": _plain(self.details)}


@dataclass
class Report:
    suite: str
    checks: list[Check] = field(default_factory=list)
    runtime: float = 0.0

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def totals(self) -> dict:
        n_pass = sum(c.passed for c in self.checks)
        return {"checks": len(self.checks), "passed": n_pass, "failed": len(self.checks) - n_pass}

    def body(self) -> dict:
        return {"schema": SCHEMA_VERSION, "suite": self.suite,
                "checks": [c.to_dict() for c in self.checks], "totals": self.totals()}

    def header(self) -> dict:
        return {"schema": SCHEMA_VERSION, "suite": self.suite,
                "generated": time.strftime("%Y-%m-%dT%H:%M:%SZ", time.gmtime()),
                "runtime_seconds": round(self.runtime, 3)}

    def to_json(self) -> str:
        return json.dumps(self.body(), indent=2, sort_keys=True) + "\n"

    def to_text(self) -> str:
        width = max((len(c.id) for c in self.checks), default=10)
        lines = [f"suite: {self.suite}"]
        for c in self.checks:
            lines.append(f"  {c.id:<{width}}  {c.status.upper():<4}  {location(c.id)}")
        t = self.totals()
        lines.append(f"totals: {t['passed']}/{t['checks']} passed, {t['failed']} failed")
        return "\n".join(lines) + "\n"

    def write(self, directory: str | Path) -> list[Path]:
        d = Path(directory)
        d.mkdir(parents=True, exist_ok=True)
        paths = [d / f"{self.suite}.json", d / f"{self.suite}.header.json", d / f"{self.suite}.txt"]
        paths[0].write_text(self.to_json())
        paths[1].write_text(json.dumps(self.header(), indent=2, sort_keys=True) + "\n")
        paths[2].write_text(self.to_text())
        return paths
