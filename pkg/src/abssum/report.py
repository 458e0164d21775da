"""Outcome records for identity campaigns."""
from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional


@dataclass
class Instance:
    params: Dict[str, Any]
    lhs: Any
    rhs: Any
    equal: bool
    note: str = ""

    def as_dict(self, family: str) -> dict:
        # big integers travel as decimal strings, never as JSON numbers
        return {
            "family": family,
            "params": self.params,
            "lhs": None if self.lhs is None else str(self.lhs),
            "rhs": None if self.rhs is None else str(self.rhs),
            "equal": self.equal,
            "note": self.note,
        }


@dataclass
class VerificationReport:
    family: str
    instances: List[Instance] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(i.equal for i in self.instances)

    @property
    def failures(self) -> List[Instance]:
        return [i for i in self.instances if not i.equal]

    def add(self, params: dict, lhs, rhs, equal: bool, note: str = "") -> Instance:
        inst = Instance(dict(params), lhs, rhs, bool(equal), note)
        self.instances.append(inst)
        return inst

    def summary(self) -> str:
        ok = sum(i.equal for i in self.instances)
        status = "PASS" if self.passed else "FAIL"
        return f"{self.family}: {ok}/{len(self.instances)} {status}"

    def to_text(self) -> str:
        lines = []
        for inst in self.instances:
            params = " ".join(f"{k}={v}" for k, v in inst.params.items())
            mark = "ok" if inst.equal else "MISMATCH"
            line = f"{self.family} {params} lhs={inst.lhs} rhs={inst.rhs} {mark}"
            if inst.note:
                line += f" ({inst.note})"
            lines.append(line)
        lines.append(self.summary())
        return "\n".join(lines)

    def to_jsonl(self) -> str:
        return "\n".join(json.dumps(i.as_dict(self.family), sort_keys=True)
                         for i in self.instances)

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["family", "params", "lhs", "rhs", "equal", "note"])
        for inst in self.instances:
            params = ";".join(f"{k}={v}" for k, v in inst.params.items())
            writer.writerow([self.family, params, _s(inst.lhs), _s(inst.rhs),
                             str(inst.equal).lower(), inst.note])
        return buf.getvalue().rstrip("\n")

    def render(self, fmt: str = "text") -> str:
        if fmt == "jsonl":
            return self.to_jsonl()
        if fmt == "csv":
            return self.to_csv()
        return self.to_text()


def _s(x: Optional[Any]) -> str:
    return "" if x is None else str(x)
