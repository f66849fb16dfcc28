"""Check items and machine-readable reports shared by every suite."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional


SCHEMA = "qhowe-report/1"

__all__ = ["CheckItem", "Report", "SCHEMA", "state_json", "vec_json", "TruncationUnsafe"]


class TruncationUnsafe(ValueError):
    """No input degree keeps every intermediate inside the degree cutoff."""


def state_json(x) -> List[List[int]]:
    return [list(row) for row in x]


def vec_json(vec: Dict, limit: int = 6) -> List[Dict[str, Any]]:
    items = sorted(vec.items())[:limit]
    return [{"state": state_json(k), "coeff": str(c)} for k, c in items]


@dataclass
class CheckItem:
    name: str
    status: str
    witness: Optional[Dict[str, Any]] = None
    values: Optional[Dict[str, Any]] = None

    def __post_init__(self):
        if self.status not in ("pass", "fail", "skip"):
            raise ValueError(f"bad status {self.status!r}")

    @property
    def ok(self) -> bool:
        return self.status != "fail"

    def to_dict(self) -> Dict[str, Any]:
        d: Dict[str, Any] = {"name": self.name, "status": self.status}
        if self.witness is not None:
            d["witness"] = self.witness
        if self.values is not None:
            d["values"] = self.values
        return d

    @classmethod
    def from_dict(cls, d: Dict[str, Any]) -> "CheckItem":
        return cls(d["name"], d["status"], d.get("witness"), d.get("values"))


@dataclass
class Report:
    suite: str
    config: Dict[str, Any]
    items: List[CheckItem] = field(default_factory=list)
    meta: Dict[str, Any] = field(default_factory=dict)

    def add(self, item: CheckItem) -> CheckItem:
        self.items.append(item)
        return item

    def extend(self, items) -> None:
        self.items.extend(items)

    @property
    def summary(self) -> Dict[str, int]:
        counts = {"pass": 0, "fail": 0, "skip": 0}
        for it in self.items:
            counts[it.status] += 1
        counts["total"] = len(self.items)
        return counts

    @property
    def ok(self) -> bool:
        return all(it.ok for it in self.items)

    def failures(self) -> List[CheckItem]:
        return [it for it in self.items if it.status == "fail"]

    def body(self) -> Dict[str, Any]:
        """Everything except timing metadata; this is what determinism compares."""
        return {
            "schema": SCHEMA,
            "suite": self.suite,
            "config": self.config,
            "items": [it.to_dict() for it in self.items],
            "summary": self.summary,
        }

    def to_dict(self) -> Dict[str, Any]:
        d = self.body()
        d["meta"] = self.meta
        return d

    def body_json(self) -> str:
        return json.dumps(self.body(), indent=2, sort_keys=True)

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True)

    @classmethod
    def from_dict(cls, d: Dict[str, Any]) -> "Report":
        if d.get("schema") != SCHEMA:
            raise ValueError(f"unknown report schema {d.get('schema')!r}")
        rep = cls(d["suite"], d["config"], [CheckItem.from_dict(x) for x in d["items"]],
                  d.get("meta", {}))
        if rep.summary != d["summary"]:
            raise ValueError("report summary does not match its items")
        return rep

    @classmethod
    def from_json(cls, text: str) -> "Report":
        return cls.from_dict(json.loads(text))
