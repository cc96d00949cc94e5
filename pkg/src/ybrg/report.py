"""Verification reports and their JSON / CSV serialisation.

Floats are written with 17 significant digits so every double survives a
write/read cycle bit for bit.
"""
from __future__ import annotations

import json
import math
import os
import tempfile
from dataclasses import dataclass, field
from typing import Any

__all__ = ["Check", "Report", "format_float", "dumps", "write_atomic", "csv_text"]

_RELATIONS = {
    "<": lambda v, t: v < t,
    "<=": lambda v, t: v <= t,
    ">": lambda v, t: v > t,
}


def format_float(x: float) -> str:
    if math.isnan(x):
        return "NaN"
    if math.isinf(x):
        return "Infinity" if x > 0 else "-Infinity"
    s = format(x, ".17g")
    if not any(ch in s for ch in ".en"):
        s += ".0"
    return s


def _encode(obj: Any, level: int) -> str:
    pad = "  " * (level + 1)
    end = "  " * level
    if obj is None or isinstance(obj, bool):
        return json.dumps(obj)
    if isinstance(obj, int):
        return str(obj)
    if isinstance(obj, float):
        return format_float(obj)
    if isinstance(obj, str):
        return json.dumps(obj)
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        items = [f"{pad}{json.dumps(str(k))}: {_encode(v, level + 1)}" for k, v in obj.items()]
        return "{\n" + ",\n".join(items) + "\n" + end + "}"
    if isinstance(obj, (list, tuple)):
        if not obj:
            return "[]"
        items = [pad + _encode(v, level + 1) for v in obj]
        return "[\n" + ",\n".join(items) + "\n" + end + "]"
    if hasattr(obj, "item"):  # numpy scalar
        return _encode(obj.item(), level)
    raise TypeError(f"cannot serialise {type(obj).__name__}")


def dumps(obj: Any) -> str:
    return _encode(obj, 0) + "\n"


@dataclass
class Check:
    name: str
    params: dict
    value: float | None
    threshold: float
    passed: bool

    @classmethod
    def evaluate(cls, name: str, value: float, threshold: float, relation: str = "<",
                 **params) -> "Check":
        value = float(value)
        ok = math.isfinite(value) and _RELATIONS[relation](value, threshold)
        return cls(name, {"relation": relation, **params}, value, float(threshold), ok)

    @classmethod
    def failed(cls, name: str, error: Exception, threshold: float = math.nan,
               **params) -> "Check":
        return cls(name, {**params, "error": f"{type(error).__name__}: {error}"},
                   None, threshold, False)

    def to_dict(self) -> dict:
        return {"name": self.name, "params": self.params, "value": self.value,
                "threshold": self.threshold, "pass": self.passed}

    @classmethod
    def from_dict(cls, d: dict) -> "Check":
        value = None if d["value"] is None else float(d["value"])
        return cls(d["name"], d["params"], value, float(d["threshold"]), bool(d["pass"]))


@dataclass
class Report:
    version: str
    timestamp: str
    config: dict
    checks: list[Check] = field(default_factory=list)

    @property
    def verdict(self) -> bool:
        return all(c.passed for c in self.checks)

    def to_dict(self) -> dict:
        return {"version": self.version, "timestamp": self.timestamp,
                "config": self.config, "checks": [c.to_dict() for c in self.checks],
                "verdict": "pass" if self.verdict else "fail"}

    def to_json(self) -> str:
        return dumps(self.to_dict())

    @classmethod
    def from_dict(cls, d: dict) -> "Report":
        report = cls(d["version"], d["timestamp"], d["config"],
                     [Check.from_dict(c) for c in d["checks"]])
        if d.get("verdict") not in (None, "pass" if report.verdict else "fail"):
            raise ValueError("stored verdict disagrees with the checks")
        return report

    @classmethod
    def from_json(cls, text: str) -> "Report":
        return cls.from_dict(json.loads(text))


def csv_text(header: list[str], rows) -> str:
    lines = [",".join(header)]
    for row in rows:
        lines.append(",".join(format_float(float(x)) for x in row))
    return "\n".join(lines) + "\n"


def write_atomic(path: str, text: str) -> None:
    """Write ``text`` to ``path`` via a temporary file and rename."""
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".ybrg-", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise
