"""Structured verification reports with deterministic witnesses."""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .fields import format_scalar
from .tensor import LinearMap, Tensor

REPORT_SCHEMA = "monodromy-report/1"


def _render(value):
    if isinstance(value, Tensor):
        return value.pretty()
    if isinstance(value, LinearMap):
        return repr(value)
    if isinstance(value, (list, tuple)):
        return [_render(v) for v in value]
    if isinstance(value, dict):
        return {str(k): _render(v) for k, v in value.items()}
    if isinstance(value, (int, str, bool)) or value is None:
        return value
    return format_scalar(value)


@dataclass
class Check:
    name: str
    ok: bool
    witness: dict | None = None
    info: dict = field(default_factory=dict)

    def to_dict(self):
        d = {"name": self.name, "ok": self.ok}
        if self.witness is not None:
            d["witness"] = _render(self.witness)
        if self.info:
            d["info"] = _render(self.info)
        return d


@dataclass
class Report:
    target: str
    checks: list = field(default_factory=list)

    @property
    def ok(self):
        return all(c.ok for c in self.checks)

    def __bool__(self):
        return self.ok

    def __getitem__(self, name):
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def __contains__(self, name):
        return any(c.name == name for c in self.checks)

    def record(self, name, ok, witness=None, info=None, **more):
        info = dict(info or {}, **more)
        self.checks.append(Check(name, bool(ok), witness, info))
        return bool(ok)

    def equal(self, name, lhs, rhs, where=None, **info):
        """Record an exact equality of tensors (or scalars/maps)."""
        if lhs == rhs:
            return self.record(name, True, **info)
        witness = {"lhs": lhs, "rhs": rhs}
        if isinstance(lhs, (Tensor, LinearMap)) and isinstance(rhs, (Tensor, LinearMap)):
            try:
                diff = lhs.first_difference(rhs)
            except Exception:
                diff = None
            if diff is not None:
                witness = {"index": diff[0], "lhs": diff[1], "rhs": diff[2]}
        if where is not None:
            witness["at"] = where
        return self.record(name, False, witness, **info)

    def first_failure(self, name, cases):
        """Record a check over ``(where, lhs, rhs)`` cases; keep the first failure."""
        for where, lhs, rhs in cases:
            if lhs != rhs:
                return self.equal(name, lhs, rhs, where=where)
        return self.record(name, True)

    def extend(self, other, prefix=""):
        for c in other.checks:
            self.checks.append(Check(prefix + c.name, c.ok, c.witness, c.info))
        return other.ok

    def failures(self):
        return [c for c in self.checks if not c.ok]

    def to_dict(self):
        return {
            "schema": REPORT_SCHEMA,
            "target": self.target,
            "ok": self.ok,
            "checks": [c.to_dict() for c in self.checks],
        }

    def to_json(self):
        return json.dumps(self.to_dict(), indent=2, sort_keys=True, ensure_ascii=False)

    def render(self):
        lines = [f"== {self.target}"]
        for c in self.checks:
            mark = "PASS" if c.ok else "FAIL"
            extra = ""
            if c.info:
                extra = "  " + ", ".join(f"{k}: {_render(v)}" for k, v in sorted(c.info.items()))
            lines.append(f"  [{mark}] {c.name}{extra}")
            if not c.ok and c.witness:
                w = _render(c.witness)
                for k in sorted(w):
                    lines.append(f"         {k} = {w[k]}")
        return "\n".join(lines)

    def __str__(self):
        return self.render()
