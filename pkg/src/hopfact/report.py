"""Machine-readable pass/fail reports shared by all verifiers."""

from __future__ import annotations

import json
from dataclasses import dataclass, field

PASS = "pass"
FAIL = "fail"
ERROR = "error"
COUNTEREXAMPLE = "counterexample"


@dataclass
class Report:
    """Outcome of one check: status plus explicit witnesses on failure.

    ``witnesses`` carries basis indices / vectors that exhibit a violation;
    ``details`` holds check-specific values worth echoing.  The JSON and the
    human rendering come from the same structure; ``timing_ms`` is excluded
    from comparisons.
    """

    check: str
    status: str = PASS
    witnesses: list = field(default_factory=list)
    details: dict = field(default_factory=dict)
    timing_ms: float | None = None

    @property
    def ok(self):
        return self.status in (PASS, COUNTEREXAMPLE)

    def fail(self, witness=None, **details):
        self.status = FAIL
        if witness is not None:
            self.witnesses.append(witness)
        self.details.update(details)
        return self

    def to_json_dict(self, with_timing=True):
        out = {
            "check": self.check,
            "status": self.status,
            "witnesses": _plain(self.witnesses),
            "details": _plain(self.details),
        }
        if with_timing and self.timing_ms is not None:
            out["timing_ms"] = self.timing_ms
        return out

    def render_text(self):
        lines = [f"[{self.status.upper()}] {self.check}"]
        for key in sorted(self.details):
            lines.append(f"    {key}: {_compact(self.details[key])}")
        for w in self.witnesses[:8]:
            lines.append(f"    witness: {_compact(w)}")
        if len(self.witnesses) > 8:
            lines.append(f"    ... {len(self.witnesses) - 8} more witnesses")
        return "\n".join(lines)


def _plain(obj):
    """Coerce report payloads into JSON-serializable primitives."""
    from fractions import Fraction
    if isinstance(obj, Fraction):
        return str(obj)
    if isinstance(obj, dict):
        return {str(k): _plain(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_plain(x) for x in obj]
    if isinstance(obj, (int, float, str, bool)) or obj is None:
        return obj
    if isinstance(obj, Report):
        return obj.to_json_dict(with_timing=False)
    if hasattr(obj, "to_json"):
        return obj.to_json()
    return repr(obj)


def _compact(obj):
    return json.dumps(_plain(obj), separators=(",", ":"))

