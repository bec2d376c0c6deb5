"""Check reports: itemized verdicts with stable ordering and rendering.

Verdicts are EQUAL (proved), INDETERMINATE (reduction left a residual;
no claim either way) and UNEQUAL_NUMERIC (a residual coefficient is
numerically non-zero at a sampled parameter value).  Reports merge
deterministically: items are keyed and sorted by identity id, so the
rendered output is byte-identical regardless of scheduling.  Timing is
carried on the items but excluded from rendering unless asked for.
"""

from __future__ import annotations

import json

EQUAL = "EQUAL"
INDETERMINATE = "INDETERMINATE"
UNEQUAL_NUMERIC = "UNEQUAL_NUMERIC"

REPORT_SCHEMA = "twistcheck-report/1"


class CheckItem:
    __slots__ = ("ident", "anchor", "verdict", "elapsed", "residuals",
                 "numeric_max", "trace")

    def __init__(self, ident, anchor, verdict, elapsed=0.0, residuals=None,
                 numeric_max=None, trace=None):
        self.ident = ident
        self.anchor = anchor
        self.verdict = verdict
        self.elapsed = elapsed
        self.residuals = residuals or []
        self.numeric_max = numeric_max
        self.trace = trace

    def as_dict(self, timings=False):
        out = {"id": self.ident, "anchor": self.anchor, "verdict": self.verdict}
        if self.numeric_max is not None:
            out["numeric_max"] = "%.3e" % self.numeric_max
        if timings:
            out["elapsed"] = round(self.elapsed, 6)
        if self.trace is not None:
            out["trace"] = list(self.trace)
        return out


class CheckReport:
    """A named suite of check items, canonically ordered by identity id."""

    def __init__(self, suite, items=()):
        self.suite = suite
        self.items = sorted(items, key=lambda it: it.ident)

    def merge(self, other):
        return CheckReport("%s+%s" % (self.suite, other.suite)
                           if self.suite != other.suite else self.suite,
                           list(self.items) + list(other.items))

    def counts(self):
        c = {EQUAL: 0, INDETERMINATE: 0, UNEQUAL_NUMERIC: 0}
        for it in self.items:
            c[it.verdict] += 1
        return c

    def all_equal(self):
        return all(it.verdict == EQUAL for it in self.items)

    def render_text(self, timings=False):
        lines = ["suite %s" % self.suite]
        for it in self.items:
            bits = ["  %-12s %s" % (it.verdict, it.ident)]
            if it.numeric_max is not None:
                bits.append(" numeric_max=%.3e" % it.numeric_max)
            if timings:
                bits.append(" (%.3fs)" % it.elapsed)
            if it.anchor:
                bits.append("  [%s]" % it.anchor)
            lines.append("".join(bits))
        c = self.counts()
        lines.append("  -- %d equal, %d indeterminate, %d unequal-numeric"
                     % (c[EQUAL], c[INDETERMINATE], c[UNEQUAL_NUMERIC]))
        return "\n".join(lines)

    def render_json(self, timings=False):
        payload = {
            "schema": REPORT_SCHEMA,
            "suite": self.suite,
            "items": [it.as_dict(timings) for it in self.items],
            "counts": self.counts(),
        }
        return json.dumps(payload, indent=2, sort_keys=True)
