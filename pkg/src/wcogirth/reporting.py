"""Report documents: one JSON object (``schema: 1``) or plain text per invocation."""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Any

from .cogirth import Cocircuit
from .errors import ParseError
from .matroid import WeightedRepMatroid
from .verify import ScanReport, VerificationReport

SCHEMA = 1


def fraction_str(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


def cogirth_document(M: WeightedRepMatroid, g: int, witness: Cocircuit) -> dict:
    return {
        "schema": SCHEMA,
        "kind": "cogirth",
        "q": M.field.q,
        "n": M.n,
        "rank": M.rank,
        "total_weight": M.total_weight,
        "cogirth": g,
        "ratio": fraction_str(Fraction(M.total_weight, g)),
        "witness": list(witness.sorted_support()),
    }


def verify_document(reports: list[VerificationReport], notes: list[str] | None = None) -> dict:
    return {
        "schema": SCHEMA,
        "kind": "verify",
        "ok": all(r.ok for r in reports),
        "notes": list(notes or []),
        "reports": [r.to_dict() for r in reports],
    }


def scan_document(report: ScanReport) -> dict:
    return {"schema": SCHEMA, "kind": "scan", "ok": report.ok, "scan": report.to_dict()}


def dumps(doc: dict) -> str:
    return json.dumps(doc, indent=2, sort_keys=True)


def loads(text: str) -> dict:
    """Parse a structured document, turning verification reports back into objects."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"not a report document: {exc}") from None
    if not isinstance(doc, dict) or doc.get("schema") != SCHEMA:
        raise ParseError(f"unsupported report schema {doc.get('schema') if isinstance(doc, dict) else None!r}")
    if doc.get("kind") == "verify":
        doc["reports"] = [VerificationReport.from_dict(r) for r in doc["reports"]]
    return doc


def _fmt(v: Any) -> str:
    if isinstance(v, bool) or v is None:
        return {True: "yes", False: "no", None: "n/a"}[v]
    return str(v)


def render_text(doc: dict) -> str:
    kind = doc["kind"]
    lines: list[str] = []
    if kind == "cogirth":
        for key in ("q", "n", "rank", "total_weight", "cogirth", "ratio"):
            lines.append(f"{key}: {doc[key]}")
        lines.append("witness: " + " ".join(str(x) for x in doc["witness"]))
    elif kind == "verify":
        for note in doc.get("notes", []):
            lines.append(f"note: {note}")
        for rep in doc["reports"]:
            d = rep.to_dict() if isinstance(rep, VerificationReport) else rep
            lines.append(f"[{d['check']}] {d['instance']}")
            lines.append(f"  q={d['q']} r={d['r']} n={d['n']} w(M)={d['total_weight']} g*={d['cogirth']} ratio={d['ratio']}")
            lines.append(f"  bound: {d['bound_lhs']} >= {d['bound_rhs']} {_fmt(d['bound_holds'])}  equality: {_fmt(d['equality'])}")
            for name, c in d["conditions"].items():
                extra = f"  witness={json.dumps(c['witness'])}" if c["witness"] is not None else ""
                note = f"  ({c['note']})" if c["note"] else ""
                lines.append(f"  condition {name}: {_fmt(c['holds'])}{note}{extra}")
            lines.append(f"  consistency: {_fmt(d['consistency'])}")
            lines.append("  witness cocircuit: " + " ".join(str(x) for x in d["witness"]))
            for p in d["problems"]:
                lines.append(f"  PROBLEM: {p}")
        lines.append(f"ok: {_fmt(doc['ok'])}")
    elif kind == "scan":
        s = doc["scan"]
        for key, value in s.items():
            if key not in ("counterexamples", "spec"):
                lines.append(f"{key}: {value}")
        lines.append("spec: " + json.dumps(s["spec"], sort_keys=True))
        for cx in s["counterexamples"]:
            lines.append("counterexample:")
            lines.extend("  " + l for l in cx["matroid"].splitlines())
            lines.extend(f"  PROBLEM: {p}" for p in cx["report"]["problems"])
        lines.append(f"ok: {_fmt(doc['ok'])}")
    else:
        raise ParseError(f"unknown document kind {kind!r}")
    return "\n".join(lines) + "\n"
