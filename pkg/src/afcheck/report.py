"""Canonical JSON reporting: sorted keys, exact numbers, byte-stable output.

No floating point ever appears in a report.  Rationals serialize as
"num/den" strings, integers beyond the 53-bit range as decimal strings so
that consumers in any language reproduce them exactly.
"""

import json
from dataclasses import is_dataclass
from fractions import Fraction

SCHEMA_VERSION = "1"
_SAFE_INT = (1 << 53) - 1


def to_jsonable(obj):
    """Recursive conversion to JSON-safe values under the exactness rules."""
    if obj is None or isinstance(obj, (bool, str)):
        return obj
    if isinstance(obj, int):
        return obj if abs(obj) <= _SAFE_INT else str(obj)
    if isinstance(obj, Fraction):
        if obj.denominator == 1:
            return to_jsonable(obj.numerator)
        return f"{obj.numerator}/{obj.denominator}"
    if isinstance(obj, float):
        raise TypeError("floating point is not allowed in reports")
    if isinstance(obj, dict):
        return {str(k): to_jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [to_jsonable(v) for v in obj]
    if hasattr(obj, "to_dict"):
        return to_jsonable(obj.to_dict())
    if is_dataclass(obj):
        return to_jsonable(vars(obj))
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def field_summary(field):
    return {
        "poly": list(field.coeffs),
        "degree": field.degree,
        "signature": list(field.signature),
        "poly_disc": field.poly_disc,
        "field_disc": field.field_disc,
    }


def build_report(field, command, payload, caveats=None, timing=None):
    return {
        "schema_version": SCHEMA_VERSION,
        "field": field_summary(field) if field is not None else None,
        "command": command,
        "result": payload,
        "caveats": caveats or [],
        "timing": timing,
    }


def emit_json(report) -> str:
    """Canonical byte-stable JSON: sorted keys, compact, trailing newline."""
    stripped = dict(report)
    stripped["timing"] = None  # wallclock would break byte stability
    data = to_jsonable(stripped)
    return json.dumps(data, sort_keys=True, separators=(",", ":"),
                      ensure_ascii=False) + "\n"


def parse_report(text: str):
    return json.loads(text)


def emit_human(report) -> str:
    lines = []
    field = report.get("field")
    if field:
        lines.append(f"field: {field['poly']} "
                     f"(degree {field['degree']}, signature {tuple(field['signature'])}, "
                     f"disc {field['poly_disc']})")
    lines.append(f"command: {report['command']}")
    result = to_jsonable(report["result"])
    if isinstance(result, dict) and "hypotheses" in result and "applies" in result:
        _render_verdict(result, lines)
    else:
        _render(result, lines, indent=1)
    for caveat in report.get("caveats", []):
        lines.append(f"caveat: {caveat}")
    if report.get("timing") is not None:
        lines.append(f"elapsed: {report['timing']:.3f}s")
    return "\n".join(lines) + "\n"


def _render_verdict(result, lines):
    lines.append(f"  theorem: {result['theorem']}")
    lines.append(f"  applies: {result['applies']}")
    rows = []
    for hyp in result["hypotheses"]:
        status = "assumed" if hyp.get("assumed") else ("yes" if hyp["holds"] else "NO")
        rows.append((status, hyp["name"]))
    width = max(len(s) for s, _ in rows)
    lines.append("  hypotheses:")
    for status, name in rows:
        lines.append(f"    [{status:>{width}}] {name}")
    for hyp in result["hypotheses"]:
        wit = hyp.get("witness")
        if hyp["holds"] or not isinstance(wit, dict):
            continue
        if "counterexample" in wit:
            wit = wit["counterexample"]
        if "lambda" in wit:
            lines.append(f"  counterexample: lambda={wit['lambda']} "
                         f"mu={wit['mu']}")
    for note in result.get("notes", []):
        lines.append(f"  note: {note}")
    lines.append(f"  conclusion (when hypotheses hold): {result['conclusion']}")


def _render(obj, lines, indent):
    pad = "  " * indent
    if isinstance(obj, dict):
        for k in sorted(obj):
            v = obj[k]
            if isinstance(v, (dict, list)) and v:
                lines.append(f"{pad}{k}:")
                _render(v, lines, indent + 1)
            else:
                lines.append(f"{pad}{k}: {v}")
    elif isinstance(obj, list):
        for i, v in enumerate(obj):
            if isinstance(v, (dict, list)) and v:
                lines.append(f"{pad}- [{i}]")
                _render(v, lines, indent + 1)
            else:
                lines.append(f"{pad}- {v}")
    else:
        lines.append(f"{pad}{obj}")
