"""JSON serialization of operators; round-trips are bit-exact.

Document shape:

    {"level": n,
     "lines": [{"orientation": "diag"|"anti", "offset": d,
                "left_limit": E, "right_limit": E,
                "window_start": s, "window": [E, ...]}, ...],
     "correction": [{"row": i, "col": j, "value": E}, ...]}

where an entry E is a scalar at level 1 ("a/b" string or {"mod": p,
"val": v}) and a nested operator document at level n >= 2.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Any

from .fields import Field, PrimeField, QQ, Scalar
from .operators import Entry, EvSeq, TateOp


class SchemaError(ValueError):
    """The document does not conform to the operator schema."""


def scalar_to_json(s: Scalar) -> Any:
    if isinstance(s.field, PrimeField):
        return {"mod": s.field.p, "val": s.value}
    frac: Fraction = s.value
    return f"{frac.numerator}/{frac.denominator}" if frac.denominator != 1 \
        else str(frac.numerator)


def scalar_from_json(doc: Any, field: Field | None = None) -> Scalar:
    if isinstance(doc, dict):
        if set(doc) != {"mod", "val"}:
            raise SchemaError(f"bad scalar document {doc!r}")
        got = PrimeField(doc["mod"]).from_int(doc["val"])
    elif isinstance(doc, str):
        if "/" in doc:
            num, den = doc.split("/", 1)
            got = QQ.from_fraction(int(num), int(den))
        else:
            got = QQ.from_int(int(doc))
    elif isinstance(doc, int):
        got = QQ.from_int(doc)
    else:
        raise SchemaError(f"bad scalar document {doc!r}")
    if field is not None and got.field != field:
        raise SchemaError(f"scalar field {got.field} does not match {field}")
    return got


def _entry_to_json(e: Entry) -> Any:
    if isinstance(e, TateOp):
        return op_to_json(e)
    return scalar_to_json(e)


def _entry_from_json(doc: Any, level: int, field: Field | None) -> Entry:
    if level <= 1:
        return scalar_from_json(doc, field)
    if not isinstance(doc, dict) or "level" not in doc:
        raise SchemaError("entries of a level-n operator must be operator documents")
    entry = op_from_json(doc, field)
    if entry.level != level - 1:
        raise SchemaError(f"entry level {entry.level}, expected {level - 1}")
    return entry


def op_to_json(a: TateOp) -> dict:
    lines = []
    for (orient, off) in sorted(a.lines):
        seq = a.lines[(orient, off)]
        lines.append({
            "orientation": orient,
            "offset": off,
            "left_limit": _entry_to_json(seq.left),
            "right_limit": _entry_to_json(seq.right),
            "window_start": seq.window_start,
            "window": [_entry_to_json(v) for v in seq.window],
        })
    correction = [{"row": i, "col": j, "value": _entry_to_json(v)}
                  for (i, j), v in sorted(a.corr.items())]
    return {"level": a.level, "lines": lines, "correction": correction}


def op_from_json(doc: dict, field: Field | None = None) -> TateOp:
    if not isinstance(doc, dict):
        raise SchemaError("operator document must be an object")
    extra = set(doc) - {"level", "lines", "correction"}
    if extra:
        raise SchemaError(f"unknown keys {sorted(extra)}")
    level = doc.get("level")
    if not isinstance(level, int) or level < 1:
        raise SchemaError("level must be a positive integer")
    lines: dict[tuple[str, int], EvSeq] = {}
    entry_field = field
    collected = []
    for line in doc.get("lines", []):
        if not isinstance(line, dict):
            raise SchemaError("line must be an object")
        orient = line.get("orientation")
        if orient not in ("diag", "anti"):
            raise SchemaError(f"bad orientation {orient!r}")
        left = _entry_from_json(line["left_limit"], level, field)
        right = _entry_from_json(line["right_limit"], level, field)
        window = [_entry_from_json(v, level, field) for v in line.get("window", [])]
        collected.extend([left, right, *window])
        seq = EvSeq.of(left, right, int(line.get("window_start", 0)), window)
        key = (orient, int(line["offset"]))
        if key in lines:
            raise SchemaError(f"duplicate line {key}")
        lines[key] = seq
    corr = {}
    for cell in doc.get("correction", []):
        if not isinstance(cell, dict):
            raise SchemaError("correction cell must be an object")
        v = _entry_from_json(cell["value"], level, field)
        collected.append(v)
        corr[(int(cell["row"]), int(cell["col"]))] = v
    if entry_field is None:
        for e in collected:
            entry_field = e.field
            break
        if entry_field is None:
            entry_field = QQ  # empty documents (the zero operator) default to Q
    for e in collected:
        if e.field != entry_field:
            raise SchemaError("mixed fields inside one operator document")
    return TateOp(level, entry_field, lines, corr)


def dump_op(a: TateOp) -> str:
    return json.dumps(op_to_json(a), indent=2, sort_keys=True)


def load_op(text: str, field: Field | None = None) -> TateOp:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"not valid JSON: {exc}") from exc
    return op_from_json(doc, field)
