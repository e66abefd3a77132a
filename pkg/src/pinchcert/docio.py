"""Deterministic document emission.

Every emitted document must be byte-identical across runs for the same
inputs, so floats are rendered with a fixed 17-significant-digit format
(enough to round-trip any double exactly) instead of whatever repr the
runtime picks.  Non-finite floats never appear in documents; they are
mapped to null by the callers that produce them (with an explanatory flag).
"""

from __future__ import annotations

import json
import math


def format_float(value: float) -> str:
    """Fixed 17-significant-digit rendering of a finite double."""
    if not math.isfinite(value):
        raise ValueError(f"non-finite value {value!r} cannot appear in a document")
    return format(float(value), ".17g")


def _emit(obj, out: list[str], depth: int) -> None:
    pad = "  " * depth
    inner = "  " * (depth + 1)
    if obj is None:
        out.append("null")
    elif obj is True:
        out.append("true")
    elif obj is False:
        out.append("false")
    elif isinstance(obj, int):
        out.append(str(obj))
    elif isinstance(obj, float):
        out.append(format_float(obj))
    elif isinstance(obj, str):
        out.append(json.dumps(obj))
    elif isinstance(obj, (list, tuple)):
        if not obj:
            out.append("[]")
            return
        out.append("[\n")
        for k, item in enumerate(obj):
            if k:
                out.append(",\n")
            out.append(inner)
            _emit(item, out, depth + 1)
        out.append("\n" + pad + "]")
    elif isinstance(obj, dict):
        if not obj:
            out.append("{}")
            return
        out.append("{\n")
        for k, (key, value) in enumerate(obj.items()):
            if k:
                out.append(",\n")
            if not isinstance(key, str):
                raise TypeError(f"document keys must be strings, got {key!r}")
            out.append(inner + json.dumps(key) + ": ")
            _emit(value, out, depth + 1)
        out.append("\n" + pad + "}")
    else:
        raise TypeError(f"cannot emit {type(obj).__name__} into a document")


def dumps(doc) -> str:
    """Serialize a document to indented JSON (no trailing newline; the CLI
    appends one).  Key order is preserved, never re-sorted: documents list
    their fields in a fixed, documented order."""
    out: list[str] = []
    _emit(doc, out, 0)
    return "".join(out)
