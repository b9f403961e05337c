"""JSON documents for ideals and reports.

Input ideals look like::

    {"n": 2, "generators": [[2, 0], [1, 1], [0, 2]], "name": "m2"}

Reports are JSON objects with a fixed key order: ``command``, ``ideal``,
``result`` and, only when timing was requested, ``timing``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any

from .errors import MonresError
from .ideal import MonIdeal, minimalize


class ParseError(MonresError, ValueError):
    pass


@dataclass(frozen=True)
class IdealDocument:
    n: int
    generators: tuple[tuple[int, ...], ...]
    name: str | None = None
    notice: str | None = field(default=None, compare=False)

    @property
    def ideal(self) -> MonIdeal:
        return MonIdeal(self.n, self.generators)

    def to_dict(self) -> dict[str, Any]:
        d: dict[str, Any] = {"n": self.n, "generators": [list(g) for g in self.generators]}
        if self.name is not None:
            d["name"] = self.name
        return d

    @classmethod
    def from_ideal(cls, I: MonIdeal, name: str | None = None) -> "IdealDocument":
        return cls(I.dim, I.gens, name)


def _is_int(x) -> bool:
    return isinstance(x, int) and not isinstance(x, bool)


def parse_ideal(text: str | bytes) -> IdealDocument:
    """Parse and validate an ideal document, minimalizing its generators."""
    if isinstance(text, bytes):
        text = text.decode("utf-8")
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"malformed JSON: {exc}") from None
    if not isinstance(raw, dict):
        raise ParseError("an ideal document must be a JSON object")
    unknown = set(raw) - {"n", "generators", "name"}
    if unknown:
        raise ParseError(f"unknown fields {sorted(unknown)}")
    n = raw.get("n")
    if not _is_int(n) or n < 1:
        raise ParseError("'n' must be a positive integer")
    gens = raw.get("generators")
    if not isinstance(gens, list) or not gens:
        raise ParseError("'generators' must be a non-empty list")
    for g in gens:
        if not isinstance(g, list) or not all(_is_int(x) for x in g):
            raise ParseError(f"generator {g!r} is not a list of integers")
        if len(g) != n:
            raise ParseError(f"dimension mismatch: generator {g} does not have length {n}")
        if any(x < 0 for x in g):
            raise ParseError(f"generator {g} has a negative entry")
    name = raw.get("name")
    if name is not None and not isinstance(name, str):
        raise ParseError("'name' must be a string")
    I = minimalize(gens, n)
    notice = None
    if len(I.gens) != len(gens):
        dropped = len(gens) - len(I.gens)
        notice = f"removed {dropped} redundant generator{'s' if dropped != 1 else ''}"
    return IdealDocument(n, I.gens, name, notice)


def emit_ideal(doc: IdealDocument) -> str:
    return json.dumps(doc.to_dict())


def emit_report(report: dict[str, Any], fmt: str = "json") -> str:
    if fmt == "json":
        return _dump(report, 0) + "\n"
    if fmt == "text":
        return "\n".join(_render(report)) + "\n"
    raise ValueError(f"unknown format {fmt!r}")


def _dump(obj, level: int) -> str:
    """Indented JSON that keeps arrays of scalars (exponent vectors) on one line."""
    pad, inner = "  " * level, "  " * (level + 1)
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        items = [f"{inner}{json.dumps(k)}: {_dump(v, level + 1)}" for k, v in obj.items()]
        return "{\n" + ",\n".join(items) + "\n" + pad + "}"
    if isinstance(obj, list):
        if all(not isinstance(x, (dict, list)) for x in obj):
            return json.dumps(obj)
        items = [inner + _dump(v, level + 1) for v in obj]
        return "[\n" + ",\n".join(items) + "\n" + pad + "]"
    return json.dumps(obj)


def parse_report(text: str) -> dict[str, Any]:
    return json.loads(text)


def _scalar(v) -> str:
    if isinstance(v, list) and all(not isinstance(x, (dict, list)) for x in v):
        return "(" + ", ".join(str(x) for x in v) + ")"
    if isinstance(v, bool):
        return "yes" if v else "no"
    return str(v)


def _is_flat(v) -> bool:
    if isinstance(v, dict):
        return False
    if isinstance(v, list):
        return all(not isinstance(x, (dict, list)) for x in v) or all(
            isinstance(x, list) and all(not isinstance(y, (dict, list)) for y in x) for x in v
        )
    return True


def _flat(v) -> str:
    if isinstance(v, list) and v and isinstance(v[0], list):
        return ", ".join(_scalar(x) for x in v)
    return _scalar(v)


def _render(obj, indent: int = 0) -> list[str]:
    pad = "  " * indent
    lines = []
    if isinstance(obj, dict):
        for k, v in obj.items():
            if _is_flat(v):
                lines.append(f"{pad}{k}: {_flat(v)}")
            else:
                lines.append(f"{pad}{k}:")
                lines.extend(_render(v, indent + 1))
    elif isinstance(obj, list):
        for item in obj:
            if _is_flat(item):
                lines.append(f"{pad}- {_flat(item)}")
            else:
                sub = _render(item, indent + 1)
                lines.append(f"{pad}- {sub[0].strip()}")
                lines.extend(sub[1:])
    else:
        lines.append(f"{pad}{_scalar(obj)}")
    return lines
