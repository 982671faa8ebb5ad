"""Reading matrices and polygons, writing deterministic JSON."""
from __future__ import annotations

import json
import os
from fractions import Fraction
from typing import Any

from .errors import ParseError
from .lattice import Configuration


def _int_rows(lines: list[str]) -> list[list[int]]:
    try:
        return [[int(t) for t in ln.replace(",", " ").split()] for ln in lines]
    except ValueError as e:
        raise ParseError(f"not an integer: {e}") from None


def parse_matrix_text(text: str) -> list[list[int]]:
    """Rows of an integer matrix.

    Accepts JSON ``{"rows": [...]}`` or whitespace text with optional ``m n``
    header line; ``@`` may replace newlines.
    """
    text = text.strip()
    if not text:
        raise ParseError("empty matrix")
    if text[0] in "{[":
        try:
            obj = json.loads(text)
        except json.JSONDecodeError as e:
            raise ParseError(f"bad JSON: {e}") from None
        rows = obj["rows"] if isinstance(obj, dict) else obj
        try:
            rows = [[int(x) for x in r] for r in rows]
        except (TypeError, ValueError):
            raise ParseError("rows must be lists of integers") from None
    else:
        lines = [ln for ln in text.replace("@", "\n").splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
        rows = _int_rows(lines)
        if len(rows[0]) == 2 and len(rows) == rows[0][0] + 1 and all(len(r) == rows[0][1] for r in rows[1:]):
            m, n = rows[0]
            rows = rows[1:]
            if m == 0:
                rows = []
    if not rows or len({len(r) for r in rows}) != 1:
        raise ParseError("rows must be nonempty and of equal length")
    return rows


def read_configuration(source: str, name: str = "") -> Configuration:
    """Columns of the matrix in ``source`` (a file path or inline text)."""
    text = source
    if os.path.exists(source):
        with open(source) as fh:
            text = fh.read()
        name = name or os.path.basename(source)
    rows = parse_matrix_text(text)
    try:
        return Configuration.from_columns(rows, name=name)
    except ValueError as e:
        raise ParseError(str(e)) from None


def parse_polygon(text: str) -> list[tuple[int, int]]:
    """Vertex pairs from JSON, ``x y`` lines or ``"x y, x y, ..."``."""
    if os.path.exists(text):
        with open(text) as fh:
            text = fh.read()
    text = text.strip()
    if text.startswith("["):
        try:
            pts = [tuple(int(x) for x in p) for p in json.loads(text)]
        except (json.JSONDecodeError, TypeError, ValueError):
            raise ParseError("polygon JSON must be a list of integer pairs") from None
    else:
        parts = [p for p in text.replace("\n", ",").split(",") if p.strip()]
        try:
            pts = [tuple(int(x) for x in p.split()) for p in parts]
        except ValueError:
            raise ParseError("polygon vertices must be integer pairs") from None
    if not pts or any(len(p) != 2 for p in pts):
        raise ParseError("polygon vertices must be integer pairs")
    return pts


def _plain(obj: Any):
    if isinstance(obj, Fraction):
        return str(obj) if obj.denominator != 1 else int(obj.numerator)
    if isinstance(obj, dict):
        return {str(k): _plain(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple, set, frozenset)):
        items = [_plain(x) for x in obj]
        return sorted(items) if isinstance(obj, (set, frozenset)) else items
    if hasattr(obj, "item"):
        return obj.item()
    return obj


def dumps(obj: Any) -> str:
    """Deterministic JSON: sorted keys, exact fractions as strings."""
    return json.dumps(_plain(obj), sort_keys=True)
