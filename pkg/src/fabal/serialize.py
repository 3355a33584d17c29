"""Grid text and JSON encodings of basic modules.

A grid has one line per top index ``i``; line ``i`` lists the cells
``(i, n), (i, n-1), ..., (i, i)``, filled (``■`` or ``1``) for summands and
empty (``□`` or ``0``) otherwise.
"""
from __future__ import annotations

import json
import re

from .modcat import BasicModule, Interval

FILLED = {"■", "1", "#"}
EMPTY = {"□", "0", "."}


class ParseError(ValueError):
    pass


def to_grid(m: BasicModule, ascii: bool = False) -> str:
    on, off = ("1", "0") if ascii else ("■", "□")
    s = m.summand_set
    lines = []
    for i in range(1, m.n + 1):
        lines.append("".join(on if Interval(i, j) in s else off
                             for j in range(m.n, i - 1, -1)))
    return "\n".join(lines)


def grid_lines(text: str) -> list[str]:
    text = text.replace("\\n", "\n").replace("/", "\n").replace("|", "\n")
    return [re.sub(r"\s+", "", ln) for ln in text.splitlines() if ln.strip()]


def parse_grid(text: str, valleys=()) -> BasicModule:
    lines = grid_lines(text)
    n = len(lines)
    if n == 0:
        raise ParseError("empty grid")
    summands = []
    for i, line in enumerate(lines, start=1):
        if len(line) != n - i + 1:
            raise ParseError(f"grid line {i} has {len(line)} cells, expected {n - i + 1}")
        for pos, ch in enumerate(line):
            if ch in FILLED:
                summands.append((i, n - pos))
            elif ch not in EMPTY:
                raise ParseError(f"unexpected character {ch!r} in grid line {i}")
    try:
        return BasicModule.of(n, summands, valleys)
    except ValueError as exc:
        raise ParseError(str(exc)) from exc


def to_json(m: BasicModule) -> dict:
    out = {"n": m.n, "summands": [list(a) for a in m.summands]}
    if m.valleys:
        out["valleys"] = list(m.valleys)
    return out


def from_json(obj) -> BasicModule:
    if isinstance(obj, str):
        try:
            obj = json.loads(obj)
        except json.JSONDecodeError as exc:
            raise ParseError(f"invalid JSON: {exc}") from exc
    try:
        n = int(obj["n"])
        summands = [tuple(int(x) for x in a) for a in obj["summands"]]
        if any(len(a) != 2 for a in summands):
            raise ParseError("summands must be [i, j] pairs")
        return BasicModule.of(n, summands, obj.get("valleys", ()))
    except (KeyError, TypeError) as exc:
        raise ParseError(f"malformed module JSON: {exc}") from exc
    except ValueError as exc:
        raise ParseError(str(exc)) from exc


def parse_module(text: str, valleys=()) -> BasicModule:
    """Accept either JSON or grid text."""
    if text.lstrip().startswith("{"):
        m = from_json(text)
        if valleys and not m.valleys:
            m = BasicModule(m.n, m.summands, tuple(valleys))
        return m
    return parse_grid(text, valleys)
