"""JSON readers for link and torus-loop files."""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any

from ..errors import ParseError
from .braid import BraidWord, braid_closure, parse_braid
from .pd import PDCode
from .torus import TorusLoop


def _read(source: str | Path | dict) -> Any:
    if isinstance(source, dict):
        return source
    try:
        text = Path(source).read_text(encoding="utf-8")
    except OSError as exc:
        raise ParseError(f"cannot read {source}: {exc.strerror}") from None
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"{source}: invalid JSON ({exc.msg} at line {exc.lineno})") from None


def braid_from_json(obj: dict) -> BraidWord:
    word = obj.get("word", [])
    strands = obj.get("strands")
    if strands is not None and (not isinstance(strands, int) or isinstance(strands, bool)):
        raise ParseError("field 'strands' must be an integer")
    if not isinstance(word, str):
        if not isinstance(word, list) or not all(
            isinstance(g, int) and not isinstance(g, bool) for g in word
        ):
            raise ParseError("field 'word' must be a list of signed integers")
        word = " ".join(str(g) for g in word)
    try:
        return parse_braid(word, strands)
    except ParseError as exc:
        raise ParseError(f"field 'word': {exc}") from None


def link_from_json(obj: dict) -> PDCode:
    """Turn a decoded link object into a PD code.

    ``{"format": "braid", "strands": n, "word": [...]}`` is closed up;
    ``{"format": "pd", "crossings": [[a, b, c, d, sign], ...],
    "components": [[arcs...], ...]}`` is taken as given.
    """
    if not isinstance(obj, dict):
        raise ParseError("link file must hold a JSON object")
    fmt = obj.get("format")
    if fmt == "braid":
        return braid_closure(braid_from_json(obj))
    if fmt == "pd":
        crossings = obj.get("crossings")
        if not isinstance(crossings, list):
            raise ParseError("field 'crossings' must be a list")
        for i, c in enumerate(crossings):
            if not (isinstance(c, list) and len(c) == 5 and all(isinstance(v, int) for v in c)):
                raise ParseError(f"field 'crossings[{i}]' must be [a, b, c, d, sign] integers")
        comps = obj.get("components")
        if comps is None:
            return PDCode.from_crossings(crossings)
        if not (isinstance(comps, list) and all(isinstance(c, list) for c in comps)):
            raise ParseError("field 'components' must be a list of arc lists")
        return PDCode(tuple(map(tuple, crossings)), tuple(map(tuple, comps)))
    raise ParseError(f"field 'format' must be 'braid' or 'pd', got {fmt!r}")


def load_link(source: str | Path | dict) -> PDCode:
    return link_from_json(_read(source))


def torus_loop_from_json(obj: dict) -> TorusLoop:
    try:
        winding = obj["winding"]
        segments = obj["segments"]
    except (KeyError, TypeError):
        raise ParseError("torus loop needs fields 'winding' and 'segments'") from None
    if not (isinstance(winding, list) and len(winding) == 2 and all(isinstance(v, int) for v in winding)):
        raise ParseError("field 'winding' must be two integers")
    if not isinstance(segments, list) or not all(
        isinstance(p, list) and len(p) == 2 for p in segments
    ):
        raise ParseError("field 'segments' must be a list of [x, y] points")
    return TorusLoop(tuple(winding), tuple(tuple(p) for p in segments))


def load_torus_loop(source: str | Path | dict) -> TorusLoop:
    return torus_loop_from_json(_read(source))


read_json = _read
