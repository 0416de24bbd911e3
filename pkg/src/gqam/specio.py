"""Reading and writing function spec documents (JSON).

Layout of a generator document::

    {"interval": {"left": "0", "right": "2"},
     "segments": [{"from": "0", "to": "1", "value_from": "0", "value_to": "1"},
                  {"from": "1", "to": "2", "value_from": "2", "value_to": "3"}],
     "nodes": [{"x": "1", "value": "1"}]}

A segment with an infinite end carries ``anchor_x``, ``anchor_value`` and
``slope`` in place of the endpoint values. Nodes are mandatory at jumps and
optional at knots. Rationals are "p/q" or integer strings (JSON integers are
accepted on input); "inf"/"-inf" mark unbounded ends.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any, Union

from .continuous import ContinuousPWL
from .core import MonotonePWL, Segment
from .errors import InvariantViolation, MalformedSpec
from .interval import OpenInterval
from .rational import as_extended, as_rational, fmt, is_finite


def _rat(obj: dict, key: str, where: str):
    if key not in obj:
        raise MalformedSpec(f"{where}: missing key {key!r}")
    try:
        return as_rational(obj[key])
    except (TypeError, ValueError, ZeroDivisionError) as exc:
        raise MalformedSpec(f"{where}.{key}: {exc}") from None


def _ext(obj: dict, key: str, where: str):
    if key not in obj:
        raise MalformedSpec(f"{where}: missing key {key!r}")
    try:
        return as_extended(obj[key])
    except (TypeError, ValueError, ZeroDivisionError) as exc:
        raise MalformedSpec(f"{where}.{key}: {exc}") from None


def _load(doc) -> dict:
    if isinstance(doc, dict):
        return doc
    if isinstance(doc, Path):
        doc = doc.read_text(encoding="utf-8")
    try:
        data = json.loads(doc)
    except json.JSONDecodeError as exc:
        raise MalformedSpec(f"not valid JSON: {exc}") from None
    if not isinstance(data, dict):
        raise MalformedSpec("top level must be an object")
    return data


def _segment(raw: Any, k: int) -> Segment:
    where = f"segments[{k}]"
    if not isinstance(raw, dict):
        raise MalformedSpec(f"{where}: expected an object")
    lo, hi = _ext(raw, "from", where), _ext(raw, "to", where)
    if is_finite(lo) and is_finite(hi):
        return Segment.through(lo, hi, _rat(raw, "value_from", where), _rat(raw, "value_to", where))
    if not lo < hi:
        raise InvariantViolation(f"{where}: from < to required")
    ax, av, s = _rat(raw, "anchor_x", where), _rat(raw, "anchor_value", where), _rat(raw, "slope", where)
    seg = Segment(lo, hi, s, av - s * ax)
    # a finite end may still state its value; it has to agree with the anchor line
    if is_finite(lo) and "value_from" in raw and seg.value_from != _rat(raw, "value_from", where):
        raise InvariantViolation(f"{where}: value_from disagrees with anchor and slope")
    if is_finite(hi) and "value_to" in raw and seg.value_to != _rat(raw, "value_to", where):
        raise InvariantViolation(f"{where}: value_to disagrees with anchor and slope")
    return seg


def function_from_dict(data: dict) -> MonotonePWL:
    if "interval" not in data or not isinstance(data["interval"], dict):
        raise MalformedSpec("missing 'interval' object")
    interval = OpenInterval(_ext(data["interval"], "left", "interval"), _ext(data["interval"], "right", "interval"))
    raw_segments = data.get("segments")
    if not isinstance(raw_segments, list) or not raw_segments:
        raise MalformedSpec("'segments' must be a non-empty array")
    segments = [_segment(raw, k) for k, raw in enumerate(raw_segments)]
    boundaries = [s.hi for s in segments[:-1]]
    values = [None] * len(boundaries)
    raw_nodes = data.get("nodes", [])
    if not isinstance(raw_nodes, list):
        raise MalformedSpec("'nodes' must be an array")
    for k, raw in enumerate(raw_nodes):
        if not isinstance(raw, dict):
            raise MalformedSpec(f"nodes[{k}]: expected an object")
        x, v = _rat(raw, "x", f"nodes[{k}]"), _rat(raw, "value", f"nodes[{k}]")
        if x not in boundaries:
            raise InvariantViolation(f"nodes[{k}]: x={fmt(x)} is not an interior segment boundary")
        i = boundaries.index(x)
        if values[i] is not None:
            raise InvariantViolation(f"nodes[{k}]: duplicate node at x={fmt(x)}")
        values[i] = v
    return MonotonePWL(interval, tuple(segments), tuple(values))


def parse_function(doc: Union[str, bytes, dict, Path]) -> MonotonePWL:
    """Parse and validate a generator document (JSON text, a path, or a loaded dict)."""
    return function_from_dict(_load(doc))


def load_function(path) -> MonotonePWL:
    return parse_function(Path(path))


def function_to_dict(f: MonotonePWL) -> dict:
    segs = []
    for s in f.segments:
        if s.bounded:
            segs.append({"from": fmt(s.lo), "to": fmt(s.hi),
                         "value_from": fmt(s.value_from), "value_to": fmt(s.value_to)})
        else:
            ax = s.lo if is_finite(s.lo) else (s.hi if is_finite(s.hi) else as_rational(0))
            segs.append({"from": fmt(s.lo), "to": fmt(s.hi),
                         "anchor_x": fmt(ax), "anchor_value": fmt(s(ax)), "slope": fmt(s.slope)})
    return {
        "interval": {"left": fmt(f.interval.left), "right": fmt(f.interval.right)},
        "segments": segs,
        "nodes": [{"x": fmt(x), "value": fmt(v)} for x, v in zip(f.breakpoints, f.node_values)],
    }


def dump_function(f: MonotonePWL) -> str:
    return json.dumps(function_to_dict(f), indent=2)


def continuous_to_dict(phi: ContinuousPWL) -> dict:
    out = {
        "domain": {"left": fmt(phi.domain.left), "right": fmt(phi.domain.right)},
        "points": [[fmt(u), fmt(v)] for u, v in phi.points],
    }
    if phi.left_slope is not None:
        out["left_slope"] = fmt(phi.left_slope)
    if phi.right_slope is not None:
        out["right_slope"] = fmt(phi.right_slope)
    return out


def continuous_from_dict(data: dict) -> ContinuousPWL:
    data = _load(data)
    try:
        dom = OpenInterval(as_extended(data["domain"]["left"]), as_extended(data["domain"]["right"]))
        pts = tuple((as_rational(u), as_rational(v)) for u, v in data["points"])
        ls = as_rational(data["left_slope"]) if "left_slope" in data else None
        rs = as_rational(data["right_slope"]) if "right_slope" in data else None
    except (KeyError, TypeError, ValueError, ZeroDivisionError) as exc:
        if isinstance(exc, InvariantViolation):
            raise
        raise MalformedSpec(f"continuous function document: {exc}") from None
    return ContinuousPWL(dom, pts, ls, rs)


def parse_continuous(doc) -> ContinuousPWL:
    return continuous_from_dict(_load(doc))


def dump_continuous(phi: ContinuousPWL) -> str:
    return json.dumps(continuous_to_dict(phi), indent=2)
