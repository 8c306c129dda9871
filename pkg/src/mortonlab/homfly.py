"""HOMFLY polynomial engine.

The polynomial P(v, z) of an oriented link is pinned by P(unknot) = 1 and
the skein relation v^-1 P(D+) - v P(D-) = z P(D0), where D+, D-, D0 agree
except at one crossing.  Solving for the sign that is present makes every
step progress toward a descending diagram:

    positive crossing:  P(D) = v^2 P(switched) + v z P(smoothed)
    negative crossing:  P(D) = v^-2 P(switched) - v^-1 z P(smoothed)

A diagram that is descending with respect to least-label basepoints (every
crossing met first on its over-strand, components in least-label order) is
an unlink of k components with P = delta^(k-1), delta = (v^-1 - v) z^-1.
Switching the first non-descending crossing lowers the count of badly met
crossings and smoothing lowers the crossing count, so the recursion
terminates.

The cached engine simplifies first, multiplies split unions by delta, and
memoizes on canonical codes.  The naive oracle re-walks the same contract
with no cache, no simplification and no split shortcut; it exists so the
two routes can be compared exactly on small diagrams.
"""

from __future__ import annotations

import json
import os
import sys
import threading
from dataclasses import dataclass, field

from .diagram import Diagram
from .errors import TooLargeError
from .poly import LaurentPoly2, delta_factor

__all__ = [
    "HomflyEngine",
    "SkeinNode",
    "SkeinTrace",
    "homfly",
    "naive_homfly",
    "choose_skein_crossing",
    "skein_trace",
    "detect_cancellations",
    "trace_to_dot",
    "load_cache_file",
    "append_cache_file",
]

DEFAULT_ORACLE_LIMIT = 10
DEFAULT_TRACE_LIMIT = 12

_ONE = LaurentPoly2.one()


def choose_skein_crossing(d: Diagram):
    """Index of the first crossing met first on its under-strand when the
    diagram is traversed from least-label basepoints in component order;
    None when the diagram is descending (an unlink)."""
    first = {}
    ins, _ = d._slots()
    for cyc in d.component_cycles():
        for e in cyc:
            i, kind = ins[e]
            if i not in first:
                first[i] = kind
                if kind == "under":
                    return i
    return None


def _descending_value(d: Diagram) -> LaurentPoly2:
    k = d.num_components()
    return delta_factor() ** (k - 1)


class HomflyEngine:
    """Memoized skein evaluator with shared, thread-safe cache.

    The cache maps canonical codes of simplified diagrams to polynomials.
    Values are deterministic, so concurrent get-or-insert races are
    harmless; lookups are exact-key only (never up to mirror) to keep
    chirality honest.
    """

    def __init__(self, cache=None, oracle_limit=DEFAULT_ORACLE_LIMIT,
                 trace_limit=DEFAULT_TRACE_LIMIT):
        self.cache = {} if cache is None else cache
        self.oracle_limit = oracle_limit
        self.trace_limit = trace_limit
        self.expansions = 0
        self._loaded_keys = set()
        self._lock = threading.Lock()

    # -- cached engine --------------------------------------------------

    def homfly(self, d: Diagram) -> LaurentPoly2:
        limit = sys.getrecursionlimit()
        need = 4 * (len(d.crossings) + 4) ** 2
        if limit < need:
            sys.setrecursionlimit(need)
        return self._eval(d)

    def _eval(self, d: Diagram) -> LaurentPoly2:
        d = d.simplify()
        code = d.canonical_code()
        hit = self.cache.get(code)
        if hit is not None:
            return hit
        if d.is_connected():
            p = self._eval_connected(d)
        else:
            pieces = d.split_pieces()
            p = delta_factor() ** (len(pieces) - 1)
            for piece in pieces:
                if piece.crossings:
                    p = p * self._eval(piece)
        self.cache[code] = p
        return p

    def _eval_connected(self, d: Diagram) -> LaurentPoly2:
        i = choose_skein_crossing(d)
        if i is None:
            return _descending_value(d)
        self.expansions += 1
        switched = self._eval(d.switch_crossing(i))
        smoothed = self._eval(d.smooth_crossing(i))
        if d.crossings[i].sign > 0:
            return switched.mono_mul(1, ev=2) + smoothed.mono_mul(1, ev=1, ez=1)
        return switched.mono_mul(1, ev=-2) + smoothed.mono_mul(-1, ev=-1, ez=1)

    # -- independent oracle ----------------------------------------------

    def naive_homfly(self, d: Diagram) -> LaurentPoly2:
        """Same value as homfly, computed with no cache, no simplification
        and no split shortcut; guarded by the oracle crossing limit."""
        if len(d.crossings) > self.oracle_limit:
            raise TooLargeError(
                f"{len(d.crossings)} crossings exceeds oracle limit {self.oracle_limit}"
            )
        limit = sys.getrecursionlimit()
        need = 4 * (len(d.crossings) + 4) ** 2
        if limit < need:
            sys.setrecursionlimit(need)
        return self._naive(d)

    def _naive(self, d: Diagram) -> LaurentPoly2:
        i = choose_skein_crossing(d)
        if i is None:
            return _descending_value(d)
        switched = self._naive(d.switch_crossing(i))
        smoothed = self._naive(d.smooth_crossing(i))
        if d.crossings[i].sign > 0:
            return switched.mono_mul(1, ev=2) + smoothed.mono_mul(1, ev=1, ez=1)
        return switched.mono_mul(1, ev=-2) + smoothed.mono_mul(-1, ev=-1, ez=1)

    # -- full resolution trace ---------------------------------------------

    def skein_trace(self, d: Diagram) -> "SkeinTrace":
        """Materialized resolution tree (uncached, unsimplified), with the
        polynomial and its z-degree recorded at every node."""
        if len(d.crossings) > self.trace_limit:
            raise TooLargeError(
                f"{len(d.crossings)} crossings exceeds trace limit {self.trace_limit}"
            )
        trace = SkeinTrace()
        trace.root = self._trace(d, "ROOT", 0, trace)
        trace.stats = {
            "nodes": len(trace.nodes),
            "cancellations": sum(1 for n in trace.nodes if n.cancellation),
            "max_depth": max(n.depth for n in trace.nodes),
        }
        return trace

    def _trace(self, d, role, depth, trace):
        i = choose_skein_crossing(d)
        node_id = len(trace.nodes)
        if i is None:
            node = SkeinNode(
                id=node_id, code=d.canonical_code(), role="BASE_UNLINK",
                chosen_crossing=None, poly=_descending_value(d), depth=depth,
            )
            trace.nodes.append(node)
            return node_id
        node = SkeinNode(id=node_id, code=d.canonical_code(), role=role,
                         chosen_crossing=i, poly=None, depth=depth)
        trace.nodes.append(node)
        sw = self._trace(d.switch_crossing(i), "SWITCHED_CHILD", depth + 1, trace)
        sm = self._trace(d.smooth_crossing(i), "SMOOTHED_CHILD", depth + 1, trace)
        node.switched_child = sw
        node.smoothed_child = sm
        sign = d.crossings[i].sign
        node.sign = sign
        p_sw = trace.nodes[sw].poly
        p_sm = trace.nodes[sm].poly
        if sign > 0:
            contrib_sw = p_sw.mono_mul(1, ev=2)
            contrib_sm = p_sm.mono_mul(1, ev=1, ez=1)
        else:
            contrib_sw = p_sw.mono_mul(1, ev=-2)
            contrib_sm = p_sm.mono_mul(-1, ev=-1, ez=1)
        node.poly = contrib_sw + contrib_sm
        node.cancellation = _leading_terms_cancelled(node.poly, contrib_sw, contrib_sm)
        return node_id

    # -- persistent cache ----------------------------------------------------

    def load_cache(self, path):
        loaded = load_cache_file(path)
        self.cache.update(loaded)
        self._loaded_keys.update(loaded)
        return len(loaded)

    def flush_cache(self, path):
        """Append entries not previously loaded from disk."""
        with self._lock:
            new = {k: v for k, v in self.cache.items() if k not in self._loaded_keys}
            if new:
                append_cache_file(path, new)
                self._loaded_keys.update(new)
        return len(new)


def _leading_terms_cancelled(total, contrib_a, contrib_b):
    ma, mb = contrib_a.maxdeg_z(), contrib_b.maxdeg_z()
    tops = [m for m in (ma, mb) if m is not None]
    if not tops:
        return False
    mt = total.maxdeg_z()
    return mt is None or mt < max(tops)


@dataclass
class SkeinNode:
    id: int
    code: bytes
    role: str
    chosen_crossing: int | None
    poly: LaurentPoly2 | None
    depth: int = 0
    sign: int = 0
    switched_child: int | None = None
    smoothed_child: int | None = None
    cancellation: bool = False

    @property
    def m(self):
        return self.poly.maxdeg_z() if self.poly is not None else None


@dataclass
class SkeinTrace:
    nodes: list = field(default_factory=list)
    root: int = 0
    stats: dict = field(default_factory=dict)


def detect_cancellations(trace: SkeinTrace):
    """Ids of internal nodes whose combined children lose their top
    z-degree in the sum (the leading terms cancelled)."""
    out = []
    for node in trace.nodes:
        if node.chosen_crossing is None:
            continue
        p_sw = trace.nodes[node.switched_child].poly
        p_sm = trace.nodes[node.smoothed_child].poly
        if node.sign > 0:
            contrib_sw = p_sw.mono_mul(1, ev=2)
            contrib_sm = p_sm.mono_mul(1, ev=1, ez=1)
        else:
            contrib_sw = p_sw.mono_mul(1, ev=-2)
            contrib_sm = p_sm.mono_mul(-1, ev=-1, ez=1)
        if _leading_terms_cancelled(node.poly, contrib_sw, contrib_sm):
            out.append(node.id)
    return out


def trace_to_dot(trace: SkeinTrace) -> str:
    """DOT digraph of a resolution tree; cancellation nodes filled red."""
    lines = ["digraph skein {", '  node [shape=box];']
    for node in trace.nodes:
        m = node.m
        label = f"m={'-inf' if m is None else m}"
        extra = ' style=filled fillcolor=red' if node.cancellation else ""
        lines.append(f'  n{node.id} [label="{label}"{extra}];')
    for node in trace.nodes:
        if node.chosen_crossing is None:
            continue
        lines.append(f'  n{node.id} -> n{node.switched_child} [label="switch"];')
        lines.append(f'  n{node.id} -> n{node.smoothed_child} [label="smooth"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


# -- persistent cache file format: one JSON record per line ----------------


def load_cache_file(path):
    out = {}
    if not os.path.exists(path):
        return out
    with open(path, "r", encoding="utf-8") as fh:
        for line in fh:
            line = line.strip()
            if not line:
                continue
            rec = json.loads(line)
            out[bytes.fromhex(rec["code"])] = LaurentPoly2.from_json_obj(rec["poly"])
    return out


def append_cache_file(path, entries):
    with open(path, "a", encoding="utf-8") as fh:
        for code, poly in entries.items():
            fh.write(json.dumps({"code": code.hex(), "poly": poly.to_json_obj()},
                                separators=(",", ":")) + "\n")


# -- module-level convenience over a private default engine -----------------

_default_engine = HomflyEngine()


def homfly(d: Diagram) -> LaurentPoly2:
    return _default_engine.homfly(d)


def naive_homfly(d: Diagram, limit=DEFAULT_ORACLE_LIMIT) -> LaurentPoly2:
    return HomflyEngine(oracle_limit=limit).naive_homfly(d)


def skein_trace(d: Diagram, limit=DEFAULT_TRACE_LIMIT) -> SkeinTrace:
    return HomflyEngine(trace_limit=limit).skein_trace(d)
