"""Seifert circles and the genus of the canonical surface of a diagram.

Smoothing every crossing of an oriented diagram (reconnecting the four
ends by orientation) leaves disjoint circles in the plane; the circles
bound disks that the crossings stitch back together as half-twisted
bands.  For a connected diagram with c crossings, s circles and mu link
components the resulting surface has Euler characteristic s - c and
genus (2 - mu - s + c) / 2.

The circles are computed directly on the original edge set: under-in
joins over-out and over-in joins under-out at every crossing, so the
circle partition is the cycle structure of that substitute successor
map.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .diagram import Diagram
from .errors import DisconnectedError

__all__ = [
    "CrossingClass",
    "SeifertDecomposition",
    "seifert_circles",
    "diagram_genus",
    "classify_crossing",
    "seifert_csv_row",
]


class CrossingClass(Enum):
    JOINS_DISTINCT = "JOINS_DISTINCT"
    SAME_CIRCLE = "SAME_CIRCLE"


@dataclass(frozen=True)
class SeifertDecomposition:
    circle_of_edge: dict
    num_circles: int
    diagram_genus: int
    crossing_joins: tuple


def seifert_circles(d: Diagram) -> SeifertDecomposition:
    """Seifert decomposition of a connected diagram."""
    if not d.is_connected():
        raise DisconnectedError("Seifert decomposition requires a connected diagram")
    n = len(d.crossings)
    if n == 0:
        return SeifertDecomposition({}, 1, 0, ())

    succ = {}
    for x in d.crossings:
        succ[x.a] = x.over_out
        succ[x.over_in] = x.c

    circle_of = {}
    circles = []
    for start in range(1, 2 * n + 1):
        if start in circle_of:
            continue
        cid = len(circles)
        e = start
        while e not in circle_of:
            circle_of[e] = cid
            e = succ[e]
        circles.append(start)

    joins = tuple(
        tuple(sorted((circle_of[x.a], circle_of[x.c]))) for x in d.crossings
    )
    s = len(circles)
    mu = d.num_components()
    genus = _genus_from_counts(n, s, mu)
    return SeifertDecomposition(circle_of, s, genus, joins)


def _genus_from_counts(c, s, mu):
    chi_defect = 2 - mu - s + c
    assert chi_defect % 2 == 0, f"parity violation: c={c} s={s} mu={mu}"
    return chi_defect // 2


def diagram_genus(d: Diagram) -> int:
    """Genus of the canonical Seifert surface built from this diagram."""
    return seifert_circles(d).diagram_genus


def classify_crossing(dec: SeifertDecomposition, i: int) -> CrossingClass:
    """JOINS_DISTINCT when the two smoothed arcs at crossing i lie on
    different Seifert circles, i.e. the crossing is a band between two
    disks and is eligible for parallel-band multiplication."""
    if not 0 <= i < len(dec.crossing_joins):
        raise IndexError(f"crossing index {i} out of range")
    p, q = dec.crossing_joins[i]
    return CrossingClass.JOINS_DISTINCT if p != q else CrossingClass.SAME_CIRCLE


def seifert_csv_row(name: str, d: Diagram) -> str:
    dec = seifert_circles(d)
    return ",".join(
        str(v)
        for v in (
            name,
            len(d.crossings),
            dec.num_circles,
            d.num_components(),
            dec.diagram_genus,
        )
    )
