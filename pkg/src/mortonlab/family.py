"""Diagram surgeries: parallel-band multiplication, crossing-change
candidates, and the blackboard-framed Whitehead double.

Band multiplication replaces an eligible crossing (one whose smoothed
arcs lie on two distinct Seifert circles) with a chain of n same-sign
crossings between the same two strands, the strands alternating over and
under along the chain.  Smoothing all n chain crossings reconnects the
four original ends exactly as smoothing the original crossing did, so
the Seifert circles are untouched: every chain crossing is a band
between the same two disks, the circle count is preserved, and the
crossing count grows by n - 1.

The double construction runs a reversed parallel copy alongside the
diagram (offset on the left of travel), turning each crossing into four,
and fuses the two copies through a two-crossing clasp; an optional twist
parameter inserts full twists next to the clasp so callers can
compensate the blackboard framing (twists = -writhe).
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .diagram import Crossing, Diagram, _renumber
from .errors import NotAKnotError, NotEligibleError
from .seifert import CrossingClass, classify_crossing, seifert_circles

__all__ = [
    "FamilySpec",
    "insert_parallel_bands",
    "family_sequence",
    "crossing_change_candidates",
    "whitehead_double",
]


@dataclass
class FamilySpec:
    base: Diagram
    crossing: int
    ns: list = field(default_factory=list)


def insert_parallel_bands(d: Diagram, i: int, n: int) -> Diagram:
    """Replace crossing i with n parallel same-sign crossings joining the
    same two Seifert circles; n = 0 is the oriented smoothing and n = 1
    reproduces the diagram."""
    if n < 0:
        raise ValueError("band count must be nonnegative")
    dec = seifert_circles(d)
    if classify_crossing(dec, i) is CrossingClass.SAME_CIRCLE:
        raise NotEligibleError(
            f"crossing {i} joins a circle to itself; parallel bands need two disks"
        )
    if n == 0:
        return d.smooth_crossing(i)

    x = d.crossings[i]
    s = x.sign
    # strand segments through the chain; ends reattach to the original
    # edges, swapped when n is even because the strands change sides at
    # every chain crossing
    xs = [x.a] + [("band-x", j) for j in range(1, n)]
    ys = [x.over_in] + [("band-y", j) for j in range(1, n)]
    if n % 2:
        xs.append(x.c)
        ys.append(x.over_out)
    else:
        xs.append(x.over_out)
        ys.append(x.c)

    new = [y for j, y in enumerate(d.crossings) if j != i]
    for j in range(1, n + 1):
        if j % 2:
            # original under-strand goes under
            if s > 0:
                t = Crossing(xs[j - 1], ys[j], xs[j], ys[j - 1], s)
            else:
                t = Crossing(xs[j - 1], ys[j - 1], xs[j], ys[j], s)
        else:
            if s > 0:
                t = Crossing(ys[j - 1], xs[j], ys[j], xs[j - 1], s)
            else:
                t = Crossing(ys[j - 1], xs[j - 1], ys[j], xs[j], s)
        new.append(t)
    out = _renumber(new, d.free_loops)
    assert len(out.crossings) == len(d.crossings) + n - 1
    return out


def family_sequence(spec: FamilySpec):
    """Diagrams L_n for each requested n, with bookkeeping asserted on
    generation: c grows by n - 1, the circle count is preserved, and the
    component count depends only on the parity of n."""
    base = spec.base
    dec0 = seifert_circles(base)
    mu_even = base.smooth_crossing(spec.crossing).num_components()
    out = []
    for n in spec.ns:
        d = insert_parallel_bands(base, spec.crossing, n)
        assert len(d.crossings) == len(base.crossings) + n - 1
        if n >= 1:
            assert seifert_circles(d).num_circles == dec0.num_circles
        assert d.num_components() == (base.num_components() if n % 2 else mu_even)
        out.append((n, d))
    return out


def crossing_change_candidates(d: Diagram):
    """(index, simplified switched diagram) for every crossing; consumers
    look for a canonical-genus drop certificate among these."""
    return [(i, d.switch_crossing(i).simplify()) for i in range(len(d.crossings))]


def whitehead_double(d: Diagram, clasp_sign: int = 1, twists: int = 0) -> Diagram:
    """Blackboard-framed double of a knot diagram with a two-crossing clasp.

    Every edge is doubled into a parallel pair (the companion copy runs
    reversed), every crossing becomes four, and the pair is fused through a
    clasp of the given sign on the doubled copy of edge 1.  With k = |twists|
    extra full twists the result has 4c + 2k + 2 crossings.
    """
    if d.num_components() != 1 or d.free_loops:
        raise NotAKnotError("the double is defined for knot diagrams (one component)")
    if not d.crossings:
        raise NotAKnotError("need at least one crossing to anchor the doubled band")
    if clasp_sign not in (1, -1):
        raise ValueError("clasp_sign must be +1 or -1")

    P, M = "p", "m"  # same-direction copy / reversed copy
    new = []
    for k, x in enumerate(d.crossings):
        a, c = x.a, x.c
        oi, oo = x.over_in, x.over_out
        u1, u2 = ("u1", k), ("u2", k)
        o1, o2 = ("o1", k), ("o2", k)
        if x.sign > 0:
            new.append(Crossing((P, a), (P, oo), u1, o1, 1))
            new.append(Crossing(u1, (M, oo), (P, c), o2, -1))
            new.append(Crossing(u2, (P, oi), (M, a), o1, -1))
            new.append(Crossing((M, c), (M, oi), u2, o2, 1))
        else:
            new.append(Crossing((P, a), (M, oi), u1, o2, 1))
            new.append(Crossing(u1, (P, oi), (P, c), o1, -1))
            new.append(Crossing((M, c), (P, oo), u2, o1, 1))
            new.append(Crossing(u2, (M, oo), (M, a), o2, -1))

    # cut the doubled copies of the anchor edge and route them through
    # twists (nearest the strand's tail block) and then the clasp
    anchor = 1
    p_in, p_out = (P, anchor), ("p-post", anchor)
    m_in, m_out = (M, anchor), ("m-post", anchor)

    def rename_head(old, fresh):
        for idx, x in enumerate(new):
            t = list(x[:4])
            changed = False
            for slot in range(4):
                if t[slot] == old:
                    is_in = (slot == 0) or (
                        slot == (3 if x.sign > 0 else 1)
                    )
                    if is_in:
                        t[slot] = fresh
                        changed = True
            if changed:
                new[idx] = Crossing(t[0], t[1], t[2], t[3], x.sign)

    # the incoming-to-a-block occurrence of each cut edge becomes the
    # "post" label; the outgoing occurrence keeps the original label
    rename_head(p_in, p_out)
    rename_head(m_in, m_out)

    plus_cur = p_in  # flows tail-block -> twists -> clasp -> head-block
    minus_cur = m_in  # flows head-block -> clasp -> twists -> tail-block

    twist_sign = 1 if twists > 0 else -1
    k_tw = abs(twists)
    # build from the tail-block side: plus enters twist j from plus_cur,
    # minus leaves twist j toward the tail block on minus's final segment
    plus_segs = [plus_cur] + [("tw-p", j) for j in range(1, k_tw + 1)]
    minus_segs = [("tw-m", j) for j in range(1, k_tw + 1)] + [m_out]
    # minus_segs[j-1] is the minus edge on the clasp side of twist j,
    # minus exits twist 1 onto m_out... index so twist j has minus-in
    # minus_segs[j-1] (from clasp side) and minus-out minus_segs[j-2]
    for j in range(1, k_tw + 1):
        p_lo, p_hi = plus_segs[j - 1], plus_segs[j]
        m_hi = minus_segs[j - 1]
        m_lo = minus_segs[j - 2] if j > 1 else m_out
        mp, mm = ("twmid-p", j), ("twmid-m", j)
        if twist_sign > 0:
            new.append(Crossing(mm, mp, m_lo, p_lo, 1))
            new.append(Crossing(mp, mm, p_hi, m_hi, 1))
        else:
            new.append(Crossing(p_lo, mm, mp, m_lo, -1))
            new.append(Crossing(m_hi, mp, mm, p_hi, -1))

    p_edge = plus_segs[-1]
    q_edge = minus_segs[k_tw - 1] if k_tw else m_out
    t_edge, r_edge = p_out, m_in
    c1, c2 = ("clasp", 1), ("clasp", 2)
    if clasp_sign > 0:
        new.append(Crossing(p_edge, t_edge, c1, c2, 1))
        new.append(Crossing(r_edge, q_edge, c2, c1, 1))
    else:
        new.append(Crossing(c2, p_edge, t_edge, c1, -1))
        new.append(Crossing(c1, r_edge, q_edge, c2, -1))

    return _renumber(new, 0)
