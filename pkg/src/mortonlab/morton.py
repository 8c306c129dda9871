"""Degree bounds on the HOMFLY polynomial and family-level audits.

For a connected diagram with c crossings and s Seifert circles the
z-degree of the HOMFLY polynomial is at most c - s + 1, which equals
twice the diagram genus plus mu - 1; minimizing over diagrams gives the
knot-level bound of twice the canonical genus.  The skein relation also
forces three unconditional inequalities between the degrees M(K+),
M(K-), M(K0) of any skein triple.

verify_theorem_family builds the parallel-band links L_n over a base
diagram and checks M(L_n) < 2*gc - 1 + n row by row, where gc is the
knot-level canonical genus supplied by the caller (never computed:
minimizing over all diagrams is out of scope).  Odd rows n = 2m + 1 are
the knots K_m, whose bound reads M < 2(gc + m) + 1.
"""

from __future__ import annotations

import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

from .diagram import Diagram
from .errors import DisconnectedError
from .family import FamilySpec, crossing_change_candidates, insert_parallel_bands
from .homfly import HomflyEngine
from .poly import LaurentPoly2
from .seifert import diagram_genus, seifert_circles

__all__ = [
    "FamilyRow",
    "FamilyReport",
    "morton_bound_diagram",
    "morton_defect",
    "knot_level_defect",
    "verify_skein_degree_inequalities",
    "verify_theorem_family",
    "match_expected_polynomial",
]

_NEG_INF = float("-inf")


def morton_bound_diagram(d: Diagram) -> int:
    """c - s + 1 for a connected diagram (= 2*genus + mu - 1)."""
    if not d.is_connected():
        raise DisconnectedError("per-diagram degree bound needs a connected diagram")
    return len(d.crossings) - seifert_circles(d).num_circles + 1


def morton_defect(d: Diagram, engine: HomflyEngine | None = None) -> int:
    """Gap between this diagram's degree bound and the actual z-degree."""
    engine = engine or HomflyEngine()
    bound = morton_bound_diagram(d)
    m = engine.homfly(d).maxdeg_z()
    assert m is not None, "zero polynomial from a valid diagram"
    defect = bound - m
    assert defect >= 0, f"degree bound violated: M={m} > bound={bound}"
    return defect


def knot_level_defect(gc_claimed: int, m: int) -> int:
    """2*gc - M with a caller-supplied canonical genus."""
    return 2 * gc_claimed - m


def _mdeg(p: LaurentPoly2):
    m = p.maxdeg_z()
    return _NEG_INF if m is None else m


def verify_skein_degree_inequalities(d: Diagram, i: int,
                                     engine: HomflyEngine | None = None) -> bool:
    """Check the three skein degree inequalities at crossing i.

    These are theorems (the degree of a sum is at most the max of the
    degrees), so False signals an engine bug, not a property of d.
    """
    engine = engine or HomflyEngine()
    x = d.crossings[i]
    if x.sign > 0:
        d_plus, d_minus = d, d.switch_crossing(i)
    else:
        d_plus, d_minus = d.switch_crossing(i), d
    d_zero = d.smooth_crossing(i)
    m_plus = _mdeg(engine.homfly(d_plus))
    m_minus = _mdeg(engine.homfly(d_minus))
    m_zero = _mdeg(engine.homfly(d_zero))
    return (
        m_zero <= max(m_plus, m_minus) - 1
        and m_plus <= max(m_minus, m_zero + 1)
        and m_minus <= max(m_plus, m_zero + 1)
    )


@dataclass
class FamilyRow:
    n: int
    c: int
    s: int
    genus: int
    m: int
    bound: int
    strict: bool


@dataclass
class FamilyReport:
    base_name: str
    crossing: int
    gc_claimed: int
    rows: list = field(default_factory=list)
    hypothesis_certificates: list = field(default_factory=list)
    incomplete: bool = False
    base_defect: int | None = None

    def all_strict(self):
        return not self.incomplete and all(r.strict for r in self.rows)

    def to_json_obj(self):
        return {
            "base_name": self.base_name,
            "crossing": self.crossing,
            "gc_claimed_knot_level": self.gc_claimed,
            "base_defect_knot_level": self.base_defect,
            "rows": [
                {"n": r.n, "c": r.c, "s": r.s, "genus": r.genus,
                 "M": r.m, "bound": r.bound, "strict": r.strict}
                for r in self.rows
            ],
            "hypothesis_certificates": self.hypothesis_certificates,
            "incomplete": self.incomplete,
            "all_strict": self.all_strict(),
        }

    def to_csv(self):
        lines = ["n,c,s,genus,M,bound,strict"]
        for r in self.rows:
            lines.append(f"{r.n},{r.c},{r.s},{r.genus},{r.m},{r.bound},{str(r.strict).lower()}")
        return "\n".join(lines) + "\n"

    def to_text_table(self):
        head = f"base={self.base_name} crossing={self.crossing} gc(knot-level, given)={self.gc_claimed}"
        cols = ["n", "c", "s", "genus", "M", "bound", "strict"]
        rows = [[str(v) for v in (r.n, r.c, r.s, r.genus, r.m, r.bound, r.strict)]
                for r in self.rows]
        widths = [max(len(c), *(len(row[j]) for row in rows)) if rows else len(c)
                  for j, c in enumerate(cols)]
        out = [head]
        out.append("  ".join(c.rjust(w) for c, w in zip(cols, widths)))
        for row in rows:
            out.append("  ".join(v.rjust(w) for v, w in zip(row, widths)))
        for cert in self.hypothesis_certificates:
            out.append(f"certificate: {cert}")
        status = []
        if self.incomplete:
            status.append("INCOMPLETE (budget exceeded)")
        status.append("all rows strict" if self.all_strict() else "NOT all rows strict")
        hyp = "hypothesis certificate found" if self.hypothesis_certificates else (
            "hypothesis UNVERIFIED (no certificate found; this does not refute it)")
        out.append(f"status: {'; '.join(status)}; {hyp}")
        return "\n".join(out) + "\n"


def _hypothesis_certificates(base: Diagram, engine: HomflyEngine):
    """Sufficient certificates that switching some crossing lowers the
    canonical genus (or at least the degree chain the bound needs)."""
    certs = []
    base_genus = diagram_genus(base)
    for i, switched in crossing_change_candidates(base):
        if switched.is_connected():
            g = diagram_genus(switched)
            if g < base_genus:
                certs.append({
                    "crossing": i, "kind": "genus_drop",
                    "switched_simplified_genus": g, "base_genus": base_genus,
                })
                continue
        m = engine.homfly(switched).maxdeg_z()
        m = -1 if m is None else m
        if m < 2 * base_genus:
            certs.append({
                "crossing": i, "kind": "morton_degree",
                "switched_maxdeg_z": m, "base_genus": base_genus,
            })
    return certs


def verify_theorem_family(spec: FamilySpec, gc_claimed: int, n_max: int,
                          engine: HomflyEngine | None = None,
                          budget_seconds: float | None = None,
                          jobs: int = 1,
                          base_name: str = "base") -> FamilyReport:
    """Row-by-row audit M(L_n) < 2*gc - 1 + n for n = 0..n_max.

    Rows for distinct n may be computed concurrently (shared engine cache);
    assembly is ordered by n.  A budget overrun marks the report incomplete
    and keeps the rows finished so far.
    """
    engine = engine or HomflyEngine()
    t0 = time.monotonic()
    report = FamilyReport(base_name=base_name, crossing=spec.crossing,
                          gc_claimed=gc_claimed)
    report.hypothesis_certificates = _hypothesis_certificates(spec.base, engine)

    ns = list(range(n_max + 1))
    diagrams = {n: insert_parallel_bands(spec.base, spec.crossing, n) for n in ns}

    def row_for(n):
        d = diagrams[n]
        p = engine.homfly(d)
        m = p.maxdeg_z()
        assert m is not None
        s = seifert_circles(d).num_circles if d.is_connected() else None
        genus = diagram_genus(d) if d.is_connected() else None
        bound = 2 * gc_claimed - 1 + n
        return FamilyRow(n=n, c=len(d.crossings), s=s, genus=genus,
                         m=m, bound=bound, strict=m < bound)

    done = {}
    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            futures = {n: pool.submit(row_for, n) for n in ns}
            for n in ns:
                if budget_seconds is not None and time.monotonic() - t0 > budget_seconds:
                    report.incomplete = True
                    break
                done[n] = futures[n].result()
            for f in futures.values():
                f.cancel()
    else:
        for n in ns:
            if budget_seconds is not None and time.monotonic() - t0 > budget_seconds:
                report.incomplete = True
                break
            done[n] = row_for(n)

    report.rows = [done[n] for n in sorted(done)]
    for r in report.rows:
        if r.n == 1:
            report.base_defect = knot_level_defect(gc_claimed, r.m)
    return report


def match_expected_polynomial(p: LaurentPoly2, expected: LaurentPoly2):
    """"exact" / "mirror" / None comparison against a printed polynomial."""
    if p == expected:
        return "exact"
    if p.mirror() == expected:
        return "mirror"
    return None
