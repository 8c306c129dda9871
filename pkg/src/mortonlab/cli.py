"""Command-line front end: table ingestion, cache persistence, reports.

Commands: parse, homfly, seifert, family, verify, skein-tree, double,
oracle-check.  Exit codes: 0 success / all verifications passed, 1
verification failure, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys
from dataclasses import dataclass, field

from .diagram import Diagram, parse_pd
from .errors import (
    DuplicateNameError,
    EmptyTableError,
    MortonLabError,
    TableError,
    UnsupportedFormatError,
    UsageError,
)
from .family import FamilySpec, insert_parallel_bands, whitehead_double
from .homfly import (
    DEFAULT_ORACLE_LIMIT,
    DEFAULT_TRACE_LIMIT,
    HomflyEngine,
    SkeinTrace,
    detect_cancellations,
    trace_to_dot,
)
from .morton import (
    FamilyReport,
    knot_level_defect,
    match_expected_polynomial,
    morton_bound_diagram,
    verify_theorem_family,
)
from .poly import LaurentPoly2
from .seifert import CrossingClass, classify_crossing, seifert_circles, seifert_csv_row

__all__ = ["KnotTableEntry", "RunConfig", "load_knot_table", "run_command", "export_report", "main"]

CACHE_ENV = "MORTONLAB_CACHE"


@dataclass
class KnotTableEntry:
    name: str
    pd: str
    source: str
    diagram: Diagram


@dataclass
class RunConfig:
    cache_path: str | None = None
    jobs: int = 1
    oracle_limit: int = DEFAULT_ORACLE_LIMIT
    trace_limit: int = DEFAULT_TRACE_LIMIT
    budget_seconds: float | None = None
    output_format: str = "table"
    mirror: str = "auto"
    extra: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.jobs < 1:
            raise UsageError("--jobs must be >= 1")


def load_knot_table(path, warn=None):
    """Parse a name,pd CSV (RFC-4180; the pd field carries commas and must
    be quoted).  Invalid rows are reported with their line number and
    skipped; duplicate names are an error."""
    warn = warn or (lambda msg: print(msg, file=sys.stderr))
    try:
        fh = open(path, "r", encoding="utf-8", newline="")
    except OSError as exc:
        raise TableError(f"cannot read table {path}: {exc}") from exc
    entries = []
    seen = {}
    with fh:
        reader = csv.reader(fh)
        try:
            header = next(reader)
        except StopIteration:
            raise EmptyTableError(f"{path}: empty file") from None
        if [h.strip().lower() for h in header[:2]] != ["name", "pd"]:
            raise TableError(f'{path}: header must be "name,pd", got {header!r}')
        for lineno, row in enumerate(reader, start=2):
            if not row or (len(row) == 1 and not row[0].strip()):
                continue
            if len(row) < 2:
                warn(f"{path}:{lineno}: skipping malformed row {row!r}")
                continue
            name, pd = row[0].strip(), row[1].strip()
            if name in seen:
                raise DuplicateNameError(
                    f"{path}: duplicate name {name!r} on lines {seen[name]} and {lineno}"
                )
            try:
                diagram = parse_pd(pd)
            except MortonLabError as exc:
                warn(f"{path}:{lineno}: skipping {name!r}: {exc}")
                continue
            seen[name] = lineno
            entries.append(KnotTableEntry(name, pd, f"{path}:{lineno}", diagram))
    if not entries:
        raise EmptyTableError(f"{path}: no valid entries")
    return entries


def export_report(payload, fmt) -> bytes:
    """Deterministic bytes for a report payload in the requested format."""
    if isinstance(payload, FamilyReport):
        if fmt == "json":
            return (json.dumps(payload.to_json_obj(), indent=2, sort_keys=True) + "\n").encode()
        if fmt == "csv":
            return payload.to_csv().encode()
        if fmt == "table":
            return payload.to_text_table().encode()
        raise UnsupportedFormatError(f"family report cannot be exported as {fmt}")
    if isinstance(payload, SkeinTrace):
        if fmt == "dot":
            return trace_to_dot(payload).encode()
        if fmt == "json":
            obj = {
                "stats": payload.stats,
                "cancellations": detect_cancellations(payload),
                "nodes": [
                    {
                        "id": n.id,
                        "role": n.role,
                        "m": n.m,
                        "chosen_crossing": n.chosen_crossing,
                        "switch": n.switched_child,
                        "smooth": n.smoothed_child,
                        "cancellation": n.cancellation,
                    }
                    for n in payload.nodes
                ],
            }
            return (json.dumps(obj, indent=2, sort_keys=True) + "\n").encode()
        raise UnsupportedFormatError(f"skein trace cannot be exported as {fmt}")
    if isinstance(payload, dict):
        if fmt == "json":
            return (json.dumps(payload, indent=2, sort_keys=True) + "\n").encode()
        if fmt == "csv":
            lines = [",".join(str(k) for k in payload)]
            lines.append(",".join(str(v) for v in payload.values()))
            return ("\n".join(lines) + "\n").encode()
        raise UnsupportedFormatError(f"stats cannot be exported as {fmt}")
    raise UnsupportedFormatError(f"cannot export {type(payload).__name__} as {fmt}")


# -- argument plumbing ---------------------------------------------------------


def _build_parser():
    top = argparse.ArgumentParser(prog="mortonlab", description=__doc__)
    sub = top.add_subparsers(dest="command", required=True)

    def common(p, fmt_default="table"):
        p.add_argument("--pd", help="PD text, e.g. \"X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]\"")
        p.add_argument("--table", help="name,pd CSV file")
        p.add_argument("--name", help="entry name inside --table")
        p.add_argument("--cache", help=f"polynomial cache file (or ${CACHE_ENV})")
        p.add_argument("--jobs", type=int, default=1)
        p.add_argument("--format", dest="fmt", default=fmt_default,
                       choices=["json", "csv", "table", "dot"])
        p.add_argument("--mirror", default="auto", choices=["auto", "off", "on"])
        p.add_argument("--out", help="write primary output to this file instead of stdout")

    p = sub.add_parser("parse", help="validate PD text and echo the diagram")
    common(p)

    p = sub.add_parser("homfly", help="HOMFLY polynomial of a diagram")
    common(p)
    p.add_argument("--expect", help="expected polynomial as JSON term records")

    p = sub.add_parser("seifert", help="Seifert circles / genus report")
    common(p, fmt_default="csv")

    p = sub.add_parser("family", help="emit parallel-band diagrams L_n")
    common(p)
    p.add_argument("--crossing", default="auto")
    p.add_argument("--ns", default="0,1,2,3", help="comma-separated band counts")

    p = sub.add_parser("verify", help="audit M(L_n) < 2*gc - 1 + n over a family")
    common(p)
    p.add_argument("--gc", type=int, required=True, help="knot-level canonical genus (given)")
    p.add_argument("--crossing", default="auto")
    p.add_argument("--nmax", type=int, default=5)
    p.add_argument("--budget", type=float, default=None, help="seconds")
    p.add_argument("--expect", help="expected base polynomial as JSON term records")

    p = sub.add_parser("skein-tree", help="materialize the resolution tree")
    common(p, fmt_default="dot")
    p.add_argument("--trace-limit", type=int, default=DEFAULT_TRACE_LIMIT)

    p = sub.add_parser("double", help="blackboard-framed Whitehead double")
    common(p)
    p.add_argument("--clasp", type=int, default=1, choices=[1, -1])
    p.add_argument("--twists", type=int, default=0)

    p = sub.add_parser("oracle-check", help="homfly vs naive oracle over a table")
    common(p)
    p.add_argument("--limit", type=int, default=DEFAULT_ORACLE_LIMIT)

    return top


def _diagram_from_args(args):
    if args.pd and args.table:
        raise UsageError("pass either --pd or --table, not both")
    if args.pd:
        return parse_pd(args.pd), "pd"
    if args.table:
        if not args.name:
            raise UsageError("--table needs --name to pick an entry")
        entries = load_knot_table(args.table)
        for e in entries:
            if e.name == args.name:
                return e.diagram, e.name
        raise UsageError(f"no entry named {args.name!r} in {args.table}")
    raise UsageError("need --pd or --table/--name")


def _engine_from_args(args, config):
    engine = HomflyEngine(oracle_limit=config.oracle_limit, trace_limit=config.trace_limit)
    path = args.cache or os.environ.get(CACHE_ENV)
    if path:
        engine.load_cache(path)
    return engine, path


def _emit(data: bytes, args):
    if getattr(args, "out", None):
        with open(args.out, "wb") as fh:
            fh.write(data)
    else:
        sys.stdout.write(data.decode())


def _auto_crossing(d):
    dec = seifert_circles(d)
    for i in range(len(d.crossings)):
        if classify_crossing(dec, i) is CrossingClass.JOINS_DISTINCT:
            return i
    raise UsageError("no eligible crossing (every crossing joins a circle to itself)")


def _poly_with_mirror(p, args):
    if args.mirror == "on":
        return p.mirror()
    return p


def run_command(argv, config: RunConfig | None = None) -> int:
    """Dispatch a CLI invocation; returns the process exit code."""
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        return _dispatch(args, config)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    except MortonLabError as exc:
        print(f"{exc.code}: {exc}", file=sys.stderr)
        return 2
    except IndexError as exc:
        print(f"INDEX_OUT_OF_RANGE: {exc}", file=sys.stderr)
        return 2


def _dispatch(args, config):
    config = config or RunConfig(jobs=getattr(args, "jobs", 1),
                                 output_format=getattr(args, "fmt", "table"))
    cmd = args.command

    if cmd == "parse":
        d, _ = _diagram_from_args(args)
        obj = {
            "crossings": len(d.crossings),
            "components": d.num_components(),
            "writhe": d.writhe(),
            "free_loops": d.free_loops,
            "pd": d.serialize(),
        }
        _emit(export_report(obj, "json" if args.fmt == "table" else args.fmt), args)
        return 0

    if cmd == "homfly":
        d, name = _diagram_from_args(args)
        engine, cache_path = _engine_from_args(args, config)
        p = _poly_with_mirror(engine.homfly(d), args)
        if cache_path:
            engine.flush_cache(cache_path)
        code = 0
        match = None
        if args.expect:
            expected = LaurentPoly2.from_json(args.expect)
            if args.mirror == "auto":
                match = match_expected_polynomial(p, expected)
            else:
                match = "exact" if p == expected else None
            code = 0 if match else 1
        obj = {
            "name": name,
            "homfly": p.to_json_obj(),
            "pretty": p.pretty(),
            "maxdeg_z": p.maxdeg_z(),
        }
        print(f"expansions: {engine.expansions}", file=sys.stderr)
        if args.expect:
            obj["expected_match"] = match
        _emit(export_report(obj, "json" if args.fmt in ("table", "dot") else args.fmt), args)
        return code

    if cmd == "seifert":
        rows = []
        if args.table and not args.name:
            for e in load_knot_table(args.table):
                rows.append(seifert_csv_row(e.name, e.diagram))
        else:
            d, name = _diagram_from_args(args)
            rows.append(seifert_csv_row(name, d))
        text = "name,c,s,mu,genus\n" + "\n".join(rows) + "\n"
        _emit(text.encode(), args)
        return 0

    if cmd == "family":
        d, name = _diagram_from_args(args)
        crossing = _auto_crossing(d) if args.crossing == "auto" else int(args.crossing)
        ns = [int(v) for v in args.ns.split(",") if v != ""]
        manifest = []
        chunks = []
        for n in ns:
            dn = insert_parallel_bands(d, crossing, n)
            dec = seifert_circles(dn) if dn.is_connected() else None
            manifest.append({
                "n": n,
                "c": len(dn.crossings),
                "s": dec.num_circles if dec else None,
                "genus": dec.diagram_genus if dec else None,
                "components": dn.num_components(),
                "pd": dn.serialize(),
            })
            chunks.append(dn.serialize())
        if args.fmt == "json":
            _emit(export_report({"base": name, "crossing": crossing, "members": manifest},
                                "json"), args)
        else:
            _emit(("\n".join(chunks) + "\n").encode(), args)
        return 0

    if cmd == "verify":
        d, name = _diagram_from_args(args)
        engine, cache_path = _engine_from_args(args, config)
        crossing = _auto_crossing(d) if args.crossing == "auto" else int(args.crossing)
        spec = FamilySpec(d, crossing, list(range(args.nmax + 1)))
        report = verify_theorem_family(
            spec, gc_claimed=args.gc, n_max=args.nmax, engine=engine,
            budget_seconds=args.budget, jobs=args.jobs, base_name=name,
        )
        if args.expect:
            expected = LaurentPoly2.from_json(args.expect)
            p = engine.homfly(d)
            match = (match_expected_polynomial(p, expected) if args.mirror == "auto"
                     else ("exact" if p == expected else None))
            obj = report.to_json_obj()
            obj["expected_match"] = match
            data = (json.dumps(obj, indent=2, sort_keys=True) + "\n").encode()
            _emit(data if args.fmt == "json" else export_report(report, args.fmt), args)
            if not match:
                return 1
        else:
            _emit(export_report(report, args.fmt), args)
        if cache_path:
            engine.flush_cache(cache_path)
        return 0 if report.all_strict() else 1

    if cmd == "skein-tree":
        d, _ = _diagram_from_args(args)
        engine, _ = _engine_from_args(args, config)
        engine.trace_limit = args.trace_limit
        trace = engine.skein_trace(d)
        _emit(export_report(trace, args.fmt if args.fmt in ("dot", "json") else "dot"), args)
        return 0

    if cmd == "double":
        d, _ = _diagram_from_args(args)
        w = whitehead_double(d, clasp_sign=args.clasp, twists=args.twists)
        obj = {
            "c": len(w.crossings),
            "components": w.num_components(),
            "writhe": w.writhe(),
            "genus": seifert_circles(w).diagram_genus,
            "genus_bound_crossings_of_base": len(d.crossings),
            "pd": w.serialize(),
        }
        _emit(export_report(obj, "json" if args.fmt in ("table", "dot") else args.fmt), args)
        return 0

    if cmd == "oracle-check":
        if not args.table:
            raise UsageError("oracle-check needs --table")
        engine, _ = _engine_from_args(args, config)
        engine.oracle_limit = args.limit
        checked = skipped = 0
        for e in load_knot_table(args.table):
            if len(e.diagram.crossings) > args.limit:
                skipped += 1
                continue
            fast = engine.homfly(e.diagram)
            slow = engine.naive_homfly(e.diagram)
            if fast != slow:
                print(f"MISMATCH {e.name}: engine={fast.pretty()} oracle={slow.pretty()}",
                      file=sys.stderr)
                return 1
            checked += 1
        _emit(export_report({"checked": checked, "skipped": skipped, "agree": True},
                            "json" if args.fmt in ("table", "dot") else args.fmt), args)
        return 0

    raise UsageError(f"unknown command {cmd!r}")


def main():
    sys.exit(run_command(sys.argv[1:]))


if __name__ == "__main__":
    main()
