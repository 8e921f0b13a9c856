"""dp2delta: table, compute, verify and graph subcommands.

Exit status is 0 when everything matches, 1 on any mismatch or failed check
and 2 on usage errors (bad flags, unknown or ambiguous types).
"""

import argparse
import csv
import io
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction

from . import catalog
from .delta import UncertifiedStratum, delta_global
from .surfaces import TABLE_ROWS, AmbiguousType, UnknownType, build_surface, to_dot
from .verify import verify_lemma

CACHE_ENV = "DP2DELTA_CACHE"

OK, MISMATCH, USAGE = 0, 1, 2


def _cache_path(label, lines):
    root = os.environ.get(CACHE_ENV)
    if not root:
        return None
    return os.path.join(root, f"{label.replace('+', '_')}-{lines}.json")


def certificate_dict(label, lines):
    """Certificate as a JSON-ready dict, read from or written to the cache
    directory named by $DP2DELTA_CACHE when it is set."""
    path = _cache_path(label, lines)
    if path and os.path.exists(path):
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    cert = delta_global(build_surface(label, lines), strict=False).to_dict()
    if path:
        os.makedirs(os.path.dirname(path), exist_ok=True)
        tmp = f"{path}.{os.getpid()}.tmp"
        with open(tmp, "w", encoding="utf-8") as fh:
            json.dump(cert, fh, indent=2)
        os.replace(tmp, path)
    return cert


def _rat(d):
    return Fraction(d["num"], d["den"])


def _uncertified(cert):
    delta = _rat(cert["delta"])
    return any(_rat(s["lower"]) < delta for s in cert["strata"])


def table_row(row):
    """One table row recomputed: dict with paper and computed values."""
    lines = int(row["lines"])
    cert = certificate_dict(row["sing"], lines)
    delta = _rat(cert["delta"])
    stated = Fraction(row["delta"])
    if _uncertified(cert):
        status = "uncertified"
    else:
        status = "match" if delta == stated else "mismatch"
    return {
        "degree": int(row["degree"]),
        "lines": lines,
        "sing": row["sing"],
        "delta": delta,
        "stated_delta": stated,
        "computed_lines": cert["lines"],
        "status": status,
    }


def compute_table(workers=None):
    if workers == 1:
        return [table_row(r) for r in TABLE_ROWS]
    with ProcessPoolExecutor(max_workers=workers) as ex:
        return list(ex.map(table_row, TABLE_ROWS))


def render_table(rows, fmt):
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["degree", "lines", "sing", "delta", "status"])
        for r in rows:
            w.writerow([r["degree"], r["lines"], r["sing"], r["delta"], r["status"]])
        return buf.getvalue()
    if fmt == "json":
        out = []
        for r in rows:
            out.append({
                "degree": r["degree"],
                "lines": r["lines"],
                "sing": r["sing"],
                "delta": {"num": r["delta"].numerator, "den": r["delta"].denominator},
                "status": r["status"],
                "computed_lines": r["computed_lines"],
            })
        return json.dumps(out, indent=2) + "\n"
    head = f"{'K^2':>3}  {'lines':>5}  {'Sing(X)':<10}  {'delta':>6}  status"
    body = [head, "-" * len(head)]
    for r in rows:
        note = "" if r["computed_lines"] == r["lines"] else f"  (lattice count {r['computed_lines']} lines)"
        body.append(f"{r['degree']:>3}  {r['lines']:>5}  {r['sing']:<10}  {str(r['delta']):>6}  {r['status']}{note}")
    return "\n".join(body) + "\n"


def cmd_table(args):
    rows = compute_table(args.workers)
    sys.stdout.write(render_table(rows, args.format))
    return OK if all(r["status"] == "match" for r in rows) else MISMATCH


def render_certificate(cert):
    lines = [f"{cert['type']} ({cert['lines']} lines): delta = {_rat(cert['delta'])}"]
    for s in cert["strata"]:
        up = "-" if s["upper"] is None else str(_rat(s["upper"]))
        lines.append(f"  {s['name']:<14} {s['lemma']:<32} [{_rat(s['lower'])}, {up}]  via {s['witness']}")
    lines.append("  axioms: " + ", ".join(cert["axioms"]))
    return "\n".join(lines) + "\n"


def cmd_compute(args):
    model = build_surface(args.type, args.lines)
    try:
        cert = delta_global(model, strict=True).to_dict()
        status = OK
    except UncertifiedStratum as exc:
        print(f"uncertified: {exc}", file=sys.stderr)
        cert = delta_global(model, strict=False).to_dict()
        status = MISMATCH
    text = json.dumps(cert, indent=2) + "\n"
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    if args.format == "json":
        sys.stdout.write(text)
    else:
        sys.stdout.write(render_certificate(cert) if args.format == "text" else f"{_rat(cert['delta'])}\n")
    return status


def _report_text(rep):
    where = rep.instance or {}
    at = where.get("carrier") or "*".join(where.get("through", ())) or "?"
    name = f"{rep.id} part {rep.part}" if rep.part else rep.id
    head = f"{name}: {'match' if rep.ok else 'MISMATCH'}"
    if where:
        head += f"  (on {where['type']}/{where['lines']}, {at})"
    out = [head]
    for c in rep.checks:
        mark = "ok " if c.ok else "BAD"
        out.append(f"  {mark} {c.name:<28} stated {c.stated:<36} computed {c.computed}")
    return "\n".join(out)


def cmd_verify(args):
    ids = catalog.all_ids() if args.lemma == "all" else [args.lemma]
    status = OK
    for lid in ids:
        if lid == catalog.GENERIC_ID:
            print(f"{lid}: axiom-imported")
            continue
        if lid not in catalog.BY_ID:
            print(f"unknown lemma id {lid!r}", file=sys.stderr)
            return USAGE
        for rep in verify_lemma(lid):
            print(_report_text(rep))
            if not rep.ok:
                status = MISMATCH
    return status


def cmd_graph(args):
    dot = to_dot(build_surface(args.type, args.lines))
    if args.output and args.output != "-":
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(dot)
    else:
        sys.stdout.write(dot)
    return OK


def build_parser():
    p = argparse.ArgumentParser(prog="dp2delta", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    t = sub.add_parser("table", help="recompute the classification table")
    t.add_argument("--format", choices=("text", "csv", "json"), default="text")
    t.add_argument("--workers", type=int, default=None, help="process pool size (1 = serial)")
    t.set_defaults(func=cmd_table)

    c = sub.add_parser("compute", help="certificate for one surface")
    c.add_argument("--type", required=True, help="ADE type such as A3+2A1, or 'smooth'")
    c.add_argument("--lines", type=int, default=None)
    c.add_argument("--format", choices=("text", "json", "delta"), default="text")
    c.add_argument("-o", "--output", help="also write the certificate JSON here")
    c.set_defaults(func=cmd_compute)

    v = sub.add_parser("verify", help="recheck a catalog lemma against its closed forms")
    v.add_argument("lemma", help="lemma id or 'all'")
    v.set_defaults(func=cmd_verify)

    g = sub.add_parser("graph", help="dual graph of negative curves as DOT")
    g.add_argument("--type", required=True)
    g.add_argument("--lines", type=int, default=None)
    g.add_argument("-o", "--output", default="-")
    g.set_defaults(func=cmd_graph)
    return p


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (AmbiguousType, UnknownType) as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return USAGE


if __name__ == "__main__":
    sys.exit(main())
