"""Locate catalog entries on concrete surfaces and check their claims."""

import json
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction

from . import catalog
from .delta import S_flag, S_from_family, _exceptional_strata, _blowup
from .poly import from_expr
from .surfaces import TABLE_TYPES, build_surface, point_strata
from .zariski import BlowupModelInvalid, piecewise_family


# ---------------------------------------------------------------- indexing

def _surface_signatures(type_lines):
    """All carrier and blowup signatures of one table surface."""
    typ, lines = type_lines
    model = build_surface(typ, lines)
    out = []
    for c in model.names:
        fam = piecewise_family(model, model.anti_canonical, c)
        out.append(({"carrier": c}, catalog.family_signature(fam)))
    two = model.neg_two_names
    g = model.dual_graph
    for i, a in enumerate(two):
        for b in two[i + 1:]:
            if g.has_edge(a, b):
                try:
                    _, fam = _blowup(model, (a, b))
                except BlowupModelInvalid:
                    continue
                out.append(({"through": [a, b]}, catalog.family_signature(fam)))
    return typ, model.line_count, out


def table_surfaces():
    return [(t, n) for t, n in TABLE_TYPES if t != "smooth"]


def scan(workers=None):
    """[(type, lines, where, signature), ...] over every table surface."""
    items = table_surfaces()
    if workers == 1:
        results = map(_surface_signatures, items)
    else:
        with ProcessPoolExecutor(max_workers=workers) as ex:
            results = list(ex.map(_surface_signatures, items))
    rows = []
    for typ, lines, sigs in results:
        for where, sig in sigs:
            rows.append((typ, lines, where, sig))
    return rows


def find_instances(rows=None):
    """{lemma id: {part: {"type", "lines", carrier|through} or None}}.

    The first hit in table order is kept for each part."""
    rows = scan() if rows is None else rows
    by_sig = {}
    for lem in catalog.LEMMAS:
        for part in lem.parts:
            by_sig.setdefault(catalog.lemma_signature(lem, part), []).append((lem, part))
    found = {lem.id: {part: None for part in lem.parts} for lem in catalog.LEMMAS}
    for typ, lines, where, sig in rows:
        for lem, part in by_sig.get(sig, ()):
            if lem.blowup != ("through" in where):
                continue
            if found[lem.id][part] is None:
                found[lem.id][part] = {"type": typ, "lines": lines, **where}
    return found


def strategy_from_rows(rows):
    """{"<type>/<lines>": {carrier or "P1*P2": lemma id}} for every carrier of
    every surface whose family matches a catalog entry."""
    table = catalog.signature_table()
    out = {}
    for typ, lines, where, sig in rows:
        hit = table.get(sig)
        if hit is None:
            continue
        lem = catalog.get(hit[0])
        if lem.blowup != ("through" in where):
            continue
        key = where.get("carrier") or "*".join(where["through"])
        out.setdefault(f"{typ}/{lines}", {})[key] = hit[0]
    return out


def write_frozen(path_dir, rows=None):
    rows = scan() if rows is None else rows
    inst = find_instances(rows)
    strat = strategy_from_rows(rows)
    with open(os.path.join(path_dir, "lemma_instances.json"), "w", encoding="utf-8") as fh:
        json.dump(inst, fh, indent=1, sort_keys=True)
        fh.write("\n")
    with open(os.path.join(path_dir, "strategy.json"), "w", encoding="utf-8") as fh:
        json.dump(strat, fh, indent=1, sort_keys=True)
        fh.write("\n")
    return inst, strat


# ---------------------------------------------------------------- checking

@dataclass
class Check:
    name: str
    stated: str
    computed: str
    ok: bool


@dataclass
class LemmaReport:
    id: str
    part: str
    instance: dict
    checks: list = field(default_factory=list)

    @property
    def ok(self):
        return self.instance is not None and all(c.ok for c in self.checks)


def _fmt_polys(ps):
    from .poly import to_str
    return " | ".join(to_str(p) for p in ps)


def instance_family(lem, inst):
    model = build_surface(inst["type"], inst["lines"])
    if lem.blowup:
        bm, fam = _blowup(model, tuple(sorted(inst["through"])))
        return model, bm, fam, _exceptional_strata(bm, fam)
    fam = piecewise_family(model, model.anti_canonical, inst["carrier"])
    return model, model, fam, point_strata(model, inst["carrier"])


def _coef_at(fam, name, piece):
    return fam.pieces[piece].coeff(name)


def select(fam, strata, where):
    """Strata of the carrier picked out by an SWClaim selector."""
    def incident(st):
        return [n for n, _ in st.incident]

    first = set(fam.pieces[0].support)
    ever = set().union(*(set(p.support) for p in fam.pieces))
    out = []
    for st in strata:
        names = incident(st)
        if where == "all":
            keep = True
        elif where == "offN0":
            keep = not any(n in first for n in names)
        elif where == "atN0":
            keep = any(n in first for n in names)
        elif where == "offN":
            keep = not any(n in ever for n in names)
        else:
            mode, pairs = where
            hit = any(
                _coef_at(fam, n, i) == from_expr(e) for n in names for i, e in pairs if i < len(fam.pieces))
            keep = hit if mode == "at" else not hit
        if keep:
            out.append(st)
    return out


def check_part(lem, part, inst):
    rep = LemmaReport(lem.id, part, inst)
    if inst is None:
        rep.checks.append(Check("instance", "some table surface", "none found", False))
        return rep
    model, amb, fam, strata = instance_family(lem, inst)
    sig = catalog.family_signature(fam)
    want = catalog.lemma_signature(lem, part)
    labels = ("tau", "breakpoints", "P(v)^2", "P(v).A", "N(v) coefficients")
    for label, got, exp in zip(labels, sig, want):
        if label in ("P(v)^2", "P(v).A"):
            rep.checks.append(Check(label, _fmt_polys(exp), _fmt_polys(got), got == exp))
        elif label == "N(v) coefficients":
            rep.checks.append(Check(label, "; ".join(_fmt_polys(p) for p in exp),
                                    "; ".join(_fmt_polys(p) for p in got), got == exp))
        else:
            rep.checks.append(Check(label, _fmt(exp), _fmt(got), got == exp))
    S = S_from_family(fam)
    rep.checks.append(Check("S", lem.S, str(S), S == Fraction(lem.S)))
    a_val = 2 if lem.blowup else 1
    worst = Fraction(0)
    for claim in lem.claims_for(part):
        chosen = select(fam, strata, claim.where)
        vals = [S_flag(fam, st) if lem.blowup else S_flag(fam, st, model) for st in chosen]
        top = max(vals) if vals else None
        q = Fraction(claim.value)
        if top is None:
            ok = False
        elif claim.rel == "=":
            ok = top == q
        else:
            ok = top <= q
        worst = max(worst, top or 0)
        rep.checks.append(Check(f"S(W;P) {claim.rel} over {_where(claim.where)}", claim.value,
                                "none" if top is None else str(top), ok))
    rel, value = lem.delta
    upper = a_val / S
    lower = min(upper, 1 / worst) if worst else upper
    q = Fraction(value)
    ok = (lower == upper == q) if rel == "=" else lower >= q
    rep.checks.append(Check(f"delta {rel}", value, f"[{lower}, {upper}]", ok))
    return rep


def _where(w):
    if isinstance(w, str):
        return w
    mode, pairs = w
    return f"{mode}(" + ",".join(f"{e}@{i}" for i, e in pairs) + ")"


def _fmt(x):
    if isinstance(x, tuple):
        return "[" + ", ".join(str(y) for y in x) + "]"
    return str(x)


def verify_lemma(lemma_id, instances=None):
    """Reports for every part of one lemma (empty list for the axiom)."""
    lem = catalog.get(lemma_id)
    if lem is None:
        return []
    instances = catalog.load_instances() if instances is None else instances
    found = instances.get(lem.id, {})
    return [check_part(lem, part, found.get(part)) for part in lem.parts]
