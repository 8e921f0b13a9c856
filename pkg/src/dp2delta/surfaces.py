"""Lattice models of minimal resolutions of Du Val degree 2 del Pezzo surfaces.

A model is a simple-root system inside E7 (the (-2)-curves) together with the
(-1)-classes that are non-negative on it (the (-1)-curves).
"""

import csv
import re
from dataclasses import dataclass, field
from functools import lru_cache
from importlib import resources

import networkx as nx
import numpy as np

from .lattice import ANTI_K, enumerate_line_classes, fmt_class, enumerate_roots, intersect, line_root_products, root_products


def _load_table():
    with resources.files("dp2delta").joinpath("data", "table.csv").open(encoding="utf-8") as fh:
        return tuple(csv.DictReader(fh))


# rows of the classification in table order: degree, lines, sing, delta (strings)
TABLE_ROWS = _load_table()
TABLE_TYPES = tuple((r["sing"], int(r["lines"])) for r in TABLE_ROWS)


class UnknownType(ValueError):
    pass


class AmbiguousType(ValueError):
    pass


_FAMILY_ORDER = {"E": 0, "D": 1, "A": 2}


def parse_ade(text):
    """'A3+2A1' -> ['A3', 'A1', 'A1'] in canonical order."""
    text = text.strip().replace(" ", "")
    if text.lower() in ("smooth", "", "0"):
        return []
    labels = []
    for part in text.split("+"):
        m = re.fullmatch(r"(\d*)([ADE])(\d+)", part.upper())
        if not m:
            raise UnknownType(f"cannot parse ADE label {part!r}")
        mult = int(m.group(1) or 1)
        fam, n = m.group(2), int(m.group(3))
        if (fam == "D" and n < 4) or (fam == "E" and n not in (6, 7, 8)) or n < 1:
            raise UnknownType(f"not a Dynkin type: {part!r}")
        labels += [f"{fam}{n}"] * mult
    return sorted(labels, key=lambda s: (_FAMILY_ORDER[s[0]], -int(s[1:])))


def format_ade(labels):
    if not labels:
        return "smooth"
    out = []
    for lab in dict.fromkeys(labels):
        k = labels.count(lab)
        out.append(f"{k if k > 1 else ''}{lab}")
    return "+".join(out)


def dynkin_parents(label):
    """Parent index of each node (None for the first), built so that every
    node is adjacent to exactly one earlier node."""
    fam, n = label[0], int(label[1:])
    if fam == "A":
        return [None] + list(range(n - 1))
    if fam == "D":
        return [None] + list(range(n - 2)) + [n - 3]
    if fam == "E":
        # chain 0..n-2 with the extra node hanging off node 2
        return [None] + list(range(n - 2)) + [2]
    raise UnknownType(label)


def n_roots(label):
    fam, n = label[0], int(label[1:])
    return {"A": n * (n + 1), "D": 2 * n * (n - 1)}.get(fam) or {6: 72, 7: 126, 8: 240}[n]


@dataclass(frozen=True)
class SingularitySpec:
    ade_type: tuple
    expected_lines: int = None

    @classmethod
    def of(cls, text, lines=None):
        return cls(tuple(parse_ade(text)), lines)

    @property
    def label(self):
        return format_ade(list(self.ade_type))


@dataclass(frozen=True)
class PointStratum:
    carrier: str
    incident: tuple  # ((curve, local multiplicity), ...)
    kind: str  # generic-on-curve | curve-intersection | generic-off-curves
    name: str = ""

    @property
    def curves(self):
        return (self.carrier,) + tuple(c for c, _ in self.incident)


@dataclass(frozen=True)
class SurfaceModel:
    ade_type: tuple
    neg_two_curves: tuple  # classes, node order of the Dynkin labelling
    neg_one_curves: tuple
    names: tuple  # names of neg_two then neg_one
    components: tuple  # (label, (node names...)) per Dynkin component
    tangency: tuple = field(default=())  # edges realised as one point of multiplicity w

    @property
    def label(self):
        return format_ade(list(self.ade_type))

    @property
    def line_count(self):
        return len(self.neg_one_curves)

    @property
    def curve_classes(self):
        return self.neg_two_curves + self.neg_one_curves

    @property
    def curves(self):
        return dict(zip(self.names, self.curve_classes))

    def kind(self, name):
        return -2 if self.names.index(name) < len(self.neg_two_curves) else -1

    @property
    def neg_two_names(self):
        return self.names[: len(self.neg_two_curves)]

    @property
    def neg_one_names(self):
        return self.names[len(self.neg_two_curves):]

    @property
    def dual_graph(self):
        return dual_graph(self)

    def cls(self, name):
        return self.curves[name]

    @property
    def anti_canonical(self):
        return ANTI_K


def _line_count(chosen):
    lr = line_root_products()
    if not chosen:
        return lr.shape[0]
    return int(np.all(lr[:, list(chosen)] >= 0, axis=1).sum())


def _positive(idx):
    r = enumerate_roots()[idx]
    return r > tuple(-x for x in r)


def _search(labels, stop_at_lines=None, first_root=None):
    """DFS over simple-root systems of the given type.  Returns a dict
    line_count -> first chosen tuple of root indices found."""
    roots = enumerate_roots()
    G = root_products()
    nodes = []  # (component, parent global index or None, is component start)
    for c, lab in enumerate(labels):
        base = len(nodes)
        for p in dynkin_parents(lab):
            nodes.append((c, None if p is None else base + p))
    if first_root is None:
        first_root = roots.index((0, 1, -1, 0, 0, 0, 0, 0))
    found = {}
    chosen = []
    comp_first = {}

    def rec(k):
        if stop_at_lines is not None and stop_at_lines in found:
            return
        if k == len(nodes):
            n = _line_count(chosen)
            found.setdefault(n, tuple(chosen))
            return
        comp, parent = nodes[k]
        want = np.zeros(len(chosen), dtype=np.int64)
        if parent is not None:
            want[parent] = 1
        if k == 0:
            cands = [first_root]
        else:
            sub = G[:, chosen]
            ok = np.all(sub == want, axis=1)
            cands = [int(j) for j in np.nonzero(ok)[0]]
        for j in cands:
            if parent is None and k > 0:
                if not _positive(j):
                    continue
                prev = [comp_first[c] for c in comp_first if labels[c] == labels[comp] and c > 0]
                if prev and j <= max(prev):
                    continue
            chosen.append(j)
            if parent is None:
                comp_first[comp] = j
            rec(k + 1)
            chosen.pop()
            if parent is None:
                comp_first.pop(comp, None)

    rec(0)
    return found


@lru_cache(maxsize=None)
def _embeddings(labels):
    if not labels:
        return {56: ()}
    return _search(list(labels))


def enumerate_embeddings(ade_type):
    """One entry per embedding class with at least one line:
    list of (simple roots, line_count), sorted by decreasing line count."""
    labels = tuple(parse_ade(ade_type) if isinstance(ade_type, str) else ade_type)
    roots = enumerate_roots()
    found = _embeddings(labels)
    return [
        (tuple(roots[i] for i in idx), n)
        for n, idx in sorted(found.items(), reverse=True)
        if n > 0
    ]


def _name_model(labels, simple):
    roots = enumerate_roots()
    lr = line_root_products()
    G = root_products()
    idx = [roots.index(r) for r in simple]
    neg_two = tuple(simple)
    names2 = [f"E{i + 1}" for i in range(len(idx))]
    comps = []
    k = 0
    for lab in labels:
        size = int(lab[1:])
        comps.append((lab, tuple(names2[k:k + size])))
        k += size
    lines = enumerate_line_classes()
    keep = [i for i in range(len(lines)) if not idx or np.all(lr[i, idx] >= 0)]
    # lines meeting more exceptional curves first, then lexicographic
    keep.sort(key=lambda i: (-int(lr[i, idx].sum()) if idx else 0, lines[i]))
    neg_one = tuple(lines[i] for i in keep)
    names1 = [f"L{i + 1}" for i in range(len(neg_one))]
    return SurfaceModel(
        ade_type=tuple(labels),
        neg_two_curves=neg_two,
        neg_one_curves=neg_one,
        names=tuple(names2 + names1),
        components=tuple(comps),
    )


def lines_for(type_text):
    labels = format_ade(parse_ade(type_text))
    return sorted({n for t, n in TABLE_TYPES if t == labels}, reverse=True)


@lru_cache(maxsize=None)
def _build(labels, lines):
    if not labels:
        return _name_model((), ())
    roots = enumerate_roots()
    found = _search(list(labels), stop_at_lines=lines)
    if lines not in found:
        raise UnknownType(f"no embedding of {format_ade(list(labels))} with {lines} lines")
    return _name_model(labels, tuple(roots[i] for i in found[lines]))


def build_surface(spec, lines=None):
    """Build the model for a table type (or 'smooth').

    `spec` may be a SingularitySpec or an ADE string such as 'A3+2A1'.  The
    line count selects between inequivalent embeddings.  For a type with a
    single embedding the tabulated count is accepted as a label even where the
    lattice count differs from it (A2 and A2+A1).
    """
    if not isinstance(spec, SingularitySpec):
        spec = SingularitySpec.of(spec, lines)
    labels = spec.ade_type
    if not labels:
        if spec.expected_lines not in (None, 56):
            raise UnknownType("the smooth surface has 56 lines")
        return _build((), 56)
    label = format_ade(list(labels))
    tabulated = lines_for(label)
    if not tabulated:
        raise UnknownType(f"{label} is not a degree 2 Du Val type")
    counts = [n for _, n in enumerate_embeddings(labels)]
    n = spec.expected_lines
    if n is None:
        if len(counts) > 1:
            raise AmbiguousType(f"{label} has embeddings with {counts} lines; pass the line count")
        n = counts[0]
    elif n not in counts:
        if len(counts) == 1 and n in tabulated:
            n = counts[0]
        else:
            raise UnknownType(f"{label} with {n} lines does not occur (line counts: {counts})")
    return _build(tuple(labels), n)


def dual_graph(model):
    """Weighted graph on all negative curves, nodes tagged with kind."""
    g = nx.Graph()
    curves = model.curves
    for name in model.names:
        g.add_node(name, kind=model.kind(name), cls=curves[name])
    names = model.names
    for i, a in enumerate(names):
        for b in names[i + 1:]:
            w = intersect(curves[a], curves[b])
            if w < 0:
                raise AssertionError(f"distinct curves {a}, {b} meet negatively")
            if w > 0:
                g.add_edge(a, b, weight=w)
    return g


def dynkin_graph(labels):
    g = nx.Graph()
    base = 0
    for lab in labels:
        par = dynkin_parents(lab)
        for i, p in enumerate(par):
            g.add_node(base + i)
            if p is not None:
                g.add_edge(base + i, base + p)
        base += len(par)
    return g


def point_strata(model, carrier):
    """Strata of points on `carrier`: one per transversal intersection point
    with a neighbouring negative curve plus the generic stratum."""
    if carrier not in model.names:
        raise KeyError(carrier)
    curves = model.curves
    c = curves[carrier]
    out = []
    for other in model.names:
        if other == carrier:
            continue
        w = intersect(c, curves[other])
        if w <= 0:
            continue
        edge = frozenset((carrier, other))
        if edge in model.tangency:
            out.append(PointStratum(carrier, ((other, w),), "curve-intersection", f"{carrier}*{other}"))
            continue
        for k in range(w):
            tag = f"#{k + 1}" if w > 1 else ""
            out.append(PointStratum(carrier, ((other, 1),), "curve-intersection", f"{carrier}*{other}{tag}"))
    out.append(PointStratum(carrier, (), "generic-on-curve", f"{carrier}:generic"))
    return out


def to_dot(model):
    g = dual_graph(model)
    title = f"{model.label} ({model.line_count} lines)"
    lines = [f'graph "{title}" {{']
    for n, d in g.nodes(data=True):
        if d["kind"] == -2:
            style = 'shape=circle, style=filled, fillcolor="#cccccc"'
        else:
            style = "shape=box"
        lines.append(f'  "{n}" [label="{n}\\n{fmt_class(d["cls"])}", kind="{d["kind"]}", {style}];')
    for a, b, d in sorted(g.edges(data=True), key=lambda e: (model.names.index(e[0]), model.names.index(e[1]))):
        a, b = sorted((a, b), key=model.names.index)
        w = d["weight"]
        extra = f', label="{w}"' if w > 1 else ""
        lines.append(f'  "{a}" -- "{b}" [weight={w}{extra}];')
    lines.append("}")
    return "\n".join(lines) + "\n"
