"""Flag integrals S(C), S(W;P), local delta bounds and global certificates."""

import json
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .lattice import ANTI_K, intersect
from .poly import integrate, min_on_interval, padd, pmul, pscale
from .surfaces import PointStratum, build_surface, point_strata
from .zariski import BlowupModelInvalid, blowup_family, piecewise_family

K_SQUARED = 2
GENERIC_FLOOR = Fraction(9, 5)
GENERIC_AXIOM = "generic-floor-9/5"
GENERIC_LEMMA = "deg2-genpoint"
# label for strata whose bounds are computed directly but match no catalog entry
UNCATALOGUED = "uncatalogued"


class StratumNotOnCarrier(ValueError):
    pass


class UncertifiedStratum(RuntimeError):
    pass


def S_from_family(fam):
    """(1/K^2) * integral of P(v)^2 over [0, tau]."""
    total = sum((integrate(p.psq, p.lo, p.hi) for p in fam.pieces), Fraction(0))
    return total / K_SQUARED


def S_curve(model, C):
    return S_from_family(family(model, C))


def family(model, C):
    if isinstance(model, _Cached):
        return model.family(C)
    return piecewise_family(model, model.anti_canonical, C)


def h_function(fam, stratum, model=None):
    """Piecewise h(v) = (P.C)(N.C)_P + (P.C)^2/2 as [(lo, hi, poly), ...].

    The local term (N.C)_P sums coefficient times local multiplicity over the
    incident curves of the stratum."""
    if stratum.carrier != fam.carrier:
        raise StratumNotOnCarrier(f"{stratum.name} is not on {fam.carrier}")
    if model is not None:
        cls = model.curves
        for other, mult in stratum.incident:
            if other not in cls or intersect(cls[other], cls[fam.carrier]) < mult:
                raise StratumNotOnCarrier(f"{other} does not meet {fam.carrier} at {stratum.name}")
    out = []
    for p in fam.pieces:
        if fam.carrier in p.support:
            raise ValueError(f"carrier {fam.carrier} enters its own negative part")
        local = ()
        for other, mult in stratum.incident:
            local = padd(local, pscale(mult, p.coeff(other)))
        h = padd(pmul(p.pdotc, local), pscale(Fraction(1, 2), pmul(p.pdotc, p.pdotc)))
        out.append((p.lo, p.hi, h))
    return out


def S_flag(fam, stratum, model=None):
    """(2/K^2) * integral of h over [0, tau]."""
    pieces = h_function(fam, stratum, model)
    return sum((integrate(h, a, b) for a, b, h in pieces), Fraction(0)) * 2 / K_SQUARED


def delta_point_bound_curve(model, C, stratum):
    """(lower, upper) for delta_P via the flag through the curve C (A = 1)."""
    fam = family(model, C)
    s = S_from_family(fam)
    sw = S_flag(fam, stratum, _base(model))
    return min(1 / s, 1 / sw), 1 / s


def _base(model):
    return model.base if isinstance(model, _Cached) else model


# ---------------------------------------------------------------- blowups

@dataclass(frozen=True)
class BlowupBound:
    lower: Fraction
    upper: Fraction
    S_E: Fraction
    S_W: tuple  # ((stratum name, value), ...)


def _exceptional_strata(bm, fam):
    """Points of E_P: one per intersection with a curve of the blowup plus
    the generic point."""
    e = bm.curves["E_P"]
    out = []
    for n, c in bm.curves.items():
        if n == "E_P":
            continue
        w = intersect(c, e)
        for k in range(w):
            tag = f"#{k + 1}" if w > 1 else ""
            out.append(PointStratum("E_P", ((n, 1),), "curve-intersection", f"E_P*{n}{tag}"))
    out.append(PointStratum("E_P", (), "generic-on-curve", "E_P:generic"))
    return out


def delta_point_bound_blowup(model, stratum_or_curves):
    """Bounds at a point P from the ordinary blowup of P (A(E_P) = 2).

    Accepts a PointStratum or the tuple of curve names through P."""
    base = _base(model)
    through = stratum_or_curves.curves if isinstance(stratum_or_curves, PointStratum) else tuple(stratum_or_curves)
    bm, fam = _blowup(base, tuple(sorted(through)))
    return _blowup_bound(bm, fam)


def _blowup_bound(bm, fam):
    s = S_from_family(fam)
    sws = []
    for st in _exceptional_strata(bm, fam):
        sws.append((st.name, S_flag(fam, st)))
    worst = max(v for _, v in sws)
    lower = min(2 / s, 1 / worst)
    return BlowupBound(lower, 2 / s, s, tuple(sws))


_BLOWUP_CACHE = {}


def _blowup(base, through):
    key = (id(base), through)
    if key not in _BLOWUP_CACHE:
        _BLOWUP_CACHE[key] = blowup_family(base, through)
    return _BLOWUP_CACHE[key]


# ---------------------------------------------------------------- certificates

class _Cached:
    """Memoises families of one surface model."""

    def __init__(self, base):
        self.base = base
        self._fam = {}

    def family(self, C):
        if C not in self._fam:
            self._fam[C] = piecewise_family(self.base, self.base.anti_canonical, C)
        return self._fam[C]

    @property
    def curves(self):
        return self.base.curves


@dataclass
class StratumBound:
    name: str
    curves: tuple  # curves through the point
    lower: Fraction
    upper: Fraction  # None when only the imported floor applies
    witness: str  # carrier or 'blowup' achieving the lower bound
    lemma: str = ""
    S_values: dict = field(default_factory=dict)

    @property
    def certified(self):
        return self.upper is not None and self.lower == self.upper


@dataclass
class DeltaCertificate:
    type: str
    lines: int
    delta: Fraction
    strata: list
    axioms: tuple = (GENERIC_AXIOM,)

    def to_dict(self):
        q = _q
        return {
            "type": self.type,
            "lines": self.lines,
            "delta": q(self.delta),
            "strata": [
                {
                    "name": s.name,
                    "curves": list(s.curves),
                    "lemma": s.lemma,
                    "witness": s.witness,
                    "lower": q(s.lower),
                    "upper": None if s.upper is None else q(s.upper),
                    "S_values": {k: q(v) for k, v in s.S_values.items()},
                }
                for s in self.strata
            ],
            "axioms": list(self.axioms),
        }

    def to_json(self):
        return json.dumps(self.to_dict(), indent=2)


def _q(x):
    x = Fraction(x)
    return {"num": x.numerator, "den": x.denominator}


def surface_points(model):
    """Point classes needing a flag: points of (-2)-curves and points of
    lines meeting a (-2)-curve.  Each is (name, curves through the point)."""
    two = set(model.neg_two_names)
    g = model.dual_graph
    carriers = [n for n in model.names if n in two or any(m in two for m in g[n])]
    pts = []
    seen = set()
    for c in carriers:
        for st in point_strata(model, c):
            key = frozenset(st.curves) if st.kind == "curve-intersection" else None
            if st.kind == "curve-intersection":
                other = st.incident[0][0]
                w = g[c][other]["weight"]
                tagged = (key, st.name.split("#")[-1] if w > 1 else "")
                if tagged in seen:
                    continue
                seen.add(tagged)
                a, b = sorted(st.curves, key=model.names.index)
                tag = st.name[len(st.name.split("#")[0]):]
                pts.append((f"{a}*{b}{tag}", (a, b)))
            else:
                pts.append((f"{c}:generic", (c,)))
    return pts


def _stratum_for(model, carrier, curves, name):
    others = [c for c in curves if c != carrier]
    if not others:
        return PointStratum(carrier, (), "generic-on-curve", f"{carrier}:generic")
    return PointStratum(carrier, tuple((o, 1) for o in others), "curve-intersection", name)


def bound_point(cm, name, curves):
    """Lower and upper bounds at one point class from the curves through it."""
    model = cm.base
    best_lower, witness = Fraction(0), None
    upper = None
    svals = {}
    for c in curves:
        fam = cm.family(c)
        s = S_from_family(fam)
        sw = S_flag(fam, _stratum_for(model, c, curves, name), model)
        svals[f"S({c})"] = s
        svals[f"S_W({c})"] = sw
        lo, up = min(1 / s, 1 / sw), 1 / s
        if lo > best_lower:
            best_lower, witness = lo, c
        upper = up if upper is None else min(upper, up)
    return StratumBound(name, tuple(curves), best_lower, upper, witness, S_values=svals)


def refine_with_blowup(cm, b):
    """Try the blowup flag at a point on two curves; updates b in place."""
    try:
        bb = delta_point_bound_blowup(cm, b.curves)
    except BlowupModelInvalid:
        return b
    b.S_values["S(E_P)"] = bb.S_E
    for n, v in bb.S_W:
        b.S_values[f"S_W({n})"] = v
    if bb.lower > b.lower:
        b.lower, b.witness = bb.lower, "blowup"
    b.upper = min(b.upper, bb.upper)
    return b


def _lemma_for(b, strategy):
    if b.witness == "blowup":
        a, c = b.curves
        return strategy.get(f"{a}*{c}") or strategy.get(f"{c}*{a}", UNCATALOGUED)
    return strategy.get(b.witness, UNCATALOGUED)


def delta_global(model, strategy=None, strict=True):
    """Certificate for delta of the surface: minimum over all point classes,
    with the imported floor 9/5 for points off lines through singular points.

    Points whose curve bounds fall short of the candidate value are refined by
    the blowup flag when they lie on two (-2)-curves.  `strategy` maps a
    carrier name (or "E1*E2" for the blowup at E1 and E2) to the catalog entry
    whose computation it is; by default the frozen map for this surface."""
    if strategy is None:
        from .catalog import load_strategy
        strategy = load_strategy().get(f"{model.label}/{model.line_count}", {})
    cm = _Cached(model)
    bounds = [bound_point(cm, name, curves) for name, curves in surface_points(model)]
    two = set(model.neg_two_names)
    delta = min(b.upper for b in bounds) if bounds else GENERIC_FLOOR
    for b in bounds:
        if b.lower < delta and len(b.curves) > 1 and set(b.curves) <= two:
            refine_with_blowup(cm, b)
    if bounds:
        delta = min(delta, min(b.upper for b in bounds))
    for b in bounds:
        b.lemma = _lemma_for(b, strategy)
    bounds.append(StratumBound("generic", (), GENERIC_FLOOR, None, "axiom", lemma=GENERIC_LEMMA))
    if not any(b.upper is not None for b in bounds):
        delta = GENERIC_FLOOR
    gaps = [b for b in bounds if b.lower < delta]
    if gaps and strict:
        names = ", ".join(f"{b.name} ({b.lower} < {delta})" for b in gaps)
        raise UncertifiedStratum(f"{model.label}: bounds do not close at {names}")
    return DeltaCertificate(model.label, model.line_count, delta, bounds)


@lru_cache(maxsize=None)
def certify(type_label, lines=None):
    return delta_global(build_surface(type_label, lines))
