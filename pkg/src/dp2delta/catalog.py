"""Catalog of closed-form flag computations and their verification.

Each entry states, for a carrier curve A (or the exceptional curve of a
blowup), the pseudo-effective threshold, breakpoints, P(v)^2 and P(v).A per
piece, the multiset of negative-part coefficients per piece (one list per
configuration "part"), the value S(A), claims about S(W;P) on point sets of A,
and the resulting local delta claim.

Coefficient groups are written ("v/5", 4, 3, 2, 1), meaning the coefficients
4v/5, 3v/5, 2v/5, v/5.  Curve names are deliberately absent: instances are
located by matching these forms against every carrier of every table surface.
"""

import json
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from importlib import resources

from .poly import from_expr, pderiv, peval, pscale

GENERIC_ID = "deg2-genpoint"


@dataclass(frozen=True)
class SWClaim:
    """A claim on max S(W;P) over a set of points of the carrier.

    where:
      "all"       every point class of A
      "offN0"     points not on curves in the support of the first piece
      "atN0"      points on curves in the support of the first piece
      "offN"      points not on any curve that ever enters N
      ("off", ((piece, expr), ...))   points not on curves with that coefficient
      ("at", ((piece, expr), ...))    points on curves with that coefficient
    """

    where: object
    rel: str  # "=" or "<="
    value: str


@dataclass(frozen=True)
class Erratum:
    field: str
    stated: str
    used: str
    reason: str  # "derivative", "continuity", "reciprocal", "proof"


@dataclass(frozen=True)
class Lemma:
    id: str
    tau: str
    breaks: tuple
    psq: tuple
    pdota: tuple
    S: str
    parts: dict
    sw: tuple
    delta: tuple  # (relation, value)
    blowup: bool = False
    aliases: tuple = ()
    errata: tuple = ()
    part_sw: dict = field(default_factory=dict)  # part -> claims overriding sw

    def claims_for(self, part):
        return self.part_sw.get(part, self.sw)

    @property
    def tau_q(self):
        return Fraction(self.tau)

    @property
    def breaks_q(self):
        return tuple(Fraction(b) for b in self.breaks)

    @property
    def psq_polys(self):
        return tuple(from_expr(e) for e in self.psq)

    @property
    def pdota_polys(self):
        return tuple(from_expr(e) for e in self.pdota)

    def n_multisets(self, part):
        return tuple(expand_groups(piece) for piece in self.parts[part])


def expand_groups(piece):
    """Sorted tuple of coefficient polynomials described by the groups."""
    out = []
    for expr, *mults in piece:
        p = from_expr(expr)
        out.extend(pscale(m, p) for m in mults)
    return tuple(sorted(out))


def _parts_add(first, adds):
    """Second piece = first-piece groups plus one extra group per part."""
    first = tuple(first)
    return {k: (first, first + (a,)) for k, a in adds.items()}


def _single(**groups):
    return {k: ((g,),) for k, g in groups.items()}


_VM1_CHAINS = {"a": ("v-1", 1, 1, 1), "b": ("v-1", 2, 1, 1), "c": ("v-1", 3, 2, 1)}


def _lemmas():
    L = []
    L.append(Lemma(
        "deg2-32-A1points", "1", (), ("2*(1-v)*(1+v)",), ("2*v",), "2/3",
        {"": ((),)}, (SWClaim("all", "=", "2/3"),), ("=", "3/2")))
    L.append(Lemma(
        "deg2-2717-nearA1points", "1", ("2/3",), ("2-2*v-v**2/2", "4*(1-v)**2"), ("1+v/2", "4*(1-v)"), "4/9",
        {"": ((("v/2", 1),), (("2*v-1", 1), ("3*v-2", 1)))},
        (SWClaim("offN0", "<=", "17/27"),), (">=", "27/17"),
        errata=(Erratum("delta", "> 27/17", ">= 27/17", "proof"),)))
    L.append(Lemma(
        "deg2-2-near2A1points", "1", (), ("2*(1-v)",), ("1",), "1/2",
        _single(a=("v/2", 1, 1), b=("v/2", 2, 1, 1), c=("v/2", 2, 2, 1, 1), d=("v/2", 2, 2, 2, 1, 1),
                e=("v/2", 2, 2, 2, 2, 1, 1)),
        (SWClaim("offN0", "=", "1/2"),), ("=", "2")))
    L.append(Lemma(
        "deg2-65-A2points", "3", ("2",), ("2-v**2/3", "2*(3-v)**2/3"), ("v/3", "2*(1-v/3)"), "5/3",
        {"": ((("v/3", 1, 1),), (("v/3", 1, 1), ("v-2", 1)))},
        (SWClaim("atN0", "=", "7/9"), SWClaim("offN0", "=", "1/3")), ("=", "6/5"), blowup=True,
        errata=(Erratum("delta", "> 27/17 on A minus B", "= 6/5", "proof"),)))
    L.append(Lemma(
        "deg2-97-A2points", "4/3", ("1",), ("2-3*v**2/2", "(4-3*v)**2/2"), ("3*v/2", "3*(2-3*v/2)"), "7/9",
        _parts_add([("v/2", 1)], {
            "a": ("v-1", 1, 1, 1, 1, 1, 1), "b": ("v-1", 2, 1, 1, 1, 1, 1), "c": ("v-1", 2, 1, 2, 1, 1, 1),
            "d": ("v-1", 2, 1, 2, 1, 2, 1), "e": ("v-1", 3, 2, 1, 1, 1, 1), "f": ("v-1", 3, 2, 1, 2, 1, 1),
            "g": ("v-1", 3, 2, 1, 3, 2, 1), "h": ("v-1", 4, 3, 2, 1, 1, 1), "i": ("v-1", 4, 3, 2, 1, 2, 1),
            "j": ("v-1", 5, 4, 3, 2, 1, 1), "k": ("v-1", 6, 5, 4, 3, 2, 1)}),
        (SWClaim("offN0", "<=", "2/3"),), ("=", "9/7")))
    L.append(Lemma(
        "deg2-3219-nearA2points", "1", ("3/4",), ("2-2*v-v**2/3", "5*(1-v)**2"), ("1+v/3", "5*(1-v)"), "11/24",
        {"": ((("v/3", 2, 1),), (("2*v-1", 1), ("3*v-2", 1), ("4*v-3", 1)))},
        (SWClaim("offN0", "<=", "19/32"),), (">=", "32/19")))
    L.append(Lemma(
        "deg2-158-nearA1A2points", "6/5", ("1",), ("2-2*v+v**2/6", "(5*v-6)**2/6"), ("1-v/6", "5*(1-5*v/6)"),
        "8/15",
        _parts_add([("v/6", 3, 4, 2)], {
            "a": ("v-1", 1, 1, 1, 1), "b": ("v-1", 2, 1, 1, 1), "c": ("v-1", 2, 1, 2, 1),
            "d": ("v-1", 3, 2, 1, 1), "e": ("v-1", 4, 3, 2, 1)}),
        (SWClaim("offN0", "<=", "7/15"),), ("=", "15/8")))
    mid = {}
    for k, first, add in (("a", ("v/2", 1, 1), ("v-1", 1, 1)), ("b", ("v/2", 1, 1), ("v-1", 2, 1)),
                          ("c", ("v/2", 2, 1, 1), ("v-1", 1, 1)), ("d", ("v/2", 2, 1, 1), ("v-1", 2, 1)),
                          ("e", ("v/2", 2, 2, 1, 1), ("v-1", 1, 1)), ("f", ("v/2", 2, 2, 1, 1), ("v-1", 2, 1)),
                          ("g", ("v/2", 2, 2, 2, 1, 1), ("v-1", 1, 1)),
                          ("h", ("v/2", 2, 2, 2, 1, 1), ("v-1", 2, 1))):
        mid[k] = ((first,), (first, add))
    L.append(Lemma(
        "deg2-1-middleA3", "2", ("1",), ("2-v**2", "(2-v)**2"), ("v", "2-v"), "1", mid,
        (SWClaim("offN", "<=", "5/6"), SWClaim(("at", ((1, "v-1"), (1, "2*v-2"))), "<=", "1/2")),
        ("=", "1")))
    L.append(Lemma(
        "deg2-65-A3points", "3/2", ("1",), ("2-4*v**2/3", "2*(3-2*v)**2/3"), ("4*v/3", "4*(1-2*v/3)"), "5/6",
        _parts_add([("v/3", 2, 1)], {
            "a": ("v-1", 1, 1, 1, 1), "b": ("v-1", 2, 1, 1, 1), "c": ("v-1", 2, 1, 2, 1),
            "d": ("v-1", 3, 2, 1, 1), "e": ("v-1", 4, 3, 2, 1)}),
        (SWClaim("offN0", "<=", "1/2"),), ("=", "6/5")))
    L.append(Lemma(
        "deg2-7543-nearA3points", "1", ("4/5",), ("2-2*v-v**2/4", "6*(1-v)**2"), ("1+v/4", "6*(1-v)"), "7/15",
        {"": ((("v/4", 3, 2, 1),), (("2*v-1", 1), ("3*v-2", 1), ("4*v-3", 1), ("5*v-4", 1)))},
        (SWClaim("offN0", "<=", "43/75"),), (">=", "75/43")))
    L.append(Lemma(
        "deg2-95-nearA1A3", "4/3", ("1",), ("2-2*v+v**2/4", "(4-3*v)**2/4"), ("1-v/4", "3*(1-3*v/4)"), "5/9",
        {"a": ((("v/4", 3, 2, 1, 2),), (("v/4", 3, 2, 1, 2), ("v-1", 1, 1))),
         "b": ((("v/4", 3, 2, 1, 2),), (("v/4", 3, 2, 1, 2), ("v-1", 2, 1))),
         "c": ((("v/4", 5, 6, 4, 2, 3),), (("v/4", 5, 6, 4, 2, 3), ("v-1", 1, 1))),
         "d": ((("v/4", 5, 6, 4, 2, 3),), (("v/4", 5, 6, 4, 2, 3), ("v-1", 2, 1)))},
        (SWClaim("offN0", "<=", "4/9"),), ("=", "9/5"),
        errata=(Erratum("pdota[0]", "1+v/4", "1-v/4", "derivative"),)))
    L.append(Lemma(
        "deg2-32-near3A1points", "2", (), ("(2-v)**2/2",), ("1-v/2",), "2/3",
        _single(a=("v/2", 1, 1, 1), b=("v/2", 2, 1, 1, 1), c=("v/4", 1, 2, 3, 3, 2, 1),
                d=("v/2", 1, 2, 3, 2, 1), e=("v/6", 2, 4, 5, 4, 3, 2, 1), f=("v/2", 2, 2, 1, 1, 1),
                g=("v/2", 2, 2, 2, 1, 1, 1), h=("v/2", 3, 2, 4, 3, 2, 1), i=("v/2", 2, 2, 2, 2, 1, 1, 1),
                j=("v/2", 2, 4, 6, 5, 4, 3, 3)),
        (SWClaim("offN0", "=", "1/3"),), ("=", "3/2"), aliases=("deg2-32-nearA1middleA3",)))
    L.append(Lemma(
        "deg2-1811-nearA2A3", "3/2", ("4/3",), ("2-2*v+5*v**2/12", "2*(3-2*v)**2/3"),
        ("1-5*v/12", "4*(1-2*v/3)"), "11/18",
        {"": ((("v/3", 2, 1), ("v/4", 3, 2, 1)), (("v/3", 2, 1), ("v-1", 3, 2, 1), ("3*v-4", 1)))},
        (SWClaim("offN0", "=", "10/27"),), ("=", "18/11")))
    L.append(Lemma(
        "deg2-1213-A4points", "2", ("1", "3/2"), ("2-5*v**2/6", "3-2*v+v**2/6", "3*(2-v)**2/2"),
        ("5*v/6", "1-v/6", "3*(1-v/2)"), "13/12",
        {"": ((("v/6", 3, 4, 2),), (("v/6", 3, 4, 2), ("v-1", 1)),
              (("v-1", 2, 1, 1), ("v/2", 1), ("2*v-3", 1)))},
        (SWClaim(("at", ((0, "2*v/3"),)), "=", "13/12"), SWClaim(("off", ((0, "2*v/3"),)), "=", "13/24")),
        ("=", "12/13")))
    parts = {}
    for k, g in _VM1_CHAINS.items():
        base = ("v/4", 3, 2, 1)
        parts[k] = ((base,), (base, g), (("v-1", 3, 2, 1) + g[1:], ("3*v-4", 1)))
    L.append(Lemma(
        "deg2-3631-A4points", "3/2", ("1", "4/3"), ("2-5*v**2/4", "(10-7*v)*(2-v)/4", "(3-2*v)**2"),
        ("5*v/4", "3-7*v/4", "2*(3-2*v)"), "31/36", parts,
        (SWClaim("offN0", "<=", "26/36"),), ("=", "36/31")))
    L.append(Lemma(
        "deg2-2413-nearA4points", "5/4", ("1",), ("2-2*v+v**2/5", "(5-4*v)**2/5"), ("1-v/5", "4*(1-4*v/5)"),
        "13/24", _parts_add([("v/5", 3, 6, 4, 2)], _VM1_CHAINS),
        (SWClaim(("off", ((0, "6*v/5"),)), "<=", "11/24"),), ("=", "24/13")))
    L.append(Lemma(
        "deg2-216121-nearA4point", "1", ("5/6",), ("2-2*v-v**2/5", "7*(1-v)**2"), ("1+v/5", "7*(1-v)"), "17/36",
        {"": ((("v/5", 4, 3, 2, 1),), (("2*v-1", 1), ("3*v-2", 1), ("4*v-3", 1), ("5*v-4", 1), ("6*v-5", 1)))},
        (SWClaim("offN0", "<=", "121/216"),), (">=", "216/121")))
    L.append(Lemma(
        "deg2-7241-nearA1A4", "4/3", ("1", "5/4"), ("3*v**2/10-2*v+2", "13*v**2/10-4*v+3", "(4-3*v)**2/2"),
        ("1-3*v/10", "2-13*v/10", "3*(2-3*v/2)"), "41/72",
        {"": ((("v/5", 4, 3, 2, 1), ("v/2", 1)), (("v/5", 4, 3, 2, 1), ("v/2", 1), ("v-1", 1)),
              (("v-1", 4, 3, 2, 1, 1), ("v/2", 1), ("4*v-5", 1)))},
        (SWClaim("offN0", "<=", "61/144"),), ("=", "72/41")))
    L.append(Lemma(
        "deg2-3623-nearA2A4", "5/3", ("3/2",), ("2-2*v+7*v**2/15", "(5-3*v)**2/5"),
        ("1-7*v/15", "3*(1-3*v/5)"), "23/36",
        {"": ((("v/5", 4, 3, 2, 1), ("v/3", 2, 1)), (("v/5", 4, 3, 2, 1), ("v-1", 2, 1), ("2*v-3", 1)))},
        (SWClaim("offN0", "<=", "7/20"),), ("=", "36/23"),
        errata=(Erratum("parts[][0]", "v/5*(4,3,2,1) + v/2*(2,1)", "v/5*(4,3,2,1) + v/3*(2,1)", "continuity"),)))
    L.append(Lemma(
        "deg2-67-themiddleA5points", "2", ("3/2",), ("2-2*v**2/3", "2*(2-v)**2"), ("2*v/3", "2*(2-v)"), "7/6",
        {"a": ((("v/3", 1, 2, 2, 1),), (("v-1", 1, 2, 2, 1), ("2*v-3", 1, 1))),
         "b": ((("v/3", 2, 4, 3, 2, 1),), (("v-1", 4, 3, 2, 1), ("4*v-5", 1), ("4*v-6", 1)))},
        (SWClaim("all", "<=", "7/6"),), ("=", "6/7")))
    L.append(Lemma(
        "deg2-67-A5points", "2", ("1",), ("2-3*v**2/4", "(v-2)*(v-6)/4"), ("3*v/4", "1-v/4"), "7/6",
        {"a": ((("v/4", 2, 3, 2, 1),), (("v/4", 2, 3, 2, 1), ("v-1", 1))),
         "b": ((("v/4", 5, 6, 4, 2, 3),), (("v/4", 5, 6, 4, 2, 3), ("v-1", 1)))},
        (), ("=", "6/7"),
        part_sw={
            "a": (SWClaim(("off", ((0, "v/2"), (0, "3*v/4"))), "<=", "7/12"),
                  SWClaim(("at", ((0, "v/2"),)), "<=", "7/8")),
            "b": (SWClaim("offN", "<=", "7/12"), SWClaim(("at", ((1, "v-1"),)), "<=", "7/8"))}))
    parts = {}
    for k, g in (("a", ("v-1", 1, 1)), ("b", ("v-1", 2, 1))):
        base = ("v/5", 4, 3, 2, 1)
        parts[k] = ((base,), (base, g), (("v-1", 4, 3, 2, 1) + g[1:], ("4*v-5", 1)))
    L.append(Lemma(
        "deg2-87-A5points", "3/2", ("1", "5/4"), ("2-6*v**2/5", "4-4*v+4*v**2/5", "(3-2*v)**2"),
        ("6*v/5", "2*(1-2*v/5)", "2*(3-2*v)"), "7/8", parts,
        (SWClaim("offN0", "<=", "7/12"),), ("=", "8/7")))
    L.append(Lemma(
        "deg2-4927-nearA5", "1", ("6/7",), ("2-2*v-v**2/6", "8*(1-v)**2"), ("1+v/6", "8*(1-v)"), "10/21",
        {"": ((("v/6", 5, 4, 3, 2, 1),),
              (("2*v-1", 1), ("3*v-2", 1), ("4*v-3", 1), ("5*v-4", 1), ("6*v-5", 1), ("7*v-6", 1)))},
        (SWClaim("offN0", "<=", "27/49"),), (">=", "49/27")))
    L.append(Lemma(
        "deg2-127-near2A2point", "3/2", ("1",), ("2-2*v+v**2/3", "(3-2*v)**2/3"), ("1-v/3", "2*(1-2*v/3)"),
        "7/12",
        {k: ((g,), (g, ("v-1", 1))) for k, g in (
            ("a", ("v/3", 1, 2, 2, 1)), ("b", ("v/3", 2, 4, 3, 2, 1)), ("c", ("v/6", 5, 4, 3, 2, 1, 3)),
            ("d", ("v/3", 2, 4, 6, 5, 4, 3)))},
        (SWClaim("offN0", "<=", "5/12"),), ("=", "12/7"), aliases=("deg2-127-nearA5",),
        errata=(Erratum("parts[d][1]", "v/6*(2,4,6,5,4,3) + (v-1)", "v/3*(2,4,6,5,4,3) + (v-1)",
                        "continuity"),)))
    L.append(Lemma(
        "deg2-34-themiddleA5point", "3", ("1",), ("2-2*v**2/3", "(3-v)**2/3"), ("2*v/3", "1-v/3"), "4/3",
        {k: ((g,), (g, ("v-1", 1))) for k, g in (
            ("a", ("v/3", 1, 2, 2, 1)), ("b", ("v/6", 3, 5, 4, 3, 2, 1)), ("c", ("v/3", 2, 4, 3, 2, 1)),
            ("d", ("v/3", 2, 4, 6, 5, 4, 3)))},
        (SWClaim("offN0", "<=", "2/3"), SWClaim("atN0", "<=", "10/9")), ("=", "3/4")))
    L.append(Lemma(
        "deg2-910-A5points", "2", ("4/3",), ("2-3*v**2/4", "3*(2-v)**2/2"), ("3*v/4", "3*(1-v/2)"), "10/9",
        {"": ((("v/4", 2, 3, 2, 1),), (("v/2", 1), ("v-1", 3, 2, 1), ("3*v-4", 1)))},
        (SWClaim(("off", ((0, "3*v/4"),)), "<=", "8/9"),), ("=", "9/10")))
    L.append(Lemma(
        "deg2-98-A5points", "5/3", ("1",), ("2-6*v**2/5", "(5-3*v)**2/5"), ("6*v/5", "3*(1-3*v/5)"), "8/9",
        _parts_add([("v/5", 4, 3, 2, 1)], _VM1_CHAINS),
        (SWClaim("offN0", "<=", "2/3"),), ("=", "9/8")))
    L.append(Lemma(
        "deg2-4526-nearA1A5", "4/3", ("6/5",), ("2-2*v+v**2/3", "(4-3*v)**2/2"), ("1-v/3", "3*(2-3*v/2)"),
        "26/45",
        {"": ((("v/6", 5, 4, 3, 2, 1, 3),), (("v/2", 1), ("v-1", 5, 4, 3, 2, 1), ("5*v-6", 1)))},
        (SWClaim("offN0", "<=", "2/5"),), ("=", "45/26"),
        errata=(Erratum("parts[][1]", "... + (3v-4)", "... + (5v-6)", "continuity"),)))
    L.append(Lemma(
        "deg2-34-A7points", "2", (), ("(2-v)*(2+v)/2",), ("v/2",), "4/3",
        _single(a=("v/4", 1, 2, 3, 3, 2, 1), b=("v/2", 1, 1, 1), c=("v/2", 1, 2, 1, 1), d=("v/2", 1, 2, 2, 1, 1),
                e=("v/2", 1, 2, 3, 2, 1), f=("v/2", 3, 4, 3, 2, 1, 2)),
        (SWClaim("offN0", "=", "4/3"),), ("=", "3/4")))
    L.append(Lemma(
        "deg2-35-D5points", "3", ("2",), ("2-v**2/3", "2*(3-v)**2/3"), ("v/3", "2*(1-v/3)"), "5/3",
        {"a": ((("v/6", 2, 4, 3, 3),), (("v/3", 1, 2), ("v-1", 1, 1), ("v-2", 1, 1))),
         "b": ((("v/6", 3, 3, 6, 4, 2),), (("v/3", 2, 1), ("v-1", 1, 2), ("2*v-3", 1), ("2*v-4", 1)))},
        (SWClaim(("at", ((0, "2*v/3"),)), "<=", "4/3"), SWClaim("offN0", "<=", "10/9")), ("=", "3/5")))
    L.append(Lemma(
        "deg2-910-D5point", "2", ("1", "5/3"), ("2-4*v**2/5", "3-2*v+v**2/5", "2*(2-v)**2"),
        ("4*v/5", "1-v/5", "2*(2-v)"), "10/9",
        {"": ((("v/5", 3, 6, 4, 2),), (("v/5", 3, 6, 4, 2), ("v-1", 1)),
              (("v-1", 3, 2, 1, 1), ("3*v-4", 1), ("3*v-5", 1)))},
        (SWClaim(("off", ((0, "6*v/5"),)), "<=", "5/9"),), ("=", "9/10")))
    L.append(Lemma(
        "deg2-12-D6points", "4", ("2",), ("2-v**2/4", "(4-v)**2/4"), ("v/4", "1-v/4"), "2",
        {"a": ((("v/4", 3, 2, 1, 2, 2),), (("v/4", 3, 2, 1, 2), ("v-1", 1), ("v-2", 1))),
         "b": ((("v/4", 2, 4, 6, 5, 2, 3),), (("v/4", 2, 4, 6, 5, 3), ("v-1", 1), ("v-2", 1)))},
        (SWClaim("atN0", "<=", "5/3"), SWClaim("offN0", "<=", "4/3")), ("=", "1/2")))
    L.append(Lemma(
        "deg2-37-points", "4", ("3",), ("2-v**2/6", "(4-v)**2/2"), ("v/6", "2-v/2"), "7/3",
        {"a": ((("v/6", 3, 4, 2, 4, 2),), (("v/2", 1), ("v-1", 1, 1), ("v-2", 1, 1), ("v-3", 1, 1))),
         "b": ((("v/6", 3, 8, 6, 4, 2, 4),),
               (("v/2", 1), ("v-1", 2, 1), ("2*v-3", 1), ("2*v-4", 1), ("2*v-5", 1), ("2*v-6", 1)))},
        (), ("=", "3/7"),
        errata=(Erratum("parts[a][0]", "v/6*(3,2,3,3,2)", "v/6*(3,4,2,4,2)", "continuity"),),
        part_sw={
            "a": (SWClaim(("at", ((0, "v/2"),)), "<=", "4/3"),
                  SWClaim(("off", ((0, "v/2"), (0, "2*v/3"))), "<=", "4/3")),
            "b": (SWClaim(("at", ((0, "v/2"),)), "<=", "4/3"),
                  SWClaim(("off", ((0, "v/2"), (0, "4*v/3"))), "<=", "4/3"))}))
    L.append(Lemma(
        "deg2-45-middleA6points", "2", ("3/2",), ("2-7*v**2/12", "(2-v)*(10-3*v)/4"), ("7*v/12", "2-3*v/4"),
        "5/4",
        {"": ((("v/4", 3, 2, 1), ("v/3", 2, 1)), (("v/4", 3, 2, 1), ("v-1", 2, 1), ("2*v-3", 1)))},
        (SWClaim("all", "<=", "5/4"),), ("=", "4/5")))
    L.append(Lemma(
        "deg2-45-NOTmiidleA6points", "5/2", ("1", "2"), ("2-7*v**2/10", "3-2*v+3*v**2/10", "(5-2*v)**2/5"),
        ("7*v/10", "1-3*v/10", "2*(1-2*v/5)"), "5/4",
        {"": ((("v/5", 4, 3, 2, 1), ("v/2", 1)), (("v/5", 4, 3, 2, 1), ("v/2", 1), ("v-1", 1)),
              (("v/5", 4, 3, 2, 1), ("v-1", 1, 1), ("v-2", 1)))},
        (SWClaim(("off", ((0, "4*v/5"),)), "<=", "53/60"),), ("=", "4/5")))
    L.append(Lemma(
        "deg2-6053-A6points", "3/2", ("1", "6/5"), ("2-7*v**2/6", "3-2*v-v**2/6", "(3-2*v)**2"),
        ("7*v/6", "1+v/6", "2*(3-2*v)"), "53/60",
        {"": ((("v/6", 5, 4, 3, 2, 1),), (("v/6", 5, 4, 3, 2, 1), ("v-1", 1)),
              (("v-1", 5, 4, 3, 2, 1, 1), ("5*v-6", 1)))},
        (SWClaim("offN0", "<=", "31/60"),), ("=", "60/53")))
    L.append(Lemma(
        "deg2-6037-nearA6points", "3/2", ("7/5",), ("2-2*v+3*v**2/7", "(3-2*v)**2"), ("1-3*v/7", "2*(3-2*v)"),
        "37/60",
        {"": ((("v/7", 2, 4, 6, 8, 10, 5),), (("v-1", 1, 2, 3, 4, 5), ("5*v-6", 1), ("5*v-7", 1)))},
        (SWClaim("offN0", "<=", "11/30"),), ("=", "60/37"),
        errata=(Erratum("parts[][1]", "(v-1)*(2,4,6,8,10) + ...", "(v-1)*(1,2,3,4,5) + ...", "continuity"),)))
    L.append(Lemma(
        "deg2-384209-nearA6points", "1", ("7/8",), ("2-2*v-v**2/7", "9*(1-v)**2"), ("1+v/7", "9*(1-v)"),
        "23/48",
        {"": ((("v/7", 6, 5, 4, 3, 2, 1),),
              tuple((f"{k}*v-{k - 1}", 1) for k in range(2, 9)))},
        (SWClaim("offN0", "<=", "209/384"),), (">=", "384/209")))
    L.append(Lemma(
        "deg2-47-points", "3", ("2", "5/2"), ("2-3*v**2/10", "4-2*v+v**2/5", "(3-v)**2"),
        ("3*v/10", "1-v/5", "3-v"), "7/4",
        {"": ((("v/5", 6, 4, 2, 3), ("v/2", 1)), (("v/5", 6, 4, 2, 3), ("v-1", 1), ("v-2", 1)),
              (("v-1", 1, 2, 1), ("v-2", 1), ("2*v-3", 1), ("2*v-4", 1), ("2*v-5", 1)))},
        (SWClaim(("off", ((0, "6*v/5"),)), "<=", "7/6"),), ("=", "4/7")))
    L.append(Lemma(
        "deg2-310-points", "6", ("4",), ("2-v**2/12", "(6-v)**2/6"), ("v/12", "1-v/6"), "10/3",
        {"": ((("v/3", 1, 2), ("v/2", 1), ("v/4", 3, 2, 1)),
              (("v/3", 1, 2), ("v/2", 1), ("v-1", 1), ("v-2", 1), ("v-3", 1), ("v-4", 1)))},
        (SWClaim(("at", ((0, "2*v/3"), (0, "v/2"))), "<=", "7/3"),
         SWClaim(("off", ((0, "2*v/3"), (0, "v/2"))), "<=", "8/3")), ("=", "3/10")))
    L.append(Lemma(
        "deg2-916-points", "3", ("7/3",), ("2-2*v**2/7", "(3-v)**2"), ("2*v/7", "3-v"), "16/9",
        {"": ((("v/7", 4, 8, 12, 9, 6, 3),),
              (("v-1", 1, 2, 3), ("3*v-4", 1), ("3*v-5", 1), ("3*v-6", 1), ("3*v-7", 1)))},
        (SWClaim("offN0", "<=", "2/9"),), ("=", "9/16"),
        errata=(Erratum("delta", "= 3/10", "= 9/16", "reciprocal"),)))
    L.append(Lemma(
        "deg2-38-points", "5", ("3",), ("2-2*v**2/15", "(5-v)**2/5"), ("2*v/15", "1-v/5"), "8/3",
        {"": ((("v/15", 6, 12, 18, 9, 10, 5),), (("v/5", 2, 4, 6, 3), ("v-1", 1), ("v-2", 1), ("v-3", 1)))},
        (SWClaim(("off", ((0, "6*v/5"),)), "<=", "21/10"),), ("=", "3/8")))
    L.append(Lemma(
        "deg2-34-onlyinA7points", "5/2", ("3/2",), ("2-8*v**2/15", "(5-2*v)**2/5"), ("8*v/15", "2*(1-2*v/5)"),
        "4/3",
        {"": ((("v/5", 4, 3, 2, 1), ("v/3", 2, 1)), (("v/5", 4, 3, 2, 1), ("v-1", 2, 1), ("2*v-3", 1)))},
        (SWClaim(("off", ((0, "4*v/5"),)), "<=", "4/3"),), ("=", "3/4")))
    L.append(Lemma(
        "deg2-98-A7points", "3/2", ("7/6",), ("2-8*v**2/7", "(3-2*v)**2"), ("8*v/7", "2*(3-2*v)"), "8/9",
        {"": ((("v/7", 6, 5, 4, 3, 2, 1),), (("v-1", 6, 5, 4, 3, 2, 1), ("6*v-7", 1)))},
        (SWClaim("offN0", "<=", "4/9"),), ("=", "9/8")))
    return tuple(L)


LEMMAS = _lemmas()
BY_ID = {lem.id: lem for lem in LEMMAS}
for _lem in LEMMAS:
    for _a in _lem.aliases:
        BY_ID[_a] = _lem


def get(lemma_id):
    if lemma_id == GENERIC_ID:
        return None
    try:
        return BY_ID[lemma_id]
    except KeyError:
        raise KeyError(f"unknown lemma id {lemma_id!r}") from None


def all_ids():
    return [GENERIC_ID] + [lem.id for lem in LEMMAS]


# ---------------------------------------------------------------- signatures

def family_signature(fam):
    """Hashable summary: (tau, breakpoints, psq, pdotc, N multisets)."""
    return (
        fam.tau,
        tuple(fam.breakpoints[1:-1]),
        tuple(p.psq for p in fam.pieces),
        tuple(p.pdotc for p in fam.pieces),
        tuple(tuple(sorted(c for _, c in p.coeffs if c)) for p in fam.pieces),
    )


def lemma_signature(lem, part):
    return (lem.tau_q, lem.breaks_q, lem.psq_polys, lem.pdota_polys, lem.n_multisets(part))


@lru_cache(maxsize=None)
def signature_table():
    """signature -> (lemma id, part) for every encoded part."""
    out = {}
    for lem in LEMMAS:
        for part in lem.parts:
            out.setdefault(lemma_signature(lem, part), (lem.id, part))
    return out


def derivative_consistent(psq, pdota):
    """P.A = -(1/2) d/dv P^2 must hold piecewise."""
    return pscale(Fraction(-1, 2), pderiv(psq)) == pdota


def continuity_gap(lem, part):
    """Pieces whose total coefficient mass jumps at a breakpoint (a cheap
    continuity test on the stated data that does not need curve names)."""
    bad = []
    for i, b in enumerate(lem.breaks_q):
        left = sum((_eval(p, b) for p in lem.n_multisets(part)[i]), Fraction(0))
        right = sum((_eval(p, b) for p in lem.n_multisets(part)[i + 1]), Fraction(0))
        if left != right:
            bad.append((b, left, right))
    return bad


def _eval(p, v):
    return peval(p, v)


# ---------------------------------------------------------------- frozen data

def _data(name):
    return resources.files("dp2delta").joinpath("data", name)


def load_instances():
    with _data("lemma_instances.json").open(encoding="utf-8") as fh:
        return json.load(fh)


def load_strategy():
    with _data("strategy.json").open(encoding="utf-8") as fh:
        return json.load(fh)
