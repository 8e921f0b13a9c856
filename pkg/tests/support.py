"""Helpers shared by the test modules and the acceptance script."""

from fractions import Fraction
from functools import lru_cache

import numpy as np
from numpy.polynomial import polynomial as npoly
from scipy.integrate import quad

from dp2delta.delta import _blowup, _exceptional_strata
from dp2delta.lattice import intersect
from dp2delta.surfaces import TABLE_TYPES, build_surface, point_strata
from dp2delta.zariski import BlowupModelInvalid, family_to_dict, piecewise_family


@lru_cache(maxsize=None)
def all_families():
    """[(surface label, model used for h, family, strata)] over every carrier
    of every table surface and every blowup at two meeting (-2)-curves."""
    out = []
    for typ, lines in TABLE_TYPES:
        m = build_surface(typ, lines)
        tag = f"{typ}/{m.line_count}"
        for c in m.names:
            fam = piecewise_family(m, m.anti_canonical, c)
            out.append((f"{tag}:{c}", m, fam, tuple(point_strata(m, c))))
        two = m.neg_two_names
        for i, a in enumerate(two):
            for b in two[i + 1:]:
                if not m.dual_graph.has_edge(a, b):
                    continue
                try:
                    bm, fam = _blowup(m, (a, b))
                except BlowupModelInvalid:
                    continue
                out.append((f"{tag}:{a}*{b}", None, fam, tuple(_exceptional_strata(bm, fam))))
    return out


def _float_poly(coeffs):
    return np.array([c["num"] / c["den"] for c in coeffs] or [0.0])


def numeric_S(fam, k_squared=2):
    """S from the exported JSON pieces by adaptive quadrature."""
    total = 0.0
    for p in family_to_dict(fam)["pieces"]:
        lo, hi = (x["num"] / x["den"] for x in p["interval"])
        c = _float_poly(p["Psq"])
        total += quad(lambda v: npoly.polyval(v, c), lo, hi, epsabs=1e-13, epsrel=1e-13)[0]
    return total / k_squared


def numeric_integral(pieces):
    total = 0.0
    for lo, hi, h in pieces:
        c = np.array([float(x) for x in h] or [0.0])
        total += quad(lambda v: npoly.polyval(v, c), float(lo), float(hi), epsabs=1e-13, epsrel=1e-13)[0]
    return total


def brute_force_classes(self_sq, k_deg, bound):
    """Plain nested search over |coordinates| <= bound, pruning on the
    sum of squares.  Shares no code with the library search."""
    out = []
    for d in range(-bound, bound + 1):
        target = d * d - self_sq  # required sum of m_i^2
        if target < 0:
            continue

        def rec(prefix, left):
            if len(prefix) == 7:
                if left == 0 and -3 * d - sum(prefix) == k_deg:
                    out.append((d,) + tuple(prefix))
                return
            for m in range(-bound, bound + 1):
                if m * m <= left:
                    rec(prefix + [m], left - m * m)

        rec([], target)
    return sorted(out)


def check_decomposition(model, D, z):
    """Assert D = P + N, P orthogonal to supp N, P nef, supp N negative definite."""
    curves = model.curves
    P = z.positive
    total = list(P)
    for n, a in z.negative:
        assert a > 0
        total = [x + a * y for x, y in zip(total, curves[n])]
    assert tuple(total) == tuple(Fraction(x) for x in D)
    for n in z.support:
        assert intersect(P, curves[n]) == 0
    for c in curves.values():
        assert intersect(P, c) >= 0
    if z.support:
        G = np.array([[intersect(curves[a], curves[b]) for b in z.support] for a in z.support], dtype=float)
        assert np.linalg.eigvalsh(G).max() < 0
