"""Zariski decomposition on the resolution S (and one-point blowups of S).

Any model object passed in must expose:
    curves          ordered dict name -> class (generators of the effective cone)
    anti_canonical  the class -K
    kind(name)      self-intersection of the curve
"""

import json
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from . import lp
from .lattice import ANTI_K, K, enumerate_line_classes, intersect
from .poly import affine, const, padd, peval, pmul, pscale, psub, to_str


class NotPseudoEffective(ValueError):
    pass


class Unbounded(RuntimeError):
    pass


# ---------------------------------------------------------------- linear algebra

def solve_linear(M, rhs):
    """Solve M x = rhs exactly.  rhs is a list of columns (each a list)."""
    n = len(M)
    A = [[Fraction(x) for x in row] + [Fraction(col[i]) for col in rhs] for i, row in enumerate(M)]
    for c in range(n):
        p = next((r for r in range(c, n) if A[r][c] != 0), None)
        if p is None:
            raise ZeroDivisionError("singular Gram matrix")
        A[c], A[p] = A[p], A[c]
        piv = A[c][c]
        A[c] = [x / piv for x in A[c]]
        for r in range(n):
            if r != c and A[r][c] != 0:
                f = A[r][c]
                A[r] = [x - f * y for x, y in zip(A[r], A[c])]
    return [[A[i][n + k] for i in range(n)] for k in range(len(rhs))]


def is_negative_definite(M):
    """LDL^T pivots of M are all negative."""
    n = len(M)
    A = [[Fraction(x) for x in row] for row in M]
    for c in range(n):
        if A[c][c] >= 0:
            return False
        for r in range(c + 1, n):
            f = A[r][c] / A[c][c]
            A[r] = [x - f * y for x, y in zip(A[r], A[c])]
    return True


def gram(classes):
    return [[intersect(a, b) for b in classes] for a in classes]


# ---------------------------------------------------------------- results

@dataclass(frozen=True)
class ZariskiDecomposition:
    positive: tuple
    negative: tuple  # ((curve name, coefficient), ...)

    def coefficient(self, name):
        return dict(self.negative).get(name, Fraction(0))

    @property
    def support(self):
        return tuple(n for n, _ in self.negative)


@dataclass(frozen=True)
class Piece:
    lo: Fraction
    hi: Fraction
    coeffs: tuple  # ((curve name, affine poly), ...)
    psq: tuple
    pdotc: tuple

    @property
    def support(self):
        return tuple(n for n, _ in self.coeffs)

    def coeff(self, name):
        return dict(self.coeffs).get(name, ())


@dataclass(frozen=True)
class PiecewiseFamily:
    carrier: str
    origin: tuple
    tau: Fraction
    pieces: tuple

    @property
    def breakpoints(self):
        return (self.pieces[0].lo,) + tuple(p.hi for p in self.pieces)

    def piece_at(self, v):
        for p in self.pieces:
            if p.lo <= v <= p.hi:
                return p
        raise ValueError(f"v={v} outside [0, {self.tau}]")

    def to_json(self):
        return json.dumps(family_to_dict(self), indent=2)


def _q(x):
    x = Fraction(x)
    return {"num": x.numerator, "den": x.denominator}


def _poly_json(p):
    return [_q(c) for c in p]


def family_to_dict(fam):
    return {
        "carrier": fam.carrier,
        "origin": [_q(x) for x in fam.origin],
        "tau": _q(fam.tau),
        "breakpoints": [_q(b) for b in fam.breakpoints],
        "pieces": [
            {
                "interval": [_q(p.lo), _q(p.hi)],
                "negative": {n: _poly_json(c) for n, c in p.coeffs},
                "Psq": _poly_json(p.psq),
                "PdotC": _poly_json(p.pdotc),
            }
            for p in fam.pieces
        ],
    }


def family_from_dict(d):
    q = lambda x: Fraction(x["num"], x["den"])  # noqa: E731
    pieces = tuple(
        Piece(
            q(p["interval"][0]), q(p["interval"][1]),
            tuple((n, tuple(q(c) for c in cs)) for n, cs in p["negative"].items()),
            tuple(q(c) for c in p["Psq"]), tuple(q(c) for c in p["PdotC"]),
        )
        for p in d["pieces"]
    )
    return PiecewiseFamily(d["carrier"], tuple(q(x) for x in d["origin"]), q(d["tau"]), pieces)


# ---------------------------------------------------------------- cone membership

def _generator_matrix(model):
    classes = list(model.curves.values())
    rank = len(classes[0])
    return [[c[i] for c in classes] for i in range(rank)]


def is_pseudo_effective(model, D):
    """D is a non-negative combination of the model's negative curves."""
    A = _generator_matrix(model)
    try:
        lp.solve(A, list(D))
    except lp.LPInfeasible:
        return False
    return True


def psef_threshold(model, D0, C):
    """max v >= 0 with D0 - vC pseudo-effective.  C is a curve name or class."""
    c = model.curves[C] if isinstance(C, str) else C
    A = _generator_matrix(model)
    A = [row + [c[i]] for i, row in enumerate(A)]
    obj = [0] * (len(A[0]) - 1) + [1]
    try:
        value, _ = lp.solve(A, list(D0), obj)
    except lp.LPInfeasible:
        raise NotPseudoEffective(f"{D0} is not pseudo-effective")
    except lp.LPUnbounded:
        raise Unbounded("pseudo-effective threshold is unbounded")
    return value


# ---------------------------------------------------------------- decomposition

def _sign_right(p, v0):
    """Sign of the affine poly p on (v0, v0 + eps)."""
    val = peval(p, v0)
    if val != 0:
        return (val > 0) - (val < 0)
    slope = p[1] if len(p) > 1 else 0
    return (slope > 0) - (slope < 0)


def _affine_decomposition(model, D0, direction, v0, order=None):
    """Support and affine coefficients of the negative part of D0 - v*direction
    valid on a right neighbourhood of v0 (or at v0 when direction is zero)."""
    curves = model.curves
    names = list(curves) if order is None else list(order)
    d0 = {n: intersect(D0, curves[n]) for n in names}
    dd = {n: intersect(direction, curves[n]) for n in names}
    support = []
    while True:
        if support:
            G = gram([curves[n] for n in support])
            c0, c1 = solve_linear(G, [[d0[n] for n in support], [-dd[n] for n in support]])
            coeffs = {n: affine(a, b) for n, a, b in zip(support, c0, c1)}
        else:
            coeffs = {}
        bad = []
        for n in names:
            if n in coeffs:
                continue
            pc = affine(d0[n], -dd[n])
            for m, a in coeffs.items():
                pc = psub(pc, pscale(intersect(curves[m], curves[n]), a))
            if _sign_right(pc, v0) < 0:
                bad.append(n)
        if not bad:
            return coeffs
        support += bad


def zariski_decompose(model, D, order=None):
    """Zariski decomposition of D by growing the negative support until the
    positive part is nef on every generator."""
    D = tuple(Fraction(x) for x in D)
    if not is_pseudo_effective(model, D):
        raise NotPseudoEffective(f"{D} is not pseudo-effective")
    zero = (0,) * len(D)
    coeffs = _affine_decomposition(model, D, zero, Fraction(0), order)
    curves = model.curves
    P = list(D)
    neg = []
    for n in model.curves:
        if n in coeffs:
            a = peval(coeffs[n], 0)
            if a != 0:
                neg.append((n, a))
            for i, x in enumerate(curves[n]):
                P[i] -= a * x
    return ZariskiDecomposition(tuple(P), tuple(neg))


def _positive_part_affine(model, D0, C, coeffs):
    curves = model.curves
    rank = len(D0)
    out = []
    for i in range(rank):
        p = affine(D0[i], -C[i])
        for n, a in coeffs.items():
            p = psub(p, pscale(curves[n][i], a))
        out.append(p)
    return out


def _form(P, Q):
    # same signature diag(+1, -1, ...) applied to poly vectors
    acc = pmul(P[0], Q[0])
    for a, b in zip(P[1:], Q[1:]):
        acc = psub(acc, pmul(a, b))
    return acc


def piecewise_family(model, D0, C, tau=None):
    """Breakpoints and per-piece closed forms for D0 - vC on [0, tau]."""
    name = C if isinstance(C, str) else None
    c = model.curves[C] if isinstance(C, str) else C
    D0 = tuple(Fraction(x) for x in D0)
    if not is_pseudo_effective(model, D0):
        raise NotPseudoEffective("origin is not pseudo-effective")
    if tau is None:
        tau = psef_threshold(model, D0, c)
    curves = model.curves
    pieces = []
    v = Fraction(0)
    while v < tau:
        coeffs = _affine_decomposition(model, D0, c, v)
        P = _positive_part_affine(model, D0, c, coeffs)
        end = tau
        for n, g in curves.items():
            if n in coeffs:
                continue
            pg = const(0)
            for i, x in enumerate(g):
                sgn = 1 if i == 0 else -1
                pg = padd(pg, pscale(sgn * x, P[i]))
            if len(pg) > 1 and pg[1] < 0:
                root = -pg[0] / pg[1]
                if v < root < end:
                    end = root
        cvec = [const(x) for x in c]
        psq = _form(P, P)
        pdotc = _form(P, cvec)
        ordered = tuple((n, coeffs[n]) for n in curves if n in coeffs)
        pieces.append(Piece(v, end, ordered, psq, pdotc))
        v = end
    return PiecewiseFamily(name or str(c), D0, tau, tuple(_merge(pieces)))


def _merge(pieces):
    out = []
    for p in pieces:
        if out and out[-1].coeffs == p.coeffs and out[-1].psq == p.psq:
            q = out.pop()
            p = Piece(q.lo, p.hi, q.coeffs, q.psq, q.pdotc)
        out.append(p)
    return out


def describe(fam):
    rows = [f"carrier {fam.carrier}, tau = {fam.tau}"]
    for p in fam.pieces:
        neg = " + ".join(f"({to_str(a)}){n}" for n, a in p.coeffs) or "0"
        rows.append(f"  [{p.lo}, {p.hi}]  N = {neg};  P^2 = {to_str(p.psq)};  P.C = {to_str(p.pdotc)}")
    return "\n".join(rows)


# ---------------------------------------------------------------- blowups

class BlowupModelInvalid(RuntimeError):
    pass


@lru_cache(maxsize=None)
def conic_classes():
    """Classes F with F^2 = 0 and -K.F = 2, each a sum of two meeting lines."""
    lines = enumerate_line_classes()
    out = set()
    for i, a in enumerate(lines):
        for b in lines[i + 1:]:
            if intersect(a, b) == 1:
                out.add(tuple(x + y for x, y in zip(a, b)))
    return tuple(sorted(out))


@lru_cache(maxsize=None)
def cubic_classes():
    """Classes D with D^2 = 1 and -K.D = 3 (nets of rational cubics)."""
    conics = conic_classes()
    lines = enumerate_line_classes()
    out = set()
    for f in conics:
        for l in lines:
            if intersect(f, l) == 1:
                d = tuple(x + y for x, y in zip(f, l))
                if intersect(d, d) == 1:
                    out.add(d)
    return tuple(sorted(out))


class BlowupModel:
    """Ordinary blowup of S at a point lying on the given curves (each with
    multiplicity one).  The exceptional curve is called 'E_P'."""

    def __init__(self, base, through):
        self.base = base
        self.through = tuple(through)
        rank = len(base.anti_canonical) + 1
        self.rank = rank
        e = (0,) * (rank - 1) + (1,)
        self.exceptional = e
        K_hat = tuple(K) + (1,)
        self.canonical = K_hat
        self.anti_canonical = tuple(-x for x in K_hat)
        curves = {"E_P": e}
        kinds = {"E_P": -1}
        base_curves = base.curves
        for n, c in base_curves.items():
            m = 1 if n in self.through else 0
            curves[n] = tuple(c) + (-m,)
            kinds[n] = intersect(c, c) - m * m
        # curves through P that were not negative on S
        extra = 0
        for D, m in self._candidates():
            extra += 1
            name = f"Q{extra}"
            curves[name] = tuple(D) + (-m,)
            kinds[name] = intersect(D, D) - m * m
        self.curves = curves
        self._kinds = kinds

    def _candidates(self):
        base_curves = self.base.curves
        through = [base_curves[n] for n in self.through]
        others = [c for n, c in base_curves.items() if n not in self.through]
        seen = set(map(tuple, base_curves.values()))
        families = [(conic_classes(), (1,)), (cubic_classes(), (2,)), ((ANTI_K,), (2,))]
        for classes, mults in families:
            for D in classes:
                if D in seen:
                    continue
                for m in mults:
                    if any(intersect(D, g) < 0 for g in others):
                        continue
                    if any(intersect(D, t) < m for t in through):
                        continue
                    if intersect(D, D) - m * m >= 0:
                        continue
                    yield D, m

    def kind(self, name):
        return self._kinds[name]

    def pullback(self, D):
        return tuple(D) + (0,)


def blowup_family(base, through):
    """Family sigma^*(-K_S) - v E_P on the blowup at the point on `through`,
    verified by the vanishing of the volume at the threshold."""
    bm = BlowupModel(base, through)
    D0 = bm.pullback(base.anti_canonical)
    fam = piecewise_family(bm, D0, "E_P")
    last = fam.pieces[-1]
    if peval(last.psq, fam.tau) != 0:
        raise BlowupModelInvalid(
            f"volume {peval(last.psq, fam.tau)} at tau = {fam.tau}: generator set incomplete"
        )
    return bm, fam
