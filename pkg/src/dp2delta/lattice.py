"""The Picard lattice Z^{1,7} of a degree 2 weak del Pezzo surface.

Classes are plain tuples in the basis (h, e1, ..., e7).  The same helpers
work for any length, which is how the one-point blowup Z^{1,8} is handled.
"""

from fractions import Fraction
from functools import lru_cache
from itertools import product

import numpy as np

RANK = 8
K = (-3, 1, 1, 1, 1, 1, 1, 1)
ANTI_K = tuple(-c for c in K)


def intersect(a, b):
    """Intersection number under diag(+1, -1, ..., -1)."""
    if len(a) != len(b):
        raise ValueError(f"rank mismatch: {len(a)} vs {len(b)}")
    return a[0] * b[0] - sum(x * y for x, y in zip(a[1:], b[1:]))


def gram_basis(rank=RANK):
    return np.diag([1] + [-1] * (rank - 1))


def add(a, b):
    return tuple(x + y for x, y in zip(a, b))


def sub(a, b):
    return tuple(x - y for x, y in zip(a, b))


def scale(c, a):
    return tuple(c * x for x in a)


def combo(terms, rank=RANK):
    """Sum of coefficient * class over (coefficient, class) pairs."""
    out = [0] * rank
    for c, v in terms:
        for i, x in enumerate(v):
            out[i] += c * x
    return tuple(out)


def canonical(rank=RANK):
    """K in a blowup of P^2 at rank-1 points."""
    return (-3,) + (1,) * (rank - 1)


def reflect(r, d):
    """Reflection of d in the root r: d + (d.r) r."""
    s = intersect(d, r)
    return tuple(x + s * y for x, y in zip(d, r))


def is_root(v):
    return intersect(v, v) == -2 and intersect(v, K) == 0


def is_line_class(v):
    return intersect(v, v) == -1 and intersect(v, K) == -1


def _bounded_search(self_sq, k_deg, bound=3):
    # vectorised brute force over |m_i| <= bound for e-coords, any d fitting
    vals = np.arange(-bound, bound + 1)
    grid = np.array(list(product(vals, repeat=RANK - 1)), dtype=np.int64)
    esum = grid.sum(axis=1)
    esq = (grid * grid).sum(axis=1)
    found = []
    for d in range(-bound, bound + 1):
        # v.K = -3d - sum(m) and v.v = d^2 - sum(m^2)
        mask = (-3 * d - esum == k_deg) & (d * d - esq == self_sq)
        for row in grid[mask]:
            found.append((d,) + tuple(int(x) for x in row))
    return sorted(found)


@lru_cache(maxsize=None)
def enumerate_roots():
    """All 126 classes with r^2 = -2 and r.K = 0, sorted."""
    return tuple(_bounded_search(-2, 0))


@lru_cache(maxsize=None)
def enumerate_line_classes():
    """All 56 classes with l^2 = -1 and l.K = -1, sorted."""
    return tuple(_bounded_search(-1, -1))


@lru_cache(maxsize=None)
def root_products():
    r = np.array(enumerate_roots(), dtype=np.int64)
    return r @ gram_basis() @ r.T


@lru_cache(maxsize=None)
def line_root_products():
    ell = np.array(enumerate_line_classes(), dtype=np.int64)
    r = np.array(enumerate_roots(), dtype=np.int64)
    return ell @ gram_basis() @ r.T


def as_fractions(v):
    return tuple(Fraction(x) for x in v)


def fmt_class(v):
    """Human readable form such as 'h-e1-e2'."""
    names = ["h"] + [f"e{i}" for i in range(1, len(v))]
    if len(v) == RANK + 1:
        names[-1] = "E"
    parts = []
    for c, n in zip(v, names):
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        parts.append(f"{sign}{'' if mag == 1 else mag}{n}")
    if not parts:
        return "0"
    s = "".join(parts)
    return s[1:] if s[0] == "+" else s
