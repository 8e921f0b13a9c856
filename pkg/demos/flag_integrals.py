"""
From a Zariski chamber walk to a local delta bound
==================================================

Take a (-2)-curve A on the A4 surface, decompose -K - vA for all v, integrate
the volume, then integrate h(v) at each point of A.
"""

from fractions import Fraction

import numpy as np

from dp2delta.delta import S_flag, S_from_family, delta_point_bound_curve, h_function
from dp2delta.poly import peval, to_str
from dp2delta.surfaces import build_surface, point_strata
from dp2delta.zariski import describe, piecewise_family

m = build_surface("A4")
fam = piecewise_family(m, m.anti_canonical, "E2")

# Pieces with their negative parts, P^2 and P.A.
print(describe(fam))

# The normalised volume integral gives the upper bound 1/S on delta at points of A.
S = S_from_family(fam)
print("S(A) =", S, " so delta_P <= ", 1 / S)

# Sample the volume curve on a grid; it decreases to zero at tau.
vs = np.linspace(0, float(fam.tau), 9)
vol = [float(peval(fam.piece_at(Fraction(v).limit_denominator(1000)).psq, Fraction(v).limit_denominator(1000)))
       for v in vs]
print("vol(-K - vA):", np.round(vol, 4))

# One flag value per point class of A.
for st in point_strata(m, "E2"):
    pieces = h_function(fam, st, m)
    print(f"{st.name:<10} h = " + " | ".join(to_str(h) for _, _, h in pieces),
          f"  S(W;P) = {S_flag(fam, st, m)}",
          "  bounds [{}, {}]".format(*delta_point_bound_curve(m, "E2", st)))
