"""
Roots, lines and the surfaces they cut out
==========================================

Walk from the bare lattice to a concrete surface model and its dual graph.
"""

from collections import Counter

import numpy as np

from dp2delta.lattice import K, enumerate_line_classes, enumerate_roots, intersect
from dp2delta.surfaces import build_surface, enumerate_embeddings, to_dot

# The lattice has signature (1, 7); K = -3h + e1 + ... + e7 squares to 2.
print("K^2 =", intersect(K, K))

roots = np.array(enumerate_roots())
lines = np.array(enumerate_line_classes())
print(roots.shape[0], "roots,", lines.shape[0], "line classes")

# Every root meets 12 line classes with +1 and 12 with -1.
r = tuple(int(x) for x in roots[0])
print("products of one root with all lines:", Counter(int(intersect(r, tuple(x))) for x in lines))

# A type can sit in the lattice in more than one way; line counts tell them apart.
for label in ("3A1", "A5", "D4"):
    print(label, "->", [n for _, n in enumerate_embeddings(label)], "lines")

# A model keeps the simple roots as (-2)-curves and the non-negative line classes.
m = build_surface("A5", 7)
print(m.label, "with", m.line_count, "lines; curves:", m.names)

g = m.dual_graph
for a, b, d in sorted(g.edges(data=True)):
    print(f"  {a} -- {b}  (weight {d['weight']})")

# DOT text for graphviz.
print(to_dot(m)[:200], "...")
