"""
A whole-surface certificate
===========================

Certify delta for the A4+A2 surface and read off which catalogued
computation closes each point class.
"""

from collections import defaultdict

from dp2delta import certify
from dp2delta.verify import verify_lemma

cert = certify("A4+A2", 6)
print(f"{cert.type} ({cert.lines} lines): delta = {cert.delta}")

# Group the point classes by the catalogued computation that covers them.
by_lemma = defaultdict(list)
for s in cert.strata:
    by_lemma[s.lemma].append(s)

for lemma, strata in sorted(by_lemma.items()):
    lows = sorted({str(s.lower) for s in strata})
    print(f"{lemma:<28} {len(strata):>2} point classes, lower bounds {', '.join(lows)}")

# Points on two (-2)-curves were refined by blowing up the point.
for s in cert.strata:
    if s.witness == "blowup":
        print("blowup at", s.name, "S(E_P) =", s.S_values["S(E_P)"], "->", s.lower)

# The catalogued statement behind one of them, checked against the model.
for rep in verify_lemma("deg2-65-A2points"):
    for c in rep.checks:
        print(f"  {c.name:<22} stated {c.stated:<24} computed {c.computed}")

print(cert.to_json()[:300], "...")
