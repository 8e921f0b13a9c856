import json
from fractions import Fraction

import pytest

from dp2delta.delta import (
    GENERIC_AXIOM, StratumNotOnCarrier, S_curve, S_flag, S_from_family, certify, delta_global,
    delta_point_bound_blowup, delta_point_bound_curve, h_function,
)
from dp2delta.poly import from_expr, min_on_interval
from dp2delta.surfaces import PointStratum, build_surface, point_strata
from dp2delta.zariski import piecewise_family

from support import all_families, numeric_integral, numeric_S


def _stratum(model, carrier, other=None):
    for st in point_strata(model, carrier):
        if other is None and not st.incident:
            return st
        if other is not None and st.incident and st.incident[0][0] == other:
            return st
    raise LookupError((carrier, other))


@pytest.mark.parametrize("row, carrier, value", [
    (("A1", 44), "E1", Fraction(2, 3)),
    (("A4", 14), "E2", Fraction(13, 12)),
    (("E7", 1), "E3", Fraction(10, 3)),
])
def test_S_curve(row, carrier, value):
    assert S_curve(build_surface(*row), carrier) == value


def test_h_on_isolated_root():
    m = build_surface("A1")
    fam = piecewise_family(m, m.anti_canonical, "E1")
    for st in point_strata(m, "E1"):
        [(lo, hi, h)] = h_function(fam, st, m)
        assert (lo, hi, h) == (0, 1, from_expr("2*v**2"))
        assert S_flag(fam, st, m) == Fraction(2, 3)
        assert delta_point_bound_curve(m, "E1", st) == (Fraction(3, 2), Fraction(3, 2))


def test_h_generic_on_line_near_three_a1():
    m = build_surface("3A1", 25)
    fam = piecewise_family(m, m.anti_canonical, "L1")
    [(lo, hi, h)] = h_function(fam, _stratum(m, "L1"), m)
    assert (lo, hi, h) == (0, 2, from_expr("(2-v)**2/8"))


def test_h_at_zero_is_half_square():
    m = build_surface("A4", 14)
    for c in m.names:
        fam = piecewise_family(m, m.anti_canonical, c)
        for st in point_strata(m, c):
            h0 = h_function(fam, st, m)[0][2]
            pc0 = fam.pieces[0].pdotc
            assert (h0[0] if h0 else 0) == (pc0[0] if pc0 else 0) ** 2 / 2


def test_flag_values_on_a4_chain():
    m = build_surface("A4", 14)
    fam = piecewise_family(m, m.anti_canonical, "E2")
    values = {S_flag(fam, st, m) for st in point_strata(m, "E2")}
    assert Fraction(13, 12) in values


def test_flag_bound_on_a2_chain():
    m = build_surface("A2", 32)
    fam = piecewise_family(m, m.anti_canonical, "E1")
    off = [st for st in point_strata(m, "E1") if "E2" not in st.curves]
    assert max(S_flag(fam, st, m) for st in off) <= Fraction(2, 3)


def test_e7_central_curve():
    m = build_surface("E7")
    st = _stratum(m, "E3")
    assert delta_point_bound_curve(m, "E3", st) == (Fraction(3, 10), Fraction(3, 10))


def test_line_near_a1_lower_bound():
    m = build_surface("A1")
    fam = piecewise_family(m, m.anti_canonical, "L1")
    nearby = set(fam.pieces[0].support)
    off = [st for st in point_strata(m, "L1") if not nearby & set(st.curves)]
    lows = [delta_point_bound_curve(m, "L1", st)[0] for st in off]
    assert min(lows) == Fraction(27, 17)


def test_blowup_at_a2_point():
    m = build_surface("A2", 32)
    b = delta_point_bound_blowup(m, ("E1", "E2"))
    assert b.S_E == Fraction(5, 3)
    assert (b.lower, b.upper) == (Fraction(6, 5), Fraction(6, 5))
    values = dict(b.S_W)
    assert values["E_P:generic"] == Fraction(2, 9)
    assert {Fraction(1, 3), Fraction(7, 9)} <= set(values.values())
    assert max(values.values()) == Fraction(7, 9)
    assert all(v <= Fraction(5, 6) for v in values.values())
    assert b.lower > 0


def test_stratum_must_lie_on_carrier():
    m = build_surface("A1")
    fam = piecewise_family(m, m.anti_canonical, "E1")
    with pytest.raises(StratumNotOnCarrier):
        h_function(fam, PointStratum("L1", (), "generic-on-curve", "L1:generic"), m)
    with pytest.raises(StratumNotOnCarrier):
        h_function(fam, PointStratum("E1", (("L40", 1),), "curve-intersection", "bogus"), m)


@pytest.mark.parametrize("label, lines, delta", [
    ("A1", 44, Fraction(3, 2)), ("A4+A2", 6, Fraction(12, 13)), ("E7", 1, Fraction(3, 10)),
    ("A5", 7, Fraction(3, 4)), ("A5", 8, Fraction(6, 7)),
])
def test_certificates(label, lines, delta):
    cert = certify(label, lines)
    assert cert.delta == delta
    finite = [s for s in cert.strata if s.upper is not None]
    assert min(s.upper for s in finite) == delta
    assert all(s.lower >= delta for s in cert.strata)
    assert all(s.lemma for s in cert.strata)
    d = json.loads(cert.to_json())
    assert set(d) == {"type", "lines", "delta", "strata", "axioms"}
    assert d["delta"] == {"num": delta.numerator, "den": delta.denominator}
    assert d["axioms"] == [GENERIC_AXIOM]
    assert {"name", "lemma", "lower", "upper", "S_values"} <= set(d["strata"][0])


def test_certificate_deterministic():
    m = build_surface("D4", 14)
    assert delta_global(m).to_json() == delta_global(build_surface("D4", 14)).to_json()


# ---------------------------------------------------------------- whole-table checks

def test_exact_integrals_match_quadrature():
    worst = 0.0
    count = 0
    for name, model, fam, strata in all_families():
        s = S_from_family(fam)
        worst = max(worst, abs(numeric_S(fam) - float(s)))
        for st in strata:
            exact = S_flag(fam, st, model)
            worst = max(worst, abs(numeric_integral(h_function(fam, st, model)) - float(exact)))
            count += 1
    assert count > 1000
    assert worst < 1e-9


def test_h_nonnegative_everywhere():
    for name, model, fam, strata in all_families():
        for st in strata:
            for lo, hi, h in h_function(fam, st, model):
                assert min_on_interval(h, lo, hi) >= 0, (name, st.name)


def test_flag_supremum_at_negative_part_or_generic():
    for name, model, fam, strata in all_families():
        values = {st.name: S_flag(fam, st, model) for st in strata}
        top = max(values.values())
        ever = set().union(*(p.support for p in fam.pieces))
        winners = [st for st in strata if values[st.name] == top]
        assert any(not st.incident or ever & {n for n, _ in st.incident} for st in winners), name
