from fractions import Fraction

import pytest

from dp2delta import catalog, verify

INSTANCES = catalog.load_instances()
PARTS = [(lem, part) for lem in catalog.LEMMAS for part in lem.parts]


def _ident(item):
    lem, part = item
    return f"{lem.id}[{part}]" if part else lem.id


CLOSED_FORMS = ("tau", "breakpoints", "P(v)^2", "P(v).A", "N(v) coefficients", "S")


def _failures(item, closed):
    lem, part = item
    rep = verify.check_part(lem, part, INSTANCES[lem.id][part])
    assert rep.instance is not None
    return [f"{c.name}: stated {c.stated}, computed {c.computed}"
            for c in rep.checks if (c.name in CLOSED_FORMS) == closed and not c.ok]


@pytest.mark.parametrize("item", PARTS, ids=_ident)
def test_closed_forms(item):
    bad = _failures(item, closed=True)
    assert not bad, "; ".join(bad)


@pytest.mark.parametrize("item", PARTS, ids=_ident)
def test_flag_claims(item):
    bad = _failures(item, closed=False)
    assert not bad, "; ".join(bad)


def test_isolated_root_report():
    [rep] = verify.verify_lemma("deg2-32-A1points")
    checks = {c.name: c for c in rep.checks}
    assert checks["tau"].computed == "1"
    assert checks["S"].computed == "2/3"
    assert rep.ok


def test_a2_blowup_report():
    [rep] = verify.verify_lemma("deg2-65-A2points")
    values = {c.computed for c in rep.checks if c.name.startswith("S(W;P)")}
    assert values == {"1/3", "7/9"}
    assert Fraction(dict((c.name, c.computed) for c in rep.checks)["S"]) == Fraction(5, 3)
    assert rep.ok


def test_axiom_has_no_reports():
    assert verify.verify_lemma(catalog.GENERIC_ID) == []
