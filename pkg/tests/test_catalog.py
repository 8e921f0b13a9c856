import dataclasses
from fractions import Fraction

import pytest

from dp2delta import catalog, verify
from dp2delta.poly import from_expr

ERRATA = [(lem, e) for lem in catalog.LEMMAS for e in lem.errata]


def test_ids_unique_and_resolvable():
    ids = [lem.id for lem in catalog.LEMMAS]
    assert len(ids) == len(set(ids))
    assert catalog.all_ids()[0] == catalog.GENERIC_ID
    assert catalog.get(catalog.GENERIC_ID) is None
    assert catalog.get("deg2-32-nearA1middleA3").id == "deg2-32-near3A1points"
    with pytest.raises(KeyError):
        catalog.get("deg2-nonexistent")


@pytest.mark.parametrize("lem", catalog.LEMMAS, ids=lambda lem: lem.id)
def test_encoded_forms_self_consistent(lem):
    assert len(lem.psq) == len(lem.pdota) == len(lem.breaks) + 1
    for psq, pdota in zip(lem.psq_polys, lem.pdota_polys):
        assert catalog.derivative_consistent(psq, pdota)
    for part in lem.parts:
        assert len(lem.parts[part]) == len(lem.psq)
        assert catalog.continuity_gap(lem, part) == []
    assert all(e.reason in ("derivative", "continuity", "reciprocal", "proof") for e in lem.errata)


def _replace_part(lem, part, piece, groups):
    parts = dict(lem.parts)
    pieces = list(parts[part])
    pieces[piece] = groups
    parts[part] = tuple(pieces)
    return dataclasses.replace(lem, parts=parts)


# stated forms that the errata replace, as machine-readable data
STATED_PARTS = {
    "deg2-3623-nearA2A4": ("", 0, (("v/5", 4, 3, 2, 1), ("v/2", 2, 1))),
    "deg2-127-near2A2point": ("d", 1, (("v/6", 2, 4, 6, 5, 4, 3), ("v-1", 1))),
    "deg2-4526-nearA1A5": ("", 1, (("v/2", 1), ("v-1", 5, 4, 3, 2, 1), ("3*v-4", 1))),
    "deg2-37-points": ("a", 0, (("v/6", 3, 2, 3, 3, 2),)),
    "deg2-6037-nearA6points": ("", 1, (("v-1", 2, 4, 6, 8, 10), ("5*v-6", 1), ("5*v-7", 1))),
}


def test_every_erratum_is_covered_here():
    covered = set(STATED_PARTS) | {"deg2-95-nearA1A3", "deg2-916-points", "deg2-2717-nearA1points",
                                   "deg2-65-A2points"}
    assert {lem.id for lem, _ in ERRATA} == covered


@pytest.mark.parametrize("lemma_id", sorted(STATED_PARTS))
def test_continuity_errata_are_forced(lemma_id):
    lem = catalog.get(lemma_id)
    part, piece, groups = STATED_PARTS[lemma_id]
    stated = _replace_part(lem, part, piece, groups)
    assert catalog.continuity_gap(stated, part) != []
    assert catalog.continuity_gap(lem, part) == []


def test_derivative_erratum_is_forced():
    lem = catalog.get("deg2-95-nearA1A3")
    psq0 = lem.psq_polys[0]
    assert not catalog.derivative_consistent(psq0, from_expr("1+v/4"))
    assert catalog.derivative_consistent(psq0, lem.pdota_polys[0])


def test_reciprocal_erratum_is_forced():
    lem = catalog.get("deg2-916-points")
    assert 1 / Fraction(lem.S) == Fraction(9, 16) != Fraction(3, 10)
    assert lem.delta == ("=", "9/16")


def test_proof_errata_are_forced():
    # the bound 27/17 is attained, so a strict inequality cannot come from this flag
    lem = catalog.get("deg2-2717-nearA1points")
    rep = verify.verify_lemma(lem.id)[0]
    assert rep.checks[-1].computed == "[27/17, 9/4]"
    # the statement's 27/17 exceeds the upper bound 2/S(E_P) the proof itself derives
    lem = catalog.get("deg2-65-A2points")
    assert 2 / Fraction(lem.S) == Fraction(6, 5) < Fraction(27, 17)


def test_signature_table_covers_every_part():
    table = catalog.signature_table()
    for lem in catalog.LEMMAS:
        for part in lem.parts:
            assert catalog.lemma_signature(lem, part) in table


def test_frozen_data_loads():
    inst = catalog.load_instances()
    strat = catalog.load_strategy()
    assert set(inst) == {lem.id for lem in catalog.LEMMAS}
    assert len(strat) == 45
    known = set(catalog.BY_ID)
    assert all(v in known for table in strat.values() for v in table.values())


@pytest.mark.slow
def test_frozen_data_matches_recomputation():
    rows = verify.scan()
    assert verify.find_instances(rows) == catalog.load_instances()
    assert verify.strategy_from_rows(rows) == catalog.load_strategy()


def test_certificates_use_catalog_labels(table_cache):
    _, _, certs = table_cache
    uncatalogued = set()
    for (sing, lines), cert in certs.items():
        for s in cert["strata"]:
            assert s["lemma"] in catalog.BY_ID or s["lemma"] in (catalog.GENERIC_ID, "uncatalogued")
            if s["lemma"] == "uncatalogued":
                uncatalogued.add((sing, s["name"]))
    # the lines of the A7 surface: their negative part is the whole chain
    assert uncatalogued == {("A7", "L1:generic"), ("A7", "L2:generic")}
