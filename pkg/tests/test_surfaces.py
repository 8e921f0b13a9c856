import networkx as nx
import pytest
from hypothesis import given, settings, strategies as st

from dp2delta.lattice import ANTI_K, intersect
from dp2delta.surfaces import (
    TABLE_TYPES, AmbiguousType, UnknownType, build_surface, dual_graph, dynkin_graph, enumerate_embeddings,
    n_roots, parse_ade, point_strata, to_dot,
)

AMBIGUOUS = {
    "3A1": [26, 25], "4A1": [20, 19], "A3+A1": [16, 15], "A3+2A1": [12, 11], "A5": [8, 7], "A5+A1": [6, 5],
}


def _rank(label):
    return sum(int(x[1:]) for x in parse_ade(label))


@pytest.mark.parametrize("label, counts", sorted(AMBIGUOUS.items()))
def test_ambiguous_types_split_by_line_count(label, counts):
    assert [n for _, n in enumerate_embeddings(label)] == counts


@pytest.mark.parametrize("label", sorted({t for t, _ in TABLE_TYPES} - set(AMBIGUOUS)))
def test_other_types_have_one_embedding(label):
    assert len(enumerate_embeddings(label)) == 1


@pytest.mark.parametrize("label, lines", TABLE_TYPES)
def test_table_line_count(label, lines):
    assert build_surface(label, lines).line_count == lines


@pytest.mark.parametrize("label, lines", TABLE_TYPES)
def test_model_shape(label, lines):
    m = build_surface(label, lines)
    assert len(m.neg_two_names) == _rank(label)
    for n in m.neg_two_names:
        assert intersect(m.curves[n], ANTI_K) == 0
        assert intersect(m.curves[n], m.curves[n]) == -2
    for n in m.neg_one_names:
        assert intersect(m.curves[n], ANTI_K) == 1
        assert intersect(m.curves[n], m.curves[n]) == -1
    g = m.dual_graph.subgraph(m.neg_two_names)
    assert nx.is_isomorphic(nx.Graph(g), dynkin_graph(parse_ade(label)))
    assert all(d["weight"] == 1 for _, _, d in g.edges(data=True))


def test_smooth_and_extremes():
    assert build_surface("smooth").line_count == 56
    assert build_surface("A1").line_count == 44
    e7 = build_surface("E7")
    assert len(e7.neg_two_names) == 7 and e7.line_count == 1
    assert n_roots("E7") == 126


def test_a1_curve_neighbours():
    m = build_surface("A1")
    g = m.dual_graph
    assert sum(1 for n in m.neg_one_names if g.has_edge("E1", n)) == 12
    strata = point_strata(m, "E1")
    assert len(strata) == 13
    assert strata[-1].kind == "generic-on-curve"


def test_a3_middle_strata():
    m = build_surface("A3")
    strata = point_strata(m, "E2")
    names = {s.name for s in strata}
    assert {"E2*E1", "E2*E3", "E2:generic"} <= names
    assert sum(1 for s in strata if s.incident and s.incident[0][0].startswith("L")) == 2


def test_weight_two_edges_give_two_strata():
    m = build_surface("smooth")
    g = m.dual_graph
    a, b = next((a, b) for a, b, d in g.edges(data=True) if d["weight"] == 2)
    on_a = [s for s in point_strata(m, a) if s.incident and s.incident[0][0] == b]
    assert len(on_a) == 2
    assert all(s.incident[0][1] == 1 for s in on_a)


def test_ambiguous_and_unknown_types_rejected():
    with pytest.raises(AmbiguousType):
        build_surface("A5")
    with pytest.raises(UnknownType):
        build_surface("A5", 9)
    with pytest.raises(UnknownType):
        build_surface("E8")
    with pytest.raises(UnknownType):
        build_surface("smooth", 55)


def test_dot_export():
    dot = to_dot(build_surface("2A3+A1"))
    nodes = [ln for ln in dot.splitlines() if "kind=" in ln]
    assert len(nodes) == 7 + 4
    assert sum('kind="-2"' in ln for ln in nodes) == 7
    assert dot == to_dot(build_surface("2A3+A1"))


def test_dual_graph_matches_intersections():
    m = build_surface("D4", 14)
    g = dual_graph(m)
    for a in m.names:
        for b in m.names:
            if a < b:
                w = intersect(m.curves[a], m.curves[b])
                assert (g[a][b]["weight"] if g.has_edge(a, b) else 0) == max(w, 0)


@settings(max_examples=30, deadline=None)
@given(st.sampled_from(TABLE_TYPES))
def test_lines_are_nonnegative_on_simple_roots(row):
    m = build_surface(*row)
    for ell in m.neg_one_names:
        assert all(intersect(m.curves[ell], m.curves[r]) >= 0 for r in m.neg_two_names)
