import pytest
from hypothesis import given, settings, strategies as st

from oracles import PolyField, toric_points, torus_points
from toricgraph import catalog
from toricgraph.errors import EnumerationTooLarge
from toricgraph.field import FieldSpec
from toricgraph.graph import components, graph_from_edges
from toricgraph.toric import (enumerate_toric_set, kernel_order, length_formula, product_renormalize,
                              projective_torus)

FIELDS = [(3, 1), (2, 2), (5, 1)]


def _ref(f):
    return PolyField(f.p, f.m, f.modulus)


@pytest.mark.parametrize("graph,q,size", [
    (catalog.cycle(3), 3, 4),  # non-bipartite connected: (q-1)^(n-1)
    (catalog.cycle(4), 3, 4),  # bipartite connected: (q-1)^(n-2)
    (catalog.triangle_plus_square(), 5, 1024),
    (catalog.triangle_plus_square(), 4, 243),
])
def test_known_lengths(graph, q, size):
    from toricgraph.field import parse_q
    f = FieldSpec(*parse_q(str(q)))
    assert len(enumerate_toric_set(graph, f)) == size
    assert length_formula(graph, f) == size


def test_projective_torus_examples():
    assert len(projective_torus(2, FieldSpec(3))) == 2
    assert len(projective_torus(3, FieldSpec(2, 2))) == 9
    assert projective_torus(2, FieldSpec(5)).point_set() == {(1, 1), (1, 2), (1, 3), (1, 4)}


def test_kernel_orders():
    tri, c4 = components(catalog.cycle(3))[0], components(catalog.cycle(4))[0]
    assert kernel_order(tri, FieldSpec(5)) == 2
    assert kernel_order(tri, FieldSpec(2, 2)) == 3
    assert kernel_order(c4, FieldSpec(5)) == 4


def test_connected_bipartite_formula():
    for q in (3, 4, 5):
        f = FieldSpec(*{3: (3, 1), 4: (2, 2), 5: (5, 1)}[q])
        assert length_formula(catalog.complete_bipartite(2, 3), f) == (q - 1) ** 3


def test_points_are_normalized_and_distinct():
    x = enumerate_toric_set(catalog.k23(), FieldSpec(5))
    pts = [tuple(int(v) for v in p) for p in x.points]
    assert all(p[0] == 1 and all(p) for p in pts)
    assert len(set(pts)) == len(pts)
    assert pts == sorted(pts)


def test_enumeration_cap():
    with pytest.raises(EnumerationTooLarge):
        enumerate_toric_set(catalog.cycle(6), FieldSpec(5), cap=100)


def test_product_renormalize_stays_in_set():
    x = enumerate_toric_set(catalog.cycle(4), FieldSpec(5))
    pts = x.point_set()
    for i in range(len(x)):
        for j in range(len(x)):
            assert product_renormalize(x, i, j) in pts


@pytest.mark.parametrize("name", ["P4", "triangle", "C4", "paw", "bowtie", "two-triangles", "triangle+K2"])
@pytest.mark.parametrize("pm", FIELDS)
def test_enumeration_matches_pointwise_oracle(name, pm):
    g = catalog.length_corpus()[name]
    f = FieldSpec(*pm)
    assert enumerate_toric_set(g, f).point_set() == toric_points(g.edges, g.n, _ref(f))


@pytest.mark.parametrize("pm", FIELDS)
def test_torus_matches_oracle(pm):
    f = FieldSpec(*pm)
    assert projective_torus(3, f).point_set() == torus_points(3, _ref(f))


@st.composite
def small_graphs(draw):
    n = draw(st.integers(3, 5))
    pairs = [(u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1)]
    return graph_from_edges(draw(st.lists(st.sampled_from(pairs), min_size=2, max_size=len(pairs), unique=True)))


@settings(max_examples=40, deadline=None)
@given(small_graphs(), st.sampled_from(FIELDS))
def test_length_formula_property(g, pm):
    f = FieldSpec(*pm)
    assert len(enumerate_toric_set(g, f)) == length_formula(g, f)


@pytest.mark.parametrize("g", [catalog.cycle(3), catalog.cycle(5), catalog.length_corpus()["paw"]])
@pytest.mark.parametrize("pm", FIELDS)
def test_unicyclic_odd_graph_gives_torus(g, pm):
    # connected, non-bipartite, n = s
    f = FieldSpec(*pm)
    assert enumerate_toric_set(g, f).point_set() == projective_torus(g.s, f).point_set()
