import pytest
from hypothesis import given
from hypothesis import strategies as st

from domfractal.generators import generate
from domfractal.graph import (
    BoundaryOutOfRange,
    DominationConstraint,
    DuplicateEdge,
    Family,
    GraphError,
    InvalidVertex,
    SelfLoop,
    closed_neighborhood,
    from_mask,
    induced_subgraph,
    is_dominating,
    new_graph,
    parse_edgelist,
    to_dot,
    to_edgelist,
    to_mask,
)

TRIANGLE = [(0, 1), (1, 2), (0, 2)]


@st.composite
def graphs(draw, max_vertices=12):
    n = draw(st.integers(1, max_vertices))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    edges = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return new_graph(edges, n_vertices=n)


def test_triangle_builds():
    g = new_graph(TRIANGLE, (0, 1, 2))
    assert (g.n_vertices, g.n_edges) == (3, 3)
    assert g.boundary == (0, 1, 2)


def test_self_loop_rejected():
    with pytest.raises(SelfLoop):
        new_graph([(0, 0)])


@pytest.mark.parametrize("dup", [(0, 1), (1, 0)])
def test_duplicate_edge_rejected(dup):
    with pytest.raises(DuplicateEdge):
        new_graph([(0, 1), dup, (1, 2), (0, 2)])


@pytest.mark.parametrize("boundary", [(0, 1, 3), (0, 0, 1), (-1, 0, 1)])
def test_bad_boundary_rejected(boundary):
    with pytest.raises(BoundaryOutOfRange):
        new_graph(TRIANGLE, boundary)


def test_edge_outside_declared_range():
    with pytest.raises(InvalidVertex):
        new_graph([(0, 5)], n_vertices=3)


def test_isolated_vertices_kept():
    g = new_graph([(0, 1)], n_vertices=4)
    assert g.n_vertices == 4 and g.degree(3) == 0


def test_is_dominating_triangle():
    g = generate(Family.PSEUDOFRACTAL_WEB, 1)
    assert is_dominating(g, {0}, g.vertices())
    assert not is_dominating(g, set(), g.vertices())


def test_no_single_vertex_dominates_s3():
    g = generate(Family.SIERPINSKI, 3)
    assert not any(is_dominating(g, {v}) for v in g.vertices())


def test_is_dominating_respects_targets():
    g = new_graph([(0, 1), (1, 2), (2, 3)])
    assert is_dominating(g, {0}, {0, 1})
    assert not is_dominating(g, {0}, {0, 1, 2})


def test_closed_neighborhood_examples():
    assert closed_neighborhood(generate(Family.PSEUDOFRACTAL_WEB, 1), 0) == {0, 1, 2}
    assert closed_neighborhood(new_graph([(0, 1), (1, 2)]), 2) == {1, 2}
    g2 = generate(Family.PSEUDOFRACTAL_WEB, 2)
    assert len(closed_neighborhood(g2, g2.boundary[0])) == 5


def test_closed_neighborhood_invalid_vertex():
    with pytest.raises(InvalidVertex):
        closed_neighborhood(new_graph(TRIANGLE), 3)


def test_constraint_overlap_rejected():
    with pytest.raises(GraphError):
        DominationConstraint(forced_in={1, 2}, forbidden={2})


def test_constraint_validates_vertices():
    with pytest.raises(InvalidVertex):
        DominationConstraint(must_dominate={7}).validate(new_graph(TRIANGLE))


def test_constraint_admits():
    g = new_graph([(0, 1), (1, 2)])
    c = DominationConstraint(forced_in={0}, forbidden={1})
    assert c.admits(g, {0, 2})
    assert not c.admits(g, {0})
    assert not c.admits(g, {0, 1, 2})


def test_edgelist_header_and_order():
    g = generate(Family.SIERPINSKI, 2)
    text = to_edgelist(g)
    lines = text.splitlines()
    assert lines[0] == "# vertices=6 boundary=0,1,2 family=Sierpinski generation=2"
    pairs = [tuple(map(int, line.split())) for line in lines[1:]]
    assert pairs == sorted(pairs) and all(u < v for u, v in pairs)
    assert text.endswith("\n")


@pytest.mark.parametrize(
    "text",
    ["0 1\n", "# vertices=x\n0 1\n", "# vertices=3\n0 1 2\n", "# vertices=3\n2 1\n", "# vertices=3\n1 1\n"],
)
def test_parse_edgelist_rejects_bad_input(text):
    with pytest.raises(ValueError):
        parse_edgelist(text)


def test_dot_lists_every_vertex_and_edge():
    g = generate(Family.PSEUDOFRACTAL_WEB, 2)
    dot = to_dot(g)
    assert dot.startswith("graph G {") and dot.rstrip().endswith("}")
    assert dot.count(" -- ") == g.n_edges
    assert all(f"  {v};" in dot for v in g.vertices())


def test_induced_subgraph_reindexes():
    g = new_graph([(0, 1), (1, 2), (2, 3)], (0, 3))
    sub, index = induced_subgraph(g, {1, 2, 3})
    assert index == {1: 0, 2: 1, 3: 2}
    assert sub.edges() == [(0, 1), (1, 2)]
    assert sub.boundary == (2,)


@given(graphs())
def test_adjacency_symmetric(g):
    for u in g.vertices():
        for v in g.adjacency[u]:
            assert u in g.adjacency[v]
        assert list(g.adjacency[u]) == sorted(g.adjacency[u])


@given(graphs())
def test_whole_vertex_set_dominates(g):
    assert is_dominating(g, g.vertices(), g.vertices())


@given(graphs(), st.data())
def test_domination_monotone(g, data):
    s = data.draw(st.sets(st.sampled_from(list(g.vertices()))))
    extra = data.draw(st.sets(st.sampled_from(list(g.vertices()))))
    if is_dominating(g, s):
        assert is_dominating(g, s | extra)


@given(graphs())
def test_edgelist_round_trip(g):
    assert parse_edgelist(to_edgelist(g)) == g


@given(st.sets(st.integers(0, 200)))
def test_mask_round_trip(vs):
    assert from_mask(to_mask(vs)) == sorted(vs)
