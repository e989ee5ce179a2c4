import pytest

from domfractal.generators import (
    MAX_GENERATION,
    GenerationOutOfRange,
    GenerationSpec,
    InvalidK,
    Method,
    WrongFamily,
    edge_count,
    generate,
    generate_pseudofractal_iterative,
    generate_pseudofractal_merge,
    generate_sierpinski_iterative,
    generate_sierpinski_merge,
    remove_outmost,
    vertex_count,
)
from domfractal.graph import Family, to_edgelist

FAMILIES = [Family.PSEUDOFRACTAL_WEB, Family.SIERPINSKI]


@pytest.mark.parametrize("family", FAMILIES)
@pytest.mark.parametrize("method", list(Method))
@pytest.mark.parametrize("n", range(1, 8))
def test_vertex_and_edge_counts(family, method, n):
    g = generate(family, n, method)
    assert g.n_vertices == (3**n + 3) // 2 == vertex_count(n)
    # The constructed edge count is 3^n; 3^(n+1) would already fail at the triangle.
    assert g.n_edges == 3**n == edge_count(n)
    assert g.generation == n and g.family is family


def test_published_vertex_counts():
    assert [vertex_count(n) for n in range(1, 7)] == [3, 6, 15, 42, 123, 366]


@pytest.mark.parametrize("family", FAMILIES)
@pytest.mark.parametrize("n", range(1, 7))
def test_builders_byte_identical(family, n):
    a = generate(family, n, Method.ITERATIVE)
    b = generate(family, n, Method.MERGE)
    assert to_edgelist(a) == to_edgelist(b)


@pytest.mark.parametrize("family", FAMILIES)
@pytest.mark.parametrize("n", range(1, 7))
def test_merge_vertex_recurrence(family, n):
    assert generate(family, n + 1, Method.MERGE).n_vertices == 3 * vertex_count(n) - 3


def test_base_case_is_triangle():
    for build in (
        generate_pseudofractal_iterative,
        generate_pseudofractal_merge,
        generate_sierpinski_iterative,
        generate_sierpinski_merge,
    ):
        g = build(1)
        assert g.edges() == [(0, 1), (0, 2), (1, 2)] and g.boundary == (0, 1, 2)


@pytest.mark.parametrize("n", range(1, 7))
def test_web_degrees_double(n):
    small = generate(Family.PSEUDOFRACTAL_WEB, n)
    big = generate(Family.PSEUDOFRACTAL_WEB, n + 1)
    assert all(big.degree(v) == 2 * small.degree(v) for v in small.vertices())
    hub_degree = max(big.degree(v) for v in big.vertices())
    assert all(big.degree(h) == hub_degree for h in big.boundary)


@pytest.mark.parametrize("n", range(1, 7))
def test_web_iterative_is_additive(n):
    small = set(generate(Family.PSEUDOFRACTAL_WEB, n).edges())
    assert small <= set(generate(Family.PSEUDOFRACTAL_WEB, n + 1).edges())


@pytest.mark.parametrize("n", range(2, 8))
def test_sierpinski_degrees(n):
    g = generate(Family.SIERPINSKI, n)
    assert sorted(v for v in g.vertices() if g.degree(v) == 2) == sorted(g.boundary)
    # Every non-corner vertex has degree 4 in the constructed graph.
    assert {g.degree(v) for v in g.vertices() if v not in g.boundary} == {4}


def test_s2_corners_and_midpoints():
    g = generate(Family.SIERPINSKI, 2)
    assert [g.degree(v) for v in range(6)] == [2, 2, 2, 4, 4, 4]


@pytest.mark.parametrize("n", [0, -1, MAX_GENERATION + 1])
def test_generation_out_of_range(n):
    with pytest.raises(GenerationOutOfRange):
        generate(Family.SIERPINSKI, n)


def test_generation_spec():
    assert GenerationSpec(Family.SIERPINSKI, 3, Method.MERGE).build() == generate(Family.SIERPINSKI, 3)
    with pytest.raises(GenerationOutOfRange):
        GenerationSpec(Family.SIERPINSKI, 0)


def test_custom_family_has_no_generator():
    with pytest.raises(WrongFamily):
        generate(Family.CUSTOM, 2)


def test_remove_one_outmost_from_s2():
    r = remove_outmost(generate(Family.SIERPINSKI, 2), 1)
    assert r.graph.n_vertices == 5
    assert len(r.removed_neighbors) == 1 and len(r.removed_neighbors[0]) == 2
    assert len(r.graph.boundary) == 2


def test_remove_three_from_s3():
    r = remove_outmost(generate(Family.SIERPINSKI, 3), 3)
    assert r.graph.n_vertices == 12
    assert r.graph.boundary == ()
    assert len(r.excluded) == 6


def test_remove_three_from_s1_is_empty():
    r = remove_outmost(generate(Family.SIERPINSKI, 1), 3)
    assert r.graph.n_vertices == 0 and r.graph.n_edges == 0


def test_remove_outmost_errors():
    with pytest.raises(WrongFamily):
        remove_outmost(generate(Family.PSEUDOFRACTAL_WEB, 2), 1)
    for k in (0, 4):
        with pytest.raises(InvalidK):
            remove_outmost(generate(Family.SIERPINSKI, 2), k)
