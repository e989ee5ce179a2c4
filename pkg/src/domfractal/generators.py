"""Builders for the pseudofractal scale-free web G_n and the Sierpinski graph S_n.

Both families are built two ways:

* iteratively (grow G_{n-1} / subdivide S_{n-1}), which fixes the canonical
  labeling: the three generation-1 vertices are 0, 1, 2 (A, B, C) and every
  later generation appends one vertex per edge of the previous generation, in
  sorted edge order;
* by merging three copies of generation n-1 at boundary vertices.

The merge builder records, for every vertex, its birth generation and the pair
of older vertices it was born between.  Sorting by (generation, parent pair)
reproduces the iterative labeling, so both builders can be compared on raw
edge lists instead of via isomorphism testing.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from domfractal.graph import Family, Graph, GraphError, induced_subgraph, new_graph

MAX_GENERATION = 16


class GenerationOutOfRange(ValueError):
    pass


class WrongFamily(GraphError):
    pass


class InvalidK(GraphError):
    pass


class Method(str, enum.Enum):
    ITERATIVE = "iterative"
    MERGE = "merge"


@dataclass(frozen=True)
class GenerationSpec:
    family: Family
    n: int
    method: Method = Method.ITERATIVE

    def __post_init__(self) -> None:
        if self.n < 1:
            raise GenerationOutOfRange(f"generation must be >= 1, got {self.n}")

    def build(self, allow_large: bool = False) -> Graph:
        return generate(self.family, self.n, self.method, allow_large=allow_large)


def vertex_count(n: int) -> int:
    """(3^n + 3) / 2, shared by both families."""
    return (3**n + 3) // 2


def edge_count(n: int) -> int:
    """Edge count of the constructed graphs: 3^n (the triangle has 3 edges)."""
    return 3**n


def _check_n(n: int, allow_large: bool) -> None:
    if not isinstance(n, int) or n < 1:
        raise GenerationOutOfRange(f"generation must be an integer >= 1, got {n!r}")
    if n > MAX_GENERATION and not allow_large:
        raise GenerationOutOfRange(
            f"generation {n} exceeds the cap of {MAX_GENERATION} "
            f"({vertex_count(n)} vertices); pass allow_large=True (--allow-large) to override"
        )


TRIANGLE = [(0, 1), (0, 2), (1, 2)]


def generate_pseudofractal_iterative(n: int, *, allow_large: bool = False) -> Graph:
    _check_n(n, allow_large)
    edges = list(TRIANGLE)
    n_vertices = 3
    for _ in range(2, n + 1):
        grown = []
        for u, v in sorted(edges):
            w = n_vertices
            n_vertices += 1
            grown += [(u, w), (v, w)]
        edges += grown
    return new_graph(
        edges, (0, 1, 2), n_vertices=n_vertices, generation=n, family=Family.PSEUDOFRACTAL_WEB
    )


def _tri_edges(t: tuple[int, int, int]) -> list[tuple[int, int]]:
    a, b, c = t
    return [tuple(sorted(p)) for p in ((a, b), (a, c), (b, c))]


def generate_sierpinski_iterative(n: int, *, allow_large: bool = False) -> Graph:
    _check_n(n, allow_large)
    # Upward triangles; every edge lies in exactly one of them.
    triangles = [(0, 1, 2)]
    n_vertices = 3
    for _ in range(2, n + 1):
        edges = sorted(e for t in triangles for e in _tri_edges(t))
        mid = {}
        for e in edges:
            mid[e] = n_vertices
            n_vertices += 1
        split = []
        for a, b, c in triangles:
            ab, ac, bc = mid[tuple(sorted((a, b)))], mid[tuple(sorted((a, c)))], mid[tuple(sorted((b, c)))]
            split += [(a, ab, ac), (ab, b, bc), (ac, bc, c)]
        triangles = split
    edges = sorted(e for t in triangles for e in _tri_edges(t))
    return new_graph(
        edges, (0, 1, 2), n_vertices=n_vertices, generation=n, family=Family.SIERPINSKI
    )


# -- self-similar merge ---------------------------------------------------------

# Global slots for the six merged boundary positions of generation n+1.
# 0..2 are the new boundary A, B, C; 3..5 are the generation-2 vertices born on
# the edges (A,B), (A,C), (B,C).
_INNER_PARENTS = {3: (0, 1), 4: (0, 2), 5: (1, 2)}

# copy -> (slot of its A, slot of its B, slot of its C)
# Web: A^1, B^3 -> A;  C^1, B^2 -> B;  A^2, C^3 -> C; the leftover hub of each
# copy is the vertex born on the opposite global edge.
PSEUDOFRACTAL_IDENTIFICATION = ((0, 3, 1), (2, 1, 5), (4, 0, 2))
# Sierpinski: copy 1 on top, copy 2 bottom-left, copy 3 bottom-right; adjacent
# copies share the midpoints of the outer sides.
SIERPINSKI_IDENTIFICATION = ((0, 3, 4), (3, 1, 5), (4, 5, 2))


@dataclass
class _Build:
    n_vertices: int
    edges: list[tuple[int, int]]
    generation: list[int]
    parent: list[tuple[int, int] | None]
    boundary: tuple[int, int, int]


def _base_build() -> _Build:
    return _Build(3, list(TRIANGLE), [1, 1, 1], [None, None, None], (0, 1, 2))


def _merge_step(prev: _Build, table: tuple[tuple[int, int, int], ...]) -> _Build:
    n_vertices = 6
    generation = [1, 1, 1, 2, 2, 2]
    parent: list[tuple[int, int] | None] = [None, None, None, *_INNER_PARENTS.values()]
    edges: list[tuple[int, int]] = []
    for slots in table:
        f = {}
        for hub, slot in zip(prev.boundary, slots):
            f[hub] = slot
        for v in range(prev.n_vertices):
            if v not in f:
                f[v] = n_vertices
                n_vertices += 1
                generation.append(prev.generation[v] + 1)
                p, q = prev.parent[v]
                parent.append((f[p], f[q]))
        edges += [(f[u], f[v]) for u, v in prev.edges]
    used = set(v for e in edges for v in e)
    if used != set(range(n_vertices)):
        raise AssertionError("identification table left a slot unused")
    return _Build(n_vertices, edges, generation, parent, (0, 1, 2))


def _canonical_labels(b: _Build) -> list[int]:
    """Relabel by (birth generation, sorted canonical parent pair)."""
    label = [-1] * b.n_vertices
    for i, v in enumerate(b.boundary):
        label[v] = i
    next_id = 3
    by_gen: dict[int, list[int]] = {}
    for v in range(b.n_vertices):
        if b.generation[v] > 1:
            by_gen.setdefault(b.generation[v], []).append(v)
    for gen in sorted(by_gen):
        keyed = []
        for v in by_gen[gen]:
            p, q = b.parent[v]
            keyed.append((tuple(sorted((label[p], label[q]))), v))
        keyed.sort()
        for _, v in keyed:
            label[v] = next_id
            next_id += 1
    return label


def _merge_generate(n: int, family: Family, table, allow_large: bool) -> Graph:
    _check_n(n, allow_large)
    b = _base_build()
    for _ in range(2, n + 1):
        b = _merge_step(b, table)
    label = _canonical_labels(b)
    edges = [(label[u], label[v]) for u, v in b.edges]
    boundary = tuple(label[v] for v in b.boundary)
    return new_graph(edges, boundary, n_vertices=b.n_vertices, generation=n, family=family)


def generate_pseudofractal_merge(n: int, *, allow_large: bool = False) -> Graph:
    return _merge_generate(n, Family.PSEUDOFRACTAL_WEB, PSEUDOFRACTAL_IDENTIFICATION, allow_large)


def generate_sierpinski_merge(n: int, *, allow_large: bool = False) -> Graph:
    return _merge_generate(n, Family.SIERPINSKI, SIERPINSKI_IDENTIFICATION, allow_large)


_BUILDERS = {
    (Family.PSEUDOFRACTAL_WEB, Method.ITERATIVE): generate_pseudofractal_iterative,
    (Family.PSEUDOFRACTAL_WEB, Method.MERGE): generate_pseudofractal_merge,
    (Family.SIERPINSKI, Method.ITERATIVE): generate_sierpinski_iterative,
    (Family.SIERPINSKI, Method.MERGE): generate_sierpinski_merge,
}


def generate(family, n: int, method=Method.ITERATIVE, *, allow_large: bool = False) -> Graph:
    family, method = Family(family), Method(method)
    if family is Family.CUSTOM:
        raise WrongFamily("no generator for the Custom family")
    return _BUILDERS[family, method](n, allow_large=allow_large)


# -- outmost-vertex removal -------------------------------------------------------


@dataclass(frozen=True)
class RemovedOutmost:
    graph: Graph
    index: dict[int, int]
    removed: tuple[int, ...]
    # Former neighbours of each removed vertex, in the new ids.
    removed_neighbors: tuple[frozenset[int], ...]

    @property
    def excluded(self) -> frozenset[int]:
        """Union of the removed vertices' former neighbours."""
        return frozenset().union(*self.removed_neighbors)


def remove_outmost(g: Graph, k: int) -> RemovedOutmost:
    """S_n^k: drop the first ``k`` boundary vertices (A; A,B; A,B,C).

    The removed choice is fixed by convention; S_n is rotationally symmetric.
    """
    if g.family is not Family.SIERPINSKI:
        raise WrongFamily(f"remove_outmost needs a Sierpinski graph, got {g.family.value}")
    if k not in (1, 2, 3):
        raise InvalidK(f"k must be 1, 2 or 3, got {k!r}")
    removed = g.boundary[:k]
    keep = set(g.vertices()) - set(removed)
    sub, index = induced_subgraph(g, keep)
    neighbor_sets = tuple(
        frozenset(index[u] for u in g.adjacency[r] if u in index) for r in removed
    )
    return RemovedOutmost(sub, index, removed, neighbor_sets)
