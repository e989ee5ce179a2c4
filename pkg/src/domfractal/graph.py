"""Immutable simple undirected graphs with boundary-vertex bookkeeping.

Vertices are dense integers ``0..N-1``.  Vertex sets are handled either as
Python ``set``/``frozenset`` objects (public API) or as ``int`` bitmasks
(solver internals); :meth:`Graph.closed_masks` bridges the two.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence


class GraphError(ValueError):
    pass


class SelfLoop(GraphError):
    pass


class DuplicateEdge(GraphError):
    pass


class BoundaryOutOfRange(GraphError):
    pass


class InvalidVertex(GraphError):
    pass


class Family(str, enum.Enum):
    PSEUDOFRACTAL_WEB = "PseudofractalWeb"
    SIERPINSKI = "Sierpinski"
    CUSTOM = "Custom"


@dataclass(frozen=True)
class Graph:
    n_vertices: int
    adjacency: tuple[tuple[int, ...], ...]
    boundary: tuple[int, ...] = ()
    generation: int = 0
    family: Family = Family.CUSTOM

    @property
    def n_edges(self) -> int:
        return sum(len(nb) for nb in self.adjacency) // 2

    def vertices(self) -> range:
        return range(self.n_vertices)

    def edges(self) -> list[tuple[int, int]]:
        """Sorted list of edges ``(u, v)`` with ``u < v``."""
        return [(u, v) for u, nb in enumerate(self.adjacency) for v in nb if u < v]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def neighbors(self, v: int) -> tuple[int, ...]:
        self._check_vertex(v)
        return self.adjacency[v]

    def _check_vertex(self, v: int) -> None:
        if not (isinstance(v, int) and 0 <= v < self.n_vertices):
            raise InvalidVertex(f"vertex {v!r} not in [0, {self.n_vertices})")

    @cached_property
    def closed_masks(self) -> tuple[int, ...]:
        """Bitmask of the closed neighborhood of every vertex."""
        masks = []
        for v, nb in enumerate(self.adjacency):
            m = 1 << v
            for u in nb:
                m |= 1 << u
            masks.append(m)
        return tuple(masks)

    @property
    def all_mask(self) -> int:
        return (1 << self.n_vertices) - 1


@dataclass(frozen=True)
class DominationConstraint:
    """Forced-in / forbidden vertex sets plus the set that must be dominated.

    ``must_dominate=None`` means every vertex of the graph.
    """

    forced_in: frozenset[int] = field(default_factory=frozenset)
    forbidden: frozenset[int] = field(default_factory=frozenset)
    must_dominate: frozenset[int] | None = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "forced_in", frozenset(self.forced_in))
        object.__setattr__(self, "forbidden", frozenset(self.forbidden))
        if self.must_dominate is not None:
            object.__setattr__(self, "must_dominate", frozenset(self.must_dominate))
        if self.forced_in & self.forbidden:
            raise GraphError(
                f"forced_in and forbidden overlap: {sorted(self.forced_in & self.forbidden)}"
            )

    def targets(self, g: Graph) -> frozenset[int]:
        if self.must_dominate is None:
            return frozenset(g.vertices())
        return self.must_dominate

    def validate(self, g: Graph) -> None:
        for v in self.forced_in | self.forbidden | self.targets(g):
            g._check_vertex(v)

    def admits(self, g: Graph, s: Iterable[int]) -> bool:
        """True if ``s`` respects forced/forbidden and dominates the targets."""
        s = set(s)
        return (
            self.forced_in <= s
            and not (self.forbidden & s)
            and is_dominating(g, s, self.targets(g))
        )


def new_graph(
    edges: Iterable[tuple[int, int]],
    boundary: Sequence[int] = (),
    *,
    n_vertices: int | None = None,
    generation: int = 0,
    family: Family = Family.CUSTOM,
) -> Graph:
    """Validate an edge list and build a :class:`Graph`.

    ``n_vertices`` defaults to one more than the largest id mentioned; pass it
    explicitly to keep isolated vertices.
    """
    edges = list(edges)
    top = -1
    for u, v in edges:
        if u < 0 or v < 0:
            raise InvalidVertex(f"negative vertex id in edge {(u, v)}")
        if u == v:
            raise SelfLoop(f"self-loop at vertex {u}")
        top = max(top, u, v)
    if n_vertices is None:
        n_vertices = top + 1
    elif top >= n_vertices:
        raise InvalidVertex(f"edge endpoint {top} outside [0, {n_vertices})")

    nbrs: list[set[int]] = [set() for _ in range(n_vertices)]
    for u, v in edges:
        if v in nbrs[u]:
            raise DuplicateEdge(f"duplicate edge {(min(u, v), max(u, v))}")
        nbrs[u].add(v)
        nbrs[v].add(u)

    boundary = tuple(boundary)
    if len(set(boundary)) != len(boundary):
        raise BoundaryOutOfRange(f"boundary vertices not distinct: {boundary}")
    for b in boundary:
        if not (0 <= b < n_vertices):
            raise BoundaryOutOfRange(f"boundary vertex {b} outside [0, {n_vertices})")

    return Graph(
        n_vertices=n_vertices,
        adjacency=tuple(tuple(sorted(nb)) for nb in nbrs),
        boundary=boundary,
        generation=generation,
        family=Family(family),
    )


def closed_neighborhood(g: Graph, v: int) -> frozenset[int]:
    g._check_vertex(v)
    return frozenset(g.adjacency[v]) | {v}


def is_dominating(g: Graph, s: Iterable[int], targets: Iterable[int] | None = None) -> bool:
    """True iff every target is in ``s`` or adjacent to a member of ``s``."""
    masks = g.closed_masks
    covered = 0
    for v in s:
        covered |= masks[v]
    want = g.all_mask if targets is None else to_mask(targets)
    return want & ~covered == 0


def to_mask(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def from_mask(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def induced_subgraph(g: Graph, keep: Iterable[int]) -> tuple[Graph, dict[int, int]]:
    """Induced subgraph on ``keep``, re-indexed densely in increasing id order.

    Returns the new graph and the map old id -> new id.  Boundary vertices that
    survive keep their relative order.
    """
    kept = sorted(set(keep))
    index = {old: new for new, old in enumerate(kept)}
    edges = [(index[u], index[v]) for u, v in g.edges() if u in index and v in index]
    boundary = [index[b] for b in g.boundary if b in index]
    sub = new_graph(edges, boundary, n_vertices=len(kept), generation=g.generation)
    return sub, index


# -- edge-list / DOT interchange ------------------------------------------------


def to_edgelist(g: Graph) -> str:
    header = (
        f"# vertices={g.n_vertices} boundary={','.join(map(str, g.boundary))} "
        f"family={g.family.value} generation={g.generation}"
    )
    lines = [header] + [f"{u} {v}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


def parse_edgelist(text: str) -> Graph:
    lines = text.splitlines()
    if not lines or not lines[0].startswith("#"):
        raise GraphError("edge list must start with a '# vertices=...' header")
    meta = {}
    for token in lines[0].lstrip("#").split():
        key, _, value = token.partition("=")
        meta[key] = value
    try:
        n = int(meta["vertices"])
        boundary = [int(b) for b in meta.get("boundary", "").split(",") if b]
        family = Family(meta.get("family", Family.CUSTOM.value))
        generation = int(meta.get("generation", 0))
    except (KeyError, ValueError) as exc:
        raise GraphError(f"bad edge-list header: {lines[0]!r}") from exc

    edges = []
    for lineno, line in enumerate(lines[1:], start=2):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise GraphError(f"line {lineno}: expected 'u v', got {line!r}")
        u, v = int(parts[0]), int(parts[1])
        if u >= v and u != v:
            raise GraphError(f"line {lineno}: edges must be written with u < v")
        edges.append((u, v))
    return new_graph(edges, boundary, n_vertices=n, generation=generation, family=family)


def to_dot(g: Graph) -> str:
    lines = ["graph G {"]
    lines += [f"  {v};" for v in g.vertices()]
    lines += [f"  {u} -- {v};" for u, v in g.edges()]
    lines.append("}")
    return "\n".join(lines) + "\n"
