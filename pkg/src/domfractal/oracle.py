"""Exact constrained minimum-dominating-set solver used as the ground-truth oracle.

Search is a set-cover style branch and bound over int bitmasks.  At each node
we pick an undominated target ``v`` and branch on which vertex of ``N[v]``
dominates it; branch ``i`` takes candidate ``u_i`` and bans ``u_1..u_{i-1}``.
The branches partition the search space, so every minimum dominating set is
reached at exactly one leaf and counting is exact.  The lower bound only cuts
branches that are strictly worse than the incumbent in counting modes.
"""

from __future__ import annotations

import bisect
import enum
import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from domfractal.counting import CountVector
from domfractal.generators import RemovedOutmost, remove_outmost, vertex_count
from domfractal.graph import (
    DominationConstraint,
    Family,
    Graph,
    from_mask,
    is_dominating,
    to_mask,
)
from domfractal.recursion import ClassVector, SierpinskiState

DEFAULT_BUDGET = 10**9


class ResourceLimit(RuntimeError):
    pass


class UniquenessViolated(AssertionError):
    pass


class Mode(str, enum.Enum):
    MIN_SIZE = "min"
    COUNT = "count"
    ENUMERATE = "enumerate"


@dataclass(frozen=True)
class Pruning:
    """Switches for the optional search rules; none of them changes results."""

    bound: bool = True
    fewest_candidates: bool = True
    greedy_incumbent: bool = True


@dataclass(frozen=True)
class SolveRequest:
    graph: Graph
    constraint: DominationConstraint = field(default_factory=DominationConstraint)
    mode: Mode = Mode.COUNT
    enumeration_cap: int | None = None

    def __post_init__(self) -> None:
        if self.enumeration_cap is not None and self.enumeration_cap < 1:
            raise ValueError("enumeration_cap must be >= 1")
        self.constraint.validate(self.graph)


@dataclass
class SolveResult:
    min_size: int | None
    num_minima: int | None = None
    minima: list[frozenset[int]] | None = None
    truncated: bool = False
    nodes: int = 0

    @property
    def feasible(self) -> bool:
        return self.min_size is not None

    def to_json(self) -> dict:
        out = {
            "feasible": self.feasible,
            "min_size": self.min_size,
            "num_minima": None if self.num_minima is None else str(self.num_minima),
            "nodes": self.nodes,
        }
        if self.minima is not None:
            out["minima"] = [sorted(s) for s in self.minima]
            out["truncated"] = self.truncated
        return out


class _Search:
    def __init__(self, g: Graph, c: DominationConstraint, mode: Mode, cap, budget, pruning):
        self.closed = g.closed_masks
        self.mode = mode
        self.cap = cap
        self.budget = budget
        self.pruning = pruning
        self.nodes = 0
        self.best = None
        self.count = 0
        self.found: list[tuple[int, ...]] = []
        self.n_found = 0
        self.forced = to_mask(c.forced_in)
        self.target = to_mask(c.targets(g))
        self.allowed = g.all_mask & ~to_mask(c.forbidden)

    def feasible(self) -> bool:
        closed = self.closed
        for v in from_mask(self.target):
            if closed[v] & self.allowed == 0:
                return False
        return True

    def greedy_upper_bound(self) -> int:
        closed = self.closed
        dominated = 0
        for v in from_mask(self.forced):
            dominated |= closed[v]
        size = self.forced.bit_count()
        avail = from_mask(self.allowed & ~self.forced)
        while self.target & ~dominated:
            undom = self.target & ~dominated
            u = max(avail, key=lambda w: (closed[w] & undom).bit_count())
            dominated |= closed[u]
            size += 1
        return size

    def run(self) -> None:
        closed = self.closed
        dominated = 0
        for v in from_mask(self.forced):
            dominated |= closed[v]
        if self.pruning.greedy_incumbent:
            self.best = self.greedy_upper_bound()
        self._recurse(self.forced, self.forced.bit_count(), dominated, self.allowed & ~self.forced)

    def _record(self, chosen: int, size: int) -> None:
        if self.best is None or size < self.best:
            self.best = size
            self.count = 0
            self.found = []
        if size == self.best:
            self.count += 1
            if self.mode is Mode.ENUMERATE:
                key = tuple(from_mask(chosen))
                bisect.insort(self.found, key)
                if self.cap is not None and len(self.found) > self.cap:
                    self.found.pop()

    def _recurse(self, chosen: int, size: int, dominated: int, avail: int) -> None:
        self.nodes += 1
        if self.nodes > self.budget:
            raise ResourceLimit(f"node budget of {self.budget} exceeded")
        undom = self.target & ~dominated
        if not undom:
            self._record(chosen, size)
            return
        best = self.best
        if best is not None:
            # At least one more vertex is needed.
            if size + 1 > best or (self.mode is Mode.MIN_SIZE and size + 1 >= best):
                return
        closed = self.closed
        if self.pruning.bound and best is not None:
            cover = 0
            for u in from_mask(avail):
                k = (closed[u] & undom).bit_count()
                if k > cover:
                    cover = k
            if cover == 0:
                return
            lb = -(-undom.bit_count() // cover)
            if size + lb > best or (self.mode is Mode.MIN_SIZE and size + lb >= best):
                return

        # Branch vertex: the undominated target with the fewest candidates.
        if self.pruning.fewest_candidates:
            pick, pick_cands = -1, None
            for v in from_mask(undom):
                cands = closed[v] & avail
                k = cands.bit_count()
                if pick_cands is None or k < pick_cands.bit_count():
                    pick, pick_cands = v, cands
                    if k <= 1:
                        break
            cands = pick_cands
        else:
            low = undom & -undom
            cands = closed[low.bit_length() - 1] & avail
        if not cands:
            return
        order = sorted(from_mask(cands), key=lambda u: -(closed[u] & undom).bit_count())
        for u in order:
            bit = 1 << u
            avail &= ~bit
            self._recurse(chosen | bit, size + 1, dominated | closed[u], avail)


def solve(
    req: SolveRequest,
    *,
    budget: int = DEFAULT_BUDGET,
    pruning: Pruning = Pruning(),
) -> SolveResult:
    """Exact minimum size (and count / listing) under ``req.constraint``.

    An infeasible constraint yields ``min_size=None`` and ``num_minima=0``.
    Raises :class:`ResourceLimit` if the search visits more than ``budget`` nodes.
    """
    g, c, mode = req.graph, req.constraint, Mode(req.mode)
    s = _Search(g, c, mode, req.enumeration_cap, budget, pruning)
    if not s.feasible():
        minima = [] if mode is Mode.ENUMERATE else None
        return SolveResult(None, 0 if mode is not Mode.MIN_SIZE else None, minima)
    s.run()
    result = SolveResult(min_size=s.best, nodes=s.nodes)
    if mode is not Mode.MIN_SIZE:
        result.num_minima = s.count
    if mode is Mode.ENUMERATE:
        result.minima = [frozenset(t) for t in s.found]
        result.truncated = s.count > len(s.found)
        for m in result.minima:
            if len(m) != s.best or not c.admits(g, m):
                raise AssertionError(f"solver emitted an invalid set {sorted(m)}")
    return result


def minimum_dominating_sets(g: Graph, **kw) -> SolveResult:
    return solve(SolveRequest(g, DominationConstraint(), Mode.ENUMERATE), **kw)


# -- class-constrained quantities -----------------------------------------------


@dataclass(frozen=True)
class ClassQuery:
    """Minimum over all placements of exactly ``k`` of ``choices`` in the set."""

    graph: Graph
    choices: tuple[int, ...]
    k: int
    excluded: frozenset[int] = frozenset()

    def constraints(self):
        for chosen in itertools.combinations(self.choices, self.k):
            forced = frozenset(chosen)
            if forced & self.excluded:
                continue
            forbidden = (frozenset(self.choices) - forced) | self.excluded
            yield DominationConstraint(forced_in=forced, forbidden=forbidden)


def _solve_job(args) -> SolveResult:
    req, kw = args
    return solve(req, **kw)


def class_minimum(
    q: ClassQuery,
    mode: Mode = Mode.MIN_SIZE,
    enumeration_cap: int | None = None,
    *,
    workers: int = 1,
    **kw,
) -> SolveResult:
    """Combine the per-placement solves of ``q`` into one result.

    Placements are disjoint (each fixes a different subset of ``choices``), so
    counts add and enumerated sets never repeat.  With ``workers > 1`` the
    placements run in separate processes; results are combined in placement
    order, so the output does not depend on scheduling.
    """
    mode = Mode(mode)
    jobs = [(SolveRequest(q.graph, c, mode, enumeration_cap), kw) for c in q.constraints()]
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_solve_job, jobs))
    else:
        results = [_solve_job(j) for j in jobs]
    best, count, nodes = None, 0, 0
    minima: list[frozenset[int]] = []
    for r in results:
        nodes += r.nodes
        if not r.feasible:
            continue
        if best is None or r.min_size < best:
            best, count, minima = r.min_size, 0, []
        if r.min_size == best:
            if r.num_minima is not None:
                count += r.num_minima
            if r.minima is not None:
                minima.extend(r.minima)
    result = SolveResult(best, None if mode is Mode.MIN_SIZE else count, nodes=nodes)
    if mode is Mode.ENUMERATE:
        minima.sort(key=sorted)
        result.minima = minima[:enumeration_cap] if enumeration_cap else minima
        result.truncated = count > len(result.minima)
    return result


def _run_query(args):
    q, mode, kw = args
    return class_minimum(q, mode, **kw)


def _run_all(queries, mode, workers, kw) -> list[SolveResult]:
    jobs = [(q, mode, kw) for q in queries]
    if workers and workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(_run_query, jobs))
    return [_run_query(j) for j in jobs]


def _require(g: Graph, family: Family) -> None:
    if g.family is not family:
        raise ValueError(f"expected a {family.value} graph, got {g.family.value}")


def class_values_pseudofractal(g: Graph, *, workers: int = 1, **kw) -> ClassVector:
    """Oracle (gamma0..gamma3): fewest vertices with exactly k hubs in the set."""
    _require(g, Family.PSEUDOFRACTAL_WEB)
    queries = [ClassQuery(g, g.boundary, k) for k in range(4)]
    results = _run_all(queries, Mode.MIN_SIZE, workers, kw)
    return ClassVector(*(r.min_size for r in results))


def sierpinski_queries(g: Graph, removal_order: tuple[int, ...] = (0, 1, 2)) -> dict[str, ClassQuery]:
    """The ten constrained problems behind a Sierpinski state.

    ``removal_order`` permutes which outmost vertices count as A, B, C, which
    lets tests check that the choice does not matter.
    """
    _require(g, Family.SIERPINSKI)
    rotated = Graph(
        g.n_vertices, g.adjacency, tuple(g.boundary[i] for i in removal_order), g.generation, g.family
    )
    queries = {f"gamma{k}": ClassQuery(g, rotated.boundary, k) for k in range(4)}
    r1, r2, r3 = (remove_outmost(rotated, k) for k in (1, 2, 3))
    for i in range(3):
        queries[f"phi{i}"] = _removed_query(r1, i)
    for j in range(2):
        queries[f"xi{j}"] = _removed_query(r2, j)
    queries["eta"] = _removed_query(r3, 0)
    return queries


def _removed_query(r: RemovedOutmost, k: int) -> ClassQuery:
    return ClassQuery(r.graph, r.graph.boundary, k, r.excluded)


def sierpinski_state(g: Graph, *, workers: int = 1, removal_order=(0, 1, 2), **kw) -> SierpinskiState:
    queries = sierpinski_queries(g, removal_order)
    results = _run_all(list(queries.values()), Mode.MIN_SIZE, workers, kw)
    return SierpinskiState(**{name: r.min_size for name, r in zip(queries, results)})


# Counting classes: a = all minimum dominating sets of S_n; b, c, d, e = the
# minimum-size members of the phi0, xi0, eta and phi2 classes.
COUNT_CLASSES = {"b": "phi0", "c": "xi0", "d": "eta", "e": "phi2"}


def count_classes_sierpinski(g: Graph, *, workers: int = 1, **kw) -> CountVector:
    queries = sierpinski_queries(g)
    jobs = [ClassQuery(g, (), 0)] + [queries[name] for name in COUNT_CLASSES.values()]
    results = _run_all(jobs, Mode.COUNT, workers, kw)
    a, b, c, d, e = (r.num_minima for r in results)
    return CountVector(a, b, c, d, e, n=g.generation)


def verify_uniqueness_pseudofractal(g: Graph, **kw) -> frozenset[int]:
    """Return the unique MDS of G_n (n >= 3); it must be the vertex set of G_{n-2}."""
    _require(g, Family.PSEUDOFRACTAL_WEB)
    n = g.generation
    if n < 3:
        raise ValueError(f"uniqueness holds for n >= 3, got n={n}")
    r = minimum_dominating_sets(g, **kw)
    if r.num_minima != 1:
        raise UniquenessViolated(f"G_{n} has {r.num_minima} minimum dominating sets")
    (mds,) = r.minima
    expected = frozenset(range(vertex_count(n - 2)))
    if mds != expected:
        raise UniquenessViolated(f"unique MDS of G_{n} is not the vertex set of G_{n - 2}")
    assert is_dominating(g, mds)
    return mds
