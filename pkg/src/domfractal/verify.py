"""Cross-check harness: the twelve acceptance checks shared by the CLI and tests.

Each check returns a :class:`Check` with the expected and observed values, so
a failing run says exactly which number disagreed.  ``level="fast"`` keeps the
oracle at n <= 3; ``level="full"`` also runs the 42-vertex instances.
"""

from __future__ import annotations

import itertools
import random
import time
from dataclasses import dataclass, field
from typing import Callable

from domfractal import counting, oracle, recursion, transfer
from domfractal.generators import Method, generate, vertex_count
from domfractal.graph import DominationConstraint, Family, Graph, is_dominating, new_graph

LEVELS = ("fast", "full")
FAMILIES = (Family.PSEUDOFRACTAL_WEB, Family.SIERPINSKI)

# Published count table (a, b, c, d, e) by generation.
PUBLISHED_COUNTS = {
    1: (3, 0, 0, 0, 0),
    2: (6, 1, 0, 0, 1),
    3: (2, 3, 2, 1, 1),
    4: (392, 381, 356, 315, 3),
    5: (1517381906, 1435406927, 1357582404, 1238595209, 3429),
    6: (
        84494691003170101058068575600,
        79618813236624661173376634785,
        75023197813382628339656804330,
        68189726461267338496884215735,
        16877573499350007,
    ),
}

CLOSED_FORM_RANGE = range(3, 65)
SAFE_INT = 2**53


@dataclass
class Check:
    id: int
    name: str
    passed: bool
    expected: object
    actual: object
    detail: str = ""
    seconds: float = 0.0

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        text = f"[{status}] {self.id:2d} {self.name}"
        if self.detail:
            text += f" ({self.detail})"
        return text

    def to_json(self) -> dict:
        return {
            "id": self.id,
            "name": self.name,
            "passed": self.passed,
            "expected": _plain(self.expected),
            "actual": _plain(self.actual),
            "detail": self.detail,
            "seconds": round(self.seconds, 4),
        }


def _plain(x):
    """JSON-safe copy: big ints become decimal strings, tuples become lists."""
    if isinstance(x, bool) or x is None or isinstance(x, (float, str)):
        return x
    if isinstance(x, int):
        return str(x) if abs(x) >= SAFE_INT else x
    if isinstance(x, dict):
        return {str(k): _plain(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_plain(v) for v in x]
    return str(x)


# -- naive second oracle ----------------------------------------------------------


def naive_minimum(g: Graph, c: DominationConstraint = DominationConstraint()) -> tuple[int | None, int]:
    """(min size, count) by trying every subset in order of increasing size."""
    free = [v for v in g.vertices() if v not in c.forced_in and v not in c.forbidden]
    forced = sorted(c.forced_in)
    targets = c.targets(g)
    for extra in range(len(free) + 1):
        hits = sum(
            1
            for combo in itertools.combinations(free, extra)
            if is_dominating(g, forced + list(combo), targets)
        )
        if hits:
            return len(forced) + extra, hits
    return None, 0


def random_graph(rng: random.Random, max_vertices: int = 20) -> Graph:
    n = rng.randint(1, max_vertices)
    p = rng.uniform(0.05, 0.6)
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    return new_graph(edges, n_vertices=n)


def oracle_corpus(n_random: int = 50, seed: int = 20240601) -> list[tuple[str, Graph]]:
    corpus = []
    for family in FAMILIES:
        for n in (1, 2, 3):
            corpus.append((f"{family.value}-{n}", generate(family, n)))
    rng = random.Random(seed)
    corpus += [(f"random-{i}", random_graph(rng)) for i in range(n_random)]
    return corpus


# -- the twelve checks ------------------------------------------------------------


def check_vertex_counts(level: str) -> Check:
    bad = {}
    for family in FAMILIES:
        for n in range(1, 11):
            got = generate(family, n).n_vertices
            if got != (3**n + 3) // 2:
                bad[f"{family.value} n={n}"] = got
    return Check(1, "vertex counts N_n = (3^n+3)/2 for n in 1..10", not bad,
                 "(3^n+3)/2", bad or "all match")


def check_builders_agree(level: str) -> Check:
    bad = []
    for family in FAMILIES:
        for n in range(1, 9):
            a = generate(family, n, Method.ITERATIVE)
            b = generate(family, n, Method.MERGE)
            if a != b:
                bad.append(f"{family.value} n={n}")
    return Check(2, "iterative and merge builders agree for n in 1..8", not bad,
                 "identical edge lists", bad or "identical")


def check_web_seed(level: str) -> Check:
    got = oracle.class_values_pseudofractal(generate(Family.PSEUDOFRACTAL_WEB, 3)).as_tuple()
    expected = recursion.PSEUDOFRACTAL_SEED.as_tuple()
    return Check(3, "G_3 class vector by oracle", got == expected, expected, got)


def check_sierpinski_seed(level: str) -> Check:
    got = oracle.sierpinski_state(generate(Family.SIERPINSKI, 3)).as_tuple()
    expected = recursion.SIERPINSKI_SEED.as_tuple()
    return Check(4, "S_3 ten-component state by oracle", got == expected, expected, got)


def check_domination_numbers(level: str) -> Check:
    n = 4 if level == "full" else 3
    expected = {f.value: recursion.domination_number(f, n) for f in FAMILIES}
    got = {f.value: oracle.solve(oracle.SolveRequest(generate(f, n), mode=oracle.Mode.MIN_SIZE)).min_size
           for f in FAMILIES}
    return Check(5, f"domination numbers at n={n} by oracle", got == expected, expected, got)


def check_uniqueness(level: str) -> Check:
    ns = (3, 4) if level == "full" else (3,)
    expected, got = {}, {}
    for n in ns:
        expected[n] = list(range(vertex_count(n - 2)))
        r = oracle.minimum_dominating_sets(generate(Family.PSEUDOFRACTAL_WEB, n))
        got[n] = [sorted(s) for s in r.minima]
    passed = all(got[n] == [expected[n]] for n in ns)
    return Check(6, "unique MDS of G_n equals the vertices of G_{n-2}", passed,
                 {n: [v] for n, v in expected.items()}, got)


def check_count_table(level: str) -> Check:
    ns = (3, 4) if level == "full" else (3,)
    expected = {n: PUBLISHED_COUNTS[n] for n in ns}
    got = {n: oracle.count_classes_sierpinski(generate(Family.SIERPINSKI, n)).as_tuple() for n in ns}
    diffs = [
        f"{name}_{n}: table {e} vs oracle {a}"
        for n in ns
        for name, e, a in zip(counting.COMPONENTS, expected[n], got[n])
        if e != a
    ]
    return Check(7, "oracle class counts reproduce the published table", not diffs,
                 expected, got, "; ".join(diffs))


def check_recurrence_table(level: str) -> Check:
    got = {n: counting.sierpinski_counts(n).as_tuple() for n in (4, 5, 6)}
    expected = {n: PUBLISHED_COUNTS[n] for n in (4, 5, 6)}
    return Check(8, "count recurrence from the n=3 seed reproduces the table", got == expected,
                 expected, got)


def check_closed_forms(level: str) -> Check:
    first_bad = {}
    v = recursion.PSEUDOFRACTAL_SEED
    s = recursion.SIERPINSKI_SEED
    for n in CLOSED_FORM_RANGE:
        if n > recursion.SEED_N:
            v = recursion.step_pseudofractal(v)
            s = recursion.step_sierpinski(s)
        if "web" not in first_bad and v != recursion.class_closed_forms(n):
            first_bad["web"] = (n, v.as_tuple(), recursion.class_closed_forms(n).as_tuple())
        if "sierpinski" not in first_bad and s != recursion.sierpinski_closed_forms(n):
            first_bad["sierpinski"] = (n, s.as_tuple(), recursion.sierpinski_closed_forms(n).as_tuple())
    detail = "; ".join(
        f"{fam} first differs at n={n}: recursion {got} vs closed form {want}"
        for fam, (n, got, want) in first_bad.items()
    )
    return Check(9, "recursions match closed forms for n in 3..64", not first_bad,
                 "closed forms", first_bad or "all match", detail)


def check_ordering(level: str) -> Check:
    bad = []
    v = recursion.PSEUDOFRACTAL_SEED
    for n in CLOSED_FORM_RANGE:
        if n > recursion.SEED_N:
            v = recursion.step_pseudofractal(v)
        if not v.is_ordered():
            bad.append(n)
    oracle_ns = (3, 4) if level == "full" else (3,)
    for n in oracle_ns:
        if not oracle.class_values_pseudofractal(generate(Family.PSEUDOFRACTAL_WEB, n)).is_ordered():
            bad.append(f"oracle n={n}")
    return Check(10, "gamma3 <= gamma2 <= gamma1 <= gamma0 for n in 3..64", not bad,
                 "ordered", bad or "ordered")


def check_oracle_vs_naive(level: str) -> Check:
    bad = {}
    for name, g in oracle_corpus():
        r = oracle.solve(oracle.SolveRequest(g))
        got = (r.min_size, r.num_minima)
        want = naive_minimum(g)
        if got != want:
            bad[name] = {"branch_and_bound": got, "naive": want}
    return Check(11, "branch and bound equals naive enumeration on 56 small graphs", not bad,
                 "equal", bad or "equal")


def check_pi1_readings(level: str) -> Check:
    """phi0 one step ahead under both readings of the undefined symbol.

    Steps from the oracle state at n = 3 and n = 4; the results are compared
    with each other and with an exact value at n + 1 (oracle for S_4 at the
    full level, boundary-state transfer otherwise and for S_5).
    """
    expected, got, diffs = {}, {}, []
    for n in (3, 4):
        if n == 4 and level != "full":
            state = transfer.sierpinski_state(4)
        else:
            state = oracle.sierpinski_state(generate(Family.SIERPINSKI, n))
        readings = {r: recursion.step_sierpinski(state, pi1=r).phi0 for r in recursion.PI1_READINGS}
        if n == 3 and level == "full":
            exact = oracle.sierpinski_state(generate(Family.SIERPINSKI, 4)).phi0
        else:
            exact = transfer.sierpinski_state(n + 1).phi0
        expected[n + 1] = exact
        got[n + 1] = readings
        if len(set(readings.values())) != 1:
            diffs.append(f"readings disagree at n={n + 1}: {readings}")
        if any(v != exact for v in readings.values()):
            diffs.append(f"phi0 at n={n + 1}: readings {readings} vs exact {exact}")
    return Check(12, "phi0 is the same under both readings of pi1 and matches exact values",
                 not diffs, expected, got, "; ".join(diffs))


CHECKS: tuple[Callable[[str], Check], ...] = (
    check_vertex_counts,
    check_builders_agree,
    check_web_seed,
    check_sierpinski_seed,
    check_domination_numbers,
    check_uniqueness,
    check_count_table,
    check_recurrence_table,
    check_closed_forms,
    check_ordering,
    check_oracle_vs_naive,
    check_pi1_readings,
)


def run_check(fn: Callable[[str], Check], level: str) -> Check:
    t0 = time.perf_counter()
    try:
        c = fn(level)
    except Exception as exc:  # a crash is a failed check, reported with its message
        idx = CHECKS.index(fn) + 1
        c = Check(idx, fn.__name__, False, None, None, f"{type(exc).__name__}: {exc}")
    c.seconds = time.perf_counter() - t0
    return c


@dataclass
class VerifyReport:
    level: str
    checks: list[Check] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def to_json(self) -> dict:
        return {
            "level": self.level,
            "passed": self.passed,
            "n_passed": sum(c.passed for c in self.checks),
            "n_checks": len(self.checks),
            "checks": [c.to_json() for c in self.checks],
        }


def run_all(level: str = "fast", only: set[int] | None = None) -> VerifyReport:
    if level not in LEVELS:
        raise ValueError(f"level must be one of {LEVELS}")
    report = VerifyReport(level)
    for i, fn in enumerate(CHECKS, start=1):
        if only and i not in only:
            continue
        report.checks.append(run_check(fn, level))
    return report
