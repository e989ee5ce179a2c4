"""Exact boundary-state transfer for both families, valid at any generation.

A generation-n graph is summarised by a table indexed by the states of its
three boundary vertices:

    I  in the set
    D  not in the set, dominated by a chosen neighbour inside this graph
    U  not in the set, no neighbour inside this graph is chosen

Each entry holds (minimum size, number of sets of that size) over vertex sets
dominating every non-boundary vertex and realising exactly that boundary
state.  Generation n+1 glues three copies together at the six merge slots, so
the table for n+1 follows from the table for n by enumeration of 27^3 state
combinations.  Nothing here depends on the min-list recursions or the counting
polynomials, which makes it an independent check on both beyond the reach of
the branch-and-bound oracle.
"""

from __future__ import annotations

import itertools
from functools import lru_cache
from typing import Callable

from domfractal.counting import CountVector
from domfractal.generators import PSEUDOFRACTAL_IDENTIFICATION, SIERPINSKI_IDENTIFICATION
from domfractal.graph import Family
from domfractal.recursion import ClassVector, SierpinskiState

IN, DOM, UNDOM = "I", "D", "U"
STATES = (IN, DOM, UNDOM)

State = tuple[str, str, str]
Table = dict[State, tuple[int, int]]

_IDENTIFICATION = {
    Family.PSEUDOFRACTAL_WEB: PSEUDOFRACTAL_IDENTIFICATION,
    Family.SIERPINSKI: SIERPINSKI_IDENTIFICATION,
}


def triangle_table() -> Table:
    table = {}
    for st in itertools.product(STATES, repeat=3):
        chosen = [k for k in range(3) if st[k] == IN]
        consistent = all(
            (st[k] == DOM) == any(j != k for j in chosen) for k in range(3) if st[k] != IN
        )
        if consistent:
            table[st] = (len(chosen), 1)
    return table


def merge_tables(table: Table, identification, counts: bool = True) -> Table:
    """Glue three copies; slots 0-2 become the new boundary, 3-5 are interior.

    With ``counts=False`` every count is pinned to 1.  Sizes stay exact and the
    integers stay small, which matters because the counts have roughly 3^n digits.
    """
    out: Table = {}
    entries = list(table.items())
    for combo in itertools.product(entries, repeat=3):
        seen: dict[int, list[str]] = {}
        for (st, _), slots in zip(combo, identification):
            for slot, s in zip(slots, st):
                seen.setdefault(slot, []).append(s)
        merged = {}
        overlap = 0
        ok = True
        for slot, states in seen.items():
            n_in = states.count(IN)
            if n_in == len(states):
                merged[slot] = IN
                overlap += n_in - 1
            elif n_in:
                ok = False
                break
            else:
                merged[slot] = DOM if DOM in states else UNDOM
                if slot >= 3 and merged[slot] == UNDOM:
                    ok = False
                    break
        if not ok:
            continue
        size = sum(v[0] for _, v in combo) - overlap
        count = combo[0][1][1] * combo[1][1][1] * combo[2][1][1] if counts else 1
        key = (merged[0], merged[1], merged[2])
        old = out.get(key)
        if old is None or size < old[0]:
            out[key] = (size, count)
        elif size == old[0] and counts:
            out[key] = (size, old[1] + count)
    return out


@lru_cache(maxsize=None)
def _table(family: Family, n: int, counts: bool) -> tuple:
    if n == 1:
        return tuple(sorted(triangle_table().items()))
    prev = dict(_table(family, n - 1, counts))
    return tuple(sorted(merge_tables(prev, _IDENTIFICATION[family], counts).items()))


def boundary_table(family, n: int, counts: bool = True) -> Table:
    family = Family(family)
    if n < 1:
        raise ValueError("n must be >= 1")
    # Build bottom-up so the lru_cache never recurses deeply.
    for k in range(1, n):
        _table(family, k, counts)
    return dict(_table(family, n, counts))


def query(table: Table, pred: Callable[[State], bool]) -> tuple[int | None, int]:
    """(minimum size, count at that size) over the states matching ``pred``."""
    best, count = None, 0
    for st, (size, c) in table.items():
        if not pred(st):
            continue
        if best is None or size < best:
            best, count = size, 0
        if size == best:
            count += c
    return best, count


def _exactly(k: int, positions=(0, 1, 2)):
    def pred(st):
        return all(st[i] != UNDOM for i in positions) and sum(st[i] == IN for i in positions) == k
    return pred


def _removed(n_removed: int, k: int):
    rest = tuple(range(n_removed, 3))
    inner = _exactly(k, rest)

    def pred(st):
        return all(st[i] == UNDOM for i in range(n_removed)) and inner(st)
    return pred


# Component name -> boundary-state predicate.  Removing an outmost vertex and
# banning its neighbours is the same as requiring state U at that corner.
CLASS_PREDICATES = {
    **{f"gamma{k}": _exactly(k) for k in range(4)},
    **{f"phi{i}": _removed(1, i) for i in range(3)},
    **{f"xi{j}": _removed(2, j) for j in range(2)},
    "eta": _removed(3, 0),
}

COUNT_PREDICATES = {
    "b": CLASS_PREDICATES["phi0"],
    "c": CLASS_PREDICATES["xi0"],
    "d": CLASS_PREDICATES["eta"],
    "e": CLASS_PREDICATES["phi2"],
}


def _no_undominated(st: State) -> bool:
    return UNDOM not in st


def class_vector(n: int) -> ClassVector:
    t = boundary_table(Family.PSEUDOFRACTAL_WEB, n, counts=False)
    return ClassVector(*(query(t, CLASS_PREDICATES[f"gamma{k}"])[0] for k in range(4)))


def sierpinski_state(n: int) -> SierpinskiState:
    t = boundary_table(Family.SIERPINSKI, n, counts=False)
    return SierpinskiState(*(query(t, p)[0] for p in CLASS_PREDICATES.values()))


def sierpinski_counts(n: int) -> CountVector:
    t = boundary_table(Family.SIERPINSKI, n)
    a = query(t, _no_undominated)[1]
    rest = [query(t, COUNT_PREDICATES[k])[1] for k in "bcde"]
    return CountVector(a, *rest, n=n)


def domination(family, n: int) -> tuple[int, int]:
    """(domination number, number of minimum dominating sets)."""
    return query(boundary_table(family, n), _no_undominated)


def domination_number(family, n: int) -> int:
    return query(boundary_table(family, n, counts=False), _no_undominated)[0]
