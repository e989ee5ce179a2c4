"""Oracle-derived constants for generations below the recursion seeds (n < 3).

The shipped JSON is produced by ``derive_seed_fixtures`` (see
``scripts/derive_seed_fixtures.py``); the test suite re-derives it and
compares.
"""

from __future__ import annotations

import json
from dataclasses import asdict
from functools import lru_cache
from importlib import resources
from pathlib import Path

from domfractal.graph import Family

FIXTURE_FILE = "seed_fixtures.json"
GENERATING_COMMAND = "python scripts/derive_seed_fixtures.py"


def fixture_path() -> Path:
    return Path(str(resources.files("domfractal") / "data" / FIXTURE_FILE))


@lru_cache(maxsize=None)
def load_seed_fixtures(path: str | None = None) -> dict:
    p = Path(path) if path else fixture_path()
    return json.loads(p.read_text())


def derive_seed_fixtures(max_n: int = 2) -> dict:
    from domfractal import oracle
    from domfractal.generators import generate

    out: dict = {"generated_by": GENERATING_COMMAND}
    for family in (Family.PSEUDOFRACTAL_WEB, Family.SIERPINSKI):
        rows = {}
        for n in range(1, max_n + 1):
            g = generate(family, n)
            mds = oracle.minimum_dominating_sets(g)
            row = {"domination_number": mds.min_size, "num_mds": mds.num_minima}
            if family is Family.PSEUDOFRACTAL_WEB:
                row["class_vector"] = asdict(oracle.class_values_pseudofractal(g))
            else:
                row["state"] = asdict(oracle.sierpinski_state(g))
                row["counts"] = oracle.count_classes_sierpinski(g).to_json()
            rows[str(n)] = row
        out[family.value] = rows
    return out


def dump_fixtures(data: dict) -> str:
    return json.dumps(data, indent=2, sort_keys=True) + "\n"
