"""Record engine-derived golden values used as regression anchors in tests/golden/.

These have no independent source; the tests only guard against drift.
"""

import argparse
import json
from pathlib import Path

from domfractal import counting, recursion


def goldens() -> dict[str, dict]:
    ev = recursion.evaluate_step(recursion.SIERPINSKI_TABLE, recursion.SIERPINSKI_SEED.as_env())
    cert = {k: list(v) for k, v in recursion.argmin_certificate(ev).items()}
    v8 = counting.sierpinski_counts(8)
    return {
        "sierpinski_certificate_n3.json": {"n": 3, "certificate": cert},
        "count_sierpinski_n8.json": {"n": 8, "method": "recurrence", "counts": v8.to_json()},
    }


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--dir", default=str(Path(__file__).resolve().parents[1] / "tests" / "golden"))
    args = ap.parse_args()
    out = Path(args.dir)
    out.mkdir(parents=True, exist_ok=True)
    for name, data in goldens().items():
        (out / name).write_text(json.dumps(data, indent=2, sort_keys=True) + "\n")
        print(f"wrote {out / name}")


if __name__ == "__main__":
    main()
