"""Print the published count table next to the recurrence, the transfer and the oracle."""

import argparse

from domfractal import counting, oracle, transfer
from domfractal.generators import generate
from domfractal.graph import Family
from domfractal.verify import PUBLISHED_COUNTS


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n-max", type=int, default=6)
    ap.add_argument("--oracle-n-max", type=int, default=4, help="largest n solved by branch and bound")
    args = ap.parse_args()

    for n in range(1, args.n_max + 1):
        rows = {"table": PUBLISHED_COUNTS.get(n)}
        rows["recurrence"] = counting.sierpinski_counts(n).as_tuple()
        rows["transfer"] = transfer.sierpinski_counts(n).as_tuple()
        if n <= args.oracle_n_max:
            rows["oracle"] = oracle.count_classes_sierpinski(generate(Family.SIERPINSKI, n)).as_tuple()
        print(f"n={n}")
        for name, vals in rows.items():
            if vals is None:
                continue
            flag = "" if vals == rows["transfer"] else "   *"
            print(f"  {name:<10} " + "  ".join(f"{k}={v}" for k, v in zip("abcde", vals)) + flag)


if __name__ == "__main__":
    main()
