"""Compare the three unit-pair ranges of the weighted maj_d formula.

For each reading, count tableaux (n <= MAX_N, all d) where the weighted sum
disagrees with maj of the Psi^(d) image, and print the smallest disagreement.
"""

import argparse

from majd.stats import Reading, maj_d_transform, maj_d_weighted
from majd.tableau import enumerate_syt, partitions


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-n", type=int, default=7)
    args = ap.parse_args()

    cases = [(t, d) for n in range(1, args.max_n + 1) for shape in partitions(n)
             for t in enumerate_syt(shape) for d in range(1, n + 2)]
    for reading in Reading:
        bad = [(t, d) for t, d in cases if maj_d_weighted(t, d, reading)[0] != maj_d_transform(t, d)]
        line = f"reading {reading.value}: {len(bad)}/{len(cases)} mismatches"
        if bad:
            t, d = bad[0]
            line += (f", first {t} d={d}: weighted={maj_d_weighted(t, d, reading)[0]}"
                     f" transform={maj_d_transform(t, d)}")
        print(line)


if __name__ == "__main__":
    main()
