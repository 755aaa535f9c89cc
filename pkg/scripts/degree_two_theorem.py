"""Exhaustive check of the degree-two structure theorem.

For every connected graph with n vertices and n edges (loops allowed,
canonical restrictions imposed) compare the cycle classification with the
determinant test. Pass the largest n as the only argument (default 7).
"""

import sys
import time
from collections import Counter

from cremona.birational import (
    DegreeTwoKind,
    classify_degree_two,
    exact_determinant,
    quadratic_graph_sets,
)
from cremona.core import log_matrix


def main() -> int:
    top = int(sys.argv[1]) if len(sys.argv) > 1 else 7
    bad = 0
    for n in range(2, top + 1):
        t = time.perf_counter()
        kinds = Counter()
        for F in quadratic_graph_sets(n):
            kind = classify_degree_two(F).kind
            kinds[kind.value] += 1
            if (kind is not DegreeTwoKind.NOT_CREMONA) != (abs(exact_determinant(log_matrix(F))) == 2):
                bad += 1
                print(f"  disagreement: {F}")
        print(f"n={n} graphs={sum(kinds.values())} {dict(sorted(kinds.items()))} "
              f"{time.perf_counter() - t:.1f}s")
    print("all agree" if not bad else f"{bad} disagreements")
    return 1 if bad else 0


if __name__ == "__main__":
    sys.exit(main())
