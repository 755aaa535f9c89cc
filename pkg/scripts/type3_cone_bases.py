"""Cubic sets in six variables built on a size-4 cone.

Every 4-edge graph on x2..x6, up to relabeling, is used as the base of a
cone with apex x1. The script counts Cremona completions by two monomials
avoiding x1, and how many of them have neither a leaf nor a root, up to the
stabilizer of the cone and up to full relabeling.
"""

import itertools

from cremona.birational import masks_determinant
from cremona.core import MonomialSet, bit, incidence_degrees
from cremona.symmetry import act_masks, canonical_key, monomial_masks, stabilizer_masks

N = 6


def base_graphs():
    pairs = list(itertools.combinations(range(2, N + 1), 2))
    seen, out = set(), []
    for edges in itertools.combinations(pairs, 4):
        cone = tuple(sorted(bit(1, N) | bit(a, N) | bit(b, N) for a, b in edges))
        key = canonical_key(cone, N)[0]
        if key not in seen:
            seen.add(key)
            out.append((edges, cone))
    return out


def main() -> None:
    rest = [m for m in monomial_masks(N, 3) if not m & bit(1, N)]
    union = set()
    for edges, cone in base_graphs():
        group = stabilizer_masks(cone, N)
        cremona, type3 = [], []
        for pair in itertools.combinations(rest, 2):
            masks = tuple(sorted(cone + pair))
            if abs(masks_determinant(masks, N)) != 3:
                continue
            cremona.append(masks)
            degs = incidence_degrees(MonomialSet.from_masks(masks, N))
            if 1 not in degs and 5 not in degs:
                type3.append(masks)
        local = {min(act_masks(g, m, N) for g in group) for m in type3}
        glob = {canonical_key(m, N)[0] for m in type3}
        union |= glob
        label = " ".join(f"x{a}x{b}" for a, b in edges)
        print(f"base {label:<24} |stab|={len(group):<3} cremona={len(cremona):<3} "
              f"type3 up to stab={len(local):<2} up to S6={len(glob)}")
    print(f"distinct orbits with no leaf and no root: {len(union)}")


if __name__ == "__main__":
    main()
