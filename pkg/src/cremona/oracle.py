"""Deliberately naive reference enumeration.

Shares nothing with the census path beyond the final conversion to mask keys:
monomials are exponent tuples, determinants come from Laplace expansion and
permutations from Heap's algorithm.
"""

from __future__ import annotations

from itertools import combinations


def cofactor_determinant(M: list[list[int]]) -> int:
    n = len(M)
    if n == 1:
        return M[0][0]
    if n == 2:
        return M[0][0] * M[1][1] - M[0][1] * M[1][0]
    total = 0
    for j in range(n):
        a = M[0][j]
        if a == 0:
            continue
        minor = [row[:j] + row[j + 1:] for row in M[1:]]
        total += (-1) ** j * a * cofactor_determinant(minor)
    return total


def heap_permutations(n: int):
    """Yield every permutation of range(n) as a tuple (Heap's algorithm)."""
    a = list(range(n))
    c = [0] * n
    yield tuple(a)
    i = 0
    while i < n:
        if c[i] < i:
            if i % 2 == 0:
                a[0], a[i] = a[i], a[0]
            else:
                a[c[i]], a[i] = a[i], a[c[i]]
            yield tuple(a)
            c[i] += 1
            i = 0
        else:
            c[i] = 0
            i += 1


def square_free_vectors(n: int, d: int) -> list[tuple[int, ...]]:
    out = []
    for support in combinations(range(n), d):
        out.append(tuple(1 if i in support else 0 for i in range(n)))
    return out


def _relabel(vectors, p):
    out = []
    for v in vectors:
        w = [0] * len(v)
        for i, a in enumerate(v):
            w[p[i]] = a
        out.append(tuple(w))
    return tuple(sorted(out))


def _vector_to_mask(v: tuple[int, ...]) -> int:
    m = 0
    for a in v:
        m = (m << 1) | a
    return m


def brute_force_oracle(n: int, d: int) -> set[tuple[int, ...]]:
    """Orbit keys of all square-free Cremona sets of degree d in n variables."""
    if n > 6:
        raise ValueError("the brute-force oracle is limited to n <= 6")
    perms = list(heap_permutations(n))
    seen: set[tuple[tuple[int, ...], ...]] = set()
    keys: set[tuple[int, ...]] = set()
    for cols in combinations(square_free_vectors(n, d), n):
        matrix = [[cols[j][i] for j in range(n)] for i in range(n)]
        if abs(cofactor_determinant(matrix)) != d:
            continue
        cand = tuple(sorted(cols))
        if cand in seen:
            continue
        images = {_relabel(cols, p) for p in perms}
        seen |= images
        least = min(images)
        keys.add(tuple(_vector_to_mask(v) for v in least))
    return keys
