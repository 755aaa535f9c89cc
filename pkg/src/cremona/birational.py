"""Determinantal birationality test and the degree-two structure theorem."""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from typing import Sequence

from .core import (
    LogMatrix,
    Monomial,
    MonomialSet,
    bit,
    is_cohesive,
    log_matrix,
    masks_connected,
    satisfies_canonical_restrictions,
)


def exact_determinant(A: LogMatrix | Sequence[Sequence[int]]) -> int:
    """Fraction-free (Bareiss) elimination over Python integers."""
    rows = [list(r) for r in (A.entries if isinstance(A, LogMatrix) else A)]
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise ValueError("determinant of a non-square matrix")
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if rows[k][k] == 0:
            for r in range(k + 1, n):
                if rows[r][k] != 0:
                    rows[k], rows[r] = rows[r], rows[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = rows[k][k]
        rk = rows[k]
        for i in range(k + 1, n):
            ri = rows[i]
            f = ri[k]
            for j in range(k + 1, n):
                ri[j] = (ri[j] * pivot - rk[j] * f) // prev
            ri[k] = 0
        prev = pivot
    return sign * rows[n - 1][n - 1]


def masks_determinant(masks: Sequence[int], n: int) -> int:
    """Determinant of the 0/1 log matrix whose columns are ``masks``."""
    return exact_determinant(
        [[(m >> (n - i)) & 1 for m in masks] for i in range(1, n + 1)]
    )


@dataclass(frozen=True)
class CremonaVerdict:
    is_cremona: bool
    determinant: int
    degree: int

    def __str__(self) -> str:
        head = "CREMONA" if self.is_cremona else "NOT CREMONA"
        return f"{head} det={self.determinant} d={self.degree}"


def is_cremona(F: MonomialSet) -> CremonaVerdict:
    det = exact_determinant(log_matrix(F))
    return CremonaVerdict(abs(det) == F.d, det, F.d)


def standard_involution(n: int) -> MonomialSet:
    if n < 3:
        raise ValueError("the standard involution needs n >= 3")
    return MonomialSet(
        Monomial(tuple(0 if i == j else 1 for i in range(n))) for j in range(n)
    )


def identity_set(n: int) -> MonomialSet:
    return MonomialSet(
        Monomial(tuple(1 if i == j else 0 for i in range(n))) for j in range(n)
    )


def cycle_set(n: int) -> MonomialSet:
    """Edges {1,2}, {2,3}, ..., {n,1} of the n-cycle as quadrics."""
    edges = [(i, i % n + 1) for i in range(1, n + 1)]
    return MonomialSet(Monomial.from_variables(e, n) for e in edges)


def cycle_incidence_matrix(n: int) -> list[list[int]]:
    # row i hits edges {i-1,i} and {i,i+1}
    return [[1 if j in (i, (i - 1) % n) else 0 for j in range(n)] for i in range(n)]


def cycle_determinant(n: int) -> int:
    if n < 3:
        raise ValueError("cycles need n >= 3")
    return 1 - (-1) ** n


class DegreeTwoKind(enum.Enum):
    UNIQUE_ODD_CYCLE = "UNIQUE_ODD_CYCLE"
    TREE_WITH_ONE_LOOP = "TREE_WITH_ONE_LOOP"
    NOT_CREMONA = "NOT_CREMONA"


@dataclass(frozen=True)
class DegreeTwoShape:
    kind: DegreeTwoKind
    # vertices of the unique cycle, in cyclic order; a loop is a 1-cycle
    witness: tuple[int, ...]


def _graph_edges(F: MonomialSet) -> list[tuple[int, int]]:
    edges = []
    for m in F.members:
        vs = [i for i, a in enumerate(m.exponents, start=1) for _ in range(a)]
        edges.append((vs[0], vs[1]))
    return edges


def classify_degree_two(F: MonomialSet) -> DegreeTwoShape:
    """Locate the unique cycle of the graph of a cohesive quadratic set.

    A connected graph with as many edges as vertices has cyclomatic number
    one, so there is exactly one cycle; a loop counts as a cycle of length 1.
    The set is Cremona iff that cycle has odd length.
    """
    if F.d != 2:
        raise ValueError(f"degree is {F.d}, expected 2")
    if not satisfies_canonical_restrictions(F):
        raise ValueError("canonical restrictions fail")
    if not is_cohesive(F):
        raise ValueError("set is not cohesive")

    edges = _graph_edges(F)
    alive = set(range(len(edges)))
    degree = {v: 0 for v in range(1, F.n + 1)}
    for a, b in edges:
        degree[a] += 1
        degree[b] += 1
    # peel pendant edges until only the cycle is left
    changed = True
    while changed:
        changed = False
        for e in list(alive):
            a, b = edges[e]
            if a != b and (degree[a] == 1 or degree[b] == 1):
                alive.discard(e)
                degree[a] -= 1
                degree[b] -= 1
                changed = True

    core = [edges[e] for e in alive]
    if len(core) == 1 and core[0][0] == core[0][1]:
        return DegreeTwoShape(DegreeTwoKind.TREE_WITH_ONE_LOOP, (core[0][0],))

    adj: dict[int, list[int]] = {}
    for a, b in core:
        adj.setdefault(a, []).append(b)
        adj.setdefault(b, []).append(a)
    start = min(adj)
    cycle = [start]
    prev, cur = None, start
    while True:
        nxt = next(v for v in adj[cur] if v != prev)
        if nxt == start:
            break
        cycle.append(nxt)
        prev, cur = cur, nxt
    kind = DegreeTwoKind.UNIQUE_ODD_CYCLE if len(cycle) % 2 else DegreeTwoKind.NOT_CREMONA
    return DegreeTwoShape(kind, tuple(cycle))


def quadratic_graph_sets(n: int):
    """Every connected graph on x1..xn with n edges, loops allowed, as a set.

    Only sets meeting the canonical restrictions are produced, so each one is
    a valid input to ``classify_degree_two``.
    """
    pairs = [(i, j) for i in range(1, n + 1) for j in range(i, n + 1)]
    support = [bit(i, n) | bit(j, n) for i, j in pairs]
    full = (1 << n) - 1
    for c in itertools.combinations(range(len(pairs)), n):
        masks = [support[k] for k in c]
        union, meet = 0, full
        for m in masks:
            union |= m
            meet &= m
        if union != full or meet or not masks_connected(masks):
            continue
        yield MonomialSet(Monomial.from_variables(pairs[k], n) for k in c)
