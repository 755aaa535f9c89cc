"""Monomial sets, log matrices and clutters.

A square-free monomial in ``n`` variables is carried as an ``n``-bit mask with
variable 1 in the most significant position, so integer order on masks agrees
with lexicographic order on exponent vectors.  General exponent vectors are
only needed for degree-2 sets containing squares (loops).
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

MAX_VARIABLES = 16


class ParseError(ValueError):
    """Bad monomial text; carries the offending token and its 1-based position."""

    def __init__(self, message: str, token: str, position: int):
        super().__init__(f"{message}: token {token!r} at position {position}")
        self.token = token
        self.position = position


def bit(i: int, n: int) -> int:
    """Mask of variable ``i`` (1-based) among ``n`` variables."""
    return 1 << (n - i)


def popcount(x: int) -> int:
    return bin(x).count("1")


def mask_to_exponents(mask: int, n: int) -> tuple[int, ...]:
    return tuple((mask >> (n - i)) & 1 for i in range(1, n + 1))


def exponents_to_mask(exponents: Sequence[int]) -> int:
    n = len(exponents)
    mask = 0
    for i, a in enumerate(exponents, start=1):
        if a > 1:
            raise ValueError(f"x{i} has exponent {a}; not square-free")
        if a:
            mask |= bit(i, n)
    return mask


def mask_variables(mask: int, n: int) -> list[int]:
    return [i for i in range(1, n + 1) if mask & bit(i, n)]


@dataclass(frozen=True, order=True)
class Monomial:
    """A monomial given by its log vector."""

    exponents: tuple[int, ...]

    def __post_init__(self):
        if any(a < 0 for a in self.exponents):
            raise ValueError("exponents must be natural numbers")

    @property
    def n(self) -> int:
        return len(self.exponents)

    @property
    def degree(self) -> int:
        return sum(self.exponents)

    @property
    def is_square_free(self) -> bool:
        return all(a <= 1 for a in self.exponents)

    @property
    def mask(self) -> int:
        return exponents_to_mask(self.exponents)

    @property
    def support(self) -> frozenset[int]:
        return frozenset(i for i, a in enumerate(self.exponents, start=1) if a)

    @classmethod
    def from_mask(cls, mask: int, n: int) -> "Monomial":
        return cls(mask_to_exponents(mask, n))

    @classmethod
    def from_variables(cls, variables: Iterable[int], n: int) -> "Monomial":
        exps = [0] * n
        for i in variables:
            exps[i - 1] += 1
        return cls(tuple(exps))

    def __str__(self) -> str:
        parts = []
        for i, a in enumerate(self.exponents, start=1):
            if a == 1:
                parts.append(f"x{i}")
            elif a > 1:
                parts.append(f"x{i}^{a}")
        return "".join(parts) or "1"


@dataclass(frozen=True)
class LogMatrix:
    """Rows index variables, columns index monomials."""

    entries: tuple[tuple[int, ...], ...]

    @property
    def size(self) -> int:
        return len(self.entries)

    def column_sums(self) -> list[int]:
        return [sum(col) for col in zip(*self.entries)]

    def row_sums(self) -> list[int]:
        return [sum(row) for row in self.entries]

    def is_stochastic(self, d: int) -> bool:
        return all(s == d for s in self.column_sums())

    def tolist(self) -> list[list[int]]:
        return [list(row) for row in self.entries]


@dataclass(frozen=True)
class MonomialSet:
    """An unordered set of ``n`` distinct degree-``d`` monomials in ``n`` variables.

    Members are kept sorted by exponent vector, which fixes the column order
    of the log matrix and hence the sign of its determinant.
    """

    members: tuple[Monomial, ...]

    def __init__(self, members: Iterable[Monomial | Sequence[int]]):
        ms = [m if isinstance(m, Monomial) else Monomial(tuple(m)) for m in members]
        if not ms:
            raise ValueError("a monomial set needs at least one member")
        n = len(ms)
        if n > MAX_VARIABLES:
            raise ValueError(f"n={n} exceeds the cap of {MAX_VARIABLES} variables")
        for m in ms:
            if m.n != n:
                raise ValueError(
                    f"monomial {m} lives in {m.n} variables, expected n={n}"
                )
        degrees = {m.degree for m in ms}
        if len(degrees) != 1:
            raise ValueError(f"members have mixed degrees {sorted(degrees)}")
        if len(set(ms)) != n:
            dup = next(str(m) for m in ms if ms.count(m) > 1)
            raise ValueError(f"duplicate monomial {dup}")
        object.__setattr__(self, "members", tuple(sorted(ms)))

    @classmethod
    def from_masks(cls, masks: Iterable[int], n: int) -> "MonomialSet":
        return cls(Monomial.from_mask(m, n) for m in masks)

    @classmethod
    def parse(cls, text: str) -> "MonomialSet":
        return parse_monomial_set(text)

    @property
    def n(self) -> int:
        return len(self.members)

    @property
    def d(self) -> int:
        return self.members[0].degree

    @property
    def is_square_free(self) -> bool:
        return all(m.is_square_free for m in self.members)

    @cached_property
    def masks(self) -> tuple[int, ...]:
        """Sorted member masks; only defined for square-free sets."""
        if not self.is_square_free:
            raise ValueError("masks are only defined for square-free sets")
        return tuple(m.mask for m in self.members)

    def __str__(self) -> str:
        return format_monomial_set(self)

    def __repr__(self) -> str:
        return f"MonomialSet({format_monomial_set(self)!r})"


def log_matrix(F: MonomialSet) -> LogMatrix:
    n = F.n
    return LogMatrix(
        tuple(tuple(m.exponents[i] for m in F.members) for i in range(n))
    )


def incidence_degrees(F: MonomialSet) -> list[int]:
    """Number of members divisible by each variable, in variable order."""
    return [sum(1 for m in F.members if m.exponents[i]) for i in range(F.n)]


def incidence_profile(F: MonomialSet) -> tuple[int, ...]:
    return tuple(sorted(incidence_degrees(F), reverse=True))


def satisfies_canonical_restrictions(F: MonomialSet) -> bool:
    return all(1 <= a <= F.n - 1 for a in incidence_degrees(F))


def masks_canonical(masks: Sequence[int], n: int) -> bool:
    """Bitmask form of the canonical restrictions."""
    union = 0
    inter = (1 << n) - 1
    for m in masks:
        union |= m
        inter &= m
    return union == (1 << n) - 1 and inter == 0


def masks_connected(masks: Sequence[int]) -> bool:
    """Connectivity of the variable/member incidence graph, as masks."""
    if not masks:
        return True
    reach = masks[0]
    pending = list(masks[1:])
    grew = True
    while pending and grew:
        grew = False
        rest = []
        for m in pending:
            if m & reach:
                reach |= m
                grew = True
            else:
                rest.append(m)
        pending = rest
    return not pending


def is_cohesive(F: MonomialSet) -> bool:
    supports = [sum(bit(i, F.n) for i in m.support) for m in F.members]
    return masks_connected(supports)


@dataclass(frozen=True)
class Clutter:
    """A uniform clutter: vertex set plus ``d``-element edges."""

    vertices: frozenset[int]
    edges: frozenset[frozenset[int]]

    def __post_init__(self):
        sizes = {len(e) for e in self.edges}
        if len(sizes) > 1:
            raise ValueError(f"edges of mixed sizes {sorted(sizes)}")
        for e in self.edges:
            if not e <= self.vertices:
                raise ValueError(f"edge {sorted(e)} leaves the vertex set")

    @property
    def uniformity(self) -> int:
        return len(next(iter(self.edges))) if self.edges else 0

    def is_sperner(self) -> bool:
        return not any(a < b for a in self.edges for b in self.edges)

    def sorted_edges(self) -> list[tuple[int, ...]]:
        return sorted(tuple(sorted(e)) for e in self.edges)


def to_clutter(F: MonomialSet) -> Clutter:
    for m in F.members:
        for i, a in enumerate(m.exponents, start=1):
            if a > 1:
                raise ValueError(f"x{i} appears squared in {m}; not square-free")
    return Clutter(
        frozenset(range(1, F.n + 1)),
        frozenset(m.support for m in F.members),
    )


def from_clutter(S: Clutter) -> MonomialSet:
    n = len(S.vertices)
    if len(S.edges) != n:
        raise ValueError(f"clutter has {len(S.edges)} edges on {n} vertices")
    if S.vertices != frozenset(range(1, n + 1)):
        raise ValueError("clutter vertices must be 1..n")
    return MonomialSet(Monomial.from_variables(e, n) for e in S.edges)


# text format: "x1x2x3, x1^2 x2x4"

_TOKEN = re.compile(r"[^\s,]+")
_FACTOR = re.compile(r"x(\d+)(?:\^(\d+))?")


def parse_monomial_tokens(text: str) -> list[tuple[str, int, dict[int, int]]]:
    out = []
    for match in _TOKEN.finditer(text):
        token = match.group()
        pos = match.start() + 1
        exps: dict[int, int] = {}
        at = 0
        while at < len(token):
            f = _FACTOR.match(token, at)
            if f is None:
                raise ParseError("expected x<i> or x<i>^<e>", token, pos + at)
            i = int(f.group(1))
            e = int(f.group(2)) if f.group(2) is not None else 1
            if i < 1:
                raise ParseError("variable indices start at 1", token, pos + at)
            if e < 1:
                raise ParseError("exponent must be positive", token, pos + at)
            exps[i] = exps.get(i, 0) + e
            at = f.end()
        out.append((token, pos, exps))
    return out


def parse_monomial_set(text: str, n: int | None = None) -> MonomialSet:
    """Parse whitespace/comma separated monomials; ``n`` defaults to their count."""
    tokens = parse_monomial_tokens(text)
    if not tokens:
        raise ParseError("empty monomial set", "", 1)
    if n is None:
        n = len(tokens)
    monomials = []
    for token, pos, exps in tokens:
        top = max(exps)
        if top > n:
            raise ParseError(f"variable x{top} exceeds n={n}", token, pos)
        monomials.append(
            Monomial(tuple(exps.get(i, 0) for i in range(1, n + 1)))
        )
    return MonomialSet(monomials)


def format_monomial_set(F: MonomialSet, sep: str = ", ") -> str:
    return sep.join(str(m) for m in F.members)
