"""Action of S_n on monomial sets: canonical forms, stabilizers, orbits, cones."""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

from .core import Clutter, Monomial, MonomialSet, bit

_TABLE_LIMIT = 7  # precompute mask images for every permutation up to this n


@dataclass(frozen=True)
class Permutation:
    """A bijection of {1..n}; ``images[i-1]`` is the image of ``i``."""

    images: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.images) != list(range(1, len(self.images) + 1)):
            raise ValueError(f"{self.images} is not a permutation of 1..n")

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def __mul__(self, other: "Permutation") -> "Permutation":
        # (self * other)(i) = self(other(i))
        return Permutation(tuple(self.images[j - 1] for j in other.images))

    def inverse(self) -> "Permutation":
        inv = [0] * self.n
        for i, j in enumerate(self.images, start=1):
            inv[j - 1] = i
        return Permutation(tuple(inv))

    def order(self) -> int:
        k, p, e = 1, self, identity(self.n)
        while p != e:
            p, k = p * self, k + 1
        return k

    def is_identity(self) -> bool:
        return all(j == i for i, j in enumerate(self.images, start=1))

    @classmethod
    def from_cycles(cls, text: str, n: int) -> "Permutation":
        """Parse cycle notation such as ``(1,2)(3,4)``; ``()`` is the identity."""
        images = list(range(1, n + 1))
        for cycle in re.findall(r"\(([^()]*)\)", text):
            pts = [int(t) for t in re.split(r"[\s,]+", cycle.strip()) if t]
            for a, b in zip(pts, pts[1:] + pts[:1]):
                images[a - 1] = b
        return cls(tuple(images))

    def cycles(self) -> str:
        seen, out = set(), []
        for i in range(1, self.n + 1):
            if i in seen or self(i) == i:
                continue
            cyc, j = [i], self(i)
            seen.add(i)
            while j != i:
                seen.add(j)
                cyc.append(j)
                j = self(j)
            out.append("(" + ",".join(map(str, cyc)) + ")")
        return "".join(out) or "()"

    def __str__(self) -> str:
        return self.cycles()


def identity(n: int) -> Permutation:
    return Permutation(tuple(range(1, n + 1)))


def permute_mask(mask: int, images: Sequence[int], n: int) -> int:
    out = 0
    for i in range(1, n + 1):
        if mask & bit(i, n):
            out |= bit(images[i - 1], n)
    return out


@lru_cache(maxsize=None)
def _perm_tables(n: int) -> tuple[tuple[tuple[int, ...], tuple[int, ...]], ...]:
    """(images, mask-image table) for every permutation of n letters."""
    out = []
    for images in itertools.permutations(range(1, n + 1)):
        out.append((images, tuple(permute_mask(m, images, n) for m in range(1 << n))))
    return tuple(out)


def _images_iter(n: int):
    if n <= _TABLE_LIMIT:
        return _perm_tables(n)
    return (
        (p, None) for p in itertools.permutations(range(1, n + 1))
    )


def _apply(masks: Sequence[int], images, table, n: int) -> tuple[int, ...]:
    if table is not None:
        return tuple(sorted(table[m] for m in masks))
    return tuple(sorted(permute_mask(m, images, n) for m in masks))


def act(sigma: Permutation, F: MonomialSet) -> MonomialSet:
    """Send variable ``i`` to ``sigma(i)`` in every member."""
    if sigma.n != F.n:
        raise ValueError(f"permutation on {sigma.n} letters acting on n={F.n}")
    members = []
    for m in F.members:
        exps = [0] * F.n
        for i, a in enumerate(m.exponents, start=1):
            exps[sigma(i) - 1] = a
        members.append(Monomial(tuple(exps)))
    return MonomialSet(members)


def act_masks(sigma: Permutation, masks: Sequence[int], n: int) -> tuple[int, ...]:
    return tuple(sorted(permute_mask(m, sigma.images, n) for m in masks))


@dataclass(frozen=True, order=True)
class CanonicalForm:
    """Lexicographically least sorted mask tuple over all relabelings."""

    n: int
    key: tuple[int, ...]

    def to_set(self) -> MonomialSet:
        return MonomialSet.from_masks(self.key, self.n)

    def __str__(self) -> str:
        return str(self.to_set()) if len(self.key) == self.n else repr(self.key)


def canonical_key(masks: Sequence[int], n: int) -> tuple[tuple[int, ...], Permutation]:
    """Minimal image of ``masks`` under S_n and a permutation attaining it."""
    best = None
    best_images = None
    for images, table in _images_iter(n):
        img = _apply(masks, images, table, n)
        if best is None or img < best:
            best, best_images = img, images
    return best, Permutation(tuple(best_images))


def canonical_form(F: MonomialSet) -> CanonicalForm:
    if F.n > 10:
        raise ValueError("canonical forms are computed by exhaustion; n <= 10")
    return CanonicalForm(F.n, canonical_key(F.masks, F.n)[0])


def orbit_masks(masks: Sequence[int], n: int) -> set[tuple[int, ...]]:
    return {_apply(masks, images, table, n) for images, table in _images_iter(n)}


def orbit(F: MonomialSet) -> set[tuple[int, ...]]:
    return orbit_masks(F.masks, F.n)


def stabilizer_masks(masks: Sequence[int], n: int) -> list[Permutation]:
    target = tuple(sorted(masks))
    return [
        Permutation(tuple(images))
        for images, table in _images_iter(n)
        if _apply(masks, images, table, n) == target
    ]


def stabilizer(F: MonomialSet) -> list[Permutation]:
    if F.n > 10:
        raise ValueError("stabilizers are computed by exhaustion; n <= 10")
    if F.is_square_free:
        return stabilizer_masks(F.masks, F.n)
    return [
        Permutation(tuple(p))
        for p in itertools.permutations(range(1, F.n + 1))
        if act(Permutation(tuple(p)), F) == F
    ]


def generated_group(generators: Iterable[Permutation], n: int) -> set[Permutation]:
    """Closure of ``generators`` under composition."""
    e = identity(n)
    group = {e}
    frontier = [e]
    gens = list(generators)
    while frontier:
        nxt = []
        for g in frontier:
            for s in gens:
                h = s * g
                if h not in group:
                    group.add(h)
                    nxt.append(h)
        frontier = nxt
    return group


def isomorphism_witness(F: MonomialSet, G: MonomialSet) -> Permutation | None:
    """A permutation carrying ``F`` onto ``G``, or None if they are not isomorphic."""
    if F.n != G.n or F.d != G.d:
        return None
    kf, pf = canonical_key(F.masks, F.n)
    kg, pg = canonical_key(G.masks, G.n)
    if kf != kg:
        return None
    return pg.inverse() * pf


def monomial_masks(n: int, d: int) -> list[int]:
    """All square-free degree-d masks in n variables, ascending."""
    return sorted(
        sum(bit(i, n) for i in c) for c in itertools.combinations(range(1, n + 1), d)
    )


def extend_orbits(reps: Sequence[CanonicalForm], n: int, d: int) -> list[CanonicalForm]:
    """Orbit representatives of (k+1)-subsets obtained by adding one monomial.

    Every (k+1)-orbit contains a set of the form ``rep + {f}``, so canonicalizing
    all such extensions and discarding repeats lists each orbit once.
    """
    universe = monomial_masks(n, d)
    seen: set[tuple[int, ...]] = set()
    out = []
    for rep in reps:
        for f in universe:
            if f in rep.key:
                continue
            cand = tuple(sorted(rep.key + (f,)))
            if cand in seen:
                continue
            key, _ = canonical_key(cand, n)
            seen |= orbit_masks(key, n)
            out.append(CanonicalForm(n, key))
    return sorted(out)


def orbit_representatives(n: int, d: int, k: int) -> list[CanonicalForm]:
    reps = [CanonicalForm(n, ())]
    for _ in range(k):
        reps = extend_orbits(reps, n, d)
    return reps


@dataclass(frozen=True)
class Cone:
    apex: int
    members: tuple[int, ...]  # indices into F.members
    base: Clutter
    maximal: bool


@dataclass(frozen=True)
class ConeDecomposition:
    cones: tuple[Cone, ...]

    @property
    def maximal(self) -> list[Cone]:
        return [c for c in self.cones if c.maximal]


def maximal_cones(F: MonomialSet) -> ConeDecomposition:
    masks = F.masks
    n = F.n
    groups = []
    for v in range(1, n + 1):
        idx = tuple(j for j, m in enumerate(masks) if m & bit(v, n))
        if idx:
            groups.append((v, idx))
    top = max(len(idx) for _, idx in groups)
    cones = []
    for v, idx in groups:
        rest = frozenset(range(1, n + 1)) - {v}
        edges = frozenset(F.members[j].support - {v} for j in idx)
        cones.append(Cone(v, idx, Clutter(rest, edges), len(idx) == top))
    return ConeDecomposition(tuple(cones))


def cone_signature(F: MonomialSet) -> tuple[tuple[int, ...], ...]:
    """Sorted orbit keys of the maximal cones, each taken as a subset of F."""
    sig = []
    for c in maximal_cones(F).maximal:
        sub = tuple(F.masks[j] for j in c.members)
        sig.append(canonical_key(sub, F.n)[0])
    return tuple(sorted(sig))
