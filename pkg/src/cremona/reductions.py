"""Dual complement, leaf deletion, root plucking and reduction certificates."""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Sequence

from .birational import masks_determinant
from .core import MonomialSet, bit, masks_canonical, masks_connected


def _require_square_free(F: MonomialSet) -> None:
    for m in F.members:
        for i, a in enumerate(m.exponents, start=1):
            if a > 1:
                raise ValueError(f"x{i} appears squared in {m}; not square-free")


def dual_masks(masks: Sequence[int], n: int) -> tuple[int, ...]:
    full = (1 << n) - 1
    return tuple(sorted(full ^ m for m in masks))


def drop_variable(mask: int, v: int, n: int) -> int:
    """Remove variable ``v`` and close the gap, keeping variable order."""
    low = n - v
    return ((mask >> (low + 1)) << low) | (mask & ((1 << low) - 1))


def incidence_of(masks: Sequence[int], v: int, n: int) -> int:
    b = bit(v, n)
    return sum(1 for m in masks if m & b)


def delete_leaf_masks(masks: Sequence[int], v: int, n: int) -> tuple[int, ...]:
    b = bit(v, n)
    if sum(1 for m in masks if m & b) != 1:
        raise ValueError(f"x{v} is not a leaf")
    return tuple(sorted(drop_variable(m, v, n) for m in masks if not m & b))


def pluck_root_masks(masks: Sequence[int], v: int, n: int) -> tuple[int, ...]:
    # S/v = (S^dual minus v)^dual
    if incidence_of(masks, v, n) != n - 1:
        raise ValueError(f"x{v} is not a root")
    return dual_masks(delete_leaf_masks(dual_masks(masks, n), v, n), n - 1)


def dual_complement(F: MonomialSet) -> MonomialSet:
    _require_square_free(F)
    if F.d > F.n - 1 or F.d < 1:
        raise ValueError(f"dual complement needs 1 <= d <= n-1, got d={F.d}")
    return MonomialSet.from_masks(dual_masks(F.masks, F.n), F.n)


def delete_leaf(F: MonomialSet, v: int) -> MonomialSet:
    """Drop leaf ``v`` together with the single member it divides."""
    if not 1 <= v <= F.n:
        raise ValueError(f"x{v} is not a variable of F")
    holders = [m for m in F.members if m.exponents[v - 1]]
    if len(holders) != 1:
        raise ValueError(f"x{v} is not a leaf (incidence degree {len(holders)})")
    if holders[0].exponents[v - 1] != 1:
        raise ValueError(f"x{v} appears squared in its member")
    rest = [m for m in F.members if not m.exponents[v - 1]]
    return MonomialSet(m.exponents[: v - 1] + m.exponents[v:] for m in rest)


def pluck_root(F: MonomialSet, v: int) -> MonomialSet:
    """Pluck root ``v``, computed through the dual: dualize, delete, dualize."""
    _require_square_free(F)
    if not 1 <= v <= F.n:
        raise ValueError(f"x{v} is not a variable of F")
    if incidence_of(F.masks, v, F.n) != F.n - 1:
        raise ValueError(f"x{v} is not a root")
    return dual_complement(delete_leaf(dual_complement(F), v))


def pluck_root_direct(F: MonomialSet, v: int) -> MonomialSet:
    """Cross-check path: divide the members through by ``v`` directly."""
    _require_square_free(F)
    holders = [m for m in F.members if m.exponents[v - 1]]
    if len(holders) != F.n - 1:
        raise ValueError(f"x{v} is not a root")
    return MonomialSet(m.exponents[: v - 1] + m.exponents[v:] for m in holders)


def attach_root(F: MonomialSet, extra: Sequence[int]) -> MonomialSet:
    """Inverse of plucking: cone ``F`` over a new last variable and add ``extra``.

    ``extra`` is an exponent vector in ``F.n + 1`` variables, of degree
    ``F.d + 1`` and not divisible by the new variable.
    """
    n = F.n + 1
    if len(extra) != n or extra[-1] != 0:
        raise ValueError("extra member must avoid the new variable")
    coned = [m.exponents + (1,) for m in F.members]
    return MonomialSet(coned + [tuple(extra)])


class StepKind(enum.Enum):
    DELETE_LEAF = "DELETE_LEAF"
    PLUCK_ROOT = "PLUCK_ROOT"
    DUALIZE = "DUALIZE"


class Terminal(enum.Enum):
    BASE_IDENTITY = "BASE_IDENTITY"
    BASE_INVOLUTION = "BASE_INVOLUTION"
    BASE_ODD_CYCLE = "BASE_ODD_CYCLE"
    DETERMINANT_VERDICT = "DETERMINANT_VERDICT"
    DISCONNECTED = "DISCONNECTED"


@dataclass(frozen=True)
class ReductionStep:
    kind: StepKind
    variable: int | None = None  # original index; None for DUALIZE

    def to_json(self) -> dict:
        return {"kind": self.kind.value, "variable": self.variable}


@dataclass(frozen=True)
class ReductionCertificate:
    steps: tuple[ReductionStep, ...]
    terminal: Terminal
    terminal_det: int | None
    cremona: bool
    terminal_set: MonomialSet | None = field(default=None, compare=False)

    def to_json(self) -> dict:
        return {
            "steps": [s.to_json() for s in self.steps],
            "terminal": self.terminal.value,
            "terminal_det": self.terminal_det,
            "cremona": self.cremona,
        }

    @classmethod
    def from_json(cls, data: dict) -> "ReductionCertificate":
        return cls(
            tuple(ReductionStep(StepKind(s["kind"]), s["variable"]) for s in data["steps"]),
            Terminal(data["terminal"]),
            data["terminal_det"],
            data["cremona"],
        )


def _reduce(masks: tuple[int, ...], n: int):
    """Greedy reduction on masks; returns steps, terminal, det, verdict, masks, n."""
    labels = list(range(1, n + 1))  # original index of each live variable
    steps: list[ReductionStep] = []
    while True:
        d = bin(masks[0]).count("1")
        if not masks_canonical(masks, n):
            # a zero row or an all-ones row in a d-stochastic matrix: det = 0
            return steps, Terminal.DETERMINANT_VERDICT, 0, False, masks, n
        if d >= 2 and not masks_connected(masks):
            return steps, Terminal.DISCONNECTED, None, False, masks, n
        degrees = [incidence_of(masks, v, n) for v in range(1, n + 1)]
        if d == 1:
            return steps, Terminal.BASE_IDENTITY, masks_determinant(masks, n), True, masks, n
        if d == 2 and all(a == 2 for a in degrees):
            det = masks_determinant(masks, n)
            if n % 2:
                return steps, Terminal.BASE_ODD_CYCLE, det, True, masks, n
            return steps, Terminal.DETERMINANT_VERDICT, det, False, masks, n
        if d == n - 1:
            return steps, Terminal.BASE_INVOLUTION, masks_determinant(masks, n), True, masks, n
        if 1 in degrees:
            v = degrees.index(1) + 1
            steps.append(ReductionStep(StepKind.DELETE_LEAF, labels[v - 1]))
            masks = delete_leaf_masks(masks, v, n)
        elif n - 1 in degrees:
            v = degrees.index(n - 1) + 1
            steps.append(ReductionStep(StepKind.PLUCK_ROOT, labels[v - 1]))
            masks = pluck_root_masks(masks, v, n)
        else:
            det = masks_determinant(masks, n)
            return steps, Terminal.DETERMINANT_VERDICT, det, abs(det) == d, masks, n
        del labels[v - 1]
        n -= 1


def reduce_masks(masks: Sequence[int], n: int) -> tuple[bool, Terminal, int | None]:
    """Verdict-only fast path used by exhaustive checks."""
    _, terminal, det, ok, _, _ = _reduce(tuple(sorted(masks)), n)
    return ok, terminal, det


def reduce_to_base(F: MonomialSet) -> ReductionCertificate:
    _require_square_free(F)
    if not masks_canonical(F.masks, F.n):
        raise ValueError("canonical restrictions fail")
    steps, terminal, det, ok, masks, n = _reduce(F.masks, F.n)
    return ReductionCertificate(
        tuple(steps), terminal, det, ok, MonomialSet.from_masks(masks, n)
    )


def replay(F: MonomialSet, certificate: ReductionCertificate) -> MonomialSet:
    """Re-apply the certificate's steps to ``F`` and return the terminal set."""
    labels = list(range(1, F.n + 1))
    G = F
    for step in certificate.steps:
        if step.kind is StepKind.DUALIZE:
            G = dual_complement(G)
            continue
        v = labels.index(step.variable) + 1
        if step.kind is StepKind.DELETE_LEAF:
            G = delete_leaf(G, v)
        else:
            G = pluck_root(G, v)
        del labels[v - 1]
    return G
