"""Named sets from the n=6 classification, written out member by member or
pinned down by their stabilizer generators.

Conventions: the four quadratic Cremona graphs on five vertices are the
triangle with two pendants at one corner, with pendants at two corners, with
a pendant path of length two, and the 5-cycle.
"""

from cremona.core import Monomial, MonomialSet, parse_monomial_set
from cremona.reductions import dual_complement


def lift(F: MonomialSet, extra: str, cone: bool = False) -> MonomialSet:
    """Embed ``F`` into one more variable (coned over x1 when ``cone``) and add ``extra``."""
    n = F.n + 1
    if cone:
        members = [Monomial((1,) + m.exponents) for m in F.members]
    else:
        members = [Monomial(m.exponents + (0,)) for m in F.members]
    exps = [0] * n
    for t in extra.split("x")[1:]:
        exps[int(t) - 1] = 1
    return MonomialSet(members + [Monomial(tuple(exps))])


# quadratic graphs on x2..x6, written in x1..x5 and shifted by the cone
TYPE2_BASES = {
    # stabilizer <(3,4), (5,6)>
    1: "x1x2 x1x3 x2x3 x1x4 x1x5",
    # stabilizer <(2,3)(5,6)>
    2: "x1x2 x1x3 x2x3 x1x4 x2x5",
    # stabilizer <(3,4)>
    3: "x1x2 x1x3 x2x3 x1x4 x4x5",
    # contains the rotation (2,3,4,5,6)
    4: "x1x2 x2x3 x3x4 x4x5 x1x5",
}
TYPE2_GENERATORS = {
    1: ["(3,4)", "(5,6)"],
    2: ["(2,3)(5,6)"],
    3: ["(3,4)"],
    4: ["(2,3,4,5,6)"],
}
TYPE2_LAST = {
    1: ["x2x3x4", "x2x3x5", "x2x5x6", "x3x4x5", "x3x5x6"],
    2: ["x2x3x4", "x2x3x5", "x2x4x5", "x2x4x6", "x2x5x6", "x4x5x6"],
    3: ["x2x3x4", "x2x3x5", "x2x3x6", "x2x5x6", "x3x4x5", "x3x4x6", "x3x5x6"],
    4: ["x2x3x4", "x2x3x5"],
}

# cubic sets in x1..x5, duals of these graphs
TYPE1_GRAPHS = {
    # dual stabilizer <(1,2), (3,4)>, x1 and x2 of incidence 4
    1: "x3x5 x4x5 x3x4 x1x5 x2x5",
    # dual stabilizer <(1,2)(4,5)>
    2: "x3x4 x3x5 x4x5 x1x4 x2x5",
    # dual stabilizer <(3,4)>, x1 of incidence 4
    3: "x2x3 x2x4 x3x4 x2x5 x1x5",
    # dual stabilizer contains (1,2,3,4,5)
    4: "x1x2 x2x3 x3x4 x4x5 x1x5",
}
TYPE1_GENERATORS = {
    1: ["(1,2)", "(3,4)"],
    2: ["(1,2)(4,5)"],
    3: ["(3,4)"],
    4: ["(1,2,3,4,5)"],
}
TYPE1_LAST = {
    1: ["x3x4", "x3x5"],
    2: ["x3x4", "x4x5"],
    3: ["x2x3", "x2x5", "x3x4", "x3x5"],
    4: ["x1x2", "x1x3"],
}


def type2_base(i: int) -> MonomialSet:
    return parse_monomial_set(TYPE2_BASES[i])


def type1_base(i: int) -> MonomialSet:
    return dual_complement(parse_monomial_set(TYPE1_GRAPHS[i]))


def type1_sets() -> list[MonomialSet]:
    return [lift(type1_base(i), m + "x6") for i in TYPE1_LAST for m in TYPE1_LAST[i]]


def type2_sets() -> list[MonomialSet]:
    return [lift(type2_base(i), m, cone=True) for i in TYPE2_LAST for m in TYPE2_LAST[i]]


# four cubics pairwise sharing at most one variable
MDC_BLOCK = ["x1x2x3", "x1x4x5", "x2x4x6", "x3x5x6"]

# same incidence sequence, different orbits
SAME_PROFILE_F = "x1x2,x2x3,x1x3,x1x4,x4x5,x5x6"
SAME_PROFILE_G = "x1x2,x2x3,x3x4,x4x5,x1x5,x1x6"

# bases of the size-4 cones {x1x2x3, x1x2x4, x1g1, x1g2}, as edges on x2..x6
TYPE3_CONE_BASES = {
    "C1": [(2, 3), (2, 4), (2, 5), (3, 6)],  # stabilizer <(4,5)>
    "C4": [(2, 3), (2, 4), (3, 4), (5, 6)],  # stabilizer <(2,3),(3,4),(2,4),(5,6)>
    "C5": [(2, 3), (2, 4), (3, 5), (4, 6)],  # stabilizer <(3,4)(5,6)>
}
TYPE3_CONE_GENERATORS = {
    "C1": ["(4,5)"],
    "C4": ["(2,3)", "(3,4)", "(2,4)", "(5,6)"],
    "C5": ["(3,4)(5,6)"],
}
# the remaining three 4-edge graphs on at most five vertices
TYPE3_DEAD_BASES = {
    "star": [(2, 3), (2, 4), (2, 5), (2, 6)],
    "paw": [(2, 3), (2, 4), (3, 4), (4, 5)],
    "square": [(2, 3), (2, 4), (3, 5), (4, 5)],
}
