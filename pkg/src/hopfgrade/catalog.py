"""Named worked examples shared by the CLI, the suite and the tests."""

from __future__ import annotations

from .cohomology import FinAb
from .groups import Subgroup, builtin_group
from .yang_baxter import (
    BijCocycle,
    SymmetricSet,
    build_symmetric_set,
    certify,
    search_bijective_cocycles,
)

# key -> (group, invariant factors of A)
COCYCLE_EXAMPLES = {
    "trivial": ("Z1", ()),
    "Z2": ("Z2", (2,)),
    "Z4/Z2xZ2": ("Z4", (2, 2)),
    "Z4/Z4": ("Z4", (4,)),
    "S3/Z6": ("S3", (6,)),
}

# key -> (cocycle key, phi_S as a list of A-elements, or None for S = A)
SYMMETRIC_SET_EXAMPLES = {
    "trivial": ("trivial", [()]),
    "Z2": ("Z2", [(1,)]),
    "Z4/Z2xZ2": ("Z4/Z2xZ2", [(1, 0)]),
    "Z4/Z2xZ2-full": ("Z4/Z2xZ2", None),
    "Z4/Z4": ("Z4/Z4", [(1,)]),
    "S3/Z6": ("S3/Z6", [(1,)]),
}

# groups of order at most 24 checked against the subgroup-enumeration oracle
GRADING_CATALOG = [f"Z{n}" for n in range(1, 13)] + ["Z2xZ2", "D4", "Q8", "A4", "S4", "S3xZ2"]


def example_cocycle(key: str, index: int = 0) -> BijCocycle:
    """The index-th bijective 1-cocycle found for a named (G, A) pair."""
    group, factors = COCYCLE_EXAMPLES[key]
    found = search_bijective_cocycles(builtin_group(group), FinAb(factors))
    if not found:
        raise LookupError(f"no bijective 1-cocycle for {key}")
    return found[index]


def example_symmetric_set(key: str, certified: bool = True) -> SymmetricSet:
    ckey, phi = SYMMETRIC_SET_EXAMPLES[key]
    c = example_cocycle(ckey)
    if phi is None:
        phi = c.A.elements()
    X = build_symmetric_set(c, range(len(phi)), dict(enumerate(phi)))
    if certified:
        certify(X)
    return X


def shapiro_cases():
    """(name, G, A) for the two extension examples: Q8 over <i> and S3 over A3."""
    Q8 = builtin_group("Q8")
    S3 = builtin_group("S3")
    i_sub = Subgroup(Q8, Q8.closure([Q8.generators[0]]))
    a3 = next(g for g in S3.elements if S3.element_order(g) == 3)
    return [("Q8/<i>", Q8, i_sub), ("S3/A3", S3, Subgroup(S3, S3.closure([a3])))]
