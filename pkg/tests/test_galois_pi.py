from fractions import Fraction

import pytest

from hopfgrade.algebra import (
    BaseField,
    group_algebra,
    matrix_algebra,
    truncated_polynomial_algebra,
)
from hopfgrade.catalog import example_cocycle
from hopfgrade.galois_pi import (
    Bounds,
    NotFreeOverFixed,
    Unsupported,
    action_from_generators,
    binary_tetrahedral_action,
    binary_tetrahedral_group,
    block_algebra,
    canonical_map_check,
    d_star_algebra,
    fixed_subalgebra,
    fixed_subalgebra_is_subalgebra,
    gamma_perm_group,
    harness_trial,
    isotypic_multiplicities,
    pi_bound_check,
    rational_quaternions,
    subalgebra_from_generators,
    subalgebra_monotonicity_harness,
    torus_action,
)
from hopfgrade.groups import builtin_group, character_degrees


def F(rows):
    return [[Fraction(x) for x in r] for r in rows]


def brute_force_class_count(G):
    seen, classes = set(), 0
    for a in G.elements:
        if a in seen:
            continue
        classes += 1
        seen |= {G.mul(G.mul(g, a), G.inv(g)) for g in G.elements}
    return classes


# -- actions and fixed subalgebras ------------------------------------------------------

@pytest.mark.parametrize("n", [1, 2, 3])
def test_torus_actions_are_faithful_automorphisms(n):
    act = torus_action(n)
    assert act.violation() is None and act.is_faithful()
    fixed = fixed_subalgebra(act)
    assert len(fixed) == 1 and fixed_subalgebra_is_subalgebra(act, fixed)


def test_unknown_torus_mode():
    with pytest.raises(ValueError):
        torus_action(2, "diagonal")


def test_rational_quaternions_and_2t():
    D = rational_quaternions()
    assert D.associativity_violation() is None and D.unit_violation() is None
    G = binary_tetrahedral_group()
    assert G.order == 24 and G.check_associative() is None
    orders = sorted(G.element_order(g) for g in G.elements)
    assert orders.count(1) == 1 and orders.count(2) == 1 and max(orders) == 6
    act = binary_tetrahedral_action()
    assert act.violation() is None
    assert not act.is_faithful()  # -1 acts trivially by conjugation
    assert len(fixed_subalgebra(act)) == 1


# -- canonical map ------------------------------------------------------------------------

@pytest.mark.parametrize("n", [1, 2, 3])
def test_canonical_map_bijective_for_torus(n):
    rep = canonical_map_check(torus_action(n), seed=0)
    assert rep.bijective
    assert rep.dim_over_fixed == rep.group_order == n * n
    assert rep.rank == rep.rows == rep.cols == n ** 4


def test_canonical_map_for_x_only_action():
    rep = canonical_map_check(torus_action(2, "x"))
    assert rep.bijective and rep.fixed_dim == 2 and rep.dim_over_fixed == 2


def test_canonical_map_fails_for_binary_tetrahedral():
    rep = canonical_map_check(binary_tetrahedral_action())
    assert not rep.bijective
    assert (rep.dim_over_fixed, rep.group_order) == (4, 24)
    assert (rep.rows, rep.cols, rep.rank) == (96, 16, 16)
    assert rep.method == "exact"


def test_canonical_map_seed_independent():
    a = canonical_map_check(torus_action(2), seed=0)
    b = canonical_map_check(torus_action(2), seed=5)
    assert a.rank == b.rank and a.bijective == b.bijective


def test_not_free_over_fixed_subalgebra():
    # Z2 swapping two of three factors of QQ x QQ x QQ: the fixed part QQ x QQ acts with ranks 2 and 1
    A = block_algebra([1, 1, 1])
    act = action_from_generators(builtin_group("Z2"), A, [F([[0, 1, 0], [1, 0, 0], [0, 0, 1]])])
    assert act.violation() is None
    with pytest.raises(NotFreeOverFixed):
        canonical_map_check(act)


# -- isotypic parts ------------------------------------------------------------------------

@pytest.mark.parametrize("n", [1, 2, 3])
def test_isotypic_multiplicities_are_one(n):
    iso = isotypic_multiplicities(torus_action(n))
    assert iso["multiplicities"] == [1] * (n * n) and iso["regular"]
    assert iso["fixed_dim"] == 1


def test_isotypic_x_only():
    iso = isotypic_multiplicities(torus_action(2, "x"))
    assert iso["dims"] == [2, 2] and iso["fixed_dim"] == 2
    assert iso["multiplicities"] == [1, 1]


def test_isotypic_rejects_nonabelian():
    with pytest.raises(Unsupported):
        isotypic_multiplicities(binary_tetrahedral_action())


# -- d_* ------------------------------------------------------------------------------------

@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_dstar_matrix_algebras(n):
    assert d_star_algebra(matrix_algebra(n)) == n


def test_dstar_examples():
    assert d_star_algebra(truncated_polynomial_algebra(2)) == 1
    assert d_star_algebra(truncated_polynomial_algebra(4)) == 1
    assert d_star_algebra(block_algebra([1, 3, 2])) == 3
    assert d_star_algebra(group_algebra(builtin_group("S3"), BaseField(3))) == 2


@pytest.mark.parametrize("name", ["Z6", "S3", "Q8", "D4", "A4", "S4", "S3xZ2"])
def test_dstar_of_group_algebras_matches_character_degrees(name):
    G = builtin_group(name)
    assert d_star_algebra(group_algebra(G)) == max(character_degrees(G))


def test_dstar_seed_independent():
    A = group_algebra(builtin_group("S4"))
    assert {d_star_algebra(A, seed=s) for s in range(3)} == {3}


def test_dstar_bounds_when_no_attempts():
    res = d_star_algebra(group_algebra(builtin_group("S3")), attempts=0)
    assert isinstance(res, Bounds) and res.lower <= 2 <= res.upper


def test_subalgebras_of_block_algebras():
    diag = subalgebra_from_generators([3], [[F([[1, 0, 0], [0, 2, 0], [0, 0, -1]])]])
    assert diag.dim == 3 and d_star_algebra(diag) == 1
    upper = subalgebra_from_generators([2], [[F([[1, 1], [0, 2]])]])
    assert upper.dim == 2 and d_star_algebra(upper) == 1
    borel = subalgebra_from_generators([2], [[F([[1, 0], [0, 0]])], [F([[0, 1], [0, 0]])]])
    assert borel.dim == 3 and d_star_algebra(borel) == 1
    full = subalgebra_from_generators([2], [[F([[0, 1], [0, 0]])], [F([[0, 0], [1, 0]])]])
    assert full.dim == 4 and d_star_algebra(full) == 2
    mixed = subalgebra_from_generators([1, 2], [[F([[1]]), F([[0, 1], [1, 0]])]])
    assert mixed.associativity_violation() is None and d_star_algebra(mixed) == 1


def test_harness_trials_are_deterministic():
    assert harness_trial(17) == harness_trial(17)
    sizes, dA, dimB, dB = harness_trial(3)
    assert dA == max(sizes) and dB <= dA and dimB <= sum(n * n for n in sizes)


def test_harness_small_run():
    rep = subalgebra_monotonicity_harness(25, seed=1)
    assert rep.ok and rep.trials == 25 and len(rep.samples) == 25
    assert rep.to_json()["violations"] == []


# -- character degree bound ------------------------------------------------------------

@pytest.mark.parametrize("key,max_deg", [("Z2", 1), ("Z4/Z2xZ2", 2), ("Z4/Z4", 1), ("S3/Z6", 2)])
def test_pi_bound(key, max_deg):
    # the first Z4/Z4 cocycle has the trivial action, so Gamma is abelian
    c = example_cocycle(key)
    rep = pi_bound_check(c)
    assert rep.ok and rep.max_degree == max_deg
    assert rep.bound == c.G.order ** 2 and rep.gamma_order == c.G.order * c.A.order
    P = gamma_perm_group(c)
    assert rep.classes == brute_force_class_count(P)
    assert all(P.order % d == 0 for d in rep.degrees)
