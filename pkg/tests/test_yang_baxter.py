from itertools import permutations, product
from math import comb

import pytest

from hopfgrade.catalog import COCYCLE_EXAMPLES, example_cocycle, example_symmetric_set
from hopfgrade.cohomology import FinAb, GModule
from hopfgrade.exact import mat_rank
from hopfgrade.groups import builtin_group
from hopfgrade.yang_baxter import (
    BijCocycle,
    BudgetExceeded,
    NotCertified,
    SizeMismatch,
    build_symmetric_set,
    certify,
    faithfulness_check,
    hilbert_coeffs,
    polynomial_dims,
    quadratic_algebra,
    relation_space_matrix,
    search_bijective_cocycles,
    verify_ybe,
)


def all_module_structures(G, ab):
    """Every action of G on A, from every choice of integer matrices on the generators."""
    k = ab.rank
    mats = [tuple(tuple(row) for row in m)
            for m in product(*[product(*[range(f) for f in ab.factors]) for _ in range(k)])]
    out = []
    for imgs in product(mats, repeat=len(G.generators)):
        try:
            out.append(GModule.from_generator_matrices(G, ab, imgs))
        except ValueError:
            pass
    return out


def brute_force_cocycles(G, ab):
    """Count pairs (action, bijection) satisfying pi(gh) = pi(g) + g.pi(h), over all bijections."""
    els, values = G.elements, ab.elements()
    count = 0
    for M in all_module_structures(G, ab):
        for perm in permutations(values):
            pi = dict(zip(els, perm))
            if all(pi[G.mul(g, h)] == ab.add(pi[g], M.act(g, pi[h])) for g in els for h in els):
                count += 1
    return count


@pytest.mark.parametrize("key,expected", [("trivial", 1), ("Z2", 1), ("Z4/Z2xZ2", 6), ("Z4/Z4", 2), ("S3/Z6", 6)])
def test_cocycle_counts_against_brute_force(key, expected):
    group, factors = COCYCLE_EXAMPLES[key]
    G, ab = builtin_group(group), FinAb(factors)
    found = search_bijective_cocycles(G, ab)
    assert found.error is None
    assert len(found) == expected == brute_force_cocycles(G, ab)
    for c in found:
        assert c.violation() is None


def test_size_mismatch():
    res = search_bijective_cocycles(builtin_group("Z2"), FinAb((3,)))
    assert list(res) == [] and res.error == SizeMismatch.__name__


def test_cocycle_json_round_trip():
    c = example_cocycle("S3/Z6")
    back = BijCocycle.from_json(c.to_json())
    assert back.table == c.table and back.to_json() == c.to_json()
    data = c.to_json()
    data["pi"][1], data["pi"][2] = [data["pi"][1][0], data["pi"][2][1]], [data["pi"][2][0], data["pi"][1][1]]
    with pytest.raises(ValueError):
        BijCocycle.from_json(data)


# -- the braid relation -------------------------------------------------------------------

def test_flip_is_a_solution():
    n = 3
    flip = {(x, y): (y, x) for x in range(n) for y in range(n)}
    assert verify_ybe(flip, range(n)).ok
    B = quadratic_algebra(R=flip, n=n)
    assert len(B.relations) == comb(n, 2)


def test_collapse_is_degenerate():
    n = 2
    collapse = {(x, y): (x, x) for x in range(n) for y in range(n)}
    rep = verify_ybe(collapse, range(n))
    assert not rep.nondegenerate and rep.witnesses["nondegenerate"] is not None
    assert not rep.involutive


def braid_oracle(R, X):
    """Compose R12 R23 R12 and R23 R12 R23 as maps on X^3 and compare."""
    def r12(t):
        return R[(t[0], t[1])] + (t[2],)

    def r23(t):
        return (t[0],) + R[(t[1], t[2])]

    return all(r12(r23(r12(t))) == r23(r12(r23(t))) for t in product(X, repeat=3))


def test_verify_ybe_against_exhaustive_oracle():
    X = range(2)
    pairs = list(product(X, repeat=2))
    seen = {True: 0, False: 0}
    for images in product(pairs, repeat=len(pairs)):
        R = dict(zip(pairs, images))
        rep = verify_ybe(R, X)
        assert rep.ybe == braid_oracle(R, X)
        assert rep.involutive == all(R[R[p]] == p for p in pairs)
        seen[rep.ybe] += 1
        if not rep.ybe:
            assert rep.witnesses["ybe"] is not None
    assert seen[True] and seen[False]


@pytest.mark.parametrize("key", ["trivial", "Z2", "Z4/Z2xZ2", "Z4/Z2xZ2-full", "Z4/Z4", "S3/Z6"])
def test_catalog_symmetric_sets_certify(key):
    X = example_symmetric_set(key)
    assert all(X.flags.values())


def test_uncertified_set_is_refused():
    X = example_symmetric_set("S3/Z6", certified=False)
    with pytest.raises(NotCertified):
        quadratic_algebra(X)
    certify(X)
    assert len(quadratic_algebra(X).relations) == 15


def test_relation_counts():
    assert quadratic_algebra(example_symmetric_set("trivial")).relations == []
    assert len(quadratic_algebra(example_symmetric_set("Z2")).relations) == 1
    assert len(quadratic_algebra(example_symmetric_set("Z4/Z2xZ2-full")).relations) == comb(16, 2)


# -- Hilbert series -----------------------------------------------------------------------

def test_hilbert_of_flip_algebra():
    flip = {(x, y): (y, x) for x in range(2) for y in range(2)}
    B = quadratic_algebra(R=flip, n=2)
    assert hilbert_coeffs(B, 4) == [1, 2, 3, 4, 5]
    assert hilbert_coeffs(B, 0) == [1]


@pytest.mark.parametrize("key,N", [("S3/Z6", 3), ("Z4/Z2xZ2", 4), ("Z4/Z4", 4), ("Z2", 5), ("Z4/Z2xZ2-full", 2)])
def test_hilbert_matches_polynomial_ring(key, N):
    X = example_symmetric_set(key)
    for orientation in ("standard", "reversed"):
        assert hilbert_coeffs(quadratic_algebra(X, orientation=orientation), N) == polynomial_dims(X.size, N)
    assert hilbert_coeffs(quadratic_algebra(example_symmetric_set("S3/Z6")), 3) == [1, 6, 21, 56]


@pytest.mark.parametrize("key,deg", [("Z4/Z2xZ2", 3), ("S3/Z6", 2), ("Z4/Z4", 3)])
def test_hilbert_matches_rank_of_relation_space(key, deg):
    X = example_symmetric_set(key)
    B = quadratic_algebra(X)
    rank = mat_rank(relation_space_matrix(B, deg))
    assert X.size ** deg - rank == hilbert_coeffs(B, deg)[deg]


def test_hilbert_budget():
    B = quadratic_algebra(example_symmetric_set("Z4/Z2xZ2-full"))
    with pytest.raises(BudgetExceeded):
        hilbert_coeffs(B, 3, budget=1000)


def test_unknown_orientation():
    with pytest.raises(ValueError):
        quadratic_algebra(example_symmetric_set("Z2"), orientation="sideways")


# -- faithfulness -------------------------------------------------------------------------

@pytest.mark.parametrize("key", ["Z2", "Z4/Z2xZ2", "S3/Z6"])
def test_faithful_examples(key):
    rep = faithfulness_check(example_symmetric_set(key))
    assert rep.ok and rep.to_json()["ok"]


def test_zero_phi_is_not_faithful():
    c = example_cocycle("S3/Z6")
    X = build_symmetric_set(c, [0], {0: c.A.zero})
    certify(X)
    rep = faithfulness_check(X)
    assert not rep.phi_generates_module and not rep.ok
    # with phi = 0 every g_x is trivial and R is the flip
    assert all(X.R[(x, y)] == (y, x) for x in range(X.size) for y in range(X.size))
