import pytest

from hopfgrade.catalog import example_cocycle, example_symmetric_set
from hopfgrade.cohomology import FinAb
from hopfgrade.exact import Cyclotomic
from hopfgrade.hopf_twist import (
    HopfData,
    TwistedPolynomials,
    check_idempotents,
    coproduct_properties,
    degree_two_orientation,
    delta_idempotent,
    module_algebra_check,
    perturbed_twist,
    swap_legs,
    verify_twist,
)

TWIST_KEYS = ["trivial", "Z2", "Z4/Z2xZ2", "Z4/Z4", "S3/Z6"]


@pytest.fixture(scope="module")
def hopf():
    return {key: HopfData(example_cocycle(key)) for key in TWIST_KEYS}


# -- delta idempotents ----------------------------------------------------------------

@pytest.mark.parametrize("factors", [(), (2,), (3,), (4,), (2, 2), (6,), (2, 4), (2, 2, 2), (4, 4)])
def test_idempotent_system(factors):
    A = FinAb(factors)
    assert check_idempotents(A).ok


@pytest.mark.parametrize("factors", [(3,), (2, 2), (2, 4)])
def test_idempotents_are_point_indicators(factors):
    """sum_k c_k chi_k(b) equals 1 at b = a and 0 elsewhere."""
    A = FinAb(factors)
    n = A.exponent
    for a in A.elements():
        u = delta_idempotent(A, a)
        for b in A.elements():
            val = Cyclotomic.from_rational(n, 0)
            for k, c in u.items():
                val = val + c * Cyclotomic.zeta(n, A.pairing(k, b) % n)
            assert val == Cyclotomic.from_rational(n, int(a == b))


def test_idempotent_order_must_be_a_multiple():
    with pytest.raises(ValueError):
        delta_idempotent(FinAb((4,)), (1,), 6)


# -- the twist ---------------------------------------------------------------------------

def element_tensor(H, T):
    return {tuple(H.elements[i] for i in key): c for key, c in T.items()}


def twist_equation_oracle(H):
    """Both sides of the twist equation, multiplied with the Gamma product on elements."""
    G = H.Gamma
    J = element_tensor(H, H.J)
    e = G.identity

    def mul(S, T):
        out = {}
        for k1, c1 in S.items():
            for k2, c2 in T.items():
                key = tuple(G.mul(a, b) for a, b in zip(k1, k2))
                out[key] = out.get(key, 0) + c1 * c2
        return {k: v for k, v in out.items() if v}

    lhs = mul({(a, a, b): c for (a, b), c in J.items()}, {(a, b, e): c for (a, b), c in J.items()})
    rhs = mul({(a, b, b): c for (a, b), c in J.items()}, {(e, a, b): c for (a, b), c in J.items()})
    return lhs == rhs


@pytest.mark.parametrize("key,terms", [("trivial", 1), ("Z2", 4), ("Z4/Z2xZ2", 16), ("Z4/Z4", 16), ("S3/Z6", 36)])
def test_twist_term_counts(hopf, key, terms):
    H = hopf[key]
    assert len(H.J) == terms
    assert H.n == H.cocycle.G.order * H.cocycle.A.order


@pytest.mark.parametrize("key", TWIST_KEYS)
def test_twists_verify(hopf, key):
    H = hopf[key]
    rep = verify_twist(H)
    assert rep.ok and rep.residual_terms == 0 and rep.witness == {}
    assert twist_equation_oracle(H)


def test_twist_inverse(hopf):
    H = hopf["S3/Z6"]
    one = H.tensor_one(2)
    assert H.tmul(H.J, H.Jinv) == one and H.tmul(H.Jinv, H.J) == one


def test_perturbed_twist_fails(hopf):
    for key in ("Z4/Z2xZ2", "S3/Z6"):
        H = hopf[key]
        rep = verify_twist(H, perturbed_twist(H))
        assert rep.invertible and rep.counit
        assert not rep.twist_equation and rep.residual_terms > 0
        assert "twist_equation" in rep.witness and not rep.ok


def test_perturbation_needs_two_elements(hopf):
    with pytest.raises(ValueError):
        perturbed_twist(hopf["Z2"])


def test_leg_swap_is_also_a_twist(hopf):
    # the undeformed coproduct is cocommutative, so flipping the legs of a twist gives a twist
    for key in ("Z4/Z2xZ2", "S3/Z6"):
        assert verify_twist(hopf[key], swap_legs(hopf[key].J)).ok


def test_non_normalized_element_fails_counit(hopf):
    H = hopf["Z2"]
    J = {k: c * 2 for k, c in H.J.items()}
    rep = verify_twist(H, J)
    assert not rep.counit and "counit" in rep.witness


# -- the twisted coproduct ----------------------------------------------------------------

@pytest.mark.parametrize("key", ["Z4/Z2xZ2", "S3/Z6"])
def test_conjugation_conventions_agree(hopf, key):
    H = hopf[key]
    for g in range(H.n):
        assert H.coproduct(g, "conjugate-right") == H.coproduct(g, "conjugate-left")


def test_coproduct_coassociative(hopf):
    for key in ("Z2", "Z4/Z2xZ2", "S3/Z6"):
        assert coproduct_properties(hopf[key]).coassociative


def test_s3_coproduct_not_cocommutative(hopf):
    rep = coproduct_properties(hopf["S3/Z6"])
    assert rep.coassociative and not rep.cocommutative
    assert rep.cocommutativity_witness is not None


def test_coproduct_counit(hopf):
    """(eps (x) id) Delta^J(gamma) = gamma, since J is counit-normalized."""
    H = hopf["S3/Z6"]
    for g in range(H.n):
        left = {}
        for (a, b), c in H.coproduct(g).items():
            left[b] = left.get(b, 0) + c
        assert {k: v for k, v in left.items() if v} == {g: H.one}


def test_unknown_convention(hopf):
    with pytest.raises(ValueError):
        hopf["Z2"].coproduct(0, "sideways")


# -- module algebra ------------------------------------------------------------------------

def test_module_algebra_z4():
    H = HopfData(example_cocycle("Z4/Z2xZ2"))
    X = example_symmetric_set("Z4/Z2xZ2")
    rep = module_algebra_check(H, X, N=3)
    assert rep.ok and rep.group_elements == H.n
    assert module_algebra_check(H, X, N=3, convention="conjugate-left").ok
    bad = module_algebra_check(H, X, N=3, product="commutative")
    assert not bad.ok and bad.witness is not None


def test_module_algebra_s3():
    H = HopfData(example_cocycle("S3/Z6"))
    X = example_symmetric_set("S3/Z6")
    assert module_algebra_check(H, X, N=2).ok
    assert not module_algebra_check(H, X, N=2, product="commutative").ok


def test_twisted_product_matches_twist_expansion():
    H = HopfData(example_cocycle("S3/Z6"))
    P = TwistedPolynomials(H, example_symmetric_set("S3/Z6"))
    for u in [(0,), (1, 2), (3, 3)]:
        for v in [(4,), (0, 5)]:
            assert P.mul_via_twist(u, v) == {P.mul(u, v): H.one}


def test_degree_two_orientation():
    for key, ckey in (("S3/Z6", "S3/Z6"), ("Z4/Z2xZ2-full", "Z4/Z2xZ2")):
        H = HopfData(example_cocycle(ckey))
        assert "reversed" in degree_two_orientation(H, example_symmetric_set(key)).split(",")

