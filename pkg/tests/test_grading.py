from fractions import Fraction
from itertools import product

import pytest

from hopfgrade.exact import MPoly
from hopfgrade.grading import (
    MissingDegree,
    build_quaternion_example,
    default_alpha,
    default_beta,
    nonsplit_search,
    quantum_torus,
    quaternion_grading,
    quaternion_identities,
    quaternion_model,
    rewriting_rules_homogeneous,
    torus_grading,
    verify_grading,
)

DEFAULT_TABLE = ["1", "i", "-1", "-i", "j", "k", "-j", "-k"]


def matmul(A, B):
    return [[sum(A[i][k] * B[k][j] for k in range(2)) for j in range(2)] for i in range(2)]


def two_by_two_model(lam, b):
    """x -> diag(lam, 1/lam), y -> [[0, 1], [b, 0]]: a representation with c = lam^2 + lam^-2."""
    X = [[lam, Fraction(0)], [Fraction(0), 1 / lam]]
    Y = [[Fraction(0), Fraction(1)], [b, Fraction(0)]]
    I = [[Fraction(1), Fraction(0)], [Fraction(0), Fraction(1)]]
    reps = []
    for idx in range(8):
        k, l = idx % 4, idx // 4
        M = I
        for _ in range(k):
            M = matmul(M, X)
        if l:
            M = matmul(M, Y)
        reps.append(M)
    return reps


# -- quaternion model -----------------------------------------------------------------

def test_quaternion_model_is_associative_on_all_triples():
    alg = quaternion_model()
    assert alg.dim ** 3 == 512
    assert alg.associativity_violation() is None
    assert alg.unit_violation() is None


@pytest.mark.parametrize("lam,b", [(Fraction(2), Fraction(3)), (Fraction(-3, 2), Fraction(5, 7))])
def test_quaternion_products_match_matrix_representation(lam, b):
    alg = quaternion_model()
    c = lam * lam + 1 / (lam * lam)
    reps = two_by_two_model(lam, b)
    for i in range(8):
        for j in range(8):
            prod = alg.mul(alg.basis(i), alg.basis(j))
            total = [[Fraction(0)] * 2 for _ in range(2)]
            for k, coeff in prod.items():
                val = coeff.evaluate((c, b))
                total = [[total[r][s] + val * reps[k][r][s] for s in range(2)] for r in range(2)]
            assert total == matmul(reps[i], reps[j])


def test_quaternion_identities():
    assert quaternion_identities() == {"z^2 = c - 2": True, "yz = -zy": True}


def test_q8_grading_certificate():
    GA = build_quaternion_example()
    cert = verify_grading(GA, 4)
    assert cert.ok and cert.surjective and cert.witness is None
    assert len(cert.pairs) == 64 and all(p["status"] == "pass" for p in cert.pairs)
    assert [GA.name_of(g) for g in GA.assignment] == DEFAULT_TABLE
    assert all(rewriting_rules_homogeneous(GA).values())
    assert cert.to_json()["certified"] == "containment"


def test_swapped_generator_degrees_also_grade():
    # an automorphism of Q8 exchanges i and j
    assert verify_grading(quaternion_grading("j", "i"), 2).ok


def test_perturbed_table_fails_with_witness():
    table = list(DEFAULT_TABLE)
    table[5], table[7] = table[7], table[5]
    cert = verify_grading(quaternion_grading(table=table), 2)
    assert not cert.ok
    assert cert.witness is not None and "left" in cert.witness


def test_scalars_without_parity_fail():
    cert = verify_grading(quaternion_grading(scalar_parity=False), 2)
    assert not cert.ok and cert.witness is not None


def test_all_identity_degrees_raise():
    with pytest.raises(MissingDegree):
        verify_grading(quaternion_grading(table=["1"] * 8, scalar_parity=False), 2)
    with pytest.raises(MissingDegree):
        verify_grading(quaternion_grading(table=["1"] * 8), 2)


# -- alpha P^2 + beta Q^2 = R^2 ---------------------------------------------------------

def test_nonsplit_search_default():
    res = nonsplit_search(6)
    assert res.status == "no_solution" and not res.found
    assert sum(1 for s in res.steps if "degree_bound" in s) == 7
    assert res.to_json()["witness"] is None


def test_nonsplit_controls_find_witnesses():
    V = ("a", "b")
    a, b = MPoly.var(V, "a"), MPoly.var(V, "b")
    for alpha, beta in ((a * a, default_beta()), (default_alpha(), b * b)):
        res = nonsplit_search(6, alpha, beta)
        assert res.found
        P, Q, R = res.witness
        assert alpha * P * P + beta * Q * Q == R * R


def test_nonsplit_inconclusive_outside_descent():
    V = ("a", "b")
    a, b = MPoly.var(V, "a"), MPoly.var(V, "b")
    assert nonsplit_search(3, a * a - 4, a + b * b * 3).status == "inconclusive"


def test_no_small_solutions_brute_force():
    """Every nonzero P, Q, R with coefficients in {-1, 0, 1} on 1, a, b fails the equation."""
    points = [(0, 1), (1, 2), (3, -1), (-2, 5), (7, 3)]

    def values(coeffs):
        return [coeffs[0] + coeffs[1] * x + coeffs[2] * y for x, y in points]

    polys = [values(c) for c in product((-1, 0, 1), repeat=3)]
    alpha = [x * x - 4 for x, _ in points]
    beta = [y for _, y in points]
    zero = [0] * len(points)
    for P in polys:
        for Q in polys:
            lhs = [al * p * p + be * q * q for al, be, p, q in zip(alpha, beta, P, Q)]
            for R in polys:
                if P == Q == R == zero:
                    continue
                assert lhs != [r * r for r in R]


# -- quantum tori -----------------------------------------------------------------------

@pytest.mark.parametrize("n", [1, 2, 3])
def test_quantum_torus_center(n):
    T = quantum_torus(n)
    assert T.dim == n * n
    assert T.associativity_violation() is None
    # x^i y^j commutes with x iff zeta^j = 1 and with y iff zeta^i = 1
    assert T.central_basis_elements() == [T.idx(0, 0)]
    assert T.center_dimension() == 1


def test_quantum_torus_relations():
    T = quantum_torus(3)
    x, y = T.x(), T.y()
    z = T.field.zeta(-1)
    assert T.mul(y, x) == T.scale(z, T.mul(x, y))
    x3 = T.mul(T.mul(x, x), x)
    assert x3 == {0: T.field.var("s")}


def test_quantum_torus_rejects_zero():
    with pytest.raises(ValueError):
        quantum_torus(0)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_torus_grading(n):
    cert = verify_grading(torus_grading(n), 1)
    assert cert.ok and len(cert.pairs) == n ** 4
