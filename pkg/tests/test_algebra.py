import json
from fractions import Fraction

import pytest

from hopfgrade.algebra import (
    BaseField,
    FinDimAlgebra,
    generic_rank,
    group_algebra,
    kernel_basis,
    matrix_algebra,
    truncated_polynomial_algebra,
)
from hopfgrade.grading import quaternion_model
from hopfgrade.groups import builtin_group


def matmul(A, B):
    return [[sum(A[i][k] * B[k][j] for k in range(len(B))) for j in range(len(B[0]))] for i in range(len(A))]


def test_matrix_units_multiply_like_matrices():
    n = 3
    M = matrix_algebra(n)
    assert M.associativity_violation() is None and M.unit_violation() is None

    def unit(i, j):
        return [[Fraction(int((r, c) == (i, j))) for c in range(n)] for r in range(n)]

    for a in range(n * n):
        for b in range(n * n):
            prod = M.mul(M.basis(a), M.basis(b))
            expected = matmul(unit(*divmod(a, n)), unit(*divmod(b, n)))
            got = [[prod.get(r * n + c, 0) for c in range(n)] for r in range(n)]
            assert got == expected


@pytest.mark.parametrize("alg", [
    matrix_algebra(2),
    truncated_polynomial_algebra(3),
    group_algebra(builtin_group("S3"), BaseField(3)),
])
def test_json_round_trip(alg):
    data = alg.to_json()
    back = FinDimAlgebra.from_json(json.dumps(data))
    assert back.to_json() == data
    assert back.dim == alg.dim and back.one() == alg.one()
    for i in range(alg.dim):
        for j in range(alg.dim):
            assert back.mul(back.basis(i), back.basis(j)) == alg.mul(alg.basis(i), alg.basis(j))


def test_function_field_algebras_are_not_serialized():
    with pytest.raises(ValueError):
        quaternion_model().to_json()


def test_truncated_polynomials_are_commutative():
    A = truncated_polynomial_algebra(4)
    assert A.is_commutative() and A.associativity_violation() is None
    t = A.basis(1)
    assert A.mul(A.mul(A.mul(t, t), t), t) == {}
    assert not matrix_algebra(2).is_commutative()


def test_group_algebra_basics():
    A = group_algebra(builtin_group("Z3"))
    assert A.is_commutative() and A.unit_violation() is None


def test_specialize_keeps_associativity():
    Q = quaternion_model().specialize((3, -2))
    assert Q.field == BaseField()
    assert Q.associativity_violation() is None


def test_generic_rank():
    f = BaseField(1, ("s", "t"))
    s, t = f.var("s"), f.var("t")
    rank, method, pts = generic_rank(f, [[s, t], [s * s, s * t]])
    assert (rank, method, len(pts)) == (1, "specialization", 3)
    rank, _, _ = generic_rank(f, [[s, t], [t, s]])
    assert rank == 2
    assert generic_rank(f, [[f.one, f.zero], [f.zero, f.one]])[:2] == (2, "exact")
    assert generic_rank(f, [])[0] == 0


def test_kernel_basis():
    f = BaseField()
    ker = kernel_basis(f, [[Fraction(1), Fraction(1)]])
    assert len(ker) == 1 and ker[0][0] + ker[0][1] == 0
    assert len(kernel_basis(f, [], 3)) == 3
