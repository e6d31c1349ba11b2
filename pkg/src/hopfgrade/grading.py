"""Group gradings of finite-dimensional algebra models.

Contains the degree-2 quaternion algebra over QQ(c, b) graded by Q8, the
descent search for solutions of alpha P^2 + beta Q^2 = R^2, and quantum
tori at roots of unity.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import Callable

from .algebra import BaseField, FinDimAlgebra
from .exact.linalg import kernel, mat_rank
from .exact.poly import MPoly, poly_sqrt
from .groups import PermGroup, builtin_group


class MissingDegree(ValueError):
    """Some group element is not the degree of any homogeneous basis monomial."""


@dataclass
class GradedAlgebra:
    """An algebra with a group element attached to each basis vector.

    ``scalar_degree`` maps an exponent vector of the field variables to a group
    element; None means scalars have degree 1.
    """

    algebra: FinDimAlgebra
    group: PermGroup
    assignment: list
    scalar_degree: Callable | None = None
    element_names: dict = field(default_factory=dict)

    def name_of(self, g) -> str:
        return self.element_names.get(g, str(g))

    def monomial_degree(self, exp):
        if self.scalar_degree is None:
            return self.group.identity
        return self.scalar_degree(exp)


@dataclass
class GradingCertificate:
    ok: bool
    surjective: bool
    pairs: list
    scalar_monomials: int
    exponent_bound: int
    witness: dict | None = None
    # products are checked to land in the right component; equality of
    # components is not checked separately
    certified: str = "containment"

    def to_json(self) -> dict:
        return {
            "ok": self.ok,
            "surjective": self.surjective,
            "certified": self.certified,
            "exponent_bound": self.exponent_bound,
            "scalar_monomials": self.scalar_monomials,
            "pairs_checked": len(self.pairs),
            "pairs": self.pairs,
            "witness": self.witness,
        }


def _coefficient_monomials(c):
    """Exponent vectors of a structure-constant coefficient (a polynomial or constant)."""
    if isinstance(c, MPoly):
        return list(c.terms)
    return [()]


def verify_grading(GA: GradedAlgebra, exponent_bound: int = 4) -> GradingCertificate:
    """Check that every product of homogeneous monomials is homogeneous of the product degree.

    Homogeneous monomials are s * b_i with s a scalar monomial whose exponents
    are at most ``exponent_bound``.  Raises MissingDegree when the degree map
    misses a group element.
    """
    G = GA.group
    alg = GA.algebra
    nv = len(alg.field.variables)
    scalars = list(product(range(exponent_bound + 1), repeat=nv))
    sdeg = {e: GA.monomial_degree(e) for e in scalars}
    reached = {G.mul(sdeg[e], GA.assignment[i]) for e in scalars for i in range(alg.dim)}
    missing = [g for g in G.elements if g not in reached]
    if missing:
        raise MissingDegree(f"no homogeneous monomial of degree {GA.name_of(missing[0])}")
    pairs = []
    witness = None
    for i in range(alg.dim):
        for j in range(alg.dim):
            target = G.mul(GA.assignment[i], GA.assignment[j])
            prod_ij = alg.mul(alg.basis(i), alg.basis(j))
            bad = None
            # degree of every term s * b_k of the basis product
            terms = [(k, e) for k, c in prod_ij.items() for e in _coefficient_monomials(c)]
            for k, e in terms:
                d = G.mul(GA.monomial_degree(e) if e else G.identity, GA.assignment[k])
                if d != target:
                    bad = {"left": alg.labels[i], "right": alg.labels[j], "term": alg.labels[k],
                           "scalar_exponent": list(e), "expected": GA.name_of(target), "found": GA.name_of(d)}
                    break
            # scaling both factors by scalar monomials multiplies both sides by the same degree
            if bad is None and GA.scalar_degree is not None:
                for e1 in scalars:
                    for e2 in scalars:
                        lhs = G.mul(G.mul(sdeg[e1], GA.assignment[i]), G.mul(sdeg[e2], GA.assignment[j]))
                        e12 = tuple(a + b for a, b in zip(e1, e2))
                        s12 = GA.monomial_degree(e12)
                        for k, e in terms:
                            rhs = G.mul(G.mul(s12, GA.monomial_degree(e) if e else G.identity), GA.assignment[k])
                            if lhs != rhs:
                                bad = {"left": alg.labels[i], "right": alg.labels[j], "term": alg.labels[k],
                                       "scalar_exponents": [list(e1), list(e2)]}
                                break
                        if bad:
                            break
                    if bad:
                        break
            pairs.append({"left": alg.labels[i], "right": alg.labels[j],
                          "degree": GA.name_of(target), "status": "fail" if bad else "pass"})
            if bad and witness is None:
                witness = bad
    return GradingCertificate(witness is None, True, pairs, len(scalars), exponent_bound, witness)


# -- the Q8-graded quaternion algebra over QQ(c, b) --------------------------

QUATERNION_LABELS = ["1", "x", "x^2", "x^3", "y", "xy", "x^2y", "x^3y"]


def _x_ring(c):
    """Arithmetic in K[x]/(x^4 - c x^2 + 1): elements are length-4 coefficient lists."""
    zero = c * 0

    def mul(p, q):
        out = [zero] * 7
        for a, pa in enumerate(p):
            if pa:
                for b, qb in enumerate(q):
                    if qb:
                        out[a + b] = out[a + b] + pa * qb
        # x^4 = c x^2 - 1, applied from the top down
        for d in range(6, 3, -1):
            t = out[d]
            if t:
                out[d] = zero
                out[d - 2] = out[d - 2] + c * t
                out[d - 4] = out[d - 4] - t
        return out[:4]

    return mul


def quaternion_model():
    """The algebra with x^4 = c x^2 - 1, y^2 = b, y x = (c x - x^3) y over QQ(c, b)."""
    f = BaseField(1, ("c", "b"))
    one, zero = f.one, f.zero
    c, b = f.var("c"), f.var("b")
    xmul = _x_ring(c)
    xinv = [zero, c, zero, -one]  # x^-1 = c x - x^3 since x^2 + x^-2 = c

    def xpow(k):
        base = [zero, one, zero, zero] if k >= 0 else xinv
        out = [one, zero, zero, zero]
        for _ in range(abs(k)):
            out = xmul(out, base)
        return out

    table = {}
    for i in range(8):
        k, l = i % 4, i // 4
        for j in range(8):
            m, n = j % 4, j // 4
            # x^k y^l x^m y^n = x^k (x^{-m} if l else x^m) y^{l+n}
            xpart = xmul(xpow(k), xpow(-m if l else m))
            ypow = l + n
            scal = b if ypow == 2 else one
            ypow %= 2
            table[(i, j)] = {4 * ypow + d: scal * coeff for d, coeff in enumerate(xpart) if coeff}
    return FinDimAlgebra(f, QUATERNION_LABELS, table, 0, name="quaternion model")


def q8_names(Q8: PermGroup):
    """Map i, j, k, -1, ... to elements of the Q8 permutation group (generators are i and j)."""
    i, j = Q8.generators[0], Q8.generators[1]
    m1 = Q8.mul(i, i)
    k = Q8.mul(i, j)
    named = {"1": Q8.identity, "-1": m1, "i": i, "-i": Q8.mul(m1, i), "j": j, "-j": Q8.mul(m1, j),
             "k": k, "-k": Q8.mul(m1, k)}
    return named


def quaternion_grading(deg_x: str = "i", deg_y: str = "j", scalar_parity: bool = True,
                       table: list | None = None) -> GradedAlgebra:
    """Grade the quaternion model by Q8: deg(x^k y^l) = deg(x)^k deg(y)^l, scalars by parity."""
    alg = quaternion_model()
    Q8 = builtin_group("Q8")
    named = q8_names(Q8)
    names = {g: n for n, g in named.items()}
    if table is None:
        gx, gy = named[deg_x], named[deg_y]
        assignment = []
        for idx in range(8):
            k, l = idx % 4, idx // 4
            d = Q8.identity
            for _ in range(k):
                d = Q8.mul(d, gx)
            if l:
                d = Q8.mul(d, gy)
            assignment.append(d)
    else:
        assignment = [named[t] for t in table]
    minus_one = named["-1"]

    def parity(exp):
        return minus_one if sum(exp) % 2 else Q8.identity

    return GradedAlgebra(alg, Q8, assignment, parity if scalar_parity else None, names)


def build_quaternion_example() -> GradedAlgebra:
    """The Q8-grading with deg(x) = i, deg(y) = j and deg(b) = deg(c) = -1."""
    return quaternion_grading("i", "j", True)


def quaternion_z(alg: FinDimAlgebra) -> dict:
    """z = x - x^-1 = (1 - c) x + x^3 in the basis."""
    f = alg.field
    return {1: f.one - f.var("c"), 3: f.one}


def rewriting_rules_homogeneous(GA: GradedAlgebra) -> dict:
    """Degrees of both sides of x^4 = c x^2 - 1, y^2 = b and y x = (c x - x^3) y."""
    G = GA.group
    deg = GA.assignment
    sc = GA.monomial_degree

    def g(*gs):
        out = G.identity
        for h in gs:
            out = G.mul(out, h)
        return out

    x, y = deg[1], deg[4]
    out = {
        "x^4": (g(x, x, x, x), {g(sc((1, 0)), x, x), G.identity}),
        "y^2": (g(y, y), {sc((0, 1))}),
        "yx": (g(y, x), {g(sc((1, 0)), x, y), g(x, x, x, y)}),
    }
    return {k: (len(rhs) == 1 and lhs in rhs) for k, (lhs, rhs) in out.items()}


# -- descent search for alpha P^2 + beta Q^2 = R^2 ------------------------------

@dataclass
class NonsplitResult:
    status: str  # "no_solution", "witness" or "inconclusive"
    witness: tuple | None = None
    steps: list = field(default_factory=list)

    @property
    def found(self) -> bool:
        return self.status == "witness"

    def to_json(self) -> dict:
        w = None
        if self.witness is not None:
            w = [repr(p) for p in self.witness]
        return {"status": self.status, "witness": w, "steps": self.steps}


def _ab_vars():
    return ("a", "b")


def _qab(expr_terms):
    return MPoly(_ab_vars(), {e: Fraction(c) for e, c in expr_terms.items()})


def default_alpha() -> MPoly:
    return _qab({(2, 0): 1, (0, 0): -4})


def default_beta() -> MPoly:
    return _qab({(0, 1): 1})


def _check_witness(alpha, beta, P, Q, R) -> bool:
    return alpha * P * P + beta * Q * Q == R * R and any(t.terms for t in (P, Q, R))


def _constants_only(alpha, beta):
    """Nonzero rational (p, q, r) with alpha p^2 + beta q^2 = r^2, or None.

    Equating coefficients gives a linear system in (p^2, q^2, r^2).
    """
    one = MPoly.const(alpha.vars, Fraction(1))
    monos = sorted(set(alpha.terms) | set(beta.terms) | set(one.terms))
    rows = [[alpha.terms.get(m, 0), beta.terms.get(m, 0), -one.terms.get(m, 0)] for m in monos]
    sols = kernel([[Fraction(x) for x in r] for r in rows])
    from .exact.poly import _rational_sqrt

    for v in sols:
        if all(x >= 0 for x in v) or all(x <= 0 for x in v):
            v = [abs(x) for x in v]
            roots = [_rational_sqrt(x) for x in v]
            if all(r is not None for r in roots):
                return tuple(MPoly.const(alpha.vars, r) for r in roots)
    if len(sols) > 1:
        return "unknown"
    return None


def nonsplit_search(bound: int, alpha: MPoly | None = None, beta: MPoly | None = None) -> NonsplitResult:
    """Search for nonzero P, Q, R in QQ[a, b] of total degree <= bound with alpha P^2 + beta Q^2 = R^2.

    Direct witnesses are tried first (alpha, beta or alpha + beta a square).
    Otherwise, when beta = b and alpha(a, 0) is not a square, reduction modulo
    b shows b divides P, R and then Q, and (P/b, Q/b, R/b) solves the same
    equation with degrees lowered by one.  Each round is recorded, and after
    bound + 1 rounds only the zero solution remains.
    """
    alpha = alpha if alpha is not None else default_alpha()
    beta = beta if beta is not None else default_beta()
    V = alpha.vars
    one = MPoly.const(V, Fraction(1))
    zero = MPoly(V, {})
    steps = []
    for name, poly, wit in (
        ("alpha", alpha, lambda s: (one, zero, s)),
        ("beta", beta, lambda s: (zero, one, s)),
        ("alpha+beta", alpha + beta, lambda s: (one, one, s)),
    ):
        s = poly_sqrt(poly)
        steps.append({"test": f"{name} is a square", "result": s is not None})
        if s is not None:
            P, Q, R = wit(s)
            if not _check_witness(alpha, beta, P, Q, R):
                raise AssertionError("witness failed verification")
            return NonsplitResult("witness", (P, Q, R), steps)
    const = _constants_only(alpha, beta)
    steps.append({"test": "constant solutions", "result": const is not None})
    if isinstance(const, tuple):
        return NonsplitResult("witness", const, steps)
    b = MPoly.var(V, V[1])
    if beta != b:
        return NonsplitResult("inconclusive", None, steps + [{"test": "beta is the variable b", "result": False}])
    alpha0 = alpha.subs({V[1]: Fraction(0)})
    if not alpha0.terms or poly_sqrt(alpha0) is not None:
        steps.append({"test": "alpha(a, 0) is a nonzero nonsquare", "result": False})
        return NonsplitResult("inconclusive", None, steps)
    for level in range(bound, -1, -1):
        steps.append({
            "degree_bound": level,
            "mod_b": "alpha(a,0) P0^2 = R0^2 with alpha(a,0) a nonsquare forces P0 = R0 = 0",
            "then": "b divides Q^2, hence Q; divide P, Q, R by b",
            "next_degree_bound": level - 1,
        })
    return NonsplitResult("no_solution", None, steps)


# -- quantum tori -------------------------------------------------------------------

class QuantumTorus(FinDimAlgebra):
    """Basis x^i y^j (0 <= i, j < n) with y x = zeta^-1 x y, x^n = s, y^n = t."""

    def __init__(self, n: int):
        f = BaseField(n, ("s", "t"))
        self.n = n
        s, t = f.var("s"), f.var("t")
        one = f.one
        labels = [f"x^{i}y^{j}" for j in range(n) for i in range(n)]
        idx = lambda i, j: j * n + i  # noqa: E731
        table = {}
        for i, j, k, l in product(range(n), repeat=4):
            # x^i y^j x^k y^l = zeta^{-jk} x^{i+k} y^{j+l}
            coeff = f.zeta(-(j * k) % n) if n > 1 else one
            if i + k >= n:
                coeff = coeff * s
            if j + l >= n:
                coeff = coeff * t
            table[(idx(i, j), idx(k, l))] = {idx((i + k) % n, (j + l) % n): coeff}
        super().__init__(f, labels, table, 0, name=f"quantum torus n={n}")
        self.idx = idx

    def x(self):
        return self.basis(self.idx(1 % self.n, 0)) if self.n > 1 else {0: self.field.var("s")}

    def y(self):
        return self.basis(self.idx(0, 1 % self.n)) if self.n > 1 else {0: self.field.var("t")}

    def central_basis_elements(self):
        """Basis monomials commuting with both x and y."""
        return [k for k in range(self.dim) if self.commutes(self.basis(k), self.x()) and self.commutes(self.basis(k), self.y())]

    def center_dimension(self) -> int:
        """Dimension over the scalars of the centralizer of {x, y}.

        The stacked commutator maps are ranked at s = t = 1.  Specialization
        can only lower rank, so a one-dimensional kernel there bounds the
        generic kernel by one, and 1 always lies in it.
        """
        rows = self.commutator_matrix(self.x()) + self.commutator_matrix(self.y())
        at_one = [[self.field.specialize(v, (1, 1)) for v in r] for r in rows]
        return self.dim - mat_rank(at_one)

    def scaling_action(self, a: int, b: int):
        """Diagonal matrix of x -> zeta^a x, y -> zeta^b y on the basis."""
        n = self.n
        rows = []
        for j in range(n):
            for i in range(n):
                row = [self.field.zero] * self.dim
                row[self.idx(i, j)] = self.field.zeta((a * i + b * j) % n) if n > 1 else self.field.one
                rows.append(row)
        return rows


def quantum_torus(n: int) -> QuantumTorus:
    if n < 1:
        raise ValueError("n must be positive")
    return QuantumTorus(n)


def torus_grading(n: int) -> GradedAlgebra:
    """Z_n x Z_n grading of quantum_torus(n): deg x^i y^j = (i, j), scalars (s, t) of degree 0."""
    T = quantum_torus(n)
    G = builtin_group(f"Z{n}xZ{n}")
    a, b = (list(G.generators) + [G.identity, G.identity])[:2] if n > 1 else (G.identity, G.identity)
    assignment = [None] * T.dim
    names = {}
    for i in range(n):
        for j in range(n):
            g = G.identity
            for _ in range(i):
                g = G.mul(g, a)
            for _ in range(j):
                g = G.mul(g, b)
            assignment[T.idx(i, j)] = g
            names[g] = f"({i},{j})"
    return GradedAlgebra(T, G, assignment, lambda exp: G.identity, names)


def quaternion_identities(alg: FinDimAlgebra | None = None) -> dict:
    """z^2 = c - 2 and y z = -z y in the quaternion model."""
    alg = alg or quaternion_model()
    f = alg.field
    z = quaternion_z(alg)
    y = alg.basis(4)
    z2 = alg.mul(z, z)
    c = f.var("c")
    return {
        "z^2 = c - 2": z2 == {0: c - 2 * f.one},
        "yz = -zy": alg.mul(y, z) == alg.scale(-f.one, alg.mul(z, y)),
    }
