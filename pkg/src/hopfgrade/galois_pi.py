"""Group actions on algebra models, Galois-type checks and representation degrees.

* fixed subalgebras, the canonical map D (x)_{D^G} D -> D (x) Fun(G) and
  isotypic multiplicities for finite group actions;
* d_*(A), the largest dimension of an irreducible representation of a
  finite-dimensional algebra over an algebraic closure, via the trace-form
  radical and a splitting of the center;
* a randomized check that d_*(B) <= d_*(A) for subalgebras, and the bound
  on character degrees of A^dual x| G by |G|^2.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from math import isqrt

import sympy

from .algebra import (
    BaseField,
    FinDimAlgebra,
    constant_matrix,
    generic_rank,
    is_constant_matrix,
)
from .cohomology import abelian_structure
from .exact.cyclotomic import Cyclotomic, euler_phi
from .exact.linalg import (
    coordinates_in,
    kernel,
    mat_rank,
    rref,
    solve_linear,
    span_basis,
)
from .exact.poly import MPoly, RatFunc
from .grading import quantum_torus
from .groups import AbstractGroup, PermGroup, builtin_group, character_degrees
from .yang_baxter import BijCocycle, GammaGroup

# largest canonical-map matrix (16^2 by 16^2) ranked exactly when all specializations are deficient
EXACT_FALLBACK_ENTRIES = (16 * 16) ** 2


class NotFreeOverFixed(ValueError):
    """The algebra model is not free as a left module over its fixed subalgebra."""


class Unsupported(ValueError):
    """The requested decomposition is outside the implemented generality."""


def _mat_mul(A, B):
    return [[sum((a * b for a, b in zip(r, c) if a and b), 0) for c in zip(*B)] for r in A]


def _apply(M, v):
    return [sum((a * b for a, b in zip(r, v) if a and b), 0) for r in M]


@dataclass
class AlgebraAction:
    """A finite group acting on an algebra by matrices (columns are images of basis vectors)."""

    algebra: FinDimAlgebra
    group: object
    action: dict
    name: str = ""

    def act(self, g, u: dict) -> dict:
        vec = self.algebra.vector(u)
        return self.algebra.from_vector(_apply(self.action[g], vec))

    def violation(self):
        """First failure of the automorphism or homomorphism property, or None."""
        alg, G = self.algebra, self.group
        for g in G.elements:
            for i in range(alg.dim):
                gi = self.act(g, alg.basis(i))
                for j in range(alg.dim):
                    lhs = self.act(g, alg.mul(alg.basis(i), alg.basis(j)))
                    if lhs != alg.mul(gi, self.act(g, alg.basis(j))):
                        return ("not multiplicative", g, i, j)
        for g in G.elements:
            for h in G.elements:
                for i in range(alg.dim):
                    b = alg.basis(i)
                    if self.act(G.mul(g, h), b) != self.act(g, self.act(h, b)):
                        return ("not a homomorphism", g, h, i)
        return None

    def is_faithful(self) -> bool:
        n = self.algebra.dim
        ident = [[self.algebra.field.one if i == j else self.algebra.field.zero for j in range(n)] for i in range(n)]
        return sum(1 for g in self.group.elements if self.action[g] == ident) == 1


def action_from_generators(G: PermGroup, alg: FinDimAlgebra, gen_mats, name: str = "") -> AlgebraAction:
    """Extend matrices on the generators of G to all elements by breadth-first products."""
    n = alg.dim
    f = alg.field
    ident = [[f.one if i == j else f.zero for j in range(n)] for i in range(n)]
    action = {G.identity: ident}
    frontier = [G.identity]
    while frontier:
        nxt = []
        for x in frontier:
            for g, M in zip(G.generators, gen_mats):
                y = G.mul(x, g)
                if y not in action:
                    action[y] = _mat_mul(action[x], M)
                    nxt.append(y)
        frontier = nxt
    act = AlgebraAction(alg, G, action, name)
    return act


def torus_action(n: int, mode: str = "full") -> AlgebraAction:
    """Z_n x Z_n scaling x and y (``full``), or Z_n scaling x only (``x``)."""
    T = quantum_torus(n)
    if mode == "full":
        G = builtin_group(f"Z{n}xZ{n}")
        return action_from_generators(G, T, [T.scaling_action(1, 0), T.scaling_action(0, 1)], f"Z{n}xZ{n} on torus")
    if mode == "x":
        G = builtin_group(f"Z{n}")
        return action_from_generators(G, T, [T.scaling_action(1, 0)], f"Z{n} on x of torus")
    raise ValueError(f"unknown mode {mode!r}")


# -- rational quaternions and the binary tetrahedral group ---------------------------

def _qmul(p, q):
    a1, b1, c1, d1 = p
    a2, b2, c2, d2 = q
    return (
        a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
        a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
        a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
        a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2,
    )


def rational_quaternions() -> FinDimAlgebra:
    """The Hamilton quaternions over QQ with basis 1, i, j, k."""
    f = BaseField()
    basis = [tuple(Fraction(int(i == k)) for i in range(4)) for k in range(4)]
    table = {}
    for a in range(4):
        for b in range(4):
            p = _qmul(basis[a], basis[b])
            table[(a, b)] = {k: v for k, v in enumerate(p) if v}
    return FinDimAlgebra(f, ["1", "i", "j", "k"], table, 0, name="rational quaternions")


def binary_tetrahedral_group() -> AbstractGroup:
    """The 24 Hurwitz units: +-1, +-i, +-j, +-k and (+-1 +-i +-j +-k)/2."""
    els = set()
    for k in range(4):
        for s in (1, -1):
            els.add(tuple(Fraction(s if i == k else 0) for i in range(4)))
    half = Fraction(1, 2)
    for signs in range(16):
        els.add(tuple(half if (signs >> i) & 1 else -half for i in range(4)))
    one = (Fraction(1), Fraction(0), Fraction(0), Fraction(0))
    G = AbstractGroup(sorted(els), _qmul, one, name="2T")
    if len(G.elements) != 24 or any(_qmul(a, b) not in els for a in els for b in els):
        raise AssertionError("Hurwitz units are not closed")
    return G


def binary_tetrahedral_action() -> AlgebraAction:
    """2T acting on the rational quaternions by conjugation d -> q d q^-1."""
    D = rational_quaternions()
    G = binary_tetrahedral_group()
    basis = [tuple(Fraction(int(i == k)) for i in range(4)) for k in range(4)]
    action = {}
    for q in G.elements:
        qinv = (q[0], -q[1], -q[2], -q[3])  # unit quaternions
        cols = [_qmul(_qmul(q, b), qinv) for b in basis]
        action[q] = [[cols[j][i] for j in range(4)] for i in range(4)]
    return AlgebraAction(D, G, action, "2T by conjugation")


# -- fixed subalgebra, canonical map, isotypic parts -------------------------------------

def fixed_subalgebra(act: AlgebraAction):
    """Basis (as coordinate vectors) of D^G: the common kernel of rho(g) - id.

    The action matrices must have constant entries, so the kernel is computed
    exactly over the constant field.
    """
    alg = act.algebra
    n = alg.dim
    rows = []
    for g in act.group.elements:
        M = act.action[g]
        if not is_constant_matrix(alg.field, M):
            raise Unsupported("fixed subalgebra needs action matrices with constant entries")
        M = constant_matrix(alg.field, M)
        rows.extend([[M[i][j] - (1 if i == j else 0) for j in range(n)] for i in range(n)])
    basis = kernel(rows)
    basis, _ = span_basis(basis)
    return basis


def _lift_vector(alg: FinDimAlgebra, vec) -> dict:
    return {k: alg.field.constant(c) for k, c in enumerate(vec) if c}


def fixed_subalgebra_is_subalgebra(act: AlgebraAction, basis) -> bool:
    """1 lies in D^G and D^G is closed under products."""
    alg = act.algebra
    if not basis:
        return False
    lifted = [[alg.field.constant(x) for x in v] for v in basis]

    def inside(u: dict) -> bool:
        rank, _, _ = generic_rank(alg.field, lifted + [alg.vector(u)])
        return rank == len(basis)

    if not inside(alg.one()):
        return False
    els = [_lift_vector(alg, v) for v in basis]
    return all(inside(alg.mul(u, v)) for u in els for v in els)


def left_fixed_basis(act: AlgebraAction, fixed, seed: int = 0):
    """Greedy left D^G-basis of D among the standard basis vectors."""
    alg = act.algebra
    fixed_els = [_lift_vector(alg, v) for v in fixed]
    chosen, rows = [], []
    r = len(fixed)
    for k in range(alg.dim):
        cand = [alg.vector(alg.mul(q, alg.basis(k))) for q in fixed_els]
        rank, _, _ = generic_rank(alg.field, rows + cand, seed)
        if rank == len(rows) + r:
            chosen.append(k)
            rows += cand
        if len(rows) == alg.dim:
            break
    if len(rows) != alg.dim:
        raise NotFreeOverFixed("no left basis over the fixed subalgebra among basis vectors")
    return chosen


@dataclass
class CanonicalMapReport:
    dim_over_fixed: int
    group_order: int
    fixed_dim: int
    rows: int
    cols: int
    rank: int
    bijective: bool
    method: str
    points: list = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "dim_over_fixed": self.dim_over_fixed, "group_order": self.group_order,
            "fixed_dim": self.fixed_dim, "matrix": [self.rows, self.cols], "rank": self.rank,
            "bijective": self.bijective, "method": self.method, "points": self.points,
        }


def canonical_map_check(act: AlgebraAction, seed: int = 0) -> CanonicalMapReport:
    """The matrix of b_i (x) e_j -> sum_g b_i (g . e_j) (x) delta_g and its rank.

    Here {e_j} is a left basis of D over D^G, so {b_i (x) e_j} is a basis of
    D (x)_{D^G} D over the center.  Bijective means square and of full rank.
    """
    alg = act.algebra
    fixed = fixed_subalgebra(act)
    e = left_fixed_basis(act, fixed, seed)
    G = list(act.group.elements)
    n = alg.dim
    rows_n = n * len(G)
    cols = []
    for i in range(n):
        for j in e:
            col = []
            for g in G:
                col.extend(alg.vector(alg.mul(alg.basis(i), act.act(g, alg.basis(j)))))
            cols.append(col)
    matrix = [[cols[c][r] for c in range(len(cols))] for r in range(rows_n)]
    rank, method, points = generic_rank(alg.field, matrix, seed)
    if method == "specialization" and rank < min(rows_n, len(cols)) and rows_n * len(cols) <= EXACT_FALLBACK_ENTRIES:
        # every specialization was deficient: settle the generic rank exactly over the function field
        rank = mat_rank([[RatFunc(x) if isinstance(x, MPoly) else x for x in row] for row in matrix])
        method = "exact-function-field"
    square = rows_n == len(cols)
    return CanonicalMapReport(len(e), len(G), len(fixed), rows_n, len(cols), rank,
                              square and rank == rows_n, method, points)


def isotypic_multiplicities(act: AlgebraAction) -> dict:
    """Character eigenspaces of an abelian action.

    Returns ``{"characters": [...], "dims": [...], "multiplicities": [...],
    "fixed_dim": r}`` where dims are over the center and multiplicities are
    over D^G (dims divided by dim D^G).
    """
    G = act.group
    if not G.is_abelian():
        raise Unsupported("isotypic decomposition is implemented for abelian groups")
    alg = act.algebra
    n = alg.dim
    ab, to_ab, from_ab = abelian_structure(G, G.elements)
    e = ab.exponent
    gens = [from_ab[b] for b in ab.basis()]
    fixed = fixed_subalgebra(act)
    r = len(fixed)
    chars, dims = [], []
    for k in ab.elements():
        rows = []
        for g, b in zip(gens, ab.basis()):
            chi = Cyclotomic.zeta(max(e, 1), ab.pairing(k, b))
            if chi.is_rational():
                chi = chi.to_rational()
            M = act.action[g]
            if not is_constant_matrix(alg.field, M):
                raise Unsupported("isotypic decomposition needs constant action matrices")
            M = constant_matrix(alg.field, M)
            rows.extend([[M[i][j] - (chi if i == j else 0) for j in range(n)] for i in range(n)])
        dims.append(len(kernel(rows)) if rows else n)
        chars.append(list(k))
    if sum(dims) != n:
        raise AssertionError("eigenspaces do not fill the algebra")
    mult = [Fraction(d, r) for d in dims]
    return {"characters": chars, "dims": dims, "fixed_dim": r,
            "multiplicities": [int(m) if m.denominator == 1 else str(m) for m in mult],
            "regular": all(m == 1 for m in mult) and len(dims) == G.order}


# -- d_* of finite-dimensional algebras ------------------------------------------------

@dataclass
class Bounds:
    lower: int
    upper: int


def restrict_to_rationals(alg: FinDimAlgebra) -> FinDimAlgebra:
    """View an algebra over QQ(zeta_e) as an algebra over QQ with basis zeta^a b_i."""
    if alg.field.is_function_field:
        raise Unsupported("d_* needs an algebra over QQ or QQ(zeta)")
    e = alg.field.cyclotomic_order
    if e <= 2:
        def rat(c):
            return c.to_rational() if isinstance(c, Cyclotomic) else Fraction(c)
        table = {k: {m: rat(c) for m, c in v.items()} for k, v in alg.table.items()}
        unit = alg.unit if isinstance(alg.unit, int) else {m: rat(c) for m, c in alg.unit.items()}
        return FinDimAlgebra(BaseField(), alg.labels, table, unit, alg.name)
    p = euler_phi(e)
    labels = [f"z^{a}*{lab}" for lab in alg.labels for a in range(p)]
    table = {}
    for (i, j), prod in alg.table.items():
        for a in range(p):
            for b in range(p):
                za = Cyclotomic.zeta(e, a + b)
                out = {}
                for m, c in prod.items():
                    w = (za * c).lift(e) if isinstance(c, Cyclotomic) else za * c
                    for t, x in enumerate(w.c):
                        if x:
                            out[m * p + t] = x
                table[(i * p + a, j * p + b)] = out
    one = alg.one()
    unit = {}
    for m, c in one.items():
        w = c.lift(e) if isinstance(c, Cyclotomic) else Cyclotomic.from_rational(e, c)
        for t, x in enumerate(w.c):
            if x:
                unit[m * p + t] = x
    return FinDimAlgebra(BaseField(), labels, table, unit, alg.name)


def _structure(alg: FinDimAlgebra):
    """Dense structure constants c[i][j] = list over m."""
    n = alg.dim
    zero = Fraction(0)
    c = [[[zero] * n for _ in range(n)] for _ in range(n)]
    for (i, j), prod in alg.table.items():
        for m, v in prod.items():
            c[i][j][m] = Fraction(v)
    return c


def _mul_vec(c, u, v):
    n = len(u)
    out = [Fraction(0)] * n
    for i, a in enumerate(u):
        if a:
            ci = c[i]
            for j, b in enumerate(v):
                if b:
                    ab = a * b
                    for m, x in enumerate(ci[j]):
                        if x:
                            out[m] += ab * x
    return out


def _radical_and_quotient(c):
    """Radical basis (trace-form kernel) and structure constants of the quotient."""
    n = len(c)
    tau = [sum(c[m][k][k] for k in range(n)) for m in range(n)]  # trace of left multiplication
    gram = [[sum((x * t for x, t in zip(c[i][j], tau) if x), Fraction(0)) for j in range(n)] for i in range(n)]
    rad = kernel(gram)
    if not rad:
        return [], c
    R, piv = rref(rad)
    R = R[: len(piv)]
    comp = [k for k in range(n) if k not in set(piv)]

    def reduce(v):
        v = list(v)
        for row, p in zip(R, piv):
            if v[p]:
                f = v[p]
                v = [a - f * b if b else a for a, b in zip(v, row)]
        return [v[k] for k in comp]

    q = len(comp)
    cq = [[None] * q for _ in range(q)]
    for a, i in enumerate(comp):
        for b, j in enumerate(comp):
            cq[a][b] = reduce(c[i][j])
    return rad, cq


def _center(c):
    """Basis of the center by successive kernels of ad_b over the current candidate space."""
    n = len(c)
    K = [[Fraction(int(i == j)) for i in range(n)] for j in range(n)]
    for b in range(n):
        eb = [Fraction(int(k == b)) for k in range(n)]
        images = [[x - y for x, y in zip(_mul_vec(c, v, eb), _mul_vec(c, eb, v))] for v in K]
        if all(not any(im) for im in images):
            continue
        # coefficient vectors w with sum_k w_k images[k] = 0
        cols = [[images[k][r] for k in range(len(K))] for r in range(n)]
        ker = kernel(cols)
        K = [[sum((w[k] * K[k][t] for k in range(len(K)) if w[k]), Fraction(0)) for t in range(n)] for w in ker]
        if not K:
            break
    return K


def _span_rank(vectors) -> int:
    return mat_rank(vectors) if vectors else 0


def d_star_algebra(alg: FinDimAlgebra, seed: int = 0, attempts: int = 8):
    """Largest irreducible representation dimension over an algebraic closure.

    Over QQ each simple component of A/rad(A) is M_k(Delta) with Delta of
    index m over its center L, and it becomes [L:QQ] copies of M_{km} after
    extending scalars; km = sqrt(dim_QQ e S / dim_QQ e Z) for the central
    idempotent e of the component.  Returns Bounds when no tried central
    element generates the center.
    """
    Q = restrict_to_rationals(alg)
    c = _structure(Q)
    rad, cq = _radical_and_quotient(c)
    q = len(cq)
    if q == 0:
        return Bounds(0, 0)
    Z = _center(cq)
    zdim = len(Z)
    if zdim == q:
        return 1
    rng = random.Random(seed)
    found = 1
    for _ in range(attempts):
        coeffs = [rng.randint(-9, 9) for _ in Z]
        z = [sum((a * v[t] for a, v in zip(coeffs, Z)), Fraction(0)) for t in range(q)]
        # minimal polynomial of z: first linear dependency among its powers
        one = _unit_of(cq)
        powers = [one]
        while True:
            nxt = _mul_vec(cq, powers[-1], z)
            cols = [[p[r] for p in powers + [nxt]] for r in range(q)]
            ker = kernel(cols)
            if ker:
                rel = ker[0]
                break
            powers.append(nxt)
        deg = len(powers)
        if deg < zdim:
            continue
        x = sympy.Symbol("x")
        lead = rel[-1]
        minpoly = sympy.Poly([sympy.Rational(r.numerator, r.denominator) / sympy.Rational(lead.numerator, lead.denominator)
                              for r in reversed(rel)], x, domain="QQ")
        _, factors = sympy.factor_list(minpoly.as_expr(), x)
        factors = [sympy.Poly(f, x, domain="QQ") for f, _ in factors]
        best = 1
        ok = True
        for f in factors:
            cof = sympy.quo(minpoly, f)
            s, _, _ = sympy.gcdex(cof, f)  # s * cof = 1 mod f
            e_poly = sympy.rem(s * cof, minpoly)
            e = _poly_at(cq, e_poly, z, one)
            sdim = _span_rank([_mul_vec(cq, e, [Fraction(int(k == t)) for t in range(q)]) for k in range(q)])
            zd = _span_rank([_mul_vec(cq, e, v) for v in Z])
            ratio = Fraction(sdim, zd)
            root = isqrt(int(ratio)) if ratio.denominator == 1 else -1
            if root < 0 or root * root != ratio:
                ok = False
                break
            best = max(best, root)
        if ok:
            return best
        found = max(found, best)
    return Bounds(found, isqrt(q))


def _unit_of(c):
    """The unit of an algebra given by dense structure constants (solve u b_j = b_j for all j)."""
    n = len(c)
    # u = sum_i u_i b_i with sum_i u_i c[i][j] = e_j for every j: n^2 equations
    rows, rhs = [], []
    for j in range(n):
        for m in range(n):
            rows.append([c[i][j][m] for i in range(n)])
            rhs.append(Fraction(int(m == j)))
    return solve_linear(rows, rhs)


def _poly_at(c, poly, z, one):
    coeffs = [Fraction(int(sympy.fraction(a)[0]), int(sympy.fraction(a)[1])) for a in poly.all_coeffs()]
    acc = [Fraction(0)] * len(z)
    for a in coeffs:  # Horner
        acc = _mul_vec(c, acc, z)
        acc = [x + a * u for x, u in zip(acc, one)]
    return acc


# -- block-matrix algebras and random subalgebras -------------------------------------------

def block_algebra(sizes) -> FinDimAlgebra:
    """Direct sum of Mat_n over QQ, with matrix-unit bases concatenated."""
    f = BaseField()
    labels, offsets = [], []
    off = 0
    for b, n in enumerate(sizes):
        offsets.append(off)
        labels += [f"B{b}E{i}{j}" for i in range(n) for j in range(n)]
        off += n * n
    table = {}
    unit = {}
    for b, n in enumerate(sizes):
        o = offsets[b]
        for i in range(n):
            unit[o + i * n + i] = f.one
            for j in range(n):
                for l in range(n):
                    table[(o + i * n + j, o + j * n + l)] = {o + i * n + l: f.one}
    return FinDimAlgebra(f, labels, table, unit, name="+".join(f"Mat{n}" for n in sizes))


def subalgebra_from_generators(sizes, generators, max_rounds: int = 64) -> FinDimAlgebra:
    """The unital subalgebra of a block-matrix algebra generated by the given block tuples."""

    def flat(blocks):
        return [x for B in blocks for r in B for x in r]

    def mm(X, Y):
        return [[[sum((a * b for a, b in zip(r, col) if a and b), Fraction(0)) for col in zip(*By)] for r in Bx]
                for Bx, By in zip(X, Y)]

    def unflat(v):
        out, k = [], 0
        for n in sizes:
            out.append([[v[k + i * n + j] for j in range(n)] for i in range(n)])
            k += n * n
        return out

    one = [[[Fraction(int(i == j)) for j in range(n)] for i in range(n)] for n in sizes]
    elems = [one] + [[[[Fraction(x) for x in r] for r in B] for B in g] for g in generators]
    basis, piv = span_basis([flat(e) for e in elems])
    for _ in range(max_rounds):
        mats = [unflat(v) for v in basis]
        new = [flat(mm(a, b)) for a in mats for b in mats]
        basis2, piv2 = span_basis(basis + new)
        if len(basis2) == len(basis):
            break
        basis, piv = basis2, piv2
    mats = [unflat(v) for v in basis]
    d = len(basis)
    table = {}
    for i in range(d):
        for j in range(d):
            coords = coordinates_in(basis, piv, flat(mm(mats[i], mats[j])))
            if coords is None:
                raise AssertionError("subalgebra is not closed")
            table[(i, j)] = {k: x for k, x in enumerate(coords) if x}
    unit_coords = coordinates_in(basis, piv, flat(one))
    unit = {k: x for k, x in enumerate(unit_coords) if x}
    return FinDimAlgebra(BaseField(), [f"v{i}" for i in range(d)], table, unit, name="subalgebra")


def _random_block(rng, n, shape):
    def r():
        return rng.randint(-2, 2)
    if shape == "scalar":
        s = r()
        return [[s if i == j else 0 for j in range(n)] for i in range(n)]
    if shape == "diagonal":
        return [[r() if i == j else 0 for j in range(n)] for i in range(n)]
    if shape == "upper":
        return [[r() if j >= i else 0 for j in range(n)] for i in range(n)]
    if shape == "strict":
        return [[r() if j > i else 0 for j in range(n)] for i in range(n)]
    return [[r() for _ in range(n)] for _ in range(n)]


@dataclass
class HarnessReport:
    trials: int
    violations: list
    samples: list

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_json(self) -> dict:
        return {"trials": self.trials, "violations": self.violations, "ok": self.ok,
                "samples": self.samples[:10]}


def harness_trial(seed: int):
    """One sample: (sizes, d_*(A), dim B, d_*(B))."""
    rng = random.Random(seed)
    while True:
        sizes = sorted(rng.randint(1, 4) for _ in range(rng.randint(1, 3)))
        if sum(n * n for n in sizes) <= 30:
            break
    shapes = ["scalar", "diagonal", "upper", "strict", "full"]
    gens = []
    for _ in range(rng.randint(1, 2)):
        gens.append([_random_block(rng, n, rng.choice(shapes)) for n in sizes])
    B = subalgebra_from_generators(sizes, gens)
    dA = _cached_block_dstar(tuple(sizes))
    dB = d_star_algebra(B, seed=seed)
    return sizes, dA, B.dim, dB


_BLOCK_DSTAR = {}


def _cached_block_dstar(sizes):
    if sizes not in _BLOCK_DSTAR:
        _BLOCK_DSTAR[sizes] = d_star_algebra(block_algebra(list(sizes)))
    return _BLOCK_DSTAR[sizes]


def subalgebra_monotonicity_harness(trials: int = 200, seed: int = 0) -> HarnessReport:
    """d_*(B) <= d_*(A) for random unital subalgebras B of random block-matrix algebras A."""
    violations, samples = [], []
    for t in range(trials):
        s = seed * 1_000_003 + t
        sizes, dA, dimB, dB = harness_trial(s)
        upper_B = dB.upper if isinstance(dB, Bounds) else dB
        lower_A = dA.lower if isinstance(dA, Bounds) else dA
        rec = {"trial": t, "sizes": sizes, "d_A": _enc(dA), "dim_B": dimB, "d_B": _enc(dB)}
        samples.append(rec)
        if upper_B > lower_A:
            violations.append(rec)
    return HarnessReport(trials, violations, samples)


def _enc(d):
    return {"lower": d.lower, "upper": d.upper} if isinstance(d, Bounds) else d


# -- character degree bound for A^dual x| G ----------------------------------------------------

@dataclass
class PIBoundReport:
    group_order: int
    gamma_order: int
    degrees: list
    max_degree: int
    bound: int
    classes: int

    @property
    def consistent(self) -> bool:
        return sum(d * d for d in self.degrees) == self.gamma_order and len(self.degrees) == self.classes

    @property
    def ok(self) -> bool:
        return self.consistent and self.max_degree <= self.bound

    def to_json(self) -> dict:
        return {"group_order": self.group_order, "gamma_order": self.gamma_order, "degrees": self.degrees,
                "max_degree": self.max_degree, "bound": self.bound, "classes": self.classes,
                "consistent": self.consistent, "ok": self.ok}


def gamma_perm_group(c: BijCocycle) -> PermGroup:
    P, _ = GammaGroup(c).to_perm_group()
    return P


def pi_bound_check(c: BijCocycle, X=None, seed: int = 0) -> PIBoundReport:
    """Max character degree of A^dual x| G against |G|^2.

    X (a symmetric set built from c) is accepted for symmetry with the other
    checks; the bound only depends on the cocycle.  Twisting the coproduct leaves the algebra k[Gamma] unchanged, so its
    irreducible dimensions are the character degrees of Gamma.
    """
    P = gamma_perm_group(c)
    degs = character_degrees(P, seed=seed)
    d = c.G.order
    return PIBoundReport(d, P.order, sorted(degs), max(degs), d * d, len(P.conjugacy_classes))

