"""Bijective 1-cocycles, the symmetric sets built from them, and their quadratic algebras.

A bijective 1-cocycle pi: G -> A (pi(gh) = pi(g) + g.pi(h)) together with an
equivariant map phi: X -> A yields an involutive nondegenerate solution
R(x, y) = (g_x . y, g_{g_x y}^-1 . x) of the set-theoretic Yang-Baxter
equation, where g_x = pi^-1(phi(x)).
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from itertools import product
from math import comb

from .cohomology import FinAb, GModule, dual_module
from .exact.cyclotomic import Cyclotomic
from .groups import AbstractGroup, PermGroup


class SizeMismatch(ValueError):
    """|G| differs from |A|, so no bijection exists."""


class NotCertified(RuntimeError):
    """An operation needs a symmetric set whose R passed verify_ybe."""


class BudgetExceeded(RuntimeError):
    """The word space is larger than the configured monomial budget."""


def monomial_budget() -> int:
    return int(os.environ.get("HOPFGRADE_MONOMIAL_BUDGET", "100000"))


@dataclass
class BijCocycle:
    """A bijective 1-cocycle pi: G -> A for the G-module A."""

    module: GModule
    table: dict

    @property
    def G(self):
        return self.module.group

    @property
    def A(self) -> FinAb:
        return self.module.ab

    def __post_init__(self):
        self.inverse = {a: g for g, a in self.table.items()}

    def violation(self):
        """First pair breaking the cocycle identity, or a bijectivity/normalization failure."""
        G, ab = self.G, self.A
        if any(self.table[G.identity]):
            return ("pi(1) != 0",)
        if len(self.inverse) != G.order or G.order != ab.order:
            return ("not bijective",)
        for g in G.elements:
            for h in G.elements:
                if self.table[G.mul(g, h)] != ab.add(self.table[g], self.module.act(g, self.table[h])):
                    return (g, h)
        return None

    def to_json(self) -> dict:
        G = self.G
        return {
            "group_order": G.order,
            "invariant_factors": list(self.A.factors),
            "generators": [list(g) for g in G.generators],
            "degree": G.degree,
            "action": [[list(r) for r in self.module.action[g]] for g in G.generators],
            "pi": [[list(g), list(self.table[g])] for g in G.elements],
        }

    @classmethod
    def from_json(cls, data) -> "BijCocycle":
        G = PermGroup(int(data["degree"]), [tuple(g) for g in data["generators"]])
        ab = FinAb(data["invariant_factors"])
        M = GModule.from_generator_matrices(G, ab, [tuple(tuple(r) for r in m) for m in data["action"]])
        table = {tuple(g): tuple(a) for g, a in data["pi"]}
        c = cls(M, table)
        bad = c.violation()
        if bad is not None:
            raise ValueError(f"not a bijective 1-cocycle: {bad}")
        return c


class SearchResult(list):
    """List of cocycles; ``error`` names the reason when the search is vacuous."""

    error: str | None = None


def actions(G: PermGroup, ab: FinAb):
    """All homomorphisms G -> Aut(A), as GModules, by choosing images of the generators."""
    auts = ab.automorphisms()
    out = []
    for imgs in product(auts, repeat=len(G.generators)):
        try:
            out.append(GModule.from_generator_matrices(G, ab, imgs))
        except ValueError:
            continue
    return out


def _cocycles_for_action(M: GModule):
    """All bijective 1-cocycles for one action.

    A cocycle is determined by its values on the generators through
    pi(x g) = pi(x) + x.pi(g); each choice is propagated over the Cayley graph
    and rejected on the first inconsistency or repeated value.
    """
    G, ab = M.group, M.ab
    gens = G.generators
    found = []
    for vals in product(ab.elements(), repeat=len(gens)):
        pi = {G.identity: ab.zero}
        frontier = [G.identity]
        ok = True
        while frontier and ok:
            nxt = []
            for x in frontier:
                for g, v in zip(gens, vals):
                    y = G.mul(x, g)
                    val = ab.add(pi[x], M.act(x, v))
                    if y in pi:
                        if pi[y] != val:
                            ok = False
                            break
                    else:
                        pi[y] = val
                        nxt.append(y)
                if not ok:
                    break
            frontier = nxt
        if ok and len(set(pi.values())) == G.order:
            c = BijCocycle(M, pi)
            if c.violation() is None:
                found.append(c)
    return found


def search_bijective_cocycles(G: PermGroup, ab: FinAb) -> SearchResult:
    """Every bijective 1-cocycle G -> A over every action of G on A."""
    res = SearchResult()
    if G.order != ab.order:
        res.error = "SizeMismatch"
        return res
    seen = set()
    for M in actions(G, ab):
        for c in _cocycles_for_action(M):
            key = (tuple(sorted(M.action.items())), tuple(sorted(c.table.items())))
            if key not in seen:
                seen.add(key)
                res.append(c)
    return res


# -- symmetric sets ----------------------------------------------------------------

@dataclass
class SymmetricSet:
    """X = G x S with h.(g, s) = (hg, s), phi(g, s) = g.phi_S(s), and the derived R."""

    cocycle: BijCocycle
    points: list
    phi: list
    action: dict  # group element -> permutation of point indices
    R: dict | None = None
    flags: dict = field(default_factory=lambda: {"involutive": False, "nondegenerate": False, "ybe_certified": False})

    @property
    def size(self) -> int:
        return len(self.points)

    def g_of(self, x: int):
        return self.cocycle.inverse[self.phi[x]]

    def act(self, g, x: int) -> int:
        return self.action[g][x]


def build_symmetric_set(c: BijCocycle, S, phi_S) -> SymmetricSet:
    """Points are (g, s) for g in G and s in S; equivariance is checked exhaustively."""
    G, M = c.G, c.module
    S = list(S)
    points = [(g, s) for g in G.elements for s in S]
    index = {p: i for i, p in enumerate(points)}
    phi = [M.act(g, tuple(phi_S[si])) for g, si in ((g, i) for g in G.elements for i in range(len(S)))]
    action = {}
    for h in G.elements:
        action[h] = tuple(index[(G.mul(h, g), s)] for g, s in points)
    X = SymmetricSet(c, points, phi, action)
    for h in G.elements:
        for x in range(X.size):
            if X.phi[X.act(h, x)] != M.act(h, X.phi[x]):
                raise AssertionError("phi is not equivariant")
    return X


def derive_R(X: SymmetricSet) -> dict:
    """R(x, y) = (l_x(y), l_{l_x(y)}^-1(x)) with l_x the action of pi^-1(phi(x))."""
    G = X.cocycle.G
    R = {}
    for x in range(X.size):
        gx = X.g_of(x)
        for y in range(X.size):
            u = X.act(gx, y)
            v = X.act(G.inv(X.g_of(u)), x)
            R[(x, y)] = (u, v)
    X.R = R
    return R


@dataclass
class YBEReport:
    ybe: bool
    involutive: bool
    nondegenerate: bool
    witnesses: dict

    @property
    def ok(self) -> bool:
        return self.ybe and self.involutive and self.nondegenerate

    def to_json(self) -> dict:
        return {"ybe": self.ybe, "involutive": self.involutive, "nondegenerate": self.nondegenerate,
                "witnesses": {k: list(v) if v is not None else None for k, v in self.witnesses.items()}}


def verify_ybe(R: dict, points) -> YBEReport:
    """Braid relation on all triples, involutivity and nondegeneracy on all pairs.

    Nondegeneracy: y -> first component of R(x, y) is a bijection for each x,
    and x -> second component of R(x, y) is a bijection for each y.
    """
    X = list(points)
    ybe_w = inv_w = nd_w = None
    for x, y, z in product(X, repeat=3):
        # (R x id)(id x R)(R x id) versus (id x R)(R x id)(id x R)
        a, b = R[(x, y)]
        b, c = R[(b, z)]
        a, b = R[(a, b)]
        lhs = (a, b, c)
        b2, c2 = R[(y, z)]
        a2, b2 = R[(x, b2)]
        b2, c2 = R[(b2, c2)]
        if lhs != (a2, b2, c2):
            ybe_w = (x, y, z)
            break
    for x, y in product(X, repeat=2):
        if R[R[(x, y)]] != (x, y):
            inv_w = (x, y)
            break
    n = len(X)
    for x in X:
        if len({R[(x, y)][0] for y in X}) != n:
            nd_w = ("first component", x)
            break
    if nd_w is None:
        for y in X:
            if len({R[(x, y)][1] for x in X}) != n:
                nd_w = ("second component", y)
                break
    return YBEReport(ybe_w is None, inv_w is None, nd_w is None,
                     {"ybe": ybe_w, "involutive": inv_w, "nondegenerate": nd_w})


def certify(X: SymmetricSet) -> YBEReport:
    """Derive R if needed, verify it, and set the flags."""
    if X.R is None:
        derive_R(X)
    rep = verify_ybe(X.R, range(X.size))
    X.flags = {"involutive": rep.involutive, "nondegenerate": rep.nondegenerate, "ybe_certified": rep.ok}
    return rep


# -- quadratic algebras ------------------------------------------------------------

@dataclass
class QuadraticAlgebra:
    """Generators b_0..b_{n-1}; each relation identifies two words of length 2."""

    ngens: int
    relations: list
    orientation: str = "standard"


def _relation_pairs(R: dict, n: int, orientation: str):
    """Word pairs identified in degree 2.

    ``standard``: (x, y) ~ R(x, y).  ``reversed``: (x, y) ~ reverse of R(y, x),
    the same relations read on reversed words (the opposite algebra).
    """
    pairs = []
    for x in range(n):
        for y in range(n):
            if orientation == "standard":
                w = R[(x, y)]
            elif orientation == "reversed":
                u, v = R[(y, x)]
                w = (v, u)
            else:
                raise ValueError(f"unknown orientation {orientation!r}")
            if w != (x, y):
                pairs.append(((x, y), w))
    return pairs


def quadratic_algebra(X: SymmetricSet | None = None, *, R: dict | None = None, n: int | None = None,
                      orientation: str = "standard") -> QuadraticAlgebra:
    """One relation per two-element orbit of R on pairs; fixed pairs give none."""
    if X is not None:
        if not X.flags.get("ybe_certified"):
            raise NotCertified("symmetric set has not passed verify_ybe")
        R, n = X.R, X.size
    seen = set()
    rels = []
    for a, b in _relation_pairs(R, n, orientation):
        key = frozenset((a, b))
        if key not in seen:
            seen.add(key)
            rels.append((a, b))
    return QuadraticAlgebra(n, rels, orientation)


class _UnionFind:
    def __init__(self, n):
        self.parent = list(range(n))

    def find(self, a):
        p = self.parent
        while p[a] != a:
            p[a] = p[p[a]]
            a = p[a]
        return a

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[max(ra, rb)] = min(ra, rb)


def hilbert_coeffs(B: QuadraticAlgebra, N: int, budget: int | None = None):
    """Dimensions of the degree-0..N components of the quotient of the free algebra.

    The degree-n relation space is spanned by u (w - w') v for relations
    w = w' and words u, v.  Every spanning vector is a difference of two
    words, so its rank is (#words - #classes) for the equivalence generated
    by these identifications, and the quotient has dimension #classes.
    """
    budget = budget if budget is not None else monomial_budget()
    n = B.ngens
    dims = [1]
    for deg in range(1, N + 1):
        size = n ** deg
        if size > budget:
            raise BudgetExceeded(f"{size} words in degree {deg} exceed budget {budget}")
        uf = _UnionFind(size)
        for left in range(deg - 1):
            pre = n ** (deg - left)  # words are base-n integers, most significant letter first
            post = n ** (deg - left - 2)
            for u in range(n ** left):
                for (a, b), (c, d) in B.relations:
                    w1 = (a * n + b) * post
                    w2 = (c * n + d) * post
                    base = u * pre
                    for v in range(post):
                        uf.union(base + w1 + v, base + w2 + v)
        dims.append(sum(1 for i in range(size) if uf.find(i) == i))
    return dims


def relation_space_matrix(B: QuadraticAlgebra, deg: int):
    """Rows u (w - w') v as dense integer vectors, for independent rank checks."""
    n = B.ngens
    rows = []
    for left in range(deg - 1):
        right = deg - left - 2
        for u in product(range(n), repeat=left):
            for v in product(range(n), repeat=right):
                for w1, w2 in B.relations:
                    row = [0] * (n ** deg)
                    for word, sgn in ((u + tuple(w1) + v, 1), (u + tuple(w2) + v, -1)):
                        k = 0
                        for letter in word:
                            k = k * n + letter
                        row[k] += sgn
                    rows.append(row)
    return rows


def polynomial_dims(n: int, N: int):
    return [comb(n + k - 1, k) for k in range(N + 1)]


# -- the group A^dual x| G and faithfulness ------------------------------------------

class GammaGroup(AbstractGroup):
    """Pairs (f, g) with f a character of A (as an index tuple) and (f1,g1)(f2,g2) = (f1 + g1.f2, g1 g2)."""

    def __init__(self, c: BijCocycle):
        self.cocycle = c
        self.dual = dual_module(c.module)
        G, D = c.G, self.dual
        ab = D.ab
        elements = [(f, g) for g in G.elements for f in ab.elements()]

        def mul(x, y):
            return (ab.add(x[0], D.act(x[1], y[0])), G.mul(x[1], y[1]))

        super().__init__(elements, mul, (ab.zero, G.identity), name="Gamma")
        self._inv = {(f, g): (D.act(G.inv(g), ab.neg(f)), G.inv(g)) for f, g in elements}

    def character_value(self, f, a) -> Cyclotomic:
        """f(a) as a root of unity of order exp(A)."""
        n = self.cocycle.A.exponent
        return Cyclotomic.zeta(max(n, 1), self.cocycle.A.pairing(f, a))


@dataclass
class FaithfulnessReport:
    action_faithful: bool
    phi_generates_group: bool
    phi_generates_module: bool
    gamma_faithful: bool
    witness: object = None

    @property
    def ok(self) -> bool:
        return self.action_faithful and self.phi_generates_module and self.gamma_faithful

    def to_json(self) -> dict:
        return {"action_faithful": self.action_faithful, "phi_generates_group": self.phi_generates_group,
                "phi_generates_module": self.phi_generates_module, "gamma_faithful": self.gamma_faithful,
                "ok": self.ok, "witness": None if self.witness is None else repr(self.witness)}


def gamma_matrix(Gamma: GammaGroup, X: SymmetricSet, gamma):
    """Monomial matrix of (f, g): b_x -> f(phi(g x)) b_{g x}, as {column: (row, scalar)}."""
    f, g = gamma
    return {x: (X.act(g, x), Gamma.character_value(f, X.phi[X.act(g, x)])) for x in range(X.size)}


def faithfulness_check(X: SymmetricSet) -> FaithfulnessReport:
    """Kernel of G on X, generation of A by phi(X), and the kernel of Gamma on span(X)."""
    c = X.cocycle
    G, M = c.G, c.module
    kernel = [g for g in G.elements if all(X.act(g, x) == x for x in range(X.size))]
    group_span = M.ab.span(X.phi)
    module_span = M.submodule(X.phi)
    Gamma = GammaGroup(c)
    one = Cyclotomic.zeta(max(c.A.exponent, 1), 0)
    witness = None
    for gamma in Gamma.elements:
        if gamma == Gamma.identity:
            continue
        mat = gamma_matrix(Gamma, X, gamma)
        if all(r == x and s == one for x, (r, s) in mat.items()):
            witness = gamma
            break
    return FaithfulnessReport(len(kernel) == 1, len(group_span) == M.ab.order,
                              len(module_span) == M.ab.order, witness is None, witness)
