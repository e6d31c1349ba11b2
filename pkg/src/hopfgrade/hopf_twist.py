"""The twist J = sum_g g (x) 1_{pi(g)} for the group Gamma = A^dual x| G.

Coefficients are exact elements of QQ(zeta_e) with e = exp(A).  Group
algebra and tensor elements are sparse dictionaries keyed by element indices
of Gamma (tuples of indices for tensors).

Twist convention: J satisfies (Delta (x) id)(J) (J (x) 1) = (id (x) Delta)(J) (1 (x) J)
and the twisted coproduct is Delta^J(x) = J^-1 Delta(x) J.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product

from .cohomology import FinAb
from .exact.cyclotomic import Cyclotomic
from .yang_baxter import BijCocycle, GammaGroup, SymmetricSet


def _add_into(out: dict, key, val):
    if key in out:
        s = out[key] + val
        if s:
            out[key] = s
        else:
            del out[key]
    elif val:
        out[key] = val


def delta_idempotent(A: FinAb, a, e: int | None = None) -> dict:
    """1_a = |A|^-1 sum_chi chi(a)^-1 chi, keyed by character index tuples."""
    n = A.exponent
    e = e or max(n, 1)
    if e % n:
        raise ValueError("coefficient order must be a multiple of exp(A)")
    scale = Fraction(1, A.order)
    out = {}
    for k in A.elements():
        out[k] = Cyclotomic.zeta(e, (-A.pairing(k, a) * (e // n)) % e) * scale
    return {k: v for k, v in out.items() if v}


def _character_mul(A: FinAb, u: dict, v: dict) -> dict:
    out = {}
    for k1, c1 in u.items():
        for k2, c2 in v.items():
            _add_into(out, A.add(k1, k2), c1 * c2)
    return out


@dataclass
class IdempotentReport:
    idempotent: bool
    orthogonal: bool
    complete: bool

    @property
    def ok(self) -> bool:
        return self.idempotent and self.orthogonal and self.complete


def check_idempotents(A: FinAb, e: int | None = None) -> IdempotentReport:
    """Idempotence, orthogonality and completeness of the system {1_a}."""
    ids = {a: delta_idempotent(A, a, e) for a in A.elements()}
    idem = all(_character_mul(A, u, u) == u for u in ids.values())
    orth = all(not _character_mul(A, ids[a], ids[b]) for a in ids for b in ids if a != b)
    total = {}
    for u in ids.values():
        for k, c in u.items():
            _add_into(total, k, c)
    one = Cyclotomic.zeta(e or max(A.exponent, 1), 0)
    return IdempotentReport(idem, orth, total == {A.zero: one})


class HopfData:
    """Gamma with an index-based multiplication table and a candidate twist."""

    def __init__(self, c: BijCocycle, J: dict | None = None):
        self.cocycle = c
        self.Gamma = GammaGroup(c)
        self.e = max(c.A.exponent, 1)
        els = self.Gamma.elements
        self.elements = els
        self.index = {g: i for i, g in enumerate(els)}
        self.n = len(els)
        idx = self.index
        mul = self.Gamma.mul
        self.table = [[idx[mul(a, b)] for b in els] for a in els]
        self.inv = [idx[self.Gamma.inv(a)] for a in els]
        self.unit = idx[self.Gamma.identity]
        self.one = Cyclotomic.zeta(self.e, 0)
        self.J = J if J is not None else twist_element(c, self)
        self._Jinv = None
        self._coproducts = {}

    # -- tensors ---------------------------------------------------------------------
    def tmul(self, S: dict, T: dict) -> dict:
        tab = self.table
        out = {}
        for k1, c1 in S.items():
            for k2, c2 in T.items():
                key = tuple(tab[a][b] for a, b in zip(k1, k2))
                _add_into(out, key, c1 * c2)
        return out

    def tensor_one(self, arity: int) -> dict:
        return {(self.unit,) * arity: self.one}

    def embed_character(self, f) -> int:
        return self.index[(f, self.cocycle.G.identity)]

    def embed_group(self, g) -> int:
        return self.index[(self.cocycle.A.zero, g)]

    @property
    def Jinv(self) -> dict:
        if self._Jinv is None:
            self._Jinv = invert_twist(self, self.J)
        return self._Jinv

    def coproduct(self, gamma: int, convention: str = "conjugate-right") -> dict:
        """Delta^J(gamma) = J^-1 (gamma (x) gamma) J; the other convention is J (gamma (x) gamma) J^-1."""
        key = (gamma, convention)
        if key not in self._coproducts:
            D = {(gamma, gamma): self.one}
            if convention == "conjugate-right":
                val = self.tmul(self.tmul(self.Jinv, D), self.J)
            elif convention == "conjugate-left":
                val = self.tmul(self.tmul(self.J, D), self.Jinv)
            else:
                raise ValueError(f"unknown convention {convention!r}")
            self._coproducts[key] = val
        return self._coproducts[key]

    def describe(self, key) -> list:
        return [repr(self.elements[i]) for i in key]


def twist_element(c: BijCocycle, H: HopfData | None = None) -> dict:
    """J = sum_g g (x) 1_{pi(g)} with the idempotents inside the subgroup A^dual of Gamma."""
    H = H if H is not None else HopfData(c, J={})
    A = c.A
    J = {}
    for g in c.G.elements:
        left = H.embed_group(g)
        for f, coeff in delta_idempotent(A, c.table[g], H.e).items():
            _add_into(J, (left, H.embed_character(f)), coeff)
    return J


def swap_legs(T: dict) -> dict:
    return {(b, a): c for (a, b), c in T.items()}


def perturbed_twist(H: HopfData) -> dict:
    """J built from pi with the values at two non-identity elements exchanged.

    The result is still invertible and counit-normalized, but the map is no
    longer a 1-cocycle, so the twist equation must fail.
    """
    c = H.cocycle
    G = c.G
    others = [g for g in G.elements if g != G.identity]
    if len(others) < 2:
        raise ValueError("need at least two non-identity elements")
    g1, g2 = others[0], others[1]
    table = dict(c.table)
    table[g1], table[g2] = table[g2], table[g1]
    J = {}
    for g in G.elements:
        for f, coeff in delta_idempotent(c.A, table[g], H.e).items():
            _add_into(J, (H.embed_group(g), H.embed_character(f)), coeff)
    return J


def invert_twist(H: HopfData, J: dict) -> dict | None:
    """Inverse of J, or None.

    Writing J = sum_gamma gamma (x) x_gamma with gamma group-like, the candidate
    sum_gamma gamma^-1 (x) x_gamma is the inverse exactly when the x_gamma are
    orthogonal idempotents summing to 1 (and symmetrically for the other
    leg).  Candidates are certified by multiplying on both sides.
    """
    one = H.tensor_one(2)
    inv = H.inv
    for cand in ({(inv[a], b): c for (a, b), c in J.items()}, {(a, inv[b]): c for (a, b), c in J.items()}):
        if H.tmul(J, cand) == one and H.tmul(cand, J) == one:
            return cand
    return None


@dataclass
class TwistReport:
    invertible: bool
    twist_equation: bool
    counit: bool
    witness: dict = field(default_factory=dict)
    residual_terms: int = 0

    @property
    def ok(self) -> bool:
        return self.invertible and self.twist_equation and self.counit

    def to_json(self) -> dict:
        return {"invertible": self.invertible, "twist_equation": self.twist_equation,
                "counit": self.counit, "residual_terms": self.residual_terms, "witness": self.witness,
                "ok": self.ok}


def verify_twist(H: HopfData, J: dict | None = None) -> TwistReport:
    """Invertibility, the twist equation and counit normalization, all exact."""
    J = J if J is not None else H.J
    witness = {}
    Jinv = invert_twist(H, J)
    invertible = Jinv is not None
    if not invertible:
        witness["invertible"] = "no inverse among structured candidates"
    # (Delta (x) id)(J) (J (x) 1) versus (id (x) Delta)(J) (1 (x) J)
    DJ1 = {(a, a, b): c for (a, b), c in J.items()}
    J1 = {(a, b, H.unit): c for (a, b), c in J.items()}
    D2J = {(a, b, b): c for (a, b), c in J.items()}
    oneJ = {(H.unit, a, b): c for (a, b), c in J.items()}
    lhs = H.tmul(DJ1, J1)
    rhs = H.tmul(D2J, oneJ)
    residual = dict(lhs)
    for k, c in rhs.items():
        _add_into(residual, k, -c)
    eq = not residual
    if not eq:
        key = min(residual)
        witness["twist_equation"] = {"basis_tuple": H.describe(key), "residual": repr(residual[key])}
    # counit: epsilon(gamma) = 1 on group elements
    left, right = {}, {}
    for (a, b), c in J.items():
        _add_into(left, b, c)
        _add_into(right, a, c)
    unit = {H.unit: H.one}
    counit = left == unit and right == unit
    if not counit:
        witness["counit"] = {"eps_id": {repr(H.elements[k]): repr(v) for k, v in left.items()},
                             "id_eps": {repr(H.elements[k]): repr(v) for k, v in right.items()}}
    return TwistReport(invertible, eq, counit, witness, len(residual))


@dataclass
class CoproductReport:
    coassociative: bool
    cocommutative: bool
    coassociativity_witness: object = None
    cocommutativity_witness: object = None

    def to_json(self) -> dict:
        return {"coassociative": self.coassociative, "cocommutative": self.cocommutative,
                "coassociativity_witness": self.coassociativity_witness,
                "cocommutativity_witness": self.cocommutativity_witness}


def twisted_coproduct(H: HopfData, gamma, convention: str = "conjugate-right") -> dict:
    """Delta^J of a Gamma element (given as an element or an index)."""
    if not isinstance(gamma, int):
        gamma = H.index[gamma]
    return H.coproduct(gamma, convention)


def _apply_coproduct_leg(H: HopfData, T: dict, leg: int, convention: str) -> dict:
    out = {}
    for key, c in T.items():
        for (u, v), d in H.coproduct(key[leg], convention).items():
            new = key[:leg] + (u, v) + key[leg + 1:]
            _add_into(out, new, c * d)
    return out


def coproduct_properties(H: HopfData, convention: str = "conjugate-right", elements=None) -> CoproductReport:
    """Coassociativity and cocommutativity of Delta^J on the given (default: all) basis elements."""
    elements = range(H.n) if elements is None else elements
    coassoc_w = cocomm_w = None
    for g in elements:
        D = H.coproduct(g, convention)
        if cocomm_w is None and swap_legs(D) != D:
            cocomm_w = repr(H.elements[g])
        if coassoc_w is None:
            if _apply_coproduct_leg(H, D, 0, convention) != _apply_coproduct_leg(H, D, 1, convention):
                coassoc_w = repr(H.elements[g])
        if coassoc_w is not None and cocomm_w is not None:
            break
    return CoproductReport(coassoc_w is None, cocomm_w is None, coassoc_w, cocomm_w)


# -- module-algebra check on the twisted polynomial algebra ----------------------------

@dataclass
class ModuleAlgebraReport:
    ok: bool
    pairs_checked: int
    group_elements: int
    degree_bound: int
    product: str
    witness: object = None
    relation_orientation: str | None = None

    def to_json(self) -> dict:
        return {"ok": self.ok, "pairs_checked": self.pairs_checked, "group_elements": self.group_elements,
                "degree_bound": self.degree_bound, "product": self.product,
                "relation_orientation": self.relation_orientation,
                "witness": None if self.witness is None else repr(self.witness)}


class TwistedPolynomials:
    """Commutative monomials in b_x (sorted index tuples) with u * v = m(J (u (x) v)).

    For the cocycle twist this is u * v = (g_v . u) v, where g_v is
    pi^-1 of the total phi-weight of v.
    """

    def __init__(self, H: HopfData, X: SymmetricSet, product: str = "twisted"):
        self.H, self.X = H, X
        self.c = H.cocycle
        self.product = product
        self._act = {}

    def weight(self, m):
        ab = self.c.A
        w = ab.zero
        for x in m:
            w = ab.add(w, self.X.phi[x])
        return w

    def group_act(self, g, m):
        return tuple(sorted(self.X.act(g, x) for x in m))

    def act(self, gamma: int, m):
        """gamma = (f, g): m -> f(weight(g m)) g m."""
        key = (gamma, m)
        if key not in self._act:
            f, g = self.H.elements[gamma]
            gm = self.group_act(g, m)
            self._act[key] = (self.H.Gamma.character_value(f, self.weight(gm)).lift(self.H.e), gm)
        return self._act[key]

    def mul(self, u, v):
        if self.product == "commutative":
            return tuple(sorted(u + v))
        g = self.c.inverse[self.weight(v)]
        return tuple(sorted(self.group_act(g, u) + v))

    def mul_via_twist(self, u, v) -> dict:
        """m(J (u (x) v)) expanded from the tensor J, for cross-checking :meth:`mul`."""
        out = {}
        for (a, b), c in self.H.J.items():
            s1, m1 = self.act(a, u)
            s2, m2 = self.act(b, v)
            _add_into(out, tuple(sorted(m1 + m2)), c * s1 * s2)
        return out


def monomials(nvars: int, degree: int):
    from itertools import combinations_with_replacement

    return list(combinations_with_replacement(range(nvars), degree))


def degree_two_orientation(H: HopfData, X: SymmetricSet) -> str:
    """Which reading of the R-relations the twisted product satisfies in degree 2."""
    from .yang_baxter import _relation_pairs

    P = TwistedPolynomials(H, X)
    n = X.size
    classes = {}
    for x, y in product(range(n), repeat=2):
        classes.setdefault(P.mul((x,), (y,)), set()).add((x, y))
    part = {frozenset(s) for s in classes.values()}
    matches = []
    for orient in ("standard", "reversed"):
        groups = {(x, y): {(x, y)} for x, y in product(range(n), repeat=2)}
        for a, b in _relation_pairs(X.R, n, orient):
            merged = groups[a] | groups[b]
            for w in merged:
                groups[w] = merged
        if {frozenset(s) for s in groups.values()} == part:
            matches.append(orient)
    return ",".join(matches) if matches else "none"


def module_algebra_check(H: HopfData, X: SymmetricSet, N: int = 3, product: str = "twisted",
                         convention: str = "conjugate-right") -> ModuleAlgebraReport:
    """gamma . (u * v) = sum (gamma_1 . u) * (gamma_2 . v) for all gamma and monomials with deg u + deg v <= N."""
    P = TwistedPolynomials(H, X, product)
    mons = {d: monomials(X.size, d) for d in range(N + 1)}
    # the closed-form product must agree with m o J in low degree
    if product == "twisted":
        for u in mons.get(1, []) + mons[0]:
            for v in mons.get(1, []) + mons[0]:
                if P.mul_via_twist(u, v) != {P.mul(u, v): H.one}:
                    raise AssertionError("closed-form twisted product disagrees with m o J")
    pairs = 0
    for gamma in range(H.n):
        D = H.coproduct(gamma, convention)
        for du in range(N + 1):
            for dv in range(N + 1 - du):
                for u in mons[du]:
                    for v in mons[dv]:
                        pairs += gamma == 0
                        s, m = P.act(gamma, P.mul(u, v))
                        rhs = {}
                        for (a, b), c in D.items():
                            s1, m1 = P.act(a, u)
                            s2, m2 = P.act(b, v)
                            _add_into(rhs, P.mul(m1, m2), c * s1 * s2)
                        if rhs != {m: s}:
                            return ModuleAlgebraReport(False, pairs, gamma + 1, N, product,
                                                       {"gamma": H.elements[gamma], "u": u, "v": v})
    orient = degree_two_orientation(H, X) if X.R is not None and product == "twisted" else None
    return ModuleAlgebraReport(True, pairs, H.n, N, product, None, orient)
