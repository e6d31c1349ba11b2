"""Finite abelian groups as modules over finite groups, cocycles and the
embedding of an extension into an untwisted wreath-type semidirect product.

Abelian group elements are integer tuples; component i lives in Z/n_i.  A
group acts through integer matrices ``M`` with ``a -> M a`` reduced row-wise.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations, product

from .exact.linalg import NoSolution, solve_integer_congruences
from .groups import AbstractGroup, NotAbelian, NotNormal, PermGroup, Subgroup, quotient


class NotACoboundary(ArithmeticError):
    """The 2-cocycle represents a nontrivial cohomology class."""


def _lcm(a, b):
    from math import gcd

    return a * b // gcd(a, b)


class FinAb:
    """Z/n_1 x ... x Z/n_k with n_1 | n_2 | ... | n_k."""

    def __init__(self, invariant_factors):
        self.factors = tuple(int(n) for n in invariant_factors)
        for n in self.factors:
            if n < 1:
                raise ValueError("invariant factors must be positive")
        for a, b in zip(self.factors, self.factors[1:]):
            if b % a:
                raise ValueError(f"invariant factors must form a divisibility chain: {self.factors}")

    def __repr__(self):
        return "FinAb(" + "x".join(f"Z{n}" for n in self.factors) + ")" if self.factors else "FinAb(1)"

    def __eq__(self, other):
        return isinstance(other, FinAb) and self.factors == other.factors

    def __hash__(self):
        return hash(self.factors)

    @property
    def rank(self) -> int:
        return len(self.factors)

    @property
    def order(self) -> int:
        n = 1
        for f in self.factors:
            n *= f
        return n

    @property
    def exponent(self) -> int:
        return self.factors[-1] if self.factors else 1

    @property
    def zero(self):
        return (0,) * len(self.factors)

    def elements(self):
        return list(product(*(range(n) for n in self.factors)))

    def norm(self, a):
        return tuple(x % n for x, n in zip(a, self.factors))

    def add(self, a, b):
        return tuple((x + y) % n for x, y, n in zip(a, b, self.factors))

    def sub(self, a, b):
        return tuple((x - y) % n for x, y, n in zip(a, b, self.factors))

    def neg(self, a):
        return tuple((-x) % n for x, n in zip(a, self.factors))

    def scale(self, k, a):
        return tuple((k * x) % n for x, n in zip(a, self.factors))

    def apply(self, M, a):
        return tuple(sum(M[i][j] * a[j] for j in range(len(a))) % n for i, n in enumerate(self.factors))

    def element_order(self, a) -> int:
        from math import gcd

        o = 1
        for x, n in zip(a, self.factors):
            o = _lcm(o, n // gcd(x, n))
        return o

    def span(self, gens):
        """Subgroup generated by gens, as a frozenset."""
        seen = {self.zero}
        frontier = [self.zero]
        gens = [self.norm(g) for g in gens]
        while frontier:
            nxt = []
            for x in frontier:
                for g in gens:
                    y = self.add(x, g)
                    if y not in seen:
                        seen.add(y)
                        nxt.append(y)
            frontier = nxt
        return frozenset(seen)

    def pairing(self, k, a) -> int:
        """Value in Z/exponent of the character indexed by k at a."""
        n = self.exponent
        return sum(ki * ai * (n // ni) for ki, ai, ni in zip(k, a, self.factors)) % n

    def is_automorphism(self, M) -> bool:
        imgs = [self.apply(M, e) for e in self.basis()]
        for e, img, n in zip(self.basis(), imgs, self.factors):
            if self.element_order(img) > n or n % self.element_order(img):
                return False
        return len({self.apply(M, a) for a in self.elements()}) == self.order

    def basis(self):
        k = len(self.factors)
        return [tuple(int(i == j) for i in range(k)) for j in range(k)]

    def identity_matrix(self):
        k = len(self.factors)
        return tuple(tuple(int(i == j) for j in range(k)) for i in range(k))

    def automorphisms(self):
        """All automorphisms as matrices (columns are images of the basis)."""
        by_order = {}
        for a in self.elements():
            by_order.setdefault(self.element_order(a), []).append(a)
        basis = self.basis()
        k = len(basis)
        out = []
        choices = []
        for n in self.factors:
            # image of a generator of order n must have order dividing n
            choices.append([a for a in self.elements() if n % self.element_order(a) == 0])
        for imgs in product(*choices):
            M = tuple(tuple(imgs[j][i] for j in range(k)) for i in range(k))
            if len({self.apply(M, a) for a in self.elements()}) == self.order:
                out.append(M)
        return out


def mat_mul_mod(A, B, factors):
    k = len(factors)
    return tuple(
        tuple(sum(A[i][t] * B[t][j] for t in range(k)) % factors[i] for j in range(k)) for i in range(k)
    )


def _candidate_types(N):
    """All invariant-factor chains with product N (factors >= 2)."""
    out = []

    def rec(rest, prev, acc):
        if rest == 1:
            out.append(tuple(reversed(acc)))
            return
        for d in range(2, rest + 1):
            if rest % d == 0 and (prev is None or prev % d == 0):
                rec(rest // d, d, acc + [d])

    rec(N, None, [])
    return out


def abelian_structure(group, members):
    """Isomorphism from an abelian subgroup (given by members) onto a FinAb.

    Returns (FinAb, to_ab, from_ab) with dictionaries in both directions.
    """
    members = sorted(members)
    N = len(members)
    mul, ident = group.mul, group.identity

    def order(g):
        k, x = 1, g
        while x != ident:
            x = mul(x, g)
            k += 1
        return k

    stats = {}
    for g in members:
        o = order(g)
        stats[o] = stats.get(o, 0) + 1
    chosen = None
    for facs in _candidate_types(N) if N > 1 else [()]:
        A = FinAb(facs)
        st = {}
        for a in A.elements():
            o = A.element_order(a)
            st[o] = st.get(o, 0) + 1
        if st == stats:
            chosen = A
            break
    if chosen is None:
        raise NotAbelian("subset is not an abelian group")
    A = chosen
    by_order = {}
    for g in members:
        by_order.setdefault(order(g), []).append(g)

    def powers(g):
        out = [ident]
        x = g
        while x != ident:
            out.append(x)
            x = mul(x, g)
        return out

    def search(i, gens, span):
        if i < 0:
            return gens
        n = A.factors[i]
        for g in by_order.get(n, []):
            pw = powers(g)
            if any(p in span for p in pw[1:]):
                continue
            new_span = {mul(s, p) for s in span for p in pw}
            if len(new_span) != len(span) * n:
                continue
            res = search(i - 1, {**gens, i: g}, new_span)
            if res is not None:
                return res
        return None

    gens = search(len(A.factors) - 1, {}, {ident})
    if gens is None:
        raise NotAbelian("could not decompose subgroup")
    from_ab = {}
    for a in A.elements():
        x = ident
        for i, k in enumerate(a):
            for _ in range(k):
                x = mul(x, gens[i])
        from_ab[a] = x
    to_ab = {x: a for a, x in from_ab.items()}
    if len(to_ab) != N:
        raise NotAbelian("decomposition is not bijective")
    return A, to_ab, from_ab


class GModule:
    """A finite abelian group with an action of a finite group by matrices."""

    def __init__(self, group, ab: FinAb, action: dict, check: bool = True):
        self.group = group
        self.ab = ab
        self.action = {g: tuple(tuple(r) for r in M) for g, M in action.items()}
        if check:
            self.validate()

    def act(self, g, a):
        return self.ab.apply(self.action[g], a)

    def validate(self):
        G = self.group
        for g in G.elements:
            if not self.ab.is_automorphism(self.action[g]):
                raise ValueError("action matrix is not an automorphism")
        if self.action[G.identity] != self.ab.identity_matrix():
            raise ValueError("identity does not act trivially")
        elems = G.elements
        basis = self.ab.basis()
        for g in elems:
            for h in elems:
                gh = G.mul(g, h)
                for e in basis:
                    if self.act(gh, e) != self.act(g, self.act(h, e)):
                        raise ValueError("action is not a homomorphism")

    def is_trivial(self) -> bool:
        ident = self.ab.identity_matrix()
        return all(M == ident for M in self.action.values())

    def submodule(self, gens):
        """Submodule generated by gens: the subgroup spanned by their orbits."""
        orbit = {self.act(g, f) for f in gens for g in self.group.elements}
        return self.ab.span(orbit)

    @classmethod
    def trivial(cls, group, ab: FinAb) -> "GModule":
        I = ab.identity_matrix()
        return cls(group, ab, {g: I for g in group.elements}, check=False)

    @classmethod
    def from_generator_matrices(cls, group: PermGroup, ab: FinAb, gen_mats) -> "GModule":
        """Extend matrices given on the group's generators to a full action."""
        I = ab.identity_matrix()
        action = {group.identity: I}
        frontier = [group.identity]
        while frontier:
            nxt = []
            for x in frontier:
                for g, M in zip(group.generators, gen_mats):
                    y = group.mul(x, g)
                    N = mat_mul_mod(action[x], M, ab.factors)
                    if y in action:
                        if action[y] != N:
                            raise ValueError("generator matrices do not define an action")
                    else:
                        action[y] = N
                        nxt.append(y)
            frontier = nxt
        return cls(group, ab, action)


def dual_module(M: GModule) -> GModule:
    """Character group with the contragredient action.

    The character indexed by k is a -> sum_i k_i a_i (n/n_i) in Z/n, and the
    matrix for h is W^-1 T(h^-1)^T W with W = diag(n/n_i).
    """
    ab = M.ab
    f = ab.factors
    action = {}
    for h in M.group.elements:
        T = M.action[M.group.inv(h)]
        k = len(f)
        D = []
        for i in range(k):
            row = []
            for j in range(k):
                t = T[j][i] % f[j]
                num = t * f[i]
                if num % f[j]:
                    raise ArithmeticError("dual action is not integral")
                row.append((num // f[j]) % f[i])
            D.append(tuple(row))
        action[h] = tuple(D)
    return GModule(M.group, ab, action)


def min_module_generators(M: GModule):
    """(m, generators): fewest elements whose orbits generate M, by exhaustive search."""
    full = M.ab.order
    # sparsest candidates first, standard basis vectors in coordinate order
    elems = sorted((a for a in M.ab.elements() if any(a)),
                   key=lambda a: (sum(1 for x in a if x), tuple(reversed(a))))
    if full == 1:
        return 0, []
    for m in range(1, M.ab.rank + 1 if M.ab.rank else 1):
        for combo in combinations(elems, m):
            if len(M.submodule(combo)) == full:
                return m, list(combo)
    # rank bounds the count for group generation, so this is unreachable
    raise AssertionError("module generation search failed")


@dataclass
class Cocycle2:
    """Normalized 2-cocycle H x H -> A for a module over H."""

    module: GModule
    table: dict
    check: bool = field(default=True, repr=False)

    def __post_init__(self):
        if self.check:
            bad = self.violation()
            if bad is not None:
                raise ValueError(f"not a normalized 2-cocycle at {bad}")

    def __call__(self, h1, h2):
        return self.table[(h1, h2)]

    def violation(self):
        """First triple or pair violating normalization or the cocycle identity."""
        H = self.module.group
        ab = self.module.ab
        e = H.identity
        for h in H.elements:
            if any(self.table[(e, h)]) or any(self.table[(h, e)]):
                return (h,)
        for h1 in H.elements:
            for h2 in H.elements:
                c12 = self.table[(h1, h2)]
                h12 = H.mul(h1, h2)
                for h3 in H.elements:
                    lhs = ab.add(self.module.act(h1, self.table[(h2, h3)]), self.table[(h1, H.mul(h2, h3))])
                    rhs = ab.add(self.table[(h12, h3)], c12)
                    if lhs != rhs:
                        return (h1, h2, h3)
        return None

    @classmethod
    def zero(cls, module: GModule) -> "Cocycle2":
        z = module.ab.zero
        els = module.group.elements
        return cls(module, {(a, b): z for a in els for b in els}, check=False)


def coboundary(module: GModule, mu: dict) -> dict:
    """(d mu)(h1, h2) = h1.mu(h2) - mu(h1 h2) + mu(h1)."""
    H = module.group
    ab = module.ab
    return {
        (h1, h2): ab.add(ab.sub(module.act(h1, mu[h2]), mu[H.mul(h1, h2)]), mu[h1])
        for h1 in H.elements
        for h2 in H.elements
    }


def coboundary_solve(c: Cocycle2) -> dict:
    """Cochain mu with d mu = c, from the integer congruence system; else NotACoboundary."""
    M = c.module
    H = M.group
    ab = M.ab
    k = ab.rank
    els = H.elements
    pos = {h: i for i, h in enumerate(els)}
    nvar = len(els) * k
    rows, rhs, mods = [], [], []
    for h1 in els:
        T = M.action[h1]
        for h2 in els:
            h12 = H.mul(h1, h2)
            target = c.table[(h1, h2)]
            for i in range(k):
                row = [0] * nvar
                for j in range(k):
                    row[pos[h2] * k + j] += T[i][j]
                row[pos[h12] * k + i] -= 1
                row[pos[h1] * k + i] += 1
                rows.append(row)
                rhs.append(target[i])
                mods.append(ab.factors[i])
    if nvar == 0:
        return {h: () for h in els}
    try:
        x = solve_integer_congruences(rows, rhs, mods)
    except NoSolution:
        raise NotACoboundary("cocycle is not a coboundary") from None
    mu = {h: ab.norm(tuple(x[pos[h] * k + j] for j in range(k))) for h in els}
    if coboundary(M, mu) != {key: ab.norm(v) for key, v in c.table.items()}:
        raise ArithmeticError("coboundary solution failed verification")
    return mu


class TwistedSemidirect(AbstractGroup):
    """Pairs (a, h) with (a1,h1)(a2,h2) = (a1 + h1.a2 + c(h1,h2), h1 h2)."""

    def __init__(self, module: GModule, cocycle: Cocycle2 | None = None, name=None):
        self.module = module
        self.cocycle = cocycle if cocycle is not None else Cocycle2.zero(module)
        H = module.group
        ab = module.ab
        elements = [(a, h) for h in H.elements for a in ab.elements()]
        table = self.cocycle.table

        def mul(x, y):
            a1, h1 = x
            a2, h2 = y
            return (ab.add(ab.add(a1, module.act(h1, a2)), table[(h1, h2)]), H.mul(h1, h2))

        super().__init__(elements, mul, (ab.zero, H.identity), name=name)


def twisted_semidirect(M: GModule, c: Cocycle2 | None = None, verify: bool = True) -> TwistedSemidirect:
    """The group A_c x| H; associativity is verified exhaustively unless disabled."""
    T = TwistedSemidirect(M, c)
    if verify:
        bad = T.check_associative()
        if bad is not None:
            raise ValueError(f"twisted product is not associative at {bad}")
    return T


@dataclass
class GroupHom:
    source: object
    target: object
    table: dict

    def __call__(self, g):
        return self.table[g]

    def multiplicative_violation(self):
        S, T = self.source, self.target
        for a in S.elements:
            for b in S.elements:
                if self.table[S.mul(a, b)] != T.mul(self.table[a], self.table[b]):
                    return (a, b)
        return None

    def kernel(self):
        e = self.target.identity
        return [g for g in self.source.elements if self.table[g] == e]

    @property
    def injective(self) -> bool:
        return len(self.kernel()) == 1


@dataclass
class Extension:
    """Data of G as an extension of H = G/A by the abelian normal subgroup A."""

    G: PermGroup
    A: Subgroup
    H: PermGroup
    projection: dict
    splitting: dict
    module: GModule
    cocycle: Cocycle2
    to_ab: dict
    from_ab: dict

    def decompose(self, g):
        """(a, h) with g = a s(h)."""
        h = self.projection[g]
        a = self.G.mul(g, self.G.inv(self.splitting[h]))
        return self.to_ab[a], h


def cocycle_from_extension(G: PermGroup, A: Subgroup) -> Extension:
    """Quotient, conjugation action, least-element splitting and the 2-cocycle of G."""
    if not A.is_normal:
        raise NotNormal("A is not normal in G")
    if not A.is_abelian:
        raise NotAbelian("A is not abelian")
    H, proj = quotient(G, A)
    splitting = {}
    for g in G.elements:  # sorted, so the first hit is the least element
        splitting.setdefault(proj[g], g)
    if splitting[H.identity] != G.identity:
        raise AssertionError("splitting must send 1 to 1")
    ab, to_ab, from_ab = abelian_structure(G, A.members)
    action = {}
    for h in H.elements:
        s = splitting[h]
        si = G.inv(s)
        cols = [to_ab[G.mul(G.mul(s, from_ab[e]), si)] for e in ab.basis()]
        action[h] = tuple(tuple(cols[j][i] for j in range(ab.rank)) for i in range(ab.rank))
    module = GModule(H, ab, action)
    table = {}
    for h1 in H.elements:
        for h2 in H.elements:
            x = G.mul(G.mul(splitting[h1], splitting[h2]), G.inv(splitting[H.mul(h1, h2)]))
            table[(h1, h2)] = to_ab[x]
    cocycle = Cocycle2(module, table)
    ext = Extension(G, A, H, proj, splitting, module, cocycle, to_ab, from_ab)
    # reconstruction: (a, h) -> a s(h) is an isomorphism A_c x| H -> G
    T = twisted_semidirect(module, cocycle, verify=False)
    rebuild = {x: G.mul(from_ab[x[0]], splitting[x[1]]) for x in T.elements}
    hom = GroupHom(T, G, rebuild)
    if len(set(rebuild.values())) != G.order or hom.multiplicative_violation() is not None:
        raise AssertionError("extension does not reconstruct G")
    return ext


@dataclass
class ShapiroEmbedding:
    hom: GroupHom
    extension: Extension
    exponent: int
    m: int
    dual_generators: list
    coinduced: GModule
    pushed_cocycle: Cocycle2
    mu: dict
    residual_zero: bool

    @property
    def target(self):
        return self.hom.target


def coinduced_module(H, n: int, m: int) -> GModule:
    """Fun(H, Z/n)^m with (k.F)(i, h) = F(i, k^-1 h); coordinate (i, h) -> i*|H| + index(h)."""
    els = H.elements
    pos = {h: i for i, h in enumerate(els)}
    size = m * len(els)
    ab = FinAb([n] * size)
    action = {}
    for k in els:
        M = [[0] * size for _ in range(size)]
        for i in range(m):
            for h in els:
                # output coordinate (i, h) reads input coordinate (i, k^-1 h)
                src = H.mul(H.inv(k), h)
                M[i * len(els) + pos[h]][i * len(els) + pos[src]] = 1
        action[k] = M
    return GModule(H, ab, action, check=False)


def shapiro_embedding(G: PermGroup, A: Subgroup) -> ShapiroEmbedding:
    """Injective homomorphism G -> Fun(H, Z/n)^m x| H, with every step verified."""
    ext = cocycle_from_extension(G, A)
    H, ab = ext.H, ext.module.ab
    n = ab.exponent
    dual = dual_module(ext.module)
    m, fs = min_module_generators(dual)
    target_module = coinduced_module(H, n, m)
    els = H.elements
    idx = {h: i for i, h in enumerate(els)}

    def psi_dual(a):
        out = [0] * (m * len(els))
        for i, f in enumerate(fs):
            for h in els:
                out[i * len(els) + idx[h]] = ab.pairing(dual.act(h, f), a)
        return tuple(out)

    image = {a: psi_dual(a) for a in ab.elements()}
    if len(set(image.values())) != ab.order:
        raise AssertionError("dual map is not injective")
    for h in els:
        for a in ab.elements():
            if image[ext.module.act(h, a)] != target_module.act(h, image[a]):
                raise AssertionError("dual map is not equivariant")
    pushed = Cocycle2(target_module, {key: image[v] for key, v in ext.cocycle.table.items()})
    try:
        mu = coboundary_solve(pushed)
    except NotACoboundary as exc:
        raise RuntimeError(
            "pushed cocycle is not a coboundary, contradicting vanishing for coinduced coefficients"
        ) from exc
    residual = coboundary(target_module, mu) == pushed.table
    target = twisted_semidirect(target_module, None, verify=False)
    tab = target_module.ab
    table = {}
    for g in G.elements:
        a, h = ext.decompose(g)
        table[g] = (tab.add(image[a], mu[h]), h)
    hom = GroupHom(G, target, table)
    bad = hom.multiplicative_violation()
    if bad is not None:
        raise AssertionError(f"embedding is not multiplicative at {bad}")
    if not hom.injective:
        raise AssertionError("embedding has a nontrivial kernel")
    for g in G.elements:
        if table[g][1] != ext.projection[g]:
            raise AssertionError("embedding does not lift the quotient map")
    return ShapiroEmbedding(hom, ext, n, m, fs, target_module, pushed, mu, residual)
