"""Finite permutation groups, normal abelian subgroups and character degrees.

Permutations are tuples of images; ``mul(p, q)`` applies ``q`` first, so
``mul(p, q)[i] == p[q[i]]``.  Element lists are sorted lexicographically and
every "first"/"least" choice in the package uses that order.
"""

from __future__ import annotations

import os
import re
from collections import deque
from functools import cached_property
from math import gcd, isqrt

DEFAULT_ORDER_CAP = 512


class OrderBoundExceeded(RuntimeError):
    pass


class NotNormal(ValueError):
    pass


class NotAbelian(ValueError):
    pass


def order_cap() -> int:
    return int(os.environ.get("HOPFGRADE_ORDER_CAP", DEFAULT_ORDER_CAP))


def perm_mul(p, q):
    return tuple(p[i] for i in q)


def perm_inv(p):
    out = [0] * len(p)
    for i, x in enumerate(p):
        out[x] = i
    return tuple(out)


def identity_perm(n: int):
    return tuple(range(n))


def parse_cycles(text: str, degree: int):
    """Parse cycle notation such as ``(0 1)(2 3)`` into an image tuple."""
    text = text.strip()
    if text in ("", "()", "1", "id"):
        return identity_perm(degree)
    # composing several cycles: apply right-to-left
    perm = identity_perm(degree)
    for cyc in reversed(re.findall(r"\(([^()]*)\)", text)):
        pts = [int(x) for x in re.split(r"[\s,]+", cyc.strip()) if x]
        c = list(range(degree))
        for a, b in zip(pts, pts[1:] + pts[:1]):
            c[a] = b
        if sorted(c) != list(range(degree)):
            raise ValueError(f"not a permutation of degree {degree}: {text}")
        perm = perm_mul(tuple(c), perm)
    return perm


def format_cycles(p) -> str:
    seen = set()
    out = []
    for i in range(len(p)):
        if i in seen or p[i] == i:
            continue
        cyc = [i]
        j = p[i]
        while j != i:
            seen.add(j)
            cyc.append(j)
            j = p[j]
        seen.add(i)
        out.append("(" + " ".join(map(str, cyc)) + ")")
    return "".join(out) or "()"


class PermGroup:
    """A finite group generated by permutations of {0, ..., degree-1}."""

    def __init__(self, degree: int, generators=(), name: str | None = None, cap: int | None = None):
        self.degree = degree
        self.generators = [tuple(g) for g in generators]
        for g in self.generators:
            if len(g) != degree or sorted(g) != list(range(degree)):
                raise ValueError(f"invalid permutation {g} of degree {degree}")
        self.name = name
        self.cap = cap if cap is not None else order_cap()

    def __repr__(self):
        label = self.name or "PermGroup"
        return f"<{label} degree={self.degree} gens={len(self.generators)}>"

    # -- group protocol shared with the abstract groups elsewhere ------------
    @property
    def identity(self):
        return identity_perm(self.degree)

    def mul(self, a, b):
        return perm_mul(a, b)

    def inv(self, a):
        return perm_inv(a)

    @cached_property
    def elements(self):
        ident = self.identity
        seen = {ident}
        queue = deque([ident])
        while queue:
            x = queue.popleft()
            for g in self.generators:
                y = perm_mul(x, g)
                if y not in seen:
                    seen.add(y)
                    if len(seen) > self.cap:
                        raise OrderBoundExceeded(f"group order exceeds cap {self.cap}")
                    queue.append(y)
        return sorted(seen)

    @cached_property
    def index_of(self):
        return {g: i for i, g in enumerate(self.elements)}

    @property
    def order(self) -> int:
        return len(self.elements)

    def element_order(self, g) -> int:
        k, x = 1, g
        while x != self.identity:
            x = perm_mul(x, g)
            k += 1
        return k

    @cached_property
    def exponent(self) -> int:
        e = 1
        for g in self.elements:
            k = self.element_order(g)
            e = e * k // gcd(e, k)
        return e

    def is_abelian(self) -> bool:
        gens = self.generators
        return all(perm_mul(a, b) == perm_mul(b, a) for a in gens for b in gens)

    @cached_property
    def conjugacy_classes(self):
        """Classes as sorted tuples, ordered by their least element."""
        done = set()
        classes = []
        for x in self.elements:
            if x in done:
                continue
            cls = {perm_mul(perm_mul(g, x), perm_inv(g)) for g in self.elements}
            done |= cls
            classes.append(tuple(sorted(cls)))
        return classes

    @cached_property
    def class_of(self):
        return {x: i for i, c in enumerate(self.conjugacy_classes) for x in c}

    def closure(self, elements):
        """Subgroup generated by the given elements, as a frozenset."""
        gens = list(set(elements))
        ident = self.identity
        seen = {ident}
        queue = deque([ident])
        while queue:
            x = queue.popleft()
            for g in gens:
                y = perm_mul(x, g)
                if y not in seen:
                    seen.add(y)
                    queue.append(y)
        return frozenset(seen)

    def subgroup(self, members) -> "Subgroup":
        return Subgroup(self, frozenset(members))

    def fingerprint(self):
        """(order, abelian, number of classes, sorted element orders)."""
        return (
            self.order,
            self.is_abelian(),
            len(self.conjugacy_classes),
            tuple(sorted(self.element_order(g) for g in self.elements)),
        )


class Subgroup:
    """A subset of a PermGroup's elements closed under products and inverses."""

    def __init__(self, parent: PermGroup, members):
        self.parent = parent
        self.members = frozenset(members)
        if parent.identity not in self.members:
            raise ValueError("subgroup must contain the identity")
        for a in self.members:
            if perm_inv(a) not in self.members:
                raise ValueError("subset is not closed under inverses")
        for a in self.members:
            for b in self.members:
                if perm_mul(a, b) not in self.members:
                    raise ValueError("subset is not closed under products")

    @property
    def order(self) -> int:
        return len(self.members)

    @property
    def index(self) -> int:
        return self.parent.order // self.order

    @cached_property
    def is_normal(self) -> bool:
        return all(
            perm_mul(perm_mul(g, a), perm_inv(g)) in self.members
            for g in self.parent.generators
            for a in self.members
        )

    @cached_property
    def is_abelian(self) -> bool:
        ms = list(self.members)
        return all(perm_mul(a, b) == perm_mul(b, a) for a in ms for b in ms)

    def sorted_members(self):
        return sorted(self.members)

    def __eq__(self, other):
        return isinstance(other, Subgroup) and self.members == other.members

    def __hash__(self):
        return hash(self.members)

    def __repr__(self):
        return f"<Subgroup order={self.order} of {self.parent!r}>"


def close_generators(degree: int, generators, name: str | None = None, cap: int | None = None) -> PermGroup:
    """Closed permutation group; raises OrderBoundExceeded past the cap."""
    G = PermGroup(degree, generators, name=name, cap=cap)
    G.elements  # noqa: B018 - force the closure
    return G


# -- constructors -----------------------------------------------------------

def cyclic_group(n: int) -> PermGroup:
    gens = [tuple((i + 1) % n for i in range(n))] if n > 1 else []
    return close_generators(max(n, 1), gens, name=f"Z{n}")


def direct_product(G: PermGroup, H: PermGroup, name=None) -> PermGroup:
    n, m = G.degree, H.degree
    gens = [tuple(g) + tuple(range(n, n + m)) for g in G.generators]
    gens += [tuple(range(n)) + tuple(n + x for x in h) for h in H.generators]
    return close_generators(n + m, gens, name=name or f"{G.name}x{H.name}")


def abelian_group(m: int, n: int) -> PermGroup:
    return direct_product(cyclic_group(m), cyclic_group(n), name=f"Z{m}xZ{n}")


def dihedral_group(n: int) -> PermGroup:
    """Symmetries of the n-gon, order 2n."""
    rot = tuple((i + 1) % n for i in range(n))
    ref = tuple((-i) % n for i in range(n))
    return close_generators(n, [rot, ref], name=f"D{n}")


def symmetric_group(n: int) -> PermGroup:
    if n <= 1:
        return close_generators(1, [], name=f"S{n}")
    gens = [tuple([1, 0] + list(range(2, n))), tuple(list(range(1, n)) + [0])]
    return close_generators(n, gens, name=f"S{n}")


def alternating_group(n: int) -> PermGroup:
    gens = []
    for k in range(2, n):
        c = list(range(n))
        c[0], c[1], c[k] = 1, k, 0
        gens.append(tuple(c))
    return close_generators(max(n, 1), gens, name=f"A{n}")


def quaternion_group() -> PermGroup:
    """Q8 via its left regular representation on {1,-1,i,-i,j,-j,k,-k}."""
    # labels: 0:1 1:-1 2:i 3:-i 4:j 5:-j 6:k 7:-k
    table = {"1": 0, "-1": 1, "i": 2, "-i": 3, "j": 4, "-j": 5, "k": 6, "-k": 7}
    names = ["1", "-1", "i", "-i", "j", "-j", "k", "-k"]
    base = {("i", "i"): "-1", ("j", "j"): "-1", ("k", "k"): "-1",
            ("i", "j"): "k", ("j", "k"): "i", ("k", "i"): "j",
            ("j", "i"): "-k", ("k", "j"): "-i", ("i", "k"): "-j"}

    def qmul(a, b):
        sa, ua = (a[0] == "-"), a.lstrip("-")
        sb, ub = (b[0] == "-"), b.lstrip("-")
        if ua == "1":
            r = ub
        elif ub == "1":
            r = ua
        else:
            r = base[(ua, ub)]
        neg = sa ^ sb ^ r.startswith("-")
        r = r.lstrip("-")
        return ("-" + r) if neg else r

    def left(a):
        return tuple(table[qmul(a, b)] for b in names)

    return close_generators(8, [left("i"), left("j")], name="Q8")


def regular_group(elements, mul, name=None) -> tuple[PermGroup, dict]:
    """Left regular permutation representation of an abstract finite group.

    Returns the PermGroup and the map from abstract elements to permutations.
    """
    elements = list(elements)
    idx = {x: i for i, x in enumerate(elements)}
    to_perm = {x: tuple(idx[mul(x, y)] for y in elements) for x in elements}
    G = PermGroup(len(elements), list(to_perm.values()), name=name)
    return G, to_perm


class AbstractGroup:
    """A finite group given by an element list and a multiplication function."""

    def __init__(self, elements, mul, identity, name: str | None = None):
        self.elements = list(elements)
        self._mul = mul
        self.identity = identity
        self.name = name
        self.index_of = {x: i for i, x in enumerate(self.elements)}
        self._inv = {}

    def mul(self, a, b):
        return self._mul(a, b)

    def inv(self, a):
        if a not in self._inv:
            for b in self.elements:
                if self._mul(a, b) == self.identity:
                    self._inv[a] = b
                    break
        return self._inv[a]

    @property
    def order(self) -> int:
        return len(self.elements)

    def element_order(self, g) -> int:
        k, x = 1, g
        while x != self.identity:
            x = self._mul(x, g)
            k += 1
        return k

    def is_abelian(self) -> bool:
        els = self.elements
        return all(self._mul(a, b) == self._mul(b, a) for a in els for b in els)

    def check_associative(self):
        """First triple violating associativity, or None."""
        m = self._mul
        for a in self.elements:
            for b in self.elements:
                ab = m(a, b)
                for c in self.elements:
                    if m(ab, c) != m(a, m(b, c)):
                        return (a, b, c)
        return None

    def to_perm_group(self) -> tuple[PermGroup, dict]:
        return regular_group(self.elements, self._mul, name=self.name)

    def fingerprint(self):
        P, _ = self.to_perm_group()
        return P.fingerprint()


BUILTIN = {}


def builtin_group(name: str) -> PermGroup:
    """Catalog lookup: Z<n>, Z<m>xZ<n>, D<n>, Q8, S<n> (n<=5), A4, S3xZ2."""
    key = name.strip()
    if key in BUILTIN:
        return BUILTIN[key]
    m = re.fullmatch(r"Z(\d+)", key)
    if m:
        G = cyclic_group(int(m.group(1)))
    elif (m := re.fullmatch(r"Z(\d+)xZ(\d+)", key)):
        G = abelian_group(int(m.group(1)), int(m.group(2)))
    elif (m := re.fullmatch(r"D(\d+)", key)):
        G = dihedral_group(int(m.group(1)))
    elif key == "Q8":
        G = quaternion_group()
    elif (m := re.fullmatch(r"S(\d)", key)) and int(m.group(1)) <= 5:
        G = symmetric_group(int(m.group(1)))
    elif key == "A4":
        G = alternating_group(4)
    elif key == "S3xZ2":
        G = direct_product(symmetric_group(3), cyclic_group(2), name="S3xZ2")
    else:
        raise KeyError(f"unknown group {name!r}")
    BUILTIN[key] = G
    return G


def parse_catalog(text: str) -> dict:
    """Parse ``name <label>; degree <n>; gens <cycles>, <cycles>`` entries, one per line."""
    groups = {}
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        fields = {}
        for part in line.split(";"):
            part = part.strip()
            if not part:
                continue
            key, _, val = part.partition(" ")
            fields[key] = val.strip()
        degree = int(fields["degree"])
        gens = []
        if fields.get("gens"):
            for g in re.split(r",\s*(?=\()", fields["gens"]):
                gens.append(parse_cycles(g, degree))
        groups[fields["name"]] = close_generators(degree, gens, name=fields["name"])
    return groups


def format_catalog_entry(G: PermGroup) -> str:
    gens = ", ".join(format_cycles(g) for g in G.generators)
    return f"name {G.name}; degree {G.degree}; gens {gens}"


# -- subgroup structure -----------------------------------------------------

def normal_subgroups(G: PermGroup):
    """All normal subgroups, found by closing unions of conjugacy classes."""
    classes = G.conjugacy_classes
    trivial = frozenset([G.identity])
    found = {trivial}
    queue = deque([trivial])
    while queue:
        N = queue.popleft()
        for c in classes:
            if c[0] in N:
                continue
            M = G.closure(list(N) + list(c))
            if M not in found:
                found.add(M)
                queue.append(M)
    return sorted(found, key=lambda s: (len(s), sorted(s)))


def normal_abelian_subgroups(G: PermGroup):
    """Every subgroup of G that is both normal and abelian."""
    out = []
    for members in normal_subgroups(G):
        H = Subgroup(G, members)
        if H.is_abelian:
            out.append(H)
    return out


def min_abelian_index(G: PermGroup) -> int:
    """Least index of a normal abelian subgroup of G."""
    return min(H.index for H in normal_abelian_subgroups(G))


def can_grade(G: PermGroup, d: int) -> bool:
    """Whether some normal abelian subgroup of G has index dividing d."""
    if d < 1:
        raise ValueError("degree must be positive")
    return any(d % H.index == 0 for H in normal_abelian_subgroups(G))


def all_subgroups(G: PermGroup):
    """Every subgroup, as joins of cyclic subgroups (brute force, small groups)."""
    cyclic = {G.closure([g]) for g in G.elements}
    found = set(cyclic)
    frontier = set(cyclic)
    while frontier:
        new = set()
        for H in frontier:
            for C in cyclic:
                if C <= H:
                    continue
                K = G.closure(list(H | C))
                if K not in found:
                    new.add(K)
        found |= new
        frontier = new
    return sorted(found, key=lambda s: (len(s), sorted(s)))


def quotient(G: PermGroup, N: Subgroup):
    """G/N acting on left cosets; returns (quotient group, projection dict)."""
    if not N.is_normal:
        raise NotNormal("subgroup is not normal")
    cosets = []
    coset_of = {}
    for g in G.elements:
        if g in coset_of:
            continue
        c = frozenset(perm_mul(g, n) for n in N.members)
        for x in c:
            coset_of[x] = len(cosets)
        cosets.append(c)
    reps = [min(c) for c in cosets]

    def act(g):
        return tuple(coset_of[perm_mul(g, r)] for r in reps)

    Q = close_generators(len(cosets), [act(g) for g in G.generators],
                         name=f"{G.name}/N" if G.name else None)
    projection = {g: act(g) for g in G.elements}
    return Q, projection


# -- character degrees --------------------------------------------------------

def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    i = 2
    while i * i <= p:
        if p % i == 0:
            return False
        i += 1
    return True


def class_algebra_prime(order: int, exponent: int) -> int:
    """Smallest prime p with p == 1 (mod exponent) and p > 2*order."""
    p = 2 * order + 1
    while not (p % exponent == 1 % exponent and _is_prime(p)):
        p += 1
    return p


def _mat_mul_mod(A, B, p):
    Bt = list(zip(*B))
    return [[sum(a * b for a, b in zip(r, c)) % p for c in Bt] for r in A]


def _nullspace_mod(A, p):
    """Basis of {v : A v = 0} over F_p."""
    rows = [list(r) for r in A]
    ncols = len(rows[0]) if rows else 0
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(rows)) if rows[i][c] % p), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = pow(rows[r][c], p - 2, p)
        rows[r] = [x * inv % p for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [(x - f * y) % p for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
    basis = []
    for f in (c for c in range(ncols) if c not in pivots):
        v = [0] * ncols
        v[f] = 1
        for i, pc in enumerate(pivots):
            v[pc] = (-rows[i][f]) % p
        basis.append(v)
    return basis


def _restrict(M, basis, p):
    """Matrix of M restricted to the invariant subspace spanned by ``basis`` (columns)."""
    k = len(basis)
    images = [[sum(M[i][j] * v[j] for j in range(len(v))) % p for i in range(len(M))] for v in basis]
    # solve basis * X = image for each image
    n = len(basis[0])
    cols = []
    for img in images:
        aug = [[basis[c][i] for c in range(k)] + [img[i]] for i in range(n)]
        sol = _solve_mod_p(aug, k, p)
        cols.append(sol)
    return [[cols[j][i] for j in range(k)] for i in range(k)]


def _solve_mod_p(aug, k, p):
    rows = [list(r) for r in aug]
    r = 0
    pivots = []
    for c in range(k):
        piv = next((i for i in range(r, len(rows)) if rows[i][c] % p), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = pow(rows[r][c], p - 2, p)
        rows[r] = [x * inv % p for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [(x - f * y) % p for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
    sol = [0] * k
    for i, c in enumerate(pivots):
        sol[c] = rows[i][k]
    return sol


def _eigen_split(M, p):
    """Eigenvalues in F_p (brute force over F_p) of a diagonalizable matrix with their eigenspaces."""
    n = len(M)
    out = []
    total = 0
    for lam in range(p):
        A = [[(M[i][j] - (lam if i == j else 0)) % p for j in range(n)] for i in range(n)]
        ker = _nullspace_mod(A, p)
        if ker:
            out.append((lam, ker))
            total += len(ker)
            if total == n:
                break
    return out


def class_multiplication(G: PermGroup):
    """Constants a[j][k][l] with C_j C_k = sum_l a[j][k][l] C_l."""
    classes = G.conjugacy_classes
    r = len(classes)
    cls = G.class_of
    a = [[[0] * r for _ in range(r)] for _ in range(r)]
    reps = [c[0] for c in classes]
    for j, C in enumerate(classes):
        for x in C:
            xi = perm_inv(x)
            for l, g in enumerate(reps):
                y = perm_mul(xi, g)
                a[j][cls[y]][l] += 1
    return a


def character_degrees(G: PermGroup, seed: int = 0):
    """Irreducible character degrees (sorted) via the class algebra over F_p.

    Common eigenvectors of the class-sum multiplication operators give the
    central characters omega; each degree satisfies
    d^2 = |G| / sum_C omega(C) omega(C^-1) / |C|, computed mod p and lifted.
    """
    import random

    classes = G.conjugacy_classes
    r = len(classes)
    n = G.order
    p = class_algebra_prime(n, G.exponent)
    a = class_multiplication(G)
    # (M_j)[l][k] = a[j][k][l]
    mats = [[[a[j][k][l] % p for k in range(r)] for l in range(r)] for j in range(r)]
    rng = random.Random(seed)
    spaces = [[[int(i == j) for i in range(r)] for j in range(r)]]
    attempts = 0
    while any(len(s) > 1 for s in spaces):
        attempts += 1
        if attempts > 50:
            raise RuntimeError("class algebra failed to split")
        coeffs = [rng.randrange(p) for _ in range(r)]
        combo = [[sum(c * m[i][k] for c, m in zip(coeffs, mats)) % p for k in range(r)] for i in range(r)]
        new_spaces = []
        for S in spaces:
            if len(S) == 1:
                new_spaces.append(S)
                continue
            R = _restrict(combo, S, p)
            for _, ker in _eigen_split(R, p):
                # lift kernel vectors back to the ambient space
                new_spaces.append([[sum(v[t] * S[t][i] for t in range(len(S))) % p for i in range(r)] for v in ker])
        spaces = new_spaces
    inverse_class = [G.class_of[perm_inv(c[0])] for c in classes]
    degrees = []
    for (v,) in spaces:
        piv = next(i for i in range(r) if v[i])
        inv_piv = pow(v[piv], p - 2, p)
        omega = []
        for m in mats:
            w = sum(m[piv][k] * v[k] for k in range(r)) % p
            omega.append(w * inv_piv % p)
        s = 0
        for j, C in enumerate(classes):
            s += omega[j] * omega[inverse_class[j]] * pow(len(C), p - 2, p)
        d2 = n * pow(s % p, p - 2, p) % p
        d = isqrt(d2)
        if d * d != d2:
            raise ArithmeticError(f"degree lift failed: d^2 = {d2} mod {p}")
        degrees.append(d)
    degrees.sort()
    if sum(d * d for d in degrees) != n or len(degrees) != r:
        raise ArithmeticError("character degrees fail the sum-of-squares check")
    return degrees
