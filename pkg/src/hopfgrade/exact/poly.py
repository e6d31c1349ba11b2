"""Multivariate polynomials over an exact field and their fraction field.

Coefficients are any exact field elements that interoperate with ``int``
(``Fraction`` or :class:`~hopfgrade.exact.cyclotomic.Cyclotomic`).  Exponent
vectors are tuples whose length equals the number of variables.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import product as _iproduct


def _deglex_key(exp):
    return (sum(exp), exp)


class MPoly:
    """Sparse multivariate polynomial; immutable."""

    __slots__ = ("vars", "terms")

    def __init__(self, variables, terms=None):
        self.vars = tuple(variables)
        n = len(self.vars)
        clean = {}
        if terms:
            for exp, c in terms.items():
                exp = tuple(exp)
                if len(exp) != n:
                    raise ValueError("exponent vector has wrong length")
                if c:
                    clean[exp] = c
        self.terms = clean

    @classmethod
    def _raw(cls, variables, terms):
        obj = object.__new__(cls)
        obj.vars = variables
        obj.terms = terms
        return obj

    @classmethod
    def const(cls, variables, c) -> "MPoly":
        variables = tuple(variables)
        return cls._raw(variables, {(0,) * len(variables): c} if c else {})

    @classmethod
    def var(cls, variables, name, coeff=1) -> "MPoly":
        variables = tuple(variables)
        i = variables.index(name)
        exp = tuple(int(j == i) for j in range(len(variables)))
        return cls._raw(variables, {exp: Fraction(coeff) if isinstance(coeff, int) else coeff})

    @classmethod
    def monomial(cls, variables, exp, coeff=1) -> "MPoly":
        return cls(variables, {tuple(exp): Fraction(coeff) if isinstance(coeff, int) else coeff})

    # -- structure --------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and not any(next(iter(self.terms))))

    def constant_value(self):
        return self.terms.get((0,) * len(self.vars), 0)

    def total_degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def degree_in(self, i: int) -> int:
        return max((e[i] for e in self.terms), default=-1)

    def leading_exp(self):
        return max(self.terms, key=_deglex_key)

    def leading_coeff(self):
        return self.terms[self.leading_exp()] if self.terms else 0

    def monic(self) -> "MPoly":
        if not self.terms:
            return self
        lc = self.leading_coeff()
        if lc == 1:
            return self
        return MPoly._raw(self.vars, {e: c / lc for e, c in self.terms.items()})

    def _check(self, other):
        if other.vars != self.vars:
            raise ValueError(f"variable mismatch {self.vars} vs {other.vars}")

    def _lift(self, other):
        if isinstance(other, MPoly):
            self._check(other)
            return other
        if isinstance(other, RatFunc):
            return None
        return MPoly.const(self.vars, other)

    # -- arithmetic -------------------------------------------------------
    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        out = dict(self.terms)
        for e, c in o.terms.items():
            v = out.get(e, 0) + c
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        return MPoly._raw(self.vars, out)

    __radd__ = __add__

    def __neg__(self):
        return MPoly._raw(self.vars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, (MPoly, RatFunc)):
            if not other:
                return MPoly._raw(self.vars, {})
            return MPoly._raw(self.vars, {e: c * other for e, c in self.terms.items()})
        o = self._lift(other)
        if o is None:
            return NotImplemented
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in o.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                v = out.get(e, 0) + c1 * c2
                if v:
                    out[e] = v
                else:
                    out.pop(e, None)
        return MPoly._raw(self.vars, out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power of a polynomial")
        result = MPoly.const(self.vars, Fraction(1))
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __truediv__(self, other):
        if isinstance(other, MPoly):
            return RatFunc(self, other)
        if isinstance(other, RatFunc):
            return RatFunc(self * other.den, other.num)
        return MPoly._raw(self.vars, {e: c / other for e, c in self.terms.items()})

    def __rtruediv__(self, other):
        return RatFunc(MPoly.const(self.vars, other), self)

    def __eq__(self, other):
        if isinstance(other, MPoly):
            return self.vars == other.vars and self.terms == other.terms
        if isinstance(other, RatFunc):
            return NotImplemented
        return self.terms == ({(0,) * len(self.vars): other} if other else {})

    def __hash__(self):
        return hash((self.vars, frozenset(self.terms.items())))

    def divmod(self, other: "MPoly"):
        """Multivariate division by a single divisor in degree-lex order."""
        self._check(other)
        if not other.terms:
            raise ZeroDivisionError("polynomial division by zero")
        lt = other.leading_exp()
        lc = other.terms[lt]
        q = {}
        r = {}
        p = dict(self.terms)
        while p:
            e = max(p, key=_deglex_key)
            c = p[e]
            if all(a >= b for a, b in zip(e, lt)):
                qe = tuple(a - b for a, b in zip(e, lt))
                qc = c / lc
                q[qe] = q.get(qe, 0) + qc
                for e2, c2 in other.terms.items():
                    k = tuple(a + b for a, b in zip(qe, e2))
                    v = p.get(k, 0) - qc * c2
                    if v:
                        p[k] = v
                    else:
                        p.pop(k, None)
            else:
                r[e] = c
                del p[e]
        return MPoly(self.vars, q), MPoly(self.vars, r)

    def exact_div(self, other: "MPoly") -> "MPoly":
        q, r = self.divmod(other)
        if r:
            raise ArithmeticError("polynomial division is not exact")
        return q

    # -- evaluation -------------------------------------------------------
    def subs(self, values: dict) -> "MPoly":
        """Substitute values for some variables; the variable list is kept."""
        idx = {self.vars.index(k): v for k, v in values.items()}
        out = MPoly._raw(self.vars, {})
        for e, c in self.terms.items():
            coeff = c
            for i, v in idx.items():
                if e[i]:
                    coeff = coeff * v ** e[i]
            ne = tuple(0 if i in idx else x for i, x in enumerate(e))
            out = out + MPoly._raw(self.vars, {ne: coeff} if coeff else {})
        return out

    def evaluate(self, point):
        """Evaluate at a point given as a sequence aligned with ``vars``."""
        total = 0
        for e, c in self.terms.items():
            v = c
            for x, k in zip(point, e):
                if k:
                    v = v * x ** k
            total = total + v
        return total

    def map_coeffs(self, f) -> "MPoly":
        return MPoly(self.vars, {e: f(c) for e, c in self.terms.items()})

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for e in sorted(self.terms, key=_deglex_key, reverse=True):
            mono = "*".join(f"{v}^{k}" if k > 1 else v for v, k in zip(self.vars, e) if k)
            c = self.terms[e]
            parts.append(f"({c})*{mono}" if mono else f"({c})")
        return " + ".join(parts)


# -- gcd via primitive polynomial remainder sequences -----------------------

def _to_univariate(p: MPoly):
    """View p as a polynomial in its first variable with coefficients in the rest."""
    rest = p.vars[1:]
    coeffs = {}
    for e, c in p.terms.items():
        d = e[0]
        coeffs.setdefault(d, {})[e[1:]] = c
    return {d: MPoly._raw(rest, t) for d, t in coeffs.items()}


def _from_univariate(variables, coeffs) -> MPoly:
    out = {}
    for d, q in coeffs.items():
        for e, c in q.terms.items():
            out[(d,) + e] = c
    return MPoly._raw(tuple(variables), out)


def _ugcd_content(coeffs):
    g = None
    for q in coeffs.values():
        g = q if g is None else poly_gcd(g, q)
        if g.is_constant():
            break
    return g


def _uprem(a, b):
    """Pseudo-remainder of univariate dicts with MPoly coefficients."""
    db = max(b)
    lb = b[db]
    r = dict(a)
    while r and max(r) >= db:
        dr = max(r)
        lr = r[dr]
        shift = dr - db
        new = {d: q * lb for d, q in r.items() if d != dr}
        for d, q in b.items():
            if d == db:
                continue
            k = d + shift
            v = new.get(k, MPoly._raw(lb.vars, {})) - lr * q
            if v:
                new[k] = v
            else:
                new.pop(k, None)
        r = {d: q for d, q in new.items() if q}
    return r


def poly_gcd(p: MPoly, q: MPoly) -> MPoly:
    """Monic (degree-lex leading coefficient 1) gcd of two polynomials."""
    p._check(q)
    if not p.terms:
        return q.monic()
    if not q.terms:
        return p.monic()
    if p.is_constant() or q.is_constant():
        return MPoly.const(p.vars, p.leading_coeff() * 0 + 1)
    if len(p.terms) == 1 or len(q.terms) == 1:
        mono, other = (p, q) if len(p.terms) == 1 else (q, p)
        g = tuple(min(col) for col in zip(*(list(mono.terms) + list(other.terms))))
        return MPoly._raw(p.vars, {g: mono.leading_coeff() * 0 + 1})
    if len(p.vars) == 0:
        return MPoly.const(p.vars, 1)
    up, uq = _to_univariate(p), _to_univariate(q)
    cp, cq = _ugcd_content(up), _ugcd_content(uq)
    c = poly_gcd(cp, cq)
    a = {d: x.exact_div(cp) for d, x in up.items()}
    b = {d: x.exact_div(cq) for d, x in uq.items()}
    if max(a) < max(b):
        a, b = b, a
    while max(b) > 0:
        r = _uprem(a, b)
        if not r:
            break
        cr = _ugcd_content(r)
        a, b = b, {d: x.exact_div(cr) for d, x in r.items()}
    if max(b) == 0:
        g = MPoly.const(p.vars, 1)
    else:
        cb = _ugcd_content(b)
        g = _from_univariate(p.vars, {d: x.exact_div(cb) for d, x in b.items()})
    lifted_c = _from_univariate(p.vars, {0: c})
    return (g * lifted_c).monic()


class RatFunc:
    """Quotient of two polynomials, kept reduced with a monic denominator."""

    __slots__ = ("num", "den")

    def __init__(self, num: MPoly, den: MPoly | None = None, *, reduce: bool = True):
        if den is None:
            den = MPoly.const(num.vars, 1)
        num._check(den)
        if not den.terms:
            raise ZeroDivisionError("rational function with zero denominator")
        if reduce:
            if not num.terms:
                den = MPoly.const(num.vars, den.leading_coeff() * 0 + 1)
            elif not den.is_constant():
                g = poly_gcd(num, den)
                if not g.is_constant():
                    num = num.exact_div(g)
                    den = den.exact_div(g)
            lc = den.leading_coeff()
            if lc != 1:
                num = num / lc
                den = den / lc
        self.num = num
        self.den = den

    @property
    def vars(self):
        return self.num.vars

    @classmethod
    def const(cls, variables, c) -> "RatFunc":
        return cls(MPoly.const(variables, c), reduce=False)

    @classmethod
    def var(cls, variables, name) -> "RatFunc":
        return cls(MPoly.var(variables, name), reduce=False)

    def _lift(self, other):
        if isinstance(other, RatFunc):
            return other
        if isinstance(other, MPoly):
            return RatFunc(other, reduce=False)
        return RatFunc(MPoly.const(self.vars, other), reduce=False)

    def __bool__(self):
        return bool(self.num.terms)

    def is_polynomial(self) -> bool:
        return self.den.is_constant()

    def __add__(self, other):
        o = self._lift(other)
        if self.den == o.den:
            return RatFunc(self.num + o.num, self.den)
        return RatFunc(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc(-self.num, self.den, reduce=False)

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._lift(other)
        if not self.num.terms or not o.num.terms:
            return RatFunc(MPoly._raw(self.vars, {}), reduce=True)
        return RatFunc(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def inverse(self) -> "RatFunc":
        if not self.num.terms:
            raise ZeroDivisionError("inverse of zero rational function")
        return RatFunc(self.den, self.num)

    def __truediv__(self, other):
        return self * self._lift(other).inverse()

    def __rtruediv__(self, other):
        return self._lift(other) * self.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        return RatFunc(self.num ** k, self.den ** k, reduce=False)

    def __eq__(self, other):
        o = self._lift(other)
        return self.num * o.den == o.num * self.den

    def __hash__(self):
        return hash((self.num, self.den))

    def evaluate(self, point):
        d = self.den.evaluate(point)
        if not d:
            raise ZeroDivisionError("denominator vanishes at the evaluation point")
        return self.num.evaluate(point) / d

    def __repr__(self):
        if self.den.is_constant():
            return repr(self.num)
        return f"({self.num}) / ({self.den})"


def poly_sqrt(p: MPoly) -> MPoly | None:
    """Exact square root in K[vars] when one exists (up to sign), else None."""
    if not p.terms:
        return p
    lead = p.leading_exp()
    if any(x % 2 for x in lead):
        return None
    lc = p.terms[lead]
    root_lc = _rational_sqrt(lc)
    if root_lc is None:
        return None
    half = tuple(x // 2 for x in lead)
    r = MPoly._raw(p.vars, {half: root_lc})
    # peel off terms in decreasing degree-lex order: p - r^2 has leading term 2*lt(r)*t
    # leading exponents of the remainder strictly decrease in a well-order
    while True:
        rem = p - r * r
        if not rem.terms:
            return r
        e = rem.leading_exp()
        if not all(a >= b for a, b in zip(e, half)):
            return None
        qe = tuple(a - b for a, b in zip(e, half))
        if _deglex_key(qe) >= _deglex_key(half):
            return None
        r = r + MPoly._raw(p.vars, {qe: rem.terms[e] / (2 * root_lc)})


def _rational_sqrt(c):
    if isinstance(c, Fraction) or isinstance(c, int):
        c = Fraction(c)
        if c < 0:
            return None
        from math import isqrt

        n, d = c.numerator, c.denominator
        rn, rd = isqrt(n), isqrt(d)
        if rn * rn == n and rd * rd == d:
            return Fraction(rn, rd)
        return None
    # cyclotomic coefficients: only rational squares are recognised
    if hasattr(c, "is_rational") and c.is_rational():
        r = _rational_sqrt(c.to_rational())
        return None if r is None else c * 0 + r
    return None


def monomials_up_to(nvars: int, degree: int):
    """All exponent vectors of total degree <= degree."""
    for e in _iproduct(range(degree + 1), repeat=nvars):
        if sum(e) <= degree:
            yield e
