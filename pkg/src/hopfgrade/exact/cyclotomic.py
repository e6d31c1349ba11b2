"""Exact arithmetic in cyclotomic fields Q(zeta_e).

An element is stored as its coefficient vector in the power basis
1, zeta, ..., zeta^(phi(e)-1), i.e. as the canonical residue of a polynomial
in zeta modulo the e-th cyclotomic polynomial.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd
from numbers import Rational as _RationalABC


def _lcm(a, b):
    return a * b // gcd(a, b)


def _poly_divexact(num, den):
    """Exact division of integer polynomials (coefficient lists, low degree first)."""
    num = list(num)
    out = [0] * (len(num) - len(den) + 1)
    lead = den[-1]
    for i in range(len(out) - 1, -1, -1):
        q, r = divmod(num[i + len(den) - 1], lead)
        if r:
            raise ArithmeticError("inexact polynomial division")
        out[i] = q
        for j, d in enumerate(den):
            num[i + j] -= q * d
    if any(num[: len(den) - 1]):
        raise ArithmeticError("inexact polynomial division")
    return out


@lru_cache(maxsize=None)
def cyclotomic_polynomial(e: int) -> tuple:
    """Integer coefficients of Phi_e, lowest degree first."""
    if e < 1:
        raise ValueError("order must be positive")
    poly = [-1] + [0] * (e - 1) + [1]
    for d in range(1, e):
        if e % d == 0:
            poly = _poly_divexact(poly, cyclotomic_polynomial(d))
    return tuple(poly)


@lru_cache(maxsize=None)
def euler_phi(e: int) -> int:
    return len(cyclotomic_polynomial(e)) - 1


@lru_cache(maxsize=None)
def _power_table(e: int) -> tuple:
    """Rows x^k mod Phi_e for 0 <= k < max(e, 2*phi(e)), as integer tuples."""
    phi = cyclotomic_polynomial(e)
    n = len(phi) - 1
    rows = []
    cur = [0] * n
    cur[0] = 1
    for _ in range(max(e, 2 * n)):
        rows.append(tuple(cur))
        # multiply by x, then reduce x^n = -(phi_0 + ... + phi_{n-1} x^{n-1})
        top = cur[-1]
        cur = [0] + cur[:-1]
        if top:
            for i in range(n):
                cur[i] -= top * phi[i]
    return tuple(rows)


def _reduce(e: int, raw) -> tuple:
    """Reduce a polynomial in zeta (dict exponent -> coeff, or list) modulo Phi_e."""
    n = euler_phi(e)
    table = _power_table(e)
    out = [Fraction(0)] * n
    items = raw.items() if isinstance(raw, dict) else enumerate(raw)
    for k, c in items:
        if not c:
            continue
        row = table[k % e]
        for i in range(n):
            if row[i]:
                out[i] += c * row[i]
    return tuple(out)


def cyclotomic_reduce(e: int, raw) -> "Cyclotomic":
    """Canonical representative of ``raw`` (a polynomial in zeta_e) in Q(zeta_e).

    ``raw`` is a coefficient list (lowest degree first) or a mapping from
    integer exponents (negative allowed) to rational coefficients.
    """
    if e < 1:
        raise ValueError("order must be positive")
    return Cyclotomic._make(e, _reduce(e, raw))


class Cyclotomic:
    """An element of Q(zeta_e) with exact rational coefficients."""

    __slots__ = ("e", "c")

    def __init__(self, e: int, coeffs=None):
        if e < 1:
            raise ValueError("order must be positive")
        n = euler_phi(e)
        if coeffs is None:
            coeffs = ()
        coeffs = [Fraction(x) for x in coeffs]
        if len(coeffs) > n:
            c = _reduce(e, coeffs)
        else:
            c = tuple(coeffs) + (Fraction(0),) * (n - len(coeffs))
        self.e = e
        self.c = c

    @classmethod
    def _make(cls, e, c):
        obj = object.__new__(cls)
        obj.e = e
        obj.c = c
        return obj

    @classmethod
    def zeta(cls, e: int, k: int = 1) -> "Cyclotomic":
        return cls._make(e, _reduce(e, {k % e: Fraction(1)}))

    @classmethod
    def from_rational(cls, e: int, r) -> "Cyclotomic":
        n = euler_phi(e)
        return cls._make(e, (Fraction(r),) + (Fraction(0),) * (n - 1))

    # -- coercion ---------------------------------------------------------
    def lift(self, order: int) -> "Cyclotomic":
        """Embed into Q(zeta_order), which must contain Q(zeta_e)."""
        if order == self.e:
            return self
        if order % self.e:
            raise ValueError(f"Q(zeta_{self.e}) does not embed in Q(zeta_{order})")
        step = order // self.e
        return Cyclotomic._make(order, _reduce(order, {i * step: x for i, x in enumerate(self.c)}))

    def _coerce(self, other):
        if isinstance(other, Cyclotomic):
            if other.e == self.e:
                return self, other
            m = _lcm(self.e, other.e)
            return self.lift(m), other.lift(m)
        if isinstance(other, (int, _RationalABC)):
            return self, Cyclotomic.from_rational(self.e, other)
        return None, None

    # -- predicates -------------------------------------------------------
    def is_rational(self) -> bool:
        return not any(self.c[1:])

    def to_rational(self) -> Fraction:
        if not self.is_rational():
            raise ValueError("element is not rational")
        return self.c[0]

    def __bool__(self):
        return any(self.c)

    def __eq__(self, other):
        a, b = self._coerce(other)
        if a is None:
            return NotImplemented
        return a.c == b.c

    def __hash__(self):
        if self.is_rational():
            return hash(self.c[0])
        return hash((self.e, self.c))

    # -- arithmetic -------------------------------------------------------
    def __add__(self, other):
        a, b = self._coerce(other)
        if a is None:
            return NotImplemented
        return Cyclotomic._make(a.e, tuple(x + y for x, y in zip(a.c, b.c)))

    __radd__ = __add__

    def __neg__(self):
        return Cyclotomic._make(self.e, tuple(-x for x in self.c))

    def __sub__(self, other):
        a, b = self._coerce(other)
        if a is None:
            return NotImplemented
        return Cyclotomic._make(a.e, tuple(x - y for x, y in zip(a.c, b.c)))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, _RationalABC)):
            return Cyclotomic._make(self.e, tuple(x * other for x in self.c))
        a, b = self._coerce(other)
        if a is None:
            return NotImplemented
        n = len(a.c)
        if n == 1:
            return Cyclotomic._make(a.e, (a.c[0] * b.c[0],))
        prod = [0] * (2 * n - 1)
        for i, x in enumerate(a.c):
            if x:
                for j, y in enumerate(b.c):
                    if y:
                        prod[i + j] += x * y
        table = _power_table(a.e)
        out = list(prod[:n])
        for k in range(n, 2 * n - 1):
            ck = prod[k]
            if ck:
                row = table[k]
                for i in range(n):
                    if row[i]:
                        out[i] += ck * row[i]
        return Cyclotomic._make(a.e, tuple(Fraction(x) for x in out))

    __rmul__ = __mul__

    def inverse(self) -> "Cyclotomic":
        if not self:
            raise ZeroDivisionError("inverse of zero in a cyclotomic field")
        n = len(self.c)
        if n == 1:
            return Cyclotomic._make(self.e, (1 / self.c[0],))
        # column k of the multiplication matrix is self * zeta^k
        cols = []
        z = Cyclotomic.zeta(self.e)
        cur = self
        for _ in range(n):
            cols.append(cur.c)
            cur = cur * z
        rows = [[cols[k][i] for k in range(n)] + [Fraction(int(i == 0))] for i in range(n)]
        for col in range(n):
            piv = next(r for r in range(col, n) if rows[r][col])
            rows[col], rows[piv] = rows[piv], rows[col]
            p = rows[col][col]
            rows[col] = [x / p for x in rows[col]]
            for r in range(n):
                if r != col and rows[r][col]:
                    f = rows[r][col]
                    rows[r] = [x - f * y for x, y in zip(rows[r], rows[col])]
        return Cyclotomic._make(self.e, tuple(rows[i][n] for i in range(n)))

    def __truediv__(self, other):
        if isinstance(other, (int, _RationalABC)):
            if not other:
                raise ZeroDivisionError("division by zero")
            return Cyclotomic._make(self.e, tuple(x / other for x in self.c))
        a, b = self._coerce(other)
        if a is None:
            return NotImplemented
        return a * b.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        result = Cyclotomic.from_rational(self.e, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def conjugate(self) -> "Cyclotomic":
        """Complex conjugation zeta -> zeta^(-1)."""
        return cyclotomic_reduce(self.e, {-i: x for i, x in enumerate(self.c)})

    def __repr__(self):
        if self.is_rational():
            return f"Cyclotomic({self.e}, {self.c[0]})"
        terms = []
        for i, x in enumerate(self.c):
            if x:
                terms.append(f"{x}*z{self.e}^{i}" if i else str(x))
        return " + ".join(terms)

    def to_json(self):
        return {"order": self.e, "coeffs": [str(x) for x in self.c]}
