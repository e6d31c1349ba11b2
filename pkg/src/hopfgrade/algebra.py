"""Finite-dimensional algebras given by structure constants.

Coefficients live in a :class:`BaseField`: the rationals, a cyclotomic field,
or a rational function field over either of these.  Over a function field the
structure constants are stored as polynomials (``MPoly``); the models used in
this package never need denominators in their structure constants.

An element is a sparse ``dict`` from basis index to nonzero coefficient.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass
from fractions import Fraction

from .exact.cyclotomic import Cyclotomic
from .exact.linalg import kernel, mat_rank
from .exact.poly import MPoly


@dataclass(frozen=True)
class BaseField:
    """QQ, QQ(zeta_e), or either of them adjoined with independent variables."""

    cyclotomic_order: int = 1
    variables: tuple = ()

    @property
    def is_function_field(self) -> bool:
        return bool(self.variables)

    def describe(self) -> str:
        k = "QQ" if self.cyclotomic_order <= 2 else f"QQ(zeta{self.cyclotomic_order})"
        return k + (f"({','.join(self.variables)})" if self.variables else "")

    def constant(self, x):
        """Embed an int, Fraction or Cyclotomic into this field."""
        if self.cyclotomic_order > 2 and not isinstance(x, Cyclotomic):
            x = Cyclotomic.from_rational(self.cyclotomic_order, Fraction(x))
        elif self.cyclotomic_order <= 2 and not isinstance(x, Cyclotomic):
            x = Fraction(x)
        if self.variables:
            return MPoly.const(self.variables, x)
        return x

    @property
    def one(self):
        return self.constant(1)

    @property
    def zero(self):
        return self.constant(0)

    def zeta(self, k: int = 1):
        e = self.cyclotomic_order
        if e <= 2:
            return self.constant((-1) ** (k % 2) if e == 2 else 1)
        return self.constant(Cyclotomic.zeta(e, k))

    def var(self, name: str):
        return MPoly.var(self.variables, name, self.constant_field_one())

    def constant_field_one(self):
        return Cyclotomic.from_rational(self.cyclotomic_order, 1) if self.cyclotomic_order > 2 else Fraction(1)

    def specialize(self, x, point):
        """Value of a field element at a point of the variables (identity on constants)."""
        if isinstance(x, MPoly):
            return x.evaluate(point)
        return x

    def constant_value(self, x):
        """The constant behind x, or None if x depends on the variables."""
        if isinstance(x, MPoly):
            return x.constant_value() if x.is_constant() else None
        return x


def is_constant_matrix(field: BaseField, rows) -> bool:
    return all(field.constant_value(x) is not None for r in rows for x in r)


def constant_matrix(field: BaseField, rows):
    return [[field.constant_value(x) for x in r] for r in rows]


def random_points(nvars: int, count: int, seed: int, bound: int = 10**6):
    rng = random.Random(seed)
    return [tuple(rng.randint(-bound, bound) for _ in range(nvars)) for _ in range(count)]


def generic_rank(field: BaseField, rows, seed: int = 0, points: int = 3):
    """(rank, method, points) of a matrix over the field.

    Constant matrices are ranked exactly.  Otherwise the rank is the maximum
    over random integer specializations, which is a lower bound for the
    generic rank and equals it with high probability; a full-rank
    specialization certifies generic full rank.
    """
    if not rows:
        return 0, "exact", []
    if is_constant_matrix(field, rows):
        return mat_rank(constant_matrix(field, rows)), "exact", []
    pts = random_points(len(field.variables), points, seed)
    best = 0
    full = min(len(rows), len(rows[0]))
    for p in pts:
        r = mat_rank([[field.specialize(x, p) for x in row] for row in rows])
        best = max(best, r)
        if best == full:
            break
    return best, "specialization", [list(p) for p in pts]


class FinDimAlgebra:
    """Associative unital algebra with basis b_0..b_{n-1} and products b_i b_j = sum_k c_ij^k b_k."""

    def __init__(self, field: BaseField, labels, table, unit=0, name: str | None = None):
        self.field = field
        self.labels = list(labels)
        self.dim = len(self.labels)
        # the unit is a basis index or, e.g. for matrix algebras, a sparse element
        self.unit = unit
        self._one = {unit: field.one} if isinstance(unit, int) else {k: c for k, c in unit.items() if c}
        self.name = name
        # table[(i, j)] is a sparse dict {k: coefficient}
        self.table = {}
        for key, val in table.items():
            if isinstance(val, dict):
                items = val.items()
            else:
                items = enumerate(val)
            self.table[tuple(key)] = {k: c for k, c in items if c}

    def __repr__(self):
        return f"<FinDimAlgebra {self.name or ''} dim={self.dim} over {self.field.describe()}>"

    # -- elements -------------------------------------------------------------
    def basis(self, i: int) -> dict:
        return {i: self.field.one}

    def one(self) -> dict:
        return dict(self._one)

    def add(self, u: dict, v: dict) -> dict:
        out = dict(u)
        for k, c in v.items():
            s = out.get(k, 0) + c if k in out else c
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        return out

    def scale(self, a, u: dict) -> dict:
        return {k: a * c for k, c in u.items() if a * c}

    def sub(self, u: dict, v: dict) -> dict:
        return self.add(u, {k: -c for k, c in v.items()})

    def mul(self, u: dict, v: dict) -> dict:
        out = {}
        for i, a in u.items():
            for j, b in v.items():
                ab = a * b
                for k, c in self.table.get((i, j), {}).items():
                    t = ab * c
                    if k in out:
                        s = out[k] + t
                        if s:
                            out[k] = s
                        else:
                            del out[k]
                    elif t:
                        out[k] = t
        return out

    def vector(self, u: dict):
        z = self.field.zero
        return [u.get(k, z) for k in range(self.dim)]

    def from_vector(self, vec) -> dict:
        return {k: c for k, c in enumerate(vec) if c}

    # -- checks ---------------------------------------------------------------
    def associativity_violation(self):
        """First basis triple with (b_i b_j) b_k != b_i (b_j b_k), or None."""
        n = self.dim
        for i in range(n):
            for j in range(n):
                ij = self.mul(self.basis(i), self.basis(j))
                for k in range(n):
                    if self.mul(ij, self.basis(k)) != self.mul(self.basis(i), self.table_product(j, k)):
                        return (i, j, k)
        return None

    def table_product(self, j, k) -> dict:
        return dict(self.table.get((j, k), {}))

    def unit_violation(self):
        one = self.one()
        for i in range(self.dim):
            b = self.basis(i)
            if self.mul(one, b) != b or self.mul(b, one) != b:
                return i
        return None

    def commutes(self, u: dict, v: dict) -> bool:
        return self.mul(u, v) == self.mul(v, u)

    def is_commutative(self) -> bool:
        return all(self.commutes(self.basis(i), self.basis(j)) for i in range(self.dim) for j in range(i))

    # -- matrices ---------------------------------------------------------------
    def left_matrix(self, u: dict):
        """Matrix of v -> u v in the basis (columns are images of basis vectors)."""
        cols = [self.vector(self.mul(u, self.basis(j))) for j in range(self.dim)]
        return [[cols[j][i] for j in range(self.dim)] for i in range(self.dim)]

    def right_matrix(self, u: dict):
        cols = [self.vector(self.mul(self.basis(j), u)) for j in range(self.dim)]
        return [[cols[j][i] for j in range(self.dim)] for i in range(self.dim)]

    def commutator_matrix(self, u: dict):
        L, R = self.left_matrix(u), self.right_matrix(u)
        return [[a - b for a, b in zip(rl, rr)] for rl, rr in zip(L, R)]

    def specialize(self, point) -> "FinDimAlgebra":
        """The algebra over the constant field obtained by evaluating the variables at point."""
        f = self.field
        base = BaseField(f.cyclotomic_order, ())
        table = {key: {k: f.specialize(c, point) for k, c in val.items()} for key, val in self.table.items()}
        return FinDimAlgebra(base, self.labels, table, self.unit, name=self.name)

    # -- serialization ------------------------------------------------------------
    def to_json(self) -> dict:
        if self.field.is_function_field:
            raise ValueError("only algebras over QQ or QQ(zeta) are serialized")

        def enc(c):
            if isinstance(c, Cyclotomic):
                return [str(x) for x in c.lift(self.field.cyclotomic_order).c]
            return str(c)

        return {
            "field": {"cyclotomic_order": self.field.cyclotomic_order},
            "basis": self.labels,
            "unit": self.unit if isinstance(self.unit, int) else {str(k): enc(c) for k, c in self.unit.items()},
            "products": [
                {"i": i, "j": j, "coeffs": {str(k): enc(c) for k, c in sorted(v.items())}}
                for (i, j), v in sorted(self.table.items())
                if v
            ],
        }

    @classmethod
    def from_json(cls, data) -> "FinDimAlgebra":
        """Inverse of :meth:`to_json`; coefficient strings are rationals like "3/2"."""
        if isinstance(data, str):
            data = json.loads(data)
        e = int(data.get("field", {}).get("cyclotomic_order", 1))
        field = BaseField(e, ())

        def dec(c):
            if isinstance(c, list):
                return Cyclotomic(e, [Fraction(x) for x in c]) if e > 2 else Fraction(c[0])
            return field.constant(Fraction(c))

        table = {}
        for entry in data["products"]:
            table[(int(entry["i"]), int(entry["j"]))] = {int(k): dec(c) for k, c in entry["coeffs"].items()}
        unit = data.get("unit", 0)
        unit = int(unit) if not isinstance(unit, dict) else {int(k): dec(c) for k, c in unit.items()}
        return cls(field, data["basis"], table, unit, name=data.get("name"))


def matrix_algebra(n: int, field: BaseField | None = None) -> FinDimAlgebra:
    """Mat_n with the matrix-unit basis E_ij at index i*n + j."""
    field = field or BaseField()
    labels = [f"E{i}{j}" for i in range(n) for j in range(n)]
    table = {}
    for i in range(n):
        for j in range(n):
            for k in range(n):
                for l in range(n):
                    table[(i * n + j, k * n + l)] = {i * n + l: field.one} if j == k else {}
    return FinDimAlgebra(field, labels, table, unit={i * n + i: field.one for i in range(n)}, name=f"Mat{n}")


def truncated_polynomial_algebra(k: int) -> FinDimAlgebra:
    """QQ[t]/(t^k) with basis 1, t, ..., t^(k-1)."""
    f = BaseField()
    table = {(i, j): ({i + j: f.one} if i + j < k else {}) for i in range(k) for j in range(k)}
    return FinDimAlgebra(f, [f"t^{i}" for i in range(k)], table, 0, name=f"QQ[t]/(t^{k})")


def group_algebra(G, field: BaseField | None = None) -> FinDimAlgebra:
    """k[G] for a group with ``elements``, ``mul`` and ``identity``."""
    field = field or BaseField()
    els = list(G.elements)
    idx = {g: i for i, g in enumerate(els)}
    table = {(i, j): {idx[G.mul(a, b)]: field.one} for i, a in enumerate(els) for j, b in enumerate(els)}
    return FinDimAlgebra(field, [str(i) for i in range(len(els))], table, idx[G.identity], name="group algebra")


def kernel_basis(field: BaseField, rows, ncols: int | None = None):
    """Exact kernel of a matrix whose entries are constants of the field."""
    if not rows:
        one = field.constant_field_one()
        return [[one if i == j else one * 0 for i in range(ncols)] for j in range(ncols)]
    if not is_constant_matrix(field, rows):
        raise ValueError("exact kernel requires constant entries")
    return kernel(constant_matrix(field, rows))
