"""Dense exact linear algebra over any field whose elements mix with ``int``.

Entries may be ``Fraction``, ``Cyclotomic`` or ``RatFunc``; zero tests use
truthiness.  Integer-matrix routines (Smith form, congruence solving) live at
the bottom of the module.
"""

from __future__ import annotations

from fractions import Fraction


class NoSolution(ArithmeticError):
    """An inconsistent linear system."""


class Matrix:
    """A rows x cols grid of exact field elements."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, entries, cols: int | None = None):
        entries = [list(r) for r in entries]
        self.rows = len(entries)
        self.cols = len(entries[0]) if entries else (cols or 0)
        if any(len(r) != self.cols for r in entries):
            raise ValueError("ragged matrix")
        self.entries = entries

    @classmethod
    def zeros(cls, rows: int, cols: int, zero=Fraction(0)) -> "Matrix":
        return cls([[zero] * cols for _ in range(rows)], cols=cols)

    @classmethod
    def identity(cls, n: int, one=Fraction(1)) -> "Matrix":
        zero = one * 0
        return cls([[one if i == j else zero for j in range(n)] for i in range(n)], cols=n)

    def __getitem__(self, idx):
        i, j = idx
        return self.entries[i][j]

    def __eq__(self, other):
        return (
            isinstance(other, Matrix)
            and (self.rows, self.cols) == (other.rows, other.cols)
            and all(a == b for ra, rb in zip(self.entries, other.entries) for a, b in zip(ra, rb))
        )

    def __matmul__(self, other):
        if isinstance(other, Matrix):
            if self.cols != other.rows:
                raise ValueError("shape mismatch")
            tcols = list(zip(*other.entries)) if other.rows else [()] * other.cols
            out = []
            for r in self.entries:
                row = []
                for c in tcols:
                    acc = 0
                    for a, b in zip(r, c):
                        if a and b:
                            acc = acc + a * b
                    row.append(acc)
                out.append(row)
            return Matrix(out, cols=other.cols)
        # vector
        return [sum((a * b for a, b in zip(r, other) if a and b), 0) for r in self.entries]

    def transpose(self) -> "Matrix":
        return Matrix([list(c) for c in zip(*self.entries)], cols=self.rows) if self.rows else Matrix([], cols=0)

    def map(self, f) -> "Matrix":
        return Matrix([[f(x) for x in r] for r in self.entries], cols=self.cols)

    def rank(self) -> int:
        return mat_rank(self)

    def kernel(self):
        return kernel(self)

    def det(self):
        return det(self)

    def __repr__(self):
        return f"Matrix({self.entries})"


def _rows(M):
    return M.entries if isinstance(M, Matrix) else M


def rref(M):
    """Reduced row echelon form; returns (rows, pivot_columns)."""
    rows = [list(r) for r in _rows(M)]
    if not rows:
        return rows, []
    ncols = len(rows[0])
    pivots = []
    r = 0
    for c in range(ncols):
        piv = None
        for i in range(r, len(rows)):
            if rows[i][c]:
                piv = i
                break
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        p = rows[r][c]
        if p != 1:
            inv = 1 / p
            rows[r] = [x * inv if x else x for x in rows[r]]
        pr = rows[r]
        for i in range(len(rows)):
            if i != r:
                f = rows[i][c]
                if f:
                    rows[i] = [x - f * y if y else x for x, y in zip(rows[i], pr)]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows, pivots


def mat_rank(M) -> int:
    """Exact rank by Gaussian elimination (forward pass only)."""
    rows = [list(r) for r in _rows(M)]
    if not rows:
        return 0
    ncols = len(rows[0])
    r = 0
    for c in range(ncols):
        piv = None
        for i in range(r, len(rows)):
            if rows[i][c]:
                piv = i
                break
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        pr = rows[r]
        inv = 1 / pr[c]
        for i in range(r + 1, len(rows)):
            f = rows[i][c]
            if f:
                f = f * inv
                rows[i] = [x - f * y if y else x for x, y in zip(rows[i], pr)]
        r += 1
        if r == len(rows):
            break
    return r


def kernel(M):
    """Basis of the right null space {v : M v = 0} as a list of vectors."""
    rows = _rows(M)
    if isinstance(M, Matrix):
        ncols = M.cols
    else:
        ncols = len(rows[0]) if rows else 0
    if not rows:
        one = Fraction(1)
        return [[one if i == j else one * 0 for i in range(ncols)] for j in range(ncols)]
    R, pivots = rref(rows)
    sample = next((x for r in rows for x in r if x), Fraction(1))
    one = sample * 0 + 1
    zero = sample * 0
    free = [c for c in range(ncols) if c not in set(pivots)]
    basis = []
    for f in free:
        v = [zero] * ncols
        v[f] = one
        for i, p in enumerate(pivots):
            if R[i][f]:
                v[p] = -R[i][f]
        basis.append(v)
    return basis


def solve_linear(M, b):
    """Some exact solution x of M x = b; raises NoSolution if inconsistent."""
    rows = _rows(M)
    if len(rows) != len(b):
        raise ValueError("dimension mismatch")
    ncols = M.cols if isinstance(M, Matrix) else (len(rows[0]) if rows else 0)
    aug = [list(r) + [bi] for r, bi in zip(rows, b)]
    R, pivots = rref(aug)
    if ncols in pivots:
        raise NoSolution("inconsistent linear system")
    sample = next((x for r in aug for x in r if x), Fraction(0))
    zero = sample * 0
    x = [zero] * ncols
    for i, p in enumerate(pivots):
        x[p] = R[i][ncols]
    return x


def det(M):
    rows = [list(r) for r in _rows(M)]
    n = len(rows)
    if n and len(rows[0]) != n:
        raise ValueError("determinant of a non-square matrix")
    result = Fraction(1)
    for c in range(n):
        piv = next((i for i in range(c, n) if rows[i][c]), None)
        if piv is None:
            return rows[0][0] * 0
        if piv != c:
            rows[c], rows[piv] = rows[piv], rows[c]
            result = -result
        p = rows[c][c]
        result = result * p
        inv = 1 / p
        for i in range(c + 1, n):
            f = rows[i][c]
            if f:
                f = f * inv
                rows[i] = [x - f * y if y else x for x, y in zip(rows[i], rows[c])]
    return result


def span_basis(vectors):
    """Row-reduced basis of the span of the given vectors, with pivot columns."""
    vectors = [list(v) for v in vectors if any(v)]
    if not vectors:
        return [], []
    R, pivots = rref(vectors)
    return R[: len(pivots)], pivots


def coordinates_in(basis_rref, pivots, v):
    """Coordinates of v in a basis in reduced row echelon form, or None if v is outside the span."""
    coords = [v[p] for p in pivots]
    recon = [0] * len(v)
    for c, row in zip(coords, basis_rref):
        if c:
            recon = [a + c * b if b else a for a, b in zip(recon, row)]
    if any(a != b for a, b in zip(recon, v)):
        return None
    return coords


# -- integer matrices -------------------------------------------------------

def smith_diagonalize(A):
    """Unimodular U, V and diagonal D with U A V = D (integers, no divisibility chain)."""
    m = len(A)
    n = len(A[0]) if m else 0
    D = [list(map(int, r)) for r in A]
    U = [[int(i == j) for j in range(m)] for i in range(m)]
    V = [[int(i == j) for j in range(n)] for i in range(n)]

    def swap_rows(M, i, j):
        M[i], M[j] = M[j], M[i]

    def swap_cols(M, i, j):
        for r in M:
            r[i], r[j] = r[j], r[i]

    t = 0
    while t < min(m, n):
        nz = [(abs(D[i][j]), i, j) for i in range(t, m) for j in range(t, n) if D[i][j]]
        if not nz:
            break
        _, pi, pj = min(nz)
        swap_rows(D, t, pi)
        swap_rows(U, t, pi)
        swap_cols(D, t, pj)
        swap_cols(V, t, pj)
        done = False
        while not done:
            done = True
            p = D[t][t]
            for i in range(t + 1, m):
                if D[i][t]:
                    q = D[i][t] // p
                    D[i] = [a - q * b for a, b in zip(D[i], D[t])]
                    U[i] = [a - q * b for a, b in zip(U[i], U[t])]
                    if D[i][t]:
                        done = False
            for j in range(t + 1, n):
                if D[t][j]:
                    q = D[t][j] // p
                    for r in D:
                        r[j] -= q * r[t]
                    for r in V:
                        r[j] -= q * r[t]
                    if D[t][j]:
                        done = False
            if not done:
                nz = [(abs(D[i][t]), i, t) for i in range(t, m) if D[i][t]]
                nz += [(abs(D[t][j]), t, j) for j in range(t, n) if D[t][j]]
                _, pi, pj = min(nz)
                if pi != t:
                    swap_rows(D, t, pi)
                    swap_rows(U, t, pi)
                if pj != t:
                    swap_cols(D, t, pj)
                    swap_cols(V, t, pj)
        t += 1
    return U, D, V


def solve_integer_congruences(M, b, moduli):
    """Integer x with sum_j M[i][j] x[j] == b[i] (mod moduli[i]) for every row i.

    Rows with modulus 0 are exact integer equations.  Raises NoSolution when the
    system is inconsistent.  Uses the augmented system [M | diag(moduli)].
    """
    m = len(M)
    n = len(M[0]) if m else 0
    if m == 0:
        return [0] * n
    aug = [list(map(int, M[i])) + [moduli[i] if k == i else 0 for k in range(m)] for i in range(m)]
    U, D, V = smith_diagonalize(aug)
    ub = [sum(U[i][k] * int(b[k]) for k in range(m)) for i in range(m)]
    w = [0] * (n + m)
    for i in range(m):
        d = D[i][i] if i < n + m else 0
        if d == 0:
            if ub[i]:
                raise NoSolution("inconsistent integer system")
        else:
            if ub[i] % d:
                raise NoSolution("inconsistent integer system")
            w[i] = ub[i] // d
    z = [sum(V[j][k] * w[k] for k in range(n + m)) for j in range(n + m)]
    return z[:n]


def solve_mod(M, b, n: int):
    """Solution of M x == b (mod n) reduced into [0, n), or NoSolution."""
    if n < 1:
        raise ValueError("modulus must be positive")
    x = solve_integer_congruences(M, b, [n] * len(M))
    return [v % n for v in x]
