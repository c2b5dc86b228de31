"""Exact integer and rational linear algebra.

Everything here works on Python ints and :class:`fractions.Fraction`, so
intermediate coefficient growth is never a problem. Matrices are immutable
and act on row vectors: ``x @ m`` style products are written ``vecmat(x, m)``.

Normal form conventions:

* ``hnf`` is row-style: ``h = u @ m`` is in row echelon form, pivots are
  positive and the entries above each pivot lie in ``[0, pivot)``.
* ``snf`` returns ``d = u @ m @ v`` with nonnegative diagonal ``d1 | d2 | ...``.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from numbers import Rational
from typing import Iterable, Sequence

__all__ = [
    "Matrix",
    "ShapeError",
    "xgcd",
    "dot",
    "vecmat",
    "det",
    "rank",
    "hnf",
    "snf",
    "kernel_basis",
    "solve_integral",
    "solve_rational",
    "is_unimodular",
]


class ShapeError(ValueError):
    """Raised when matrix dimensions are incompatible with an operation."""


def _check_entry(x):
    if isinstance(x, bool) or not isinstance(x, Rational):
        raise TypeError(f"matrix entries must be int or Fraction, got {type(x).__name__}")
    if isinstance(x, Fraction) and x.denominator == 1:
        return int(x)
    return x if isinstance(x, (int, Fraction)) else Fraction(x)


class Matrix:
    """Dense immutable matrix with exact entries (int or Fraction).

    A matrix with integer entries plays the role of an ``IntMatrix``; one with
    some Fraction entries is a rational matrix. Fractions with denominator one
    are stored as ints so that equality and hashing are canonical.
    """

    __slots__ = ("_rows", "nrows", "ncols")

    def __init__(self, rows: Iterable[Iterable], ncols: int | None = None):
        data = tuple(tuple(_check_entry(x) for x in row) for row in rows)
        if ncols is None:
            if not data:
                raise ShapeError("ncols is required for a matrix without rows")
            ncols = len(data[0])
        for row in data:
            if len(row) != ncols:
                raise ShapeError(f"ragged rows: expected length {ncols}, got {len(row)}")
        self._rows = data
        self.nrows = len(data)
        self.ncols = ncols

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls(((1 if i == j else 0) for j in range(n)) for i in range(n)) if n else cls((), 0)

    @classmethod
    def zeros(cls, nrows: int, ncols: int) -> "Matrix":
        return cls(((0,) * ncols for _ in range(nrows)), ncols)

    @classmethod
    def diag(cls, entries: Sequence) -> "Matrix":
        n = len(entries)
        return cls(((entries[i] if i == j else 0) for j in range(n)) for i in range(n)) if n else cls((), 0)

    @classmethod
    def block_diag(cls, *blocks: "Matrix") -> "Matrix":
        total = sum(b.ncols for b in blocks)
        rows = []
        offset = 0
        for b in blocks:
            for row in b.rows:
                rows.append((0,) * offset + row + (0,) * (total - offset - b.ncols))
            offset += b.ncols
        return cls(rows, total)

    @classmethod
    def vstack(cls, *blocks: "Matrix") -> "Matrix":
        ncols = {b.ncols for b in blocks}
        if len(ncols) != 1:
            raise ShapeError("vstack needs equal column counts")
        return cls((row for b in blocks for row in b.rows), ncols.pop())

    @property
    def rows(self) -> tuple[tuple, ...]:
        return self._rows

    @property
    def shape(self) -> tuple[int, int]:
        return (self.nrows, self.ncols)

    @property
    def T(self) -> "Matrix":
        return Matrix(zip(*self._rows), self.nrows) if self.nrows else Matrix.zeros(self.ncols, 0)

    def column(self, j: int) -> tuple:
        return tuple(row[j] for row in self._rows)

    def __getitem__(self, key):
        if isinstance(key, tuple):
            i, j = key
            return self._rows[i][j]
        return self._rows[key]

    def __iter__(self):
        return iter(self._rows)

    def __len__(self):
        return self.nrows

    def __eq__(self, other):
        if isinstance(other, Matrix):
            return self.ncols == other.ncols and self._rows == other._rows
        return NotImplemented

    def __hash__(self):
        return hash((self.ncols, self._rows))

    def __repr__(self):
        return f"Matrix({[list(r) for r in self._rows]!r})"

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if not isinstance(other, Matrix):
            return NotImplemented
        if self.ncols != other.nrows:
            raise ShapeError(f"cannot multiply {self.shape} by {other.shape}")
        cols = other.T.rows
        return Matrix(
            (tuple(sum(a * b for a, b in zip(row, col)) for col in cols) for row in self._rows),
            other.ncols,
        )

    def __add__(self, other: "Matrix") -> "Matrix":
        if self.shape != other.shape:
            raise ShapeError(f"cannot add {self.shape} and {other.shape}")
        return Matrix((tuple(a + b for a, b in zip(r, s)) for r, s in zip(self, other)), self.ncols)

    def __neg__(self) -> "Matrix":
        return self.scale(-1)

    def __sub__(self, other: "Matrix") -> "Matrix":
        return self + (-other)

    def scale(self, s) -> "Matrix":
        return Matrix((tuple(s * x for x in row) for row in self._rows), self.ncols)

    def is_square(self) -> bool:
        return self.nrows == self.ncols

    def is_symmetric(self) -> bool:
        return self.is_square() and all(
            self._rows[i][j] == self._rows[j][i] for i in range(self.nrows) for j in range(i)
        )

    def is_integral(self) -> bool:
        return all(isinstance(x, int) for row in self._rows for x in row)

    def denominator(self) -> int:
        """Least common denominator of all entries."""
        d = 1
        for row in self._rows:
            for x in row:
                if isinstance(x, Fraction):
                    d = d * x.denominator // gcd(d, x.denominator)
        return d

    def tolist(self) -> list[list]:
        return [list(r) for r in self._rows]


def _as_matrix(m) -> Matrix:
    return m if isinstance(m, Matrix) else Matrix(m)


def dot(x: Sequence, y: Sequence):
    if len(x) != len(y):
        raise ShapeError(f"length mismatch: {len(x)} vs {len(y)}")
    return sum(a * b for a, b in zip(x, y))


def vecmat(x: Sequence, m: Matrix) -> tuple:
    """Row vector times matrix."""
    if len(x) != m.nrows:
        raise ShapeError(f"vector of length {len(x)} against {m.nrows} rows")
    out = [0] * m.ncols
    for a, row in zip(x, m.rows):
        if a:
            for j, b in enumerate(row):
                out[j] += a * b
    return tuple(out)


def xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Return ``(g, x, y)`` with ``x*a + y*b == g == gcd(a, b) >= 0``."""
    x0, y0, x1, y1 = 1, 0, 0, 1
    while b:
        q, r = divmod(a, b)
        a, b = b, r
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if a < 0:
        return -a, -x0, -y0
    return a, x0, y0


def det(m) -> int | Fraction:
    """Determinant by fraction-free (Bareiss) elimination."""
    m = _as_matrix(m)
    if not m.is_square():
        raise ShapeError(f"determinant of non-square {m.shape} matrix")
    n = m.nrows
    if n == 0:
        return 1
    if not m.is_integral():
        d = m.denominator()
        return Fraction(det(m.scale(d)), d**n)
    a = m.tolist()
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        akk = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            row_i, row_k = a[i], a[k]
            for j in range(k + 1, n):
                row_i[j] = (akk * row_i[j] - aik * row_k[j]) // prev
        prev = akk
    return sign * a[n - 1][n - 1]


def _row_echelon_rank(rows: list[list]) -> int:
    rows = [[Fraction(x) for x in r] for r in rows]
    r = 0
    ncols = len(rows[0]) if rows else 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        for i in range(r + 1, len(rows)):
            if rows[i][c]:
                f = rows[i][c] / rows[r][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        r += 1
    return r


def rank(m) -> int:
    m = _as_matrix(m)
    return _row_echelon_rank(m.tolist()) if m.nrows else 0


def hnf(m) -> tuple[Matrix, Matrix]:
    """Row Hermite normal form with transform: returns ``(h, u)``, ``h == u @ m``."""
    m = _as_matrix(m)
    if not m.is_integral():
        raise TypeError("hnf requires an integer matrix")
    nr, nc = m.shape
    a = m.tolist()
    u = Matrix.identity(nr).tolist()
    r = 0
    for c in range(nc):
        if r == nr:
            break
        for i in range(r + 1, nr):
            b = a[i][c]
            if b == 0:
                continue
            p = a[r][c]
            g, x, y = xgcd(p, b)
            s, t = -b // g, p // g
            for mat in (a, u):
                ri, rr = mat[i], mat[r]
                mat[r] = [x * e + y * f for e, f in zip(rr, ri)]
                mat[i] = [s * e + t * f for e, f in zip(rr, ri)]
        p = a[r][c]
        if p == 0:
            continue
        if p < 0:
            a[r] = [-e for e in a[r]]
            u[r] = [-e for e in u[r]]
            p = -p
        for i in range(r):
            q = a[i][c] // p
            if q:
                a[i] = [e - q * f for e, f in zip(a[i], a[r])]
                u[i] = [e - q * f for e, f in zip(u[i], u[r])]
        r += 1
    return Matrix(a, nc), Matrix(u, nr)


def snf(m) -> tuple[Matrix, Matrix, Matrix]:
    """Smith normal form: returns ``(d, u, v)`` with ``d == u @ m @ v``."""
    m = _as_matrix(m)
    if not m.is_integral():
        raise TypeError("snf requires an integer matrix")
    nr, nc = m.shape
    a = m.tolist()
    u = Matrix.identity(nr).tolist()
    v = Matrix.identity(nc).tolist()

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for row in a:
            row[i], row[j] = row[j], row[i]
        for row in v:
            row[i], row[j] = row[j], row[i]

    def add_row(dst, src, q):  # row_dst += q * row_src
        a[dst] = [e + q * f for e, f in zip(a[dst], a[src])]
        u[dst] = [e + q * f for e, f in zip(u[dst], u[src])]

    def add_col(dst, src, q):  # col_dst += q * col_src
        for row in a:
            row[dst] += q * row[src]
        for row in v:
            row[dst] += q * row[src]

    for t in range(min(nr, nc)):
        best = None
        for i in range(t, nr):
            for j in range(t, nc):
                if a[i][j] and (best is None or abs(a[i][j]) < abs(a[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        swap_rows(t, best[0])
        swap_cols(t, best[1])
        while True:
            p = a[t][t]
            dirty = False
            for i in range(t + 1, nr):
                if a[i][t]:
                    add_row(i, t, -(a[i][t] // p))
                    dirty = dirty or a[i][t] != 0
            for j in range(t + 1, nc):
                if a[t][j]:
                    add_col(j, t, -(a[t][j] // p))
                    dirty = dirty or a[t][j] != 0
            if dirty:
                # a remainder is now smaller than the pivot: move it in
                cands = [(abs(a[i][t]), i, t) for i in range(t + 1, nr) if a[i][t]]
                cands += [(abs(a[t][j]), t, j) for j in range(t + 1, nc) if a[t][j]]
                _, i, j = min(cands)
                if i != t:
                    swap_rows(t, i)
                else:
                    swap_cols(t, j)
                continue
            bad = next(
                (i for i in range(t + 1, nr) for j in range(t + 1, nc) if a[i][j] % p),
                None,
            )
            if bad is None:
                break
            add_row(t, bad, 1)
        if a[t][t] < 0:
            a[t] = [-e for e in a[t]]
            u[t] = [-e for e in u[t]]
    return Matrix(a, nc), Matrix(u, nr), Matrix(v, nc)


def kernel_basis(m) -> Matrix:
    """Basis (rows, in HNF) of the integer left kernel ``{x : x @ m == 0}``."""
    m = _as_matrix(m)
    h, u = hnf(m)
    kernel_rows = [u[i] for i in range(m.nrows) if not any(h[i])]
    if not kernel_rows:
        return Matrix.zeros(0, m.nrows)
    return hnf(Matrix(kernel_rows, m.nrows))[0]


def solve_integral(m, b: Sequence[int]) -> tuple[int, ...] | None:
    """Some integer ``x`` with ``x @ m == b``, or None when there is none."""
    m = _as_matrix(m)
    b = tuple(b)
    if len(b) != m.ncols:
        raise ShapeError(f"right-hand side of length {len(b)} for {m.ncols} columns")
    if any(not isinstance(e, int) for e in b):
        if any(Fraction(e).denominator != 1 for e in b):
            return None
        b = tuple(int(e) for e in b)
    h, u = hnf(m)
    y = [0] * m.nrows
    residual = list(b)
    for i, row in enumerate(h.rows):
        c = next((j for j, e in enumerate(row) if e), None)
        if c is None:
            break
        q, r = divmod(residual[c], row[c])
        if r:
            return None
        y[i] = q
        if q:
            residual = [e - q * f for e, f in zip(residual, row)]
    if any(residual):
        return None
    return vecmat(y, u)


def solve_rational(m, b: Sequence) -> tuple[Fraction, ...] | None:
    """Some rational ``x`` with ``x @ m == b`` (free variables set to zero), or None."""
    m = _as_matrix(m)
    if len(b) != m.ncols:
        raise ShapeError(f"right-hand side of length {len(b)} for {m.ncols} columns")
    # solve m^T x^T = b^T by Gauss-Jordan on the augmented system
    rows = [[Fraction(m[i, j]) for i in range(m.nrows)] + [Fraction(b[j])] for j in range(m.ncols)]
    n = m.nrows
    pivots = []
    r = 0
    for c in range(n):
        piv = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = 1 / rows[r][c]
        rows[r] = [e * inv for e in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [e - f * g for e, g in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
    if any(rows[i][n] != 0 for i in range(r, len(rows))):
        return None
    x = [Fraction(0)] * n
    for i, c in enumerate(pivots):
        x[c] = rows[i][n]
    return tuple(x)


def is_unimodular(m) -> bool:
    m = _as_matrix(m)
    return m.is_square() and m.is_integral() and abs(det(m)) == 1
