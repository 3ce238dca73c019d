"""Dense exact matrices over a cyclotomic field.

Small immutable matrices with exact equality and hashing; used for
single-site factors, code gates, projectors, and reduced densities.
"""

from __future__ import annotations


from .cyclo import Cyclotomic


class Matrix:
    __slots__ = ("n", "rows", "_hash")

    def __init__(self, n: int, rows):
        rows = tuple(tuple(self._as_cyc(n, e) for e in row) for row in rows)
        if rows and any(len(r) != len(rows[0]) for r in rows):
            raise ValueError("ragged rows")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, *a):
        raise AttributeError("Matrix is immutable")

    @staticmethod
    def _as_cyc(n, e):
        if isinstance(e, Cyclotomic):
            if e.n != n:
                raise ValueError("entry conductor mismatch")
            return e
        return Cyclotomic.from_rational(n, e)

    @classmethod
    def identity(cls, size: int, n: int) -> Matrix:
        one, zero = Cyclotomic.one(n), Cyclotomic.zero(n)
        return cls(n, [[one if i == j else zero for j in range(size)] for i in range(size)])

    @classmethod
    def zeros(cls, nrows: int, ncols: int, n: int) -> Matrix:
        zero = Cyclotomic.zero(n)
        return cls(n, [[zero] * ncols for _ in range(nrows)])

    @property
    def shape(self) -> tuple[int, int]:
        return (len(self.rows), len(self.rows[0]) if self.rows else 0)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def __mul__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        ra, ca = self.shape
        rb, cb = other.shape
        if ca != rb:
            raise ValueError(f"shape mismatch {self.shape} * {other.shape}")
        bt = list(zip(*other.rows))
        out = []
        for row in self.rows:
            orow = []
            for col in bt:
                acc = None
                for a, b in zip(row, col):
                    if a.is_zero() or b.is_zero():
                        continue
                    t = a * b
                    acc = t if acc is None else acc + t
                orow.append(acc if acc is not None else Cyclotomic.zero(self.n))
            out.append(orow)
        return Matrix(self.n, out)

    def __add__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return Matrix(self.n, [[a + b for a, b in zip(r1, r2)]
                               for r1, r2 in zip(self.rows, other.rows)])

    def __sub__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return Matrix(self.n, [[a - b for a, b in zip(r1, r2)]
                               for r1, r2 in zip(self.rows, other.rows)])

    def __neg__(self):
        return Matrix(self.n, [[-a for a in r] for r in self.rows])

    def scale(self, c) -> Matrix:
        c = self._as_cyc(self.n, c)
        return Matrix(self.n, [[c * a for a in r] for r in self.rows])

    def transpose(self) -> Matrix:
        return Matrix(self.n, list(zip(*self.rows)))

    def conj(self) -> Matrix:
        return Matrix(self.n, [[a.conj() for a in r] for r in self.rows])

    def dagger(self) -> Matrix:
        return Matrix(self.n, [[a.conj() for a in col] for col in zip(*self.rows)])

    def trace(self) -> Cyclotomic:
        acc = Cyclotomic.zero(self.n)
        for i in range(min(self.shape)):
            acc = acc + self.rows[i][i]
        return acc

    def mat_vec(self, vec) -> tuple:
        out = []
        for row in self.rows:
            acc = Cyclotomic.zero(self.n)
            for a, v in zip(row, vec):
                if not (a.is_zero() or v.is_zero()):
                    acc = acc + a * v
            out.append(acc)
        return tuple(out)

    def kron(self, other: Matrix) -> Matrix:
        ra, ca = self.shape
        rb, cb = other.shape
        out = [[None] * (ca * cb) for _ in range(ra * rb)]
        for i in range(ra):
            for j in range(ca):
                a = self.rows[i][j]
                for k in range(rb):
                    for l in range(cb):
                        out[i * rb + k][j * cb + l] = a * other.rows[k][l]
        return Matrix(self.n, out)

    def det(self) -> Cyclotomic:
        r, c = self.shape
        if r != c:
            raise ValueError("determinant of non-square matrix")
        m = self.rows
        if r == 1:
            return m[0][0]
        if r == 2:
            return m[0][0] * m[1][1] - m[0][1] * m[1][0]
        if r == 3:
            return (m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
                    - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
                    + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]))
        rows = [list(row) for row in m]
        det = Cyclotomic.one(self.n)
        for col in range(r):
            piv = next((k for k in range(col, r) if not rows[k][col].is_zero()), None)
            if piv is None:
                return Cyclotomic.zero(self.n)
            if piv != col:
                rows[col], rows[piv] = rows[piv], rows[col]
                det = -det
            det = det * rows[col][col]
            inv = rows[col][col].inv()
            for k in range(col + 1, r):
                f = rows[k][col] * inv
                if not f.is_zero():
                    rows[k] = [a - f * b for a, b in zip(rows[k], rows[col])]
        return det

    def inv(self) -> Matrix:
        r, c = self.shape
        if r != c:
            raise ValueError("inverse of non-square matrix")
        n = self.n
        aug = [list(row) + list(Matrix.identity(r, n).rows[i]) for i, row in enumerate(self.rows)]
        for col in range(r):
            piv = next((k for k in range(col, r) if not aug[k][col].is_zero()), None)
            if piv is None:
                raise ZeroDivisionError("singular matrix")
            aug[col], aug[piv] = aug[piv], aug[col]
            inv = aug[col][col].inv()
            aug[col] = [a * inv for a in aug[col]]
            for k in range(r):
                if k != col and not aug[k][col].is_zero():
                    f = aug[k][col]
                    aug[k] = [a - f * b for a, b in zip(aug[k], aug[col])]
        return Matrix(n, [row[r:] for row in aug])

    def is_identity(self) -> bool:
        r, c = self.shape
        if r != c:
            return False
        one, zero = Cyclotomic.one(self.n), Cyclotomic.zero(self.n)
        return all(self.rows[i][j] == (one if i == j else zero)
                   for i in range(r) for j in range(c))

    def is_zero(self) -> bool:
        return all(a.is_zero() for row in self.rows for a in row)

    def is_unitary(self) -> bool:
        return (self.dagger() * self).is_identity()

    def is_hermitian(self) -> bool:
        r, c = self.shape
        return r == c and all(self.rows[i][j] == self.rows[j][i].conj()
                              for i in range(r) for j in range(i, c))

    def scalar_multiple_of(self, other: Matrix):
        """Return c with self == c * other, or None."""
        if self.shape != other.shape:
            return None
        c = None
        for r1, r2 in zip(self.rows, other.rows):
            for a, b in zip(r1, r2):
                if b.is_zero():
                    if not a.is_zero():
                        return None
                elif c is None:
                    c = a / b
        if c is None:
            return None
        return c if self == other.scale(c) else None

    def to_complex(self):
        return [[a.to_complex() for a in row] for row in self.rows]

    def to_dict(self) -> dict:
        return {"entries": [[a.to_dict() for a in row] for row in self.rows]}

    @classmethod
    def from_dict(cls, n: int, data: dict) -> Matrix:
        return cls(n, [[Cyclotomic.from_dict(e) for e in row] for row in data["entries"]])

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.n == other.n and self.rows == other.rows

    def __hash__(self):
        h = self._hash
        if h is None:
            h = hash((self.n, self.rows))
            object.__setattr__(self, "_hash", h)
        return h

    def __repr__(self):
        return f"Matrix({self.shape[0]}x{self.shape[1]}, N={self.n})"
