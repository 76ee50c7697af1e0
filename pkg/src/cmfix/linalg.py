"""Small exact matrices over Q or Q(zeta_m).

Shape-carrying so that 0-row / 0-column matrices compose correctly (dimension
vectors of quiver representations routinely contain zeros).  Entries are any
exact scalars supporting +, -, *, /, == 0: int, Fraction, CyclotomicNumber.

Rank uses fraction-free (Bareiss) elimination; nullspace and inverse use
plain Gauss-Jordan with exact division.
"""

from __future__ import annotations

from fractions import Fraction

__all__ = ["Mat"]


class Mat:
    __slots__ = ("rows", "cols", "data")

    def __init__(self, rows: int, cols: int, data):
        data = tuple(tuple(r) for r in data)
        if len(data) != rows or any(len(r) != cols for r in data):
            raise ValueError(f"shape mismatch: want {rows}x{cols}")
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "cols", cols)
        object.__setattr__(self, "data", data)

    def __setattr__(self, *a):  # pragma: no cover
        raise AttributeError("Mat is immutable")

    @classmethod
    def from_rows(cls, data) -> "Mat":
        data = [list(r) for r in data]
        rows = len(data)
        cols = len(data[0]) if rows else 0
        return cls(rows, cols, data)

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "Mat":
        return cls(rows, cols, [[0] * cols for _ in range(rows)])

    @classmethod
    def identity(cls, n: int, one=1) -> "Mat":
        return cls(n, n, [[one if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def scalar(cls, n: int, value) -> "Mat":
        return cls(n, n, [[value if i == j else 0 for j in range(n)] for i in range(n)])

    # -- structure ----------------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, Mat):
            return NotImplemented
        if (self.rows, self.cols) != (other.rows, other.cols):
            return False
        return all(
            a == b for ra, rb in zip(self.data, other.data) for a, b in zip(ra, rb)
        )

    def __hash__(self):
        return hash((self.rows, self.cols, self.data))

    def __repr__(self):
        return f"Mat({self.rows}x{self.cols}, {self.data!r})"

    def is_zero(self) -> bool:
        return all(x == 0 for r in self.data for x in r)

    def transpose(self) -> "Mat":
        return Mat(self.cols, self.rows,
                   [[self.data[i][j] for i in range(self.rows)] for j in range(self.cols)])

    T = property(transpose)

    # -- arithmetic ----------------------------------------------------------

    def __add__(self, other: "Mat") -> "Mat":
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("shape mismatch in +")
        return Mat(self.rows, self.cols,
                   [[a + b for a, b in zip(ra, rb)] for ra, rb in zip(self.data, other.data)])

    def __sub__(self, other: "Mat") -> "Mat":
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("shape mismatch in -")
        return Mat(self.rows, self.cols,
                   [[a - b for a, b in zip(ra, rb)] for ra, rb in zip(self.data, other.data)])

    def __neg__(self) -> "Mat":
        return Mat(self.rows, self.cols, [[-a for a in r] for r in self.data])

    def __mul__(self, other):
        if not isinstance(other, Mat):
            return self.scale(other)
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch in *: {self.cols} vs {other.rows}")
        bt = other.transpose().data
        out = [
            [sum((a * b for a, b in zip(row, col) if not (a == 0 or b == 0)), 0)
             for col in bt]
            for row in self.data
        ]
        return Mat(self.rows, other.cols, out)

    def __rmul__(self, other):
        return self.scale(other)

    def scale(self, c) -> "Mat":
        return Mat(self.rows, self.cols, [[c * a for a in r] for r in self.data])

    def trace(self):
        if self.rows != self.cols:
            raise ValueError("trace of a non-square matrix")
        return sum((self.data[i][i] for i in range(self.rows)), 0)

    def apply(self, vec):
        """Matrix times column vector (a tuple of scalars)."""
        if len(vec) != self.cols:
            raise ValueError("vector length mismatch")
        return tuple(sum((a * v for a, v in zip(row, vec)), 0) for row in self.data)

    # -- exact elimination ----------------------------------------------------

    def rank(self) -> int:
        """Rank via fraction-free (Bareiss) elimination.

        Integer matrices stay integer throughout (divisions are exact by
        Bareiss' theorem); field entries divide exactly anyway.
        """
        m = [list(r) for r in self.data]
        rows, cols = self.rows, self.cols
        prev = 1
        piv_r = 0
        for piv_c in range(cols):
            pr = None
            for r in range(piv_r, rows):
                if m[r][piv_c] != 0:
                    pr = r
                    break
            if pr is None:
                continue
            if pr != piv_r:
                m[piv_r], m[pr] = m[pr], m[piv_r]
            p = m[piv_r][piv_c]
            for r in range(piv_r + 1, rows):
                for c in range(piv_c + 1, cols):
                    m[r][c] = _exact_div(p * m[r][c] - m[r][piv_c] * m[piv_r][c], prev)
                m[r][piv_c] = 0 * p
            prev = p
            piv_r += 1
            if piv_r == rows:
                break
        return piv_r

    def rref(self) -> tuple["Mat", list[int]]:
        """Reduced row echelon form and the pivot column list."""
        m = [[_as_field(x) for x in r] for r in self.data]
        rows, cols = self.rows, self.cols
        piv_cols = []
        piv_r = 0
        for c in range(cols):
            pr = None
            for r in range(piv_r, rows):
                if m[r][c] != 0:
                    pr = r
                    break
            if pr is None:
                continue
            m[piv_r], m[pr] = m[pr], m[piv_r]
            pv = m[piv_r][c]
            m[piv_r] = [x / pv for x in m[piv_r]]
            for r in range(rows):
                if r != piv_r and m[r][c] != 0:
                    f = m[r][c]
                    m[r] = [x - f * y for x, y in zip(m[r], m[piv_r])]
            piv_cols.append(c)
            piv_r += 1
            if piv_r == rows:
                break
        return Mat(rows, cols, m), piv_cols

    def nullspace(self) -> list[tuple]:
        """Basis of the right kernel, as tuples of length self.cols."""
        red, piv = self.rref()
        free = [c for c in range(self.cols) if c not in piv]
        basis = []
        for fc in free:
            v = [0] * self.cols
            v[fc] = 1
            for r, pc in enumerate(piv):
                v[pc] = -red.data[r][fc]
            basis.append(tuple(v))
        return basis

    def inverse(self) -> "Mat":
        if self.rows != self.cols:
            raise ValueError("inverse of a non-square matrix")
        n = self.rows
        aug = [[_as_field(x) for x in r] + [1 if i == j else 0 for j in range(n)]
               for i, r in enumerate(self.data)]
        big = Mat(n, 2 * n, aug)
        red, piv = big.rref()
        if piv != list(range(n)):
            raise ValueError("matrix is singular")
        return Mat(n, n, [row[n:] for row in red.data])


def _as_field(x):
    # ints become Fractions so that rref division stays exact
    return Fraction(x) if isinstance(x, int) else x


def _exact_div(a, b):
    if isinstance(a, int) and isinstance(b, int):
        q, r = divmod(a, b)
        assert r == 0
        return q
    return a / b
