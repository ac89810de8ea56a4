"""Dense matrices over the exact scalar rings, with field linear algebra."""

from __future__ import annotations

from typing import Callable, Iterable, Sequence

from .scalars import Cyclotomic, LaurentPoly, as_scalar

__all__ = ["Matrix", "rank", "solve"]


class Matrix:
    """A rows x cols grid of exact scalars (Cyclotomic or LaurentPoly)."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, entries: Sequence[Sequence], cols: int | None = None):
        grid = tuple(tuple(as_scalar(x) for x in row) for row in entries)
        self.rows = len(grid)
        self.cols = len(grid[0]) if grid else (cols or 0)
        if any(len(r) != self.cols for r in grid):
            raise ValueError("ragged matrix rows")
        self.entries = grid

    @classmethod
    def zero(cls, rows: int, cols: int | None = None) -> "Matrix":
        cols = rows if cols is None else cols
        return cls([[0] * cols for _ in range(rows)], cols=cols)

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def diag(cls, values: Sequence) -> "Matrix":
        n = len(values)
        return cls([[values[i] if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def unit(cls, n: int, p: int, q: int) -> "Matrix":
        """The matrix unit with a single 1 at (p, q), 0-based."""
        return cls([[1 if (i, j) == (p, q) else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def from_function(cls, rows: int, cols: int, fn: Callable[[int, int], object]) -> "Matrix":
        return cls([[fn(i, j) for j in range(cols)] for i in range(rows)], cols=cols)

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    def is_square(self) -> bool:
        return self.rows == self.cols

    def _check_shape(self, other: "Matrix"):
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} vs {other.shape}")

    def __add__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        self._check_shape(other)
        return Matrix(
            [[a + b for a, b in zip(r1, r2)] for r1, r2 in zip(self.entries, other.entries)],
            cols=self.cols,
        )

    def __sub__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        self._check_shape(other)
        return Matrix(
            [[a - b for a, b in zip(r1, r2)] for r1, r2 in zip(self.entries, other.entries)],
            cols=self.cols,
        )

    def __neg__(self):
        return Matrix([[-a for a in r] for r in self.entries], cols=self.cols)

    def scale(self, k) -> "Matrix":
        k = as_scalar(k)
        return Matrix([[k * a for a in r] for r in self.entries], cols=self.cols)

    def __mul__(self, other):
        if isinstance(other, Matrix):
            return self.matmul(other)
        if isinstance(other, (int, Cyclotomic, LaurentPoly)) or _is_rational(other):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Cyclotomic, LaurentPoly)) or _is_rational(other):
            return self.scale(other)
        return NotImplemented

    def __matmul__(self, other):
        return self.matmul(other)

    def matmul(self, other: "Matrix") -> "Matrix":
        if self.cols != other.rows:
            raise ValueError(f"cannot multiply {self.shape} by {other.shape}")
        cols = list(zip(*other.entries)) if other.rows else [()] * other.cols
        out = []
        for row in self.entries:
            nz = [(k, a) for k, a in enumerate(row) if a]
            line = []
            for col in cols:
                acc = None
                for k, a in nz:
                    b = col[k]
                    if b:
                        acc = a * b if acc is None else acc + a * b
                line.append(0 if acc is None else acc)
            out.append(line)
        return Matrix(out, cols=other.cols)

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if not self.is_square():
            raise ValueError("power of a non-square matrix")
        base = self if k >= 0 else self.inverse()
        out = Matrix.identity(self.rows)
        for _ in range(abs(k)):
            out = out * base
        return out

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.shape == other.shape and all(
            a == b for r1, r2 in zip(self.entries, other.entries) for a, b in zip(r1, r2)
        )

    def __hash__(self):
        return hash((self.shape, self.entries))

    def is_zero(self) -> bool:
        return not any(a for r in self.entries for a in r)

    def trace(self):
        total = as_scalar(0)
        for i in range(min(self.rows, self.cols)):
            total = total + self.entries[i][i]
        return total

    def transpose(self) -> "Matrix":
        return Matrix([list(c) for c in zip(*self.entries)], cols=self.rows)

    def dagger(self) -> "Matrix":
        """Conjugate transpose."""
        return Matrix([[a.conj() for a in c] for c in zip(*self.entries)], cols=self.rows)

    def is_hermitian(self) -> bool:
        return self == self.dagger()

    def commutator(self, other: "Matrix") -> "Matrix":
        return self * other - other * self

    def anticommutator(self, other: "Matrix") -> "Matrix":
        return self * other + other * self

    def apply(self, vec: Sequence) -> list:
        """Matrix times column vector."""
        return (self * Matrix([[v] for v in vec])).column(0)

    def column(self, j: int) -> list:
        return [r[j] for r in self.entries]

    def flatten(self) -> list:
        return [a for r in self.entries for a in r]

    def charpoly(self) -> list:
        """Coefficients of det(x I - M), constant term first (Faddeev-LeVerrier)."""
        if not self.is_square():
            raise ValueError("characteristic polynomial of a non-square matrix")
        n = self.rows
        coeffs = [as_scalar(0)] * (n + 1)
        coeffs[n] = as_scalar(1)
        work = Matrix.zero(n)
        ident = Matrix.identity(n)
        for k in range(1, n + 1):
            work = self * work + ident.scale(coeffs[n - k + 1])
            coeffs[n - k] = (self * work).trace() * as_scalar(-1) / k
        return coeffs

    def det(self):
        c = self.charpoly()
        return c[0] if self.rows % 2 == 0 else -c[0]

    def inverse(self) -> "Matrix":
        if not self.is_square():
            raise ValueError("inverse of a non-square matrix")
        n = self.rows
        aug = [list(r) + [as_scalar(1 if i == j else 0) for j in range(n)] for i, r in enumerate(self.entries)]
        red, pivots = _eliminate(aug)
        if pivots[:n] != list(range(n)):
            raise ZeroDivisionError("matrix is singular")
        return Matrix([r[n:] for r in red])

    def __str__(self):
        cells = [[str(a) for a in r] for r in self.entries]
        width = max((len(c) for r in cells for c in r), default=1)
        return "\n".join("[ " + "  ".join(c.rjust(width) for c in r) + " ]" for r in cells)

    def __repr__(self):
        return f"Matrix({[[str(a) for a in r] for r in self.entries]})"


def _is_rational(x) -> bool:
    from numbers import Rational

    return isinstance(x, Rational)


def _eliminate(rows: list[list]) -> tuple[list[list], list[int]]:
    """Reduced row echelon form over the cyclotomic field."""
    rows = [list(r) for r in rows]
    m = len(rows)
    n = len(rows[0]) if rows else 0
    pivots = []
    r = 0
    for c in range(n):
        piv = next((k for k in range(r, m) if rows[k][c]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = rows[r][c].inv()
        rows[r] = [v * inv if v else v for v in rows[r]]
        for k in range(m):
            if k != r and rows[k][c]:
                f = rows[k][c]
                rows[k] = [a - f * b if b else a for a, b in zip(rows[k], rows[r])]
        pivots.append(c)
        r += 1
        if r == m:
            break
    return rows, pivots


def rank(vectors: Iterable[Sequence]) -> int:
    """Rank of a list of vectors (or matrices, flattened) over the field."""
    rows = []
    for v in vectors:
        if isinstance(v, Matrix):
            v = v.flatten()
        rows.append([as_scalar(x) for x in v])
    if not rows:
        return 0
    _, pivots = _eliminate(rows)
    return len(pivots)


def solve(m: Matrix, rhs: Sequence) -> list | None:
    """A solution x of m x = rhs, or None when the system is inconsistent."""
    aug = [list(r) + [as_scalar(b)] for r, b in zip(m.entries, rhs)]
    red, pivots = _eliminate(aug)
    n = m.cols
    if n in pivots:
        return None
    x = [as_scalar(0)] * n
    for k, c in enumerate(pivots):
        x[c] = red[k][n]
    return x
