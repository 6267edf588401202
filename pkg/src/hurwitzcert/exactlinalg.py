"""Dense exact linear algebra over a number field.

Matrices are immutable, entries are FieldElements of one shared field, and
every operation is exact: Gaussian elimination for determinants, inverses and
kernels, the characteristic-zero trace recurrence for characteristic
polynomials, Sylvester's leading-minor criterion for positive definiteness.
Sizes here are desk scale (n <= 6 throughout the rest of the package), so
clarity wins over asymptotics.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import (
    DimensionMismatch,
    FieldMismatch,
    NotSquare,
    NotSymmetric,
    Singular,
)
from .numberfield import FieldElement


class Matrix:
    __slots__ = ("field", "nrows", "ncols", "entries", "_hash")

    def __init__(self, field, nrows, ncols, entries):
        self.field = field
        self.nrows = nrows
        self.ncols = ncols
        self.entries = entries
        self._hash = None

    # -- construction ---------------------------------------------------------

    @classmethod
    def from_rows(cls, field, rows):
        rows = [list(r) for r in rows]
        if not rows or not rows[0]:
            raise DimensionMismatch("matrix must have at least one row and column")
        ncols = len(rows[0])
        if any(len(r) != ncols for r in rows):
            raise DimensionMismatch("ragged rows")
        entries = []
        for r in rows:
            for v in r:
                entries.append(cls._coerce_entry(field, v))
        return cls(field, len(rows), ncols, tuple(entries))

    @staticmethod
    def _coerce_entry(field, v):
        if isinstance(v, FieldElement):
            if not (v.field is field or v.field == field):
                raise FieldMismatch("entry from a different field")
            return v
        if isinstance(v, (int, Fraction)):
            return field.element(v)
        raise TypeError(f"cannot use {v!r} as a matrix entry")

    @classmethod
    def identity(cls, field, n):
        one = field.one()
        zero = field.zero()
        return cls(field, n, n,
                   tuple(one if i == j else zero for i in range(n) for j in range(n)))

    @classmethod
    def zeros(cls, field, nrows, ncols):
        zero = field.zero()
        return cls(field, nrows, ncols, (zero,) * (nrows * ncols))

    @classmethod
    def column(cls, field, values):
        return cls.from_rows(field, [[v] for v in values])

    # -- basic views ------------------------------------------------------------

    def entry(self, i, j):
        return self.entries[i * self.ncols + j]

    def row(self, i):
        return self.entries[i * self.ncols:(i + 1) * self.ncols]

    def rows(self):
        return [list(self.row(i)) for i in range(self.nrows)]

    def is_square(self):
        return self.nrows == self.ncols

    def is_symmetric(self):
        if not self.is_square():
            return False
        n = self.nrows
        return all(self.entry(i, j) == self.entry(j, i)
                   for i in range(n) for j in range(i + 1, n))

    def transpose(self):
        return Matrix(self.field, self.ncols, self.nrows,
                      tuple(self.entry(i, j)
                            for j in range(self.ncols) for i in range(self.nrows)))

    def trace(self):
        if not self.is_square():
            raise NotSquare("trace of a non-square matrix")
        acc = self.field.zero()
        for i in range(self.nrows):
            acc = acc + self.entry(i, i)
        return acc

    def submatrix(self, row_idx, col_idx):
        return Matrix(self.field, len(row_idx), len(col_idx),
                      tuple(self.entry(i, j) for i in row_idx for j in col_idx))

    def key(self):
        """Canonical hashable key: shape plus all entry keys."""
        return (self.nrows, self.ncols, tuple(e.key() for e in self.entries))

    def key_string(self):
        parts = []
        for e in self.entries:
            num, den = e.key()
            s = ",".join(str(x) for x in num)
            parts.append(s if den == 1 else f"{s}/{den}")
        return ";".join(parts)

    # -- arithmetic ----------------------------------------------------------------

    def __add__(self, other):
        self._same_shape(other)
        return Matrix(self.field, self.nrows, self.ncols,
                      tuple(a + b for a, b in zip(self.entries, other.entries)))

    def __sub__(self, other):
        self._same_shape(other)
        return Matrix(self.field, self.nrows, self.ncols,
                      tuple(a - b for a, b in zip(self.entries, other.entries)))

    def __neg__(self):
        return Matrix(self.field, self.nrows, self.ncols,
                      tuple(-a for a in self.entries))

    def _same_shape(self, other):
        if not isinstance(other, Matrix):
            raise TypeError("expected a Matrix")
        if self.nrows != other.nrows or self.ncols != other.ncols:
            raise DimensionMismatch("shape mismatch")

    def __mul__(self, other):
        if isinstance(other, Matrix):
            if self.ncols != other.nrows:
                raise DimensionMismatch(
                    f"cannot multiply {self.nrows}x{self.ncols} by {other.nrows}x{other.ncols}")
            n, m, p = self.nrows, self.ncols, other.ncols
            a, b = self.entries, other.entries
            out = []
            for i in range(n):
                arow = a[i * m:(i + 1) * m]
                for j in range(p):
                    acc = arow[0] * b[j]
                    for k in range(1, m):
                        acc = acc + arow[k] * b[k * p + j]
                    out.append(acc)
            return Matrix(self.field, n, p, tuple(out))
        scalar = self._coerce_entry(self.field, other)
        return Matrix(self.field, self.nrows, self.ncols,
                      tuple(scalar * e for e in self.entries))

    def __rmul__(self, other):
        scalar = self._coerce_entry(self.field, other)
        return Matrix(self.field, self.nrows, self.ncols,
                      tuple(scalar * e for e in self.entries))

    def __pow__(self, n):
        if not self.is_square():
            raise NotSquare("power of a non-square matrix")
        if not isinstance(n, int):
            raise TypeError("integer exponent required")
        if n < 0:
            return self.inverse() ** (-n)
        result = Matrix.identity(self.field, self.nrows)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return (self.nrows == other.nrows and self.ncols == other.ncols
                and self.entries == other.entries)

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.nrows, self.ncols,
                               tuple(e.key() for e in self.entries)))
        return self._hash

    def __repr__(self):
        rows = [" ".join(str(self.entry(i, j)) for j in range(self.ncols))
                for i in range(self.nrows)]
        return "Matrix[" + "; ".join(rows) + "]"

    # -- elimination-based operations -------------------------------------------------

    def det(self):
        if not self.is_square():
            raise NotSquare("determinant of a non-square matrix")
        n = self.nrows
        a = [list(self.row(i)) for i in range(n)]
        sign = 1
        det = self.field.one()
        for col in range(n):
            pivot_row = None
            for r in range(col, n):
                if not a[r][col].is_zero():
                    pivot_row = r
                    break
            if pivot_row is None:
                return self.field.zero()
            if pivot_row != col:
                a[col], a[pivot_row] = a[pivot_row], a[col]
                sign = -sign
            pivot = a[col][col]
            det = det * pivot
            for r in range(col + 1, n):
                if a[r][col].is_zero():
                    continue
                factor = a[r][col] / pivot
                for c in range(col, n):
                    a[r][c] = a[r][c] - factor * a[col][c]
        return det if sign == 1 else -det

    def inverse(self):
        if not self.is_square():
            raise NotSquare("inverse of a non-square matrix")
        n = self.nrows
        a = [list(self.row(i)) + [self.field.one() if i == j else self.field.zero()
                                  for j in range(n)] for i in range(n)]
        for col in range(n):
            pivot_row = None
            for r in range(col, n):
                if not a[r][col].is_zero():
                    pivot_row = r
                    break
            if pivot_row is None:
                raise Singular("matrix is singular")
            if pivot_row != col:
                a[col], a[pivot_row] = a[pivot_row], a[col]
            pivot = a[col][col]
            a[col] = [x / pivot for x in a[col]]
            for r in range(n):
                if r != col and not a[r][col].is_zero():
                    factor = a[r][col]
                    a[r] = [x - factor * y for x, y in zip(a[r], a[col])]
        return Matrix.from_rows(self.field, [row[n:] for row in a])

    def rref(self):
        """Reduced row echelon form and the list of pivot columns."""
        a = [list(self.row(i)) for i in range(self.nrows)]
        pivots = []
        r = 0
        for col in range(self.ncols):
            if r == self.nrows:
                break
            pivot_row = None
            for i in range(r, self.nrows):
                if not a[i][col].is_zero():
                    pivot_row = i
                    break
            if pivot_row is None:
                continue
            a[r], a[pivot_row] = a[pivot_row], a[r]
            pivot = a[r][col]
            a[r] = [x / pivot for x in a[r]]
            for i in range(self.nrows):
                if i != r and not a[i][col].is_zero():
                    factor = a[i][col]
                    a[i] = [x - factor * y for x, y in zip(a[i], a[r])]
            pivots.append(col)
            r += 1
        return Matrix.from_rows(self.field, a), pivots

    def rank(self):
        return len(self.rref()[1])

    def kernel(self):
        """Exact basis of the right null space, as column vectors."""
        rref, pivots = self.rref()
        free = [c for c in range(self.ncols) if c not in pivots]
        basis = []
        for fc in free:
            vec = [self.field.zero()] * self.ncols
            vec[fc] = self.field.one()
            for r, pc in enumerate(pivots):
                vec[pc] = -rref.entry(r, fc)
            basis.append(Matrix.column(self.field, vec))
        return basis

    def charpoly(self):
        """Monic characteristic polynomial det(xI - A), by the trace recurrence."""
        if not self.is_square():
            raise NotSquare("characteristic polynomial of a non-square matrix")
        n = self.nrows
        ident = Matrix.identity(self.field, n)
        coeffs = [self.field.one()]  # descending from x^n
        m = self
        for k in range(1, n + 1):
            ck = -(m.trace() / k)
            coeffs.append(ck)
            if k < n:
                m = self * (m + ck * ident)
        return Poly(self.field, tuple(reversed(coeffs)))

    def leading_principal_minors(self):
        """Determinants of the upper-left k x k blocks, k = 1..n."""
        if not self.is_square():
            raise NotSquare("principal minors of a non-square matrix")
        idx = list(range(self.nrows))
        return [self.submatrix(idx[:k], idx[:k]).det() for k in range(1, self.nrows + 1)]

    def is_positive_definite(self):
        """Sylvester's criterion; input must be exactly symmetric."""
        if not self.is_square():
            raise NotSquare("positive definiteness of a non-square matrix")
        if not self.is_symmetric():
            raise NotSymmetric("positive definiteness requires a symmetric matrix")
        return all(minor.sign() > 0 for minor in self.leading_principal_minors())


class Poly:
    """Polynomial over a number field, coefficients ascending, trailing zeros trimmed."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field, coeffs):
        cs = list(coeffs)
        while cs and cs[-1].is_zero():
            cs.pop()
        self.field = field
        self.coeffs = tuple(cs)

    @classmethod
    def from_coeffs(cls, field, values):
        return cls(field, tuple(Matrix._coerce_entry(field, v) for v in values))

    @property
    def degree(self):
        return len(self.coeffs) - 1

    def is_zero(self):
        return not self.coeffs

    def is_monic(self):
        return bool(self.coeffs) and self.coeffs[-1] == self.field.one()

    def __eq__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        return self.coeffs == other.coeffs and self.field == other.field

    def __hash__(self):
        return hash(tuple(c.key() for c in self.coeffs))

    def __add__(self, other):
        n = max(len(self.coeffs), len(other.coeffs))
        zero = self.field.zero()
        a = list(self.coeffs) + [zero] * (n - len(self.coeffs))
        b = list(other.coeffs) + [zero] * (n - len(other.coeffs))
        return Poly(self.field, tuple(x + y for x, y in zip(a, b)))

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return Poly(self.field, tuple(-c for c in self.coeffs))

    def __mul__(self, other):
        if isinstance(other, Poly):
            if self.is_zero() or other.is_zero():
                return Poly(self.field, ())
            zero = self.field.zero()
            out = [zero] * (len(self.coeffs) + len(other.coeffs) - 1)
            for i, x in enumerate(self.coeffs):
                if x.is_zero():
                    continue
                for j, y in enumerate(other.coeffs):
                    out[i + j] = out[i + j] + x * y
            return Poly(self.field, tuple(out))
        scalar = Matrix._coerce_entry(self.field, other)
        return Poly(self.field, tuple(scalar * c for c in self.coeffs))

    __rmul__ = __mul__

    def __call__(self, x):
        """Evaluate at a FieldElement, scalar, or square Matrix (Horner)."""
        if isinstance(x, Matrix):
            acc = Matrix.zeros(x.field, x.nrows, x.ncols)
            ident = Matrix.identity(x.field, x.nrows)
            for c in reversed(self.coeffs):
                acc = acc * x + c * ident
            return acc
        if not isinstance(x, FieldElement):
            x = self.field.element(x)
        acc = self.field.zero()
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self):
        return Poly(self.field,
                    tuple(c * k for k, c in enumerate(self.coeffs) if k >= 1))

    def monic(self):
        if self.is_zero():
            raise ValueError("cannot normalize the zero polynomial")
        lead = self.coeffs[-1]
        return Poly(self.field, tuple(c / lead for c in self.coeffs))

    def divmod(self, other):
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        zero = self.field.zero()
        rem = list(self.coeffs)
        db = other.degree
        lead = other.coeffs[-1]
        q = [zero] * max(len(rem) - db, 0)
        while rem and len(rem) - 1 >= db:
            while rem and rem[-1].is_zero():
                rem.pop()
            if not rem or len(rem) - 1 < db:
                break
            c = rem[-1] / lead
            shift = len(rem) - 1 - db
            q[shift] = c
            for i, bc in enumerate(other.coeffs):
                rem[i + shift] = rem[i + shift] - c * bc
            rem.pop()
        return Poly(self.field, tuple(q)), Poly(self.field, tuple(rem))

    def gcd(self, other):
        """Monic gcd by the Euclidean algorithm."""
        a, b = self, other
        while not b.is_zero():
            _, r = a.divmod(b)
            a, b = b, r
        if a.is_zero():
            return a
        return a.monic()

    def squarefree_part(self):
        """Monic product of the distinct irreducible factors."""
        if self.degree <= 1:
            return self.monic()
        g = self.gcd(self.derivative())
        if g.degree == 0:
            return self.monic()
        q, r = self.divmod(g)
        if not r.is_zero():
            raise ArithmeticError("gcd does not divide its polynomial")
        return q.monic()

    def __repr__(self):
        if self.is_zero():
            return "Poly(0)"
        parts = []
        for k, c in enumerate(self.coeffs):
            if c.is_zero():
                continue
            mon = "1" if k == 0 else ("x" if k == 1 else f"x^{k}")
            parts.append(f"({c})*{mon}")
        return "Poly(" + " + ".join(parts) + ")"


def lagrange_interpolate(field, points):
    """Unique polynomial of degree < len(points) through (x_i, y_i), exact."""
    xs = [Matrix._coerce_entry(field, x) for x, _ in points]
    ys = [Matrix._coerce_entry(field, y) for _, y in points]
    total = Poly(field, ())
    for i, yi in enumerate(ys):
        num = Poly.from_coeffs(field, [1])
        denom = field.one()
        for j, xj in enumerate(xs):
            if j == i:
                continue
            num = num * Poly(field, (-xj, field.one()))
            denom = denom * (xs[i] - xj)
        total = total + num * (yi / denom)
    return total
