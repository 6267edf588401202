"""Reflection tuples built from Cartan matrices in the root basis.

A Cartan matrix C (diagonal all 2, real order-2 reflections) determines the
tuple s_1..s_n in the root basis: s_i is the identity with row i replaced by
row_i(I) - row_i(C). Conversely a tuple of rank-one-displacement involutions
determines roots, coroots and its Cartan matrix up to a diagonal gauge that
this module fixes by normalizing the first nonzero coordinate of each root
to 1.

The Coxeter element c = s_1 ... s_n is computed twice on every call, once as
the plain product and once as -U^{-1} V from the splitting C = U + V into
unipotent upper and lower triangular parts; disagreement raises
InternalMismatch, turning the central identity of this construction into a
perpetual self-test. The characteristic polynomial of c is also available
directly as det(xU + V), computed independently by interpolation.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import BadDiagonal, DimensionMismatch, InternalMismatch, NotAReflection
from .exactlinalg import Matrix, lagrange_interpolate


class CartanMatrix:
    """Square matrix over a number field with all diagonal entries equal to 2."""

    __slots__ = ("matrix", "_symmetric")

    def __init__(self, matrix):
        if not matrix.is_square():
            raise BadDiagonal("Cartan matrix must be square")
        two = matrix.field.element(2)
        for i in range(matrix.nrows):
            if matrix.entry(i, i) != two:
                raise BadDiagonal(f"diagonal entry ({i + 1},{i + 1}) is not 2")
        self.matrix = matrix
        self._symmetric = None

    @classmethod
    def from_rows(cls, field, rows):
        return cls(Matrix.from_rows(field, rows))

    @property
    def n(self):
        return self.matrix.nrows

    @property
    def field(self):
        return self.matrix.field

    @property
    def is_symmetric(self):
        if self._symmetric is None:
            self._symmetric = self.matrix.is_symmetric()
        return self._symmetric

    def entry(self, i, j):
        return self.matrix.entry(i, j)

    def __eq__(self, other):
        if not isinstance(other, CartanMatrix):
            return NotImplemented
        return self.matrix == other.matrix

    def __hash__(self):
        return hash(self.matrix)

    def __repr__(self):
        return f"CartanMatrix({self.matrix!r})"


@dataclass(frozen=True)
class ReflectionTuple:
    """The ordered reflections of a Cartan matrix, in the root basis."""

    cartan: CartanMatrix
    refs: tuple

    @property
    def n(self):
        return len(self.refs)


@dataclass(frozen=True)
class ColemanDecomposition:
    """C = upper + lower with both factors unipotent triangular."""

    upper: Matrix
    lower: Matrix


def reflections_from_cartan(cartan):
    """Build s_1..s_n: s_i is the identity with row i replaced by e_i - C_i."""
    field = cartan.field
    n = cartan.n
    ident = Matrix.identity(field, n)
    refs = []
    for i in range(n):
        rows = ident.rows()
        rows[i] = [rows[i][j] - cartan.entry(i, j) for j in range(n)]
        refs.append(Matrix.from_rows(field, rows))
    return ReflectionTuple(cartan, tuple(refs))


def root_coroot(s):
    """Root column r and coroot row rv with s = I - r*rv, rv(r) = 2.

    The displacement s - I must have rank one; the root is normalized so its
    first nonzero coordinate is 1, which makes round-trips through
    cartan_of_tuple exact.
    """
    if not s.is_square():
        raise NotAReflection("reflections are square matrices")
    field = s.field
    n = s.nrows
    m = s - Matrix.identity(field, n)
    col = None
    for j in range(n):
        column = [m.entry(i, j) for i in range(n)]
        if any(not e.is_zero() for e in column):
            col = column
            break
    if col is None:
        raise NotAReflection("displacement is zero (rank 0)")
    k0 = next(i for i, e in enumerate(col) if not e.is_zero())
    scale = col[k0]
    root = [e / scale for e in col]
    coroot = [-m.entry(k0, j) for j in range(n)]
    # verify the rank-one factorization exactly
    for i in range(n):
        for j in range(n):
            if m.entry(i, j) != -(root[i] * coroot[j]):
                raise NotAReflection("displacement has rank greater than one")
    pairing = sum((coroot[i] * root[i] for i in range(n)), field.zero())
    if pairing != field.element(2):
        raise NotAReflection(f"coroot-root pairing is {pairing}, expected 2")
    return Matrix.column(field, root), Matrix.from_rows(field, [coroot])


def cartan_of_tuple(mats):
    """Cartan matrix {rv_i(r_j)} of a sequence of reflections."""
    mats = list(mats)
    if not mats:
        raise DimensionMismatch("empty tuple")
    n = mats[0].nrows
    field = mats[0].field
    pairs = [root_coroot(s) for s in mats]
    rows = []
    for _, rv in pairs:
        row = []
        for r, _ in pairs:
            acc = field.zero()
            for k in range(n):
                acc = acc + rv.entry(0, k) * r.entry(k, 0)
            row.append(acc)
        rows.append(row)
    return CartanMatrix.from_rows(field, rows)


def coleman_decompose(cartan):
    """Split C = U + V, U unipotent upper triangular, V unit-diagonal lower."""
    field = cartan.field
    n = cartan.n
    one = field.one()
    zero = field.zero()
    urows, vrows = [], []
    for i in range(n):
        urow, vrow = [], []
        for j in range(n):
            if i == j:
                urow.append(one)
                vrow.append(one)
            elif j > i:
                urow.append(cartan.entry(i, j))
                vrow.append(zero)
            else:
                urow.append(zero)
                vrow.append(cartan.entry(i, j))
        urows.append(urow)
        vrows.append(vrow)
    return ColemanDecomposition(Matrix.from_rows(field, urows),
                                Matrix.from_rows(field, vrows))


def coxeter_element(tup):
    """The product s_1 s_2 ... s_n, cross-checked against -U^{-1} V."""
    refs = tup.refs
    c = refs[0]
    for s in refs[1:]:
        c = c * s
    dec = coleman_decompose(tup.cartan)
    alt = -(dec.upper.inverse() * dec.lower)
    if c != alt:
        raise InternalMismatch("product of reflections disagrees with -U^{-1}V")
    return c


def coleman_charpoly(cartan):
    """Characteristic polynomial of the Coxeter element as det(xU + V).

    Computed by exact interpolation at n+1 rational nodes, independently of
    any reflection product, so it can be compared against
    coxeter_element(...).charpoly() as a two-route check.
    """
    field = cartan.field
    n = cartan.n
    dec = coleman_decompose(cartan)
    points = []
    for k in range(n + 1):
        xk = field.element(k)
        points.append((xk, (dec.upper * xk + dec.lower).det()))
    return lagrange_interpolate(field, points)


def cartan_blocks(cartan):
    """Connected components of {1..n} with i ~ j iff C_ij != 0 or C_ji != 0."""
    n = cartan.n
    seen = [False] * n
    blocks = []
    for start in range(n):
        if seen[start]:
            continue
        stack = [start]
        seen[start] = True
        comp = []
        while stack:
            i = stack.pop()
            comp.append(i + 1)
            for j in range(n):
                if not seen[j] and (not cartan.entry(i, j).is_zero()
                                    or not cartan.entry(j, i).is_zero()):
                    seen[j] = True
                    stack.append(j)
        blocks.append(sorted(comp))
    return blocks
