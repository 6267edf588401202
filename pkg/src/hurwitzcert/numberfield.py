"""Exact arithmetic in a real algebraic number field.

A field K is given by a monic irreducible integer polynomial f of degree d
together with a rational interval isolating exactly one real root theta of f
(the distinguished embedding of K into the reals). Elements are stored as
integer coordinate vectors over the power basis 1, theta, ..., theta^(d-1)
with a single positive denominator, fully reduced, so equality of elements is
equality of tuples and every element has one canonical hashable key. Degree 1
is plain Q.

Sign determination is exact: an element is zero iff its residue is the zero
polynomial, and otherwise bisection of the isolating interval separates the
value from zero after finitely many steps. All complex embeddings of K are
enumerated as disjoint rational rectangles (real roots isolated by Sturm
sequences, non-real roots certified by an interval Newton contraction), and
any element can be evaluated at any embedding to arbitrary rational
precision. Nothing in this module uses floating point for equality, hashing
or signs; floats appear only as starting guesses for root finding, after
which every claim is re-established in rational arithmetic.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    DivisionByZero,
    FieldMismatch,
    InternalInvariantError,
    MultipleRootsInInterval,
    NoRootInInterval,
    NonIntegerCoefficients,
    NonMonic,
    NotIrreducible,
)

_ZERO = Fraction(0)


# ---------------------------------------------------------------------------
# dense polynomial helpers (coefficients ascending)
# ---------------------------------------------------------------------------

def _trim(coeffs):
    coeffs = list(coeffs)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return coeffs


def _poly_eval(coeffs, x):
    acc = Fraction(0)
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def _poly_derivative(coeffs):
    return [k * c for k, c in enumerate(coeffs)][1:]


def _poly_rem(a, b):
    """Remainder of a by b over Q; b nonzero."""
    a = [Fraction(c) for c in a]
    b = [Fraction(c) for c in b]
    db = len(b) - 1
    lead = b[-1]
    while len(a) - 1 >= db and any(c != 0 for c in a):
        a = _trim(a)
        if not a or len(a) - 1 < db:
            break
        q = a[-1] / lead
        shift = len(a) - 1 - db
        for i, c in enumerate(b):
            a[i + shift] -= q * c
        a.pop()
    return _trim(a)


def _sturm_chain(coeffs):
    chain = [_trim([Fraction(c) for c in coeffs])]
    d = _trim(_poly_derivative(chain[0]))
    if d:
        chain.append(d)
    while len(chain) >= 2:
        r = _poly_rem(chain[-2], chain[-1])
        if not r:
            break
        chain.append([-c for c in r])
    return chain


def _sign_variations(values):
    signs = [1 if v > 0 else -1 for v in values if v != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def _sturm_count(chain, lo, hi):
    """Number of distinct real roots in (lo, hi]; endpoints must not be roots of chain[0]."""
    v_lo = _sign_variations([_poly_eval(p, lo) for p in chain])
    v_hi = _sign_variations([_poly_eval(p, hi) for p in chain])
    return v_lo - v_hi


def _cauchy_bound(coeffs):
    lead = coeffs[-1]
    return 1 + max(abs(Fraction(c, lead)) for c in coeffs[:-1]) if len(coeffs) > 1 else Fraction(1)


def _isolate_real_roots(coeffs):
    """Disjoint open rational intervals, one per real root, sorted ascending.

    Assumes coeffs is squarefree with no rational roots (true for any monic
    irreducible integer polynomial of degree >= 2).
    """
    chain = _sturm_chain(coeffs)
    bound = _cauchy_bound(coeffs)
    total = _sturm_count(chain, -bound, bound)
    out = []
    stack = [(-bound, bound, total)]
    while stack:
        lo, hi, count = stack.pop()
        if count == 0:
            continue
        if count == 1:
            out.append((lo, hi))
            continue
        mid = (lo + hi) / 2
        left = _sturm_count(chain, lo, mid)
        stack.append((lo, mid, left))
        stack.append((mid, hi, count - left))
    out.sort()
    return out


# ---------------------------------------------------------------------------
# irreducibility over Q (monic integer input, desk scale d <= 8)
# ---------------------------------------------------------------------------

def _int_divisors(n):
    n = abs(n)
    small = [d for d in range(1, int(math.isqrt(n)) + 1) if n % d == 0]
    divs = set(small)
    divs.update(n // d for d in small)
    return sorted(divs)


def _int_poly_divides(g, f):
    """Exact division test of integer polynomials, g monic."""
    rem = list(f)
    dg = len(g) - 1
    while len(rem) - 1 >= dg:
        while rem and rem[-1] == 0:
            rem.pop()
        if not rem or len(rem) - 1 < dg:
            break
        q = rem[-1]
        shift = len(rem) - 1 - dg
        for i, c in enumerate(g):
            rem[i + shift] -= q * c
        rem.pop()
    return all(c == 0 for c in rem)


def _is_irreducible(coeffs):
    """Trial factor search against all monic integer factors of degree <= d/2.

    Coefficient ranges come from a Mignotte-style bound; candidates are pruned
    by the divisibility of their values at 0, 1 and -1. Adequate for the desk
    scale this package targets (degrees up to ~8, moderate coefficients).
    """
    d = len(coeffs) - 1
    if d == 1:
        return True
    a0 = coeffs[0]
    if a0 == 0:
        return False
    # integer roots (monic => all rational roots are integers dividing a0)
    for r in _int_divisors(a0):
        for root in (r, -r):
            if _poly_eval(coeffs, root) == 0:
                return False
    if d <= 3:
        return True
    norm2 = math.isqrt(sum(c * c for c in coeffs)) + 1
    f1 = _poly_eval(coeffs, 1)
    fm1 = _poly_eval(coeffs, -1)
    for k in range(2, d // 2 + 1):
        bounds = [math.comb(k - 1, i) * norm2 + (math.comb(k - 1, i - 1) if i else 0)
                  for i in range(k)]
        const_choices = [s * dv for dv in _int_divisors(a0) if dv <= bounds[0] for s in (1, -1)]
        mid_ranges = [range(-bounds[i], bounds[i] + 1) for i in range(1, k)]
        for b0 in const_choices:
            for mid in itertools.product(*mid_ranges):
                g = [b0, *mid, 1]
                g1 = _poly_eval(g, 1)
                gm1 = _poly_eval(g, -1)
                if g1 == 0 or f1 % g1 != 0:
                    continue
                if gm1 == 0 or fm1 % gm1 != 0:
                    continue
                if _int_poly_divides(g, list(coeffs)):
                    return False
    return True


# ---------------------------------------------------------------------------
# rational interval / rectangle arithmetic
# ---------------------------------------------------------------------------

def _imul(al, ah, bl, bh):
    p1, p2, p3, p4 = al * bl, al * bh, ah * bl, ah * bh
    return min(p1, p2, p3, p4), max(p1, p2, p3, p4)


def _eval_interval(int_coeffs, lo, hi):
    """Enclosure of sum c_k * t^k for t in [lo, hi], integer coefficients."""
    acc_lo = acc_hi = Fraction(int_coeffs[-1])
    for c in reversed(int_coeffs[:-1]):
        acc_lo, acc_hi = _imul(acc_lo, acc_hi, lo, hi)
        acc_lo += c
        acc_hi += c
    return acc_lo, acc_hi


class Box:
    """Closed rational rectangle in the complex plane."""

    __slots__ = ("re_lo", "re_hi", "im_lo", "im_hi")

    def __init__(self, re_lo, re_hi, im_lo, im_hi):
        self.re_lo = Fraction(re_lo)
        self.re_hi = Fraction(re_hi)
        self.im_lo = Fraction(im_lo)
        self.im_hi = Fraction(im_hi)

    @classmethod
    def point(cls, re, im=0):
        re = Fraction(re)
        im = Fraction(im)
        return cls(re, re, im, im)

    def width(self):
        return max(self.re_hi - self.re_lo, self.im_hi - self.im_lo)

    def mid(self):
        return (self.re_lo + self.re_hi) / 2, (self.im_lo + self.im_hi) / 2

    def contains_zero(self):
        return self.re_lo <= 0 <= self.re_hi and self.im_lo <= 0 <= self.im_hi

    def is_real_line_box(self):
        return self.im_lo == 0 == self.im_hi

    def __add__(self, other):
        return Box(self.re_lo + other.re_lo, self.re_hi + other.re_hi,
                   self.im_lo + other.im_lo, self.im_hi + other.im_hi)

    def __sub__(self, other):
        return Box(self.re_lo - other.re_hi, self.re_hi - other.re_lo,
                   self.im_lo - other.im_hi, self.im_hi - other.im_lo)

    def __mul__(self, other):
        rl, rh = _imul(self.re_lo, self.re_hi, other.re_lo, other.re_hi)
        sl, sh = _imul(self.im_lo, self.im_hi, other.im_lo, other.im_hi)
        tl, th = _imul(self.re_lo, self.re_hi, other.im_lo, other.im_hi)
        ul, uh = _imul(self.im_lo, self.im_hi, other.re_lo, other.re_hi)
        return Box(rl - sh, rh - sl, tl + ul, th + uh)

    def inverse(self):
        """Enclosure of 1/z; requires the rectangle to exclude zero."""
        sq_re = _isquare(self.re_lo, self.re_hi)
        sq_im = _isquare(self.im_lo, self.im_hi)
        nlo = sq_re[0] + sq_im[0]
        nhi = sq_re[1] + sq_im[1]
        if nlo <= 0:
            raise ZeroDivisionError("rectangle may contain zero")
        rl, rh = _idiv(self.re_lo, self.re_hi, nlo, nhi)
        il, ih = _idiv(-self.im_hi, -self.im_lo, nlo, nhi)
        return Box(rl, rh, il, ih)

    def intersect(self, other):
        return Box(max(self.re_lo, other.re_lo), min(self.re_hi, other.re_hi),
                   max(self.im_lo, other.im_lo), min(self.im_hi, other.im_hi))

    def strictly_inside(self, other):
        return (other.re_lo < self.re_lo and self.re_hi < other.re_hi
                and other.im_lo < self.im_lo and self.im_hi < other.im_hi)

    def conjugate(self):
        return Box(self.re_lo, self.re_hi, -self.im_hi, -self.im_lo)

    def round_outward(self, bits):
        scale = 1 << bits
        return Box(Fraction(math.floor(self.re_lo * scale), scale),
                   Fraction(math.ceil(self.re_hi * scale), scale),
                   Fraction(math.floor(self.im_lo * scale), scale),
                   Fraction(math.ceil(self.im_hi * scale), scale))

    def approx(self):
        m = self.mid()
        return complex(float(m[0]), float(m[1]))

    def __repr__(self):
        return (f"Box([{float(self.re_lo):.6g}, {float(self.re_hi):.6g}] + "
                f"[{float(self.im_lo):.6g}, {float(self.im_hi):.6g}]i)")


def _isquare(lo, hi):
    if lo >= 0:
        return lo * lo, hi * hi
    if hi <= 0:
        return hi * hi, lo * lo
    return _ZERO, max(lo * lo, hi * hi)


def _idiv(al, ah, bl, bh):
    # denominator interval strictly positive
    q1, q2, q3, q4 = al / bl, al / bh, ah / bl, ah / bh
    return min(q1, q2, q3, q4), max(q1, q2, q3, q4)


def _poly_eval_box(coeff_boxes, x):
    acc = coeff_boxes[-1]
    for c in reversed(coeff_boxes[:-1]):
        acc = acc * x + c
    return acc


def _newton_step(coeff_boxes, deriv_boxes, x):
    """One interval Newton step; returns a contracted box or None.

    If the returned box lies strictly inside x and the derivative enclosure
    excludes zero, x contains exactly one root of every polynomial in the
    coefficient boxes (Moore's interval Newton existence/uniqueness test).
    """
    dfx = _poly_eval_box(deriv_boxes, x)
    if dfx.contains_zero():
        return None, False
    mre, mim = x.mid()
    m = Box.point(mre, mim)
    fm = _poly_eval_box(coeff_boxes, m)
    n = m - fm * dfx.inverse()
    certified = n.strictly_inside(x)
    inter = n.intersect(x)
    if inter.re_lo > inter.re_hi or inter.im_lo > inter.im_hi:
        return None, False
    return inter, certified


def _certify_root_box(coeff_boxes, deriv_boxes, box, rounds=4, bits=256):
    """Try to certify a unique root inside box; returns a contracted box or None."""
    x = box
    for _ in range(rounds):
        nxt, ok = _newton_step(coeff_boxes, deriv_boxes, x)
        if nxt is None:
            return None
        if ok:
            return nxt.round_outward(bits)
        x = nxt
    return None


def _contract_root_box(coeff_boxes, deriv_boxes, box, max_width, bits):
    """Shrink a certified root box below max_width by repeated Newton steps."""
    x = box
    for _ in range(6000):
        if x.width() <= max_width:
            return x
        nxt, _ = _newton_step(coeff_boxes, deriv_boxes, x)
        if nxt is None:
            raise InternalInvariantError("root refinement lost its root")
        x = nxt.round_outward(bits)
    raise InternalInvariantError("root refinement failed to converge")


def _durand_kerner(coeffs):
    """Float approximations to all roots of a monic complex polynomial."""
    n = len(coeffs) - 1
    cs = [complex(c) / complex(coeffs[-1]) for c in coeffs]
    roots = [(0.4 + 0.9j) ** (k + 1) for k in range(n)]
    for _ in range(600):
        shift = 0.0
        new = []
        for i, z in enumerate(roots):
            p = 0j
            for c in reversed(cs):
                p = p * z + c
            q = 1 + 0j
            for j, w in enumerate(roots):
                if j != i:
                    q *= z - w
            delta = p / q if q != 0 else 0.1 + 0.1j
            new.append(z - delta)
            shift = max(shift, abs(delta))
        roots = new
        if shift < 1e-14:
            break
    return roots


# ---------------------------------------------------------------------------
# field elements
# ---------------------------------------------------------------------------

class FieldElement:
    """An exact element of a NumberField, canonically normalized.

    Stored as integer numerator coordinates over the power basis plus a
    positive denominator with gcd(content, den) = 1, so tuple identity is
    exact equality and `key()` is a canonical hash key.
    """

    __slots__ = ("field", "num", "den")

    def __init__(self, field, num, den):
        self.field = field
        self.num = num
        self.den = den

    # -- construction helpers ------------------------------------------------

    @staticmethod
    def _normalized(field, num, den):
        if den < 0:
            den = -den
            num = [-x for x in num]
        g = den
        for x in num:
            g = math.gcd(g, x)
            if g == 1:
                break
        if g > 1:
            num = [x // g for x in num]
            den //= g
        if all(x == 0 for x in num):
            return FieldElement(field, field._zero_num, 1)
        return FieldElement(field, tuple(num), den)

    # -- predicates and views -------------------------------------------------

    def is_zero(self):
        return self.den == 1 and self.num == self.field._zero_num

    def is_rational(self):
        return all(x == 0 for x in self.num[1:])

    def as_fraction(self):
        if not self.is_rational():
            raise ValueError("element is not rational")
        return Fraction(self.num[0], self.den)

    def coeffs(self):
        """Coordinates over the power basis, as reduced Fractions."""
        return tuple(Fraction(x, self.den) for x in self.num)

    def key(self):
        return (self.num, self.den)

    # -- arithmetic -----------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, FieldElement):
            f = self.field
            if other.field is f or other.field == f:
                return other
            raise FieldMismatch("operands belong to different fields")
        if isinstance(other, (int, Fraction)):
            return self.field.element(other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        da, db = self.den, other.den
        if da == 1 and db == 1:
            return FieldElement(self.field, tuple(map(int.__add__, self.num, other.num)), 1)
        num = [x * db + y * da for x, y in zip(self.num, other.num)]
        return self._normalized(self.field, num, da * db)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        da, db = self.den, other.den
        if da == 1 and db == 1:
            return FieldElement(self.field, tuple(map(int.__sub__, self.num, other.num)), 1)
        num = [x * db - y * da for x, y in zip(self.num, other.num)]
        return self._normalized(self.field, num, da * db)

    def __rsub__(self, other):
        return self.field.element(other).__sub__(self)

    def __neg__(self):
        return FieldElement(self.field, tuple(-x for x in self.num), self.den)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        num = self.field._mul_raw(self.num, other.num)
        if self.den == 1 and other.den == 1:
            return FieldElement(self.field, num, 1)
        return self._normalized(self.field, list(num), self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self.field.element(other) * self.inverse()

    def inverse(self):
        if self.is_zero():
            raise DivisionByZero("division by zero field element")
        field = self.field
        if field.degree == 1:
            return field.element(Fraction(self.den, self.num[0]))
        # extended gcd of the residue with the minimal polynomial over Q
        a = _trim(self.coeffs())
        f = [Fraction(c) for c in field.minpoly]
        r0, r1 = f, a
        s0, s1 = [], [Fraction(1)]
        while True:
            q, r = _poly_divmod(r0, r1)
            if not r:
                break
            s = _poly_sub(s0, _poly_mul(q, s1))
            r0, s0, r1, s1 = r1, s1, r, s
        if len(r1) != 1:
            raise InternalInvariantError("minimal polynomial not irreducible")
        inv = [c / r1[0] for c in s1]
        return field.element(inv)

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = self.field.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    # -- comparisons -----------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.field.element(other)
        if not isinstance(other, FieldElement):
            return NotImplemented
        return (self.num == other.num and self.den == other.den
                and (self.field is other.field or self.field == other.field))

    def __hash__(self):
        return hash((self.num, self.den))

    # -- analytic queries --------------------------------------------------------

    def sign(self):
        """Exact sign at the distinguished real embedding: -1, 0 or +1."""
        if self.is_zero():
            return 0
        field = self.field
        if field.degree == 1:
            return 1 if self.num[0] > 0 else -1
        lo, hi = field._iso
        for _ in range(20000):
            vlo, vhi = _eval_interval(self.num, lo, hi)
            if vlo > 0:
                return 1
            if vhi < 0:
                return -1
            lo, hi = field._bisect_iso()
        raise InternalInvariantError("sign refinement failed to converge")

    def evaluate(self, embedding, precision):
        """Certified rectangle of width <= precision around the image at an embedding."""
        precision = Fraction(precision)
        if precision <= 0:
            raise ValueError("precision must be positive")
        field = self.field
        if embedding.field != field:
            raise FieldMismatch("embedding belongs to a different field")
        coeff_boxes = [Box.point(c) for c in self.coeffs()]
        box = field._embedding_box(embedding.index)
        for _ in range(10000):
            val = _poly_eval_box(coeff_boxes, box)
            if val.width() <= precision:
                return val
            box = field._refine_embedding(embedding.index, box.width() / 4)
        raise InternalInvariantError("embedding evaluation failed to converge")

    def sign_at(self, embedding):
        """Exact sign at a real embedding."""
        if not embedding.is_real:
            raise ValueError("sign_at requires a real embedding")
        if self.is_zero():
            return 0
        prec = Fraction(1, 4)
        for _ in range(10000):
            val = self.evaluate(embedding, prec)
            if val.re_lo > 0:
                return 1
            if val.re_hi < 0:
                return -1
            prec /= 16
        raise InternalInvariantError("sign refinement failed to converge")

    def approx(self):
        """Float approximation at the distinguished embedding (display only)."""
        if self.field.degree == 1:
            return float(self.as_fraction())
        box = self.evaluate(self.field.distinguished_embedding(), Fraction(1, 1 << 48))
        return float(box.mid()[0])

    def __repr__(self):
        return f"FieldElement({self!s})"

    def __str__(self):
        parts = []
        for k, c in enumerate(self.coeffs()):
            if c == 0:
                continue
            if k == 0:
                parts.append(str(c))
            else:
                mon = "t" if k == 1 else f"t^{k}"
                parts.append(mon if c == 1 else f"-{mon}" if c == -1 else f"{c}*{mon}")
        return " + ".join(parts).replace("+ -", "- ") if parts else "0"


def _poly_divmod(a, b):
    a = list(a)
    db = len(b) - 1
    lead = b[-1]
    q = [Fraction(0)] * max(len(a) - db, 0)
    while len(a) - 1 >= db and a:
        a = _trim(a)
        if not a or len(a) - 1 < db:
            break
        c = a[-1] / lead
        shift = len(a) - 1 - db
        q[shift] = c
        for i, bc in enumerate(b):
            a[i + shift] -= c * bc
        a.pop()
    return _trim(q), _trim(a)


def _poly_mul(a, b):
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _trim(out)


def _poly_sub(a, b):
    n = max(len(a), len(b))
    a = list(a) + [Fraction(0)] * (n - len(a))
    b = list(b) + [Fraction(0)] * (n - len(b))
    return _trim([x - y for x, y in zip(a, b)])


# ---------------------------------------------------------------------------
# embeddings
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Embedding:
    """One complex embedding of the field: an isolating rectangle for a root
    of the minimal polynomial. `refined` returns a new narrower snapshot."""

    field: "NumberField"
    index: int
    box: Box
    is_real: bool
    is_distinguished: bool

    def refined(self, max_width):
        box = self.field._refine_embedding(self.index, Fraction(max_width))
        return Embedding(self.field, self.index, box, self.is_real, self.is_distinguished)

    def approx(self):
        return self.field._embedding_box(self.index).approx()


# ---------------------------------------------------------------------------
# the field itself
# ---------------------------------------------------------------------------

class NumberField:
    """Q[x]/(f) with a distinguished real root of f singled out by an interval."""

    def __init__(self, minpoly, root_interval=None):
        coeffs = list(minpoly)
        if not coeffs or len(coeffs) < 2:
            raise NonMonic("minimal polynomial must have degree >= 1")
        for c in coeffs:
            if isinstance(c, Fraction):
                if c.denominator != 1:
                    raise NonIntegerCoefficients(f"non-integer coefficient {c}")
            elif not isinstance(c, int):
                raise NonIntegerCoefficients(f"non-integer coefficient {c!r}")
        coeffs = [int(c) for c in coeffs]
        if coeffs[-1] == 0:
            raise NonMonic("leading coefficient is zero")
        if coeffs[-1] != 1:
            raise NonMonic(f"leading coefficient is {coeffs[-1]}, expected 1")
        if not _is_irreducible(coeffs):
            raise NotIrreducible("minimal polynomial is reducible over Q")

        self.minpoly = tuple(coeffs)
        self.degree = len(coeffs) - 1
        d = self.degree

        if d == 1:
            root = Fraction(-coeffs[0])
            self.root_interval = (root, root)
        else:
            if root_interval is None:
                raise NoRootInInterval("a root-isolating interval is required")
            lo, hi = Fraction(root_interval[0]), Fraction(root_interval[1])
            if not lo < hi:
                raise NoRootInInterval("empty interval")
            chain = _sturm_chain(coeffs)
            count = _sturm_count(chain, lo, hi)
            if count == 0:
                raise NoRootInInterval(f"no real root in ({lo}, {hi})")
            if count > 1:
                raise MultipleRootsInInterval(f"{count} real roots in ({lo}, {hi})")
            if _poly_eval(coeffs, lo) * _poly_eval(coeffs, hi) >= 0:
                raise NoRootInInterval("polynomial does not change sign on the interval")
            self.root_interval = (lo, hi)

        self._zero_num = (0,) * d
        self._redrows = self._reduction_rows()
        self._iso = self.root_interval
        self._iso_sign_lo = None if d == 1 else (1 if _poly_eval(coeffs, self.root_interval[0]) > 0 else -1)
        self._embeddings = None
        self._emb_boxes = None
        self._emb_real_state = None
        self._distinguished_index = None

    # -- identity ---------------------------------------------------------------

    @classmethod
    def rationals(cls):
        """Plain Q, presented as the degree-1 field Q[x]/(x)."""
        return cls((0, 1))

    def __eq__(self, other):
        if not isinstance(other, NumberField):
            return NotImplemented
        return self.minpoly == other.minpoly and self.root_interval == other.root_interval

    def __hash__(self):
        return hash((self.minpoly, self.root_interval))

    def __repr__(self):
        if self.degree == 1:
            return "NumberField(Q)"
        return f"NumberField(degree {self.degree}, root in {tuple(map(float, self.root_interval))})"

    # -- element constructors ------------------------------------------------------

    def element(self, value):
        """Build an element from an int, Fraction, or coefficient sequence."""
        d = self.degree
        if isinstance(value, FieldElement):
            if value.field == self:
                return value
            raise FieldMismatch("element from a different field")
        if isinstance(value, (int, Fraction)):
            value = [value] + [0] * (d - 1)
        coeffs = [Fraction(c) for c in value]
        if len(coeffs) > d:
            # reduce high powers via the generator
            acc = self.zero()
            g = self.gen()
            for c in reversed(coeffs):
                acc = acc * g + self.element(c)
            return acc
        coeffs += [Fraction(0)] * (d - len(coeffs))
        den = math.lcm(*(c.denominator for c in coeffs)) if coeffs else 1
        num = [int(c * den) for c in coeffs]
        return FieldElement._normalized(self, num, den)

    def zero(self):
        return FieldElement(self, self._zero_num, 1)

    def one(self):
        return FieldElement(self, (1,) + (0,) * (self.degree - 1), 1)

    def gen(self):
        """The distinguished root theta as an element (the rational root when d = 1)."""
        if self.degree == 1:
            return self.element(Fraction(-self.minpoly[0]))
        return FieldElement(self, (0, 1) + (0,) * (self.degree - 2), 1)

    # -- raw arithmetic core ----------------------------------------------------------

    def _reduction_rows(self):
        """theta^(d+k) over the power basis, k = 0..d-2, as integer vectors."""
        d = self.degree
        if d == 1:
            return ()
        base = [-c for c in self.minpoly[:d]]
        rows = [tuple(base)]
        cur = list(base)
        for _ in range(d - 2):
            top = cur[-1]
            cur = [0] + cur[:-1]
            if top:
                for i in range(d):
                    cur[i] += top * base[i]
            rows.append(tuple(cur))
        return tuple(rows)

    def _mul_raw(self, na, nb):
        d = self.degree
        if d == 1:
            return (na[0] * nb[0],)
        prod = [0] * (2 * d - 1)
        for i, ai in enumerate(na):
            if ai:
                for j, bj in enumerate(nb):
                    prod[i + j] += ai * bj
        rows = self._redrows
        for k in range(2 * d - 2, d - 1, -1):
            c = prod[k]
            if c:
                row = rows[k - d]
                for i in range(d):
                    prod[i] += c * row[i]
        return tuple(prod[:d])

    def _bisect_iso(self):
        lo, hi = self._iso
        mid = (lo + hi) / 2
        fm = _poly_eval(self.minpoly, mid)
        if fm == 0:
            raise InternalInvariantError("rational root of an irreducible polynomial")
        if (1 if fm > 0 else -1) == self._iso_sign_lo:
            self._iso = (mid, hi)
        else:
            self._iso = (lo, mid)
        return self._iso

    # -- embeddings --------------------------------------------------------------------

    def embeddings(self):
        """All d complex embeddings as disjoint certified rectangles, in a
        deterministic order (sorted by rectangle position, conjugates adjacent)."""
        if self._embeddings is None:
            self._compute_embeddings()
        return self._embeddings

    def distinguished_embedding(self):
        self.embeddings()
        return self._embeddings[self._distinguished_index]

    def _embedding_box(self, index):
        self.embeddings()
        return self._emb_boxes[index]

    def _compute_embeddings(self):
        d = self.degree
        f = self.minpoly
        if d == 1:
            root = Fraction(-f[0])
            box = Box.point(root)
            self._emb_boxes = [box]
            self._emb_real_state = [(root - 1, root + 1, None)]
            self._distinguished_index = 0
            self._embeddings = (Embedding(self, 0, box, True, True),)
            return

        real_intervals = _isolate_real_roots(f)
        # tighten so interval widths are small and comparison with the user's
        # isolating interval is cheap
        real_states = []
        for lo, hi in real_intervals:
            s_lo = 1 if _poly_eval(f, lo) > 0 else -1
            while hi - lo > Fraction(1, 64):
                mid = (lo + hi) / 2
                fm = _poly_eval(f, mid)
                if fm == 0:
                    raise InternalInvariantError("rational root of an irreducible polynomial")
                if (1 if fm > 0 else -1) == s_lo:
                    lo = mid
                else:
                    hi = mid
            real_states.append([lo, hi, s_lo])

        n_pairs, rem = divmod(d - len(real_states), 2)
        if rem:
            raise InternalInvariantError("real/complex root count mismatch")

        coeff_boxes = [Box.point(c) for c in f]
        deriv_boxes = [Box.point(k * c) for k, c in enumerate(f)][1:]
        upper = []
        if n_pairs:
            approx = _durand_kerner([complex(c) for c in f])
            cands = sorted((z for z in approx if z.imag > 1e-7), key=lambda z: (z.real, z.imag))
            if len(cands) != n_pairs:
                raise InternalInvariantError("float root finding lost a conjugate pair")
            for z in cands:
                box = None
                for half_width in (Fraction(1, 1 << 20), Fraction(1, 1 << 12), Fraction(1, 1 << 6)):
                    re = Fraction(z.real).limit_denominator(1 << 40)
                    im = Fraction(z.imag).limit_denominator(1 << 40)
                    guess = Box(re - half_width, re + half_width, im - half_width, im + half_width)
                    box = _certify_root_box(coeff_boxes, deriv_boxes, guess)
                    if box is not None:
                        break
                if box is None:
                    raise InternalInvariantError("failed to certify a complex root")
                while box.im_lo <= 0 or box.width() > Fraction(1, 64):
                    nxt, _ = _newton_step(coeff_boxes, deriv_boxes, box)
                    if nxt is None:
                        raise InternalInvariantError("complex root refinement failed")
                    box = nxt.round_outward(256)
                upper.append(box)

        regions = []
        for st in real_states:
            regions.append(("real", st))
        for box in upper:
            regions.append(("upper", box))
            regions.append(("lower", box.conjugate()))

        def sort_key(item):
            kind, data = item
            if kind == "real":
                return (data[0], Fraction(0))
            return (data.re_lo, data.im_lo)

        regions.sort(key=sort_key)

        # locate the distinguished real root: refine each real region until it
        # is entirely inside or entirely outside the user's interval
        u_lo, u_hi = self.root_interval
        distinguished = None
        boxes = []
        states = []
        embeddings = []
        for idx, (kind, data) in enumerate(regions):
            if kind == "real":
                lo, hi, s_lo = data
                while not (u_lo <= lo and hi <= u_hi) and not (hi <= u_lo or u_hi <= lo):
                    mid = (lo + hi) / 2
                    fm = _poly_eval(f, mid)
                    if (1 if fm > 0 else -1) == s_lo:
                        lo = mid
                    else:
                        hi = mid
                inside = u_lo <= lo and hi <= u_hi
                box = Box(lo, hi, 0, 0)
                boxes.append(box)
                states.append([lo, hi, s_lo])
                if inside:
                    if distinguished is not None:
                        raise InternalInvariantError("two roots matched the isolating interval")
                    distinguished = idx
                embeddings.append((idx, box, True))
            else:
                boxes.append(data)
                states.append(None)
                embeddings.append((idx, data, False))
        if distinguished is None:
            raise InternalInvariantError("distinguished root not found among isolated roots")

        self._emb_boxes = boxes
        self._emb_real_state = states
        self._distinguished_index = distinguished
        self._embeddings = tuple(
            Embedding(self, idx, box, is_real, idx == distinguished)
            for idx, box, is_real in embeddings
        )

    def _refine_embedding(self, index, max_width):
        """Narrow the cached rectangle for one embedding to width <= max_width."""
        self.embeddings()
        box = self._emb_boxes[index]
        max_width = Fraction(max_width)
        if box.width() <= max_width:
            return box
        f = self.minpoly
        if self.degree == 1:
            return box
        state = self._emb_real_state[index]
        if state is not None:
            lo, hi, s_lo = state
            while hi - lo > max_width:
                mid = (lo + hi) / 2
                fm = _poly_eval(f, mid)
                if fm == 0:
                    raise InternalInvariantError("rational root of an irreducible polynomial")
                if (1 if fm > 0 else -1) == s_lo:
                    lo = mid
                else:
                    hi = mid
            self._emb_real_state[index] = [lo, hi, s_lo]
            box = Box(lo, hi, 0, 0)
        else:
            coeff_boxes = [Box.point(c) for c in f]
            deriv_boxes = [Box.point(k * c) for k, c in enumerate(f)][1:]
            bits = max(64, 2 * _width_bits(max_width) + 64)
            box = _contract_root_box(coeff_boxes, deriv_boxes, box, max_width, bits)
        self._emb_boxes[index] = box
        return box


def _width_bits(width):
    w = Fraction(width)
    if w >= 1:
        return 1
    return max(1, (w.denominator // max(w.numerator, 1)).bit_length())
