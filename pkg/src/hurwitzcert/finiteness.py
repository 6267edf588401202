"""Order and finiteness certification for matrix groups over a number field.

Element orders are decided by exact power iteration up to a cap. When the cap
is reached, two constructive infinite-order certificates are attempted:

* an exact Jordan certificate: if the squarefree part of the characteristic
  polynomial does not annihilate the matrix, the matrix is not diagonalizable
  and so has infinite order in characteristic zero;
* an embedding certificate: for each complex embedding of the field, isolate
  the roots of the (embedded, squarefree) characteristic polynomial in
  certified rectangles; if some eigenvalue lambda has lambda + 1/lambda
  certifiably off the real segment [-2, 2], that eigenvalue is off the unit
  circle in some embedding, hence is not a root of unity, hence the element
  has infinite order.

Group closure is a deterministic breadth-first enumeration with exact dedup,
reporting either the exact order or that the cap was hit. `certify` chains
the cheap checks (determinant, pairwise product orders, positivity at every
real embedding, a bounded orbit probe) before the expensive closure and
assembles everything into one report.
"""

from __future__ import annotations

import cmath
from collections import deque
from dataclasses import dataclass, field as dataclass_field
from fractions import Fraction

from .errors import DimensionMismatch, FieldMismatch, NotSquare, NotSymmetric, Singular
from .exactlinalg import Matrix
from .hurwitz import TupleState, orbit
from .numberfield import Box, _certify_root_box, _durand_kerner, _newton_step
from .reflection import (
    CartanMatrix,
    cartan_blocks,
    coxeter_element,
    reflections_from_cartan,
)

FINITE = "finite"
INFINITE = "infinite"
UNKNOWN = "unknown"


@dataclass(frozen=True)
class EigenvalueWitness:
    """A certified rectangle around an eigenvalue-sum lambda + 1/lambda that
    excludes the segment [-2, 2] of the real axis, at a named embedding."""

    embedding_index: int
    box: Box
    kind: str = "eigenvalue_box"

    def excludes_segment(self):
        b = self.box
        return b.im_lo > 0 or b.im_hi < 0 or b.re_lo > 2 or b.re_hi < -2


@dataclass(frozen=True)
class JordanWitness:
    """Exact non-diagonalizability certificate: the squarefree part of the
    characteristic polynomial does not annihilate the element."""

    note: str
    kind: str = "nondiagonalizable"


@dataclass(frozen=True)
class OrderResult:
    verdict: str                      # finite | infinite | unknown
    order: int | None = None          # set iff finite
    cap: int | None = None            # set iff unknown (the exhausted budget)
    witness: object | None = None     # set iff infinite

    @classmethod
    def finite(cls, order):
        return cls(FINITE, order=order)

    @classmethod
    def infinite(cls, witness):
        return cls(INFINITE, witness=witness)

    @classmethod
    def unknown(cls, cap):
        return cls(UNKNOWN, cap=cap)

    @property
    def is_finite(self):
        return self.verdict == FINITE

    @property
    def is_infinite(self):
        return self.verdict == INFINITE


@dataclass(frozen=True)
class ClosureResult:
    status: str                       # finite | cap_exceeded
    cap: int
    order: int | None = None
    elements: frozenset | None = None  # canonical keys, when finite

    @property
    def is_finite(self):
        return self.status == FINITE


@dataclass(frozen=True)
class GaloisPositivity:
    embedding_index: int
    is_real: bool
    positive_definite: bool | None    # None at complex embeddings (not applicable)


@dataclass
class CertifyCaps:
    """Budgets for the certification pipeline; CapExceeded verdicts are
    honest semidecisions, not errors."""

    pair_cap: int = 512
    coxeter_cap: int = 512
    orbit_cap: int = 2000
    closure_cap: int = 20000
    force_closure: bool = False


@dataclass
class CertificateReport:
    cartan: CartanMatrix
    determinant: object
    invertible: bool
    positive_definite: bool
    galois: list
    pair_orders: list                 # n x n table of OrderResult
    degenerate_pairs: list            # 1-based (i, i) diagonal entries
    coxeter_order: OrderResult
    orbit_probe: object
    closure: ClosureResult | None
    closure_skipped: bool
    conclusion: str                   # finite_certified | infinite_certified | inconclusive
    blocks: list = dataclass_field(default_factory=list)


# ---------------------------------------------------------------------------
# element order
# ---------------------------------------------------------------------------

def element_order(g, cap):
    """Exact order of an invertible matrix, or an infinite-order certificate.

    Powers g, g^2, ... are compared with the identity exactly; the first hit
    at exponent m proves order m (no proper divisor was the identity). At the
    cap the two certificates described in the module docstring are attempted;
    failing both, the result is Unknown(cap).
    """
    if not g.is_square():
        raise NotSquare("element order needs a square matrix")
    if cap < 1:
        raise ValueError("cap must be >= 1")
    if g.det().is_zero():
        raise Singular("element is not invertible")
    ident = Matrix.identity(g.field, g.nrows)
    p = g
    for m in range(1, cap + 1):
        if p == ident:
            return OrderResult.finite(m)
        if m < cap:
            p = p * g
    chi = g.charpoly()
    sf = chi.squarefree_part()
    if any(not e.is_zero() for e in sf(g).entries):
        return OrderResult.infinite(JordanWitness(
            "squarefree part of the characteristic polynomial does not annihilate the element"))
    witness = _unit_circle_violation(sf)
    if witness is not None:
        return OrderResult.infinite(witness)
    return OrderResult.unknown(cap)


def pair_product_order(a, b, cap):
    """Order of the product of two reflections with Cartan entries a, b.

    The invariant ab drives everything: both entries zero means commuting
    distinct reflections (order 2); exactly one zero is a Jordan block, hence
    infinite order; otherwise the product acts on the shared 2-plane as the
    companion matrix of x^2 - (ab - 2) x + 1 and the question is delegated to
    element_order on that companion.
    """
    if not (a.field is b.field or a.field == b.field):
        raise FieldMismatch("pair entries from different fields")
    field = a.field
    a_zero, b_zero = a.is_zero(), b.is_zero()
    if a_zero and b_zero:
        return OrderResult.finite(2)
    if a_zero != b_zero:
        return OrderResult.infinite(JordanWitness(
            "exactly one off-diagonal entry vanishes: unipotent Jordan block"))
    tau = a * b - 2
    companion = Matrix.from_rows(field, [[field.zero(), -field.one()],
                                         [field.one(), tau]])
    return element_order(companion, cap)


# ---------------------------------------------------------------------------
# unit-circle violation certificates
# ---------------------------------------------------------------------------

def _unit_circle_violation(poly):
    """Scan all embeddings for a certified eigenvalue-sum off [-2, 2].

    poly is a squarefree monic polynomial over the field whose roots are the
    candidate eigenvalues. Returns an EigenvalueWitness or None. The search
    has a fixed precision budget; None means "no certificate found", never
    "all roots are roots of unity".
    """
    if poly.degree < 1:
        return None
    field = poly.field
    for emb in field.embeddings():
        witness = _violation_at_embedding(poly, emb)
        if witness is not None:
            return witness
    return None


def _off_segment_promise(z):
    """How far z + 1/z visibly sits from the real segment [-2, 2] (float heuristic)."""
    if z == 0 or not cmath.isfinite(z):
        return 0.0
    s = z + 1 / z
    return max(abs(s.imag), abs(s.real) - 2)


def _violation_at_embedding(poly, emb):
    coeffs = poly.coeffs
    for prec_bits in (48, 96, 192):
        prec = Fraction(1, 1 << prec_bits)
        cboxes = [c.evaluate(emb, prec) for c in coeffs]
        dboxes = [Box.point(k) * c for k, c in enumerate(cboxes)][1:]
        mids = [b.approx() for b in cboxes]
        roots = _durand_kerner(mids)
        # try the most off-circle roots first
        for z in sorted(roots, key=_off_segment_promise, reverse=True):
            if _off_segment_promise(z) < 1e-9:
                continue
            cert = None
            for hw_bits in (22, 14, 8):
                hw = Fraction(1, 1 << hw_bits)
                re = Fraction(z.real).limit_denominator(1 << 40)
                im = Fraction(z.imag).limit_denominator(1 << 40)
                guess = Box(re - hw, re + hw, im - hw, im + hw)
                cert = _certify_root_box(cboxes, dboxes, guess)
                if cert is not None:
                    break
            if cert is None:
                continue
            x = cert
            for _ in range(60):
                if x.contains_zero():
                    break
                s = x + x.inverse()
                if s.im_lo > 0 or s.im_hi < 0 or s.re_lo > 2 or s.re_hi < -2:
                    return EigenvalueWitness(emb.index, s)
                nxt, _ = _newton_step(cboxes, dboxes, x)
                if nxt is None:
                    break
                nxt = nxt.round_outward(4 * prec_bits + 64)
                if nxt.width() >= x.width():
                    break
                x = nxt
    return None


# ---------------------------------------------------------------------------
# group closure
# ---------------------------------------------------------------------------

def group_closure(gens, cap):
    """Breadth-first closure of the generated matrix group, exact dedup.

    Involutive generators are their own inverses; inverses of the others are
    added so the closure is the full group. Stops with cap_exceeded the
    moment `cap` distinct elements have been found.
    """
    gens = list(gens)
    if cap < 1:
        raise ValueError("cap must be >= 1")
    if not gens:
        raise DimensionMismatch("at least one generator is required")
    n = gens[0].nrows
    field = gens[0].field
    for g in gens:
        if not g.is_square() or g.nrows != n:
            raise DimensionMismatch("generators must be square and same size")
        if not (g.field is field or g.field == field):
            raise FieldMismatch("generators from different fields")
        if g.det().is_zero():
            raise Singular("generators must be invertible")
    ident = Matrix.identity(field, n)
    mults = []
    seen_gens = set()
    for g in gens:
        if g in seen_gens:
            continue
        seen_gens.add(g)
        mults.append(g)
        if g * g != ident:
            inv = g.inverse()
            if inv not in seen_gens:
                seen_gens.add(inv)
                mults.append(inv)

    seen = {ident}
    queue = deque([ident])
    if len(seen) >= cap:
        return ClosureResult("cap_exceeded", cap)
    while queue:
        x = queue.popleft()
        for g in mults:
            y = x * g
            if y in seen:
                continue
            seen.add(y)
            if len(seen) >= cap:
                return ClosureResult("cap_exceeded", cap)
            queue.append(y)
    return ClosureResult(FINITE, cap, order=len(seen),
                         elements=frozenset(m.key() for m in seen))


# ---------------------------------------------------------------------------
# positivity at every real embedding
# ---------------------------------------------------------------------------

def galois_pd_check(cartan):
    """Positive definiteness of the Cartan matrix at each real embedding.

    The leading principal minors are computed once, exactly, in the field;
    their signs are then certified per embedding. Complex embeddings are
    reported as not applicable (None).
    """
    if not cartan.is_symmetric:
        raise NotSymmetric("positivity check requires a symmetric Cartan matrix")
    minors = cartan.matrix.leading_principal_minors()
    out = []
    for emb in cartan.field.embeddings():
        if not emb.is_real:
            out.append(GaloisPositivity(emb.index, False, None))
            continue
        pd = all(m.sign_at(emb) > 0 for m in minors)
        out.append(GaloisPositivity(emb.index, True, pd))
    return out


# ---------------------------------------------------------------------------
# the end-to-end certificate
# ---------------------------------------------------------------------------

def certify(cartan, caps=None):
    """Assemble the full finiteness report for a symmetric Cartan matrix.

    Cheap evidence first: determinant and invertibility, the n x n table of
    pairwise product orders, exact and per-embedding positive definiteness,
    the Coxeter element's order, a bounded Hurwitz orbit probe. Group closure
    runs last and is skipped once an infinite-order certificate exists,
    unless force_closure is set. Conclusion: infinite_certified on any
    infinite pair / Coxeter certificate; finite_certified when the closure
    completed; inconclusive otherwise.
    """
    caps = caps or CertifyCaps()
    if not cartan.is_symmetric:
        raise NotSymmetric("certification requires a symmetric Cartan matrix")
    n = cartan.n
    det = cartan.matrix.det()
    invertible = not det.is_zero()

    pair_orders = [[None] * n for _ in range(n)]
    degenerate = []
    for i in range(n):
        pair_orders[i][i] = OrderResult.finite(1)
        degenerate.append((i + 1, i + 1))
    for i in range(n):
        for j in range(i + 1, n):
            r = pair_product_order(cartan.entry(i, j), cartan.entry(j, i), caps.pair_cap)
            pair_orders[i][j] = pair_orders[j][i] = r

    pd = cartan.matrix.is_positive_definite()
    galois = galois_pd_check(cartan)

    refl = reflections_from_cartan(cartan)
    cox = coxeter_element(refl)
    cox_order = element_order(cox, caps.coxeter_cap)

    infinite_found = cox_order.is_infinite or any(
        pair_orders[i][j].is_infinite for i in range(n) for j in range(i + 1, n))

    probe = orbit(TupleState.from_reflections(refl), caps.orbit_cap, keep_states=False)

    closure = None
    closure_skipped = False
    if infinite_found and not caps.force_closure:
        closure_skipped = True
    else:
        closure = group_closure(refl.refs, caps.closure_cap)

    if infinite_found:
        conclusion = "infinite_certified"
    elif closure is not None and closure.is_finite:
        conclusion = "finite_certified"
    else:
        conclusion = "inconclusive"

    return CertificateReport(
        cartan=cartan,
        determinant=det,
        invertible=invertible,
        positive_definite=pd,
        galois=galois,
        pair_orders=pair_orders,
        degenerate_pairs=degenerate,
        coxeter_order=cox_order,
        orbit_probe=probe,
        closure=closure,
        closure_skipped=closure_skipped,
        conclusion=conclusion,
        blocks=cartan_blocks(cartan),
    )
