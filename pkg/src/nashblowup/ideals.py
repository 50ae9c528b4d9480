"""Ideals in the local ring at the origin.

Equality, membership, and containment refer to the localization of the
polynomial ring at the maximal ideal (x_1, ..., x_d).  The computational
backbone is a standard-basis completion: Buchberger's algorithm with the
ordinary division normal form for global orders, and with Mora's weak
normal form (ecart selection) for local degree orders.

Canonical form.  For a local order, the fully tail-reduced standard basis
of an ideal need not consist of polynomials: reducing the tail of
x - x*y against itself produces the power series x*(1 + y + y^2 + ...)
and never terminates, although (x - x*y) = (x) in the local ring.  When
the quotient is finite dimensional the ideal contains a power of the
maximal ideal: with s the largest degree of a standard monomial, the
graded pieces of the quotient vanish above s (the order is degree
compatible, so standard monomials of degree j count the j-th graded
piece), hence m^(s+1) lies in the ideal by Nakayama.  All arithmetic may
therefore be truncated above degree s+1, and the tail-reduced truncated
basis is finite, polynomial, and a complete invariant of the ideal: two
ideals of finite colength are equal iff their reduced bases agree element
by element.  For infinite colength the reduced basis is normalized
deterministically (bounded tail reduction) and equality falls back to
mutual membership, which is always decisive.
"""

from __future__ import annotations

import heapq
import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

from .polynomials import (
    HOMOGENIZED_LOCAL,
    LOCAL_DEGREE,
    MonomialOrder,
    MultiIndex,
    Polynomial,
    RingContext,
    mi_divides,
    mi_lcm,
    mi_sub,
    multi_indices_in_range,
    poly_sort_key,
)


class _InfiniteDimension:
    """Singleton for infinite-dimensional quotients; compares above every int."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "infinite"

    def __eq__(self, other) -> bool:
        return isinstance(other, _InfiniteDimension)

    def __hash__(self) -> int:
        return hash("infinite-dimension")

    def __gt__(self, other) -> bool:
        return not isinstance(other, _InfiniteDimension)

    def __ge__(self, other) -> bool:
        return True

    def __lt__(self, other) -> bool:
        return False

    def __le__(self, other) -> bool:
        return isinstance(other, _InfiniteDimension)


INFINITE = _InfiniteDimension()

QuotientDimension = int | _InfiniteDimension


def _ecart(p: Polynomial, order: MonomialOrder) -> int:
    return p.total_degree() - sum(p.leading_monomial(order))


def _reduce_leading(h: Polynomial, g: Polynomial, lm_h: MultiIndex, lm_g: MultiIndex) -> Polynomial:
    """Cancel the leading term of h against g; lm_g must divide lm_h.

    Over the rationals the reduction is fraction-free (cross-multiplied and
    content-stripped), which rescales h by a unit but keeps coefficients
    small; over a prime field it divides by the leading coefficient.
    """
    field = h.ring.field
    shift = mi_sub(lm_h, lm_g)
    if field.is_prime_field:
        factor = field.neg(field.div(h.terms[lm_h], g.terms[lm_g]))
        return h + g.term_mul(factor, shift)
    return (h.scalar_mul(g.terms[lm_g]) - g.term_mul(h.terms[lm_h], shift)).strip_content()


def weak_normal_form(
    f: Polynomial,
    basis: Sequence[Polynomial],
    order: MonomialOrder = LOCAL_DEGREE,
    bound: int | None = None,
    step_limit: int | None = None,
    cost_budget: list[int] | None = None,
) -> Polynomial | None:
    """Weak normal form of f against basis.

    Returns h with u*f - h in (basis) for some unit u of the local ring
    (u = 1 for global orders); h = 0 iff f lies in the ideal generated by
    a standard basis.  Local orders use Mora's algorithm: reduce by a
    divisor of minimal ecart and record the intermediate result as an
    extra reducer whenever its ecart is smaller, which forces termination.
    ``bound`` truncates all intermediate terms at that total degree and is
    only sound when m^bound is contained in the ideal.  ``step_limit``
    aborts a long reduction walk and returns None; ``cost_budget`` is a
    shared one-element accumulator doing the same across several calls
    (both internal).
    """
    h = f.truncate_at_degree(bound)
    if h.is_zero() or not basis:
        return h
    local = order.is_local
    # among divisors of minimal ecart, prefer short reducers: they add the
    # fewest new terms per step
    reducers = [(g.leading_monomial(order), (_ecart(g, order), len(g.terms)), g) for g in basis]
    steps = 0
    while not h.is_zero():
        if step_limit is not None:
            steps += 1
            if steps > step_limit:
                return None
        lm_h = h.leading_monomial(order)
        if cost_budget is not None:
            # weight by coefficient size so bignum blowup hits the budget too
            lc = h.terms[lm_h]
            bits = lc.numerator.bit_length() + lc.denominator.bit_length()
            cost_budget[0] -= len(h.terms) * (1 + bits // 32)
            if cost_budget[0] < 0:
                return None
        best = None
        for lm_g, rank, g in reducers:
            if mi_divides(lm_g, lm_h) and (best is None or rank < best[1]):
                best = (lm_g, rank, g)
        if best is None:
            return h
        if local:
            ec_h = _ecart(h, order)
            if best[1][0] > ec_h:
                reducers.append((lm_h, (ec_h, len(h.terms)), h))
        h = _reduce_leading(h, best[2], lm_h, best[0]).truncate_at_degree(bound)
    return h


def _staircase_box(lead_monomials: Sequence[MultiIndex], nvars: int) -> tuple[int, ...] | None:
    """Per-variable pure-power degrees in the leading ideal, or None if some variable has none."""
    box = []
    for i in range(nvars):
        pure = None
        for m in lead_monomials:
            if all(e == 0 for j, e in enumerate(m) if j != i):
                pure = m[i] if pure is None else min(pure, m[i])
        if pure is None:
            return None
        box.append(pure)
    return tuple(box)


def _staircase_stats(
    lead_monomials: Sequence[MultiIndex], nvars: int
) -> tuple[int, int] | None:
    """(count, max degree) of the monomials outside the given monomial ideal.

    None when the complement is infinite (some variable has no pure power).
    """
    if any(sum(m) == 0 for m in lead_monomials):
        return (0, -1)
    box = _staircase_box(lead_monomials, nvars)
    if box is None:
        return None
    count = 0
    max_deg = -1
    for alpha in itertools.product(*(range(b) for b in box)):
        if not any(mi_divides(m, alpha) for m in lead_monomials):
            count += 1
            if sum(alpha) > max_deg:
                max_deg = sum(alpha)
    return (count, max_deg)


def _count_standard_monomials(lead_monomials: Sequence[MultiIndex], nvars: int) -> QuotientDimension:
    """Number of monomials outside the monomial ideal generated by lead_monomials."""
    stats = _staircase_stats(lead_monomials, nvars)
    return INFINITE if stats is None else stats[0]


def standard_monomials(lead_monomials: Sequence[MultiIndex], nvars: int) -> list[MultiIndex]:
    """The finite list of monomials outside the given monomial ideal (must be m-primary)."""
    box = _staircase_box(lead_monomials, nvars)
    if box is None:
        raise ValueError("quotient is infinite dimensional")
    out = [
        alpha
        for alpha in itertools.product(*(range(b) for b in box))
        if not any(mi_divides(m, alpha) for m in lead_monomials)
    ]
    out.sort(key=lambda a: (sum(a), tuple(-e for e in a)))
    return out


def _complete_basis(
    generators: Sequence[Polynomial],
    order: MonomialOrder,
    hard_cap: int | None = None,
    cost_budget: list[int] | None = None,
) -> tuple[list[Polynomial] | None, int | None]:
    """Buchberger/Mora completion; returns (standard basis, truncation bound).

    For local orders the truncation bound tightens as the staircase of the
    current leading monomials closes: with s its top standard-monomial
    degree, m^(s+1) already lies inside the ideal spanned so far.  With
    ``hard_cap`` set, all arithmetic is truncated at that degree from the
    start, so the result is a standard basis of (ideal) + m^hard_cap; the
    caller must certify afterwards that this equals the ideal itself.
    ``cost_budget`` aborts oversized runs, returning (None, None).
    """
    ring = generators[0].ring
    local = order.is_local
    basis: list[Polynomial] = []
    lms: list[MultiIndex] = []
    bound: int | None = hard_cap if local else None

    def refresh_bound() -> None:
        nonlocal bound
        if not local:
            return
        stats = _staircase_stats(lms, ring.nvars)
        if stats is None:
            return
        # with s the top standard-monomial degree of the (partial) staircase,
        # the graded pieces of the quotient vanish above s, so by Nakayama
        # m^(s+1) already lies inside the ideal spanned so far
        new_bound = max(stats[1] + 1, 1)
        if bound is None or new_bound < bound:
            bound = new_bound
            for i, p in enumerate(basis):
                # keep elements whose leading monomial sits above the bound whole
                if sum(lms[i]) < bound:
                    basis[i] = p.truncate_at_degree(bound)

    pairs: list[tuple[tuple, int, int]] = []

    aborted = [False]

    def insert(p: Polynomial) -> None:
        h = weak_normal_form(p, basis, order, bound, cost_budget=cost_budget)
        if h is None:
            aborted[0] = True
            return
        if h.is_zero():
            return
        if not local and basis:
            # global orders: tail reduction terminates and keeps elements
            # (hence later s-polynomials) small
            reducers = [(lm, g) for lm, g in zip(lms, basis)]
            h = _tail_reduce(h, reducers, order, None, None)
        # primitive over Q (cheap), monic over F_p; unit scale either way
        h = h.strip_content() if not ring.field.is_prime_field else h.monic(order)
        lm_new = h.leading_monomial(order)
        k = len(basis)
        basis.append(h)
        lms.append(lm_new)
        for i in range(k):
            lcm = mi_lcm(lms[i], lm_new)
            # product criterion: coprime leading monomials contribute nothing
            if all(a + b == c for a, b, c in zip(lms[i], lm_new, lcm)):
                continue
            heapq.heappush(pairs, ((sum(lcm), lcm), i, k))
        refresh_bound()

    unit_bound = 1 if local else None
    for g in sorted(generators, key=lambda p: poly_sort_key(p, order), reverse=True):
        insert(g)
        if aborted[0]:
            return None, None
        if any(sum(m) == 0 for m in lms):
            return [ring.one()], unit_bound

    def chain_redundant(i: int, j: int, lcm: MultiIndex) -> bool:
        # drop the pair when a third element divides the lcm and both mixed
        # lcms are proper divisors (Buchberger's second criterion)
        for k in range(len(basis)):
            if k in (i, j) or not mi_divides(lms[k], lcm):
                continue
            lik = mi_lcm(lms[i], lms[k])
            ljk = mi_lcm(lms[j], lms[k])
            if lik != lcm and ljk != lcm:
                return True
        return False

    while pairs:
        _, i, j = heapq.heappop(pairs)
        lm_f, lm_g = lms[i], lms[j]
        lcm = mi_lcm(lm_f, lm_g)
        if chain_redundant(i, j, lcm):
            continue
        f, g = basis[i], basis[j]
        # cross-multiplied s-polynomial: leading terms cancel in any field
        s = f.term_mul(g.terms[lm_g], mi_sub(lcm, lm_f)) - g.term_mul(
            f.terms[lm_f], mi_sub(lcm, lm_g)
        )
        insert(s)
        if aborted[0]:
            return None, None
        if any(sum(m) == 0 for m in lms):
            return [ring.one()], unit_bound
    return basis, bound


def _minimalize(basis: list[Polynomial], order: MonomialOrder) -> list[Polynomial]:
    """Keep one element per minimal generator of the leading-monomial ideal.

    Processed by ascending leading degree so divisors are seen first; of
    several elements sharing a leading monomial (possible after
    dehomogenization) exactly one deterministic representative survives.
    """
    items = sorted(
        basis, key=lambda p: (sum(p.leading_monomial(order)), poly_sort_key(p, order))
    )
    kept: list[Polynomial] = []
    kept_lms: list[MultiIndex] = []
    for p in items:
        lm = p.leading_monomial(order)
        if any(mi_divides(q, lm) for q in kept_lms):
            continue
        kept.append(p)
        kept_lms.append(lm)
    return kept


def _tail_reduce(
    p: Polynomial,
    reducers: Sequence[tuple[MultiIndex, Polynomial]],
    order: MonomialOrder,
    bound: int | None,
    cap: int | None,
) -> Polynomial:
    """Normal form of the tail of p against the reducers.

    With ``bound`` set (m-primary case) the result tail is the unique
    representation in standard monomials below the bound.  Otherwise a
    reduction step is performed only when it cannot raise any term above
    ``cap``, which keeps the procedure terminating on ideals of infinite
    colength.
    """
    ring = p.ring
    field = ring.field
    lm_p = p.leading_monomial(order)
    done = {lm_p: p.terms[lm_p]}
    work = dict(p.terms)
    del work[lm_p]
    while work:
        mono = max(work, key=order.key)
        coeff = work.pop(mono)
        chosen = None
        for lm_g, g in reducers:
            if mi_divides(lm_g, mono):
                if bound is None and cap is not None:
                    if sum(mono) - sum(lm_g) + g.total_degree() > cap:
                        continue
                chosen = (lm_g, g)
                break
        if chosen is None:
            done[mono] = coeff
            continue
        lm_g, g = chosen
        shift = mi_sub(mono, lm_g)
        factor = field.neg(field.div(coeff, g.terms[lm_g]))
        for alpha, c in g.terms.items():
            if alpha == lm_g:
                continue
            target = tuple(a + b for a, b in zip(alpha, shift))
            if bound is not None and sum(target) >= bound:
                continue
            s = field.add(work.get(target, 0), field.mul(c, factor)) if target in work else field.mul(c, factor)
            if s:
                work[target] = s
            else:
                work.pop(target, None)
    return Polynomial(ring, done, _canonical=True)


def _linear_membership_certificate(
    f: Polynomial, gens: Sequence[Polynomial], degree_bound: int
) -> bool:
    """Search for a unit u = 1 + (tail in m) and cofactors with u*f = sum c_i g_i.

    With all of u's tail and the cofactors bounded by ``degree_bound``, the
    identity is a finite span problem over the monomial basis, decided by
    exact Gaussian elimination.  A hit proves membership of f in the
    localized ideal; every true member admits such a certificate for some
    finite bound.
    """
    ring = f.ring
    field = ring.field
    one = field.one()
    multipliers = multi_indices_in_range(ring.nvars, 0, degree_bound)
    span: list[dict] = []
    for g in gens:
        for alpha in multipliers:
            span.append(g.term_mul(one, alpha).terms)
    for alpha in multipliers:
        if sum(alpha) >= 1:
            span.append(f.term_mul(one, alpha).terms)

    pivots: dict[MultiIndex, dict] = {}

    def echelon_reduce(vec: dict) -> tuple[dict, MultiIndex | None]:
        vec = dict(vec)
        while vec:
            lead = max(vec)
            pivot = pivots.get(lead)
            if pivot is None:
                return vec, lead
            factor = field.div(vec[lead], pivot[lead])
            for mono, c in pivot.items():
                s = field.sub(vec.get(mono, field.zero()), field.mul(factor, c))
                if s:
                    vec[mono] = s
                else:
                    vec.pop(mono, None)
        return vec, None

    for v in span:
        reduced, lead = echelon_reduce(v)
        if lead is not None:
            pivots[lead] = reduced
    _, lead = echelon_reduce(f.terms)
    return lead is None


@lru_cache(maxsize=128)
def _capped_standard_elements(elements: tuple, cap: int) -> tuple:
    raw, _ = _complete_basis(list(elements), LOCAL_DEGREE, hard_cap=cap)
    return tuple(raw)


def _escalated_membership(
    f: Polynomial, certificate_gens: Sequence[Polynomial], basis_elements: Sequence[Polynomial]
) -> bool:
    """Decide membership without long reduction walks (infinite colength).

    Alternates two one-sided tests: a capped normal form refutes (anything
    outside I + m^cap is outside I), and an exact linear certificate
    u*f = sum c_i g_i proves.  Krull's intersection theorem makes the
    refutation side complete, and every true member has a polynomial
    certificate of some finite degree, so the loop always decides.
    """
    cap = f.total_degree() + 2
    degree_bound = 4
    for _ in range(12):
        if _linear_membership_certificate(f, certificate_gens, degree_bound):
            return True
        capped = _capped_standard_elements(tuple(basis_elements), cap)
        residue = weak_normal_form(f, list(capped), LOCAL_DEGREE, cap)
        if not residue.is_zero():
            return False
        cap += max(4, cap // 2)
        degree_bound += 4
    raise RuntimeError("membership escalation exceeded its safety bound")


@dataclass(frozen=True)
class ReducedStandardBasis:
    """Monic, minimal, tail-reduced standard basis, sorted leading-first.

    For global orders this is the reduced Groebner basis; for local orders
    the elements are tail-reduced inside the truncated arithmetic described
    in the module docstring.  ``truncation`` is the degree above which terms
    were dropped (m^truncation lies in the ideal); None for ideals of
    infinite colength.
    """

    ring: RingContext
    order: MonomialOrder
    elements: tuple[Polynomial, ...]
    truncation: int | None = None

    @property
    def leading_monomials(self) -> tuple[MultiIndex, ...]:
        return tuple(p.leading_monomial(self.order) for p in self.elements)

    @property
    def is_unit_ideal(self) -> bool:
        return any(sum(m) == 0 for m in self.leading_monomials)

    @property
    def is_m_primary(self) -> bool:
        if not self.elements:
            return False
        return _staircase_box(self.leading_monomials, self.ring.nvars) is not None

    def normal_form(self, f: Polynomial) -> Polynomial:
        if f.ring != self.ring:
            raise ValueError("polynomial lives in a different ring context")
        return weak_normal_form(f, self.elements, self.order, self.truncation)

    def contains(self, f: Polynomial, extra_certificate_gens: Sequence[Polynomial] = ()) -> bool:
        """Exact membership of f in the ideal spanned by the basis.

        Finite colength and global orders use the normal form directly.
        Otherwise a short Mora walk is attempted, and if it does not settle
        quickly the answer is decided by the capped-refutation / linear-
        certificate escalation; ``extra_certificate_gens`` (for instance the
        ideal's original generators) widen the certificate search space.
        """
        if f.ring != self.ring:
            raise ValueError("polynomial lives in a different ring context")
        if not self.elements:
            return f.is_zero()
        if self.truncation is not None or not self.order.is_local:
            return self.normal_form(f).is_zero()
        h = weak_normal_form(f, self.elements, self.order, None, step_limit=120)
        if h is not None:
            return h.is_zero()
        certificate_gens = list(self.elements) + [
            g for g in extra_certificate_gens if not g.is_zero()
        ]
        return _escalated_membership(f, certificate_gens, self.elements)

    def dimension(self) -> QuotientDimension:
        if not self.elements:
            return INFINITE
        return _count_standard_monomials(self.leading_monomials, self.ring.nvars)

    def standard_monomials(self) -> list[MultiIndex]:
        return standard_monomials(self.leading_monomials, self.ring.nvars)


def _finish_primary(
    minimal: list[Polynomial], ring: RingContext, order: MonomialOrder, top_std_degree: int
) -> ReducedStandardBasis:
    """Canonical truncated form of an m-primary standard basis.

    Everything of degree >= B := top_std_degree + 1 lies in the ideal, so
    elements with such leading monomials are bare monomials; that layer is
    regenerated from the staircase, making the result a function of the
    ideal alone rather than of the generator list.
    """
    B = max(top_std_degree + 1, 1)
    kept = [p.truncate_at_degree(B) for p in minimal if sum(p.leading_monomial(order)) < B]
    kept_lms = [p.leading_monomial(order) for p in kept]
    reducers = sorted(zip(kept_lms, kept), key=lambda t: order.key(t[0]), reverse=True)
    reduced = [_tail_reduce(p, reducers, order, B, None) for p in kept]
    extras = [
        ring.monomial(alpha)
        for alpha in multi_indices_in_range(ring.nvars, B, B)
        if not any(mi_divides(m, alpha) for m in kept_lms)
    ]
    elements = reduced + extras
    elements.sort(key=lambda p: order.key(p.leading_monomial(order)), reverse=True)
    return ReducedStandardBasis(ring, order, tuple(elements), B)


def _cap_schedule(gens: Sequence[Polynomial]) -> list[int]:
    base = max(4, 2 + max(g.multiplicity() for g in gens))
    return [base, 2 * base]


def _complete_local_by_homogenization(
    gens: Sequence[Polynomial], ring: RingContext
) -> list[Polynomial]:
    """Standard basis via Lazard's route: homogenize, run a global Buchberger,
    dehomogenize.

    Every s-polynomial and reduction step stays inside one fixed total
    degree of the homogeneous world, so no reduction can wander the way an
    untruncated ecart-driven walk can.  The dehomogenized Groebner basis of
    the homogenized generators is a standard basis for the local order.
    """
    tname = "t"
    while tname in ring.variables:
        tname += "_"
    hring = RingContext((tname,) + ring.variables, ring.field)

    def homogenize(p: Polynomial) -> Polynomial:
        top = p.total_degree()
        return Polynomial(
            hring, {(top - sum(a),) + a: c for a, c in p.terms.items()}, _canonical=True
        )

    def dehomogenize(q: Polynomial) -> Polynomial:
        # q is homogeneous, so x-parts of distinct terms never collide
        return Polynomial(ring, {a[1:]: c for a, c in q.terms.items()}, _canonical=True)

    raw, _ = _complete_basis([homogenize(g) for g in gens], HOMOGENIZED_LOCAL)
    return [dehomogenize(q) for q in raw]


def _simplify_generators(gens: list[Polynomial], order: MonomialOrder) -> list[Polynomial]:
    """Replace each generator of the shape monomial * unit by the monomial."""
    if not order.is_local:
        return gens
    out = []
    for g in gens:
        content = tuple(min(a[i] for a in g.terms) for i in range(g.ring.nvars))
        if sum(content) and content in g.terms:
            # constant term of the cofactor is nonzero: the cofactor is a unit
            out.append(g.ring.monomial(content))
        else:
            out.append(g)
    return out


def try_primary_standard_basis(
    generators: Sequence[Polynomial], ring: RingContext
) -> ReducedStandardBasis | None:
    """Capped completion attempts that certify a finite-colength basis.

    Completes modulo m^cap, then certifies m^(cap-1) lies in the ideal (top
    standard degree + 2 <= cap, by Nakayama); on success the capped basis
    is exact and canonical.  Returns None when no cap in the schedule
    certifies, which covers every ideal of infinite colength.
    """
    order = LOCAL_DEGREE
    gens = _simplify_generators([g for g in generators if not g.is_zero()], order)
    if not gens:
        return ReducedStandardBasis(ring, order, ())
    for cap in _cap_schedule(gens):
        raw, _ = _complete_basis(gens, order, hard_cap=cap, cost_budget=[400_000])
        if raw is None:
            return None
        minimal = [p.monic(order) for p in _minimalize(raw, order)]
        stats = _staircase_stats([p.leading_monomial(order) for p in minimal], ring.nvars)
        if stats is not None and stats[1] + 2 <= cap:
            return _finish_primary(minimal, ring, order, stats[1])
    return None


def compute_standard_basis(
    generators: Sequence[Polynomial], ring: RingContext, order: MonomialOrder
) -> ReducedStandardBasis:
    gens = _simplify_generators([g for g in generators if not g.is_zero()], order)
    if not gens:
        return ReducedStandardBasis(ring, order, ())

    if order.is_local:
        basis = try_primary_standard_basis(gens, ring)
        if basis is not None:
            return basis
        # exact fallback for everything else (including infinite colength)
        raw = _complete_local_by_homogenization(gens, ring)
        minimal = [p.monic(order) for p in _minimalize(raw, order)]
        lms = [p.leading_monomial(order) for p in minimal]
        stats = _staircase_stats(lms, ring.nvars)
        if stats is not None:
            return _finish_primary(minimal, ring, order, stats[1])
        # infinite colength: cap tail growth at the largest degree present
        cap = max(p.total_degree() for p in minimal)
        reducers = sorted(zip(lms, minimal), key=lambda t: order.key(t[0]), reverse=True)
        reduced = [_tail_reduce(p, reducers, order, None, cap) for p in minimal]
        reduced.sort(key=lambda p: order.key(p.leading_monomial(order)), reverse=True)
        return ReducedStandardBasis(ring, order, tuple(reduced), None)

    raw, _ = _complete_basis(gens, order)
    minimal = [p.monic(order) for p in _minimalize(raw, order)]
    lms = [p.leading_monomial(order) for p in minimal]
    reducers = sorted(zip(lms, minimal), key=lambda t: order.key(t[0]), reverse=True)
    reduced = [_tail_reduce(p, reducers, order, None, None) for p in minimal]
    reduced.sort(key=lambda p: order.key(p.leading_monomial(order)), reverse=True)
    return ReducedStandardBasis(ring, order, tuple(reduced), None)


class Ideal:
    """Finitely generated ideal of the local ring at the origin."""

    def __init__(self, ring: RingContext, generators: Iterable[Polynomial]):
        self.ring = ring
        gens = []
        for g in generators:
            if g.ring != ring:
                raise ValueError("generator lives in a different ring context")
            if not g.is_zero():
                gens.append(g)
        self.generators: tuple[Polynomial, ...] = tuple(gens)
        self._bases: dict[MonomialOrder, ReducedStandardBasis] = {}
        self._primary_attempt: ReducedStandardBasis | None | bool = False  # False = not tried

    # -- construction helpers

    @classmethod
    def zero(cls, ring: RingContext) -> "Ideal":
        return cls(ring, [])

    @classmethod
    def unit(cls, ring: RingContext) -> "Ideal":
        return cls(ring, [ring.one()])

    def __repr__(self) -> str:
        inner = ", ".join(str(g) for g in self.generators) or "0"
        return f"Ideal({inner})"

    @property
    def is_zero(self) -> bool:
        return not self.generators

    # -- standard bases

    def standard_basis(self, order: MonomialOrder = LOCAL_DEGREE) -> ReducedStandardBasis:
        basis = self._bases.get(order)
        if basis is None:
            basis = compute_standard_basis(self.generators, self.ring, order)
            self._bases[order] = basis
        return basis

    def normal_form(self, f: Polynomial, order: MonomialOrder = LOCAL_DEGREE) -> Polynomial:
        return self.standard_basis(order).normal_form(f)

    def leading_ideal(self, order: MonomialOrder = LOCAL_DEGREE) -> "Ideal":
        basis = self.standard_basis(order)
        return Ideal(self.ring, [self.ring.monomial(m) for m in basis.leading_monomials])

    # -- membership / comparison (local semantics)

    def _certified_primary_basis(self) -> ReducedStandardBasis | None:
        """Finite-colength basis when cheaply certifiable, else None.

        Avoids the full completion for ideals of infinite colength, whose
        standard bases can be enormous; membership and equality never need
        them (they go through the capped / certificate escalation).
        """
        cached = self._bases.get(LOCAL_DEGREE)
        if cached is not None:
            return cached if cached.is_m_primary or not cached.elements else None
        if self._primary_attempt is False:
            self._primary_attempt = try_primary_standard_basis(self.generators, self.ring)
            if self._primary_attempt is not None:
                self._bases.setdefault(LOCAL_DEGREE, self._primary_attempt)
        return self._primary_attempt

    def contains_element(self, f: Polynomial) -> bool:
        if f.is_zero():
            return True
        if not self.generators:
            return False
        basis = self._certified_primary_basis()
        if basis is not None:
            return basis.contains(f)
        # infinite colength (or a very deep staircase): decide without the
        # full standard basis; a zero of the budgeted walk is a certificate
        h = weak_normal_form(f, self.generators, LOCAL_DEGREE, None, step_limit=120)
        if h is not None and h.is_zero():
            return True
        return _escalated_membership(f, self.generators, self.generators)

    def contains_ideal(self, other: "Ideal") -> bool:
        self._check_ring(other)
        return all(self.contains_element(g) for g in other.generators)

    def equals(self, other: "Ideal") -> bool:
        self._check_ring(other)
        a = self._certified_primary_basis()
        b = other._certified_primary_basis()
        if a is not None and b is not None:
            return a.elements == b.elements
        # an uncertified side may still have finite colength with a deep
        # staircase, so mutual containment is the only safe route
        return self.contains_ideal(other) and other.contains_ideal(self)

    def _check_ring(self, other: "Ideal") -> None:
        if self.ring != other.ring:
            raise ValueError("ideals live in different ring contexts")

    # -- arithmetic

    def __add__(self, other: "Ideal") -> "Ideal":
        self._check_ring(other)
        return Ideal(self.ring, self.generators + other.generators)

    def __mul__(self, other: "Ideal") -> "Ideal":
        self._check_ring(other)
        return Ideal(self.ring, [f * g for f in self.generators for g in other.generators])

    def __pow__(self, k: int) -> "Ideal":
        if k < 0:
            raise ValueError("negative ideal power")
        result = Ideal.unit(self.ring)
        for _ in range(k):
            result = result * self
        return result

    # -- numerical data

    def dimension(self) -> QuotientDimension:
        """k-dimension of (local ring)/I; INFINITE when the staircase is open."""
        return self.standard_basis().dimension()


def maximal_ideal_power(ring: RingContext, k: int) -> Ideal:
    """The ideal generated by all monomials of total degree exactly k."""
    if k < 0:
        raise ValueError("negative power of the maximal ideal")
    if k == 0:
        return Ideal.unit(ring)
    return Ideal(ring, [ring.monomial(alpha) for alpha in multi_indices_in_range(ring.nvars, k, k)])


# free-function aliases, convenient for the CLI and scripts

def ideal_membership(f: Polynomial, ideal: Ideal) -> bool:
    return ideal.contains_element(f)


def ideal_equal(a: Ideal, b: Ideal) -> bool:
    return a.equals(b)


def ideal_contains(a: Ideal, b: Ideal) -> bool:
    """True iff b is a subset of a."""
    return a.contains_ideal(b)
