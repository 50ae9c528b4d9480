"""Sparse exact multivariate polynomials with Hasse derivatives.

A polynomial is a finite map from exponent tuples to nonzero field
coefficients, canonical by construction: two polynomials are equal iff
their ring contexts and term maps are equal.  All arithmetic is exact.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator, Sequence

from .fields import QQ, CoefficientField

MultiIndex = tuple[int, ...]


# ---------------------------------------------------------------------------
# multi-index helpers


def mi_degree(alpha: MultiIndex) -> int:
    return sum(alpha)


def mi_add(alpha: MultiIndex, beta: MultiIndex) -> MultiIndex:
    return tuple(a + b for a, b in zip(alpha, beta))


def mi_sub(alpha: MultiIndex, beta: MultiIndex) -> MultiIndex:
    """Componentwise difference; requires alpha >= beta componentwise."""
    diff = tuple(a - b for a, b in zip(alpha, beta))
    if any(e < 0 for e in diff):
        raise ValueError(f"multi-index {alpha} does not dominate {beta}")
    return diff


def mi_divides(alpha: MultiIndex, beta: MultiIndex) -> bool:
    """True iff x^alpha divides x^beta."""
    return all(a <= b for a, b in zip(alpha, beta))


def mi_strictly_above(alpha: MultiIndex, beta: MultiIndex) -> bool:
    """Componentwise partial order: alpha > beta iff alpha != beta and alpha_i >= beta_i."""
    return alpha != beta and all(a >= b for a, b in zip(alpha, beta))


def mi_lcm(alpha: MultiIndex, beta: MultiIndex) -> MultiIndex:
    return tuple(max(a, b) for a, b in zip(alpha, beta))


def _exponents_of_degree(d: int, degree: int) -> Iterator[MultiIndex]:
    """All length-d exponent tuples of the given total degree, lex descending."""
    if d == 1:
        yield (degree,)
        return
    for first in range(degree, -1, -1):
        for rest in _exponents_of_degree(d - 1, degree - first):
            yield (first,) + rest


def multi_indices_in_range(d: int, lo: int, hi: int) -> list[MultiIndex]:
    """All multi-indices with lo <= degree <= hi, sorted by degree then lex descending."""
    if d < 1:
        raise ValueError("need at least one variable")
    if not 0 <= lo <= hi:
        raise ValueError(f"invalid degree range [{lo}, {hi}]")
    out: list[MultiIndex] = []
    for degree in range(lo, hi + 1):
        out.extend(_exponents_of_degree(d, degree))
    return out


# ---------------------------------------------------------------------------
# monomial orders


@dataclass(frozen=True)
class MonomialOrder:
    """Total order on monomials of one ring, via a sort key (max = leading).

    ``graded_lex``: degree first, ties lex with the first variable highest;
    a global well-order.  ``local_degree``: lower degree wins, same tie-break;
    the leading monomial of a polynomial has minimal total degree.
    ``homogenized_local`` is internal: a global order on a ring with one
    extra leading homogenization variable, breaking total-degree ties by
    the local order on the remaining variables.
    """

    kind: str

    def __post_init__(self) -> None:
        if self.kind not in ("graded_lex", "local_degree", "homogenized_local"):
            raise ValueError(f"unknown monomial order {self.kind!r}")

    @property
    def is_local(self) -> bool:
        return self.kind == "local_degree"

    def key(self, alpha: MultiIndex):
        deg = sum(alpha)
        if self.kind == "local_degree":
            return (-deg, alpha)
        if self.kind == "homogenized_local":
            rest = alpha[1:]
            return (deg, -sum(rest), rest)
        return (deg, alpha)

    def greater(self, alpha: MultiIndex, beta: MultiIndex) -> bool:
        return self.key(alpha) > self.key(beta)


GRADED_LEX = MonomialOrder("graded_lex")
LOCAL_DEGREE = MonomialOrder("local_degree")
HOMOGENIZED_LOCAL = MonomialOrder("homogenized_local")


# ---------------------------------------------------------------------------
# ring context and polynomials


@dataclass(frozen=True)
class RingContext:
    """Ordered variable list plus ground field; x_1 > x_2 > ... > x_d."""

    variables: tuple[str, ...]
    field: CoefficientField = QQ

    def __post_init__(self) -> None:
        if not self.variables:
            raise ValueError("need at least one variable")
        if len(set(self.variables)) != len(self.variables):
            raise ValueError(f"duplicate variable names in {self.variables}")
        for name in self.variables:
            if not name.isidentifier():
                raise ValueError(f"invalid variable name {name!r}")

    @property
    def nvars(self) -> int:
        return len(self.variables)

    def zero(self) -> "Polynomial":
        return Polynomial(self, {})

    def one(self) -> "Polynomial":
        return self.constant(1)

    def constant(self, value) -> "Polynomial":
        c = self.field.coerce(value)
        return Polynomial(self, {} if not c else {(0,) * self.nvars: c})

    def variable(self, which: int | str) -> "Polynomial":
        i = which if isinstance(which, int) else self.variables.index(which)
        exp = [0] * self.nvars
        exp[i] = 1
        return self.monomial(tuple(exp))

    def monomial(self, alpha: MultiIndex, coeff=1) -> "Polynomial":
        if len(alpha) != self.nvars:
            raise ValueError(f"multi-index length {len(alpha)} != {self.nvars}")
        c = self.field.coerce(coeff)
        return Polynomial(self, {tuple(alpha): c} if c else {})

    def maximal_ideal_generators(self) -> list["Polynomial"]:
        return [self.variable(i) for i in range(self.nvars)]

    def __str__(self) -> str:
        return f"{self.field}[{', '.join(self.variables)}]"


class Polynomial:
    """Immutable sparse polynomial over an exact field."""

    __slots__ = ("ring", "terms", "_hash")

    def __init__(self, ring: RingContext, terms: dict, *, _canonical: bool = False):
        self.ring = ring
        if _canonical:
            self.terms = terms
        else:
            coerce = ring.field.coerce
            clean = {}
            for alpha, c in terms.items():
                c = coerce(c)
                if c:
                    clean[tuple(alpha)] = c
            self.terms = clean
        self._hash = None

    # -- basic protocol

    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Polynomial)
            and self.ring == other.ring
            and self.terms == other.terms
        )

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.ring, frozenset(self.terms.items())))
        return self._hash

    def __repr__(self) -> str:
        return f"Polynomial({self})"

    def __str__(self) -> str:
        from .parsing import format_polynomial

        return format_polynomial(self)

    # -- structure

    def total_degree(self) -> int:
        """Maximal term degree; -1 for the zero polynomial."""
        return max((sum(a) for a in self.terms), default=-1)

    def multiplicity(self) -> int:
        """Order at the origin: minimal total degree of a term (0 for units)."""
        if not self.terms:
            raise ValueError("multiplicity of zero is undefined")
        return min(sum(a) for a in self.terms)

    def constant_coefficient(self):
        return self.terms.get((0,) * self.ring.nvars, self.ring.field.zero())

    def is_unit_at_origin(self) -> bool:
        return bool(self.constant_coefficient())

    def leading_monomial(self, order: MonomialOrder) -> MultiIndex:
        if not self.terms:
            raise ValueError("zero polynomial has no leading monomial")
        return max(self.terms, key=order.key)

    def leading_coefficient(self, order: MonomialOrder):
        return self.terms[self.leading_monomial(order)]

    def sorted_terms(self, order: MonomialOrder | None = None) -> list[tuple[MultiIndex, object]]:
        """Terms sorted reading-order: degree ascending, lex descending within a degree."""
        if order is not None:
            return sorted(self.terms.items(), key=lambda t: order.key(t[0]), reverse=True)
        return sorted(self.terms.items(), key=lambda t: (sum(t[0]), tuple(-e for e in t[0])))

    # -- arithmetic

    def _check_ring(self, other: "Polynomial") -> None:
        if self.ring != other.ring:
            raise ValueError("operands live in different ring contexts")

    def __add__(self, other: "Polynomial") -> "Polynomial":
        self._check_ring(other)
        field = self.ring.field
        out = dict(self.terms)
        for alpha, c in other.terms.items():
            s = field.add(out.get(alpha, 0), c) if alpha in out else c
            if s:
                out[alpha] = s
            else:
                out.pop(alpha, None)
        return Polynomial(self.ring, out, _canonical=True)

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def __neg__(self) -> "Polynomial":
        neg = self.ring.field.neg
        return Polynomial(self.ring, {a: neg(c) for a, c in self.terms.items()}, _canonical=True)

    def __mul__(self, other: "Polynomial") -> "Polynomial":
        self._check_ring(other)
        field = self.ring.field
        mul, add = field.mul, field.add
        out: dict = {}
        for a1, c1 in self.terms.items():
            for a2, c2 in other.terms.items():
                m = tuple(x + y for x, y in zip(a1, a2))
                c = mul(c1, c2)
                if m in out:
                    s = add(out[m], c)
                    if s:
                        out[m] = s
                    else:
                        del out[m]
                elif c:
                    out[m] = c
        return Polynomial(self.ring, out, _canonical=True)

    def scalar_mul(self, scalar) -> "Polynomial":
        field = self.ring.field
        c0 = field.coerce(scalar)
        if not c0:
            return self.ring.zero()
        mul = field.mul
        return Polynomial(self.ring, {a: mul(c, c0) for a, c in self.terms.items()}, _canonical=True)

    def term_mul(self, coeff, alpha: MultiIndex) -> "Polynomial":
        """Multiply by a single term coeff * x^alpha (coeff already in the field)."""
        if not coeff:
            return self.ring.zero()
        mul = self.ring.field.mul
        return Polynomial(
            self.ring,
            {tuple(x + y for x, y in zip(a, alpha)): mul(c, coeff) for a, c in self.terms.items()},
            _canonical=True,
        )

    def __pow__(self, exponent: int) -> "Polynomial":
        if exponent < 0:
            raise ValueError("negative power of a polynomial")
        result = self.ring.one()
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base if e > 1 else base
            e >>= 1
        return result

    def monic(self, order: MonomialOrder) -> "Polynomial":
        lc = self.leading_coefficient(order)
        one = self.ring.field.one()
        if lc == one:
            return self
        return self.scalar_mul(self.ring.field.invert(lc))

    def strip_content(self) -> "Polynomial":
        """Scale by a positive rational so coefficients are coprime integers.

        Identity over prime fields and on zero.  Unit scaling, so ideal
        membership and leading data are unchanged; it keeps coefficient
        growth polynomial during basis completion over the rationals.
        """
        if self.ring.field.is_prime_field or not self.terms:
            return self
        num_gcd = 0
        den_lcm = 1
        for c in self.terms.values():
            num_gcd = math.gcd(num_gcd, abs(c.numerator))
            den_lcm = den_lcm * c.denominator // math.gcd(den_lcm, c.denominator)
        if num_gcd == 1 and den_lcm == 1:
            return self
        from fractions import Fraction

        return self.scalar_mul(Fraction(den_lcm, num_gcd))

    def truncate_at_degree(self, bound: int | None) -> "Polynomial":
        """Drop every term of total degree >= bound (None keeps everything)."""
        if bound is None:
            return self
        kept = {a: c for a, c in self.terms.items() if sum(a) < bound}
        if len(kept) == len(self.terms):
            return self
        return Polynomial(self.ring, kept, _canonical=True)

    # -- calculus and substitution

    def hasse_derivative(self, gamma: MultiIndex) -> "Polynomial":
        """Divided-power derivative: D^gamma(x^beta) = prod C(beta_i, gamma_i) x^(beta-gamma).

        Characteristic-free; over Q it equals the classical iterated partial
        derivative divided by gamma!.  Binomials are computed over the integers
        and then reduced into the field.
        """
        if len(gamma) != self.ring.nvars:
            raise ValueError(f"multi-index length {len(gamma)} != {self.ring.nvars}")
        field = self.ring.field
        out: dict = {}
        for beta, c in self.terms.items():
            if any(b < g for b, g in zip(beta, gamma)):
                continue
            binom = 1
            for b, g in zip(beta, gamma):
                binom *= math.comb(b, g)
            factor = field.coerce(binom)
            if not factor:
                continue
            target = tuple(b - g for b, g in zip(beta, gamma))
            s = field.add(out.get(target, 0), field.mul(c, factor)) if target in out else field.mul(c, factor)
            if s:
                out[target] = s
            else:
                out.pop(target, None)
        return Polynomial(self.ring, out, _canonical=True)

    def substitute(self, images: Sequence["Polynomial"]) -> "Polynomial":
        """Exact composition f(images); images share this polynomial's ring."""
        if len(images) != self.ring.nvars:
            raise ValueError(f"expected {self.ring.nvars} images, got {len(images)}")
        for g in images:
            self._check_ring(g)
        power_cache: dict[tuple[int, int], Polynomial] = {}

        def var_power(i: int, e: int) -> Polynomial:
            if e == 0:
                return self.ring.one()
            got = power_cache.get((i, e))
            if got is None:
                got = var_power(i, e - 1) * images[i]
                power_cache[(i, e)] = got
            return got

        total = self.ring.zero()
        for alpha, c in self.terms.items():
            part = self.ring.constant(c)
            for i, e in enumerate(alpha):
                if e:
                    part = part * var_power(i, e)
            total = total + part
        return total


def poly_sort_key(p: Polynomial, order: MonomialOrder):
    """Deterministic total key on polynomials; used to fix processing orders."""
    return (order.key(p.leading_monomial(order)), sorted(p.terms.items()))
