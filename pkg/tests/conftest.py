"""Shared rings, independent oracles, and hypothesis strategies.

The oracles here deliberately avoid the library's own machinery: binomials
mod p go through Lucas' theorem, determinants through the permutation sum,
quotient dimensions through dense linear algebra on a truncated monomial
basis, and derivatives through single-step classical differentiation.
"""

from __future__ import annotations

import itertools
import pytest
from hypothesis import strategies as st

from nashblowup.fields import GF, QQ
from nashblowup.polynomials import (
    MultiIndex,
    Polynomial,
    RingContext,
    multi_indices_in_range,
)
from nashblowup.parsing import parse_polynomial


@pytest.fixture
def ring_q2() -> RingContext:
    return RingContext(("x", "y"), QQ)


@pytest.fixture
def ring_q1() -> RingContext:
    return RingContext(("x",), QQ)


@pytest.fixture
def ring_q3() -> RingContext:
    return RingContext(("x", "y", "z"), QQ)


@pytest.fixture
def ring_f3() -> RingContext:
    return RingContext(("x", "y"), GF(3))


@pytest.fixture
def ring_f5() -> RingContext:
    return RingContext(("x", "y"), GF(5))


def P(text: str, ring: RingContext) -> Polynomial:
    return parse_polynomial(text, ring)


# ---------------------------------------------------------------------------
# oracles


def lucas_binom(n: int, k: int, p: int) -> int:
    """C(n, k) mod p by Lucas' theorem on base-p digits."""
    import math

    result = 1
    while n or k:
        ni, ki = n % p, k % p
        if ki > ni:
            return 0
        result = result * math.comb(ni, ki) % p
        n //= p
        k //= p
    return result


def perm_det(rows: list[list[Polynomial]]) -> Polynomial:
    """Leibniz permutation-sum determinant; independent of the library engine."""
    n = len(rows)
    ring = rows[0][0].ring
    total = ring.zero()
    for perm in itertools.permutations(range(n)):
        inversions = sum(
            1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j]
        )
        term = ring.one()
        for i in range(n):
            term = term * rows[i][perm[i]]
        total = total + (term if inversions % 2 == 0 else -term)
    return total


def classical_partial(f: Polynomial, var: int) -> Polynomial:
    """Single classical partial derivative d/dx_var."""
    ring = f.ring
    out = ring.zero()
    for alpha, c in f.terms.items():
        if alpha[var] == 0:
            continue
        target = tuple(e - 1 if i == var else e for i, e in enumerate(alpha))
        out = out + ring.monomial(target, ring.field.mul(c, ring.field.coerce(alpha[var])))
    return out


def classical_iterated_partial(f: Polynomial, gamma: MultiIndex) -> Polynomial:
    out = f
    for var, times in enumerate(gamma):
        for _ in range(times):
            out = classical_partial(out, var)
    return out


def linalg_quotient_dim(gens: list[Polynomial], ring: RingContext, bound: int) -> int:
    """dim of k[x]/(I + m^bound) by Gaussian elimination on monomials of degree < bound."""
    monos = multi_indices_in_range(ring.nvars, 0, bound - 1)
    index = {m: i for i, m in enumerate(monos)}
    field = ring.field
    pivots: dict[int, dict[int, object]] = {}
    rank = 0
    one = field.one()
    for g in gens:
        for m in monos:
            shifted = g.term_mul(one, m)
            row = {
                index[alpha]: c for alpha, c in shifted.terms.items() if sum(alpha) < bound
            }
            while row:
                lead = min(row)
                if lead not in pivots:
                    pivots[lead] = row
                    rank += 1
                    break
                pivot = pivots[lead]
                factor = field.div(row[lead], pivot[lead])
                for col, v in pivot.items():
                    new = field.sub(row.get(col, field.zero()), field.mul(factor, v))
                    if new:
                        row[col] = new
                    else:
                        row.pop(col, None)
    return len(monos) - rank


def brute_standard_monomial_count(
    monomial_gens: list[MultiIndex], nvars: int, degree_limit: int
) -> int:
    """Count monomials of degree < degree_limit outside the monomial ideal."""
    count = 0
    for m in multi_indices_in_range(nvars, 0, degree_limit - 1):
        if not any(all(g[i] <= m[i] for i in range(nvars)) for g in monomial_gens):
            count += 1
    return count


# ---------------------------------------------------------------------------
# hypothesis strategies


def monomial_strategy(nvars: int, max_degree: int):
    return st.tuples(*(st.integers(0, max_degree) for _ in range(nvars))).filter(
        lambda t: sum(t) <= max_degree
    )


def polynomial_strategy(ring: RingContext, max_terms: int = 6, max_degree: int = 6):
    term = st.tuples(monomial_strategy(ring.nvars, max_degree), st.integers(-4, 4))

    def build(terms) -> Polynomial:
        out = ring.zero()
        for alpha, c in terms:
            out = out + ring.monomial(alpha, c)
        return out

    return st.lists(term, min_size=0, max_size=max_terms).map(build)


def nonzero_polynomial_strategy(ring: RingContext, max_terms: int = 6, max_degree: int = 6):
    return polynomial_strategy(ring, max_terms, max_degree).filter(lambda p: not p.is_zero())
