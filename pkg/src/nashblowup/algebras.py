"""Nash blowup and Tjurina algebras of a hypersurface germ, and their invariants.

For a germ f at the origin, the order-n data is built from the order-n
Jacobian ideal J_n(f): the module-style algebra R/J_n(f), the algebra
R/((f) + J_n(f)), and the k-th Tjurina algebra R/((f) + m^k j(f)) with
j(f) the classical Jacobian ideal.  Dimensions are exact k-dimensions of
the local quotient; infinite values are first-class, not errors.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field as dc_field

from .ideals import INFINITE, Ideal, QuotientDimension, maximal_ideal_power
from .jacobian import higher_jacobian_ideal, jacobian_ideal
from .polynomials import Polynomial, RingContext


@dataclass
class LocalAlgebraPresentation:
    """A quotient of the local ring by a defining ideal, with cached dimension."""

    ring: RingContext
    defining_ideal: Ideal
    _dimension: QuotientDimension | None = dc_field(default=None, repr=False)

    def dimension(self) -> QuotientDimension:
        if self._dimension is None:
            self._dimension = self.defining_ideal.dimension()
        return self._dimension


def _require_germ(f: Polynomial) -> None:
    if f.is_zero():
        raise ValueError("zero polynomial")


def nash_ideal_m(f: Polynomial, n: int) -> Ideal:
    """Defining ideal of the order-n algebra R/J_n(f)."""
    _require_germ(f)
    return higher_jacobian_ideal(f, n)


def nash_ideal_t(f: Polynomial, n: int) -> Ideal:
    """Defining ideal (f) + J_n(f) of the order-n Nash blowup algebra."""
    _require_germ(f)
    return Ideal(f.ring, [f]) + higher_jacobian_ideal(f, n)


def nash_algebra_m(f: Polynomial, n: int) -> LocalAlgebraPresentation:
    return LocalAlgebraPresentation(f.ring, nash_ideal_m(f, n))


def nash_algebra_t(f: Polynomial, n: int) -> LocalAlgebraPresentation:
    return LocalAlgebraPresentation(f.ring, nash_ideal_t(f, n))


def tjurina_ideal(f: Polynomial, k: int = 0) -> Ideal:
    """Defining ideal (f) + m^k j(f) of the k-th Tjurina algebra (k = 0 classical)."""
    _require_germ(f)
    if k < 0:
        raise ValueError("k must be >= 0")
    return Ideal(f.ring, [f]) + maximal_ideal_power(f.ring, k) * jacobian_ideal(f)


def tjurina_algebra(f: Polynomial, k: int = 0) -> LocalAlgebraPresentation:
    return LocalAlgebraPresentation(f.ring, tjurina_ideal(f, k))


def tjurina_number(f: Polynomial) -> QuotientDimension:
    """Dimension of the classical Tjurina algebra R/((f) + j(f))."""
    return tjurina_ideal(f, 0).dimension()


def gp_bound(
    tau: int, mt: int, characteristic: int, *, algebraically_closed: bool = False
) -> int:
    """Order from which the higher Tjurina algebras pin down the contact class.

    2*tau - 2*mt + 4 in positive characteristic; 1 in characteristic zero,
    dropping to 0 only when the caller asserts the field is algebraically
    closed (closure is not decidable from the field descriptor).
    """
    if isinstance(tau, type(INFINITE)) or tau is INFINITE:
        raise ValueError("bound requires a finite Tjurina number")
    if mt < 2:
        raise ValueError("bound requires multiplicity >= 2")
    if characteristic > 0:
        return 2 * tau - 2 * mt + 4
    return 0 if algebraically_closed else 1


@dataclass(frozen=True)
class InclusionCheck:
    name: str
    holds: bool
    asserted: bool  # whether the statement is guaranteed for these parameters


@dataclass(frozen=True)
class InclusionReport:
    f: Polynomial
    n: int
    checks: tuple[InclusionCheck, ...]

    def all_asserted_hold(self) -> bool:
        return all(c.holds for c in self.checks if c.asserted)

    def __iter__(self):
        return iter(self.checks)


def check_inclusions(f: Polynomial, n: int) -> InclusionReport:
    """Verify the inclusion properties of the order-n Jacobian ideal.

    (i)   J_n(f) inside J_{n-1}(f)                  -- always asserted
    (ii)  J_n(f) inside m * J_1(f)^2                -- asserted iff d >= 3
          or n >= 3 or mt(f) >= 3
    (iii) (f) + J_n(f) inside (f) + m * J_1(f)^2    -- always asserted
    (iv)  J_n(f) inside J_1(f)^C(d-2+n, d-1)        -- always asserted

    Requires mt(f) >= 2 and n >= 2.
    """
    _require_germ(f)
    if n < 2:
        raise ValueError("inclusion report needs n >= 2")
    mt = f.multiplicity()
    if mt < 2:
        raise ValueError("inclusion report needs multiplicity >= 2")
    ring = f.ring
    d = ring.nvars
    jn = higher_jacobian_ideal(f, n)
    jn_prev = higher_jacobian_ideal(f, n - 1)
    j1 = jacobian_ideal(f)
    m_j1_sq = maximal_ideal_power(ring, 1) * (j1 ** 2)
    f_ideal = Ideal(ring, [f])
    power = math.comb(d - 2 + n, d - 1)
    checks = (
        InclusionCheck("descending-chain", jn_prev.contains_ideal(jn), True),
        InclusionCheck(
            "inside-m-j1-squared",
            m_j1_sq.contains_ideal(jn),
            d >= 3 or n >= 3 or mt >= 3,
        ),
        InclusionCheck(
            "shifted-inside-m-j1-squared",
            (f_ideal + m_j1_sq).contains_ideal(f_ideal + jn),
            True,
        ),
        InclusionCheck(f"inside-j1-power-{power}", (j1 ** power).contains_ideal(jn), True),
    )
    return InclusionReport(f, n, checks)


@dataclass(frozen=True)
class InvariantReport:
    """Numerical profile of a germ: pure function of the polynomial and field."""

    f: Polynomial
    mt: int
    tau: QuotientDimension
    dim_tn: dict[int, QuotientDimension]
    dim_tk: dict[int, QuotientDimension]
    gp: int | None

    def to_json_obj(self) -> dict:
        def enc(v):
            return "inf" if v is INFINITE else v

        return {
            "f": str(self.f),
            "char": self.f.ring.field.characteristic,
            "mt": self.mt,
            "tau": enc(self.tau),
            "dimTn": {str(n): enc(v) for n, v in self.dim_tn.items()},
            "dimTk": {str(k): enc(v) for k, v in self.dim_tk.items()},
            "gpBound": self.gp,
        }


def invariant_report(f: Polynomial, n_max: int = 2, k_max: int = 1) -> InvariantReport:
    """Multiplicity, Tjurina number, algebra dimensions, and the contact-order bound."""
    _require_germ(f)
    mt = f.multiplicity()
    tau = tjurina_number(f)
    dim_tn = {n: nash_ideal_t(f, n).dimension() for n in range(1, n_max + 1)}
    dim_tk = {k: tjurina_ideal(f, k).dimension() for k in range(0, k_max + 1)}
    gp = None
    if tau is not INFINITE and mt >= 2:
        gp = gp_bound(tau, mt, f.ring.field.characteristic)
    return InvariantReport(f, mt, tau, dim_tn, dim_tk, gp)
