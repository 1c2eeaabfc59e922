"""Polynomial invariants of forest quivers, each with two independent routes.

The two-variable polynomial f(Q) comes from a leaf recursion

    f(empty) = 1
    f(single vertex) = (z + z^{-1})/a - z^{-1}/a^3
    f(Q) = (z/a) f(Q - v) + (1/a^2) f(Q - v - w)   for a leaf v adjacent to w
    f(Q1 + Q2) = f(Q1) f(Q2)

and, independently, from the closed independent-set expansion

    f(Q) = a^{-n} * sum_{i,j} c_{i,j}(Q) z^{n-2i} (1 - a^{-2})^j.

Setting a = 1, z = t^{1/2} - t^{-1/2} gives the Alexander polynomial, which
also has the matching-number form t^{-n/2} * sum_i b_i t^i (t-1)^{n-2i}.
The coefficients b_i are the Conway coefficients of the same object.

The point-count series sum_i a_i q^i (q-1)^{n-2i} is an honest rational
function whenever some independent set has more than n/2 vertices; it is
kept exact as a normalized numerator over a power of (q - 1).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .forest import Forest
from .laurent import (
    HOPF,
    INV_A2,
    ONE,
    Z_OVER_A,
    BivariateLaurent,
    HalfLaurent,
    NonPolynomialResult,
    UnivariatePoly,
)


class InternalMismatch(RuntimeError):
    """Two provably-equal computation paths disagreed; an implementation bug."""


def homfly_recursive(f: Forest) -> BivariateLaurent:
    """Evaluate the leaf recursion, memoized on surviving vertex subsets.

    The least-id leaf is always removed first; by well-definedness any
    choice yields the same value, and a fixed one keeps runs reproducible.
    """
    memo: dict[frozenset[int], BivariateLaurent] = {}

    def go(g: Forest) -> BivariateLaurent:
        key = frozenset(g.vertices)
        hit = memo.get(key)
        if hit is not None:
            return hit
        if g.n == 0:
            val = ONE
        elif g.n == 1:
            val = HOPF
        else:
            comps = g.components()
            if len(comps) > 1:
                val = ONE
                for c in comps:
                    val = val * go(c)
            else:
                v, w = g.leaves()[0]
                val = Z_OVER_A * go(g.remove_vertices({v})) + INV_A2 * go(
                    g.remove_vertices({v, w})
                )
        memo[key] = val
        return val

    return go(f)


def homfly_closed(f: Forest) -> BivariateLaurent:
    """Expand the closed formula with the canonical-root coefficient table."""
    n = f.n
    table = f.cij_table()
    terms: dict[tuple[int, int], int] = {}
    for (i, j), c in table.c.items():
        z_exp = n - 2 * i
        for m in range(j + 1):
            coeff = c * math.comb(j, m) * (-1) ** m
            key = (-n - 2 * m, z_exp)
            terms[key] = terms.get(key, 0) + coeff
    return BivariateLaurent(terms)


def alexander(f: Forest) -> HalfLaurent:
    """Alexander polynomial by the matching formula, cross-checked against
    the specialization of the recursive two-variable polynomial."""
    n = f.n
    b = f.matching_counts()
    t = HalfLaurent.t_power(2)
    t_minus_1 = HalfLaurent({2: 1, 0: -1})
    acc = HalfLaurent.zero()
    for i, bi in enumerate(b):
        if bi == 0:
            continue
        if n - 2 * i < 0:
            raise InternalMismatch("matching larger than n/2 edges")
        acc = acc + HalfLaurent({0: bi}) * (t ** i) * (t_minus_1 ** (n - 2 * i))
    closed = HalfLaurent.t_power(-n) * acc
    specialized = homfly_recursive(f).to_alexander()
    if closed != specialized:
        raise InternalMismatch(
            f"matching formula {closed.render()} != specialization {specialized.render()}"
        )
    return closed


def conway_coefficients(f: Forest) -> list[int]:
    """Matching counts b_i, read as the coefficients of sum b_i z^{n-2i}."""
    return f.matching_counts()


def conway_polynomial(f: Forest) -> UnivariatePoly:
    """sum_i b_i z^{n-2i} as a univariate polynomial in z."""
    n = f.n
    return UnivariatePoly(
        {n - 2 * i: b for i, b in enumerate(f.matching_counts()) if b}, var="z"
    )


@dataclass(frozen=True)
class PointCount:
    """Exact value of sum_i a_i q^i (q-1)^{n-2i} as num / (q-1)^denom_pow.

    Normalized so (q - 1) does not divide the numerator when denom_pow > 0.
    Polynomial whenever no independent set exceeds n/2 vertices.
    """

    num: UnivariatePoly
    denom_pow: int = 0

    @property
    def is_polynomial(self) -> bool:
        return self.denom_pow == 0

    def __eq__(self, other):
        if not isinstance(other, PointCount):
            return NotImplemented
        return self.num == other.num and self.denom_pow == other.denom_pow

    def render(self, fmt: str = "text") -> str:
        if self.denom_pow == 0:
            return self.num.render(fmt)
        if fmt == "latex":
            denom = "q - 1" if self.denom_pow == 1 else "(q - 1)^{%d}" % self.denom_pow
            return "\\frac{%s}{%s}" % (self.num.render(fmt), denom)
        denom = "(q - 1)" if self.denom_pow == 1 else f"(q - 1)^{self.denom_pow}"
        return f"({self.num.render(fmt)})/{denom}"


def r_polynomial(f: Forest) -> PointCount:
    """Point-count series of the forest, exact and normalized."""
    n = f.n
    a = f.independent_set_counts()
    d = max([0] + [2 * i - n for i, ai in enumerate(a) if ai])
    q = UnivariatePoly({1: 1})
    q_minus_1 = UnivariatePoly({1: 1, 0: -1})
    num = UnivariatePoly({})
    for i, ai in enumerate(a):
        if ai:
            num = num + UnivariatePoly({0: ai}) * (q ** i) * (q_minus_1 ** (n + d - 2 * i))
    while d > 0:
        reduced = num.divide_once(1)
        if reduced is None:
            break
        num, d = reduced, d - 1
    return PointCount(num, d)


def p_top_check(f: Forest) -> bool:
    """Check the top-slice identity against the point-count series.

    The top a-slice of the closed formula, under a = q^{-1/2} and
    z = q^{1/2} - q^{-1/2}, must equal sum_i a_i q^i (q-1)^{n-2i}.  Both
    sides are compared after clearing the same denominators, with q^{1/2}
    tracked through integer half-exponents; nothing is ever divided.
    """
    n = f.n
    if n == 0:
        return True
    top = homfly_closed(f).top_a_part()
    if top.max_a_exp() != -n:
        return False
    g = top.a_slice(-n)  # z-exponent -> coefficient
    d = max(0, -min(g))
    u = HalfLaurent({1: 1, -1: -1})  # s - s^{-1} with s = q^{1/2}
    lhs = HalfLaurent.zero()
    for z_exp, c in g.items():
        lhs = lhs + HalfLaurent({0: c}) * (u ** (z_exp + d))
    lhs = HalfLaurent.t_power(n) * lhs  # times q^{n/2}
    a_counts = f.independent_set_counts()
    if any(ai and n + d - 2 * i < 0 for i, ai in enumerate(a_counts)):
        return False
    s2_minus_1 = HalfLaurent({2: 1, 0: -1})  # q - 1
    rhs = HalfLaurent.zero()
    for i, ai in enumerate(a_counts):
        if ai:
            rhs = rhs + HalfLaurent({2 * i: ai}) * (s2_minus_1 ** (n + d - 2 * i))
    rhs = HalfLaurent.t_power(-d) * rhs
    return lhs == rhs


def log_concavity_check(coeffs: list[int]) -> bool:
    """b_i^2 >= b_{i-1} b_{i+1} at every interior index."""
    return all(
        coeffs[i] * coeffs[i] >= coeffs[i - 1] * coeffs[i + 1]
        for i in range(1, len(coeffs) - 1)
    )


@dataclass(frozen=True)
class InvariantReport:
    """All invariants of one forest plus a cross-method agreement flag."""

    homfly: BivariateLaurent
    alexander: HalfLaurent
    conway_coeffs: list[int]
    rpoly: PointCount
    methods_agreed: bool
    detail: tuple[str, ...] = ()


def compute_report(f: Forest, skein_value: BivariateLaurent | None = None) -> InvariantReport:
    """Run every route and compare; ``skein_value`` joins the comparison
    when the caller has evaluated a plabic graph for the same forest."""
    detail: list[str] = []
    agreed = True
    rec = homfly_recursive(f)
    clo = homfly_closed(f)
    if rec == clo:
        detail.append("homfly: recursive == closed")
    else:
        detail.append("homfly: recursive != closed")
        agreed = False
    if skein_value is not None:
        if skein_value == rec:
            detail.append("homfly: skein == recursive")
        else:
            detail.append("homfly: skein != recursive")
            agreed = False
    try:
        alex = alexander(f)
        detail.append("alexander: matching formula == specialization")
    except InternalMismatch:
        alex = rec.to_alexander()
        detail.append("alexander: matching formula != specialization")
        agreed = False
    if p_top_check(f):
        detail.append("point count: top-slice identity holds")
    else:
        detail.append("point count: top-slice identity fails")
        agreed = False
    conway = conway_coefficients(f)
    return InvariantReport(
        homfly=rec,
        alexander=alex,
        conway_coeffs=conway,
        rpoly=r_polynomial(f),
        methods_agreed=agreed,
        detail=tuple(detail),
    )
