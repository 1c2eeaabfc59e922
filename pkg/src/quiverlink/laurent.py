"""Exact sparse Laurent-polynomial arithmetic.

Two coefficient domains: ``BivariateLaurent`` is Z[a^{±1}, z^{±1}] (the home
of the two-variable link polynomial and all skein coefficients), and
``HalfLaurent`` is Z[t^{±1/2}] with half-integer exponents stored as
twice-exponents (the home of the Alexander specialization).  Coefficients
are Python ints, so arithmetic never overflows and never rounds.

All values are immutable; operations return new objects.
"""

from __future__ import annotations

import json
from typing import Iterable, Mapping


class NonPolynomialResult(ArithmeticError):
    """Exact division left a remainder, so the requested specialization
    does not exist in the Laurent ring."""


class EmptyPolynomial(ValueError):
    """The operation needs a nonzero polynomial."""


def _clean(terms: Mapping) -> dict:
    return {k: c for k, c in terms.items() if c != 0}


class BivariateLaurent:
    """Integer Laurent polynomial in ``a`` and ``z``.

    Terms are a map from ``(a_exp, z_exp)`` to a nonzero int coefficient.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[tuple[int, int], int] | None = None):
        self._terms = _clean(terms or {})

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls) -> "BivariateLaurent":
        return cls()

    @classmethod
    def one(cls) -> "BivariateLaurent":
        return cls({(0, 0): 1})

    @classmethod
    def monomial(cls, coeff: int, a_exp: int = 0, z_exp: int = 0) -> "BivariateLaurent":
        return cls({(a_exp, z_exp): coeff})

    # -- ring structure -----------------------------------------------

    def __add__(self, other: "BivariateLaurent") -> "BivariateLaurent":
        terms = dict(self._terms)
        for k, c in other._terms.items():
            terms[k] = terms.get(k, 0) + c
        return BivariateLaurent(terms)

    def __neg__(self) -> "BivariateLaurent":
        return BivariateLaurent({k: -c for k, c in self._terms.items()})

    def __sub__(self, other: "BivariateLaurent") -> "BivariateLaurent":
        return self + (-other)

    def __mul__(self, other: "BivariateLaurent") -> "BivariateLaurent":
        terms: dict[tuple[int, int], int] = {}
        for (a1, z1), c1 in self._terms.items():
            for (a2, z2), c2 in other._terms.items():
                k = (a1 + a2, z1 + z2)
                terms[k] = terms.get(k, 0) + c1 * c2
        return BivariateLaurent(terms)

    def __pow__(self, n: int) -> "BivariateLaurent":
        if n < 0:
            raise ValueError("negative power of a Laurent polynomial")
        result = BivariateLaurent.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BivariateLaurent):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __repr__(self) -> str:
        return f"BivariateLaurent({self.render('text')!r})"

    # -- queries -------------------------------------------------------

    def is_zero(self) -> bool:
        return not self._terms

    def terms(self) -> dict[tuple[int, int], int]:
        return dict(self._terms)

    def coefficient(self, a_exp: int, z_exp: int) -> int:
        return self._terms.get((a_exp, z_exp), 0)

    def max_a_exp(self) -> int:
        if not self._terms:
            raise EmptyPolynomial("zero polynomial has no a-degree")
        return max(a for a, _ in self._terms)

    def a_slice(self, a_exp: int) -> dict[int, int]:
        """z-exponent -> coefficient map of the a^{a_exp} slice."""
        return {z: c for (a, z), c in self._terms.items() if a == a_exp}

    # -- specializations ------------------------------------------------

    def top_a_part(self) -> "BivariateLaurent":
        """Sub-polynomial supported on the maximal a-exponent present.

        For the polynomial of an n-vertex forest this is the a^{-n} slice.
        """
        top = self.max_a_exp()
        return BivariateLaurent({(top, z): c for z, c in self.a_slice(top).items()})

    def to_alexander(self) -> "HalfLaurent":
        """Specialize a = 1 and z = t^{1/2} - t^{-1/2}.

        Negative z-powers are handled by clearing denominators: multiply by
        z^d, substitute, then divide exactly by (t^{1/2} - t^{-1/2})^d.
        Raises NonPolynomialResult if the division leaves a remainder.
        """
        # Collapse a.
        z_poly: dict[int, int] = {}
        for (_, z), c in self._terms.items():
            z_poly[z] = z_poly.get(z, 0) + c
        z_poly = _clean(z_poly)
        if not z_poly:
            return HalfLaurent.zero()
        d = max(0, -min(z_poly))
        u = HalfLaurent({1: 1, -1: -1})  # t^{1/2} - t^{-1/2}
        acc = HalfLaurent.zero()
        for z_exp, c in z_poly.items():
            acc = acc + HalfLaurent({0: c}) * (u ** (z_exp + d))
        if d:
            acc = acc.exact_div(u ** d)
        return acc

    # -- rendering -------------------------------------------------------

    def render(self, fmt: str = "text") -> str:
        if fmt == "json":
            items = [
                {"a": a, "z": z, "c": self._terms[(a, z)]}
                for (a, z) in sorted(self._terms, key=lambda k: (-k[0], -k[1]))
            ]
            return json.dumps(items, separators=(", ", ": "))
        if fmt not in ("text", "latex"):
            raise ValueError(f"unknown format {fmt!r}")
        if not self._terms:
            return "0"
        groups = sorted({a for a, _ in self._terms}, reverse=True)
        out: list[str] = []
        for a_exp in groups:
            body, negated = _render_z_group(self.a_slice(a_exp), fmt)
            piece = _attach_a_power(body, a_exp, fmt)
            if not out:
                out.append(("-" if negated else "") + piece)
            else:
                out.append(("- " if negated else "+ ") + piece)
        return " ".join(out)


def parse_bivariate_json(text: str) -> BivariateLaurent:
    """Inverse of render('json') for the bivariate domain."""
    items = json.loads(text)
    terms: dict[tuple[int, int], int] = {}
    for it in items:
        key = (int(it["a"]), int(it["z"]))
        terms[key] = terms.get(key, 0) + int(it["c"])
    return BivariateLaurent(terms)


def _z_power(exp: int, fmt: str) -> str:
    if exp == 0:
        return "1"
    if exp == 1:
        return "z"
    if fmt == "latex" and len(str(exp)) > 1:
        return "z^{%d}" % exp
    return f"z^{exp}"


def _render_z_group(slice_terms: Mapping[int, int], fmt: str) -> tuple[str, bool]:
    """Render one a-power group; returns (body, negated).

    When the leading coefficient is negative the whole group is rendered
    negated with ``negated=True`` so the caller can emit a leading minus,
    matching the sign-per-fraction layout of the golden tables.
    """
    exps = sorted(slice_terms, reverse=True)
    negated = slice_terms[exps[0]] < 0
    parts: list[str] = []
    for e in exps:
        c = -slice_terms[e] if negated else slice_terms[e]
        mag, sign = abs(c), "-" if c < 0 else "+"
        power = _z_power(e, fmt)
        if power == "1":
            atom = str(mag)
        elif mag == 1:
            atom = power
        else:
            atom = f"{mag}{power}"
        if not parts:
            parts.append(("-" if c < 0 else "") + atom)
        else:
            parts.append(f"{sign} {atom}")
    return " ".join(parts), negated


def _attach_a_power(body: str, a_exp: int, fmt: str) -> str:
    if a_exp == 0:
        return body
    k = abs(a_exp)
    if fmt == "latex":
        a_pow = "a^{%d}" % k if len(str(k)) > 1 else f"a^{k}"
        if a_exp < 0:
            return "\\frac{%s}{%s}" % (body, a_pow)
        return f"({body}){a_pow}" if " " in body else f"{body}{a_pow}"
    a_pow = f"a^{k}" if k != 1 else "a"
    wrapped = f"({body})" if " " in body else body
    return f"{wrapped}/{a_pow}" if a_exp < 0 else f"{wrapped}*{a_pow}"


class HalfLaurent:
    """Integer Laurent polynomial in t^{1/2}.

    The key k encodes the term t^{k/2}, so exponent arithmetic stays in the
    integers and no floats or rationals appear anywhere.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[int, int] | None = None):
        self._terms = _clean(terms or {})

    @classmethod
    def zero(cls) -> "HalfLaurent":
        return cls()

    @classmethod
    def one(cls) -> "HalfLaurent":
        return cls({0: 1})

    @classmethod
    def t_power(cls, twice_exp: int, coeff: int = 1) -> "HalfLaurent":
        """coeff * t^{twice_exp / 2}."""
        return cls({twice_exp: coeff})

    def __add__(self, other: "HalfLaurent") -> "HalfLaurent":
        terms = dict(self._terms)
        for k, c in other._terms.items():
            terms[k] = terms.get(k, 0) + c
        return HalfLaurent(terms)

    def __neg__(self) -> "HalfLaurent":
        return HalfLaurent({k: -c for k, c in self._terms.items()})

    def __sub__(self, other: "HalfLaurent") -> "HalfLaurent":
        return self + (-other)

    def __mul__(self, other: "HalfLaurent") -> "HalfLaurent":
        terms: dict[int, int] = {}
        for k1, c1 in self._terms.items():
            for k2, c2 in other._terms.items():
                k = k1 + k2
                terms[k] = terms.get(k, 0) + c1 * c2
        return HalfLaurent(terms)

    def __pow__(self, n: int) -> "HalfLaurent":
        if n < 0:
            raise ValueError("negative power of a Laurent polynomial")
        result = HalfLaurent.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, HalfLaurent):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __repr__(self) -> str:
        return f"HalfLaurent({self.render('text')!r})"

    def is_zero(self) -> bool:
        return not self._terms

    def terms(self) -> dict[int, int]:
        return dict(self._terms)

    def exact_div(self, divisor: "HalfLaurent") -> "HalfLaurent":
        """Exact division; raises NonPolynomialResult on a remainder."""
        if divisor.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        rem = dict(self._terms)
        div = divisor._terms
        lead = max(div)
        lead_c = div[lead]
        quot: dict[int, int] = {}
        while rem:
            top = max(rem)
            c = rem[top]
            if c % lead_c != 0:
                raise NonPolynomialResult("leading coefficient does not divide")
            q_exp, q_c = top - lead, c // lead_c
            quot[q_exp] = quot.get(q_exp, 0) + q_c
            for k, d in div.items():
                kk = k + q_exp
                rem[kk] = rem.get(kk, 0) - q_c * d
                if rem[kk] == 0:
                    del rem[kk]
        return HalfLaurent(quot)

    def render(self, fmt: str = "text") -> str:
        if fmt == "json":
            items = [{"t2": k, "c": self._terms[k]} for k in sorted(self._terms, reverse=True)]
            return json.dumps(items, separators=(", ", ": "))
        if fmt not in ("text", "latex"):
            raise ValueError(f"unknown format {fmt!r}")
        if not self._terms:
            return "0"
        parts: list[str] = []
        for k in sorted(self._terms, reverse=True):
            c = self._terms[k]
            mag, neg = abs(c), c < 0
            power = _t_power(k, fmt)
            if power == "1":
                atom = str(mag)
            elif mag == 1:
                atom = power
            else:
                atom = f"{mag}{power}"
            if not parts:
                parts.append(("-" if neg else "") + atom)
            else:
                parts.append(("- " if neg else "+ ") + atom)
        return " ".join(parts)


def _t_power(twice_exp: int, fmt: str) -> str:
    if twice_exp == 0:
        return "1"
    if twice_exp == 2:
        return "t"
    if twice_exp % 2 == 0:
        e = twice_exp // 2
        if fmt == "latex" and len(str(e)) > 1:
            return "t^{%d}" % e
        return f"t^{e}"
    if fmt == "latex":
        return "t^{%d/2}" % twice_exp
    return f"t^({twice_exp}/2)"


def parse_half_json(text: str) -> HalfLaurent:
    """Inverse of render('json') for the half-exponent domain."""
    items = json.loads(text)
    terms: dict[int, int] = {}
    for it in items:
        k = int(it["t2"])
        terms[k] = terms.get(k, 0) + int(it["c"])
    return HalfLaurent(terms)


class UnivariatePoly:
    """Small exact integer Laurent polynomial in one named variable.

    Used for the point-count variable q and for Conway coefficient
    rendering in z; exponents may be any integers.
    """

    __slots__ = ("_terms", "var")

    def __init__(self, terms: Mapping[int, int] | None = None, var: str = "q"):
        self._terms = _clean(terms or {})
        self.var = var

    @classmethod
    def monomial(cls, coeff: int, exp: int = 0, var: str = "q") -> "UnivariatePoly":
        return cls({exp: coeff}, var=var)

    def __add__(self, other: "UnivariatePoly") -> "UnivariatePoly":
        terms = dict(self._terms)
        for k, c in other._terms.items():
            terms[k] = terms.get(k, 0) + c
        return UnivariatePoly(terms, var=self.var)

    def __sub__(self, other: "UnivariatePoly") -> "UnivariatePoly":
        terms = dict(self._terms)
        for k, c in other._terms.items():
            terms[k] = terms.get(k, 0) - c
        return UnivariatePoly(terms, var=self.var)

    def __mul__(self, other: "UnivariatePoly") -> "UnivariatePoly":
        terms: dict[int, int] = {}
        for k1, c1 in self._terms.items():
            for k2, c2 in other._terms.items():
                k = k1 + k2
                terms[k] = terms.get(k, 0) + c1 * c2
        return UnivariatePoly(terms, var=self.var)

    def __pow__(self, n: int) -> "UnivariatePoly":
        if n < 0:
            raise ValueError("negative power")
        result = UnivariatePoly({0: 1}, var=self.var)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, UnivariatePoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __repr__(self) -> str:
        return f"UnivariatePoly({self.render()!r})"

    def is_zero(self) -> bool:
        return not self._terms

    def terms(self) -> dict[int, int]:
        return dict(self._terms)

    def divide_once(self, root_shift: int = 1) -> "UnivariatePoly | None":
        """Divide by (var - root_shift) if exact, else None.

        Only nonnegative-exponent polynomials are handled; callers clear
        denominators first.
        """
        if not self._terms or min(self._terms) < 0:
            return None
        deg = max(self._terms)
        coeffs = [self._terms.get(i, 0) for i in range(deg + 1)]
        # synthetic division by (x - root_shift)
        out = [0] * deg
        carry = 0
        for i in range(deg, 0, -1):
            carry = coeffs[i] + carry
            out[i - 1] = carry
            carry *= root_shift
        if coeffs[0] + carry != 0:
            return None
        return UnivariatePoly({i: c for i, c in enumerate(out)}, var=self.var)

    def render(self, fmt: str = "text") -> str:
        if fmt == "json":
            items = [{"e": k, "c": self._terms[k]} for k in sorted(self._terms, reverse=True)]
            return json.dumps(items, separators=(", ", ": "))
        if not self._terms:
            return "0"
        parts: list[str] = []
        for k in sorted(self._terms, reverse=True):
            c = self._terms[k]
            mag, neg = abs(c), c < 0
            if k == 0:
                power = "1"
            elif k == 1:
                power = self.var
            elif fmt == "latex" and len(str(k)) > 1:
                power = "%s^{%d}" % (self.var, k)
            else:
                power = f"{self.var}^{k}"
            if power == "1":
                atom = str(mag)
            elif mag == 1:
                atom = power
            else:
                atom = f"{mag}{power}"
            if not parts:
                parts.append(("-" if neg else "") + atom)
            else:
                parts.append(("- " if neg else "+ ") + atom)
        return " ".join(parts)


# Shared constants of the skein calculus.

Z_OVER_A = BivariateLaurent({(-1, 1): 1})
INV_A2 = BivariateLaurent({(-2, 0): 1})
ONE = BivariateLaurent.one()

#: Value of a single-vertex quiver: (z + z^{-1})/a - z^{-1}/a^3.
HOPF = BivariateLaurent({(-1, 1): 1, (-1, -1): 1, (-3, -1): -1})
