"""Exact Laurent polynomial arithmetic in one and two variables.

Coefficients are Python ints (arbitrary precision); exponents may be negative.
``LaurentPoly2`` in variables x, y is the universal value type of the whole
package: every family formula, the deletion-contraction engine and the dual
swap all live here.  ``LaurentPoly1`` in x holds Jones polynomials after the
x -> -x, y -> -1/x substitution.

The recurring kernel of the family formulas is ``geom_sum``: the unique
Laurent polynomial S with (v - 1) * S = v^p - 1, i.e. the finite geometric
series for p >= 0 and -(v^p + ... + v^-1) for p < 0.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable, Iterator, Mapping


class LaurentPoly2:
    """Bivariate Laurent polynomial with integer coefficients.

    Immutable; stored as a map (a, b) -> c for terms c*x^a*y^b with c != 0.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[tuple[int, int], int] | Iterable[tuple[tuple[int, int], int]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        t: dict[tuple[int, int], int] = {}
        for (a, b), c in items:
            if c:
                k = (a, b)
                nc = t.get(k, 0) + c
                if nc:
                    t[k] = nc
                elif k in t:
                    del t[k]
        self._terms = t
        self._hash: int | None = None

    # -- constructors ---------------------------------------------------

    @staticmethod
    def zero() -> "LaurentPoly2":
        return _ZERO2

    @staticmethod
    def const(c: int) -> "LaurentPoly2":
        return LaurentPoly2({(0, 0): c})

    @staticmethod
    def x(a: int = 1) -> "LaurentPoly2":
        return LaurentPoly2({(a, 0): 1})

    @staticmethod
    def y(b: int = 1) -> "LaurentPoly2":
        return LaurentPoly2({(0, b): 1})

    @staticmethod
    def monomial(c: int, a: int, b: int) -> "LaurentPoly2":
        return LaurentPoly2({(a, b): c})

    # -- basics ----------------------------------------------------------

    def items(self) -> Iterator[tuple[tuple[int, int], int]]:
        """Terms in canonical order: lexicographic by (x-exponent, y-exponent)."""
        return iter(sorted(self._terms.items()))

    def coefficient(self, a: int, b: int) -> int:
        return self._terms.get((a, b), 0)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, LaurentPoly2):
            return self._terms == other._terms
        if isinstance(other, int):
            return self._terms == ({(0, 0): other} if other else {})
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __repr__(self) -> str:
        return f"LaurentPoly2({self.to_text()!r})"

    # -- ring operations --------------------------------------------------

    def __add__(self, other: "LaurentPoly2 | int") -> "LaurentPoly2":
        if isinstance(other, int):
            other = LaurentPoly2.const(other)
        t = dict(self._terms)
        for k, c in other._terms.items():
            nc = t.get(k, 0) + c
            if nc:
                t[k] = nc
            elif k in t:
                del t[k]
        out = LaurentPoly2.__new__(LaurentPoly2)
        out._terms = t
        out._hash = None
        return out

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly2":
        out = LaurentPoly2.__new__(LaurentPoly2)
        out._terms = {k: -c for k, c in self._terms.items()}
        out._hash = None
        return out

    def __sub__(self, other: "LaurentPoly2 | int") -> "LaurentPoly2":
        if isinstance(other, int):
            other = LaurentPoly2.const(other)
        return self + (-other)

    def __rsub__(self, other: int) -> "LaurentPoly2":
        return LaurentPoly2.const(other) - self

    def __mul__(self, other: "LaurentPoly2 | int") -> "LaurentPoly2":
        if isinstance(other, int):
            if other == 0:
                return _ZERO2
            out = LaurentPoly2.__new__(LaurentPoly2)
            out._terms = {k: c * other for k, c in self._terms.items()}
            out._hash = None
            return out
        t: dict[tuple[int, int], int] = {}
        for (a1, b1), c1 in self._terms.items():
            for (a2, b2), c2 in other._terms.items():
                k = (a1 + a2, b1 + b2)
                nc = t.get(k, 0) + c1 * c2
                if nc:
                    t[k] = nc
                elif k in t:
                    del t[k]
        out = LaurentPoly2.__new__(LaurentPoly2)
        out._terms = t
        out._hash = None
        return out

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "LaurentPoly2":
        if n < 0:
            raise ValueError("negative power of a general Laurent polynomial")
        result = LaurentPoly2.const(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # -- structure -------------------------------------------------------

    def swap_xy(self) -> "LaurentPoly2":
        """x <-> y (the dual-graph identity on Tutte polynomials)."""
        out = LaurentPoly2.__new__(LaurentPoly2)
        out._terms = {(b, a): c for (a, b), c in self._terms.items()}
        out._hash = None
        return out

    def substitute_thistlethwaite(self) -> "LaurentPoly1":
        """Apply x -> -x, y -> -1/x, collapsing to one variable.

        Each term c*x^a*y^b maps to c*(-1)^(a+b)*x^(a-b).
        """
        t: dict[int, int] = {}
        for (a, b), c in self._terms.items():
            k = a - b
            s = c if (a + b) % 2 == 0 else -c
            nc = t.get(k, 0) + s
            if nc:
                t[k] = nc
            elif k in t:
                del t[k]
        return LaurentPoly1(t)

    def evaluate(self, xv, yv):
        """Evaluate at scalars (Fraction, int, complex...); exponents may be negative."""
        total = 0
        for (a, b), c in self._terms.items():
            total += c * xv**a * yv**b
        return total

    def degrees(self) -> tuple[int, int, int, int]:
        """(min x-exp, max x-exp, min y-exp, max y-exp); zero poly -> all 0."""
        if not self._terms:
            return (0, 0, 0, 0)
        xs = [a for a, _ in self._terms]
        ys = [b for _, b in self._terms]
        return (min(xs), max(xs), min(ys), max(ys))

    def leading_term(self) -> tuple[tuple[int, int], int]:
        """Leading term under: highest total degree, ties by higher x-degree."""
        if not self._terms:
            raise ValueError("zero polynomial has no leading term")
        k = max(self._terms, key=lambda ab: (ab[0] + ab[1], ab[0]))
        return k, self._terms[k]

    def leading_coefficient(self) -> int:
        return self.leading_term()[1]

    # -- text format -------------------------------------------------------

    def to_text(self) -> str:
        """Canonical text: terms sorted lex by (a, b), e.g. ``-1*x^-1 + 2*y^1 + 1*x^2``."""
        if not self._terms:
            return "0"
        parts = []
        for (a, b), c in self.items():
            factors = [str(c)]
            if a:
                factors.append(f"x^{a}")
            if b:
                factors.append(f"y^{b}")
            parts.append("*".join(factors))
        return " + ".join(parts)

    @staticmethod
    def from_text(text: str) -> "LaurentPoly2":
        return _parse_poly2(text)


_ZERO2 = LaurentPoly2()

X = LaurentPoly2.x()
Y = LaurentPoly2.y()
ONE = LaurentPoly2.const(1)


class LaurentPoly1:
    """Univariate Laurent polynomial in x with integer coefficients."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[int, int] | Iterable[tuple[int, int]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        t: dict[int, int] = {}
        for k, c in items:
            if c:
                nc = t.get(k, 0) + c
                if nc:
                    t[k] = nc
                elif k in t:
                    del t[k]
        self._terms = t
        self._hash: int | None = None

    @staticmethod
    def const(c: int) -> "LaurentPoly1":
        return LaurentPoly1({0: c})

    @staticmethod
    def x(a: int = 1) -> "LaurentPoly1":
        return LaurentPoly1({a: 1})

    def items(self) -> Iterator[tuple[int, int]]:
        """Terms in canonical ascending-exponent order."""
        return iter(sorted(self._terms.items()))

    def coefficient(self, a: int) -> int:
        return self._terms.get(a, 0)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, LaurentPoly1):
            return self._terms == other._terms
        if isinstance(other, int):
            return self._terms == ({0: other} if other else {})
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __repr__(self) -> str:
        return f"LaurentPoly1({self.to_text()!r})"

    def __add__(self, other: "LaurentPoly1 | int") -> "LaurentPoly1":
        if isinstance(other, int):
            other = LaurentPoly1.const(other)
        t = dict(self._terms)
        for k, c in other._terms.items():
            nc = t.get(k, 0) + c
            if nc:
                t[k] = nc
            elif k in t:
                del t[k]
        return LaurentPoly1(t)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly1":
        return LaurentPoly1({k: -c for k, c in self._terms.items()})

    def __sub__(self, other: "LaurentPoly1 | int") -> "LaurentPoly1":
        if isinstance(other, int):
            other = LaurentPoly1.const(other)
        return self + (-other)

    def __mul__(self, other: "LaurentPoly1 | int") -> "LaurentPoly1":
        if isinstance(other, int):
            return LaurentPoly1({k: c * other for k, c in self._terms.items()})
        t: dict[int, int] = {}
        for a1, c1 in self._terms.items():
            for a2, c2 in other._terms.items():
                k = a1 + a2
                nc = t.get(k, 0) + c1 * c2
                if nc:
                    t[k] = nc
                elif k in t:
                    del t[k]
        return LaurentPoly1(t)

    __rmul__ = __mul__

    def min_exp(self) -> int:
        if not self._terms:
            raise ValueError("zero polynomial")
        return min(self._terms)

    def max_exp(self) -> int:
        if not self._terms:
            raise ValueError("zero polynomial")
        return max(self._terms)

    def normalize(self) -> tuple["LaurentPoly1", int, int]:
        """Return (poly, shift, sign) with self = sign * x^shift * poly.

        poly has lowest exponent 0 and positive leading (highest-exponent)
        coefficient; integer content is preserved.
        """
        if not self._terms:
            raise ValueError("cannot normalize the zero polynomial")
        shift = self.min_exp()
        sign = 1 if self._terms[self.max_exp()] > 0 else -1
        poly = LaurentPoly1({k - shift: sign * c for k, c in self._terms.items()})
        return poly, shift, sign

    def coefficients(self) -> list[int]:
        """Dense coefficient list [c_0, ..., c_n] for a poly with min_exp >= 0."""
        if not self._terms:
            return [0]
        if self.min_exp() < 0:
            raise ValueError("negative exponents; normalize first")
        out = [0] * (self.max_exp() + 1)
        for k, c in self._terms.items():
            out[k] = c
        return out

    def evaluate(self, xv):
        total = 0
        for a, c in self._terms.items():
            total += c * xv**a
        return total

    def to_text(self) -> str:
        """Canonical text, ascending exponents, e.g. ``-1 + -1*x^2 + 1*x^3``."""
        if not self._terms:
            return "0"
        parts = []
        for a, c in self.items():
            parts.append(str(c) if a == 0 else f"{c}*x^{a}")
        return " + ".join(parts)

    @staticmethod
    def from_text(text: str) -> "LaurentPoly1":
        p2 = _parse_poly2(text)
        t = {}
        for (a, b), c in p2._terms.items():
            if b:
                raise ValueError(f"unexpected y factor in one-variable polynomial: {text!r}")
            t[a] = c
        return LaurentPoly1(t)


# -- spec-named operation wrappers ---------------------------------------


def add(p: LaurentPoly2, q: LaurentPoly2) -> LaurentPoly2:
    return p + q


def mul(p: LaurentPoly2, q: LaurentPoly2) -> LaurentPoly2:
    return p * q


def geom_sum(var: str, p: int) -> LaurentPoly2:
    """The Laurent polynomial S with (v - 1) * S = v^p - 1, v in {x, y}.

    p >= 0: 1 + v + ... + v^(p-1); p < 0: -(v^p + ... + v^-1).
    """
    if var not in ("x", "y"):
        raise ValueError(f"axis must be 'x' or 'y', got {var!r}")
    if p >= 0:
        exps = range(p)
        sign = 1
    else:
        exps = range(p, 0)
        sign = -1
    if var == "x":
        return LaurentPoly2({(a, 0): sign for a in exps})
    return LaurentPoly2({(0, b): sign for b in exps})


def swap_xy(p: LaurentPoly2) -> LaurentPoly2:
    return p.swap_xy()


def substitute_thistlethwaite(p: LaurentPoly2) -> LaurentPoly1:
    return p.substitute_thistlethwaite()


def x_power(a: int) -> LaurentPoly2:
    return LaurentPoly2.x(a)


def y_power(b: int) -> LaurentPoly2:
    return LaurentPoly2.y(b)


# -- text parsing ----------------------------------------------------------

_TERM_RE = re.compile(
    r"""^(?P<coef>[+-]?\d+)?            # optional integer coefficient
        (?P<rest>(?:\*?[xy]\^?-?\d*)*)$  # variable factors
    """,
    re.VERBOSE,
)
_FACTOR_RE = re.compile(r"([xy])(?:\^(-?\d+))?")


def _parse_poly2(text: str) -> LaurentPoly2:
    """Whitespace-insensitive reader for the canonical polynomial text format."""
    s = "".join(text.split())
    if not s:
        raise ValueError("empty polynomial text")
    if s == "0":
        return _ZERO2
    # split into signed terms
    s = s.replace("+-", "-").replace("-", "+-")
    terms: dict[tuple[int, int], int] = {}
    for chunk in s.split("+"):
        if not chunk:
            continue
        m = _TERM_RE.match(chunk)
        if not m:
            raise ValueError(f"cannot parse polynomial term {chunk!r}")
        coef_s = m.group("coef")
        rest = m.group("rest") or ""
        if coef_s in (None, "", "+", "-"):
            coef = -1 if coef_s == "-" else 1
        else:
            coef = int(coef_s)
        if chunk.startswith("-") and coef_s is None:
            coef = -coef
        a = b = 0
        consumed = 0
        for fm in _FACTOR_RE.finditer(rest):
            consumed += len(fm.group(0)) + (1 if fm.start() > 0 and rest[fm.start() - 1] == "*" else 0)
            e = int(fm.group(2)) if fm.group(2) is not None else 1
            if fm.group(1) == "x":
                a += e
            else:
                b += e
        stripped = rest.replace("*", "")
        refactors = "".join(fm.group(0) for fm in _FACTOR_RE.finditer(rest))
        if stripped != refactors:
            raise ValueError(f"cannot parse polynomial term {chunk!r}")
        terms[(a, b)] = terms.get((a, b), 0) + coef
    return LaurentPoly2(terms)


def poly2_from_fraction_eval_check(p: LaurentPoly2, xv: Fraction, yv: Fraction) -> Fraction:
    """Exact rational evaluation helper used by tests."""
    return p.evaluate(xv, yv)
