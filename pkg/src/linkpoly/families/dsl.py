"""Tiny expression language for the family catalog.

Formulas are data, not code: each catalog entry holds one expression over

    integers, x, y, x^IE, y^IE        monomials (IE = integer expression)
    gx(IE), gy(IE)                    geometric-sum kernels in x resp. y
    wheel(IE)                         wheel-family value (radical-free recurrence)
    swap(E)                           x <-> y (dual graph)
    T(ID; a=IE, b=IE, ...)            reference to another entry, bound params
    NAME                              fixed polynomial constant
    +, -, *, (...), E^n               ring operations; ^ only by literal n >= 0

Integer expressions are sums/differences of parameters and literals (p+1,
q+r, p+s-1, 2, ...).  Everything evaluates to an exact LaurentPoly2.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Callable, Mapping

from ..poly import LaurentPoly2, geom_sum

Env = Mapping[str, int]


class FormulaError(ValueError):
    pass


# -- integer expressions -----------------------------------------------------


@dataclass(frozen=True)
class IExpr:
    """Linear integer expression: constant + sum of signed parameters."""

    const: int
    params: tuple[tuple[str, int], ...]  # (name, sign-multiplicity)

    def evaluate(self, env: Env) -> int:
        v = self.const
        for name, k in self.params:
            if name not in env:
                raise FormulaError(f"unbound parameter {name!r}")
            v += k * env[name]
        return v

    def names(self) -> set[str]:
        return {n for n, _ in self.params}

    def render(self) -> str:
        parts = []
        for n, k in self.params:
            for _ in range(abs(k)):
                parts.append(("-" if k < 0 else "+", n))
        s = ""
        for sign, n in parts:
            s += n if not s and sign == "+" else f"{sign}{n}"
        if self.const or not s:
            s += f"{self.const:+d}" if s else str(self.const)
        return s


# -- expression nodes ---------------------------------------------------------


@dataclass(frozen=True)
class Num:
    value: int


@dataclass(frozen=True)
class Var:
    name: str  # "x" | "y"
    exp: IExpr


@dataclass(frozen=True)
class Geom:
    axis: str  # "x" | "y"
    arg: IExpr


@dataclass(frozen=True)
class Wheel:
    arg: IExpr


@dataclass(frozen=True)
class Swap:
    inner: "Expr"


@dataclass(frozen=True)
class Ref:
    target: str
    bindings: tuple[tuple[str, IExpr], ...]


@dataclass(frozen=True)
class Const:
    name: str


@dataclass(frozen=True)
class BinOp:
    op: str  # "+" | "-" | "*"
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class Pow:
    base: "Expr"
    exp: int


@dataclass(frozen=True)
class Neg:
    inner: "Expr"


Expr = object


def references(e: Expr) -> set[str]:
    """All entry ids referenced (transitive refs resolved by the caller)."""
    out: set[str] = set()

    def walk(n) -> None:
        if isinstance(n, Ref):
            out.add(n.target)
        elif isinstance(n, Swap):
            walk(n.inner)
        elif isinstance(n, BinOp):
            walk(n.left)
            walk(n.right)
        elif isinstance(n, (Pow, Neg)):
            walk(n.base if isinstance(n, Pow) else n.inner)

    walk(e)
    return out


def free_parameters(e: Expr) -> set[str]:
    out: set[str] = set()

    def walk(n) -> None:
        if isinstance(n, Var):
            out.update(n.exp.names())
        elif isinstance(n, (Geom, Wheel)):
            out.update(n.arg.names())
        elif isinstance(n, Swap):
            walk(n.inner)
        elif isinstance(n, Ref):
            for _, ie in n.bindings:
                out.update(ie.names())
        elif isinstance(n, BinOp):
            walk(n.left)
            walk(n.right)
        elif isinstance(n, Pow):
            walk(n.base)
        elif isinstance(n, Neg):
            walk(n.inner)

    walk(e)
    return out


# -- parsing -------------------------------------------------------------------

_TOKEN_RE = re.compile(
    r"\s*(?:(?P<num>\d+)|(?P<name>[A-Za-z_][A-Za-z_0-9]*)|(?P<op>[-+*^();,=])|(?P<bad>\S))"
)

_PARAM_RE = re.compile(r"^[a-z]$")


def _tokenize(text: str) -> list[tuple[str, str]]:
    tokens = []
    for m in _TOKEN_RE.finditer(text):
        if m.group("bad"):
            raise FormulaError(f"bad character {m.group('bad')!r} in formula {text!r}")
        if m.group("num"):
            tokens.append(("num", m.group("num")))
        elif m.group("name"):
            tokens.append(("name", m.group("name")))
        else:
            tokens.append(("op", m.group("op")))
    tokens.append(("end", ""))
    return tokens


class _P:
    def __init__(self, text: str):
        self.text = text
        self.toks = _tokenize(text)
        self.i = 0

    def peek(self) -> tuple[str, str]:
        return self.toks[self.i]

    def next(self) -> tuple[str, str]:
        t = self.toks[self.i]
        self.i += 1
        return t

    def expect_op(self, op: str) -> None:
        kind, val = self.next()
        if kind != "op" or val != op:
            raise FormulaError(f"expected {op!r}, got {val!r} in {self.text!r}")

    # integer expressions ------------------------------------------------

    def parse_iexpr(self) -> IExpr:
        const = 0
        params: dict[str, int] = {}
        sign = 1
        kind, val = self.peek()
        if kind == "op" and val == "-":
            self.next()
            sign = -1
        while True:
            kind, val = self.next()
            if kind == "num":
                const += sign * int(val)
            elif kind == "name" and _PARAM_RE.match(val) and val not in ("x", "y"):
                params[val] = params.get(val, 0) + sign
            else:
                raise FormulaError(f"bad integer expression near {val!r} in {self.text!r}")
            kind, val = self.peek()
            if kind == "op" and val in "+-":
                sign = 1 if val == "+" else -1
                self.next()
                continue
            break
        return IExpr(const, tuple(sorted((n, k) for n, k in params.items() if k)))

    # polynomial expressions ----------------------------------------------

    def parse_expr(self) -> Expr:
        node = self.parse_term()
        while True:
            kind, val = self.peek()
            if kind == "op" and val in "+-":
                self.next()
                rhs = self.parse_term()
                node = BinOp(val, node, rhs)
            else:
                return node

    def parse_term(self) -> Expr:
        node = self.parse_power()
        while True:
            kind, val = self.peek()
            if kind == "op" and val == "*":
                self.next()
                node = BinOp("*", node, self.parse_power())
            else:
                return node

    def parse_power(self) -> Expr:
        base = self.parse_atom()
        kind, val = self.peek()
        if kind == "op" and val == "^":
            self.next()
            if isinstance(base, Var):
                kind2, val2 = self.peek()
                if kind2 == "op" and val2 == "(":
                    self.next()
                    exp = self.parse_iexpr()
                    self.expect_op(")")
                else:
                    # bare exponents are a single (possibly negated) item;
                    # compound exponents need parentheses: x^(p+1)
                    sign = 1
                    if kind2 == "op" and val2 == "-":
                        self.next()
                        sign = -1
                    kind3, val3 = self.next()
                    if kind3 == "num":
                        exp = IExpr(sign * int(val3), ())
                    elif kind3 == "name" and _PARAM_RE.match(val3) and val3 not in ("x", "y"):
                        exp = IExpr(0, ((val3, sign),))
                    else:
                        raise FormulaError(f"bad exponent near {val3!r} in {self.text!r}")
                return Var(base.name, exp)
            kind2, val2 = self.next()
            if kind2 != "num":
                raise FormulaError(f"general ^ needs a literal exponent, got {val2!r}")
            return Pow(base, int(val2))
        return base

    def parse_atom(self) -> Expr:
        kind, val = self.next()
        if kind == "num":
            return Num(int(val))
        if kind == "op" and val == "-":
            return Neg(self.parse_power())
        if kind == "op" and val == "(":
            inner = self.parse_expr()
            self.expect_op(")")
            return inner
        if kind == "name":
            if val in ("x", "y"):
                return Var(val, IExpr(1, ()))
            if val in ("gx", "gy"):
                self.expect_op("(")
                arg = self.parse_iexpr()
                self.expect_op(")")
                return Geom(val[1], arg)
            if val == "wheel":
                self.expect_op("(")
                arg = self.parse_iexpr()
                self.expect_op(")")
                return Wheel(arg)
            if val == "swap":
                self.expect_op("(")
                inner = self.parse_expr()
                self.expect_op(")")
                return Swap(inner)
            if val == "T":
                raise FormulaError("raw T(...) survived reference pre-extraction")
            if val.isupper() or "_" in val:
                return Const(val)
        raise FormulaError(f"unexpected token {val!r} in {self.text!r}")


_REF_RE = re.compile(r"T\(\s*([^;()]*(?:\([^()]*\)[^;()]*)*?)\s*;")


def parse_formula(text: str, ref_lookup: Callable[[str], None] | None = None) -> Expr:
    """Parse a formula; T(...) references are pre-extracted textually."""
    # Replace each T(ID; bindings) with T_k(bindings) and remember ids,
    # because ids contain spaces/commas/parens that the tokenizer mangles.
    ids: list[str] = []

    def sub(m: re.Match) -> str:
        ids.append(m.group(1).strip())
        return f"TREF_{len(ids) - 1}("

    prepared = _REF_RE.sub(sub, text)

    parser = _P(prepared)

    def parse_ref_by_index(idx: int) -> Ref:
        bindings = []
        kind, val = parser.peek()
        if kind == "op" and val == ")":
            parser.next()
            return Ref(ids[idx], ())
        while True:
            kind, val = parser.next()
            if kind != "name":
                raise FormulaError(f"expected parameter name in reference, got {val!r}")
            pname = val
            parser.expect_op("=")
            ie = parser.parse_iexpr()
            bindings.append((pname, ie))
            kind, val = parser.next()
            if kind == "op" and val == ")":
                break
            if not (kind == "op" and val == ","):
                raise FormulaError(f"expected ',' or ')' in reference, got {val!r}")
        return Ref(ids[idx], tuple(bindings))

    # hook TREF_k into the atom parser
    orig_atom = parser.parse_atom

    def atom_with_refs() -> Expr:
        kind, val = parser.peek()
        if kind == "name" and val.startswith("TREF_"):
            parser.next()
            parser.expect_op("(")
            return parse_ref_by_index(int(val[5:]))
        return orig_atom()

    parser.parse_atom = atom_with_refs  # type: ignore[method-assign]
    node = parser.parse_expr()
    kind, val = parser.peek()
    if kind != "end":
        raise FormulaError(f"trailing tokens near {val!r} in {text!r}")
    return node


# -- evaluation ----------------------------------------------------------------


def evaluate(
    e: Expr,
    env: Env,
    resolve: Callable[[str, dict[str, int]], LaurentPoly2],
    constants: Mapping[str, LaurentPoly2],
    wheel_fn: Callable[[int], LaurentPoly2],
) -> LaurentPoly2:
    def ev(n) -> LaurentPoly2:
        if isinstance(n, Num):
            return LaurentPoly2.const(n.value)
        if isinstance(n, Var):
            k = n.exp.evaluate(env)
            return LaurentPoly2.x(k) if n.name == "x" else LaurentPoly2.y(k)
        if isinstance(n, Geom):
            return geom_sum(n.axis, n.arg.evaluate(env))
        if isinstance(n, Wheel):
            return wheel_fn(n.arg.evaluate(env))
        if isinstance(n, Swap):
            return ev(n.inner).swap_xy()
        if isinstance(n, Const):
            try:
                return constants[n.name]
            except KeyError:
                raise FormulaError(f"unknown constant {n.name!r}") from None
        if isinstance(n, Ref):
            sub = {name: ie.evaluate(env) for name, ie in n.bindings}
            return resolve(n.target, sub)
        if isinstance(n, BinOp):
            a, b = ev(n.left), ev(n.right)
            if n.op == "+":
                return a + b
            if n.op == "-":
                return a - b
            return a * b
        if isinstance(n, Pow):
            return ev(n.base) ** n.exp
        if isinstance(n, Neg):
            return -ev(n.inner)
        raise FormulaError(f"unknown node {n!r}")

    return ev(e)
