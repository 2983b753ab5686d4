"""Parser for the Conway-notation subset used by the family catalog.

Grammar (EBNF-ish; whitespace is the product operator and is significant):

    symbol      = polyhedral | tangle
    tangle      = ramification
    ramification= product ("," product)* [plus]
    plus        = "+" [atom]            ; trailing twists, count defaults to 1
    product     = factor (" " factor)*
    factor      = integer | parameter | "(" tangle ")"
    integer     = ["-"] digits
    parameter   = one of p q r s t n
    polyhedral  = base slots
    base        = "6*" | "8*" | "9*" | "(2n)*" | ""   ; leading "." implies 6*
    slots       = [slot] (separator slot)*
    separator   = "." | ":" | "::" | ":."
    slot        = tangle [" 0"]          ; trailing 0 marks the rotated fill

A symbol is polyhedral iff it starts with a base prefix or a "." or contains a
slot separator at top level.  Anything outside this grammar is a parse error
naming the offending token and position.

Parameters stay symbolic in the AST; ``bind`` substitutes integers, rejecting
|value| < 2 for parameter slots (growing a twist region below two crossings
leaves the family).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Union

PARAM_NAMES = ("p", "q", "r", "s", "t", "n")
SEPARATORS = ("::", ":.", ":", ".")
POLY_BASES = ("6*", "8*", "9*", "(2n)*")


class ConwayParseError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class BindError(ValueError):
    pass


@dataclass(frozen=True)
class IntTangle:
    """Integer tangle, possibly a named parameter with integer offset (p, p+1, ...)."""

    value: int = 0
    param: str | None = None

    def is_concrete(self) -> bool:
        return self.param is None

    def render(self) -> str:
        if self.param is None:
            return str(self.value)
        if self.value == 0:
            return self.param
        return f"{self.param}{self.value:+d}"


@dataclass(frozen=True)
class Product:
    factors: tuple["Tangle", ...]

    def render(self) -> str:
        return " ".join(_render_factor(f) for f in self.factors)


@dataclass(frozen=True)
class Ramification:
    components: tuple["Tangle", ...]

    def render(self) -> str:
        return ",".join(c.render() for c in self.components)


@dataclass(frozen=True)
class Plus:
    """base with extra twists appended; count may itself be a parameter."""

    base: "Tangle"
    count: IntTangle

    def render(self) -> str:
        b = self.base.render()
        if self.count == IntTangle(1):
            return f"{b}+"
        return f"{b}+{self.count.render()}"


@dataclass(frozen=True)
class Slot:
    sep: str  # separator preceding this slot ("" for the first)
    tangle: "Tangle"
    rotated: bool = False  # trailing "0" position marker

    def render(self) -> str:
        t = self.tangle.render()
        if isinstance(self.tangle, (Ramification, Plus)):
            t = f"({t})"
        if self.rotated:
            t += " 0"
        return self.sep + t


@dataclass(frozen=True)
class Polyhedron:
    base: str  # "6*", "8*", "9*", "(2n)*"
    slots: tuple[Slot, ...] = field(default_factory=tuple)
    explicit_base: bool = True  # False when written with the leading-dot shorthand

    def render(self) -> str:
        body = "".join(s.render() for s in self.slots)
        if not self.explicit_base and self.base == "6*":
            return body
        return self.base + body


Tangle = Union[IntTangle, Product, Ramification, Plus]
ConwayAst = Union[Tangle, Polyhedron]


def _render_factor(f: Tangle) -> str:
    if isinstance(f, (Ramification, Plus)) or (isinstance(f, Product) and len(f.factors) > 1):
        return f"({f.render()})"
    return f.render()


def render(ast: ConwayAst) -> str:
    return ast.render()


# -- tokenizer / parser ------------------------------------------------------


class _Scanner:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def peek(self) -> str:
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def error(self, msg: str) -> ConwayParseError:
        return ConwayParseError(msg, self.pos)

    def startswith(self, s: str) -> bool:
        return self.text.startswith(s, self.pos)

    def take(self, s: str) -> None:
        if not self.startswith(s):
            raise self.error(f"expected {s!r}")
        self.pos += len(s)

    def at_end(self) -> bool:
        return self.pos >= len(self.text)


def parse(symbol: str) -> ConwayAst:
    """Parse a Conway symbol into an AST; parameters stay symbolic."""
    text = symbol.strip()
    if not text:
        raise ConwayParseError("empty symbol", 0)
    if _looks_polyhedral(text):
        return _parse_polyhedral(text)
    sc = _Scanner(text)
    t = _parse_tangle(sc)
    if not sc.at_end():
        raise sc.error(f"unexpected trailing input {sc.text[sc.pos:]!r}")
    return t


def _looks_polyhedral(text: str) -> bool:
    if text.startswith(".") or any(text.startswith(b) for b in POLY_BASES):
        return True
    # a separator at paren depth 0 implies an implicit 6* base
    depth = 0
    for ch in text:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif ch in ".:" and depth == 0:
            return True
    return False


def _parse_int_or_param(sc: _Scanner) -> IntTangle:
    start = sc.pos
    ch = sc.peek()
    if ch in PARAM_NAMES:
        sc.pos += 1
        return IntTangle(0, ch)
    neg = False
    if ch == "-":
        neg = True
        sc.pos += 1
        ch = sc.peek()
        if ch in PARAM_NAMES:
            raise ConwayParseError("negated parameters are written via bindings, not symbols", start)
    if not ch.isdigit():
        raise ConwayParseError(f"expected integer or parameter, found {ch!r}", sc.pos)
    digits = ""
    while sc.peek().isdigit():
        digits += sc.peek()
        sc.pos += 1
    v = int(digits)
    return IntTangle(-v if neg else v)


def _parse_factor(sc: _Scanner) -> Tangle:
    if sc.peek() == "(":
        sc.take("(")
        inner = _parse_tangle(sc)
        if sc.peek() != ")":
            raise sc.error("expected ')'")
        sc.take(")")
        return inner
    return _parse_int_or_param(sc)


def _parse_product(sc: _Scanner, in_slot: bool = False) -> Tangle:
    factors = [_parse_factor(sc)]
    while True:
        save = sc.pos
        if sc.peek() != " ":
            break
        sc.pos += 1
        ch = sc.peek()
        if ch == "" or ch in ",)+" or ch in ".:":
            sc.pos = save
            break
        if in_slot and ch == "0":
            # a trailing standalone 0 is the slot's rotation marker
            after = sc.pos + 1
            nxt = sc.text[after] if after < len(sc.text) else ""
            if not nxt.isdigit():
                sc.pos = save
                break
        factors.append(_parse_factor(sc))
    if len(factors) == 1:
        return factors[0]
    return Product(tuple(factors))


def _parse_tangle(sc: _Scanner) -> Tangle:
    comps = [_parse_product(sc)]
    while sc.peek() == ",":
        sc.take(",")
        comps.append(_parse_product(sc))
    base: Tangle = comps[0] if len(comps) == 1 else Ramification(tuple(comps))
    if sc.peek() == "+":
        sc.take("+")
        ch = sc.peek()
        if ch.isdigit() or ch in PARAM_NAMES or ch == "(":
            count_t = _parse_factor(sc)
            if not isinstance(count_t, IntTangle):
                raise sc.error("twist count after '+' must be an integer or parameter")
            count = count_t
        elif ch == "+":
            sc.take("+")
            count = IntTangle(2)
        else:
            count = IntTangle(1)
        return Plus(base, count)
    return base


def _parse_polyhedral(text: str) -> Polyhedron:
    sc = _Scanner(text)
    base = "6*"
    explicit = False
    for b in POLY_BASES:
        if sc.startswith(b):
            sc.take(b)
            base = b
            explicit = True
            break
    slots: list[Slot] = []
    first = True
    while not sc.at_end():
        sep = ""
        for s in SEPARATORS:
            if sc.startswith(s):
                sc.take(s)
                sep = s
                break
        if not first and not sep:
            raise sc.error("expected slot separator")
        if sc.at_end():
            if sep:
                raise sc.error("dangling separator")
            break
        tangle = _parse_product(sc, in_slot=True)
        # a '+...' suffix may follow a slot tangle (e.g. inside 8* fills)
        if sc.peek() == "+":
            sc.take("+")
            ch = sc.peek()
            if ch.isdigit() or ch in PARAM_NAMES:
                tangle = Plus(tangle, _parse_int_or_param(sc))
            else:
                tangle = Plus(tangle, IntTangle(1))
        rotated = False
        if sc.startswith(" 0") and not (len(sc.text) > sc.pos + 2 and sc.text[sc.pos + 2].isdigit()):
            sc.pos += 2
            rotated = True
        slots.append(Slot(sep, tangle, rotated))
        first = False
    if explicit and not slots and base not in ("6*", "8*", "9*", "(2n)*"):
        raise sc.error("empty polyhedral symbol")
    return Polyhedron(base, tuple(slots), explicit_base=explicit)


# -- parameters and binding ---------------------------------------------------


def parameters(ast: ConwayAst) -> list[str]:
    """Parameter names in order of first appearance."""
    seen: list[str] = []

    def walk(node) -> None:
        if isinstance(node, IntTangle):
            if node.param and node.param not in seen:
                seen.append(node.param)
        elif isinstance(node, Product):
            for f in node.factors:
                walk(f)
        elif isinstance(node, Ramification):
            for c in node.components:
                walk(c)
        elif isinstance(node, Plus):
            walk(node.base)
            walk(node.count)
        elif isinstance(node, Polyhedron):
            if node.base == "(2n)*" and "n" not in seen:
                seen.append("n")
            for s in node.slots:
                walk(s.tangle)
        else:
            raise TypeError(f"unknown node {node!r}")

    walk(ast)
    return seen


def bind(ast: ConwayAst, params: dict[str, int]) -> ConwayAst:
    """Substitute parameter values, producing a fully concrete AST.

    Substituted slots must end with |value| >= 2 (one crossing or none leaves
    the family); literal tangles written in the symbol are untouched.
    """
    needed = parameters(ast)
    missing = [p for p in needed if p not in params]
    if missing:
        raise BindError(f"missing bindings for {', '.join(missing)}")

    def walk(node):
        if isinstance(node, IntTangle):
            if node.param is None:
                return node
            v = params[node.param] + node.value
            if abs(v) < 2:
                raise BindError(
                    f"parameter {node.param} -> {v}: substituted slots need |value| >= 2"
                )
            return IntTangle(v)
        if isinstance(node, Product):
            return Product(tuple(walk(f) for f in node.factors))
        if isinstance(node, Ramification):
            return Ramification(tuple(walk(c) for c in node.components))
        if isinstance(node, Plus):
            count = node.count
            if count.param is not None:
                cv = params[count.param] + count.value
                if cv < 1:
                    raise BindError(f"twist count {count.param} -> {cv} must be >= 1")
                count = IntTangle(cv)
            return Plus(walk(node.base), count)
        if isinstance(node, Polyhedron):
            if node.base == "(2n)*":
                n = params["n"]
                if n < 2:
                    raise BindError("antiprismatic polyhedra need n >= 2")
                # the bound wheel index is carried as a single pseudo-slot
                return Polyhedron("(2n)*", (Slot("", IntTangle(n), False),), True)
            return Polyhedron(
                node.base,
                tuple(Slot(s.sep, walk(s.tangle), s.rotated) for s in node.slots),
                node.explicit_base,
            )
        raise TypeError(f"unknown node {node!r}")

    return walk(ast)


def is_concrete(ast: ConwayAst) -> bool:
    return not parameters(ast)
