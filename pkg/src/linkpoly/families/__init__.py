"""Data-driven catalog of Tutte-polynomial family formulas.

Every family is one entry in ``catalog.txt``: an id (the family's Conway
symbol), an ordinal index, and a formula in the small expression DSL.
Entries reference each other (resolution recursions are sums of products of
other entries); the reference graph is checked acyclic at load.

``eval_family(id, params)`` returns the exact LaurentPoly2 value for any
integer parameters (negative values give the Laurent extension).
``eval_wheel(n)`` is the antiprismatic wheel family, computed radical-free.
"""

from __future__ import annotations

import importlib.resources
from dataclasses import dataclass
from functools import lru_cache

from ..conway import parse as conway_parse, parameters as conway_parameters
from ..poly import LaurentPoly2, ONE, X, Y
from . import dsl


class CatalogError(KeyError):
    pass


class ArityError(ValueError):
    pass


@dataclass(frozen=True)
class FamilyEntry:
    """One catalog record: a family id bound to a formula expression."""

    id: str
    index: int  # ordinal position in the catalog (1-based); 0 for aux entries
    params: tuple[str, ...]
    expr: object
    kind: str  # "family" | "aux"
    note: str = ""

    @property
    def arity(self) -> int:
        return len(self.params)


@dataclass(frozen=True)
class FixedPolynomial:
    name: str
    value: LaurentPoly2


def eval_wheel(n: int) -> LaurentPoly2:
    """Wheel-family Tutte value for the antiprismatic basic polyhedra.

    w_k = (1+x+y) w_{k-1} - xy w_{k-2}, w_0 = 2, w_1 = 1+x+y; returns
    w_n + xy - x - y - 1.  (The two radical terms of the closed form are the
    roots of z^2 - (1+x+y) z + xy, so their power sum satisfies this
    recurrence and no radicals are needed.)
    """
    if n < 1:
        raise ValueError("wheel parameter must be >= 1")
    s = ONE + X + Y
    pxy = X * Y
    w_prev, w = LaurentPoly2.const(2), s
    for _ in range(n - 1):
        w_prev, w = w, s * w - pxy * w_prev
    return w + pxy - X - Y - 1


class Catalog:
    def __init__(self, entries: dict[str, FamilyEntry], constants: dict[str, LaurentPoly2]):
        self.entries = entries
        self.constants = constants
        self._check_acyclic()

    def _check_acyclic(self) -> None:
        color: dict[str, int] = {}

        def visit(eid: str, trail: tuple[str, ...]) -> None:
            state = color.get(eid, 0)
            if state == 1:
                raise dsl.FormulaError(f"reference cycle: {' -> '.join(trail + (eid,))}")
            if state == 2:
                return
            color[eid] = 1
            entry = self.entries.get(eid)
            if entry is None:
                raise dsl.FormulaError(f"unknown reference target {eid!r} (from {trail})")
            for tgt in dsl.references(entry.expr):
                visit(tgt, trail + (eid,))
            color[eid] = 2

        for eid in self.entries:
            visit(eid, ())

    def eval(self, family_id: str, params: dict[str, int]) -> LaurentPoly2:
        entry = self.entries.get(family_id)
        if entry is None:
            raise CatalogError(f"unknown family {family_id!r}")
        missing = [p for p in entry.params if p not in params]
        extra = [p for p in params if p not in entry.params]
        if missing or extra:
            raise ArityError(
                f"family {family_id!r} takes parameters ({', '.join(entry.params)});"
                f" missing {missing}, unexpected {extra}"
            )
        return self._eval_entry(entry, {p: int(params[p]) for p in entry.params})

    def _eval_entry(self, entry: FamilyEntry, env: dict[str, int]) -> LaurentPoly2:
        key = (entry.id, tuple(sorted(env.items())))
        return self._eval_cached(key)

    @lru_cache(maxsize=100_000)  # noqa: B019 - catalog instances are singletons
    def _eval_cached(self, key) -> LaurentPoly2:
        eid, env_items = key
        entry = self.entries[eid]
        env = dict(env_items)

        def resolve(target: str, sub: dict[str, int]) -> LaurentPoly2:
            tgt = self.entries.get(target)
            if tgt is None:
                raise CatalogError(f"unknown family {target!r} referenced from {eid!r}")
            missing = [p for p in tgt.params if p not in sub]
            if missing:
                raise ArityError(f"reference to {target!r} missing {missing}")
            return self._eval_entry(tgt, sub)

        return dsl.evaluate(entry.expr, env, resolve, self.constants, eval_wheel)

    def families(self) -> list[FamilyEntry]:
        return sorted(
            (e for e in self.entries.values() if e.kind == "family"), key=lambda e: e.index
        )


def _parse_catalog(text: str) -> Catalog:
    entries: dict[str, FamilyEntry] = {}
    constants: dict[str, LaurentPoly2] = {}
    block_header: tuple[str, str, str] | None = None  # (kind, label, note)
    lines_acc: list[str] = []

    def flush() -> None:
        nonlocal block_header, lines_acc
        if block_header is None:
            return
        kind, label, note = block_header
        body = " ".join(ln.strip() for ln in lines_acc if ln.strip())
        if not body:
            raise dsl.FormulaError(f"empty body for {label!r}")
        if kind == "const":
            constants[label] = LaurentPoly2.from_text(body)
        else:
            if kind == "aux":
                eid, params_s = label.split("|", 1)
                eid = eid.strip()
                params = tuple(p.strip() for p in params_s.split("=", 1)[1].split(",") if p.strip())
                index = 0
            else:
                index = int(kind)
                eid = label.strip()
                params = tuple(conway_parameters(conway_parse(eid)))
            expr = dsl.parse_formula(body)
            loose = dsl.free_parameters(expr) - set(params)
            if loose:
                raise dsl.FormulaError(f"entry {eid!r} uses unbound parameters {sorted(loose)}")
            if eid in entries:
                raise dsl.FormulaError(f"duplicate entry id {eid!r}")
            entries[eid] = FamilyEntry(eid, index, params, expr, "aux" if kind == "aux" else "family", note)
        block_header = None
        lines_acc = []

    for raw in text.splitlines():
        if raw.strip().startswith("#") or not raw.strip():
            continue
        if raw.startswith("["):
            flush()
            head, _, rest = raw.partition("]")
            kind = head[1:].strip()
            label = rest.strip()
            note = ""
            if " ## " in label:
                label, note = (s.strip() for s in label.split(" ## ", 1))
            block_header = (kind, label, note)
        else:
            if block_header is None:
                raise dsl.FormulaError(f"formula line outside any entry: {raw!r}")
            lines_acc.append(raw)
    flush()
    return Catalog(entries, constants)


@lru_cache(maxsize=1)
def load_catalog() -> Catalog:
    text = importlib.resources.files(__package__).joinpath("catalog.txt").read_text("utf-8")
    return _parse_catalog(text)


# -- module-level convenience API ---------------------------------------------


def eval_family(family_id: str, params: dict[str, int]) -> LaurentPoly2:
    """Exact Tutte value of a family at integer parameters (negatives allowed)."""
    return load_catalog().eval(family_id, params)


def list_families() -> list[tuple[str, int, int]]:
    """(id, arity, index) for every family entry, in stable catalog order."""
    return [(e.id, e.arity, e.index) for e in load_catalog().families()]


def family_entry(family_id: str) -> FamilyEntry:
    entry = load_catalog().entries.get(family_id)
    if entry is None:
        raise CatalogError(f"unknown family {family_id!r}")
    return entry


def fixed_polynomials() -> dict[str, LaurentPoly2]:
    return dict(load_catalog().constants)
