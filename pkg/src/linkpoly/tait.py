"""Checkerboard (Tait) graph construction for concrete Conway symbols.

Algebraic tangles become two-terminal series-parallel networks:

* the integer tangle n in chain position is an n-edge path;
* a product chain folds from the right, dualizing the tail, which realizes
  the continued-fraction network of the rational tangle (so "p" closes to
  the p-cycle and "p q" to a (p+1)-cycle with a q-fold edge);
* ramification components sit as parallel "columns" between two hubs; a
  chain component enters reversed (its own continued-fraction network read
  from the other end), which is what the source figures draw;
* a trailing "+t" adds a t-fold direct edge between the hubs.

Closing identifies the two terminals (equivalently: a parallel join is
closed by keeping its hubs).  Polyhedral symbols are built from per-family
templates: a base graph (K4 for the six-vertex star, the 4-spoke wheel for
the eight-vertex star, K5 minus an edge for the nine-vertex star) with each
parameter slot spliced across a recorded base edge, path-wise or dualized.

Which checkerboard color a family's published formula uses varies; each
supported family therefore carries a calibrated build record (slot edges,
orientations, and a dual flag), frozen in BUILD_RECORDS and validated
against the catalog by the test suite.  Families without a record are
unsupported by the builder (the catalog still evaluates them).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from .conway import (
    ConwayAst,
    IntTangle,
    Plus,
    Polyhedron,
    Product,
    Ramification,
    Slot,
    is_concrete,
    parse,
)
from .graphcore import MultiGraph, complete_graph, wheel_graph


class UnsupportedConstruct(ValueError):
    pass


# -- series-parallel networks -------------------------------------------------

EDGE = "e"
SPTree = Union[str, tuple]  # EDGE | ("s", [kids]) | ("p", [kids])


def ser(*kids: SPTree) -> SPTree:
    return ("s", list(kids))


def par(*kids: SPTree) -> SPTree:
    return ("p", list(kids))


def path_net(n: int) -> SPTree:
    return ("s", [EDGE] * n)


def bundle_net(n: int) -> SPTree:
    return ("p", [EDGE] * n)


def dual_net(t: SPTree) -> SPTree:
    if t == EDGE:
        return EDGE
    op, kids = t
    return ("p" if op == "s" else "s", [dual_net(k) for k in kids])


@dataclass(frozen=True)
class TwoTerminalGraph:
    """A multigraph with two distinguished terminal vertices."""

    graph: MultiGraph
    terminal_a: int
    terminal_b: int


class _Builder:
    def __init__(self) -> None:
        self.edges: list[tuple[int, int]] = []
        self.n = 0

    def vertex(self) -> int:
        self.n += 1
        return self.n - 1


def _materialize(t: SPTree, b: _Builder, a: int, z: int) -> None:
    if t == EDGE:
        b.edges.append((a, z))
        return
    op, kids = t
    if op == "s":
        if not kids:
            raise UnsupportedConstruct("empty series network (zero tangle) cannot be spliced")
        cur = a
        for i, k in enumerate(kids):
            nxt = z if i == len(kids) - 1 else b.vertex()
            _materialize(k, b, cur, nxt)
            cur = nxt
    else:
        for k in kids:
            _materialize(k, b, a, z)


def realize(t: SPTree) -> TwoTerminalGraph:
    b = _Builder()
    a, z = b.vertex(), b.vertex()
    _materialize(t, b, a, z)
    return TwoTerminalGraph(MultiGraph(b.n, b.edges), a, z)


def close(t: TwoTerminalGraph) -> MultiGraph:
    """Identify the terminals; the numerator closure of the tangle network."""
    g, a, z = t.graph, t.terminal_a, t.terminal_b
    if a == z:
        return g
    keep = z if a > z else a
    drop = a if a > z else z

    def relab(w: int) -> int:
        if w == drop:
            return keep
        if w == g.vertex_count - 1:
            return drop
        return w

    return MultiGraph(g.vertex_count - 1, [(relab(u), relab(v)) for u, v in g.edges])


# -- algebraic tangles ---------------------------------------------------------


def _as_chain(node) -> list[int] | None:
    """Integer list for a bare integer or product of integers, else None."""
    if isinstance(node, IntTangle):
        if node.param is not None:
            return None
        return [node.value]
    if isinstance(node, Product):
        out = []
        for f in node.factors:
            if not isinstance(f, IntTangle) or f.param is not None:
                return None
            out.append(f.value)
        return out
    return None


def chain_net(ints: list[int]) -> SPTree:
    """Continued-fraction network of an integer chain, read left to right."""
    if any(v < 0 for v in ints):
        raise UnsupportedConstruct("negative tangles are served by the catalog, not the builder")
    if len(ints) == 1:
        return path_net(ints[0])
    return ser(path_net(ints[0]), dual_net(chain_net(ints[1:])))


def column_net(component) -> SPTree:
    """Network of one ramification component, as drawn in a pretzel column."""
    chain = _as_chain(component)
    if chain is not None:
        return chain_net(chain[::-1])
    if isinstance(component, Ramification):
        return dual_net(par(*[column_net(c) for c in component.components]))
    raise UnsupportedConstruct(f"unsupported ramification component {component!r}")


def tangle_net(node) -> SPTree:
    """Two-terminal network of a concrete algebraic tangle."""
    if isinstance(node, IntTangle):
        if node.param is not None:
            raise UnsupportedConstruct("tangle still has unbound parameters")
        return path_net(node.value)
    if isinstance(node, Product):
        chain = _as_chain(node)
        if chain is not None:
            return chain_net(chain)
        has_block = any(isinstance(f, (Ramification, Plus)) for f in node.factors)
        has_int = any(isinstance(f, IntTangle) for f in node.factors)
        if has_block and has_int:
            # blocks separated by twists sit as a necklace: series of par-blocks
            # and twist paths, closed into a cycle
            parts = []
            for f in node.factors:
                if isinstance(f, IntTangle):
                    if f.param is not None:
                        raise UnsupportedConstruct("tangle still has unbound parameters")
                    parts.append(path_net(f.value))
                else:
                    parts.append(_factor_net(f))
            return ser(*parts)
        nets = [_factor_net(f) for f in node.factors]
        t = nets[-1]
        for f in reversed(nets[:-1]):
            t = ser(f, dual_net(t))
        return t
    if isinstance(node, Ramification):
        return ser(column_net(node.components[0]), par(*[column_net(c) for c in node.components[1:]]))
    if isinstance(node, Plus):
        if not isinstance(node.base, Ramification):
            raise UnsupportedConstruct("'+' twists are only built on ramifications")
        count = node.count
        if count.param is not None:
            raise UnsupportedConstruct("tangle still has unbound parameters")
        cols = [column_net(c) for c in node.base.components]
        return ser(cols[0], par(*cols[1:], bundle_net(count.value)))
    raise UnsupportedConstruct(f"unsupported tangle node {node!r}")


def _factor_net(node) -> SPTree:
    # product factors that are ramifications use the two-hub parallel form
    if isinstance(node, Ramification):
        return par(*[column_net(c) for c in node.components])
    if isinstance(node, Plus) and isinstance(node.base, Ramification):
        count = node.count
        if count.param is not None:
            raise UnsupportedConstruct("tangle still has unbound parameters")
        return par(*[column_net(c) for c in node.base.components], bundle_net(count.value))
    return tangle_net(node)


def build_tangle(ast: ConwayAst) -> TwoTerminalGraph:
    """Two-terminal Tait network of a concrete algebraic Conway tangle."""
    if isinstance(ast, Polyhedron):
        raise UnsupportedConstruct("polyhedral symbols use build_polyhedral")
    if not is_concrete(ast):
        raise UnsupportedConstruct("tangle still has unbound parameters")
    return realize(tangle_net(ast))


# -- polyhedral templates -------------------------------------------------------

# base graphs: edge lists are the splice positions referenced by the records
_K4 = complete_graph(4)
_WH5 = wheel_graph(5)
_K5E = MultiGraph(5, [(u, v) for u in range(5) for v in range(u + 1, 5) if (u, v) != (0, 1)])
# the nine-vertex star is not self-dual; families published in the other
# checkerboard color splice onto its planar dual, the triangular prism
_PRISM = MultiGraph(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3), (1, 4), (2, 5)])

_BASES = {"6*": _K4, "8*": _WH5, "9*": _K5E, "prism": _PRISM}


def splice(base: MultiGraph, fills: dict[int, SPTree]) -> MultiGraph:
    """Replace base edges by networks; fills maps edge index -> network."""
    b = _Builder()
    for _ in range(base.vertex_count):
        b.vertex()
    for i, (u, v) in enumerate(base.edges):
        net = fills.get(i)
        if net is None:
            b.edges.append((u, v))
        else:
            _materialize(net, b, u, v)
    return MultiGraph(b.n, b.edges)


def wheel_index(ast: Polyhedron) -> int | None:
    """Bound antiprismatic symbol -> wheel parameter, else None."""
    if ast.base != "(2n)*":
        return None
    if len(ast.slots) != 1 or not isinstance(ast.slots[0].tangle, IntTangle):
        raise UnsupportedConstruct("antiprismatic symbol must be bound first")
    return ast.slots[0].tangle.value


def build_polyhedral(ast: Polyhedron, record: "PolyRecord | None" = None) -> MultiGraph:
    """Template build of a concrete polyhedral symbol.

    ``record`` supplies the slot-edge assignment; without one, only the bare
    basic polyhedra (all slots 1) and the antiprismatic wheels are built.
    """
    n = wheel_index(ast)
    if n is not None:
        return wheel_graph(n + 1)
    base = _BASES.get(ast.base)
    if base is None:
        raise UnsupportedConstruct(f"unsupported basic polyhedron {ast.base!r}")
    tangles = [s.tangle for s in ast.slots]
    if record is None:
        if all(isinstance(t, IntTangle) and t.value == 1 for t in tangles):
            return base
        raise UnsupportedConstruct("polyhedral slots need a calibrated template record")
    if record.base:
        base = _BASES[record.base]
    if len(tangles) != len(record.slots):
        raise UnsupportedConstruct("slot count does not match the template record")
    fills: dict[int, SPTree] = {}
    for t, (edge_idx, mode) in zip(tangles, record.slots):
        net = _slot_net(t, mode)
        fills[edge_idx] = net
    g = splice(base, fills)
    return g


def _slot_net(tangle, mode: str) -> SPTree:
    reverse = mode in ("rev", "revdual")
    chain = _as_chain(tangle)
    if chain is not None:
        net = chain_net(chain[::-1] if reverse else chain)
    elif isinstance(tangle, Ramification):
        net = par(*[column_net(c) for c in tangle.components])
    elif isinstance(tangle, Plus) and isinstance(tangle.base, Ramification):
        count = tangle.count
        if count.param is not None:
            raise UnsupportedConstruct("slot tangle still has unbound parameters")
        net = par(*[column_net(c) for c in tangle.base.components], bundle_net(count.value))
    else:
        raise UnsupportedConstruct(f"unsupported slot tangle {tangle!r}")
    if mode in ("dual", "revdual"):
        net = dual_net(net)
    elif mode not in ("plain", "rev"):
        raise ValueError(f"unknown slot mode {mode!r}")
    return net


# -- per-family build records ----------------------------------------------------


@dataclass(frozen=True)
class AlgRecord:
    """Algebraic family: build by the generic tangle rules; dual -> emit the
    planar dual (the published formula uses the other checkerboard color)."""

    dual: bool = False


@dataclass(frozen=True)
class PolyRecord:
    """Polyhedral family: slot i of the symbol is spliced across base edge
    slots[i][0] with orientation slots[i][1] ('plain' | 'dual' | 'rev' |
    'revdual').  base overrides the symbol's basic polyhedron ('prism' is
    the planar dual of the nine-vertex star)."""

    slots: tuple[tuple[int, str], ...]
    base: str = ""


@dataclass(frozen=True)
class NetRecord:
    """Exceptional family: an explicit series-parallel template.

    Leaves: ('e',) an edge; ('path', name) / ('bundle', name) a parameter
    twist region; nodes: ('s', [...]) series, ('p', [...]) parallel.
    dual emits the planar-dual graph (the published formula's color)."""

    template: tuple
    dual: bool = False


# Frozen by scripts/calibrate_builder.py: every record reproduces the catalog
# value exactly on the calibration grid; test_tait revalidates on {2,3,4}.
BUILD_RECORDS: dict[str, AlgRecord | PolyRecord | NetRecord] = {}


def supported_families() -> list[str]:
    return sorted(BUILD_RECORDS)


def build_family(family_id: str, params: dict[str, int]) -> MultiGraph:
    """Tait graph of a family member, matching the catalog's convention."""
    record = BUILD_RECORDS.get(family_id)
    if record is None:
        raise UnsupportedConstruct(f"no Tait builder for family {family_id!r}")
    from .conway import bind

    ast = bind(parse(family_id), params)
    return build_concrete(ast, record, params)


def _template_net(template, params: dict[str, int]) -> SPTree:
    kind = template[0]
    if kind == "e":
        return EDGE
    if kind == "path":
        return path_net(params[template[1]])
    if kind == "bundle":
        return bundle_net(params[template[1]])
    if kind in ("s", "p"):
        return (kind, [_template_net(t, params) for t in template[1]])
    raise ValueError(f"bad template node {template!r}")


def build_concrete(
    ast: ConwayAst,
    record: AlgRecord | PolyRecord | NetRecord | None = None,
    params: dict[str, int] | None = None,
) -> MultiGraph:
    """Tait graph of a concrete symbol (record optional for plain builds)."""
    if isinstance(record, NetRecord):
        if params is None:
            raise ValueError("NetRecord builds need the parameter binding")
        net = _template_net(record.template, params)
        if record.dual:
            return realize(dual_net(net)).graph
        return close(realize(net))
    if isinstance(ast, Polyhedron):
        rec = record if isinstance(record, PolyRecord) else None
        return build_polyhedral(ast, rec)
    net = tangle_net(ast)
    if isinstance(record, AlgRecord) and record.dual:
        # planar dual of close_identify(N) is close_forget(dual N): realize the
        # dual network and keep its terminals separate
        return realize(dual_net(net)).graph
    return close(realize(net))
