"""Exact Tutte polynomial engine by deletion-contraction.

The recursion: T = 1 on edgeless graphs; a bridge contributes a factor x, a
loop a factor y; otherwise T(G) = T(G-e) + T(G/e).  The engine strips all
loops and bridges first, factors the rest into biconnected blocks (T is
multiplicative over one-point unions), and pivots on a maximum-multiplicity
parallel edge, which collapses the twist regions of Tait graphs fast.
Disconnected input is handled multiplicatively over components.

Memoization is keyed by the canonical adjacency encoding from
``graphcore.canonical_key``; the key is the full encoding, compared exactly.

Everything here is pure; a cache may be shared between calls (all writers
compute identical values for a key, so concurrent last-writer-wins races are
benign).
"""

from __future__ import annotations

from .graphcore import (
    MultiGraph,
    block_decompose,
    canonical_key,
    contract_edge,
    delete_edge,
    find_bridges,
)
from .poly import ONE, LaurentPoly2, X, Y

UNCACHED_EDGE_BUDGET = 14


def tutte(g: MultiGraph, cache: dict[bytes, LaurentPoly2] | None = None) -> LaurentPoly2:
    """Exact Tutte polynomial of g (components multiply)."""
    if cache is None:
        cache = {}
    result = ONE
    for comp_graph in _component_graphs(g):
        result = result * _tutte_connected(comp_graph, cache)
    return result


def _component_graphs(g: MultiGraph):
    comps = g.components()
    if len(comps) <= 1:
        if g.edge_count or g.vertex_count <= 1:
            yield g
            return
        yield g
        return
    for comp in comps:
        index = {w: i for i, w in enumerate(sorted(comp))}
        members = set(comp)
        edges = [(index[u], index[v]) for u, v in g.edges if u in members]
        yield MultiGraph(len(comp), edges)


def _tutte_connected(g: MultiGraph, cache: dict[bytes, LaurentPoly2]) -> LaurentPoly2:
    if g.edge_count == 0:
        return ONE

    # strip loops and bridges, then factor into blocks
    dec = block_decompose(g)
    result = ONE
    if dec.loop_count:
        result = result * Y ** dec.loop_count
    if dec.bridge_count:
        result = result * X ** dec.bridge_count
    for block in dec.blocks:
        result = result * _tutte_block(block, cache)
    return result


def _tutte_block(g: MultiGraph, cache: dict[bytes, LaurentPoly2]) -> LaurentPoly2:
    """g biconnected with >= 2 edges, no loops, no bridges."""
    key = canonical_key(g)
    hit = cache.get(key)
    if hit is not None:
        return hit

    e = _pivot_edge(g)
    value = _tutte_connected(delete_edge(g, e), cache) + _tutte_connected(contract_edge(g, e), cache)
    cache[key] = value
    return value


def _pivot_edge(g: MultiGraph) -> int:
    """Index of an edge of maximum parallel multiplicity."""
    mult: dict[tuple[int, int], int] = {}
    for u, v in g.edges:
        mult[(u, v)] = mult.get((u, v), 0) + 1
    best = max(mult, key=lambda k: mult[k])
    for i, uv in enumerate(g.edges):
        if uv == best:
            return i
    raise AssertionError("unreachable")


def tutte_uncached(g: MultiGraph) -> LaurentPoly2:
    """Plain four-case recursion, no memo, no block factoring.

    Guarded to <= UNCACHED_EDGE_BUDGET edges; an independent oracle for the
    optimized engine.
    """
    if g.edge_count > UNCACHED_EDGE_BUDGET:
        raise ValueError(
            f"tutte_uncached limited to {UNCACHED_EDGE_BUDGET} edges, got {g.edge_count}"
        )
    return _tutte_plain(g)


def _tutte_plain(g: MultiGraph) -> LaurentPoly2:
    if g.edge_count == 0:
        return ONE
    e = 0
    u, v = g.edges[e]
    if u == v:
        return Y * _tutte_plain(delete_edge(g, e))
    if e in find_bridges(g):
        return X * _tutte_plain(contract_edge(g, e))
    return _tutte_plain(delete_edge(g, e)) + _tutte_plain(contract_edge(g, e))
