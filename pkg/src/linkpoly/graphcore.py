"""Undirected multigraphs with loops: the Tait-graph substrate.

Edges are an indexed list of unordered endpoint pairs, so parallel edges are
first-class (contracted cycles and twist regions need multiplicities).
Graphs are immutable; deletion/contraction return new graphs.

Crossing signs are not stored: the Tutte computation never consumes them.

``canonical_key`` produces a true canonical form (refinement plus
individualization on ties), so the engine's memo table compares exact
canonical adjacency encodings and never relies on hash collision-freedom.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence


class MultiGraph:
    """Immutable undirected multigraph; loops and parallel edges allowed."""

    __slots__ = ("vertex_count", "edges")

    def __init__(self, vertex_count: int, edges: Iterable[tuple[int, int]]):
        es = []
        for u, v in edges:
            if not (0 <= u < vertex_count and 0 <= v < vertex_count):
                raise ValueError(f"edge ({u},{v}) out of range for {vertex_count} vertices")
            es.append((u, v) if u <= v else (v, u))
        object.__setattr__(self, "vertex_count", vertex_count)
        object.__setattr__(self, "edges", tuple(es))

    def __setattr__(self, *a):
        raise AttributeError("MultiGraph is immutable")

    def __repr__(self) -> str:
        return f"MultiGraph({self.vertex_count}, {list(self.edges)})"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MultiGraph):
            return NotImplemented
        return self.vertex_count == other.vertex_count and sorted(self.edges) == sorted(other.edges)

    def __hash__(self) -> int:
        return hash((self.vertex_count, tuple(sorted(self.edges))))

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def adjacency(self) -> list[list[tuple[int, int]]]:
        """adj[u] = list of (neighbor, edge_index); loops appear twice."""
        adj: list[list[tuple[int, int]]] = [[] for _ in range(self.vertex_count)]
        for i, (u, v) in enumerate(self.edges):
            adj[u].append((v, i))
            if u != v:
                adj[v].append((u, i))
            else:
                adj[u].append((v, i))
        return adj

    def components(self) -> list[list[int]]:
        seen = [False] * self.vertex_count
        adj = self.adjacency()
        comps = []
        for s in range(self.vertex_count):
            if seen[s]:
                continue
            stack = [s]
            seen[s] = True
            comp = []
            while stack:
                u = stack.pop()
                comp.append(u)
                for v, _ in adj[u]:
                    if not seen[v]:
                        seen[v] = True
                        stack.append(v)
            comps.append(comp)
        return comps

    def component_count(self) -> int:
        return len(self.components())

    # -- text format --------------------------------------------------------

    def to_text(self) -> str:
        lines = [f"vertices {self.vertex_count}"]
        lines += [f"{u} {v}" for u, v in self.edges]
        return "\n".join(lines) + "\n"

    @staticmethod
    def from_text(text: str) -> "MultiGraph":
        lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
        if not lines or not lines[0].startswith("vertices"):
            raise ValueError("graph text must start with 'vertices N'")
        n = int(lines[0].split()[1])
        edges = []
        for ln in lines[1:]:
            parts = ln.split()
            if len(parts) != 2:
                raise ValueError(f"bad edge line: {ln!r}")
            edges.append((int(parts[0]), int(parts[1])))
        return MultiGraph(n, edges)


# -- edge-local operations ---------------------------------------------------


def delete_edge(g: MultiGraph, e: int) -> MultiGraph:
    if not (0 <= e < len(g.edges)):
        raise IndexError(f"edge index {e} out of range")
    return MultiGraph(g.vertex_count, g.edges[:e] + g.edges[e + 1 :])


def contract_edge(g: MultiGraph, e: int) -> MultiGraph:
    """Merge the endpoints of edge e; parallel mates become loops.

    Contracting a loop is rejected: the Tutte recursion strips loops before
    contraction can apply to one.
    """
    if not (0 <= e < len(g.edges)):
        raise IndexError(f"edge index {e} out of range")
    u, v = g.edges[e]
    if u == v:
        raise ValueError("cannot contract a loop")
    # relabel: v merges into u, last vertex slides into v's slot
    def relabel(w: int) -> int:
        if w == v:
            return u
        if w == g.vertex_count - 1:
            return v if v != g.vertex_count - 1 else u
        return w

    edges = []
    for i, (a, b) in enumerate(g.edges):
        if i == e:
            continue
        edges.append((relabel(a), relabel(b)))
    return MultiGraph(g.vertex_count - 1, edges)


def is_loop(g: MultiGraph, e: int) -> bool:
    u, v = g.edges[e]
    return u == v


def classify_edge(g: MultiGraph, e: int) -> str:
    """'loop' | 'bridge' | 'ordinary'."""
    if not (0 <= e < len(g.edges)):
        raise IndexError(f"edge index {e} out of range")
    u, v = g.edges[e]
    if u == v:
        return "loop"
    if e in find_bridges(g):
        return "bridge"
    return "ordinary"


def find_bridges(g: MultiGraph) -> set[int]:
    """Edge indices whose removal increases the component count.

    Iterative DFS lowpoint computation; a parallel pair is never a bridge.
    """
    n = g.vertex_count
    adj = [[] for _ in range(n)]
    for i, (u, v) in enumerate(g.edges):
        if u != v:
            adj[u].append((v, i))
            adj[v].append((u, i))
    disc = [-1] * n
    low = [0] * n
    bridges: set[int] = set()
    timer = 0
    for s in range(n):
        if disc[s] != -1:
            continue
        stack: list[tuple[int, int, int]] = [(s, -1, 0)]  # (vertex, in-edge, child cursor)
        while stack:
            u, pe, ci = stack[-1]
            if ci == 0:
                disc[u] = low[u] = timer
                timer += 1
            if ci < len(adj[u]):
                stack[-1] = (u, pe, ci + 1)
                v, ei = adj[u][ci]
                if ei == pe:
                    continue
                if disc[v] != -1:
                    low[u] = min(low[u], disc[v])
                else:
                    stack.append((v, ei, 0))
            else:
                stack.pop()
                if stack:
                    p = stack[-1][0]
                    low[p] = min(low[p], low[u])
                    if low[u] > disc[p]:
                        bridges.add(pe)
    return bridges


# -- block decomposition -----------------------------------------------------


@dataclass(frozen=True)
class BlockDecomposition:
    """Maximal biconnected pieces plus separated bridges and loops.

    Invariant: sum of block edge counts + bridge_count + loop_count equals the
    original edge count.
    """

    blocks: tuple[MultiGraph, ...]
    bridge_count: int
    loop_count: int


def block_decompose(g: MultiGraph) -> BlockDecomposition:
    """Split into maximal biconnected subgraphs (>= 2 edges), bridges, loops."""
    n = g.vertex_count
    loop_count = sum(1 for u, v in g.edges if u == v)
    adj = [[] for _ in range(n)]
    for i, (u, v) in enumerate(g.edges):
        if u != v:
            adj[u].append((v, i))
            adj[v].append((u, i))
    disc = [-1] * n
    low = [0] * n
    edge_stack: list[int] = []
    raw_blocks: list[list[int]] = []
    timer = 0
    for s in range(n):
        if disc[s] != -1 or not adj[s]:
            continue
        stack: list[tuple[int, int, int]] = [(s, -1, 0)]
        while stack:
            u, pe, ci = stack[-1]
            if ci == 0:
                disc[u] = low[u] = timer
                timer += 1
            if ci < len(adj[u]):
                stack[-1] = (u, pe, ci + 1)
                v, ei = adj[u][ci]
                if ei == pe:
                    continue
                if disc[v] != -1:
                    if disc[v] < disc[u]:
                        edge_stack.append(ei)
                        low[u] = min(low[u], disc[v])
                else:
                    edge_stack.append(ei)
                    stack.append((v, ei, 0))
            else:
                stack.pop()
                if stack:
                    p = stack[-1][0]
                    low[p] = min(low[p], low[u])
                    if low[u] >= disc[p]:
                        # pop the biconnected component rooted at edge pe
                        comp = []
                        while True:
                            ei = edge_stack.pop()
                            comp.append(ei)
                            if ei == pe:
                                break
                        raw_blocks.append(comp)
    blocks = []
    bridge_count = 0
    for comp in raw_blocks:
        if len(comp) == 1:
            bridge_count += 1
            continue
        verts = sorted({w for ei in comp for w in g.edges[ei]})
        index = {w: i for i, w in enumerate(verts)}
        edges = [(index[g.edges[ei][0]], index[g.edges[ei][1]]) for ei in sorted(comp)]
        blocks.append(MultiGraph(len(verts), edges))
    return BlockDecomposition(tuple(blocks), bridge_count, loop_count)


def cut_vertices(g: MultiGraph) -> set[int]:
    """Articulation vertices (removal increases component count)."""
    n = g.vertex_count
    base = g.component_count()
    out = set()
    for w in range(n):
        index = {x: i for i, x in enumerate(x for x in range(n) if x != w)}
        edges = [(index[u], index[v]) for u, v in g.edges if u != w and v != w]
        if MultiGraph(n - 1, edges).component_count() > base:
            out.add(w)
    return out


# -- canonical form ----------------------------------------------------------


def _refine(n: int, nbrs: list[dict[int, int]], loops: list[int], colors: list[int]) -> list[int]:
    """Iterative neighborhood refinement; at least 2 rounds, stops when stable."""
    rounds = 0
    while True:
        sigs = []
        for u in range(n):
            nb = sorted((colors[v], m) for v, m in nbrs[u].items())
            sigs.append((colors[u], loops[u], tuple(nb)))
        order = sorted(set(sigs))
        remap = {s: i for i, s in enumerate(order)}
        new = [remap[s] for s in sigs]
        rounds += 1
        if new == colors and rounds >= 2:
            return new
        if new == colors and rounds < 2:
            colors = new
            continue
        colors = new


def _encode(n: int, nbrs: list[dict[int, int]], loops: list[int], perm: list[int]) -> bytes:
    """Adjacency encoding under the vertex ordering perm (perm[i] = old label at position i)."""
    pos = [0] * n
    for i, u in enumerate(perm):
        pos[u] = i
    rows = []
    for i, u in enumerate(perm):
        row = sorted((pos[v], m) for v, m in nbrs[u].items())
        rows.append((loops[u], tuple(row)))
    return repr((n, rows)).encode()


def canonical_key(g: MultiGraph) -> bytes:
    """Isomorphism-invariant canonical adjacency encoding.

    Neighborhood refinement; remaining color ties are resolved by
    individualization with exhaustive minimization, so equal keys mean
    isomorphic adjacency structure, exactly.
    """
    n = g.vertex_count
    nbrs: list[dict[int, int]] = [dict() for _ in range(n)]
    loops = [0] * n
    for u, v in g.edges:
        if u == v:
            loops[u] += 1
        else:
            nbrs[u][v] = nbrs[u].get(v, 0) + 1
            nbrs[v][u] = nbrs[v].get(u, 0) + 1

    best: bytes | None = None

    def search(colors: list[int]) -> None:
        nonlocal best
        colors = _refine(n, nbrs, loops, colors)
        classes: dict[int, list[int]] = {}
        for u, c in enumerate(colors):
            classes.setdefault(c, []).append(u)
        target = None
        for c in sorted(classes):
            if len(classes[c]) > 1:
                target = classes[c]
                break
        if target is None:
            perm = sorted(range(n), key=lambda u: colors[u])
            enc = _encode(n, nbrs, loops, perm)
            if best is None or enc < best:
                best = enc
            return
        for u in target:
            nxt = list(colors)
            nxt[u] = -1  # individualize: strictly smaller than every refined color
            search(nxt)

    if n == 0:
        return b"(0, [])"
    search([0] * n)
    assert best is not None
    return best


# -- constructors used across the package ------------------------------------


def cycle_graph(p: int) -> MultiGraph:
    """C_p; C_1 is a single loop."""
    if p < 1:
        raise ValueError("cycle length must be >= 1")
    if p == 1:
        return MultiGraph(1, [(0, 0)])
    return MultiGraph(p, [(i, (i + 1) % p) for i in range(p)])


def parallel_graph(p: int) -> MultiGraph:
    """Two vertices joined by p parallel edges (the planar dual of C_p)."""
    if p < 1:
        raise ValueError("multiplicity must be >= 1")
    return MultiGraph(2, [(0, 1)] * p)


def wheel_graph(n: int) -> MultiGraph:
    """Wh(n): hub joined to every vertex of an (n-1)-cycle; Wh(4) = K4."""
    if n < 3:
        raise ValueError("wheel needs at least 3 vertices")
    rim = n - 1
    edges = [(i, (i + 1) % rim) for i in range(rim)]
    edges += [(i, rim) for i in range(rim)]
    return MultiGraph(n, edges)


def complete_graph(n: int) -> MultiGraph:
    return MultiGraph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def one_point_union(g1: MultiGraph, g2: MultiGraph, v1: int = 0, v2: int = 0) -> MultiGraph:
    """Block sum: glue g2 onto g1 identifying v2 with v1."""
    n1 = g1.vertex_count

    def relab(w: int) -> int:
        if w == v2:
            return v1
        return n1 + w - (1 if w > v2 else 0)

    edges = list(g1.edges) + [(relab(a), relab(b)) for a, b in g2.edges]
    return MultiGraph(n1 + g2.vertex_count - 1, edges)


def relabeled(g: MultiGraph, perm: Sequence[int]) -> MultiGraph:
    """Apply vertex permutation (perm[old] = new)."""
    return MultiGraph(g.vertex_count, [(perm[u], perm[v]) for u, v in g.edges])
