"""Compact immutable graphs on at most 64 vertices.

Adjacency is stored as one bitmask per vertex, so neighbourhood
operations are single machine-word operations.  All combinators return
fresh graphs; nothing here mutates shared state, which makes every
value safe to hand to concurrent workers.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import (
    BadParams,
    LoopEdge,
    NoSuchEdge,
    NotAClique,
    OutOfRange,
    SizeMismatch,
)

MAX_VERTICES = 64


class Graph:
    """Immutable simple graph with bit-row adjacency."""

    __slots__ = ("n", "adj", "_hash")

    def __init__(self, n: int, adj: tuple[int, ...]):
        # adj is trusted here; use make_graph for validated construction
        self.n = n
        self.adj = adj
        self._hash = None

    # -- basic queries ---------------------------------------------------

    @property
    def num_edges(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def edges(self) -> Iterator[tuple[int, int]]:
        for u in range(self.n):
            row = self.adj[u] >> (u + 1) << (u + 1)
            while row:
                v = (row & -row).bit_length() - 1
                yield (u, v)
                row &= row - 1

    def neighbors(self, v: int) -> list[int]:
        return bits(self.adj[v])

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Graph) and self.n == other.n and self.adj == other.adj
        )

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.n, self.adj))
        return self._hash

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, e={self.num_edges})"


def bits(mask: int) -> list[int]:
    """Indices of set bits, ascending."""
    out = []
    while mask:
        out.append((mask & -mask).bit_length() - 1)
        mask &= mask - 1
    return out


def make_graph(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph from an edge list, validating endpoints."""
    if not 0 <= n <= MAX_VERTICES:
        raise OutOfRange(f"vertex count {n} not in [0, {MAX_VERTICES}]")
    adj = [0] * n
    for u, v in edges:
        if u == v:
            raise LoopEdge(f"loop at vertex {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise OutOfRange(f"edge ({u}, {v}) has endpoint outside [0, {n})")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, tuple(adj))


def permute(g: Graph, perm: list[int]) -> Graph:
    """Relabel: vertex v of g becomes perm[v]."""
    adj = [0] * g.n
    for v in range(g.n):
        row = 0
        m = g.adj[v]
        while m:
            w = (m & -m).bit_length() - 1
            row |= 1 << perm[w]
            m &= m - 1
        adj[perm[v]] = row
    return Graph(g.n, tuple(adj))


def induced_subgraph(g: Graph, keep: list[int]) -> Graph:
    """Subgraph induced on `keep`, relabelled 0..len(keep)-1 in list order."""
    pos = {v: i for i, v in enumerate(keep)}
    adj = [0] * len(keep)
    for v in keep:
        m = g.adj[v]
        while m:
            w = (m & -m).bit_length() - 1
            if w in pos:
                adj[pos[v]] |= 1 << pos[w]
            m &= m - 1
    return Graph(len(keep), tuple(adj))


def add_edge(g: Graph, u: int, v: int) -> Graph:
    if u == v:
        raise LoopEdge(f"loop at vertex {u}")
    adj = list(g.adj)
    adj[u] |= 1 << v
    adj[v] |= 1 << u
    return Graph(g.n, tuple(adj))


def add_vertex(g: Graph, nbr_mask: int) -> Graph:
    """Append a new vertex adjacent to the vertices in nbr_mask."""
    if g.n + 1 > MAX_VERTICES:
        raise OutOfRange("vertex cap exceeded")
    adj = [g.adj[v] | ((nbr_mask >> v & 1) << g.n) for v in range(g.n)]
    adj.append(nbr_mask)
    return Graph(g.n + 1, tuple(adj))


# -- components and connectivity ----------------------------------------


def component_masks(g: Graph) -> list[int]:
    """Vertex bitmask of every connected component."""
    seen = 0
    comps = []
    full = (1 << g.n) - 1
    while seen != full:
        start = ((full & ~seen) & -(full & ~seen)).bit_length() - 1
        comp = 1 << start
        frontier = comp
        while frontier:
            nxt = 0
            m = frontier
            while m:
                v = (m & -m).bit_length() - 1
                nxt |= g.adj[v]
                m &= m - 1
            frontier = nxt & ~comp
            comp |= frontier
        comps.append(comp)
        seen |= comp
    return comps


def is_connected(g: Graph) -> bool:
    if g.n <= 1:
        return True
    return len(component_masks(g)) == 1


def _disconnects(g: Graph, removed_mask: int) -> bool:
    """True if deleting the masked vertices leaves >= 2 components (or 0 vertices)."""
    rest = [v for v in range(g.n) if not removed_mask >> v & 1]
    if len(rest) <= 1:
        return False
    start = rest[0]
    comp = 1 << start
    frontier = comp
    while frontier:
        nxt = 0
        m = frontier
        while m:
            v = (m & -m).bit_length() - 1
            nxt |= g.adj[v]
            m &= m - 1
        frontier = nxt & ~comp & ~removed_mask
        comp |= frontier
    return any(not comp >> v & 1 for v in rest)


def _vertex_maxflow(g: Graph, s: int, t: int) -> int:
    """Max number of internally vertex-disjoint s-t paths (s, t non-adjacent)."""
    # split each internal vertex v into v_in -> v_out with unit capacity
    n = g.n
    cap = {}

    def node_in(v):
        return 2 * v

    def node_out(v):
        return 2 * v + 1

    arcs = {i: [] for i in range(2 * n)}

    def add_arc(a, b, c):
        cap[(a, b)] = cap.get((a, b), 0) + c
        cap.setdefault((b, a), 0)
        arcs[a].append(b)
        arcs[b].append(a)

    for v in range(n):
        add_arc(node_in(v), node_out(v), 1 if v not in (s, t) else n)
    for u, v in g.edges():
        add_arc(node_out(u), node_in(v), n)
        add_arc(node_out(v), node_in(u), n)

    flow = 0
    src, sink = node_out(s), node_in(t)
    while True:
        # BFS for an augmenting path
        parent = {src: None}
        queue = [src]
        while queue and sink not in parent:
            a = queue.pop(0)
            for b in arcs[a]:
                if b not in parent and cap.get((a, b), 0) > 0:
                    parent[b] = a
                    queue.append(b)
        if sink not in parent:
            return flow
        b = sink
        while parent[b] is not None:
            a = parent[b]
            cap[(a, b)] -= 1
            cap[(b, a)] += 1
            b = a
        flow += 1


def connectivity(g: Graph) -> int:
    """Exact vertex connectivity; K_n reports n-1, disconnected graphs 0."""
    n = g.n
    if n <= 1:
        return 0
    full = (1 << n) - 1
    if all(g.adj[v] == full ^ (1 << v) for v in range(n)):
        return n - 1
    if not is_connected(g):
        return 0
    min_deg = min(g.degree(v) for v in range(n))
    if n <= 16:
        for k in range(1, min_deg + 1):
            for cut in itertools.combinations(range(n), k):
                mask = 0
                for v in cut:
                    mask |= 1 << v
                if _disconnects(g, mask):
                    return k
        return min_deg
    best = min_deg
    for s in range(n):
        for t in range(s + 1, n):
            if not g.has_edge(s, t):
                best = min(best, _vertex_maxflow(g, s, t))
    return best


@dataclass(frozen=True)
class GraphStats:
    min_degree: int
    max_degree: int
    connectivity: int
    component_sizes: tuple[int, ...]
    is_connected: bool


def graph_stats(g: Graph) -> GraphStats:
    degs = [g.degree(v) for v in range(g.n)] or [0]
    comps = tuple(sorted(c.bit_count() for c in component_masks(g)))
    return GraphStats(
        min_degree=min(degs),
        max_degree=max(degs),
        connectivity=connectivity(g),
        component_sizes=comps,
        is_connected=len(comps) <= 1,
    )


def is_planar(g: Graph) -> bool:
    # edge bound rules out dense graphs before the real test
    if g.n >= 3 and g.num_edges > 3 * g.n - 6:
        return False
    if g.n <= 4:
        return True
    import networkx as nx

    G = nx.Graph()
    G.add_nodes_from(range(g.n))
    G.add_edges_from(g.edges())
    return nx.check_planarity(G, counterexample=False)[0]


# -- combinators ---------------------------------------------------------


def disjoint_union(g: Graph, h: Graph) -> Graph:
    if g.n + h.n > MAX_VERTICES:
        raise OutOfRange("union exceeds vertex cap")
    adj = list(g.adj) + [row << g.n for row in h.adj]
    return Graph(g.n + h.n, tuple(adj))


def clique_sum(g: Graph, h: Graph, cg: list[int], ch: list[int]) -> Graph:
    """Glue g and h by identifying cg[i] with ch[i]; both must induce cliques."""
    if len(cg) != len(ch):
        raise SizeMismatch(f"{len(cg)} vs {len(ch)} attachment vertices")
    for graph, cl, name in ((g, cg, "g"), (h, ch, "h")):
        if len(set(cl)) != len(cl) or any(not 0 <= v < graph.n for v in cl):
            raise NotAClique(f"bad attachment list in {name}")
        for a, b in itertools.combinations(cl, 2):
            if not graph.has_edge(a, b):
                raise NotAClique(f"attachment vertices not a clique in {name}")
    # h's non-attachment vertices are appended after g's
    n = g.n + h.n - len(ch)
    if n > MAX_VERTICES:
        raise OutOfRange("clique-sum exceeds vertex cap")
    hmap = {}
    nxt = g.n
    for v in range(h.n):
        if v in ch:
            hmap[v] = cg[ch.index(v)]
        else:
            hmap[v] = nxt
            nxt += 1
    edges = list(g.edges())
    edges += [(hmap[u], hmap[v]) for u, v in h.edges()]
    return make_graph(n, edges)


def subdivide_edge(g: Graph, edge: tuple[int, int], k: int) -> Graph:
    """Replace an edge by a path through k new internal vertices."""
    u, v = edge
    if not (0 <= u < g.n and 0 <= v < g.n) or not g.has_edge(u, v):
        raise NoSuchEdge(f"edge {edge} not in graph")
    if k < 1:
        raise OutOfRange("k must be >= 1")
    if g.n + k > MAX_VERTICES:
        raise OutOfRange("subdivision exceeds vertex cap")
    edges = [e for e in g.edges() if set(e) != {u, v}]
    chain = [u] + list(range(g.n, g.n + k)) + [v]
    edges += list(zip(chain, chain[1:]))
    return make_graph(g.n + k, edges)


def contract_edge(g: Graph, edge: tuple[int, int]) -> Graph:
    """Contract an edge; the merged vertex keeps the lower label's position."""
    u, v = edge
    if not (0 <= u < g.n and 0 <= v < g.n) or not g.has_edge(u, v):
        raise NoSuchEdge(f"edge {edge} not in graph")
    u, v = min(u, v), max(u, v)
    relabel = [w if w < v else w - 1 for w in range(g.n)]
    relabel[v] = u
    edges = set()
    for a, b in g.edges():
        a2, b2 = relabel[a], relabel[b]
        if a2 != b2:
            edges.add((min(a2, b2), max(a2, b2)))
    return make_graph(g.n - 1, edges)


# -- standard graphs -----------------------------------------------------


def standard_graph(kind: str, *params: int) -> Graph:
    """Fixed-vertex-numbering generators for the graphs used throughout.

    Numbering conventions: cycle/path vertices are 0..n-1 in order;
    star centre is 0; complete_bipartite has the first class 0..a-1;
    wheel(t) is the cycle 0..t-2 plus hub t-1; wagner is the cycle
    0..7 plus the diagonals {i, i+4}.
    """
    try:
        builder = _STANDARD[kind]
    except KeyError:
        raise BadParams(f"unknown kind {kind!r}") from None
    return builder(*params)


def _complete(n: int) -> Graph:
    if n < 0:
        raise BadParams("complete needs n >= 0")
    return make_graph(n, itertools.combinations(range(n), 2))


def _cycle(n: int) -> Graph:
    if n < 3:
        raise BadParams("cycle needs n >= 3")
    return make_graph(n, [(i, (i + 1) % n) for i in range(n)])


def _path(n: int) -> Graph:
    if n < 1:
        raise BadParams("path needs n >= 1")
    return make_graph(n, [(i, i + 1) for i in range(n - 1)])


def _star(n: int) -> Graph:
    if n < 2:
        raise BadParams("star needs n >= 2")
    return make_graph(n, [(0, i) for i in range(1, n)])


def _complete_bipartite(a: int, b: int) -> Graph:
    if a < 1 or b < 1:
        raise BadParams("complete_bipartite needs a, b >= 1")
    return make_graph(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def _wheel(t: int) -> Graph:
    if t < 4:
        raise BadParams("wheel needs t >= 4")
    edges = [(i, (i + 1) % (t - 1)) for i in range(t - 1)]
    edges += [(i, t - 1) for i in range(t - 1)]
    return make_graph(t, edges)


def _wagner() -> Graph:
    edges = [(i, (i + 1) % 8) for i in range(8)] + [(i, i + 4) for i in range(4)]
    return make_graph(8, edges)


def _diamond() -> Graph:
    return make_graph(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)])


def _bull() -> Graph:
    return make_graph(5, [(0, 1), (0, 2), (1, 2), (0, 3), (1, 4)])


def _pan() -> Graph:
    return make_graph(4, [(0, 1), (0, 2), (1, 2), (2, 3)])


def _claw() -> Graph:
    return _star(4)


_STANDARD = {
    "complete": _complete,
    "cycle": _cycle,
    "path": _path,
    "star": _star,
    "complete_bipartite": _complete_bipartite,
    "wheel": _wheel,
    "wagner": _wagner,
    "diamond": _diamond,
    "bull": _bull,
    "pan": _pan,
    "claw": _claw,
}


def _petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    spokes = [(i, 5 + i) for i in range(5)]
    return make_graph(10, outer + inner + spokes)


def _bowtie() -> Graph:
    return make_graph(5, [(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)])


def _h1() -> Graph:
    # C4 with a pendant edge
    return make_graph(5, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 4)])


def _h2() -> Graph:
    # diamond with a leaf at a degree-2 vertex
    return make_graph(5, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 4)])


def _h3() -> Graph:
    # diamond with a leaf at a degree-3 vertex
    return make_graph(5, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (0, 4)])


def named_graph(name: str) -> Graph:
    """Resolve a short graph name (k5, c6, p4, claw, wagner, ...)."""
    key = name.lower()
    if key in _NAMED:
        return _NAMED[key]()
    if len(key) >= 2 and key[0] in "kcpw" and key[1:].isdigit():
        m = int(key[1:])
        return {
            "k": _complete,
            "c": _cycle,
            "p": _path,
            "w": _wheel,
        }[key[0]](m)
    if key.startswith("k") and "," in key:
        a, b = key[1:].split(",")
        return _complete_bipartite(int(a), int(b))
    raise BadParams(f"unknown graph name {name!r}")


_NAMED = {
    "claw": _claw,
    "pan": _pan,
    "bull": _bull,
    "diamond": _diamond,
    "wagner": _wagner,
    "w8": _wagner,
    "petersen": _petersen,
    "bowtie": _bowtie,
    "h1": _h1,
    "h2": _h2,
    "h3": _h3,
}


def known_graph_names() -> list[str]:
    return sorted(_NAMED)
