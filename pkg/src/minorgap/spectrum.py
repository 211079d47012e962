"""Isomorph-free exhaustive generation of minor-free graphs and the
edge spectrum E(n) of their edge-maximal members.

Generation is by vertex augmentation with canonical-parent rejection:
a child C = P + v is kept only when v sits in the invariant-minimal
vertex class of C and deleting v yields the canonical parent of C.
Because freeness is closed under induced subgraphs, every non-free
intermediate is pruned immediately.
"""

from __future__ import annotations

import multiprocessing
from dataclasses import dataclass

from .canon import canonical_form
from .errors import TooLarge
from .graph import Graph, component_masks, connectivity, is_connected
from .graph6 import graph6_encode
from .minor import ForbiddenSet, has_minor, is_edge_maximal_free

ENUMERATION_GUARD = 11


def _complete_order(h: Graph) -> int | None:
    full = (1 << h.n) - 1
    if all(h.adj[v] == full ^ (1 << v) for v in range(h.n)):
        return h.n
    return None


def _edge_bound(f: ForbiddenSet, n: int) -> int | None:
    """Sound upper bound on e(G) for f-free G, when one is known.

    For a single complete excluded minor K_r with r <= 7 this is
    Mader's extremal bound (r-2)n - C(r-1, 2); no generic bound is
    assumed otherwise.
    """
    if len(f.minors) != 1:
        return None
    r = _complete_order(f.minors[0])
    if r is None or r > 7:
        return None
    if n < r - 1:
        return n * (n - 1) // 2
    return (r - 2) * n - (r - 1) * (r - 2) // 2


def _min_invariant_class(adj, degs, dmin) -> list[int]:
    """Among degree-dmin vertices, those minimizing sorted neighbour degrees."""
    best = None
    best_vs: list[int] = []
    for v in range(len(adj)):
        if degs[v] != dmin:
            continue
        nbr = []
        m = adj[v]
        while m:
            w = (m & -m).bit_length() - 1
            nbr.append(degs[w])
            m &= m - 1
        nbr.sort()
        if best is None or nbr < best:
            best, best_vs = nbr, [v]
        elif nbr == best:
            best_vs.append(v)
    return best_vs


def _delete_vertex(g: Graph, v: int) -> Graph:
    adj = []
    for u in range(g.n):
        if u == v:
            continue
        row = g.adj[u]
        low = row & ((1 << v) - 1)
        high = row >> (v + 1) << v
        adj.append(low | high)
    return Graph(g.n - 1, tuple(adj))


def _children(parent: Graph, f: ForbiddenSet, bound: int | None) -> list[Graph]:
    """Accepted free children of one parent (each isomorphism class once)."""
    p = parent.n
    p_edges = parent.num_edges
    max_deg = None if bound is None else bound - p_edges
    if max_deg is not None and max_deg < 0:
        return []
    padj = parent.adj
    pdeg = [row.bit_count() for row in padj]
    parent_form = None
    single_minors = [
        (h, len(component_masks(h)) == 1) for h in f
    ]
    accepted: list[Graph] = []
    seen_forms: set[bytes] = set()
    for nbr in range(1 << p):
        s = nbr.bit_count()
        if max_deg is not None and s > max_deg:
            continue
        # degree-stage precheck: the new vertex must have minimum degree
        degs = [pdeg[u] + (nbr >> u & 1) for u in range(p)]
        degs.append(s)
        dmin = min(degs)
        if s > dmin:
            continue
        adj = [padj[u] | ((nbr >> u & 1) << p) for u in range(p)]
        adj.append(nbr)
        child = Graph(p + 1, tuple(adj))
        # full invariant: the new vertex must lie in the minimal class
        cls = _min_invariant_class(adj, degs, dmin)
        if p not in cls:
            continue
        # canonical-parent acceptance: deleting the new vertex must give
        # the same parent class as deleting any other minimal-class vertex;
        # deleting the new vertex gives the parent itself
        if len(cls) > 1:
            if parent_form is None:
                parent_form = canonical_form(parent)
            if any(
                canonical_form(_delete_vertex(child, u)) < parent_form
                for u in cls
                if u != p
            ):
                continue
        form = canonical_form(child)
        if form in seen_forms:
            continue
        seen_forms.add(form)
        # freeness last, so it runs once per isomorphism class (the
        # parent is free, so any new minor must use the new vertex)
        free = True
        for h, connected in single_minors:
            if has_minor(child, h, require_vertex=p if connected else None):
                free = False
                break
        if free:
            accepted.append(child)
    return accepted


def _expand_to(parents: list[Graph], level: int, n: int, f: ForbiddenSet) -> list[Graph]:
    current = parents
    for lvl in range(level, n):
        bound = _edge_bound(f, lvl + 1)
        nxt: list[Graph] = []
        for parent in current:
            nxt.extend(_children(parent, f, bound))
        current = nxt
    return current


_WORK = {}


def _pool_init(level, n, f):
    _WORK["args"] = (level, n, f)


def _pool_expand(chunk):
    level, n, f = _WORK["args"]
    return _expand_to(chunk, level, n, f)


def enumerate_free(
    n: int,
    f: ForbiddenSet,
    force: bool = False,
    jobs: int = 1,
    split_depth: int | None = None,
) -> list[Graph]:
    """One representative per isomorphism class of f-free n-vertex graphs."""
    if n > ENUMERATION_GUARD and not force:
        raise TooLarge(
            f"enumeration beyond {ENUMERATION_GUARD} vertices needs force=True"
        )
    if n <= 0:
        return [Graph(0, ())] if n == 0 else []
    current = [Graph(1, (0,))]
    if jobs <= 1 or n <= 3:
        return _expand_to(current, 1, n, f)
    split = split_depth if split_depth is not None else max(1, n - 2)
    split = min(max(split, 1), n)
    current = _expand_to(current, 1, split, f)
    chunks = [current[i::jobs] for i in range(jobs)]
    ctx = multiprocessing.get_context("fork")
    with ctx.Pool(jobs, initializer=_pool_init, initargs=(split, n, f)) as pool:
        parts = pool.map(_pool_expand, [c for c in chunks if c])
    out: list[Graph] = []
    for part in parts:
        out.extend(part)
    return out


@dataclass(frozen=True)
class EdgeSpectrum:
    """Edge counts of n-vertex edge-maximal f-free graphs, with extremes."""

    n: int
    forbidden: ForbiddenSet
    spectrum: tuple[int, ...]
    m_plus: int
    m_minus: int
    gap: int
    witnesses: dict[int, str]  # edge count -> graph6 of one witness

    def to_json_obj(self) -> dict:
        return {
            "n": self.n,
            "forbidden": [
                graph6_encode(h).decode("ascii") for h in self.forbidden
            ],
            "spectrum": list(self.spectrum),
            "m_plus": self.m_plus,
            "m_minus": self.m_minus,
            "gap": self.gap,
            "witnesses": {str(k): v for k, v in sorted(self.witnesses.items())},
        }


def edge_spectrum(
    n: int,
    f: ForbiddenSet,
    force: bool = False,
    jobs: int = 1,
    cache=None,
) -> EdgeSpectrum:
    """Exact spectrum by enumeration plus an edge-maximality filter."""
    if cache is not None:
        hit = cache.load(n, f)
        if hit is not None:
            return hit
    witnesses: dict[int, bytes] = {}
    # if every excluded minor is 2-connected, a model never crosses a
    # bridge, so a disconnected graph can always take another edge
    addable = all(connectivity(h) >= 2 for h in f)
    for g in enumerate_free(n, f, force=force, jobs=jobs):
        if addable and not is_connected(g):
            continue
        verdict = is_edge_maximal_free(g, f, known_free=True)
        if not verdict.is_maximal:
            continue
        e = g.num_edges
        enc = graph6_encode(g)
        # deterministic witness: smallest canonical graph6 per edge count
        key = canonical_form(g)
        if e not in witnesses or key < witnesses[e][0]:
            witnesses[e] = (key, enc)
    spectrum = tuple(sorted(witnesses))
    if not spectrum:
        raise ValueError(f"no edge-maximal f-free graphs on {n} vertices")
    result = EdgeSpectrum(
        n=n,
        forbidden=f,
        spectrum=spectrum,
        m_plus=spectrum[-1],
        m_minus=spectrum[0],
        gap=spectrum[-1] - spectrum[0],
        witnesses={e: witnesses[e][0].decode("ascii") for e in spectrum},
    )
    if cache is not None:
        cache.store(result)
    return result


def gap(n: int, f: ForbiddenSet, force: bool = False, jobs: int = 1, cache=None) -> int:
    return edge_spectrum(n, f, force=force, jobs=jobs, cache=cache).gap
