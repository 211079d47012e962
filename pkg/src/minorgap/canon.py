"""Canonical labelling by refinement plus backtracking.

Equitable ordered-partition refinement, individualization of the first
non-singleton cell, and pruning of branches via the orbits of the
automorphisms discovered at equal leaves.  The canonical form is the
graph6 encoding of the relabelled graph, so equal bytes means
isomorphic (cross-checked against a brute-force permutation search in
the tests).
"""

from __future__ import annotations

from .graph import Graph, permute
from .graph6 import graph6_encode


def _refine(adj, cells):
    """Equitable refinement of an ordered partition of bitmask cells."""
    while True:
        changed = False
        for sp in cells:
            newlist = []
            for cell in cells:
                if cell & (cell - 1) == 0:
                    newlist.append(cell)
                    continue
                groups: dict[int, int] = {}
                m = cell
                while m:
                    b = m & -m
                    v = b.bit_length() - 1
                    k = (adj[v] & sp).bit_count()
                    groups[k] = groups.get(k, 0) | b
                    m &= m - 1
                if len(groups) == 1:
                    newlist.append(cell)
                else:
                    newlist.extend(groups[k] for k in sorted(groups))
                    changed = True
            if changed:
                cells = newlist
                break
        if not changed:
            return cells


def canonical_order(g: Graph) -> list[int]:
    """Vertex order (position -> vertex) giving the minimal encoding."""
    n = g.n
    if n == 0:
        return []
    adj = g.adj
    best_enc: tuple[int, ...] | None = None
    best_order: list[int] | None = None
    autos: list[tuple[int, ...]] = []

    def leaf(cells):
        nonlocal best_enc, best_order
        order = [c.bit_length() - 1 for c in cells]
        enc = []
        for i in range(n):
            row = 0
            av = adj[order[i]]
            for j in range(i):
                row |= (av >> order[j] & 1) << j
            enc.append(row)
        enc = tuple(enc)
        if best_enc is None or enc < best_enc:
            best_enc, best_order = enc, order
        elif enc == best_enc:
            a = [0] * n
            for i in range(n):
                a[best_order[i]] = order[i]
            autos.append(tuple(a))

    def search(cells, fixed):
        idx = None
        for i, c in enumerate(cells):
            if c & (c - 1):
                idx = i
                break
        if idx is None:
            leaf(cells)
            return
        cell = cells[idx]
        # orbit closure of the automorphisms that fix the individualized prefix
        parent = list(range(n))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        def merge_autos():
            for a in autos[len(merged):]:
                if all(a[f] == f for f in fixed):
                    for v in range(n):
                        pa, pb = find(v), find(a[v])
                        if pa != pb:
                            parent[pa] = pb
                merged.append(a)

        merged: list = []
        tried: list[int] = []
        m = cell
        while m:
            b = m & -m
            v = b.bit_length() - 1
            m &= m - 1
            merge_autos()
            if any(find(t) == find(v) for t in tried):
                tried.append(v)
                continue
            newcells = cells[:idx] + [b, cell ^ b] + cells[idx + 1:]
            search(_refine(adj, newcells), fixed + [v])
            tried.append(v)

    search(_refine(adj, [(1 << n) - 1]), [])
    return best_order


def canonical_form(g: Graph) -> bytes:
    """graph6 bytes of the canonically relabelled graph."""
    order = canonical_order(g)
    pos = [0] * g.n
    for i, v in enumerate(order):
        pos[v] = i
    return graph6_encode(permute(g, pos))


def canonical_graph(g: Graph) -> Graph:
    order = canonical_order(g)
    pos = [0] * g.n
    for i, v in enumerate(order):
        pos[v] = i
    return permute(g, pos)


def are_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.num_edges != h.num_edges:
        return False
    return canonical_form(g) == canonical_form(h)
