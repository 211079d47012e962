"""Minor containment via branch-set models.

`find_minor_model` is the production search: H-vertices are assigned in
descending-degree order (each after the first adjacent to an already
assigned one), candidate branch sets are grown as connected subsets,
and branches are cut by a remaining-vertex budget, a degree-sum bound
and a neighbourhood-availability bound.  `naive_has_minor` is the slow
independent oracle: it enumerates disjoint connected branch sets in
plain vertex order with no bounds beyond model validity.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import NotConnected, TooLarge
from .graph import (
    Graph,
    bits,
    component_masks,
    induced_subgraph,
    is_planar as _is_planar,
)
from .graph6 import graph6_encode

_planar_cache: dict[Graph, bool] = {}
_biconnected_cache: dict[Graph, bool] = {}


def _to_networkx(g: Graph):
    import networkx as nx

    G = nx.Graph()
    G.add_nodes_from(range(g.n))
    G.add_edges_from(g.edges())
    return G


def _is_biconnected_cached(h: Graph) -> bool:
    hit = _biconnected_cache.get(h)
    if hit is None:
        import networkx as nx

        hit = _biconnected_cache[h] = nx.is_biconnected(_to_networkx(h))
        if len(_biconnected_cache) > 4096:
            _biconnected_cache.clear()
    return hit


def _block_vertex_lists(g: Graph) -> list[list[int]]:
    """Vertex lists of the biconnected blocks of g (bridges included)."""
    import networkx as nx

    return [sorted(b) for b in nx.biconnected_components(_to_networkx(g))]


def _is_planar_cached(h: Graph) -> bool:
    # forbidden minors recur across many queries, graphs under test do not
    hit = _planar_cache.get(h)
    if hit is None:
        hit = _planar_cache[h] = _is_planar(h)
        if len(_planar_cache) > 4096:
            _planar_cache.clear()
    return hit


@dataclass(frozen=True)
class MinorModel:
    """Branch-set witness that h is a minor of g: one vertex set per h-vertex."""

    branch_sets: tuple[frozenset[int], ...]

    def to_json_obj(self, g: Graph, h: Graph) -> dict:
        return {
            "h": graph6_encode(h).decode("ascii"),
            "g": graph6_encode(g).decode("ascii"),
            "branch_sets": [sorted(s) for s in self.branch_sets],
        }


@dataclass(frozen=True)
class ForbiddenSet:
    """Non-empty list of forbidden minors, each with at least one edge."""

    minors: tuple[Graph, ...]

    def __init__(self, minors):
        minors = tuple(minors)
        if not minors:
            raise ValueError("forbidden set must be non-empty")
        if any(h.num_edges == 0 for h in minors):
            raise ValueError("every forbidden minor needs at least one edge")
        object.__setattr__(self, "minors", minors)

    def __iter__(self):
        return iter(self.minors)


def verify_model(g: Graph, h: Graph, m: MinorModel) -> bool:
    """Check the three model invariants against g and h."""
    sets = m.branch_sets
    if len(sets) != h.n:
        return False
    masks = []
    used = 0
    for s in sets:
        mask = 0
        for v in s:
            if not 0 <= v < g.n:
                return False
            mask |= 1 << v
        if mask == 0 or mask & used:
            return False
        used |= mask
        if not _mask_connected(g, mask):
            return False
        masks.append(mask)
    for x, y in h.edges():
        nbhd = 0
        mx = masks[x]
        while mx:
            v = (mx & -mx).bit_length() - 1
            nbhd |= g.adj[v]
            mx &= mx - 1
        if not nbhd & masks[y]:
            return False
    return True


def _mask_connected(g: Graph, mask: int) -> bool:
    start = mask & -mask
    comp = start
    frontier = start
    while frontier:
        nxt = 0
        m = frontier
        while m:
            v = (m & -m).bit_length() - 1
            nxt |= g.adj[v]
            m &= m - 1
        frontier = nxt & mask & ~comp
        comp |= frontier
    return comp == mask


def _assignment_order(h: Graph, comp_mask: int) -> list[int]:
    """Descending-degree order over one component, each later vertex
    adjacent to an earlier one."""
    verts = bits(comp_mask)
    order = [max(verts, key=lambda v: (h.degree(v), -v))]
    chosen = 1 << order[0]
    while len(order) < len(verts):
        cands = [v for v in verts if not chosen >> v & 1 and h.adj[v] & chosen]
        v = max(cands, key=lambda v: (h.degree(v), -v))
        order.append(v)
        chosen |= 1 << v
    return order


def _grow_connected(adj, allowed, base, ext, forbidden, max_size, emit):
    """Enumerate connected supersets of `base` within `allowed` (each once).

    `ext` is the current extension frontier, `forbidden` the vertices
    already offered to an earlier branch of the enumeration.  `emit` is
    called with each subset mask; returning 1 aborts the whole walk
    (success), returning 2 skips all supersets of this subset.
    """
    r = emit(base)
    if r:
        return r == 1
    if base.bit_count() >= max_size:
        return False
    m = ext
    while m:
        b = m & -m
        v = b.bit_length() - 1
        m &= m - 1
        newext = (ext | adj[v]) & allowed & ~forbidden & ~base & ~b
        if _grow_connected(adj, allowed, base | b, newext, forbidden | b, max_size, emit):
            return True
        forbidden |= b
    return False


def _search_component(g, h, order, free0, anchor_pos, anchor, cont=None, prune=None):
    """Find branch sets for one connected component of h inside `free0`.

    Returns a list of masks (in `order` order) or None.  If anchor_pos
    is not None, that position's branch set must contain `anchor` and
    no other set may use it.  When `cont` is given, a complete placement
    only counts if cont(masks) returns True; otherwise the search
    backtracks and tries the next placement.  `prune(used)` may declare
    a partial placement hopeless for the continuation; being monotone
    in the used vertices, it also cuts all supersets.
    """
    n_h = len(order)
    gadj = g.adj
    hdeg = [h.degree(v) for v in order]
    gdeg_total = [gadj[v].bit_count() for v in range(g.n)]
    # h-adjacency between order positions
    earlier = []
    later_cnt = []
    for i, v in enumerate(order):
        earlier.append([j for j in range(i) if h.adj[v] >> order[j] & 1])
        later_cnt.append(sum(1 for j in range(i + 1, n_h) if h.adj[v] >> order[j] & 1))

    assigned: list[int] = []

    def neighborhood(mask):
        nb = 0
        m = mask
        while m:
            v = (m & -m).bit_length() - 1
            nb |= gadj[v]
            m &= m - 1
        return nb & ~mask

    def candidate_ok(i, mask, free):
        # all earlier h-neighbours must touch this set
        nb = neighborhood(mask)
        for j in earlier[i]:
            if not nb & assigned[j]:
                return False
        # enough fresh neighbours for the unassigned h-neighbours
        if (nb & free & ~mask).bit_count() < later_cnt[i]:
            return False
        # degree-sum bound: internal tree + h-degree attachments
        degsum = 0
        m = mask
        while m:
            v = (m & -m).bit_length() - 1
            degsum += gdeg_total[v]
            m &= m - 1
        if degsum < 2 * (mask.bit_count() - 1) + hdeg[i]:
            return False
        return True

    def rec(i, free):
        if i == n_h:
            return True if cont is None else cont(assigned)
        remaining_after = n_h - i - 1
        max_size = free.bit_count() - remaining_after
        if max_size < 1:
            return False

        found = []

        def emit(mask):
            if prune is not None:
                used = mask
                for m in assigned:
                    used |= m
                if prune(used):
                    return 2
            if not candidate_ok(i, mask, free):
                return 0
            assigned.append(mask)
            if rec(i + 1, free & ~mask):
                found.append(True)
                return 1
            assigned.pop()
            return 0

        if anchor_pos == i:
            if not free >> anchor & 1:
                return False
            base = 1 << anchor
            _grow_connected(
                gadj, free, base, gadj[anchor] & free & ~base, base, max_size, emit
            )
            return bool(found)

        this_free = free if anchor_pos is None or anchor_pos < i else free & ~(1 << anchor)
        if earlier[i]:
            # must touch the first earlier neighbour's set
            seeds = neighborhood(assigned[earlier[i][0]]) & this_free
        else:
            # first vertex of the component: any free vertex can seed
            seeds = this_free
        offered = 0
        tm = seeds
        while tm:
            b = tm & -tm
            tm &= tm - 1
            ext = gadj[b.bit_length() - 1] & this_free & ~offered & ~b
            if _grow_connected(gadj, this_free, b, ext, offered | b, max_size, emit):
                return True
            offered |= b
        return False

    if rec(0, free0):
        return list(assigned)
    return None


def find_minor_model(
    g: Graph, h: Graph, require_vertex: int | None = None
) -> MinorModel | None:
    """Branch-set model of h in g, or None.

    `require_vertex` restricts the search to models using that g-vertex
    (sound when g minus the vertex is already known h-free); it is an
    internal accelerator for incremental freeness tests.
    """
    if h.n == 0:
        return MinorModel(())
    if g.n < h.n or g.num_edges < h.num_edges:
        return None
    hcomps = sorted(component_masks(h), key=lambda c: -c.bit_count())
    gcomps = component_masks(g)
    if max(c.bit_count() for c in hcomps) > max(
        (c.bit_count() for c in gcomps), default=0
    ):
        return None
    # minors of planar graphs are planar, so a planar g cannot contain a
    # nonplanar h; this settles most absence queries without a search
    if not _is_planar_cached(h) and _is_planar(g):
        return None
    # a 2-connected minor lies inside a single biconnected block, so on
    # larger hosts split at cut vertices and search each block alone;
    # small hosts skip the decomposition overhead
    if (
        g.n >= 12
        and len(hcomps) == 1
        and h.n >= 3
        and _is_biconnected_cached(h)
    ):
        blocks = _block_vertex_lists(g)
        if len(blocks) > 1:
            for blk in blocks:
                if len(blk) < h.n:
                    continue
                if require_vertex is not None and require_vertex not in blk:
                    continue
                sub = induced_subgraph(g, blk)
                anchor = (
                    blk.index(require_vertex)
                    if require_vertex is not None
                    else None
                )
                m = find_minor_model(sub, h, require_vertex=anchor)
                if m is not None:
                    return MinorModel(
                        tuple(
                            frozenset(blk[i] for i in s)
                            for s in m.branch_sets
                        )
                    )
            return None
    orders = [_assignment_order(h, c) for c in hcomps]

    full = (1 << g.n) - 1

    # failed_by_level[ci] holds free-masks on which components ci.. are
    # known not to fit; fitting is monotone in the free mask, so any
    # subset of a failed mask fails too
    failed_by_level: dict[int, list[int]] = {}
    maximalizing = False

    def note_failure(ci, free):
        nonlocal maximalizing
        failed = failed_by_level.setdefault(ci, [])
        if any(free & ~fm == 0 for fm in failed):
            return
        # greedily re-add vertices while the fit still fails, so one
        # cached mask subsumes a whole family of placements
        if not maximalizing and len(failed) < 64:
            maximalizing = True
            try:
                m = full & ~free
                while m:
                    b = m & -m
                    m &= m - 1
                    if rec_comp(ci, free | b) is None:
                        free |= b
            finally:
                maximalizing = False
        failed[:] = [fm for fm in failed if fm & ~free]
        failed.append(free)

    def rec_comp(ci, free):
        if ci == len(orders):
            return []
        failed = failed_by_level.get(ci)
        if failed and any(free & ~fm == 0 for fm in failed):
            return None
        order = orders[ci]
        rest_holder = []
        failed_next = failed_by_level.setdefault(ci + 1, [])

        def cont(masks):
            # retry later components for every placement of this one
            rest = rec_comp(ci + 1, free & ~_union(masks))
            if rest is None:
                note_failure(ci + 1, free & ~_union(masks))
                return False
            rest_holder.append(rest)
            return True

        def prune(used):
            rem = free & ~used
            return any(rem & ~fm == 0 for fm in failed_next)

        last = ci + 1 == len(orders)
        # a connected component of h must sit inside one component of g
        for gc in component_masks_masked(g, free):
            if gc.bit_count() < len(order):
                continue
            sets = _search_component(
                g, h, order, gc, None, 0,
                cont=None if last else cont,
                prune=None if last else prune,
            )
            if sets is not None:
                rest = rest_holder[0] if not last else []
                return sets_with_order(order, sets) + rest
        return None

    def sets_with_order(order, sets):
        return [(order[i], sets[i]) for i in range(len(order))]

    if require_vertex is None or len(orders) > 1:
        # disconnected h: fall back to the unanchored search
        result = rec_comp(0, full)
    else:
        order = orders[0]
        result = None
        # anchored: the required vertex lies in some branch set; for a
        # complete h all positions are equivalent, so one pass suffices
        positions = [0] if _is_complete(h) else range(len(order))
        anchor_comp = next(
            (c for c in gcomps if c >> require_vertex & 1), None
        )
        if anchor_comp is not None and anchor_comp.bit_count() >= h.n:
            for pos in positions:
                sets = _search_component(
                    g, h, order, anchor_comp, pos, require_vertex
                )
                if sets is not None:
                    result = sets_with_order(order, sets)
                    break

    if result is None:
        return None
    by_vertex = dict(result)
    return MinorModel(
        tuple(frozenset(bits(by_vertex[v])) for v in range(h.n))
    )


def _union(masks):
    u = 0
    for m in masks:
        u |= m
    return u


def _is_complete(h: Graph) -> bool:
    full = (1 << h.n) - 1
    return all(h.adj[v] == full ^ (1 << v) for v in range(h.n))


def component_masks_masked(g: Graph, sub: int) -> list[int]:
    """Connected components of the subgraph induced on the mask `sub`."""
    comps = []
    seen = 0
    while sub != seen:
        rem = sub & ~seen
        comp = rem & -rem
        frontier = comp
        while frontier:
            nxt = 0
            m = frontier
            while m:
                v = (m & -m).bit_length() - 1
                nxt |= g.adj[v]
                m &= m - 1
            frontier = nxt & sub & ~comp
            comp |= frontier
        comps.append(comp)
        seen |= comp
    return comps


def has_minor(g: Graph, h: Graph, require_vertex: int | None = None) -> bool:
    return find_minor_model(g, h, require_vertex=require_vertex) is not None


# -- slow oracle ---------------------------------------------------------

NAIVE_GUARD = 9


def naive_has_minor(g: Graph, h: Graph) -> bool:
    """Exhaustive branch-set enumeration in plain vertex order.

    Checks only model validity (connectivity, disjointness, coverage of
    h-edges against already placed sets); no heuristic bounds.  Guarded
    to v(g) <= 9.
    """
    if g.n > NAIVE_GUARD:
        raise TooLarge(f"naive oracle is guarded to {NAIVE_GUARD} vertices")
    if h.n == 0:
        return True
    if g.n < h.n:
        return False

    gadj = g.adj
    masks: list[int] = []

    def touches(mask, other):
        m = mask
        nb = 0
        while m:
            v = (m & -m).bit_length() - 1
            nb |= gadj[v]
            m &= m - 1
        return bool(nb & other)

    def rec(i, free):
        if i == h.n:
            return True
        max_size = free.bit_count() - (h.n - i - 1)
        if max_size < 1:
            return False
        for mask in _connected_subsets(g, free, max_size):
            ok = True
            for j in range(i):
                if h.adj[i] >> j & 1 and not touches(mask, masks[j]):
                    ok = False
                    break
            if not ok:
                continue
            masks.append(mask)
            if rec(i + 1, free & ~mask):
                return True
            masks.pop()
        return False

    return rec(0, (1 << g.n) - 1)


def _connected_subsets(g: Graph, free: int, max_size: int):
    """All connected subsets of `free` with at most max_size vertices."""
    out = []
    tm = free
    offered = 0

    def grow(base, ext, forb):
        out.append(base)
        if base.bit_count() >= max_size:
            return
        m = ext
        while m:
            b = m & -m
            v = b.bit_length() - 1
            m &= m - 1
            grow(base | b, (ext | g.adj[v]) & free & ~forb & ~base & ~b, forb | b)
            forb |= b

    while tm:
        b = tm & -tm
        tm &= tm - 1
        grow(b, g.adj[b.bit_length() - 1] & free & ~offered & ~b, offered | b)
        offered |= b
    return out


# -- derived predicates --------------------------------------------------


def is_free(g: Graph, f: ForbiddenSet) -> bool:
    return all(find_minor_model(g, h) is None for h in f)


@dataclass(frozen=True)
class MaximalityVerdict:
    """Outcome of is_edge_maximal_free."""

    status: str  # "maximal" | "extendable" | "not_free"
    non_edge: tuple[int, int] | None = None
    minor_index: int | None = None
    model: MinorModel | None = None
    non_edge_models: tuple | None = None

    @property
    def is_maximal(self) -> bool:
        return self.status == "maximal"


def non_edges(g: Graph):
    for u in range(g.n):
        for v in range(u + 1, g.n):
            if not g.adj[u] >> v & 1:
                yield (u, v)


def is_edge_maximal_free(
    g: Graph, f: ForbiddenSet, collect_models: bool = False, known_free: bool = False
) -> MaximalityVerdict:
    """maximal / extendable(non-edge) / not_free(h, model)."""
    if not known_free:
        for idx, h in enumerate(f):
            model = find_minor_model(g, h)
            if model is not None:
                return MaximalityVerdict("not_free", minor_index=idx, model=model)
    collected = []
    adj = list(g.adj)
    for u, v in non_edges(g):
        adj[u] |= 1 << v
        adj[v] |= 1 << u
        g2 = Graph(g.n, tuple(adj))
        hit = None
        for idx, h in enumerate(f):
            anchor = u if len(component_masks(h)) == 1 else None
            model = find_minor_model(g2, h, require_vertex=anchor)
            if model is not None:
                hit = (idx, model)
                break
        adj[u] &= ~(1 << v)
        adj[v] &= ~(1 << u)
        if hit is None:
            return MaximalityVerdict("extendable", non_edge=(u, v))
        if collect_models:
            collected.append(((u, v), hit[0], hit[1]))
    return MaximalityVerdict(
        "maximal", non_edge_models=tuple(collected) if collect_models else None
    )


def has_strong_separating_vertex(h: Graph) -> int | None:
    """Vertex whose removal leaves all components of size <= v(h)-3."""
    if h.n == 0 or not _mask_connected(h, (1 << h.n) - 1):
        raise NotConnected("input must be connected")
    if h.n < 2:
        return None
    limit = h.n - 3
    for v in range(h.n):
        rest = ((1 << h.n) - 1) ^ (1 << v)
        comps = component_masks_masked(h, rest)
        if len(comps) >= 2 and all(c.bit_count() <= limit for c in comps):
            return v
    return None


def is_leaf_and_edge_maximal(g: Graph, h: Graph) -> bool:
    """Edge-maximal h-free, and any new leaf creates an h-minor."""
    if not _mask_connected(g, (1 << g.n) - 1):
        raise NotConnected("input must be connected")
    f = ForbiddenSet([h])
    if not is_edge_maximal_free(g, f).is_maximal:
        return False
    from .graph import add_vertex

    for v in range(g.n):
        g2 = add_vertex(g, 1 << v)
        if find_minor_model(g2, h, require_vertex=g.n) is None:
            return False
    return True
