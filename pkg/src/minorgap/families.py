"""Parametric construction families F1..F20.

Each family builds a graph together with a closed-form predicted edge
count; build_family asserts the two agree, so a formula drift fails
loudly.  `certify` then provides the end-to-end machine check that a
built graph is edge-maximal free for its intended forbidden set.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .errors import (
    BadParams,
    BelowFrobenius,
    EdgeCountMismatch,
    NotCoprime,
    NotFree,
    NotMaximal,
    TooLarge,
)
from .graph import (
    Graph,
    MAX_VERTICES,
    clique_sum,
    disjoint_union,
    make_graph,
    named_graph,
    standard_graph,
)
from .graph6 import graph6_encode
from .minor import ForbiddenSet, find_minor_model, is_edge_maximal_free

CERTIFY_GUARD = 24

FAMILY_NAMES = {
    "F1": "disjoint_cliques",
    "F2": "wagner_chain",
    "F3": "fan_triangulation",
    "F4": "overlapping_cliques_dense",
    "F5": "overlapping_cliques_sparse",
    "F6": "clique_cycle_join",
    "F7": "biggie_gadget",
    "F8": "two_cliques_overlap",
    "F9": "book_of_cliques",
    "F10": "cycle_gadgets",
    "F11": "star_gadgets",
    "F12": "k2m_plus_edge",
    "F13": "cycle_three_pendants",
    "F14": "diamond_chain",
    "F15": "subdivided_clique_pair",
    "F16": "wagner_plus",
    "F17": "separating_sparse",
    "F18": "multi_minor_gadget",
    "F19": "clique_triangle_shared",
    "F20": "mk3_witnesses",
}
_BY_NAME = {v: k for k, v in FAMILY_NAMES.items()}


@dataclass(frozen=True)
class ConstructionRecipe:
    """A family identifier plus its named parameters."""

    family: str
    params: dict = field(default_factory=dict)

    def __post_init__(self):
        fam = _BY_NAME.get(self.family, self.family)
        if fam not in FAMILY_NAMES:
            raise BadParams(f"unknown family {self.family!r}")
        object.__setattr__(self, "family", fam)


def _c2(k: int) -> int:
    return k * (k - 1) // 2


def _need(params: dict, *names: str) -> list:
    missing = [k for k in names if k not in params]
    if missing:
        raise BadParams(f"missing params: {', '.join(missing)}")
    extra = [k for k in params if k not in names]
    if extra:
        raise BadParams(f"unknown params: {', '.join(extra)}")
    return [params[k] for k in names]


def _check(cond: bool, msg: str) -> None:
    if not cond:
        raise BadParams(msg)


def _union_of_cliques(sizes) -> Graph:
    g = standard_graph("complete", 0)
    for s in sizes:
        g = disjoint_union(g, standard_graph("complete", s))
    return g


def _overlapping_cliques(copies: int, own: int, shared: int) -> Graph:
    """`copies` cliques of size shared+own that agree on the first
    `shared` vertices."""
    n = shared + copies * own
    edges = []
    for j in range(copies):
        mem = list(range(shared)) + list(
            range(shared + j * own, shared + (j + 1) * own)
        )
        edges += [(a, b) for i, a in enumerate(mem) for b in mem[i + 1:]]
    return make_graph(n, set(edges))


# -- family builders -----------------------------------------------------


def _f1(params):
    h, m, r = _need(params, "h", "m", "r")
    _check(h >= 3 and m >= 1 and 0 <= r <= h - 2, "need h >= 3, m >= 1, 0 <= r <= h-2")
    g = _union_of_cliques([h - 1] * m + ([r] if r else []))
    return g, m * _c2(h - 1) + _c2(r)


def _f2(params):
    (k,) = _need(params, "k")
    _check(k >= 1, "need k >= 1")
    w8 = named_graph("wagner")
    g = w8
    for _ in range(k - 1):
        # all copies share the rim edge {0, 1}
        g = clique_sum(g, w8, [0, 1], [0, 1])
    return g, 11 * k + 1


def _f3(params):
    (n,) = _need(params, "n")
    _check(n >= 3, "need n >= 3")
    # planar triangulation: path 0..n-3 plus two adjacent apex vertices
    path = list(range(n - 2))
    edges = list(zip(path, path[1:])) + [(n - 2, n - 1)]
    edges += [(v, n - 2) for v in path] + [(v, n - 1) for v in path]
    return make_graph(n, edges), 3 * n - 6


def _f4(params):
    h, k, m = _need(params, "h", "k", "m")
    _check(h >= 4 and 1 <= k <= h - 3 and m >= 1, "need h >= 4, 1 <= k <= h-3, m >= 1")
    g = _overlapping_cliques((h - k + 1) * m, h - k, k - 1)
    return g, (h - k) * m * (h - k + 1) * (h + k - 3) // 2 + _c2(k - 1)


def _f5(params):
    h, k, delta, m = _need(params, "h", "k", "delta", "m")
    _check(h >= 4 and 1 <= k <= h - 3 and m >= 1, "need h >= 4, 1 <= k <= h-3, m >= 1")
    _check(2 <= delta <= h - 1, "need 2 <= delta <= h-1")
    copies = (h - k) * m
    core = _overlapping_cliques(copies, h - k, k - 1)
    edges = list(core.edges())
    n = core.n
    shared = k - 1
    for j in range(copies):
        mem = list(range(shared)) + list(
            range(shared + j * (h - k), shared + (j + 1) * (h - k))
        )
        # the pendant's neighbourhood must not contain all of the common
        # set, so the last shared vertex is skipped
        if shared:
            mem = mem[: shared - 1] + mem[shared:]
        _check(delta - 1 <= len(mem), "delta too large for the copy size")
        pend = n + j
        edges += [(pend, x) for x in mem[: delta - 1]]
    g = make_graph(n + copies, edges)
    predicted = copies * (h - k) * (h + k - 3) // 2 + copies * (delta - 1) + _c2(k - 1)
    return g, predicted


def _f6(params):
    h, n = _need(params, "h", "n")
    _check(h >= 5 and n >= h - 1, "need h >= 5 and n >= h-1")
    c = n - h + 4
    edges = [(u, v) for u in range(h - 4) for v in range(u + 1, h - 4)]
    edges += [(h - 4 + i, h - 4 + (i + 1) % c) for i in range(c)]
    edges += [(u, h - 4 + i) for u in range(h - 4) for i in range(c)]
    return make_graph(n, set(edges)), (h - 3) * n - (h - 1) * (h - 4) // 2


def _f7(params):
    h, dp, variant = _need(params, "h", "delta_prime", "variant")
    if variant == "ham10":
        _check(h == 7 and dp == 3, "ham10 is the h=7, delta'=3 case")
        edges = [(i, (i + 1) % 10) for i in range(10)]
        edges += [(a, b) for a in range(0, 10, 2) for b in range(a + 2, 10, 2)]
        return make_graph(10, set(edges)), 20
    pend = {"3-pendant": 3, "4-pendant": 4}.get(variant)
    if pend is None:
        raise BadParams(f"unknown variant {variant!r}")
    _check(2 <= dp <= h - 3, "need 2 <= delta' <= h-3")
    if pend == 4:
        _check(dp + 2 < h - 2, "4-pendant needs delta'+2 < h-2")
    edges = [(u, v) for u in range(h - 2) for v in range(u + 1, h - 2)]
    for i in range(1, pend + 1):
        x = h - 3 + i
        edges += [(x, u) for u in range(dp - 2)] + [(x, dp - 3 + i)]
    return make_graph(h - 2 + pend, edges), _c2(h - 2) + pend * (dp - 1)


def _f8(params):
    h, k = _need(params, "h", "k")
    _check(h >= 6 and 2 <= k <= h - 4, "need h >= 6 and 2 <= k <= h-4")
    g = _overlapping_cliques(2, h - k - 1, k - 1)
    return g, 2 * _c2(h - 2) - _c2(k - 1)


def _f9(params):
    h, m = _need(params, "h", "m")
    _check(h >= 6 and m >= 1, "need h >= 6 and m >= 1")
    g = _overlapping_cliques(m, 2, h - 4)
    return g, _c2(h - 4) + m * (2 * (h - 4) + 1)


def _f10(params):
    n, variant = _need(params, "n", "variant")
    if variant == "plain":
        _check(n >= 3, "need n >= 3")
        return standard_graph("cycle", n), n
    _check(n >= 4, "need n >= 4")
    cyc = standard_graph("cycle", n - 1)
    if variant == "plus_isolated":
        return disjoint_union(cyc, standard_graph("complete", 1)), n - 1
    if variant == "ear2":
        edges = list(cyc.edges()) + [(n - 1, 0), (n - 1, 1)]
        return make_graph(n, edges), n + 1
    if variant == "ear3":
        _check(n >= 5, "need n >= 5")
        edges = list(cyc.edges()) + [(n - 1, 0), (n - 1, 1), (n - 1, 2)]
        return make_graph(n, edges), n + 2
    raise BadParams(f"unknown variant {variant!r}")


def _f11(params):
    t, n, variant = _need(params, "t", "n", "variant")
    if variant == "wheel_cycle":
        _check(t >= 4 and n - t >= 3, "need t >= 4 and n-t >= 3")
        g = disjoint_union(standard_graph("wheel", t), standard_graph("cycle", n - t))
        return g, n + t - 2
    if variant == "k5_theta_path":
        _check(n >= 7, "need n >= 7")
        # K5 on 0..4; x=5, y=6 both joined to 0 and 1; a path of n-6
        # edges from x to y through n-7 fresh vertices
        edges = [(u, v) for u in range(5) for v in range(u + 1, 5)]
        edges += [(5, 0), (5, 1), (6, 0), (6, 1)]
        chain = [5] + list(range(7, n)) + [6]
        edges += list(zip(chain, chain[1:]))
        return make_graph(n, edges), n + 8
    raise BadParams(f"unknown variant {variant!r}")


def _f12(params):
    (n,) = _need(params, "n")
    _check(n >= 4, "need n >= 4")
    g = standard_graph("complete_bipartite", 2, n - 2)
    edges = list(g.edges()) + [(0, 1)]
    return make_graph(n, edges), 2 * n - 3


def _f13(params):
    (n,) = _need(params, "n")
    _check(n >= 6, "need n >= 6")
    c = n - 3
    at = [0, c // 3, 2 * c // 3]
    edges = [(i, (i + 1) % c) for i in range(c)]
    edges += [(at[i], c + i) for i in range(3)]
    return make_graph(n, edges), n


def _f14(params):
    k, i = _need(params, "k", "i")
    _check(k >= 1 and 0 <= i <= 2, "need k >= 1 and 0 <= i <= 2")
    # vertex 0 is shared: a degree-2 vertex of each diamond, and one
    # vertex of the K_{i+1}
    edges = []
    for j in range(k):
        a, b, c = 1 + 3 * j, 2 + 3 * j, 3 + 3 * j
        edges += [(0, a), (0, b), (a, b), (a, c), (b, c)]
    base = 3 * k + 1
    mem = [0] + list(range(base, base + i))
    edges += [(x, y) for p, x in enumerate(mem) for y in mem[p + 1:]]
    return make_graph(base + i, edges), 5 * k + _c2(i + 1)


def _subdivided_clique(h2: int, pad: int) -> Graph:
    """K_{h2} with every edge subdivided once; the 0-1 edge gets 1+pad
    internal vertices."""
    edges = []
    nv = h2
    for u in range(h2):
        for v in range(u + 1, h2):
            inner = 1 + pad if (u, v) == (0, 1) else 1
            chain = [u] + list(range(nv, nv + inner)) + [v]
            nv += inner
            edges += list(zip(chain, chain[1:]))
    return make_graph(nv, edges)


def _f15(params):
    h, n = _need(params, "h", "n")
    _check(h >= 6, "need h >= 6")
    v0 = 2 * ((h - 2) + _c2(h - 2)) - 1
    _check(n >= v0, f"need n >= {v0} for h = {h}")
    g1 = _subdivided_clique(h - 2, n - v0)
    g2 = _subdivided_clique(h - 2, 0)
    g = clique_sum(g1, g2, [0], [0])
    return g, 4 * _c2(h - 2) + (n - v0)


def _f16(params):
    (variant,) = _need(params, "variant")
    w8 = named_graph("wagner")
    k3 = standard_graph("complete", 3)
    if variant == "two_triangles":
        g = clique_sum(w8, k3, [0, 1], [0, 1])
        g = clique_sum(g, k3, [4, 5], [0, 1])
        return g, 16
    if variant == "k4_edge":
        g = clique_sum(w8, standard_graph("complete", 4), [0, 1], [0, 1])
        return g, 17
    raise BadParams(f"unknown variant {variant!r}")


def _f17(params):
    h, m = _need(params, "h", "m")
    _check(h >= 4 and m >= 1, "need h >= 4 and m >= 1")
    g = _union_of_cliques([h - 2] * ((h - 1) * m))
    return g, (h - 1) * m * _c2(h - 2)


def _f18(params):
    base = dict(params)
    v1 = base.pop("v1", None)
    kind = base.pop("base", None)
    if v1 is None or kind not in ("F4", "F5"):
        raise BadParams("need base in {'F4','F5'} and v1")
    g, e = (_f4 if kind == "F4" else _f5)(base)
    k = base["k"]
    _check(v1 - 1 >= k, "need v1-1 > k-1")
    extra = (v1 - 1) - (k - 1)
    mem = list(range(k - 1)) + list(range(g.n, g.n + extra))
    edges = list(g.edges()) + [
        (x, y) for p, x in enumerate(mem) for y in mem[p + 1:]
    ]
    g2 = make_graph(g.n + extra, set(edges))
    return g2, e + _c2(v1 - 1) - _c2(k - 1)


def _f19(params):
    (h,) = _need(params, "h")
    _check(h >= 5, "need h >= 5")
    g = clique_sum(
        standard_graph("complete", h - 2), standard_graph("complete", 3), [0], [0]
    )
    return g, _c2(h - 2) + 3


def _f20(params):
    m, n, variant = _need(params, "m", "n", "variant")
    _check(m >= 2, "need m >= 2")
    if variant == "bipartite":
        _check(n >= 2 * m, "need n >= 2m")
        g = standard_graph("complete_bipartite", 2 * m - 1, n - 2 * m + 1)
        return g, (2 * m - 1) * (n - 2 * m + 1)
    if variant == "clique_pendants":
        _check(n >= 3 * m, "need n >= 3m")
        core = 3 * m - 1
        edges = [(u, v) for u in range(core) for v in range(u + 1, core)]
        for j in range(n - core):
            edges.append((j % core, core + j))
        return make_graph(n, edges), _c2(core) + (n - core)
    raise BadParams(f"unknown variant {variant!r}")


_BUILDERS = {
    "F1": _f1, "F2": _f2, "F3": _f3, "F4": _f4, "F5": _f5, "F6": _f6, "F7": _f7,
    "F8": _f8, "F9": _f9, "F10": _f10, "F11": _f11, "F12": _f12,
    "F13": _f13, "F14": _f14, "F15": _f15, "F16": _f16, "F17": _f17,
    "F18": _f18, "F19": _f19, "F20": _f20,
}


def build_family(r: ConstructionRecipe) -> tuple[Graph, int]:
    """Build the graph of a recipe and its predicted edge count.

    The actual edge count is asserted against the closed form, so a
    successful return certifies the formula for these parameters.
    """
    g, predicted = _BUILDERS[r.family](dict(r.params))
    if g.n > MAX_VERTICES:
        raise TooLarge("construction exceeds vertex cap")
    actual = g.num_edges
    if actual != predicted:
        raise AssertionError(
            f"{r.family}{r.params}: built {actual} edges, formula says {predicted}"
        )
    return g, predicted


def identify_copies(c: Graph, v: int, m: int) -> Graph:
    """m copies of a connected graph c glued at vertex v (1-clique-sums)."""
    if not 0 <= v < c.n:
        raise BadParams("vertex out of range")
    if m < 1:
        raise BadParams("need m >= 1")
    g = c
    for _ in range(m - 1):
        g = clique_sum(g, c, [v], [v])
    return g


def k5_witnesses_14() -> dict[int, Graph]:
    """14-vertex edge-maximal K5-free graphs, one per known edge count.

    Clique-sums of the Wagner graph with triangles, K4s and planar
    triangulations realise every count in 23..29; the triangulation
    alone gives 36.  Membership only: no completeness claim.
    """
    w8 = named_graph("wagner")
    k3 = standard_graph("complete", 3)
    k4 = standard_graph("complete", 4)

    def tri(n):
        return _f3({"n": n})[0]

    def glue(g, h, eg):
        return clique_sum(g, h, list(eg), [0, 1])

    rim = [(0, 1), (2, 3), (4, 5), (6, 7)]
    chords = [(0, 4), (2, 6)]
    out = {}
    out[23] = clique_sum(w8, w8, [0, 1], [0, 1])
    g = w8
    for e in rim + chords:
        g = glue(g, k3, e)
    out[24] = g
    g = w8
    for e in rim:
        g = glue(g, k3, e)
    out[25] = glue(g, k4, chords[0])
    g = w8
    for e in rim[:2]:
        g = glue(g, k3, e)
    for e in rim[2:]:
        g = glue(g, k4, e)
    out[26] = g
    g = w8
    for e in rim[:3]:
        g = glue(g, k4, e)
    out[27] = g
    out[28] = glue(glue(w8, k4, rim[0]), tri(6), rim[1])
    out[29] = glue(w8, tri(8), rim[0])
    out[36] = tri(14)
    for e, g in out.items():
        assert g.n == 14 and g.num_edges == e
    return out


# -- Frobenius decomposition ---------------------------------------------


def frobenius_decompose(a1: int, a2: int, n_target: int) -> tuple[int, int]:
    """Smallest-b1 representation n_target = a1*b1 + a2*b2, b1, b2 >= 0."""
    if a1 < 1 or a2 < 1:
        raise BadParams("need positive a1, a2")
    if math.gcd(a1, a2) != 1:
        raise NotCoprime(f"gcd({a1}, {a2}) != 1")
    for b1 in range(n_target // a1 + 1):
        rest = n_target - a1 * b1
        if rest % a2 == 0:
            return b1, rest // a2
    # Sylvester: every value above a1*a2-a1-a2 is representable, so
    # reaching this point means n_target is at or below the bound
    raise BelowFrobenius(
        f"{n_target} has no representation; bound is {a1 * a2 - a1 - a2}"
    )


# -- certification -------------------------------------------------------


@dataclass(frozen=True)
class Certificate:
    """Machine-checked evidence that graph is edge-maximal free."""

    graph: Graph
    forbidden: ForbiddenSet
    predicted_edges: int
    checked_edge_count: int
    maximality: tuple  # ((u, v), minor_index, MinorModel) per non-edge

    def to_json_obj(self) -> dict:
        return {
            "graph": graph6_encode(self.graph).decode("ascii"),
            "forbidden": [
                graph6_encode(h).decode("ascii") for h in self.forbidden
            ],
            "predicted_edges": self.predicted_edges,
            "maximality": [
                {
                    "u": uv[0],
                    "v": uv[1],
                    "minor_of": idx,
                    "branch_sets": [sorted(s) for s in model.branch_sets],
                }
                for uv, idx, model in self.maximality
            ],
        }


def certify(
    g: Graph, f: ForbiddenSet, predicted_edges: int, force: bool = False
) -> Certificate:
    """Full check: edge count, freeness, and a minor model per non-edge."""
    if g.num_edges != predicted_edges:
        raise EdgeCountMismatch(f"graph has {g.num_edges}, predicted {predicted_edges}")
    if g.n > CERTIFY_GUARD and not force:
        raise TooLarge(f"certification beyond {CERTIFY_GUARD} vertices needs force")
    for idx, h in enumerate(f):
        model = find_minor_model(g, h)
        if model is not None:
            raise NotFree(idx, model)
    verdict = is_edge_maximal_free(g, f, collect_models=True, known_free=True)
    if not verdict.is_maximal:
        raise NotMaximal(verdict.non_edge)
    return Certificate(
        graph=g,
        forbidden=f,
        predicted_edges=predicted_edges,
        checked_edge_count=g.num_edges,
        maximality=verdict.non_edge_models,
    )
