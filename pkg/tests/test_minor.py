import pytest

from minorgap import (
    ForbiddenSet,
    MinorModel,
    add_edge,
    disjoint_union,
    find_minor_model,
    has_minor,
    is_edge_maximal_free,
    is_free,
    make_graph,
    naive_has_minor,
    named_graph,
    standard_graph,
    verify_model,
)
from minorgap.errors import NotConnected, TooLarge
from minorgap.minor import has_strong_separating_vertex, is_leaf_and_edge_maximal

from conftest import forbid, random_graph


def test_known_containments():
    assert has_minor(named_graph("k6"), named_graph("k5"))
    assert has_minor(named_graph("petersen"), named_graph("k5"))
    assert not has_minor(named_graph("wagner"), named_graph("k5"))
    assert has_minor(named_graph("wagner"), named_graph("k4"))
    assert has_minor(standard_graph("cycle", 9), named_graph("c4"))
    assert not has_minor(standard_graph("path", 9), named_graph("c3"))
    assert not has_minor(standard_graph("complete_bipartite", 2, 9),
                         named_graph("k4"))


def test_models_verify():
    g = named_graph("petersen")
    model = find_minor_model(g, named_graph("k5"))
    assert model is not None
    assert verify_model(g, named_graph("k5"), model)


def test_verify_model_rejects_bad_models():
    g = standard_graph("complete", 4)
    h = named_graph("k3")
    good = find_minor_model(g, h)
    assert verify_model(g, h, good)
    # wrong arity
    assert not verify_model(g, h, MinorModel(good.branch_sets[:2]))
    # overlapping sets
    assert not verify_model(
        g, h, MinorModel((frozenset([0]), frozenset([0]), frozenset([1])))
    )
    # disconnected branch set
    gp = standard_graph("path", 4)
    assert not verify_model(
        gp, named_graph("p3"),
        MinorModel((frozenset([0, 2]), frozenset([1]), frozenset([3]))),
    )
    # out of range vertex
    assert not verify_model(
        g, h, MinorModel((frozenset([0]), frozenset([1]), frozenset([9])))
    )


def test_disconnected_minor_in_one_component():
    # both claws must fit inside the single wheel component, which
    # requires backtracking over placements of the first claw
    claw = named_graph("claw")
    two_claws = disjoint_union(claw, claw)
    w = standard_graph("wheel", 10)
    assert not has_minor(w, two_claws)
    assert has_minor(add_edge(w, 0, 2), two_claws)


def test_disconnected_minor_across_components():
    g = disjoint_union(named_graph("k4"), named_graph("c5"))
    h = disjoint_union(named_graph("k3"), named_graph("c3"))
    assert has_minor(g, h)
    # C5 contracts to K3 but never to K4
    assert not has_minor(g, disjoint_union(named_graph("k4"), named_graph("k4")))


def test_anchored_search_agrees(rng):
    h = named_graph("k4")
    found = 0
    for _ in range(200):
        g = random_graph(rng, 7, 0.5)
        plain = has_minor(g, h)
        if not plain:
            continue
        found += 1
        hit_any = any(
            find_minor_model(g, h, require_vertex=v) is not None for v in range(g.n)
        )
        assert hit_any
    assert found > 20


def test_oracle_agreement_small(rng):
    minors = [named_graph(x) for x in ("k3", "claw", "p4", "c4")]
    for _ in range(300):
        g = random_graph(rng, rng.randint(4, 6), rng.random())
        for h in minors:
            assert has_minor(g, h) == naive_has_minor(g, h)


def test_naive_guard():
    with pytest.raises(TooLarge):
        naive_has_minor(standard_graph("complete", 10), named_graph("k3"))


def test_is_free_and_maximality():
    f = forbid("k4")
    assert is_free(standard_graph("cycle", 6), f)
    assert not is_free(standard_graph("complete", 5), f)
    # maximal K4-free graphs on n vertices have 2n-3 edges
    g = make_graph(5, [(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (2, 3), (3, 4)])
    verdict = is_edge_maximal_free(g, f)
    assert verdict.is_maximal
    assert verdict.status == "maximal"
    sparse = is_edge_maximal_free(standard_graph("path", 5), f)
    assert sparse.status == "extendable"
    assert sparse.non_edge is not None
    dense = is_edge_maximal_free(standard_graph("complete", 5), f)
    assert dense.status == "not_free"
    assert verify_model(standard_graph("complete", 5), named_graph("k4"), dense.model)


def test_maximality_collect_models():
    f = forbid("k3")
    g = standard_graph("star", 5)  # maximal K3-free (a tree)
    verdict = is_edge_maximal_free(g, f, collect_models=True)
    assert verdict.is_maximal
    assert len(verdict.non_edge_models) == g.n * (g.n - 1) // 2 - g.num_edges
    for (u, v), idx, model in verdict.non_edge_models:
        assert idx == 0
        assert verify_model(add_edge(g, u, v), named_graph("k3"), model)


def test_strong_separating_vertex():
    assert has_strong_separating_vertex(named_graph("bowtie")) is not None
    assert has_strong_separating_vertex(named_graph("k5")) is None
    assert has_strong_separating_vertex(named_graph("pan")) is None
    assert has_strong_separating_vertex(named_graph("claw")) is not None
    with pytest.raises(NotConnected):
        has_strong_separating_vertex(
            disjoint_union(named_graph("k3"), named_graph("k3"))
        )


def test_leaf_and_edge_maximal():
    # a chord or a pendant on a long cycle both create a pan minor
    assert is_leaf_and_edge_maximal(standard_graph("cycle", 6), named_graph("pan"))
    assert not is_leaf_and_edge_maximal(standard_graph("path", 4), named_graph("k3"))


def test_forbidden_set_validation():
    with pytest.raises(ValueError):
        ForbiddenSet([])
    with pytest.raises(ValueError):
        ForbiddenSet([make_graph(2, [])])
