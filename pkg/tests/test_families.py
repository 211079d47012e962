import pytest

from minorgap import (
    Certificate,
    ConstructionRecipe,
    FAMILY_NAMES,
    ForbiddenSet,
    add_edge,
    build_family,
    certify,
    disjoint_union,
    frobenius_decompose,
    identify_copies,
    k5_witnesses_14,
    make_graph,
    named_graph,
    standard_graph,
    verify_model,
)
from minorgap.errors import (
    BadParams,
    BelowFrobenius,
    EdgeCountMismatch,
    NotCoprime,
    NotFree,
    NotMaximal,
    TooLarge,
)

from conftest import forbid

# at least five parameter points per family (fewer only where the
# domain itself is smaller); build_family asserts the closed-form edge
# count against the built graph
FAMILY_POINTS = {
    "F1": [{"h": h, "m": m, "r": r} for h, m, r in
           [(5, 1, 0), (5, 2, 3), (5, 3, 2), (6, 2, 0), (7, 1, 4), (4, 3, 1)]],
    "F2": [{"k": k} for k in (1, 2, 3, 4, 5)],
    "F3": [{"n": n} for n in (4, 5, 8, 10, 14, 20)],
    "F4": [{"h": h, "k": k, "m": m} for h, k, m in
           [(5, 2, 1), (5, 2, 2), (6, 2, 1), (6, 3, 1), (7, 2, 1), (5, 1, 2)]],
    "F5": [{"h": h, "k": k, "delta": d, "m": m} for h, k, d, m in
           [(5, 2, 2, 1), (5, 2, 2, 2), (6, 2, 2, 1), (6, 2, 3, 1),
            (6, 3, 2, 1), (7, 2, 4, 1)]],
    "F6": [{"h": h, "n": n} for h, n in
           [(5, 6), (5, 8), (6, 8), (6, 10), (7, 9), (7, 12)]],
    "F7": [{"h": 7, "delta_prime": 3, "variant": "ham10"},
           {"h": 7, "delta_prime": 3, "variant": "3-pendant"},
           {"h": 8, "delta_prime": 3, "variant": "3-pendant"},
           {"h": 9, "delta_prime": 4, "variant": "4-pendant"},
           {"h": 10, "delta_prime": 4, "variant": "3-pendant"},
           {"h": 10, "delta_prime": 5, "variant": "4-pendant"}],
    "F8": [{"h": h, "k": k} for h, k in
           [(6, 2), (7, 2), (7, 3), (8, 2), (8, 4), (9, 3)]],
    "F9": [{"h": h, "m": m} for h, m in
           [(6, 1), (6, 2), (6, 3), (7, 2), (8, 2), (7, 4)]],
    "F10": [{"n": 8, "variant": "plain"}, {"n": 8, "variant": "plus_isolated"},
            {"n": 8, "variant": "ear2"}, {"n": 8, "variant": "ear3"},
            {"n": 12, "variant": "plain"}, {"n": 5, "variant": "ear3"}],
    "F11": [{"t": 16, "n": 23, "variant": "wheel_cycle"},
            {"t": 16, "n": 23, "variant": "k5_theta_path"},
            {"t": 8, "n": 12, "variant": "wheel_cycle"},
            {"t": 5, "n": 10, "variant": "wheel_cycle"},
            {"t": 0, "n": 9, "variant": "k5_theta_path"},
            {"t": 0, "n": 7, "variant": "k5_theta_path"}],
    "F12": [{"n": n} for n in (4, 5, 6, 8, 10, 12)],
    "F13": [{"n": n} for n in (6, 7, 8, 9, 11, 12)],
    "F14": [{"k": k, "i": i} for k, i in
            [(1, 0), (1, 1), (2, 0), (2, 2), (3, 1), (4, 2)]],
    "F15": [{"h": 6, "n": 27}, {"h": 6, "n": 30}, {"h": 6, "n": 40},
            {"h": 7, "n": 49}, {"h": 7, "n": 55}],
    "F16": [{"variant": "two_triangles"}, {"variant": "k4_edge"}],
    "F17": [{"h": h, "m": m} for h, m in
            [(4, 1), (5, 1), (5, 2), (5, 3), (6, 1), (6, 2)]],
    "F18": [{"base": "F4", "h": 5, "k": 2, "m": 1, "v1": 4},
            {"base": "F4", "h": 6, "k": 2, "m": 1, "v1": 5},
            {"base": "F4", "h": 6, "k": 3, "m": 1, "v1": 5},
            {"base": "F5", "h": 5, "k": 2, "delta": 2, "m": 1, "v1": 4},
            {"base": "F5", "h": 6, "k": 2, "delta": 3, "m": 1, "v1": 5}],
    "F19": [{"h": h} for h in (5, 6, 7, 8, 9)],
    "F20": [{"m": 2, "n": 10, "variant": "bipartite"},
            {"m": 2, "n": 12, "variant": "clique_pendants"},
            {"m": 3, "n": 12, "variant": "bipartite"},
            {"m": 3, "n": 14, "variant": "clique_pendants"},
            {"m": 4, "n": 16, "variant": "bipartite"},
            {"m": 4, "n": 20, "variant": "clique_pendants"}],
}


def test_all_families_covered():
    assert set(FAMILY_POINTS) == set(FAMILY_NAMES)
    for fam, points in FAMILY_POINTS.items():
        # F16 has exactly two variants, everything else has >= 5 points
        assert len(points) >= (2 if fam == "F16" else 5), fam


@pytest.mark.parametrize("family", sorted(FAMILY_POINTS))
def test_family_formulas(family):
    for params in FAMILY_POINTS[family]:
        g, predicted = build_family(ConstructionRecipe(family, params))
        assert g.num_edges == predicted


def test_selected_closed_forms():
    g, e = build_family(ConstructionRecipe("F2", {"k": 2}))
    assert (g.n, e) == (14, 23)
    g, e = build_family(ConstructionRecipe("F3", {"n": 14}))
    assert (g.n, e) == (14, 36)
    g, e = build_family(ConstructionRecipe("F12", {"n": 10}))
    assert (g.n, e) == (10, 17)
    g, e = build_family(ConstructionRecipe("F13", {"n": 9}))
    assert (g.n, e) == (9, 9)
    g, e = build_family(ConstructionRecipe("F16", {"variant": "two_triangles"}))
    assert (g.n, e) == (10, 16)
    g, e = build_family(ConstructionRecipe("F16", {"variant": "k4_edge"}))
    assert (g.n, e) == (10, 17)


def test_family_name_aliases():
    by_code = build_family(ConstructionRecipe("F19", {"h": 6}))
    by_name = build_family(ConstructionRecipe("clique_triangle_shared", {"h": 6}))
    assert by_code == by_name
    with pytest.raises(BadParams):
        ConstructionRecipe("F99", {})


def test_param_validation():
    with pytest.raises(BadParams):
        build_family(ConstructionRecipe("F1", {"h": 5}))
    with pytest.raises(BadParams):
        build_family(ConstructionRecipe("F1", {"h": 5, "m": 1, "r": 9}))
    with pytest.raises(BadParams):
        build_family(ConstructionRecipe("F10", {"n": 8, "variant": "nope"}))
    with pytest.raises(BadParams):
        build_family(ConstructionRecipe("F1", {"h": 5, "m": 1, "r": 0, "x": 1}))


def test_identify_copies():
    bow = identify_copies(named_graph("k3"), 0, 2)
    assert bow.n == 5 and bow.num_edges == 6
    with pytest.raises(BadParams):
        identify_copies(named_graph("k3"), 5, 2)


def test_k5_witnesses_14():
    out = k5_witnesses_14()
    assert sorted(out) == [23, 24, 25, 26, 27, 28, 29, 36]
    for e, g in out.items():
        assert g.n == 14 and g.num_edges == e


def test_frobenius_decompose():
    assert frobenius_decompose(3, 5, 9) == (3, 0)
    assert frobenius_decompose(3, 5, 11) == (2, 1)
    b1, b2 = frobenius_decompose(4, 7, 30)
    assert 4 * b1 + 7 * b2 == 30
    with pytest.raises(NotCoprime):
        frobenius_decompose(4, 6, 20)
    with pytest.raises(BelowFrobenius):
        frobenius_decompose(3, 5, 7)
    with pytest.raises(BadParams):
        frobenius_decompose(0, 5, 7)


def test_certify_success_and_schema():
    g, e = build_family(ConstructionRecipe("F19", {"h": 7}))
    # K5 with two pendant leaves at distinct vertices
    h = make_graph(7, [(u, v) for u in range(5) for v in range(u + 1, 5)]
                   + [(0, 5), (1, 6)])
    cert = certify(g, ForbiddenSet([h]), e)
    assert isinstance(cert, Certificate)
    assert cert.checked_edge_count == e
    obj = cert.to_json_obj()
    assert set(obj) == {"graph", "forbidden", "predicted_edges", "maximality"}
    for entry in obj["maximality"]:
        assert set(entry) == {"u", "v", "minor_of", "branch_sets"}
    for uv, idx, model in cert.maximality:
        assert verify_model(add_edge(g, *uv), h, model)


def test_certify_failures():
    with pytest.raises(EdgeCountMismatch):
        certify(named_graph("k4"), forbid("k5"), 5)
    with pytest.raises(NotFree) as ei:
        certify(named_graph("k5"), forbid("k5"), 10)
    assert ei.value.minor_index == 0
    with pytest.raises(NotMaximal) as ei:
        certify(standard_graph("path", 4), forbid("k4"), 3)
    assert ei.value.non_edge is not None
    with pytest.raises(TooLarge):
        certify(make_graph(30, []), forbid("k3"), 0)
