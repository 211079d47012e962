from fractions import Fraction

import pytest

from minorgap import (
    ConstructionRecipe,
    ForbiddenSet,
    addability,
    build_family,
    classify_connected,
    disjoint_union,
    edge_spectrum,
    gap_sequence,
    impurity_threshold,
    make_graph,
    monotonicity_checks,
    named_graph,
    standard_graph,
)
from minorgap.errors import BadParams, NotConnected, PreconditionUnmet, TooSmall

from conftest import forbid


def test_addability_flags():
    flags = addability(forbid("k5"))
    assert flags.decomposable and flags.addable
    flags = addability(forbid("claw"))
    assert flags.decomposable and not flags.addable
    flags = addability(forbid("k2"))
    assert flags.decomposable and not flags.addable
    two = ForbiddenSet([disjoint_union(named_graph("k3"), named_graph("k3"))])
    flags = addability(two)
    assert not flags.decomposable and not flags.addable


def test_impurity_threshold():
    assert impurity_threshold(5, Fraction(3, 2)) == 7
    assert impurity_threshold(4, 1) == 4
    with pytest.raises(BadParams):
        impurity_threshold(1, 1)
    with pytest.raises(BadParams):
        impurity_threshold(5, Fraction(1, 2))


PURE = ["k2", "k3", "k4", "p3"]
NEAR_PURE = {"claw": 1, "pan": 1}
LINEAR = {
    "p4": Fraction(1, 2),
    "bull": Fraction(1, 2),
    "h1": Fraction(1, 2),
    "h2": Fraction(1),
    "h3": Fraction(2, 3),
    "k5": Fraction(7, 6),
    "k6": Fraction(7, 6),
    "c5": Fraction(1, 10),
    "petersen": Fraction(1, 20),
    "bowtie": Fraction(1, 2),
}


def test_classification_battery():
    for name in PURE:
        assert classify_connected(named_graph(name)).verdict == "Pure", name
    for name, g in NEAR_PURE.items():
        v = classify_connected(named_graph(name))
        assert v.verdict == "NearPure" and v.known_gap == g, name
    for name, rate in LINEAR.items():
        v = classify_connected(named_graph(name))
        assert v.verdict == "LinearlyImpure", name
        assert v.limp_lower_bound == rate, name


def test_classification_leaf_cases():
    k5 = [(u, v) for u in range(5) for v in range(u + 1, 5)]
    plus_leaf = make_graph(6, k5 + [(0, 5)])
    v = classify_connected(plus_leaf)
    assert v.verdict == "LinearlyImpure" and v.limp_lower_bound == Fraction(1)
    plus_two = make_graph(7, k5 + [(0, 5), (1, 6)])
    v = classify_connected(plus_two)
    assert v.verdict == "LinearlyImpure" and v.limp_lower_bound == Fraction(3, 2)


def test_classification_rejects_bad_input():
    with pytest.raises(TooSmall):
        classify_connected(make_graph(1, []))
    with pytest.raises(NotConnected):
        classify_connected(disjoint_union(named_graph("k3"), named_graph("k2")))


def test_gap_sequence_exact():
    gs = gap_sequence(forbid("claw"), range(4, 8))
    assert [r.gap for r in gs.rows] == [1, 1, 1, 1]
    assert all(r.exact for r in gs.rows)
    assert gs.limp_lower_estimate == Fraction(1, 4)
    tsv = gs.to_tsv()
    assert tsv.startswith("n\tm_minus\tm_plus\tgap\texact")
    assert len(tsv.strip().splitlines()) == 5
    obj = gs.to_json_obj()
    assert obj["rows"][0]["n"] == 4
    assert obj["limp_lower_estimate"] == [1, 4]


def test_gap_sequence_witnessed():
    gs = gap_sequence(forbid("h2"), range(6, 11), mode="witnessed")
    assert [r.n for r in gs.rows] == list(range(6, 11))
    assert [r.gap for r in gs.rows] == [n - 3 for n in range(6, 11)]
    assert not any(r.exact for r in gs.rows)
    with pytest.raises(BadParams):
        gap_sequence(forbid("h2"), range(6, 8), mode="bogus")
    with pytest.raises(BadParams):
        gap_sequence(forbid("k3", "k4"), range(4, 6), mode="witnessed")


def test_gap_sequence_witnessed_k5():
    gs = gap_sequence(forbid("k5"), range(8, 15), mode="witnessed")
    # only n = 8 and n = 14 hit the 6k+2 pattern
    assert [r.n for r in gs.rows] == [8, 14]
    assert [(r.m_minus, r.m_plus) for r in gs.rows] == [(12, 18), (23, 36)]


def test_monotonicity_checks():
    f = forbid("k4")
    spectra = [edge_spectrum(n, f) for n in range(2, 9)]
    rep = monotonicity_checks(spectra)
    assert rep.violations == ()
    assert rep.superadditive_pairs > 0
    assert rep.subadditive_pairs > 0
    # claw is connected but not 2-connected: subadditivity is skipped
    fc = forbid("claw")
    rep = monotonicity_checks([edge_spectrum(n, fc) for n in range(4, 9)])
    assert rep.subadditive_pairs == 0
    assert "skipped" in rep.notes
    with pytest.raises(PreconditionUnmet):
        monotonicity_checks([])
    two = ForbiddenSet([disjoint_union(named_graph("k3"), named_graph("k3"))])
    with pytest.raises(PreconditionUnmet):
        monotonicity_checks([edge_spectrum(6, two)])
