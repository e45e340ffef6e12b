from __future__ import annotations

import pytest
from hypothesis import given, settings

from forcekit.errors import NotAForest
from forcekit.families import all_trees, build, cycle_graph, generalized_star
from forcekit.graph import Graph, is_tree
from forcekit.wellforced import (
    Method,
    Obstruction,
    genstar_well_forced,
    is_well_forced_oracle,
    is_well_forced_tree,
    path_well_forced,
    report_for_tree,
    structural_witness,
)
from helpers import graphs, k13, path, trees
from oracles import naive_well_forced
from test_graph import two_center_tree


class TestTreeAlgorithm:
    @pytest.mark.parametrize(
        "g, verdict",
        [
            (path(1), True),
            (path(2), True),
            (path(3), True),
            (path(4), False),
            (k13(), True),
            (generalized_star([1, 1, 3]), True),
            (generalized_star([1, 1, 4]), False),
            (generalized_star([2, 2, 2]), False),
            (two_center_tree(), False),
        ],
    )
    def test_examples(self, g, verdict):
        assert is_well_forced_tree(g)[0] is verdict
        assert is_well_forced_oracle(g).verdict is verdict

    def test_rejects_cycles(self):
        with pytest.raises(NotAForest):
            is_well_forced_tree(cycle_graph(4))

    def test_small_inputs_are_noted(self):
        verdict, trace = is_well_forced_tree(path(1))
        assert verdict and any("K1" in note for note in trace.notes)
        assert any("2 vertices" in note for note in is_well_forced_tree(path(2))[1].notes)

    def test_forest_with_isolated_vertex(self):
        verdict, trace = is_well_forced_tree(Graph(5, [(0, 1), (0, 2), (0, 3)]))
        assert verdict and any("{4}" in note for note in trace.notes)

    def test_layered_tree(self, layered):
        assert is_well_forced_tree(layered)[0] is True

    def test_agrees_with_oracle_on_all_trees(self):
        for n in range(1, 11):
            for t in all_trees(n):
                assert is_well_forced_tree(t)[0] == is_well_forced_oracle(t).verdict, t.edges()

    @settings(max_examples=40)
    @given(trees(max_n=8))
    def test_agrees_with_naive(self, t):
        assert is_well_forced_tree(t)[0] == naive_well_forced(t.n, t.edges())

    def test_report(self):
        report = report_for_tree(path(4))
        assert report.verdict is False and report.method is Method.TREE_ALGORITHM


class TestOracle:
    def test_c5_is_well_forced(self):
        r = is_well_forced_oracle(cycle_graph(5))
        assert r.verdict and r.spectrum == (2,) and r.z == 2 and r.witness is None

    def test_witness_sizes(self):
        r = is_well_forced_oracle(path(4))
        small, large = r.witness
        assert (len(small), len(large)) == (1, 2)

    @settings(max_examples=60)
    @given(graphs(min_n=1, max_n=8))
    def test_against_naive(self, g):
        assert is_well_forced_oracle(g).verdict == naive_well_forced(g.n, g.edges())


class TestStructuralWitness:
    def test_long_pendent_path(self):
        assert structural_witness(path(5)) == Obstruction("long-pendent-path", (0, 1, 2, 3, 4))

    def test_four_vertex_path_is_not_long(self):
        assert structural_witness(cycle_graph(4)) is None
        assert structural_witness(build("cyclepend:4")) is None

    def test_two_center_tree(self):
        w = structural_witness(two_center_tree())
        assert w.kind == "all-long-legs-pgs" and set(w.location) == {0, 2, 3, 4, 5}

    def test_no_double_pendant_tree(self):
        w = structural_witness(generalized_star([2, 2, 2]))
        assert w.kind == "no-double-pendant-tree"

    def test_c6_has_none(self):
        assert structural_witness(cycle_graph(6)) is None

    def test_json(self):
        assert Obstruction("x", (1, 2)).to_json() == {"kind": "x", "location": [1, 2]}

    @settings(max_examples=150)
    @given(graphs(min_n=1, max_n=8))
    def test_sound_on_random_graphs(self, g):
        if structural_witness(g) is not None:
            assert not naive_well_forced(g.n, g.edges())

    def test_sound_on_all_trees(self):
        for n in range(1, 11):
            for t in all_trees(n):
                if structural_witness(t) is not None:
                    assert not is_well_forced_oracle(t).verdict


class TestFamilyTheorems:
    def test_paths(self):
        for n in range(1, 10):
            assert path_well_forced(n) == is_well_forced_oracle(path(n)).verdict

    def test_genstar_against_oracle(self):
        from itertools import combinations_with_replacement

        for k in range(2, 5):
            for legs in combinations_with_replacement(range(1, 6), k):
                if 1 + sum(legs) > 14:
                    continue
                g = generalized_star(legs)
                assert genstar_well_forced(legs) == is_well_forced_oracle(g).verdict, legs
                assert is_tree(g)

    def test_genstar_bad_input(self):
        with pytest.raises(ValueError):
            genstar_well_forced([3])
        with pytest.raises(ValueError):
            genstar_well_forced([0, 2])
