from __future__ import annotations

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from forcekit.errors import NoDoublePendant, NotAForest, NotEligible
from forcekit.families import all_trees, cycle_graph, generalized_star
from forcekit.forcing import enumerate_minimal_zfs, zero_forcing_number
from forcekit.graph import Graph, components, is_forest
from forcekit.trees import (
    b_decomposition,
    exhaustive_star_removals,
    irrelevant_vertices,
    minimum_path_cover,
    pseudoleaf_realization,
    star_reduction,
    star_removal,
)
from helpers import ids, k13, path, trees
from oracles import naive_irrelevant, naive_z


class TestLayeredTree:
    def test_levels(self, layered):
        d = b_decomposition(layered)
        assert [lvl.vertices for lvl in d.levels] == [
            ids("v1", "left2lower", "leftdiagup2"),
            ids("right2", "veryleft2"),
            ids("rightupper2", "left2"),
        ]

    def test_first_level_pseudoleaves(self, layered):
        first = b_decomposition(layered).levels[0].pseudoleaves
        assert sum(len(p) for p in first.values()) == 7
        assert first[ids("leftdiagup2").pop()] == ids("leftdiagup3", "leftdiagdouble1", "leftdiagdouble2")

    def test_pseudoleaves_of_later_levels_were_interior(self, layered):
        d = b_decomposition(layered)
        assert d.levels[1].pseudoleaves[ids("right2").pop()] == ids("right1", "rightlower")

    def test_residuals(self, layered):
        d = b_decomposition(layered)
        assert len(components(d.residuals[1])) == 2
        last = d.residuals[-1]
        assert last.n == 2 and last.m == 1
        assert last.to_root(range(2)) == ids("veryleftup1", "veryleftup2")

    def test_star_reduction(self, layered):
        reduced, removed = star_reduction(layered)
        assert len(removed) == 10
        assert len(components(reduced)) == 2

    def test_irrelevant_modes_agree(self, layered):
        fast = irrelevant_vertices(layered)
        assert fast == b_decomposition(layered).b_vertices and len(fast) == 7

    def test_path_cover_size_is_z(self, layered):
        cover = minimum_path_cover(layered)
        assert len(cover) == zero_forcing_number(layered)[0]


class TestBDecomposition:
    def test_path_has_none(self):
        assert b_decomposition(path(6)).levels == ()

    def test_star(self):
        d = b_decomposition(k13())
        assert d.b_vertices == {0}
        assert d.levels[0].pseudoleaves == {0: {1, 2, 3}}
        assert d.residuals[-1].n == 0

    def test_cycle_with_leaves(self):
        g = Graph(5, [(0, 1), (1, 2), (2, 0), (0, 3), (0, 4)])
        assert b_decomposition(g).b_vertices == {0}

    @given(trees(max_n=12))
    def test_levels_are_disjoint_and_residuals_shrink(self, t):
        d = b_decomposition(t)
        seen = set()
        for lvl in d.levels:
            block = set(lvl.vertices)
            for b, ps in lvl.pseudoleaves.items():
                assert len(ps) >= 2
                block |= set(ps)
            assert not block & seen
            seen |= block
        sizes = [r.n for r in d.residuals]
        assert sizes == sorted(sizes, reverse=True)
        assert sizes[-1] == t.n - len(seen)

    def test_coloring(self):
        colors = b_decomposition(k13()).coloring()
        assert colors == {0: "B0", 1: "pseudoleaf", 2: "pseudoleaf", 3: "pseudoleaf"}


class TestStarRemoval:
    def test_k13(self):
        assert star_removal(k13(), 0).n == 0

    def test_not_eligible(self):
        with pytest.raises(NotEligible):
            star_removal(path(4), 1)

    def test_reduction_needs_a_candidate(self):
        with pytest.raises(NoDoublePendant):
            star_reduction(path(5))

    def test_origin_points_to_root(self):
        g = generalized_star([1, 1, 2])
        rest = star_removal(g, 0)
        assert rest.n == 2 and rest.to_root(range(rest.n)) == {3, 4}

    def test_exhaustive_trace(self):
        trace = exhaustive_star_removals(generalized_star([1, 1, 3]))
        assert [s.vertex for s in trace.steps] == [0, 4]
        assert trace.final.n == 0

    def test_reduction_vs_removal_example(self):
        # star reduction keeps w=3 as an isolated vertex; sequential removal eats it
        t = Graph(7, [(0, 1), (0, 2), (0, 3), (3, 4), (4, 5), (4, 6)])
        reduced, _ = star_reduction(t)
        assert reduced.to_root(range(reduced.n)) == {3}
        assert exhaustive_star_removals(t).final.n == 0

    @settings(max_examples=80)
    @given(trees(max_n=12), st.integers(0, 2**16))
    def test_removals_at_vb_are_order_independent(self, t, salt):
        try:
            reduced, removed = star_reduction(t)
        except NoDoublePendant:
            return
        vb = [v for v in removed if len([w for w in t.neighbors(v) if t.degree(w) == 1]) >= 2]
        rng = random.Random(salt)
        finals = set()
        for _ in range(3):
            order = vb[:]
            rng.shuffle(order)
            g = t
            for v in order:
                g = star_removal(g, sorted(g.to_root(range(g.n))).index(v))
            finals.add(frozenset(g.to_root(range(g.n))))
        assert len(finals) == 1
        left = set(next(iter(finals)))
        kept = set(reduced.to_root(range(reduced.n)))
        swallowed = {v for v in kept if all(w in vb for w in t.neighbors(v)) and t.degree(v) >= 1}
        assert left == kept - swallowed


class TestMinimumPathCover:
    def test_examples(self):
        assert minimum_path_cover(path(4)) == [(0, 1, 2, 3)]
        assert len(minimum_path_cover(k13())) == 2
        assert len(minimum_path_cover(generalized_star([2, 2, 2]))) == 2

    def test_forest(self):
        g = Graph(5, [(0, 1), (2, 3)])
        assert minimum_path_cover(g) == [(0, 1), (2, 3), (4,)]

    def test_not_a_forest(self):
        with pytest.raises(NotAForest):
            minimum_path_cover(cycle_graph(4))

    @given(trees(max_n=12))
    def test_is_a_path_cover(self, t):
        cover = minimum_path_cover(t)
        flat = [v for p in cover for v in p]
        assert sorted(flat) == list(range(t.n))
        for p in cover:
            assert all(t.has_edge(a, b) for a, b in zip(p, p[1:]))

    def test_size_equals_z_on_all_small_trees(self):
        for n in range(1, 10):
            for t in all_trees(n):
                assert len(minimum_path_cover(t)) == naive_z(t.n, t.edges())

    @settings(max_examples=40)
    @given(trees(min_n=10, max_n=12))
    def test_size_equals_brute_z_up_to_12(self, t):
        assert len(minimum_path_cover(t)) == naive_z(t.n, t.edges())


class TestIrrelevant:
    def test_p3(self):
        assert irrelevant_vertices(path(3)) == {1}
        assert irrelevant_vertices(path(3), mode="oracle") == {1}

    def test_fast_mode_rejects_cycles(self):
        with pytest.raises(NotAForest):
            irrelevant_vertices(cycle_graph(5))

    def test_unknown_mode(self):
        with pytest.raises(ValueError):
            irrelevant_vertices(path(3), mode="magic")

    def test_modes_agree_on_all_trees(self):
        for n in range(1, 11):
            for t in all_trees(n):
                assert irrelevant_vertices(t) == irrelevant_vertices(t, mode="oracle"), t.edges()

    @settings(max_examples=40)
    @given(trees(max_n=9))
    def test_oracle_against_naive(self, t):
        assert irrelevant_vertices(t, mode="oracle") == naive_irrelevant(t.n, t.edges())


class TestPseudoleafRealization:
    @settings(max_examples=60)
    @given(trees(max_n=10), st.data())
    def test_b_vertices_forced_by_their_pseudoleaves(self, t, data):
        d = b_decomposition(t)
        seed = data.draw(st.sampled_from(enumerate_minimal_zfs(t).sets))
        r = pseudoleaf_realization(t, seed, d)
        owner = d.pseudoleaf_owner()
        forcer = r.forcer_of()
        for b in d.b_vertices:
            assert b not in seed
            assert owner[forcer[b]] == b

    def test_general_graph_counterexample(self):
        # a B-vertex that is not irrelevant once the graph has a cycle
        g = Graph(6, [(0, 2), (0, 3), (0, 4), (0, 5), (1, 3), (3, 4)])
        d = b_decomposition(g)
        assert [lvl.vertices for lvl in d.levels] == [{0}, {3}]
        assert {2, 3, 5} in enumerate_minimal_zfs(g).sets
        assert 3 not in irrelevant_vertices(g, mode="oracle")
        assert not is_forest(g)
