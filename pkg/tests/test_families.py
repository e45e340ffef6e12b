from __future__ import annotations

from itertools import combinations, product

import networkx as nx
import pytest
from hypothesis import given

from forcekit.errors import InstanceTooLarge, InvalidFamily
from forcekit.families import (
    FamilySpec,
    all_trees,
    build,
    canonical_code,
    centroids,
    corona,
    generalized_star,
    join,
    parse_family,
    prufer_decode,
    random_connected_graph,
    random_tree,
    tree_from_code,
)
from forcekit.graph import components, is_tree
from helpers import path, trees
from oracles import brute_canonical


class TestBuild:
    @pytest.mark.parametrize(
        "text, n, m",
        [
            ("path:1", 1, 0),
            ("path:5", 5, 4),
            ("cycle:3", 3, 3),
            ("star:3", 4, 3),
            ("star:0", 1, 0),
            ("genstar:1,1,3", 6, 5),
            ("complete:5", 5, 10),
            ("empty:3", 3, 0),
            ("kpartite:2,3", 5, 6),
            ("kpartite:1,1,1", 3, 3),
            ("wheel:5", 5, 8),
            ("cyclepend:4", 5, 5),
            ("join:path:2+empty:2", 4, 5),
            ("corona:path:3", 6, 5),
            ("corona:join:path:2+path:2", 8, 10),
            ("generalized-star:2,2", 5, 4),
            ("cycle-with-pendant:3", 4, 4),
        ],
    )
    def test_sizes(self, text, n, m):
        g = build(text)
        assert (g.n, g.m) == (n, m)

    def test_genstar_numbering(self):
        g = generalized_star([1, 2])
        assert g.edges() == [(0, 1), (0, 2), (2, 3)]

    def test_corona_leaf_numbering(self):
        g = corona(path(3))
        assert all(g.has_edge(v, 3 + v) and g.degree(3 + v) == 1 for v in range(3))

    def test_join_adds_cross_edges(self):
        g = join(build("empty:2"), build("empty:3"))
        assert g.m == 6 and not g.has_edge(0, 1)

    def test_wheel_rim(self):
        g = build("wheel:5")
        assert g.degree(0) == 4 and all(g.degree(v) == 3 for v in range(1, 5))

    @pytest.mark.parametrize(
        "text",
        ["cycle:2", "genstar:3", "genstar:0,2", "kpartite:3", "blob:3", "path", "path:x", "join:path:2", "wheel:3", "path:0"],
    )
    def test_invalid(self, text):
        with pytest.raises(InvalidFamily):
            build(text)

    def test_spec_round_trip(self):
        for text in ["genstar:1,1,3", "corona:cycle:4", "join:path:2+kpartite:1,2"]:
            assert str(parse_family(text)) == text

    def test_spec_aliases(self):
        assert FamilySpec("complete-multipartite", (2, 2)).kind == "kpartite"


class TestRandom:
    def test_random_tree_deterministic(self):
        assert random_tree(12, 5) == random_tree(12, 5)
        assert is_tree(random_tree(12, 5))

    def test_random_tree_varies_with_seed(self):
        assert len({random_tree(10, s).edges().__repr__() for s in range(20)}) > 1

    def test_random_connected(self):
        for s in range(30):
            g = random_connected_graph(8, s)
            assert len(components(g)) == 1
            assert g == random_connected_graph(8, s)

    def test_density_zero_is_a_tree(self):
        assert is_tree(random_connected_graph(9, 3, p=0.0))

    def test_prufer_examples(self):
        assert prufer_decode([], 2).edges() == [(0, 1)]
        assert prufer_decode([3, 3, 3], 5).edges() == [(0, 3), (1, 3), (2, 3), (3, 4)]
        with pytest.raises(ValueError):
            prufer_decode([0], 4)


class TestCanonical:
    @given(trees(min_n=1, max_n=8))
    def test_code_round_trip(self, t):
        assert canonical_code(tree_from_code(canonical_code(t))) == canonical_code(t)

    @given(trees(min_n=1, max_n=7), trees(min_n=1, max_n=7))
    def test_code_decides_isomorphism(self, a, b):
        same = a.n == b.n and brute_canonical(a.n, a.edges()) == brute_canonical(b.n, b.edges())
        assert (canonical_code(a) == canonical_code(b)) == same

    def test_centroids(self):
        assert centroids(path(4)) == [1, 2]
        assert centroids(path(5)) == [2]

    def test_rejects_cycles(self):
        with pytest.raises(ValueError):
            canonical_code(build("cycle:4"))


class TestAllTrees:
    def test_counts(self):
        counts = [sum(1 for _ in all_trees(n)) for n in range(1, 13)]
        assert counts == [1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551]

    def test_counts_match_networkx(self):
        for n in range(2, 11):
            assert sum(1 for _ in all_trees(n)) == sum(1 for _ in nx.nonisomorphic_trees(n))

    @pytest.mark.parametrize("n", range(2, 9))
    def test_against_prufer_dedup(self, n):
        seen = {canonical_code(prufer_decode(seq, n)) for seq in product(range(n), repeat=n - 2)}
        assert sorted(seen) == [canonical_code(t) for t in all_trees(n)]

    def test_pairwise_non_isomorphic(self):
        for n in range(1, 8):
            keys = [brute_canonical(t.n, t.edges()) for t in all_trees(n)]
            assert len(keys) == len(set(keys))
            assert all(is_tree(t) for t in all_trees(n))

    def test_cap(self):
        with pytest.raises(InstanceTooLarge):
            list(all_trees(13))

    def test_deterministic(self):
        assert [t.edges() for t in all_trees(7)] == [t.edges() for t in all_trees(7)]


def test_edges_are_pairs_of_distinct_vertices():
    for text in ["wheel:7", "kpartite:2,2,3", "corona:complete:4"]:
        g = build(text)
        for u, v in g.edges():
            assert u < v
        assert len(set(g.edges())) == g.m
        assert set(combinations(range(g.n), 2)) >= set(g.edges())
