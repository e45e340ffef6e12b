"""B-vertex decomposition, star removals, path covers and irrelevant vertices."""

from __future__ import annotations

from collections.abc import Callable, Iterable
from dataclasses import dataclass, field

from .errors import NoDoublePendant, NotAForest, NotEligible
from .forcing import Realization, closure, enumerate_minimal_zfs
from .graph import Graph, VertexSet, components, is_forest, iter_bits, leaf_neighbors


def _popcount(x: int) -> int:
    return bin(x).count("1")


def _leaf_mask(g: Graph, alive: int) -> int:
    leaves = 0
    for v in iter_bits(alive):
        if _popcount(g.nbr_mask(v) & alive) == 1:
            leaves |= 1 << v
    return leaves


def _double_pendant_vertices(g: Graph, alive: int) -> dict[int, int]:
    """Alive vertices with at least two alive degree-one neighbours, mapped to those neighbours."""
    leaves = _leaf_mask(g, alive)
    out = {}
    for v in iter_bits(alive):
        own = g.nbr_mask(v) & leaves
        if own & (own - 1):
            out[v] = own
    return out


@dataclass(frozen=True)
class BLevel:
    vertices: VertexSet
    pseudoleaves: dict[int, VertexSet]


@dataclass(frozen=True)
class BDecomposition:
    """Layers B_0, B_1, ... and the residual graphs G_0 = G, G_1, ...

    Level vertex ids are those of the decomposed graph; residual graphs are
    renumbered but carry ``origin`` back to it.
    """

    levels: tuple[BLevel, ...]
    residuals: tuple[Graph, ...]

    @property
    def b_vertices(self) -> VertexSet:
        mask = 0
        for level in self.levels:
            mask |= level.vertices.mask
        return VertexSet.from_mask(mask)

    def level_of(self) -> dict[int, int]:
        return {v: i for i, level in enumerate(self.levels) for v in level.vertices}

    def pseudoleaf_owner(self) -> dict[int, int]:
        """Map each pseudoleaf to the B-vertex it was removed with."""
        return {p: b for level in self.levels for b, ps in level.pseudoleaves.items() for p in ps}

    def coloring(self) -> dict[int, str]:
        colors = {p: "pseudoleaf" for p in self.pseudoleaf_owner()}
        colors.update({v: f"B{i}" for v, i in self.level_of().items()})
        return colors


def b_decomposition(g: Graph) -> BDecomposition:
    """Peel double-pendant vertices and their degree-one neighbours level by level."""
    alive = g.full_mask
    levels = []
    residuals = [g]
    while True:
        found = _double_pendant_vertices(g, alive)
        if not found:
            break
        removed = 0
        for b, leaves in found.items():
            removed |= 1 << b | leaves
        levels.append(
            BLevel(
                VertexSet(found),
                {b: VertexSet.from_mask(leaves) for b, leaves in found.items()},
            )
        )
        alive &= ~removed
        residuals.append(g.subgraph(iter_bits(alive)))
    return BDecomposition(tuple(levels), tuple(residuals))


def star_reduction(g: Graph) -> tuple[Graph, VertexSet]:
    """Delete every vertex with a double pendant together with all of their leaves."""
    found = _double_pendant_vertices(g, g.full_mask)
    if not found:
        raise NoDoublePendant("no vertex has a double pendant")
    removed = 0
    for b, leaves in found.items():
        removed |= 1 << b | leaves
    return g.without(iter_bits(removed)), VertexSet.from_mask(removed)


def star_removal(g: Graph, v: int) -> Graph:
    """Delete L[v], the vertex ``v`` and its leaf neighbours; needs |L(v)| >= 2."""
    leaves = leaf_neighbors(g, v)
    if len(leaves) < 2:
        raise NotEligible(f"vertex {v} has {len(leaves)} leaf neighbour(s); star removal needs 2")
    return g.without(leaves.add(v))


@dataclass(frozen=True)
class ReductionStep:
    vertex: int
    removed: VertexSet
    snapshot: int
    remaining: VertexSet


@dataclass
class ReductionTrace:
    steps: list[ReductionStep] = field(default_factory=list)
    final: Graph | None = None
    notes: list[str] = field(default_factory=list)


def exhaustive_star_removals(
    g: Graph,
    choose: Callable[[list[int]], int] = min,
) -> ReductionTrace:
    """Perform star removals until no vertex has two leaf neighbours.

    ``choose`` picks among the eligible vertices (default: smallest id).
    The final forest is a subgraph of ``g`` with ``origin`` into its root.
    """
    alive = g.full_mask
    trace = ReductionTrace()
    while True:
        eligible = list(_double_pendant_vertices(g, alive))
        if not eligible:
            break
        v = choose(eligible)
        leaves = g.nbr_mask(v) & _leaf_mask(g, alive)
        removed = leaves | 1 << v
        alive &= ~removed
        trace.steps.append(
            ReductionStep(v, VertexSet.from_mask(removed), len(trace.steps) + 1, VertexSet.from_mask(alive))
        )
    trace.final = g.subgraph(iter_bits(alive))
    return trace


def minimum_path_cover(t: Graph) -> list[tuple[int, ...]]:
    """Minimum path cover of a forest.

    Bottom-up greedy: a vertex joins two open child paths through itself when
    it can (closing it), otherwise extends one, otherwise starts a new path.
    Paths are listed smaller end first, ordered by that end.
    """
    if not is_forest(t):
        raise NotAForest("minimum path cover needs a forest")
    chosen: list[list[int]] = [[] for _ in t.vertices()]
    open_end = [False] * t.n
    for comp in components(t):
        root = min(comp)
        order = []
        parent = {root: -1}
        stack = [root]
        while stack:
            v = stack.pop()
            order.append(v)
            for w in t.neighbors(v):
                if w != parent[v]:
                    parent[w] = v
                    stack.append(w)
        for v in reversed(order):
            kids = sorted(w for w in t.neighbors(v) if w != parent[v] and open_end[w])
            for w in kids[:2]:
                chosen[v].append(w)
                chosen[w].append(v)
            open_end[v] = len(kids) < 2
    paths = []
    done = [False] * t.n
    for v in t.vertices():
        if done[v] or len(chosen[v]) == 2:
            continue
        path = [v]
        done[v] = True
        prev = -1
        cur = v
        while True:
            nxt = [w for w in chosen[cur] if w != prev]
            if not nxt:
                break
            prev, cur = cur, nxt[0]
            path.append(cur)
            done[cur] = True
        if path[-1] < path[0]:
            path.reverse()
        paths.append(tuple(path))
    paths.sort()
    return paths


def irrelevant_vertices(g: Graph, mode: str = "tree-fast", cap: int | None = None) -> VertexSet:
    """Vertices lying in no minimal zero forcing set.

    ``tree-fast`` returns the B-vertices and only accepts forests;
    ``oracle`` enumerates every minimal zero forcing set.
    """
    if mode == "tree-fast":
        if not is_forest(g):
            raise NotAForest("tree-fast mode only applies to forests; use mode='oracle'")
        return b_decomposition(g).b_vertices
    if mode == "oracle":
        used = 0
        for s in enumerate_minimal_zfs(g, cap).sets:
            used |= s.mask
        return VertexSet.from_mask(g.full_mask & ~used)
    raise ValueError(f"unknown mode {mode!r}")


def pseudoleaf_realization(g: Graph, seed: Iterable[int], decomposition: BDecomposition | None = None) -> Realization:
    """Closure in which forces of a B-vertex by a non-pseudoleaf are postponed.

    Every other force keeps the smallest-forcer order; a B-vertex is forced by
    some other vertex only when nothing else can move.
    """
    decomposition = decomposition or b_decomposition(g)
    owner = decomposition.pseudoleaf_owner()
    b_set = decomposition.b_vertices

    def key(forcer: int, target: int):
        late = target in b_set and owner.get(forcer) != target
        return (late, forcer)

    return closure(g, seed, priority=key)[1]
