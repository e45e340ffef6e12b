"""Deciding whether every minimal zero forcing set has the same size."""

from __future__ import annotations

from collections import Counter
from collections.abc import Sequence
from dataclasses import dataclass, field
from enum import Enum

from .errors import NotAForest
from .forcing import enumerate_minimal_zfs
from .graph import Graph, VertexSet, components, find_pendent_generalized_stars, is_forest, is_tree, pendent_paths
from .trees import ReductionTrace, _double_pendant_vertices, exhaustive_star_removals


class Method(str, Enum):
    TREE_ALGORITHM = "tree-algorithm"
    ORACLE = "oracle"
    STRUCTURAL_WITNESS = "structural-witness"
    FAMILY_THEOREM = "family-theorem"


@dataclass(frozen=True)
class Obstruction:
    """A substructure certifying that a graph is not well-forced."""

    kind: str
    location: tuple[int, ...]

    def to_json(self) -> dict:
        return {"kind": self.kind, "location": list(self.location)}


@dataclass
class WellForcedReport:
    verdict: bool
    method: Method
    z: int | None = None
    spectrum: tuple[int, ...] | None = None
    witness: object = None
    notes: list[str] = field(default_factory=list)


def is_well_forced_tree(t: Graph) -> tuple[bool, ReductionTrace]:
    """Star removals (smallest eligible vertex first) until none apply.

    The forest is well-forced iff every surviving component has at most two
    vertices.  Components with one or two vertices both count as well-forced;
    a surviving singleton is recorded in ``trace.notes``.
    """
    if not is_forest(t):
        raise NotAForest("the tree algorithm needs a forest")
    trace = exhaustive_star_removals(t)
    final = trace.final
    verdict = True
    for comp in components(final):
        size = len(comp)
        if size == 1:
            v = final.origin[next(iter(comp))]
            trace.notes.append(f"singleton component {{{v}}} counted as well-forced (K1 convention)")
        elif size > 2:
            verdict = False
    if t.n <= 2 and t.n > 0:
        trace.notes.append(f"input has {t.n} vertices; small-component convention applies")
    return verdict, trace


def is_well_forced_oracle(g: Graph, cap: int | None = None) -> WellForcedReport:
    """Enumerate every minimal zero forcing set and compare their sizes."""
    sets, spectrum = enumerate_minimal_zfs(g, cap)
    verdict = len(spectrum) == 1
    witness = None
    if not verdict:
        smallest = next(s for s in sets if len(s) == spectrum[0])
        largest = next(s for s in sets if len(s) == spectrum[-1])
        witness = (smallest, largest)
    return WellForcedReport(verdict, Method.ORACLE, z=spectrum[0], spectrum=spectrum, witness=witness)


def structural_witness(g: Graph) -> Obstruction | None:
    """First obstruction found among: long pendent path, all-long-legs star, leafy-free tree."""
    for path in pendent_paths(g):
        if len(path) - 1 >= 4:
            return Obstruction("long-pendent-path", path)
    for star in find_pendent_generalized_stars(g):
        if min(star.leg_lengths) >= 2:
            return Obstruction("all-long-legs-pgs", tuple(star.vertices()))
    if g.n > 2 and is_tree(g) and not _double_pendant_vertices(g, g.full_mask):
        return Obstruction("no-double-pendant-tree", tuple(range(g.n)))
    return None


def genstar_well_forced(leg_lengths: Sequence[int]) -> bool:
    """A generalized star is well-forced iff two legs have length one and none exceeds three."""
    if len(leg_lengths) < 2:
        raise ValueError("need at least two legs; a one-legged star is a path")
    if min(leg_lengths) < 1:
        raise ValueError("leg lengths must be positive")
    return Counter(leg_lengths)[1] >= 2 and max(leg_lengths) <= 3


def path_well_forced(n: int) -> bool:
    return 1 <= n <= 3


def report_for_tree(t: Graph) -> WellForcedReport:
    verdict, trace = is_well_forced_tree(t)
    return WellForcedReport(verdict, Method.TREE_ALGORITHM, witness=trace, notes=list(trace.notes))


def b_vertex_sighting(g: Graph, irrelevant: VertexSet, b_vertices: VertexSet) -> VertexSet:
    """Irrelevant vertices that are not B-vertices."""
    return irrelevant - b_vertices
