"""Colour-change closure, zero forcing predicates and exact searches.

A blue vertex with exactly one white neighbour forces that neighbour blue.
``closure`` runs the rule with a worklist and records one realization; the
brute-force searches use the bitmask routine ``span`` instead, which computes
the same fixed point without bookkeeping.
"""

from __future__ import annotations

import heapq
from collections.abc import Callable, Iterable, Sequence
from dataclasses import dataclass
from itertools import combinations
from typing import NamedTuple

import numpy as np

from .errors import (
    InstanceTooLarge,
    InvalidChoice,
    InvalidCover,
    InvalidRealization,
    NotAForest,
    max_oracle_n,
)
from .graph import Graph, VertexSet, is_forest, iter_bits


@dataclass(frozen=True)
class ColorState:
    blue: VertexSet


@dataclass(frozen=True)
class Realization:
    """One ordered list of forces and the maximal forcing chains it induces."""

    seed: VertexSet
    forces: tuple[tuple[int, int], ...]
    chains: tuple[tuple[int, ...], ...]

    def forcer_of(self) -> dict[int, int]:
        return {target: forcer for forcer, target in self.forces}


def _as_mask(s) -> int:
    if isinstance(s, VertexSet):
        return s.mask
    if isinstance(s, int):
        raise TypeError("pass a VertexSet or an iterable of vertices, not an int")
    return VertexSet(s).mask


def _chains(seed: VertexSet, forces: Sequence[tuple[int, int]]) -> tuple[tuple[int, ...], ...]:
    nxt = dict(forces)
    chains = []
    for s in seed:
        chain = [s]
        while chain[-1] in nxt:
            chain.append(nxt[chain[-1]])
        chains.append(tuple(chain))
    return tuple(chains)


def closure(
    g: Graph,
    seed: Iterable[int],
    priority: Callable[[int, int], object] | None = None,
) -> tuple[ColorState, Realization]:
    """Apply the colour-change rule until no force is possible.

    Among simultaneously legal forces the one with the smallest
    ``priority(forcer, target)`` is applied first; the default key is the
    forcer id.  The final blue set does not depend on the order.
    """
    seed_set = VertexSet.from_mask(_as_mask(seed))
    if seed_set.mask >> g.n:
        raise ValueError("seed contains vertices outside the graph")
    key = priority or (lambda forcer, target: forcer)
    blue = seed_set.mask
    white_count = [len(g.neighbors(v)) - bin(g.nbr_mask(v) & blue).count("1") for v in g.vertices()]
    heap: list = []

    def push(v: int) -> None:
        target = (g.nbr_mask(v) & ~blue).bit_length() - 1
        heapq.heappush(heap, (key(v, target), v, target))

    for v in iter_bits(blue):
        if white_count[v] == 1:
            push(v)
    forces = []
    while heap:
        _, v, target = heapq.heappop(heap)
        if white_count[v] != 1 or blue >> target & 1:
            continue
        blue |= 1 << target
        forces.append((v, target))
        for w in g.neighbors(target):
            white_count[w] -= 1
            if white_count[w] == 1 and blue >> w & 1:
                push(w)
        if white_count[target] == 1:
            push(target)
    return ColorState(VertexSet.from_mask(blue)), Realization(seed_set, tuple(forces), _chains(seed_set, forces))


def span(masks: Sequence[int], blue: int) -> int:
    """Bitmask closure: the blue set reached from ``blue``."""
    changed = True
    while changed:
        changed = False
        for v in iter_bits(blue):
            white = masks[v] & ~blue
            if white and not white & (white - 1):
                blue |= white
                changed = True
    return blue


def is_zfs(g: Graph, s: Iterable[int]) -> bool:
    return span(g.masks, _as_mask(s)) == g.full_mask


def is_minimal_zfs(g: Graph, s: Iterable[int]) -> bool:
    mask = _as_mask(s)
    if span(g.masks, mask) != g.full_mask:
        return False
    return all(span(g.masks, mask & ~(1 << x)) != g.full_mask for x in iter_bits(mask))


def _check_cap(g: Graph, cap: int | None, what: str) -> None:
    limit = max_oracle_n() if cap is None else cap
    if g.n > limit:
        raise InstanceTooLarge(g.n, limit, what)


def zero_forcing_number(g: Graph, cap: int | None = None) -> tuple[int, VertexSet]:
    """Exact Z(G) and one minimum zero forcing set.

    Forests take one end of every path of a minimum path cover; other graphs
    are searched by increasing cardinality.
    """
    if is_forest(g):
        from .trees import minimum_path_cover

        witness = VertexSet(path[0] for path in minimum_path_cover(g))
        return len(witness), witness
    _check_cap(g, cap, "zero forcing number search")
    full = g.full_mask
    for k in range(g.n + 1):
        for combo in combinations(range(g.n), k):
            mask = 0
            for v in combo:
                mask |= 1 << v
            if span(g.masks, mask) == full:
                return k, VertexSet.from_mask(mask)
    raise AssertionError("V(G) is always a zero forcing set")


def zfs_table(g: Graph, cap: int | None = None) -> np.ndarray:
    """Boolean array indexed by subset bitmask: is that subset a zero forcing set.

    The closure of ``S`` equals the closure of ``closure(S - x) + x``, so each
    subset starts from the already-computed closure of the subset without its
    lowest vertex.
    """
    _check_cap(g, cap, "zero forcing enumeration")
    n, masks, full = g.n, g.masks, g.full_mask
    size = 1 << n
    spans = [0] * size
    table = np.zeros(size, dtype=bool)
    if n == 0:
        table[0] = True
        return table
    spans[0] = span(masks, 0)
    table[0] = spans[0] == full
    for s in range(1, size):
        low = s & -s
        prev = spans[s ^ low]
        if prev == full:
            spans[s] = full
            table[s] = True
            continue
        reached = span(masks, prev | low)
        spans[s] = reached
        table[s] = reached == full
    return table


def minimal_mask(table: np.ndarray, n: int) -> np.ndarray:
    """Mark subsets that are zero forcing sets with no zero forcing proper subset one smaller."""
    minimal = table.copy()
    idx = np.arange(table.size)
    for i in range(n):
        has = (idx >> i) & 1 == 1
        minimal[has] &= ~table[idx[has] ^ (1 << i)]
    return minimal


def _popcounts(size: int) -> np.ndarray:
    idx = np.arange(size)
    counts = np.zeros(size, dtype=np.int64)
    while idx.any():
        counts += idx & 1
        idx = idx >> 1
    return counts


def _ordered_sets(flags: np.ndarray) -> list[VertexSet]:
    sets = [VertexSet.from_mask(int(m)) for m in np.flatnonzero(flags)]
    sets.sort(key=lambda s: (len(s), s.sorted()))
    return sets


class MinimalZFS(NamedTuple):
    sets: list[VertexSet]
    spectrum: tuple[int, ...]


def enumerate_minimal_zfs(g: Graph, cap: int | None = None) -> MinimalZFS:
    """Every minimal zero forcing set, ordered by size then lexicographically."""
    table = zfs_table(g, cap)
    sets = _ordered_sets(minimal_mask(table, g.n))
    return MinimalZFS(sets, tuple(sorted({len(s) for s in sets})))


def all_zfs(g: Graph, cap: int | None = None) -> list[VertexSet]:
    return _ordered_sets(zfs_table(g, cap))


def minimum_zfs_sets(g: Graph, cap: int | None = None) -> list[VertexSet]:
    table = zfs_table(g, cap)
    counts = _popcounts(table.size)
    z = int(counts[table].min())
    return _ordered_sets(table & (counts == z))


def reversal(g: Graph, r: Realization) -> VertexSet:
    """The last vertex of every chain of a realization that covers V(G)."""
    covered = 0
    for chain in r.chains:
        for v in chain:
            covered |= 1 << v
    if covered != g.full_mask:
        raise InvalidRealization("forcing chains do not cover every vertex")
    return VertexSet(chain[-1] for chain in r.chains)


Choice = int | tuple[int, int]


def validate_path_cover(g: Graph, cover: Sequence[Sequence[int]]) -> None:
    seen = 0
    for path in cover:
        if not path:
            raise InvalidCover("empty path in cover")
        mask = 0
        for v in path:
            if not 0 <= v < g.n:
                raise InvalidCover(f"vertex {v} outside the graph")
            if (seen | mask) >> v & 1:
                raise InvalidCover(f"vertex {v} appears twice")
            mask |= 1 << v
        for a, b in zip(path, path[1:]):
            if not g.has_edge(a, b):
                raise InvalidCover(f"{a}-{b} is not an edge")
        inner = sum(bin(g.nbr_mask(v) & mask).count("1") for v in path) // 2
        if inner != len(path) - 1:
            raise InvalidCover(f"path {tuple(path)} is not induced")
        seen |= mask
    if seen != g.full_mask:
        raise InvalidCover("paths do not cover every vertex")


def path_cover_zfs(g: Graph, cover: Sequence[Sequence[int]], choices: Sequence[Choice]) -> VertexSet:
    """Pick an end vertex or an adjacent internal pair from each path of a cover."""
    if not is_forest(g):
        raise NotAForest("path cover seeding is defined for trees")
    validate_path_cover(g, cover)
    if len(choices) != len(cover):
        raise InvalidChoice("need exactly one choice per path")
    picked = []
    for path, choice in zip(cover, choices):
        if isinstance(choice, int):
            if choice not in (path[0], path[-1]):
                raise InvalidChoice(f"{choice} is not an end of {tuple(path)}")
            picked.append(choice)
            continue
        a, b = choice
        if len(path) < 4:
            raise InvalidChoice(f"path {tuple(path)} is too short for an internal pair")
        inner = path[1:-1]
        ok = any({a, b} == {x, y} for x, y in zip(inner, inner[1:]))
        if not ok:
            raise InvalidChoice(f"({a}, {b}) is not an adjacent internal pair of {tuple(path)}")
        picked.extend((a, b))
    return VertexSet(picked)
