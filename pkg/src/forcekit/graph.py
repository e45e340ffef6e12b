"""Immutable simple graphs over dense integer vertices, plus structural queries.

Vertices are ``0..n-1``.  Adjacency is stored both as sorted neighbour tuples
and as integer bitmasks, which the forcing searches use directly.  Graphs
derived from another graph (subgraphs, reductions) remember, through
``origin``, which vertex of the root graph each of their vertices came from.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator, Mapping, Set
from dataclasses import dataclass
from enum import Enum

from .errors import ParseError


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the indices of the set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class VertexSet(Set):
    """Immutable set of vertex ids backed by a bitmask.

    Behaves like a ``frozenset`` of ints (comparisons against plain sets work)
    while keeping membership, union and cardinality as single int operations.
    """

    __slots__ = ("mask",)

    def __init__(self, vertices: Iterable[int] = ()):
        mask = 0
        for v in vertices:
            if v < 0:
                raise ValueError(f"negative vertex id {v}")
            mask |= 1 << v
        self.mask = mask

    @classmethod
    def from_mask(cls, mask: int) -> VertexSet:
        obj = cls.__new__(cls)
        obj.mask = mask
        return obj

    @classmethod
    def _from_iterable(cls, it):
        return cls(it)

    def __contains__(self, v) -> bool:
        return isinstance(v, int) and v >= 0 and bool(self.mask >> v & 1)

    def __iter__(self) -> Iterator[int]:
        return iter_bits(self.mask)

    def __len__(self) -> int:
        return bin(self.mask).count("1")

    def __eq__(self, other) -> bool:
        if isinstance(other, VertexSet):
            return self.mask == other.mask
        return Set.__eq__(self, other)

    def __hash__(self) -> int:
        return hash(frozenset(self))

    def __or__(self, other):
        if isinstance(other, VertexSet):
            return VertexSet.from_mask(self.mask | other.mask)
        return Set.__or__(self, other)

    def __and__(self, other):
        if isinstance(other, VertexSet):
            return VertexSet.from_mask(self.mask & other.mask)
        return Set.__and__(self, other)

    def __sub__(self, other):
        if isinstance(other, VertexSet):
            return VertexSet.from_mask(self.mask & ~other.mask)
        return Set.__sub__(self, other)

    def add(self, v: int) -> VertexSet:
        return VertexSet.from_mask(self.mask | 1 << v)

    def discard(self, v: int) -> VertexSet:
        return VertexSet.from_mask(self.mask & ~(1 << v))

    def sorted(self) -> list[int]:
        return list(self)

    def __repr__(self) -> str:
        return f"VertexSet({set(self)!r})" if self.mask else "VertexSet()"


class Graph:
    """Simple undirected graph on vertices ``0..n-1``.

    ``labels`` optionally maps vertices to display names.  ``origin[v]`` is the
    id of ``v`` in the root graph this one was cut from (identity for roots).
    """

    __slots__ = ("n", "_nbrs", "_masks", "labels", "origin")

    def __init__(
        self,
        n: int,
        edges: Iterable[tuple[int, int]] = (),
        labels: Mapping[int, str] | None = None,
        origin: Iterable[int] | None = None,
    ):
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        masks = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n = {n}")
            if u == v:
                raise ValueError(f"self-loop at {u}")
            if masks[u] >> v & 1:
                raise ValueError(f"duplicate edge ({u}, {v})")
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        self.n = n
        self._masks = tuple(masks)
        self._nbrs = tuple(tuple(iter_bits(m)) for m in masks)
        self.labels = dict(labels) if labels else {}
        self.origin = tuple(origin) if origin is not None else tuple(range(n))
        if len(self.origin) != n:
            raise ValueError("origin must list one root id per vertex")

    # -- basic queries -------------------------------------------------

    @property
    def m(self) -> int:
        return sum(len(a) for a in self._nbrs) // 2

    def vertices(self) -> range:
        return range(self.n)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self._nbrs[v]

    def nbr_mask(self, v: int) -> int:
        return self._masks[v]

    @property
    def masks(self) -> tuple[int, ...]:
        return self._masks

    def degree(self, v: int) -> int:
        return len(self._nbrs[v])

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self._masks[u] >> v & 1)

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in self._nbrs[u] if u < v]

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def label(self, v: int) -> str:
        return self.labels.get(v, str(v))

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self._masks == other._masks and self.labels == other.labels

    def __hash__(self) -> int:
        return hash((self.n, self._masks))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"

    # -- derived graphs ------------------------------------------------

    def subgraph(self, keep: Iterable[int]) -> Graph:
        """Induced subgraph on ``keep``, renumbered densely in increasing order.

        The result's ``origin`` points into this graph's root, so chains of
        reductions always report root vertex ids.
        """
        kept = sorted(set(keep))
        index = {v: i for i, v in enumerate(kept)}
        edges = [(index[u], index[v]) for u, v in self.edges() if u in index and v in index]
        labels = {index[v]: s for v, s in self.labels.items() if v in index}
        return Graph(len(kept), edges, labels, origin=[self.origin[v] for v in kept])

    def without(self, removed: Iterable[int]) -> Graph:
        gone = set(removed)
        return self.subgraph(v for v in range(self.n) if v not in gone)

    def to_root(self, vertices: Iterable[int]) -> VertexSet:
        """Translate local vertex ids to root ids."""
        return VertexSet(self.origin[v] for v in vertices)

    # -- serialisation -------------------------------------------------

    def to_edge_list(self) -> str:
        lines = [f"n {self.n}"]
        lines.extend(f"{u} {v}" for u, v in self.edges())
        return "\n".join(lines) + "\n"


# -- parsing -------------------------------------------------------------


def parse_edge_list(text: str) -> Graph:
    """Parse the native edge-list format.

    An optional first line ``n <count>`` fixes the vertex count; every other
    non-empty line not starting with ``#`` is ``u v``.  Integer ids are taken
    as-is.  If any endpoint is not an integer, all endpoints are treated as
    names and relabelled densely in order of first appearance.
    """
    declared: int | None = None
    rows: list[tuple[int, str, str]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if parts[0] == "n":
            if declared is not None or rows:
                raise ParseError("header 'n <count>' must be the first line", lineno)
            if len(parts) != 2 or not _is_int(parts[1]) or int(parts[1]) < 0:
                raise ParseError(f"malformed header {line!r}", lineno)
            declared = int(parts[1])
            continue
        if len(parts) != 2:
            raise ParseError(f"expected 'u v', got {line!r}", lineno)
        rows.append((lineno, parts[0], parts[1]))

    named = any(not (_is_int(a) and _is_int(b)) for _, a, b in rows)
    labels: dict[int, str] = {}
    if named:
        if declared is not None:
            raise ParseError("named vertices cannot be combined with an 'n' header", rows[0][0])
        ids: dict[str, int] = {}
        for _, a, b in rows:
            for name in (a, b):
                if name not in ids:
                    ids[name] = len(ids)
        pairs = [(lineno, ids[a], ids[b]) for lineno, a, b in rows]
        labels = {i: name for name, i in ids.items()}
        n = len(ids)
    else:
        pairs = [(lineno, int(a), int(b)) for lineno, a, b in rows]
        for lineno, u, v in pairs:
            if u < 0 or v < 0:
                raise ParseError(f"negative vertex id in '{u} {v}'", lineno)
        n = declared if declared is not None else 1 + max((max(u, v) for _, u, v in pairs), default=-1)

    seen: set[tuple[int, int]] = set()
    edges = []
    for lineno, u, v in pairs:
        if u == v:
            raise ParseError(f"self-loop at vertex {u} is not allowed", lineno)
        if u >= n or v >= n:
            raise ParseError(f"vertex id {max(u, v)} >= declared count {n}", lineno)
        key = (min(u, v), max(u, v))
        if key in seen:
            raise ParseError(f"duplicate edge {key[0]}-{key[1]}", lineno)
        seen.add(key)
        edges.append(key)
    return Graph(n, edges, labels)


def _is_int(token: str) -> bool:
    try:
        int(token)
    except ValueError:
        return False
    return True


def parse_graph6(line: str) -> Graph:
    """Decode one graph6 string (optionally with the ``>>graph6<<`` header)."""
    s = line.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s:
        raise ParseError("empty graph6 string")
    data = [ord(c) - 63 for c in s]
    if any(d < 0 or d > 63 for d in data):
        raise ParseError(f"invalid graph6 character in {s!r}")
    if data[0] < 63:
        n, pos = data[0], 1
    elif len(data) >= 4 and data[1] < 63:
        n, pos = (data[1] << 12) | (data[2] << 6) | data[3], 4
    elif len(data) >= 8:
        n = 0
        for d in data[2:8]:
            n = (n << 6) | d
        pos = 8
    else:
        raise ParseError(f"truncated graph6 size field in {s!r}")
    need = (n * (n - 1) // 2 + 5) // 6
    body = data[pos:]
    if len(body) != need:
        raise ParseError(f"graph6 body has {len(body)} bytes, expected {need} for n = {n}")
    bits = []
    for d in body:
        bits.extend((d >> k) & 1 for k in range(5, -1, -1))
    edges = []
    k = 0
    for v in range(1, n):
        for u in range(v):
            if bits[k]:
                edges.append((u, v))
            k += 1
    return Graph(n, edges)


def read_graph6(text: str) -> Iterator[Graph]:
    """Decode a graph6 file, one graph per non-empty line."""
    for lineno, raw in enumerate(text.splitlines(), start=1):
        if not raw.strip():
            continue
        try:
            yield parse_graph6(raw)
        except ParseError as exc:
            raise ParseError(str(exc), lineno) from None


# -- structure -----------------------------------------------------------


class Shape(str, Enum):
    TREE = "tree"
    FOREST = "forest"
    HAS_CYCLE = "has-cycle"


def components(g: Graph, alive: int | None = None) -> list[VertexSet]:
    """Connected components (restricted to ``alive`` when given), ordered by least vertex."""
    remaining = g.full_mask if alive is None else alive
    out = []
    masks = g.masks
    while remaining:
        low = remaining & -remaining
        comp = low
        frontier = low
        while frontier:
            nxt = 0
            for v in iter_bits(frontier):
                nxt |= masks[v]
            nxt &= remaining & ~comp
            comp |= nxt
            frontier = nxt
        out.append(VertexSet.from_mask(comp))
        remaining &= ~comp
    return out


def classify(g: Graph) -> tuple[Shape, list[VertexSet]]:
    comps = components(g)
    if g.m != g.n - len(comps):
        return Shape.HAS_CYCLE, comps
    if len(comps) == 1:
        return Shape.TREE, comps
    return Shape.FOREST, comps


def is_forest(g: Graph) -> bool:
    return g.m == g.n - len(components(g))


def is_tree(g: Graph) -> bool:
    return g.n > 0 and classify(g)[0] is Shape.TREE


def leaf_neighbors(g: Graph, v: int) -> VertexSet:
    """L(v): the degree-one neighbours of ``v``."""
    return VertexSet(u for u in g.neighbors(v) if g.degree(u) == 1)


def pendent_paths(g: Graph) -> list[tuple[int, ...]]:
    """Maximal pendent paths, each listed from its leaf inward.

    A walk starts at a degree-one vertex and continues while the current
    vertex has degree two; the vertex where it stops (degree one or at least
    three) closes the sequence.  Paths whose both ends are leaves (path
    components) are reported once, from the smaller leaf.
    """
    out = []
    for leaf in g.vertices():
        if g.degree(leaf) != 1:
            continue
        seq = [leaf]
        prev, cur = leaf, g.neighbors(leaf)[0]
        while g.degree(cur) == 2:
            seq.append(cur)
            a, b = g.neighbors(cur)
            prev, cur = cur, (b if a == prev else a)
        seq.append(cur)
        if g.degree(cur) == 1 and cur < leaf:
            continue
        out.append(tuple(seq))
    return out


@dataclass(frozen=True)
class PendentGeneralizedStar:
    """A centre of degree >= 3 with pendent legs and one remaining branch.

    Each leg runs from the centre's neighbour out to the leaf and excludes the
    centre.  ``anchor`` is the edge from the centre to its smallest non-leg
    neighbour; in a tree that neighbour is unique.
    """

    center: int
    legs: tuple[tuple[int, ...], ...]
    anchor: tuple[int, int]

    @property
    def leg_lengths(self) -> tuple[int, ...]:
        return tuple(len(leg) for leg in self.legs)

    def vertices(self) -> VertexSet:
        return VertexSet([self.center, *(v for leg in self.legs for v in leg)])


def find_pendent_generalized_stars(g: Graph) -> list[PendentGeneralizedStar]:
    """All pendent generalized stars of ``g``, one per qualifying centre.

    Components are counted inside the centre's own connected component, so
    unrelated components of a forest do not disqualify a centre.  At least two
    legs are required; outside trees a single leg hanging off a cycle would
    otherwise qualify, and the leg-based obstructions fail for it.
    """
    legs_at: dict[int, list[tuple[int, ...]]] = {}
    for path in pendent_paths(g):
        end = path[-1]
        if g.degree(end) >= 3:
            legs_at.setdefault(end, []).append(tuple(reversed(path[:-1])))
    out = []
    comp_of = {}
    for comp in components(g):
        for v in comp:
            comp_of[v] = comp.mask
    for c in sorted(legs_at):
        legs = sorted(legs_at[c])
        if len(legs) < 2:
            continue
        leg_mask = 0
        for leg in legs:
            for v in leg:
                leg_mask |= 1 << v
        rest = comp_of[c] & ~leg_mask & ~(1 << c)
        if not rest or len(components(g, rest)) != 1:
            continue
        others = [u for u in g.neighbors(c) if not leg_mask >> u & 1]
        out.append(PendentGeneralizedStar(c, tuple(legs), (c, others[0])))
    return out


def generalized_star_legs(g: Graph) -> tuple[int, tuple[tuple[int, ...], ...]] | None:
    """Centre and legs if ``g`` is a tree with exactly one vertex of degree >= 3."""
    if not is_tree(g):
        return None
    high = [v for v in g.vertices() if g.degree(v) >= 3]
    if len(high) != 1:
        return None
    c = high[0]
    legs = sorted(tuple(reversed(p[:-1])) for p in pendent_paths(g) if p[-1] == c)
    return c, tuple(legs)


# -- DOT -------------------------------------------------------------------

_DOT_FILL = {"pseudoleaf": "lightyellow", "plain": "white", "seed": "lightblue"}
_LEVEL_FILL = ["darkgreen", "forestgreen", "palegreen"]


def to_dot(g: Graph, coloring: Mapping[int, str] | None = None, name: str = "G") -> str:
    """Render ``g`` as DOT; categories are ``B<i>``, ``pseudoleaf``, ``plain`` or ``seed``."""
    coloring = coloring or {}
    lines = [f"graph {name} {{", "  node [shape=circle, style=filled];"]
    for v in g.vertices():
        cat = coloring.get(v, "plain")
        if cat.startswith("B") and cat[1:].isdigit():
            level = int(cat[1:])
            fill = _LEVEL_FILL[level] if level < len(_LEVEL_FILL) else "gray"
        elif cat in _DOT_FILL:
            fill = _DOT_FILL[cat]
        else:
            raise ValueError(f"unknown vertex category {cat!r}")
        label = g.label(v).replace('"', '\\"')
        lines.append(f'  {v} [label="{label}", category="{cat}", fillcolor="{fill}"];')
    for u, v in g.edges():
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"
