"""Named graph constructions and tree generators.

Vertex numbering per kind:

* ``path:n`` -- ``0-1-...-(n-1)``; ``cycle:n`` adds the edge ``(n-1)-0``.
* ``star:k`` -- centre ``0``, leaves ``1..k``.
* ``genstar:a,b,...`` -- centre ``0``; each leg numbered outward in turn.
* ``complete:n``, ``empty:n`` -- vertices ``0..n-1``.
* ``kpartite:a,b,...`` -- parts are consecutive id blocks.
* ``wheel:n`` -- hub ``0`` joined to the rim cycle ``1..n-1``.
* ``cyclepend:n`` -- cycle ``0..n-1`` plus vertex ``n`` hanging off ``0``.
* ``join:A+B`` -- ``A``'s vertices first, then ``B``'s, all cross edges added.
* ``corona:A`` -- ``A`` on ``0..k-1``; the new leaf of ``v`` is ``k+v``.
"""

from __future__ import annotations

import heapq
import random
from collections.abc import Iterator, Sequence
from dataclasses import dataclass

from .errors import InstanceTooLarge, InvalidFamily
from .graph import Graph, is_tree

ALL_TREES_MAX_N = 12

_ALIASES = {
    "generalized-star": "genstar",
    "complete-multipartite": "kpartite",
    "cycle-with-pendant": "cyclepend",
    "corona-k1": "corona",
}
_COUNT_KINDS = {"path", "cycle", "star", "complete", "wheel", "empty", "cyclepend"}
_LIST_KINDS = {"genstar", "kpartite"}


@dataclass(frozen=True)
class FamilySpec:
    kind: str
    params: tuple[int, ...] = ()
    operands: tuple[FamilySpec, ...] = ()

    def __post_init__(self):
        kind = _ALIASES.get(self.kind, self.kind)
        object.__setattr__(self, "kind", kind)
        _validate(self)

    def __str__(self) -> str:
        if self.kind == "join":
            return f"join:{self.operands[0]}+{self.operands[1]}"
        if self.kind == "corona":
            return f"corona:{self.operands[0]}"
        return f"{self.kind}:{','.join(map(str, self.params))}"


def _validate(spec: FamilySpec) -> None:
    k, p = spec.kind, spec.params
    if k in _COUNT_KINDS:
        if len(p) != 1 or spec.operands:
            raise InvalidFamily(f"{k} takes exactly one count")
        minimum = {"path": 1, "cycle": 3, "star": 0, "complete": 1, "wheel": 4, "empty": 0, "cyclepend": 3}[k]
        if p[0] < minimum:
            raise InvalidFamily(f"{k} needs a count of at least {minimum}, got {p[0]}")
    elif k == "genstar":
        if len(p) < 2 or min(p) < 1:
            raise InvalidFamily("genstar needs at least two legs, each of length >= 1")
    elif k == "kpartite":
        if len(p) < 2 or min(p) < 1:
            raise InvalidFamily("kpartite needs at least two non-empty parts")
    elif k == "join":
        if len(spec.operands) != 2 or p:
            raise InvalidFamily("join takes two operand graphs")
    elif k == "corona":
        if len(spec.operands) != 1 or p:
            raise InvalidFamily("corona takes one operand graph")
    else:
        raise InvalidFamily(f"unknown family kind {spec.kind!r}")


def count_kind(name: str) -> str:
    """Resolve an alias and check that ``name`` is a one-parameter family."""
    kind = _ALIASES.get(name, name)
    if kind not in _COUNT_KINDS:
        raise InvalidFamily(f"{name!r} is not a one-parameter family ({', '.join(sorted(_COUNT_KINDS))})")
    return kind


def parse_family(text: str) -> FamilySpec:
    """Parse compact strings such as ``genstar:1,1,3`` or ``corona:path:3``."""
    text = text.strip()
    kind, sep, rest = text.partition(":")
    kind = _ALIASES.get(kind, kind)
    if not sep:
        raise InvalidFamily(f"family spec {text!r} lacks ':'")
    if kind == "corona":
        return FamilySpec("corona", operands=(parse_family(rest),))
    if kind == "join":
        left, plus, right = rest.partition("+")
        if not plus:
            raise InvalidFamily("join spec must look like join:A+B")
        return FamilySpec("join", operands=(parse_family(left), parse_family(right)))
    if kind not in _COUNT_KINDS | _LIST_KINDS:
        raise InvalidFamily(f"unknown family kind {kind!r}")
    try:
        params = tuple(int(x) for x in rest.split(","))
    except ValueError:
        raise InvalidFamily(f"bad parameters in {text!r}") from None
    return FamilySpec(kind, params)


def build(spec: FamilySpec | str) -> Graph:
    if isinstance(spec, str):
        spec = parse_family(spec)
    k, p = spec.kind, spec.params
    if k == "path":
        return path_graph(p[0])
    if k == "cycle":
        return cycle_graph(p[0])
    if k == "star":
        return Graph(p[0] + 1, [(0, i) for i in range(1, p[0] + 1)])
    if k == "genstar":
        return generalized_star(p)
    if k == "complete":
        return complete_multipartite([1] * p[0])
    if k == "empty":
        return Graph(p[0])
    if k == "kpartite":
        return complete_multipartite(p)
    if k == "wheel":
        rim = p[0] - 1
        edges = [(0, i) for i in range(1, rim + 1)]
        edges += [(i, i % rim + 1) for i in range(1, rim + 1)]
        return Graph(p[0], edges)
    if k == "cyclepend":
        base = cycle_graph(p[0])
        return Graph(p[0] + 1, base.edges() + [(0, p[0])])
    if k == "join":
        return join(build(spec.operands[0]), build(spec.operands[1]))
    if k == "corona":
        return corona(build(spec.operands[0]))
    raise InvalidFamily(f"unknown family kind {k!r}")


def path_graph(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)] + [(n - 1, 0)])


def generalized_star(legs: Sequence[int]) -> Graph:
    edges = []
    nxt = 1
    for length in legs:
        prev = 0
        for _ in range(length):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
    return Graph(nxt, edges)


def complete_multipartite(parts: Sequence[int]) -> Graph:
    owner = [i for i, size in enumerate(parts) for _ in range(size)]
    n = len(owner)
    return Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n) if owner[u] != owner[v]])


def join(a: Graph, b: Graph) -> Graph:
    shift = a.n
    edges = a.edges() + [(u + shift, v + shift) for u, v in b.edges()]
    edges += [(u, shift + v) for u in range(a.n) for v in range(b.n)]
    return Graph(a.n + b.n, edges)


def corona(a: Graph) -> Graph:
    k = a.n
    return Graph(2 * k, a.edges() + [(v, k + v) for v in range(k)])


# -- trees -------------------------------------------------------------------


def prufer_decode(seq: Sequence[int], n: int) -> Graph:
    """Labelled tree on ``0..n-1`` whose Prüfer sequence is ``seq`` (length n-2)."""
    if n == 1:
        return Graph(1)
    if len(seq) != n - 2:
        raise ValueError("Prüfer sequence must have length n - 2")
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    leaves = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(leaves)
    edges = []
    for x in seq:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, x))
        degree[x] -= 1
        if degree[x] == 1:
            heapq.heappush(leaves, x)
    edges.append((heapq.heappop(leaves), heapq.heappop(leaves)))
    return Graph(n, edges)


def random_tree(n: int, seed: int) -> Graph:
    """Uniform random labelled tree from a seeded Prüfer sequence (``random.Random``)."""
    if n < 1:
        raise ValueError("a tree needs at least one vertex")
    rng = random.Random(seed)
    return prufer_decode([rng.randrange(n) for _ in range(n - 2)], n) if n > 1 else Graph(1)


def random_connected_graph(n: int, seed: int, p: float | None = None) -> Graph:
    """Random spanning tree plus each remaining pair independently with probability ``p``.

    With ``p=None`` the density is itself drawn from a few levels so that both
    sparse (leafy) and dense graphs show up in samples.
    """
    rng = random.Random(seed)
    tree = prufer_decode([rng.randrange(n) for _ in range(n - 2)], n) if n > 1 else Graph(1)
    if p is None:
        p = rng.choice((0.0, 0.1, 0.2, 0.35, 0.5))
    extra = [(u, v) for u in range(n) for v in range(u + 1, n) if not tree.has_edge(u, v) and rng.random() < p]
    return Graph(n, tree.edges() + extra)


def _rooted_code(t: Graph, root: int) -> str:
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
    codes: dict[int, str] = {}
    for v in reversed(order):
        kids = sorted(codes[w] for w in t.neighbors(v) if w != parent[v])
        codes[v] = "(" + "".join(kids) + ")"
    return codes[root]


def centroids(t: Graph) -> list[int]:
    n = t.n
    parent = {0: -1}
    order = []
    stack = [0]
    while stack:
        v = stack.pop()
        order.append(v)
        for w in t.neighbors(v):
            if w != parent[v]:
                parent[w] = v
                stack.append(w)
    size = [1] * n
    heaviest = [0] * n
    for v in reversed(order):
        if parent[v] >= 0:
            size[parent[v]] += size[v]
            heaviest[parent[v]] = max(heaviest[parent[v]], size[v])
    worst = [max(heaviest[v], n - size[v]) for v in range(n)]
    best = min(worst)
    return [v for v in range(n) if worst[v] == best]


def canonical_code(t: Graph) -> str:
    """AHU parenthesis code rooted at the centroid (smaller code over two centroids)."""
    if not is_tree(t):
        raise ValueError("canonical codes are defined for trees")
    return min(_rooted_code(t, c) for c in centroids(t))


def tree_from_code(code: str) -> Graph:
    """Rebuild a tree from a parenthesis code, numbering vertices in preorder."""
    edges = []
    stack: list[int] = []
    count = 0
    for ch in code:
        if ch == "(":
            if stack:
                edges.append((stack[-1], count))
            stack.append(count)
            count += 1
        else:
            stack.pop()
    return Graph(count, edges)


def all_trees(n: int) -> Iterator[Graph]:
    """One tree per isomorphism class on ``n`` vertices, ordered by canonical code.

    Classes on ``k+1`` vertices are grown from those on ``k`` by attaching a
    leaf at every vertex and keeping one tree per canonical code.
    """
    if n > ALL_TREES_MAX_N:
        raise InstanceTooLarge(n, ALL_TREES_MAX_N, "exhaustive tree generation")
    if n < 1:
        return
    layer = {canonical_code(Graph(1)): Graph(1)}
    for k in range(1, n):
        grown: dict[str, Graph] = {}
        for t in layer.values():
            for v in t.vertices():
                bigger = Graph(k + 1, t.edges() + [(v, k)])
                code = canonical_code(bigger)
                if code not in grown:
                    grown[code] = bigger
        layer = grown
    for code in sorted(layer):
        yield tree_from_code(code)
