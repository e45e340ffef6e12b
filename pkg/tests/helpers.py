"""Shared fixtures: a 24-vertex tree with three B-levels, small named graphs and hypothesis strategies."""

from __future__ import annotations

from hypothesis import strategies as st

from forcekit.graph import Graph

LAYERED_NAMES = [
    "v1", "v2", "v3", "right1", "right2", "rightlower", "rightupper1", "rightupper2",
    "rightupper3", "left1", "left2", "left2lower", "leftdouble1", "leftdouble2",
    "veryleft1", "veryleft2", "veryleft3", "veryleftup1", "veryleftup2", "leftdiagup1",
    "leftdiagup2", "leftdiagup3", "leftdiagdouble1", "leftdiagdouble2",
]

# vertex names describe where each vertex sits in a drawing of the tree
LAYERED_EDGES = [
    ("v2", "v1"), ("v1", "v3"),
    ("v1", "right1"), ("right1", "right2"), ("right2", "rightlower"),
    ("right2", "rightupper1"), ("rightupper1", "rightupper2"), ("rightupper2", "rightupper3"),
    ("v1", "left1"), ("left1", "left2"), ("left2", "left2lower"),
    ("leftdouble1", "left2lower"), ("left2lower", "leftdouble2"),
    ("left2", "veryleft1"), ("veryleft1", "veryleft2"), ("veryleft2", "veryleft3"),
    ("veryleft2", "veryleftup1"), ("veryleftup1", "veryleftup2"),
    ("veryleft2", "leftdiagup1"), ("leftdiagup1", "leftdiagup2"), ("leftdiagup2", "leftdiagup3"),
    ("leftdiagdouble1", "leftdiagup2"), ("leftdiagup2", "leftdiagdouble2"),
]


def layered_tree() -> Graph:
    ids = {name: i for i, name in enumerate(LAYERED_NAMES)}
    return Graph(len(ids), [(ids[a], ids[b]) for a, b in LAYERED_EDGES], dict(enumerate(LAYERED_NAMES)))


def ids(*names: str) -> set[int]:
    return {LAYERED_NAMES.index(name) for name in names}


def path(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def k13() -> Graph:
    return Graph(4, [(0, 1), (0, 2), (0, 3)])


@st.composite
def graphs(draw, min_n: int = 0, max_n: int = 10):
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Graph(n, chosen)


@st.composite
def trees(draw, min_n: int = 1, max_n: int = 12):
    n = draw(st.integers(min_n, max_n))
    parents = [draw(st.integers(0, v - 1)) for v in range(1, n)]
    return Graph(n, [(p, v + 1) for v, p in enumerate(parents)])
