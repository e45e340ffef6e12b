"""Literal checks of the structural results against exhaustive enumeration.

Each check evaluates one statement on a single graph and returns ``pass``,
``fail`` (with a JSON-ready counterexample certificate) or ``skip`` when the
statement's hypotheses do not apply to that graph.
"""

from __future__ import annotations

from collections.abc import Callable, Iterable
from dataclasses import dataclass, field
from functools import cached_property
from itertools import permutations, product

import numpy as np

from .errors import InstanceTooLarge, max_oracle_n
from .families import corona
from .forcing import (
    _popcounts,
    closure,
    is_zfs,
    minimal_mask,
    path_cover_zfs,
    reversal,
    zero_forcing_number,
    zfs_table,
)
from .graph import (
    Graph,
    VertexSet,
    components,
    find_pendent_generalized_stars,
    generalized_star_legs,
    is_forest,
    is_tree,
    iter_bits,
    pendent_paths,
)
from .trees import (
    _double_pendant_vertices,
    b_decomposition,
    exhaustive_star_removals,
    minimum_path_cover,
    pseudoleaf_realization,
    star_reduction,
)
from .wellforced import genstar_well_forced, is_well_forced_tree, path_well_forced

CORONA_BASE_MAX_N = 6
PATH_COVER_MAX_N = 10


@dataclass
class CheckResult:
    name: str
    status: str
    detail: str = ""
    certificate: dict | None = None

    def to_json(self) -> dict:
        out = {"check": self.name, "status": self.status}
        if self.detail:
            out["detail"] = self.detail
        if self.certificate is not None:
            out["certificate"] = self.certificate
        return out


class _Skip(Exception):
    pass


class _Fail(Exception):
    def __init__(self, detail: str, **certificate):
        super().__init__(detail)
        self.detail = detail
        self.certificate = certificate


def _sets(masks: Iterable[int]) -> list[list[int]]:
    return [list(iter_bits(m)) for m in masks]


class Facts:
    """Lazily computed enumeration data for one graph."""

    def __init__(self, g: Graph, cap: int | None = None):
        self.g = g
        self.cap = max_oracle_n() if cap is None else cap
        if g.n > self.cap:
            raise InstanceTooLarge(g.n, self.cap, "theorem verification")

    @cached_property
    def table(self) -> np.ndarray:
        return zfs_table(self.g, self.cap)

    @cached_property
    def minimal(self) -> list[int]:
        flags = minimal_mask(self.table, self.g.n)
        return sorted((int(m) for m in np.flatnonzero(flags)), key=lambda m: (bin(m).count("1"), m))

    @cached_property
    def spectrum(self) -> tuple[int, ...]:
        return tuple(sorted({bin(m).count("1") for m in self.minimal}))

    @property
    def z(self) -> int:
        return self.spectrum[0]

    @property
    def well_forced(self) -> bool:
        return len(self.spectrum) == 1

    @cached_property
    def minimum(self) -> list[int]:
        counts = _popcounts(self.table.size)
        return [int(m) for m in np.flatnonzero(self.table & (counts == self.z))]

    @cached_property
    def used(self) -> int:
        mask = 0
        for m in self.minimal:
            mask |= m
        return mask

    @property
    def irrelevant(self) -> int:
        return self.g.full_mask & ~self.used

    @cached_property
    def tree(self) -> bool:
        return is_tree(self.g)

    @cached_property
    def forest(self) -> bool:
        return is_forest(self.g)

    @cached_property
    def decomposition(self):
        return b_decomposition(self.g)

    @cached_property
    def stars(self):
        return find_pendent_generalized_stars(self.g)

    @cached_property
    def double_pendants(self) -> dict[int, int]:
        return _double_pendant_vertices(self.g, self.g.full_mask)

    def sub(self, h: Graph) -> Facts:
        return Facts(h, self.cap)

    def lift(self, h: Graph, mask: int) -> int:
        """Translate a vertex mask of a subgraph ``h`` back to this graph's ids."""
        local = {root: i for i, root in enumerate(self.g.origin)}
        out = 0
        for v in iter_bits(mask):
            out |= 1 << local[h.origin[v]]
        return out

    def sub_minimal(self, h: Graph) -> list[int]:
        return [self.lift(h, m) for m in self.sub(h).minimal]


def _need(cond: bool, why: str = "") -> None:
    if not cond:
        raise _Skip(why)


def _require_tree(f: Facts) -> None:
    _need(f.tree, "not a tree")


def _leaf_mask(g: Graph, v: int) -> int:
    return sum(1 << u for u in g.neighbors(v) if g.degree(u) == 1)


# -- checks ---------------------------------------------------------------------


def check_prop_double_pendant(f: Facts) -> str:
    _need(bool(f.double_pendants), "no double pendant")
    for v, leaves in f.double_pendants.items():
        for s in f.minimal:
            if s >> v & 1 or bin(leaves & ~s).count("1") > 1:
                raise _Fail("minimal set contains the vertex or misses two of its leaves", vertex=v, set=_sets([s])[0])
    return f"{len(f.double_pendants)} double-pendant vertices"


def check_obs_legs(f: Facts) -> str:
    found = generalized_star_legs(f.g)
    _need(found is not None, "not a generalized star with a high-degree centre")
    _, legs = found
    leg_masks = [sum(1 << v for v in leg) for leg in legs]
    for s in f.minimal:
        touched = sum(1 for m in leg_masks if m & s)
        if touched != len(legs) - 1:
            raise _Fail("minimal set touches the wrong number of legs", set=_sets([s])[0], touched=touched)
    return f"{len(legs)} legs"


def check_lem_leg_use(f: Facts) -> str:
    # every zero forcing set contains a minimal one, so minimal sets suffice
    _need(bool(f.stars), "no pendent generalized star")
    for star in f.stars:
        leg_masks = [sum(1 << v for v in leg) for leg in star.legs]
        for s in f.minimal:
            touched = sum(1 for m in leg_masks if m & s)
            if touched < len(leg_masks) - 1:
                raise _Fail("zero forcing set misses two legs", center=star.center, set=_sets([s])[0])
    return f"{len(f.stars)} stars"


def check_lem_center(f: Facts) -> str:
    _need(bool(f.stars), "no pendent generalized star")
    hits = 0
    for star in f.stars:
        c = star.center
        ell = len(star.legs)
        star_mask = star.vertices().mask
        nbrs = sum(1 << leg[0] for leg in star.legs)
        for s in f.minimal:
            if not s >> c & 1:
                continue
            hits += 1
            inside = (s & star_mask) & ~(1 << c)
            ok = inside & ~nbrs == 0 and bin(inside).count("1") in (ell - 1, ell)
            ok = ok and all(f.g.degree(w) == 2 for w in iter_bits(inside))
            if not ok:
                raise _Fail("centre in a minimal set with the wrong star part", center=c, set=_sets([s])[0])
    return f"{hits} minimal sets contain a centre"


def check_cor_center(f: Facts) -> str:
    _need(bool(f.stars), "no pendent generalized star")
    centers = sum(1 << star.center for star in f.stars)
    for s in f.minimum:
        if s & centers:
            raise _Fail("minimum set contains a star centre", set=_sets([s])[0])
    return f"{len(f.minimum)} minimum sets"


def check_lem_center_legs(f: Facts) -> str:
    _need(bool(f.stars), "no pendent generalized star")
    applied = 0
    for star in f.stars:
        if not f.used >> star.center & 1:
            continue
        applied += 1
        missing = star.vertices().mask & ~f.used
        if missing:
            raise _Fail("star vertex in no minimal set though its centre is", center=star.center, vertices=list(iter_bits(missing)))
    _need(applied > 0, "no centre lies in a minimal set")
    return f"{applied} stars"


def check_lem_tprime(f: Facts) -> str:
    _require_tree(f)
    applied = 0
    minimal = set(f.minimal)
    for star in f.stars:
        if sum(1 for length in star.leg_lengths if length == 1) > 1:
            continue
        applied += 1
        keep = min(star.legs, key=len)
        dropped = [v for leg in star.legs if leg is not keep for v in leg]
        sub = f.g.without(dropped)
        sub_mask = f.lift(sub, sub.full_mask)
        restrictions = {s & sub_mask for s in minimal}
        for s_prime in f.sub_minimal(sub):
            if s_prime not in restrictions:
                raise _Fail("minimal set of T' does not lift", center=star.center, set=_sets([s_prime])[0])
    _need(applied > 0, "no star with at most one length-one leg")
    return f"{applied} stars"


def check_thm_no_double_pendants(f: Facts) -> str:
    _require_tree(f)
    _need(not f.double_pendants, "tree has a double pendant")
    if f.irrelevant:
        raise _Fail("vertex outside every minimal set", vertices=list(iter_bits(f.irrelevant)))
    return "every vertex relevant"


def _eligible_removals(f: Facts):
    for v, leaves in f.double_pendants.items():
        yield v, leaves, f.g.without(iter_bits(leaves | 1 << v))


def check_thm_star_removal(f: Facts) -> str:
    _require_tree(f)
    _need(bool(f.double_pendants), "no double pendant")
    actual = set(f.minimal)
    for v, leaves, sub in _eligible_removals(f):
        expected = set()
        for s in f.sub_minimal(sub):
            for leaf in iter_bits(leaves):
                expected.add(s | (leaves & ~(1 << leaf)))
            for u in iter_bits(s):
                if f.g.has_edge(u, v):
                    expected.add((s & ~(1 << u)) | leaves)
        if expected != actual:
            extra = sorted(expected - actual)[:3]
            lost = sorted(actual - expected)[:3]
            raise _Fail(
                "minimal sets of T do not match the two cases built from T'",
                vertex=v,
                constructed_not_minimal=_sets(extra),
                minimal_not_constructed=_sets(lost),
            )
    return f"{len(f.double_pendants)} removals"


def check_cor_irrelevance(f: Facts) -> str:
    _require_tree(f)
    _need(bool(f.double_pendants), "no double pendant")
    for v, leaves, sub in _eligible_removals(f):
        sub_used = 0
        for s in f.sub_minimal(sub):
            sub_used |= s
        sub_mask = f.lift(sub, sub.full_mask)
        if (sub_used ^ f.used) & sub_mask:
            raise _Fail("irrelevance differs between T and T'", vertex=v, vertices=list(iter_bits((sub_used ^ f.used) & sub_mask)))
    return f"{len(f.double_pendants)} removals"


def check_cor_b_irrelevant(f: Facts) -> str:
    b = f.decomposition.b_vertices.mask
    _need(b != 0, "no B-vertices")
    bad = b & f.used
    if bad:
        v = bad.bit_length() - 1
        s = next(m for m in f.minimal if m >> v & 1)
        raise _Fail("B-vertex lies in a minimal zero forcing set", vertex=v, set=_sets([s])[0], edges=[list(e) for e in f.g.edges()])
    return f"{bin(b).count('1')} B-vertices"


def check_lem_pseudoleaf_forcing(f: Facts) -> str:
    d = f.decomposition
    _need(bool(d.levels), "no B-vertices")
    owner = d.pseudoleaf_owner()
    for s in f.minimal:
        forcer = pseudoleaf_realization(f.g, VertexSet.from_mask(s), d).forcer_of()
        for b in d.b_vertices:
            if owner.get(forcer.get(b)) != b:
                raise _Fail(
                    "no pseudoleaf-first realization forces this B-vertex from a pseudoleaf",
                    vertex=b,
                    set=_sets([s])[0],
                    forcer=forcer.get(b),
                    edges=[list(e) for e in f.g.edges()],
                )
    return f"{len(f.minimal)} minimal sets"


def check_thm_irrelevant_iff_b(f: Facts) -> str:
    _require_tree(f)
    b = f.decomposition.b_vertices.mask
    if b != f.irrelevant:
        raise _Fail("irrelevant vertices differ from B-vertices", irrelevant=list(iter_bits(f.irrelevant)), b_vertices=list(iter_bits(b)))
    return f"{bin(b).count('1')} irrelevant"


def check_prop_star_removal(f: Facts) -> str:
    _require_tree(f)
    _need(bool(f.double_pendants), "no double pendant")
    for v, _, sub in _eligible_removals(f):
        parts = [f.sub(sub.subgraph(comp)).well_forced for comp in components(sub)]
        if all(parts) != f.well_forced:
            raise _Fail("well-forcedness not preserved by star removal", vertex=v, tree=f.well_forced, parts=parts)
    return f"{len(f.double_pendants)} choices agree"


def check_alg_choice_independence(f: Facts) -> str:
    _require_tree(f)
    _need(len(f.double_pendants) > 1, "fewer than two eligible vertices")
    verdicts = set()
    for choose in (min, max):
        trace = exhaustive_star_removals(f.g, choose)
        verdicts.add(all(len(c) <= 2 for c in components(trace.final)))
    if len(verdicts) != 1:
        raise _Fail("star-removal order changed the verdict")
    return "min-first and max-first agree"


def check_thm_no_double_pendants_not_wf(f: Facts) -> str:
    _require_tree(f)
    _need(f.g.n > 2 and not f.double_pendants, "tree too small or has a double pendant")
    if f.well_forced:
        raise _Fail("tree without double pendants is well-forced")
    return f"spectrum {list(f.spectrum)}"


def check_thm_well_characterization(f: Facts) -> str:
    _need(f.forest, "not a forest")
    verdict, _ = is_well_forced_tree(f.g)
    if verdict != f.well_forced:
        raise _Fail("tree algorithm disagrees with enumeration", algorithm=verdict, spectrum=list(f.spectrum))
    return f"verdict {verdict}"


def check_thm_path(f: Facts) -> str:
    _need(f.tree and all(f.g.degree(v) <= 2 for v in f.g.vertices()), "not a path")
    if f.well_forced != path_well_forced(f.g.n) or f.z != 1:
        raise _Fail("path verdict or Z wrong", n=f.g.n, spectrum=list(f.spectrum))
    return f"P{f.g.n}"


def check_thm_genstar(f: Facts) -> str:
    found = generalized_star_legs(f.g)
    _need(found is not None, "not a generalized star with a high-degree centre")
    _, legs = found
    lengths = [len(leg) for leg in legs]
    if genstar_well_forced(lengths) != f.well_forced or f.z != len(legs) - 1:
        raise _Fail("generalized-star rule disagrees", legs=lengths, spectrum=list(f.spectrum))
    return f"legs {sorted(lengths)}"


def check_prop_pendent_path(f: Facts) -> str:
    long = [p for p in pendent_paths(f.g) if len(p) >= 5]
    _need(bool(long), "no pendent path of length >= 4")
    if f.well_forced:
        raise _Fail("graph with a long pendent path is well-forced", path=list(long[0]))
    return f"{len(long)} long pendent paths"


def check_prop_pgs_long_legs(f: Facts) -> str:
    stars = [s for s in f.stars if min(s.leg_lengths) >= 2]
    _need(bool(stars), "no star with all legs of length >= 2")
    if f.well_forced:
        raise _Fail("graph with an all-long-legs star is well-forced", center=stars[0].center)
    return f"{len(stars)} stars"


def check_prop_corona(f: Facts) -> str:
    _need(f.g.n >= 2 and len(components(f.g)) == 1, "not connected with >= 2 vertices")
    _need(f.g.n <= CORONA_BASE_MAX_N, f"corona needs n <= {CORONA_BASE_MAX_N}")
    sub = f.sub(corona(f.g))
    if sub.well_forced:
        raise _Fail("corona is well-forced", spectrum=list(sub.spectrum))
    return f"corona spectrum {list(sub.spectrum)}"


def _is_cycle(g: Graph) -> bool:
    return g.n >= 3 and len(components(g)) == 1 and all(g.degree(v) == 2 for v in g.vertices())


def check_prop_cycle_pendant(f: Facts) -> str:
    leaves = [v for v in f.g.vertices() if f.g.degree(v) == 1]
    _need(len(leaves) == 1 and _is_cycle(f.g.without(leaves)), "not a cycle with one pendant")
    if not f.well_forced:
        raise _Fail("cycle with pendant not well-forced", spectrum=list(f.spectrum))
    return "well-forced"


def _multipartite_parts(g: Graph) -> list[int] | None:
    full = g.full_mask
    parts = []
    seen = 0
    for v in g.vertices():
        if seen >> v & 1:
            continue
        part = full & ~g.nbr_mask(v)
        for u in iter_bits(part):
            if (full & ~g.nbr_mask(u)) != part:
                return None
        parts.append(part)
        seen |= part
    return parts if len(parts) >= 2 else None


def check_prop_multipartite(f: Facts) -> str:
    _need(_multipartite_parts(f.g) is not None, "not complete multipartite")
    if not f.well_forced:
        raise _Fail("complete multipartite graph not well-forced", spectrum=list(f.spectrum))
    return "well-forced"


def _path_covers(t: Graph) -> Iterable[list[tuple[int, ...]]]:
    edges = t.edges()
    for bits in range(1 << len(edges)):
        chosen = [e for i, e in enumerate(edges) if bits >> i & 1]
        deg = [0] * t.n
        for a, b in chosen:
            deg[a] += 1
            deg[b] += 1
        if max(deg, default=0) > 2:
            continue
        yield Graph(t.n, chosen)


def _cover_paths(h: Graph) -> list[tuple[int, ...]]:
    paths = []
    for comp in components(h):
        ends = [v for v in comp if h.degree(v) <= 1]
        start = ends[0]
        path = [start]
        prev = -1
        while True:
            nxt = [w for w in h.neighbors(path[-1]) if w != prev]
            if not nxt:
                break
            prev = path[-1]
            path.append(nxt[0])
        paths.append(tuple(path))
    return paths


def _choices(path: tuple[int, ...]) -> list:
    opts: list = [path[0]] if len(path) == 1 else [path[0], path[-1]]
    if len(path) >= 4:
        inner = path[1:-1]
        opts.extend(zip(inner, inner[1:]))
    return opts


def check_lem_path_cover(f: Facts) -> str:
    _require_tree(f)
    _need(f.g.n <= PATH_COVER_MAX_N, f"path cover enumeration needs n <= {PATH_COVER_MAX_N}")
    count = 0
    for h in _path_covers(f.g):
        cover = _cover_paths(h)
        for choice in product(*(_choices(p) for p in cover)):
            s = path_cover_zfs(f.g, cover, list(choice))
            count += 1
            if not f.table[s.mask]:
                raise _Fail("path-cover seed set is not zero forcing", cover=[list(p) for p in cover], set=s.sorted())
    return f"{count} cover/choice combinations"


def check_fact_reversal(f: Facts) -> str:
    for s in f.minimum:
        _, real = closure(f.g, VertexSet.from_mask(s))
        rev = reversal(f.g, real)
        if len(rev) != bin(s).count("1") or not is_zfs(f.g, rev):
            raise _Fail("reversal of a minimum set is not a minimum zero forcing set", set=_sets([s])[0], reversal=rev.sorted())
    return f"{len(f.minimum)} minimum sets"


def check_mpc_size(f: Facts) -> str:
    _need(f.forest, "not a forest")
    cover = minimum_path_cover(f.g)
    if len(cover) != f.z:
        raise _Fail("minimum path cover size differs from Z", cover=[list(p) for p in cover], z=f.z)
    return f"{len(cover)} paths"


def check_spectrum_min_z(f: Facts) -> str:
    z, _ = zero_forcing_number(f.g, f.cap)
    if z != f.z:
        raise _Fail("least minimal size differs from Z", z=z, spectrum=list(f.spectrum))
    return f"Z = {z}"


def check_star_reduction_order(f: Facts) -> str:
    vb = list(f.double_pendants)
    _need(bool(vb), "no double pendant")
    reduced, _ = star_reduction(f.g)
    reduced_mask = f.lift(reduced, reduced.full_mask)
    vb_mask = sum(1 << v for v in vb)
    orders = list(permutations(vb)) if len(vb) <= 4 else [tuple(vb), tuple(reversed(vb))]
    residues = set()
    for order in orders:
        alive = f.g.full_mask
        for v in order:
            leaves = 0
            for u in iter_bits(f.g.nbr_mask(v) & alive):
                if bin(f.g.nbr_mask(u) & alive).count("1") == 1:
                    leaves |= 1 << u
            alive &= ~(leaves | 1 << v)
        residues.add(alive)
    if len(residues) != 1:
        raise _Fail("sequential star removals depend on order", residues=_sets(sorted(residues)))
    (alive,) = residues
    swallowed = reduced_mask & ~alive
    expected = sum(1 << w for w in iter_bits(reduced_mask) if f.g.nbr_mask(w) & ~vb_mask == 0 and f.g.degree(w) > 0)
    if alive & ~reduced_mask or swallowed != expected:
        raise _Fail("sequential removal residual differs from star reduction", sequential=list(iter_bits(alive)), reduction=list(iter_bits(reduced_mask)))
    return f"{len(orders)} orders agree"


CHECKS: dict[str, Callable[[Facts], str]] = {
    "prop-double-pendant": check_prop_double_pendant,
    "obs-legs": check_obs_legs,
    "lem-leg-use": check_lem_leg_use,
    "lem-center": check_lem_center,
    "cor-center": check_cor_center,
    "lem-center-legs": check_lem_center_legs,
    "lem-tprime": check_lem_tprime,
    "thm-no-double-pendants": check_thm_no_double_pendants,
    "thm-star-removal": check_thm_star_removal,
    "cor-irrelevance": check_cor_irrelevance,
    "cor-b-irrelevant": check_cor_b_irrelevant,
    "lem-pseudoleaf-forcing": check_lem_pseudoleaf_forcing,
    "thm-irrelevant-iff-b": check_thm_irrelevant_iff_b,
    "prop-star-removal": check_prop_star_removal,
    "alg-choice-independence": check_alg_choice_independence,
    "thm-no-double-pendants-not-wf": check_thm_no_double_pendants_not_wf,
    "thm-well-characterization": check_thm_well_characterization,
    "thm-path": check_thm_path,
    "thm-genstar": check_thm_genstar,
    "prop-pendent-path": check_prop_pendent_path,
    "prop-pgs-long-legs": check_prop_pgs_long_legs,
    "prop-corona": check_prop_corona,
    "prop-cycle-pendant": check_prop_cycle_pendant,
    "prop-multipartite": check_prop_multipartite,
    "lem-path-cover": check_lem_path_cover,
    "fact-reversal": check_fact_reversal,
    "mpc-size": check_mpc_size,
    "spectrum-min-z": check_spectrum_min_z,
    "star-reduction-order": check_star_reduction_order,
}


def verify_theorems(g: Graph, selection: Iterable[str] | None = None, cap: int | None = None) -> list[CheckResult]:
    """Run the selected checks (all by default) on ``g``, ordered by check name."""
    names = sorted(CHECKS) if selection is None else sorted(set(selection))
    unknown = [n for n in names if n not in CHECKS]
    if unknown:
        raise ValueError(f"unknown checks: {', '.join(unknown)}")
    facts = Facts(g, cap)
    results = []
    for name in names:
        try:
            detail = CHECKS[name](facts)
        except _Skip as skip:
            results.append(CheckResult(name, "skip", str(skip)))
        except _Fail as fail:
            results.append(CheckResult(name, "fail", fail.detail, fail.certificate))
        else:
            results.append(CheckResult(name, "pass", detail))
    return results


@dataclass
class BatteryReport:
    graphs: int = 0
    counts: dict[str, dict[str, int]] = field(default_factory=dict)
    failures: list[dict] = field(default_factory=list)

    def add(self, label: str, g: Graph, results: list[CheckResult]) -> None:
        self.graphs += 1
        for r in results:
            tally = self.counts.setdefault(r.name, {"pass": 0, "fail": 0, "skip": 0})
            tally[r.status] += 1
            if r.status == "fail":
                self.failures.append({"graph": label, "edges": [list(e) for e in g.edges()], "n": g.n, **r.to_json()})

    def to_json(self) -> dict:
        return {
            "graphs": self.graphs,
            "failures": len(self.failures),
            "checks": {name: self.counts[name] for name in sorted(self.counts)},
            "failure_details": self.failures,
        }
