"""Command-line front end: ``forcekit analyze|verify|census|build|export-dot``.

Exit codes: 0 success, 1 check failures, 2 usage or parse errors, 3 cap exceeded.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from .errors import DEFAULT_MAX_N, ForceKitError, InstanceTooLarge, InvalidFamily, NotAForest, max_oracle_n
from .families import ALL_TREES_MAX_N, all_trees, count_kind, build, parse_family, random_connected_graph
from .forcing import enumerate_minimal_zfs, zero_forcing_number
from .graph import Graph, VertexSet, is_forest, parse_edge_list, parse_graph6, read_graph6, to_dot
from .theorems import BatteryReport, verify_theorems
from .trees import BDecomposition, ReductionTrace, b_decomposition, irrelevant_vertices
from .wellforced import is_well_forced_oracle, is_well_forced_tree, structural_witness

VERIFY_TREES_MAX_N = 10
EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_CAP = 0, 1, 2, 3


# -- input ----------------------------------------------------------------------


def load_input(source: str, fmt: str = "auto", index: int = 0) -> tuple[Graph, dict]:
    """Resolve a file path (edge list or graph6) or a family spec into a graph."""
    path = Path(source)
    if fmt in ("auto", "edges", "graph6") and path.is_file():
        text = path.read_text(encoding="utf-8")
        if fmt == "graph6" or (fmt == "auto" and path.suffix in (".g6", ".graph6")):
            graphs = list(read_graph6(text))
            if not 0 <= index < len(graphs):
                raise InvalidFamily(f"graph6 file has {len(graphs)} graphs, no index {index}")
            return graphs[index], {"kind": "graph6", "path": source, "index": index}
        return parse_edge_list(text), {"kind": "edge-list", "path": source}
    if fmt in ("auto", "family"):
        return build(parse_family(source)), {"kind": "family", "spec": source}
    raise InvalidFamily(f"no such file: {source}")


# -- serialisation ---------------------------------------------------------------


def _vs(s) -> list[int]:
    return sorted(s)


def levels_json(d: BDecomposition) -> list[dict]:
    return [
        {
            "level": i,
            "vertices": _vs(level.vertices),
            "pseudoleaves": [{"vertex": b, "leaves": _vs(ls)} for b, ls in sorted(level.pseudoleaves.items())],
        }
        for i, level in enumerate(d.levels)
    ]


def trace_json(trace: ReductionTrace) -> dict:
    final = trace.final
    return {
        "steps": [
            {"vertex": s.vertex, "removed": _vs(s.removed), "snapshot": s.snapshot, "remaining": _vs(s.remaining)}
            for s in trace.steps
        ],
        "final": {
            "vertices": list(final.origin),
            "edges": [[final.origin[u], final.origin[v]] for u, v in final.edges()],
        },
        "notes": list(trace.notes),
    }


def analyze_graph(
    g: Graph,
    *,
    z: bool = True,
    spectrum: bool = False,
    irrelevant: bool = False,
    b_levels: bool = False,
    well_forced: str | None = "auto",
    obstruction: bool = True,
    cap: int | None = None,
    probe: bool = False,
) -> dict:
    """Build the analysis report dictionary for one graph."""
    cap = max_oracle_n() if cap is None else cap
    forest = is_forest(g)
    report: dict = {"n": g.n, "m": g.m, "forest": forest}
    enum = None

    def enumeration():
        nonlocal enum
        if enum is None:
            enum = enumerate_minimal_zfs(g, cap)
        return enum

    if z:
        value, witness = zero_forcing_number(g, cap)
        report["z"] = value
        report["z_witness"] = _vs(witness)
    if spectrum:
        report["spectrum"] = list(enumeration().spectrum)
    decomposition = b_decomposition(g) if (b_levels or irrelevant or probe) else None
    if b_levels:
        report["b_levels"] = levels_json(decomposition)
    if irrelevant:
        mode = "tree-fast" if forest else "oracle"
        report["irrelevant"] = _vs(irrelevant_vertices(g, mode, cap))
        report["irrelevant_method"] = mode
    if well_forced:
        method = well_forced
        if method == "auto":
            method = "tree" if forest else "oracle"
        if method == "tree":
            if not forest:
                raise NotAForest("--well-forced=tree needs a forest")
            verdict, trace = is_well_forced_tree(g)
            report["well_forced"] = {"verdict": verdict, "method": "tree-algorithm", "witness": trace_json(trace)}
        else:
            oracle = is_well_forced_oracle(g, cap)
            witness = None
            if oracle.witness is not None:
                witness = {"smallest": _vs(oracle.witness[0]), "largest": _vs(oracle.witness[1])}
            report["well_forced"] = {"verdict": oracle.verdict, "method": "oracle", "witness": witness}
            report.setdefault("spectrum", list(oracle.spectrum))
    if obstruction:
        found = structural_witness(g)
        report["obstruction"] = found.to_json() if found else None
    if probe:
        used = 0
        for s in enumeration().sets:
            used |= s.mask
        irrelevant_mask = g.full_mask & ~used
        b = decomposition.b_vertices.mask
        report["probe"] = {
            "irrelevant": _vs(VertexSet.from_mask(irrelevant_mask)),
            "b_vertices": _vs(decomposition.b_vertices),
            "irrelevant_not_b": _vs(VertexSet.from_mask(irrelevant_mask & ~b)),
            "b_not_irrelevant": _vs(VertexSet.from_mask(b & ~irrelevant_mask)),
        }
    return report


def _emit(obj: dict) -> None:
    sys.stdout.write(json.dumps(obj, sort_keys=True) + "\n")


def _error_obj(exc: Exception) -> dict:
    kind = getattr(exc, "kind", "error")
    return {"error": {"kind": kind, "message": str(exc)}}


def _exit_code(exc: Exception) -> int:
    return EXIT_CAP if isinstance(exc, InstanceTooLarge) else EXIT_USAGE


def _resolve_cap(args) -> int:
    cap = args.max_oracle_n if args.max_oracle_n is not None else max_oracle_n()
    if cap > DEFAULT_MAX_N:
        print(f"warning: brute-force cap raised to n = {cap}; searches grow as 2^n", file=sys.stderr)
    return cap


# -- commands -----------------------------------------------------------------------


def cmd_analyze(args) -> int:
    cap = _resolve_cap(args)
    g, descriptor = load_input(args.input, args.format, args.index)
    chosen = args.z or args.spectrum or args.irrelevant or args.b_levels or args.well_forced
    start = time.perf_counter()
    report = analyze_graph(
        g,
        z=args.z or not chosen,
        spectrum=args.spectrum,
        irrelevant=args.irrelevant,
        b_levels=args.b_levels or not chosen,
        well_forced=args.well_forced or (None if chosen else "auto"),
        obstruction=True,
        cap=cap,
    )
    report["input"] = descriptor
    if args.timing:
        report["timing_ms"] = round((time.perf_counter() - start) * 1000, 3)
    if args.dot:
        Path(args.dot).write_text(to_dot(g, b_decomposition(g).coloring()), encoding="utf-8")
    _emit(report)
    return EXIT_OK


def _random_sample(max_n: int, count: int, seed: int):
    rng = random.Random(seed)
    for i in range(count):
        n = rng.randint(3, max_n)
        yield f"random[{i}]", random_connected_graph(n, rng.randrange(2**32))


def cmd_verify(args) -> int:
    if args.all_trees_up_to is None and args.random_graphs is None:
        raise InvalidFamily("give --all-trees-up-to N and/or --random-graphs N COUNT SEED")
    cap = _resolve_cap(args)
    selection = args.checks.split(",") if args.checks else None
    battery = BatteryReport()
    if args.all_trees_up_to is not None:
        if args.all_trees_up_to > VERIFY_TREES_MAX_N:
            raise InstanceTooLarge(args.all_trees_up_to, VERIFY_TREES_MAX_N, "--all-trees-up-to")
        for n in range(1, args.all_trees_up_to + 1):
            for i, t in enumerate(all_trees(n)):
                battery.add(f"tree[n={n},#{i}]", t, verify_theorems(t, selection, cap))
    if args.random_graphs is not None:
        max_n, count, seed = args.random_graphs
        if max_n > cap:
            raise InstanceTooLarge(max_n, cap, "--random-graphs")
        if max_n < 3:
            raise InvalidFamily("--random-graphs needs N >= 3")
        for label, g in _random_sample(max_n, count, seed):
            battery.add(label, g, verify_theorems(g, selection, cap))
    summary = battery.to_json()
    _emit(summary)
    return EXIT_FAIL if summary["failures"] else EXIT_OK


def _parse_range(text: str) -> range:
    lo, sep, hi = text.partition("..")
    if not sep:
        raise InvalidFamily(f"range must look like 1..8, got {text!r}")
    return range(int(lo), int(hi) + 1)


def _census_items(args):
    if args.graph6:
        text = Path(args.graph6).read_text(encoding="utf-8")
        for i, line in enumerate(ln for ln in text.splitlines() if ln.strip()):
            yield {"kind": "graph6", "index": i, "graph6": line.strip()}
        return
    if args.family == "all-trees":
        top = args.max_n if args.max_n is not None else 8
        if top > ALL_TREES_MAX_N:
            raise InstanceTooLarge(top, ALL_TREES_MAX_N, "exhaustive tree generation")
        index = 0
        for n in range(1, top + 1):
            for t in all_trees(n):
                yield {"kind": "tree", "index": index, "n": n, "edges": t.edges()}
                index += 1
        return
    if args.family:
        kind = count_kind(args.family)
        counts = _parse_range(args.range) if args.range else range(1, (args.max_n or 8) + 1)
        for i, k in enumerate(counts):
            yield {"kind": "family", "index": i, "spec": f"{kind}:{k}"}
        return
    raise InvalidFamily("census needs --graph6 FILE or --family KIND")


def _census_one(job: tuple[dict, int, bool]) -> dict:
    item, cap, probe = job
    line = {"index": item["index"]}
    try:
        if item["kind"] == "graph6":
            g = parse_graph6(item["graph6"])
            line["input"] = {"kind": "graph6", "graph6": item["graph6"]}
        elif item["kind"] == "tree":
            g = Graph(item["n"], item["edges"])
            line["input"] = {"kind": "tree", "edges": [list(e) for e in item["edges"]]}
        else:
            g = build(item["spec"])
            line["input"] = {"kind": "family", "spec": item["spec"]}
        report = analyze_graph(
            g,
            z=True,
            spectrum=g.n <= cap,
            b_levels=True,
            well_forced="auto" if (is_forest(g) or g.n <= cap) else None,
            cap=cap,
            probe=probe,
        )
        line.update(report)
    except ForceKitError as exc:
        line.update(_error_obj(exc))
    return line


def cmd_census(args) -> int:
    cap = _resolve_cap(args)
    items = list(_census_items(args))
    jobs = [(item, cap, args.probe_open_question) for item in items]
    if args.jobs > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            lines = pool.map(_census_one, jobs, chunksize=16)
            lines = list(lines)
    else:
        lines = [_census_one(job) for job in jobs]
    by_n: dict[str, dict[str, int]] = {}
    spectra: dict[str, int] = {}
    totals = {"well_forced": 0, "not_well_forced": 0, "unknown": 0}
    errors = 0
    sightings = []
    b_in_minimal = []
    for line in lines:
        _emit(line)
        if "error" in line:
            errors += 1
            continue
        tally = by_n.setdefault(str(line["n"]), {"well_forced": 0, "not_well_forced": 0})
        wf = line.get("well_forced")
        if wf is None:
            totals["unknown"] += 1
        elif wf["verdict"]:
            totals["well_forced"] += 1
            tally["well_forced"] += 1
        else:
            totals["not_well_forced"] += 1
            tally["not_well_forced"] += 1
        if "spectrum" in line:
            key = ",".join(map(str, line["spectrum"]))
            spectra[key] = spectra.get(key, 0) + 1
        probe = line.get("probe")
        if probe and probe["irrelevant_not_b"]:
            sightings.append({"index": line["index"], "input": line["input"], "vertices": probe["irrelevant_not_b"]})
        if probe and probe["b_not_irrelevant"]:
            b_in_minimal.append({"index": line["index"], "input": line["input"], "vertices": probe["b_not_irrelevant"]})
    aggregate = {
        "graphs": len(lines),
        "errors": errors,
        **totals,
        "by_n": {k: by_n[k] for k in sorted(by_n, key=int)},
        "spectra": dict(sorted(spectra.items())),
    }
    if args.probe_open_question:
        aggregate["sightings"] = sightings
        aggregate["b_vertices_in_minimal_sets"] = b_in_minimal
    _emit({"aggregate": aggregate})
    return EXIT_OK


def cmd_build(args) -> int:
    sys.stdout.write(build(parse_family(args.spec)).to_edge_list())
    return EXIT_OK


def cmd_export_dot(args) -> int:
    g, _ = load_input(args.input, args.format, args.index)
    coloring = b_decomposition(g).coloring()
    if args.seed:
        for v in (int(x) for x in args.seed.split(",")):
            coloring[v] = "seed"
    dot = to_dot(g, coloring)
    if args.output:
        Path(args.output).write_text(dot, encoding="utf-8")
    else:
        sys.stdout.write(dot)
    return EXIT_OK


# -- parser ------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="forcekit", description="Zero forcing and well-forced graph analysis.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_cap(p):
        p.add_argument("--max-oracle-n", type=int, default=None, help="override the brute-force vertex cap")

    def add_input(p):
        p.add_argument("input", help="edge-list file, graph6 file (.g6) or family spec such as genstar:1,1,2")
        p.add_argument("--format", choices=["auto", "edges", "graph6", "family"], default="auto")
        p.add_argument("--index", type=int, default=0, help="graph index within a graph6 file")

    p = sub.add_parser("analyze", help="analyse one graph, JSON report on stdout")
    add_input(p)
    add_cap(p)
    p.add_argument("--z", action="store_true")
    p.add_argument("--spectrum", action="store_true")
    p.add_argument("--irrelevant", action="store_true")
    p.add_argument("--b-levels", action="store_true")
    p.add_argument("--well-forced", nargs="?", const="auto", choices=["auto", "tree", "oracle"])
    p.add_argument("--dot", metavar="FILE", help="also write DOT with B-level colouring")
    p.add_argument("--timing", action="store_true", help="include wall-clock timing (reports stop being byte-stable)")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("verify", help="run the theorem battery")
    p.add_argument("--all-trees-up-to", type=int, metavar="N")
    p.add_argument("--random-graphs", type=int, nargs=3, metavar=("N", "COUNT", "SEED"))
    p.add_argument("--checks", help="comma-separated subset of check names")
    add_cap(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("census", help="analyse a stream of graphs, JSON lines on stdout")
    p.add_argument("--graph6", metavar="FILE")
    p.add_argument("--family", help="all-trees or a count family such as path, cycle, star")
    p.add_argument("--max-n", type=int)
    p.add_argument("--range", help="count range for a family, e.g. 1..8")
    p.add_argument("--probe-open-question", action="store_true", help="compare irrelevant vertices with B-vertices")
    p.add_argument("--jobs", type=int, default=1)
    add_cap(p)
    p.set_defaults(func=cmd_census)

    p = sub.add_parser("build", help="print a family graph as an edge list")
    p.add_argument("spec")
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("export-dot", help="DOT rendering with B-level colouring")
    add_input(p)
    p.add_argument("-o", "--output")
    p.add_argument("--seed", help="comma-separated vertices to mark as seeds")
    p.set_defaults(func=cmd_export_dot)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ForceKitError as exc:
        _emit(_error_obj(exc))
        return _exit_code(exc)
    except (OSError, ValueError) as exc:
        _emit({"error": {"kind": "usage-error", "message": str(exc)}})
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
