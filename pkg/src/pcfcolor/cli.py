"""Command-line front end: ``pcf verify|solve|choosable|gadget|bench|corpus``."""

from __future__ import annotations

import argparse
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from pathlib import Path

from .coloring import (
    degree_plus_k_lists,
    parse_coloring,
    parse_lists,
    serialize_coloring,
    serialize_lists,
    verify_pcf,
)
from .corpus import walk_graph_files, write_corpus
from .errors import FormatError, PCFError, PreconditionError
from .gadgets import subdivision_counterexample, t4_gadget
from .graph import Graph, make_complete, make_path, parse_graph
from .oracle import Choosability, check_pcf_choosable, default_node_limit
from .solve import STRATEGIES, Outcome, solve

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_LIMIT = 0, 1, 2, 3

NAMED_BASES = {
    "K1": lambda: Graph.from_edges(1, []),
    "K2": lambda: make_complete(2),
    "P3": lambda: make_path(3),
}


def _read(path: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise FormatError(f"cannot read {path}: {exc.strerror}") from None


def _err(msg: str) -> None:
    print(f"pcf: {msg}", file=sys.stderr)


def parse_demand(text: str, n: int) -> dict[int, int]:
    """Lines ``<v>: <f>``; every vertex must appear."""
    demand: dict[int, int] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        head, sep, rest = line.partition(":")
        try:
            if not sep:
                raise ValueError
            v, f = int(head), int(rest)
        except ValueError:
            raise FormatError(f"expected '<v>: <f>', got {line!r}", lineno) from None
        if not 0 <= v < n:
            raise FormatError(f"vertex id {v} out of range", lineno)
        demand[v] = f
    if len(demand) != n:
        raise FormatError(f"no demand for vertices {sorted(set(range(n)) - set(demand))}")
    return demand


# --- verify -----------------------------------------------------------------


def cmd_verify(args) -> int:
    g = parse_graph(_read(args.graph))
    lists = parse_lists(_read(args.lists), g.n)
    phi = parse_coloring(_read(args.coloring), g.n)
    violation = verify_pcf(g, lists, phi)
    if violation is None:
        print("OK")
        return EXIT_OK
    print(f"VIOLATION {violation}")
    return EXIT_FAIL


# --- solve ------------------------------------------------------------------


def cmd_solve(args) -> int:
    g = parse_graph(_read(args.graph))
    if args.lists:
        lists = parse_lists(_read(args.lists), g.n)
    elif args.k is not None:
        universe = args.universe if args.universe is not None else g.max_degree + args.k
        lists = degree_plus_k_lists(g, args.k, universe, args.seed)
    else:
        raise PreconditionError("give a lists file or --k to generate degree+k lists")
    started = time.perf_counter()
    result = solve(g, lists, args.strategy, args.limit)
    elapsed = time.perf_counter() - started
    print(f"strategy={result.strategy}\tstatus={result.outcome.value}\tnodes={result.nodes}"
          f"\ttime={elapsed:.3f}\t{result.trace.report()}", file=sys.stderr)
    if result.outcome is Outcome.UNSAT:
        print("unsatisfiable")
        return EXIT_FAIL
    if result.outcome is Outcome.LIMIT:
        print("resource-limit")
        return EXIT_LIMIT
    # solve() already verified; check again on exactly what gets written
    text = serialize_coloring(result.coloring)
    if verify_pcf(g, lists, parse_coloring(text, g.n)) is not None:
        raise AssertionError("serialized coloring failed verification")
    if args.output:
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


# --- choosable --------------------------------------------------------------


def cmd_choosable(args) -> int:
    g = parse_graph(_read(args.graph))
    if args.f_file:
        demand = parse_demand(_read(args.f_file), g.n)
    else:
        demand = {v: g.degree(v) + args.k for v in g}
    verdict = check_pcf_choosable(
        g, demand, args.budget, max_vertices=args.max_vertices, node_limit=args.limit
    )
    if verdict.status is Choosability.CHOOSABLE:
        print(f"choosable\ttested={verdict.tested}")
        return EXIT_OK
    if verdict.status is Choosability.LIMIT:
        print(f"resource-limit\ttested={verdict.tested}")
        return EXIT_LIMIT
    print(f"not-choosable\ttested={verdict.tested}")
    text = serialize_lists(verdict.counterexample)
    if args.output:
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)
    return EXIT_FAIL


# --- gadget -----------------------------------------------------------------


def cmd_gadget(args) -> int:
    if args.kind == "t4":
        if args.base_file:
            base, name = parse_graph(_read(args.base_file)), None
        elif args.base in NAMED_BASES:
            base, name = NAMED_BASES[args.base](), args.base
        else:
            raise PreconditionError(f"unknown base {args.base!r}; use {sorted(NAMED_BASES)} or --base-file")
        gi = t4_gadget(base, args.v0, name)
    else:
        gi = subdivision_counterexample(args.k)
    prefix = Path(args.prefix)
    prefix.parent.mkdir(parents=True, exist_ok=True)
    Path(f"{prefix}.graph").write_text(gi.graph_text())
    Path(f"{prefix}.lists").write_text(gi.lists_text())
    print(f"{gi.provenance()}\tn={gi.graph.n}\tm={gi.graph.m}")
    return EXIT_OK


# --- bench ------------------------------------------------------------------


@dataclass(frozen=True)
class BenchJob:
    name: str
    seed: int | None
    graph_text: str
    lists_text: str | None
    expect: tuple[tuple[str, str], ...]
    node_limit: int


def parse_expect(text: str) -> dict[str, str]:
    out = {}
    for raw in text.splitlines():
        line = raw.strip()
        if line and not line.startswith("#"):
            key, _, value = line.partition("=")
            out[key.strip()] = value.strip()
    return out


def run_bench_job(job: BenchJob) -> dict[str, str]:
    expect = dict(job.expect)
    want = expect.get("status", "sat")
    record = {"name": job.name, "seed": "-" if job.seed is None else str(job.seed)}
    started = time.perf_counter()
    try:
        g = parse_graph(job.graph_text)
        if job.lists_text is not None:
            lists = parse_lists(job.lists_text, g.n)
        else:
            k = int(expect.get("k", "2"))
            universe = int(expect.get("universe", str(g.max_degree + k)))
            lists = degree_plus_k_lists(g, k, universe, job.seed)
        result = solve(g, lists, expect.get("strategy", "auto"), job.node_limit)
        status = result.outcome.value
        verified = "yes" if result.coloring is not None and verify_pcf(g, lists, result.coloring) is None else "n/a"
        record.update(
            strategy=result.strategy,
            status=status,
            verified=verified,
            fallback="yes" if result.trace.fallback_fired else "no",
            substitutions=str(len(result.trace.substitutions)),
            depth=str(result.trace.max_depth),
            nodes=str(result.nodes),
        )
    except PCFError as exc:
        status = "error"
        record.update(strategy=expect.get("strategy", "auto"), status=status, verified="n/a",
                      fallback="n/a", substitutions="0", depth="0", nodes="0", error=str(exc))
    ok = status == want and record["fallback"] != "yes"
    record["expected"] = want
    record["match"] = "yes" if ok else "no"
    record["time"] = f"{time.perf_counter() - started:.4f}"
    return record


FIELDS = ("name", "seed", "strategy", "status", "expected", "match", "verified",
          "fallback", "substitutions", "depth", "nodes", "time")


def bench_jobs(root: Path, seeds: int, node_limit: int) -> list[BenchJob]:
    jobs = []
    for gpath in walk_graph_files(root):
        stem = gpath.with_suffix("")
        expect_path, lists_path = stem.with_suffix(".expect"), stem.with_suffix(".lists")
        expect = parse_expect(expect_path.read_text()) if expect_path.exists() else {}
        frozen = tuple(sorted(expect.items()))
        gtext = gpath.read_text()
        if lists_path.exists():
            jobs.append(BenchJob(stem.name, None, gtext, lists_path.read_text(), frozen, node_limit))
        else:
            jobs += [BenchJob(stem.name, s, gtext, None, frozen, node_limit) for s in range(seeds)]
    return jobs


def format_record(rec: dict[str, str]) -> str:
    line = "\t".join(f"{k}={rec[k]}" for k in FIELDS)
    if "error" in rec:
        line += f"\terror={rec['error']}"
    return line


def cmd_bench(args) -> int:
    root = Path(args.corpus)
    if not root.is_dir():
        raise FormatError(f"corpus directory {root} not found")
    jobs = bench_jobs(root, args.seeds, args.limit or default_node_limit())
    started = time.perf_counter()
    if args.jobs > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            records = list(pool.map(run_bench_job, jobs, chunksize=8))
    else:
        records = [run_bench_job(j) for j in jobs]
    records.sort(key=lambda r: (r["name"], -1 if r["seed"] == "-" else int(r["seed"])))
    total = len(records)
    verified = sum(r["verified"] == "yes" for r in records)
    sat = sum(r["status"] == "sat" for r in records)
    unsat = sum(r["status"] == "unsat" for r in records)
    fallbacks = sum(r["fallback"] == "yes" for r in records)
    mismatches = sum(r["match"] == "no" for r in records)
    lines = [format_record(r) for r in records]
    lines.append(
        f"# total={total}\tsat={sat}\tverified={verified}\tunsat={unsat}\tfallbacks={fallbacks}"
        f"\tmismatches={mismatches}\ttime={time.perf_counter() - started:.2f}"
    )
    text = "\n".join(lines) + "\n"
    if args.out:
        Path(args.out).write_text(text)
        print(lines[-1])
    else:
        sys.stdout.write(text)
    return EXIT_OK if mismatches == 0 else EXIT_FAIL


def cmd_corpus(args) -> int:
    count = write_corpus(Path(args.directory), args.kind)
    print(f"wrote {count} instances to {args.directory}")
    return EXIT_OK


# --- entry point --------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="pcf", description="Proper conflict-free list coloring tools.")
    sub = p.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="check a coloring against a graph and lists")
    v.add_argument("graph")
    v.add_argument("lists")
    v.add_argument("coloring")
    v.set_defaults(func=cmd_verify)

    s = sub.add_parser("solve", help="find a PCF coloring from lists")
    s.add_argument("graph")
    s.add_argument("lists", nargs="?", help="lists file; omit and pass --k to sample degree+k lists")
    s.add_argument("--strategy", choices=STRATEGIES, default="auto")
    s.add_argument("--k", type=int, help="sample lists of size degree+k")
    s.add_argument("--universe", type=int, help="palette size for sampled lists")
    s.add_argument("--seed", type=int, default=0, help="seed for sampled lists")
    s.add_argument("--limit", type=int, help="oracle node limit")
    s.add_argument("-o", "--output", help="write the coloring here instead of stdout")
    s.set_defaults(func=cmd_solve)

    c = sub.add_parser("choosable", help="decide PCF choosability for a list-size demand")
    c.add_argument("graph")
    group = c.add_mutually_exclusive_group(required=True)
    group.add_argument("--k", type=int, help="demand degree+k at every vertex")
    group.add_argument("--f-file", help="per-vertex demand, lines '<v>: <f>'")
    c.add_argument("--budget", type=int, help="maximum number of assignments to test")
    c.add_argument("--max-vertices", type=int, default=7, help="size guard when no budget is given")
    c.add_argument("--limit", type=int, help="oracle node limit per assignment")
    c.add_argument("-o", "--output", help="write a counterexample list file here")
    c.set_defaults(func=cmd_choosable)

    gd = sub.add_parser("gadget", help="write a non-colorable gadget instance")
    gsub = gd.add_subparsers(dest="kind", required=True)
    t4 = gsub.add_parser("t4", help="four-cycles glued at a vertex of a base graph")
    t4.add_argument("--base", default="K1", help=f"named base graph ({', '.join(NAMED_BASES)})")
    t4.add_argument("--base-file", help="base graph file (overrides --base)")
    t4.add_argument("--v0", type=int, default=0, help="anchor vertex of the base graph")
    t4.add_argument("prefix", help="output prefix; writes PREFIX.graph and PREFIX.lists")
    sd = gsub.add_parser("subdiv", help="cycle C_{6k+2} with 3-color lists")
    sd.add_argument("--k", type=int, default=1)
    sd.add_argument("prefix")
    gd.set_defaults(func=cmd_gadget)

    b = sub.add_parser("bench", help="run a corpus directory and report")
    b.add_argument("corpus")
    b.add_argument("--seeds", type=int, default=5, help="list seeds per graph without a lists file")
    b.add_argument("--jobs", type=int, default=1)
    b.add_argument("--limit", type=int, help="oracle node limit")
    b.add_argument("--out", help="write the report here")
    b.set_defaults(func=cmd_bench)

    cp = sub.add_parser("corpus", help="generate a bench corpus directory")
    cp.add_argument("kind", choices=("subcubic", "degree4", "gadget"))
    cp.add_argument("directory")
    cp.set_defaults(func=cmd_corpus)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    if getattr(args, "limit", None) is not None and args.limit < 1:
        _err("--limit must be positive")
        return EXIT_INPUT
    try:
        return args.func(args)
    except (FormatError, PreconditionError) as exc:
        _err(str(exc))
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
