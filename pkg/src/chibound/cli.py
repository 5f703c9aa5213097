"""Command-line driver: construct the base and power graphs, run the
verification suites, run the bounding coloring, and sample induced subgraphs,
all as reproducible runs with machine-readable reports.

Every output file embeds the run configuration and a content hash of the
inputs. Report files are canonical JSON sorted by (check, instance) with wall
times omitted, so identical configurations produce byte-identical files.
Exit codes: 0 all checks passed, 1 a property was violated (witness included
in the report), 2 operational errors (bad arguments, non-prime modulus,
exceeded budgets, IO).
"""

from __future__ import annotations

import argparse
import hashlib
import json
import random
import sys
import time
from dataclasses import dataclass

from .coloring import bounded_color, edge_partition
from .errors import (
    BudgetExceeded,
    CliqueTooLarge,
    CycleFound,
    MultiplePaths,
    SizeBudgetExceeded,
)
from .farey import residue_partition
from .formats import canonical_json, graph_json_dict, read_edgelist, write_dimacs, write_edgelist
from .graphs import OrientedGraph, induced_subgraph
from .oracles import (
    Budget,
    VerificationReport,
    budget_report,
    exact_chromatic_number,
    max_clique,
    verify_no_long_path,
    verify_partition_sums,
    verify_proper,
    verify_triangle_free,
    verify_unique_paths,
)
from .power import BUILTIN_F, build_power_graph, class_parameters, tabulate_f
from .zykov import DEFAULT_SIZE_CAP, build_zykov, predict_size, provenance_json_dict

DEFAULT_NODE_BUDGET = 5_000_000


@dataclass(frozen=True)
class RunConfig:
    """Everything that determines a run's output, minus where it is written."""

    command: str
    parameters: dict
    seed: int | None
    budget_ms: float | None
    budget_nodes: int | None
    input_sha256: str

    def to_json_dict(self) -> dict:
        return {
            "command": self.command,
            "parameters": self.parameters,
            "seed": self.seed,
            "budget_ms": self.budget_ms,
            "budget_nodes": self.budget_nodes,
            "input_sha256": self.input_sha256,
        }


class _FileGraph:
    """Residue-labeled graph loaded from an edge-list file."""

    def __init__(self, graph: OrientedGraph, labels, p):
        self.graph = graph
        self.labels = labels
        self.p = p


def _sha256(data: bytes) -> str:
    return hashlib.sha256(data).hexdigest()


def _make_config(args, command: str, parameters: dict, input_bytes: bytes | None) -> RunConfig:
    params = {k: v for k, v in sorted(parameters.items()) if v is not None}
    if input_bytes is None:
        basis = canonical_json({"command": command, "parameters": params})
        digest = _sha256(basis.encode())
    else:
        digest = _sha256(input_bytes)
    return RunConfig(
        command=command,
        parameters=params,
        seed=getattr(args, "seed", None),
        budget_ms=getattr(args, "budget_ms", None),
        budget_nodes=getattr(args, "budget_nodes", None),
        input_sha256=digest,
    )


def _budget(args) -> Budget:
    ms = getattr(args, "budget_ms", None)
    nodes = getattr(args, "budget_nodes", None)
    if ms is None and nodes is None:
        return Budget(max_nodes=DEFAULT_NODE_BUDGET)
    return Budget(max_nodes=nodes, max_millis=ms)


def _write_text(path: str | None, text: str):
    if path is None:
        sys.stdout.write(text)
    else:
        with open(path, "w") as fh:
            fh.write(text)


def _emit_reports(reports: list[VerificationReport], config: RunConfig, out: str | None) -> int:
    ordered = sorted(reports, key=lambda r: (r.check, r.instance))
    for r in ordered:
        print(f"[{r.verdict}] {r.check} on {r.instance} ({r.wall_time_ms:.1f} ms)", file=sys.stderr)
    payload = canonical_json(
        {
            "config": config.to_json_dict(),
            "reports": [r.to_json_dict() for r in ordered],
        }
    )
    _write_text(out, payload)
    if any(r.verdict == "fail" for r in ordered):
        return 1
    if any(r.verdict == "budget-exceeded" for r in ordered):
        return 2
    return 0


def _timed_report(check: str, instance: str, passed: bool, witness, started) -> VerificationReport:
    return VerificationReport(
        check=check,
        instance=instance,
        verdict="pass" if passed else "fail",
        witness=witness,
        wall_time_ms=(time.perf_counter() - started) * 1000.0,
    )


# ----------------------------------------------------------------- construct


def _load_f_table(source: str, n_max: int) -> dict[int, int]:
    if source in BUILTIN_F:
        return tabulate_f(source, n_max)
    with open(source) as fh:
        raw = json.load(fh)
    return {int(k): int(v) for k, v in raw.items()}


def _resolve_power_params(args):
    """(k, p, params-json-or-None): explicit --k/--p, or derived from --f/--n
    by taking p as the largest prime at or below n and k as the growth target
    g(p), which makes the built power graph the witness for target n."""
    if args.f is not None:
        if args.n is None:
            raise ValueError("--f requires --n (the target order)")
        table = _load_f_table(args.f, args.n)
        params = class_parameters(table, args.n)
        p = params.witness_for(args.n)
        k = params.g[p]
        return k, p, params.to_json_dict()
    if args.k is None or args.p is None:
        raise ValueError("construct power needs --k and --p, or --f and --n")
    return args.k, args.p, None


def cmd_construct(args) -> int:
    if args.kind == "zykov":
        if args.k is None:
            raise ValueError("construct zykov needs --k")
        config = _make_config(
            args, "construct zykov", {"k": args.k, "size_cap": args.size_cap, "format": args.format}, None
        )
        pv, pe = predict_size(args.k)
        print(f"predicted size: {pv} vertices, {pe} edges", file=sys.stderr)
        zg = build_zykov(args.k, size_cap=args.size_cap)
        if (zg.graph.n, zg.graph.m) != (pv, pe):
            raise AssertionError(f"built size {(zg.graph.n, zg.graph.m)} != predicted {(pv, pe)}")
        graph, labels, p = zg.graph, None, None
        extra = {"provenance": provenance_json_dict(zg)}
    else:
        k, p, params_json = _resolve_power_params(args)
        config = _make_config(
            args,
            "construct power",
            {"k": k, "p": p, "f": args.f, "n": args.n, "size_cap": args.size_cap, "format": args.format},
            None,
        )
        pv, pe = predict_size(k)
        print(f"predicted base size: {pv} vertices, {pe} edges", file=sys.stderr)
        zg = build_zykov(k, size_cap=args.size_cap)
        pg = build_power_graph(zg, p)
        graph, labels = pg.graph, pg.labels
        extra = {}
        if params_json is not None:
            extra["class_parameters"] = params_json

    meta = {
        "config": json.dumps(config.to_json_dict(), sort_keys=True),
        "input-sha256": config.input_sha256,
    }
    if p is not None:
        meta["p"] = p
    if args.format == "edgelist":
        _write_text(args.out, write_edgelist(graph, labels, metadata=meta))
        if args.out is not None and "provenance" in extra:
            _write_text(args.out + ".provenance.json", canonical_json(extra["provenance"]))
    elif args.format == "dimacs":
        comments = "".join(f"c {k}: {v}\n" for k, v in meta.items())
        _write_text(args.out, comments + write_dimacs(graph))
    else:
        doc = {"config": config.to_json_dict(), "graph": graph_json_dict(graph, labels, p)}
        doc.update(extra)
        _write_text(args.out, canonical_json(doc))
    print(f"built: {graph.n} vertices, {graph.m} edges", file=sys.stderr)
    return 0


# -------------------------------------------------------------------- verify


def _chromatic_report(g, expected: int, instance: str, budget: Budget) -> VerificationReport:
    started = time.perf_counter()
    try:
        chi = exact_chromatic_number(g, budget)
    except BudgetExceeded as exc:
        return budget_report("chromatic-number", instance, exc)
    witness = None if chi == expected else {"measured": chi, "expected": expected}
    return _timed_report("chromatic-number", instance, chi == expected, witness, started)


def _verify_base(k: int, budget: Budget, size_cap: int) -> list[VerificationReport]:
    zg = build_zykov(k, size_cap=size_cap)
    inst = f"zykov(k={k})"
    return [
        verify_triangle_free(zg, instance=inst),
        verify_unique_paths(zg, instance=inst),
        _chromatic_report(zg, k, inst, budget),
    ]


def _clique_bound_report(g, p: int, instance: str, budget: Budget) -> VerificationReport:
    started = time.perf_counter()
    try:
        omega, clique = max_clique(g, budget)
    except BudgetExceeded as exc:
        return budget_report("clique-bound", instance, exc)
    witness = {"omega": omega, "clique": list(clique), "p": p}
    return _timed_report("clique-bound", instance, omega <= p, witness, started)


def _verify_clique_bound(k: int, p: int, budget: Budget, size_cap: int) -> list[VerificationReport]:
    zg = build_zykov(k, size_cap=size_cap)
    pg = build_power_graph(zg, p)
    inst = f"power(k={k}, p={p})"
    reports = [_clique_bound_report(pg, p, inst, budget)]
    if p == 2:
        reports.append(verify_triangle_free(pg, instance=inst))
    return reports


def _cover_report(part, instance: str) -> VerificationReport:
    started = time.perf_counter()
    seen: dict[int, int] = {}
    duplicated = []
    for cls in part.classes:
        for a in cls:
            seen[a] = seen.get(a, 0) + 1
            if seen[a] == 2:
                duplicated.append(a)
    missing = [a for a in range(1, part.p) if a not in seen]
    stray = sorted(a for a in seen if not 1 <= a <= part.p - 1)
    ok = not duplicated and not missing and not stray
    witness = None if ok else {"missing": missing, "duplicated": sorted(duplicated), "stray": stray}
    return _timed_report("partition-cover", instance, ok, witness, started)


def _verify_partition(p: int, n: int) -> list[VerificationReport]:
    part = residue_partition(p, n)
    inst = f"partition(p={p}, n={n})"
    return [_cover_report(part, inst), verify_partition_sums(part, instance=inst)]


def _palette_report(coloring, n: int, phi: int, instance: str) -> VerificationReport:
    started = time.perf_counter()
    ok = coloring.palette <= n**phi <= n ** (n * n)
    witness = {
        "palette": coloring.palette,
        "order_bound": n**phi,
        "square_bound": n ** (n * n),
    }
    return _timed_report("palette-bound", instance, ok, witness, started)


def _verify_class_paths(k: int, p: int, n: int | None, budget: Budget, size_cap: int, strict: bool) -> list[VerificationReport]:
    """Per-class long-path checks plus the product coloring on the full power
    graph; a long path is converted to a clique and re-checked before report."""
    zg = build_zykov(k, size_cap=size_cap)
    pg = build_power_graph(zg, p)
    if n is None:
        n, _ = max_clique(pg, budget)
    if n >= p:
        msg = f"clique order n={n} is not below p={p}; the coloring bound does not apply"
        if strict:
            raise ValueError(msg)
        print(f"note: {msg}; skipping class-path checks", file=sys.stderr)
        return []
    part = residue_partition(p, n)
    ep = edge_partition(pg, part)
    inst = f"power(k={k}, p={p}, n={n})"
    reports = []
    any_long = False
    und = pg.graph.und_bits()
    for i in range(len(ep.classes)):
        r = verify_no_long_path(ep.class_graph(i), n, instance=f"{inst} class A_{i + 1:03d}")
        if r.verdict == "fail":
            any_long = True
            clique = sorted(set(r.witness["path"][: n + 1]))
            for j, a in enumerate(clique):
                for b in clique[j + 1 :]:
                    if not (und[a] >> b) & 1:
                        raise AssertionError("path-to-clique conversion failed re-check")
            r = VerificationReport(
                check=r.check,
                instance=r.instance,
                verdict="fail",
                witness={**r.witness, "clique": clique},
                wall_time_ms=r.wall_time_ms,
            )
        reports.append(r)
    if any_long:
        return reports
    coloring = bounded_color(pg, n, part)
    reports.append(verify_proper(coloring, instance=inst))
    reports.append(_palette_report(coloring, n, len(part.classes), inst))
    return reports


def cmd_verify(args) -> int:
    target = args.target
    budget = _budget(args)
    need = {
        "lemma21": ("k",),
        "lemma22": ("k", "p"),
        "lemma24": ("p",),
        "claim26": ("k", "p"),
        "all": ("k", "p"),
    }[target]
    for name in need:
        if getattr(args, name) is None:
            raise ValueError(f"verify {target} needs --{name}")
    reports: list[VerificationReport] = []
    resolved_n = args.n
    if target in ("lemma21", "all"):
        reports += _verify_base(args.k, budget, args.size_cap)
    if target in ("lemma22", "all"):
        reports += _verify_clique_bound(args.k, args.p, budget, args.size_cap)
    if target in ("claim26", "all"):
        if resolved_n is None:
            zg = build_zykov(args.k, size_cap=args.size_cap)
            pg = build_power_graph(zg, args.p)
            resolved_n, _ = max_clique(pg, budget)
        reports += _verify_class_paths(
            args.k, args.p, resolved_n, budget, args.size_cap, strict=(target == "claim26")
        )
    if target in ("lemma24", "all"):
        n24 = resolved_n if resolved_n is not None else min(6, args.p - 1)
        n24 = max(1, min(n24, args.p - 1))
        reports += _verify_partition(args.p, n24)
    config = _make_config(
        args,
        f"verify {target}",
        {"k": args.k, "p": args.p, "n": resolved_n, "size_cap": args.size_cap},
        None,
    )
    return _emit_reports(reports, config, args.out)


# --------------------------------------------------------------------- color


def _load_labeled_input(args):
    """Labeled graph from the input file, or built from --k/--p; returns
    (graph-like, p, instance description, raw input bytes or None)."""
    if args.input is not None:
        with open(args.input, "rb") as fh:
            raw = fh.read()
        graph, labels, meta = read_edgelist(raw.decode())
        p = args.p if args.p is not None else (int(meta["p"]) if "p" in meta else None)
        if p is None:
            raise ValueError("input file carries no modulus; pass --p")
        if labels is None and graph.m > 0:
            raise ValueError("input graph has unlabeled edges; coloring needs residue labels")
        return _FileGraph(graph, labels or {}, p), p, f"file({args.input})", raw
    if args.k is None or args.p is None:
        raise ValueError("need an input file, or --k and --p to build one")
    zg = build_zykov(args.k, size_cap=args.size_cap)
    pg = build_power_graph(zg, args.p)
    return pg, args.p, f"power(k={args.k}, p={args.p})", None


def cmd_color(args) -> int:
    shim, p, inst, raw = _load_labeled_input(args)
    budget = _budget(args)
    n = args.n
    if n is None:
        n, _ = max_clique(shim, budget)
        n = max(1, n)
    if n >= p:
        raise ValueError(f"clique order n={n} must be below p={p}")
    config = _make_config(
        args,
        "color",
        {"k": args.k, "p": p, "n": n, "input": args.input, "size_cap": args.size_cap},
        raw,
    )
    part = residue_partition(p, n)
    inst = f"{inst} n={n}"
    try:
        coloring = bounded_color(shim, n, part)
    except CliqueTooLarge as exc:
        report = VerificationReport(
            check="clique-order",
            instance=inst,
            verdict="fail",
            witness={"claimed": n, "clique": exc.clique},
            wall_time_ms=0.0,
        )
        return _emit_reports([report], config, args.out)
    reports = [
        verify_proper(coloring, instance=inst),
        _palette_report(coloring, n, len(part.classes), inst),
    ]
    ordered = sorted(reports, key=lambda r: (r.check, r.instance))
    for r in ordered:
        print(f"[{r.verdict}] {r.check} on {r.instance} ({r.wall_time_ms:.1f} ms)", file=sys.stderr)
    payload = canonical_json(
        {
            "config": config.to_json_dict(),
            "coloring": coloring.to_json_dict(),
            "reports": [r.to_json_dict() for r in ordered],
        }
    )
    _write_text(args.out, payload)
    return 1 if any(r.verdict == "fail" for r in ordered) else 0


# ---------------------------------------------------------- sample-hereditary


def cmd_sample_hereditary(args) -> int:
    shim, p, inst, raw = _load_labeled_input(args)
    budget = _budget(args)
    config = _make_config(
        args,
        "sample-hereditary",
        {
            "k": args.k,
            "p": p,
            "input": args.input,
            "count": args.count,
            "density": args.density,
            "size_cap": args.size_cap,
        },
        raw,
    )
    rng = random.Random(args.seed)
    g_n = shim.graph.n
    reports: list[VerificationReport] = []
    for i in range(args.count):
        vs = [v for v in range(g_n) if rng.random() < args.density]
        sub = induced_subgraph(shim, vs)
        sample_inst = f"{inst} sample {i:04d} (|V|={len(vs)})"
        started = time.perf_counter()
        try:
            omega, clique = max_clique(sub, budget)
        except BudgetExceeded as exc:
            reports.append(budget_report("clique-bound", sample_inst, exc))
            continue
        reports.append(
            _timed_report(
                "clique-bound",
                sample_inst,
                omega <= p,
                {"omega": omega, "clique": [sub.back(v) for v in clique], "p": p},
                started,
            )
        )
        n_i = max(1, omega)
        if n_i >= p:
            print(f"note: sample {i:04d} has omega={omega} >= p; coloring bound not applicable", file=sys.stderr)
            continue
        part = residue_partition(p, n_i)
        try:
            coloring = bounded_color(sub, n_i, part)
        except CliqueTooLarge as exc:
            reports.append(
                VerificationReport(
                    check="clique-order",
                    instance=sample_inst,
                    verdict="fail",
                    witness={"claimed": n_i, "clique": [sub.back(v) for v in exc.clique]},
                    wall_time_ms=0.0,
                )
            )
            continue
        reports.append(verify_proper(coloring, instance=sample_inst))
        reports.append(_palette_report(coloring, n_i, len(part.classes), sample_inst))
    return _emit_reports(reports, config, args.out)


# ---------------------------------------------------------------------- main


def _parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="chibound",
        description="Build and certify the graphs whose clique number stays small "
        "while their chromatic number grows beyond any polynomial function of it.",
    )
    sub = top.add_subparsers(dest="command", required=True)

    def common(p_, *, seeded=False, formatted=False, takes_input=False):
        p_.add_argument("--k", type=int, default=None, help="construction level of the base graph")
        p_.add_argument("--p", type=int, default=None, help="prime modulus")
        p_.add_argument("--n", type=int, default=None, help="order (clique bound / partition order)")
        p_.add_argument("--budget-ms", type=float, default=None, help="wall-time cap per exact search")
        p_.add_argument(
            "--budget-nodes",
            type=int,
            default=None,
            help=f"search-node cap per exact search (default {DEFAULT_NODE_BUDGET} when no budget given)",
        )
        p_.add_argument("--size-cap", type=int, default=DEFAULT_SIZE_CAP, help="refuse constructions above this vertex count")
        p_.add_argument("--out", default=None, help="output path (stdout when omitted)")
        if seeded:
            p_.add_argument("--seed", type=int, default=0, help="PRNG seed for subset sampling")
            p_.add_argument("--density", type=float, default=0.5, help="per-vertex selection probability")
            p_.add_argument("--count", type=int, default=100, help="number of sampled subgraphs")
        if formatted:
            p_.add_argument("--format", choices=["edgelist", "dimacs", "json"], default="edgelist")
        if takes_input:
            p_.add_argument("input", nargs="?", default=None, help="labeled edge-list file (built from --k/--p when omitted)")

    pc = sub.add_parser("construct", help="build a base graph or its residue power graph")
    pc.add_argument("kind", choices=["zykov", "power"])
    common(pc, formatted=True)
    pc.add_argument("--f", default=None, help="growth table: n^2, 2^n, or a JSON file {order: value}")
    pc.set_defaults(func=cmd_construct)

    pv = sub.add_parser("verify", help="run certification suites and write a report")
    pv.add_argument(
        "target",
        choices=["lemma21", "lemma22", "lemma24", "claim26", "all"],
        help="lemma21: base-graph structure and chromatic number; lemma22: clique bound "
        "of the power graph; lemma24: residue partition zero-sum freeness; claim26: "
        "per-class long-path absence plus the product coloring",
    )
    common(pv)
    pv.set_defaults(func=cmd_verify)

    pcol = sub.add_parser("color", help="run the bounding product coloring on a labeled graph")
    common(pcol, takes_input=True)
    pcol.set_defaults(func=cmd_color)

    ps = sub.add_parser("sample-hereditary", help="check sampled induced subgraphs end to end")
    common(ps, seeded=True, takes_input=True)
    ps.set_defaults(func=cmd_sample_hereditary)
    return top


def main(argv=None) -> int:
    args = _parser().parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OSError, CycleFound, MultiplePaths, SizeBudgetExceeded, BudgetExceeded) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
