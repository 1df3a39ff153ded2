"""Command-line front end with deterministic JSON reports.

Subcommands: kappa | wdim | verify | export-lp | gen. Exit codes:
0 ok, 1 verification failed, 2 input error, 3 infeasible threshold.
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys
import time

from .closedform import formula_basis
from .errors import (
    FormulaNotCovered,
    KaboveKappa,
    KaboveKappaPrime,
    ParameterOutOfRange,
    WeakDimError,
)
from .families import generate, parse_family
from .graph import (
    Graph,
    find_twins,
    format_edgelist,
    load_edgelist,
    parse_vertex_set,
)
from .resolve import compute_kappa
from .solver import (
    DEFAULT_SIZE_CAP,
    Variant,
    certificate_for,
    solve_bnb,
    solve_bruteforce,
    variant_kappa,
    verify_set,
    write_lp,
)

EXIT_OK = 0
EXIT_VERIFY_FAIL = 1
EXIT_INPUT = 2
EXIT_INFEASIBLE = 3

_K_RANGE = re.compile(r"^(\d+)(?:\.\.(\d+))?$")


def _load_graph(args) -> tuple[Graph, dict]:
    if getattr(args, "family", None):
        spec = parse_family(args.family)
        g = generate(spec)
        block = {"kind": "family", "source": spec.label()}
    else:
        g = load_edgelist(args.file)
        block = {"kind": "file", "source": args.file}
    block["n"] = g.n
    block["m"] = g.edge_count
    return g, block


def _parse_k_spec(text: str) -> tuple[int, int, bool]:
    m = _K_RANGE.match(text.strip())
    if not m:
        raise ParameterOutOfRange(f"bad k specification {text!r}; use K or A..B")
    lo = int(m.group(1))
    hi = int(m.group(2)) if m.group(2) else lo
    if lo < 1 or hi < lo:
        raise ParameterOutOfRange(f"bad k range {text!r}")
    return lo, hi, m.group(2) is not None


def _item_json(item):
    return list(item) if isinstance(item, tuple) else item


def _emit(input_block, operation, results, warnings, stats) -> None:
    report = {
        "input": input_block,
        "operation": operation,
        "results": results,
        "warnings": warnings,
        "stats": stats,
    }
    print(json.dumps(report, indent=2))


def _workers(args) -> int:
    if args.workers is not None:
        return max(1, args.workers)
    env = os.environ.get("WKDIM_WORKERS", "")
    return max(1, int(env)) if env.isdigit() else 1


def cmd_kappa(args) -> int:
    started = time.perf_counter()
    g, input_block = _load_graph(args)
    report = compute_kappa(g, workers=_workers(args))
    true_pairs, false_pairs = find_twins(g)
    row = {
        "kappa": report.kappa,
        "kappa_prime": report.kappa_prime,
        "witness_pair": list(report.witness_pair),
        "classification": report.classification.value,
        "evidence": list(report.evidence) if report.evidence else None,
        "provenance": "computed",
    }
    stats = {
        "true_twin_pairs": len(true_pairs),
        "false_twin_pairs": len(false_pairs),
        "workers": _workers(args),
    }
    if args.timing:
        stats["elapsed_ms"] = round((time.perf_counter() - started) * 1000, 1)
    _emit(input_block, "kappa", [row], [], stats)
    return EXIT_OK


def _solve_one(g: Graph, variant: Variant, k: int, engine: str, size_cap: int):
    """Returns (provenance, value, basis, solver_stats)."""
    if engine == "formula":
        if variant != Variant.VERTEX:
            raise FormulaNotCovered("closed forms exist for the vertex variant only")
        basis = formula_basis(g, k)
        return "formula", len(basis), basis, {}
    if engine == "brute":
        res = solve_bruteforce(g, variant, k, size_cap=size_cap)
        return "brute", res.value, res.basis, dict(res.stats)
    if engine == "bnb":
        res = solve_bnb(g, variant, k)
        return "bnb", res.value, res.basis, dict(res.stats)
    # auto: prefer the closed form when a family is attached, else bnb
    if variant == Variant.VERTEX and g.family is not None:
        try:
            basis = formula_basis(g, k)
            return "formula", len(basis), basis, {}
        except FormulaNotCovered:
            pass
    res = solve_bnb(g, variant, k)
    return "bnb", res.value, res.basis, dict(res.stats)


def cmd_wdim(args) -> int:
    started = time.perf_counter()
    g, input_block = _load_graph(args)
    variant = Variant(args.variant)
    lo, hi, is_range = _parse_k_spec(args.k)
    warnings = []
    kv, witness = variant_kappa(g, variant)
    if variant != Variant.VERTEX:
        warnings.append(
            "kappa for the edge/mixed variants extends the vertex-pair "
            "definition by analogy (minimum item-pair difference total)"
        )
    if kv is not None and hi > kv:
        if not is_range or lo > kv:
            raise KaboveKappa(hi if not is_range else lo, kv, witness)
        warnings.append(f"k range clipped at kappa={kv} for variant={variant.value}")
        hi = kv
    rows = []
    nodes = 0
    subsets = 0
    for k in range(lo, hi + 1):
        provenance, value, basis, solver_stats = _solve_one(
            g, variant, k, args.engine, args.size_cap
        )
        check = verify_set(g, variant, basis, k)
        if not check.ok:
            raise AssertionError(
                f"internal error: {provenance} basis failed verification at k={k}"
            )
        nodes += solver_stats.get("nodes", 0)
        subsets += solver_stats.get("subsets", 0)
        cert = certificate_for(g, variant, basis)
        rows.append({
            "k": k,
            "variant": variant.value,
            "value": value,
            "basis": list(basis),
            "certificate": None
            if cert is None
            else {"a": _item_json(cert.a), "b": _item_json(cert.b), "delta": cert.delta},
            "provenance": provenance,
        })
    stats = {"engine": args.engine, "workers": _workers(args)}
    if kv is not None:
        stats["variant_kappa"] = kv
    if nodes:
        stats["bnb_nodes"] = nodes
    if subsets:
        stats["brute_subsets"] = subsets
    if args.timing:
        stats["elapsed_ms"] = round((time.perf_counter() - started) * 1000, 1)
    _emit(input_block, "wdim", rows, warnings, stats)
    return EXIT_OK


def cmd_verify(args) -> int:
    started = time.perf_counter()
    g, input_block = _load_graph(args)
    variant = Variant(args.variant)
    with open(args.set_file, "r", encoding="utf-8") as fh:
        S = parse_vertex_set(fh.read(), g.n)
    res = verify_set(g, variant, S, args.k)
    row = {
        "ok": res.ok,
        "k": args.k,
        "variant": variant.value,
        "set": list(S),
        "failing": None
        if res.ok
        else {
            "a": _item_json(res.witness[0]),
            "b": _item_json(res.witness[1]),
            "delta": res.value,
        },
    }
    stats = {}
    if args.timing:
        stats["elapsed_ms"] = round((time.perf_counter() - started) * 1000, 1)
    _emit(input_block, "verify", [row], [], stats)
    return EXIT_OK if res.ok else EXIT_VERIFY_FAIL


def cmd_export_lp(args) -> int:
    g, input_block = _load_graph(args)
    variant = Variant(args.variant)
    text = write_lp(g, variant, args.k)
    if args.out == "-":
        sys.stdout.write(text)
        return EXIT_OK
    with open(args.out, "w", encoding="utf-8") as fh:
        fh.write(text)
    n_items = {
        Variant.VERTEX: g.n,
        Variant.EDGE: g.edge_count,
        Variant.MIXED: g.n + g.edge_count,
    }[variant]
    row = {
        "path": args.out,
        "binaries": g.n,
        "rows": n_items * (n_items - 1) // 2,
        "k": args.k,
        "variant": variant.value,
    }
    _emit(input_block, "export-lp", [row], [], {})
    return EXIT_OK


def cmd_gen(args) -> int:
    spec = parse_family(args.family)
    g = generate(spec)
    text = format_edgelist(g, header_comment=spec.label())
    if args.out == "-":
        sys.stdout.write(text)
    else:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
        _emit(
            {"kind": "family", "source": spec.label(), "n": g.n, "m": g.edge_count},
            "gen",
            [{"path": args.out}],
            [],
            {},
        )
    return EXIT_OK


def _add_input_options(sp) -> None:
    grp = sp.add_mutually_exclusive_group(required=True)
    grp.add_argument("--family", help="family string, e.g. path:9 or grid:6x4")
    grp.add_argument("--file", help="edge-list file ('n m' header, then 'u v' lines)")


def _add_common(sp) -> None:
    sp.add_argument(
        "--workers",
        type=int,
        default=None,
        help="worker threads for the pair scan (default: WKDIM_WORKERS or 1)",
    )
    sp.add_argument(
        "--timing", action="store_true", help="include elapsed_ms in stats"
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="weakdim",
        description="Exact weak k-metric dimension computations on graphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("kappa", help="largest feasible k, with classification")
    _add_input_options(p)
    _add_common(p)
    p.set_defaults(func=cmd_kappa)

    p = sub.add_parser("wdim", help="weak k-metric dimension and a basis")
    _add_input_options(p)
    _add_common(p)
    p.add_argument("--k", required=True, help="threshold K or inclusive range A..B")
    p.add_argument(
        "--variant", choices=[v.value for v in Variant], default="vertex"
    )
    p.add_argument(
        "--engine", choices=["auto", "formula", "brute", "bnb"], default="auto"
    )
    p.add_argument(
        "--size-cap",
        type=int,
        default=DEFAULT_SIZE_CAP,
        help="max n for the brute engine",
    )
    p.set_defaults(func=cmd_wdim)

    p = sub.add_parser("verify", help="check a vertex set at threshold k")
    _add_input_options(p)
    _add_common(p)
    p.add_argument("--set-file", required=True, help="whitespace-separated vertex ids")
    p.add_argument("--k", type=int, required=True)
    p.add_argument(
        "--variant", choices=[v.value for v in Variant], default="vertex"
    )
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("export-lp", help="write the CPLEX-LP covering model")
    _add_input_options(p)
    p.add_argument("--k", type=int, required=True)
    p.add_argument(
        "--variant", choices=[v.value for v in Variant], default="vertex"
    )
    p.add_argument("--out", required=True, help="output path, or - for stdout")
    p.set_defaults(func=cmd_export_lp)

    p = sub.add_parser("gen", help="generate a family instance as edge-list text")
    p.add_argument("--family", required=True)
    p.add_argument("--out", default="-", help="output path, or - for stdout")
    p.set_defaults(func=cmd_gen)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (KaboveKappa, KaboveKappaPrime) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INFEASIBLE
    except WeakDimError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
