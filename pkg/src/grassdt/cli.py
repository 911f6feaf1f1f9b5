"""Command-line front door.

Subcommands: seed, gvector, dtf, greenseq, mutate, validate (gvectors | dtf)
and serve.  Results go to stdout (JSON with --json), diagnostics to stderr.
Exit codes: 0 success, 1 validation mismatch, 2 usage or size-limit error.

Pluecker indices on the command line are 1-based comma lists ("2,3,5");
grid vertices are "p,q" pairs; mutation words are applied-order comma lists.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from grassdt import dt, grassmann, oracle
from grassdt.poly import Poly
from grassdt.quiver import IceQuiver, QuiverError
from grassdt.tracking import apply_word, initial_tracked, matrix_to_json

USAGE_ERROR = 2
MISMATCH_ERROR = 1


class UsageError(Exception):
    pass


def _parse_int_list(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(p) for p in text.split(",") if p.strip() != "")
    except ValueError as exc:
        raise UsageError(f"expected a comma list of integers, got {text!r}") from exc


def _parse_pair(text: str) -> tuple[int, int]:
    values = _parse_int_list(text)
    if len(values) != 2:
        raise UsageError(f"expected 'p,q', got {text!r}")
    return values[0], values[1]


def _emit(payload, as_json: bool, text_lines) -> None:
    if as_json:
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        for line in text_lines:
            print(line)


def _cmd_seed(args) -> int:
    seed = grassmann.triangular_seed(args.k, args.n)
    payload = {
        "k": args.k,
        "n": args.n,
        "quiver": seed.quiver.to_json_dict(),
        "vertices": [
            {
                "id": vid,
                "vertex": seed.vertex(vid).to_text(),
                "plucker": seed.plucker(vid).to_text(),
                "frozen": vid > seed.num_mutable,
            }
            for vid in range(1, seed.num_vertices + 1)
        ],
    }
    lines = [
        f"triangular seed for Gr({args.k},{args.n}): "
        f"{seed.num_vertices} vertices, {seed.num_mutable} mutable, "
        f"{seed.num_vertices - seed.num_mutable} frozen, "
        f"{len(seed.quiver.arrows)} arrows"
    ]
    for entry in payload["vertices"]:
        flag = "frozen " if entry["frozen"] else "mutable"
        lines.append(
            f"  {entry['id']:>3}  {flag}  grid={entry['vertex']:>7}  [{entry['plucker']}]"
        )
    _emit(payload, args.json, lines)
    return 0


def _cmd_gvector(args) -> int:
    index = grassmann.PluckerIndex(args.k, args.n, _parse_int_list(args.index))
    seed = grassmann.triangular_seed(args.k, args.n)
    vec = grassmann.g_vector_plucker(index)
    support = [
        {
            "id": i + 1,
            "vertex": seed.vertex(i + 1).to_text(),
            "plucker": seed.plucker(i + 1).to_text(),
            "coeff": c,
        }
        for i, c in enumerate(vec)
        if c
    ]
    payload = {
        "k": args.k,
        "n": args.n,
        "index": index.to_text(),
        "gvector": list(vec),
        "support": support,
    }
    terms = [
        ("+" if s["coeff"] > 0 else "-")
        + (f"{abs(s['coeff'])}*" if abs(s["coeff"]) != 1 else "")
        + f"e[{s['plucker']}]"
        for s in support
    ]
    _emit(payload, args.json, [f"g-vector of p_[{index}] = " + " ".join(terms)])
    return 0


def _cmd_dtf(args) -> int:
    k, n = args.k, args.n
    if args.vertex:
        vertices = [_parse_pair(args.vertex)]
    else:
        vertices = [
            grassmann.grid_vertex_xy(vid, k, n)
            for vid in range(1, (k - 1) * (n - k - 1) + 1)
        ]
    by_mutation: dict[int, Poly] = {}
    if args.method in ("mutation", "both"):
        _, dtf = dt.dtf_by_mutation(k, n)
        by_mutation = {i + 1: f for i, f in enumerate(dtf)}
    exit_code = 0
    results = []
    for p, q in vertices:
        vid = grassmann.grid_vertex_id(p, q, k, n)
        entry = {"vertex": [p, q], "box": list(dt.weng_box(k, n, p, q))}
        if args.method in ("closed", "both"):
            closed = dt.dtf_closed_form(k, n, p, q)
            entry["terms"] = len(closed)
            entry["poly"] = closed.to_text()
        if args.method in ("mutation", "both"):
            mutated = by_mutation[vid]
            entry["mutation_terms"] = len(mutated)
            entry["mutation_poly"] = mutated.to_text()
            if args.method == "mutation":
                entry["terms"] = entry["mutation_terms"]
                entry["poly"] = entry["mutation_poly"]
            else:
                entry["match"] = entry["poly"] == entry["mutation_poly"]
                if not entry["match"]:
                    exit_code = MISMATCH_ERROR
        results.append(entry)
    payload = {"k": k, "n": n, "method": args.method, "results": results}
    lines = []
    for entry in results:
        p, q = entry["vertex"]
        lines.append(f"vertex ({p},{q})  box {tuple(entry['box'])}")
        if "poly" in entry:
            lines.append(f"  closed   [{entry['terms']} terms]: {entry['poly']}")
        if "mutation_poly" in entry:
            lines.append(
                f"  mutation [{entry['mutation_terms']} terms]: {entry['mutation_poly']}"
            )
        if "match" in entry:
            lines.append("  MATCH" if entry["match"] else "  MISMATCH")
    _emit(payload, args.json, lines)
    return exit_code


def _cmd_greenseq(args) -> int:
    quiver = grassmann.grid_quiver(args.k, args.n)
    if args.strategy == "sweep":
        word = dt.rectangular_sweep_sequence(args.k, args.n)
    else:
        found = dt.greedy_green_search(quiver, max_steps=args.max_steps)
        if found is None:
            print("no reddening sequence found within the step budget", file=sys.stderr)
            return MISMATCH_ERROR
        word = found
    report = dt.run_reddening(quiver, word, track_fpolys=False)
    payload = {
        "k": args.k,
        "n": args.n,
        "strategy": args.strategy,
        "word": list(report.word),
        "all_steps_green": report.all_steps_green,
        "is_reddening": report.is_reddening,
        "sigma": list(report.sigma) if report.sigma else None,
    }
    lines = [
        f"word ({len(report.word)} steps): {','.join(map(str, report.word))}",
        f"all steps green: {report.all_steps_green}",
        f"reddening: {report.is_reddening}",
        f"sigma: {payload['sigma']}",
    ]
    _emit(payload, args.json, lines)
    return 0 if report.is_reddening else MISMATCH_ERROR


def _cmd_mutate(args) -> int:
    try:
        data = json.loads(Path(args.quiver).read_text())
    except OSError as exc:
        raise UsageError(f"cannot read quiver file: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise UsageError(f"quiver file is not valid JSON: {exc}") from exc
    quiver = IceQuiver.from_json_dict(data)
    word = _parse_int_list(args.word) if args.word else ()
    seed = apply_word(initial_tracked(quiver), word)
    payload = {
        "quiver": seed.quiver.to_json_dict(),
        "history": list(seed.history),
        "colors": list(seed.colors()),
        "c_matrix": matrix_to_json(seed.cmatrix),
        "g_matrix": matrix_to_json(seed.gmatrix),
        "f_polys": [f.to_text() for f in seed.fpolys],
    }
    lines = [
        f"applied word: {','.join(map(str, seed.history)) or '(empty)'}",
        f"colors: {' '.join(seed.colors())}",
        "G columns: " + "; ".join(str(list(c)) for c in seed.gmatrix),
        "C columns: " + "; ".join(str(list(c)) for c in seed.cmatrix),
        "F: " + "; ".join(f.to_text() for f in seed.fpolys),
    ]
    _emit(payload, args.json, lines)
    return 0


def _cmd_validate_gvectors(args) -> int:
    report = oracle.bfs_exchange_graph(args.k, args.n, rng_seed=args.rng_seed)
    mismatched = list(report.mismatched)
    checked = matched = 0
    for index, gvec in sorted(report.gvectors.items(), key=lambda t: t[0].entries):
        checked += 1
        expected = grassmann.g_vector_plucker(index)
        if gvec == expected:
            matched += 1
        else:
            mismatched.append(f"{index}: tracked {gvec} != formula {expected}")
    total = len(grassmann.all_plucker_indices(args.k, args.n))
    if checked != total:
        mismatched.append(f"identified {checked} of {total} Pluecker coordinates")
    payload = {
        "k": args.k,
        "n": args.n,
        "clusters": report.clusters,
        "complete": report.complete,
        "checked": checked,
        "matched": matched,
        "mismatched": mismatched,
    }
    _emit(
        payload,
        args.json,
        [
            f"clusters visited: {report.clusters}",
            f"pluecker coordinates checked: {checked}/{total}, matched: {matched}",
        ]
        + [f"MISMATCH {m}" for m in mismatched],
    )
    return 0 if not mismatched else MISMATCH_ERROR


def _cmd_validate_dtf(args) -> int:
    k, n = args.k, args.n
    _, dtf = dt.dtf_by_mutation(k, n)
    checked = matched = 0
    mismatched = []
    for vid, poly in enumerate(dtf, start=1):
        p, q = grassmann.grid_vertex_xy(vid, k, n)
        closed = dt.dtf_closed_form(k, n, p, q)
        checked += 1
        if closed == poly:
            matched += 1
        else:
            mismatched.append(f"vertex ({p},{q}): mutation and closed form differ")
    payload = {
        "k": k,
        "n": n,
        "checked": checked,
        "matched": matched,
        "mismatched": mismatched,
    }
    _emit(
        payload,
        args.json,
        [f"vertices checked: {checked}, matched: {matched}"]
        + [f"MISMATCH {m}" for m in mismatched],
    )
    return 0 if not mismatched else MISMATCH_ERROR


def _cmd_serve(args) -> int:
    import uvicorn

    from grassdt.service import create_app

    uvicorn.run(create_app(), host=args.host, port=args.port)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="grassdt",
        description="Exact quiver-mutation dynamics for Grassmannian cluster structures.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_kn(p):
        p.add_argument("--k", type=int, required=True)
        p.add_argument("--n", type=int, required=True)
        p.add_argument("--json", action="store_true")

    p_seed = sub.add_parser("seed", help="print the triangular initial seed")
    add_kn(p_seed)
    p_seed.set_defaults(func=_cmd_seed)

    p_gv = sub.add_parser("gvector", help="g-vector of a Pluecker coordinate")
    add_kn(p_gv)
    p_gv.add_argument("--index", required=True, help="comma list, e.g. 2,3,5,6,7,14,15,19")
    p_gv.set_defaults(func=_cmd_gvector)

    p_dtf = sub.add_parser("dtf", help="DT F-polynomials of the mutable grid")
    add_kn(p_dtf)
    p_dtf.add_argument("--vertex", help="grid vertex 'p,q'; defaults to all")
    p_dtf.add_argument(
        "--method", choices=("closed", "mutation", "both"), default="closed"
    )
    p_dtf.set_defaults(func=_cmd_dtf)

    p_green = sub.add_parser("greenseq", help="run a maximal green sequence")
    add_kn(p_green)
    p_green.add_argument("--strategy", choices=("sweep", "greedy"), default="sweep")
    p_green.add_argument("--max-steps", type=int, default=1000)
    p_green.set_defaults(func=_cmd_greenseq)

    p_mut = sub.add_parser("mutate", help="tracked mutation run on a quiver file")
    p_mut.add_argument("--quiver", required=True, help="path to quiver JSON")
    p_mut.add_argument("--word", default="", help="applied-order comma list, e.g. 1,2,3")
    p_mut.add_argument("--json", action="store_true")
    p_mut.set_defaults(func=_cmd_mutate)

    p_val = sub.add_parser("validate", help="cross-validation suites")
    val_sub = p_val.add_subparsers(dest="suite", required=True)
    p_vg = val_sub.add_parser("gvectors", help="exchange-graph search vs closed formula")
    add_kn(p_vg)
    p_vg.add_argument("--rng-seed", type=int, default=oracle.DEFAULT_RNG_SEED)
    p_vg.set_defaults(func=_cmd_validate_gvectors)
    p_vd = val_sub.add_parser("dtf", help="mutation DTF vs closed form")
    add_kn(p_vd)
    p_vd.set_defaults(func=_cmd_validate_dtf)

    p_serve = sub.add_parser("serve", help="start the HTTP session service")
    p_serve.add_argument("--port", type=int, default=8787)
    p_serve.add_argument("--host", default="127.0.0.1")
    p_serve.set_defaults(func=_cmd_serve)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, QuiverError, dt.BoxTooLargeError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR


if __name__ == "__main__":
    sys.exit(main())
