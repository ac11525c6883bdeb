"""The ``mp`` command line tool.

Every FILE argument accepts ``-`` for standard input.  Output bytes are
deterministic; wall times go to standard error only.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
import time
from pathlib import Path

from . import acceptance, formulas
from .analysis import (is_color_closed, is_color_complete, is_reducible, is_separable,
                       v_lower_bound_report)
from .catalog import DEFAULT_MAX_M, DEFAULT_MAX_N, CatalogBoundsError, CatalogQuery, generate
from .coloring import states
from .core import (InvalidMultipole, JunctionSpec, cut_edge, junction, make_cycle, make_minimal,
                   make_path_tree, make_tree)
from .mpole_io import MpoleParseError, parse_mpole, write_mpole

SCHEMA = 1
EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


class InputError(Exception):
    """Bad user input; reported on stderr with exit code 2."""


def _read(path: str) -> tuple[str, str]:
    try:
        text = sys.stdin.read() if path == "-" else Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise InputError(f"{path}: {exc.strerror}") from exc
    return text, hashlib.sha256(text.encode()).hexdigest()


def _load(path: str):
    text, digest = _read(path)
    try:
        return parse_mpole(text), digest
    except MpoleParseError as exc:
        raise InputError(f"{path}: {exc}") from exc


def _emit_json(payload: dict) -> None:
    print(json.dumps({"schema": SCHEMA, **payload}, indent=2, sort_keys=True))


def _parse_range(spec: str) -> range:
    try:
        if ".." in spec:
            lo, hi = spec.split("..", 1)
            return range(int(lo), int(hi) + 1)
        v = int(spec)
    except ValueError as exc:
        raise InputError(f"bad range {spec!r}: expected A or A..B") from exc
    return range(v, v + 1)


def _parse_pairs(spec: str) -> list[tuple[int, int]]:
    out = []
    for part in spec.split(","):
        try:
            a, b = part.split(":")
            out.append((int(a), int(b)))
        except ValueError as exc:
            raise InputError(f"bad pair {part!r}: expected i:j") from exc
    return out


# ---------------------------------------------------------------------------
# commands
# ---------------------------------------------------------------------------

def cmd_states(args) -> int:
    mp, digest = _load(args.file)
    col = states(mp)
    if args.json:
        _emit_json({"command": "states", "input_sha256": digest, **col.to_json()})
    else:
        for line in col.to_lines():
            print(line)
    return EXIT_OK


_SEQUENCES = {
    "sigma": formulas.sigma,
    "rho": formulas.rho,
    "t": formulas.tree_count,
    "c": formulas.cycle_count,
}


def cmd_formula(args) -> int:
    ms = _parse_range(args.m)
    if args.seq == "f":
        if args.n is None:
            raise InputError("formula f needs --n")
        fn = lambda m: formulas.forest_count(args.n, m)  # noqa: E731
    else:
        if args.n is not None:
            raise InputError("--n only applies to f")
        fn = _SEQUENCES[args.seq]
    if args.seq == "f" and len(ms) > 1:
        # f(n, m) is defined only for m of the parity of n
        ms = [m for m in ms if (m - args.n) % 2 == 0]
    values = []
    for m in ms:
        try:
            values.append(fn(m))
        except ValueError as exc:
            raise InputError(str(exc)) from exc
    for v in values:
        print(v)
    return EXIT_OK


def cmd_table(args) -> int:
    if args.max_m < 2:
        raise InputError("--max-m must be at least 2")
    if args.json:
        _emit_json({"command": "table f", "max_m": args.max_m, "rows": formulas.forest_table(args.max_m)})
    else:
        print(formulas.render_forest_table(args.max_m), end="")
    return EXIT_OK


def _parse_shape(spec: str) -> list[int | None]:
    out: list[int | None] = []
    for tok in spec.split(","):
        tok = tok.strip()
        if tok in ("-", "-1", "r"):
            out.append(None)
            continue
        try:
            out.append(int(tok))
        except ValueError as exc:
            raise InputError(f"bad parent {tok!r} in --shape") from exc
    return out


def cmd_gen(args) -> int:
    m = args.m
    if args.shape is not None and args.kind != "tree":
        raise InputError("--shape only applies to trees")
    if args.kind == "cycle":
        if m < 1:
            raise InputError("a cycle needs m >= 1")
        mp = make_cycle(m)
    elif args.kind == "minimal":
        if m < 2:
            raise InputError("minimal m-poles need m >= 2")
        mp = make_minimal(m)
    else:
        if m < 3:
            raise InputError("tree m-poles need m >= 3")
        if args.shape is None:
            mp = make_path_tree(m - 2)
        else:
            parents = _parse_shape(args.shape)
            if len(parents) != m - 2:
                raise InputError(f"a tree {m}-pole has {m - 2} vertices, --shape lists {len(parents)}")
            mp = make_tree(parents)
    print(write_mpole(mp), end="")
    return EXIT_OK


def cmd_join(args) -> int:
    if args.file1 == "-" and args.file2 == "-":
        raise InputError("only one FILE may be standard input")
    a, _ = _load(args.file1)
    b, _ = _load(args.file2)
    print(write_mpole(junction(a, b, JunctionSpec(tuple(_parse_pairs(args.pairs))))), end="")
    return EXIT_OK


def cmd_cut(args) -> int:
    mp, _ = _load(args.file)
    (u, v), = _parse_pairs(args.edge)
    print(write_mpole(cut_edge(mp, (u, v))), end="")
    return EXIT_OK


def cmd_catalog(args) -> int:
    n_hi = args.n if args.n_max is None else args.n_max
    if n_hi < args.n:
        raise InputError("--n-max must be at least --n")
    queries = [CatalogQuery(args.m, n, args.connected, args.colorable,
                            max_m=max(DEFAULT_MAX_M, args.m), max_n=max(DEFAULT_MAX_N, n_hi))
               for n in range(args.n, n_hi + 1) if (n - args.m) % 2 == 0]
    if not queries:
        raise InputError("no n in the range has the parity of m")
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    counts = {}
    files = []
    for q in queries:
        entries = generate(q)
        counts[str(q.n)] = len(entries)
        for e in entries:
            name = f"{e.digest}.mpole"
            (out / name).write_text(write_mpole(e.multipole), encoding="utf-8")
            files.append({"file": name, "n": q.n, "states": len(e.state_set)})
    index = {"schema": SCHEMA, "m": args.m, "n_range": [args.n, n_hi],
             "connected_only": args.connected, "colorable_only": args.colorable,
             "counts": counts, "total": len(files), "entries": files}
    (out / "index.json").write_text(json.dumps(index, indent=2, sort_keys=True) + "\n", encoding="utf-8")
    for n, c in counts.items():
        print(f"n={n}: {c}")
    return EXIT_OK


def cmd_check(args) -> int:
    mp, digest = _load(args.file)
    bound = DEFAULT_MAX_N if args.bound is None else args.bound
    if args.kind == "complete":
        verdict = is_color_complete(mp)
    elif args.kind == "closed":
        verdict = is_color_closed(mp, bound)
    else:
        need = mp.n - 2 if args.kind == "reducible" else mp.n
        if need > bound:
            raise InputError(f"{args.kind} search needs catalog n <= {need}, above --bound {bound}")
        if mp.m > DEFAULT_MAX_M:
            raise InputError(f"m={mp.m} exceeds the catalog bound m <= {DEFAULT_MAX_M}")
        verdict = is_reducible(mp) if args.kind == "reducible" else is_separable(mp)
    if args.json:
        _emit_json({"command": f"check {args.kind}", "input_sha256": digest,
                    "catalog_bounds": {"max_m": max(DEFAULT_MAX_M, mp.m), "max_n": bound},
                    **verdict.to_json()})
    else:
        print(verdict.label)
        if verdict.note:
            print(f"note: {verdict.note}")
        for key, value in sorted(verdict.bound_meta.items()):
            print(f"bound {key}: {value}")
        w = verdict.witness
        if w is not None:
            if w.state is not None:
                print("missing state: " + "".join(map(str, w.state)))
            if w.permutation is not None:
                print("permutation: " + " ".join(map(str, w.permutation)))
            if w.multipole is not None:
                print("witness:")
                print(write_mpole(w.multipole), end="")
    return EXIT_OK if verdict.holds else EXIT_FAIL


def cmd_report_v(args) -> int:
    if not 2 <= args.max_m <= DEFAULT_MAX_M:
        raise InputError(f"--max-m must be between 2 and {DEFAULT_MAX_M}")
    report = v_lower_bound_report(args.max_m)
    if args.json:
        _emit_json({"command": "report-v", "max_m": args.max_m, **report})
    else:
        for row in report["rows"]:
            print(" ".join(f"{k}={row[k]}" for k in row))
        print("consistent" if report["ok"] else "INCONSISTENT")
    return EXIT_OK if report["ok"] else EXIT_FAIL


def cmd_verify_all(args) -> int:
    if args.workers < 1:
        raise InputError("--workers must be positive")
    start = time.perf_counter()
    results = acceptance.run_all(args.workers)
    if args.json:
        _emit_json({"command": "verify-all",
                    "criteria": [{"number": r.number, "title": r.title, "passed": r.passed,
                                  "detail": r.detail} for r in results]})
    else:
        for r in results:
            print(r.line())
        passed = sum(r.passed for r in results)
        print(f"{passed}/{len(results)} criteria passed")
    print(f"wall time {time.perf_counter() - start:.1f}s", file=sys.stderr)
    return EXIT_OK if all(r.passed for r in results) else EXIT_FAIL


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="mp", description="Cubic multipoles and their Tait-coloring states.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("states", help="print the canonical state set of a multipole")
    s.add_argument("file")
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_states)

    s = sub.add_parser("formula", help="evaluate a counting formula")
    s.add_argument("seq", choices=["sigma", "rho", "t", "c", "f"])
    s.add_argument("--m", required=True, help="A or A..B")
    s.add_argument("--n", type=int, help="vertex count for f")
    s.set_defaults(func=cmd_formula)

    s = sub.add_parser("table", help="print the forest triangle f(n, m)")
    s.add_argument("which", choices=["f"])
    s.add_argument("--max-m", type=int, required=True)
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_table)

    s = sub.add_parser("gen", help="write a standard multipole in .mpole format")
    s.add_argument("kind", choices=["tree", "cycle", "minimal"])
    s.add_argument("m", type=int)
    s.add_argument("--shape", help="tree parent list with the root as 'r', e.g. r,0,0,1")
    s.set_defaults(func=cmd_gen)

    s = sub.add_parser("join", help="junction of two multipoles")
    s.add_argument("file1")
    s.add_argument("file2")
    s.add_argument("--pairs", required=True, help="i:j[,i:j...] semiedge i of FILE1 to j of FILE2")
    s.set_defaults(func=cmd_join)

    s = sub.add_parser("cut", help="cut an edge into two semiedges")
    s.add_argument("file")
    s.add_argument("--edge", required=True, help="u:v")
    s.set_defaults(func=cmd_cut)

    s = sub.add_parser(
        "catalog", help="write every m-pole up to isomorphism",
        description="Loops and components without semiedges are always excluded.")
    s.add_argument("--m", type=int, required=True)
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--n-max", type=int, help="also include every n up to this bound")
    s.add_argument("--connected", action="store_true")
    s.add_argument("--colorable", action="store_true")
    s.add_argument("--out", required=True)
    s.set_defaults(func=cmd_catalog)

    s = sub.add_parser("check", help="decide a coloring property; exit 0 holds, 1 fails, 2 bad input")
    s.add_argument("kind", choices=["complete", "closed", "reducible", "separable"])
    s.add_argument("file")
    s.add_argument("--bound", type=int, help=f"catalog vertex bound (default {DEFAULT_MAX_N})")
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_check)

    s = sub.add_parser("report-v", help="v(m) lower bounds from tree and cycle irreducibility")
    s.add_argument("--max-m", type=int, required=True)
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_report_v)

    s = sub.add_parser("verify-all", help="run the acceptance criteria")
    s.add_argument("--workers", type=int, default=1)
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_verify_all)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (InputError, InvalidMultipole, CatalogBoundsError, ValueError) as exc:
        print(f"mp: error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
