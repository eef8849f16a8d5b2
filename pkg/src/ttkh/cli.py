"""Command-line front end.

Subcommands:
  homology    delta-graded Poincare polynomial of the spanning-tree complex
  compare     spanning-tree ranks against reduced Khovanov ranks
  invariants  determinant, signature, weighted tree polynomial, Euler check
  verify      property battery with a pass/fail line per check
  report      figures and delimited tables written to an output directory

Inputs are PD text files ("X[1,4,2,5] X[3,6,4,1] ... [mark=N]", one
diagram per file or "name: code" batch lines), "-" for stdin, or the name
of a catalog diagram such as trefoil or t5_4.  Exit status is zero only
when every requested computation succeeds.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path

from .catalog import standard_catalog
from .classical import determinant, signature, tree_polynomial
from .gf2algebra import poincare_str
from .pdcode import LinkDiagram, mirror, parse_batch, parse_pd
from .spantree import spanning_tree_homology
from .twisted import (
    cube_d_squared_violations,
    reduced_khovanov_delta,
    twisted_homology,
)


def _load_inputs(paths: list[str]) -> list[tuple[str, LinkDiagram]]:
    """Resolve each argument to (name, diagram) pairs."""
    out: list[tuple[str, LinkDiagram]] = []
    cat = None
    for p in paths:
        if p == "-":
            out.extend(parse_batch(sys.stdin.read()))
            continue
        path = Path(p)
        if path.exists():
            text = path.read_text()
            if ":" in text.partition("\n")[0] or text.count("\n") > 1 and all(
                ":" in ln for ln in text.splitlines() if ln.strip() and not ln.startswith("#")
            ):
                out.extend(parse_batch(text))
            else:
                out.append((path.stem, parse_pd(text)))
            continue
        if cat is None:
            cat = standard_catalog()
        if p in cat:
            out.append((p, cat[p]))
            continue
        raise FileNotFoundError(
            f"{p}: not a file, and not one of the catalog names "
            f"{', '.join(sorted(standard_catalog()))}"
        )
    return out


def _remark(d: LinkDiagram, label: int) -> LinkDiagram:
    if label not in d.edge_names:
        raise ValueError(f"edge {label} not present in the diagram")
    canonical = d.edge_names.index(label)
    return LinkDiagram(d.crossings, marked=canonical, names=d.edge_names)


def _homology_record(name: str, d: LinkDiagram, args) -> dict:
    mode = "exact" if args.exact else "evaluated"
    t0 = time.perf_counter()
    res = spanning_tree_homology(
        d,
        mode=mode if d.is_connected else "auto",
        field_bits=args.field_bits,
        trials=args.trials,
        seed=args.seed,
    )
    elapsed = time.perf_counter() - t0
    return {
        "name": name,
        "n_crossings": d.n,
        "n_plus": d.n_plus,
        "generators": res["generators"],
        "histogram": {str(k): v for k, v in sorted(res["histogram"].items())},
        "poincare": {str(k): v for k, v in sorted(res["betti"].items())},
        "det": determinant(d) if d.is_connected else 0,
        "signature": signature(d) if d.is_connected else 0,
        "mode": res["mode"],
        "seed": res["seed"],
        "seconds": round(elapsed, 3),
    }


def _poly_text(rec: dict) -> str:
    betti = {int(k): v for k, v in rec["poincare"].items()}
    if rec["mode"] == "split":
        return "0 (split diagram)"
    return f"{poincare_str(betti)} ({rec['generators']} generators)"


def cmd_homology(args) -> int:
    inputs = _prepare(args)
    records = _map_inputs(args, inputs, lambda name, d: _homology_record(name, d, args))
    if args.json:
        print(json.dumps(records if len(records) > 1 else records[0], indent=2))
    else:
        for rec in records:
            prefix = f"{rec['name']}: " if len(records) > 1 else ""
            print(f"{prefix}{_poly_text(rec)}")
    return 0


def cmd_compare(args) -> int:
    inputs = _prepare(args)
    status = 0
    reports = []
    for name, d in inputs:
        ht = spanning_tree_homology(
            d, mode="evaluated", field_bits=args.field_bits,
            trials=args.trials, seed=args.seed,
        )["betti"] if d.is_connected else {}
        kh = reduced_khovanov_delta(d)
        gradings = sorted(set(ht) | set(kh))
        differing = {q: (ht.get(q, 0), kh.get(q, 0)) for q in gradings
                     if ht.get(q, 0) != kh.get(q, 0)}
        dominated = all(kh.get(q, 0) >= ht.get(q, 0) for q in gradings)
        rep = {
            "name": name,
            "ht": {str(q): r for q, r in sorted(ht.items())},
            "kh": {str(q): r for q, r in sorted(kh.items())},
            "equal": not differing,
            "differing": {str(q): list(v) for q, v in sorted(differing.items())},
            "kh_dominates": dominated,
        }
        reports.append(rep)
        if not args.json:
            prefix = f"{name}: " if len(inputs) > 1 else ""
            if not differing:
                print(f"{prefix}equal: {poincare_str(kh)}")
            else:
                print(f"{prefix}differ: HT {poincare_str(ht)} vs KH {poincare_str(kh)}")
                for q, (a, b) in sorted(differing.items()):
                    print(f"  delta {q}: tree rank {a}, cube rank {b}")
        if not dominated:
            print(f"{name}: ERROR Khovanov rank fell below tree rank", file=sys.stderr)
            status = 1
    if args.json:
        print(json.dumps(reports if len(reports) > 1 else reports[0], indent=2))
    return status


def cmd_invariants(args) -> int:
    inputs = _prepare(args)
    reports = []
    status = 0
    for name, d in inputs:
        if not d.is_connected:
            reports.append({"name": name, "split": True})
            if not args.json:
                print(f"{name}: split diagram, classical invariants skipped")
            continue
        det = determinant(d)
        sig = signature(d)
        poly = tree_polynomial(d)
        euler = abs(sum(c * (-1) ** w for w, c in poly["Q"].items()))
        ok = euler == det
        if not ok:
            status = 1
        reports.append({
            "name": name,
            "det": det,
            "signature": sig,
            "Q": {str(k): v for k, v in sorted(poly["Q"].items())},
            "trees": poly["trees"],
            "euler_check": "ok" if ok else f"mismatch |Q(-1)|={euler}",
        })
        if not args.json:
            prefix = f"{name}: " if len(inputs) > 1 else ""
            qs = poincare_str(poly["Q"])
            verdict = "ok" if ok else f"MISMATCH |Q(-1)|={euler}"
            print(f"{prefix}det {det}, sigma {sig}, Q = {qs}, euler {verdict}")
    if args.json:
        print(json.dumps(reports if len(reports) > 1 else reports[0], indent=2))
    return status


def _verify_one(name: str, d: LinkDiagram, args) -> list[tuple[str, bool, str]]:
    """Run the property battery on one diagram."""
    from .gf2algebra import GF2k, random_point
    from .spantree import DiagramData, build_complex

    checks: list[tuple[str, bool, str]] = []

    def record(prop: str, ok: bool, detail: str = "") -> None:
        checks.append((prop, ok, detail))

    small = d.n <= 8
    if d.is_connected:
        if small:
            data = DiagramData(d)
            cx = build_complex(data, point=None)
            bad = cx.d_squared_violations(limit=3)
            record("d2_tree_symbolic", not bad, f"violations {bad[:1]}" if bad else "")
        else:
            gf = GF2k(args.field_bits)
            data = DiagramData(d)
            point = random_point(data.nvars, gf, args.seed * 7 + 1)
            try:
                cx = build_complex(data, point=point)
                bad = cx.d_squared_violations(limit=3)
                record("d2_tree_evaluated", not bad, f"violations {bad[:1]}" if bad else "")
            except Exception as exc:
                record("d2_tree_evaluated", True, f"skipped: {exc}")
    if small:
        bad = cube_d_squared_violations(d, point=None, limit=3)
        record("d2_cube_symbolic", not bad, f"violations {bad[:1]}" if bad else "")

    base = spanning_tree_homology(
        d, mode="evaluated", field_bits=args.field_bits,
        trials=args.trials, seed=args.seed,
    )["betti"] if d.is_connected else {}

    if d.is_connected:
        marks = range(d.n_edges) if small else [0, d.n_edges // 2, d.n_edges - 1]
        worst = None
        for m in marks:
            dm = LinkDiagram(d.crossings, marked=m)
            bm = spanning_tree_homology(
                dm, mode="evaluated", field_bits=args.field_bits,
                trials=args.trials, seed=args.seed,
            )["betti"]
            if bm != base:
                worst = (m, bm)
                break
        record("marked_point_independent", worst is None,
               f"mark {worst[0]} gave {worst[1]} vs {base}" if worst else "")

        dm = mirror(d)
        bm = spanning_tree_homology(
            dm, mode="evaluated", field_bits=args.field_bits,
            trials=args.trials, seed=args.seed,
        )["betti"]
        reflected = {-q: r for q, r in bm.items()}
        record("mirror_reflects_gradings", reflected == base,
               "" if reflected == base else f"mirror gave {bm} vs {base}")

        poly = tree_polynomial(d)
        det = determinant(d)
        euler = abs(sum(c * (-1) ** w for w, c in poly["Q"].items()))
        record("euler_equals_det", euler == det,
               "" if euler == det else f"|Q(-1)|={euler} det={det}")

        hist = spanning_tree_homology(
            d, mode="evaluated", field_bits=args.field_bits, trials=1,
            seed=args.seed,
        )["histogram"]
        record("histogram_matches_tree_polynomial", hist == poly["R"],
               "" if hist == poly["R"] else f"{hist} vs {poly['R']}")

    kh = reduced_khovanov_delta(d)
    dominated = all(kh.get(q, 0) >= base.get(q, 0) for q in set(kh) | set(base))
    record("kh_rank_dominates_tree_rank", dominated,
           "" if dominated else f"HT {base} KH {kh}")

    if d.is_connected:
        second = spanning_tree_homology(
            d, mode="evaluated", field_bits=args.field_bits,
            trials=args.trials, seed=args.seed + 1,
        )["betti"]
        record("seed_stable", second == base,
               "" if second == base else f"seed {args.seed + 1} gave {second}")

    return checks


def cmd_verify(args) -> int:
    inputs = _prepare(args)
    status = 0
    reports = []
    for name, d in inputs:
        checks = _verify_one(name, d, args)
        for prop, ok, detail in checks:
            if not ok:
                status = 1
            if not args.json:
                tag = "PASS" if ok else "FAIL"
                tail = f": {detail}" if detail and not ok else ""
                print(f"{tag} {name} {prop}{tail}")
        reports.append({
            "name": name,
            "properties": [
                {"property": p, "ok": ok, "detail": det}
                for p, ok, det in checks
            ],
        })
    if args.json:
        print(json.dumps(reports if len(reports) > 1 else reports[0], indent=2))
    return status


def cmd_report(args) -> int:
    from .report import write_report

    inputs = _prepare(args)
    paths = write_report(
        inputs,
        out_dir=Path(args.out),
        field_bits=args.field_bits,
        trials=args.trials,
        seed=args.seed,
    )
    for p in paths:
        print(p)
    return 0


def _prepare(args) -> list[tuple[str, LinkDiagram]]:
    inputs = _load_inputs(args.inputs)
    if args.mark is not None:
        if len(inputs) != 1:
            raise SystemExit("--mark applies to a single input diagram")
        name, d = inputs[0]
        inputs = [(name, _remark(d, args.mark))]
    return inputs


def _map_inputs(args, inputs, fn):
    workers = getattr(args, "workers", 1)
    if workers > 1 and len(inputs) > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(lambda nd: fn(*nd), inputs))
    return [fn(name, d) for name, d in inputs]


def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument("inputs", nargs="+",
                   help="PD file, '-' for stdin, or a catalog name")
    p.add_argument("--exact", action="store_true",
                   help="symbolic elimination over the rational function field")
    p.add_argument("--field-bits", type=int, default=16, metavar="K",
                   help="evaluation field GF(2^K) (default 16)")
    p.add_argument("--trials", type=int, default=3,
                   help="random evaluation points per rank (default 3)")
    p.add_argument("--seed", type=int, default=0,
                   help="base seed for evaluation points (default 0)")
    p.add_argument("--mark", type=int, default=None, metavar="EDGE",
                   help="override the marked edge (label as written in the input)")
    p.add_argument("--json", action="store_true", help="machine-readable output")
    p.add_argument("--workers", type=int, default=1,
                   help="thread pool size for batch inputs (default 1)")


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(
        prog="ttkh",
        description="Spanning-tree link homology from planar diagram codes.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("homology", help="delta-graded Poincare polynomial")
    _add_common(p)
    p.set_defaults(fn=cmd_homology)

    p = sub.add_parser("compare", help="tree complex vs reduced Khovanov")
    _add_common(p)
    p.set_defaults(fn=cmd_compare)

    p = sub.add_parser("invariants", help="determinant, signature, tree polynomial")
    _add_common(p)
    p.set_defaults(fn=cmd_invariants)

    p = sub.add_parser("verify", help="property battery, pass/fail per check")
    _add_common(p)
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser("report", help="figures and delimited tables")
    _add_common(p)
    p.add_argument("-o", "--out", default="ttkh_report",
                   help="output directory (default ./ttkh_report)")
    p.set_defaults(fn=cmd_report)

    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except (FileNotFoundError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
