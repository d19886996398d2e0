"""Command-line interface: construct, verify, search, lift, report.

Exit codes: 0 success/verified, 1 verification mismatch, 2 usage error.
"""

from __future__ import annotations

import argparse
import os
import sys

from ._version import __version__
from . import r1
from . import records as recmod
from . import tables
from .constructions import FirstRows, check_selfdual_blocks, gen_matrix, gen_matrix_r1, omega_from_first_rows
from .search import (
    CodeRecord,
    LiftConfig,
    SearchConfig,
    fingerprint,
    lift_code,
    search_binary,
    verify_record,
)

_ENV_SHARDS = "COMPOLIFT_SHARDS"


def _default_shards() -> int:
    try:
        return max(1, int(os.environ.get(_ENV_SHARDS, "1")))
    except ValueError:
        return 1


def _first_rows_from_args(parser: argparse.ArgumentParser, args) -> FirstRows:
    try:
        return FirstRows.from_tokens(
            args.matrix, args.rB, args.rC, args.rD, ring=args.ring
        )
    except ValueError as exc:
        parser.error(str(exc))


def _cmd_construct(parser, args) -> int:
    fr = _first_rows_from_args(parser, args)
    om = omega_from_first_rows(fr)
    print(f"# compolift {__version__} construct {fr.construction} ring={fr.ring}")
    if fr.ring == "F2":
        print(gen_matrix(om).to_text())
    else:
        for row in gen_matrix_r1(om).to_codes():
            print(",".join(r1.TOKENS[c] for c in row))
    report = check_selfdual_blocks(fr)
    for name, ok in report.equations:
        print(f"{'ok  ' if ok else 'FAIL'} {name}")
    print("self-dual" if report.ok else "not self-dual")
    if args.out and report.ok:
        rec = _analyzed_record(fr)
        recmod.write_records(args.out, [rec], {"command": "construct"})
        print(f"record {rec.id} -> {args.out}")
    return 0 if report.ok else 1


def _analyzed_record(fr: FirstRows) -> CodeRecord:
    from .analysis import analyze_code
    from .constructions import omega_f2
    from .search import gray_standard_generator

    if fr.ring == "F2":
        params = analyze_code(gen_matrix(omega_f2(fr.construction, fr.alphas())))
    else:
        params = analyze_code(gray_standard_generator(omega_from_first_rows(fr)))
    return CodeRecord(
        id=f"{fr.construction}-constructed",
        construction=fr.construction,
        ring=fr.ring,
        rb=fr.rb,
        rc=fr.rc,
        rd=fr.rd,
        params=params,
        tool_version=__version__,
    )


def _cmd_verify(parser, args) -> int:
    rf = _read_records(parser, args.file)
    if not rf.records:
        print("warning: no records to verify")
        return 0
    by_id = {rec.id: rec for rec in rf.records}
    bad = 0
    for rec in rf.records:
        problems = verify_record(rec, by_id)
        if problems:
            bad += 1
            for p in problems:
                print(f"MISMATCH {p}")
        else:
            print(f"ok {rec.id}")
    print(f"# compolift {__version__}: {len(rf.records) - bad}/{len(rf.records)} verified")
    return 0 if bad == 0 else 1


def _read_records(parser, path):
    try:
        return recmod.read_records(path)
    except FileNotFoundError:
        parser.error(f"no such file: {path}")
    except ValueError as exc:
        parser.error(str(exc))


def _cmd_search(parser, args) -> int:
    cfg = SearchConfig(
        construction=args.matrix,
        target_d=args.target_d,
        budget=args.budget,
        seed=args.seed,
        shards=args.shards,
    )
    found = search_binary(cfg)
    meta = {
        "command": "search",
        "construction": args.matrix,
        "seed": args.seed,
        "budget": args.budget,
        "target_d": args.target_d,
    }
    recmod.write_records(args.out, found, meta)
    print(f"# compolift {__version__} search seed={args.seed} budget={args.budget}")
    print(f"{len(found)} record(s) -> {args.out}")
    return 0


def _cmd_lift(parser, args) -> int:
    rf = _read_records(parser, args.infile)
    bases = [r for r in rf.records if r.ring == "F2"]
    if args.id is not None:
        bases = [r for r in bases if r.id == args.id]
        if not bases:
            parser.error(f"no binary record with id {args.id!r} in {args.infile}")
    if not bases:
        parser.error(f"no binary records in {args.infile}")
    out: list[CodeRecord] = []
    for base in bases:
        cfg = LiftConfig(
            base=base,
            mode=args.mode,
            sample_count=args.count,
            seed=args.seed,
            shards=args.shards,
        )
        out.extend(lift_code(cfg))
    meta = {"command": "lift", "mode": args.mode, "seed": args.seed, "count": args.count}
    recmod.write_records(args.out, out, meta)
    print(f"# compolift {__version__} lift mode={args.mode} seed={args.seed}")
    print(f"{len(out)} record(s) -> {args.out}")
    return 0


def _cmd_report(parser, args) -> int:
    rf = _read_records(parser, args.infile)
    recs = rf.records
    if args.min_d is not None:
        recs = [r for r in recs if r.params is not None and r.params.d >= args.min_d]
    if args.dedup:
        seen = set()
        kept = []
        for rec in recs:
            key = fingerprint(rec) if rec.params else rec.id
            if key in seen:
                continue
            seen.add(key)
            kept.append(rec)
        recs = kept
    if args.format == "csv":
        sys.stdout.write(recmod.to_csv(recs))
    else:
        print(f"# compolift {__version__} report ({len(recs)} record(s))")
        for key, value in sorted(rf.meta.items()):
            print(f"# {key}: {value}")
        sys.stdout.write(recmod.to_table(recs))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="compolift",
        description="Self-dual codes from composite group-ring matrices and their F2+uF2 lifts.",
    )
    parser.add_argument("--version", action="version", version=f"compolift {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", help="build [I | omega] from first rows and check self-duality")
    p.add_argument("--matrix", required=True, choices=("omega1", "omega2", "omega3"))
    p.add_argument("--rB", required=True, help="comma-separated tokens (0,1,u,u+1)")
    p.add_argument("--rC", required=True)
    p.add_argument("--rD", default=None)
    p.add_argument("--ring", choices=("F2", "R1"), default=None, help="default: inferred from tokens")
    p.add_argument("--out", default=None, help="also write the analyzed record here")

    p = sub.add_parser("verify", help="re-derive and check every record in a file")
    p.add_argument("file")

    p = sub.add_parser("search", help="seeded random search for self-dual [36,18] codes")
    p.add_argument("--matrix", required=True, choices=("omega1", "omega2", "omega3"))
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--budget", type=int, default=100_000)
    p.add_argument("--target-d", dest="target_d", type=int, default=6, choices=(6, 8))
    p.add_argument("--shards", type=int, default=_default_shards())
    p.add_argument("--out", required=True)

    p = sub.add_parser("lift", help="lift binary records over F2+uF2 and certify Gray images")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--id", default=None, help="lift only this record id")
    p.add_argument("--mode", choices=("exhaustive", "sampled"), default="exhaustive")
    p.add_argument("--count", type=int, default=1024, help="candidates in sampled mode")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--shards", type=int, default=_default_shards())
    p.add_argument("--out", required=True)

    p = sub.add_parser("report", help="render records as an aligned table or CSV")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--dedup", action="store_true", help="keep one record per (n,k,d,family,gamma,beta)")
    p.add_argument("--min-d", dest="min_d", type=int, default=None)
    p.add_argument("--format", choices=("text", "csv"), default="text")

    p = sub.add_parser("fixtures", help="write the bundled published-code fixtures")
    p.add_argument("--out", required=True)

    return parser


def _cmd_fixtures(parser, args) -> int:
    recs = tables.all_records()
    recmod.write_records(args.out, recs, {"command": "fixtures"})
    print(f"{len(recs)} fixture record(s) -> {args.out}")
    return 0


_HANDLERS = {
    "construct": _cmd_construct,
    "verify": _cmd_verify,
    "search": _cmd_search,
    "lift": _cmd_lift,
    "report": _cmd_report,
    "fixtures": _cmd_fixtures,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    return _HANDLERS[args.command](parser, args)


if __name__ == "__main__":
    raise SystemExit(main())
