"""Command-line interface.

Exit codes: 0 all checks pass, 1 a check failed, 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

from . import braid, engine, harness, oracles, rmat, ybe
from .ring import RingError

EX_OK, EX_FAIL, EX_USAGE = 0, 1, 2


def _word_from_args(args, parser):
    if getattr(args, "braid", None):
        try:
            return braid.parse(args.braid)
        except braid.BraidError as exc:
            parser.error(str(exc))
    if getattr(args, "knot", None):
        for rec in harness.load_table():
            if rec.name == args.knot:
                return rec.word
        parser.error(f"knot {args.knot!r} not in table")
    parser.error("need --braid or --knot")


def _cmd_verify(args):
    what = getattr(args, "what", None)
    checks = []
    gauged = rmat.build_trig_gauged()
    free = rmat.build_trig_gauge_free()
    if what is None:
        checks.append(("trig gauged entries == 36", len(gauged) == 36))
        checks.append(("trig gauge-free entries == 36", len(free) == 36))
        for i, count in ((1, 26), (2, 20), (3, 17), (4, 16)):
            checks.append((f"quantum R{i} entries == {count}",
                           len(rmat.quantum_r(i)) == count))
    if what in (None, "qybe"):
        cases = [args.case] if args.case else [1, 2, 3, 4]
        for i in cases:
            checks.append((f"QYBE R{i}",
                           bool(ybe.verify_qybe(rmat.quantum_r(i)))))
    if what in (None, "gauge"):
        checks.append(("gauge properties",
                       bool(ybe.verify_gauge_properties(
                           rmat.GaugeMatrix.standard(), free))))
        checks.append(("gauge conjugation",
                       rmat.apply_gauge(free, rmat.GaugeMatrix.standard())
                       == gauged))
    if what in (None, "tybe"):
        checks.append(("TYBE gauge-free",
                       bool(ybe.verify_tybe_additive(free))))
        checks.append(("TYBE gauged", bool(ybe.verify_tybe_additive(gauged))))
    if what is None:
        for i in (1, 2, 3, 4):
            case = rmat.GaugeCase.standard(i)
            checks.append((f"spectral limit case {i}",
                           rmat.spectral_limit(gauged, case)
                           == rmat.quantum_r(i)))
        checks.append(("spectral limit case 4 at gamma=2/3",
                       rmat.spectral_limit(
                           gauged, rmat.GaugeCase.standard(4, Fraction(2, 3)))
                       == rmat.quantum_r(4)))
        for spec in ((1, "ambient"), (2, "ambient"), (4, "ambient"),
                     (2, "regular"), (3, "regular")):
            checks.append((f"handle case {spec[0]} {spec[1]}",
                           engine.verify_handle(engine.model(*spec))))
    bad = 0
    for name, ok in checks:
        print(f"{'PASS' if ok else 'FAIL'}  {name}")
        bad += not ok
    return EX_FAIL if bad else EX_OK


def _cmd_rmatrix(args, parser):
    if args.regime == "trig":
        op = rmat.build_trig_gauge_free() if args.case == 0 \
            else rmat.build_trig_gauged()
    else:
        if args.case not in (1, 2, 3, 4):
            parser.error("--regime quantum requires --case 1..4")
        op = rmat.quantum_r(args.case)
    if args.format == "json":
        rows = [{"indices": list(k), "entry": str(v)}
                for k, v in op.sorted_items()]
        print(json.dumps(rows, indent=2))
    else:
        print(f"# {len(op)} nonzero components")
        for (a, b, c, d), v in op.sorted_items():
            print(f"({a}{b})<-({c}{d})  {v}")
    return EX_OK


def _cmd_eigen(args):
    R = rmat.quantum_r(args.case)
    claimed = rmat.claimed_eigenvalues(args.case)
    rep = rmat.eigen_check(R, claimed)
    print(f"case {args.case}: distinct eigenvalues {rep.distinct}")
    for val, mult in (rep.multiplicities or {}).items():
        print(f"  {val}  x{mult}")
    deficiency = rmat.eigenvector_deficiency(R)
    print(f"eigenvector count {deficiency} / 16")
    print("PASS" if rep.ok else f"FAIL  {rep.message}")
    return EX_OK if rep.ok else EX_FAIL


def _cmd_invariant(args, parser):
    word = _word_from_args(args, parser)
    mod = engine.model(args.case, args.isotopy)
    inv = engine.tangle_invariant(word, mod)
    matrix = [[str(v) for v in row] for row in inv.matrix]
    if args.format == "json":
        print(json.dumps({"knot": args.knot or str(word), "case": args.case,
                          "isotopy": args.isotopy, "writhe": word.writhe,
                          "matrix": matrix}, indent=2, sort_keys=True))
    else:
        for a in range(4):
            print(f"[{a + 1}][{a + 1}]  {matrix[a][a]}")
        if not inv.is_diagonal():
            print("warning: off-diagonal entries present")
    return EX_OK


def _cmd_oracle(args, parser):
    word = _word_from_args(args, parser)
    fn = oracles.alexander if args.oracle == "alexander" else oracles.jones
    print(fn(word))
    return EX_OK


def _cmd_matveev(args):
    if args.case == 4:
        mod = engine.model(4, "ambient")
    elif args.case in (2, 3):
        mod = engine.model(args.case, "regular")
    else:
        mod = engine.model(1, "ambient")
    res = engine.matveev_test(mod)
    print(f"case {args.case}: "
          + ("distinguishes the pair" if res else "cannot distinguish (trivial)"))
    return EX_OK


def _cmd_suite(args):
    cases = sorted({int(c) for c in args.cases.split(",")})
    table = harness.load_table(args.table) if args.table else None
    report = harness.run_suite(cases, table=table,
                               max_crossings=args.max_crossings,
                               jobs=args.jobs)
    if args.out:
        out = Path(args.out)
        out.mkdir(parents=True, exist_ok=True)
        report.write_csv(out / "suite.csv")
        report.write_json(out / "suite.json")
    for r in report.rows:
        print(f"{r['status']:<14} case {r['case']}  {r['knot']:<7} "
              f"({r['seconds']}s)  {r['unit']}")
    print(f"{report.total} rows, {report.failed} failures")
    return EX_OK if report.ok else EX_FAIL


def build_parser():
    p = argparse.ArgumentParser(prog="gaugeknot")
    sub = p.add_subparsers(dest="cmd", required=True)

    ver = sub.add_parser("verify", help="run symbolic R-matrix checks")
    ver.add_argument("--what", choices=["qybe", "tybe", "gauge"])
    ver.add_argument("--case", type=int, choices=[1, 2, 3, 4])

    rm = sub.add_parser("rmatrix", help="print an R-matrix")
    rm_sub = rm.add_subparsers(dest="rcmd", required=True)
    show = rm_sub.add_parser("show")
    show.add_argument("--regime", default="trig",
                      choices=["trig", "quantum"])
    show.add_argument("--case", type=int, default=0,
                      help="quantum case 1..4; 0 with --regime trig "
                           "selects the gauge-free operator")
    show.add_argument("--format", default="text", choices=["text", "json"])

    eig = sub.add_parser("eigen", help="eigenvalue check at sample points")
    eig.add_argument("--case", type=int, required=True, choices=[1, 2, 3, 4])

    inv = sub.add_parser("invariant", help="evaluate a (1,1)-tangle invariant")
    inv.add_argument("--case", type=int, required=True, choices=[1, 2, 3, 4])
    inv.add_argument("--isotopy", default="regular",
                     choices=["ambient", "regular"])
    inv.add_argument("--braid")
    inv.add_argument("--knot")
    inv.add_argument("--format", default="text", choices=["text", "json"])

    orc = sub.add_parser("oracle", help="classical oracle polynomials")
    orc.add_argument("oracle", choices=["alexander", "jones"])
    orc.add_argument("--braid")
    orc.add_argument("--knot")

    mat = sub.add_parser("matveev", help="distinguishing-pair test")
    mat.add_argument("--case", type=int, required=True, choices=[1, 2, 3, 4])

    st = sub.add_parser("suite", help="run the knot-table suite")
    st.add_argument("--cases", default="2,3,4")
    st.add_argument("--max-crossings", type=int, default=8)
    st.add_argument("--out")
    st.add_argument("--jobs", type=int, default=1)
    st.add_argument("--table")
    return p


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.cmd == "verify":
            return _cmd_verify(args)
        if args.cmd == "rmatrix":
            return _cmd_rmatrix(args, parser)
        if args.cmd == "eigen":
            return _cmd_eigen(args)
        if args.cmd == "invariant":
            return _cmd_invariant(args, parser)
        if args.cmd == "oracle":
            return _cmd_oracle(args, parser)
        if args.cmd == "matveev":
            return _cmd_matveev(args)
        if args.cmd == "suite":
            return _cmd_suite(args)
    except (braid.BraidError, harness.TableError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EX_USAGE
    except (RingError, oracles.OracleError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EX_FAIL
    return EX_USAGE


if __name__ == "__main__":
    sys.exit(main())
