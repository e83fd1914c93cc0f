"""Command line front end: ``inv4perm <command> [options]``.

Exit status: 0 on success, 1 when a table cell or verification check fails,
2 on usage or input errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import construct, spectra, tables, verify
from .gf2n import FieldError, FieldSpec, get_field
from .vfunc import VFunc, VFuncError, algebraic_degree

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

VERIFY_CHECKS = ("lemma23", "lemma24", "lemma25", "lemma34", "prop35",
                 "thm36", "prop41", "lemma48")


class UsageError(Exception):
    pass


def _field(args, construction=True):
    if args.field_config:
        fld = FieldSpec.from_config(Path(args.field_config).read_text())
        if args.n is not None and args.n != fld.n:
            raise UsageError(f"--n {args.n} disagrees with field config n={fld.n}")
    elif args.n is None:
        raise UsageError("--n is required")
    else:
        fld = get_field(args.n)
    lo = 6 if construction else 2
    if construction and fld.n % 2:
        raise UsageError(f"n must be even, got {fld.n}")
    if not lo <= fld.n <= 20:
        raise UsageError(f"n must lie in [{lo}, 20], got {fld.n}")
    return fld


def _emit(args, text):
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)


def _records_out(args, records, text_lines):
    if args.format == "json":
        return json.dumps(records, separators=(",", ":")) + "\n"
    if args.format == "csv":
        return spectra.records_to_csv(records)
    return "\n".join(text_lines) + "\n"


def _text_record(rec):
    ds = rec["diff_spectrum"]
    if rec["uniformity"] <= 4:
        shown = "[" + ",".join(str(ds.get(k, 0)) for k in ("0", "2", "4")) + "]"
    else:
        shown = json.dumps(ds)
    parts = [f"{rec['name'] or 'function'} (n={rec['n']}): NL={rec['nl']}",
             f"spectrum={shown}", f"uniformity={rec['uniformity']}"]
    if "degree" in rec:
        parts.append(f"degree={rec['degree']}")
    return "  ".join(parts)


# -- commands ----------------------------------------------------------------------

def cmd_analyze(args):
    sources = [s for s in (args.named, args.v_file, args.table_file) if s]
    if len(sources) != 1:
        raise UsageError("give exactly one of --named, --v-file, --table-file")
    if args.table_file:
        text = Path(args.table_file).read_text()
        f = VFunc.from_json(text) if text.lstrip().startswith("{") else VFunc.from_text(text)
        if args.n is not None and args.n != f.n:
            raise UsageError(f"--n {args.n} disagrees with table file n={f.n}")
        if not 2 <= f.n <= 20:
            raise UsageError(f"n must lie in [2, 20], got {f.n}")
        name = f.name or Path(args.table_file).stem
    elif args.named:
        fld = _field(args)
        f = construct.build_named(fld, args.named)
        name = args.named
    else:
        fld = _field(args) if (args.n is not None or args.field_config) else None
        spec = construct.parse_v_file(Path(args.v_file).read_text(), fld)
        f = construct.build_G(spec)
        name = Path(args.v_file).stem
    rec = spectra.analysis_record(f, name, with_ews=args.ews, workers=args.workers,
                                  degree=algebraic_degree(f))
    _emit(args, _records_out(args, [rec], [_text_record(rec)]))
    return EXIT_OK


def cmd_reproduce_table(args):
    kw = {}
    if args.max_n is not None:
        kw["max_n"] = args.max_n
    if args.which != 1:
        kw["workers"] = args.workers
    res = tables.reproduce(args.which, **kw)
    if args.format == "json":
        out = json.dumps(res.as_dict(), separators=(",", ":")) + "\n"
    elif args.format == "csv":
        out = res.to_csv()
    else:
        out = res.to_text()
        if "lower_bounds" in res.extra:
            out += "lower bounds:\n"
            for name, by_n in res.extra["lower_bounds"].items():
                cells = "  ".join(f"{k}: {v['bound']}{'' if v['holds'] else ' (VIOLATED)'}"
                                  for k, v in by_n.items())
                out += f"  {name:<4} {cells}\n"
    _emit(args, out)
    return EXIT_OK if res.ok else EXIT_FAIL


def _run_check(name, fld, seed):
    if name == "lemma23":
        return verify.check_lemma23(fld, seed=seed)
    if name == "lemma24":
        return verify.check_lemma24(fld)
    if name == "lemma25":
        return verify.check_lemma25(fld)
    if name == "lemma34":
        return verify.check_lemma34(fld)
    if name == "prop35":
        return verify.check_prop35_all(fld, seed=seed)
    if name == "thm36":
        return verify.check_theorem36_random(fld, seed=seed)
    if name == "prop41":
        rep = verify.check_prop41(fld)
        fx = tables.load_fixture(1)["exponents"].get(str(fld.n))
        if fx is not None:
            rep.details["table1_exponent"] = fx
            if rep.details["pairs"] != fx:
                rep.fail(pairs=rep.details["pairs"], table1_exponent=fx)
        return rep
    if name == "lemma48":
        return verify.check_lemma48(fld, seed=seed)
    raise UsageError(f"unknown check {name!r}")


def cmd_verify(args):
    fld = _field(args)
    names = VERIFY_CHECKS if args.which == "all" else (args.which,)
    reports = [_run_check(name, fld, args.seed) for name in names]
    if args.format == "json":
        out = json.dumps([r.as_dict() for r in reports], separators=(",", ":")) + "\n"
    elif args.format == "csv":
        out = "check,n,passed,checked\n" + "".join(
            f"{r.name},{r.n},{int(r.passed)},{r.checked}\n" for r in reports)
    else:
        out = "".join(
            f"{r.name:<8} n={r.n}  {'PASS' if r.passed else 'FAIL'}  checked={r.checked}"
            f"  {json.dumps(r.details, sort_keys=True)}\n" for r in reports)
    _emit(args, out)
    return EXIT_OK if all(r.passed for r in reports) else EXIT_FAIL


def cmd_sample(args):
    fld = _field(args)
    npairs = len(construct.compute_VM(fld))
    if not 0 <= args.pairs <= npairs:
        raise UsageError(f"--pairs must be in [0, {npairs}] at n={fld.n}")
    funcs, records = [], []
    for i in range(args.count):
        spec = construct.random_V(fld, args.pairs, args.seed * 100003 + i)
        f = construct.build_G(spec)
        funcs.append(f)
        rec = spectra.analysis_record(f, f"sample{i}", with_ews=False, workers=args.workers,
                                      degree=algebraic_degree(f))
        rec["v"] = spec.v_exponents()
        records.append(rec)
    groups = spectra.signature_partition(funcs, args.workers)
    if args.format == "json":
        out = json.dumps({"samples": records, "classes": groups}, separators=(",", ":")) + "\n"
    elif args.format == "csv":
        out = spectra.records_to_csv(records)
    else:
        lines = [_text_record(r) + f"  V={r['v']}" for r in records]
        lines.append(f"{len(groups)} distinct invariant signature(s) among {len(funcs)} functions")
        out = "\n".join(lines) + "\n"
    _emit(args, out)
    return EXIT_OK


def cmd_enumerate_pairs(args):
    fld = _field(args)
    v0, _ = construct.split_V0_V1(fld)
    v0 = set(v0)
    rows = []
    for x, y in construct.compute_VM(fld):
        rows.append({"exponents": sorted((fld.discrete_log(x), fld.discrete_log(y))),
                     "hex": [f"{x:x}", f"{y:x}"], "subset": "V0" if x in v0 else "V1"})
    if args.format == "json":
        out = json.dumps(rows, separators=(",", ":")) + "\n"
    elif args.format == "csv":
        out = "exp1,exp2,hex1,hex2,subset\n" + "".join(
            f"{r['exponents'][0]},{r['exponents'][1]},{r['hex'][0]},{r['hex'][1]},{r['subset']}\n"
            for r in rows)
    else:
        out = f"field n={fld.n}\n" + "".join(
            f"pair {r['exponents'][0]} {r['exponents'][1]}  # {r['subset']}\n" for r in rows)
    _emit(args, out)
    return EXIT_OK


def cmd_field_info(args):
    fld = _field(args, construction=False)
    info = {"n": fld.n, "config": fld.to_config(), "trace_mask": f"{fld.trace_mask:x}"}
    if fld.n % 2 == 0:
        info["omega"] = f"{fld.element_of_order_3():x}"
        info["W_size"] = len(construct.compute_W(fld))
        info["VM_size"] = 2 * len(construct.compute_VM(fld))
    if args.format == "json":
        out = json.dumps(info) + "\n"
    elif args.format == "csv":
        out = ",".join(info) + "\n" + ",".join(str(v) for v in info.values()) + "\n"
    else:
        out = "".join(f"{k}: {v}\n" for k, v in info.items())
    _emit(args, out)
    return EXIT_OK


# -- parser --------------------------------------------------------------------------

def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--n", type=int, help="field degree")
    common.add_argument("--field-config", help="file containing 'n=<int>, poly=<hex>, xi=<hex>'")
    common.add_argument("--format", choices=("json", "csv", "text"), default="text")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--workers", type=int, default=None,
                        help="parallel workers (default: all cores; 1 = serial)")
    common.add_argument("--out", help="write output to this file")

    p = argparse.ArgumentParser(prog="inv4perm", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    a = sub.add_parser("analyze", parents=[common], help="spectra, NL and degree of one function")
    a.add_argument("--named", choices=construct.NAMED)
    a.add_argument("--v-file")
    a.add_argument("--table-file")
    a.add_argument("--ews", action="store_true", help="include the extended Walsh spectrum")
    a.set_defaults(func=cmd_analyze)

    r = sub.add_parser("reproduce-table", parents=[common], help="recompute a reference table")
    r.add_argument("which", type=int, choices=(1, 2, 3, 4))
    r.add_argument("--max-n", type=int)
    r.set_defaults(func=cmd_reproduce_table)

    v = sub.add_parser("verify", parents=[common], help="run lemma/proposition checks")
    v.add_argument("which", choices=VERIFY_CHECKS + ("all",))
    v.set_defaults(func=cmd_verify)

    s = sub.add_parser("sample", parents=[common], help="analyse random V sets")
    s.add_argument("--pairs", type=int, required=True, help="pairs per V set")
    s.add_argument("--count", type=int, default=10)
    s.set_defaults(func=cmd_sample)

    e = sub.add_parser("enumerate-pairs", parents=[common], help="list the VM pairs")
    e.set_defaults(func=cmd_enumerate_pairs)

    f = sub.add_parser("field-info", parents=[common], help="describe the field representation")
    f.set_defaults(func=cmd_field_info)
    return p


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, FieldError, VFuncError, construct.ValidationError,
            ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
