"""Command-line entry point.  Output lines are tab-separated ``key=value`` fields.

Exit status: 0 when every check passes, 1 on failures, 2 on usage or parse errors.
"""

from __future__ import annotations

import argparse
from collections import Counter
import os
import sys
import time
import warnings

from . import __version__
from .commutators import ALL_VARIETIES, Variety, rel_commutator, reflector_kernel, star_ideal, derived_ideal, radicalator
from .core import validate
from .enumeration import all_skew_braces
from .errors import BoundExceeded, BraceError, NotAnIdeal, OracleDisagreement, ParseError, ValidationError
from .extensions import is_central_algebraic, is_central_categorical, quotient_extension
from .formats import parse_sbrace_records, write_sbrace_records
from .groups import groups_of_order
from .homology import HopfSurrogateWarning, h1, hopf_quotient, lower_central_series
from .morphisms import all_homs
from .quotients import in_variety
from .subobjects import ElementSet, additive_center, all_ideals, is_ideal, z_r
from .suites import SUITES, failed, run_suite, subject_id

OK, FAIL, USAGE = 0, 1, 2


class _Usage(Exception):
    pass


def _fmt(S):
    return "{" + ",".join(map(str, sorted(S))) + "}"


def _emit(**fields):
    print("\t".join(f"{k}={v}" for k, v in fields.items()))


def _read_pairs(path):
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise _Usage(f"{path}: {exc.strerror}") from None
    pairs = parse_sbrace_records(text)
    if not pairs:
        raise _Usage(f"{path}: no records")
    return pairs


def _load_one(path, record=0):
    pairs = _read_pairs(path)
    if not 0 <= record < len(pairs):
        raise _Usage(f"{path}: record {record} out of range (file has {len(pairs)})")
    t, name = pairs[record]
    return validate(t, name=name)


def _ideal(A, text):
    try:
        members = [int(x) for x in text.split(",") if x.strip()] if text else []
    except ValueError:
        raise _Usage(f"bad --ideal {text!r}: expected comma-separated indices") from None
    if any(x < 0 or x >= A.n for x in members):
        raise _Usage(f"--ideal entries must lie in 0..{A.n - 1}")
    I = ElementSet(A, set(members) | {0})
    if not is_ideal(A, I):
        raise _Usage(f"{_fmt(I)} is not an ideal")
    return I


def cmd_validate(args):
    status = OK
    for k, (t, name) in enumerate(_read_pairs(args.file)):
        label = name or f"record-{k}"
        try:
            A = validate(t, name=name)
            _emit(subject=label, check="validate", verdict="PASS", order=A.n, digest=subject_id(A))
        except ValidationError as exc:
            _emit(subject=label, check="validate", verdict="FAIL", witness=str(exc))
            status = FAIL
    return status


def cmd_invariants(args):
    A = _load_one(args.file, args.record)
    X = args.variety
    _emit(key="order", value=A.n)
    _emit(key="digest", value=subject_id(A))
    _emit(key="trivial", value=A.is_trivial())
    _emit(key=f"in_variety[{X}]", value=in_variety(A, X))
    _emit(key="ideals", value=" ".join(_fmt(I) for I in all_ideals(A)))
    _emit(key="additive_center", value=_fmt(additive_center(A)))
    _emit(key="z_r", value=_fmt(z_r(A)))
    _emit(key="star_ideal", value=_fmt(star_ideal(A)))
    _emit(key="derived_ideal", value=_fmt(derived_ideal(A)))
    _emit(key="radicalator", value=_fmt(radicalator(A)))
    _emit(key=f"reflector_kernel[{X}]", value=_fmt(reflector_kernel(A, X)))
    _emit(key=f"h1_order[{X}]", value=h1(A, X).n)
    return OK


def cmd_commutator(args):
    A = _load_one(args.file, args.record)
    I = _ideal(A, args.ideal)
    C = rel_commutator(A, I, args.variety)
    _emit(ideal=_fmt(I), variety=args.variety, commutator=_fmt(C))
    return OK


def cmd_central(args):
    A = _load_one(args.file, args.record)
    I = _ideal(A, args.ideal)
    e = quotient_extension(A, I)
    X = args.variety
    try:
        alg = is_central_algebraic(e, X)
    except OracleDisagreement as exc:
        _emit(ideal=_fmt(I), variety=X, verdict="FAIL", witness=str(exc))
        return FAIL
    cat = is_central_categorical(e, X)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", HopfSurrogateWarning)
        hq = hopf_quotient(e, X).n
    agree = alg == cat
    _emit(ideal=_fmt(I), variety=X, algebraic=alg, categorical=cat, hopf_surrogate_order=hq,
          verdict="PASS" if agree else "FAIL")
    return OK if agree else FAIL


def cmd_series(args):
    A = _load_one(args.file, args.record)
    for entry in lower_central_series(A, args.variety, args.max_n):
        _emit(variety=args.variety, n=entry.index, size=len(entry.term), term=_fmt(entry.term))
    return OK


def cmd_enumerate(args):
    os.makedirs(args.out, exist_ok=True)
    started = time.perf_counter()
    braces = all_skew_braces(args.order)
    path = os.path.join(args.out, f"order-{args.order}.sbrace")
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(write_sbrace_records(braces))
    _emit(order=args.order, groups=len(groups_of_order(args.order)), skew_braces=len(braces),
          file=path, time_ms=f"{(time.perf_counter() - started) * 1000:.1f}")
    return OK


def cmd_homs(args):
    A = _load_one(args.file_a, args.record)
    B = _load_one(args.file_b, args.record_b)
    homs = all_homs(A, B)
    for f in homs:
        _emit(map=",".join(map(str, f.map.tolist())), surjective=f.is_surjective)
    _emit(count=len(homs))
    return OK


def cmd_verify(args):
    varieties = args.varieties or ALL_VARIETIES
    started = time.perf_counter()
    records = run_suite(args.suite, args.max_order, varieties,
                        include_size_24_search=args.include_size_24_search, database=args.database)
    lines = [r.to_line() for r in records]
    for line in lines:
        print(line)
    bad = failed(records)
    tally = Counter(r.verdict for r in records)
    summary = " ".join(f"{v}={tally[v]}" for v in sorted(tally))
    print(f"# suite={args.suite} max_order={args.max_order} records={len(records)} {summary} "
          f"time_s={time.perf_counter() - started:.1f}")
    if args.report_dir:
        from .plotting import write_report

        os.makedirs(args.report_dir, exist_ok=True)
        with open(os.path.join(args.report_dir, "records.tsv"), "w", encoding="utf-8") as fh:
            fh.write("\n".join(lines) + "\n")
        counts = {n: len(all_skew_braces(n)) for n in range(1, args.max_order + 1)}
        for path in write_report(records, counts, args.report_dir):
            print(f"# figure={path}")
    return FAIL if bad else OK


def _variety(text):
    try:
        return Variety.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _varieties(text):
    return tuple(_variety(v) for v in text.split(",") if v)


def _positive(text):
    n = int(text)
    if n < 1:
        raise argparse.ArgumentTypeError("must be at least 1")
    return n


def build_parser():
    p = argparse.ArgumentParser(prog="bracekit", description="Finite skew brace commutators and centrality.")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    def with_file(name, help_):
        s = sub.add_parser(name, help=help_)
        s.add_argument("file")
        s.add_argument("--record", type=int, default=0, help="record index in a multi-record file")
        return s

    s = sub.add_parser("validate", help="check the axioms of every record in a file")
    s.add_argument("file")
    s.set_defaults(func=cmd_validate)

    s = with_file("invariants", "ideals, centers, commutator ideals and H1 size")
    s.add_argument("--variety", type=_variety, required=True)
    s.set_defaults(func=cmd_invariants)

    for name, func, help_ in (("commutator", cmd_commutator, "relative commutator [I,A]_X"),
                              ("central", cmd_central, "centrality of A -> A/I")):
        s = with_file(name, help_)
        s.add_argument("--ideal", required=True, help="comma-separated members, e.g. 0,2")
        s.add_argument("--variety", type=_variety, required=True)
        s.set_defaults(func=func)

    s = with_file("series", "lower central series")
    s.add_argument("--variety", type=_variety, required=True)
    s.add_argument("--max-n", type=_positive, default=16)
    s.set_defaults(func=cmd_series)

    s = sub.add_parser("enumerate", help="write all skew braces of one order to DIR/order-N.sbrace")
    s.add_argument("--order", type=_positive, required=True)
    s.add_argument("--out", required=True)
    s.set_defaults(func=cmd_enumerate)

    s = sub.add_parser("homs", help="list all homomorphisms A -> B")
    s.add_argument("file_a")
    s.add_argument("file_b")
    s.add_argument("--record", type=int, default=0)
    s.add_argument("--record-b", type=int, default=0)
    s.set_defaults(func=cmd_homs)

    s = sub.add_parser("verify", help="run a verification suite over the enumerated corpus")
    s.add_argument("--suite", choices=SUITES, required=True)
    s.add_argument("--max-order", type=_positive, default=8)
    s.add_argument("--varieties", type=_varieties, default=None, help="comma-separated, default all four")
    s.add_argument("--include-size-24-search", action="store_true",
                   help="also search order 24 for a naive star set that is not an ideal")
    s.add_argument("--database", help=".sbrace file of order-24 braces used instead of enumeration")
    s.add_argument("--report-dir", help="write records.tsv and summary figures here")
    s.set_defaults(func=cmd_verify)
    return p


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return USAGE if exc.code else OK
    try:
        return args.func(args)
    except (_Usage, ParseError, NotAnIdeal, BoundExceeded) as exc:
        print(f"bracekit: error: {exc}", file=sys.stderr)
        return USAGE
    except ValidationError as exc:
        print(f"bracekit: invalid skew brace: {exc}", file=sys.stderr)
        return FAIL
    except BraceError as exc:
        print(f"bracekit: {type(exc).__name__}: {exc}", file=sys.stderr)
        return FAIL


if __name__ == "__main__":
    sys.exit(main())
