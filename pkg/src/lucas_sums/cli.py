"""Command-line front end.

    lucas-sums {eval|sum|verify|bench|oeis} [--preset NAME | -p INT -q INT]
               [flags...] [--format json|tsv|plain]

Exit codes: 0 success, 1 verification or equality failure, 2 usage,
3 domain error, 4 network failure.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import sums
from .bench import bench_sum
from .errors import (
    CorrectnessAlarm,
    DomainError,
    InexactDivision,
    ParameterError,
    SumRequiresUnitQ,
    UnknownIdentity,
)
from .identities import Grid, catalog, default_params, get_identity, sweep
from .oeis import SEQUENCES, OeisNetworkError, UnknownSequence, check_sequence
from .sequences import PRESETS, SequenceParams, eval_pair

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_DOMAIN, EXIT_NETWORK = 0, 1, 2, 3, 4


class UsageError(Exception):
    pass


def _span(text: str) -> range:
    """Parse an inclusive ``LO:HI`` span."""
    try:
        lo, hi = text.split(":")
        lo, hi = int(lo), int(hi)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected LO:HI, got {text!r}") from None
    if hi < lo:
        raise argparse.ArgumentTypeError(f"empty span {text!r}")
    return range(lo, hi + 1)


def _var_span(text: str):
    name, sep, rest = text.partition("=")
    if not sep or not name:
        raise argparse.ArgumentTypeError(f"expected VAR=LO:HI, got {text!r}")
    return name, _span(rest)


def _int_list(text: str) -> list:
    try:
        return [int(x) for x in text.split(",") if x]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _common() -> argparse.ArgumentParser:
    parent = argparse.ArgumentParser(add_help=False)
    parent.add_argument("--preset", choices=sorted(PRESETS))
    parent.add_argument("-p", type=int)
    parent.add_argument("-q", type=int)
    parent.add_argument("--format", choices=("plain", "json", "tsv"), default="plain")
    return parent


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = argparse.ArgumentParser(prog="lucas-sums", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    ev = sub.add_parser("eval", parents=[common], help="print U_n and V_n")
    where = ev.add_mutually_exclusive_group(required=True)
    where.add_argument("-n", type=int, help="index (negative allowed when q = +-1)")
    where.add_argument("--range", type=_span, metavar="LO:HI", dest="span")

    sm = sub.add_parser("sum", parents=[common], help="evaluate S or A sums")
    sm.add_argument("--kind", choices=("S", "A"), required=True)
    sm.add_argument("--pair", choices=("UU", "VV", "UV"), required=True)
    sm.add_argument("-r", type=int, required=True)
    sm.add_argument("-s", type=int, required=True)
    sm.add_argument("-n", type=int, required=True)
    sm.add_argument("--path", choices=tuple(sums.SUM_PATHS), default="theorem1")
    sm.add_argument("--check", action="store_true", help="run all three paths and require agreement")

    vf = sub.add_parser("verify", parents=[common], help="sweep identities over a grid")
    which = vf.add_mutually_exclusive_group(required=True)
    which.add_argument("--id", action="append", dest="ids", metavar="ID")
    which.add_argument("--all", action="store_true")
    which.add_argument("--list", action="store_true", help="print the catalog and exit")
    vf.add_argument("--grid", choices=("default",), default="default")
    vf.add_argument("--p-range", type=_span, metavar="LO:HI")
    vf.add_argument("--q-values", type=_int_list, metavar="Q1,Q2")
    vf.add_argument("--range", type=_var_span, action="append", default=[], metavar="VAR=LO:HI", dest="spans")
    vf.add_argument("--workers", type=int, default=1)
    vf.add_argument("--max-counterexamples", type=int, default=20)

    bn = sub.add_parser("bench", parents=[common], help="time closed form against naive summation")
    bn.add_argument("-n", type=int, nargs="+", default=[1000, 10000, 100000])
    bn.add_argument("--kind", choices=("S", "A"), default="S")
    bn.add_argument("--pair", choices=("UU", "VV", "UV"), default="UU")
    bn.add_argument("-r", type=int, default=0)
    bn.add_argument("-s", type=int, default=0)
    bn.add_argument("--repeat", type=int, default=1)

    oe = sub.add_parser("oeis", parents=[common], help="compare terms with OEIS b-files")
    pick = oe.add_mutually_exclusive_group(required=True)
    pick.add_argument("--id", action="append", dest="ids", metavar="A-NUMBER")
    pick.add_argument("--all", action="store_true")
    oe.add_argument("--terms", type=int, default=15)
    mode = oe.add_mutually_exclusive_group()
    mode.add_argument("--offline", dest="online", action="store_false", default=False)
    mode.add_argument("--online", dest="online", action="store_true")
    oe.add_argument("--timeout", type=float, default=10.0)
    return parser


def _params(args, default: str | None = "fibonacci") -> SequenceParams | None:
    explicit = args.p is not None or args.q is not None
    if args.preset and explicit:
        raise UsageError("give either --preset or -p/-q, not both")
    if explicit:
        if args.p is None or args.q is None:
            raise UsageError("-p and -q must be given together")
        return SequenceParams(args.p, args.q)
    if args.preset:
        return PRESETS[args.preset]
    return PRESETS[default] if default else None


def _require_unit(params: SequenceParams) -> None:
    if not params.unit_q:
        raise SumRequiresUnitQ(
            f"sums and identities assume q = +-1; got q={params.q} (p={params.p})"
        )


def _json(payload) -> str:
    return json.dumps(payload, indent=2, sort_keys=False)


def _envelope(command, params, query, **rest) -> dict:
    out = {"command": command, "params": params.as_dict() if params else None, "query": query}
    out.update(rest)
    return out


def cmd_eval(args) -> tuple[int, str]:
    params = _params(args)
    indices = [args.n] if args.span is None else list(args.span)
    points = [eval_pair(params, n) for n in indices]
    if args.format == "json":
        query = {"n": args.n} if args.span is None else {"lo": indices[0], "hi": indices[-1]}
        values = [{"index": pt.index, "u": str(pt.u), "v": str(pt.v)} for pt in points]
        return EXIT_OK, _json(_envelope("eval", params, query, values=values, path="doubling"))
    if args.format == "tsv":
        rows = ["n\tU\tV"] + [f"{pt.index}\t{pt.u}\t{pt.v}" for pt in points]
        return EXIT_OK, "\n".join(rows)
    if args.span is None:
        return EXIT_OK, f"U={points[0].u} V={points[0].v}"
    return EXIT_OK, "\n".join(f"n={pt.index} U={pt.u} V={pt.v}" for pt in points)


def cmd_sum(args) -> tuple[int, str]:
    params = _params(args)
    _require_unit(params)
    query = sums.SumQuery(args.kind, args.pair, args.r, args.s, args.n)
    names = list(sums.SUM_PATHS) if args.check else [args.path]
    values = {name: sums.SUM_PATHS[name](params, query).value for name in names}
    value = values[args.path]
    agree = len(set(values.values())) == 1
    code = EXIT_OK if agree else EXIT_FAIL
    if args.format == "json":
        extra = {"value": str(value), "path": args.path}
        if args.check:
            extra["paths"] = {k: str(v) for k, v in values.items()}
            extra["agree"] = agree
        return code, _json(_envelope("sum", params, query.as_dict(), **extra))
    if args.format == "tsv":
        rows = ["path\tvalue"] + [f"{k}\t{v}" for k, v in values.items()]
        return code, "\n".join(rows)
    if not args.check:
        return code, str(value)
    detail = " ".join(f"{k}={v}" for k, v in values.items())
    return code, f"{value}\n{detail}\n" + ("all paths agree" if agree else "PATHS DISAGREE")


def _grid(args) -> tuple[Grid, SequenceParams | None]:
    chosen = _params(args, default=None)
    if chosen is not None:
        _require_unit(chosen)
        plist = (chosen,)
    elif args.p_range is not None or args.q_values is not None:
        ps = args.p_range if args.p_range is not None else range(-3, 4)
        qs = args.q_values if args.q_values is not None else [-1, 1]
        plist = tuple(
            SequenceParams(p, q) for p in ps for q in qs if p != 0 and q != 0 and p * p != 4 * q
        )
    else:
        plist = default_params()
    return Grid(plist, dict(args.spans)), chosen


def _render_reports(args, reports, params, aborted) -> str:
    if args.format == "json":
        query = {"ids": [r.identity for r in reports], "grid": args.grid, "aborted": aborted}
        return _json(_envelope("verify", params, query, report=[r.as_dict() for r in reports]))
    if args.format == "tsv":
        rows = ["identity\tstatus\tverdict\tcases_checked\tskipped\tcounterexamples"]
        rows += [
            f"{r.identity}\t{r.status}\t{r.verdict}\t{r.cases_checked}\t{r.skipped}\t{r.counterexample_count}"
            for r in reports
        ]
        return "\n".join(rows)
    lines = []
    for r in reports:
        lines.append(
            f"{r.identity:<16} {r.status:<13} {r.verdict:<17} checked={r.cases_checked} "
            f"skipped={r.skipped} counterexamples={r.counterexample_count}"
        )
        if r.counterexamples:
            c = r.counterexamples[0]
            bind = " ".join(f"{k}={v}" for k, v in c.binding.items())
            lines.append(f"    e.g. p={c.p} q={c.q} {bind}: lhs={c.lhs} rhs={c.rhs}")
    if aborted:
        lines.append(f"ABORTED: assumed-true identity {reports[-1].identity} was falsified")
    return "\n".join(lines)


def cmd_verify(args) -> tuple[int, str]:
    if args.list:
        entries = [ident.describe() for ident in catalog()]
        if args.format == "json":
            return EXIT_OK, _json({"command": "verify", "params": None, "query": {"list": True}, "catalog": entries})
        return EXIT_OK, "\n".join(f"{e['id']:<16} {e['status']:<13} {e['formula']}" for e in entries)
    idents = [ident.id for ident in catalog()] if args.all else [get_identity(i).id for i in args.ids]
    grid, params = _grid(args)
    reports, aborted = [], False
    for ident in idents:
        try:
            reports.append(
                sweep(ident, grid, workers=args.workers, max_counterexamples=args.max_counterexamples)
            )
        except CorrectnessAlarm as alarm:
            reports.append(alarm.report)
            aborted = True
            break
    return (EXIT_FAIL if aborted else EXIT_OK), _render_reports(args, reports, params, aborted)


def cmd_bench(args) -> tuple[int, str]:
    params = _params(args)
    _require_unit(params)
    rows = [bench_sum(params, n, args.kind, args.pair, args.r, args.s, repeat=args.repeat) for n in args.n]
    code = EXIT_OK if all(row.equal for row in rows) else EXIT_FAIL
    query = {"kind": args.kind, "pair": args.pair, "r": args.r, "s": args.s, "n": list(args.n)}
    if args.format == "json":
        return code, _json(_envelope("bench", params, query, results=[row.as_dict() for row in rows]))
    if args.format == "tsv":
        out = ["n\tnaive_seconds\tclosed_seconds\tratio\tequal"]
        out += [f"{r.n}\t{r.naive_seconds:.6g}\t{r.closed_seconds:.6g}\t{r.ratio:.6g}\t{r.equal}" for r in rows]
        return code, "\n".join(out)
    out = [f"{'n':>8} {'naive s':>12} {'closed s':>12} {'ratio':>10} equal"]
    out += [
        f"{r.n:>8} {r.naive_seconds:>12.6f} {r.closed_seconds:>12.6f} {r.ratio:>10.1f} {r.equal}"
        for r in rows
    ]
    return code, "\n".join(out)


def cmd_oeis(args) -> tuple[int, str]:
    ids = list(SEQUENCES) if args.all else args.ids
    for aid in ids:
        if aid not in SEQUENCES:
            raise UnknownSequence(aid)
    checks = [check_sequence(aid, args.terms, online=args.online, timeout=args.timeout) for aid in ids]
    code = EXIT_OK if all(c.match for c in checks) else EXIT_FAIL
    if args.format == "json":
        query = {"ids": ids, "terms": args.terms, "online": args.online}
        return code, _json(_envelope("oeis", None, query, report=[c.as_dict() for c in checks]))
    if args.format == "tsv":
        out = ["id\tpreset\tsequence\tterms\tmatch"]
        out += [f"{c.id}\t{c.preset}\t{c.source}\t{c.compared}\t{c.match}" for c in checks]
        return code, "\n".join(out)
    out = []
    for c in checks:
        state = "match" if c.match else f"MISMATCH ({len(c.mismatches)})"
        out.append(f"{c.id} {c.preset:<10} {c.source}: {c.compared} terms {state}")
    return code, "\n".join(out)


COMMANDS = {"eval": cmd_eval, "sum": cmd_sum, "verify": cmd_verify, "bench": cmd_bench, "oeis": cmd_oeis}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    try:
        code, text = COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (UnknownIdentity, UnknownSequence) as exc:
        print(f"unknown id: {exc.args[0]}", file=sys.stderr)
        return EXIT_USAGE
    except (DomainError, ParameterError) as exc:
        print(f"domain error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except OeisNetworkError as exc:
        print(f"network error: {exc}", file=sys.stderr)
        return EXIT_NETWORK
    except InexactDivision as exc:
        print(f"correctness alarm: {exc}", file=sys.stderr)
        return EXIT_FAIL
    except Exception as exc:  # noqa: BLE001 - exit codes must stay within the contract
        print(f"error: {exc!r}", file=sys.stderr)
        return EXIT_FAIL
    sys.stdout.write(text + "\n")
    return code


if __name__ == "__main__":
    sys.exit(main())
