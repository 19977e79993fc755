"""``rsquad`` command-line front end.

Semantics defaults: ``analyze`` and ``classify`` use ANF (``(0,t)_n``
sums, short function included); ``profile``, ``recursion``, ``period``
and ``tracecheck`` use ORBIT, the convention that matches the trace form.

Exit status: 0 success, 1 usage or input error, 2 when an internal
cross-check fails (the offending q and n are printed on stderr).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from pathlib import Path

from .balance import profile
from .equiv import classify_all_rs, classify_mrs, min_representative_terms
from .errors import FalsificationError
from .quadform import AnalysisReport, closed_form_report, v_period
from .recursion import (
    extend,
    fit_recurrence,
    format_poly,
    hadamard_power_report,
    minimal_polynomial,
    mrs_recursion_poly,
    root_moduli,
    rules_matrix,
)
from .rsq import RsQuadratic, Semantics
from .verify import VerifyConfig, run_verify, trace_check

TRACE_N_MAX = 16
FORMATS = ("json", "csv", "text")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def parse_range(text: str) -> range:
    """``"7"`` or ``"5..15"`` (inclusive)."""
    try:
        if ".." in text:
            lo, hi = (int(s) for s in text.split("..", 1))
        else:
            lo = hi = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad range {text!r}; use N or A..B") from None
    if lo < 1 or hi < lo:
        raise argparse.ArgumentTypeError(f"bad range {text!r}; need 1 <= A <= B")
    return range(lo, hi + 1)


def parse_q(text: str) -> RsQuadratic:
    try:
        return RsQuadratic.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _csv(rows: list[dict]) -> str:
    buf = io.StringIO()
    if rows:
        w = csv.DictWriter(buf, fieldnames=list(rows[0]), lineterminator="\n")
        w.writeheader()
        for row in rows:
            w.writerow({k: " ".join(map(str, v)) if isinstance(v, list) else v for k, v in row.items()})
    return buf.getvalue()


def _text(payload) -> str:
    if isinstance(payload, list):
        return "\n".join(_text(p) for p in payload)
    return "  ".join(f"{k}={v}" for k, v in payload.items())


class Output:
    """A JSON-able payload plus optional hand-made CSV and text renderings."""

    def __init__(self, payload, *, rows=None, csv_text=None, text=None):
        self.payload = payload
        self.rows = rows
        self.csv_text = csv_text
        self.text = text

    def render(self, fmt: str) -> str:
        if fmt == "json":
            return json.dumps(self.payload, sort_keys=True, indent=2) + "\n"
        if fmt == "csv":
            if self.csv_text is not None:
                return self.csv_text
            rows = self.rows if self.rows is not None else (
                self.payload if isinstance(self.payload, list) else [self.payload]
            )
            return _csv(rows)
        body = self.text if self.text is not None else _text(self.payload)
        return body.rstrip("\n") + "\n"


def _semantics(args, default: Semantics) -> Semantics:
    return Semantics(args.semantics) if args.semantics else default


def short_bent_printed_weight(t: int) -> int:
    """The weight sometimes quoted for the short function ``(0,t)_(2t)``: ``2^(2t-3) - 2^(t-2)``."""
    return (1 << (2 * t - 3)) - (1 << (t - 2))


def _short_bent_note(q: RsQuadratic, r: AnalysisReport) -> dict:
    if r.semantics != Semantics.ANF.value or len(q) != 1 or r.n != 2 * q.J or q.J < 2:
        return {}
    quoted = short_bent_printed_weight(q.J)
    if quoted == r.weight:
        return {}
    return {
        "quoted_weight": quoted,
        "note": f"the often-quoted short bent weight 2^(2t-3)-2^(t-2)={quoted} differs; "
                f"{r.weight} comes from Dickson reduction and agrees with the truth table",
    }


def cmd_analyze(args) -> Output:
    sem = _semantics(args, Semantics.ANF)
    reports = [closed_form_report(args.q, n, sem) for n in args.n]
    payload = [dict(r.to_dict(), **_short_bent_note(args.q, r)) for r in reports]
    text = "\n".join(
        f"q={{{args.q}}} n={r.n} {r.semantics}: weight={r.weight} N={r.nonlinearity} "
        f"v={r.v} d={r.d} balanced={r.balanced} [{r.method}]"
        + (f"  (note: {p['note']})" if "note" in p else "")
        for r, p in zip(reports, payload)
    )
    return Output(payload[0] if len(payload) == 1 else payload, csv_text=AnalysisReport.to_csv(reports), text=text)


def cmd_period(args) -> Output:
    vp = v_period(args.q)
    payload = {"offsets": list(args.q.offsets), "period": vp.period, "start": vp.start, "values": list(vp.values)}
    text = f"q={{{args.q}}} period={vp.period} from n={vp.start}: {' '.join(map(str, vp.values))}"
    return Output(payload, text=text)


def cmd_profile(args) -> Output:
    if args.semantics and Semantics(args.semantics) is not Semantics.ORBIT:
        raise UsageError("balance profiles are defined for the trace form; use --semantics orbit")
    profs = [profile(q) for q in args.q]
    payload = [dict(p.to_dict(), description=p.describe()) for p in profs]
    text = "\n".join(
        f"q={{{','.join(map(str, p.offsets))}}} {p.shape.value}"
        + (f"({p.k})" if p.k is not None else "")
        + f": {p.describe()} (d_Q={p.dQ}, nu_Q={p.nuQ})"
        for p in profs
    )
    return Output(payload[0] if len(payload) == 1 else payload, text=text)


def _root_payload(poly):
    return [r.to_dict() for r in root_moduli(poly)]


def cmd_recursion(args) -> Output:
    if args.t is not None:
        if args.q is not None:
            raise UsageError("give either --t or --q, not both")
        poly = mrs_recursion_poly(args.t)
        payload = {"t": args.t, "charpoly": list(poly), "charpoly_text": format_poly(poly), "valid_from": 2 * args.t + 1}
        if args.matrix:
            mp = minimal_polynomial(rules_matrix(args.t))
            if mp != poly:
                raise FalsificationError(f"rules-matrix minimal polynomial {format_poly(mp)} differs", q=RsQuadratic((args.t,)))
            payload["rules_matrix_minpoly"] = list(mp)
            payload["hadamard"] = hadamard_power_report(args.t)
        if args.roots:
            payload["roots"] = _root_payload(poly)
        return Output(payload, rows=[{k: payload[k] for k in ("t", "charpoly", "charpoly_text", "valid_from")}],
                      text=f"t={args.t}: {payload['charpoly_text']}, valid from n={2 * args.t + 1}")
    if args.q is None or args.n is None:
        raise UsageError("recursion needs --t, or --q together with --n A..B")
    sem = _semantics(args, Semantics.ORBIT)
    start = args.n.start
    seq = [closed_form_report(args.q, n, sem).weight for n in args.n]
    spec = fit_recurrence(seq, start, margin=args.margin)
    payload = {"offsets": list(args.q.offsets), "semantics": sem.value, "n": [start, args.n.stop - 1],
               "weights": seq, "recurrence": spec.to_dict(), "text": spec.describe()}
    lines = [f"q={{{args.q}}} {sem.value} n={start}..{args.n.stop - 1}: order {spec.order}", spec.describe(),
             f"charpoly: {format_poly(spec.charpoly)}"]
    if args.back:
        back = extend(spec, seq[: spec.order], "backward", args.back)[: args.back]
        payload["backward"] = {"from_n": start - args.back, "values": back}
        lines.append(f"backward n={start - args.back}..{start - 1}: {back}")
    if args.forward:
        fwd = extend(spec, seq[-spec.order:], "forward", args.forward)[spec.order:]
        payload["forward"] = {"from_n": args.n.stop, "values": fwd}
        lines.append(f"forward n={args.n.stop}..{args.n.stop + args.forward - 1}: {fwd}")
    if args.roots:
        payload["roots"] = _root_payload(spec.charpoly)
        lines.append("root moduli: " + " ".join(f"{r['modulus']:.12f}" for r in payload["roots"]))
    rows = [{"n": n, "weight": w} for n, w in zip(args.n, seq)]
    return Output(payload, rows=rows, text="\n".join(lines))


def cmd_classify(args) -> Output:
    sem = _semantics(args, Semantics.ANF)
    if args.all:
        table = classify_all_rs(args.n, args.max_terms, sem)
    else:
        if sem is not Semantics.ANF or args.max_terms is not None:
            raise UsageError("MRS classification uses ANF semantics; pass --all for general RS tables")
        table = classify_mrs(args.n)
    return Output(table.to_dict(), csv_text=table.to_csv(), text=table.to_text())


def cmd_minreps(args) -> Output:
    sem = _semantics(args, Semantics.ANF)
    reports = [min_representative_terms(n, sem) for n in args.n]
    payload = [r.to_dict() for r in reports]
    rows = [{"n": r.n, "semantics": r.semantics, "B_observed": r.B_observed, "classes": len(r.min_terms),
             "within_three": r.within_three} for r in reports]
    text = "\n".join(
        f"n={r['n']} B_observed={r['B_observed']} classes={r['classes']}"
        + ("" if r["within_three"] else "  <-- exceeds 3")
        for r in rows
    )
    return Output(payload, rows=rows, text=text)


def cmd_tracecheck(args) -> Output:
    if args.n.stop - 1 > TRACE_N_MAX:
        raise UsageError(f"tracecheck enumerates GF(2^n); n is capped at {TRACE_N_MAX}")
    rows = []
    for n in args.n:
        rs, tr = trace_check(args.q, n)
        rows.append({"offsets": list(args.q.offsets), "n": n, "abs_W_rs": rs, "abs_W_trace": tr, "balanced": rs == 0})
    return Output(rows)


def cmd_verify(args) -> Output:
    cfg = VerifyConfig(max_j=args.max_j, n_max=args.n_max, trace_n_max=min(args.trace_n_max, TRACE_N_MAX),
                       profile_max_j=args.profile_max_j, profile_n_max=args.profile_n_max)
    result = run_verify(cfg)
    return Output(result, rows=[dict(result["checks"], status=result["status"])],
                  text=f"verify ok: {result['checks']}")


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="rsquad", description="Quadratic rotation symmetric Boolean functions.")
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=FORMATS, default="json")
    common.add_argument("--out", type=Path, help="write the report here instead of stdout")
    sem = _Parser(add_help=False)
    sem.add_argument("--semantics", choices=[s.value for s in Semantics])
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    a = sub.add_parser("analyze", parents=[common, sem], help="weight, nonlinearity, v, d (default anf)")
    a.add_argument("--q", type=parse_q, required=True)
    a.add_argument("--n", type=parse_range, required=True)
    a.set_defaults(func=cmd_analyze)

    a = sub.add_parser("period", parents=[common], help="one period of v(n)")
    a.add_argument("--q", type=parse_q, required=True)
    a.set_defaults(func=cmd_period)

    a = sub.add_parser("profile", parents=[common, sem], help="for which n the trace form is balanced")
    a.add_argument("--q", type=parse_q, required=True, action="append")
    a.set_defaults(func=cmd_profile)

    a = sub.add_parser("recursion", parents=[common, sem], help="weight recursions (default orbit)")
    a.add_argument("--t", type=int, help="closed-form recursion of (0,t)_n")
    a.add_argument("--matrix", action="store_true", help="also check the rules-matrix minimal polynomial")
    a.add_argument("--q", type=parse_q)
    a.add_argument("--n", type=parse_range, help="weight sweep to fit, A..B")
    a.add_argument("--margin", type=int, default=1, help="extra terms required beyond 2*order")
    a.add_argument("--back", type=int, default=0, help="extend this many terms backwards")
    a.add_argument("--forward", type=int, default=0, help="extend this many terms forwards")
    a.add_argument("--roots", action="store_true", help="report root moduli of the recursion polynomial")
    a.set_defaults(func=cmd_recursion)

    a = sub.add_parser("classify", parents=[common, sem], help="affine equivalence classes (default anf)")
    a.add_argument("--n", type=int, required=True)
    a.add_argument("--all", action="store_true", help="all RS quadratics, not only (0,t)_n")
    a.add_argument("--max-terms", type=int)
    a.set_defaults(func=cmd_classify)

    a = sub.add_parser("minreps", parents=[common, sem], help="smallest support per class")
    a.add_argument("--n", type=parse_range, required=True)
    a.set_defaults(func=cmd_minreps)

    a = sub.add_parser("tracecheck", parents=[common], help="|W(0)| of RS function vs trace form")
    a.add_argument("--q", type=parse_q, required=True)
    a.add_argument("--n", type=parse_range, required=True)
    a.set_defaults(func=cmd_tracecheck)

    a = sub.add_parser("verify", parents=[common], help="cross-check fast paths against brute force")
    a.add_argument("--max-j", type=int, default=4)
    a.add_argument("--n-max", type=int, default=12)
    a.add_argument("--trace-n-max", type=int, default=10)
    a.add_argument("--profile-max-j", type=int, default=6)
    a.add_argument("--profile-n-max", type=int, default=32)
    a.set_defaults(func=cmd_verify)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        out = args.func(args)
    except FalsificationError as exc:
        print(f"rsquad: cross-check failed: {exc}", file=sys.stderr)
        print(f"rsquad: q={exc.q} n={exc.n}", file=sys.stderr)
        return 2
    except (UsageError, ValueError) as exc:
        print(f"rsquad: error: {exc}", file=sys.stderr)
        return 1
    text = out.render(args.format)
    if args.out:
        args.out.write_text(text)
    else:
        sys.stdout.write(text)
    return 0


if __name__ == "__main__":
    sys.exit(main())
