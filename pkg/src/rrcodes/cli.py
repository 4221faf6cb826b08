"""Command-line front end.

Exit codes: 0 success, 1 domain error (JSON on stderr), 2 usage error,
3 when ``verify`` finds a mismatch that the ledger does not explain.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from . import __version__
from .code import (
    dimension,
    dual_code,
    generator_degree,
    generator_poly,
    is_dual_containing,
    make_code,
    printed_dual,
    simple_code,
)
from .distance import as_json_distance, discrepancy_report, distance_report
from .errors import CodeError
from .field import make_field
from .mds import mds_verdicts
from .oracle import brute_enumerator
from .qsc import check_qsc_pair, check_tolerance, qsc_params
from .spectrum import factor_x5m1
from .verify import load_ledger, run_verify
from .weights import weight_table


class UsageError(Exception):
    pass


def _dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def _render(obj, fmt: str) -> str:
    """Render a dict or a list of flat dicts."""
    if fmt == "json":
        return _dumps(obj) + "\n"
    rows = obj if isinstance(obj, list) else [obj]
    if fmt == "csv":
        buf = io.StringIO()
        keys = sorted({k for r in rows for k in r})
        writer = csv.DictWriter(buf, fieldnames=keys, lineterminator="\n")
        writer.writeheader()
        for r in rows:
            writer.writerow({k: _cell(r.get(k)) for k in keys})
        return buf.getvalue()
    out = []
    for r in rows:
        width = max((len(k) for k in r), default=0)
        out += [f"{k.ljust(width)}  {_cell(r[k])}" for k in sorted(r)]
        if len(rows) > 1:
            out.append("")
    return "\n".join(out).rstrip("\n") + "\n"


def _cell(v) -> str:
    if isinstance(v, (dict, list)):
        return _dumps(v)
    if v is None:
        return ""
    return str(v)


def _parse_exps(raw: str, flag: str):
    try:
        value = json.loads(raw)
    except json.JSONDecodeError as exc:
        raise UsageError(f"{flag}: not valid JSON ({exc.msg})") from None
    if not isinstance(value, (dict, list)):
        raise UsageError(f"{flag}: expected a JSON object or list")
    return value


def _ctx(args):
    return make_field(args.p, args.m)


def _code(args, raw=None, flag="--exps"):
    return make_code(_ctx(args), args.s, _parse_exps(raw if raw is not None else args.exps, flag))


def cmd_field_info(args):
    ctx = _ctx(args)
    return {
        "p": ctx.p,
        "m": ctx.m,
        "q": ctx.q,
        "modulus": list(ctx.modulus),
        "case": factor_x5m1(ctx).case.value if ctx.q % 5 else None,
    }


def cmd_factor(args):
    sp = factor_x5m1(_ctx(args))
    out = {
        "case": sp.case.value,
        "factors": [
            {"label": f.label, "poly": repr(f.poly), "degree": f.degree, "recip": sp.recip[f.label]}
            for f in sp.factors
        ],
    }
    if sp.omega is not None:
        out["omega"] = repr(sp.omega)
    if sp.traces is not None:
        out["traces"] = [repr(t) for t in sp.traces]
    return out["factors"] if args.format == "csv" else out


def cmd_code_info(args):
    code = _code(args)
    report = distance_report(code)
    info = {
        "spec": code.to_dict(),
        "n": code.n,
        "k": dimension(code),
        "deg_g": generator_degree(code),
        "dual": dual_code(code).exps,
        "printed_dual": printed_dual(code).exps,
        "dual_containing": is_dual_containing(code),
        "distance": as_json_distance(report.exact),
    }
    if args.show_generator:
        info["generator"] = repr(generator_poly(code))
    return info


def cmd_distance(args):
    report = distance_report(_code(args)).to_dict()
    if args.mode == "exact":
        return {"exact": report["exact"], "witness_t": report["witness_t"]}
    if args.mode == "paper":
        return {"paper": report["paper"]}
    return report


def cmd_weights(args):
    ctx = _ctx(args)
    labels = [x for x in args.labels.split(",") if x] if args.labels else []
    src = simple_code(factor_x5m1(ctx), labels)
    wt = brute_enumerator(src) if args.source == "brute" else weight_table(src, ctx.q)
    if args.format == "csv":
        return wt.to_csv()
    rows = [{"weight": i, "multiplicity": c} for i, c in enumerate(wt.counts)]
    if args.format == "json":
        return {"code": sorted(src.labels), "q": ctx.q, "counts": list(wt.counts)}
    return rows


def cmd_mds_scan(args):
    verdicts = mds_verdicts(_ctx(args), args.s, jobs=args.jobs)
    if args.only_mds:
        verdicts = [v for v in verdicts if v.is_mds]
    dicts = [v.to_dict() for v in verdicts]
    if args.format == "jsonl":
        return "".join(_dumps(d) + "\n" for d in dicts)
    if args.format == "json":
        return dicts
    return [{"exps": d["spec"]["exps"], "is_mds": d["is_mds"], "defect": d["defect"], "clause": d["clause"]} for d in dicts]


def cmd_qsc(args):
    c1 = _code(args, args.c1, "--c1")
    c2 = _code(args, args.c2, "--c2")
    elig = check_qsc_pair(c1, c2)
    out = {"eligible": elig.eligible, "reasons": list(elig.reasons), "n_out": None, "k_out": None, "q": c1.ctx.q}
    if elig.eligible:
        params = qsc_params(c1, args.al, args.ar)
        out.update(n_out=params.n_out, k_out=params.k_out, params=str(params))
    else:
        check_tolerance(c1, args.al, args.ar)
    return out


def cmd_verify(args):
    ledger = load_ledger(args.ledger)
    result = run_verify(ledger, jobs=args.jobs)
    text = result.report()
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    if args.format == "json":
        payload = {
            "ok": result.ok,
            "checks": [
                {
                    "name": c.name,
                    "detail": c.detail,
                    "mismatches": [
                        {"id": m.id, "count": m.count, "example": m.example, "known": m.known} for m in c.mismatches
                    ],
                }
                for c in result.checks
            ],
        }
        return payload, (0 if result.ok else 3)
    return text, (0 if result.ok else 3)


def cmd_discrepancies(args):
    found = discrepancy_report(_ctx(args), args.s, jobs=args.jobs)
    rows = [d.to_dict() for d in found]
    if args.format == "table":
        return [{"exps": r["spec"]["exps"], "exact": r["exact"], "paper": r["paper"], "table": r["table"],
                 "row": r["row"]} for r in rows]
    return rows


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="rrcodes", description="Repeated-root cyclic codes of length 5p^s.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(name, help, formats=("table", "json", "csv"), default="table", s=True):
        p = sub.add_parser(name, help=help)
        p.add_argument("--p", type=int, required=True, help="characteristic, a prime >= 7")
        p.add_argument("--m", type=int, default=1, help="extension degree (default 1)")
        if s:
            p.add_argument("--s", type=int, default=1, help="length is 5 p^s (default 1)")
        p.add_argument("--format", choices=formats, default=default)
        return p

    p = common("field-info", "field parameters and modulus", s=False)
    p.set_defaults(fn=cmd_field_info)
    p = common("factor", "factorization of x^5 - 1", s=False)
    p.set_defaults(fn=cmd_factor)
    p = common("code-info", "dimension, dual and distance of one code")
    p.add_argument("--exps", required=True, help="JSON map label->exponent or positional list")
    p.add_argument("--show-generator", action="store_true")
    p.set_defaults(fn=cmd_code_info)
    p = common("distance", "exact and printed-table distance", default="json")
    p.add_argument("--exps", required=True)
    p.add_argument("--mode", choices=("exact", "paper", "both"), default="both")
    p.set_defaults(fn=cmd_distance)
    p = common("weights", "weight distribution of a length-5 code", default="csv", s=False)
    p.add_argument("--labels", default="", help="comma-separated factor labels of the generator")
    p.add_argument("--source", choices=("table", "brute"), default="table")
    p.set_defaults(fn=cmd_weights)
    p = common("mds-scan", "MDS verdict for every code", formats=("jsonl", "json", "csv", "table"), default="jsonl")
    p.add_argument("--only-mds", action="store_true")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(fn=cmd_mds_scan)
    p = common("qsc", "quantum synchronizable code parameters", default="json")
    p.add_argument("--c1", required=True)
    p.add_argument("--c2", required=True)
    p.add_argument("--al", type=int, default=0)
    p.add_argument("--ar", type=int, default=0)
    p.set_defaults(fn=cmd_qsc)
    p = common("discrepancies", "printed-table cells that disagree with the exact distance", default="json")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(fn=cmd_discrepancies)

    p = sub.add_parser("verify", help="run the oracle-versus-formula suite")
    p.add_argument("--ledger", default=None, help="JSON list of known mismatch id patterns")
    p.add_argument("--output", default=None, help="also write the report to this file")
    p.add_argument("--format", choices=("table", "json"), default="table")
    p.add_argument("--jobs", type=int, default=1, help="worker processes for the sweeps")
    p.set_defaults(fn=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "jobs", 1) < 1:
        parser.error("--jobs must be at least 1")
    try:
        result = args.fn(args)
    except UsageError as exc:
        parser.error(str(exc))
    except (CodeError, ValueError, KeyError) as exc:
        err = {"error": type(exc).__name__, "message": str(exc.args[0]) if exc.args else str(exc)}
        sys.stderr.write(_dumps(err) + "\n")
        return 1
    code = 0
    if isinstance(result, tuple):
        result, code = result
    if isinstance(result, str):
        sys.stdout.write(result)
    else:
        sys.stdout.write(_render(result, args.format))
    return code


if __name__ == "__main__":
    sys.exit(main())
