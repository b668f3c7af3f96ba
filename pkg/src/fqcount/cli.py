"""Command-line front end.

Exit codes: 0 success, 1 usage or input validation, 2 computation failure.
All output is assembled first and printed once, so a nonzero exit never
leaves partial output behind; diagnostics go to stderr only.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import counts, indec, oracle, series
from .indec import HypothesisViolationError
from .qpoly import ComputationError

CACHE_VERSION = "v1"
FORMATS = ("text", "json", "latex")


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="fqcount", description="Exact polynomial counts over F_q.")
    sub = parser.add_subparsers(dest="command", required=True)

    p_irr = sub.add_parser("irr", help="irreducible count by total degree")
    p_irr.add_argument("--vars", type=int, required=True)
    p_irr.add_argument("--deg", type=int, required=True)
    p_irr.add_argument("--q", type=int)
    p_irr.add_argument("--format", choices=FORMATS, default="text")
    p_irr.add_argument("--cache")

    p_irrm = sub.add_parser("irr-multi", help="irreducible count by multidegree")
    p_irrm.add_argument("--deg", required=True, metavar="N1,N2,...")
    p_irrm.add_argument("--q", type=int)
    p_irrm.add_argument("--format", choices=FORMATS, default="text")

    p_ind = sub.add_parser("indec", help="indecomposable count by total degree")
    p_ind.add_argument("--vars", type=int, required=True)
    p_ind.add_argument("--deg", type=int, required=True)
    p_ind.add_argument("--q", type=int)
    p_ind.add_argument("--format", choices=FORMATS, default="text")

    p_apx = sub.add_parser("approx", help="first-order approximation with error exponent")
    p_apx.add_argument("kind", choices=("irr", "irr-multi", "indec"))
    p_apx.add_argument("--vars", type=int)
    p_apx.add_argument("--deg", required=True)
    p_apx.add_argument("--format", choices=FORMATS, default="text")

    p_ser = sub.add_parser("series", help="coefficients of the log counting series")
    p_ser.add_argument("--vars", type=int, required=True)
    p_ser.add_argument("--terms", type=int, required=True)
    p_ser.add_argument("--format", choices=FORMATS, default="text")
    p_ser.add_argument("--cache")

    p_ver = sub.add_parser("verify", help="exhaustive censuses against the formulas")
    p_ver.add_argument("--p", type=int, required=True)
    p_ver.add_argument("--vars", type=int, default=2)
    p_ver.add_argument("--max-deg", type=int, required=True)
    p_ver.add_argument("--mode", choices=("irr", "indec", "multi", "uni"), required=True)

    return parser


def _parse_multidegree(text: str):
    try:
        nbar = tuple(int(x) for x in text.split(","))
    except ValueError:
        raise _UsageError(f"bad multidegree {text!r}; expected N1,N2,...")
    if len(nbar) < 2:
        raise _UsageError("a multidegree needs at least two entries")
    if any(x < 0 for x in nbar) or not any(nbar):
        raise _UsageError("multidegree entries must be nonnegative and not all zero")
    return nbar


def _check_q(q0):
    if q0 is not None and q0 < 2:
        raise _UsageError("--q must be at least 2")


def _render_count(value, fmt, q0) -> str:
    if fmt == "json":
        obj = value.to_json_obj()
        if q0 is not None:
            obj["q"] = q0
            obj["value"] = str(value.evaluate(q0))
        return json.dumps(obj)
    lines = [value.latex() if fmt == "latex" else str(value)]
    if q0 is not None:
        lines.append(f"value at q={q0}: {value.evaluate(q0)}")
    return "\n".join(lines)


def _render_approx(apx: counts.Approximant, fmt) -> str:
    lead = apx.main_leading_terms()
    wrapped = apx.main.den_pow == 1
    if fmt == "json":
        obj = lead.to_json_obj()
        obj["den_pow_qminus1"] = apx.main.den_pow
        return json.dumps({"main": obj, "error_exponent": apx.error_exponent})
    if fmt == "latex":
        body = f"\\frac{{1}}{{q-1}}\\left({lead.latex()}\\right)" if wrapped else lead.latex()
    else:
        body = f"(1/(q-1))({lead})" if wrapped else str(lead)
    return f"main: {body}\nerror exponent: {apx.error_exponent}"


def _cmd_irr(args) -> str:
    if args.vars < 1 or args.deg < 1:
        raise _UsageError("need --vars >= 1 and --deg >= 1")
    _check_q(args.q)
    if args.vars == 1:
        # one variable has a closed form; no series is built
        value = counts.count_irreducible_univariate(args.deg)
        return _render_count(value, args.format, args.q)
    cached = _load_cached_series(args.cache, args.vars, args.deg)
    if cached is not None:
        value = counts.irreducible_from_log(cached, args.deg)
    else:
        value = counts.count_irreducible_degree(args.vars, args.deg)
        _store_cached_series(args.cache, args.vars, counts.log_count_series(args.vars, args.deg))
    return _render_count(value, args.format, args.q)


def _cmd_irr_multi(args) -> str:
    nbar = _parse_multidegree(args.deg)
    _check_q(args.q)
    value = counts.count_irreducible_multi(tuple(sorted(nbar, reverse=True)))
    return _render_count(value, args.format, args.q)


def _cmd_indec(args) -> str:
    if args.vars < 2:
        raise _UsageError("indecomposable counts need --vars >= 2")
    if args.deg < 1:
        raise _UsageError("need --deg >= 1")
    _check_q(args.q)
    value = indec.count_indecomposable(args.vars, args.deg)
    return _render_count(value, args.format, args.q)


def _cmd_approx(args) -> str:
    if args.kind == "irr-multi":
        nbar = _parse_multidegree(args.deg)
        apx = counts.approx_irreducible_multi(nbar)
        return _render_approx(apx, args.format)
    try:
        n = int(args.deg)
    except ValueError:
        raise _UsageError(f"bad degree {args.deg!r}")
    if args.vars is None:
        raise _UsageError(f"approx {args.kind} needs --vars")
    if args.kind == "irr":
        apx = counts.approx_irreducible(args.vars, n)
    else:
        apx = indec.approx_indecomposable(args.vars, n)
    return _render_approx(apx, args.format)


def _cmd_series(args) -> str:
    if args.vars < 2:
        raise _UsageError("one-variable counts use the closed form; no series to dump")
    if args.terms < 1:
        raise _UsageError("need --terms >= 1")
    L = _load_cached_series(args.cache, args.vars, args.terms)
    if L is None:
        L = counts.log_count_series(args.vars, args.terms)
        _store_cached_series(args.cache, args.vars, L)
    if args.format == "json":
        return json.dumps(L.to_json_obj())
    render = (lambda c: c.latex()) if args.format == "latex" else str
    return "\n".join(f"z^{m}: {render(L.coeff(m))}" for m in range(1, args.terms + 1))


def _cmd_verify(args):
    if args.p not in oracle.SUPPORTED_PRIMES:
        raise _UsageError(f"--p must be one of {oracle.SUPPORTED_PRIMES}")
    if args.vars != 2:
        raise _UsageError("censuses are implemented for --vars 2 only")
    if args.max_deg < 1:
        raise _UsageError("need --max-deg >= 1")
    p, limit = args.p, args.max_deg
    rows = []

    def row(label, degree, census_count, formula_count):
        ok = census_count == formula_count
        rows.append(
            f"{'PASS' if ok else 'FAIL'}  {label}  p={p} deg={degree}  "
            f"census={census_count} formula={formula_count}"
        )
        return ok

    all_ok = True
    if args.mode == "irr":
        for n in range(1, limit + 1):
            report = oracle.census_irreducible_monic(p, 2, n)
            formula = counts.count_irreducible_degree(2, n).evaluate(p)
            all_ok &= row("irr", n, report.classified["irreducible"], formula)
    elif args.mode == "indec":
        for n in range(1, limit + 1):
            report = oracle.census_indecomposable(p, 2, n)
            formula = indec.count_indecomposable(2, n).evaluate(p)
            all_ok &= row("indec", n, report.classified["indecomposable"], formula)
    elif args.mode == "multi":
        boxes = [
            (a, b)
            for a in range(1, limit + 1)
            for b in range(0, a + 1)
            if a + b <= limit
        ]
        for nbar in boxes:
            report = oracle.census_irreducible_multidegree(p, 2, nbar)
            formula = counts.count_irreducible_multi(nbar).evaluate(p)
            all_ok &= row("multi", f"{nbar[0]},{nbar[1]}", report.classified["irreducible"], formula)
    else:
        for n in range(1, limit + 1):
            report = oracle.census_irreducible_univariate(p, n)
            formula = counts.count_irreducible_univariate(n).evaluate(p)
            all_ok &= row("uni", n, report.classified["irreducible"], formula)
    return "\n".join(rows), 0 if all_ok else 2


def _load_cached_series(path, nu, trunc):
    """A cached log series for (nu, >= trunc), or None when unusable.

    A corrupt file warns on stderr and falls back to recomputation; a missing
    file or a different key is silently ignored.
    """
    if path is None:
        return None
    try:
        with open(path, encoding="utf-8") as fh:
            obj = json.load(fh)
        if obj.get("version") != CACHE_VERSION or obj.get("kind") != "log_series":
            return None
        if obj.get("nu") != nu or obj.get("trunc", 0) < trunc:
            return None
        full = series.ZSeries.from_json_obj(obj["series"])
    except FileNotFoundError:
        return None
    except Exception as exc:
        print(f"warning: ignoring unreadable cache {path}: {exc}", file=sys.stderr)
        return None
    if full.trunc == trunc:
        return full
    return series.ZSeries(full.coeffs[:trunc])


def _store_cached_series(path, nu, L):
    if path is None:
        return
    obj = {
        "version": CACHE_VERSION,
        "kind": "log_series",
        "nu": nu,
        "trunc": L.trunc,
        "series": L.to_json_obj(),
    }
    try:
        with open(path, "w", encoding="utf-8") as fh:
            json.dump(obj, fh)
    except OSError as exc:
        print(f"warning: could not write cache {path}: {exc}", file=sys.stderr)


_HANDLERS = {
    "irr": _cmd_irr,
    "irr-multi": _cmd_irr_multi,
    "indec": _cmd_indec,
    "approx": _cmd_approx,
    "series": _cmd_series,
    "verify": _cmd_verify,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        result = _HANDLERS[args.command](args)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except HypothesisViolationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except ComputationError as exc:
        print(f"computation error: {exc}", file=sys.stderr)
        return 2
    if isinstance(result, tuple):
        text, code = result
    else:
        text, code = result, 0
    if text:
        print(text)
    return code


def entry():
    sys.exit(main())


if __name__ == "__main__":
    entry()
