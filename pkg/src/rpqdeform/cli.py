"""Command-line front end: tables, polynomials and verification suites.

    $ rpqdeform rs --scheme js -p 2 -q 1/2 -n 2 --format json
    $ rpqdeform verify --scheme quesne -p 2 -q 3 --nmax 10
"""
from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction

from . import render
from .deformations import (
    Kind,
    Params,
    Scheme,
    domain_violations,
    load_scheme_document,
    number_table,
    verify_binomial_identities,
    verify_number_identities,
    verify_reductions,
    verify_theorem_premises,
)
from .errors import DomainError, RpqError
from .exactnum import format_rational, parse_rational
from .hermite import check_recurrence as check_hermite
from .hermite import format_cosine_form, hermite_cosine_form, hermite_from_rs
from .oscillator import LadderAction, check_general_algebra, check_scheme_algebra, matrix_rep
from .rogers_szego import RsFamily, check_recurrence, rs_difference_check, rs_direct

DEFAULT_SAMPLE_POINTS = (("2", "1/2"), ("3", "2"), ("2", "1/3"), ("5/2", "3/2"), ("7", "1/5"))
MATRIX_TOLERANCE = 1e-10


class ConfigError(Exception):
    """Bad command-line configuration; reported with exit status 2."""


def _rational_arg(text: str) -> Fraction:
    try:
        return parse_rational(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


def _nonneg(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError("must be nonnegative")
    return value


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--scheme", default="js",
                        help="js, cj, quesne, hk or custom (custom needs --scheme-file)")
    common.add_argument("--mu", type=int, default=0, help="HK exponent mu")
    common.add_argument("--nu", type=int, default=0, help="HK exponent nu")
    common.add_argument("--scheme-file", help="JSON scheme document (overrides --scheme)")
    common.add_argument("-p", type=_rational_arg, help="parameter p as a or a/b")
    common.add_argument("-q", type=_rational_arg, help="parameter q as a or a/b")
    common.add_argument("--format", default="plain", choices=render.FORMATS)
    common.add_argument("--strict-domain", action="store_true",
                        help="treat violations of the positivity domain as errors")

    parser = argparse.ArgumentParser(prog="rpqdeform",
                                     description="Exact tables and identity checks for "
                                                 "(R,p,q)-deformed numbers and polynomials.")
    sub = parser.add_subparsers(dest="command", required=True)

    for name, help_text in (("numbers", "deformed numbers [n]"),
                            ("binomials", "deformed binomial triangle"),
                            ("rs", "Rogers-Szego polynomials H_n(z)"),
                            ("hermite", "continuous Hermite polynomials in cosine form")):
        cmd = sub.add_parser(name, parents=[common], help=help_text)
        cmd.add_argument("-n", type=_nonneg, help="show only this index")
        cmd.add_argument("--nmax", type=_nonneg, default=10)
        if name == "rs":
            cmd.add_argument("--symbolic", action="store_true",
                             help="LaTeX with binomial symbols instead of values")

    verify = sub.add_parser("verify", parents=[common], help="run every identity suite")
    verify.add_argument("--nmax", type=_nonneg, default=10)
    verify.add_argument("--sample-points", help="JSON list of [p, q] pairs")
    verify.add_argument("--parallel", action="store_true",
                        help="one process per sample point, merged in order")

    algebra = sub.add_parser("algebra", parents=[common], help="ladder operator algebra checks")
    algebra.add_argument("--nmax", type=_nonneg, default=10)

    matrix = sub.add_parser("matrix", parents=[common], help="truncated float matrix representation")
    matrix.add_argument("--cutoff", type=int, default=16)
    matrix.add_argument("--which", choices=("A", "Adag", "N"), default="A",
                        help="matrix written by csv/latex output")
    return parser


def resolve_scheme(args) -> tuple[Scheme, Params | None]:
    par = None
    if args.scheme_file:
        try:
            with open(args.scheme_file, encoding="utf-8") as fh:
                doc = json.load(fh)
        except (OSError, json.JSONDecodeError) as exc:
            raise ConfigError(f"cannot read scheme file: {exc}") from exc
        scheme, par = load_scheme_document(doc)
    else:
        kind = Kind.parse(args.scheme)
        if kind is Kind.JS:
            scheme = Scheme.js()
        elif kind is Kind.CJ:
            scheme = Scheme.cj()
        elif kind is Kind.QUESNE:
            scheme = Scheme.quesne()
        elif kind is Kind.HK:
            scheme = Scheme.hk(args.mu, args.nu)
        else:
            raise ConfigError("a custom scheme needs --scheme-file")
    if args.p is not None or args.q is not None:
        if args.p is None or args.q is None:
            raise ConfigError("give both -p and -q")
        par = Params(args.p, args.q)
    return scheme, par


def _require_params(par):
    if par is None:
        raise ConfigError("-p and -q are required")
    return par


def _check_domain(scheme, par, strict, nmax):
    for msg in domain_violations(scheme, par, nmax):
        if strict:
            raise DomainError(msg)
        print(f"warning: {msg}", file=sys.stderr)


def _indices(args):
    return [args.n] if args.n is not None else list(range(args.nmax + 1))


def _header(scheme, par) -> dict:
    return {"scheme": scheme.to_json(), **par.to_json()}


def cmd_numbers(args, scheme, par) -> tuple[str, int]:
    tab = number_table(scheme, par)
    ns = _indices(args)
    vals = [tab.number(n) for n in ns]
    if args.format == "json":
        payload = {**_header(scheme, par),
                   "numbers": [{"n": n, "value": format_rational(v)} for n, v in zip(ns, vals)]}
        return json.dumps(payload, indent=2), 0
    rows = [[str(n), format_rational(v)] for n, v in zip(ns, vals)]
    latex_rows = [[str(n), render.latex_rational(v)] for n, v in zip(ns, vals)]
    return render.table(["n", "[n]"], rows, args.format, latex_rows), 0


def cmd_binomials(args, scheme, par) -> tuple[str, int]:
    tab = number_table(scheme, par)
    ns = _indices(args)
    tri = {n: [tab.binomial(n, k) for k in range(n + 1)] for n in ns}
    if args.format == "json":
        payload = {**_header(scheme, par),
                   "binomials": [{"n": n, "row": [format_rational(v) for v in tri[n]]} for n in ns]}
        return json.dumps(payload, indent=2), 0
    if args.format == "plain":
        return "\n".join(f"{n}: " + "  ".join(format_rational(v) for v in tri[n]) for n in ns), 0
    rows = [[str(n), str(k), format_rational(v)] for n in ns for k, v in enumerate(tri[n])]
    latex_rows = [[str(n), str(k), render.latex_rational(v)]
                  for n in ns for k, v in enumerate(tri[n])]
    return render.table(["n", "k", "binomial"], rows, args.format, latex_rows), 0


def cmd_rs(args, scheme, par) -> tuple[str, int]:
    ns = _indices(args)
    polys = {n: rs_direct(scheme, par, n) for n in ns}
    if args.format == "json":
        items = [{"n": n, "coefficients": [format_rational(c) for c in polys[n].dense()]}
                 for n in ns]
        payload = {**_header(scheme, par), **(items[0] if args.n is not None else {"polynomials": items})}
        return json.dumps(payload, indent=2), 0
    if args.format == "latex":
        body = render.zpoly_latex_symbolic if args.symbolic else (lambda n: render.zpoly_latex(polys[n]))
        return "\n".join(f"H_{{{n}}}(z) = {body(n)}" for n in ns), 0
    if args.format == "plain":
        return "\n".join(f"H_{n}(z) = {render.zpoly_plain(polys[n])}" for n in ns), 0
    rows = [[str(n), str(k), format_rational(c)] for n in ns for k, c in enumerate(polys[n].dense())]
    return render.table(["n", "k", "coefficient"], rows, "csv"), 0


def cmd_hermite(args, scheme, par) -> tuple[str, int]:
    ns = _indices(args)
    family = RsFamily(scheme, par)
    polys = {n: hermite_from_rs(scheme, par, n, family) for n in ns}
    if args.format == "json":
        items = [{"n": n, "terms": polys[n].to_json(),
                  "cosine": [[m, format_rational(c)] for m, c in hermite_cosine_form(polys[n])]}
                 for n in ns]
        payload = {**_header(scheme, par), **(items[0] if args.n is not None else {"polynomials": items})}
        return json.dumps(payload, indent=2), 0
    if args.format == "plain":
        if args.n is not None:
            return format_cosine_form(polys[args.n]), 0
        return "\n".join(f"H_{n}(cos θ) = {format_cosine_form(polys[n])}" for n in ns), 0
    if args.format == "latex":
        return "\n".join(f"\\mathbb{{H}}_{{{n}}}(\\cos\\theta) = "
                         f"{render.cosine_latex(hermite_cosine_form(polys[n]))}" for n in ns), 0
    rows = [[str(n), str(m), format_rational(c)]
            for n in ns for m, c in hermite_cosine_form(polys[n])]
    return render.table(["n", "m", "cos_coefficient"], rows, "csv"), 0


def run_suites(scheme: Scheme, par: Params, nmax: int) -> dict[str, dict]:
    """Every applicable suite at one point, in a fixed order.

    A suite that raises is recorded with an ``error`` entry and counts as failed.
    """
    family = RsFamily(scheme, par)
    builtin = scheme.is_builtin
    suites = []
    if builtin:
        suites += [("numbers", lambda: verify_number_identities(scheme, par, nmax)),
                   ("binomials", lambda: verify_binomial_identities(scheme, par, nmax)),
                   ("reductions", lambda: verify_reductions(par, nmax))]
    suites += [("premises", lambda: verify_theorem_premises(scheme, par, nmax)),
               ("rogers_szego", lambda: check_recurrence(scheme, par, nmax, family)),
               ("difference", lambda: rs_difference_check(scheme, par, nmax, family)),
               ("hermite", lambda: check_hermite(scheme, par, nmax, family)),
               ("general_algebra",
                lambda: check_general_algebra(LadderAction(scheme, par, family), nmax))]
    if builtin:
        suites.append(("scheme_algebra",
                       lambda: check_scheme_algebra(LadderAction(scheme, par, family), nmax)))
    out = {}
    for name, fn in suites:
        try:
            out[name] = fn().to_json()
        except RpqError as exc:
            out[name] = {"checked": 0, "failures": [], "error": f"{type(exc).__name__}: {exc}"}
    return out


def _describe(f: dict) -> str:
    where = " ".join(f"{key}={f[key]}" for key in ("n", "m", "k") if f[key] is not None)
    return f"{f['identity']} {where} lhs={f['lhs']} rhs={f['rhs']}".replace("  ", " ")


def _suite_ok(result: dict) -> bool:
    return not result["failures"] and "error" not in result


def _verify_point(job):
    scheme_doc, p, q, nmax = job
    scheme = Scheme.from_json(scheme_doc)
    par = Params(p, q)
    return {**par.to_json(), "domain_warnings": domain_violations(scheme, par, nmax),
            "suites": run_suites(scheme, par, nmax)}


def _load_points(path: str) -> list[Params]:
    try:
        with open(path, encoding="utf-8") as fh:
            data = json.load(fh)
        return [Params(parse_rational(p), parse_rational(q)) for p, q in data]
    except (OSError, json.JSONDecodeError, TypeError, ValueError) as exc:
        raise ConfigError(f"bad sample-points file: {exc}") from exc


def cmd_verify(args, scheme, par) -> tuple[str, int]:
    if args.sample_points:
        points = _load_points(args.sample_points)
    elif par is not None:
        points = [par]
    else:
        points = [Params(p, q) for p, q in DEFAULT_SAMPLE_POINTS]
    for pt in points:
        _check_domain(scheme, pt, args.strict_domain, args.nmax)
    jobs = [(scheme.to_json(), pt.p, pt.q, args.nmax) for pt in points]
    if args.parallel and len(jobs) > 1:
        with ProcessPoolExecutor() as pool:
            results = list(pool.map(_verify_point, jobs))
    else:
        results = [_verify_point(job) for job in jobs]
    ok = all(_suite_ok(r) for res in results for r in res["suites"].values())
    if args.format == "json":
        payload = {"scheme": scheme.to_json(), "nmax": args.nmax, "ok": ok, "points": results}
        return json.dumps(payload, indent=2), 0 if ok else 1
    rows = []
    for res in results:
        for name, r in res["suites"].items():
            status = "error" if "error" in r else ("ok" if not r["failures"] else "FAIL")
            rows.append([res["p"], res["q"], name, str(r["checked"]), str(len(r["failures"])), status])
    headers = ["p", "q", "suite", "checked", "failed", "status"]
    if args.format == "latex":
        text = render.table(headers, [[c.replace("_", r"\_") for c in row] for row in rows], "latex")
    else:
        text = render.table(headers, rows, args.format)
    if args.format == "plain":
        details = []
        for res in results:
            for name, r in res["suites"].items():
                if "error" in r:
                    details.append(f"  p={res['p']} q={res['q']} {name}: {r['error']}")
                for f in r["failures"][:5]:
                    details.append(f"  p={res['p']} q={res['q']} {name}: {_describe(f)}")
        text += "\n" + ("all checks passed" if ok else "failures:\n" + "\n".join(details))
    return text, 0 if ok else 1


def cmd_algebra(args, scheme, par) -> tuple[str, int]:
    act = LadderAction(scheme, par)
    reports = {"general_algebra": check_general_algebra(act, args.nmax)}
    if scheme.is_builtin:
        reports["scheme_algebra"] = check_scheme_algebra(act, args.nmax)
    ok = all(r.ok for r in reports.values())
    if args.format == "json":
        payload = {**_header(scheme, par), "nmax": args.nmax, "ok": ok,
                   "suites": {k: r.to_json() for k, r in reports.items()}}
        return json.dumps(payload, indent=2), 0 if ok else 1
    rows = [[name.replace("_", r"\_") if args.format == "latex" else name, str(r.checked),
             str(len(r.failures))] for name, r in reports.items()]
    text = render.table(["suite", "checked", "failed"], rows, args.format)
    if args.format == "plain":
        bad = [f for r in reports.values() for f in r.failures]
        text += "\n" + ("all checks passed" if ok else "\n".join(
            "  " + _describe(f.to_json()) for f in bad[:10]))
    return text, 0 if ok else 1


def cmd_matrix(args, scheme, par) -> tuple[str, int]:
    rep = matrix_rep(scheme, par, args.cutoff)
    ok = all(v <= MATRIX_TOLERANCE for v in rep.relative_residuals.values())
    status = 0 if ok else 1
    chosen = {"A": rep.A, "Adag": rep.Adag, "N": rep.N}[args.which]
    if args.format == "json":
        return json.dumps({**_header(scheme, par), **rep.to_json(), "ok": ok}, indent=2), status
    if args.format == "csv":
        rows = [[repr(float(x)) for x in row] for row in chosen]
        return render.csv_table([f"c{j}" for j in range(rep.dimension)], rows), status
    if args.format == "latex":
        return render.latex_matrix(chosen), status
    lines = [f"dimension {rep.dimension}"]
    lines += [f"{name}: {value:.3e} (relative {rep.relative_residuals[name]:.3e})"
              for name, value in rep.residuals.items()]
    return "\n".join(lines), status


COMMANDS = {
    "numbers": cmd_numbers,
    "binomials": cmd_binomials,
    "rs": cmd_rs,
    "hermite": cmd_hermite,
    "verify": cmd_verify,
    "algebra": cmd_algebra,
    "matrix": cmd_matrix,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        scheme, par = resolve_scheme(args)
        if args.command != "verify":
            par = _require_params(par)
            _check_domain(scheme, par, args.strict_domain, getattr(args, "nmax", 10))
        text, status = COMMANDS[args.command](args, scheme, par)
    except (ConfigError, RpqError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    print(text)
    return status


if __name__ == "__main__":
    sys.exit(main())
