"""Text renderings of exact tables: aligned plain text, CSV and LaTeX."""
from __future__ import annotations

import csv
import io
from fractions import Fraction
from typing import Sequence

FORMATS = ("plain", "csv", "json", "latex")


def latex_rational(r) -> str:
    r = Fraction(r)
    if r.denominator == 1:
        return str(r.numerator)
    sign = "-" if r < 0 else ""
    return f"{sign}\\frac{{{abs(r.numerator)}}}{{{r.denominator}}}"


def plain_table(headers: Sequence[str], rows: Sequence[Sequence[str]]) -> str:
    cols = [list(map(str, col)) for col in zip(headers, *rows)] if rows else [[h] for h in headers]
    widths = [max(len(cell) for cell in col) for col in cols]
    lines = ["  ".join(h.rjust(w) for h, w in zip(headers, widths)).rstrip()]
    for row in rows:
        lines.append("  ".join(str(c).rjust(w) for c, w in zip(row, widths)).rstrip())
    return "\n".join(lines)


def csv_table(headers: Sequence[str], rows: Sequence[Sequence[str]]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(headers)
    writer.writerows(rows)
    return buf.getvalue().rstrip("\n")


def latex_table(headers: Sequence[str], rows: Sequence[Sequence[str]]) -> str:
    """``tabular`` with math-mode cells; cells are already LaTeX."""
    spec = "r" * len(headers)
    lines = [f"\\begin{{tabular}}{{{spec}}}", " & ".join(f"${h}$" for h in headers) + r" \\",
             r"\hline"]
    for row in rows:
        lines.append(" & ".join(f"${c}$" for c in row) + r" \\")
    lines.append(r"\end{tabular}")
    return "\n".join(lines)


def latex_matrix(m) -> str:
    lines = [r"\left(\begin{array}{" + "r" * len(m[0]) + "}"]
    for row in m:
        lines.append(" & ".join(repr(float(x)) for x in row) + r" \\")
    lines.append(r"\end{array}\right)")
    return "\n".join(lines)


def table(headers, rows, fmt: str, latex_rows=None) -> str:
    if fmt == "plain":
        return plain_table(headers, rows)
    if fmt == "csv":
        return csv_table(headers, rows)
    if fmt == "latex":
        return latex_table(headers, latex_rows if latex_rows is not None else rows)
    raise ValueError(f"table format {fmt!r} is not tabular")


def _signed_terms(terms: list[tuple[Fraction, str]], frac, empty: str = "0") -> str:
    """Join ``(coefficient, monomial)`` pairs into ``a + b x - c y``."""
    out = ""
    for coef, mono in terms:
        mag = abs(coef)
        if mono and mag == 1:
            body = mono
        elif mono:
            body = f"{frac(mag)} {mono}"
        else:
            body = frac(mag)
        if not out:
            out = ("-" if coef < 0 else "") + body
        else:
            out += (" - " if coef < 0 else " + ") + body
    return out or empty


def zpoly_plain(poly) -> str:
    terms = [(c, "" if k == 0 else ("z" if k == 1 else f"z^{k}")) for k, c in poly.items()]
    return _signed_terms(terms, lambda r: str(r))


def zpoly_latex(poly) -> str:
    terms = [(c, "" if k == 0 else ("z" if k == 1 else f"z^{{{k}}}")) for k, c in poly.items()]
    return _signed_terms(terms, latex_rational)


def binomial_symbol(n: int, k: int) -> str:
    return f"\\binom{{{n}}}{{{k}}}_{{\\mathcal{{R}},p,q}}"


def zpoly_latex_symbolic(n: int) -> str:
    parts = []
    for k in range(n + 1):
        mono = "" if k == 0 else (" z" if k == 1 else f" z^{{{k}}}")
        parts.append(binomial_symbol(n, k) + mono)
    return " + ".join(parts)


def cosine_latex(form: list[tuple[int, Fraction]]) -> str:
    terms = []
    for m, c in form:
        if m == 0:
            terms.append((c, ""))
        else:
            terms.append((2 * c, "\\cos\\theta" if m == 1 else f"\\cos {m}\\theta"))
    return _signed_terms(terms, latex_rational)
