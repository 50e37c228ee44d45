"""Continuous deformed Hermite polynomials as Laurent polynomials in u = e^{i theta}.

``H_n(cos theta) = u^n * H_n(z = u^-2)``, so the coefficient of ``u^(n-2k)``
is the deformed binomial ``[n k]``.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Mapping

from .deformations import IdentityReport, NumberFn, Params, Scheme, number_table
from .errors import NotPalindromic, ZeroPhi
from .exactnum import format_rational, parse_rational
from .rogers_szego import RsFamily, rs_direct


class UPoly:
    """Laurent polynomial in ``u`` whose exponents all share one parity."""

    __slots__ = ("parity", "_c")

    def __init__(self, parity: int, terms: Mapping[int, object] | None = None):
        self.parity = parity % 2
        clean = {}
        for m, c in (terms or {}).items():
            c = Fraction(c)
            if not c:
                continue
            if (m - self.parity) % 2:
                raise ValueError(f"exponent {m} has the wrong parity for {self.parity}")
            clean[int(m)] = c
        self._c = clean

    def coeff(self, m: int) -> Fraction:
        return self._c.get(m, Fraction(0))

    def coeffs(self) -> dict[int, Fraction]:
        return dict(self._c)

    def items(self):
        return sorted(self._c.items(), reverse=True)

    def is_palindromic(self) -> bool:
        return all(self._c.get(-m) == c for m, c in self._c.items())

    def __eq__(self, other):
        if not isinstance(other, UPoly):
            return NotImplemented
        return self._c == other._c and (self.parity == other.parity or not self._c)

    def __hash__(self):
        return hash((self.parity, frozenset(self._c.items())))

    def __add__(self, other: "UPoly") -> "UPoly":
        if self._c and other._c and self.parity != other.parity:
            raise ValueError("cannot add Laurent polynomials of different parity")
        out = dict(self._c)
        for m, c in other._c.items():
            out[m] = out.get(m, 0) + c
        return UPoly(self.parity if self._c else other.parity, out)

    def __neg__(self):
        return UPoly(self.parity, {m: -c for m, c in self._c.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, c):
        c = Fraction(c)
        return UPoly(self.parity, {m: v * c for m, v in self._c.items()})

    __rmul__ = __mul__

    def times_u(self, power: int) -> "UPoly":
        return UPoly(self.parity + power, {m + power: c for m, c in self._c.items()})

    def to_json(self) -> list:
        return [[m, format_rational(c)] for m, c in self.items()]

    @classmethod
    def from_json(cls, data, parity: int | None = None) -> "UPoly":
        terms = {int(m): parse_rational(c) for m, c in data}
        if parity is None:
            parity = next(iter(terms), 0) % 2
        return cls(parity, terms)

    def __repr__(self):
        body = " + ".join(f"{c}*u^{m}" for m, c in self.items()) or "0"
        return f"UPoly({body})"


def hermite_from_rs(s: Scheme, par: Params, n: int, family: RsFamily | None = None) -> UPoly:
    """Substitute ``z -> u^-2`` in ``H_n`` and multiply by ``u^n``."""
    poly = family[n] if family is not None else rs_direct(s, par, n)
    return UPoly(n, {n - 2 * k: c for k, c in poly.items()})


def hermite_recurrence_sequence(s: Scheme, par: Params, nmax: int,
                                numbers: NumberFn | None = None) -> list[UPoly]:
    """``[H_0, ..., H_nmax]`` via the Hermite three-term recurrence.

    A term ``c u^m`` of ``H_n`` (so ``m = n - 2k``) sends ``phi1^k c`` to
    ``u^(m+1)`` and ``phi2^(n-k) c`` to ``u^(m-1)``; ``phi3 [n] H_{n-1}`` is
    subtracted as is.  All powers are integers.
    """
    phi1, phi2, phi3 = s.phi_values(par)
    if phi1 == 0 or phi2 == 0:
        raise ZeroPhi(f"phi1 or phi2 vanishes at {par}")
    tab = number_table(s, par, numbers)
    seq = [UPoly(0, {0: 1})]
    prev = UPoly(1)
    for n in range(nmax):
        cur = seq[-1]
        out: dict[int, Fraction] = {}
        for m, c in cur.items():
            k = (n - m) // 2
            out[m + 1] = out.get(m + 1, 0) + phi1 ** k * c
            out[m - 1] = out.get(m - 1, 0) + phi2 ** (n - k) * c
        scale3 = phi3 * tab.number(n)
        for m, d in prev.items():
            out[m] = out.get(m, 0) - scale3 * d
        prev = cur
        seq.append(UPoly(n + 1, out))
    return seq


def hermite_recurrence(s: Scheme, par: Params, n: int, numbers: NumberFn | None = None) -> UPoly:
    return hermite_recurrence_sequence(s, par, n, numbers)[n]


def hermite_cosine_form(h: UPoly) -> list[tuple[int, Fraction]]:
    """Regroup ``u^m + u^-m`` into ``2cos(m theta)``: pairs ``(m, c_m)``, ``m >= 0`` descending.

    The polynomial equals ``sum_{m>0} c_m 2cos(m theta) + c_0``.
    """
    if not h.is_palindromic():
        raise NotPalindromic(f"{h!r} is not palindromic")
    return [(m, c) for m, c in h.items() if m >= 0]


def format_cosine_form(h: UPoly, theta: str = "θ") -> str:
    """Plain-text rendering, e.g. ``2cos2θ + 5/2``."""
    parts = []
    for m, c in hermite_cosine_form(h):
        if m == 0:
            coef, body = c, ""
        else:
            coef, body = 2 * c, f"cos{m if m != 1 else ''}{theta}"
        mag = abs(coef)
        if body and mag == 1:
            text = body
        elif body and mag.denominator != 1:
            text = f"({format_rational(mag)}){body}"
        else:
            text = f"{format_rational(mag)}{body}"
        parts.append(("-" if coef < 0 else "+", text))
    if not parts:
        return "0"
    sign, first = parts[0]
    out = ("-" if sign == "-" else "") + first
    for sign, text in parts[1:]:
        out += f" {sign} {text}"
    return out


def check_recurrence(s: Scheme, par: Params, nmax: int,
                     family: RsFamily | None = None) -> IdentityReport:
    """Hermite recurrence against the Rogers-Szego substitution, plus palindromy and parity."""
    family = family or RsFamily(s, par)
    rep = IdentityReport()
    rec = hermite_recurrence_sequence(s, par, nmax, family.number)
    for n in range(nmax + 1):
        direct = hermite_from_rs(s, par, n, family)
        rep.check_coeffs("Hermite recurrence = Rogers-Szego substitution",
                         rec[n].coeffs(), direct.coeffs(), n=n)
        rep.check("Hermite palindromic", int(rec[n].is_palindromic()), 1, n=n)
        rep.check("Hermite parity", rec[n].parity, n % 2, n=n)
    return rep


def check_q_limit(q, nmax: int) -> IdentityReport:
    """JS at p = 1 against ``(u + 1/u) H_n - (1 - q^n) H_{n-1}``."""
    q = Fraction(q)
    rec = hermite_recurrence_sequence(Scheme.js(), Params(1, q), nmax)
    rep = IdentityReport()
    prev, cur = UPoly(1), UPoly(0, {0: 1})
    rep.check_coeffs("q-Hermite H_0", rec[0].coeffs(), cur.coeffs(), n=0)
    for n in range(nmax):
        nxt = cur.times_u(1) + cur.times_u(-1) - (1 - q ** n) * prev
        prev, cur = cur, nxt
        rep.check_coeffs("q-Hermite 2cos(theta) H_n - (1-q^n) H_{n-1}",
                         rec[n + 1].coeffs(), cur.coeffs(), n=n + 1)
    return rep
