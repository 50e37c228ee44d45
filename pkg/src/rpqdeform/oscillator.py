"""Ladder operators on the Rogers-Szego basis and their algebra.

The number operator is diagonal on ``H_n`` (eigenvalue ``n``), so ``N`` and
``phi2^N`` act on an arbitrary polynomial through its expansion in that
basis.  The expansion is exact and triangular because every ``H_n`` is monic
of degree ``n``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

import numpy as np

from .deformations import IdentityReport, Kind, Params, Scheme, hk_base
from .errors import NonPositiveSpectrum, UnsupportedScheme, ZeroPhi
from .qcalculus import ZPoly, rpq_derivative, scale
from .rogers_szego import RsFamily

LADDERS = ("A", "Adag", "N")


class LadderAction:
    """``A``, ``A†`` and ``N`` realized as exact operators on ``ZPoly``."""

    def __init__(self, scheme: Scheme, params: Params, basis: RsFamily | None = None):
        self.scheme = scheme
        self.params = params
        self.basis = basis or RsFamily(scheme, params)
        self.phi1, self.phi2, self.phi3 = scheme.phi_values(params)

    def number(self, n: int) -> Fraction:
        return self.basis.number(n)

    def expand(self, f: ZPoly) -> dict[int, Fraction]:
        """Coordinates of ``f`` in the basis ``H_0, H_1, ...``."""
        out: dict[int, Fraction] = {}
        while f:
            d = f.degree
            lead = f.coeff(d) / self.basis[d].coeff(d)
            out[d] = lead
            f = f - lead * self.basis[d]
        return out

    def _combine(self, coords: dict[int, Fraction], weight: Callable[[int], Fraction]) -> ZPoly:
        total = ZPoly()
        for n, c in coords.items():
            total = total + (c * weight(n)) * self.basis[n]
        return total

    def lower(self, f: ZPoly) -> ZPoly:
        return rpq_derivative(f, self.scheme, self.params, numbers=self.number)

    def raise_(self, f: ZPoly) -> ZPoly:
        """``phi1(P,Q) f + z phi2^{-1}(P,Q) phi2^N f - z phi3 d_R f``."""
        if self.phi2 == 0:
            raise ZeroPhi(f"phi2(p,q) = 0 at {self.params}")
        weighted = self._combine(self.expand(f), lambda n: self.phi2 ** n)
        return (scale(f, self.phi1)
                + scale(weighted, 1 / self.phi2).times_z()
                - (self.phi3 * self.lower(f)).times_z())

    def count(self, f: ZPoly) -> ZPoly:
        return self._combine(self.expand(f), Fraction)

    def apply(self, which: str, f: ZPoly) -> ZPoly:
        if which == "A":
            return self.lower(f)
        if which == "Adag":
            return self.raise_(f)
        if which == "N":
            return self.count(f)
        raise ValueError(f"unknown ladder operator {which!r}; expected one of {LADDERS}")


def apply_ladder(act: LadderAction, which: str, n: int) -> ZPoly:
    """Image of ``H_n`` under ``A``, ``Adag`` or ``N``."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return act.apply(which, act.basis[n])


def check_general_algebra(act: LadderAction, nmax: int) -> IdentityReport:
    """``AA† = [N+1]``, ``A†A = [N]``, ``[N,A] = -A``, ``[N,A†] = A†`` on ``H_n``."""
    rep = IdentityReport()
    for n in range(nmax + 1):
        h = act.basis[n]
        up, down = act.raise_(h), act.lower(h)
        rep.check_coeffs("A A+ H_n = [n+1] H_n", act.lower(up).coeffs(),
                         (act.number(n + 1) * h).coeffs(), n=n)
        rep.check_coeffs("A+ A H_n = [n] H_n", act.raise_(down).coeffs(),
                         (act.number(n) * h).coeffs(), n=n)
        rep.check_coeffs("(N A - A N) H_n = -A H_n",
                         (act.count(down) - act.lower(act.count(h))).coeffs(),
                         (-down).coeffs(), n=n)
        rep.check_coeffs("(N A+ - A+ N) H_n = A+ H_n",
                         (act.count(up) - act.raise_(act.count(h))).coeffs(),
                         up.coeffs(), n=n)
    return rep


# Each relation reads  alpha * A A+ - beta * A+ A = f(N)
Relation = tuple[str, Fraction, Fraction, Callable[[int], Fraction]]


def scheme_relations(s: Scheme, par: Params) -> list[Relation]:
    p, q = par.p, par.q
    if s.kind is Kind.JS:
        return [("A A+ - p A+ A = q^N", Fraction(1), p, lambda n: q ** n),
                ("A A+ - q A+ A = p^N", Fraction(1), q, lambda n: p ** n)]
    if s.kind is Kind.CJ:
        return [("A A+ - p^-1 A+ A = q^N", Fraction(1), 1 / p, lambda n: q ** n),
                ("A A+ - q A+ A = p^-N", Fraction(1), q, lambda n: p ** -n)]
    if s.kind is Kind.QUESNE:
        return [("p^-1 A A+ - A+ A = q^(-N-1)", 1 / p, Fraction(1), lambda n: q ** (-n - 1)),
                ("q A A+ - A+ A = p^(N+1)", q, Fraction(1), lambda n: p ** (n + 1))]
    if s.kind is Kind.HK:
        a, h = hk_base(s, par), s.h_value(par)
        return [("p^-1 A A+ - a A+ A = h (a/q)^(N+1)", 1 / p, a,
                 lambda n: h * (a / q) ** (n + 1)),
                ("q A A+ - a A+ A = h (p a)^(N+1)", q, a,
                 lambda n: h * (p * a) ** (n + 1))]
    raise UnsupportedScheme(f"no specific oscillator algebra for {s.name}")


def check_scheme_algebra(act: LadderAction, nmax: int) -> IdentityReport:
    """The scheme's pair of q-commutator relations, applied to ``H_n`` for ``n <= nmax``.

    Both sides are computed operationally; ``f(N) H_n`` is ``f(n) H_n``.
    """
    relations = scheme_relations(act.scheme, act.params)
    rep = IdentityReport()
    for n in range(nmax + 1):
        h = act.basis[n]
        aad = act.lower(act.raise_(h))
        ada = act.raise_(act.lower(h))
        for label, alpha, beta, f in relations:
            rep.check_coeffs(label, (alpha * aad - beta * ada).coeffs(), (f(n) * h).coeffs(), n=n)
    return rep


@dataclass
class FloatMatrixRep:
    dimension: int
    A: np.ndarray
    Adag: np.ndarray
    N: np.ndarray
    numbers: list[Fraction]
    residuals: dict[str, float]
    relative_residuals: dict[str, float]

    def to_json(self) -> dict:
        return {
            "dimension": self.dimension,
            "A": self.A.tolist(),
            "Adag": self.Adag.tolist(),
            "N": self.N.tolist(),
            "residuals": dict(self.residuals),
            "relative_residuals": dict(self.relative_residuals),
        }


def _max_abs(m: np.ndarray) -> float:
    return float(np.max(np.abs(m))) if m.size else 0.0


def matrix_rep(s: Scheme, par: Params, cutoff: int, numbers=None) -> FloatMatrixRep:
    """Truncated Fock-space matrices in the normalized basis.

    Residuals are max-norms; ``A A+ - [N+1]`` leaves out the last row and
    column, where truncation makes it wrong by construction.  Relative
    residuals divide by the largest entry of the target (at least 1), so
    they stay at rounding level however fast ``[n]`` grows.  Commutators
    with ``N`` use the integer differences ``i - j`` entrywise and are exact.
    """
    if cutoff < 2:
        raise ValueError("cutoff must be at least 2")
    basis = RsFamily(s, par, numbers)
    vals = [basis.number(n) for n in range(cutoff + 1)]
    bad = [n for n in range(1, cutoff + 1) if vals[n] <= 0]
    if bad:
        raise NonPositiveSpectrum(f"[n] <= 0 for n in {bad} at {par}")
    a = np.zeros((cutoff, cutoff))
    for n in range(1, cutoff):
        a[n - 1, n] = math.sqrt(vals[n])
    adag = a.T.copy()
    levels = np.arange(cutoff)
    nop = np.diag(levels.astype(float))
    gap = (levels[:, None] - levels[None, :]).astype(float)
    shifted = np.diag([float(vals[n + 1]) for n in range(cutoff)])
    plain = np.diag([float(vals[n]) for n in range(cutoff)])
    inner = slice(0, cutoff - 1)
    pairs = {
        "A Adag - [N+1]": ((a @ adag)[inner, inner], shifted[inner, inner]),
        "Adag A - [N]": (adag @ a, plain),
        "[N,A] + A": (gap * a, -a),
        "[N,Adag] - Adag": (gap * adag, adag),
    }
    residuals = {k: _max_abs(lhs - rhs) for k, (lhs, rhs) in pairs.items()}
    relative = {k: residuals[k] / max(1.0, _max_abs(rhs)) for k, (_, rhs) in pairs.items()}
    return FloatMatrixRep(cutoff, a, adag, nop, vals[:cutoff], residuals, relative)
