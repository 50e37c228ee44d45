"""Deformed Rogers-Szego polynomials, built directly and by three-term recurrence."""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .deformations import (
    IdentityReport,
    NumberFn,
    NumberTable,
    Params,
    Scheme,
    number_table,
)
from .errors import ZeroPhi
from .qcalculus import ZPoly, rpq_derivative, scale


class RsFamily:
    """H_0, H_1, ... for one scheme and parameter point, memoized.

    The cache is append-only; :meth:`perturbed` returns a separate family
    with one coefficient altered (for fault-injection tests).
    """

    def __init__(self, scheme: Scheme, params: Params, numbers: NumberFn | None = None):
        self.scheme = scheme
        self.params = params
        self.table: NumberTable = number_table(scheme, params, numbers)
        self._cache: list[ZPoly] = []
        self._overrides: dict[int, ZPoly] = {}

    def number(self, n: int) -> Fraction:
        return self.table.number(n)

    def __getitem__(self, n: int) -> ZPoly:
        if n < 0:
            return ZPoly()
        if n in self._overrides:
            return self._overrides[n]
        while len(self._cache) <= n:
            m = len(self._cache)
            self._cache.append(ZPoly({k: self.table.binomial(m, k) for k in range(m + 1)}))
        return self._cache[n]

    def perturbed(self, n: int, k: int, delta) -> "RsFamily":
        other = RsFamily(self.scheme, self.params)
        other.table = self.table
        other._overrides = dict(self._overrides)
        other._overrides[n] = self[n] + ZPoly.monomial(k, delta)
        return other


@lru_cache(maxsize=128)
def _family(s: Scheme, par: Params) -> RsFamily:
    return RsFamily(s, par)


def rs_direct(s: Scheme, par: Params, n: int) -> ZPoly:
    """``H_n(z) = sum_k [n k] z^k``."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return _family(s, par)[n]


def rs_recurrence_sequence(s: Scheme, par: Params, nmax: int,
                           numbers: NumberFn | None = None) -> list[ZPoly]:
    """``[H_0, ..., H_nmax]`` from the phi-driven three-term recurrence."""
    phi1, phi2, phi3 = s.phi_values(par)
    if phi2 == 0:
        raise ZeroPhi(f"phi2(p,q) = 0 at {par}")
    tab = number_table(s, par, numbers)
    seq = [ZPoly.one()]
    prev = ZPoly()
    for n in range(nmax):
        cur = seq[-1]
        nxt = (scale(cur, phi1)
               + (phi2 ** n * scale(cur, 1 / phi2)).times_z()
               - (phi3 * tab.number(n) * prev).times_z())
        prev = cur
        seq.append(nxt)
    return seq


def rs_recurrence(s: Scheme, par: Params, n: int, numbers: NumberFn | None = None) -> ZPoly:
    return rs_recurrence_sequence(s, par, n, numbers)[n]


def check_recurrence(s: Scheme, par: Params, nmax: int, family: RsFamily | None = None) -> IdentityReport:
    """Direct definition against the recurrence, exactly, for ``n <= nmax``."""
    family = family or RsFamily(s, par)
    rep = IdentityReport()
    rec = rs_recurrence_sequence(s, par, nmax, family.number)
    for n in range(nmax + 1):
        rep.check_coeffs("H_n direct = H_n recurrence", family[n].coeffs(), rec[n].coeffs(), n=n)
    return rep


def rs_difference_check(s: Scheme, par: Params, nmax: int,
                        family: RsFamily | None = None) -> IdentityReport:
    """``d_R H_n = [n] H_{n-1}`` for ``0 <= n <= nmax``."""
    family = family or RsFamily(s, par)
    rep = IdentityReport()
    for n in range(nmax + 1):
        lhs = rpq_derivative(family[n], s, par, numbers=family.number)
        rhs = family.number(n) * family[n - 1]
        rep.check_coeffs("d_R H_n = [n] H_{n-1}", lhs.coeffs(), rhs.coeffs(), n=n)
    return rep


def check_nilpotency(s: Scheme, par: Params, nmax: int) -> IdentityReport:
    """``d_R^(n+1) H_n = 0`` while ``d_R^m H_n != 0`` for ``m <= n``."""
    family = _family(s, par)
    rep = IdentityReport()
    for n in range(nmax + 1):
        f = family[n]
        for m in range(1, n + 2):
            f = rpq_derivative(f, s, par)
            if m <= n:
                rep.check("d_R^m H_n != 0", int(f.is_zero()), 0, n=n, m=m)
        rep.check("d_R^(n+1) H_n = 0", int(f.is_zero()), 1, n=n, m=n + 1)
    return rep


def check_q_limit(q, nmax: int) -> IdentityReport:
    """JS recurrence at p = 1 against ``(1+z)H_n - z(1-q^n)H_{n-1}``."""
    q = Fraction(q)
    rec = rs_recurrence_sequence(Scheme.js(), Params(1, q), nmax)
    one_plus_z = ZPoly({0: 1, 1: 1})
    rep = IdentityReport()
    prev, cur = ZPoly(), ZPoly.one()
    rep.check_coeffs("q-limit H_0", rec[0].coeffs(), cur.coeffs(), n=0)
    for n in range(nmax):
        nxt = one_plus_z * cur - ((1 - q ** n) * prev).times_z()
        prev, cur = cur, nxt
        rep.check_coeffs("q-limit (1+z)H_n - z(1-q^n)H_{n-1}", rec[n + 1].coeffs(),
                         cur.coeffs(), n=n + 1)
    return rep
