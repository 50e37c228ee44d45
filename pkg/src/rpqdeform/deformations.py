"""Deformation schemes, deformed numbers/factorials/binomials and their identities.

Built-in schemes compute ``[n]`` from removable-singularity-free Laurent
sums in ``p, q``; the scheme's ``R(x, y)`` is kept as an exact rational
function and used as an independent cross-check wherever it is defined.
"""
from __future__ import annotations

import enum
import json
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Iterable, Optional

from .errors import (
    MissingPhiTriple,
    NegativeArgument,
    OutOfRange,
    SchemeError,
    SingularParameters,
    UnsupportedScheme,
    ZeroDenominator,
)
from .exactnum import (
    X,
    Y,
    LaurentPoly2,
    RationalFunction2,
    evaluate,
    format_rational,
    parse_rational,
)

NumberFn = Callable[[int], Fraction]

# (a, b) pairs used to probe the shifted-factorial expansion
SHIFTED_FACTORIAL_PROBES = ((Fraction(1), Fraction(1)), (Fraction(2), Fraction(1)),
                            (Fraction(-1, 3), Fraction(5, 2)))


@dataclass(frozen=True)
class Params:
    p: Fraction
    q: Fraction

    def __post_init__(self):
        object.__setattr__(self, "p", parse_rational(self.p))
        object.__setattr__(self, "q", parse_rational(self.q))
        if self.p <= 0 or self.q <= 0:
            raise ValueError(f"p and q must be positive, got p={self.p}, q={self.q}")

    def __str__(self):
        return f"(p={format_rational(self.p)}, q={format_rational(self.q)})"

    def to_json(self) -> dict:
        return {"p": format_rational(self.p), "q": format_rational(self.q)}


class Kind(str, enum.Enum):
    JS = "JS"
    CJ = "CJ"
    QUESNE = "Quesne"
    HK = "HK"
    CUSTOM = "CustomR"

    @classmethod
    def parse(cls, text: str) -> "Kind":
        for kind in cls:
            if kind.value.lower() == text.lower() or kind.name.lower() == text.lower():
                return kind
        if text.lower() == "custom":
            return cls.CUSTOM
        raise SchemeError(f"unknown scheme kind {text!r}")


PhiTriple = tuple[RationalFunction2, RationalFunction2, RationalFunction2]


@dataclass(frozen=True, eq=False)
class Scheme:
    """A deformation scheme.  Use the ``js``/``cj``/``quesne``/``hk``/``custom`` constructors."""

    kind: Kind
    mu: int = 0
    nu: int = 0
    h: Optional[RationalFunction2] = None
    custom_r: Optional[RationalFunction2] = None
    custom_phi: Optional[PhiTriple] = None

    @classmethod
    def js(cls) -> "Scheme":
        return cls(Kind.JS)

    @classmethod
    def cj(cls) -> "Scheme":
        return cls(Kind.CJ)

    @classmethod
    def quesne(cls) -> "Scheme":
        return cls(Kind.QUESNE)

    @classmethod
    def hk(cls, mu: int = 0, nu: int = 0, h: RationalFunction2 | None = None) -> "Scheme":
        h = RationalFunction2.const(1) if h is None else h
        try:
            h11 = evaluate(h, 1, 1)
        except ZeroDenominator as exc:
            raise SchemeError("h(p,q) is not defined at (1,1)") from exc
        if h11 != 1:
            raise SchemeError(f"h(1,1) must equal 1, got {h11}")
        return cls(Kind.HK, mu=int(mu), nu=int(nu), h=h)

    @classmethod
    def custom(cls, r: RationalFunction2, phi: Iterable[RationalFunction2] | None = None) -> "Scheme":
        try:
            r11 = evaluate(r, 1, 1)
        except ZeroDenominator as exc:
            raise SchemeError("R(x,y) is not defined at (1,1)") from exc
        if r11 != 0:
            raise SchemeError(f"R(1,1) must vanish, got {r11}")
        triple = None
        if phi is not None:
            triple = tuple(phi)
            if len(triple) != 3:
                raise SchemeError("phi triple must have exactly three entries")
        return cls(Kind.CUSTOM, custom_r=r, custom_phi=triple)

    @property
    def name(self) -> str:
        if self.kind is Kind.HK:
            return f"HK(mu={self.mu},nu={self.nu})"
        return self.kind.value

    @property
    def is_builtin(self) -> bool:
        return self.kind is not Kind.CUSTOM

    def h_value(self, par: Params) -> Fraction:
        try:
            return evaluate(self.h, par.p, par.q)
        except ZeroDenominator as exc:
            raise SingularParameters(f"h is singular at {par}") from exc

    def R(self, par: Params) -> RationalFunction2:
        """The deformation function with the parameters substituted."""
        p, q = par.p, par.q
        if self.kind is Kind.CUSTOM:
            return self.custom_r
        try:
            if self.kind is Kind.JS:
                return RationalFunction2(X - Y, LaurentPoly2.const(p - q))
            if self.kind is Kind.CJ:
                return RationalFunction2(1 - X * Y, (1 / p - q) * X)
            quesne = RationalFunction2(X * Y - 1, (q - 1 / p) * Y)
            if self.kind is Kind.QUESNE:
                return quesne
            prefactor = RationalFunction2(self.h_value(par) * Y ** self.nu * X ** (-self.mu))
            return prefactor * quesne
        except ZeroDenominator as exc:
            raise SingularParameters(f"R of {self.name} is singular at {par}") from exc

    def phi_triple(self) -> PhiTriple:
        x, y = RationalFunction2(X), RationalFunction2(Y)
        xinv = RationalFunction2(X ** -1)
        if self.kind is Kind.JS:
            return (x, x, x - y)
        if self.kind is Kind.CJ:
            return (xinv, xinv, xinv - y)
        if self.kind is Kind.QUESNE:
            return (x, x, y - xinv)
        if self.kind is Kind.HK:
            # phi2 = phi1: the x^{-mu} y^{nu-1} choice does not satisfy the
            # binomial premise (see tests/test_deformations.py).
            phi1 = RationalFunction2(X ** (1 - self.mu) * Y ** self.nu)
            return (phi1, phi1, (y - xinv) / self.h)
        if self.custom_phi is None:
            raise MissingPhiTriple("custom scheme was built without a phi triple")
        return self.custom_phi

    def has_phi(self) -> bool:
        return self.kind is not Kind.CUSTOM or self.custom_phi is not None

    def phi_values(self, par: Params) -> tuple[Fraction, Fraction, Fraction]:
        try:
            return tuple(evaluate(f, par.p, par.q) for f in self.phi_triple())
        except ZeroDenominator as exc:
            raise SingularParameters(f"phi triple is singular at {par}") from exc

    def to_json(self) -> dict:
        data: dict = {"kind": self.kind.value}
        if self.kind is Kind.HK:
            data.update(mu=self.mu, nu=self.nu, h=self.h.to_json())
        elif self.kind is Kind.CUSTOM:
            data["R"] = self.custom_r.to_json()
            if self.custom_phi is not None:
                data["phi"] = [f.to_json() for f in self.custom_phi]
        return data

    @classmethod
    def from_json(cls, data: dict) -> "Scheme":
        try:
            kind = Kind.parse(data["kind"])
            if kind is Kind.JS:
                return cls.js()
            if kind is Kind.CJ:
                return cls.cj()
            if kind is Kind.QUESNE:
                return cls.quesne()
            if kind is Kind.HK:
                h = RationalFunction2.from_json(data["h"]) if "h" in data else None
                return cls.hk(int(data.get("mu", 0)), int(data.get("nu", 0)), h)
            phi = data.get("phi")
            return cls.custom(
                RationalFunction2.from_json(data["R"]),
                None if phi is None else [RationalFunction2.from_json(f) for f in phi],
            )
        except (KeyError, TypeError, ValueError) as exc:
            if isinstance(exc, SchemeError):
                raise
            raise SchemeError(f"malformed scheme document: {exc}") from exc

    def _key(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True)

    def __eq__(self, other):
        if not isinstance(other, Scheme):
            return NotImplemented
        return self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __str__(self):
        return self.name


def load_scheme_document(data: dict) -> tuple[Scheme, Optional[Params]]:
    """Parse a scheme JSON document; ``p``/``q`` are optional."""
    scheme = Scheme.from_json(data)
    par = None
    if "p" in data and "q" in data:
        par = Params(parse_rational(data["p"]), parse_rational(data["q"]))
    return scheme, par


def dump_scheme_document(scheme: Scheme, par: Params | None = None) -> dict:
    data = scheme.to_json()
    if par is not None:
        data.update(par.to_json())
    return data


# -- closed forms -----------------------------------------------------------

def js_number(p: Fraction, q: Fraction, n: int) -> Fraction:
    """``(p^n - q^n)/(p - q)`` as a finite sum, so ``p == q`` is harmless."""
    if n >= 0:
        return sum((p ** (n - 1 - k) * q ** k for k in range(n)), Fraction(0))
    m = -n
    return -sum((p ** (-1 - k) * q ** (k - m) for k in range(m)), Fraction(0))


def quesne_number(p: Fraction, q: Fraction, n: int) -> Fraction:
    """``(p^n - q^-n)/(q - 1/p)``, continued through ``pq = 1``."""
    return p / q * js_number(p, 1 / q, n)


def quesne_bridge_scalar(p: Fraction, q: Fraction) -> Fraction:
    """``(q - 1/p)/(p - 1/q)``; equals ``q/p`` and is taken as such at ``pq = 1``."""
    den = p - 1 / q
    if den == 0:
        return q / p
    return (q - 1 / p) / den


def hk_base(scheme: Scheme, par: Params) -> Fraction:
    """``q^nu / p^mu``."""
    return par.q ** scheme.nu / par.p ** scheme.mu


def _raw_number(s: Scheme, par: Params, n: int) -> Fraction:
    p, q = par.p, par.q
    if s.kind is Kind.JS:
        return js_number(p, q, n)
    if s.kind is Kind.CJ:
        return js_number(1 / p, q, n)
    if s.kind is Kind.QUESNE:
        return quesne_number(p, q, n)
    if s.kind is Kind.HK:
        return s.h_value(par) * hk_base(s, par) ** n * quesne_number(p, q, n)
    try:
        return evaluate(s.custom_r, p ** n, q ** n)
    except ZeroDenominator as exc:
        raise SingularParameters(f"R is singular at (p^{n}, q^{n}) for {par}") from exc


class NumberTable:
    """Memoized ``[n]``, ``[n]!`` and binomials built from a number function."""

    def __init__(self, numbers: NumberFn):
        self._numbers = numbers
        self._num: dict[int, Fraction] = {}
        self._fact: list[Fraction] = [Fraction(1)]

    def number(self, n: int) -> Fraction:
        if n not in self._num:
            self._num[n] = Fraction(self._numbers(n))
        return self._num[n]

    __call__ = number

    def factorial(self, n: int) -> Fraction:
        if n < 0:
            raise NegativeArgument(f"factorial of negative integer {n}")
        while len(self._fact) <= n:
            k = len(self._fact)
            self._fact.append(self._fact[-1] * self.number(k))
        return self._fact[n]

    def binomial(self, n: int, k: int) -> Fraction:
        if not 0 <= k <= n:
            raise OutOfRange(f"binomial needs 0 <= k <= n, got n={n}, k={k}")
        den = self.factorial(k) * self.factorial(n - k)
        if den == 0:
            raise SingularParameters(f"vanishing factorial in binomial({n},{k})")
        return self.factorial(n) / den


@lru_cache(maxsize=512)
def _table(s: Scheme, par: Params) -> NumberTable:
    return NumberTable(lambda n: _raw_number(s, par, n))


def number_table(s: Scheme, par: Params, numbers: NumberFn | None = None) -> NumberTable:
    if numbers is None:
        return _table(s, par)
    return NumberTable(numbers)


def number(s: Scheme, par: Params, n: int) -> Fraction:
    """The deformed number ``[n] = R(p^n, q^n)``."""
    return _table(s, par).number(n)


def factorial(s: Scheme, par: Params, n: int) -> Fraction:
    return _table(s, par).factorial(n)


def binomial(s: Scheme, par: Params, n: int, k: int) -> Fraction:
    return _table(s, par).binomial(n, k)


def shifted_factorial(a, b, par: Params, n: int) -> Fraction:
    """``((a,b);(p,q))_n = (a-b)(ap-bq)...(ap^{n-1}-bq^{n-1})``."""
    if n < 0:
        raise NegativeArgument(f"shifted factorial of negative order {n}")
    a, b = Fraction(a), Fraction(b)
    out = Fraction(1)
    for i in range(n):
        out *= a * par.p ** i - b * par.q ** i
    return out


def gaussian_binomial(x: Fraction, n: int, k: int) -> Fraction:
    """One-parameter Gaussian binomial via Pascal's rule (no division)."""
    if not 0 <= k <= n:
        return Fraction(0)
    row = [Fraction(1)]
    for m in range(1, n + 1):
        new = [Fraction(1)] * (m + 1)
        for j in range(1, m):
            new[j] = row[j - 1] + x ** j * row[j]
        row = new
    return row[k]


def domain_violations(s: Scheme, par: Params, nmax: int = 10) -> list[str]:
    """Human-readable list of positivity-domain constraints violated at ``par``."""
    p, q = par.p, par.q
    out = []
    if not q < p:
        out.append(f"0 < q < p violated at {par}")
    if s.kind is Kind.HK:
        if not 0 < p * q < 1:
            out.append(f"0 < pq < 1 violated at {par}")
        if not p ** s.mu < q ** (s.nu - 1):
            out.append(f"p^mu < q^(nu-1) violated at {par}")
        if not p > 1:
            out.append(f"p > 1 violated at {par}")
    try:
        bad = [n for n in range(1, nmax + 1) if number(s, par, n) <= 0]
    except SingularParameters:
        out.append(f"{s.name} numbers are singular at {par}")
    else:
        if bad:
            out.append(f"R(p^n,q^n) > 0 violated for n in {bad}")
    return out


# -- identity reports -------------------------------------------------------

@dataclass(frozen=True)
class Failure:
    identity: str
    n: Optional[int]
    m: Optional[int]
    k: Optional[int]
    lhs: Fraction
    rhs: Fraction

    def to_json(self) -> dict:
        return {
            "identity": self.identity, "n": self.n, "m": self.m, "k": self.k,
            "lhs": format_rational(self.lhs), "rhs": format_rational(self.rhs),
        }


@dataclass
class IdentityReport:
    checked: int = 0
    failures: list[Failure] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def check(self, identity: str, lhs, rhs, n=None, m=None, k=None) -> bool:
        self.checked += 1
        if lhs == rhs:
            return True
        self.failures.append(Failure(identity, n, m, k, Fraction(lhs), Fraction(rhs)))
        return False

    def check_nonzero(self, identity: str, value, n=None, m=None, k=None) -> bool:
        self.checked += 1
        if value != 0:
            return True
        self.failures.append(Failure(identity, n, m, k, Fraction(value), Fraction(0)))
        return False

    def check_coeffs(self, identity: str, lhs: dict, rhs: dict, n=None, m=None) -> bool:
        """One polynomial identity; each mismatching coefficient becomes a failure."""
        self.checked += 1
        bad = [key for key in sorted(set(lhs) | set(rhs)) if lhs.get(key, 0) != rhs.get(key, 0)]
        for key in bad:
            self.failures.append(Failure(identity, n, m, key, Fraction(lhs.get(key, 0)),
                                         Fraction(rhs.get(key, 0))))
        return not bad

    def merge(self, other: "IdentityReport") -> "IdentityReport":
        return IdentityReport(self.checked + other.checked, self.failures + other.failures)

    __add__ = merge

    def to_json(self) -> dict:
        return {"checked": self.checked, "failures": [f.to_json() for f in self.failures]}


def _pairs(nmax: int):
    for n in range(nmax + 1):
        for m in range(nmax + 1):
            yield n, m


def _check_r_evaluation(rep: IdentityReport, s: Scheme, par: Params, num: NumberFn, nmax: int):
    try:
        r = s.R(par)
    except SingularParameters:
        return
    for n in range(-nmax, nmax + 1):
        try:
            value = evaluate(r, par.p ** n, par.q ** n)
        except ZeroDenominator:
            continue
        rep.check("[n] = R(p^n, q^n)", num(n), value, n=n)


def _js_number_identities(rep, num, P, Qp, nmax, label):
    for n in range(nmax + 1):
        rep.check(f"{label} [n] = sum p^(n-1-k) q^k", num(n),
                  sum((P ** (n - 1 - k) * Qp ** k for k in range(n)), Fraction(0)), n=n)
        rep.check(f"{label} [n] = [2][n-1] - pq[n-2]", num(n),
                  num(2) * num(n - 1) - P * Qp * num(n - 2), n=n)
    for m in range(nmax + 1):
        rep.check(f"{label} [-m] = -q^-m p^-m [m]", num(-m),
                  -Qp ** -m * P ** -m * num(m), m=m)
    for n, m in _pairs(nmax):
        rep.check(f"{label} [n+m] = q^m[n] + p^n[m]", num(n + m),
                  Qp ** m * num(n) + P ** n * num(m), n=n, m=m)
        rep.check(f"{label} [n+m] = p^m[n] + q^n[m]", num(n + m),
                  P ** m * num(n) + Qp ** n * num(m), n=n, m=m)
        rep.check(f"{label} [n-m] = q^-m[n] - q^-m p^(n-m)[m]", num(n - m),
                  Qp ** -m * num(n) - Qp ** -m * P ** (n - m) * num(m), n=n, m=m)
        rep.check(f"{label} [n-m] = p^-m[n] - q^(n-m) p^-m[m]", num(n - m),
                  P ** -m * num(n) - Qp ** (n - m) * P ** -m * num(m), n=n, m=m)


def _quesne_number_identities(rep, num, p, q, nmax):
    c = quesne_bridge_scalar(p, q)
    for m in range(nmax + 1):
        rep.check("Quesne [-m] = -p^-m q^m [m]", num(-m), -p ** -m * q ** m * num(m), m=m)
    for n, m in _pairs(nmax):
        rep.check("Quesne [n+m] = q^-m[n] + p^n[m]", num(n + m),
                  q ** -m * num(n) + p ** n * num(m), n=n, m=m)
        rep.check("Quesne [n+m] = p^m[n] + q^-n[m]", num(n + m),
                  p ** m * num(n) + q ** -n * num(m), n=n, m=m)
        rep.check("Quesne [n-m] = q^m[n] - p^(n-m) q^m[m]", num(n - m),
                  q ** m * num(n) - p ** (n - m) * q ** m * num(m), n=n, m=m)
        rep.check("Quesne [n-m] = p^-m[n] - p^-m q^(m-n)[m]", num(n - m),
                  p ** -m * num(n) - p ** -m * q ** (m - n) * num(m), n=n, m=m)
    for n in range(nmax + 1):
        rep.check("Quesne [n] = c[2][n-1] - pq^-1[n-2]", num(n),
                  c * num(2) * num(n - 1) - p / q * num(n - 2), n=n)
        rep.check("Quesne [n]_{p,1/q} = c [n]^Q", js_number(p, 1 / q, n), c * num(n), n=n)


def _hk_number_identities(rep, s, par, num, nmax):
    p, q = par.p, par.q
    mu, nu = s.mu, s.nu
    h = s.h_value(par)
    c = quesne_bridge_scalar(p, q)
    if h == 0:
        raise SingularParameters(f"h vanishes at {par}")
    for m in range(nmax + 1):
        rep.check("HK [-m] = -q^(m-2 nu m) p^(2 mu m - m) [m]", num(-m),
                  -q ** (m - 2 * nu * m) * p ** (2 * mu * m - m) * num(m), m=m)
    for n, m in _pairs(nmax):
        rep.check("HK [n+m] first form", num(n + m),
                  q ** (nu * m - m) / p ** (mu * m) * num(n)
                  + q ** (nu * n) / p ** (mu * n - n) * num(m), n=n, m=m)
        rep.check("HK [n+m] second form", num(n + m),
                  q ** (nu * m) / p ** (mu * m - m) * num(n)
                  + q ** (nu * n - n) / p ** (mu * n) * num(m), n=n, m=m)
        rep.check("HK [n-m] first form", num(n - m),
                  q ** (-nu * m + m) / p ** (-mu * m) * num(n)
                  - q ** (nu * (n - 2 * m) + m) / p ** (mu * (n - 2 * m) - n + m) * num(m),
                  n=n, m=m)
        rep.check("HK [n-m] second form", num(n - m),
                  q ** (-nu * m) / p ** (-mu * m + m) * num(n)
                  - q ** (nu * (n - 2 * m) - n + m) / p ** (mu * (n - 2 * m) + m) * num(m),
                  n=n, m=m)
    for n in range(nmax + 1):
        rep.check("HK [n] three-term", num(n),
                  c * q ** -nu / p ** -mu / h * num(2) * num(n - 1)
                  - q ** (2 * nu - 1) / p ** (2 * mu - 1) * num(n - 2), n=n)
        rep.check("HK [n] = h q^(nu n)/p^(mu n) [n]^Q", num(n),
                  h * q ** (nu * n) / p ** (mu * n) * quesne_number(p, q, n), n=n)


def verify_number_identities(s: Scheme, par: Params, nmax: int,
                             numbers: NumberFn | None = None) -> IdentityReport:
    """Check the scheme's deformed-number identities for ``0 <= n, m <= nmax``.

    ``numbers`` overrides ``[n]`` (used to inject faults).
    """
    if not s.is_builtin:
        raise UnsupportedScheme("no number identities are known for a custom R")
    num = number_table(s, par, numbers)
    rep = IdentityReport()
    rep.check("[0] = 0", num(0), 0, n=0)
    _check_r_evaluation(rep, s, par, num, nmax)
    p, q = par.p, par.q
    if s.kind is Kind.JS:
        _js_number_identities(rep, num, p, q, nmax, "JS")
    elif s.kind is Kind.CJ:
        _js_number_identities(rep, num, 1 / p, q, nmax, "CJ")
    elif s.kind is Kind.QUESNE:
        _quesne_number_identities(rep, num, p, q, nmax)
    else:
        _hk_number_identities(rep, s, par, num, nmax)
    return rep


def _js_binomial_identities(rep, tab: NumberTable, P, Qp, nmax, label, norm=None):
    # norm: the scalar whose n-th power clears the factorial denominator
    b = tab.binomial
    x = Qp / P
    norm = P - Qp if norm is None else norm
    for n in range(nmax + 1):
        rep.check(f"{label} [n]! norm^n = ((p,q);(p,q))_n",
                  tab.factorial(n) * norm ** n,
                  shifted_factorial(P, Qp, Params(P, Qp), n), n=n)
        for k in range(n + 1):
            rep.check(f"{label} [n k] = p^(k(n-k)) [n k]_(q/p)", b(n, k),
                      P ** (k * (n - k)) * gaussian_binomial(x, n, k), n=n, k=k)
            rep.check(f"{label} [n n-k] = p^(k(n-k)) [n n-k]_(q/p)", b(n, n - k),
                      P ** (k * (n - k)) * gaussian_binomial(x, n, n - k), n=n, k=k)
        for a0, b0 in SHIFTED_FACTORIAL_PROBES:
            expansion = sum(
                (b(n, k) * (-1) ** k * P ** ((n - k) * (n - k - 1) // 2)
                 * Qp ** (k * (k - 1) // 2) * a0 ** (n - k) * b0 ** k for k in range(n + 1)),
                Fraction(0))
            rep.check(f"{label} shifted factorial expansion (a={a0}, b={b0})",
                      shifted_factorial(a0, b0, Params(P, Qp), n), expansion, n=n)
    for n in range(1, nmax + 1):
        for k in range(1, n + 1):
            rep.check(f"{label} Pascal [n+1 k] = p^k[n k] + q^(n+1-k)[n k-1]", b(n + 1, k),
                      P ** k * b(n, k) + Qp ** (n + 1 - k) * b(n, k - 1), n=n, k=k)
            rep.check(f"{label} [n+1 k] = p^k[n k] + p^(n+1-k)[n k-1] - (p^n-q^n)[n-1 k-1]",
                      b(n + 1, k),
                      P ** k * b(n, k) + P ** (n + 1 - k) * b(n, k - 1)
                      - (P ** n - Qp ** n) * b(n - 1, k - 1), n=n, k=k)


def _hk_binomial_identities(rep, s, par, tab, nmax):
    p, q = par.p, par.q
    mu, nu = s.mu, s.nu
    a = hk_base(s, par)
    h = s.h_value(par)
    quesne = number_table(Scheme.quesne(), par)
    b = tab.binomial
    for n in range(nmax + 1):
        rep.check("HK [n]! = h^n (q^nu/p^mu)^(n(n+1)/2) [n]!^Q", tab.factorial(n),
                  h ** n * a ** (n * (n + 1) // 2) * quesne.factorial(n), n=n)
        bridged = Fraction(1)
        for j in range(1, n + 1):
            bridged *= h * q ** (nu * j) / p ** (mu * j) * quesne.number(j)
        rep.check("HK [n]! = product of number bridges", tab.factorial(n), bridged, n=n)
        for k in range(n + 1):
            rep.check("HK [n k] = (q^nu/p^mu)^(k(n-k)) [n k]^Q", b(n, k),
                      a ** (k * (n - k)) * quesne.binomial(n, k), n=n, k=k)
    for n in range(1, nmax + 1):
        for k in range(1, n + 1):
            rep.check("HK Pascal, first form", b(n + 1, k),
                      q ** (nu * k) / p ** ((mu - 1) * k) * b(n, k)
                      + q ** ((nu - 1) * (n + 1 - k)) / p ** (mu * (n + 1 - k)) * b(n, k - 1),
                      n=n, k=k)
            rep.check("HK Pascal, three-term form", b(n + 1, k),
                      q ** (nu * k) / p ** ((mu - 1) * k) * b(n, k)
                      + q ** (nu * (n + 1 - k)) / p ** ((mu - 1) * (n + 1 - k)) * b(n, k - 1)
                      - (p ** n - q ** -n) * q ** (nu * n) / p ** (mu * n) * b(n - 1, k - 1),
                      n=n, k=k)


def verify_binomial_identities(s: Scheme, par: Params, nmax: int,
                               numbers: NumberFn | None = None) -> IdentityReport:
    """Symmetry, Pascal-type rules, base changes and factorial bridges for ``k <= n <= nmax``."""
    if not s.is_builtin:
        raise UnsupportedScheme("no binomial identities are known for a custom R")
    tab = number_table(s, par, numbers)
    rep = IdentityReport()
    for n in range(nmax + 1):
        rep.check("[n 0] = 1", tab.binomial(n, 0), 1, n=n, k=0)
        rep.check("[n n] = 1", tab.binomial(n, n), 1, n=n, k=n)
        for k in range(n + 1):
            rep.check("[n k] = [n n-k]", tab.binomial(n, k), tab.binomial(n, n - k), n=n, k=k)
    p, q = par.p, par.q
    if s.kind is Kind.JS:
        _js_binomial_identities(rep, tab, p, q, nmax, "JS")
    elif s.kind is Kind.CJ:
        _js_binomial_identities(rep, tab, 1 / p, q, nmax, "CJ")
    elif s.kind is Kind.QUESNE:
        # Quesne binomials coincide with the JS ones at (p, 1/q)
        _js_binomial_identities(rep, tab, p, 1 / q, nmax, "Quesne", norm=q - 1 / p)
    else:
        _hk_binomial_identities(rep, s, par, tab, nmax)
    return rep


def verify_theorem_premises(s: Scheme, par: Params, nmax: int,
                            numbers: NumberFn | None = None) -> IdentityReport:
    """Non-vanishing of the phi values, their monomial eigen-action, and the binomial premise."""
    from .qcalculus import ZPoly, phi_operator

    phis = s.phi_triple()
    values = s.phi_values(par)
    tab = number_table(s, par, numbers)
    rep = IdentityReport()
    for i, v in enumerate(values, start=1):
        rep.check_nonzero(f"phi{i}(p,q) != 0", v)
    for i in (0, 1):
        if values[i] == 0:
            continue
        for k in range(nmax + 1):
            image = phi_operator(ZPoly.monomial(k), phis[i], par)
            rep.check(f"phi{i + 1}(P,Q) z^k = phi{i + 1}(p,q)^k z^k",
                      image.coeff(k), values[i] ** k, k=k)
    phi1, phi2, phi3 = values
    b = tab.binomial
    for n in range(1, nmax + 1):
        for k in range(1, n + 1):
            rep.check("premise [n+1 k] = phi1^k[n k] + phi2^(n+1-k)[n k-1] - phi3[n][n-1 k-1]",
                      b(n + 1, k),
                      phi1 ** k * b(n, k) + phi2 ** (n + 1 - k) * b(n, k - 1)
                      - phi3 * tab.number(n) * b(n - 1, k - 1), n=n, k=k)
    return rep


def verify_reductions(par: Params, nmax: int) -> IdentityReport:
    """Specialisations linking the four built-in schemes to each other."""
    p, q = par.p, par.q
    rep = IdentityReport()
    js, cj, quesne = Scheme.js(), Scheme.cj(), Scheme.quesne()
    hk0 = Scheme.hk(0, 0)
    heine = Params(1, q)
    c = quesne_bridge_scalar(p, q)
    cj_r = None
    try:
        cj_r = cj.R(par)
    except SingularParameters:
        pass
    for n in range(nmax + 1):
        if q != 1:
            rep.check("JS(p=1) = Heine (1-q^n)/(1-q)", number(js, heine, n),
                      (1 - q ** n) / (1 - q), n=n)
        rep.check("CJ(p,q) = JS(1/p,q)", number(cj, par, n), number(js, Params(1 / p, q), n), n=n)
        if cj_r is not None:
            rep.check("CJ R(p^n,q^n) = JS(1/p,q)", evaluate(cj_r, p ** n, q ** n),
                      number(js, Params(1 / p, q), n), n=n)
        rep.check("JS(p,1/q) = c Quesne(p,q)", number(js, Params(p, 1 / q), n),
                  c * number(quesne, par, n), n=n)
        rep.check("HK(0,0,1) = Quesne", number(hk0, par, n), number(quesne, par, n), n=n)
    return rep
