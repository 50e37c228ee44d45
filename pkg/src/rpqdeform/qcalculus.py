"""Polynomials in z and the dilation / difference operators acting on them.

Every operator here is diagonal on monomials (z^k -> eigenvalue * z^k, or
z^k -> eigenvalue * z^(k-1) for the derivatives), so they are applied
through their eigenvalues rather than by functional substitution.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Mapping, Optional

from .deformations import NumberFn, Params, Scheme, js_number, number_table
from .errors import SingularParameters, ZeroDenominator, ZeroPhi
from .exactnum import RationalFunction2, evaluate, format_rational, parse_rational

NEG_INF = float("-inf")


class ZPoly:
    """Polynomial in ``z`` with rational coefficients, stored sparsely."""

    __slots__ = ("_c",)

    def __init__(self, coeffs: Mapping[int, object] | Iterable | None = None):
        if coeffs is None:
            coeffs = {}
        elif not isinstance(coeffs, Mapping):
            coeffs = dict(enumerate(coeffs))
        clean = {}
        for k, c in coeffs.items():
            if k < 0:
                raise ValueError(f"negative degree {k} in ZPoly")
            c = Fraction(c)
            if c:
                clean[int(k)] = c
        self._c = clean

    @classmethod
    def monomial(cls, k: int, c=1) -> "ZPoly":
        return cls({k: c})

    @classmethod
    def one(cls) -> "ZPoly":
        return cls({0: 1})

    @property
    def degree(self):
        return max(self._c) if self._c else NEG_INF

    def coeff(self, k: int) -> Fraction:
        return self._c.get(k, Fraction(0))

    def coeffs(self) -> dict[int, Fraction]:
        return dict(self._c)

    def items(self):
        return sorted(self._c.items())

    def dense(self) -> list[Fraction]:
        if not self._c:
            return []
        return [self.coeff(k) for k in range(self.degree + 1)]

    def is_zero(self) -> bool:
        return not self._c

    def __bool__(self):
        return bool(self._c)

    def __eq__(self, other):
        if not isinstance(other, ZPoly):
            return NotImplemented
        return self._c == other._c

    def __hash__(self):
        return hash(frozenset(self._c.items()))

    def __add__(self, other: "ZPoly") -> "ZPoly":
        out = dict(self._c)
        for k, c in other._c.items():
            out[k] = out.get(k, 0) + c
        return ZPoly(out)

    def __neg__(self):
        return ZPoly({k: -c for k, c in self._c.items()})

    def __sub__(self, other: "ZPoly") -> "ZPoly":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, ZPoly):
            out: dict[int, Fraction] = {}
            for k1, c1 in self._c.items():
                for k2, c2 in other._c.items():
                    out[k1 + k2] = out.get(k1 + k2, 0) + c1 * c2
            return ZPoly(out)
        c = Fraction(other)
        return ZPoly({k: v * c for k, v in self._c.items()})

    __rmul__ = __mul__

    def times_z(self, power: int = 1) -> "ZPoly":
        return ZPoly({k + power: c for k, c in self._c.items()})

    def map_monomials(self, fn: Callable[[int, Fraction], tuple[int, Fraction]]) -> "ZPoly":
        """Apply ``(k, c) -> (k', c')`` monomial-wise and re-collect."""
        out: dict[int, Fraction] = {}
        for k, c in self._c.items():
            k2, c2 = fn(k, c)
            out[k2] = out.get(k2, 0) + c2
        return ZPoly(out)

    def __call__(self, z) -> Fraction:
        z = Fraction(z)
        return sum((c * z ** k for k, c in self._c.items()), Fraction(0))

    def to_json(self) -> list:
        return [[k, format_rational(c)] for k, c in self.items()]

    @classmethod
    def from_json(cls, data) -> "ZPoly":
        out: dict[int, Fraction] = {}
        for k, c in data:
            out[int(k)] = out.get(int(k), 0) + parse_rational(c)
        return cls(out)

    def __repr__(self):
        if not self._c:
            return "ZPoly(0)"
        return "ZPoly(" + " + ".join(f"{c}*z^{k}" for k, c in self.items()) + ")"


def scale(poly: ZPoly, factor) -> ZPoly:
    """``f(z) -> f(factor * z)``; P and Q are ``scale(., p)`` and ``scale(., q)``."""
    factor = Fraction(factor)
    return poly.map_monomials(lambda k, c: (k, c * factor ** k))


def pq_derivative(poly: ZPoly, par: Params) -> ZPoly:
    """Two-parameter Jackson derivative: ``z^k -> [k]_{p,q} z^(k-1)``, constants to 0."""
    out = {}
    for k, c in poly.items():
        if k:
            out[k - 1] = c * js_number(par.p, par.q, k)
    return ZPoly(out)


def _diag(poly: ZPoly, eigen: Callable[[int], Fraction]) -> ZPoly:
    return ZPoly({k: c * eigen(k) for k, c in poly.items()})


def _eval_r(r: RationalFunction2, x, y) -> Fraction:
    try:
        return evaluate(r, x, y)
    except ZeroDenominator as exc:
        raise SingularParameters(f"R is singular at ({x}, {y})") from exc


def _divided(par: Params, k: int) -> Fraction:
    den = par.p ** k - par.q ** k
    if den == 0:
        raise SingularParameters(f"p^{k} = q^{k}: (p-q)/(P-Q) is undefined")
    return (par.p - par.q) / den


def rpq_derivative(poly: ZPoly, s: Scheme, par: Params, numbers: NumberFn | None = None,
                   form: str = "eigen") -> ZPoly:
    """The deformed derivative ``z^k -> [k] z^(k-1)``.

    ``form`` selects how it is computed: ``"eigen"`` uses the number table;
    ``"left"`` composes ``d_{p,q} (p-q)/(P-Q) R(P,Q)`` and ``"right"``
    composes ``(p-q)/(pP-qQ) R(pP,qQ) d_{p,q}``, both from ``R`` directly.
    """
    if form == "eigen":
        tab = number_table(s, par, numbers)
        return ZPoly({k - 1: c * tab.number(k) for k, c in poly.items() if k})
    r = s.R(par)
    p, q = par.p, par.q
    if form == "left":
        g = _diag(poly, lambda k: _eval_r(r, p ** k, q ** k))
        if g.coeff(0):
            raise SingularParameters("R(1,1) != 0 leaves a constant under (p-q)/(P-Q)")
        g = ZPoly({k: c * _divided(par, k) for k, c in g.items()})
        return pq_derivative(g, par)
    if form == "right":
        g = pq_derivative(poly, par)
        g = _diag(g, lambda k: _eval_r(r, p ** (k + 1), q ** (k + 1)))
        return _diag(g, lambda k: _divided(par, k + 1))
    raise ValueError(f"unknown form {form!r}")


def phi_value(phi: RationalFunction2, par: Params) -> Fraction:
    try:
        return evaluate(phi, par.p, par.q)
    except ZeroDenominator as exc:
        raise SingularParameters(f"phi is singular at {par}") from exc


def phi_operator(poly: ZPoly, phi: RationalFunction2, par: Params, power: int = 1) -> ZPoly:
    """``phi(P,Q)**power``: ``z^k -> phi(p,q)^(k*power) z^k``."""
    v = phi_value(phi, par)
    if v == 0:
        raise ZeroPhi(f"phi(p,q) = 0 at {par}")
    return poly.map_monomials(lambda k, c: (k, c * v ** (k * power)))


class OperatorKind(enum.Enum):
    SCALE_P = "P"
    SCALE_Q = "Q"
    SCALE_INV_P = "P^-1"
    SCALE_INV_Q = "Q^-1"
    PQ_DERIVATIVE = "d_pq"
    RPQ_DERIVATIVE = "d_Rpq"
    PHI = "phi(P,Q)"
    NUMBER = "N=z d/dz"


@dataclass(frozen=True, eq=False)
class OperatorSpec:
    kind: OperatorKind
    phi: Optional[RationalFunction2] = None

    def __post_init__(self):
        if self.kind is OperatorKind.PHI and self.phi is None:
            raise ValueError("phi operator needs a function")

    def apply(self, poly: ZPoly, par: Params, s: Scheme | None = None) -> ZPoly:
        k = self.kind
        if k is OperatorKind.SCALE_P:
            return scale(poly, par.p)
        if k is OperatorKind.SCALE_Q:
            return scale(poly, par.q)
        if k is OperatorKind.SCALE_INV_P:
            return scale(poly, 1 / par.p)
        if k is OperatorKind.SCALE_INV_Q:
            return scale(poly, 1 / par.q)
        if k is OperatorKind.PQ_DERIVATIVE:
            return pq_derivative(poly, par)
        if k is OperatorKind.RPQ_DERIVATIVE:
            if s is None:
                raise ValueError("the deformed derivative needs a scheme")
            return rpq_derivative(poly, s, par)
        if k is OperatorKind.PHI:
            return phi_operator(poly, self.phi, par)
        return poly.map_monomials(lambda deg, c: (deg, c * deg))
