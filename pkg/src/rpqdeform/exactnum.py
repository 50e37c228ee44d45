"""Exact scalars and bivariate Laurent/rational functions.

Scalars are :class:`fractions.Fraction`.  Bivariate objects live in the ring
Q[x, 1/x, y, 1/y] and its fraction field; they are only ever evaluated
pointwise, so no polynomial GCD is attempted.
"""
from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable, Mapping, Union

from .errors import ZeroDenominator

Rational = Fraction
Scalar = Union[int, Fraction]

_RATIONAL_RE = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*(\d+))?\s*$")


def parse_rational(value) -> Fraction:
    """Parse ``"a/b"``, ``"a"``, an int or a Fraction.  Decimals are rejected."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise ValueError(f"not a rational: {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if not isinstance(value, str):
        raise ValueError(f"not a rational: {value!r}")
    m = _RATIONAL_RE.match(value)
    if m is None:
        raise ValueError(f"not an exact rational literal: {value!r}")
    num, den = m.groups()
    if den is not None and int(den) == 0:
        raise ValueError(f"zero denominator in {value!r}")
    return Fraction(int(num), int(den) if den is not None else 1)


def format_rational(r: Scalar) -> str:
    """Canonical text form: ``"a"`` for integers, ``"a/b"`` otherwise."""
    return str(Fraction(r))


def _power(base: Fraction, e: int) -> Fraction:
    if e < 0 and base == 0:
        raise ZeroDenominator("negative power of zero")
    return base ** e


class LaurentPoly2:
    """Finite Laurent polynomial in two variables x, y with rational coefficients.

    ``terms`` maps ``(i, j)`` to the coefficient of ``x**i * y**j``; zero
    coefficients are never stored, so equality is term-map equality.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[tuple[int, int], Scalar] | None = None):
        clean = {}
        for (i, j), c in (terms or {}).items():
            c = Fraction(c)
            if c:
                clean[(int(i), int(j))] = c
        self._terms = clean
        self._hash = None

    @classmethod
    def const(cls, c: Scalar) -> "LaurentPoly2":
        return cls({(0, 0): c})

    @classmethod
    def monomial(cls, i: int, j: int, c: Scalar = 1) -> "LaurentPoly2":
        return cls({(i, j): c})

    @classmethod
    def x(cls) -> "LaurentPoly2":
        return cls.monomial(1, 0)

    @classmethod
    def y(cls) -> "LaurentPoly2":
        return cls.monomial(0, 1)

    @property
    def terms(self) -> dict[tuple[int, int], Fraction]:
        return dict(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = LaurentPoly2.const(other)
        if not isinstance(other, LaurentPoly2):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    @staticmethod
    def _coerce(other) -> "LaurentPoly2":
        if isinstance(other, LaurentPoly2):
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return LaurentPoly2.const(other)
        raise TypeError(f"cannot combine LaurentPoly2 with {type(other).__name__}")

    def __add__(self, other):
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        out = dict(self._terms)
        for key, c in other._terms.items():
            out[key] = out.get(key, 0) + c
        return LaurentPoly2(out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly2({k: -c for k, c in self._terms.items()})

    def __sub__(self, other):
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        out: dict[tuple[int, int], Fraction] = {}
        for (i1, j1), c1 in self._terms.items():
            for (i2, j2), c2 in other._terms.items():
                key = (i1 + i2, j1 + j2)
                out[key] = out.get(key, 0) + c1 * c2
        return LaurentPoly2(out)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            if len(self._terms) != 1:
                raise ValueError("negative powers only for monomials")
            ((i, j), c), = self._terms.items()
            return LaurentPoly2({(i * e, j * e): Fraction(1) / c ** (-e)})
        out = LaurentPoly2.const(1)
        for _ in range(e):
            out = out * self
        return out

    def __call__(self, x: Scalar, y: Scalar) -> Fraction:
        return self.eval(x, y)

    def eval(self, x: Scalar, y: Scalar) -> Fraction:
        x, y = Fraction(x), Fraction(y)
        total = Fraction(0)
        for (i, j), c in self._terms.items():
            total += c * _power(x, i) * _power(y, j)
        return total

    def to_json(self) -> list:
        return [[i, j, format_rational(c)] for (i, j), c in sorted(self._terms.items())]

    @classmethod
    def from_json(cls, data: Iterable) -> "LaurentPoly2":
        terms: dict[tuple[int, int], Fraction] = {}
        for entry in data:
            i, j, c = entry
            key = (int(i), int(j))
            terms[key] = terms.get(key, 0) + parse_rational(c)
        return cls(terms)

    def __repr__(self):
        if not self._terms:
            return "LaurentPoly2(0)"
        parts = []
        for (i, j), c in sorted(self._terms.items(), reverse=True):
            mono = "".join(
                f"{v}^{e}" if e != 1 else v for v, e in (("x", i), ("y", j)) if e
            )
            parts.append(f"{c}{'*' + mono if mono else ''}")
        return "LaurentPoly2(" + " + ".join(parts) + ")"


class RationalFunction2:
    """Quotient ``num / den`` of two :class:`LaurentPoly2` (no normal form).

    Equality is decided by cross-multiplication.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=1):
        num = LaurentPoly2._coerce(num)
        den = LaurentPoly2._coerce(den)
        if den.is_zero():
            raise ZeroDenominator("rational function with zero denominator polynomial")
        self.num = num
        self.den = den

    @classmethod
    def const(cls, c: Scalar) -> "RationalFunction2":
        return cls(LaurentPoly2.const(c))

    @staticmethod
    def _coerce(other) -> "RationalFunction2":
        if isinstance(other, RationalFunction2):
            return other
        return RationalFunction2(LaurentPoly2._coerce(other))

    def __add__(self, other):
        try:
            o = self._coerce(other)
        except TypeError:
            return NotImplemented
        return RationalFunction2(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction2(-self.num, self.den)

    def __sub__(self, other):
        try:
            o = self._coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        try:
            o = self._coerce(other)
        except TypeError:
            return NotImplemented
        return RationalFunction2(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        try:
            o = self._coerce(other)
        except TypeError:
            return NotImplemented
        return RationalFunction2(self.num * o.den, self.den * o.num)

    def __rtruediv__(self, other):
        return self._coerce(other) / self

    def __eq__(self, other):
        try:
            o = self._coerce(other)
        except TypeError:
            return NotImplemented
        return self.num * o.den == o.num * self.den

    __hash__ = None  # equality is not structural

    def __call__(self, x: Scalar, y: Scalar) -> Fraction:
        return evaluate(self, x, y)

    def to_json(self) -> dict:
        return {"num": self.num.to_json(), "den": self.den.to_json()}

    @classmethod
    def from_json(cls, data: Mapping) -> "RationalFunction2":
        den = data.get("den", [[0, 0, "1"]])
        return cls(LaurentPoly2.from_json(data["num"]), LaurentPoly2.from_json(den))

    def __repr__(self):
        return f"RationalFunction2({self.num!r} / {self.den!r})"


def evaluate(f: RationalFunction2, x: Scalar, y: Scalar) -> Fraction:
    """Exact value of ``f`` at ``(x, y)``.

    Raises :class:`ZeroDenominator` when the denominator vanishes there (or
    when a negative power of a zero coordinate appears).
    """
    den = f.den.eval(x, y)
    if den == 0:
        raise ZeroDenominator(f"denominator vanishes at ({x}, {y})")
    return f.num.eval(x, y) / den


X = LaurentPoly2.x()
Y = LaurentPoly2.y()
