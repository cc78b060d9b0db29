"""Exact scalars, dense polynomials and integer combinatorics.

Rationals are :class:`fractions.Fraction`, which already keeps a positive
denominator and a reduced numerator after every operation.  Polynomials store
their coefficients leading-first: ``Polynomial([2, 3, 1])`` is ``2x^2 + 3x + 1``.
"""

from __future__ import annotations

import math
import operator
import re
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational as _RationalABC
from typing import Iterable, Sequence, Union

from .errors import InvalidStepError, UndefinedDegreeError

Rational = Fraction
RationalLike = Union[Fraction, int]

_OPS = {
    "add": operator.add,
    "sub": operator.sub,
    "mul": operator.mul,
    "div": operator.truediv,
}

_RATIONAL_RE = re.compile(r"\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*\Z")


def to_rational(value) -> Fraction:
    """Coerce an int or Fraction to Fraction.  Floats are rejected on purpose."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, _RationalABC)) and not isinstance(value, bool):
        return Fraction(value)
    raise TypeError(f"expected an exact rational, got {type(value).__name__}")


def rational_arith(x: RationalLike, y: RationalLike, op: str) -> Fraction:
    """Apply ``op`` (one of add, sub, mul, div) to two rationals.

    Division by zero raises :class:`ZeroDivisionError`.
    """
    try:
        fn = _OPS[op]
    except KeyError:
        raise ValueError(f"unknown operation {op!r}") from None
    return fn(to_rational(x), to_rational(y))


def format_rational(q: RationalLike) -> str:
    """Canonical text form ``p/q``; the denominator is dropped when it is 1."""
    return str(to_rational(q))


def parse_rational(text: str) -> Fraction:
    """Parse the canonical ``p/q`` (or plain integer) form."""
    m = _RATIONAL_RE.match(text)
    if m is None:
        raise ValueError(f"not a rational in p/q form: {text!r}")
    num, den = m.group(1), m.group(2)
    if den is None:
        return Fraction(int(num))
    if int(den) == 0:
        raise ZeroDivisionError(f"zero denominator in {text!r}")
    return Fraction(int(num), int(den))


def binomial(n: int, k: int) -> int:
    """C(n, k) by the multiplicative formula; 0 when k > n."""
    if n < 0 or k < 0:
        raise ValueError("binomial arguments must be non-negative")
    if k > n:
        return 0
    k = min(k, n - k)
    result = 1
    for i in range(1, k + 1):
        # result * (n - k + i) is always divisible by i here
        result = result * (n - k + i) // i
    return result


def factorial(n: int) -> int:
    if n < 0:
        raise ValueError("factorial of a negative number")
    return math.factorial(n)


@dataclass(frozen=True)
class Polynomial:
    """Dense univariate polynomial with rational coefficients.

    ``coeffs[0]`` multiplies the highest power.  Leading zeros are stripped on
    construction, so the zero polynomial is the empty tuple and has no degree.
    """

    coeffs: tuple

    def __init__(self, coeffs: Iterable[RationalLike] = ()):
        cs = [to_rational(c) for c in coeffs]
        i = 0
        while i < len(cs) and cs[i] == 0:
            i += 1
        object.__setattr__(self, "coeffs", tuple(cs[i:]))

    @classmethod
    def monomial(cls, power: int, coeff: RationalLike = 1) -> Polynomial:
        if power < 0:
            raise ValueError("negative power")
        return cls([coeff] + [0] * power)

    @classmethod
    def constant(cls, c: RationalLike) -> Polynomial:
        return cls([c])

    @classmethod
    def from_ascending(cls, coeffs: Sequence[RationalLike]) -> Polynomial:
        return cls(list(coeffs)[::-1])

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree(self) -> int:
        if not self.coeffs:
            raise UndefinedDegreeError("the zero polynomial has no degree")
        return len(self.coeffs) - 1

    def coefficient(self, power: int) -> Fraction:
        """Coefficient of ``x**power`` (zero beyond the degree)."""
        if power < 0:
            raise ValueError("negative power")
        n = len(self.coeffs) - 1
        if power > n:
            return Fraction(0)
        return self.coeffs[n - power]

    def leading_coefficient(self) -> Fraction:
        if not self.coeffs:
            raise UndefinedDegreeError("the zero polynomial has no leading coefficient")
        return self.coeffs[0]

    def __call__(self, x: RationalLike) -> Fraction:
        acc = Fraction(0)
        x = to_rational(x)
        for c in self.coeffs:
            acc = acc * x + c
        return acc

    def __add__(self, other: Polynomial) -> Polynomial:
        return poly_linear_combine(1, self, 1, other)

    def __sub__(self, other: Polynomial) -> Polynomial:
        return poly_linear_combine(1, self, -1, other)

    def __neg__(self) -> Polynomial:
        return Polynomial(-c for c in self.coeffs)

    def __mul__(self, other):
        if isinstance(other, Polynomial):
            return poly_mul(self, other)
        s = to_rational(other)
        return Polynomial(s * c for c in self.coeffs)

    __rmul__ = __mul__

    def shift(self, c: RationalLike) -> Polynomial:
        return poly_shift(self, c)

    def __str__(self) -> str:
        return format_polynomial(self)

    def __repr__(self) -> str:
        return f"Polynomial({[format_rational(c) for c in self.coeffs]})"


def poly_eval(p: Polynomial, x: RationalLike) -> Fraction:
    """Horner evaluation; the zero polynomial evaluates to 0."""
    return p(x)


def poly_linear_combine(alpha: RationalLike, p: Polynomial,
                        beta: RationalLike, q: Polynomial) -> Polynomial:
    """Return ``alpha*p + beta*q``."""
    alpha, beta = to_rational(alpha), to_rational(beta)
    width = max(len(p.coeffs), len(q.coeffs))
    pc = (Fraction(0),) * (width - len(p.coeffs)) + p.coeffs
    qc = (Fraction(0),) * (width - len(q.coeffs)) + q.coeffs
    return Polynomial(alpha * a + beta * b for a, b in zip(pc, qc))


def poly_mul(p: Polynomial, q: Polynomial) -> Polynomial:
    if p.is_zero() or q.is_zero():
        return Polynomial()
    out = [Fraction(0)] * (len(p.coeffs) + len(q.coeffs) - 1)
    for i, a in enumerate(p.coeffs):
        if a == 0:
            continue
        for j, b in enumerate(q.coeffs):
            out[i + j] += a * b
    return Polynomial(out)


def poly_shift(p: Polynomial, c: RationalLike) -> Polynomial:
    """Taylor shift: the polynomial ``x -> p(x + c)``.

    Repeated synthetic division, O(n^2) multiply-adds.
    """
    c = to_rational(c)
    b = list(p.coeffs)
    if c == 0 or len(b) < 2:
        return Polynomial(b)
    n = len(b) - 1
    for i in range(n):
        for j in range(1, n - i + 1):
            b[j] += c * b[j - 1]
    return Polynomial(b)


def leading_coefficient(p: Polynomial) -> Fraction:
    return p.leading_coefficient()


def _format_coeff(mag: Fraction, power: int) -> str:
    if power == 0:
        return format_rational(mag)
    body = "x" if power == 1 else f"x^{power}"
    if mag == 1:
        return body
    return format_rational(mag) + body


def format_polynomial(p: Polynomial) -> str:
    """Canonical text: descending powers, explicit signs, ``0`` for zero."""
    if p.is_zero():
        return "0"
    n = len(p.coeffs) - 1
    parts = []
    for i, c in enumerate(p.coeffs):
        if c == 0:
            continue
        term = _format_coeff(abs(c), n - i)
        if not parts:
            parts.append(("-" if c < 0 else "") + term)
        else:
            parts.append(("- " if c < 0 else "+ ") + term)
    return " ".join(parts)


@dataclass(frozen=True)
class NodeGrid:
    """Arithmetic progression ``a + k*b`` for ``k = 0..n``."""

    a: Fraction
    b: Fraction
    n: int

    def __init__(self, a: RationalLike, b: RationalLike, n: int):
        a, b = to_rational(a), to_rational(b)
        if b == 0:
            raise InvalidStepError("grid step b must be nonzero")
        if isinstance(n, bool) or not isinstance(n, int) or n < 0:
            raise ValueError("grid count n must be a non-negative integer")
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "n", n)

    def nodes(self) -> list:
        return [self.a + k * self.b for k in range(self.n + 1)]

    def with_step(self, b: RationalLike) -> NodeGrid:
        return NodeGrid(self.a, b, self.n)

    def with_offset(self, a: RationalLike) -> NodeGrid:
        return NodeGrid(a, self.b, self.n)
