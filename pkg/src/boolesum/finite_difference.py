"""Forward differences with an explicit step, on polynomials and on samples."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import DimensionError, InvalidStepError
from .exact_core import Polynomial, RationalLike, poly_shift, to_rational


def _check_step(h) -> Fraction:
    h = to_rational(h)
    if h == 0:
        raise InvalidStepError("difference step h must be nonzero")
    return h


def delta(p: Polynomial, h: RationalLike = 1) -> Polynomial:
    """Forward difference ``p(x + h) - p(x)``.

    For ``deg p = d >= 1`` the result has degree ``d - 1`` and leading
    coefficient ``d * h * lead(p)``; constants go to the zero polynomial.
    """
    h = _check_step(h)
    return poly_shift(p, h) - p


def nth_delta(p: Polynomial, n: int, h: RationalLike = 1) -> Polynomial:
    """Apply :func:`delta` ``n`` times.

    Deliberately iterative rather than using the alternating binomial sum, so
    that the two can be checked against each other.
    """
    h = _check_step(h)
    if n < 0:
        raise ValueError("order n must be non-negative")
    out = p
    for _ in range(n):
        if out.is_zero():
            break
        out = delta(out, h)
    return out


@dataclass(frozen=True)
class DifferenceTable:
    """``rows[0]`` is the input; ``rows[i + 1]`` holds adjacent differences of ``rows[i]``."""

    rows: tuple

    @property
    def depth(self) -> int:
        return len(self.rows) - 1

    def __getitem__(self, i):
        return self.rows[i]

    def __len__(self):
        return len(self.rows)


def difference_table(values: Sequence[RationalLike], depth: int) -> DifferenceTable:
    values = tuple(to_rational(v) for v in values)
    if not values:
        raise DimensionError("difference_table needs at least one value")
    if depth < 0 or depth > len(values) - 1:
        raise DimensionError(
            f"depth {depth} out of range for {len(values)} values "
            f"(allowed 0..{len(values) - 1})")
    rows = [values]
    for _ in range(depth):
        prev = rows[-1]
        rows.append(tuple(prev[j + 1] - prev[j] for j in range(len(prev) - 1)))
    return DifferenceTable(tuple(rows))
