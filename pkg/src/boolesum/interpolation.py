"""Lagrange interpolation over exact rational nodes.

The interpolant is built as an explicit sum of basis products.  The leading
coefficient on an equally spaced grid is also available in closed form, through
the alternating binomial sum, without building the interpolant.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Tuple

from .errors import DegenerateNodesError, DimensionError
from .exact_core import (NodeGrid, Polynomial, RationalLike, binomial, factorial,
                         poly_linear_combine, poly_mul, to_rational)


def _check_distinct(xs: Sequence[Fraction]) -> None:
    seen = set()
    for x in xs:
        if x in seen:
            raise DegenerateNodesError(f"duplicate node {x}")
        seen.add(x)


@dataclass(frozen=True)
class PointSet:
    """Nonempty sequence of ``(x, y)`` pairs with distinct ``x``."""

    points: tuple

    def __init__(self, points: Iterable[Tuple[RationalLike, RationalLike]]):
        pts = tuple((to_rational(x), to_rational(y)) for x, y in points)
        if not pts:
            raise DimensionError("a point set must be nonempty")
        _check_distinct([x for x, _ in pts])
        object.__setattr__(self, "points", pts)

    @classmethod
    def from_grid(cls, grid: NodeGrid, values: Sequence[RationalLike]) -> PointSet:
        if len(values) != grid.n + 1:
            raise DimensionError(f"expected {grid.n + 1} values, got {len(values)}")
        return cls(zip(grid.nodes(), values))

    @property
    def xs(self):
        return [x for x, _ in self.points]

    @property
    def ys(self):
        return [y for _, y in self.points]

    def __len__(self):
        return len(self.points)


def lagrange_basis(nodes: Sequence[RationalLike], k: int) -> Polynomial:
    """Basis polynomial equal to 1 at ``nodes[k]`` and 0 at every other node."""
    xs = [to_rational(x) for x in nodes]
    if not 0 <= k < len(xs):
        raise IndexError(f"basis index {k} out of range for {len(xs)} nodes")
    _check_distinct(xs)
    xk = xs[k]
    num = Polynomial([1])
    den = Fraction(1)
    for j, xj in enumerate(xs):
        if j == k:
            continue
        num = poly_mul(num, Polynomial([1, -xj]))
        den *= xk - xj
    return num * (1 / den)


def lagrange_interpolate(data) -> Polynomial:
    """Unique polynomial of degree < len(data) through every point.

    ``data`` is a :class:`PointSet` or an iterable of ``(x, y)`` pairs.
    """
    if not isinstance(data, PointSet):
        data = PointSet(data)
    xs = data.xs
    out = Polynomial()
    for k, yk in enumerate(data.ys):
        if yk == 0:
            continue
        out = poly_linear_combine(1, out, yk, lagrange_basis(xs, k))
    return out


def sample(p: Polynomial, grid: NodeGrid) -> list:
    """Values ``p(a + k*b)`` for ``k = 0..n``."""
    return [p(x) for x in grid.nodes()]


def leading_coeff_from_samples(values: Sequence[RationalLike], grid: NodeGrid) -> Fraction:
    """Coefficient of ``x^n`` in the interpolant through ``(a + k*b, values[k])``.

    Computed directly as ``sum_k (-1)^(n-k) C(n,k) y_k / (n! b^n)``.
    """
    n = grid.n
    if len(values) != n + 1:
        raise DimensionError(f"expected {n + 1} values for grid n={n}, got {len(values)}")
    total = Fraction(0)
    for k, y in enumerate(values):
        term = binomial(n, k) * to_rational(y)
        total += term if (n - k) % 2 == 0 else -term
    return total / (factorial(n) * grid.b ** n)
