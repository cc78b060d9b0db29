"""The generalized Boole sum and its closed form.

For a polynomial ``p`` of degree at most ``n`` and a grid ``a + k*b``::

    sum_{k=0}^{n} (-1)^(n-k) C(n,k) p(a + k*b)  ==  [x^n]p * b^n * n!

Everything here is exact.  :func:`fuzz_verify` checks the identity on seeded
random instances.
"""

from __future__ import annotations

import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .errors import DegreeOverflowError, OutOfRangeError
from .exact_core import NodeGrid, Polynomial, binomial, factorial

MODE_EXACT = "exact"


def _check_degree(p: Polynomial, grid: NodeGrid) -> None:
    if not p.is_zero() and p.degree > grid.n:
        raise DegreeOverflowError(
            f"polynomial degree {p.degree} exceeds grid n={grid.n}; "
            "the identity only covers degree <= n")


def boole_sum(p: Polynomial, grid: NodeGrid) -> Fraction:
    """Alternating binomial sum of ``p`` over the grid, by direct summation."""
    _check_degree(p, grid)
    n, a, b = grid.n, grid.a, grid.b
    total = Fraction(0)
    for k in range(n + 1):
        term = binomial(n, k) * p(a + k * b)
        total += term if (n - k) % 2 == 0 else -term
    return total


def predicted_value(p: Polynomial, grid: NodeGrid) -> Fraction:
    """Closed form ``[x^n]p * b^n * n!``; zero whenever ``deg p < n``."""
    _check_degree(p, grid)
    return p.coefficient(grid.n) * grid.b ** grid.n * factorial(grid.n)


@dataclass(frozen=True)
class SumReport:
    computed: Fraction
    predicted: Fraction
    residual: Fraction
    holds: bool
    n: int
    grid: NodeGrid
    mode: str = MODE_EXACT


def verify_proposition(p: Polynomial, grid: NodeGrid) -> SumReport:
    computed = boole_sum(p, grid)
    predicted = predicted_value(p, grid)
    residual = computed - predicted
    return SumReport(computed=computed, predicted=predicted, residual=residual,
                     holds=residual == 0, n=grid.n, grid=grid)


def boole_classic(n: int) -> int:
    """``sum_{k=1}^{n} (-1)^(n-k) C(n,k) k^n``, which equals ``n!``."""
    if n < 1:
        raise OutOfRangeError("boole_classic needs n >= 1")
    return vanishing_sum(n, n)


def vanishing_sum(n: int, m: int, include_zero: bool = False) -> int:
    """``sum (-1)^(n-k) C(n,k) k^m`` over ``k = 1..n``.

    With ``include_zero=True`` the ``k = 0`` term is added (using ``0^0 = 1``).
    The two agree unless ``m == 0``: there the ``k = 1..n`` sum is
    ``(-1)^(n+1)`` and only the inclusive sum vanishes.
    """
    if n < 1:
        raise OutOfRangeError("vanishing_sum needs n >= 1")
    if not 0 <= m <= n:
        raise OutOfRangeError(f"m={m} outside 0..n={n}")
    total = 0
    for k in range(0 if include_zero else 1, n + 1):
        term = binomial(n, k) * k ** m
        total += term if (n - k) % 2 == 0 else -term
    return total


def expected_vanishing(n: int, m: int) -> int:
    """Value the identity predicts for :func:`vanishing_sum`: 0 below ``n``, ``n!`` at ``n``."""
    return factorial(n) if m == n else 0


# -- fuzzing -----------------------------------------------------------------

def _trial_rng(seed: int, index: int) -> random.Random:
    # one stream per (seed, trial index); independent of execution order
    return random.Random((seed << 64) | index)


def _random_rational(rng: random.Random, bound: int, nonzero: bool = False) -> Fraction:
    while True:
        num = rng.randint(-bound, bound)
        if num or not nonzero:
            return Fraction(num, rng.randint(1, bound))


def random_instance(seed: int, index: int, max_degree: int, coeff_bound: int):
    """The ``(polynomial, grid)`` pair used for trial ``index`` of a fuzz run.

    ``n`` is uniform on ``0..max_degree``, ``deg p`` uniform on ``-1..n``
    (``-1`` meaning the zero polynomial).  Numerators and denominators stay
    within ``coeff_bound`` in magnitude.
    """
    rng = _trial_rng(seed, index)
    n = rng.randint(0, max_degree)
    d = rng.randint(-1, n)
    coeffs = []
    if d >= 0:
        coeffs.append(_random_rational(rng, coeff_bound, nonzero=True))
        coeffs.extend(_random_rational(rng, coeff_bound) for _ in range(d))
    a = _random_rational(rng, coeff_bound)
    b = _random_rational(rng, coeff_bound, nonzero=True)
    return Polynomial(coeffs), NodeGrid(a, b, n)


@dataclass(frozen=True)
class FuzzReport:
    trials: int
    failures: int
    seed: int
    witnesses: tuple = field(default=())
    max_degree: Optional[int] = None
    coeff_bound: Optional[int] = None


def _run_trial(args) -> Optional[tuple]:
    seed, index, max_degree, coeff_bound = args
    p, grid = random_instance(seed, index, max_degree, coeff_bound)
    if verify_proposition(p, grid).holds:
        return None
    return p, grid


def fuzz_verify(max_degree: int, trials: int, seed: int, coeff_bound: int = 100,
                workers: Optional[int] = None) -> FuzzReport:
    """Check the identity on ``trials`` seeded random instances.

    Failures are collected as witnesses, never raised.  With ``workers > 1``
    trials run in a process pool; the report is the same as a serial run.
    """
    if max_degree < 0:
        raise OutOfRangeError("max_degree must be >= 0")
    if trials < 1:
        raise OutOfRangeError("trials must be >= 1")
    if coeff_bound < 1:
        raise OutOfRangeError("coeff_bound must be >= 1")
    if seed < 0 or seed >= 1 << 64:
        raise OutOfRangeError("seed must be an unsigned 64-bit integer")
    jobs = [(seed, i, max_degree, coeff_bound) for i in range(trials)]
    if workers and workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_run_trial, jobs, chunksize=max(1, trials // (4 * workers))))
    else:
        results = [_run_trial(j) for j in jobs]
    witnesses = tuple(r for r in results if r is not None)
    return FuzzReport(trials=trials, failures=len(witnesses), seed=seed,
                      witnesses=witnesses, max_degree=max_degree,
                      coeff_bound=coeff_bound)
