"""Binary64 evaluation of the alternating Boole sum, with exact error measurement.

Each term ``(-1)^(n-k) C(n,k) p(a+kb)`` is computed exactly from
binary64-rounded inputs and rounded once.  Only the summation order differs
between strategies, so the measured error is pure summation error.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, List, Sequence

from .boole import boole_sum
from .errors import OutOfRangeError
from .exact_core import NodeGrid, Polynomial, binomial

MAX_SWEEP_N = 170


class Strategy(str, enum.Enum):
    NAIVE = "naive"
    PAIRWISE = "pairwise"
    COMPENSATED = "compensated"
    SORTED_MAGNITUDE = "sorted_magnitude"

    def __str__(self):
        return self.value


STRATEGIES = tuple(Strategy)


def _to_float(q: Fraction) -> float:
    try:
        return float(q)
    except OverflowError:
        return math.inf if q > 0 else -math.inf


def _round_exact(q: Fraction) -> Fraction:
    """Nearest binary64 value, back as an exact rational."""
    f = _to_float(q)
    if not math.isfinite(f):
        raise OverflowError(f"{q} is not representable in binary64")
    return Fraction(f)


def _exact_terms(p: Polynomial, grid: NodeGrid) -> List[Fraction]:
    n = grid.n
    out = []
    for k in range(n + 1):
        t = binomial(n, k) * p(grid.a + k * grid.b)
        out.append(t if (n - k) % 2 == 0 else -t)
    return out


def float_terms(p: Polynomial, grid: NodeGrid) -> List[float]:
    """Signed terms of the sum, each rounded once to binary64.

    Coefficients, ``a`` and ``b`` are first rounded to binary64; the terms are
    then formed exactly from those rounded inputs.  Terms beyond the binary64
    range become infinities.
    """
    try:
        pr = Polynomial(_round_exact(c) for c in p.coeffs)
        gr = NodeGrid(_round_exact(grid.a), _round_exact(grid.b), grid.n)
    except OverflowError:
        return [math.inf]
    return [_to_float(t) for t in _exact_terms(pr, gr)]


def naive_sum(xs: Iterable[float]) -> float:
    s = 0.0
    for x in xs:
        s += x
    return s


def pairwise_sum(xs: Sequence[float]) -> float:
    """Balanced binary-tree reduction."""
    xs = list(xs)
    if not xs:
        return 0.0
    while len(xs) > 1:
        nxt = [xs[i] + xs[i + 1] for i in range(0, len(xs) - 1, 2)]
        if len(xs) % 2:
            nxt.append(xs[-1])
        xs = nxt
    return xs[0] + 0.0


def compensated_sum(xs: Iterable[float]) -> float:
    """Neumaier's variant of Kahan summation.

    Unlike plain Kahan it also captures the low bits of the running sum when a
    new term is larger than it, which is the common case in alternating sums.
    """
    s = 0.0
    c = 0.0
    for x in xs:
        t = s + x
        if not math.isfinite(t):
            return t
        if abs(s) >= abs(x):
            c += (s - t) + x
        else:
            c += (x - t) + s
        s = t
    return s + c


def sorted_magnitude_sum(xs: Iterable[float]) -> float:
    return naive_sum(sorted(xs, key=abs))


_REDUCERS = {
    Strategy.NAIVE: naive_sum,
    Strategy.PAIRWISE: pairwise_sum,
    Strategy.COMPENSATED: compensated_sum,
    Strategy.SORTED_MAGNITUDE: sorted_magnitude_sum,
}


def float_boole_sum(p: Polynomial, grid: NodeGrid, strategy=Strategy.NAIVE) -> float:
    """The alternating sum in binary64 under ``strategy``.

    Overflow is returned as ``inf``/``-inf`` (or ``nan`` if infinities of both
    signs meet), never raised.
    """
    strategy = Strategy(strategy)
    terms = float_terms(p, grid)
    if not all(math.isfinite(t) for t in terms):
        return naive_sum(terms)
    return _REDUCERS[strategy](terms)


@dataclass(frozen=True)
class FloatErrorRecord:
    """One float trial.

    ``relative_error`` is ``|computed - exact| / |exact|`` evaluated exactly and
    rounded once.  When ``exact`` is zero it holds the absolute error and
    ``absolute`` is set.  ``overflow`` marks a non-finite ``computed``.
    """

    n: int
    strategy: Strategy
    computed: float
    exact: Fraction
    relative_error: float
    term_magnitude_ratio: float
    absolute: bool = False
    overflow: bool = False


def _record(p, grid, strategy, exact, ratio) -> FloatErrorRecord:
    strategy = Strategy(strategy)
    computed = float_boole_sum(p, grid, strategy)
    if not math.isfinite(computed):
        return FloatErrorRecord(grid.n, strategy, computed, exact, math.inf, ratio,
                                absolute=exact == 0, overflow=True)
    err = abs(Fraction(computed) - exact)
    if exact == 0:
        return FloatErrorRecord(grid.n, strategy, computed, exact, _to_float(err), ratio,
                                absolute=True)
    return FloatErrorRecord(grid.n, strategy, computed, exact,
                            _to_float(err / abs(exact)), ratio)


def _magnitude_ratio(p: Polynomial, grid: NodeGrid, exact: Fraction) -> float:
    biggest = max(abs(t) for t in _exact_terms(p, grid))
    if exact == 0:
        return math.inf if biggest else 0.0
    return _to_float(biggest / abs(exact))


def error_record(p: Polynomial, grid: NodeGrid, strategy=Strategy.NAIVE) -> FloatErrorRecord:
    exact = boole_sum(p, grid)
    return _record(p, grid, strategy, exact, _magnitude_ratio(p, grid, exact))


def _ordered(strategies) -> List[Strategy]:
    wanted = {Strategy(s) for s in strategies}
    return [s for s in STRATEGIES if s in wanted]


def error_sweep(n_min: int, n_max: int, strategies=STRATEGIES) -> List[FloatErrorRecord]:
    """Records for ``p = x^n`` on the grid ``(0, 1, n)``, ordered by ``(n, strategy)``."""
    if not 1 <= n_min <= n_max <= MAX_SWEEP_N:
        raise OutOfRangeError(
            f"need 1 <= n_min <= n_max <= {MAX_SWEEP_N}, got {n_min}..{n_max}")
    order = _ordered(strategies)
    if not order:
        raise OutOfRangeError("no strategies requested")
    out = []
    for n in range(n_min, n_max + 1):
        p = Polynomial.monomial(n)
        grid = NodeGrid(0, 1, n)
        exact = boole_sum(p, grid)
        ratio = _magnitude_ratio(p, grid, exact)
        out.extend(_record(p, grid, s, exact, ratio) for s in order)
    return out
