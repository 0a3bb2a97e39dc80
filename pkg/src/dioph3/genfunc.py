"""Independent counting oracles and the two small closed forms.

series_count extracts coefficients of prod 1/(1 - t^a) by exact integer
convolution; brute_force_count enumerates directly. Neither shares any
arithmetic with the residue or closed-form counters, which is what makes
them usable as ground truth in the cross-validation tests.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass

from .core_arith import _nearest, check_int64
from .errors import BudgetExceededError
from .three_var import ThreeVarInstance

SERIES_BUDGET = 10**7
BRUTE_BUDGET = 10**6


@dataclass(frozen=True)
class SeriesPrefix:
    """Coefficients of t^0 .. t^N of prod_a 1/(1 - t^a)."""

    generators: tuple[int, ...]
    coefficients: tuple[int, ...]

    @classmethod
    def build(cls, generators: Sequence[int], length: int) -> "SeriesPrefix":
        return cls(tuple(generators), tuple(_series_list(generators, length)))


def _series_list(generators: Sequence[int], length: int) -> list[int]:
    """Unbounded-knapsack recurrence: one ascending pass per generator."""
    coeffs = [0] * (length + 1)
    coeffs[0] = 1
    for a in generators:
        for i in range(a, length + 1):
            coeffs[i] += coeffs[i - a]
    return coeffs


def _check_generators(generators: Sequence[int]) -> list[int]:
    gens = list(generators)
    if not 1 <= len(gens) <= 3:
        raise ValueError("between one and three generators required")
    for a in gens:
        check_int64(a)
        if a < 1:
            raise ValueError("generators must be >= 1")
    return gens


def series_count(generators: Sequence[int], n: int, budget: int = SERIES_BUDGET) -> int:
    """Coefficient of t^n in prod_a 1/(1 - t^a), i.e. the solution count."""
    gens = _check_generators(generators)
    check_int64(n)
    if n < 0:
        raise ValueError("n must be >= 0")
    if n > budget:
        raise BudgetExceededError(f"series prefix of length {n} exceeds budget {budget}")
    return _series_list(gens, n)[n]


def series_prefix(
    generators: Sequence[int], length: int, budget: int = SERIES_BUDGET
) -> list[int]:
    """Solution counts for every n in [0, length] in one convolution pass."""
    gens = _check_generators(generators)
    check_int64(length)
    if length < 0:
        raise ValueError("length must be >= 0")
    if length > budget:
        raise BudgetExceededError(f"series prefix of length {length} exceeds budget {budget}")
    return _series_list(gens, length)


def brute_force_count(inst: ThreeVarInstance, budget: int = BRUTE_BUDGET) -> int:
    """Count by direct iteration: x <= n/p, y <= (n - p*x)/q, z by divisibility.

    The budget caps the number of (x, y) cells visited; exceeding it
    raises BudgetExceededError.
    """
    p, q, l, n = inst.p, inst.q, inst.l, inst.n
    count = 0
    steps = 0
    r1 = n  # n - p*x
    while r1 >= 0:
        row = r1 // q + 1
        steps += row
        if steps > budget:
            raise BudgetExceededError(
                f"direct enumeration needs more than {budget} iterations"
            )
        r2 = r1  # n - p*x - q*y
        for _ in range(row):
            if r2 % l == 0:
                count += 1
            r2 -= q
        r1 -= p
    return count


def brute_force_profile(
    p: int, q: int, l: int, n_max: int, budget: int = BRUTE_BUDGET
) -> list[int]:
    """Counts for every n in [0, n_max] by one direct enumeration pass.

    Visits each (x, y) with p*x + q*y <= n_max exactly once, then folds
    the z multiples in. Same enumeration semantics as brute_force_count,
    amortized over all right-hand sides at once.
    """
    check_int64(p, q, l, n_max)
    if min(p, q, l) < 1:
        raise ValueError("coefficients must be >= 1")
    if n_max < 0:
        raise ValueError("n_max must be >= 0")
    hist = [0] * (n_max + 1)
    steps = 0
    for base_x in range(0, n_max + 1, p):
        steps += (n_max - base_x) // q + 1
        if steps > budget:
            raise BudgetExceededError(
                f"direct enumeration needs more than {budget} iterations"
            )
        for base in range(base_x, n_max + 1, q):
            hist[base] += 1
    counts = [0] * (n_max + 1)
    for shift in range(0, n_max + 1, l):
        for m in range(shift, n_max + 1):
            counts[m] += hist[m - shift]
    return counts


def closed_form_123(n: int) -> int:
    """Number of nonnegative solutions of x + 2y + 3z = n: <(n + 3)^2 / 12>.

    (n + 3)^2 mod 12 lies in {0, 1, 4, 9}, so the nearest integer is
    never ambiguous.
    """
    check_int64(n)
    if n < 0:
        raise ValueError("n must be >= 0")
    return _nearest((n + 3) * (n + 3), 12)
