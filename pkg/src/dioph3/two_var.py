"""Nonnegative solutions of two-variable equations a*x + b*y = m.

Everything three-variable reduces to this module. Counting has two
independent routes (the residue formula and the remainder-table
classification); enumeration walks the integer solution line through
its nonnegative window, which also covers non-coprime coefficients.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .core_arith import _bezout, check_int64, extended_gcd, solve_congruence
from .errors import NoNonnegativeError, NoSolutionError, NotCoprimeError


@dataclass(frozen=True)
class TwoVarEquation:
    """a*x + b*y = m with a, b >= 1 and m >= 0."""

    a: int
    b: int
    m: int

    def __post_init__(self) -> None:
        check_int64(self.a, self.b, self.m)
        if self.a < 1 or self.b < 1:
            raise ValueError("coefficients must be >= 1")
        if self.m < 0:
            raise ValueError("right-hand side must be >= 0")


@dataclass(frozen=True)
class SolutionLine:
    """One integer solution plus the step generating all others.

    (x0 + k*step_x, y0 - k*step_y) solves the equation for every k,
    with step_x = b/d, step_y = a/d and d = gcd(a, b).
    """

    x0: int
    y0: int
    step_x: int
    step_y: int
    d: int


@dataclass(frozen=True)
class NonnegWindow:
    """The k-range on a SolutionLine where both components are >= 0.

    Empty when k_min > k_max.
    """

    k_min: int
    k_max: int

    def is_empty(self) -> bool:
        return self.k_min > self.k_max

    def size(self) -> int:
        return max(0, self.k_max - self.k_min + 1)


@dataclass(frozen=True)
class BinnerData:
    """Residues and family size for a coprime pair equation.

    a1 and b1 are the smallest nonnegative residues with a*a1 = m (mod b)
    and b*b1 = m (mod a). max_index is (m - a*a1 - b*b1)/(a*b) when that
    quantity is nonnegative and -1 otherwise, so the solution family has
    exactly max_index + 1 members (none at -1).
    """

    a1: int
    b1: int
    max_index: int


@dataclass(frozen=True)
class BcsResidues:
    """One-based residues of the remainder-table classification.

    a_prime in [1, b] with a*a_prime = -n (mod b), and b_prime in [1, a]
    with b*b_prime = -n (mod a).
    """

    a_prime: int
    b_prime: int


def particular_solution(eq: TwoVarEquation) -> SolutionLine:
    """A solution line through some integer solution of the equation.

    Raises NoSolutionError when gcd(a, b) does not divide m.
    """
    cert = extended_gcd(eq.a, eq.b)
    d = cert.g
    if eq.m % d:
        raise NoSolutionError(f"gcd({eq.a}, {eq.b}) = {d} does not divide {eq.m}")
    t = eq.m // d
    return SolutionLine(
        x0=cert.x * t, y0=cert.y * t, step_x=eq.b // d, step_y=eq.a // d, d=d
    )


def nonneg_window(line: SolutionLine) -> NonnegWindow:
    """k-window where both line components are nonnegative."""
    # ceil(-x0/sx) == -(x0 // sx) with floor division
    return NonnegWindow(k_min=-(line.x0 // line.step_x), k_max=line.y0 // line.step_y)


def first_nonneg(eq: TwoVarEquation) -> tuple[int, int]:
    """The nonnegative solution with the smallest nonnegative y.

    Solves b*y = m (mod a) for the smallest y >= 0, then substitutes.
    A negative x there means larger admissible y values only shrink x
    further, so no nonnegative solution exists at all.
    """
    if eq.m % math.gcd(eq.a, eq.b):
        raise NoSolutionError(
            f"gcd({eq.a}, {eq.b}) does not divide {eq.m}, no integer solutions"
        )
    y0 = solve_congruence(eq.b, eq.m, eq.a)
    x0 = (eq.m - eq.b * y0) // eq.a
    if x0 < 0:
        raise NoNonnegativeError(
            f"{eq.a}*x + {eq.b}*y = {eq.m} has no nonnegative solution"
        )
    return x0, y0


def _binner(a: int, b: int, m: int) -> tuple[int, BinnerData]:
    """(count, data) for coprime a, b and m >= 0. No input validation."""
    a1 = (m * pow(a, -1, b)) % b if b > 1 else 0
    b1 = (m * pow(b, -1, a)) % a if a > 1 else 0
    rest = m - a * a1 - b * b1
    if rest < 0:
        return 0, BinnerData(a1, b1, -1)
    # rest = m - a*a1 - b*b1 is divisible by both a and b, hence by a*b.
    top = rest // (a * b)
    return top + 1, BinnerData(a1, b1, top)


def count_binner(eq: TwoVarEquation) -> tuple[int, BinnerData]:
    """Solution count via the residue formula, with the residues returned.

    Requires gcd(a, b) = 1. The degenerate modulus 1 (a = 1 or b = 1)
    fixes the corresponding residue at 0.
    """
    if math.gcd(eq.a, eq.b) != 1:
        raise NotCoprimeError(f"gcd({eq.a}, {eq.b}) != 1")
    return _binner(eq.a, eq.b, eq.m)


def _enumerate_pairs(a: int, b: int, m: int) -> list[tuple[int, int]]:
    """All nonnegative (x, y) with a*x + b*y = m, ascending x. No validation."""
    d = math.gcd(a, b)
    if m % d:
        return []
    g, xb, yb = _bezout(a, b)
    t = m // d
    x = xb * t
    y = yb * t
    sx = b // d
    sy = a // d
    k_min = -(x // sx)
    k_max = y // sy
    if k_min > k_max:
        return []
    x += k_min * sx
    y -= k_min * sy
    out = []
    append = out.append
    for _ in range(k_max - k_min + 1):
        append((x, y))
        x += sx
        y -= sy
    return out


def enumerate_nonneg(eq: TwoVarEquation) -> list[tuple[int, int]]:
    """All nonnegative solutions, sorted by ascending x; empty when none.

    Handles non-coprime coefficients through the solution line and its
    nonnegative window.
    """
    return _enumerate_pairs(eq.a, eq.b, eq.m)


def bcs_residues(a: int, b: int, n: int) -> BcsResidues:
    """One-based residues a', b' used by the remainder-table count."""
    if math.gcd(a, b) != 1:
        raise NotCoprimeError(f"gcd({a}, {b}) != 1")
    ap = solve_congruence(a, -n, b)
    bp = solve_congruence(b, -n, a)
    return BcsResidues(a_prime=ap if ap else b, b_prime=bp if bp else a)


def count_bcs_table(eq: TwoVarEquation) -> int:
    """Solution count via the four-case remainder-table classification.

    Writes m = quo*(a*b) + r with 0 <= r < a*b and classifies r against
    the two-variable Frobenius number a*b - a - b:

        r above it        -> quo + 1
        r equal to it     -> quo
        r below it        -> quo + 1 when a*a' + b*b' + r = 2ab, else quo

    Requires gcd(a, b) = 1; a = 1 or b = 1 lands in the first case for
    every r since the Frobenius number is then -1.
    """
    a, b = eq.a, eq.b
    if math.gcd(a, b) != 1:
        raise NotCoprimeError(f"gcd({a}, {b}) != 1")
    ab = a * b
    quo, r = divmod(eq.m, ab)
    frob = ab - a - b
    if r > frob:
        return quo + 1
    if r == frob:
        return quo
    res = bcs_residues(a, b, r)
    total = a * res.a_prime + b * res.b_prime + r
    if total == 2 * ab:
        return quo + 1
    assert total == ab, "remainder sum outside the two admissible cases"
    return quo


def frobenius_two(a: int, b: int) -> tuple[int, int]:
    """(largest non-representable n, count of non-representable n >= 1).

    Requires gcd(a, b) = 1. When a = 1 or b = 1 every n is representable;
    the result is then reported as (-1, 0).
    """
    check_int64(a, b)
    if a < 1 or b < 1:
        raise ValueError("coefficients must be >= 1")
    if math.gcd(a, b) != 1:
        raise NotCoprimeError(f"gcd({a}, {b}) != 1")
    if a == 1 or b == 1:
        return -1, 0
    return a * b - a - b, (a - 1) * (b - 1) // 2


def closed_form_p12(n: int) -> int:
    """Number of nonnegative solutions of x + 2*y = n: (2n + 3 + (-1)^n) / 4."""
    check_int64(n)
    if n < 0:
        raise ValueError("n must be >= 0")
    return (2 * n + 3 + (1 if n % 2 == 0 else -1)) // 4
