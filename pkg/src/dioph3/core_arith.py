"""Exact integer primitives used by every other module.

All public operations validate their inputs against the signed 64-bit
range and then compute with Python's exact integers, so intermediate
products can never wrap or lose precision. Out-of-range inputs raise
the builtin OverflowError.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import ExactHalfError, NoSolutionError, NotCoprimeError

INT64_MIN = -(2**63)
INT64_MAX = 2**63 - 1


def check_int64(*values: int) -> None:
    """Reject non-integers and values outside the signed 64-bit range."""
    for v in values:
        if not isinstance(v, int) or isinstance(v, bool):
            raise TypeError(f"expected an integer, got {type(v).__name__}")
        if v < INT64_MIN or v > INT64_MAX:
            raise OverflowError(f"{v} is outside the signed 64-bit input range")


@dataclass(frozen=True)
class BezoutCertificate:
    """Witnesses a*x + b*y = g where g = gcd(a, b) >= 0."""

    g: int
    x: int
    y: int


def _bezout(a: int, b: int) -> tuple[int, int, int]:
    """(g, x, y) with a*x + b*y = g, for a, b >= 0. No input validation."""
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        quot = old_r // r
        old_r, r = r, old_r - quot * r
        old_s, s = s, old_s - quot * s
        old_t, t = t, old_t - quot * t
    return old_r, old_s, old_t


def gcd(a: int, b: int) -> int:
    """Greatest common divisor, with gcd(0, 0) = 0."""
    check_int64(a, b)
    return math.gcd(a, b)


def extended_gcd(a: int, b: int) -> BezoutCertificate:
    """Bezout certificate for any integers a, b.

    Negative inputs are handled by running the algorithm on |a|, |b|
    and flipping the matching witness signs, so a*x + b*y = g always
    holds exactly with g = gcd(a, b) >= 0.
    """
    check_int64(a, b)
    g, x, y = _bezout(abs(a), abs(b))
    return BezoutCertificate(g, x if a >= 0 else -x, y if b >= 0 else -y)


def solve_congruence(a: int, rhs: int, modulus: int) -> int:
    """Smallest x >= 0 with a*x = rhs (mod modulus).

    Works for non-coprime a and modulus by dividing the congruence
    through by g = gcd(a, modulus); raises NoSolutionError when g does
    not divide rhs modulo the modulus. The result is always < modulus.
    """
    check_int64(a, rhs, modulus)
    if a < 1:
        raise ValueError("coefficient must be >= 1")
    if modulus < 1:
        raise ValueError("modulus must be >= 1")
    g = math.gcd(a, modulus)
    r = rhs % modulus
    if r % g:
        raise NoSolutionError(
            f"{a}*x = {rhs} (mod {modulus}): gcd {g} does not divide {r}"
        )
    m = modulus // g
    if m == 1:
        return 0
    return (r // g) * pow((a // g) % m, -1, m) % m


def mod_inverse(a: int, m: int) -> int:
    """Multiplicative inverse of a modulo m, in [1, m). Requires gcd(a, m) = 1."""
    check_int64(a, m)
    if a < 1:
        raise ValueError("a must be >= 1")
    if m < 2:
        raise ValueError("modulus must be >= 2")
    if math.gcd(a, m) != 1:
        raise NotCoprimeError(f"gcd({a}, {m}) != 1, no inverse exists")
    return pow(a, -1, m)


def _nearest(numerator: int, denominator: int) -> int:
    """Exact nearest integer to numerator/denominator, denominator > 0.

    No input validation; callers must rule out the exact-half case or
    accept ExactHalfError.
    """
    q, r = divmod(numerator, denominator)
    twice = 2 * r
    if twice == denominator:
        raise ExactHalfError(f"{numerator}/{denominator} is an exact half-integer")
    return q + 1 if twice > denominator else q


def nearest_integer(numerator: int, denominator: int) -> int:
    """The unique integer closest to numerator/denominator, computed exactly.

    Raises ExactHalfError when the fraction is an exact half-integer,
    where "closest" is ambiguous.
    """
    check_int64(numerator, denominator)
    if denominator < 1:
        raise ValueError("denominator must be >= 1")
    return _nearest(numerator, denominator)
