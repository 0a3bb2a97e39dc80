"""Counting and enumeration of nonnegative solutions of p*x + q*y + l*z = n.

Three routes are provided and must always agree:

* count_residue      - collapse z to its single admissible residue class
                       modulo gcd(p, q) and sum two-variable counts,
* count_closed       - per-slice closed form with the explicit solution
                       family of every slice,
* enumerate_exhaustive - union of all z-slices, each solved as a
                       two-variable equation.

Instances are canonicalized internally so the largest coefficient plays
the slice variable (fewest slices); results are mapped back to the
caller's variable order.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .core_arith import check_int64, solve_congruence
from .two_var import BinnerData, _binner, _enumerate_pairs

SolutionTriple = tuple[int, int, int]


@dataclass(frozen=True)
class ThreeVarInstance:
    """The equation p*x + q*y + l*z = n in the caller's variable order.

    canonical_order[j] is the caller index of the j-th internal variable
    after sorting coefficients ascending; internal work always sees
    p <= q <= l.
    """

    p: int
    q: int
    l: int
    n: int
    canonical_order: tuple[int, int, int] = field(init=False, compare=False)

    def __post_init__(self) -> None:
        check_int64(self.p, self.q, self.l, self.n)
        if min(self.p, self.q, self.l) < 1:
            raise ValueError("coefficients must be >= 1")
        if self.n < 0:
            raise ValueError("n must be >= 0")
        coeffs = (self.p, self.q, self.l)
        order = tuple(sorted(range(3), key=coeffs.__getitem__))
        object.__setattr__(self, "canonical_order", order)

    def canonical_coeffs(self) -> tuple[int, int, int]:
        """Coefficients sorted ascending (the internal orientation)."""
        coeffs = (self.p, self.q, self.l)
        o = self.canonical_order
        return coeffs[o[0]], coeffs[o[1]], coeffs[o[2]]

    def is_canonical(self) -> bool:
        return self.canonical_order == (0, 1, 2)

    def to_caller(self, triple: SolutionTriple) -> SolutionTriple:
        """Map a triple from internal (sorted) order back to caller order."""
        out = [0, 0, 0]
        o = self.canonical_order
        out[o[0]], out[o[1]], out[o[2]] = triple
        return (out[0], out[1], out[2])


@dataclass(frozen=True)
class ZSliceFamily:
    """Solution family of one z-slice in canonical orientation.

    With u = gcd(p, q), a = p/u and b = q/u, member i of a non-empty
    family is (b*i + a1, (max_index - i)*a + b1, z) for 0 <= i <= max_index;
    a family with max_index = -1 contributes nothing.
    """

    z: int
    binner: BinnerData
    u: int

    def size(self) -> int:
        return self.binner.max_index + 1 if self.binner.max_index >= 0 else 0

    def pairs(self, p: int, q: int) -> list[tuple[int, int]]:
        """Expand into (x, y) pairs of the slice equation p*x + q*y = n - z*l."""
        a = p // self.u
        b = q // self.u
        data = self.binner
        out = []
        x = data.a1
        y = data.max_index * a + data.b1
        for _ in range(self.size()):
            out.append((x, y))
            x += b
            y -= a
        return out


def _to_caller_sorted(
    inst: ThreeVarInstance, triples: list[SolutionTriple]
) -> list[SolutionTriple]:
    """Map internal triples to caller order, sorted by (z, x)."""
    if inst.is_canonical():
        return triples  # generated in (z, x) order already
    mapped = [inst.to_caller(t) for t in triples]
    mapped.sort(key=lambda t: (t[2], t[0], t[1]))
    return mapped


def count_residue(inst: ThreeVarInstance) -> int:
    """Solution count via the single admissible z-residue modulo gcd(p, q).

    A common factor g = gcd(p, q, l) > 1 is divided out first (count is 0
    unless g divides n), after which the admissible residue j with
    l*j = n (mod u) is unique and z runs over j, j+u, j+2u, ...
    """
    p, q, l = inst.canonical_coeffs()
    n = inst.n
    g = math.gcd(math.gcd(p, q), l)
    if g > 1:
        if n % g:
            return 0
        p, q, l, n = p // g, q // g, l // g, n // g
    u = math.gcd(p, q)
    j = solve_congruence(l, n, u) if u > 1 else 0
    base = n - j * l
    if base < 0:
        return 0
    a, b = p // u, q // u
    m0 = base // u
    total = 0
    for k in range(base // (u * l) + 1):
        total += _binner(a, b, m0 - l * k)[0]
    return total


def count_closed(inst: ThreeVarInstance) -> tuple[int, list[ZSliceFamily]]:
    """Solution count with the per-slice families, one per admissible z.

    Admissible z are those with gcd(p, q) dividing n - z*l; empty slices
    (max_index = -1) are kept in the returned list but add nothing.
    """
    p, q, l = inst.canonical_coeffs()
    n = inst.n
    u = math.gcd(p, q)
    a, b = p // u, q // u
    total = 0
    slices = []
    for z in range(n // l + 1):
        rem = n - z * l
        if rem % u:
            continue
        cnt, data = _binner(a, b, rem // u)
        slices.append(ZSliceFamily(z=z, binner=data, u=u))
        total += cnt
    return total, slices


def enumerate_closed(inst: ThreeVarInstance) -> list[SolutionTriple]:
    """All nonnegative solutions from the per-slice closed-form families.

    Triples are in the caller's variable order, sorted by (z, x).
    """
    p, q, l = inst.canonical_coeffs()
    n = inst.n
    u = math.gcd(p, q)
    a, b = p // u, q // u
    out: list[SolutionTriple] = []
    append = out.append
    for z in range(n // l + 1):
        rem = n - z * l
        if rem % u:
            continue
        cnt, data = _binner(a, b, rem // u)
        if cnt <= 0:
            continue
        x = data.a1
        y = data.max_index * a + data.b1
        for _ in range(cnt):
            append((x, y, z))
            x += b
            y -= a
    return _to_caller_sorted(inst, out)


def enumerate_exhaustive(inst: ThreeVarInstance) -> list[SolutionTriple]:
    """All nonnegative solutions as the union of the z-slices.

    Loops z from 0 to n // l and solves each slice as the two-variable
    equation p*x + q*y = n - z*l. Same ordering contract as
    enumerate_closed.
    """
    p, q, l = inst.canonical_coeffs()
    n = inst.n
    out: list[SolutionTriple] = []
    for z in range(n // l + 1):
        pairs = _enumerate_pairs(p, q, n - z * l)
        if pairs:
            out += [(x, y, z) for (x, y) in pairs]
    return _to_caller_sorted(inst, out)


# First admissible z residue mod 3 for 6x + 9y + 20z = n with n = 0, 1, 2 (mod 3):
# n - 20z = 0 (mod 3) forces z = -n = 0, 2, 1 (mod 3) respectively.
_FIRST_Z_RESIDUE = (0, 2, 1)


def mcnugget_count(n: int) -> int:
    """Number of nonnegative solutions of 6x + 9y + 20z = n.

    Specialized residue dispatch: z starts at 0, 2 or 1 according to
    n mod 3 and advances in steps of 3, each slice counted as a (2, 3)
    pair equation.
    """
    check_int64(n)
    if n < 0:
        raise ValueError("n must be >= 0")
    base = n - 20 * _FIRST_Z_RESIDUE[n % 3]
    if base < 0:
        return 0
    m0 = base // 3
    total = 0
    for k in range(base // 60 + 1):
        total += _binner(2, 3, m0 - 20 * k)[0]
    return total
