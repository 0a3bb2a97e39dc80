"""Face-set reduction machinery and the boundary-combination conjecture lab.

A solution with a zero component lies on one of the three coordinate
faces, each of which is a two-variable problem. This module computes
those boundary sets, forms integer combinations (a*s1 + b*s2 + c*s3) /
(a + b + c) of boundary solutions, runs the subtract/add completion
procedure, and empirically checks the conjecture that every solution is
s_a - s_b + s_c for boundary solutions, together with the counting bound
0 <= N <= 3 * C(N1 + N2 + N3, 3) it would imply.

The conjecture's membership rule is ambiguous, so two readings are
checked side by side: strict mode draws s_1, s_2, s_3 from the three
faces by index, free mode draws all three from the union of the faces.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from math import comb

from .errors import (
    BudgetExceededError,
    NegativeComponentError,
    NotIntegralError,
    ZeroDenominatorError,
)
from .three_var import (
    SolutionTriple,
    ThreeVarInstance,
    count_closed,
    enumerate_exhaustive,
)
from .two_var import _enumerate_pairs

CONJECTURE_BUDGET = 10**8


@dataclass(frozen=True)
class ReductionSets:
    """Boundary solution sets of the three coordinate faces.

    s1 holds the x = 0 solutions of q*y + l*z = n, s2 the y = 0 solutions
    of p*x + l*z = n, s3 the z = 0 solutions of p*x + q*y = n, each sorted
    ascending. face_feasible records whether the face's coefficient gcd
    divides n at all; an infeasible face is simply empty, never an error.
    """

    s1: tuple[SolutionTriple, ...]
    s2: tuple[SolutionTriple, ...]
    s3: tuple[SolutionTriple, ...]
    face_feasible: tuple[bool, bool, bool]

    def union(self) -> list[SolutionTriple]:
        """Distinct boundary solutions, sorted; faces can overlap."""
        return sorted(set(self.s1) | set(self.s2) | set(self.s3))

    def size_sum(self) -> int:
        """|s1| + |s2| + |s3|, counting shared corners once per face."""
        return len(self.s1) + len(self.s2) + len(self.s3)


@dataclass(frozen=True)
class CombinationWitness:
    """A boundary triple with s_a - s_b + s_c equal to the target.

    signature gives, for each of s_a, s_b, s_c, the lowest face index
    (1..3) containing it; shared corners belong to several faces.
    """

    target: SolutionTriple
    s_a: SolutionTriple
    s_b: SolutionTriple
    s_c: SolutionTriple
    signature: tuple[int, int, int]


@dataclass(frozen=True)
class ConjectureReport:
    """Witness coverage and bound check for one instance.

    solutions, strict_witnesses and free_witnesses are aligned by index;
    a None witness means no combination exists in that mode.
    bound_holds is the literal check total <= 3*C(size_sum, 3); instances
    with solutions but fewer than three boundary solutions are outside
    the bound's derivation and flagged for review instead of failed.
    """

    instance: ThreeVarInstance
    total_solutions: int
    witnessed_strict: int
    witnessed_free: int
    counterexamples: tuple[SolutionTriple, ...]
    size_sum: int
    bound_limit: int
    bound_holds: bool
    flagged_for_review: bool
    solutions: tuple[SolutionTriple, ...]
    strict_witnesses: tuple[CombinationWitness | None, ...]
    free_witnesses: tuple[CombinationWitness | None, ...]


@dataclass(frozen=True)
class SweepReport:
    """Aggregate of ConjectureReports over a coefficient/n grid."""

    p_max: int
    q_max: int
    l_max: int
    n_max: int
    instances: int
    fully_witnessed_free: int
    fully_witnessed_strict: int
    with_counterexamples: int
    bound_violations: int
    flagged_for_review: int
    counterexample_list: tuple[tuple[int, int, int, int, SolutionTriple], ...]
    bound_violation_list: tuple[tuple[int, int, int, int, int, int], ...]


def boundary_sets(inst: ThreeVarInstance) -> ReductionSets:
    """The three face solution sets, in the caller's variable order."""
    p, q, l, n = inst.p, inst.q, inst.l, inst.n
    s1 = tuple((0, y, z) for (y, z) in _enumerate_pairs(q, l, n))
    s2 = tuple((x, 0, z) for (x, z) in _enumerate_pairs(p, l, n))
    s3 = tuple((x, y, 0) for (x, y) in _enumerate_pairs(p, q, n))
    feasible = (
        n % math.gcd(q, l) == 0,
        n % math.gcd(p, l) == 0,
        n % math.gcd(p, q) == 0,
    )
    return ReductionSets(s1=s1, s2=s2, s3=s3, face_feasible=feasible)


def combine(
    s1: SolutionTriple,
    s2: SolutionTriple,
    s3: SolutionTriple,
    a: int,
    b: int,
    c: int,
) -> SolutionTriple:
    """(a*s1 + b*s2 + c*s3) / (a + b + c), componentwise and exact.

    When s1, s2, s3 solve the equation the result does too, provided
    every component divides out to a nonnegative integer. Raises
    ZeroDenominatorError, NotIntegralError or NegativeComponentError
    otherwise.
    """
    denom = a + b + c
    if denom == 0:
        raise ZeroDenominatorError("combination coefficients sum to zero")
    nums = tuple(a * u + b * v + c * w for u, v, w in zip(s1, s2, s3))
    if any(v % denom for v in nums):
        raise NotIntegralError(f"{nums} is not componentwise divisible by {denom}")
    out = (nums[0] // denom, nums[1] // denom, nums[2] // denom)
    if min(out) < 0:
        raise NegativeComponentError(f"combination yields {out}")
    return out


def heuristic_complete(
    inst: ThreeVarInstance,
) -> tuple[list[SolutionTriple], bool]:
    """The subtract/add completion procedure over the boundary sets.

    Working in canonical orientation (coefficients ascending):

    1. take the smallest element (by component sum, ties lexicographic)
       of the smallest non-empty face set (ties by face index),
    2. subtract every element of the next role set, keeping differences
       whose third component is positive,
    3. add each kept difference to every element of the last role set,
       keeping sums with all components strictly positive,
    4. return those together with the union of the face sets.

    Role sets are the face sets ordered by (size, face index); empty
    faces are skipped, and when fewer than three faces are non-empty the
    later roles reuse the last non-empty set. Every kept sum is a
    (1, -1, 1) combination of solutions and therefore a solution, but
    the procedure has no completeness guarantee: the returned flag says
    whether it found everything, by comparison with the closed-form
    count.
    """
    if inst.is_canonical():
        core = inst
    else:
        cp, cq, cl = inst.canonical_coeffs()
        core = ThreeVarInstance(cp, cq, cl, inst.n)
    sets_ = boundary_sets(core)
    faces = (sets_.s1, sets_.s2, sets_.s3)
    found = set(faces[0]) | set(faces[1]) | set(faces[2])
    roles = [faces[i] for i in sorted(range(3), key=lambda i: (len(faces[i]), i)) if faces[i]]
    if roles:
        pick = roles[0]
        sub = roles[1] if len(roles) > 1 else roles[0]
        add = roles[-1]
        start = min(pick, key=lambda s: (s[0] + s[1] + s[2], s))
        for s in sub:
            dz = start[2] - s[2]
            if dz <= 0:
                continue
            dx = start[0] - s[0]
            dy = start[1] - s[1]
            for t in add:
                cand = (dx + t[0], dy + t[1], dz + t[2])
                if cand[0] > 0 and cand[1] > 0 and cand[2] > 0:
                    found.add(cand)
    result = sorted(found, key=lambda t: (t[2], t[0]))
    if core is not inst:
        result = [inst.to_caller(t) for t in result]
        result.sort(key=lambda t: (t[2], t[0], t[1]))
    expected, _ = count_closed(inst)
    return result, len(result) == expected


def _difference_index(
    left: tuple[SolutionTriple, ...] | list[SolutionTriple],
    right: tuple[SolutionTriple, ...] | list[SolutionTriple],
) -> dict[SolutionTriple, tuple[SolutionTriple, SolutionTriple]]:
    """Map each difference s_c - s_b to its lexicographically first (s_b, s_c)."""
    index: dict[SolutionTriple, tuple[SolutionTriple, SolutionTriple]] = {}
    for sb in left:
        b0, b1, b2 = sb
        for sc in right:
            key = (sc[0] - b0, sc[1] - b1, sc[2] - b2)
            if key not in index:
                index[key] = (sb, sc)
    return index


def _find_witness(
    target: SolutionTriple,
    first_set: tuple[SolutionTriple, ...] | list[SolutionTriple],
    diff_index: dict[SolutionTriple, tuple[SolutionTriple, SolutionTriple]],
    face_of: dict[SolutionTriple, int],
) -> CombinationWitness | None:
    """Lexicographically first (s_a, s_b, s_c) with s_a - s_b + s_c = target.

    For fixed s_a and s_b the third element is forced, so scanning s_a in
    order against the difference index reproduces the full lexicographic
    search without touching every triple.
    """
    t0, t1, t2 = target
    for sa in first_set:
        hit = diff_index.get((t0 - sa[0], t1 - sa[1], t2 - sa[2]))
        if hit is not None:
            sb, sc = hit
            return CombinationWitness(
                target=target,
                s_a=sa,
                s_b=sb,
                s_c=sc,
                signature=(face_of[sa], face_of[sb], face_of[sc]),
            )
    return None


def conjecture_check(
    inst: ThreeVarInstance, budget: int = CONJECTURE_BUDGET
) -> ConjectureReport:
    """Search boundary-combination witnesses for every solution.

    Strict mode searches s_1 - s_2 + s_3 over the face product
    s1-set x s2-set x s3-set; free mode searches s_a - s_b + s_c over the
    union of the faces. One witness per solution per mode is recorded
    (the lexicographically first); solutions without a free witness are
    the counterexamples. Raises BudgetExceededError when the nominal
    search space |union|^3 exceeds the budget.
    """
    sets_ = boundary_sets(inst)
    union = sets_.union()
    if len(union) ** 3 > budget:
        raise BudgetExceededError(
            f"free search over {len(union)}^3 triples exceeds budget {budget}"
        )
    face_of: dict[SolutionTriple, int] = {}
    for idx, face in ((3, sets_.s3), (2, sets_.s2), (1, sets_.s1)):
        for t in face:
            face_of[t] = idx
    diff_free = _difference_index(union, union)
    diff_strict = _difference_index(sets_.s2, sets_.s3)
    solutions = enumerate_exhaustive(inst)
    strict_wits = []
    free_wits = []
    counterexamples = []
    for target in solutions:
        strict_wits.append(_find_witness(target, sets_.s1, diff_strict, face_of))
        free = _find_witness(target, union, diff_free, face_of)
        free_wits.append(free)
        if free is None:
            counterexamples.append(target)
    total = len(solutions)
    size_sum = sets_.size_sum()
    limit = 3 * comb(size_sum, 3)
    return ConjectureReport(
        instance=inst,
        total_solutions=total,
        witnessed_strict=sum(w is not None for w in strict_wits),
        witnessed_free=sum(w is not None for w in free_wits),
        counterexamples=tuple(counterexamples),
        size_sum=size_sum,
        bound_limit=limit,
        bound_holds=total <= limit,
        flagged_for_review=total > 0 and size_sum < 3,
        solutions=tuple(solutions),
        strict_witnesses=tuple(strict_wits),
        free_witnesses=tuple(free_wits),
    )


def conjecture_sweep(
    p_max: int,
    q_max: int,
    l_max: int,
    n_max: int,
    budget: int = CONJECTURE_BUDGET,
) -> SweepReport:
    """Run conjecture_check over a whole coefficient/n grid.

    Iterates the canonical representatives p <= q <= l inside the box
    (permuted instances are equivalent) with gcd(p, q, l) = 1, n from 0
    to n_max, in deterministic order. Bound violations are split into
    the applicable regime (at least three boundary solutions) and the
    flagged-for-review edge (solutions exist, boundary nearly empty);
    both are reported explicitly, never asserted away.
    """
    instances = 0
    fully_free = 0
    fully_strict = 0
    with_counter = 0
    violations = 0
    flagged = 0
    counter_list: list[tuple[int, int, int, int, SolutionTriple]] = []
    violation_list: list[tuple[int, int, int, int, int, int]] = []
    for p in range(1, p_max + 1):
        for q in range(p, q_max + 1):
            for l in range(q, l_max + 1):
                if math.gcd(math.gcd(p, q), l) != 1:
                    continue
                for n in range(n_max + 1):
                    report = conjecture_check(
                        ThreeVarInstance(p, q, l, n), budget=budget
                    )
                    instances += 1
                    if report.witnessed_free == report.total_solutions:
                        fully_free += 1
                    if report.witnessed_strict == report.total_solutions:
                        fully_strict += 1
                    if report.counterexamples:
                        with_counter += 1
                        counter_list.extend(
                            (p, q, l, n, t) for t in report.counterexamples
                        )
                    if report.flagged_for_review:
                        flagged += 1
                    if not report.bound_holds and not report.flagged_for_review:
                        violations += 1
                        violation_list.append(
                            (p, q, l, n, report.total_solutions, report.size_sum)
                        )
    return SweepReport(
        p_max=p_max,
        q_max=q_max,
        l_max=l_max,
        n_max=n_max,
        instances=instances,
        fully_witnessed_free=fully_free,
        fully_witnessed_strict=fully_strict,
        with_counterexamples=with_counter,
        bound_violations=violations,
        flagged_for_review=flagged,
        counterexample_list=tuple(counter_list),
        bound_violation_list=tuple(violation_list),
    )
