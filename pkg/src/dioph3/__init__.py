"""Exact counting and enumeration of nonnegative solutions of
p*x + q*y + l*z = n, cross-validated across independent methods."""

from .core_arith import (
    BezoutCertificate,
    extended_gcd,
    gcd,
    mod_inverse,
    nearest_integer,
    solve_congruence,
)
from .errors import (
    BudgetExceededError,
    Dioph3Error,
    ExactHalfError,
    NegativeComponentError,
    NoNonnegativeError,
    NoSolutionError,
    NotCoprimeError,
    NotIntegralError,
    ZeroDenominatorError,
)
from .genfunc import (
    SeriesPrefix,
    brute_force_count,
    brute_force_profile,
    closed_form_123,
    series_count,
    series_prefix,
)
from .reduction_lab import (
    CombinationWitness,
    ConjectureReport,
    ReductionSets,
    SweepReport,
    boundary_sets,
    combine,
    conjecture_check,
    conjecture_sweep,
    heuristic_complete,
)
from .three_var import (
    SolutionTriple,
    ThreeVarInstance,
    ZSliceFamily,
    count_closed,
    count_residue,
    enumerate_closed,
    enumerate_exhaustive,
    mcnugget_count,
)
from .two_var import (
    BcsResidues,
    BinnerData,
    NonnegWindow,
    SolutionLine,
    TwoVarEquation,
    bcs_residues,
    closed_form_p12,
    count_bcs_table,
    count_binner,
    enumerate_nonneg,
    first_nonneg,
    frobenius_two,
    nonneg_window,
    particular_solution,
)

__version__ = "0.1.0"

__all__ = [
    "BezoutCertificate",
    "gcd",
    "extended_gcd",
    "solve_congruence",
    "mod_inverse",
    "nearest_integer",
    "Dioph3Error",
    "NoSolutionError",
    "NoNonnegativeError",
    "NotCoprimeError",
    "ExactHalfError",
    "BudgetExceededError",
    "ZeroDenominatorError",
    "NotIntegralError",
    "NegativeComponentError",
    "TwoVarEquation",
    "SolutionLine",
    "NonnegWindow",
    "BinnerData",
    "BcsResidues",
    "particular_solution",
    "nonneg_window",
    "first_nonneg",
    "count_binner",
    "enumerate_nonneg",
    "bcs_residues",
    "count_bcs_table",
    "frobenius_two",
    "closed_form_p12",
    "SolutionTriple",
    "ThreeVarInstance",
    "ZSliceFamily",
    "count_residue",
    "count_closed",
    "enumerate_closed",
    "enumerate_exhaustive",
    "mcnugget_count",
    "SeriesPrefix",
    "series_count",
    "series_prefix",
    "brute_force_count",
    "brute_force_profile",
    "closed_form_123",
    "ReductionSets",
    "CombinationWitness",
    "ConjectureReport",
    "SweepReport",
    "boundary_sets",
    "combine",
    "heuristic_complete",
    "conjecture_check",
    "conjecture_sweep",
]
