"""Exact counts of irreducible and indecomposable polynomials over finite fields.

Counts are polynomials in the symbol q with exact rational coefficients,
obtained from generating-series logarithms and Mobius inversion; a brute-force
census over small prime fields validates every formula at desk scale.
"""

from .counts import (
    Approximant,
    IntegralityViolationError,
    approx_irreducible,
    approx_irreducible_multi,
    count_irreducible_degree,
    count_irreducible_multi,
    count_irreducible_univariate,
    count_monic_total,
    count_monic_total_multi,
    log_count_series,
    monic_count_series,
)
from .indec import (
    DirichletSeq,
    HypothesisViolationError,
    approx_indecomposable,
    count_indecomposable,
    count_indecomposable_via_mobius,
    count_total_degree,
    dirichlet_div,
    dirichlet_mul,
    gen_mobius,
)
from .mseries import MSeries
from .qpoly import (
    ComputationError,
    NotDivisibleError,
    QPoly,
    QPolyOverQm1,
    binom_b,
    div_qminus1,
    divisors,
    mobius,
)
from .series import ZSeries

__version__ = "0.1.0"

__all__ = [
    "Approximant",
    "ComputationError",
    "DirichletSeq",
    "HypothesisViolationError",
    "IntegralityViolationError",
    "MSeries",
    "NotDivisibleError",
    "QPoly",
    "QPolyOverQm1",
    "ZSeries",
    "approx_indecomposable",
    "approx_irreducible",
    "approx_irreducible_multi",
    "binom_b",
    "count_indecomposable",
    "count_indecomposable_via_mobius",
    "count_irreducible_degree",
    "count_irreducible_multi",
    "count_irreducible_univariate",
    "count_monic_total",
    "count_monic_total_multi",
    "count_total_degree",
    "dirichlet_div",
    "dirichlet_mul",
    "div_qminus1",
    "divisors",
    "gen_mobius",
    "log_count_series",
    "mobius",
    "monic_count_series",
    "__version__",
]
