"""Counting formulas for monic and irreducible polynomials over F_q.

Counts are polynomials in the symbol q.  The monic count by total degree has
the closed form (q^{b_n} - q^{b_{n-1}})/(q - 1) with b_n = C(nu+n, nu); the
irreducible counts come from the logarithm of the monic counting series
followed by Mobius inversion, by total degree in one formal variable z and by
multidegree on a truncation box.

The Mobius-inverted counts are integer valued at every prime power but their
coefficients are not integers in general: n times the degree-n count is
denominator-free, and so is gcd(nbar) times the multidegree count.  Those are
the integrality checks enforced here.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from . import mseries, series
from .qpoly import (
    ComputationError,
    QPoly,
    QPolyOverQm1,
    binom_b,
    div_qminus1,
    divisors,
    mobius,
)


class IntegralityViolationError(ComputationError):
    """A count came out with denominators the inversion formula cannot produce."""


def count_monic_total(nu: int, n: int) -> QPoly:
    """Monic polynomials of total degree exactly n in nu variables.

    One representative per nonzero-scalar class: (q^{b_n} - q^{b_{n-1}})/(q-1),
    always an exact division.
    """
    if nu < 1 or n < 1:
        raise ValueError("need nu >= 1 and n >= 1")
    return div_qminus1(QPoly({binom_b(nu, n): 1, binom_b(nu, n - 1): -1}))


def monic_count_series(nu: int, trunc: int) -> series.ZSeries:
    """The monic counting series by total degree, truncated at z^trunc."""
    if trunc < 1:
        raise ValueError("truncation order must be >= 1")
    return series.ZSeries([count_monic_total(nu, m) for m in range(1, trunc + 1)])


@lru_cache(maxsize=8)
def log_count_series(nu: int, trunc: int) -> series.ZSeries:
    """log(1 + monic counting series); cached since this dominates run time."""
    return series.log1p(monic_count_series(nu, trunc))


def _check_denominators(value: QPoly, bound: int, what: str) -> None:
    d = value.denominator_lcm()
    if bound % d != 0:
        raise IntegralityViolationError(
            f"{what}: coefficient denominators {d} do not divide {bound}"
        )


def irreducible_from_log(L: series.ZSeries, n: int) -> QPolyOverQm1:
    """Mobius inversion of a log counting series at degree n, with the
    denominator check every inverted count must satisfy."""
    value = series.mobius_invert_coeff(L, n)
    _check_denominators(value, n, f"irreducible count at degree {n}")
    return QPolyOverQm1.from_value(value)


def count_irreducible_degree(nu: int, n: int, trunc: int | None = None) -> QPolyOverQm1:
    """Irreducible monic polynomials of total degree exactly n, nu >= 2.

    Extracted from the series logarithm by Mobius inversion over the divisors
    of n.  Passing trunc >= n reuses one cached logarithm across many degrees.
    """
    if nu < 2:
        raise ValueError("the one-variable count has its own closed form")
    if n < 1:
        raise ValueError("need n >= 1")
    t = n if trunc is None else trunc
    if t < n:
        raise ValueError("truncation order must be at least n")
    return irreducible_from_log(log_count_series(nu, t), n)


def count_irreducible_univariate(n: int) -> QPoly:
    """Monic irreducible univariate polynomials of degree n.

    (1/n) sum over k | n of mu(k) q^{n/k}; rational coefficients, integer
    values at every prime power.
    """
    if n < 1:
        raise ValueError("need n >= 1")
    acc = QPoly.zero()
    for k in divisors(n):
        mu = mobius(k)
        if mu:
            acc = acc + QPoly.monomial(n // k, Fraction(mu, n))
    return acc


@dataclass(frozen=True)
class Approximant:
    """A first-order main term together with the q-degree of its error envelope.

    main is exact; everything of magnitude at most q^error_exponent is noise
    relative to it, and main_leading_terms() drops exactly that noise, which
    is the form the approximation is usually quoted in.
    """

    main: QPolyOverQm1
    error_exponent: int

    def __post_init__(self):
        lead = self.main.numerator.degree() - self.main.den_pow
        if not self.error_exponent < lead:
            raise ValueError("error envelope swallows the main term")

    def main_leading_terms(self) -> QPoly:
        """Numerator terms of main that stand above the error envelope."""
        cutoff = self.error_exponent + self.main.den_pow
        return QPoly({e: c for e, c in self.main.numerator.terms.items() if e > cutoff})


def approx_irreducible(nu: int, n: int) -> Approximant:
    """First-order approximation N_n - N_1 * N_{n-1} with error exponent
    b_{n-2} + b_2 - 2."""
    if nu < 2 or n < 3:
        raise ValueError("need nu >= 2 and n >= 3")
    main = count_monic_total(nu, n) - count_monic_total(nu, 1) * count_monic_total(nu, n - 1)
    err = binom_b(nu, n - 2) + binom_b(nu, 2) - 2
    return Approximant(QPolyOverQm1.from_value(main), err)


# ----------------------------------------------------------------- multidegree


def count_monic_total_multi(nbar) -> QPoly:
    """Monic polynomials of multidegree exactly nbar (every per-variable degree
    attained), by inclusion-exclusion over the corners of the degree box."""
    nbar = tuple(nbar)
    if len(nbar) < 2:
        raise ValueError("multidegree counting needs at least two variables")
    if any(x < 0 for x in nbar):
        raise ValueError("multidegree entries must be nonnegative")
    if not any(nbar):
        raise ValueError("the all-zero multidegree is excluded")
    return _monic_multi(nbar)


def _monic_multi(nbar) -> QPoly:
    # Inclusion-exclusion corner sum; also valid at the all-zero index, where
    # it collapses to the single monic constant.
    nu = len(nbar)
    num: dict[int, int] = {}
    for delta in itertools.product((0, 1), repeat=nu):
        e = math.prod(x + d for x, d in zip(nbar, delta))
        s = -1 if (nu + sum(delta)) % 2 else 1
        nc = num.get(e, 0) + s
        if nc:
            num[e] = nc
        else:
            del num[e]
    return div_qminus1(QPoly(num))


def multidegree_count_series(nbar) -> mseries.MSeries:
    """Monic counting series on the box bounded by nbar."""
    nbar = tuple(nbar)
    coeffs = {}
    for idx in itertools.product(*(range(x + 1) for x in nbar)):
        if any(idx):
            coeffs[idx] = _monic_multi(idx)
    return mseries.MSeries(nbar, coeffs)


def count_irreducible_multi(nbar) -> QPolyOverQm1:
    """Irreducible monic polynomials of multidegree exactly nbar."""
    nbar = tuple(nbar)
    if len(nbar) < 2:
        raise ValueError("multidegree counting needs at least two variables")
    if any(x < 0 for x in nbar):
        raise ValueError("multidegree entries must be nonnegative")
    if not any(nbar):
        raise ValueError("the all-zero multidegree is excluded")
    L = mseries.log1p(multidegree_count_series(nbar))
    value = mseries.mobius_invert_mcoeff(L, nbar)
    _check_denominators(value, math.gcd(*nbar), f"irreducible count at multidegree {nbar}")
    return QPolyOverQm1.from_value(value)


def approx_irreducible_multi(nbar) -> Approximant:
    """First-order approximation by multidegree.

    The input is sorted into weakly decreasing order first (counts are
    symmetric in the variables) and the result is reported for that order:
    main is N_nbar - N_{(1,0,..)} * N_{(n1-1,n2,..)}, and the error exponent
    is the larger q-degree of the two next products, the ones obtained by
    lowering the second coordinate or lowering the first twice.
    """
    nbar = tuple(sorted(nbar, reverse=True))
    if len(nbar) < 2:
        raise ValueError("multidegree counting needs at least two variables")
    if any(x < 0 for x in nbar) or not any(nbar):
        raise ValueError("need a nonzero multidegree with nonnegative entries")
    nu = len(nbar)
    e1 = tuple(1 if j == 0 else 0 for j in range(nu))
    e2 = tuple(1 if j == 1 else 0 for j in range(nu))
    d1 = tuple(x - e for x, e in zip(nbar, e1))
    main = _monic_multi(nbar) - _monic_multi(e1) * _monic_multi(d1)

    candidates = []
    if nbar[1] >= 1:
        down2 = tuple(x - e for x, e in zip(nbar, e2))
        candidates.append(_monic_multi(e2).degree() + _monic_multi(down2).degree())
    if nbar[0] >= 2:
        twice = tuple(2 if j == 0 else 0 for j in range(nu))
        down11 = (nbar[0] - 2,) + nbar[1:]
        candidates.append(_monic_multi(twice).degree() + _monic_multi(down11).degree())
    if not candidates or not main:
        raise ValueError(f"the approximation degenerates at multidegree {nbar}")
    return Approximant(QPolyOverQm1.from_value(main), max(candidates))
