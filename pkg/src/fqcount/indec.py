"""Counting indecomposable polynomials in nu >= 2 variables.

A polynomial is decomposable when it is h(Q) for a univariate h of degree at
least 2; the count J_n of indecomposable polynomials of total degree n (all of
them, not one per scalar class) satisfies

    J_n = Nbar_n - sum over proper divisors d of n of q^{n/d - 1} * J_d,

with Nbar_n = q^{b_n} - q^{b_{n-1}} the number of all degree-n polynomials.
Unrolling over divisor chains gives J_n = sum over d | n of mu(d, n) * Nbar_d
for a q-weighted Mobius function on the divisor lattice, and packaging the
sequences as formal Dirichlet series turns the recurrence into one division.
All three routes are implemented and must agree exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .counts import Approximant
from .qpoly import ComputationError, QPoly, QPolyOverQm1, binom_b, divisors


class HypothesisViolationError(ComputationError):
    """Input outside the hypothesis an asymptotic statement needs."""


def count_total_degree(nu: int, n: int) -> QPoly:
    """All polynomials of total degree exactly n: q^{b_n} - q^{b_{n-1}}."""
    if nu < 2 or n < 1:
        raise ValueError("need nu >= 2 and n >= 1")
    return QPoly({binom_b(nu, n): 1, binom_b(nu, n - 1): -1})


@lru_cache(maxsize=None)
def count_indecomposable(nu: int, n: int) -> QPoly:
    """J_n by the memoized divisor recurrence; integer coefficients throughout."""
    acc = count_total_degree(nu, n)
    for d in divisors(n):
        if d < n:
            acc = acc - QPoly.monomial(n // d - 1) * count_indecomposable(nu, d)
    return acc


@lru_cache(maxsize=None)
def gen_mobius(d: int, n: int) -> QPoly:
    """q-weighted Mobius function over strictly increasing divisor chains.

    Chains d = d_1 | d_2 | ... | d_{k+1} = n contribute
    (-1)^k q^{d_2/d_1 + ... + d_{k+1}/d_k - k}; splitting off the first step
    gives the recursion below, with the empty chain worth 1 at d = n.
    """
    if d < 1 or n % d != 0:
        raise ValueError(f"{d} does not divide {n}")
    if d == n:
        return QPoly.const(1)
    acc = QPoly.zero()
    for m in divisors(n):
        if m > d and m % d == 0:
            acc = acc - QPoly.monomial(m // d - 1) * gen_mobius(m, n)
    return acc


def count_indecomposable_via_mobius(nu: int, n: int) -> QPoly:
    """J_n as sum over d | n of mu(d, n) * Nbar_d; equals the recurrence."""
    if nu < 2 or n < 1:
        raise ValueError("need nu >= 2 and n >= 1")
    acc = QPoly.zero()
    for d in divisors(n):
        acc = acc + gen_mobius(d, n) * count_total_degree(nu, d)
    return acc


@dataclass(frozen=True)
class DirichletSeq:
    """Coefficients a_1 .. a_M of a formal Dirichlet series.

    The index is purely a divisor-lattice label; nothing is ever evaluated.
    """

    coeffs: tuple

    def __post_init__(self):
        if not self.coeffs:
            raise ValueError("need at least one coefficient")
        if not all(isinstance(c, QPoly) for c in self.coeffs):
            raise TypeError("coefficients must be QPoly values")

    @property
    def length(self) -> int:
        return len(self.coeffs)

    def a(self, n: int) -> QPoly:
        if not 1 <= n <= len(self.coeffs):
            raise IndexError(f"index {n} outside 1..{len(self.coeffs)}")
        return self.coeffs[n - 1]


def dirichlet_mul(a: DirichletSeq, b: DirichletSeq) -> DirichletSeq:
    """(a*b)_n = sum over d | n of a_d * b_{n/d}."""
    if a.length != b.length:
        raise ValueError("sequence lengths differ")
    out = []
    for n in range(1, a.length + 1):
        acc = QPoly.zero()
        for d in divisors(n):
            acc = acc + a.a(d) * b.a(n // d)
        out.append(acc)
    return DirichletSeq(tuple(out))


def dirichlet_div(num: DirichletSeq, den: DirichletSeq) -> DirichletSeq:
    """The quotient sequence c with dirichlet_mul(c, den) == num.

    Needs den_1 to be a unit of the coefficient ring, i.e. a nonzero constant.
    """
    if num.length != den.length:
        raise ValueError("sequence lengths differ")
    lead = den.a(1)
    if lead.degree() != 0:
        raise ValueError("leading coefficient of the divisor is not invertible")
    inv = Fraction(1, 1) / Fraction(lead.coeff(0))
    out: list[QPoly] = []
    for n in range(1, num.length + 1):
        acc = num.a(n)
        for d in divisors(n):
            if d < n:
                acc = acc - out[d - 1] * den.a(n // d)
        out.append(acc * inv)
    return DirichletSeq(tuple(out))


def total_degree_sequence(nu: int, length: int) -> DirichletSeq:
    """The Nbar_n sequence."""
    return DirichletSeq(tuple(count_total_degree(nu, n) for n in range(1, length + 1)))


def indecomposable_sequence(nu: int, length: int) -> DirichletSeq:
    """The J_n sequence."""
    return DirichletSeq(tuple(count_indecomposable(nu, n) for n in range(1, length + 1)))


def decomposition_weight_sequence(length: int) -> DirichletSeq:
    """The sequence q^{n-1}: outer univariate choices per normalized inner one."""
    return DirichletSeq(tuple(QPoly.monomial(n - 1) for n in range(1, length + 1)))


def _omega(n: int) -> int:
    # prime factors counted with multiplicity
    count = 0
    d = 2
    while d * d <= n:
        while n % d == 0:
            n //= d
            count += 1
        d += 1
    return count + (1 if n > 1 else 0)


def approx_indecomposable(nu: int, n: int) -> Approximant:
    """First-order approximation Nbar_n - q^{l-1} Nbar_{n/l} where l is the
    smallest divisor above 1; the error exponent is l + l' - 2 plus the degree
    of Nbar_{n/l'} for the next divisor l'.

    Only stated for n a product of at least three primes (with multiplicity);
    anything else raises rather than returning a silently wrong main term.
    """
    if nu < 2 or n < 1:
        raise ValueError("need nu >= 2 and n >= 1")
    if _omega(n) < 3:
        raise HypothesisViolationError(
            f"n = {n} is not a product of at least three primes"
        )
    divs = divisors(n)
    l, lp = divs[1], divs[2]
    main = count_total_degree(nu, n) - QPoly.monomial(l - 1) * count_total_degree(nu, n // l)
    err = l + lp - 2 + count_total_degree(nu, n // lp).degree()
    return Approximant(QPolyOverQm1.from_value(main), err)
