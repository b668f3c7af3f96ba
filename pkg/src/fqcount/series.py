"""Truncated formal power series in z with QPoly coefficients.

A ZSeries holds the coefficients of z^1 .. z^T; the constant term is zero by
construction, which is exactly the shape of a counting series (nothing of
degree zero is counted).  The operations here are the logarithm of 1 + N(z)
and Mobius inversion, both over whole series and over single coefficients.
"""

from __future__ import annotations

from fractions import Fraction

from .qpoly import QPoly, divisors, mobius


class ZSeries:
    """Coefficients c_1 .. c_T of a series with zero constant term."""

    __slots__ = ("trunc", "coeffs")

    def __init__(self, coeffs):
        coeffs = tuple(coeffs)
        if not coeffs:
            raise ValueError("truncation order must be at least 1")
        if not all(isinstance(c, QPoly) for c in coeffs):
            raise TypeError("series coefficients must be QPoly values")
        self.trunc = len(coeffs)
        self.coeffs = coeffs

    def coeff(self, m: int) -> QPoly:
        """The coefficient of z^m, 1 <= m <= trunc."""
        if not 1 <= m <= self.trunc:
            raise IndexError(f"coefficient index {m} outside 1..{self.trunc}")
        return self.coeffs[m - 1]

    def __eq__(self, other):
        if not isinstance(other, ZSeries):
            return NotImplemented
        return self.coeffs == other.coeffs

    __hash__ = None

    def __repr__(self):
        return f"ZSeries(trunc={self.trunc})"

    def to_json_obj(self):
        return {"trunc": self.trunc, "coeffs": [c.to_json_obj() for c in self.coeffs]}

    @classmethod
    def from_json_obj(cls, obj) -> "ZSeries":
        if int(obj["trunc"]) != len(obj["coeffs"]):
            raise ValueError("trunc does not match the number of coefficients")
        return cls(QPoly.from_json_obj(c) for c in obj["coeffs"])


def log1p(series: ZSeries) -> ZSeries:
    """log(1 + N(z)) to the same truncation order.

    Differentiating gives (1 + N) L' = N', so the coefficients satisfy

        m*l_m = m*a_m - sum_{j=1}^{m-1} (j*l_j) * a_{m-j}.

    The recurrence is carried on u_m = m*l_m, which stays denominator-free for
    integral input, and each u_m is divided by m once at the end.  The inner
    convolution accumulates straight into a dict to avoid one intermediate
    polynomial per step.
    """
    T = series.trunc
    a = (None,) + series.coeffs
    u: list = [None] * (T + 1)
    for m in range(1, T + 1):
        acc = {e: c * m for e, c in a[m].terms.items()}
        for j in range(1, m):
            aj = a[m - j]
            if not aj.terms:
                continue
            for e, c in (u[j] * aj).terms.items():
                nc = acc.get(e, 0) - c
                if nc:
                    acc[e] = nc
                else:
                    del acc[e]
        u[m] = QPoly._raw(acc)
    return ZSeries([u[m] * Fraction(1, m) for m in range(1, T + 1)])


def mobius_invert_coeff(series: ZSeries, n: int) -> QPoly:
    """sum over k | n of mu(k)/k times the coefficient of z^{n/k}.

    Applied to the logarithm of a multiset counting series this recovers the
    count of the primitive objects of size n.
    """
    if not 1 <= n <= series.trunc:
        raise IndexError(f"coefficient index {n} outside 1..{series.trunc}")
    acc = QPoly.zero()
    for k in divisors(n):
        mu = mobius(k)
        if mu:
            acc = acc + series.coeff(n // k) * Fraction(mu, k)
    return acc


def substitute_z_pow(series: ZSeries, k: int) -> ZSeries:
    """The series f(z^k), truncated at the original order."""
    if k < 1:
        raise ValueError("substitution power must be >= 1")
    T = series.trunc
    zero = QPoly.zero()
    out = [zero] * T
    for m in range(1, T // k + 1):
        out[k * m - 1] = series.coeff(m)
    return ZSeries(out)


def mobius_invert_series(series: ZSeries) -> ZSeries:
    """Invert g(z) = sum_{k>=1} f(z^k): returns f = sum_n mu(n) g(z^n)."""
    T = series.trunc
    acc = [QPoly.zero()] * T
    for n in range(1, T + 1):
        mu = mobius(n)
        if not mu:
            continue
        sub = substitute_z_pow(series, n)
        for i in range(T):
            c = sub.coeffs[i]
            if c:
                acc[i] = acc[i] + c * mu
    return ZSeries(acc)
