"""Box-truncated formal power series in several variables with QPoly coefficients.

A series lives on the box 0 <= n_i <= T_i; the coefficient at the all-zero
index is identically zero.  The logarithm is computed by the same derivative
recurrence as in one variable, run along a single pivot variable; the slice
with pivot index zero is untouched by that derivative and is recovered by
recursing on the restricted sub-box (setting a variable to zero commutes with
the logarithm).
"""

from __future__ import annotations

import itertools
import math
from fractions import Fraction

from .qpoly import QPoly, divisors, mobius

MAX_BOX_CELLS = 10**6


class MSeries:
    """Sparse coefficients over the truncation box, indexed by multi-index."""

    __slots__ = ("bounds", "coeffs")

    def __init__(self, bounds, coeffs=None):
        bounds = tuple(bounds)
        if not bounds or any(not isinstance(b, int) or b < 0 for b in bounds):
            raise ValueError("bounds must be nonnegative integers")
        cells = math.prod(b + 1 for b in bounds)
        if cells > MAX_BOX_CELLS:
            raise ValueError(f"box with {cells} cells exceeds the {MAX_BOX_CELLS} budget")
        d = {}
        zero = (0,) * len(bounds)
        if coeffs:
            for idx, c in coeffs.items():
                idx = tuple(idx)
                if len(idx) != len(bounds) or any(
                    not isinstance(x, int) or x < 0 or x > t for x, t in zip(idx, bounds)
                ):
                    raise ValueError(f"index {idx} outside the box {bounds}")
                if not isinstance(c, QPoly):
                    raise TypeError("coefficients must be QPoly values")
                if not c:
                    continue
                if idx == zero:
                    raise ValueError("the constant term of the series must be zero")
                d[idx] = c
        self.bounds = bounds
        self.coeffs = d

    def coeff(self, nbar) -> QPoly:
        nbar = tuple(nbar)
        if len(nbar) != len(self.bounds) or any(
            x < 0 or x > t for x, t in zip(nbar, self.bounds)
        ):
            raise IndexError(f"index {nbar} outside the box {self.bounds}")
        return self.coeffs.get(nbar, QPoly.zero())

    def __eq__(self, other):
        if not isinstance(other, MSeries):
            return NotImplemented
        return self.bounds == other.bounds and self.coeffs == other.coeffs

    __hash__ = None

    def __repr__(self):
        return f"MSeries(bounds={self.bounds}, nonzero={len(self.coeffs)})"

    def to_json_obj(self):
        return {
            "bounds": list(self.bounds),
            "coeffs": [[list(i), c.to_json_obj()] for i, c in sorted(self.coeffs.items())],
        }

    @classmethod
    def from_json_obj(cls, obj) -> "MSeries":
        return cls(
            tuple(obj["bounds"]),
            {tuple(i): QPoly.from_json_obj(c) for i, c in obj["coeffs"]},
        )


def default_pivot(bounds) -> int:
    """The variable the recurrence runs along: largest bound, ties to the left."""
    return max(range(len(bounds)), key=lambda i: (bounds[i], -i))


def log1p(series: MSeries, pivot: int | None = None) -> MSeries:
    """log(1 + N) on the truncation box of N.

    For indices with pivot component n_p >= 1:

        n_p * l_n = n_p * a_n - sum (n_p - k_p) * a_k * l_{n-k}

    over nonzero k <= n with k_p < n_p.  Indices are visited in lexicographic
    order with the pivot outermost, so every l value needed is already
    available.  The pivot-zero slice comes from the recursive call.
    """
    bounds = series.bounds
    if all(b == 0 for b in bounds):
        return MSeries(bounds, {})
    if pivot is None:
        pivot = default_pivot(bounds)
    if not 0 <= pivot < len(bounds) or bounds[pivot] < 1:
        raise ValueError(f"pivot {pivot} has zero bound in {bounds}")

    out: dict[tuple, QPoly] = {}
    sub_bounds = bounds[:pivot] + (0,) + bounds[pivot + 1 :]
    if any(sub_bounds):
        sub_coeffs = {i: c for i, c in series.coeffs.items() if i[pivot] == 0}
        out.update(log1p(MSeries(sub_bounds, sub_coeffs)).coeffs)

    nvars = len(bounds)
    others = [i for i in range(nvars) if i != pivot]
    a = series.coeffs
    for np_ in range(1, bounds[pivot] + 1):
        inv = Fraction(1, np_)
        for rest in itertools.product(*(range(bounds[i] + 1) for i in others)):
            nbar = [0] * nvars
            nbar[pivot] = np_
            for i, x in zip(others, rest):
                nbar[i] = x
            nbar = tuple(nbar)
            acc = a.get(nbar, QPoly.zero()) * np_
            for kbar in itertools.product(
                *(range(np_) if i == pivot else range(nbar[i] + 1) for i in range(nvars))
            ):
                if not any(kbar):
                    continue
                ak = a.get(kbar)
                if ak is None:
                    continue
                jbar = tuple(n - k for n, k in zip(nbar, kbar))
                lj = out.get(jbar)
                if lj is None:
                    continue
                acc = acc - (lj * ak) * (np_ - kbar[pivot])
            l = acc * inv
            if l:
                out[nbar] = l
    return MSeries(bounds, out)


def mobius_invert_mcoeff(series: MSeries, nbar) -> QPoly:
    """sum over k | gcd(nbar) of mu(k)/k times the coefficient at nbar/k."""
    nbar = tuple(nbar)
    if not any(nbar):
        raise ValueError("the all-zero index has no primitive count")
    g = math.gcd(*nbar)
    acc = QPoly.zero()
    for k in divisors(g):
        mu = mobius(k)
        if mu:
            acc = acc + series.coeff(tuple(x // k for x in nbar)) * Fraction(mu, k)
    return acc
