"""Exact sparse polynomials in the formal symbol q, plus small number-theory helpers.

Every count produced by this package is a polynomial in q with exact rational
coefficients.  A polynomial is stored as a dict mapping exponent -> coefficient;
zero coefficients are never stored, and whole-number Fractions are demoted to
int so that the common all-integer path never pays for gcd reductions.

The canonical rendering and JSON form list terms by strictly decreasing
exponent, so equal polynomials always print identically.
"""

from __future__ import annotations

import math
from fractions import Fraction
from itertools import accumulate

NEG_INF = float("-inf")


class ComputationError(Exception):
    """Base class for exact-computation failures."""


class NotDivisibleError(ComputationError):
    """An exact division left a nonzero remainder."""


def _norm(c):
    if isinstance(c, Fraction) and c.denominator == 1:
        return int(c)
    return c


_UNSET = object()


class QPoly:
    """Sparse polynomial in q with int/Fraction coefficients.

    Values are immutable after construction and safe to share; none of the
    operations mutate their operands.
    """

    __slots__ = ("terms", "_run")

    def __init__(self, terms=None):
        d = {}
        if terms:
            for e, c in terms.items():
                if not isinstance(e, int) or e < 0:
                    raise ValueError(f"exponent must be a nonnegative integer, got {e!r}")
                c = _norm(c)
                if c:
                    d[e] = c
        self.terms = d
        self._run = _UNSET

    @classmethod
    def _raw(cls, d):
        # Internal constructor: d must already be canonical (no zero coefficients).
        p = cls.__new__(cls)
        p.terms = d
        p._run = _UNSET
        return p

    @classmethod
    def zero(cls) -> "QPoly":
        return cls._raw({})

    @classmethod
    def monomial(cls, exponent: int, coeff=1) -> "QPoly":
        """The monomial coeff * q^exponent."""
        return cls({exponent: coeff})

    @classmethod
    def const(cls, c) -> "QPoly":
        return cls({0: c})

    # ------------------------------------------------------------------ basics

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if not isinstance(other, QPoly):
            return NotImplemented
        return self.terms == other.terms

    __hash__ = None

    def degree(self):
        """Largest exponent, or -inf for the zero polynomial."""
        return max(self.terms) if self.terms else NEG_INF

    def coeff(self, exponent: int):
        return self.terms.get(exponent, 0)

    def num_terms(self) -> int:
        return len(self.terms)

    def sorted_terms(self):
        """Term list in canonical order (strictly decreasing exponent)."""
        return sorted(self.terms.items(), key=lambda t: -t[0])

    def is_integral(self) -> bool:
        """True when every coefficient is an integer.

        Arithmetic may leave whole numbers stored as Fractions; those count
        as integers (all observations here go through value semantics).
        """
        return all(
            not isinstance(c, Fraction) or c.denominator == 1
            for c in self.terms.values()
        )

    def denominator_lcm(self) -> int:
        """lcm of all coefficient denominators (1 for an integral polynomial)."""
        d = 1
        for c in self.terms.values():
            if isinstance(c, Fraction):
                d = d * c.denominator // math.gcd(d, c.denominator)
        return d

    # -------------------------------------------------------------- arithmetic

    def __add__(self, other):
        if not isinstance(other, QPoly):
            return NotImplemented
        if not self.terms:
            return other
        if not other.terms:
            return self
        out = dict(self.terms)
        for e, c in other.terms.items():
            nc = out.get(e, 0) + c
            if nc:
                out[e] = nc
            else:
                del out[e]
        return QPoly._raw(out)

    def __sub__(self, other):
        if not isinstance(other, QPoly):
            return NotImplemented
        if not other.terms:
            return self
        out = dict(self.terms)
        for e, c in other.terms.items():
            nc = out.get(e, 0) - c
            if nc:
                out[e] = nc
            else:
                del out[e]
        return QPoly._raw(out)

    def __neg__(self):
        return QPoly._raw({e: -c for e, c in self.terms.items()})

    def _run_info(self):
        # (lo, length, coeff) when the terms are coeff * (q^lo + ... + q^hi),
        # i.e. consecutive exponents all carrying the same coefficient.
        if self._run is _UNSET:
            info = None
            t = self.terms
            if len(t) >= 2:
                lo, hi = min(t), max(t)
                if hi - lo + 1 == len(t):
                    vals = iter(t.values())
                    c0 = next(vals)
                    if all(c == c0 for c in vals):
                        info = (lo, len(t), c0)
            self._run = info
        return self._run

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                return QPoly.zero()
            if other == 1:
                return self
            return QPoly._raw({e: _norm(c * other) for e, c in self.terms.items()})
        if not isinstance(other, QPoly):
            return NotImplemented
        a, b = self.terms, other.terms
        if not a or not b:
            return QPoly.zero()
        if len(a) == 1:
            (e1, c1), = a.items()
            return QPoly._raw({e1 + e: _norm(c1 * c) for e, c in b.items()})
        if len(b) == 1:
            (e1, c1), = b.items()
            return QPoly._raw({e1 + e: _norm(c1 * c) for e, c in a.items()})
        # Multiplying by a constant-coefficient run of consecutive exponents
        # reduces to a sliding-window sum over the other factor; this is the
        # hot path of the series logarithm, where one factor is always a
        # geometric run of length ~n against a dense partner of ~n^2 terms.
        run = self._run_info()
        dense = other
        if run is None:
            run = other._run_info()
            dense = self
        if run is not None:
            lo_r, k, cr = run
            lo_d, hi_d = min(dense.terms), max(dense.terms)
            span = hi_d - lo_d + 1
            if span + k < len(dense.terms) * k:
                return QPoly._raw(_run_mul(dense.terms, lo_d, span, lo_r, k, cr))
        if len(a) > len(b):
            a, b = b, a
        out = {}
        for e1, c1 in a.items():
            for e2, c2 in b.items():
                e = e1 + e2
                nc = out.get(e, 0) + c1 * c2
                if nc:
                    out[e] = nc
                else:
                    del out[e]
        return QPoly._raw(out)

    __rmul__ = __mul__

    def evaluate(self, q0):
        """Exact value at q = q0 (int when all coefficients are integers)."""
        return _norm(sum(c * q0**e for e, c in self.terms.items()))

    # --------------------------------------------------------------- rendering

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for e, c in self.sorted_terms():
            neg = c < 0
            body = _term_str(-c if neg else c, e)
            if not parts:
                parts.append("-" + body if neg else body)
            else:
                parts.append((" - " if neg else " + ") + body)
        return "".join(parts)

    def __repr__(self):
        return f"QPoly({self})"

    def latex(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for e, c in self.sorted_terms():
            neg = c < 0
            body = _term_latex(-c if neg else c, e)
            if not parts:
                parts.append("-" + body if neg else body)
            else:
                parts.append((" - " if neg else " + ") + body)
        return "".join(parts)

    def to_json_obj(self):
        return {"terms": [[e, str(c)] for e, c in self.sorted_terms()]}

    @classmethod
    def from_json_obj(cls, obj) -> "QPoly":
        terms = {}
        for e, c in obj["terms"]:
            terms[int(e)] = Fraction(c) if "/" in c else int(c)
        return cls(terms)


def _run_mul(dense_terms, lo_d, span, lo_r, k, cr):
    # dense * cr*(q^lo_r + ... + q^{lo_r+k-1}) via prefix sums: the result
    # coefficient at offset x is the window sum of dense coefficients in
    # (x-k, x].  O(span + k) instead of O(|dense| * k).
    arr = [0] * span
    for e, c in dense_terms.items():
        arr[e - lo_d] = c
    ps = list(accumulate(arr))
    top = ps[-1]
    padded = ps + [top] * (k - 1)
    shifted = [0] * k + ps[: span - 1]
    base = lo_d + lo_r
    out = {}
    if cr == 1:
        for x, (hi, lo) in enumerate(zip(padded, shifted)):
            s = hi - lo
            if s:
                out[base + x] = s
    else:
        for x, (hi, lo) in enumerate(zip(padded, shifted)):
            s = hi - lo
            if s:
                out[base + x] = _norm(s * cr)
    return out


def _term_str(c, e):
    c = _norm(c)
    if e == 0:
        return str(c)
    qpart = "q" if e == 1 else f"q^{e}"
    if c == 1:
        return qpart
    if isinstance(c, Fraction):
        return f"({c}){qpart}"
    return f"{c}{qpart}"


def _term_latex(c, e):
    c = _norm(c)
    if e == 0:
        return str(c)
    qpart = "q" if e == 1 else f"q^{{{e}}}"
    if c == 1:
        return qpart
    if isinstance(c, Fraction):
        return f"\\frac{{{c.numerator}}}{{{c.denominator}}}{qpart}"
    return f"{c}{qpart}"


def div_qminus1(p: QPoly) -> QPoly:
    """Exact quotient p / (q - 1).

    The quotient coefficient at exponent e is the sum of p's coefficients
    above e, so the quotient is built from top-of-range partial sums; a
    nonzero total coefficient sum means p(1) != 0 and the division is not
    exact, which raises NotDivisibleError.
    """
    if not p.terms:
        return QPoly.zero()
    exps = sorted(p.terms, reverse=True)
    out = {}
    running = 0
    for i, e in enumerate(exps):
        running = _norm(running + p.terms[e])
        if i + 1 < len(exps):
            if running:
                for x in range(exps[i + 1], e):
                    out[x] = running
        else:
            if running:
                raise NotDivisibleError(f"remainder {running} when dividing by q - 1")
            # exponents below the smallest stored one all get the (zero) total
    return QPoly._raw(out)


_QM1 = QPoly({1: 1, 0: -1})


class QPolyOverQm1:
    """A value in the display normalization numerator / (q-1)^den_pow.

    den_pow is 0 (the value is the numerator itself) or 1.  With den_pow = 1
    the numerator must vanish at q = 1, which is exactly divisibility by
    (q - 1), so the represented value is always a genuine polynomial.
    """

    __slots__ = ("numerator", "den_pow")

    def __init__(self, numerator: QPoly, den_pow: int = 0):
        if den_pow not in (0, 1):
            raise ValueError("den_pow must be 0 or 1")
        if den_pow == 1:
            total = sum(numerator.terms.values())
            if total != 0:
                raise NotDivisibleError("numerator is not divisible by q - 1")
        self.numerator = numerator
        self.den_pow = den_pow

    @classmethod
    def from_value(cls, value: QPoly) -> "QPolyOverQm1":
        """Pick the sparser of the two normalizations of a polynomial value.

        Counts like the irreducible ones are far sparser after scaling by
        (q - 1); trivially small ones read better as plain polynomials.  Ties
        go to the plain form.
        """
        numerator = value * _QM1
        if len(value.terms) <= len(numerator.terms):
            return cls(value, 0)
        return cls(numerator, 1)

    def value(self) -> QPoly:
        """The represented polynomial, with the (q-1) factor divided out."""
        if self.den_pow == 0:
            return self.numerator
        return div_qminus1(self.numerator)

    def scaled_numerator(self) -> QPoly:
        """(q - 1) * value, regardless of the stored normalization."""
        if self.den_pow == 1:
            return self.numerator
        return self.numerator * _QM1

    def evaluate(self, q0):
        """Exact value at q = q0."""
        v = self.numerator.evaluate(q0)
        if self.den_pow:
            v = _norm(Fraction(v) / (q0 - 1) ** self.den_pow)
        return v

    def __eq__(self, other):
        if not isinstance(other, QPolyOverQm1):
            return NotImplemented
        return self.den_pow == other.den_pow and self.numerator == other.numerator

    __hash__ = None

    def __str__(self):
        if self.den_pow == 0:
            return str(self.numerator)
        return f"(1/(q-1))({self.numerator})"

    def __repr__(self):
        return f"QPolyOverQm1({self})"

    def latex(self) -> str:
        if self.den_pow == 0:
            return self.numerator.latex()
        return f"\\frac{{1}}{{q-1}}\\left({self.numerator.latex()}\\right)"

    def to_json_obj(self):
        obj = self.numerator.to_json_obj()
        obj["den_pow_qminus1"] = self.den_pow
        return obj


# --------------------------------------------------------- number-theory helpers


def mobius(n: int) -> int:
    """Classical Mobius function."""
    if n < 1:
        raise ValueError("mobius is defined for n >= 1")
    result = 1
    d = 2
    while d * d <= n:
        if n % d == 0:
            n //= d
            if n % d == 0:
                return 0
            result = -result
        d += 1
    if n > 1:
        result = -result
    return result


def divisors(n: int) -> list[int]:
    """All positive divisors of n, ascending."""
    if n < 1:
        raise ValueError("divisors is defined for n >= 1")
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def binom_b(nu: int, n: int) -> int:
    """Number of monomials of total degree <= n in nu variables: C(nu+n, nu).

    The n = -1 case is defined as 0 (an empty degree range contains no
    monomials), which makes degree-0 counts come out right.
    """
    if nu < 1:
        raise ValueError("need at least one variable")
    if n < -1:
        raise ValueError("n must be >= -1")
    if n == -1:
        return 0
    return math.comb(nu + n, nu)
