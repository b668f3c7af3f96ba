"""Brute-force ground truth over small prime fields.

Everything here is desk-scale exhaustive enumeration: stream all monic
polynomials of a given (multi)degree, build the set of distinct products to
sieve out reducibles, and build the set of distinct compositions h(Q) to sieve
out decomposables.  The resulting censuses are what the closed formulas are
checked against, so nothing in this module may depend on those formulas; the
only shared ingredient is the monomial-count helper binom_b.

"Monic" for several variables means graded-lexicographic leading coefficient 1,
one canonical representative per nonzero-scalar class.  Leading monomials
multiply, so products of monics are monic and the product sieve is sound.
"""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass, field

from .qpoly import ComputationError, binom_b

SUPPORTED_PRIMES = (2, 3, 5)
ENUM_BUDGET = 1 << 25
SIEVE_BUDGET = 1 << 26


class BudgetExceededError(ComputationError):
    """The requested census is beyond the exhaustive-search budget."""


class FqMPoly:
    """Multivariate polynomial over F_p, terms keyed by exponent tuple."""

    __slots__ = ("p", "nvars", "terms", "_key")

    def __init__(self, p, nvars, terms=None):
        if p not in SUPPORTED_PRIMES:
            raise ValueError(f"p must be one of {SUPPORTED_PRIMES}")
        if nvars < 1:
            raise ValueError("need at least one variable")
        d = {}
        if terms:
            for e, c in terms.items():
                e = tuple(e)
                if len(e) != nvars or any(x < 0 for x in e):
                    raise ValueError(f"bad exponent vector {e}")
                c = c % p
                if c:
                    d[e] = c
        self.p = p
        self.nvars = nvars
        self.terms = d
        self._key = None

    @classmethod
    def _raw(cls, p, nvars, terms):
        poly = cls.__new__(cls)
        poly.p = p
        poly.nvars = nvars
        poly.terms = terms
        poly._key = None
        return poly

    @classmethod
    def constant(cls, p, nvars, c):
        return cls(p, nvars, {(0,) * nvars: c})

    @classmethod
    def variable(cls, p, nvars, i):
        e = [0] * nvars
        e[i] = 1
        return cls(p, nvars, {tuple(e): 1})

    def _check_compatible(self, other):
        if self.p != other.p or self.nvars != other.nvars:
            raise ValueError("mixed moduli or variable counts")

    def __add__(self, other):
        self._check_compatible(other)
        out = dict(self.terms)
        p = self.p
        for e, c in other.terms.items():
            nc = (out.get(e, 0) + c) % p
            if nc:
                out[e] = nc
            else:
                out.pop(e, None)
        return FqMPoly._raw(p, self.nvars, out)

    def __mul__(self, other):
        self._check_compatible(other)
        p = self.p
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                nc = (out.get(e, 0) + c1 * c2) % p
                if nc:
                    out[e] = nc
                else:
                    out.pop(e, None)
        return FqMPoly._raw(p, self.nvars, out)

    def total_degree(self):
        """Max exponent sum; -1 for the zero polynomial."""
        return max((sum(e) for e in self.terms), default=-1)

    def multi_degree(self):
        """Per-variable maximal exponents."""
        if not self.terms:
            return (-1,) * self.nvars
        return tuple(max(e[i] for e in self.terms) for i in range(self.nvars))

    def leading_monomial(self):
        return max(self.terms, key=lambda e: (sum(e), e))

    def leading_coeff(self):
        return self.terms[self.leading_monomial()]

    def is_monic(self):
        return bool(self.terms) and self.leading_coeff() == 1

    def constant_term(self):
        return self.terms.get((0,) * self.nvars, 0)

    def key(self):
        if self._key is None:
            self._key = frozenset(self.terms.items())
        return self._key

    def __eq__(self, other):
        if not isinstance(other, FqMPoly):
            return NotImplemented
        return self.p == other.p and self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self):
        return hash((self.p, self.key()))

    def __str__(self):
        if not self.terms:
            return "0"
        names = "xyzuv"
        parts = []
        for e in sorted(self.terms, key=lambda e: (sum(e), e), reverse=True):
            c = self.terms[e]
            mon = "*".join(
                names[i] if x == 1 else f"{names[i]}^{x}" for i, x in enumerate(e) if x
            )
            if not mon:
                parts.append(str(c))
            else:
                parts.append(mon if c == 1 else f"{c}*{mon}")
        return " + ".join(parts)

    __repr__ = __str__


def compose(h, Q: FqMPoly) -> FqMPoly:
    """h(Q) for univariate h given as coefficients [c_0, c_1, ..., c_m].

    Needs deg h >= 2 and a nonzero leading coefficient; evaluated by Horner in
    the polynomial ring, so total_degree(h(Q)) = m * total_degree(Q).
    """
    h = list(h)
    if len(h) < 3:
        raise ValueError("the outer polynomial must have degree at least 2")
    if h[-1] % Q.p == 0:
        raise ValueError("the outer polynomial has zero leading coefficient")
    acc = FqMPoly.constant(Q.p, Q.nvars, h[-1])
    for c in reversed(h[:-1]):
        acc = acc * Q + FqMPoly.constant(Q.p, Q.nvars, c)
    return acc


def monomials_upto(nvars: int, n: int):
    """Exponent vectors of total degree <= n in graded-lex descending order."""
    mons = [e for e in itertools.product(range(n + 1), repeat=nvars) if sum(e) <= n]
    mons.sort(key=lambda e: (sum(e), e), reverse=True)
    return mons


def enumerate_monic(p: int, nvars: int, n: int, budget: int = ENUM_BUDGET):
    """Every monic polynomial of total degree exactly n, each exactly once.

    Odometer order: leading monomial sweeps the degree-n block in graded-lex
    descending order, lower coefficients cycle fastest.
    """
    if p not in SUPPORTED_PRIMES:
        raise ValueError(f"p must be one of {SUPPORTED_PRIMES}")
    if n < 1:
        raise ValueError("need n >= 1")
    if p ** binom_b(nvars, n) > budget:
        raise BudgetExceededError(
            f"p^b_n = {p}^{binom_b(nvars, n)} exceeds the enumeration budget"
        )
    mons = monomials_upto(nvars, n)
    top_block = binom_b(nvars, n) - binom_b(nvars, n - 1)
    for i in range(top_block):
        lead = mons[i]
        free = mons[i + 1 :]
        for vec in itertools.product(range(p), repeat=len(free)):
            terms = {m: c for m, c in zip(free, vec) if c}
            terms[lead] = 1
            yield FqMPoly._raw(p, nvars, terms)


def enumerate_monic_multidegree(p: int, nbar, budget: int = ENUM_BUDGET):
    """Every monic polynomial whose degree in each variable is exactly nbar_i."""
    if p not in SUPPORTED_PRIMES:
        raise ValueError(f"p must be one of {SUPPORTED_PRIMES}")
    nbar = tuple(nbar)
    if not any(nbar) or any(x < 0 for x in nbar):
        raise ValueError("need a nonzero multidegree with nonnegative entries")
    nvars = len(nbar)
    box = [e for e in itertools.product(*(range(x + 1) for x in nbar))]
    if p ** len(box) > budget:
        raise BudgetExceededError(f"{p}^{len(box)} candidates exceed the budget")
    box.sort(key=lambda e: (sum(e), e), reverse=True)
    for vec in itertools.product(range(p), repeat=len(box)):
        terms = {m: c for m, c in zip(box, vec) if c}
        if not terms:
            continue
        ok = True
        for i in range(nvars):
            if max(e[i] for e in terms) != nbar[i]:
                ok = False
                break
        if not ok:
            continue
        if terms[max(terms, key=lambda e: (sum(e), e))] != 1:
            continue
        yield FqMPoly._raw(p, nvars, terms)


@dataclass
class CensusReport:
    """Outcome of one exhaustive census; classification counts sum to population."""

    p: int
    nu: int
    degree: object
    population: int
    classified: dict
    elapsed_ms: float = field(default=0.0)

    def __post_init__(self):
        if sum(self.classified.values()) != self.population:
            raise ValueError("classification counts do not sum to the population")

    def to_json_obj(self):
        obj = {"p": self.p, "nu": self.nu, "degree": self.degree, "population": self.population}
        obj.update(self.classified)
        obj["elapsed_ms"] = self.elapsed_ms
        return obj


def _monic_count(p, nvars, n):
    # raw population size of enumerate_monic, used only for budget prechecks
    return (p ** binom_b(nvars, n) - p ** binom_b(nvars, n - 1)) // (p - 1)


def _encoder(nvars, n, p):
    # weight per monomial slot: encoding is the base-p digit vector read off
    # the graded-lex monomial list, packed into one int for cheap set storage
    return {m: p**i for i, m in enumerate(monomials_upto(nvars, n))}


def _encode(poly, weights):
    v = 0
    for e, c in poly.terms.items():
        v += c * weights[e]
    return v


def census_irreducible_monic(
    p: int, nu: int, n: int, budget: int = ENUM_BUDGET, sieve_budget: int = SIEVE_BUDGET
) -> CensusReport:
    """Irreducible = monic population minus distinct products of lower monics."""
    t0 = time.perf_counter()
    if n >= 2:
        cost = sum(_monic_count(p, nu, a) * _monic_count(p, nu, n - a) for a in range(1, n))
        if cost > sieve_budget:
            raise BudgetExceededError(f"product sieve with {cost} pairs exceeds the budget")
    population = sum(1 for _ in enumerate_monic(p, nu, n, budget))
    weights = _encoder(nu, n, p)
    products = set()
    factors = {a: list(enumerate_monic(p, nu, a, budget)) for a in range(1, n // 2 + 1)}
    for a in range(1, n // 2 + 1):
        if a < n - a:
            others = list(enumerate_monic(p, nu, n - a, budget))
            for A in factors[a]:
                for B in others:
                    products.add(_encode(A * B, weights))
        else:
            la = factors[a]
            for i, A in enumerate(la):
                for B in la[i:]:
                    products.add(_encode(A * B, weights))
    reducible = len(products)
    elapsed = (time.perf_counter() - t0) * 1000.0
    return CensusReport(
        p, nu, n, population,
        {"irreducible": population - reducible, "reducible": reducible},
        elapsed,
    )


def census_irreducible_univariate(p: int, n: int, budget: int = 1 << 20) -> CensusReport:
    """Product sieve over monic univariate polynomials of degree n."""
    if p ** n > budget:
        raise BudgetExceededError(f"{p}^{n} exceeds the univariate budget")
    return census_irreducible_monic(p, 1, n)


def census_irreducible_multidegree(
    p: int, nu: int, nbar, budget: int = ENUM_BUDGET, sieve_budget: int = SIEVE_BUDGET
) -> CensusReport:
    """Product sieve over all multidegree splits nbar = abar + bbar.

    Factor pairs are drawn from exact-multidegree monic enumerations;
    membership of a product is decided on the product itself, never inferred
    from the split.
    """
    t0 = time.perf_counter()
    nbar = tuple(nbar)
    if len(nbar) != nu:
        raise ValueError("multidegree length does not match the variable count")
    population = sum(1 for _ in enumerate_monic_multidegree(p, nbar, budget))
    weights = {
        m: p**i for i, m in enumerate(itertools.product(*(range(x + 1) for x in nbar)))
    }
    factor_lists: dict[tuple, list] = {}

    def factors(abar):
        if abar not in factor_lists:
            factor_lists[abar] = list(enumerate_monic_multidegree(p, abar, budget))
        return factor_lists[abar]

    splits = []
    for abar in itertools.product(*(range(x + 1) for x in nbar)):
        bbar = tuple(x - a for x, a in zip(nbar, abar))
        if any(abar) and any(bbar) and abar <= bbar:
            splits.append((abar, bbar))
    cost = sum(len(factors(a)) * len(factors(b)) for a, b in splits)
    if cost > sieve_budget:
        raise BudgetExceededError(f"product sieve with {cost} pairs exceeds the budget")

    products = set()
    for abar, bbar in splits:
        la, lb = factors(abar), factors(bbar)
        if abar == bbar:
            pairs = ((A, B) for i, A in enumerate(la) for B in la[i:])
        else:
            pairs = itertools.product(la, lb)
        for A, B in pairs:
            P = A * B
            if P.multi_degree() == nbar:
                products.add(_encode(P, weights))
    reducible = len(products)
    elapsed = (time.perf_counter() - t0) * 1000.0
    return CensusReport(
        p, nu, list(nbar), population,
        {"irreducible": population - reducible, "reducible": reducible},
        elapsed,
    )


def _all_of_degree(p, nvars, d, budget):
    """All polynomials (any leading coefficient) of total degree exactly d."""
    if p ** binom_b(nvars, d) > budget:
        raise BudgetExceededError(f"{p}^{binom_b(nvars, d)} candidates exceed the budget")
    mons = monomials_upto(nvars, d)
    top_block = binom_b(nvars, d) - binom_b(nvars, d - 1)
    out = []
    for vec in itertools.product(range(p), repeat=len(mons)):
        if not any(vec[:top_block]):
            continue
        terms = {m: c for m, c in zip(mons, vec) if c}
        out.append(FqMPoly._raw(p, nvars, terms))
    return out


def _decomposable_data(p, nu, n, budget):
    """Distinct compositions of degree n plus the number of generating pairs.

    Inner polynomials are the normalized indecomposables of each proper
    divisor degree (monic, zero constant term), built recursively; outer
    polynomials range over all univariates of the cofactor degree with
    nonzero leading coefficient.
    """
    indec_memo: dict[int, list] = {}

    def indecomposables(d):
        if d not in indec_memo:
            everything = _all_of_degree(p, nu, d, budget)
            decomposable, _ = build(d)
            weights = _encoder(nu, d, p)
            indec_memo[d] = [f for f in everything if _encode(f, weights) not in decomposable]
        return indec_memo[d]

    def build(m):
        weights = _encoder(nu, m, p)
        seen = set()
        pairs = 0
        for d in (d for d in range(1, m) if m % d == 0):
            inner = [
                Q for Q in indecomposables(d)
                if Q.is_monic() and Q.constant_term() == 0
            ]
            # the normalization map is (p-1)*p to one on indecomposables
            assert len(inner) * (p - 1) * p == len(indecomposables(d))
            deg_h = m // d
            for Q in inner:
                for lead in range(1, p):
                    for rest in itertools.product(range(p), repeat=deg_h):
                        P = compose(list(rest) + [lead], Q)
                        assert P.total_degree() == m
                        seen.add(_encode(P, weights))
                        pairs += 1
        return seen, pairs

    return build(n)


def census_indecomposable(p: int, nu: int, n: int, budget: int = ENUM_BUDGET) -> CensusReport:
    """Indecomposable = all degree-n polynomials minus distinct compositions."""
    t0 = time.perf_counter()
    if p ** binom_b(nu, n) > budget:
        raise BudgetExceededError(f"{p}^{binom_b(nu, n)} candidates exceed the budget")
    population = p ** binom_b(nu, n) - p ** binom_b(nu, n - 1)
    decomposable, _ = _decomposable_data(p, nu, n, budget)
    elapsed = (time.perf_counter() - t0) * 1000.0
    return CensusReport(
        p, nu, n, population,
        {"indecomposable": population - len(decomposable), "decomposable": len(decomposable)},
        elapsed,
    )


def decomposition_audit(p: int, nu: int, n: int, budget: int = ENUM_BUDGET):
    """(generating pairs, distinct compositions) at degree n; equality of the
    two certifies that normalized decompositions are unique."""
    decomposable, pairs = _decomposable_data(p, nu, n, budget)
    return pairs, len(decomposable)
