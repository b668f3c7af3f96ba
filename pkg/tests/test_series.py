from fractions import Fraction

import pytest

import fqcount.oracle as oracle
import fqcount.series as zs
from fqcount import QPoly, ZSeries, count_irreducible_univariate, divisors, mobius
from fqcount.counts import monic_count_series
from conftest import rand_qpoly


def q(e, c=1):
    return QPoly.monomial(e, c)


def geometric_series(T):
    # 1 + N = 1/(1 - q z), so N has coefficient q^m at z^m
    return ZSeries([q(m) for m in range(1, T + 1)])


def test_log_of_geometric():
    L = zs.log1p(geometric_series(12))
    for m in range(1, 13):
        assert L.coeff(m) == q(m, Fraction(1, m))


def test_log_of_single_term():
    N = ZSeries([q(1), QPoly.zero(), QPoly.zero()])
    L = zs.log1p(N)
    assert L.coeff(1) == q(1)
    assert L.coeff(2) == q(2, Fraction(-1, 2))
    assert L.coeff(3) == q(3, Fraction(1, 3))


def test_derivative_identity_randomized(rng):
    for _ in range(60):
        T = rng.randrange(2, 10)
        N = ZSeries([rand_qpoly(rng) for _ in range(T)])
        L = zs.log1p(N)
        for m in range(1, T + 1):
            lhs = L.coeff(m) * m
            for j in range(1, m):
                lhs = lhs + (L.coeff(j) * j) * N.coeff(m - j)
            assert lhs == N.coeff(m) * m


def test_coeff_accessor():
    s = ZSeries([q(1), q(2)])
    assert s.coeff(1) == q(1)
    with pytest.raises(IndexError):
        s.coeff(3)
    with pytest.raises(IndexError):
        s.coeff(0)


def test_mobius_invert_coeff_small_cases():
    L = zs.log1p(geometric_series(12))
    assert zs.mobius_invert_coeff(L, 1) == L.coeff(1)
    assert zs.mobius_invert_coeff(L, 7) == L.coeff(7) - L.coeff(1) * Fraction(1, 7)


def test_mobius_invert_coeff_matches_univariate_closed_form():
    L = zs.log1p(geometric_series(12))
    for n in range(1, 13):
        assert zs.mobius_invert_coeff(L, n) == count_irreducible_univariate(n)


def test_mobius_invert_coeff_matches_univariate_census():
    # exhaustive product sieve over F_2 is the ground truth here
    L = zs.log1p(geometric_series(12))
    for n in range(1, 13):
        got = zs.mobius_invert_coeff(L, n).evaluate(2)
        census = oracle.census_irreducible_univariate(2, n)
        assert got == census.classified["irreducible"]


def test_substitute_z_pow():
    f = ZSeries([q(0), QPoly.zero(), QPoly.zero(), QPoly.zero()])  # f = z
    assert zs.substitute_z_pow(f, 2).coeff(2) == q(0)
    assert zs.substitute_z_pow(f, 2).coeff(1) == QPoly.zero()
    g = ZSeries([q(1), QPoly.zero(), q(0)] + [QPoly.zero()] * 6)  # q z + z^3
    sub = zs.substitute_z_pow(g, 3)
    assert sub.coeff(3) == q(1)
    assert sub.coeff(9) == q(0)
    assert sum(1 for m in range(1, 10) if sub.coeff(m)) == 2
    with pytest.raises(ValueError):
        zs.substitute_z_pow(f, 0)


def test_substituted_unit_sums_to_all_ones():
    T = 16
    f = ZSeries([q(0)] + [QPoly.zero()] * (T - 1))
    acc = [QPoly.zero()] * T
    for k in range(1, T + 1):
        acc = [x + y for x, y in zip(acc, zs.substitute_z_pow(f, k).coeffs)]
    assert all(c == q(0) for c in acc)


def test_mobius_invert_series_all_ones():
    T = 16
    g = ZSeries([q(0)] * T)
    f = zs.mobius_invert_series(g)
    assert f.coeff(1) == q(0)
    assert all(f.coeff(m) == QPoly.zero() for m in range(2, T + 1))


def test_mobius_invert_series_roundtrip(rng):
    for _ in range(60):
        T = rng.randrange(2, 65)
        coeffs = [QPoly.zero()] * T
        for _ in range(rng.randrange(1, 9)):
            coeffs[rng.randrange(T)] = rand_qpoly(rng)
        f = ZSeries(coeffs)
        acc = [QPoly.zero()] * T
        for k in range(1, T + 1):
            acc = [x + y for x, y in zip(acc, zs.substitute_z_pow(f, k).coeffs)]
        assert zs.mobius_invert_series(ZSeries(acc)) == f


def test_log_coefficient_pinned_by_censuses():
    # [z^4] of the two-variable log equals I_4 + I_2/2 + I_1/4; evaluations at
    # p = 2, 3 come from product-sieve censuses (the degree-4 count over F_3,
    # 6778629, is frozen from that census rather than re-run here)
    l4 = zs.log1p(monic_count_series(2, 4)).coeff(4)
    for p, i4 in ((2, None), (3, 6778629)):
        i1 = oracle.census_irreducible_monic(p, 2, 1).classified["irreducible"]
        i2 = oracle.census_irreducible_monic(p, 2, 2).classified["irreducible"]
        if i4 is None:
            i4 = oracle.census_irreducible_monic(p, 2, 4).classified["irreducible"]
        assert l4.evaluate(p) == i4 + Fraction(i2, 2) + Fraction(i1, 4)


def test_reconstruction_identity_on_count_series():
    # the log coefficient at z^n rebuilds from the inverted counts at divisors
    L = zs.log1p(monic_count_series(2, 20))
    for n in range(1, 21):
        acc = QPoly.zero()
        for k in divisors(n):
            acc = acc + zs.mobius_invert_coeff(L, n // k) * Fraction(1, k)
        assert acc == L.coeff(n)


def test_weighted_inversion_agrees_with_coefficientwise_route():
    # summing mu(n)/n * L(z^n) gives the same counts as inverting coefficients
    T = 16
    L = zs.log1p(monic_count_series(2, T))
    acc = [QPoly.zero()] * T
    for n in range(1, T + 1):
        mu = mobius(n)
        if not mu:
            continue
        sub = zs.substitute_z_pow(L, n)
        acc = [x + y * Fraction(mu, n) for x, y in zip(acc, sub.coeffs)]
    for n in range(1, T + 1):
        assert acc[n - 1] == zs.mobius_invert_coeff(L, n)


def test_json_roundtrip():
    s = zs.log1p(monic_count_series(2, 5))
    obj = s.to_json_obj()
    assert obj["trunc"] == 5
    assert ZSeries.from_json_obj(obj) == s
    with pytest.raises(ValueError):
        ZSeries.from_json_obj({"trunc": 3, "coeffs": [q(1).to_json_obj()]})
