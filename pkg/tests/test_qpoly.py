import json
from fractions import Fraction

import pytest

from fqcount import (
    NotDivisibleError,
    QPoly,
    QPolyOverQm1,
    binom_b,
    div_qminus1,
    divisors,
    mobius,
)
from fqcount.qpoly import NEG_INF
from conftest import rand_qpoly


def q(e, c=1):
    return QPoly.monomial(e, c)


def test_ring_op_examples():
    assert q(3) - q(1) + (q(1) - q(0)) == QPoly({3: 1, 0: -1})
    assert (q(1) + q(0)) * (q(1) - q(0)) == QPoly({2: 1, 0: -1})
    assert QPoly({5151: 1, 5050: -1}).sorted_terms() == [(5151, 1), (5050, -1)]
    assert str(QPoly({5151: 1, 5050: -1})) == "q^5151 - q^5050"


def test_canonical_form_drops_zeros_and_whole_fractions():
    p = QPoly({2: Fraction(4, 2), 1: 0, 0: Fraction(0, 5)})
    assert p.terms == {2: 2}
    assert isinstance(p.coeff(2), int)


def test_bad_exponent_rejected():
    with pytest.raises(ValueError):
        QPoly({-1: 1})


def test_ring_laws_randomized(rng):
    for _ in range(200):
        a, b, c = (rand_qpoly(rng) for _ in range(3))
        assert (a + b) + c == a + (b + c)
        assert a + b == b + a
        assert a * b == b * a
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c


def test_run_multiplication_matches_generic(rng):
    # exercise the sliding-window fast path against the schoolbook product
    for _ in range(100):
        lo = rng.randrange(6)
        k = rng.randrange(2, 9)
        cr = rng.choice([1, -1, 2, Fraction(1, 2)])
        run = QPoly({lo + i: cr for i in range(k)})
        dense = rand_qpoly(rng, max_exp=12, max_terms=8)
        expect = QPoly.zero()
        for e, c in run.terms.items():
            expect = expect + dense * QPoly.monomial(e, c)
        assert run * dense == expect
        assert dense * run == expect


def test_scalar_multiplication():
    p = QPoly({3: 2, 0: -1})
    assert p * 0 == QPoly.zero()
    assert p * Fraction(1, 2) == QPoly({3: 1, 0: Fraction(-1, 2)})
    assert 3 * p == QPoly({3: 6, 0: -3})


def test_degree():
    assert QPoly.zero().degree() == NEG_INF
    assert QPoly({4954: 1, 12: 3}).degree() == 4954


def test_div_qminus1_examples():
    assert div_qminus1(QPoly({3: 1, 1: -1})) == QPoly({2: 1, 1: 1})
    assert div_qminus1(QPoly({6: 1, 3: -1})) == QPoly({5: 1, 4: 1, 3: 1})
    assert div_qminus1(QPoly({2: 1, 1: -1})) == q(1)
    assert div_qminus1(QPoly.zero()) == QPoly.zero()


def test_div_qminus1_rejects_inexact():
    with pytest.raises(NotDivisibleError):
        div_qminus1(QPoly({2: 1}))


def test_div_qminus1_roundtrip(rng):
    qm1 = QPoly({1: 1, 0: -1})
    for _ in range(200):
        p = rand_qpoly(rng, max_exp=40, max_terms=6)
        assert div_qminus1(p * qm1) * qm1 == p * qm1


def test_eval_examples():
    assert (q(2) + q(1)).evaluate(2) == 6
    assert QPoly({5: 1, 4: 1, 3: 1}).evaluate(2) == 56


def test_eval_is_ring_homomorphism(rng):
    for _ in range(200):
        a, b = rand_qpoly(rng), rand_qpoly(rng)
        x = rng.randrange(2, 7)
        assert (a * b).evaluate(x) == a.evaluate(x) * b.evaluate(x)
        assert (a + b).evaluate(x) == a.evaluate(x) + b.evaluate(x)


def test_rendering():
    assert str(QPoly.zero()) == "0"
    assert str(QPoly({2: 1, 1: -1, 0: 3})) == "q^2 - q + 3"
    assert str(QPoly({4952: 2, 1: Fraction(1, 2)})) == "2q^4952 + (1/2)q"
    assert QPoly({2: 1, 0: -1}).latex() == "q^{2} - 1"
    assert QPoly({3: Fraction(2, 3)}).latex() == "\\frac{2}{3}q^{3}"


def test_whole_fractions_from_arithmetic_render_as_integers():
    half = QPoly({1: Fraction(1, 2), 0: Fraction(3, 2)})
    p = half + half
    assert str(p) == "q + 3"
    assert p.latex() == "q + 3"
    assert p.is_integral()
    assert p == QPoly({1: 1, 0: 3})
    assert p.to_json_obj() == {"terms": [[1, "1"], [0, "3"]]}


def test_json_roundtrip(rng):
    for _ in range(50):
        p = rand_qpoly(rng)
        obj = p.to_json_obj()
        assert json.dumps(obj)  # serializable
        assert QPoly.from_json_obj(obj) == p
    obj = QPoly({5151: 1, 5050: -1}).to_json_obj()
    assert obj == {"terms": [[5151, "1"], [5050, "-1"]]}


def test_mobius_examples():
    assert mobius(1) == 1
    assert mobius(6) == 1
    assert mobius(12) == 0
    with pytest.raises(ValueError):
        mobius(0)


def test_mobius_divisor_sums():
    assert sum(mobius(d) for d in divisors(1)) == 1
    for n in range(2, 10001):
        assert sum(mobius(d) for d in divisors(n)) == 0


def test_divisors_examples():
    assert divisors(1) == [1]
    assert divisors(100) == [1, 2, 4, 5, 10, 20, 25, 50, 100]
    l, lp = [d for d in divisors(100) if d > 1][:2]
    assert (l, lp) == (2, 4)


def test_binom_b():
    assert [binom_b(2, n) for n in (0, 1, 2)] == [1, 3, 6]
    assert binom_b(2, 100) == 5151
    assert binom_b(2, 25) == 351
    assert binom_b(3, 8) == 165
    assert binom_b(2, -1) == 0
    with pytest.raises(ValueError):
        binom_b(0, 3)


def test_qpoly_over_qm1_invariants():
    num = QPoly({3: 1, 1: -1})  # (q-1)(q^2+q)
    v = QPolyOverQm1(num, 1)
    assert v.value() == QPoly({2: 1, 1: 1})
    assert v.scaled_numerator() == num
    assert v.evaluate(2) == 6
    assert v.evaluate(3) == 12
    assert str(v) == "(1/(q-1))(q^3 - q)"
    with pytest.raises(NotDivisibleError):
        QPolyOverQm1(QPoly({2: 1}), 1)


def test_qpoly_over_qm1_normalization():
    # plain form when it is at least as sparse, scaled form otherwise
    v = QPolyOverQm1.from_value(QPoly({2: 1, 1: 1}))
    assert v.den_pow == 0 and str(v) == "q^2 + q"
    dense = div_qminus1(QPoly({9: 1, 0: -1}))  # nine-term geometric quotient
    w = QPolyOverQm1.from_value(dense)
    assert w.den_pow == 1 and w.numerator == QPoly({9: 1, 0: -1})
    assert w.value() == dense
    assert w.to_json_obj()["den_pow_qminus1"] == 1
