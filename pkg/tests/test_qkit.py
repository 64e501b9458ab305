import threading

import pytest
from hypothesis import given
from hypothesis import strategies as st

from qlegendre.exactalg import ONE, ZERO, QPoly, QSeries, poly_exact_div, series_inv
from qlegendre.qkit import (
    OMEGA,
    OMEGA_BAR,
    DivergentSpec,
    EisensteinInt,
    IllSpecialized,
    NonIntegralExponent,
    PochhammerSpec,
    QuadraticExponent,
    divide_by_qpoch,
    eisenstein_chi,
    euler_inverse,
    inv_qpoch_infinite,
    jacobi_triple_product_sides,
    legendre3,
    minus_one_ratio,
    poch,
    pochhammer_finite,
    pochhammer_infinite,
    pochhammer_quotient,
    q3q3_ratio,
    q3q6_ratio,
    qbinom,
    qbinom_product,
    qbinomial_theorem_sides,
    qpoch,
    quintuple_product,
    quintuple_sides,
    quintuple_sum,
    theta_sum,
    triple_product_poly_sides,
)
from qlegendre.registry import quintuple_specializations


def P(*c):
    return QPoly(c)


def test_pochhammer_examples():
    assert pochhammer_finite(PochhammerSpec(1, 1, 1, 0)) == ONE
    assert pochhammer_finite(PochhammerSpec(-1, 0, 1, 2)) == P(2, 2)
    assert poch(3, 6, 1) == P(1, 0, 0, -1)
    assert pochhammer_infinite(PochhammerSpec(1, 1, 1), 5).coeffs == (1, -1, -1, 0, 0, 1)
    assert pochhammer_infinite(PochhammerSpec(1, 1, 2), 0).coeffs == (1,)
    with pytest.raises(DivergentSpec):
        pochhammer_infinite(PochhammerSpec(1, 0, 1), 5)
    with pytest.raises(ValueError):
        PochhammerSpec(2, 1, 1)


def test_euler_pentagonal():
    # (q;q)_oo = sum_k (-1)^k q^{k(3k-1)/2}
    N = 300
    pent = theta_sum(QuadraticExponent(3, -1, 0, 2), N, alternating=True)
    assert pochhammer_infinite(PochhammerSpec(1, 1, 1), N) == pent
    assert euler_inverse(N) * pent == QSeries.one(N)


def test_inverse_and_division_helpers():
    N = 80
    assert inv_qpoch_infinite(2, 3, N) == series_inv(pochhammer_infinite(PochhammerSpec(1, 2, 3), N))
    s = QSeries.from_poly(P(1, 3, -2, 7), N)
    assert divide_by_qpoch(s, 7, 2) * QSeries.from_poly(qpoch(7, 2), N) == s
    with pytest.raises(DivergentSpec):
        inv_qpoch_infinite(0, 1, 5)


def test_qbinom_examples():
    assert qbinom(2, 1) == P(1, 1)
    assert qbinom(4, 2) == P(1, 1, 2, 1, 1)
    assert qbinom(2, 3) == ZERO
    assert qbinom(3, -1) == ZERO
    assert qbinom(4, 2, 2) == P(1, 0, 1, 0, 2, 0, 1, 0, 1)


def test_qbinom_recurrence_matches_product_formula():
    for top in range(31):
        for bottom in range(top + 1):
            assert qbinom(top, bottom) == qbinom_product(top, bottom), (top, bottom)
    for top in range(16):
        for bottom in range(top + 1):
            assert qbinom(top, bottom, 3) == qbinom_product(top, bottom, 3)


def test_qbinom_limits():
    # [n, k] -> 1/(q)_k as n -> oo, and at q = 1 it is the ordinary binomial
    from math import comb
    N = 30
    assert QSeries.from_poly(qbinom(60, 10), N) == divide_by_qpoch(QSeries.one(N), 10)
    for n in range(12):
        for k in range(n + 1):
            assert qbinom(n, k)(1) == comb(n, k)


def test_qbinom_table_threadsafe():
    out = {}

    def work(i):
        out[i] = qbinom(40 + i, 20)

    threads = [threading.Thread(target=work, args=(i,)) for i in range(6)]
    for t in threads:
        t.start()
    for t in threads:
        t.join()
    for i, v in out.items():
        assert v == qbinom_product(40 + i, 20)


def test_ratio_factorizations_match_exact_division():
    for n in range(31):
        assert minus_one_ratio(n) == poly_exact_div(poch(0, 3, n, sign=-1), poch(0, 1, n, sign=-1)), n
        assert q3q6_ratio(n) == poly_exact_div(poch(3, 6, n), poch(1, 2, n)), n
        assert q3q3_ratio(n) == poly_exact_div(poch(3, 3, n), qpoch(n)), n


def test_pochhammer_quotient():
    assert pochhammer_quotient(6, (2, 1, 3)) == poly_exact_div(qpoch(6), qpoch(2) * qpoch(1) * qpoch(3))
    assert pochhammer_quotient(9, (2, 3), 2) == poly_exact_div(qpoch(9, 2), qpoch(2, 2) * qpoch(3, 2))
    assert pochhammer_quotient(5, (-1, 2)) == ZERO
    with pytest.raises(ValueError):
        pochhammer_quotient(3, (2, 2))


def test_legendre3_examples():
    assert legendre3(1) == 1 and legendre3(-1) == -1 and legendre3(6) == 0
    assert eisenstein_chi(0) == 0 and eisenstein_chi(2) == -1 and eisenstein_chi(4) == 1


def test_eisenstein_ring():
    assert OMEGA * OMEGA == EisensteinInt(-1, -1)
    assert OMEGA ** 3 == EisensteinInt(1)
    assert OMEGA_BAR == OMEGA ** 2 == OMEGA ** -1
    assert (OMEGA - OMEGA_BAR) * (OMEGA - OMEGA_BAR) == EisensteinInt(-3)
    assert EisensteinInt(2, 1).norm() == 3
    with pytest.raises(ValueError):
        EisensteinInt(2) ** -1
    with pytest.raises(ValueError):
        EisensteinInt(1).exact_div(EisensteinInt(2))


@given(st.integers(-10 ** 6, 10 ** 6))
def test_character_agrees_with_ring(j):
    assert legendre3(j) == eisenstein_chi(j)
    assert legendre3(j) + legendre3(j + 1) + legendre3(j + 2) == 0


def test_quadratic_exponent():
    e = QuadraticExponent(1, -3, 2, 2)
    assert [e(j) for j in range(-2, 4)] == [6, 3, 1, 0, 0, 1]
    assert e.is_integral_on({0, 1, 2}, 3)
    half = QuadraticExponent(1, 0, 0, 2)
    with pytest.raises(NonIntegralExponent):
        half(1)
    assert half.is_integral_on({0}, 2) and not half.is_integral_on({1}, 2)
    assert e.reflected()(-5) == e(5)
    assert e.plus(1, 0, 0)(3) == e(3) + 9


@given(st.integers(1, 6), st.integers(-20, 20), st.integers(-20, 20), st.integers(0, 60))
def test_j_range_is_exact(A, B, C, bound):
    e = QuadraticExponent(A, B, C)
    got = set(e.j_range(bound))
    want = {j for j in range(-100, 101) if e.numerator(j) <= bound}
    assert got == want


def test_theta_examples():
    assert theta_sum(QuadraticExponent(1), 4).coeffs == (1, 2, 0, 0, 2)
    assert theta_sum(QuadraticExponent(1), 4, character_shift=0) == QSeries.zero(4)
    got = theta_sum(QuadraticExponent(1), 4, alternating=True, character_shift=1)
    assert got.coeffs == (1, 1, 0, 0, -1)


def test_triple_product_polynomial_examples():
    lhs, rhs = triple_product_poly_sides(0, 0)
    assert lhs == rhs
    lhs, rhs = triple_product_poly_sides(1, 1)
    assert lhs == rhs and lhs.coefficient(0) == P(1, 0, 1)
    for L in range(8):
        a, b = qbinomial_theorem_sides(L)
        assert a == b


def test_jacobi_triple_product():
    for A, s, B in [(1, 1, 0), (2, -1, 1), (5, 1, -3), (7, -1, 4)]:
        lhs, rhs = jacobi_triple_product_sides(A, s, B, 150)
        assert lhs == rhs
    with pytest.raises(IllSpecialized):
        jacobi_triple_product_sides(2, 1, 2, 10)


def test_quintuple_examples():
    with pytest.raises(IllSpecialized):
        quintuple_sum(1, -1, 0, 10)
    assert quintuple_sum(6, -1, 1, 10)[0] == 1
    assert quintuple_product(6, -1, 1, 10)[0] == 1


def test_quintuple_sum_equals_product_for_registry_specializations():
    for A, s, B in quintuple_specializations(3):
        lhs, rhs = quintuple_sides(A, s, B, 300)
        assert lhs.first_mismatch(rhs) is None, (A, s, B)


def test_quintuple_naive_oracle():
    # product side rebuilt from dense naive multiplication
    N = 60
    A, s, B = 9, 1, 2
    acc = [1] + [0] * N
    factors = []
    for k in range(0, N + 1):
        factors += [(A + A * k, -1), (B + A * k, s), (A - B + A * k, s),
                    (A - 2 * B + 2 * A * k, -1), (A + 2 * B + 2 * A * k, -1)]
    for e, c in factors:
        if e <= N:
            acc = [acc[i] + (c * acc[i - e] if i >= e else 0) for i in range(N + 1)]
    assert quintuple_product(A, s, B, N).coeffs == tuple(acc)
