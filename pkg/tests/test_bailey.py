import itertools
from dataclasses import replace

import pytest

from qlegendre.bailey import (
    AlphaSpec,
    BaileyState,
    ConventionMismatch,
    MultisumSpec,
    SeedDescriptor,
    bailey_step,
    canonicalize_seed,
    engine_multisum_spec,
    iterate,
    limit_rhs,
    multisum_finite,
    multisum_lhs,
    verify_state,
)
from qlegendre.exactalg import ONE, QPoly, QSeries, poly_exact_div, series_inv
from qlegendre.qkit import QuadraticExponent, euler_inverse, q3q6_ratio, qpoch, quintuple_product
from qlegendre.seeds import CHAINS, CHAIN_SLOTS, HIERARCHY_SEEDS, SINGLE_SUM_SEEDS, SEEDS

ALL_SEEDS = HIERARCHY_SEEDS + SINGLE_SUM_SEEDS


def brute_series(spec, v, order):
    """Direct enumeration of the series multisum, one term per tuple."""
    b = spec.base
    total = QSeries.zero(order)
    bound = range(order + 1)
    for ns in itertools.product(bound, repeat=v):
        N = [sum(ns[i:]) for i in range(v)]
        e = b * sum(x * (x + spec.c) for x in N)
        if e > order:
            continue
        den = qpoch(2 * ns[-1] + spec.d, b)
        for n in ns[:-1]:
            den = den * qpoch(n, b)
        if spec.tail_den is not None:
            den = den.mul_binomial(spec.tail_den(ns[-1]))
        term = QSeries.from_poly(spec.tail(ns[-1]).shift(e), order) * series_inv(QSeries.from_poly(den, order))
        total = total + term
    return total * QSeries.from_poly(spec.prefactor, order)


def brute_finite(spec, v, L):
    """Direct enumeration of the finite multisum using whole-term exact division."""
    b = spec.base
    acc = QPoly()
    for ns in itertools.product(range(L + 1), repeat=v):
        N = [sum(ns[i:]) for i in range(v)]
        if L - spec.s - N[0] < 0:
            continue
        e = b * sum(x * (x + spec.c) for x in N)
        den = qpoch(2 * ns[-1] + spec.d, b) * qpoch(L - spec.s - N[0], b)
        for n in ns[:-1]:
            den = den * qpoch(n, b)
        num = qpoch(2 * L + spec.a, b) * spec.tail(ns[-1])
        acc = acc + poly_exact_div(num, den).shift(e)
    return acc * spec.prefactor


# seeds and canonicalization

@pytest.mark.parametrize("sid", ALL_SEEDS)
def test_seed_printed_and_canonical(sid):
    seed = SEEDS[sid]
    for L in range(12):
        assert seed.lhs(L) == seed.F(L), (sid, L)
    state = canonicalize_seed(seed)
    assert verify_state(state, 10).passed


def test_seed_base_cases():
    assert SEEDS["SEED-A"].F(0) == QPoly()
    assert SEEDS["SEED-B"].F(0) == ONE
    assert SEEDS["SEED-H"].F(0) == QPoly([0, 1])
    assert SEEDS["SEED-I"].F(0) == QPoly([1, 1])
    assert SEEDS["SEED-A"].lhs(1) == QPoly([1, 0, 0, -1])


def test_reflection_of_binom_exponent():
    state = canonicalize_seed(SEEDS["SEED-A"])
    # (j-1)(j-2)/2 becomes (j+1)(j+2)/2
    assert [state.alpha.exponent(j) for j in range(-3, 3)] == [(j + 1) * (j + 2) // 2 for j in range(-3, 3)]
    assert state.alpha.character_shift == 0 and state.alpha.sign == -1
    for j in range(-9, 10):
        assert state.alpha.weight(j) == SEEDS["SEED-A"].alpha.weight(-j)


def test_canonical_seed_D_passes():
    state = canonicalize_seed(SEEDS["SEED-D"])
    assert state.a == 0 and state.base == 2


def test_malformed_seed_rejected():
    bad = replace(SEEDS["SEED-D"], alpha=replace(SEEDS["SEED-D"].alpha, character_shift=2))
    with pytest.raises(ConventionMismatch):
        canonicalize_seed(bad)
    wrong_slot = replace(SEEDS["SEED-B"], slot="L-j", name="x")
    with pytest.raises(ConventionMismatch):
        canonicalize_seed(wrong_slot)


# lemma

def test_bump_examples():
    alpha = AlphaSpec(QuadraticExponent(0))
    assert alpha.term(1) == (1, 0)
    assert alpha.bumped(0).term(1) == (1, 1)
    twice = AlphaSpec(QuadraticExponent(1, -3, 2, 2)).bumped(1, times=2)
    once = AlphaSpec(QuadraticExponent(1, -3, 2, 2)).bumped(1).bumped(1)
    assert all(twice.exponent(j) == once.exponent(j) for j in range(-6, 7))


def test_step_formula_seed_D():
    state = canonicalize_seed(SEEDS["SEED-D"])
    new = bailey_step(state)
    # weights for L=1: r=0 gives (q^2;q^2)_2/(q^2;q^2)_1 = 1-q^4, r=1 gives q^2
    expected = QPoly([1, 0, 0, 0, -1]) * state.F(0) + QPoly.monomial(2) * state.F(1)
    assert new.F(1) == QPoly([1, 0, 1, 1])
    assert new.F(1) == expected


@pytest.mark.parametrize("sid", ALL_SEEDS)
def test_relation_preserved_under_iteration(sid):
    state = canonicalize_seed(SEEDS[sid])
    for v in range(1, 4):
        state = bailey_step(state)
        report = verify_state(state, 8)
        assert report.passed, (sid, v, report.first_failure)


def test_corrupted_alpha_fails_early():
    good = canonicalize_seed(SEEDS["SEED-B"])
    bad = BaileyState(good.a, replace(good.alpha, character_shift=(good.alpha.character_shift + 1) % 3), good.F)
    report = verify_state(bad, 5)
    L, ok, (e, _, _) = report.first_failure
    assert L <= 1 and e <= 1


def test_seed_B_L0():
    state = canonicalize_seed(SEEDS["SEED-B"])
    assert state.F(0) == state.relation_rhs(0) == ONE


# multisums

MULTI_SPECS = [CHAINS[k].series for k in CHAINS] + [
    MultisumSpec(base=2, c=1, d=0, tail=q3q6_ratio, tail_den=lambda n: 2 * n + 1),
]


@pytest.mark.parametrize("spec", MULTI_SPECS, ids=lambda s: s.label or "tail_den")
@pytest.mark.parametrize("v", [1, 2, 3])
def test_multisum_series_matches_enumeration(spec, v):
    order = 24
    assert multisum_lhs(spec, v, order) == brute_series(spec, v, order)


@pytest.mark.parametrize("key", list(CHAINS))
@pytest.mark.parametrize("v", [1, 2])
def test_multisum_finite_matches_enumeration(key, v):
    spec = CHAINS[key].finite
    for L in range(6):
        assert multisum_finite(spec, v, L) == brute_finite(spec, v, L), (key, v, L)


def test_multisum_examples():
    spec = CHAINS["D"].series
    N = 7
    # terms n = 0, 1 only; n = 2 starts at q^8
    n1 = QSeries.from_poly(q3q6_ratio(1).shift(2), N) * series_inv(QSeries.from_poly(qpoch(2, 2), N))
    assert multisum_lhs(spec, 1, N) == QSeries.one(N) + n1
    for key in CHAINS:
        assert multisum_lhs(CHAINS[key].series, 1, 0).coeffs == (CHAINS[key].series.tail(0)[0],)


def test_pruning_soundness():
    spec = CHAINS["B"].series
    a = multisum_lhs(spec, 3, 60)
    b = multisum_lhs(spec, 3, 60, cutoff=200)
    assert a == b


def test_tail_den_rejected_in_finite_form():
    with pytest.raises(ValueError):
        multisum_finite(MULTI_SPECS[-1], 1, 3)


def test_finite_to_limit_consistency():
    for key in ("B", "D", "E"):
        state = canonicalize_seed(SEEDS[CHAINS[key].seed])
        spec = engine_multisum_spec(state)
        for v in (1, 2):
            deep = iterate(state, v)
            series = multisum_lhs(spec, v, 20)
            for L in (10, 15, 20):
                assert QSeries.from_poly(deep.F(L), L) == series.truncate(L), (key, v, L)


@pytest.mark.parametrize("key", list(CHAINS))
def test_printed_chain_bilateral_side(key):
    chain = CHAINS[key]
    seed = SEEDS[chain.seed]
    for v in (1, 2):
        for L in range(6):
            assert multisum_finite(chain.finite, v, L) == chain.printed_alpha(v).binomial_sum(
                L, seed.a, CHAIN_SLOTS[key])


def test_limit_rhs_examples():
    N = 150
    d = iterate(canonicalize_seed(SEEDS["SEED-D"]), 1)
    assert limit_rhs(d.alpha, N) == quintuple_product(18, 1, 3, N) * euler_inverse(N, 2)
    e = iterate(canonicalize_seed(SEEDS["SEED-E"]), 1)
    assert limit_rhs(e.alpha, N) == quintuple_product(18, 1, 5, N) * euler_inverse(N, 2)
    single = AlphaSpec(QuadraticExponent(1000))
    assert limit_rhs(single, 50) == euler_inverse(50)


def test_engine_spec_requires_seed_state():
    state = canonicalize_seed(SEEDS["SEED-D"])
    with pytest.raises(ValueError):
        engine_multisum_spec(bailey_step(state))
    with pytest.raises(ValueError):
        BaileyState(2, state.alpha, state.F)


def test_seed_descriptor_lhs_slot():
    s = SeedDescriptor("x", AlphaSpec(QuadraticExponent(1)), a=0, F=lambda L: ONE, slot="L+j")
    assert s.lhs(2) == AlphaSpec(QuadraticExponent(1)).binomial_sum(2, 0, "L+j")
