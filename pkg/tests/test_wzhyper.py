from fractions import Fraction

import pytest

from ffperm.wzhyper import (
    REWRITINGS,
    CertificatePole,
    CertPoint,
    HypergeometricError,
    certificate_G,
    certificate_R,
    certificate_residual,
    golden_checks,
    hyp2f1_terminating,
    hyp_forms_check,
    hyp_restated,
    hyp_s1,
    hyp_s2,
    identity_check,
    pole_factors,
    recurrence_check,
    rewrite_check,
    rising_factorial,
    sum_S,
    term_F,
    term_F_literal,
)


@pytest.mark.parametrize('i, n, k, expected', [(1, 0, 0, 6), (1, 0, 1, 0), (2, 0, 0, 3), (2, 0, 1, -9), (1, 3, -1, 0), (2, 3, 8, 0)])
def test_term_F(i, n, k, expected):
    assert term_F(i, n, k) == expected


@pytest.mark.parametrize('n', range(12))
def test_term_F_matches_literal_product(n):
    for i in (1, 2):
        for k in range(-1, 2 * n + 3):
            assert term_F(i, n, k) == term_F_literal(i, n, k)


def test_bad_term_index():
    with pytest.raises(HypergeometricError):
        term_F(3, 0, 0)

    with pytest.raises(HypergeometricError):
        sum_S(1, -1)


def test_sums():
    assert (sum_S(1, 0), sum_S(2, 0)) == (6, -6)
    assert (sum_S(1, 1), sum_S(2, 1)) == (-3312, 3312)
    assert sum_S(1, 2) == 6462720


def test_identity():
    records = identity_check(10)
    assert len(records) == 11
    assert all(r.passed for r in records)
    assert [r.param('n') for r in identity_check(5, 3)] == ['3', '4', '5']


@pytest.mark.parametrize('i, n', [(1, 0), (2, 0), (1, 5), (2, 5)])
def test_recurrence_examples(i, n):
    assert recurrence_check(i, n) == 0


def test_recurrence_small_n():
    for n in range(21):
        assert recurrence_check(1, n) == 0
        assert recurrence_check(2, n) == 0


def test_certificate_pole():
    with pytest.raises(CertificatePole) as info:
        certificate_residual(1, 0, 1)

    assert 'n-k+1' in info.value.factors
    assert info.value.k == 1
    assert pole_factors(2, 1, 2) == []
    assert pole_factors(1, 1, 4) == ['2n-k+2']


@pytest.mark.parametrize('i, n, k', [(2, 3, 2), (1, 2, 0), (2, 0, 0), (1, 4, 3)])
def test_certificate_residual_vanishes(i, n, k):
    assert certificate_residual(i, n, k) == 0
    assert CertPoint.at(i, n, k).residual == 0


def test_certificate_vanishes_at_k_zero():
    assert certificate_R(1, 2, 0) == 0
    assert certificate_G(1, 2, 0) == 0


def test_certificate_grid():
    poles = {1: 0, 2: 0}

    for i in (1, 2):
        for n in range(8):
            for k in range(-3, 2 * n + 8):
                try:
                    assert certificate_residual(i, n, k) == 0
                except CertificatePole:
                    poles[i] += 1

    assert poles[1] > 0 and poles[2] > 0


@pytest.mark.parametrize('a, k, expected', [(3, 2, 12), (-2, 3, 0), (Fraction(1, 2), 2, Fraction(3, 4)), (5, 0, 1)])
def test_rising_factorial(a, k, expected):
    assert rising_factorial(a, k) == expected


def test_rising_factorial_negative_length():
    with pytest.raises(HypergeometricError):
        rising_factorial(1, -1)


def test_hyp2f1_terminating():
    assert hyp2f1_terminating(-1, 2, 4, 1) == Fraction(1, 2)
    assert hyp2f1_terminating(-2, 1, 1, Fraction(1, 3)) == Fraction(4, 9)
    assert hyp2f1_terminating(1, -2, 1, Fraction(1, 3)) == Fraction(4, 9)
    assert hyp2f1_terminating(0, 5, 7, 3) == 1
    assert hyp2f1_terminating(-1, 2, 2, Fraction(1, 9)) == Fraction(8, 9)
    assert hyp2f1_terminating(Fraction(3, 2), -1, Fraction(1, 2), Fraction(1, 9)) == Fraction(2, 3)
    assert hyp2f1_terminating(-1, -3, 1, Fraction(1, 9)) == Fraction(4, 3)


def test_hyp2f1_errors():
    with pytest.raises(HypergeometricError):
        hyp2f1_terminating(Fraction(1, 2), 1, 1, Fraction(1, 9))

    with pytest.raises(HypergeometricError):
        hyp2f1_terminating(-2, 1, -1, 1)

    # (-1)_k vanishes from k = 2 on, but c + 2 = 0 still lies before K = 3
    with pytest.raises(HypergeometricError):
        hyp2f1_terminating(-1, -3, -2, 1)


def test_hyp_forms():
    for n in range(9):
        assert hyp_s1(n) == sum_S(1, n)
        assert hyp_s2(n) == sum_S(2, n)
        assert all(r.passed for r in hyp_forms_check(n))


def test_hyp_restated_base_case():
    assert hyp_restated(0) == (1, 1)


def test_rewritings():
    for n in range(7):
        records = rewrite_check(n)
        assert len(records) == len(REWRITINGS)
        assert all(r.passed for r in records)


def test_golden_values():
    records = golden_checks()
    assert {r.check for r in records} == {'golden-s1', 'golden-s2'}
    assert all(r.passed for r in records)
