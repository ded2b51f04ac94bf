# Copyright (c) Evan Overman 2023 (https://an-prata.it/)
# Licensed under the MIT License
# See LICENSE file at repository root for details.

"""
Exact checks of the identity S1(n) + S2(n) = 0, where

    F1(n, k) = C(2n+1, k) prod_{j=1}^{2n+1} (6n - 2k + 4 - 2j) (-1)^k 3^{2k+1}
    F2(n, k) = C(2n+1, k) prod_{j=1}^{2n+1} (6n - 2k + 5 - 2j) (-1)^k 3^{2k}

and S_i(n) = sum_k F_i(n, k): the shared second order recurrence, its
telescoping certificates, and the restatement as terminating 2F1 series.
Everything is integers and `Fraction`s.
"""

import functools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from . import logging
from .report import CheckRecord, record

Rational = Union[int, Fraction]

NINTH = Fraction(1, 9)


class HypergeometricError(ValueError):
    """
    Raised for a bad term index, a non-terminating 2F1 or a zero lower
    parameter before termination.
    """


class CertificatePole(HypergeometricError):
    """
    The certificate's denominator vanishes at the point asked for.
    """

    def __init__(self, i: int, n: int, k: int, factors: list[str]):
        self.i = i
        self.n = n
        self.k = k
        self.factors = factors
        super().__init__(f"R{i} has a pole at (n, k) = ({n}, {k}): {', '.join(factors)} vanish")


def _check_index(i: int):
    if i not in (1, 2):
        raise HypergeometricError(f"term index must be 1 or 2, got {i}")


def _check_n(n: int):
    if n < 0:
        raise HypergeometricError(f"n must be nonnegative, got {n}")


def _span_product(lo: int, hi: int) -> int:
    """
    lo * (lo+1) * ... * hi for lo <= hi.
    """

    count = hi - lo + 1

    if lo <= 0 <= hi:
        return 0

    if hi < 0:
        return (-1) ** count * _span_product(-hi, -lo)

    return math.perm(hi, count)


def _odd_factorial(m: int) -> int:
    """
    m!! for odd m >= -1.
    """

    half = (m + 1) // 2
    return math.factorial(2 * half) // (2 ** half * math.factorial(half))


def _odd_span_product(lo: int, hi: int) -> int:
    """
    The product of the odd integers from lo to hi, both odd, lo <= hi.
    """

    if hi < 0:
        count = (hi - lo) // 2 + 1
        return (-1) ** count * _odd_span_product(-hi, -lo)

    if lo < 0:
        return _odd_span_product(lo, -1) * _odd_span_product(1, hi)

    return _odd_factorial(hi) // _odd_factorial(lo - 2)


def term_F(i: int, n: int, k: int) -> int:
    """
    F_i(n, k). The F1 product is 2^{2n+1} (n-k+1)_{2n+1} and the F2 product
    runs over the odd numbers 2n-2k+3 .. 6n-2k+3, so both come from
    factorials. Zero outside 0 <= k <= 2n+1.
    """

    _check_index(i)
    _check_n(n)

    if k < 0 or k > 2 * n + 1:
        return 0

    sign = -1 if k % 2 else 1
    binom = math.comb(2 * n + 1, k)

    if i == 1:
        prod = 2 ** (2 * n + 1) * _span_product(n - k + 1, 3 * n - k + 1)
        return binom * prod * sign * 3 ** (2 * k + 1)

    prod = _odd_span_product(2 * n - 2 * k + 3, 6 * n - 2 * k + 3)
    return binom * prod * sign * 3 ** (2 * k)


def term_F_literal(i: int, n: int, k: int) -> int:
    """
    F_i(n, k) multiplied out factor by factor.
    """

    _check_index(i)
    _check_n(n)

    if k < 0 or k > 2 * n + 1:
        return 0

    shift = 4 if i == 1 else 5
    prod = math.prod(6 * n - 2 * k + shift - 2 * j for j in range(1, 2 * n + 2))
    power = 2 * k + 1 if i == 1 else 2 * k
    return math.comb(2 * n + 1, k) * prod * (-1) ** k * 3 ** power


@functools.lru_cache(maxsize=None)
def sum_S(i: int, n: int) -> int:
    _check_index(i)
    _check_n(n)
    return sum(term_F(i, n, k) for k in range(2 * n + 2))


def identity_check(n_max: int, n_min: int = 0) -> list[CheckRecord]:
    """
    One record per n in [n_min, n_max] comparing S1(n) + S2(n) with 0.
    """

    records = []

    for n in range(n_min, n_max + 1):
        records.append(record('identity', {'n': n}, 0, sum_S(1, n) + sum_S(2, n)))

    logging.dbg(f"Identity checked for n <= {n_max}")
    return records


def recurrence_coefficients(n: int) -> tuple[int, int]:
    """
    The coefficients of S(n+1) and S(n) in the recurrence; S(n+2) has 1.
    """

    return 24 * (36 * n * n + 126 * n + 113), 46656 * (n + 1) ** 2 * (2 * n + 3) ** 2


def recurrence_check(i: int, n: int) -> int:
    """
    S_i(n+2) + 24(36n^2+126n+113) S_i(n+1) + 46656(n+1)^2(2n+3)^2 S_i(n),
    which is 0.
    """

    _check_n(n)
    a, b = recurrence_coefficients(n)
    return sum_S(i, n + 2) + a * sum_S(i, n + 1) + b * sum_S(i, n)


# Numerators of the certificates: row a holds the coefficients of n^a k^b for
# b = 0, 1, ... .

R1_NUMERATOR: tuple[tuple[int, ...], ...] = (
    (264240, -321108, 142242, -27228, 1902),
    (1434774, -1559605, 612100, -102647, 6194),
    (3361281, -3199801, 1081204, -152528, 7484),
    (4437783, -3594830, 1003340, -111631, 3976),
    (3611829, -2388503, 515900, -40234, 784),
    (1855833, -938595, 139350, -5712),
    (587970, -201978, 15444),
    (105030, -18360),
    (8100,),
)

R2_NUMERATOR: tuple[tuple[int, ...], ...] = (
    (5518665, -6111039, 2516532, -455172, 30432),
    (29095596, -29034593, 10674112, -1703836, 99104),
    (66125967, -58228898, 18571132, -2512456, 119744),
    (84611256, -63891952, 16960112, -1823312, 63616),
    (66666108, -41422240, 8573312, -650912, 12544),
    (33120768, -15865680, 2273856, -91392),
    (10132560, -3323808, 247104),
    (1745280, -293760),
    (129600,),
)


def _horner2(table: tuple[tuple[int, ...], ...], n: int, k: int) -> int:
    acc = 0

    for row in reversed(table):
        inner = 0

        for c in reversed(row):
            inner = inner * k + c

        acc = acc * n + inner

    return acc


def denominator_factors(i: int, n: int, k: int) -> list[tuple[str, int]]:
    """
    The linear factors of R_i's denominator at (n, k) as `(label, value)`.
    """

    _check_index(i)
    common = [(f"2n-k+{j}", 2 * n - k + j) for j in range(2, 6)]

    if i == 1:
        return [('n-k+1', n - k + 1), ('n-k+2', n - k + 2)] + common

    return [('2n-2k+3', 2 * n - 2 * k + 3), ('2n-2k+5', 2 * n - 2 * k + 5)] + common


def pole_factors(i: int, n: int, k: int) -> list[str]:
    return [label for label, value in denominator_factors(i, n, k) if value == 0]


def certificate_R(i: int, n: int, k: int) -> Fraction:
    """
    R1 = -32k(3n-k+2) P1(n, k) / ((n-k+1)(n-k+2) prod_{j=2}^5 (2n-k+j)),
    R2 = -4k(6n-2k+5) P2(n, k) / ((2n-2k+3)(2n-2k+5) prod_{j=2}^5 (2n-k+j)).
    """

    factors = pole_factors(i, n, k)

    if factors:
        raise CertificatePole(i, n, k, factors)

    den = math.prod(value for _, value in denominator_factors(i, n, k))

    if i == 1:
        num = -32 * k * (3 * n - k + 2) * _horner2(R1_NUMERATOR, n, k)
    else:
        num = -4 * k * (6 * n - 2 * k + 5) * _horner2(R2_NUMERATOR, n, k)

    return Fraction(num, den)


def certificate_G(i: int, n: int, k: int) -> Fraction:
    return term_F(i, n, k) * certificate_R(i, n, k)


def certificate_residual(i: int, n: int, k: int) -> Fraction:
    """
    F_i(n+2,k) + a(n) F_i(n+1,k) + b(n) F_i(n,k) - (G_i(n,k+1) - G_i(n,k)).
    Raises `CertificatePole` when R_i is undefined at (n, k) or (n, k+1).
    """

    _check_index(i)
    _check_n(n)

    for point in (k, k + 1):
        factors = pole_factors(i, n, point)

        if factors:
            raise CertificatePole(i, n, point, factors)

    a, b = recurrence_coefficients(n)
    lhs = term_F(i, n + 2, k) + a * term_F(i, n + 1, k) + b * term_F(i, n, k)
    return Fraction(lhs) - (certificate_G(i, n, k + 1) - certificate_G(i, n, k))


@dataclass(frozen=True)
class CertPoint:
    i:        int
    n:        int
    k:        int
    residual: Fraction


    @classmethod
    def at(cls, i: int, n: int, k: int) -> 'CertPoint':
        return cls(i, n, k, certificate_residual(i, n, k))


def rising_factorial(a: Rational, k: int) -> Fraction:
    """
    (a)_k = a (a+1) ... (a+k-1), with (a)_0 = 1.
    """

    if k < 0:
        raise HypergeometricError(f"rising factorial length must be nonnegative, got {k}")

    a = Fraction(a)
    result = Fraction(1)

    for j in range(k):
        result *= a + j

    return result


def hyp2f1_terminating(a: Rational, b: Rational, c: Rational, x: Rational) -> Fraction:
    """
    sum_{k=0}^{K} (a)_k (b)_k / ((c)_k k!) x^k, where -K is the nonpositive
    integer among a and b (the smaller of the two when both are). Terms
    past the first vanishing factor are zero, but the lower parameter must
    stay nonzero all the way to K.
    """

    a, b, c, x = (Fraction(v) for v in (a, b, c, x))
    stops = [-int(v) for v in (a, b) if v.denominator == 1 and v <= 0]

    if not stops:
        raise HypergeometricError(f"2F1[{a}, {b}; {c}] does not terminate")

    last = max(stops)
    total = Fraction(0)
    term = Fraction(1)

    for j in range(last + 1):
        total += term

        if j == last:
            break

        if c + j == 0:
            raise HypergeometricError(f"lower parameter {c} hits zero at index {j}")

        term = term * (a + j) * (b + j) / ((c + j) * (j + 1)) * x

    return total


def hyp_s1(n: int) -> Fraction:
    """
    (-1)^n 2^{2n+1} 3^{2n+1} (n+1)_{n+1} (n+2)_n 2F1[-n, 2n+2; n+2; 1/9].
    """

    prefactor = (-1) ** n * 2 ** (2 * n + 1) * 3 ** (2 * n + 1)
    return prefactor * rising_factorial(n + 1, n + 1) * rising_factorial(n + 2, n) * hyp2f1_terminating(-n, 2 * n + 2, n + 2, NINTH)


def hyp_s2(n: int) -> Fraction:
    """
    -2^{2n+1} 3^{4n+2} (-n+1/2)_{2n+1} 2F1[n+3/2, -2n-1; -n+1/2; 1/9].
    """

    half = Fraction(1, 2)
    prefactor = -(2 ** (2 * n + 1)) * 3 ** (4 * n + 2)
    return prefactor * rising_factorial(-n + half, 2 * n + 1) * hyp2f1_terminating(n + 1 + half, -2 * n - 1, -n + half, NINTH)


def hyp_restated(n: int) -> tuple[Fraction, Fraction]:
    """
    Both sides of the identity written as a relation between the two 2F1
    values.
    """

    half = Fraction(1, 2)
    lhs = hyp2f1_terminating(-n, 2 * n + 2, n + 2, NINTH)
    ratio = (-1) ** n * 3 ** (2 * n + 1) * rising_factorial(-n + half, 2 * n + 1) / (rising_factorial(n + 1, n + 1) * rising_factorial(n + 2, n))
    rhs = ratio * hyp2f1_terminating(n + 1 + half, -2 * n - 1, -n + half, NINTH)
    return lhs, rhs


def hyp_forms_check(n: int) -> list[CheckRecord]:
    """
    The two 2F1 forms of S1(n) and S2(n), the restated identity, and the
    requirement that all three hold together exactly when S1(n) + S2(n) = 0.
    """

    _check_n(n)
    s1 = sum_S(1, n)
    s2 = sum_S(2, n)
    form_s1 = hyp_s1(n)
    form_s2 = hyp_s2(n)
    lhs, rhs = hyp_restated(n)

    forms_hold = form_s1 == s1 and form_s2 == s2 and lhs == rhs
    identity_holds = s1 + s2 == 0

    return [
        record('hyp-form-s1', {'n': n}, s1, form_s1),
        record('hyp-form-s2', {'n': n}, s2, form_s2),
        record('hyp-restated', {'n': n}, lhs, rhs),
        record('hyp-chain', {'n': n}, identity_holds, forms_hold),
    ]


# The rewritings of S1 and S2 leading to the 2F1 forms.

def s1_reflected(n: int) -> Fraction:
    """
    -2^{2n+1} 3^{4n+3} sum_k C(2n+1,k) prod_{j=1}^{2n+1} (k+n+1-j) (-1)^k 9^{-k}.
    """

    total = Fraction(0)

    for k in range(2 * n + 2):
        prod = math.prod(k + n + 1 - j for j in range(1, 2 * n + 2))
        total += math.comb(2 * n + 1, k) * prod * (-1) ** k * NINTH ** k

    return -(2 ** (2 * n + 1)) * 3 ** (4 * n + 3) * total


def s1_shifted(n: int) -> Fraction:
    """
    (-1)^n 2^{2n+1} 3^{2n+1} sum_{k>=0} C(2n+1,k+n+1) prod_{j=1}^{2n+1} (k+j) (-1)^k 9^{-k}.
    """

    total = Fraction(0)

    for k in range(n + 1):
        prod = math.prod(k + j for j in range(1, 2 * n + 2))
        total += math.comb(2 * n + 1, k + n + 1) * prod * (-1) ** k * NINTH ** k

    return (-1) ** n * 2 ** (2 * n + 1) * 3 ** (2 * n + 1) * total


def s1_pochhammer(n: int) -> Fraction:
    """
    -2^{2n+1} 3^{2n+1} (-2n-1)_{n+1} (2n+1)!/(n+1)! sum_k (-n)_k (2n+2)_k / (n+2)_k 9^{-k}/k!.
    """

    total = Fraction(0)

    for k in range(n + 1):
        total += rising_factorial(-n, k) * rising_factorial(2 * n + 2, k) / rising_factorial(n + 2, k) * NINTH ** k / math.factorial(k)

    prefactor = -(2 ** (2 * n + 1)) * 3 ** (2 * n + 1) * rising_factorial(-2 * n - 1, n + 1)
    return prefactor * Fraction(math.factorial(2 * n + 1), math.factorial(n + 1)) * total


def s2_shifted(n: int) -> Fraction:
    """
    -2^{2n+1} 3^{4n+2} sum_k C(2n+1,k) prod_{j=1}^{2n+1} (k+n+3/2-j) (-1)^k 9^{-k}.
    """

    total = Fraction(0)

    for k in range(2 * n + 2):
        prod = math.prod(k + n + Fraction(3, 2) - j for j in range(1, 2 * n + 2))
        total += math.comb(2 * n + 1, k) * prod * (-1) ** k * NINTH ** k

    return -(2 ** (2 * n + 1)) * 3 ** (4 * n + 2) * total


def s2_centered(n: int) -> Fraction:
    """
    -2^{2n+1} 3^{4n+2} sum_k C(2n+1,k) prod_{j=-n}^{n} (k+1/2+j) (-1)^k 9^{-k}.
    """

    total = Fraction(0)

    for k in range(2 * n + 2):
        prod = math.prod(k + Fraction(1, 2) + j for j in range(-n, n + 1))
        total += math.comb(2 * n + 1, k) * prod * (-1) ** k * NINTH ** k

    return -(2 ** (2 * n + 1)) * 3 ** (4 * n + 2) * total


REWRITINGS = {
    'rewrite-s1-reflected':  (1, s1_reflected),
    'rewrite-s1-shifted':    (1, s1_shifted),
    'rewrite-s1-pochhammer': (1, s1_pochhammer),
    'rewrite-s2-shifted':    (2, s2_shifted),
    'rewrite-s2-centered':   (2, s2_centered),
}


def rewrite_check(n: int) -> list[CheckRecord]:
    _check_n(n)
    return [record(name, {'n': n}, sum_S(i, n), line(n)) for name, (i, line) in REWRITINGS.items()]


def golden_checks() -> list[CheckRecord]:
    return [
        record('golden-s1', {'n': 0}, 6, sum_S(1, 0)),
        record('golden-s1', {'n': 1}, -3312, sum_S(1, 1)),
        record('golden-s1', {'n': 2}, 6462720, sum_S(1, 2)),
        record('golden-s2', {'n': 0}, -6, sum_S(2, 0)),
        record('golden-s2', {'n': 1}, 3312, sum_S(2, 1)),
    ]
