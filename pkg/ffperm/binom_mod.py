# Copyright (c) Evan Overman 2023 (https://an-prata.it/)
# Licensed under the MIT License
# See LICENSE file at repository root for details.

"""
Binomial coefficients mod p with integer and half-integer tops, the closed
form of the power sums of f = x^{q-2} + t*x^{q^2-q-1} over F_{q^2}*, and the
classification of the t for which f permutes F_{q^2}.
"""

import functools
import math
from dataclasses import dataclass
try:
    from enum import StrEnum
except ImportError:  # Python < 3.11
    from ._compat import StrEnum
from fractions import Fraction
from typing import Union

import numpy as np

from . import logging
from .ffield import FieldCtx, FieldElement, PrimePowerDesc, field_create, field_for, quad_char
from .fpoly import DensePoly


class BinomError(ValueError):
    """
    Raised when a binomial or power-sum precondition does not hold.
    """


@dataclass(frozen=True)
class TwiceInt:
    """
    The number z = twice / 2, an integer or a half-integer.
    """

    twice: int


    @classmethod
    def of(cls, z: Union[int, 'TwiceInt']) -> 'TwiceInt':
        if isinstance(z, TwiceInt):
            return z

        return cls(2 * int(z))


    @property
    def is_integer(self) -> bool:
        return self.twice % 2 == 0


    @property
    def value(self) -> Fraction:
        return Fraction(self.twice, 2)


    def __add__(self, other: Union[int, 'TwiceInt']) -> 'TwiceInt':
        return TwiceInt(self.twice + TwiceInt.of(other).twice)


    __radd__ = __add__


    def __sub__(self, other: Union[int, 'TwiceInt']) -> 'TwiceInt':
        return TwiceInt(self.twice - TwiceInt.of(other).twice)


    def __str__(self) -> str:
        return str(self.twice // 2) if self.is_integer else f"{self.twice}/2"


def _sign(k: int) -> int:
    """
    (-1)^k.
    """

    return -1 if k % 2 else 1


def binom_lucas(m: int, a: int, p: int) -> int:
    """
    C(m, a) mod p from the base-p digits of m and a.
    """

    if m < 0 or a < 0:
        raise BinomError(f"binom_lucas needs nonnegative arguments, got ({m}, {a})")

    result = 1

    while a:
        mi, ai = m % p, a % p

        if ai > mi:
            return 0

        result = result * math.comb(mi, ai) % p
        m //= p
        a //= p

    return result % p


def binom_row_mod(d: int, p: int) -> np.ndarray:
    """
    `[C(d, j) mod p for j in 0..d]`, digit by digit as in `binom_lucas`.
    """

    j = np.arange(d + 1, dtype=np.int64)
    row = np.ones(d + 1, dtype=np.int64)
    m = d

    while m:
        digit = m % p
        small = np.array([math.comb(digit, b) % p for b in range(digit + 1)], dtype=np.int64)
        jd = j % p
        row = row * np.where(jd <= digit, small[np.minimum(jd, digit)], 0) % p
        m //= p
        j = j // p

    return row % p


def binom_padic(z: Union[int, TwiceInt], a: int, desc: PrimePowerDesc) -> int:
    """
    C(z, a) mod p for a p-adic integer z given as an integer or half-integer.
    z is replaced by the z' in [0, q-1] with z' = z (mod q), which does not
    change C(z, a) mod p as long as a <= q-1; half-integers need odd q.
    """

    z = TwiceInt.of(z)
    q = desc.q

    if not 0 <= a <= q - 1:
        raise BinomError(f"lower argument {a} outside [0, {q - 1}]")

    if z.is_integer:
        reduced = (z.twice // 2) % q
    else:
        if not desc.is_odd:
            raise BinomError(f"half-integer {z} has no residue mod even q = {q}")

        reduced = z.twice * pow(2, -1, q) % q

    return binom_lucas(reduced, a, desc.p)


def binom_star_mod(z: Union[int, TwiceInt], a: int, desc: PrimePowerDesc) -> int:
    """
    The starred binomial mod p: zero for a half-integer top.
    """

    z = TwiceInt.of(z)

    if not z.is_integer:
        return 0

    return binom_padic(z, a, desc)


def binom_rational(z: Union[int, TwiceInt], a: int) -> Fraction:
    """
    The exact C(z, a) = (z-a+1)_a / a! for rational z.
    """

    if a < 0:
        raise BinomError(f"lower argument must be nonnegative, got {a}")

    z = TwiceInt.of(z).value
    num = Fraction(1)

    for j in range(a):
        num *= z - j

    return num / math.factorial(a)


def binom_star_exact(z: Union[int, TwiceInt], a: int) -> Fraction:
    """
    C(z, a) when z is an integer (negative z included), 0 otherwise.
    """

    z = TwiceInt.of(z)

    if not z.is_integer:
        return Fraction(0)

    return binom_rational(z, a)


def rational_mod_p(value: Fraction, p: int) -> int:
    """
    Reduces a p-integral rational mod p.
    """

    value = Fraction(value)

    if value.denominator % p == 0:
        raise BinomError(f"{value} is not p-integral for p = {p}")

    return value.numerator * pow(value.denominator, -1, p) % p


def _fq_nonzero(fq: FieldCtx, t: Union[int, FieldElement]) -> FieldElement:
    t = fq.coerce(t)

    if t.is_zero():
        raise BinomError(f"t must be nonzero in F_{fq.q}")

    return t


def perm_binomial(fq: FieldCtx, t: Union[int, FieldElement]) -> DensePoly:
    """
    f = x^{q-2} + t*x^{q^2-q-1} over F_q.
    """

    q = fq.q

    if q <= 2:
        raise BinomError(f"q must exceed 2, got {q}")

    return DensePoly.from_terms(fq, {q - 2: 1, q * q - q - 1: t})


def _check_exponents(desc: PrimePowerDesc, alpha: int, beta: int):
    q = desc.q

    if not (0 <= alpha <= q - 1 and 0 <= beta <= q - 1):
        raise BinomError(f"alpha, beta must lie in [0, {q - 1}], got ({alpha}, {beta})")

    if not 0 < alpha + beta * q < q * q - 1:
        raise BinomError(f"need 0 < alpha + beta*q < q^2 - 1, got {alpha + beta * q}")


@functools.lru_cache(maxsize=64)
def _binomial_images(p: int, e: int, t_coords: tuple[int, ...]) -> np.ndarray:
    fq = field_create(p, e)
    fq2 = field_create(p, 2 * e)
    f = perm_binomial(fq, FieldElement(fq, t_coords))
    values = f.over(fq2).evaluate_many(fq2.elements[1:])
    values.setflags(write=False)
    return values


def binomial_images(desc: PrimePowerDesc, t: Union[int, FieldElement]) -> np.ndarray:
    """
    f(x) for every x in F_{q^2}*, in enumeration order. Cached per (q, t).
    """

    t = _fq_nonzero(field_for(desc), t)
    return _binomial_images(desc.p, desc.e, t.coords)


def power_sum_direct(desc: PrimePowerDesc, t: Union[int, FieldElement], alpha: int, beta: int) -> FieldElement:
    """
    sum over x in F_{q^2}* of f(x)^{alpha + beta*q}, by enumeration. The sum
    lies in F_q; getting anything else raises.
    """

    _check_exponents(desc, alpha, beta)
    fq = field_for(desc)
    fq2 = field_create(desc.p, 2 * desc.e)
    values = binomial_images(desc, t)
    total = fq2.pow(values, alpha + beta * desc.q).sum(axis=0) % desc.p
    return fq2.restrict(FieldElement(fq2, total), fq)


def power_sum_closed(desc: PrimePowerDesc, t: Union[int, FieldElement], alpha: int, beta: int) -> FieldElement:
    """
    The same power sum from its closed form: 0 unless alpha + beta = q-1 and
    alpha is odd (an even alpha makes every starred binomial vanish),
    otherwise

        -(-1)^{(alpha+q)/2} t^{-(3alpha+q)/2} * [ (-1)^{(q+1)/2} t^{(q-1)/2} A + B ]

    with A = sum_i C(alpha,i) C*((3alpha-1)/2 - i, alpha) (-1)^i t^{2i+1} and
    B = sum_i C(alpha,i) C*((3alpha-1)/2 - i + (q+1)/2, alpha) (-1)^i t^{2i}.
    All exponents are integers on the odd-alpha branch.
    """

    _check_exponents(desc, alpha, beta)

    if not desc.is_odd:
        raise BinomError(f"closed form needs odd q, got {desc.q}")

    fq = field_for(desc)
    t = _fq_nonzero(fq, t)
    q = desc.q

    if alpha + beta != q - 1 or alpha % 2 == 0:
        return fq.zero

    top = TwiceInt(3 * alpha - 1)
    shift = TwiceInt.of((q + 1) // 2)
    first = fq.zero
    second = fq.zero

    for i in range(alpha + 1):
        c = binom_lucas(alpha, i, desc.p)

        if c == 0:
            continue

        b1 = binom_star_mod(top - i, alpha, desc)
        b2 = binom_star_mod(top - i + shift, alpha, desc)
        first += c * b1 * _sign(i) * t ** (2 * i + 1)
        second += c * b2 * _sign(i) * t ** (2 * i)

    bracket = _sign((q + 1) // 2) * t ** ((q - 1) // 2) * first + second
    prefactor = -_sign((alpha + q) // 2) * t ** (-((3 * alpha + q) // 2))
    return prefactor * bracket


def alpha1_necessity(desc: PrimePowerDesc, t: Union[int, FieldElement]) -> FieldElement:
    """
    v = eps*t + 3/2 - t^2/2 with eps = (-1)^{(q+1)/2} eta(t). Equals
    -(t + eps)(t - 3*eps)/2, so v = 0 iff t is -eps or 3*eps.
    """

    if not desc.is_odd:
        raise BinomError(f"necessity equation needs odd q, got {desc.q}")

    fq = field_for(desc)
    t = _fq_nonzero(fq, t)
    eps = _sign((desc.q + 1) // 2) * quad_char(fq, t)
    return eps * t + (3 - t * t) / 2


def necessity_epsilon(desc: PrimePowerDesc, t: Union[int, FieldElement]) -> int:
    fq = field_for(desc)
    return _sign((desc.q + 1) // 2) * quad_char(fq, _fq_nonzero(fq, t))


def root_check(desc: PrimePowerDesc, t: Union[int, FieldElement]) -> bool:
    """
    True iff (-t)^{(q+1)/2} != 1, i.e. x^{2q-2} = -t has no solution in
    F_{q^2}*, i.e. 0 is the only root of f.
    """

    if not desc.is_odd:
        raise BinomError(f"root check needs odd q, got {desc.q}")

    t = _fq_nonzero(field_for(desc), t)
    return (-t) ** ((desc.q + 1) // 2) != 1


def _check_odd_alpha(desc: PrimePowerDesc, alpha: int):
    if not desc.is_odd:
        raise BinomError(f"needs odd q, got {desc.q}")

    if alpha % 2 == 0 or not 0 < alpha < desc.q - 1:
        raise BinomError(f"alpha must be odd with 0 < alpha < {desc.q - 1}, got {alpha}")


def eq33_halves(desc: PrimePowerDesc, alpha: int) -> tuple[int, int]:
    """
    The two sums of the sufficiency identity mod p, separately:
    sum_i C(alpha,i) C((3alpha-1)/2 - i, alpha) (-1)^i 3^{2i+1} and
    sum_i C(alpha,i) C((3alpha-1)/2 - i + (q+1)/2, alpha) (-1)^i 3^{2i}.
    """

    _check_odd_alpha(desc, alpha)
    p = desc.p
    top = TwiceInt.of((3 * alpha - 1) // 2)
    shift = (desc.q + 1) // 2
    first = 0
    second = 0

    for i in range(alpha + 1):
        c = binom_lucas(alpha, i, p)

        if c == 0:
            continue

        first += c * binom_padic(top - i, alpha, desc) * _sign(i) * pow(3, 2 * i + 1, p)
        second += c * binom_padic(top - i + shift, alpha, desc) * _sign(i) * pow(3, 2 * i, p)

    return first % p, second % p


def eq33_check(desc: PrimePowerDesc, alpha: int) -> int:
    """
    The left side of the sufficiency identity for cases (ii) and (iii) mod p;
    it is always 0.
    """

    first, second = eq33_halves(desc, alpha)
    return (first + second) % desc.p


def case_i_telescoping(desc: PrimePowerDesc, alpha: int) -> int:
    """
    -C(q-1, (alpha-1)/2) - C(q-1, (alpha+q)/2) mod p, the t = 1 power sum for
    odd alpha; 0 when q = 1 (mod 4).
    """

    _check_odd_alpha(desc, alpha)
    p = desc.p
    q = desc.q
    return (-binom_lucas(q - 1, (alpha - 1) // 2, p) - binom_lucas(q - 1, (alpha + q) // 2, p)) % p


class CaseTag(StrEnum):
    CASE_I = 'case-i'
    CASE_II = 'case-ii'
    CASE_III = 'case-iii'
    NONE = 'none'


@dataclass(frozen=True)
class Thm11Verdict:
    is_pp: bool
    case:  CaseTag


    def __post_init__(self):
        if self.is_pp != (self.case != CaseTag.NONE):
            raise BinomError(f"inconsistent verdict: is_pp={self.is_pp}, case={self.case}")


    def __str__(self) -> str:
        return f"pp ({self.case})" if self.is_pp else 'not-pp'


def thm11_classify(desc: PrimePowerDesc, t: Union[int, FieldElement]) -> Thm11Verdict:
    """
    f permutes F_{q^2} iff t = 1 and q = 1 (mod 4), or t = -3 and
    q = +-1 (mod 12), or t = 3 and q = -1 (mod 6). The integers +-3 are mapped
    into F_q before comparing, so in characteristic 3 the last two never fire.
    """

    q = desc.q

    if q <= 2:
        raise BinomError(f"q must exceed 2, got {q}")

    t = _fq_nonzero(field_for(desc), t)

    if t == 1 and q % 4 == 1:
        case = CaseTag.CASE_I
    elif t == -3 and q % 12 in (1, 11):
        case = CaseTag.CASE_II
    elif t == 3 and q % 6 == 5:
        case = CaseTag.CASE_III
    else:
        case = CaseTag.NONE

    logging.dbg(f"Classified q = {q}, t = {t}: {case}")
    return Thm11Verdict(case != CaseTag.NONE, case)
