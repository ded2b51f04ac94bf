# Copyright (c) Evan Overman 2023 (https://an-prata.it/)
# Licensed under the MIT License
# See LICENSE file at repository root for details.

"""
The polynomials g_{n,q} in F_p[x] defined by

    sum_{a in F_q} (x + a)^n = g_{n,q}(x^q - x),

the congruence g_{q^{2i}-q-1,q} = (i-1) x^{q^2-q-1} - i x^{q-2} mod x^{q^2} - x,
and the triples (n, e; q) for which g_{n,q} permutes F_{q^e}.
"""

import functools
from dataclasses import dataclass
try:
    from enum import StrEnum
except ImportError:  # Python < 3.11
    from ._compat import StrEnum

import numpy as np

from . import config
from . import logging
from .binom_mod import binom_lucas, binom_row_mod, perm_binomial, thm11_classify
from .ffield import FieldError, PrimePowerDesc, field_create, field_for
from .fpoly import DensePoly, reduce_mod_field
from .permtest import is_pp_bruteforce
from .report import CheckRecord, record, skipped


class GnqError(ValueError):
    """
    Raised when n is out of range or a polynomial is not a polynomial in
    x^q - x over F_p.
    """


@dataclass(frozen=True)
class GnqResult:
    n:       int
    desc:    PrimePowerDesc
    g:       DensePoly
    reduced: DensePoly


def _check_degree(n: int):
    if n < 0:
        raise GnqError(f"n must be nonnegative, got {n}")

    if n > config.GNQ_DEGREE_BOUND:
        raise GnqError(f"n = {n} exceeds the degree bound {config.GNQ_DEGREE_BOUND}")


def gnq_lhs(n: int, desc: PrimePowerDesc) -> DensePoly:
    """
    sum_{a in F_q} (x + a)^n. Expanding, the coefficient of x^k is
    C(n, k) sum_a a^{n-k}, and sum_a a^m is -1 when m > 0 is a multiple of
    q-1 and 0 otherwise (m = 0 gives q = 0).
    """

    _check_degree(n)
    q = desc.q
    p = desc.p
    coeffs = np.zeros(n + 1, dtype=np.int64)

    for j in range(1, n // (q - 1) + 1):
        k = n - j * (q - 1)
        coeffs[k] = -binom_lucas(n, k, p) % p

    return DensePoly.from_ints(field_for(desc), coeffs)


def _expansion(d: int, q: int, p: int) -> tuple[np.ndarray, np.ndarray]:
    """
    (x^q - x)^d = sum_j C(d, j) (-1)^{d-j} x^{d + j(q-1)}, as (degrees,
    coefficients mod p).
    """

    j = np.arange(d + 1, dtype=np.int64)
    signs = np.where((d - j) % 2 == 1, -1, 1)
    return d + j * (q - 1), binom_row_mod(d, p) * signs % p


def gnq_decompose(h: DensePoly, desc: PrimePowerDesc) -> DensePoly:
    """
    Finds g with g(x^q - x) = h by elimination from the top: (x^q - x)^d has
    leading term x^{qd}, so the coefficient of x^{qd} left in h is g's
    coefficient of y^d.
    """

    ctx = field_for(desc)

    if h.ctx is not ctx:
        raise GnqError(f"polynomial is over F_{h.ctx.q}, expected F_{desc.q}")

    if h.is_zero():
        return DensePoly.zero(ctx)

    q = desc.q
    p = desc.p
    rem = h.coeffs.copy()
    top = h.degree // q
    g = np.zeros((top + 1, ctx.n), dtype=np.int64)

    for d in range(top, -1, -1):
        c = rem[q * d]

        if not c.any():
            continue

        g[d] = c
        degrees, row = _expansion(d, q, p)
        rem[degrees] = (rem[degrees] - row[:, None] * c[None, :]) % p

    if rem.any():
        leftover = int(np.flatnonzero(rem.any(axis=1))[-1])
        raise GnqError(f"not a polynomial in x^{q} - x: x^{leftover} survives elimination")

    if g[:, 1:].any():
        raise GnqError(f"g has coefficients outside F_{p}")

    return DensePoly(ctx, g)


def gnq_recompose(g: DensePoly, desc: PrimePowerDesc) -> DensePoly:
    """
    g(x^q - x), expanded.
    """

    ctx = field_for(desc)

    if g.ctx is not ctx:
        raise GnqError(f"polynomial is over F_{g.ctx.q}, expected F_{desc.q}")

    if g.is_zero():
        return DensePoly.zero(ctx)

    q = desc.q
    p = desc.p
    out = np.zeros((q * g.degree + 1, ctx.n), dtype=np.int64)

    for d in g.nonzero_degrees():
        degrees, row = _expansion(int(d), q, p)
        out[degrees] = (out[degrees] + row[:, None] * g.coeffs[d][None, :]) % p

    return DensePoly(ctx, out)


@functools.lru_cache(maxsize=128)
def _gnq_compute(n: int, p: int, e: int) -> GnqResult:
    desc = PrimePowerDesc.of(p, e)
    g = gnq_decompose(gnq_lhs(n, desc), desc)
    reduced = reduce_mod_field(g, 2)
    logging.dbg(f"g_({n},{desc.q}) has degree {g.degree}, reduced: {reduced.render()}")
    return GnqResult(n, desc, g, reduced)


def gnq_compute(n: int, desc: PrimePowerDesc) -> GnqResult:
    """
    g_{n,q} and its reduction modulo x^{q^2} - x. Cached.
    """

    _check_degree(n)
    return _gnq_compute(n, desc.p, desc.e)


def congruence_exponent(desc: PrimePowerDesc, i: int) -> int:
    """
    n = q^{2i} - q - 1.
    """

    if i < 1:
        raise GnqError(f"i must be positive, got {i}")

    return desc.q ** (2 * i) - desc.q - 1


def congruence_target(desc: PrimePowerDesc, i: int) -> DensePoly:
    """
    (i-1) x^{q^2-q-1} - i x^{q-2} over F_q.
    """

    q = desc.q
    return DensePoly.from_terms(field_for(desc), {q * q - q - 1: i - 1, q - 2: -i})


def section4_congruence_check(desc: PrimePowerDesc, i: int) -> CheckRecord:
    if desc.q <= 2:
        raise GnqError(f"q must exceed 2, got {desc.q}")

    n = congruence_exponent(desc, i)
    params = {'q': desc.q, 'i': i, 'n': n}
    expected = congruence_target(desc, i)

    if n > config.GNQ_DEGREE_BOUND:
        return skipped('gnq-congruence', params, f"n exceeds the degree bound {config.GNQ_DEGREE_BOUND}", expected.render())

    observed = gnq_compute(n, desc).reduced
    return record('gnq-congruence', params, expected.render(), observed.render(), observed == expected)


def is_desirable(n: int, e: int, desc: PrimePowerDesc) -> bool:
    """
    Whether g_{n,q} permutes F_{q^e}, by enumeration.
    """

    if e < 1:
        raise GnqError(f"e must be positive, got {e}")

    try:
        target = field_create(desc.p, e * desc.e)
    except FieldError as ex:
        raise GnqError(str(ex))

    g = gnq_compute(n, desc).g
    prime = field_create(desc.p, 1)
    g = reduce_mod_field(DensePoly.from_ints(prime, g.coeffs[:, 0]), e * desc.e)
    return is_pp_bruteforce(g.over(target), target).is_pp


class Thm41Case(StrEnum):
    CASE_I   = 'case-i'
    CASE_II  = 'case-ii'
    CASE_III = 'case-iii'
    NONE     = 'none'
    EXCLUDED = 'excluded'


def thm41_classify(desc: PrimePowerDesc, i: int) -> Thm41Case:
    """
    For i != 0, 1 (mod p), (q^{2i}-q-1, 2; q) is desirable iff 2i = 1 (mod p)
    and q = 1 (mod 4), or 2i = -1 (mod p) and q = +-1 (mod 12), or 4i = 1
    (mod p) and q = -1 (mod 6).
    """

    q = desc.q
    p = desc.p

    if q <= 2:
        raise GnqError(f"q must exceed 2, got {q}")

    if i < 1:
        raise GnqError(f"i must be positive, got {i}")

    if i % p in (0, 1):
        return Thm41Case.EXCLUDED

    if (2 * i - 1) % p == 0 and q % 4 == 1:
        return Thm41Case.CASE_I
    elif (2 * i + 1) % p == 0 and q % 12 in (1, 11):
        return Thm41Case.CASE_II
    elif (4 * i - 1) % p == 0 and q % 6 == 5:
        return Thm41Case.CASE_III

    return Thm41Case.NONE


def thm41_check(desc: PrimePowerDesc, i: int) -> CheckRecord:
    """
    Compares the classification with enumeration where n is within the degree
    bound; beyond it the record is skipped as only congruence-derived.
    """

    case = thm41_classify(desc, i)
    n = congruence_exponent(desc, i)
    params = {'q': desc.q, 'i': i, 'n': n}
    expected = case not in (Thm41Case.NONE, Thm41Case.EXCLUDED)

    if case == Thm41Case.EXCLUDED:
        return skipped('gnq-thm41', params, 'i = 0 or 1 (mod p)', case)

    if n > config.GNQ_DEGREE_BOUND:
        return skipped('gnq-thm41', params, f"congruence-derived only, n exceeds the degree bound {config.GNQ_DEGREE_BOUND}", expected)

    return record('gnq-thm41', params, expected, is_desirable(n, 2, desc))


def bridge_check(desc: PrimePowerDesc, i: int) -> list[CheckRecord]:
    """
    With t = (i-1)/(-i), the reduced g_{q^{2i}-q-1,q} is -i times
    x^{q-2} + t x^{q^2-q-1}, so its desirability follows the binomial
    classification.
    """

    p = desc.p
    n = congruence_exponent(desc, i)
    params = {'q': desc.q, 'i': i, 'n': n}

    if i % p in (0, 1):
        reason = 'i = 0 or 1 (mod p)'
        return [skipped('gnq-bridge-poly', params, reason), skipped('gnq-bridge-pp', params, reason)]

    if n > config.GNQ_DEGREE_BOUND:
        reason = f"n exceeds the degree bound {config.GNQ_DEGREE_BOUND}"
        return [skipped('gnq-bridge-poly', params, reason), skipped('gnq-bridge-pp', params, reason)]

    fq = field_for(desc)
    t = fq.from_int(i - 1) / fq.from_int(-i)
    binomial = perm_binomial(fq, t).scale(-i)
    reduced = gnq_compute(n, desc).reduced
    verdict = thm11_classify(desc, t)

    return [
        record('gnq-bridge-poly', params, binomial.render(), reduced.render(), binomial == reduced),
        record('gnq-bridge-pp', {**params, 't': t}, verdict.is_pp, is_desirable(n, 2, desc)),
    ]


def recompose_check(n: int, desc: PrimePowerDesc) -> CheckRecord:
    """
    g(x^q - x) against sum_a (x + a)^n as exact polynomials.
    """

    g = gnq_compute(n, desc).g
    match = gnq_recompose(g, desc) == gnq_lhs(n, desc)
    return record('gnq-recompose', {'q': desc.q, 'n': n}, 'equal', 'equal' if match else 'differs')


def golden_checks() -> list[CheckRecord]:
    q3 = PrimePowerDesc.of(3, 1)
    return [
        record('golden-gnq', {'q': 3, 'n': 5}, '2*x', gnq_compute(5, q3).reduced.render()),
        record('golden-gnq', {'q': 3, 'n': 77}, 'x^5 + x', gnq_compute(77, q3).reduced.render()),
    ]
