# Copyright (c) Evan Overman 2023 (https://an-prata.it/)
# Licensed under the MIT License
# See LICENSE file at repository root for details.

"""
Three independent permutation tests, used as oracles for each other:
enumeration of the image set, the power-sum criterion, and the reduction to
the action on the (q-1)st powers of F_{q^2}*.
"""

from dataclasses import dataclass
try:
    from enum import StrEnum
except ImportError:  # Python < 3.11
    from ._compat import StrEnum
from typing import Optional, Union

import numpy as np

from . import logging
from .ffield import FieldCtx, FieldElement, FieldError, field_create
from .fpoly import DensePoly


class Method(StrEnum):
    BRUTEFORCE = 'bruteforce'
    POWERSUM = 'powersum'
    ZIEVE = 'zieve'


@dataclass(frozen=True)
class PPVerdict:
    is_pp:   bool
    method:  Method
    witness: Optional[tuple[FieldElement, FieldElement]] = None


    def __str__(self) -> str:
        return 'pp' if self.is_pp else 'not-pp'


def images(poly: DensePoly, ctx: FieldCtx) -> np.ndarray:
    """
    The values of `poly` at every element of `ctx`, in enumeration order.
    """

    return poly.over(ctx).evaluate_many(ctx.elements)


def _collision(ctx: FieldCtx, values: np.ndarray) -> Optional[tuple[int, int]]:
    codes = ctx.encode(values)
    order = np.argsort(codes, kind='stable')
    same = np.flatnonzero(codes[order][1:] == codes[order][:-1])

    if len(same) == 0:
        return None

    i = same[0]
    return int(order[i]), int(order[i + 1])


def is_pp_bruteforce(poly: DensePoly, ctx: FieldCtx) -> PPVerdict:
    """
    Enumerates the image set. On failure the verdict carries two distinct
    points with the same image.
    """

    pair = _collision(ctx, images(poly, ctx))

    if pair is None:
        return PPVerdict(True, Method.BRUTEFORCE)

    x1, x2 = (ctx.element_at(i) for i in pair)
    logging.dbg(f"Collision over F_{ctx.q}: f({x1}) = f({x2})")
    return PPVerdict(False, Method.BRUTEFORCE, (x1, x2))


def is_pp_powersums(poly: DensePoly, ctx: FieldCtx) -> PPVerdict:
    """
    A map g of F_Q permutes it iff sum_x g(x)^s is 0 for 1 <= s <= Q-2 and -1
    for s = Q-1. The powers g(x)^s are kept for every x and multiplied by
    g(x) once per step.
    """

    values = images(poly, ctx)
    power = np.broadcast_to(ctx.one_array, values.shape).copy()
    minus_one = ctx.from_int(-1).array

    for s in range(1, ctx.q):
        power = ctx.mul(power, values)
        total = power.sum(axis=0) % ctx.p
        expected = minus_one if s == ctx.q - 1 else np.zeros(ctx.n, dtype=np.int64)

        if not np.array_equal(total, expected):
            logging.dbg(f"Power sum s = {s} over F_{ctx.q} is {FieldElement(ctx, total)}")
            return PPVerdict(False, Method.POWERSUM)

    return PPVerdict(True, Method.POWERSUM)


def zieve_check(fq: FieldCtx, t: Union[int, FieldElement]) -> bool:
    """
    With h = x + t*x^q, tests whether x^{q^2-2} h(x)^{q-1} permutes the set of
    (q-1)st powers of F_{q^2}*, which has q+1 elements. This holds exactly when
    x^{q-2} + t*x^{q^2-q-1} permutes F_{q^2}.
    """

    q = fq.q

    if q <= 2:
        raise FieldError(f"q must exceed 2, got {q}")

    fq2 = field_create(fq.p, 2 * fq.desc.e)
    t = fq2.embed(fq.coerce(t))
    h = DensePoly.from_terms(fq2, {1: 1, q: t})

    powers = fq2.pow(fq2.elements[1:], q - 1)
    codes, first = np.unique(fq2.encode(powers), return_index=True)
    subgroup = powers[first]

    if len(codes) != q + 1:
        raise FieldError(f"expected {q + 1} distinct (q-1)st powers in F_{q * q}, got {len(codes)}")

    mapped = fq2.mul(fq2.pow(subgroup, q * q - 2), fq2.pow(h.evaluate_many(subgroup), q - 1))
    mapped_codes = np.unique(fq2.encode(mapped))
    return len(mapped_codes) == len(codes) and bool(np.array_equal(mapped_codes, codes))
