# Copyright (c) Evan Overman 2023 (https://an-prata.it/)
# Licensed under the MIT License
# See LICENSE file at repository root for details.

try:
    from enum import StrEnum
except ImportError:  # Python < 3.11
    from ._compat import StrEnum
from typing import Union

import numpy as np

from .ffield import FieldCtx, FieldElement, FieldError


class PolyError(ValueError):
    """
    Raised for polynomial operations across contexts or by a zero modulus.
    """


Scalar = Union[int, FieldElement]


class DensePoly:
    """
    A dense polynomial over a `FieldCtx`. Row `d` of `coeffs` holds the
    coordinates of the coefficient of x^d; trailing zero rows are trimmed, so
    the zero polynomial has no rows.
    """

    ctx:    FieldCtx
    coeffs: np.ndarray


    def __init__(self, ctx: FieldCtx, coeffs):
        arr = np.array(coeffs, dtype=np.int64).reshape(-1, ctx.n) % ctx.p
        nonzero = np.flatnonzero(arr.any(axis=1))
        arr = arr[:nonzero[-1] + 1] if len(nonzero) else arr[:0]
        arr.setflags(write=False)

        self.ctx = ctx
        self.coeffs = arr


    @classmethod
    def zero(cls, ctx: FieldCtx) -> 'DensePoly':
        return cls(ctx, np.zeros((0, ctx.n), dtype=np.int64))


    @classmethod
    def from_terms(cls, ctx: FieldCtx, terms: dict[int, Scalar]) -> 'DensePoly':
        """
        Builds a polynomial from `{degree: coefficient}`; coefficients may be
        integers or elements of any field in the tower of `ctx`.
        """

        if not terms:
            return cls.zero(ctx)

        if min(terms) < 0:
            raise PolyError("negative degree")

        arr = np.zeros((max(terms) + 1, ctx.n), dtype=np.int64)

        for d, c in terms.items():
            arr[d] = ctx.add(arr[d], ctx.coerce(c).array)

        return cls(ctx, arr)


    @classmethod
    def from_ints(cls, ctx: FieldCtx, values) -> 'DensePoly':
        """
        Builds a polynomial with prime-field coefficients given lowest degree
        first.
        """

        values = np.asarray(values, dtype=np.int64) % ctx.p
        arr = np.zeros((len(values), ctx.n), dtype=np.int64)
        arr[:, 0] = values
        return cls(ctx, arr)


    @classmethod
    def monomial(cls, ctx: FieldCtx, d: int, c: Scalar = 1) -> 'DensePoly':
        return cls.from_terms(ctx, {d: c})


    @property
    def degree(self) -> int:
        """
        The degree, -1 for the zero polynomial.
        """

        return len(self.coeffs) - 1


    def is_zero(self) -> bool:
        return len(self.coeffs) == 0


    def coefficient(self, d: int) -> FieldElement:
        if d < 0 or d > self.degree:
            return self.ctx.zero

        return FieldElement(self.ctx, self.coeffs[d])


    def nonzero_degrees(self) -> np.ndarray:
        return np.flatnonzero(self.coeffs.any(axis=1))


    def terms(self) -> list[tuple[int, FieldElement]]:
        """
        The nonzero terms as `(degree, coefficient)`, ascending.
        """

        return [(int(d), FieldElement(self.ctx, self.coeffs[d])) for d in self.nonzero_degrees()]


    def over(self, ctx: FieldCtx) -> 'DensePoly':
        """
        The same polynomial with its coefficients embedded in an extension
        field of the tower.
        """

        if ctx is self.ctx:
            return self

        try:
            return DensePoly(ctx, ctx.embed_array(self.coeffs, self.ctx))
        except FieldError as e:
            raise PolyError(str(e))


    def _check(self, other: 'DensePoly'):
        if other.ctx is not self.ctx:
            raise PolyError(f"mixed contexts: F_{self.ctx.q} and F_{other.ctx.q}")


    def _padded(self, size: int) -> np.ndarray:
        out = np.zeros((size, self.ctx.n), dtype=np.int64)
        out[:len(self.coeffs)] = self.coeffs
        return out


    def __eq__(self, other) -> bool:
        if not isinstance(other, DensePoly):
            return NotImplemented

        return other.ctx is self.ctx and np.array_equal(self.coeffs, other.coeffs)


    __hash__ = None


    def __add__(self, other: 'DensePoly') -> 'DensePoly':
        self._check(other)
        size = max(len(self.coeffs), len(other.coeffs))
        return DensePoly(self.ctx, self.ctx.add(self._padded(size), other._padded(size)))


    def __sub__(self, other: 'DensePoly') -> 'DensePoly':
        self._check(other)
        size = max(len(self.coeffs), len(other.coeffs))
        return DensePoly(self.ctx, self.ctx.sub(self._padded(size), other._padded(size)))


    def __neg__(self) -> 'DensePoly':
        return DensePoly(self.ctx, self.ctx.neg(self.coeffs))


    def scale(self, c: Scalar) -> 'DensePoly':
        c = self.ctx.coerce(c)
        return DensePoly(self.ctx, self.ctx.mul(self.coeffs, c.array))


    def __mul__(self, other) -> 'DensePoly':
        if isinstance(other, (int, np.integer, FieldElement)):
            return self.scale(other)

        self._check(other)

        if self.is_zero() or other.is_zero():
            return DensePoly.zero(self.ctx)

        a, b = (self, other) if len(self.nonzero_degrees()) <= len(other.nonzero_degrees()) else (other, self)
        out = np.zeros((len(a.coeffs) + len(b.coeffs) - 1, self.ctx.n), dtype=np.int64)
        width = len(b.coeffs)

        for i in a.nonzero_degrees():
            out[i:i + width] = self.ctx.add(out[i:i + width], self.ctx.mul(a.coeffs[i], b.coeffs))

        return DensePoly(self.ctx, out)


    __rmul__ = __mul__


    def __divmod__(self, modulus: 'DensePoly') -> tuple['DensePoly', 'DensePoly']:
        """
        Long division. Only the nonzero terms of the divisor are touched, so a
        sparse modulus like x^Q - x costs one step per quotient term.
        """

        self._check(modulus)

        if modulus.is_zero():
            raise PolyError("division by the zero polynomial")

        ctx = self.ctx
        dm = modulus.degree

        if self.degree < dm:
            return DensePoly.zero(ctx), self

        rem = self.coeffs.copy()
        quot = np.zeros((len(rem) - dm, ctx.n), dtype=np.int64)
        lead_inv = ctx.inv(modulus.coeffs[dm])
        lower = [(int(j), modulus.coeffs[j]) for j in modulus.nonzero_degrees() if j < dm]

        for k in range(len(rem) - 1, dm - 1, -1):
            if not rem[k].any():
                continue

            c = ctx.mul(rem[k], lead_inv)
            quot[k - dm] = c
            rem[k] = 0

            for j, mj in lower:
                rem[k - dm + j] = ctx.sub(rem[k - dm + j], ctx.mul(c, mj))

        return DensePoly(ctx, quot), DensePoly(ctx, rem[:dm])


    def __mod__(self, modulus: 'DensePoly') -> 'DensePoly':
        return divmod(self, modulus)[1]


    def pow_mod(self, k: int, modulus: 'DensePoly') -> 'DensePoly':
        """
        `self^k mod modulus` by square-and-multiply in the quotient ring.
        """

        if k < 0:
            raise PolyError("pow-mod exponent must be nonnegative")

        result = DensePoly.monomial(self.ctx, 0) % modulus
        square = self % modulus

        while k:
            if k & 1:
                result = (result * square) % modulus

            k >>= 1

            if k:
                square = (square * square) % modulus

        return result


    def evaluate_many(self, xs: np.ndarray) -> np.ndarray:
        """
        Evaluates at every row of `xs` (coordinates over this polynomial's
        field). Horner's rule for dense polynomials; for sparse ones each
        nonzero term is reached by exponentiation instead of walking every
        degree.
        """

        ctx = self.ctx
        xs = np.asarray(xs, dtype=np.int64)

        if self.is_zero():
            return np.zeros(xs.shape, dtype=np.int64)

        degrees = self.nonzero_degrees()
        deg = self.degree

        if len(degrees) * max(1, deg.bit_length()) < deg + 1:
            acc = np.zeros(xs.shape, dtype=np.int64)
            power = np.broadcast_to(ctx.one_array, xs.shape).copy()
            previous = 0

            for d in degrees:
                power = ctx.mul(power, ctx.pow(xs, int(d) - previous))
                previous = int(d)
                acc = ctx.add(acc, ctx.mul(power, self.coeffs[d]))

            return acc

        acc = np.broadcast_to(self.coeffs[deg], xs.shape).copy()

        for d in range(deg - 1, -1, -1):
            acc = ctx.add(ctx.mul(acc, xs), self.coeffs[d])

        return acc


    def evaluate(self, x: FieldElement) -> FieldElement:
        if x.ctx is not self.ctx:
            raise PolyError(f"mixed contexts: F_{self.ctx.q} and F_{x.ctx.q}")

        return FieldElement(self.ctx, self.evaluate_many(x.array))


    def render(self) -> str:
        """
        Exact rendering, highest degree first, e.g. `x^5 + 2*x + 1`.
        """

        parts = []

        for d, c in reversed(self.terms()):
            if d == 0:
                parts.append(str(c))
                continue

            mono = 'x' if d == 1 else f"x^{d}"
            parts.append(mono if c == 1 else f"{c}*{mono}")

        return ' + '.join(parts) if parts else '0'


    def __str__(self) -> str:
        return self.render()


    def __repr__(self) -> str:
        return f"DensePoly(F_{self.ctx.q}, {self.render()})"


class PolyOp(StrEnum):
    ADD = 'add'
    MUL = 'mul'
    SCALE = 'scale'
    POW_MOD = 'pow-mod'


def poly_arith(op: PolyOp, *operands) -> DensePoly:
    """
    Tagged entry point: `add(a, b)`, `mul(a, b)`, `scale(a, c)`,
    `pow-mod(a, k, modulus)`.
    """

    op = PolyOp(op)

    if op == PolyOp.ADD:
        a, b = operands
        return a + b
    elif op == PolyOp.MUL:
        a, b = operands
        return a * b
    elif op == PolyOp.SCALE:
        a, c = operands
        return a.scale(c)
    else:
        a, k, modulus = operands
        return a.pow_mod(k, modulus)


def poly_eval(poly: DensePoly, x: FieldElement) -> FieldElement:
    return poly.evaluate(x)


def field_modulus(ctx: FieldCtx, m: int) -> DensePoly:
    """
    The polynomial x^{q^m} - x over `ctx`.
    """

    size = ctx.q ** m
    return DensePoly.from_terms(ctx, {size: 1, 1: -1})


def reduce_mod_field(poly: DensePoly, m: int) -> DensePoly:
    """
    Reduces modulo x^{Q} - x with Q = q^m, where q is the size of the
    polynomial's field. Exponent d >= Q goes to ((d - 1) mod (Q - 1)) + 1 and
    the constant term stays put, so the induced function on F_Q is unchanged.
    """

    if m < 1:
        raise PolyError(f"m must be positive, got {m}")

    size = poly.ctx.q ** m

    if poly.degree < size:
        return poly

    exps = np.arange(len(poly.coeffs), dtype=np.int64)
    target = np.where(exps >= size, (exps - 1) % (size - 1) + 1, exps)
    out = np.zeros((int(target.max()) + 1, poly.ctx.n), dtype=np.int64)
    np.add.at(out, target, poly.coeffs)
    return DensePoly(poly.ctx, out % poly.ctx.p)
