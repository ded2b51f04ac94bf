# Copyright (c) Evan Overman 2023 (https://an-prata.it/)
# Licensed under the MIT License
# See LICENSE file at repository root for details.

"""
Finite fields F_{p^e} built as towers of extensions.

A `FieldCtx` works on numpy arrays of F_p-coordinates with shape `(..., n)`,
so a whole field (or any batch of elements) goes through each operation at
once. `FieldElement` is the scalar wrapper used where single values are
needed.

Coordinates are flat: an element of an extension of degree d over a base of
`k` coordinates is stored as d consecutive blocks of `k` base coordinates,
lowest power first. An element of any field lower in the tower therefore
embeds by padding with zeros.
"""

import functools
import math
from dataclasses import dataclass
try:
    from enum import StrEnum
except ImportError:  # Python < 3.11
    from ._compat import StrEnum
from typing import Optional, Union

import numpy as np

from . import config
from . import logging


class FieldError(ValueError):
    """
    Raised for invalid field parameters and illegal field operations.
    """


def is_prime(n: int) -> bool:
    """
    Trial division primality test, fine for the desk-scale numbers used here.
    """

    if n < 2:
        return False

    if n % 2 == 0:
        return n == 2

    return all(n % d != 0 for d in range(3, math.isqrt(n) + 1, 2))


def prime_power_decompose(q: int) -> Optional[tuple[int, int]]:
    """
    Returns `(p, e)` with `q = p^e` and `p` prime, or `None` if `q` is not a
    prime power.
    """

    if q < 2:
        return None

    for p in range(2, math.isqrt(q) + 1):
        if q % p == 0:
            e = 0

            while q % p == 0:
                q //= p
                e += 1

            return (p, e) if q == 1 else None

    return (q, 1)


def prime_powers(q_min: int, q_max: int) -> list[int]:
    """
    All prime powers in `[q_min, q_max]`, ascending.
    """

    return [q for q in range(max(q_min, 2), q_max + 1) if prime_power_decompose(q) is not None]


@dataclass(frozen=True)
class PrimePowerDesc:
    p: int
    e: int
    q: int

    def __post_init__(self):
        if not is_prime(self.p):
            raise FieldError(f"{self.p} is not prime")

        if self.e < 1:
            raise FieldError(f"exponent must be at least 1, got {self.e}")

        if self.p ** self.e != self.q:
            raise FieldError(f"{self.q} != {self.p}^{self.e}")


    @classmethod
    def of(cls, p: int, e: int) -> 'PrimePowerDesc':
        if e < 1:
            raise FieldError(f"exponent must be at least 1, got {e}")

        return cls(p, e, p ** e)


    @classmethod
    def from_q(cls, q: int) -> 'PrimePowerDesc':
        """
        Describes `q` as a prime power, raising `FieldError` if it is not one.
        """

        decomposed = prime_power_decompose(q)

        if decomposed is None:
            raise FieldError(f"{q} is not a prime power")

        return cls.of(*decomposed)


    @property
    def is_odd(self) -> bool:
        return self.p != 2


    def squared(self) -> 'PrimePowerDesc':
        """
        The description of F_{q^2}.
        """

        return PrimePowerDesc.of(self.p, 2 * self.e)


    def __str__(self) -> str:
        return str(self.q)


class FieldCtx:
    """
    A finite field, either a prime field (`base is None`) or an extension of
    `degree` over `base` defined by the monic irreducible `modulus`, whose rows
    are the coefficients (as base elements) from the constant term up to the
    leading 1.

    Contexts are immutable once built and are shared between all of their
    users; `field_create` caches them.
    """

    desc:    PrimePowerDesc
    base:    Optional['FieldCtx']
    degree:  int
    n:       int
    modulus: Optional[np.ndarray]


    def __init__(self, desc: PrimePowerDesc, base: Optional['FieldCtx'] = None, modulus: Optional[np.ndarray] = None):
        self.desc = desc
        self.p = desc.p
        self.q = desc.q
        self.base = base

        if base is None:
            if desc.e != 1:
                raise FieldError(f"a prime field needs exponent 1, got {desc.e}")

            self.degree = 1
            self.n = 1
            self.modulus = None
        else:
            mod = np.array(modulus, dtype=np.int64).reshape(-1, base.n) % desc.p

            if base.p != desc.p or base.n * (mod.shape[0] - 1) != desc.e:
                raise FieldError(f"modulus of degree {mod.shape[0] - 1} over F_{base.q} does not give F_{desc.q}")

            if not np.array_equal(mod[-1], base.one_array):
                raise FieldError("defining polynomial must be monic")

            mod.setflags(write=False)
            self.degree = mod.shape[0] - 1
            self.n = desc.e
            self.modulus = mod

        one = np.zeros(self.n, dtype=np.int64)
        one[0] = 1
        one.setflags(write=False)
        self.one_array = one

        places = np.array([self.p ** i for i in range(self.n)], dtype=np.int64)
        places.setflags(write=False)
        self._places = places


    def __repr__(self) -> str:
        return f"FieldCtx(F_{self.q})"


    @property
    def is_prime_field(self) -> bool:
        return self.base is None


    @property
    def chain(self) -> list['FieldCtx']:
        """
        The fields of the tower from the prime field up to this one.
        """

        fields = [self]

        while fields[-1].base is not None:
            fields.append(fields[-1].base)

        return fields[::-1]


    @property
    def tower(self) -> list[np.ndarray]:
        """
        The defining polynomials of the tower, from the prime field upward.
        """

        return [ctx.modulus for ctx in self.chain if ctx.modulus is not None]


    @property
    def subfield(self) -> Optional['FieldCtx']:
        """
        The designated copy of F_{sqrt(q)} when this field is a quadratic
        extension, otherwise `None`.
        """

        return self.base if self.degree == 2 else None


    def contains(self, other: 'FieldCtx') -> bool:
        """
        True if `other` is a field of this field's tower (itself included).
        """

        return any(ctx is other for ctx in self.chain)


    # Vectorised arithmetic on coordinate arrays of shape (..., n).

    def add(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        return (a + b) % self.p


    def sub(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        return (a - b) % self.p


    def neg(self, a: np.ndarray) -> np.ndarray:
        return (-a) % self.p


    def scale_int(self, a: np.ndarray, k: int) -> np.ndarray:
        return (a * (k % self.p)) % self.p


    def mul(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        p = self.p

        if self.base is None:
            return (a * b) % p

        d = self.degree
        base = self.base

        if base.base is None:
            shape = np.broadcast_shapes(a.shape[:-1], b.shape[:-1])
            prod = np.zeros(shape + (2 * d - 1,), dtype=np.int64)

            for i in range(d):
                prod[..., i:i + d] += a[..., i:i + 1] * b

            prod %= p
            low = self.modulus[:d, 0]

            for s in range(2 * d - 2, d - 1, -1):
                prod[..., s - d:s] = (prod[..., s - d:s] - prod[..., s:s + 1] * low) % p

            return np.ascontiguousarray(prod[..., :d])

        k = base.n
        blocks_a = [a[..., i * k:(i + 1) * k] for i in range(d)]
        blocks_b = [b[..., i * k:(i + 1) * k] for i in range(d)]
        prod: list[Optional[np.ndarray]] = [None] * (2 * d - 1)

        for i in range(d):
            for j in range(d):
                term = base.mul(blocks_a[i], blocks_b[j])
                prod[i + j] = term if prod[i + j] is None else base.add(prod[i + j], term)

        for s in range(2 * d - 2, d - 1, -1):
            top = prod[s]

            for j in range(d):
                if not self.modulus[j].any():
                    continue

                prod[s - d + j] = base.sub(prod[s - d + j], base.mul(top, self.modulus[j]))

        return np.concatenate(prod[:d], axis=-1)


    def is_zero(self, a: np.ndarray) -> np.ndarray:
        return ~np.asarray(a).any(axis=-1)


    def pow(self, a: np.ndarray, k: int) -> np.ndarray:
        """
        Square-and-multiply exponentiation; `k` may be any Python integer, a
        negative one requires every base to be nonzero.
        """

        a = np.asarray(a, dtype=np.int64)

        if k < 0:
            a = self.inv(a)
            k = -k

        result = np.broadcast_to(self.one_array, a.shape).copy()
        square = a

        while k:
            if k & 1:
                result = self.mul(result, square)

            k >>= 1

            if k:
                square = self.mul(square, square)

        return result


    def inv(self, a: np.ndarray) -> np.ndarray:
        if self.is_zero(a).any():
            raise FieldError("inversion of zero")

        return self.pow(a, self.q - 2)


    def frobenius(self, a: np.ndarray, k: int = 1) -> np.ndarray:
        return self.pow(a, self.p ** k)


    # Enumeration and encoding.

    @functools.cached_property
    def elements(self) -> np.ndarray:
        """
        Every element of the field, row `i` being the element with index `i`
        (coordinates are the base-p digits of the index). Index 0 is zero.
        """

        coords = self.elements_at(np.arange(self.q, dtype=np.int64))
        coords.setflags(write=False)
        return coords


    def elements_at(self, indices) -> np.ndarray:
        """
        Coordinate rows of the elements with the given indices.
        """

        idx = np.asarray(indices, dtype=np.int64)
        return (idx[..., None] // self._places) % self.p


    def encode(self, a: np.ndarray) -> np.ndarray:
        """
        Maps coordinate rows to their element index.
        """

        return (np.asarray(a, dtype=np.int64) * self._places).sum(axis=-1)


    def element(self, coords) -> 'FieldElement':
        return FieldElement(self, coords)


    def element_at(self, index: int) -> 'FieldElement':
        return FieldElement(self, self.elements_at(index))


    def from_int(self, k: int) -> 'FieldElement':
        """
        The image of the integer `k` under Z -> F_p -> this field.
        """

        coords = [0] * self.n
        coords[0] = k % self.p
        return FieldElement(self, coords)


    @property
    def zero(self) -> 'FieldElement':
        return FieldElement(self, [0] * self.n)


    @property
    def one(self) -> 'FieldElement':
        return FieldElement(self, self.one_array)


    def coerce(self, value: Union[int, 'FieldElement']) -> 'FieldElement':
        """
        Accepts an integer, an element of this field, or an element of a field
        lower in the tower.
        """

        if isinstance(value, FieldElement):
            if value.ctx is self:
                return value

            return self.embed(value)

        if isinstance(value, (int, np.integer)):
            return self.from_int(int(value))

        raise FieldError(f"cannot interpret {value!r} as an element of F_{self.q}")


    def embed(self, elem: 'FieldElement') -> 'FieldElement':
        """
        Embeds an element of a subfield of the tower into this field.
        """

        if not self.contains(elem.ctx):
            raise FieldError(f"F_{elem.ctx.q} is not a subfield of the tower of F_{self.q}")

        return FieldElement(self, list(elem.coords) + [0] * (self.n - elem.ctx.n))


    def embed_array(self, a: np.ndarray, sub: 'FieldCtx') -> np.ndarray:
        if not self.contains(sub):
            raise FieldError(f"F_{sub.q} is not a subfield of the tower of F_{self.q}")

        a = np.asarray(a, dtype=np.int64)
        pad = np.zeros(a.shape[:-1] + (self.n - sub.n,), dtype=np.int64)
        return np.concatenate([a, pad], axis=-1)


    def restrict(self, elem: 'FieldElement', sub: 'FieldCtx') -> 'FieldElement':
        """
        Views an element lying in a subfield of the tower as an element of that
        subfield.
        """

        if elem.ctx is not self or not self.contains(sub):
            raise FieldError(f"F_{sub.q} is not a subfield of the tower of F_{self.q}")

        if any(elem.coords[sub.n:]):
            raise FieldError(f"{elem} does not lie in F_{sub.q}")

        return FieldElement(sub, elem.coords[:sub.n])


class FieldElement:
    """
    A single element of a `FieldCtx`. Integers are accepted as operands and
    mapped into the field; elements of different contexts are rejected.
    """

    __slots__ = ('ctx', 'coords')

    ctx:    FieldCtx
    coords: tuple[int, ...]


    def __init__(self, ctx: FieldCtx, coords):
        values = tuple(int(c) % ctx.p for c in coords)

        if len(values) != ctx.n:
            raise FieldError(f"F_{ctx.q} elements have {ctx.n} coordinates, got {len(values)}")

        self.ctx = ctx
        self.coords = values


    @property
    def array(self) -> np.ndarray:
        return np.array(self.coords, dtype=np.int64)


    @property
    def index(self) -> int:
        return sum(c * self.ctx.p ** i for i, c in enumerate(self.coords))


    def _operand(self, other) -> 'FieldElement':
        if isinstance(other, FieldElement):
            if other.ctx is not self.ctx:
                raise FieldError(f"mixed contexts: F_{self.ctx.q} and F_{other.ctx.q}")

            return other

        if isinstance(other, (int, np.integer)):
            return self.ctx.from_int(int(other))

        return NotImplemented


    def _wrap(self, arr: np.ndarray) -> 'FieldElement':
        return FieldElement(self.ctx, arr)


    def __add__(self, other):
        other = self._operand(other)

        if other is NotImplemented:
            return other

        return self._wrap(self.ctx.add(self.array, other.array))


    __radd__ = __add__


    def __sub__(self, other):
        other = self._operand(other)

        if other is NotImplemented:
            return other

        return self._wrap(self.ctx.sub(self.array, other.array))


    def __rsub__(self, other):
        other = self._operand(other)

        if other is NotImplemented:
            return other

        return other - self


    def __neg__(self):
        return self._wrap(self.ctx.neg(self.array))


    def __mul__(self, other):
        other = self._operand(other)

        if other is NotImplemented:
            return other

        return self._wrap(self.ctx.mul(self.array, other.array))


    __rmul__ = __mul__


    def __truediv__(self, other):
        other = self._operand(other)

        if other is NotImplemented:
            return other

        return self * other.inverse()


    def __rtruediv__(self, other):
        other = self._operand(other)

        if other is NotImplemented:
            return other

        return other * self.inverse()


    def __pow__(self, k: int):
        return self._wrap(self.ctx.pow(self.array, int(k)))


    def inverse(self) -> 'FieldElement':
        return self._wrap(self.ctx.inv(self.array))


    def frobenius(self, k: int = 1) -> 'FieldElement':
        return self._wrap(self.ctx.frobenius(self.array, k))


    def is_zero(self) -> bool:
        return not any(self.coords)


    def __bool__(self) -> bool:
        return not self.is_zero()


    def to_int(self) -> int:
        """
        The integer in `[0, p)` representing a prime-field element.
        """

        if any(self.coords[1:]):
            raise FieldError(f"{self} is not in the prime field")

        return self.coords[0]


    def __eq__(self, other) -> bool:
        if isinstance(other, (int, np.integer)):
            return self == self.ctx.from_int(int(other))

        if not isinstance(other, FieldElement):
            return NotImplemented

        return other.ctx is self.ctx and other.coords == self.coords


    def __hash__(self) -> int:
        return hash((self.ctx.q, self.coords))


    def __str__(self) -> str:
        if self.ctx.n == 1:
            return str(self.coords[0])

        return f"({','.join(str(c) for c in self.coords)})"


    def __repr__(self) -> str:
        return f"FieldElement(F_{self.ctx.q}, {self})"


class ArithOp(StrEnum):
    ADD = 'add'
    MUL = 'mul'
    INV = 'inv'
    POW = 'pow'


def fe_arith(op: ArithOp, *operands) -> FieldElement:
    """
    Tagged entry point for element arithmetic: `add` and `mul` fold over any
    number of elements, `inv` takes one element, `pow` an element and an
    integer exponent.
    """

    op = ArithOp(op)

    if op == ArithOp.ADD:
        return functools.reduce(lambda acc, x: acc + x, operands[1:], operands[0])
    elif op == ArithOp.MUL:
        return functools.reduce(lambda acc, x: acc * x, operands[1:], operands[0])
    elif op == ArithOp.INV:
        (a,) = operands
        return a.inverse()
    else:
        a, k = operands
        return a ** k


def quad_char(ctx: FieldCtx, t: Union[int, FieldElement]) -> int:
    """
    The quadratic character: +1 on nonzero squares, -1 on non-squares, 0 on
    zero. Only defined for odd q.
    """

    if not ctx.desc.is_odd:
        raise FieldError(f"quadratic character needs odd q, got {ctx.q}")

    t = ctx.coerce(t)

    if t.is_zero():
        return 0

    value = t ** ((ctx.q - 1) // 2)

    if value == 1:
        return 1
    elif value == -1:
        return -1

    raise FieldError(f"t^((q-1)/2) = {value} is not +-1 in F_{ctx.q}")


def enumerate_field(ctx: FieldCtx) -> list[FieldElement]:
    """
    All elements in index order, zero first.
    """

    return [FieldElement(ctx, row) for row in ctx.elements]


# Polynomials over F_p as coefficient lists (lowest degree first), used only to
# find and check defining polynomials.

def _zp_trim(f: list[int]) -> list[int]:
    f = list(f)

    while f and f[-1] == 0:
        f.pop()

    return f


def _zp_mod(f: list[int], g: list[int], p: int) -> list[int]:
    f = _zp_trim(f)
    g = _zp_trim(g)
    lead_inv = pow(g[-1], -1, p)

    while len(f) >= len(g):
        c = f[-1] * lead_inv % p
        shift = len(f) - len(g)

        for i, gi in enumerate(g):
            f[shift + i] = (f[shift + i] - c * gi) % p

        f = _zp_trim(f)

    return f


def _zp_mulmod(a: list[int], b: list[int], m: list[int], p: int) -> list[int]:
    if not a or not b:
        return []

    prod = [0] * (len(a) + len(b) - 1)

    for i, ai in enumerate(a):
        if ai == 0:
            continue

        for j, bj in enumerate(b):
            prod[i + j] = (prod[i + j] + ai * bj) % p

    return _zp_mod(prod, m, p)


def _zp_powmod(a: list[int], k: int, m: list[int], p: int) -> list[int]:
    result = [1]
    square = _zp_mod(a, m, p)

    while k:
        if k & 1:
            result = _zp_mulmod(result, square, m, p)

        k >>= 1

        if k:
            square = _zp_mulmod(square, square, m, p)

    return result


def _zp_sub(a: list[int], b: list[int], p: int) -> list[int]:
    size = max(len(a), len(b))
    a = list(a) + [0] * (size - len(a))
    b = list(b) + [0] * (size - len(b))
    return _zp_trim([(x - y) % p for x, y in zip(a, b)])


def _zp_gcd(a: list[int], b: list[int], p: int) -> list[int]:
    a = _zp_trim(a)
    b = _zp_trim(b)

    while b:
        a, b = b, _zp_mod(a, b, p)

    return a


def is_irreducible_over_prime(f: list[int], p: int) -> bool:
    """
    Irreducibility of `f` over F_p: a root search for degree at most 3, and
    otherwise gcd(f, x^{p^i} - x) = 1 for every i <= deg(f)/2.
    """

    f = _zp_trim(f)
    d = len(f) - 1

    if d < 1:
        return False

    if d == 1:
        return True

    if d <= 3:
        for x in range(p):
            value = 0

            for c in reversed(f):
                value = (value * x + c) % p

            if value == 0:
                return False

        return True

    xp = [0, 1]

    for _ in range(d // 2):
        xp = _zp_powmod(xp, p, f, p)

        if len(_zp_gcd(f, _zp_sub(xp, [0, 1], p), p)) > 1:
            return False

    return True


def has_root_in(base: FieldCtx, modulus: np.ndarray) -> bool:
    """
    True if the polynomial with coefficient rows `modulus` (over `base`) has a
    root in `base`, by evaluating it at every element.
    """

    xs = base.elements
    value = np.broadcast_to(modulus[-1], xs.shape).copy()

    for c in modulus[-2::-1]:
        value = base.add(base.mul(value, xs), c)

    return bool(base.is_zero(value).any())


def _find_irreducible(base: FieldCtx, degree: int) -> np.ndarray:
    if base.is_prime_field:
        p = base.p

        for idx in range(p ** degree):
            low = [(idx // p ** j) % p for j in range(degree)]

            if low[0] == 0:
                continue

            if is_irreducible_over_prime(low + [1], p):
                return np.array(low + [1], dtype=np.int64).reshape(degree + 1, 1)
    else:
        if degree > 3:
            raise FieldError(f"extensions of degree {degree} are only built over prime fields")

        for idx in range(base.q ** degree):
            low = [base.elements[(idx // base.q ** j) % base.q] for j in range(degree)]

            if not low[0].any():
                continue

            candidate = np.stack(low + [base.one_array])

            if not has_root_in(base, candidate):
                return candidate

    raise FieldError(f"no irreducible polynomial of degree {degree} over F_{base.q}")


def _spot_check(ctx: FieldCtx):
    count = min(ctx.q - 1, 32)
    sample = np.unique(np.linspace(1, ctx.q - 1, count).astype(np.int64))
    powers = ctx.pow(ctx.elements_at(sample), ctx.q - 1)

    if not (powers == ctx.one_array).all():
        raise FieldError(f"F_{ctx.q}: a^(q-1) != 1 for some sampled a, tower is broken")


@functools.lru_cache(maxsize=None)
def _build_field(p: int, e: int) -> FieldCtx:
    desc = PrimePowerDesc.of(p, e)

    if e == 1:
        return FieldCtx(desc)

    if e % 2 == 0:
        base = _build_field(p, e // 2)
        degree = 2
    else:
        base = _build_field(p, 1)
        degree = e

    modulus = _find_irreducible(base, degree)
    ctx = FieldCtx(desc, base, modulus)
    _spot_check(ctx)
    logging.log("FIELD", f"Built F_{ctx.q} as a degree {degree} extension of F_{base.q}")
    logging.dbg(f"F_{ctx.q} modulus rows: {modulus.tolist()}")
    return ctx


def field_create(p: int, e: int) -> FieldCtx:
    """
    Gets the context for F_{p^e}. An even `e` gives a quadratic extension of
    F_{p^{e/2}}, an odd `e > 1` a direct extension of F_p, so F_{q^2} always
    has F_q as its designated subfield. Contexts are cached and shared.
    """

    if not isinstance(p, int) or not isinstance(e, int):
        raise FieldError("p and e must be integers")

    if not is_prime(p):
        raise FieldError(f"{p} is not prime")

    if e < 1:
        raise FieldError(f"exponent must be at least 1, got {e}")

    bound = config.max_field_size()

    # Compare logarithms first so huge exponents never get expanded.
    if e * math.log2(p) > math.log2(bound) + 1 or p ** e > bound:
        raise FieldError(f"F_{p}^{e} exceeds the field size bound {bound}")

    return _build_field(p, e)


def field_for(desc: PrimePowerDesc) -> FieldCtx:
    return field_create(desc.p, desc.e)
