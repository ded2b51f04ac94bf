import numpy as np
import pytest

from ffperm.ffield import (
    ArithOp,
    FieldError,
    PrimePowerDesc,
    enumerate_field,
    fe_arith,
    field_create,
    field_for,
    is_irreducible_over_prime,
    is_prime,
    prime_power_decompose,
    prime_powers,
    quad_char,
)


def test_primes():
    assert [n for n in range(20) if is_prime(n)] == [2, 3, 5, 7, 11, 13, 17, 19]


@pytest.mark.parametrize('q, expected', [(2, (2, 1)), (9, (3, 2)), (64, (2, 6)), (343, (7, 3)), (12, None), (1, None), (0, None)])
def test_prime_power_decompose(q, expected):
    assert prime_power_decompose(q) == expected


def test_prime_powers():
    assert prime_powers(3, 30) == [3, 4, 5, 7, 8, 9, 11, 13, 16, 17, 19, 23, 25, 27, 29]


def test_desc():
    desc = PrimePowerDesc.from_q(9)
    assert (desc.p, desc.e, desc.q) == (3, 2, 9)
    assert desc.is_odd
    assert desc.squared().q == 81
    assert not PrimePowerDesc.from_q(8).is_odd

    with pytest.raises(FieldError):
        PrimePowerDesc.from_q(6)

    with pytest.raises(FieldError):
        PrimePowerDesc(4, 1, 4)

    with pytest.raises(FieldError):
        PrimePowerDesc(3, 2, 10)


@pytest.mark.parametrize('p, e', [(4, 1), (2, 0), (3, -1)])
def test_bad_parameters(p, e):
    with pytest.raises(FieldError):
        field_create(p, e)


def test_tower_shape():
    f9 = field_create(3, 2)
    f81 = field_create(3, 4)
    f27 = field_create(3, 3)

    assert f9.base is field_create(3, 1)
    assert f81.base is f9
    assert f81.subfield is f9
    assert f27.base is field_create(3, 1)
    assert f27.degree == 3
    assert f27.subfield is None
    assert [ctx.q for ctx in f81.chain] == [3, 9, 81]
    assert len(f81.tower) == 2
    assert f81.contains(f9) and not f27.contains(f9)
    assert field_create(3, 2) is f9


@pytest.mark.parametrize('p, e', [(2, 1), (2, 2), (2, 3), (2, 4), (3, 2), (3, 3), (5, 2), (7, 2), (3, 4)])
def test_enumeration_and_group_order(p, e):
    ctx = field_create(p, e)
    q = p ** e

    assert len(ctx.elements) == q
    assert np.array_equal(ctx.encode(ctx.elements), np.arange(q))
    assert (ctx.pow(ctx.elements[1:], q - 1) == ctx.one_array).all()
    assert not ctx.is_zero(ctx.pow(ctx.elements[1:], (q - 1) // 2 if q > 2 else 1)).any()


def test_no_zero_divisors():
    ctx = field_create(2, 4)
    xs = ctx.elements[1:]
    products = ctx.mul(xs[:, None, :], xs[None, :, :])
    assert not ctx.is_zero(products).any()


def test_inverse():
    ctx = field_create(5, 2)

    for x in enumerate_field(ctx)[1:]:
        assert x * x.inverse() == 1

    with pytest.raises(FieldError):
        ctx.zero.inverse()


def test_negative_power():
    ctx = field_create(7, 1)
    assert ctx.from_int(3) ** -1 == 5
    assert ctx.from_int(3) ** -2 == 4


def test_frobenius():
    ctx = field_create(3, 2)

    for x in enumerate_field(ctx):
        assert x.frobenius(2) == x
        assert x.frobenius() == x ** 3


def test_subfield_fixed_by_frobenius():
    f9 = field_create(3, 2)
    f81 = field_create(3, 4)

    for x in enumerate_field(f9):
        y = f81.embed(x)
        assert y ** 9 == y
        assert f81.restrict(y, f9) == x

    with pytest.raises(FieldError):
        f81.restrict(f81.element_at(9 * 9 - 1), f9)


def test_integer_operands():
    ctx = field_create(7, 1)
    a = ctx.from_int(3)

    assert a + 5 == 1
    assert 5 - a == 2
    assert 2 * a == 6
    assert a / 2 == 5
    assert 1 / a == 5
    assert -a == 4
    assert a.to_int() == 3


def test_mixed_contexts():
    a = field_create(3, 1).one
    b = field_create(5, 1).one

    with pytest.raises(FieldError):
        a + b


def test_rendering():
    f9 = field_create(3, 2)
    assert str(field_create(7, 1).from_int(10)) == '3'
    assert str(f9.element_at(5)) == '(2,1)'
    assert f9.element_at(5).index == 5


def test_fe_arith():
    ctx = field_create(11, 1)
    a, b, c = ctx.from_int(3), ctx.from_int(4), ctx.from_int(5)

    assert fe_arith(ArithOp.ADD, a, b, c) == 1
    assert fe_arith('mul', a, b, c) == 5
    assert fe_arith('inv', a) == 4
    assert fe_arith('pow', a, 5) == 1


def test_quad_char_f5():
    ctx = field_create(5, 1)
    assert [quad_char(ctx, t) for t in range(5)] == [0, 1, -1, -1, 1]


@pytest.mark.parametrize('p, e', [(3, 1), (3, 2), (5, 2), (7, 1), (3, 3)])
def test_quad_char_counts_squares(p, e):
    ctx = field_create(p, e)
    squares = {(x * x).index for x in enumerate_field(ctx)[1:]}

    for x in enumerate_field(ctx)[1:]:
        assert quad_char(ctx, x) == (1 if x.index in squares else -1)


def test_quad_char_even_q():
    with pytest.raises(FieldError):
        quad_char(field_create(2, 3), 1)


@pytest.mark.parametrize('f, p, expected', [
    ([1, 1, 1], 2, True),
    ([1, 0, 1], 2, False),
    ([1, 1, 0, 0, 1], 2, True),
    ([1, 0, 1, 0, 1], 2, False),
    ([1, 0, 1], 3, True),
    ([2, 0, 1], 3, False),
])
def test_irreducibility(f, p, expected):
    assert is_irreducible_over_prime(f, p) == expected


def test_field_for():
    assert field_for(PrimePowerDesc.from_q(25)) is field_create(5, 2)


def test_every_element_is_fixed_by_q_power():
    for q in prime_powers(2, 729):
        p, e = prime_power_decompose(q)
        ctx = field_create(p, e)
        assert np.array_equal(ctx.pow(ctx.elements, q), ctx.elements), q


def test_prime_subfield_of_f25():
    ctx = field_create(5, 2)
    fixed = [x for x in enumerate_field(ctx) if x ** 5 == x]

    assert len(fixed) == 5
    assert sorted(x.index for x in fixed) == [0, 1, 2, 3, 4]
