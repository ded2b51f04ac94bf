import numpy as np
import pytest

from ffperm.ffield import field_create
from ffperm.fpoly import DensePoly, PolyError, PolyOp, field_modulus, poly_arith, poly_eval, reduce_mod_field


@pytest.fixture
def f5():
    return field_create(5, 1)


def test_trimming(f5):
    p = DensePoly.from_ints(f5, [1, 2, 0, 5, 0])
    assert p.degree == 1
    assert DensePoly.zero(f5).degree == -1
    assert DensePoly.from_ints(f5, [0, 0]).is_zero()


def test_arithmetic(f5):
    a = DensePoly.from_ints(f5, [1, 1])
    b = DensePoly.from_ints(f5, [-1, 1])

    assert (a * b).render() == 'x^2 + 4'
    assert (a + b).render() == '2*x'
    assert (a - b).render() == '2'
    assert (-a).render() == '4*x + 4'
    assert (a * 3).render() == '3*x + 3'
    assert poly_arith(PolyOp.MUL, a, b) == a * b
    assert poly_arith('add', a, b) == a + b
    assert poly_arith('scale', a, 2) == a + a


def test_division(f5):
    num = DensePoly.from_ints(f5, [4, 0, 1])
    den = DensePoly.from_ints(f5, [1, 1])
    quot, rem = divmod(num, den)

    assert quot.render() == 'x + 4'
    assert rem.is_zero()
    assert quot * den + rem == num

    with pytest.raises(PolyError):
        divmod(num, DensePoly.zero(f5))


def test_pow_mod(f5):
    x = DensePoly.monomial(f5, 1)
    modulus = field_modulus(f5, 1)

    assert modulus.render() == 'x^5 + 4*x'
    assert x.pow_mod(5, modulus) == x
    assert x.pow_mod(25, modulus) == x
    assert poly_arith(PolyOp.POW_MOD, x, 7, modulus).render() == 'x^3'


def test_evaluate(f5):
    f7 = field_create(7, 1)
    p = DensePoly.from_ints(f7, [2, 0, 0, 1])

    assert p.evaluate(f7.from_int(2)) == 3
    assert poly_eval(p, f7.from_int(0)) == 2

    with pytest.raises(PolyError):
        p.evaluate(f5.one)


def test_sparse_evaluation_matches_horner():
    ctx = field_create(3, 2)
    xs = ctx.elements
    sparse = DensePoly.from_terms(ctx, {40: 1, 1: ctx.element_at(4)})
    expected = ctx.add(ctx.pow(xs, 40), ctx.mul(xs, ctx.element_at(4).array))

    assert np.array_equal(sparse.evaluate_many(xs), expected)

    dense = DensePoly.from_ints(ctx, [1, 2, 1, 1])
    expected = ctx.add(ctx.add(ctx.pow(xs, 3), ctx.pow(xs, 2)), ctx.add(ctx.scale_int(xs, 2), ctx.one_array))
    assert np.array_equal(dense.evaluate_many(xs), expected)


def test_over_extension():
    f3 = field_create(3, 1)
    f9 = field_create(3, 2)
    p = DensePoly.from_ints(f3, [1, 0, 1])
    lifted = p.over(f9)

    assert lifted.ctx is f9
    assert [d for d, _ in lifted.terms()] == [0, 2]
    assert all(c == 1 for _, c in lifted.terms())
    assert f9.is_zero(lifted.evaluate_many(f9.elements)).sum() == 2


def test_mixed_contexts(f5):
    with pytest.raises(PolyError):
        DensePoly.monomial(f5, 1) + DensePoly.monomial(field_create(7, 1), 1)


def test_reduce_mod_field():
    f3 = field_create(3, 1)
    f9 = field_create(3, 2)
    p = DensePoly.from_terms(f3, {9: 1, 10: 2, 17: 1, 0: 1})
    reduced = reduce_mod_field(p, 2)

    assert reduced.render() == '2*x^2 + 2*x + 1'
    assert np.array_equal(p.over(f9).evaluate_many(f9.elements), reduced.over(f9).evaluate_many(f9.elements))
    assert reduce_mod_field(reduced, 2) is reduced

    with pytest.raises(PolyError):
        reduce_mod_field(p, 0)


def test_rendering(f5):
    assert DensePoly.zero(f5).render() == '0'
    assert DensePoly.from_terms(f5, {3: 1, 0: 2}).render() == 'x^3 + 2'
    assert str(DensePoly.from_terms(field_create(3, 2), {1: field_create(3, 2).element_at(3)})) == '(0,1)*x'


@pytest.mark.parametrize('p, e', [(3, 1), (5, 1), (7, 1), (3, 2)])
def test_reduce_recovers_binomial_from_lifted_form(p, e):
    fq = field_create(p, e)
    q = fq.q
    t = fq.element_at(q - 1)
    lifted = DensePoly.monomial(fq, q * q - 2) * DensePoly.from_terms(fq, {q - 1: 1, q * (q - 1): t})
    expected = DensePoly.from_terms(fq, {q - 2: 1, q * q - q - 1: t})

    assert reduce_mod_field(lifted, 2) == expected


@pytest.mark.parametrize('p, e, m', [(2, 1, 2), (3, 1, 1), (3, 1, 2), (5, 1, 2), (2, 2, 2), (3, 2, 1), (3, 2, 2), (3, 3, 1)])
def test_reduce_mod_field_keeps_function(p, e, m):
    fq = field_create(p, e)
    big = field_create(p, e * m)
    size = big.q
    rng = np.random.default_rng(p * 100 + e * 10 + m)

    for _ in range(4):
        degrees = rng.integers(0, 3 * size, size=6)
        poly = DensePoly.from_terms(fq, {int(d): fq.element_at(int(rng.integers(1, fq.q))) for d in degrees})
        reduced = reduce_mod_field(poly, m)

        assert reduced.degree < size
        assert np.array_equal(poly.over(big).evaluate_many(big.elements), reduced.over(big).evaluate_many(big.elements))
