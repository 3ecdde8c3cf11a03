import math

import numpy as np
import pytest
from hypothesis import given, settings

from cyclocolor.cyclo import (
    CLASS_NUMBER_ONE,
    CycInt,
    ModulusContext,
    ModulusError,
    context,
    conjugate,
    cyclotomic_polynomial,
    euler_phi,
    format_polynomial,
    mul,
    mult_matrix,
    norm,
    parse_generator,
    parse_polynomial,
    reduce,
)
from cyclocolor.cyclo import _poly_mul

from conftest import element_pairs, elements, float_norm

S5 = [[1, 0, 0, 1], [-1, 1, 0, 1], [0, -1, 1, 1], [0, 0, -1, 2]]
S7 = [
    [1, 0, 0, 1, -1, 1],
    [-1, 1, 0, 1, 0, 0],
    [0, -1, 1, 1, 0, 1],
    [-1, 0, -1, 2, 0, 1],
    [0, -1, 0, 0, 1, 1],
    [0, 0, -1, 1, -1, 2],
]


def brute_units(n):
    return sum(1 for a in range(n) if any(a * b % n == 1 % n for b in range(n)))


@pytest.mark.parametrize("n, expected", [(1, 1), (15, 8), (16, 8)])
def test_euler_phi(n, expected):
    assert euler_phi(n) == expected


def test_euler_phi_matches_unit_count():
    for n in range(2, 60):
        assert euler_phi(n) == brute_units(n)


def test_whitelist():
    assert len(CLASS_NUMBER_ONE) == 29
    assert max(euler_phi(n) for n in CLASS_NUMBER_ONE) == 24


@pytest.mark.parametrize(
    "n, coeffs",
    [
        (1, [-1, 1]),
        (4, [1, 0, 1]),
        (15, [1, -1, 0, 1, -1, 1, 0, -1, 1]),
    ],
)
def test_cyclotomic_polynomial_examples(n, coeffs):
    assert cyclotomic_polynomial(n) == coeffs


def test_cyclotomic_product_is_xn_minus_1():
    for n in range(1, 101):
        prod = [1]
        for d in range(1, n + 1):
            if n % d == 0:
                prod = _poly_mul(prod, cyclotomic_polynomial(d))
        assert prod == [-1] + [0] * (n - 1) + [1], n
        p = cyclotomic_polynomial(n)
        assert p[-1] == 1 and len(p) - 1 == euler_phi(n)


class TestContext:
    def test_rotation_order(self):
        assert context(4).N == 4
        assert context(5).N == 10
        assert context(15).N == 30

    def test_two_mod_four_redirects(self):
        with pytest.raises(ModulusError, match="n=3"):
            ModulusContext(6)
        with pytest.raises(ModulusError, match="n=5"):
            ModulusContext(10)

    def test_rejects_non_pid(self):
        with pytest.raises(ModulusError, match="class-number-one"):
            ModulusContext(23)


class TestReduce:
    def test_xi4_in_m5(self):
        assert reduce([0, 0, 0, 0, 1], context(5)).coeffs == (-1, -1, -1, -1)

    def test_i_squared(self):
        assert reduce([0, 0, 1], context(4)).coeffs == (-1, 0)

    def test_xi5_is_one(self):
        assert reduce([0] * 5 + [1], context(5)).coeffs == (1, 0, 0, 0)

    def test_idempotent(self):
        ctx = context(12)
        a = reduce([3, -1, 4, 1, -5, 9, 2, -6, 5, 3], ctx)
        assert reduce(a.coeffs, ctx) == a


class TestArithmetic:
    def test_m5_product(self):
        ctx = context(5)
        a = parse_generator("1-x", ctx)
        assert mul(a, reduce([0, 0, 0, 1], ctx)).coeffs == (1, 1, 1, 2)

    def test_gaussian(self):
        ctx = context(4)
        assert (parse_generator("1+x", ctx) * parse_generator("1-x", ctx)).coeffs == (2, 0)

    def test_identity(self):
        ctx = context(9)
        a = parse_generator("2-x^4+x^5", ctx)
        assert a * 1 == a and a * ctx.one == a

    def test_mismatch(self):
        with pytest.raises(ModulusError):
            context(5).one + context(7).one


class TestConjugate:
    def test_xi_in_m5(self):
        assert conjugate(context(5).xi).coeffs == (-1, -1, -1, -1)

    def test_rational(self):
        assert conjugate(context(16).one) == context(16).one

    def test_xi2_in_m7(self):
        ctx = context(7)
        assert conjugate(reduce([0, 0, 1], ctx)).coeffs == (0, 0, 0, 0, 0, 1)


class TestMultMatrix:
    def test_s5(self):
        assert mult_matrix(parse_generator("1-x", context(5))).tolist() == S5

    def test_s7(self):
        assert mult_matrix(parse_generator("1-x-x^3", context(7))).tolist() == S7

    def test_one(self):
        assert mult_matrix(context(8).one).tolist() == np.eye(4, dtype=int).tolist()


class TestNorm:
    def test_examples(self):
        assert norm(parse_generator("1-x", context(5))) == 5
        assert norm(context(5).one) == 1
        assert norm(parse_generator("2", context(15))) == 256

    def test_m7_generator_has_norm_8(self):
        # the printed S_7 has determinant 8
        assert norm(parse_generator("1-x-x^3", context(7))) == 8


@settings(max_examples=150, deadline=None)
@given(element_pairs())
def test_mult_matrix_is_a_homomorphism(pair):
    a, b = pair
    assert (mult_matrix(a * b) == mult_matrix(a).dot(mult_matrix(b))).all()
    assert norm(a * b) == norm(a) * norm(b)


@pytest.mark.parametrize("n", CLASS_NUMBER_ONE)
def test_homomorphism_every_modulus(n):
    ctx = context(n)
    a = reduce([1, -2, 0, 1, 1], ctx)
    b = reduce([0, 1, 1, 0, 0, -1, 2], ctx)
    assert (mult_matrix(a * b) == mult_matrix(a).dot(mult_matrix(b))).all()
    assert norm(a * b) == norm(a) * norm(b)
    assert conjugate(conjugate(a)) == a


@settings(max_examples=150, deadline=None)
@given(elements())
def test_conjugation_involution(a):
    assert conjugate(conjugate(a)) == a


@settings(max_examples=150, deadline=None)
@given(elements())
def test_norm_zero_iff_zero_and_matches_embeddings(a):
    nrm = norm(a)
    assert (nrm == 0) == (not a)
    assert nrm >= 0
    assert nrm == round(float_norm(a))


class TestParser:
    @pytest.mark.parametrize(
        "text, coeffs",
        [
            ("1-x+x^3", [1, -1, 0, 1]),
            ("2", [2]),
            ("(1-x)^3", [1, -3, 3, -1]),
            ("1,-1,0,1", [1, -1, 0, 1]),
            ("1-2x", [1, -2]),
            ("1 - 2*x", [1, -2]),
            ("(1-x)(1+x)", [1, 0, -1]),
            ("-x^2", [0, 0, -1]),
        ],
    )
    def test_parse(self, text, coeffs):
        assert parse_polynomial(text) == coeffs

    @pytest.mark.parametrize("bad", ["", "1-", "x^y", "1+&", "(1-x"])
    def test_errors(self, bad):
        with pytest.raises(ValueError):
            parse_polynomial(bad)

    def test_roundtrip(self):
        for text in ["1-x+x^3", "-1-x", "2+x^3+x^6", "0", "1-2x+3x^2"]:
            assert format_polynomial(parse_polynomial(text)) == text
