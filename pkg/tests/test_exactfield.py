import cmath
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cherednik_coinv.errors import DivisionByZero, IncompatibleField, InvalidGroup
from cherednik_coinv.exactfield import (CyclotomicNumber, ParameterSet, cyclo_arith,
                                        cyclotomic_polynomial, d_param, euler_phi,
                                        parse_rational, zeta, zeta_power)


def embed(c: CyclotomicNumber) -> complex:
    z = cmath.exp(2j * cmath.pi / c.r)
    return sum(float(a) * z ** m for m, a in enumerate(c.coeffs))


@pytest.mark.parametrize("r, expected", [(1, (-1, 1)), (2, (1, 1)), (6, (1, -1, 1)),
                                         (4, (1, 0, 1)), (3, (1, 1, 1))])
def test_cyclotomic_polynomial_examples(r, expected):
    assert cyclotomic_polynomial(r) == expected


@pytest.mark.parametrize("r", range(1, 13))
def test_cyclotomic_product_over_divisors_is_xr_minus_1(r):
    prod = [1]
    for d in range(1, r + 1):
        if r % d == 0:
            phi = cyclotomic_polynomial(d)
            out = [0] * (len(prod) + len(phi) - 1)
            for i, a in enumerate(prod):
                for j, b in enumerate(phi):
                    out[i + j] += a * b
            prod = out
    assert prod == [-1] + [0] * (r - 1) + [1]
    # numeric oracle: Phi_r vanishes at the primitive root
    z = cmath.exp(2j * cmath.pi / r)
    assert abs(sum(c * z ** m for m, c in enumerate(cyclotomic_polynomial(r)))) < 1e-9


def test_small_identities():
    assert zeta(4) * zeta(4) == -1
    assert 1 / zeta(3) == zeta(3) ** 2
    for r in range(1, 10):
        assert zeta(r) ** r == 1
        assert all(zeta(r) ** m != 1 for m in range(1, r))


@pytest.mark.parametrize("r", [1, 2, 3, 4, 5, 6, 8, 12])
def test_zeta_is_root_of_its_minimal_polynomial(r):
    total = CyclotomicNumber.rational(r, 0)
    for m, c in enumerate(cyclotomic_polynomial(r)):
        total = total + zeta_power(r, m) * c
    assert total == 0
    assert len(zeta(r).coeffs) == euler_phi(r)


def test_errors():
    with pytest.raises(DivisionByZero):
        zeta(3) / CyclotomicNumber(3, [0, 0])
    with pytest.raises(ZeroDivisionError):
        CyclotomicNumber.rational(1, 0).inverse()
    with pytest.raises(IncompatibleField):
        zeta(3) + zeta(4)
    with pytest.raises(IncompatibleField):
        cyclo_arith(zeta(3), zeta(5), "mul")


def test_cyclo_arith_dispatch():
    a, b = zeta(5) + 2, zeta(5) ** 3 - Fraction(1, 2)
    assert cyclo_arith(a, b, "add") == a + b
    assert cyclo_arith(a, b, "sub") == a - b
    assert cyclo_arith(a, b, "mul") == a * b
    assert cyclo_arith(a, b, "div") * b == a


def elements(r):
    coeff = st.fractions(min_value=-5, max_value=5, max_denominator=6)
    return st.lists(coeff, min_size=euler_phi(r), max_size=euler_phi(r)).map(
        lambda cs: CyclotomicNumber(r, cs))


@pytest.mark.parametrize("r", [1, 2, 3, 4, 5, 7, 12])
def test_field_axioms(r):
    @settings(max_examples=40, deadline=None)
    @given(elements(r), elements(r), elements(r))
    def check(a, b, c):
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a * b == b * a
        assert a - a == 0
        if a:
            assert a * (1 / a) == 1
        # the embedding into C is a ring map
        assert abs(embed(a * b) - embed(a) * embed(b)) < 1e-6

    check()


def test_json_round_trip():
    c = zeta(6) * Fraction(3, 7) - 2
    assert CyclotomicNumber.from_json(c.to_json()) == c
    assert c.to_json() == {"r": 6, "coeffs": ["-2/1", "3/7"]}


def test_parse_rational():
    assert parse_rational("3/6") == Fraction(1, 2)
    assert parse_rational("-4") == -4
    for bad in ("0.5", "1e3", "", "1/0"):
        with pytest.raises(ValueError):
            parse_rational(bad)


def test_d_param_examples():
    for r in (1, 2, 3, 6):
        prm = ParameterSet.default(r, r)
        assert all(d_param(prm, j) == 0 for j in range(-3, 7))
    prm = ParameterSet.default(6, 2)
    assert d_param(prm, 0) == sum(v for _, v in prm.c)
    # r = 2, p = 1: zeta = -1 so d_1 = -c_1
    prm = ParameterSet.default(2, 1)
    c1 = prm.cdict[1]
    assert d_param(prm, 1) == -c1
    assert d_param(prm, 0) == c1


@pytest.mark.parametrize("r, p", [(2, 1), (3, 1), (4, 1), (4, 2), (6, 2), (6, 3), (6, 1)])
def test_d_param_invariants(r, p):
    prm = ParameterSet.default(r, p)
    q = r // p
    for j in range(-2 * r, 2 * r):
        assert d_param(prm, j) == d_param(prm, j % r)
        assert d_param(prm, j) == d_param(prm, j + q)
        # d_{-j} is the complex conjugate of d_j (all c's are real)
        assert abs(embed(d_param(prm, -j)) - embed(d_param(prm, j)).conjugate()) < 1e-9
        direct = sum(complex(float(prm.cdict[l * p])) * cmath.exp(2j * cmath.pi * l * p * j / r)
                     for l in range(1, q))
        assert abs(embed(d_param(prm, j)) - direct) < 1e-9


def test_parameter_set_validation_and_json():
    with pytest.raises(InvalidGroup):
        ParameterSet.default(4, 3)
    with pytest.raises(ValueError):
        ParameterSet(4, 2, 0, Fraction(1, 3), ((1, Fraction(1)),))
    with pytest.raises(ValueError):
        ParameterSet.default(4, 2, c={1: 5})
    prm = ParameterSet.default(6, 2, kappa=Fraction(1, 2), c={4: Fraction(2, 9)})
    assert prm.cdict == {2: Fraction(1, 4), 4: Fraction(2, 9)}
    assert prm.c_value(3) == 0 and prm.c_value(0) == prm.c0
    assert ParameterSet.from_json(prm.to_json()) == prm
    assert prm.to_json()["c"] == {"2": "1/4", "4": "2/9"}
