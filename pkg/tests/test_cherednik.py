from fractions import Fraction
from itertools import product

import pytest
import sympy

from cherednik_coinv import relations
from cherednik_coinv.cherednik import (AlgebraContext, casimir_h, dunkl, mul_x, pi_op,
                                       t_op, tweight_of, z_op)
from cherednik_coinv.errors import NotEigenvector, ZeroPolynomial
from cherednik_coinv.exactfield import d_param, zeta_power
from cherednik_coinv.polyring import Polynomial, compositions
from cherednik_coinv.reflgroup import ColoredPermutation

GROUPS = [(1, 1, 3), (2, 1, 2), (3, 1, 2), (2, 2, 2), (4, 2, 2)]


def test_dunkl_constants_and_degree():
    ctx = AlgebraContext.create(3, 1, 2, kappa=1)
    for i in (1, 2):
        assert not dunkl(ctx, i, ctx.one())
        for mu in compositions(3, 2):
            out = dunkl(ctx, i, ctx.monomial(mu))
            assert not out or out.degree() == 2
    with pytest.raises(IndexError):
        dunkl(ctx, 3, ctx.one())


@pytest.mark.parametrize("r, p, n", GROUPS)
@pytest.mark.parametrize("kappa", [0, 1])
def test_dunkl_on_linear_forms(r, p, n, kappa):
    ctx = AlgebraContext.create(r, p, n, kappa=kappa)
    prm = ctx.params
    c0 = prm.c0
    for i, j in product(range(1, n + 1), repeat=2):
        got = dunkl(ctx, i, ctx.x(j))
        # right side of the coordinate relations acting on 1
        assert got == relations.cf_rhs(ctx, i, j, ctx.one())
        if i != j:
            # c0 * sum_l zeta^{-l}
            total = sum((zeta_power(r, -l) for l in range(r)), ctx.scalar(0))
            assert got == Polynomial.constant(n, r, total * c0)
        else:
            expect = kappa - (d_param(prm, 0) - d_param(prm, -1)) - c0 * r * (n - 1)
            assert got == Polynomial.constant(n, r, expect)


def test_z_examples():
    for r, p, n in GROUPS + [(3, 3, 3), (2, 1, 1), (3, 1, 1)]:
        ctx = AlgebraContext.create(r, p, n, kappa=0)
        prm = ctx.params
        base = d_param(prm, -1) - d_param(prm, 0)
        for i in range(1, n + 1):
            # v_0 = w_0 so v_0(i) = n + 1 - i
            expect = base - prm.c0 * r * (n - i)
            assert z_op(ctx, i, ctx.one()) == Polynomial.constant(n, r, expect)
    ctx = AlgebraContext.create(3, 1, 1, kappa=1)
    prm = ctx.params
    expect = 1 - (d_param(prm, 0) - d_param(prm, -1))
    assert z_op(ctx, 1, ctx.one()) == Polynomial.constant(1, 3, expect)


def test_casimir_examples():
    for r, p, n in GROUPS:
        ctx = AlgebraContext.create(r, p, n, kappa=1)
        assert not casimir_h(ctx, ctx.one())
        x1 = ctx.x(1)
        assert casimir_h(ctx, x1) - mul_x(ctx, 1, casimir_h(ctx, ctx.one())) == x1


def test_casimir_is_degree_at_kappa_one():
    ctx = AlgebraContext.create(3, 1, 2, kappa=1)
    for d in range(4):
        for mu in compositions(d, 2):
            f = ctx.monomial(mu)
            assert casimir_h(ctx, f) == f.scale(ctx.scalar(d))


def test_pi_op():
    ctx = AlgebraContext.create(3, 1, 2)
    assert pi_op(ctx, 1, ctx.one()) == Polynomial.constant(2, 3, 3)
    assert not pi_op(ctx, 1, ctx.x(2))
    assert pi_op(ctx, 1, ctx.x(1) * ctx.x(2)) == (ctx.x(1) * ctx.x(2)).scale(ctx.scalar(3))


def test_tweight_examples():
    ctx = AlgebraContext.create(2, 1, 2, kappa=0)
    w = tweight_of(ctx, ctx.one())
    assert w.beta == (0, 0)
    assert w.alpha == tuple(z_op(ctx, i, ctx.one()).coefficient((0, 0)) for i in (1, 2))
    with pytest.raises(NotEigenvector):
        tweight_of(ctx, ctx.x(1) + ctx.x(2))
    with pytest.raises(ZeroPolynomial):
        tweight_of(ctx, Polynomial.zero(2, 2))
    # x2 is an eigenvector with beta = (0, -1)
    assert tweight_of(ctx, ctx.x(2)).beta == (0, 1)
    assert tweight_of(ctx, ctx.x(2)).alpha[1] == -2 * ctx.params.c0


def test_tweight_canonical_beta_for_p_greater_than_one():
    ctx = AlgebraContext.create(4, 2, 2, kappa=0)
    w = tweight_of(ctx, ctx.x(2) ** 3)
    # beta = (0, -3) = (0, 1) mod 4, shifted by r/p = 2 is the same weight
    assert w.beta == (0, 1)
    w = tweight_of(ctx, ctx.x(2) ** 2)
    assert w.beta == (2, 0)


# ----------------------------------------------------------------------------
# Independent oracle: the Dunkl operator written directly with sympy
# substitutions, using the exact value of zeta for r in {1, 2, 4}.

ZETA = {1: sympy.Integer(1), 2: sympy.Integer(-1), 4: sympy.I}


def sympy_dunkl(r, n, prm, i, f, xs):
    z = ZETA[r]
    kappa = sympy.Rational(prm.kappa.numerator, prm.kappa.denominator)
    out = kappa * sympy.diff(f, xs[i])
    c0 = sympy.Rational(prm.c0.numerator, prm.c0.denominator)
    for j in range(n):
        if j == i:
            continue
        for l in range(r):
            # the order-two reflection fixing x_i = zeta^l x_j
            sf = f.subs({xs[i]: z ** l * xs[j], xs[j]: z ** (-l) * xs[i]}, simultaneous=True)
            out -= c0 * sympy.cancel((f - sf) / (xs[i] - z ** l * xs[j]))
    for m in range(1, r):
        cm = prm.c_value(m)
        if cm:
            cm = sympy.Rational(cm.numerator, cm.denominator)
            sf = f.subs(xs[i], z ** (-m) * xs[i])
            out -= cm * sympy.cancel((f - sf) / xs[i])
    return sympy.expand(out)


def to_sympy(poly, xs):
    z = ZETA[poly.r]
    out = sympy.Integer(0)
    for e, c in poly.terms.items():
        coeff = sum(sympy.Rational(a.numerator, a.denominator) * z ** m
                    for m, a in enumerate(c.coeffs))
        out += coeff * sympy.Mul(*[x ** k for x, k in zip(xs, e)])
    return sympy.expand(out)


@pytest.mark.parametrize("r, p, n", [(1, 1, 2), (1, 1, 3), (2, 1, 2), (2, 2, 2), (2, 1, 3),
                                     (4, 1, 2), (4, 2, 2)])
@pytest.mark.parametrize("kappa", [0, Fraction(3, 2)])
def test_dunkl_against_sympy(r, p, n, kappa):
    ctx = AlgebraContext.create(r, p, n, kappa=kappa)
    xs = sympy.symbols(f"x1:{n + 1}")
    for d in range(4 if n == 2 else 3):
        for mu in compositions(d, n):
            f = ctx.monomial(mu)
            fs = to_sympy(f, xs)
            for i in range(1, n + 1):
                expect = sympy_dunkl(r, n, ctx.params, i - 1, fs, xs)
                assert sympy.expand(to_sympy(dunkl(ctx, i, f), xs) - expect) == 0


@pytest.mark.parametrize("r, p, n", GROUPS)
def test_relation_suite_small(r, p, n):
    for kappa in (0, 1):
        ctx = AlgebraContext.create(r, p, n, kappa=kappa)
        result = relations.run_all(ctx, max_degree=2)
        assert all(not v for v in result.values()), result


def test_covariance_and_group_action():
    ctx = AlgebraContext.create(3, 1, 2, kappa=1)
    v = ColoredPermutation.diagonal(1, 1, 2, 3) * ColoredPermutation.simple(1, 2, 3)
    f = ctx.x(1) ** 2 * ctx.x(2)
    assert t_op(ctx, v.inverse(), t_op(ctx, v, f)) == f
    assert not relations.check_covariance(ctx, 3)


def test_checks_detect_a_broken_operator():
    # negative control: flip the sign of one reflection term
    ctx = AlgebraContext.create(2, 1, 2, kappa=0)
    idx, coeff = ctx._dunkl_terms[0][0]
    ctx._dunkl_terms[0][0] = (idx, -coeff)
    assert relations.check_commutativity(ctx, 3) or relations.check_casimir(ctx, 3)
    assert relations.check_coordinate_relations(ctx, 2)
