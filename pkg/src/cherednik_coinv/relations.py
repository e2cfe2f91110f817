"""
Operator identities of the Cherednik algebra, checked on monomials.

Each check returns a list of human-readable counterexamples; an empty list
means the identity held on every monomial tried.  The coordinate relations
build their right-hand sides from explicit group elements, independently of
the reflection table used by the Dunkl operators.
"""

from __future__ import annotations

from .cherednik import (AlgebraContext, casimir_h, dunkl, mul_x, z_op)
from .exactfield import zeta_power
from .polyring import Polynomial, compositions, group_action
from .reflgroup import ColoredPermutation, group_generators

__all__ = [
    "check_casimir",
    "check_commutativity",
    "check_coordinate_relations",
    "check_covariance",
    "check_fundamental_relation",
    "check_z_commute",
    "monomials",
    "run_all",
]


def monomials(ctx: AlgebraContext, max_degree: int):
    for d in range(max_degree + 1):
        for mu in compositions(d, ctx.n):
            yield mu, ctx.monomial(mu)


def check_commutativity(ctx: AlgebraContext, max_degree: int = 5) -> list[str]:
    bad = []
    for mu, f in monomials(ctx, max_degree):
        for i in range(1, ctx.n + 1):
            for j in range(i + 1, ctx.n + 1):
                if dunkl(ctx, i, dunkl(ctx, j, f)) != dunkl(ctx, j, dunkl(ctx, i, f)):
                    bad.append(f"[y{i}, y{j}] x^{mu} != 0")
    return bad


def _conj_transposition(i: int, j: int, l: int, n: int, r: int) -> ColoredPermutation:
    zi = ColoredPermutation.diagonal(i, l, n, r)
    return zi * ColoredPermutation.transposition(i, j, n, r) * zi.inverse()


def cf_rhs(ctx: AlgebraContext, i: int, j: int, f: Polynomial) -> Polynomial:
    """Right-hand side of the coordinate commutation relation for y_i x_j, applied to f."""
    n, r, prm = ctx.n, ctx.r, ctx.params
    out = mul_x(ctx, j, dunkl(ctx, i, f))
    if i != j:
        for l in range(r):
            s = _conj_transposition(i, j, l, n, r)
            out = out.add_scaled(group_action(s, f), zeta_power(r, -l) * prm.c0)
        return out
    out = out.add_scaled(f, prm.kappa)
    for l in range(1, r):
        cl = prm.c_value(l)
        if cl:
            s = ColoredPermutation.diagonal(i, l, n, r)
            out = out.add_scaled(group_action(s, f), -(1 - zeta_power(r, -l)) * cl)
    for k in range(1, n + 1):
        if k != i:
            for l in range(r):
                out = out.add_scaled(group_action(_conj_transposition(i, k, l, n, r), f), -prm.c0)
    return out


def check_coordinate_relations(ctx: AlgebraContext, max_degree: int = 4) -> list[str]:
    """y_i x_j = x_j y_i + (group terms) as operators, for all i, j."""
    bad = []
    for mu, f in monomials(ctx, max_degree):
        for i in range(1, ctx.n + 1):
            for j in range(1, ctx.n + 1):
                if dunkl(ctx, i, mul_x(ctx, j, f)) != cf_rhs(ctx, i, j, f):
                    bad.append(f"relation y{i} x{j} fails on x^{mu}")
    return bad


def check_fundamental_relation(ctx: AlgebraContext, max_degree: int = 3) -> list[str]:
    """[y, x] = kappa <x, y> - sum_s c_s <alpha_s, y> <x, alpha_s^vee> t_s with the root data."""
    bad = []
    n = ctx.n
    for mu, f in monomials(ctx, max_degree):
        for i in range(1, n + 1):
            unit_i = tuple(1 if a == i else 0 for a in range(1, n + 1))
            for j in range(1, n + 1):
                lhs = dunkl(ctx, i, mul_x(ctx, j, f)) - mul_x(ctx, j, dunkl(ctx, i, f))
                rhs = f.scale(ctx.params.kappa) if i == j else Polynomial.zero(n, ctx.r)
                for s in ctx.reflections:
                    coeff = (s.root.coefficient(unit_i) * s.coroot[j - 1]
                             * ctx.params.c_value(s.param))
                    if coeff:
                        rhs = rhs.add_scaled(group_action(s.element, f), -coeff)
                if lhs != rhs:
                    bad.append(f"[y{i}, x{j}] x^{mu} disagrees with the root data")
    return bad


def check_covariance(ctx: AlgebraContext, max_degree: int = 3) -> list[str]:
    """t_w y_i = zeta^{k_i} y_{w(i)} t_w on the generators w of G(r,p,n)."""
    bad = []
    for mu, f in monomials(ctx, max_degree):
        for w in group_generators(ctx.r, ctx.p, ctx.n):
            for i in range(1, ctx.n + 1):
                lhs = group_action(w, dunkl(ctx, i, f))
                rhs = dunkl(ctx, w.w[i - 1], group_action(w, f)).scale(zeta_power(ctx.r, w.k[i - 1]))
                if lhs != rhs:
                    bad.append(f"t_w y{i} != (w y{i}) t_w on x^{mu}, w={w}")
    return bad


def check_z_commute(ctx: AlgebraContext, max_degree: int = 4) -> list[str]:
    bad = []
    for mu, f in monomials(ctx, max_degree):
        for i in range(1, ctx.n + 1):
            for j in range(i + 1, ctx.n + 1):
                if z_op(ctx, i, z_op(ctx, j, f)) != z_op(ctx, j, z_op(ctx, i, f)):
                    bad.append(f"[z{i}, z{j}] x^{mu} != 0")
    return bad


def check_casimir(ctx: AlgebraContext, max_degree: int = 4) -> list[str]:
    """[h, x_i] = kappa x_i, [h, y_i] = -kappa y_i, h t_w = t_w h; h kills x^mu at kappa = 0."""
    bad = []
    kappa = ctx.params.kappa
    gens = group_generators(ctx.r, ctx.p, ctx.n)
    for mu, f in monomials(ctx, max_degree):
        hf = casimir_h(ctx, f)
        if not kappa and hf:
            bad.append(f"h x^{mu} != 0 at kappa = 0")
        for i in range(1, ctx.n + 1):
            xf = mul_x(ctx, i, f)
            if casimir_h(ctx, xf) - mul_x(ctx, i, hf) != xf.scale(kappa):
                bad.append(f"[h, x{i}] x^{mu} != kappa x{i} x^{mu}")
            yf = dunkl(ctx, i, f)
            if casimir_h(ctx, yf) - dunkl(ctx, i, hf) != yf.scale(-kappa):
                bad.append(f"[h, y{i}] x^{mu} != -kappa y{i} x^{mu}")
        for w in gens:
            if casimir_h(ctx, group_action(w, f)) != group_action(w, hf):
                bad.append(f"h t_w != t_w h on x^{mu}, w={w}")
    return bad


def run_all(ctx: AlgebraContext, max_degree: int = 4) -> dict[str, list[str]]:
    return {
        "commutativity": check_commutativity(ctx, max_degree + 1),
        "coordinate_relations": check_coordinate_relations(ctx, max_degree),
        "fundamental_relation": check_fundamental_relation(ctx, min(max_degree, 3)),
        "covariance": check_covariance(ctx, min(max_degree, 3)),
        "z_commute": check_z_commute(ctx, max_degree),
        "casimir": check_casimir(ctx, max_degree),
    }
