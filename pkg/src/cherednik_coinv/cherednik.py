"""
The rational Cherednik algebra of G(r,p,n) acting on C[x_1..x_n].

Every operator is linear, so the Dunkl operators are evaluated monomial by
monomial and cached on the context.  For p > 1 the G(r,1,n) formulas are used
with c_m = 0 whenever p does not divide m.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import NotEigenvector, ZeroPolynomial
from .exactfield import CyclotomicNumber, ParameterSet, root_of_unity_exponent
from .polyring import Exps, Polynomial, exact_divide_linear, group_action
from .reflgroup import ColoredPermutation, Reflection, enumerate_reflections

__all__ = [
    "AlgebraContext",
    "TWeight",
    "casimir_h",
    "dunkl",
    "mul_x",
    "phi_op",
    "pi_op",
    "t_op",
    "tweight_of",
    "z_op",
]


@dataclass(eq=False)
class AlgebraContext:
    """Parameters, n, and the reflection list; operator caches live here too."""

    params: ParameterSet
    n: int
    reflections: list[Reflection] = field(init=False)

    def __post_init__(self):
        self.reflections = enumerate_reflections(self.r, self.p, self.n)
        # per coordinate: (reflection index, <alpha_s, y_i>, c_s) for nonzero terms
        self._dunkl_terms = []
        for i in range(1, self.n + 1):
            unit = tuple(1 if j == i else 0 for j in range(1, self.n + 1))
            terms = []
            for idx, s in enumerate(self.reflections):
                a = s.root.coefficient(unit)
                cs = self.params.c_value(s.param)
                if a and cs:
                    terms.append((idx, a * cs))
            self._dunkl_terms.append(terms)
        self._dd_cache: dict[tuple[int, Exps], Polynomial] = {}
        self._dunkl_cache: dict[tuple[int, Exps], Polynomial] = {}
        self.jack_cache: dict = {}

    @classmethod
    def create(cls, r: int, p: int, n: int, **kwargs) -> AlgebraContext:
        return cls(ParameterSet.default(r, p, **kwargs), n)

    @property
    def r(self) -> int:
        return self.params.r

    @property
    def p(self) -> int:
        return self.params.p

    def with_kappa(self, kappa) -> AlgebraContext:
        return AlgebraContext(self.params.with_kappa(kappa), self.n)

    def one(self) -> Polynomial:
        return Polynomial.constant(self.n, self.r, 1)

    def x(self, i: int) -> Polynomial:
        return Polynomial.variable(self.n, self.r, i)

    def monomial(self, exps) -> Polynomial:
        return Polynomial.monomial(self.r, exps)

    def scalar(self, q) -> CyclotomicNumber:
        return CyclotomicNumber.rational(self.r, q)

    def divided_difference(self, idx: int, exps: Exps) -> Polynomial:
        """(x^mu - s.x^mu) / alpha_s for reflection number idx."""
        key = (idx, exps)
        hit = self._dd_cache.get(key)
        if hit is None:
            s = self.reflections[idx]
            f = self.monomial(exps)
            hit = exact_divide_linear(f - group_action(s.element, f), s.root)
            self._dd_cache[key] = hit
        return hit

    def dunkl_monomial(self, i: int, exps: Exps) -> Polynomial:
        key = (i, exps)
        hit = self._dunkl_cache.get(key)
        if hit is not None:
            return hit
        out = Polynomial.zero(self.n, self.r)
        kappa = self.params.kappa
        if kappa and exps[i - 1]:
            lowered = tuple(a - 1 if j == i - 1 else a for j, a in enumerate(exps))
            out = self.monomial(lowered).scale(kappa * exps[i - 1])
        for idx, coeff in self._dunkl_terms[i - 1]:
            out = out.add_scaled(self.divided_difference(idx, exps), -coeff)
        self._dunkl_cache[key] = out
        return out


def _linear(f: Polynomial, on_monomial) -> Polynomial:
    out = Polynomial.zero(f.n, f.r)
    for e, c in f.terms.items():
        out = out.add_scaled(on_monomial(e), c)
    return out


def dunkl(ctx: AlgebraContext, i: int, f: Polynomial) -> Polynomial:
    """y_i.f = kappa d_i f - sum_s c_s <alpha_s, y_i> (f - s.f)/alpha_s."""
    if not 1 <= i <= ctx.n:
        raise IndexError(f"Dunkl index {i} out of range 1..{ctx.n}")
    return _linear(f, lambda e: ctx.dunkl_monomial(i, e))


def mul_x(ctx: AlgebraContext, i: int, f: Polynomial) -> Polynomial:
    return f.mul_monomial(tuple(1 if j == i else 0 for j in range(1, ctx.n + 1)))


def t_op(ctx: AlgebraContext, v: ColoredPermutation, f: Polynomial) -> Polynomial:
    return group_action(v, f)


def phi_op(ctx: AlgebraContext, i: int, f: Polynomial) -> Polynomial:
    """sum over j < i and l of t_{zeta_i^l s_ij zeta_i^-l} applied to f."""
    out = Polynomial.zero(ctx.n, ctx.r)
    for s in ctx.reflections:
        if s.param == 0 and s.element.w[i - 1] < i:
            out = out + group_action(s.element, f)
    return out


def z_op(ctx: AlgebraContext, i: int, f: Polynomial) -> Polynomial:
    """z_i = y_i x_i + c_0 phi_i."""
    out = dunkl(ctx, i, mul_x(ctx, i, f))
    if ctx.params.c0 and i > 1:
        out = out.add_scaled(phi_op(ctx, i, f), ctx.params.c0)
    return out


def pi_op(ctx: AlgebraContext, i: int, f: Polynomial) -> Polynomial:
    """pi_i = sum_l (t_{zeta_i zeta_{i+1}^-1})^l."""
    g = (ColoredPermutation.diagonal(i, 1, ctx.n, ctx.r)
         * ColoredPermutation.diagonal(i + 1, -1, ctx.n, ctx.r))
    out = Polynomial.zero(ctx.n, ctx.r)
    cur = f
    for _ in range(ctx.r):
        out = out + cur
        cur = group_action(g, cur)
    return out


def casimir_h(ctx: AlgebraContext, f: Polynomial) -> Polynomial:
    """h = sum_i x_i y_i + sum_s c_s (1 - t_s)."""
    out = Polynomial.zero(ctx.n, ctx.r)
    for i in range(1, ctx.n + 1):
        out = out + mul_x(ctx, i, dunkl(ctx, i, f))
    for s in ctx.reflections:
        cs = ctx.params.c_value(s.param)
        if cs:
            out = out.add_scaled(f - group_action(s.element, f), cs)
    return out


@dataclass(frozen=True)
class TWeight:
    """Eigenvalues alpha_i of z_i and exponents beta_i (mod r) of the diagonal part.

    beta is stored in canonical form: shifted by a multiple of r/p so that
    0 <= beta_n < r/p.
    """

    alpha: tuple[CyclotomicNumber, ...]
    beta: tuple[int, ...]

    def to_json(self) -> dict:
        return {"alpha": [a.to_json() for a in self.alpha], "beta": list(self.beta)}


def canonical_beta(beta, r: int, p: int) -> tuple[int, ...]:
    q = r // p
    shift = (beta[-1] % r) - (beta[-1] % r) % q
    return tuple((b - shift) % r for b in beta)


def eigenvalue(f: Polynomial, g: Polynomial) -> CyclotomicNumber:
    """lambda with g == lambda f; NotEigenvector otherwise."""
    if not f:
        raise ZeroPolynomial("the zero polynomial has no eigenvalue")
    e, c = next(iter(f.terms.items()))
    lam = g.coefficient(e) / c
    if g != f.scale(lam):
        raise NotEigenvector(f"not an eigenvector: {f}")
    return lam


def tweight_of(ctx: AlgebraContext, f: Polynomial) -> TWeight:
    """The t-weight of f, computed by applying the operators to f."""
    n, r, p = ctx.n, ctx.r, ctx.p
    alpha = tuple(eigenvalue(f, z_op(ctx, i, f)) for i in range(1, n + 1))
    pow_p = []
    for i in range(1, n + 1):
        lam = eigenvalue(f, group_action(ColoredPermutation.diagonal(i, p, n, r), f))
        m = root_of_unity_exponent(lam)
        if m is None or m % p:
            raise NotEigenvector(f"t_(zeta_{i}^{p}) eigenvalue {lam} is not a power of zeta^{p}")
        pow_p.append(m)
    diffs = []
    for i in range(1, n):
        g = (ColoredPermutation.diagonal(i, -1, n, r)
             * ColoredPermutation.diagonal(i + 1, 1, n, r))
        m = root_of_unity_exponent(eigenvalue(f, group_action(g, f)))
        if m is None:
            raise NotEigenvector("ratio eigenvalue is not a root of unity")
        diffs.append(m)
    beta = [0] * n
    beta[-1] = pow_p[-1] // p
    for i in range(n - 2, -1, -1):
        beta[i] = (beta[i + 1] - diffs[i]) % r
    for i in range(n):
        if (p * beta[i] - pow_p[i]) % r:
            raise NotEigenvector("inconsistent diagonal eigenvalues")
    return TWeight(alpha, canonical_beta(beta, r, p))
