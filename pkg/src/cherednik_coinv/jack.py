"""
Intertwining operators and the non-symmetric Jack polynomials f_mu.

f_mu is built from f_0 = 1 by the raising operator Phi = x_n t_{s_{n-1}...s_1}
and the operators sigma_i = t_{s_i} + c_0/(z_i - z_{i+1}) pi_i.  sigma_i is
evaluated on an eigenvector using its recorded weight, so z_i never has to be
inverted as an operator.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .cherednik import (AlgebraContext, TWeight, canonical_beta, dunkl, tweight_of)
from .errors import GenericityFailure
from .exactfield import CyclotomicNumber, ParameterSet, d_param
from .polyring import Polynomial, group_action, sort_data
from .reflgroup import ColoredPermutation

__all__ = [
    "JackRecord",
    "Step",
    "apply_Phi",
    "apply_Psi",
    "apply_sigma",
    "expected_weight",
    "jack_f",
    "phi_index",
    "psi_index",
    "psi_scalar",
    "sigma_scalar",
]

MultiIndex = tuple[int, ...]


@dataclass(frozen=True)
class JackRecord:
    mu: MultiIndex
    f: Polynomial
    weight: TWeight
    params: ParameterSet

    def to_json(self) -> dict:
        return {
            "mu": list(self.mu),
            "poly": self.f.to_json(),
            "weight": self.weight.to_json(),
            "params": self.params.to_json(),
        }


@dataclass(frozen=True)
class Step:
    """Result of an intertwiner: `poly` equals `scalar` times `record.f`.

    `record` is None when the result vanishes.
    """

    scalar: CyclotomicNumber
    record: JackRecord | None
    poly: Polynomial


def phi_index(mu) -> MultiIndex:
    mu = tuple(mu)
    return mu[1:] + (mu[0] + 1,)


def psi_index(mu) -> MultiIndex | None:
    """(mu_n - 1, mu_1, ..., mu_{n-1}), or None when mu_n = 0."""
    mu = tuple(mu)
    if mu[-1] == 0:
        return None
    return (mu[-1] - 1,) + mu[:-1]


def swap(mu: MultiIndex, i: int) -> MultiIndex:
    m = list(mu)
    m[i - 1], m[i] = m[i], m[i - 1]
    return tuple(m)


def expected_weight(mu, params: ParameterSet) -> TWeight:
    """Predicted weight of f_mu.

    alpha_i = (mu_i + 1) kappa - (d_0 - d_{-mu_i-1}) - r (v_mu(i) - 1) c_0,
    beta_i = -mu_i mod r.
    """
    mu = tuple(mu)
    r = params.r
    v = sort_data(mu).v_mu
    d0 = d_param(params, 0)
    alpha = tuple(
        d_param(params, -m - 1) - d0 + params.kappa * (m + 1) - params.c0 * (r * (v[i] - 1))
        for i, m in enumerate(mu)
    )
    return TWeight(alpha, canonical_beta([-m % r for m in mu], r, params.p))


def sigma_scalar(mu, i: int, params: ParameterSet) -> Fraction | None:
    """The factor c in sigma_i f_mu = c f_{s_i mu}; None when mu_i == mu_{i+1}."""
    mu = tuple(mu)
    a, b = mu[i - 1], mu[i]
    r = params.r
    if a < b or (a - b) % r:
        return Fraction(1)
    if a == b:
        return None
    v = sort_data(mu).v_mu
    delta = params.kappa * (a - b) - params.c0 * r * (v[i - 1] - v[i])
    if delta == 0:
        raise GenericityFailure(f"delta = kappa(mu_i - mu_i+1) - c0 r (v(i) - v(i+1)) = 0 "
                                f"at mu={mu}, i={i}")
    rc = r * params.c0
    return (delta - rc) * (delta + rc) / delta ** 2


def psi_scalar(mu, params: ParameterSet) -> CyclotomicNumber:
    """The factor in Psi f_mu = c f_{psi mu} (zero when mu_n = 0)."""
    mu = tuple(mu)
    r = params.r
    if mu[-1] == 0:
        return CyclotomicNumber.rational(r, 0)
    v = sort_data(mu).v_mu
    return (d_param(params, -mu[-1]) - d_param(params, 0) + params.kappa * mu[-1]
            - params.c0 * (r * (v[-1] - 1)))


def _cycle(ctx: AlgebraContext, down: bool) -> ColoredPermutation:
    # down: s_{n-1} ... s_1 ; otherwise s_1 ... s_{n-1}
    out = ColoredPermutation.identity(ctx.n, ctx.r)
    idx = range(1, ctx.n) if down else range(ctx.n - 1, 0, -1)
    for i in idx:
        out = ColoredPermutation.simple(i, ctx.n, ctx.r) * out
    return out


def Phi(ctx: AlgebraContext, f: Polynomial) -> Polynomial:
    """x_n t_{s_{n-1} ... s_1}."""
    unit = (0,) * (ctx.n - 1) + (1,)
    return group_action(_cycle(ctx, down=True), f).mul_monomial(unit)


def Psi(ctx: AlgebraContext, f: Polynomial) -> Polynomial:
    """y_1 t_{s_1 ... s_{n-1}}."""
    return dunkl(ctx, 1, group_action(_cycle(ctx, down=False), f))


def _normalized(ctx, target, g, scalar) -> JackRecord:
    return JackRecord(target, g.scale(scalar.inverse()), expected_weight(target, ctx.params),
                      ctx.params)


def apply_Phi(ctx: AlgebraContext, rec: JackRecord) -> JackRecord:
    target = phi_index(rec.mu)
    g = Phi(ctx, rec.f)
    return JackRecord(target, g, expected_weight(target, ctx.params), ctx.params)


def apply_Psi(ctx: AlgebraContext, rec: JackRecord, strict: bool = False) -> Step:
    """Apply Psi and split the result into scalar and normalized record.

    With strict=True a vanishing result for mu_n > 0 raises GenericityFailure.
    """
    g = Psi(ctx, rec.f)
    target = psi_index(rec.mu)
    zero = CyclotomicNumber.rational(ctx.r, 0)
    if target is None:
        return Step(zero, None, g)
    scalar = g.coefficient(target)
    if not scalar:
        if strict:
            raise GenericityFailure(
                f"Psi scalar kappa mu_n - (d_0 - d_-mu_n) - c0 r (v(n) - 1) vanishes at mu={rec.mu}")
        return Step(zero, None, g)
    return Step(scalar, _normalized(ctx, target, g, scalar), g)


def apply_sigma(ctx: AlgebraContext, i: int, rec: JackRecord) -> Step:
    """sigma_i applied to an eigenvector, using its recorded weight."""
    n, r = ctx.n, ctx.r
    if not 1 <= i < n:
        raise IndexError(f"sigma index {i} out of range 1..{n - 1}")
    f = rec.f
    g = group_action(ColoredPermutation.simple(i, n, r), f)
    a = rec.weight.alpha
    # pi_i f = r f exactly when beta_i == beta_{i+1} mod r, otherwise 0
    if (rec.weight.beta[i - 1] - rec.weight.beta[i]) % r == 0:
        gap = a[i - 1] - a[i]
        if not gap:
            raise GenericityFailure(f"alpha_{i} - alpha_{i + 1} = 0 with pi_{i} f != 0 "
                                    f"at mu={rec.mu}")
        g = g.add_scaled(f, ctx.params.c0 * r / gap)
    target = swap(rec.mu, i)
    scalar = g.coefficient(target)
    if not scalar:
        return Step(CyclotomicNumber.rational(r, 0), None, g)
    return Step(scalar, _normalized(ctx, target, g, scalar), g)


def jack_f(ctx: AlgebraContext, mu, verify: bool = False) -> JackRecord:
    """f_mu by the deterministic intertwiner recursion (memoized on ctx).

    f_0 = 1; for weakly increasing mu with mu_n > 0, f_mu = Phi f_{psi mu};
    otherwise f_mu = sigma_i f_{s_i mu} for the largest i with mu_i > mu_{i+1}.
    With verify=True the weight is recomputed from the operators.
    """
    mu = tuple(mu)
    if len(mu) != ctx.n or any(m < 0 for m in mu):
        raise ValueError(f"bad multi-index {mu} for n={ctx.n}")
    hit = ctx.jack_cache.get(mu)
    if hit is not None:
        return hit
    descents = [i for i in range(1, ctx.n) if mu[i - 1] > mu[i]]
    if descents:
        i = descents[-1]
        step = apply_sigma(ctx, i, jack_f(ctx, swap(mu, i)))
        if step.record is None or step.scalar != 1:
            raise GenericityFailure(f"sigma_{i} did not produce f_{mu} (scalar {step.scalar})")
        rec = step.record
    elif mu[-1] > 0:
        rec = apply_Phi(ctx, jack_f(ctx, psi_index(mu)))
    else:
        rec = JackRecord(mu, ctx.one(), expected_weight(mu, ctx.params), ctx.params)
    if verify and tweight_of(ctx, rec.f) != rec.weight:
        raise AssertionError(f"weight mismatch for f_{mu}")
    return ctx.jack_cache.setdefault(mu, rec)
