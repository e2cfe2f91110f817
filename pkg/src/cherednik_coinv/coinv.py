"""
The coinvariant ring S/I of G(r,p,n): fundamental invariants, graded ideal
linear algebra, Hilbert series, the basis {f_lambda_v} of descent-monomial
Jack polynomials, and the check that S/I splits into one irreducible Hecke
submodule per colored descent class.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from itertools import combinations

from . import perm
from .cherednik import AlgebraContext, TWeight, casimir_h, dunkl, tweight_of
from .errors import InvalidGroup, NotEigenvector
from .exactfield import CyclotomicNumber
from .jack import Phi, Psi, JackRecord, apply_sigma, jack_f
from .polyring import Exps, Polynomial, compositions, group_action, order_key
from .reflgroup import (ColoredPermutation, DescentData, chains_witness, des, descent_data,
                        enumerate_Gr1np, group_generators)

__all__ = [
    "BasisElement",
    "DecompositionReport",
    "Echelon",
    "GradedIdealBasis",
    "descent_basis",
    "expand_in_jack_basis",
    "flag_major_genfun",
    "graded_ideal_basis",
    "hilbert_series",
    "ideal_stability_check",
    "invariant_degrees",
    "invariant_generators",
    "normal_form",
    "rank",
    "top_degree",
    "verify_decomposition",
]


def _check(r, p, n):
    if r < 1 or p < 1 or n < 1 or r % p:
        raise InvalidGroup(f"G({r},{p},{n}) is not defined (need p | r, n >= 1)")


def invariant_degrees(r: int, p: int, n: int) -> list[int]:
    _check(r, p, n)
    return [r * j for j in range(1, n)] + [n * r // p]


def invariant_generators(r: int, p: int, n: int) -> list[Polynomial]:
    """e_j(x_1^r, ..., x_n^r) for j < n, and (x_1 ... x_n)^(r/p).

    Each generator is checked against the generators of G(r,p,n).
    """
    _check(r, p, n)
    gens = []
    for j in range(1, n):
        terms = {}
        for subset in combinations(range(n), j):
            terms[tuple(r if a in subset else 0 for a in range(n))] = 1
        gens.append(Polynomial(n, r, terms))
    gens.append(Polynomial.monomial(r, (r // p,) * n))
    for g in gens:
        for s in group_generators(r, p, n):
            if group_action(s, g) != g:
                raise AssertionError(f"{g} is not fixed by {s}")
    return gens


def _poly_mul_coeffs(a: list[int], b: list[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def hilbert_series(r: int, p: int, n: int, up_to: int | None = None) -> list[int]:
    """Coefficients of prod_i (1 - t^{d_i}) / (1 - t)^n."""
    out = [1]
    for d in invariant_degrees(r, p, n):
        out = _poly_mul_coeffs(out, [1] * d)
    if up_to is not None:
        out = (out + [0] * (up_to + 1))[: up_to + 1]
    return out


def top_degree(r: int, p: int, n: int) -> int:
    return sum(d - 1 for d in invariant_degrees(r, p, n))


class Echelon:
    """Rows in reduced echelon form, keyed by pivot monomial (pivot coefficient 1)."""

    def __init__(self):
        self.rows: dict[Exps, dict[Exps, CyclotomicNumber]] = {}

    def __len__(self) -> int:
        return len(self.rows)

    def reduce(self, vec: dict) -> dict:
        vec = dict(vec)
        for piv, row in self.rows.items():
            c = vec.get(piv)
            if c:
                for e, v in row.items():
                    nv = vec.get(e)
                    nv = -(c * v) if nv is None else nv - c * v
                    if nv:
                        vec[e] = nv
                    else:
                        vec.pop(e, None)
        return vec

    def add(self, vec: dict) -> bool:
        """Insert vec; return False if it was already in the span."""
        vec = self.reduce(vec)
        if not vec:
            return False
        piv = max(vec)
        inv = vec[piv].inverse()
        vec = {e: c * inv for e, c in vec.items()}
        for other in self.rows.values():
            c = other.get(piv)
            if c:
                for e, v in vec.items():
                    nv = other.get(e)
                    nv = -(c * v) if nv is None else nv - c * v
                    if nv:
                        other[e] = nv
                    else:
                        other.pop(e, None)
        self.rows[piv] = vec
        return True


def rank(polys) -> int:
    ech = Echelon()
    return sum(1 for f in polys if ech.add(f.terms))


@dataclass
class GradedIdealBasis:
    """Echelon basis of I_d = sum_j g_j S_{d - deg g_j}."""

    degree: int
    n: int
    r: int
    echelon: Echelon

    @property
    def rank(self) -> int:
        return len(self.echelon)

    def rows(self) -> list[Polynomial]:
        return [Polynomial(self.n, self.r, row) for _, row in sorted(self.echelon.rows.items())]

    def reduce(self, f: Polynomial) -> Polynomial:
        return Polynomial(self.n, self.r, self.echelon.reduce(f.terms))


def graded_ideal_basis(ctx: AlgebraContext, d: int) -> GradedIdealBasis:
    cache = ctx.__dict__.setdefault("_ideal_cache", {})
    hit = cache.get(d)
    if hit is not None:
        return hit
    ech = Echelon()
    for g in invariant_generators(ctx.r, ctx.p, ctx.n):
        dg = g.degree()
        if dg > d:
            continue
        for mono in compositions(d - dg, ctx.n):
            ech.add(g.mul_monomial(mono).terms)
    basis = GradedIdealBasis(d, ctx.n, ctx.r, ech)
    cache[d] = basis
    return basis


def normal_form(ctx: AlgebraContext, f: Polynomial) -> Polynomial:
    """Reduce every homogeneous component of f modulo I."""
    out = Polynomial.zero(ctx.n, ctx.r)
    for d in sorted({sum(e) for e in f.terms}):
        out = out + graded_ideal_basis(ctx, d).reduce(f.homogeneous_part(d))
    return out


def find_unstable_row(ctx: AlgebraContext, d: int):
    """First (i, row) with y_i.row outside I_{d-1}, or None."""
    if d == 0:
        return None
    lower = graded_ideal_basis(ctx, d - 1)
    for row in graded_ideal_basis(ctx, d).rows():
        for i in range(1, ctx.n + 1):
            if lower.reduce(dunkl(ctx, i, row)):
                return i, row
    return None


def ideal_stability_check(ctx: AlgebraContext, d: int) -> bool:
    """Every Dunkl operator maps the echelon rows of I_d into I_{d-1}."""
    if ctx.params.kappa:
        raise ValueError("ideal stability holds only at kappa = 0")
    return find_unstable_row(ctx, d) is None


@dataclass(frozen=True)
class BasisElement:
    v: ColoredPermutation
    descent: DescentData
    record: JackRecord

    @property
    def degree(self) -> int:
        return sum(self.descent.steinberg)


def descent_basis(ctx: AlgebraContext) -> list[BasisElement]:
    """f_{lambda_v} for every v in G(r,1,n)_p, at kappa = 0."""
    if ctx.params.kappa:
        raise ValueError("the descent basis is defined at kappa = 0")
    out = []
    for v in enumerate_Gr1np(ctx.r, ctx.p, ctx.n):
        dd = descent_data(v)
        out.append(BasisElement(v, dd, jack_f(ctx, dd.steinberg)))
    return out


def flag_major_genfun(r: int, p: int, n: int) -> list[int]:
    """sum over v in G(r,1,n)_p of t^{|lambda_v|}."""
    degs = [sum(descent_data(v).steinberg) for v in enumerate_Gr1np(r, p, n)]
    out = [0] * (max(degs) + 1)
    for d in degs:
        out[d] += 1
    return out


def expand_in_jack_basis(ctx: AlgebraContext, g: Polynomial) -> dict[Exps, CyclotomicNumber]:
    """Coefficients a_mu with g = sum a_mu f_mu, by peeling off maximal terms."""
    coeffs = {}
    rest = g
    while rest:
        top = max(rest.terms, key=order_key)
        c = rest.terms[top]
        coeffs[top] = c
        rest = rest.add_scaled(jack_f(ctx, top).f, -c)
    return coeffs


@dataclass
class ClassReport:
    key: tuple
    members: list[ColoredPermutation]
    steinberg: list[Exps]
    witnesses: list[list[int]]
    fingerprint: list[TWeight]

    def to_json(self) -> dict:
        return {
            "descent_set": list(self.key[0]),
            "colors": list(self.key[1]),
            "members": [v.to_json() for v in self.members],
            "steinberg": [list(m) for m in self.steinberg],
            "witnesses": self.witnesses,
            "fingerprint": [w.to_json() for w in self.fingerprint],
        }


@dataclass
class DecompositionReport:
    r: int
    p: int
    n: int
    basis_size: int
    classes: list[ClassReport] = field(default_factory=list)
    checks: dict[str, bool] = field(default_factory=dict)
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures and all(self.checks.values())

    def fail(self, check: str, message: str):
        self.checks[check] = False
        self.failures.append(f"{check}: {message}")

    def to_json(self) -> dict:
        return {
            "group": {"r": self.r, "p": self.p, "n": self.n},
            "basis_size": self.basis_size,
            "ok": self.ok,
            "checks": self.checks,
            "failures": self.failures,
            "classes": [c.to_json() for c in self.classes],
        }


CHECKS = (
    "cardinality", "hilbert_degrees", "independence_mod_I", "casimir_kills",
    "i_sigma_nonzero", "ii_sigma_square", "iii_connected", "iv_hecke_stable",
    "v_spectra_distinct", "psi_phi_annihilation",
)


def _sigma_squared_zero(ctx, i, rec) -> bool:
    first = apply_sigma(ctx, i, rec)
    if first.record is None:
        return True
    return apply_sigma(ctx, i, first.record).record is None


def verify_decomposition(ctx: AlgebraContext) -> DecompositionReport:
    """Run every basis and decomposition check for the group of `ctx`."""
    r, p, n = ctx.r, ctx.p, ctx.n
    basis = descent_basis(ctx)
    rep = DecompositionReport(r, p, n, len(basis), checks={c: True for c in CHECKS})
    by_v = {b.v: b for b in basis}
    by_lambda = {b.descent.steinberg: b for b in basis}

    order = r ** n * len(list(perm.all_perms(n))) // p
    if len(basis) != order or len(by_lambda) != order:
        rep.fail("cardinality", f"{len(basis)} elements, {len(by_lambda)} distinct weights, "
                                f"expected {order}")

    hs = hilbert_series(r, p, n)
    counts = Counter(b.degree for b in basis)
    if [counts.get(d, 0) for d in range(len(hs))] != hs or max(counts) != len(hs) - 1:
        rep.fail("hilbert_degrees", f"degree counts {sorted(counts.items())} vs {hs}")

    for d in range(len(hs)):
        nfs = [normal_form(ctx, b.record.f) for b in basis if b.degree == d]
        rk = rank(nfs)
        if rk != len(nfs) or rk != len(compositions(d, n)) - graded_ideal_basis(ctx, d).rank:
            rep.fail("independence_mod_I", f"degree {d}: rank {rk} of {len(nfs)}")

    for b in basis:
        if casimir_h(ctx, b.record.f):
            rep.fail("casimir_kills", f"h f_{b.descent.steinberg} != 0")

    # (i), (ii)
    for b in basis:
        for i in range(1, n):
            u = ColoredPermutation(tuple(i + 1 if x == i else i if x == i + 1 else x
                                         for x in b.v.w), b.v.k, r)
            same = des(u) == des(b.v)
            if same:
                lam_u = descent_data(u).steinberg
                if lam_u != perm.act(perm.simple(i, n), b.descent.steinberg):
                    rep.fail("i_sigma_nonzero", f"s_{i} lambda_v != lambda_(s_i v) for v={b.v}")
                step = apply_sigma(ctx, i, b.record)
                if step.record is None or step.poly != by_v[u].record.f.scale(step.scalar):
                    rep.fail("i_sigma_nonzero", f"sigma_{i} f_lambda_v for v={b.v}")
            winv = perm.inverse(b.v.w)
            pi, pj = winv[i - 1], winv[i]
            adjacent = b.v.k[pi - 1] == b.v.k[pj - 1] and abs(pi - pj) == 1
            sq_zero = _sigma_squared_zero(ctx, i, b.record)
            if not (sq_zero == adjacent == (not same)):
                rep.fail("ii_sigma_square", f"v={b.v}, i={i}: sigma^2=0 {sq_zero}, "
                                            f"adjacent {adjacent}, des changes {not same}")

    # (iii) and per-class data
    classes: dict[tuple, list[BasisElement]] = {}
    for b in basis:
        classes.setdefault(b.descent.key, []).append(b)
    for key, members in classes.items():
        first = members[0]
        witnesses = []
        for m in members:
            path = chains_witness(first.v, m.v)
            witnesses.append(path)
            rec, scalar = first.record, CyclotomicNumber.rational(r, 1)
            for i in path:
                step = apply_sigma(ctx, i, rec)
                if step.record is None:
                    rep.fail("iii_connected", f"sigma_{i} kills an element on the chain to {m.v}")
                    break
                rec, scalar = step.record, scalar * step.scalar
            else:
                if rec.mu != m.descent.steinberg or rec.f != m.record.f or not scalar:
                    rep.fail("iii_connected", f"chain from {first.v} does not reach {m.v}")
        weights = []
        for m in members:
            try:
                w = tweight_of(ctx, m.record.f)
            except NotEigenvector:
                rep.fail("v_spectra_distinct", f"f_{m.descent.steinberg} is not a t-eigenvector")
                w = m.record.weight
            if w != m.record.weight:
                rep.fail("v_spectra_distinct", f"weight of f_{m.descent.steinberg} mismatch")
            weights.append(w)
        rep.classes.append(ClassReport(key, [m.v for m in members],
                                       [m.descent.steinberg for m in members],
                                       witnesses, weights))

    # (iv): t_{s_i} f_lambda_v lies in the class span modulo I
    for b in basis:
        for i in range(1, n):
            g = group_action(ColoredPermutation.simple(i, n, r), b.record.f)
            leftover = Polynomial.zero(n, r)
            for mu, c in expand_in_jack_basis(ctx, g).items():
                other = by_lambda.get(mu)
                if other is None:
                    leftover = leftover.add_scaled(jack_f(ctx, mu).f, c)
                elif other.descent.key != b.descent.key:
                    rep.fail("iv_hecke_stable", f"t_s{i} f_lambda_v leaves the class of {b.v}")
            if normal_form(ctx, leftover):
                rep.fail("iv_hecke_stable", f"non-descent part of t_s{i} f for v={b.v} not in I")

    # (v)
    all_weights = [w for c in rep.classes for w in c.fingerprint]
    if len(set(all_weights)) != len(all_weights):
        rep.fail("v_spectra_distinct", "weight spaces are not one-dimensional")
    spectra = [frozenset(c.fingerprint) for c in rep.classes]
    if len(set(spectra)) != len(spectra):
        rep.fail("v_spectra_distinct", "two classes share a spectrum")

    for b in basis:
        killed = not Psi(ctx, Phi(ctx, b.record.f))
        predicted = perm.inverse(b.v.w)[0] == n and b.v.k[-1] == r // p - 1
        if killed != predicted:
            rep.fail("psi_phi_annihilation", f"v={b.v}: killed {killed}, predicted {predicted}")
    return rep
