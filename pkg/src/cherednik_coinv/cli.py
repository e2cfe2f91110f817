"""Command-line interface.

    cherednik jack --r 2 --p 1 --n 2 --mu 0,1
    cherednik verify --r 3 --p 3 --n 3 --level full
    cherednik hilbert --r 2 --p 1 --n 2

Exit codes: 0 success, 1 verification failure or genericity failure, 2 usage.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys
from dataclasses import dataclass, field
from fractions import Fraction

from .cherednik import AlgebraContext, casimir_h, dunkl, mul_x, pi_op, z_op
from .coinv import (descent_basis, find_unstable_row, flag_major_genfun, hilbert_series,
                    top_degree, verify_decomposition)
from .errors import CherednikError, GenericityFailure
from .exactfield import ParameterSet, parse_rational, rational_str
from .jack import Phi, Psi, apply_sigma, jack_f
from .polyring import group_action
from .reflgroup import (ColoredPermutation, canonical_representative, chains_witness,
                        descent_classes, descent_data)
from .relations import run_all

SUBCOMMANDS = ("jack", "basis", "verify", "hilbert", "flagmaj", "descents", "relations", "apply")
OPERATORS = ("x", "y", "z", "h", "pi", "s", "Phi", "Psi", "sigma")


@dataclass
class RunConfig:
    subcommand: str
    r: int
    p: int
    n: int
    mu: tuple[int, ...] | None = None
    kappa: Fraction = Fraction(0)
    c0: Fraction | None = None
    c: dict[int, Fraction] = field(default_factory=dict)
    fmt: str = "text"
    verbose: bool = False
    degree: int | None = None
    level: str = "quick"
    op: str | None = None
    index: int | None = None
    on_jack: bool = False
    seed: str | None = None

    def params(self) -> ParameterSet:
        c0, c = self.c0, dict(self.c)
        if self.seed is not None:
            rng = random.Random(self.seed)
            if c0 is None:
                c0 = Fraction(rng.randint(1, 97), rng.randint(98, 199))
            for m in range(self.p, self.r, self.p):
                c.setdefault(m, Fraction(rng.randint(1, 97), rng.randint(98, 199)))
        return ParameterSet.default(self.r, self.p, kappa=self.kappa, c0=c0, c=c)


def _rational(text: str) -> Fraction:
    try:
        return parse_rational(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _c_override(text: str) -> tuple[int, Fraction]:
    if "=" not in text:
        raise argparse.ArgumentTypeError(f"expected m=q, got {text!r}")
    m, q = text.split("=", 1)
    try:
        return int(m), _rational(q)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _mu(text: str) -> tuple[int, ...]:
    try:
        mu = tuple(int(a) for a in text.replace(" ", "").split(",") if a != "")
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad multi-index {text!r}") from None
    if any(a < 0 for a in mu):
        raise argparse.ArgumentTypeError("multi-index entries must be nonnegative")
    return mu


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cherednik",
        description="Dunkl operators, non-symmetric Jack polynomials and the coinvariant "
                    "ring of G(r,p,n), in exact arithmetic.")
    sub = parser.add_subparsers(dest="subcommand", required=True)
    for name in SUBCOMMANDS:
        sp = sub.add_parser(name)
        sp.add_argument("--r", type=int, required=True)
        sp.add_argument("--p", type=int, default=1)
        sp.add_argument("--n", type=int, required=True)
        sp.add_argument("--kappa", type=_rational, default=Fraction(0))
        sp.add_argument("--c0", type=_rational, default=None)
        sp.add_argument("--c", type=_c_override, action="append", default=[],
                        metavar="M=Q", help="override c_M for a multiple M of p")
        sp.add_argument("--format", dest="fmt", choices=("json", "text"), default="text")
        sp.add_argument("-v", "--verbose", action="store_true")
        if name in ("jack", "apply"):
            sp.add_argument("--mu", type=_mu, required=True)
        if name == "verify":
            sp.add_argument("--level", choices=("quick", "full"), default="quick")
        if name in ("relations", "hilbert"):
            sp.add_argument("--degree", type=int, default=None)
        if name == "apply":
            sp.add_argument("--op", choices=OPERATORS, required=True)
            sp.add_argument("--i", dest="index", type=int, default=1)
            sp.add_argument("--jack", dest="on_jack", action="store_true",
                            help="apply to f_mu instead of the monomial x^mu")
    return parser


def parse_args(argv=None) -> RunConfig:
    parser = build_parser()
    ns = parser.parse_args(argv)
    if ns.r < 1 or ns.p < 1 or ns.n < 1:
        parser.error("r, p, n must be positive")
    if ns.r % ns.p:
        parser.error(f"p={ns.p} does not divide r={ns.r}")
    c = dict(ns.c)
    for m in c:
        if m % ns.p or not 0 < m < ns.r:
            parser.error(f"c_{m} is not a parameter: indices must be multiples of p below r")
    mu = getattr(ns, "mu", None)
    if mu is not None and len(mu) != ns.n:
        parser.error(f"mu has {len(mu)} entries, expected n={ns.n}")
    if ns.subcommand in ("basis", "verify") and ns.kappa:
        parser.error(f"{ns.subcommand} requires kappa = 0")
    index = getattr(ns, "index", None)
    if ns.subcommand == "apply":
        hi = ns.n - 1 if ns.op in ("pi", "s", "sigma") else ns.n
        if ns.op in ("x", "y", "z", "pi", "s", "sigma") and not 1 <= index <= hi:
            parser.error(f"--i must lie in 1..{hi} for operator {ns.op}")
        if ns.op == "sigma" and not ns.on_jack:
            parser.error("sigma acts through the weight of f_mu; pass --jack")
    return RunConfig(
        subcommand=ns.subcommand, r=ns.r, p=ns.p, n=ns.n, mu=mu, kappa=ns.kappa, c0=ns.c0,
        c=c, fmt=ns.fmt, verbose=ns.verbose, degree=getattr(ns, "degree", None),
        level=getattr(ns, "level", "quick"), op=getattr(ns, "op", None), index=index,
        on_jack=getattr(ns, "on_jack", False), seed=os.environ.get("CHEREDNIK_SEED"),
    )


def _emit(cfg: RunConfig, payload: dict, text: str):
    if cfg.fmt == "json":
        if cfg.seed is not None:
            payload = {"seed": cfg.seed, **payload}
        print(json.dumps(payload, indent=2))
    else:
        print(text)


def _weight_text(w) -> str:
    return ("alpha = (" + ", ".join(str(a) for a in w.alpha) + ")  beta = "
            + str(tuple(w.beta)))


def _cmd_jack(cfg, ctx):
    rec = jack_f(ctx, cfg.mu)
    _emit(cfg, rec.to_json(), f"f_{cfg.mu} = {rec.f}\n{_weight_text(rec.weight)}")
    return 0


def _cmd_basis(cfg, ctx):
    basis = descent_basis(ctx)
    payload = {"params": ctx.params.to_json(), "basis": [
        {"v": b.v.to_json(), "steinberg": list(b.descent.steinberg),
         "poly": b.record.f.to_json()} for b in basis]}
    lines = [f"{b.v.window():<28} x^{b.descent.steinberg}  f = {b.record.f}" for b in basis]
    _emit(cfg, payload, "\n".join(lines))
    return 0


def _cmd_hilbert(cfg, ctx):
    coeffs = hilbert_series(cfg.r, cfg.p, cfg.n, cfg.degree)
    _emit(cfg, {"hilbert": coeffs}, " ".join(map(str, coeffs)))
    return 0


def _cmd_flagmaj(cfg, ctx):
    coeffs = flag_major_genfun(cfg.r, cfg.p, cfg.n)
    _emit(cfg, {"flagmaj": coeffs}, " ".join(map(str, coeffs)))
    return 0


def _cmd_descents(cfg, ctx):
    classes = descent_classes(cfg.r, cfg.p, cfg.n)
    payload, lines = [], []
    for (dset, colors), members in classes.items():
        payload.append({"descent_set": list(dset), "colors": list(colors),
                        "members": [{"v": v.to_json(),
                                     "steinberg": list(descent_data(v).steinberg)}
                                    for v in members]})
        lines.append(f"des = ({set(dset) or '{}'}, {colors}): "
                     + "; ".join(f"{v.window()} -> {descent_data(v).steinberg}" for v in members))
    _emit(cfg, {"classes": payload}, "\n".join(lines))
    return 0


def _relations(cfg, ctx, degree):
    failures = {}
    for kappa in sorted({Fraction(0), Fraction(1), ctx.params.kappa}):
        for name, bad in run_all(ctx.with_kappa(kappa), degree).items():
            failures[f"{name}@kappa={rational_str(kappa)}"] = bad
    return failures


def _cmd_relations(cfg, ctx):
    failures = _relations(cfg, ctx, cfg.degree if cfg.degree is not None else 4)
    ok = not any(failures.values())
    lines = [f"{'PASS' if not bad else 'FAIL'} {name}" + (f": {bad[0]}" if bad else "")
             for name, bad in failures.items()]
    _emit(cfg, {"ok": ok, "failures": failures}, "\n".join(lines))
    return 0 if ok else 1


def _cmd_verify(cfg, ctx):
    rep = verify_decomposition(ctx)
    payload = rep.to_json()
    extra = {}
    if cfg.level == "full":
        rel = _relations(cfg, ctx, 4)
        extra["relations"] = not any(rel.values())
        unstable = [d for d in range(top_degree(cfg.r, cfg.p, cfg.n) + 1)
                    if find_unstable_row(ctx, d) is not None]
        extra["ideal_stability"] = not unstable
        chains_ok = True
        for members in descent_classes(cfg.r, cfg.p, cfg.n).values():
            try:
                for v in members:
                    chains_witness(members[0], v)
                canonical_representative(members[0])
            except (CherednikError, ValueError):
                chains_ok = False
        extra["chains"] = chains_ok
        payload["extra_checks"] = extra
    ok = rep.ok and all(extra.values())
    payload["ok"] = ok
    lines = [f"G({cfg.r},{cfg.p},{cfg.n}): {rep.basis_size} basis elements, "
             f"{len(rep.classes)} descent classes"]
    lines += [f"{'PASS' if v else 'FAIL'} {k}" for k, v in {**rep.checks, **extra}.items()]
    lines += rep.failures
    _emit(cfg, payload, "\n".join(lines))
    return 0 if ok else 1


def _cmd_apply(cfg, ctx):
    f = jack_f(ctx, cfg.mu).f if cfg.on_jack else ctx.monomial(cfg.mu)
    i, op = cfg.index, cfg.op
    if op == "x":
        g = mul_x(ctx, i, f)
    elif op == "y":
        g = dunkl(ctx, i, f)
    elif op == "z":
        g = z_op(ctx, i, f)
    elif op == "h":
        g = casimir_h(ctx, f)
    elif op == "pi":
        g = pi_op(ctx, i, f)
    elif op == "s":
        g = group_action(ColoredPermutation.simple(i, ctx.n, ctx.r), f)
    elif op == "Phi":
        g = Phi(ctx, f)
    elif op == "Psi":
        g = Psi(ctx, f)
    else:
        g = apply_sigma(ctx, i, jack_f(ctx, cfg.mu)).poly
    _emit(cfg, {"input": f.to_json(), "op": op, "i": i, "result": g.to_json()}, str(g))
    return 0


_DISPATCH = {
    "jack": _cmd_jack, "basis": _cmd_basis, "verify": _cmd_verify, "hilbert": _cmd_hilbert,
    "flagmaj": _cmd_flagmaj, "descents": _cmd_descents, "relations": _cmd_relations,
    "apply": _cmd_apply,
}


def run(cfg: RunConfig) -> int:
    ctx = AlgebraContext(cfg.params(), cfg.n)
    try:
        return _DISPATCH[cfg.subcommand](cfg, ctx)
    except GenericityFailure as exc:
        _emit(cfg, {"ok": False, "error": "GenericityFailure", "detail": str(exc)},
              f"genericity failure: {exc}")
        return 1


def main(argv=None) -> int:
    try:
        cfg = parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    return run(cfg)


if __name__ == "__main__":
    sys.exit(main())
