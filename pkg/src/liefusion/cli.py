"""Command-line front end: ``liefusion <subcommand> ...``."""
from __future__ import annotations

import argparse
import json
import sys

from . import cache, reduction, repbuilder, verify
from .fusion import FusionRule, admissible_set, fusion, fusion_closure, is_admissible, kac_walton
from .rootsystem import RootSystem, Weight, build
from .tensor import decompose, hom_dim
from .weights import dim, weight_system


class UsageError(Exception):
    pass


# ---------------------------------------------------------------------------
# rendering


def fits(*ws) -> bool:
    return all(0 <= x <= 9 for w in ws for x in w)


def compact(w, short: bool | None = None) -> str:
    """(0010) when every label fits in one digit, else (0,0,10,0)."""
    if short if short is not None else fits(w):
        return "(" + "".join(str(x) for x in w) + ")"
    return repr(Weight(w))


def render_sum(terms, short: bool) -> str:
    parts = [(f"{m}" if m != 1 else "") + compact(w, short) for w, m in terms]
    return "+".join(parts) if parts else "0"


def emit(args, data, text_lines) -> None:
    if getattr(args, "format", "text") == "json":
        print(json.dumps(verify.jsonable(data), indent=2, sort_keys=False))
    else:
        for line in text_lines:
            print(line)


# ---------------------------------------------------------------------------
# argument helpers


def _type(text: str) -> RootSystem:
    try:
        return build(text)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def _weight(R: RootSystem, text: str, dominant: bool = True) -> Weight:
    try:
        w = Weight.parse(text)
    except ValueError as exc:
        raise UsageError(f"cannot parse weight {text!r}; expected comma-separated labels") from exc
    if len(w) != R.rank:
        raise UsageError(f"weight {text!r} has {len(w)} labels; {R.lie_type} needs {R.rank}")
    if dominant and not RootSystem.is_dominant(w):
        raise UsageError(f"weight {text!r} is not dominant")
    return w


# ---------------------------------------------------------------------------
# subcommands


def cmd_roots(args) -> int:
    R = _type(args.type)
    simple = list(R.simple_roots)
    pos = [(R.from_orthogonal(a), a) for a in R.positive_roots]
    data = {"type": str(R.lie_type), "simple_roots": simple,
            "positive_roots": [{"dynkin": w, "orthogonal": a, "long": R.is_long(a)} for w, a in pos],
            "highest_root": R.highest_root, "dual_coxeter": R.dual_coxeter, "dimension": R.dimension}
    lines = [f"{R.lie_type}: dim {R.dimension}, h^vee {R.dual_coxeter}, "
             f"{len(pos)} positive roots, theta = {R.highest_root!r}"]
    lines += [f"simple {i + 1}: {a!r}" for i, a in enumerate(simple)]
    lines += [f"{w!r:>16}  {a!r}" for w, a in pos]
    emit(args, data, lines)
    return 0


def cmd_weights(args) -> int:
    R = _type(args.type)
    lam = _weight(R, args.weight)
    ws = weight_system(R, lam)
    rows = sorted(ws.weights.items() if not args.dominant else ws.mults.items(),
                  key=lambda t: (R.height(lam - t[0]), tuple(-c for c in t[0])))
    data = {"highest_weight": lam, "dimension": ws.total_dim, "distinct": len(ws),
            "weights": [{"dynkin": w, "orthogonal": R.to_orthogonal(w), "mult": m} for w, m in rows]}
    lines = [f"L{compact(lam)}: dim {ws.total_dim}, {len(ws)} weights"]
    lines += [f"{w!r:>16}  {R.to_orthogonal(w)!r:<24} {m}" for w, m in rows]
    emit(args, data, lines)
    return 0


def cmd_dim(args) -> int:
    R = _type(args.type)
    lam = _weight(R, args.weight)
    d = dim(R, lam)
    emit(args, {"highest_weight": lam, "dimension": d}, [str(d)])
    return 0


def cmd_tensor(args) -> int:
    R = _type(args.type)
    lam, mu = _weight(R, args.lam), _weight(R, args.mu)
    d = decompose(R, lam, mu)
    terms = list(d.components.items())
    data = {"factors": [lam, mu], "components": [{"weight": w, "mult": m, "dim": dim(R, w)} for w, m in terms],
            "total_dim": d.total_dim(R)}
    short = fits(lam, mu, *d.components)
    emit(args, data, [f"{compact(lam, short)}x{compact(mu, short)}={render_sum(terms, short)}"])
    return 0


def cmd_homdim(args) -> int:
    R = _type(args.type)
    lam, mu, nu = (_weight(R, x) for x in (args.lam, args.mu, args.nu))
    n = hom_dim(R, lam, mu, nu)
    emit(args, {"lam": lam, "mu": mu, "nu": nu, "hom_dim": n}, [str(n)])
    return 0


def _rule_dict(r: FusionRule) -> dict:
    lam, mu, nu = r.triple
    return {"level": r.level, "charge": lam, "mu": mu, "nu": nu, "value": r.value, "method": r.method}


def cmd_fusion(args) -> int:
    R = _type(args.type)
    lam, mu = _weight(R, args.charge), _weight(R, args.mu)
    for w in (lam, mu):
        if not is_admissible(R, args.level, w):
            raise UsageError(f"{compact(w)} is not admissible at level {args.level}")
    if args.nu is not None:
        nu = _weight(R, args.nu)
        if not is_admissible(R, args.level, nu):
            raise UsageError(f"{compact(nu)} is not admissible at level {args.level}")
        r = fusion(R, args.level, lam, mu, nu)
        emit(args, _rule_dict(r), [str(r.value)])
        return 0
    if R.level(lam) == 1:
        rows = [fusion(R, args.level, lam, mu, nu) for nu in admissible_set(R, args.level)]
        rows = [r for r in rows if r.value]
    else:
        table = kac_walton(R, args.level, lam, mu)
        rows = [fusion(R, args.level, lam, mu, nu) for nu in admissible_set(R, args.level) if nu in table]
    lines = [f"level {args.level}, {compact(lam)} x {compact(mu)}:"]
    lines += [f"  N^{compact(r.triple[2])} = {r.value}" for r in rows]
    emit(args, [_rule_dict(r) for r in rows], lines)
    return 0


def cmd_closure(args) -> int:
    R = _type(args.type)
    gens = [_weight(R, g) for g in args.gen]
    for g in gens:
        if not is_admissible(R, args.level, g):
            raise UsageError(f"{compact(g)} is not admissible at level {args.level}")
    got = fusion_closure(R, args.level, gens)
    full = admissible_set(R, args.level)
    data = {"level": args.level, "generators": gens, "closure": got, "is_all_admissible": got == full}
    lines = [" ".join(compact(w) for w in got),
             f"{len(got)} of {len(full)} admissible weights"]
    emit(args, data, lines)
    return 0


def cmd_kspace(args) -> int:
    R = build("F4")
    lam, mu, nu = (_weight(R, x) for x in (args.lam, args.mu, args.nu))
    try:
        M = repbuilder.build_module(R, lam, args.dim_cap)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    K = repbuilder.kspace(M, mu, nu)
    d = M.weight_space_dim(K.weight)
    data = {"lam": lam, "mu": mu, "nu": nu, "weight": K.weight, "weight_space_dim": d,
            "rank": K.rank, "corank": d - K.rank, "hom_dim": hom_dim(R, lam, mu, nu)}
    lines = [f"V[{K.weight!r}]: dim {d}, K rank {K.rank}, corank {d - K.rank}",
             f"Klimyk hom_dim {data['hom_dim']}"]
    emit(args, data, lines)
    return 0


def cmd_reduce(args) -> int:
    R = build("F4")
    mu, nu = _weight(R, args.mu), _weight(R, args.nu)
    try:
        c = reduction.reduce_to_fundamental(args.level, mu, nu)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    except reduction.ReductionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    data = {"level": c.level, "mu": c.mu, "nu": c.nu, "target": c.target, "shift": c.shift,
            "mu0": c.mu0, "nu0": c.nu0, "k": c.k, "rule": c.rule, "flag_a": c.flag_a, "flag_b": c.flag_b}
    if c.target == "zero-rule":
        lines = ["zero-rule"]
    else:
        lines = [f"type {c.target}: {compact(c.nu0)} over {compact(c.mu0)} level {c.k}, "
                 f"shift {compact(c.shift)}, N = {c.rule}"]
    emit(args, data, lines)
    return 0


def cmd_pairings(args) -> int:
    n1, n2, cross = repbuilder.norm_pairings()
    data = {"norm_rho3": n1, "norm_rho4": n2, "abs_cross": cross}
    emit(args, data, [f"|F3 Fa v|^2 = {n1}", f"|F4 Fb v|^2 = {n2}", f"|<F3 Fa v|F4 Fb v>| = {cross}"])
    return 0


def cmd_verify(args) -> int:
    only = None
    if args.only:
        only = [verify.ONLY_ALIASES.get(x, x) for x in args.only]
        unknown = [x for x in only if x not in verify.CHECK_IDS]
        if unknown:
            raise UsageError(f"unknown check id(s) {', '.join(unknown)}; choose from {', '.join(verify.CHECK_IDS)}")
    report = verify.verify_paper(only, scan_max=args.scan_max)
    if args.json:
        print(json.dumps(report.as_dict(timing=not args.no_timing), indent=2))
    else:
        for c in report.checks:
            print(f"{c.status.upper():<18} {c.id:<22} {c.anchor}")
            if c.status != verify.PASS:
                print(f"{'':<18} expected {verify.jsonable(c.expected)}; computed {verify.jsonable(c.computed)}")
        print("OK" if report.ok else "FAILED")
    return 0 if report.ok else 1


# ---------------------------------------------------------------------------
# parser


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--cache-dir", help=f"cache directory (default: ${cache.ENV_VAR} or the user cache dir)")
    common.add_argument("--no-cache", action="store_true", help="do not read or write the disk cache")

    p = argparse.ArgumentParser(prog="liefusion", description="Exact Lie-algebra weights, tensor products and fusion rules.")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, fn, help_, aliases=()):
        s = sub.add_parser(name, parents=[common], help=help_, aliases=list(aliases))
        s.set_defaults(func=fn)
        return s

    s = add("roots", cmd_roots, "simple and positive roots")
    s.add_argument("type")
    s = add("weights", cmd_weights, "weights and multiplicities of an irreducible module")
    s.add_argument("type")
    s.add_argument("weight")
    s.add_argument("--dominant", action="store_true", help="list dominant weights only")
    s = add("dim", cmd_dim, "Weyl dimension")
    s.add_argument("type")
    s.add_argument("weight")
    s = add("tensor", cmd_tensor, "decompose a tensor product")
    s.add_argument("type")
    s.add_argument("lam")
    s.add_argument("mu")
    s = add("homdim", cmd_homdim, "multiplicity of nu in lam x mu")
    s.add_argument("type")
    for n in ("lam", "mu", "nu"):
        s.add_argument(n)
    s = add("fusion", cmd_fusion, "fusion rules at a level")
    s.add_argument("type")
    s.add_argument("--level", type=int, required=True)
    s.add_argument("--charge", required=True)
    s.add_argument("mu")
    s.add_argument("nu", nargs="?")
    s = add("closure", cmd_closure, "fusion closure of generators")
    s.add_argument("type")
    s.add_argument("--level", type=int, required=True)
    s.add_argument("--gen", action="append", required=True)
    s = add("kspace", cmd_kspace, "K-space rank and corank in an explicit F4 module")
    for n in ("lam", "mu", "nu"):
        s.add_argument(n)
    s.add_argument("--dim-cap", type=int, default=repbuilder.DEFAULT_DIM_CAP)
    s = add("reduce", cmd_reduce, "reduce an F4 type with charge (0,0,0,1) to a fundamental type")
    s.add_argument("--level", type=int, required=True)
    s.add_argument("mu")
    s.add_argument("nu")
    add("pairings", cmd_pairings, "norms and pairing of the two zero-weight vectors", aliases=("appendix-b",))
    s = add("verify-paper", cmd_verify, "run the reproduction suite")
    s.add_argument("--json", action="store_true")
    s.add_argument("--only", action="append", help="run only this check id (repeatable)")
    s.add_argument("--scan-max", type=int, default=2, help="label bound for the K-space scan")
    s.add_argument("--no-timing", action="store_true", help="report ms as 0 for byte-stable JSON")
    return p


def dispatch(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)  # exits 2 on usage errors
    if args.no_cache:
        cache.install(None)
    else:
        cache.install(cache.DiskCache(cache.resolve_cache_dir(args.cache_dir)))
    try:
        return args.func(args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"liefusion: error: {exc}", file=sys.stderr)
        return 2
    finally:
        cache.install(None)


def main() -> None:
    sys.exit(dispatch())
