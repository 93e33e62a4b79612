"""Command-line front end.

    strengthlab <command> --input FILE [--order grevlex|lex|grlex] [--seed N]
                [--budget N] [--json]

Exit codes: 0 success, 1 mathematical-input error, 2 resource budget
exceeded, 3 harness found a counterexample (which would be a bug).
"""

from __future__ import annotations

import argparse
import json
import math
import sys
import warnings
from dataclasses import replace
from typing import List, Optional

from . import __version__
from .ci import (
    InstanceParams,
    LemmaParams,
    check_lemma_strength_jacobian,
    generate_instance,
    hypothesis_report,
    lemma_sweep,
)
from .differential import JacobianMatrix, nonsingular_codim, singular_locus_ideal
from .errors import CodimMismatch, MathInputError, ResourceBudgetExceeded, StrengthLabError
from .groebner import Budget, codim, krull_dimension, minimal_generators, use_budget
from .io import format_ideal, parse_ideal_file, parse_polynomial
from .poly import Ideal, MonomialOrder
from .strength import collective_strength, reduce_generators, strength

COMMANDS = [
    "gb", "dim", "member", "mingens", "jacobian", "sing-ideal", "sing-codim",
    "strength", "collective-strength", "reduce-gens", "ci-test", "report",
    "verify-lemma", "gen",
]


def _jsonable(x):
    if isinstance(x, float) and math.isinf(x):
        return "infinity"
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    return x


def _load(args) -> Ideal:
    if not args.input:
        raise MathInputError("--input is required for this command")
    return parse_ideal_file(args.input)


def _polys(I):
    return [str(g) for g in I.generators]


def cmd_gb(args):
    I = _load(args)
    G = I.groebner(args.order)
    return {"order": args.order.value, "size": len(G), "basis": [str(g) for g in G]}


def cmd_dim(args):
    I = _load(args)
    d = krull_dimension(I, args.order)
    return {"nvars": I.ring.nvars, "dim": d, "codim": I.ring.nvars - d}


def cmd_member(args):
    I = _load(args)
    if not args.poly:
        raise MathInputError("--poly is required for member")
    f = parse_polynomial(args.poly, I.ring)
    r = I.groebner(args.order).normal_form(f)
    return {"member": not r, "normal_form": str(r)}


def cmd_mingens(args):
    I = _load(args)
    mg = minimal_generators(I)
    return {
        "mu": mg.mu,
        "nu": mg.nu,
        "by_degree": {str(d): k for d, k in sorted(mg.by_degree.items())},
        "generators": [str(I.generators[i]) for i in mg.indices],
    }


def _minor_size(args, I):
    return args.c if args.c is not None else codim(I)


def cmd_jacobian(args):
    I = _load(args)
    c = _minor_size(args, I)
    minors = [m for m in JacobianMatrix(I).minors(c) if m]
    return {"c": c, "count": len(minors), "minors": [str(m) for m in minors]}


def cmd_sing_ideal(args):
    I = _load(args)
    out = {}
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always", CodimMismatch)
        S = singular_locus_ideal(I, args.c)
    c = args.c if args.c is not None else codim(I)
    out["label"] = "Jacobian singular ideal"
    out["c"] = c
    out["generators"] = _polys(S)
    if caught:
        out["warning"] = str(caught[0].message)
    return out


def cmd_sing_codim(args):
    I = _load(args)
    return {"codim": codim(I), "sing_codim": nonsingular_codim(I)}


def _single_form(args):
    I = _load(args)
    if args.poly:
        return parse_polynomial(args.poly, I.ring)
    if not I.generators:
        raise MathInputError("input has no generators")
    return I.generators[0]


def cmd_strength(args):
    f = _single_form(args)
    out = {"polynomial": str(f)}
    out.update(strength(f, args.kmax, args.method).to_dict())
    return out


def cmd_collective(args):
    I = _load(args)
    return collective_strength(I.generators, args.kmax, args.method).to_dict()


def cmd_reduce(args):
    I = _load(args)
    return reduce_generators(I, args.kmax, args.method).to_dict()


def cmd_ci_test(args):
    I = _load(args)
    mg = minimal_generators(I)
    c = codim(I)
    return {"codim": c, "mu": mg.mu, "is_ci": mg.mu == c}


def cmd_report(args):
    return hypothesis_report(_load(args)).to_dict()


def cmd_verify_lemma(args):
    if args.sweep:
        summaries = lemma_sweep(args.trials, args.seed)
        total_violations = sum(len(s.violations) for s in summaries)
        return {
            "trials": sum(s.trials for s in summaries),
            "violation_count": total_violations,
            "configs": [s.to_dict() for s in summaries],
        }
    params = LemmaParams.parse(args.params) if args.params else LemmaParams()
    return check_lemma_strength_jacobian(args.trials, params, args.seed).to_dict()


def _instance_params(text: Optional[str]) -> InstanceParams:
    params = InstanceParams()
    if not text:
        return params
    kw = {}
    for item in filter(None, (t.strip() for t in text.split(","))):
        key, _, val = item.partition("=")
        key = key.strip()
        if key not in InstanceParams.__dataclass_fields__:
            raise MathInputError(f"unknown parameter {key!r}")
        if key == "hankel":
            kw[key] = val.strip().lower() in ("1", "true", "yes")
        elif key == "p" and val.strip().upper() == "Q":
            kw[key] = 0
        else:
            kw[key] = int(val)
    return replace(params, **kw)


def cmd_gen(args):
    if not args.kind:
        raise MathInputError("--kind is required for gen")
    I = generate_instance(args.kind, _instance_params(args.params), args.seed)
    return {
        "kind": args.kind,
        "field": I.ring.field.spec(),
        "vars": list(I.ring.names),
        "generators": _polys(I),
        "text": format_ideal(I),
    }


HANDLERS = {
    "gb": cmd_gb,
    "dim": cmd_dim,
    "member": cmd_member,
    "mingens": cmd_mingens,
    "jacobian": cmd_jacobian,
    "sing-ideal": cmd_sing_ideal,
    "sing-codim": cmd_sing_codim,
    "strength": cmd_strength,
    "collective-strength": cmd_collective,
    "reduce-gens": cmd_reduce,
    "ci-test": cmd_ci_test,
    "report": cmd_report,
    "verify-lemma": cmd_verify_lemma,
    "gen": cmd_gen,
}


class UsageError(MathInputError):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--input", help="ideal file")
    common.add_argument("--order", default="grevlex", choices=["grevlex", "lex", "grlex"])
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--budget", type=int, help="cap on S-pairs and on search-space size")
    common.add_argument("--json", action="store_true", help="emit JSON on stdout")

    parser = _Parser(prog="strengthlab", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        p = sub.add_parser(name, parents=[common])
        if name == "member":
            p.add_argument("--poly", help="polynomial to test")
        if name in ("jacobian", "sing-ideal"):
            p.add_argument("--c", type=int, help="minor size (default codim of the input)")
        if name in ("strength", "collective-strength", "reduce-gens"):
            p.add_argument("--kmax", type=int, default=3)
            p.add_argument("--method", default="auto", choices=["auto", "search", "bound"])
        if name == "strength":
            p.add_argument("--poly", help="form to analyse (default: first generator)")
        if name == "verify-lemma":
            p.add_argument("--trials", type=int, default=200)
            p.add_argument("--params", help="e.g. n=6,p=5,r=2,c=1,s=1,dmin=2,dmax=2")
            p.add_argument("--sweep", action="store_true", help="run the built-in configuration sweep")
        if name == "gen":
            p.add_argument("--kind", help="CompleteIntersection | LowStrength | Determinantal | Fermat")
            p.add_argument("--params", help="e.g. p=5,c=2,d=3,block=2 (p=Q for rationals)")
    return parser


def _emit_text(out: dict, command: str) -> str:
    if command == "gen":
        return out["text"].rstrip("\n")
    lines = []
    for k, v in out.items():
        if isinstance(v, list):
            lines.append(f"{k}:")
            lines.extend(f"  {item}" for item in v)
        else:
            lines.append(f"{k}: {v}")
    return "\n".join(lines)


def main(argv: Optional[List[str]] = None) -> int:
    argv = sys.argv[1:] if argv is None else list(argv)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as e:
        if "--json" in argv:
            print(json.dumps({"error": {"type": "UsageError", "message": str(e)}}, separators=(",", ":")))
        else:
            parser.print_usage(sys.stderr)
            print(f"error: {e}", file=sys.stderr)
        return 1
    args.order = MonomialOrder.parse(args.order)
    budget = Budget.from_env()
    if args.budget is not None:
        budget = replace(budget, max_pairs=args.budget, max_search=args.budget)
    code = 0
    try:
        with use_budget(budget):
            out = HANDLERS[args.command](args)
        if out.get("violation_count"):
            code = 3
    except StrengthLabError as e:
        code = 2 if isinstance(e, ResourceBudgetExceeded) else 1
        out = {"error": {"type": type(e).__name__, "message": str(e)}}
    except (OSError, ValueError) as e:
        code = 1
        out = {"error": {"type": type(e).__name__, "message": str(e)}}
    out = _jsonable(out)
    if args.json:
        print(json.dumps(out, separators=(",", ":")))
    elif "error" in out:
        print(f"error ({out['error']['type']}): {out['error']['message']}", file=sys.stderr)
    else:
        print(_emit_text(out, args.command))
    return code


def entrypoint():
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
