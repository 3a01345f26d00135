"""Command-line front end.

Exit codes: 0 ok, 1 domain failure (invalid instance, unknown name,
constructor precondition), 2 I/O or parse error.
"""
from __future__ import annotations

import argparse
import json
import sys

import numpy as np

from . import classify as cl
from .category import final_prop_category, idempotent_counterexample, min_category
from .errors import FuzzyOrderError, InvalidInstance
from .generate import random_category, random_coweight, random_sequence, random_weight
from .instance import Instance, dumps, load
from .nets import bilimits, classify_net, yoneda_limits
from .tnorm import TNorm

OK, FAILURE, PARSE_ERROR = 0, 1, 2


class _Exit(Exception):
    def __init__(self, code, message):
        super().__init__(message)
        self.code = code


def _load(path) -> Instance:
    try:
        return load(path)
    except (OSError, json.JSONDecodeError) as exc:
        raise _Exit(PARSE_ERROR, f"cannot read {path}: {exc}") from exc
    except InvalidInstance as exc:
        if exc.report is None:
            raise _Exit(PARSE_ERROR, str(exc)) from exc
        raise


def _emit(payload, as_json: bool, render=None):
    if as_json or render is None:
        sys.stdout.write(dumps(payload))
    else:
        print(render(payload))


def _render_flat(d):
    lines = [f"{k}: {v}" for k, v in d.items() if k != "flat"]
    if "flat" in d:
        lines.append(f"flat: {d['flat']['status']}  {json.dumps(d['flat']['evidence'])}")
    return "\n".join(lines)


# -- commands ----------------------------------------------------------------

def cmd_validate(args) -> int:
    try:
        inst = _load(args.path)
    except InvalidInstance as exc:
        _emit(exc.report.to_dict(), args.json, lambda _: str(exc.report))
        return FAILURE
    report = inst.validate()
    report.subject = args.path
    _emit(report.to_dict(), args.json, lambda _: str(report))
    return OK


def cmd_classify(args) -> int:
    inst = _load(args.path)
    if args.seq is not None:
        if args.seq not in inst.sequences:
            raise _Exit(FAILURE, f"no sequence named {args.seq!r}")
        s = inst.sequences[args.seq]
        kind = classify_net(s)
        names = inst.category.objects
        payload = {"sequence": args.seq, "support": [names[i] for i in s.support],
                   "forward_cauchy": kind.forward_cauchy, "bicauchy": kind.bicauchy,
                   "type": kind.net_type, "yoneda_limits": [names[i] for i in yoneda_limits(s)],
                   "bilimits": [names[i] for i in bilimits(s)]}
        _emit(payload, args.json, lambda d: "\n".join(f"{k}: {v}" for k, v in d.items()))
        return OK
    name = args.weight
    if name is None:
        if len(inst.weights) != 1:
            raise _Exit(FAILURE, f"choose a weight with --weight (have {sorted(inst.weights)})")
        name = next(iter(inst.weights))
    if name not in inst.weights:
        raise _Exit(FAILURE, f"no weight named {name!r} (have {sorted(inst.weights)})")
    phi = inst.weights[name]
    if args.recheck:
        try:
            with open(args.recheck) as fh:
                evidence = json.load(fh)
        except (OSError, json.JSONDecodeError) as exc:
            raise _Exit(PARSE_ERROR, f"cannot read {args.recheck}: {exc}") from exc
        evidence = evidence.get("flat", {}).get("evidence", evidence)
        confirmed = cl.verify_refutation(phi, evidence)
        _emit({"weight": name, "refutation_confirmed": confirmed}, args.json,
              lambda d: f"refutation confirmed: {d['refutation_confirmed']}")
        return OK if confirmed else FAILURE
    payload = {"weight": name, **cl.classify_weight(phi, args.budget, args.seed)}
    _emit(payload, args.json, _render_flat)
    return OK


def cmd_completeness(args) -> int:
    inst = _load(args.path)
    report = cl.completeness(inst.category, args.mode, inst.weights.values(), args.budget, args.seed)
    _emit(report.to_dict(), args.json,
          lambda d: f"{d['mode']}: {d['complete']}" + "".join(f"\n  witness {json.dumps(w)}" for w in d["witnesses"]))
    return OK


def _values(text):
    return [float(v) for v in text.split(",") if v.strip()]


def cmd_gen(args) -> int:
    t = TNorm.parse(args.tnorm)
    if args.kind == "counterexample":
        c, phi, psi = idempotent_counterexample(t, args.a, args.b)
        inst = Instance(c, {"phi": phi}, {"psi": psi})
    elif args.kind == "min":
        if args.values is None:
            raise _Exit(FAILURE, "gen min needs --values")
        inst = Instance(min_category(t, _values(args.values)))
    elif args.kind == "final-prop":
        c, phi = final_prop_category(t, args.a, args.resolution)
        inst = Instance(c, {"phi": phi})
    else:
        rng = np.random.default_rng(args.seed)
        c = random_category(t, args.objects, rng)
        weights = {f"phi{k}": random_weight(c, rng) for k in range(3)}
        coweights = {f"psi{k}": random_coweight(c, rng) for k in range(2)}
        sequences = {f"seq{k}": random_sequence(c, rng) for k in range(2)}
        for d in (weights, coweights, sequences):
            for key, item in d.items():
                item.name = key
        inst = Instance(c, weights, coweights, sequences)
    inst.validate().raise_if_invalid()
    text = inst.dumps()
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return OK


# -- parser ------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="fuzzyorder", description="Finite ordered fuzzy sets over continuous t-norms.")
    sub = p.add_subparsers(dest="command", required=True)

    def with_common(sp, sampling=False):
        sp.add_argument("path")
        sp.add_argument("--json", action="store_true", help="print JSON instead of text")
        if sampling:
            sp.add_argument("--budget", type=int, default=1000, help="random samples for refutation search")
            sp.add_argument("--seed", type=int, default=0)
        return sp

    sp = with_common(sub.add_parser("validate", help="check every axiom of an instance file"))
    sp.set_defaults(func=cmd_validate)

    sp = with_common(sub.add_parser("classify", help="classify a weight or a sequence"), sampling=True)
    sp.add_argument("--weight")
    sp.add_argument("--seq")
    sp.add_argument("--recheck", metavar="EVIDENCE", help="re-verify a refutation payload (JSON file)")
    sp.set_defaults(func=cmd_classify)

    sp = with_common(sub.add_parser("completeness", help="audit one completeness notion"), sampling=True)
    sp.add_argument("--mode", choices=[m.value for m in cl.Mode], default="yoneda")
    sp.set_defaults(func=cmd_completeness)

    sp = sub.add_parser("gen", help="write an instance file")
    sp.add_argument("kind", choices=["counterexample", "min", "final-prop", "random"])
    sp.add_argument("--tnorm", default="godel", help="name or JSON descriptor")
    sp.add_argument("--a", type=float, default=0.5)
    sp.add_argument("--b", type=float, default=0.7)
    sp.add_argument("--values")
    sp.add_argument("--resolution", type=int, default=16)
    sp.add_argument("--objects", type=int, default=4)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_gen)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except _Exit as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code
    except (FuzzyOrderError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return FAILURE


if __name__ == "__main__":
    sys.exit(main())
