"""Command-line front end.

    subordination threshold --target exponential --A 1 --B 0
    subordination verify --target cardioid --A 1 --B -0.5 --beta 0.7
    subordination curve --function qbeta --A 1 --B -0.5 --beta 0.7 --out q.csv
    subordination admissible third --kind janowski --form linear --alpha 1 --beta 2
    subordination starlike --coeffs 1,0.1 --beta 1 --A 1 --B 0
    subordination selftest

Exit status: 0 success, 1 failed verification, 2 invalid parameters.
"""

from __future__ import annotations

import argparse
import csv
import json
import math
import sys
from dataclasses import dataclass

from . import admissibility as adm
from .dominant import DominantSpec, JanowskiParams
from .errors import DomainError, InadmissibleSample, NoFiniteThreshold, ZeroEncountered
from .targets import Tag, TargetFunction, target_boundary_curve
from .thresholds import endpoint_chain, sharp_threshold
from .verify import TaylorFunction, dominant_boundary_curve, is_subordinate_numeric, starlike_premise

FORMATS = ("json", "csv", "text")


@dataclass(frozen=True)
class RunConfig:
    tolerance: float = 1e-10
    samples: int = 2048
    seed: int = 0
    output_format: str = "json"

    def __post_init__(self):
        if not self.tolerance > 0:
            raise ValueError("tolerance > 0 violated")
        if self.samples < 1:
            raise ValueError("samples >= 1 violated")
        if self.output_format not in FORMATS:
            raise ValueError(f"output format must be one of {FORMATS}")


class UsageError(Exception):
    pass


def fmt_number(x) -> str:
    if x is None:
        return "null"
    if isinstance(x, bool):
        return "true" if x else "false"
    if isinstance(x, int):
        return str(x)
    if isinstance(x, float):
        if math.isnan(x) or math.isinf(x):
            return json.dumps(str(x))
        return format(x, ".17g")
    return json.dumps(str(x))


def render(record: dict, fmt: str) -> str:
    if fmt == "json":
        body = ", ".join(f"{json.dumps(k)}: {fmt_number(v)}" for k, v in record.items())
        return "{" + body + "}\n"
    cells = {k: fmt_number(v).strip('"') for k, v in record.items()}
    if fmt == "csv":
        return ",".join(cells) + "\n" + ",".join(cells.values()) + "\n"
    return "".join(f"{k}: {v}\n" for k, v in cells.items())


def write_curve_csv(path: str, curve) -> None:
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(["theta", "re", "im"])
        for th, re, im in curve.rows():
            w.writerow([format(th, ".17g"), format(re, ".17g"), format(im, ".17g")])


def read_curve_csv(path: str):
    with open(path, newline="") as fh:
        rows = list(csv.DictReader(fh))
    return [(float(r["theta"]), complex(float(r["re"]), float(r["im"]))) for r in rows]


def _target(args) -> TargetFunction:
    if args.target == Tag.JANOWSKI.value:
        if args.A is None or args.B is None:
            raise UsageError("janowski target needs --A and --B")
        return TargetFunction.janowski(args.A, args.B)
    return TargetFunction(args.target)


def _params(args) -> JanowskiParams:
    if args.A is None or args.B is None:
        raise UsageError("--A and --B are required")
    return JanowskiParams(args.A, args.B)


def cmd_threshold(args, cfg: RunConfig):
    r = sharp_threshold(_target(args), _params(args), cfg.tolerance)
    return r.record(), 0


def cmd_verify(args, cfg: RunConfig):
    t, p = _target(args), _params(args)
    d = DominantSpec(args.beta, p)
    contained, margin = is_subordinate_numeric(
        dominant_boundary_curve(d, cfg.samples), target_boundary_curve(t, cfg.samples)
    )
    chain = endpoint_chain(t, p, args.beta)
    rec = {"target": t.name, "A": p.A, "B": p.B, "beta": args.beta,
           "chain": chain, "contained": contained, "margin": margin}
    return rec, 0 if contained else 1


def cmd_curve(args, cfg: RunConfig):
    if args.function == "qbeta":
        if args.beta is None:
            raise UsageError("qbeta curve needs --beta")
        curve = dominant_boundary_curve(DominantSpec(args.beta, _params(args)), cfg.samples)
        name = "qbeta"
    else:
        if args.target is None:
            raise UsageError("target curve needs --target")
        t = _target(args)
        curve = target_boundary_curve(t, cfg.samples)
        name = t.name
    write_curve_csv(args.out, curve)
    return {"function": name, "samples": len(curve), "radius": curve.radius, "out": args.out}, 0


def cmd_admissible(args, cfg: RunConfig):
    if args.order == "second":
        samples = adm.sample_admissible(cfg.samples, False, args.slack, cfg.seed)
        ok, lo = adm.check_second_order(args.alpha, samples)
        return {"order": "second", "alpha": args.alpha, "passed": ok,
                "min_abs_psi_minus_1": lo, "required": adm.EXP_RADIUS}, 0 if ok else 1

    if args.kind is None or args.form is None or args.beta is None:
        raise UsageError("third-order checks need --kind, --form and --beta")
    q = adm.SufficiencyQuery(args.kind, args.form, args.alpha, args.beta,
                             args.gamma or 0.0, args.A if args.A is not None else 1.0, args.beta0)
    rec = {"order": "third", "kind": q.kind.value, "form": q.form.value,
           "alpha": q.alpha, "beta": q.beta}
    condition = True
    if q.form is adm.Form.LINEAR:
        gmin = adm.sufficient_threshold(q)
        rec["gamma_min"] = gmin
        if args.gamma is None:
            q = q.with_gamma(gmin)
        rec["gamma"] = q.gamma
        condition = q.gamma >= gmin
    else:
        cond = adm.sufficient_threshold(q)
        rec.update(case=cond.case, condition_value=cond.value)
        condition = cond.passed
    samples = adm.sample_admissible(cfg.samples, True, args.slack, cfg.seed)
    rep = adm.verify_sufficiency(q, samples)
    rec.update(condition=condition, passed=rep.passed, min_value=rep.min_value,
               required=rep.required, chain_ok=rep.chain_ok)
    return rec, 0 if rep.passed else 1


def cmd_starlike(args, cfg: RunConfig):
    try:
        coeffs = [complex(c.replace("i", "j")) for c in args.coeffs.split(",")]
    except ValueError:
        raise UsageError(f"cannot parse --coeffs {args.coeffs!r}")
    if coeffs and coeffs[0].imag == 0:
        coeffs[0] = coeffs[0].real
    f = TaylorFunction.class_a(coeffs)
    res = starlike_premise(f, args.beta, _params(args), cfg.samples, args.radius)
    rec = {"beta": args.beta, "A": args.A, "B": args.B, "inside": res.inside,
           "margin": res.margin, "identity_error": res.identity_error}
    return rec, 0 if res.inside else 1


def cmd_selftest(args, cfg: RunConfig):
    from .acceptance import run_all

    results = run_all(sys.stdout, sys.stderr)
    return None, 0 if all(c.passed for c in results) else 1


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--tol", type=float, default=1e-10, help="solver tolerance")
    common.add_argument("--samples", type=int, default=2048)
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--format", choices=FORMATS, default="json")

    tags = [t.value for t in Tag]
    parser = argparse.ArgumentParser(prog="subordination", description=__doc__.split("\n")[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("threshold", parents=[common], help="sharp beta threshold")
    p.add_argument("--target", choices=tags, required=True)
    p.add_argument("--A", type=float, required=True)
    p.add_argument("--B", type=float, required=True)
    p.set_defaults(func=cmd_threshold)

    p = sub.add_parser("verify", parents=[common], help="boundary containment of q_beta in P")
    p.add_argument("--target", choices=tags, required=True)
    p.add_argument("--A", type=float, required=True)
    p.add_argument("--B", type=float, required=True)
    p.add_argument("--beta", type=float, required=True)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("curve", parents=[common], help="export a boundary curve as CSV")
    p.add_argument("--function", choices=("qbeta", "target"), required=True)
    p.add_argument("--target", choices=tags)
    p.add_argument("--A", type=float)
    p.add_argument("--B", type=float)
    p.add_argument("--beta", type=float)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_curve)

    p = sub.add_parser("admissible", parents=[common], help="admissibility sufficiency checks")
    p.add_argument("order", choices=("second", "third"))
    p.add_argument("--kind", choices=[k.value for k in adm.Kind])
    p.add_argument("--form", choices=[f.value for f in adm.Form])
    p.add_argument("--alpha", type=float, required=True)
    p.add_argument("--beta", type=float)
    p.add_argument("--gamma", type=float)
    p.add_argument("--A", type=float, help="disk radius for --kind janowski")
    p.add_argument("--beta0", type=float, default=adm.BETA0)
    p.add_argument("--slack", type=float, default=0.0)
    p.set_defaults(func=cmd_admissible)

    p = sub.add_parser("starlike", parents=[common], help="starlikeness premise for p = zf'/f")
    p.add_argument("--coeffs", required=True, help="a_1,a_2,... of f (a_1 = 1)")
    p.add_argument("--beta", type=float, required=True)
    p.add_argument("--A", type=float, required=True)
    p.add_argument("--B", type=float, required=True)
    p.add_argument("--radius", type=float, default=0.99)
    p.set_defaults(func=cmd_starlike, samples=360)

    p = sub.add_parser("selftest", help="run the acceptance suite")
    p.set_defaults(func=cmd_selftest, tol=1e-10, samples=2048, seed=0, format="text")
    return parser


def run_command(argv=None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        cfg = RunConfig(args.tol, args.samples, args.seed, args.format)
        record, code = args.func(args, cfg)
    except (DomainError, InadmissibleSample, UsageError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (NoFiniteThreshold, ZeroEncountered) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    if record is not None:
        out.write(render(record, cfg.output_format))
    return code


def main():
    sys.exit(run_command())
