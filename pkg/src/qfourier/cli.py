"""Command-line front end.

Exit codes: 0 success, 2 validation or usage error, 3 infeasible C,
1 anything unexpected.
"""
from __future__ import annotations

import argparse
import json
import math
import sys
from pathlib import Path

import numpy as np

from . import analysis, superposition
from .circuit import full_decompose, gate_census, to_qasm
from .compiler import (assemble, compile_plan, dump_json, encode_input, load_plan,
                       load_series)
from .errors import InfeasibleError, ValidationError
from .sampler import sample_bernoulli, sample_shots

EXIT_OK, EXIT_INTERNAL, EXIT_VALIDATION, EXIT_INFEASIBLE = 0, 1, 2, 3


def _emit(text, out):
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _census_line(cen):
    return " ".join(f"{k}={v}" for k, v in cen.as_dict().items() if v)


def cmd_compile(args):
    series = load_series(args.series)
    plan = compile_plan(series, c=args.pin_c)
    dump_json(plan, args.out)
    pre, post = analysis.census_pair(plan)
    book = analysis.complexity_bookkeeping(plan)
    print(f"C = {plan.C:.17g}")
    print(f"residual weight = {plan.residual_weight:.17g}")
    print("label  n  sign  gamma                 beta_k")
    for i, s in enumerate(plan.slots):
        print(f"{i:5d} {s.n:2d} {s.sign:+5d}  {s.gamma:.17g}  {s.beta[-1]:.12g}")
    print(f"census: {_census_line(pre)}")
    print(f"census (decomposed): {_census_line(post)}")
    print("bookkeeping: " + " ".join(f"{k}={v}" for k, v in book.items()))
    return EXIT_OK


def cmd_sweep(args):
    if args.steps < 2:
        raise ValidationError("steps must be >= 2")
    if not args.xmax > args.xmin:
        raise ValidationError("need xmax > xmin")
    plan = load_plan(args.plan)
    _emit(analysis.sweep(plan, args.xmin, args.xmax, args.steps).to_csv(), args.out)
    return EXIT_OK


def cmd_shots(args):
    plan = load_plan(args.plan)
    circ = assemble(plan)
    rec = sample_shots(circ, args.x, plan.layout.readout, args.shots, args.seed,
                       angle=float(plan.input_angle(args.x)))
    print(rec.to_json())
    return EXIT_OK


def cmd_superpose(args):
    if args.steps < 2:
        raise ValidationError("steps must be >= 2")
    if args.shots is not None and args.seed is None:
        raise ValidationError("--shots needs --seed")
    slot = superposition.u3_slot(args.beta)
    if args.sweep == "theta":
        lo, hi = (0.0, 2 * math.pi) if args.min is None else (args.min, args.max)
    else:
        lo, hi = (0.0, math.pi) if args.min is None else (args.min, args.max)
    if hi is None or not hi > lo:
        raise ValidationError("need max > min")
    cols = [args.sweep, "p0_sim", "p0_theory"] + (["p0_hat"] if args.shots else [])
    lines = [",".join(cols)]
    for i, v in enumerate(np.linspace(lo, hi, args.steps)):
        if args.sweep == "theta":
            x0, x1, th = args.x0, args.x1, v
        else:
            x0, x1, th = args.x0, v, args.theta
        sim = superposition.p0_simulated(x0, x1, th, slot)
        row = [v, sim, float(superposition.p0_theory(x0, x1, th, slot))]
        if args.shots:
            row.append(1 - sample_bernoulli(1 - sim, args.shots, args.seed + i) / args.shots)
        lines.append(",".join(f"{r:.17g}" for r in row))
    _emit("\n".join(lines) + "\n", args.out)
    return EXIT_OK


def cmd_gatecount(args):
    plan = load_plan(args.plan)
    circ = assemble(plan)
    if args.decomposed:
        circ = full_decompose(circ)
    print(json.dumps(gate_census(circ).as_dict()))
    return EXIT_OK


def cmd_export_qasm(args):
    plan = load_plan(args.plan)
    circ = encode_input(plan.layout, float(plan.input_angle(args.x))).compose(assemble(plan))
    _emit(to_qasm(full_decompose(circ), measure=plan.layout.readout,
                  define_cry=args.define_cry), args.out)
    return EXIT_OK


def build_parser():
    p = argparse.ArgumentParser(prog="qfourier", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("compile", help="compile a series JSON into a plan JSON")
    s.add_argument("--series", required=True)
    s.add_argument("--out", required=True)
    s.add_argument("--pin-c", type=float, default=None)
    s.set_defaults(func=cmd_compile)

    s = sub.add_parser("sweep", help="simulated vs theoretical P1 over an x range")
    s.add_argument("--plan", required=True)
    s.add_argument("--xmin", type=float, required=True)
    s.add_argument("--xmax", type=float, required=True)
    s.add_argument("--steps", type=int, required=True)
    s.add_argument("--out")
    s.set_defaults(func=cmd_sweep)

    s = sub.add_parser("shots", help="seeded shot sampling at one x")
    s.add_argument("--plan", required=True)
    s.add_argument("--x", type=float, required=True)
    s.add_argument("--shots", type=int, required=True)
    s.add_argument("--seed", type=int, required=True)
    s.set_defaults(func=cmd_shots)

    s = sub.add_parser("superpose", help="superposed-input experiment with a U_3 chain")
    s.add_argument("--x0", type=float, required=True)
    s.add_argument("--x1", type=float, required=True)
    s.add_argument("--sweep", choices=("x1", "theta"), required=True)
    s.add_argument("--steps", type=int, required=True)
    s.add_argument("--theta", type=float, default=math.pi, help="fixed theta for x1 sweeps")
    s.add_argument("--min", type=float)
    s.add_argument("--max", type=float)
    s.add_argument("--beta", type=float, default=superposition.U3_BETA)
    s.add_argument("--shots", type=int)
    s.add_argument("--seed", type=int)
    s.add_argument("--out")
    s.set_defaults(func=cmd_superpose)

    s = sub.add_parser("gatecount", help="gate census of the assembled circuit")
    s.add_argument("--plan", required=True)
    s.add_argument("--decomposed", action="store_true")
    s.set_defaults(func=cmd_gatecount)

    s = sub.add_parser("export-qasm", help="OpenQASM 2.0 of the lowered circuit")
    s.add_argument("--plan", required=True)
    s.add_argument("--out")
    s.add_argument("--x", type=float, default=0.0, help="input value to load")
    s.add_argument("--define-cry", action="store_true")
    s.set_defaults(func=cmd_export_qasm)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InfeasibleError as exc:
        print(f"infeasible: {exc}", file=sys.stderr)
        return EXIT_INFEASIBLE
    except (ValidationError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    except Exception as exc:  # pragma: no cover - last resort
        print(f"internal error: {exc!r}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
