"""Command line front end.

Exit codes: 0 success, 1 input/config error, 2 containment violation of an
asserted property.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import bounds as B
from .errors import BadParameter, BicomplexError, ComponentDegenerate
from .poly import BCPoly, RootCase
from .roots import SolverConfig, bc_roots
from .verify import (MODELS, EnsembleConfig, VerificationReport, gershgorin_suite, parse_csv,
                     rows_to_csv, stress, verify_polynomial)

EXIT_OK, EXIT_INPUT, EXIT_VIOLATION = 0, 1, 2
MAX_INPUT_DEGREE = 12
SEED_ENV = "BCB_SEED"


class InputError(Exception):
    pass


def _reject_constant(name):
    raise InputError(f"non-finite number {name} in input")


def load_json(path: str):
    try:
        with (sys.stdin if path == "-" else open(path)) as fh:
            return json.load(fh, parse_constant=_reject_constant)
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: malformed JSON ({exc})") from exc
    except OSError as exc:
        raise InputError(f"{path}: {exc.strerror}") from exc


def load_polynomial(path: str) -> BCPoly:
    try:
        p = BCPoly.from_json(load_json(path))
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"{path}: {exc}") from exc
    if p.is_zero():
        raise InputError(f"{path}: zero polynomial")
    if p.degree > MAX_INPUT_DEGREE:
        raise InputError(f"{path}: degree {p.degree} exceeds limit {MAX_INPUT_DEGREE}")
    return p


def _solver(args) -> SolverConfig:
    return SolverConfig(max_iterations=args.max_iterations, residual_tol=args.residual_tol)


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
        if not text.endswith("\n"):
            sys.stdout.write("\n")


def cmd_roots(args) -> int:
    p = load_polynomial(args.file)
    rs = bc_roots(p, _solver(args))
    out = {"case": rs.case.value,
           "s1": None if rs.s1 is None else [[z.real, z.imag] for z in rs.s1],
           "s2": None if rs.s2 is None else [[z.real, z.imag] for z in rs.s2]}
    if rs.case is RootCase.CASE_I:
        out["roots"] = [{"root": list(z.quad), "norm": z.norm(),
                         "residual": p.evaluate(z).norm()} for z in rs.combined]
    elif rs.case is RootCase.CASE_III:
        out["roots"] = []
    else:
        side = "e" if rs.case is RootCase.CASE_II_F_ZERO else "e_dagger"
        out["roots"] = f"unbounded: any complex value on the {side} component"
    _emit(json.dumps(out, indent=1), args.out)
    return EXIT_OK


def _floats(text: str | None) -> list[float] | None:
    if text is None:
        return None
    return [float(x) for x in text.replace(",", " ").split()]


BOUND_CHOICES = ("cauchy", "lacunary", "lacunary-opt", "kojima", "ballieu", "positive-root",
                 "fujiwara", "walsh", "landau", "discus")


def cmd_bounds(args) -> int:
    p = load_polynomial(args.file)
    n = p.degree
    weights = _floats(args.weights)
    lambdas = _floats(args.lambdas)
    jobs = {
        "cauchy": lambda: B.cauchy_bound(p),
        "lacunary": lambda: B.lacunary_bound(p, args.r),
        "lacunary-opt": lambda: B.lacunary_bound_optimized(p),
        "kojima": lambda: B.kojima_like_bound(p),
        "ballieu": lambda: (B.ballieu_bound(p, weights) if weights is not None
                            else B.ballieu_unit(p)),
        "positive-root": lambda: B.positive_root_bound(p, normalized=args.normalized),
        "fujiwara": lambda: B.fujiwara_bound(
            p, lambdas if lambdas is not None else B.fujiwara_weights(n)),
        "walsh": lambda: B.walsh_region(p),
        "landau": lambda: B.landau_lower_bound(p, args.t),
        "discus": lambda: B.component_discus_bound(p, args.base),
    }
    results, errors = [], {}
    for kind in args.kinds or BOUND_CHOICES:
        try:
            results.append(jobs[kind]().to_json())
        except (BadParameter, ComponentDegenerate) as exc:
            errors[kind] = str(exc)
    _emit(json.dumps({"degree": n, "bounds": results, "errors": errors}, indent=1), args.out)
    return EXIT_OK


def cmd_verify(args) -> int:
    p = load_polynomial(args.file)
    rep = verify_polynomial(p, _solver(args), args.tol)
    _emit(rep.to_json() if args.format == "json" else rep.to_csv(), args.out)
    return EXIT_OK if rep.ok else EXIT_VIOLATION


def _seed(args) -> int:
    if args.seed is not None:
        return args.seed
    env = os.environ.get(SEED_ENV)
    if env is not None:
        try:
            return int(env)
        except ValueError as exc:
            raise InputError(f"{SEED_ENV}={env!r} is not an integer") from exc
    return 0


def _ensemble(args) -> EnsembleConfig:
    try:
        return EnsembleConfig(seed=_seed(args), trials=args.trials,
                              degree_min=args.degree_min, degree_max=args.degree_max,
                              coeff_scale=args.scale, coefficient_model=args.model)
    except ValueError as exc:
        raise InputError(f"bad ensemble configuration: {exc}") from exc


def cmd_stress(args) -> int:
    rep = stress(_ensemble(args), _solver(args), args.tol, include_roots=not args.no_roots)
    _emit(rep.to_json() if args.format == "json" else rep.to_csv(), args.out)
    s = rep.summary
    print(f"trials={len(rep.trials)} violations={rep.violation_count} "
          + " ".join(f"{k}:{v['violations']}" for k, v in s.items() if v["violations"]),
          file=sys.stderr)
    return EXIT_OK if rep.ok else EXIT_VIOLATION


def cmd_gershgorin(args) -> int:
    cfg = _ensemble(args)
    try:
        rep = gershgorin_suite(cfg, args.size, "diagonal" if args.diagonal else "dense",
                               _solver(args))
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    _emit(json.dumps(rep.to_dict(), indent=1), args.out)
    return EXIT_OK if rep.ok else EXIT_VIOLATION


def cmd_report(args) -> int:
    try:
        text = sys.stdin.read() if args.file == "-" else open(args.file).read()
    except OSError as exc:
        raise InputError(f"{args.file}: {exc.strerror}") from exc
    try:
        if text.lstrip().startswith("{"):
            rep = VerificationReport.from_json(text)
            rows = rep.rows()
        else:
            rep, rows = None, parse_csv(text)
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"{args.file}: not a verification report ({exc})") from exc
    if args.format == "json":
        _emit(rep.to_json() if rep is not None else json.dumps(rows, indent=1), args.out)
    else:
        _emit(rows_to_csv(rows), args.out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="bcbounds",
                                 description="Bicomplex polynomial zero bounds and their verification.")
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p, file=True):
        if file:
            p.add_argument("file", help="polynomial JSON ('-' for stdin)")
        p.add_argument("--out", help="write output here instead of stdout")
        p.add_argument("--max-iterations", type=int, default=SolverConfig.max_iterations)
        p.add_argument("--residual-tol", type=float, default=SolverConfig.residual_tol)

    def ensemble(p):
        p.add_argument("--seed", type=int, default=None, help=f"defaults to ${SEED_ENV} or 0")
        p.add_argument("--trials", type=int, default=100)
        p.add_argument("--scale", type=float, default=10.0)
        p.add_argument("--model", choices=MODELS, default="idempotent-split")

    p = sub.add_parser("roots", help="print the root structure of a polynomial")
    common(p)
    p.set_defaults(func=cmd_roots)

    p = sub.add_parser("bounds", help="compute zero bounds")
    common(p)
    p.add_argument("--kinds", nargs="+", choices=BOUND_CHOICES)
    p.add_argument("--r", type=float, default=1.0, help="lacunary radius parameter")
    p.add_argument("--t", type=float, default=1.0, help="lower-bound parameter")
    p.add_argument("--weights", help="Ballieu interior weights X_1..X_{n-1}")
    p.add_argument("--lambdas", help="Fujiwara weights summing to 1")
    p.add_argument("--base", choices=("cauchy", "positive_root"), default="cauchy")
    p.add_argument("--normalized", action="store_true",
                   help="positive-root bound on the monic normalisation")
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("verify", help="check every bound against the computed roots")
    common(p)
    p.add_argument("--tol", type=float, default=1e-9)
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("stress", help="random-ensemble certification of every bound")
    common(p, file=False)
    ensemble(p)
    p.add_argument("--degree-min", type=int, default=2)
    p.add_argument("--degree-max", type=int, default=8)
    p.add_argument("--tol", type=float, default=1e-9)
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.add_argument("--no-roots", action="store_true", help="omit per-trial root lists")
    p.set_defaults(func=cmd_stress)

    p = sub.add_parser("gershgorin", help="Gershgorin membership rates on random matrices")
    common(p, file=False)
    ensemble(p)
    p.add_argument("--size", type=int, default=6, help="largest matrix order (<= 6)")
    p.add_argument("--diagonal", action="store_true")
    p.set_defaults(func=cmd_gershgorin, degree_min=2, degree_max=8)

    p = sub.add_parser("report", help="convert a saved report between JSON and CSV")
    p.add_argument("file", nargs="?", default="-")
    p.add_argument("--format", choices=("json", "csv"), default="csv")
    p.add_argument("--out")
    p.set_defaults(func=cmd_report)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (InputError, BicomplexError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


cli_main = main

if __name__ == "__main__":
    sys.exit(main())
