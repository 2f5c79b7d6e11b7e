"""Command-line front end.

Subcommands
-----------
``fit``       ingest points (or a saved moment file), run one of the fitting
              algorithms, print the result.
``analyze``   decide whether a polynomial (or a whole curve family) admits
              the gradient-weight reduction; print verdict plus witness or
              certificate.
``generate``  write synthetic noisy samples of a curve family as CSV.
``bench``     time reduced vs reweight fits across dataset sizes.

Exit codes are stable per error class so scripts can branch on them:

====  =======================================================
code  meaning
====  =======================================================
0     success (fits: converged)
1     unexpected error
2     usage error
3     ParseError                (malformed text input)
4     NonFiniteValue / NonFiniteInput
5     InvalidSpec
6     NoCircle / DegenerateData
7     fit finished without converging
8     GradientVanishesAtSample
9     NumericalFailure
10    BoundExhausted            (analysis inconclusive)
11    ImaginaryRadius
12    DegreeMismatch
13    CenterHitsDataPoint
14    DegenerateInput / DegenerateElimination
====  =======================================================

``GRADFIT_SEED`` provides the default seed wherever ``--seed`` is accepted.
Structured output (``--json``) is byte-identical across runs with the same
seed and flags, apart from the ``*_seconds`` timing fields.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from functools import reduce

import numpy as np

from . import moments as moments_mod
from .analyzer import analyze_family, decide_reduction
from .bench import run_bench
from .datagen import SyntheticSpec, generate, ingest, write_points
from .errors import (BoundExhausted, CenterHitsDataPoint, DegenerateData,
                     DegenerateElimination, DegenerateInput, DegreeMismatch,
                     GradfitError, GradientVanishesAtSample, ImaginaryRadius,
                     InvalidRadius, InvalidSpec, NoCircle, NonFiniteInput,
                     NonFiniteValue, NumericalFailure, ParseError)
from .families import FAMILIES, get_family
from .fitters import (CircleParams, FitConfig, fit_circle_geometric,
                      fit_circle_reduced, fit_conic_reweight,
                      fit_reduced_generic)
from .moments import MomentVector
from .poly import format_poly, parse_poly

_EXIT_CODES = {
    ParseError: 3,
    NonFiniteValue: 4,
    NonFiniteInput: 4,
    InvalidSpec: 5,
    InvalidRadius: 5,
    NoCircle: 6,
    DegenerateData: 6,
    GradientVanishesAtSample: 8,
    NumericalFailure: 9,
    BoundExhausted: 10,
    ImaginaryRadius: 11,
    DegreeMismatch: 12,
    CenterHitsDataPoint: 13,
    DegenerateInput: 14,
    DegenerateElimination: 14,
    GradfitError: 1,
}

EXIT_NOT_CONVERGED = 7


def exit_code_for(exc: BaseException) -> int:
    for cls in type(exc).__mro__:
        if cls in _EXIT_CODES:
            return _EXIT_CODES[cls]
    return 1


def _default_seed():
    raw = os.environ.get("GRADFIT_SEED")
    return int(raw) if raw else None


def _emit_json(obj) -> None:
    print(json.dumps(obj, indent=2, sort_keys=True))


# ---------------------------------------------------------------------------
# fit
# ---------------------------------------------------------------------------


def _accumulate(points: np.ndarray, degree: int, workers: int) -> MomentVector:
    centroid = (float(points[:, 0].mean()), float(points[:, 1].mean()))
    if workers <= 1:
        return MomentVector.from_points(points, degree, offset=centroid)
    chunks = [c for c in np.array_split(points, workers) if len(c)]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        parts = list(pool.map(
            lambda c: MomentVector.from_points(c, degree, offset=centroid),
            chunks))
    return reduce(moments_mod.merge, parts)


def _circle_certificate():
    # certificate template at the unit circle; the generic fitter re-solves
    # the weight at every iterate, only the ansatz degree is carried over
    fam = get_family("circle")
    P = fam.poly({"a": 0.0, "b": 0.0, "R": 1.0}, exact=True)
    decision = decide_reduction(P)
    if not decision.admissible or decision.certificate is None:
        raise NumericalFailure("no certificate for the circle template")
    return decision.certificate


def _fit_config(args) -> FitConfig:
    return FitConfig(max_iterations=args.max_iterations,
                     gradient_tol=args.gradient_tol,
                     step_tol=args.step_tol)


def cmd_fit(args) -> int:
    needs_points = args.algo in ("geometric", "reweight")
    mv = None
    points = None
    if args.moments:
        if needs_points:
            raise InvalidSpec(
                f"--algo {args.algo} reads raw points, not a moment file")
        if args.input:
            raise InvalidSpec("give either a point file or --moments, not both")
        mv = MomentVector.load(args.moments)
    else:
        if not args.input:
            raise InvalidSpec("no input: give a point file or --moments")
        points = np.asarray(ingest(args.input), dtype=float)
    if args.algo in ("reduced", "generic") and args.family != "circle":
        raise InvalidSpec(f"--algo {args.algo} supports --family circle only")
    if args.algo == "geometric" and args.family != "circle":
        raise InvalidSpec("--algo geometric supports --family circle only")

    if mv is None and args.algo in ("reduced", "generic"):
        mv = _accumulate(points, 4, args.parallel)
    if args.save_moments:
        if mv is None:
            raise InvalidSpec(
                "--save-moments needs a moment-based algorithm (reduced, generic)")
        mv.dump(args.save_moments)

    cfg = _fit_config(args)
    if args.algo == "reduced":
        result = fit_circle_reduced(mv, cfg)
    elif args.algo == "generic":
        result = fit_reduced_generic(get_family("circle"),
                                     _circle_certificate(), mv, cfg)
    elif args.algo == "geometric":
        result = fit_circle_geometric(points, cfg=cfg)
    else:
        result = fit_conic_reweight(points, cfg)

    if args.json:
        blob = result.to_dict()
        blob["algorithm"] = args.algo
        _emit_json(blob)
    else:
        print(f"family: {result.family}")
        print(f"algorithm: {args.algo}")
        print(f"converged: {'yes' if result.converged else 'no'}")
        print(f"iterations: {result.iterations}")
        print(f"objective: {result.objective:.12e}")
        print(f"data passes: {result.data_passes}")
        for name, value in result.params.to_dict().items():
            print(f"{name} = {value:.12g}")
    return 0 if result.converged else EXIT_NOT_CONVERGED


# ---------------------------------------------------------------------------
# analyze
# ---------------------------------------------------------------------------


def _print_decision(decision) -> None:
    print("ADMISSIBLE" if decision.admissible else "NOT ADMISSIBLE")
    if decision.witness is not None:
        w = decision.witness
        print(f"witness: x = {w.x}, y = {w.y}")
        print(f"residuals: P {w.residual_P:.3e}, Q {w.residual_Q:.3e}")
    if decision.certificate is not None:
        c = decision.certificate
        print(f"certificate degree: {c.degree}")
        print(f"U = {format_poly(c.U)}")
        print(f"W = {format_poly(c.W)}")
        print(f"identity residual: {c.identity_residual:.3e}")


def cmd_analyze(args) -> int:
    if (args.poly is None) == (args.family is None):
        raise InvalidSpec("give a polynomial or --family, not both or neither")
    if args.poly is not None:
        P = parse_poly(args.poly, exact=not args.float)
        decision = decide_reduction(P, max_degree=args.max_degree)
        if args.json:
            _emit_json(decision.to_dict())
        else:
            _print_decision(decision)
        return 0
    fam = get_family(args.family)
    rng = np.random.default_rng(args.seed)
    report = analyze_family(fam, args.samples, rng=rng, exact=not args.float,
                            max_degree=args.max_degree, workers=args.parallel)
    if args.json:
        _emit_json(report.to_dict())
    else:
        print(f"family: {report.family}")
        print(f"samples: {len(report.samples)}")
        print(f"consistent: {'yes' if report.consistent else 'no'}")
        print(f"verdict: {report.verdict}")
        first = report.samples[0]
        if first.witness is not None:
            print(f"sample witness: x = {first.witness.x}, "
                  f"y = {first.witness.y}")
        if first.certificate is not None:
            print(f"sample certificate: W = {format_poly(first.certificate.W)}")
    return 0 if report.verdict in ("admissible", "not_admissible") else 10


# ---------------------------------------------------------------------------
# generate
# ---------------------------------------------------------------------------


def _parse_theta(pairs) -> dict:
    theta = {}
    for item in pairs:
        key, eq, value = item.partition("=")
        if not eq or not key:
            raise InvalidSpec(f"expected name=value, got {item!r}")
        try:
            theta[key] = float(value)
        except ValueError:
            raise InvalidSpec(f"parameter {key}: bad number {value!r}") from None
    return theta


def cmd_generate(args) -> int:
    fam = get_family(args.family)
    if args.random_params:
        if args.params:
            raise InvalidSpec("give --params or --random-params, not both")
        theta = fam.sample_theta(np.random.default_rng(args.seed))
    else:
        if not args.params:
            raise InvalidSpec("no parameters: give --params or --random-params")
        theta = _parse_theta(args.params)
    arc = tuple(args.arc) if args.arc else None
    spec = SyntheticSpec(args.family, theta, n=args.n, sigma=args.sigma,
                         arc=arc, seed=args.seed)
    pts = generate(spec)
    if args.json:
        _emit_json({"spec": {"family": spec.family, "theta": dict(spec.theta),
                             "n": spec.n, "sigma": spec.sigma,
                             "arc": list(spec.t_range()), "seed": spec.seed},
                    "points": [[float(x), float(y)] for x, y in pts]})
        return 0
    header = [f"family={args.family} "
              + " ".join(f"{k}={theta[k]:.12g}" for k in fam.param_names),
              f"n={args.n} sigma={args.sigma} seed={args.seed}"]
    if args.output:
        write_points(args.output, pts, header="\n".join(header))
    else:
        for line in header:
            print(f"# {line}")
        for x, y in pts:
            print(f"{float(x)!r},{float(y)!r}")
    return 0


# ---------------------------------------------------------------------------
# bench
# ---------------------------------------------------------------------------


def cmd_bench(args) -> int:
    report = run_bench(args.n, repetitions=args.reps,
                       seed=args.seed if args.seed is not None else 0,
                       sigma=args.sigma)
    if args.json:
        _emit_json(report.to_dict())
    else:
        print(report.table())
    return 0


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gradfit",
        description="Gradient-weighted algebraic curve fitting tools.")
    sub = parser.add_subparsers(dest="command", required=True)
    seed_default = _default_seed()

    p_fit = sub.add_parser("fit", help="fit a curve to points")
    p_fit.add_argument("input", nargs="?", help="CSV file of x,y lines")
    p_fit.add_argument("--family", default="circle", choices=sorted(FAMILIES))
    p_fit.add_argument("--algo", default="reduced",
                       choices=("reduced", "geometric", "reweight", "generic"))
    p_fit.add_argument("--moments", metavar="FILE",
                       help="fit from a saved moment file instead of points")
    p_fit.add_argument("--save-moments", metavar="FILE",
                       help="serialize the accumulated moments")
    p_fit.add_argument("--parallel", type=int, default=0, metavar="N",
                       help="accumulate moments in N merged chunks")
    p_fit.add_argument("--max-iterations", type=int, default=100)
    p_fit.add_argument("--gradient-tol", type=float, default=1e-10)
    p_fit.add_argument("--step-tol", type=float, default=1e-12)
    p_fit.add_argument("--json", action="store_true")
    p_fit.set_defaults(func=cmd_fit)

    p_an = sub.add_parser("analyze",
                          help="decide gradient-weight reducibility")
    p_an.add_argument("poly", nargs="?",
                      help="polynomial in x and y, e.g. '1 x^2 + 1 y^2 - 1'")
    p_an.add_argument("--family", choices=sorted(FAMILIES))
    p_an.add_argument("--samples", type=int, default=5)
    p_an.add_argument("--max-degree", type=int, default=None)
    p_an.add_argument("--float", action="store_true",
                      help="use floating-point elimination instead of exact")
    p_an.add_argument("--seed", type=int, default=seed_default)
    p_an.add_argument("--parallel", type=int, default=0)
    p_an.add_argument("--json", action="store_true")
    p_an.set_defaults(func=cmd_analyze)

    p_gen = sub.add_parser("generate", help="write synthetic curve samples")
    p_gen.add_argument("--family", default="circle", choices=sorted(FAMILIES))
    p_gen.add_argument("--params", nargs="+", metavar="NAME=VALUE")
    p_gen.add_argument("--random-params", action="store_true")
    p_gen.add_argument("--n", type=int, default=100)
    p_gen.add_argument("--sigma", type=float, default=0.0)
    p_gen.add_argument("--arc", type=float, nargs=2, metavar=("LO", "HI"))
    p_gen.add_argument("--seed", type=int, default=seed_default)
    p_gen.add_argument("--output", metavar="FILE")
    p_gen.add_argument("--json", action="store_true")
    p_gen.set_defaults(func=cmd_generate)

    p_bench = sub.add_parser("bench", help="time reduced vs reweight fits")
    p_bench.add_argument("--n", type=int, nargs="+",
                         default=[1000, 10000, 100000])
    p_bench.add_argument("--reps", type=int, default=5)
    p_bench.add_argument("--sigma", type=float, default=0.01)
    p_bench.add_argument("--seed", type=int, default=seed_default)
    p_bench.add_argument("--json", action="store_true")
    p_bench.set_defaults(func=cmd_bench)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse: 2 on usage error, 0 on --help
        return 0 if exc.code in (0, None) else int(exc.code)
    try:
        return args.func(args)
    except GradfitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exit_code_for(exc)


if __name__ == "__main__":
    sys.exit(main())
