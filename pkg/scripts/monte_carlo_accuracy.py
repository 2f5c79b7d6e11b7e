"""Monte-Carlo accuracy study: reduced circle fit vs the geometric baseline.

Repeatedly draws noisy samples of a known circle, fits both ways, and reports
per-parameter bias and RMSE plus the mean parameter gap between the two
estimators.  At small noise the two should agree to O(sigma^2) while the
reduced fit touches the data exactly once.

Usage:
    python scripts/monte_carlo_accuracy.py
    python scripts/monte_carlo_accuracy.py --sigma 0.002 0.01 0.05 --trials 300
"""

import argparse
import sys

import numpy as np

from gradfit.datagen import SyntheticSpec, generate
from gradfit.fitters import fit_circle_geometric, fit_circle_reduced
from gradfit.moments import MomentVector

TRUE = {"a": 0.3, "b": -0.2, "R": 1.0}


def run_level(sigma, n, trials, seed):
    red_err, geo_err, gaps = [], [], []
    for i in range(trials):
        pts = generate(SyntheticSpec("circle", TRUE, n=n, sigma=sigma,
                                     seed=seed + i))
        centroid = (float(pts[:, 0].mean()), float(pts[:, 1].mean()))
        mv = MomentVector.from_points(pts, 4, offset=centroid)
        red = fit_circle_reduced(mv).params
        geo = fit_circle_geometric(pts).params
        red_err.append([red.a - TRUE["a"], red.b - TRUE["b"],
                        red.R - TRUE["R"]])
        geo_err.append([geo.a - TRUE["a"], geo.b - TRUE["b"],
                        geo.R - TRUE["R"]])
        gaps.append(max(abs(red.a - geo.a), abs(red.b - geo.b),
                        abs(red.R - geo.R)))
    red_err = np.asarray(red_err)
    geo_err = np.asarray(geo_err)
    return {
        "sigma": sigma,
        "red_rmse": np.sqrt(np.mean(red_err ** 2, axis=0)),
        "geo_rmse": np.sqrt(np.mean(geo_err ** 2, axis=0)),
        "red_bias": np.mean(red_err, axis=0),
        "mean_gap": float(np.mean(gaps)),
    }


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--sigma", type=float, nargs="+",
                    default=[0.002, 0.01, 0.05])
    ap.add_argument("--n", type=int, default=50)
    ap.add_argument("--trials", type=int, default=500)
    ap.add_argument("--seed", type=int, default=40000)
    args = ap.parse_args(argv)

    print(f"true circle a={TRUE['a']} b={TRUE['b']} R={TRUE['R']}, "
          f"n={args.n}, {args.trials} trials per level")
    head = (f"{'sigma':>8} {'rmse(R) red':>12} {'rmse(R) geo':>12} "
            f"{'|bias| max':>11} {'mean gap':>10} {'10*sigma^2':>11}")
    print(head)
    print("-" * len(head))
    for sigma in args.sigma:
        row = run_level(sigma, args.n, args.trials, args.seed)
        print(f"{sigma:>8.4f} {row['red_rmse'][2]:>12.2e} "
              f"{row['geo_rmse'][2]:>12.2e} "
              f"{np.abs(row['red_bias']).max():>11.2e} "
              f"{row['mean_gap']:>10.2e} {10 * sigma ** 2:>11.2e}")
    print()
    print("reading guide: both estimators track sigma/sqrt(n); their mutual")
    print("gap shrinks like sigma^2, so at desk noise levels the one-pass")
    print("reduced fit is statistically interchangeable with the geometric "
          "one.")
    return 0


if __name__ == "__main__":
    sys.exit(main())
