"""Stress every bound over each coefficient model and tabulate the results.

    python scripts/run_stress.py --trials 2000 --out results/
"""

import argparse
from pathlib import Path

from bcbounds.verify import MODELS, EnsembleConfig, stress


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--trials", type=int, default=1000)
    ap.add_argument("--degree-max", type=int, default=8)
    ap.add_argument("--models", nargs="+", choices=MODELS, default=list(MODELS))
    ap.add_argument("--out", type=Path, help="directory for JSON/CSV reports")
    args = ap.parse_args()

    for model in args.models:
        cfg = EnsembleConfig(seed=args.seed, trials=args.trials, degree_max=args.degree_max,
                             coefficient_model=model)
        rep = stress(cfg, include_roots=False)
        print(f"\n== {model}: {args.trials} trials, cases {rep.case_counts}")
        print(f"{'bound':24s} {'checked':>8s} {'viol':>6s} {'mean tight':>11s} {'max tight':>10s}")
        for label, s in rep.summary.items():
            mean = "-" if s["mean_tightness"] is None else f"{s['mean_tightness']:.4f}"
            top = "-" if s["max_tightness"] is None else f"{s['max_tightness']:.4f}"
            print(f"{label:24s} {s['checked']:8d} {s['violations']:6d} {mean:>11s} {top:>10s}")
        if args.out:
            args.out.mkdir(parents=True, exist_ok=True)
            (args.out / f"stress_{model}.json").write_text(rep.to_json())
            (args.out / f"stress_{model}.csv").write_text(rep.to_csv())


if __name__ == "__main__":
    main()
