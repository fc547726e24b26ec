"""Gershgorin membership rates for each coefficient model and matrix structure."""

import argparse

from bcbounds.verify import MODELS, EnsembleConfig, gershgorin_suite


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--trials", type=int, default=500)
    ap.add_argument("--size", type=int, default=6)
    args = ap.parse_args()

    print(f"{'model':18s} {'structure':9s} {'eigs':>6s} {'product':>8s} {'ball':>8s} {'discus':>8s}")
    for model in MODELS:
        for structure in ("dense", "diagonal"):
            cfg = EnsembleConfig(seed=args.seed, trials=args.trials, coefficient_model=model)
            rep = gershgorin_suite(cfg, args.size, structure)
            print(f"{model:18s} {structure:9s} {rep.eigenvalues:6d} "
                  f"{rep.product_region_rate:8.2%} {rep.ball_union_rate:8.2%} "
                  f"{rep.discus_union_rate:8.2%}")


if __name__ == "__main__":
    main()
