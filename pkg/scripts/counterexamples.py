"""Small explicit inputs on which the same-row ball arguments break down."""

import math

import numpy as np

from bcbounds import bounds as B
from bcbounds.core import E, E_DAG
from bcbounds.linalg import check_gershgorin, gershgorin
from bcbounds.poly import BCPoly
from bcbounds.roots import bc_roots
from bcbounds.verify import fixed_counterexample_matrix


def gershgorin_matrix() -> None:
    a = fixed_counterexample_matrix()
    chk = check_gershgorin(a)
    print("[[e, e'], [0, 2e']]")
    for g in gershgorin(a):
        print(f"  row {g.row_index}: center {g.center}, ball radius {g.euclid_radius:.6f}, "
              f"discus radii {g.hyp_radii}")
    lam = E + 2 * E_DAG
    rec = next(r for r in chk.records if (r.eigenvalue - lam).norm() < 1e-12)
    print(f"  eigenvalue e + 2e': product region {rec.product_region}, "
          f"ball union {rec.ball_union}, discus union {rec.discus_union}")


def split_cubic() -> None:
    p = BCPoly.from_components([1j, 0, 0, 1], [0, 0, 4j, 1])
    top = bc_roots(p).max_root_norm()
    print("components b^3 + i and b^3 + 4i b^2")
    print(f"  largest root norm {top:.6f} (sqrt(8.5) = {math.sqrt(8.5):.6f})")
    for res in (B.lacunary_bound(p, 2.913), B.lacunary_bound_optimized(p),
                B.positive_root_bound(p, normalized=True), B.cauchy_bound(p),
                B.kojima_like_bound(p)):
        verdict = "contains" if top <= res.radius else "MISSES"
        print(f"  {res.kind.value:14s} radius {res.radius:.6f}  {verdict}")


def small_root() -> None:
    p = BCPoly.from_components([-1e-4, 0, 1], [-1, 10, 1])
    low = min(z.norm() for z in bc_roots(p).combined)
    print("components b^2 - 1e-4 and b^2 + 10 b - 1")
    for t in (0.5, 1.0, 2.0):
        r = B.landau_lower_bound(p, t).radius
        print(f"  t={t:g}: exterior radius {r:.6f}, smallest root norm {low:.6f}  "
              f"{'holds' if low >= r else 'FAILS'}")


if __name__ == "__main__":
    np.set_printoptions(precision=6)
    gershgorin_matrix()
    print()
    split_cubic()
    print()
    small_root()
