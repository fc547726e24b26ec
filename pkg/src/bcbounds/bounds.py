"""Zero-localisation bounds for bicomplex polynomials.

Every bound needs an invertible leading coefficient ``A_n``.  Coefficient
ratios are bicomplex quotients normed afterwards,
``W_i = |A_i * A_n^{-1}|``, which are the moduli of the last-row entries of
the companion matrix of the monic normalisation.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field

import numpy as np

from .core import ZERO, BiComplex, Region, RegionKind
from .errors import (BadParameter, ComponentDegenerate, DegenerateAllZero,
                     NonInvertibleLeading, ZeroDegree)
from .poly import BCPoly
from .roots import positive_root, trim

GOLDEN = (math.sqrt(5) - 1) / 2
LACUNARY_R_MIN = 1e-6
LACUNARY_ITERATIONS = 200


class BoundKind(str, enum.Enum):
    CAUCHY3 = "Cauchy3"
    LACUNARY4 = "Lacunary4"
    KOJIMA5 = "Kojima5"
    BALLIEU6 = "Ballieu6"
    POSITIVE_ROOT7 = "PositiveRoot7"
    FUJIWARA8 = "Fujiwara8"
    WALSH9 = "Walsh9"
    LANDAU_LOWER10 = "LandauLower10"
    COMPONENT_DISCUS = "ComponentDiscus"


@dataclass(frozen=True)
class BoundResult:
    kind: BoundKind
    region: Region
    params: dict = field(default_factory=dict)

    @property
    def radius(self) -> float:
        return self.region.radius

    def to_json(self) -> dict:
        out = {"kind": self.kind.value, "region": self.region.kind.value,
               "center": list(self.region.center.quad)}
        if self.region.kind is RegionKind.DISCUS:
            out["radii"] = list(self.region.radii)
        else:
            out["radius"] = self.region.radius
        out["params"] = _jsonable(self.params)
        return out

    @classmethod
    def from_json(cls, obj: dict) -> "BoundResult":
        kind = RegionKind(obj["region"])
        center = BiComplex.coerce(obj["center"])
        if kind is RegionKind.DISCUS:
            region = Region.discus(center, *obj["radii"])
        else:
            region = Region(kind, center, float(obj["radius"]))
        return cls(BoundKind(obj["kind"]), region, dict(obj.get("params", {})))


def _jsonable(v):
    if isinstance(v, dict):
        return {k: _jsonable(x) for k, x in v.items()}
    if isinstance(v, (list, tuple, np.ndarray)):
        return [_jsonable(x) for x in v]
    if isinstance(v, np.generic):
        return v.item()
    return v


def quotient_norms(p: BCPoly) -> np.ndarray:
    """``W_i = |A_i / A_n|`` for ``i = 0..n-1``.

    The quotient is formed on idempotent components, where bicomplex division
    is two complex divisions.
    """
    n = p.degree
    if n < 1:
        raise ZeroDegree("bounds need degree >= 1")
    lead = p[n]
    if not lead.is_invertible():
        raise NonInvertibleLeading(f"leading coefficient {lead} is zero or a zero divisor")
    f, g = p.split()
    q1, q2 = f[:n] / f[n], g[:n] / g[n]
    return np.sqrt(0.5 * (np.abs(q1) ** 2 + np.abs(q2) ** 2))


def _ball(kind, radius, **params) -> BoundResult:
    return BoundResult(kind, Region.ball(ZERO, radius), params)


def cauchy_bound(p: BCPoly) -> BoundResult:
    w = quotient_norms(p)
    return _ball(BoundKind.CAUCHY3, 1.0 + float(w.max()), degenerate=bool(not w.any()))


def _lacunary_objective(w: np.ndarray):
    """``r -> max(r, sum_{i<=p} W_i / r^(n-i-1))`` with ``p`` the last nonzero ``W``."""
    n = len(w)
    terms = [(float(w[i]), n - i - 1) for i in range(n) if w[i] != 0]
    if not terms:
        return lambda r: r
    return lambda r: max(r, sum(wi / r ** k for wi, k in terms))


def lacunary_bound(p: BCPoly, r: float) -> BoundResult:
    if not r > 0:
        raise BadParameter(f"r must be positive, got {r}")
    w = quotient_norms(p)
    nz = np.flatnonzero(w)
    return _ball(BoundKind.LACUNARY4, _lacunary_objective(w)(r), r=float(r),
                 p=int(nz[-1]) if nz.size else None, degenerate=bool(nz.size == 0))


def lacunary_bound_optimized(p: BCPoly) -> BoundResult:
    """Golden-section minimisation of the lacunary bound over ``r``.

    The objective ``max(r, S(r))`` has an increasing and a decreasing branch,
    so it is unimodal on the fixed search interval.  ``r = 1`` is always among
    the evaluated points.
    """
    w = quotient_norms(p)
    lo, hi = LACUNARY_R_MIN, 1.0 + float(w.sum())
    objective = _lacunary_objective(w)
    best_r, best = 1.0, objective(1.0)

    def f(r):
        nonlocal best_r, best
        v = objective(r)
        if v < best:
            best_r, best = r, v
        return v

    a, b = lo, hi
    x1, x2 = b - GOLDEN * (b - a), a + GOLDEN * (b - a)
    f1, f2 = f(x1), f(x2)
    for _ in range(LACUNARY_ITERATIONS):
        if f1 <= f2:
            b, x2, f2 = x2, x1, f1
            x1 = b - GOLDEN * (b - a)
            f1 = f(x1)
        else:
            a, x1, f1 = x1, x2, f2
            x2 = a + GOLDEN * (b - a)
            f2 = f(x2)
    return _ball(BoundKind.LACUNARY4, best, r=best_r, search=[lo, hi],
                 iterations=LACUNARY_ITERATIONS, optimized=True,
                 degenerate=bool(not w.any()))


def kojima_like_bound(p: BCPoly) -> BoundResult:
    w = quotient_norms(p)
    n = len(w)
    radius = sum(w[n - i] ** (1.0 / i) for i in range(1, n + 1))
    return _ball(BoundKind.KOJIMA5, float(radius), degenerate=bool(not w.any()))


def _ballieu_value(w: np.ndarray, interior) -> float:
    x = np.concatenate([[0.0], interior, [1.0]])
    return float(np.max((x[:-1] + w) / x[1:]))


def ballieu_bound(p: BCPoly, weights) -> BoundResult:
    """``max_i (X_i + W_i) / X_{i+1}`` with ``X_0 = 0``, ``X_n = 1`` and the
    ``n - 1`` positive interior weights ``X_1 .. X_{n-1}`` given."""
    w = quotient_norms(p)
    x = np.asarray(weights, dtype=float).ravel()
    if x.shape != (len(w) - 1,):
        raise BadParameter(f"need {len(w) - 1} interior weights, got {x.size}")
    if not np.all(x > 0) or not np.all(np.isfinite(x)):
        raise BadParameter("weights must be positive and finite")
    return _ball(BoundKind.BALLIEU6, _ballieu_value(w, x), weights=x.tolist())


def ballieu_unit(p: BCPoly) -> BoundResult:
    n = p.degree
    res = ballieu_bound(p, np.ones(max(n - 1, 0)))
    return BoundResult(res.kind, res.region, {**res.params, "specialization": "unit"})


def ballieu_coefficient_weights(p: BCPoly) -> BoundResult:
    """Interior weights ``X_i = W_i``; fails when some ``W_i`` (``0 < i < n``) is zero."""
    w = quotient_norms(p)
    interior = w[1:]
    if np.any(interior == 0):
        raise BadParameter("X_i = W_i needs every W_1..W_{n-1} nonzero")
    res = ballieu_bound(p, interior)
    return BoundResult(res.kind, res.region, {**res.params, "specialization": "coefficients"})


def ballieu_unit_display(w) -> float:
    """``max{W_0, 1 + W_1, ..., 1 + W_{n-1}}``."""
    w = np.asarray(w, dtype=float)
    return float(max(w[0], *(1.0 + w[1:])))


def ballieu_coefficient_display(w) -> float:
    """``max{W_0/W_1, 2 W_1/W_2, ..., 2 W_{n-2}/W_{n-1}, 2 W_{n-1}}``."""
    w = np.asarray(w, dtype=float)
    n = len(w)
    if n == 1:
        return float(w[0])
    terms = [w[0] / w[1]] + [2 * w[i] / w[i + 1] for i in range(1, n - 1)] + [2 * w[n - 1]]
    return float(max(terms))


def positive_root_bound(p: BCPoly, normalized: bool = False) -> BoundResult:
    """Positive zero of ``|A_n| x^n - |A_{n-1}| x^{n-1} - ... - |A_0|``.

    ``normalized=True`` uses the monic form (``1`` and ``W_i``) instead of
    raw coefficient norms.
    """
    w = quotient_norms(p)
    n = len(w)
    if normalized:
        lower, lead = w, 1.0
    else:
        norms = p.coefficient_norms()
        lower, lead = norms[:n], float(norms[n])
    try:
        radius = positive_root(np.concatenate([-lower, [lead]]))
        degenerate = False
    except DegenerateAllZero:
        radius, degenerate = 0.0, True
    return _ball(BoundKind.POSITIVE_ROOT7, radius, normalized=normalized, degenerate=degenerate)


def fujiwara_weights(n: int, scheme: str = "uniform") -> np.ndarray:
    if scheme == "uniform":
        lam = np.ones(n)
    elif scheme == "geometric":
        lam = 2.0 ** -np.arange(1, n + 1)
    else:
        raise BadParameter(f"unknown weight scheme {scheme!r}")
    return lam / lam.sum()


def fujiwara_bound(p: BCPoly, lam) -> BoundResult:
    """``max_i (W_{n-i} / lambda_i)^(1/i)`` for positive ``lambda`` summing to 1."""
    w = quotient_norms(p)
    n = len(w)
    lam = np.asarray(lam, dtype=float).ravel()
    if lam.shape != (n,):
        raise BadParameter(f"need {n} weights, got {lam.size}")
    if not np.all(lam > 0) or abs(lam.sum() - 1.0) > 1e-12:
        raise BadParameter("weights must be positive and sum to 1")
    i = np.arange(1, n + 1)
    radius = float(np.max((w[n - i] / lam) ** (1.0 / i)))
    return _ball(BoundKind.FUJIWARA8, radius, weights=lam.tolist(), degenerate=bool(not w.any()))


def walsh_region(p: BCPoly) -> BoundResult:
    w = quotient_norms(p)
    n = len(w)
    lead = p[n]
    center = -(p[n - 1] * (lead * 2).inverse())
    radius = center.norm() + sum(w[n - i] ** (1.0 / i) for i in range(2, n + 1))
    return BoundResult(BoundKind.WALSH9, Region.ball(center, float(radius)),
                       {"degenerate": bool(not w.any())})


def landau_lower_bound(p: BCPoly, t: float) -> BoundResult:
    """Exterior ball ``|Z| >= |A_0| t / (|A_0| + M)``, ``M = max_{i>=1} |A_i| t^i``.

    Raw coefficient norms are used.  When ``A_0`` is zero or a zero divisor the
    radius is 0 (the inverse companion matrix does not exist).
    """
    if not t > 0:
        raise BadParameter(f"t must be positive, got {t}")
    quotient_norms(p)  # validates degree and leading coefficient
    n = p.degree
    norms = p.coefficient_norms()[: n + 1]
    a0 = p[0]
    big_m = float(np.max(norms[1:] * t ** np.arange(1, n + 1)))
    params = {"t": float(t), "M": big_m}
    if not a0.is_invertible():
        params["degenerate"] = "A0 zero" if a0.is_zero() else "A0 zero divisor"
        return BoundResult(BoundKind.LANDAU_LOWER10, Region.exterior_ball(ZERO, 0.0), params)
    radius = norms[0] * t / (norms[0] + big_m)
    return BoundResult(BoundKind.LANDAU_LOWER10, Region.exterior_ball(ZERO, float(radius)), params)


def _classical(c: np.ndarray, base: str) -> float:
    a = np.abs(c)
    if base == "cauchy":
        return 1.0 + float(np.max(a[:-1] / a[-1]))
    if base == "positive_root":
        try:
            return positive_root(np.concatenate([-a[:-1], [a[-1]]]))
        except DegenerateAllZero:
            return 0.0
    raise BadParameter(f"unknown base {base!r}")


def component_discus_bound(p: BCPoly, base: str = "cauchy") -> BoundResult:
    """Discus from the classical complex bound applied to each component.

    Only needs both component polynomials to have degree >= 1; ``A_n`` may
    be a zero divisor as long as each component keeps a nonzero top term.
    """
    f, g = (trim(c) for c in p.split())
    if len(f) < 2 or len(g) < 2:
        raise ComponentDegenerate("both component polynomials need degree >= 1")
    r1, r2 = _classical(f, base), _classical(g, base)
    return BoundResult(BoundKind.COMPONENT_DISCUS, Region.discus(ZERO, r1, r2), {"base": base})


LACUNARY_RS = (0.5, 1.0, 2.0)
LANDAU_TS = (0.5, 1.0, 2.0)


def bound_catalog(p: BCPoly) -> dict[str, BoundResult | str]:
    """Every bound variant the harness checks, keyed by a stable label.

    A value is a diagnostic string when that variant does not apply.
    """
    jobs = {
        "cauchy": lambda: cauchy_bound(p),
        **{f"lacunary_r{r:g}": (lambda r=r: lacunary_bound(p, r)) for r in LACUNARY_RS},
        "lacunary_opt": lambda: lacunary_bound_optimized(p),
        "kojima": lambda: kojima_like_bound(p),
        "ballieu_unit": lambda: ballieu_unit(p),
        "ballieu_coeff": lambda: ballieu_coefficient_weights(p),
        "positive_root": lambda: positive_root_bound(p, normalized=True),
        "fujiwara_geometric": lambda: fujiwara_bound(p, fujiwara_weights(p.degree, "geometric")),
        "fujiwara_uniform": lambda: fujiwara_bound(p, fujiwara_weights(p.degree, "uniform")),
        "walsh": lambda: walsh_region(p),
        **{f"landau_t{t:g}": (lambda t=t: landau_lower_bound(p, t)) for t in LANDAU_TS},
        "discus_cauchy": lambda: component_discus_bound(p, "cauchy"),
        "discus_positive_root": lambda: component_discus_bound(p, "positive_root"),
    }
    out: dict[str, BoundResult | str] = {}
    for label, job in jobs.items():
        try:
            out[label] = job()
        except (BadParameter, ComponentDegenerate, NonInvertibleLeading) as exc:
            out[label] = f"skipped: {exc}"
    return out


BOUND_LABELS = tuple(bound_catalog(BCPoly([1, 1, 1])).keys())
