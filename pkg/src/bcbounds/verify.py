"""Empirical certification of the bound catalog and the Gershgorin regions.

Every trial draws its polynomial from ``numpy.random.default_rng([seed, trial])``
so any single trial can be regenerated without replaying the ensemble.
"""

from __future__ import annotations

import csv
import datetime as _dt
import io
import json
import math
from dataclasses import asdict, dataclass, field

import numpy as np

from .bounds import BOUND_LABELS, BoundResult, bound_catalog
from .core import E, E_DAG, ZERO, BiComplex, RegionKind, from_idempotent
from .linalg import BCMatrix, check_gershgorin
from .poly import BCPoly, RootCase
from .roots import DEFAULT_SOLVER, SolverConfig, bc_roots

MODELS = ("full-bicomplex", "complex-only", "idempotent-split")
MAX_ENSEMBLE_DEGREE = 8
DEFAULT_TOL = 1e-9
CSV_COLUMNS = ("trial", "degree", "bound_kind", "radius", "max_root_norm", "tightness", "contained")


@dataclass(frozen=True)
class EnsembleConfig:
    seed: int = 0
    trials: int = 100
    degree_min: int = 2
    degree_max: int = 8
    coeff_scale: float = 10.0
    coefficient_model: str = "idempotent-split"
    monic: bool = True

    def __post_init__(self):
        if self.trials <= 0:
            raise ValueError(f"trials must be positive, got {self.trials}")
        if not 1 <= self.degree_min <= self.degree_max <= MAX_ENSEMBLE_DEGREE:
            raise ValueError(f"need 1 <= degree_min <= degree_max <= {MAX_ENSEMBLE_DEGREE}")
        if not (self.coeff_scale > 0 and math.isfinite(self.coeff_scale)):
            raise ValueError("coeff_scale must be positive and finite")
        if self.coefficient_model not in MODELS:
            raise ValueError(f"unknown model {self.coefficient_model!r}; choose from {MODELS}")
        if not 0 <= self.seed < 2 ** 64:
            raise ValueError("seed must be a 64-bit unsigned integer")


def trial_rng(seed: int, trial: int) -> np.random.Generator:
    return np.random.default_rng([seed, trial])


def _square(rng, size, scale):
    return rng.uniform(-scale, scale, size) + 1j * rng.uniform(-scale, scale, size)


def random_coefficients(rng, n: int, scale: float, model: str) -> tuple[np.ndarray, np.ndarray]:
    """``n`` random bicomplex values as ``(z1, z2)`` arrays."""
    if model == "full-bicomplex":
        return _square(rng, n, scale), _square(rng, n, scale)
    if model == "complex-only":
        return _square(rng, n, scale), np.zeros(n, dtype=complex)
    if model == "idempotent-split":
        return from_idempotent(_square(rng, n, scale), _square(rng, n, scale))
    raise ValueError(f"unknown model {model!r}")


def random_polynomial(cfg: EnsembleConfig, trial: int) -> BCPoly:
    rng = trial_rng(cfg.seed, trial)
    n = int(rng.integers(cfg.degree_min, cfg.degree_max + 1))
    z1, z2 = random_coefficients(rng, n + 1, cfg.coeff_scale, cfg.coefficient_model)
    if cfg.monic:
        z1[-1], z2[-1] = 1.0, 0.0
    return BCPoly([BiComplex(a, b) for a, b in zip(z1, z2)])


# -- records -----------------------------------------------------------------

@dataclass
class BoundCheck:
    """Verdict of one bound on one polynomial.

    ``max_root_norm``/``min_root_norm`` are distances from the region centre
    (the origin except for the Walsh ball).  ``tightness`` is
    ``max_root_norm / radius`` for upper bounds, ``radius / min_root_norm`` for
    the lower bound and the larger component ratio for a discus.
    """

    label: str
    kind: str | None = None
    region: str | None = None
    center: list | None = None
    radius: float | None = None
    radii: list | None = None
    max_root_norm: float | None = None
    min_root_norm: float | None = None
    tightness: float | None = None
    contained: bool | None = None
    skipped: str | None = None


@dataclass
class TrialRecord:
    trial: int
    degree: int
    case: str
    coefficients: list
    roots: list | None = None
    checks: list[BoundCheck] = field(default_factory=list)
    note: str | None = None

    @classmethod
    def from_dict(cls, d: dict) -> "TrialRecord":
        d = dict(d)
        d["checks"] = [BoundCheck(**c) for c in d.get("checks", [])]
        return cls(**d)


def _ratio(num: float, den: float) -> float | None:
    if den > 0:
        return num / den
    return 1.0 if num == 0 else None


def check_bound(label: str, bound: BoundResult, b1: np.ndarray, b2: np.ndarray,
                tol: float = DEFAULT_TOL) -> BoundCheck:
    """Containment of the roots ``b1 e + b2 e'`` in ``bound``'s region."""
    reg = bound.region
    chk = BoundCheck(label, bound.kind.value, reg.kind.value, list(reg.center.quad))
    if reg.kind is RegionKind.DISCUS:
        r1, r2 = reg.radii
        c1, c2 = reg.center.decompose_i()
        m1, m2 = float(np.abs(b1 - c1).max()), float(np.abs(b2 - c2).max())
        chk.radius, chk.radii = reg.radius, [r1, r2]
        d = np.sqrt(0.5 * (np.abs(b1 - c1) ** 2 + np.abs(b2 - c2) ** 2))
        chk.max_root_norm, chk.min_root_norm = float(d.max()), float(d.min())
        chk.contained = bool(m1 <= r1 + tol * (1 + r1) and m2 <= r2 + tol * (1 + r2))
        t1, t2 = _ratio(m1, r1), _ratio(m2, r2)
        chk.tightness = None if t1 is None or t2 is None else max(t1, t2)
        return chk
    c1, c2 = reg.center.decompose_i()
    d = np.sqrt(0.5 * (np.abs(b1 - c1) ** 2 + np.abs(b2 - c2) ** 2))
    r = reg.radius
    chk.radius = r
    chk.max_root_norm, chk.min_root_norm = float(d.max()), float(d.min())
    slack = tol * (1 + r)
    if reg.kind is RegionKind.BALL:
        chk.contained = bool(chk.max_root_norm <= r + slack)
        chk.tightness = _ratio(chk.max_root_norm, r)
    else:
        chk.contained = bool(chk.min_root_norm >= r - slack)
        chk.tightness = _ratio(r, chk.min_root_norm) if r > 0 else 0.0
    return chk


def verify_trial(p: BCPoly, cfg: SolverConfig = DEFAULT_SOLVER, tol: float = DEFAULT_TOL,
                 trial: int = 0, include_roots: bool = True) -> TrialRecord:
    rs = bc_roots(p, cfg)
    rec = TrialRecord(trial, p.degree, rs.case.value, [list(c.quad) for c in p.coeffs])
    if rs.case is not RootCase.CASE_I:
        rec.note = ("no roots; bounds skipped" if rs.case is RootCase.CASE_III
                    else "root set unbounded on one component; bounds skipped")
        return rec
    b1, b2 = rs.combined_arrays()
    if include_roots:
        rec.roots = [list(z.quad) for z in rs.combined]
    for label, bound in bound_catalog(p).items():
        if isinstance(bound, str):
            rec.checks.append(BoundCheck(label, skipped=bound))
        else:
            rec.checks.append(check_bound(label, bound, b1, b2, tol))
    return rec


# -- reports -----------------------------------------------------------------

@dataclass
class VerificationReport:
    meta: dict
    trials: list[TrialRecord]
    summary: dict
    case_counts: dict
    counterexamples: list[dict]

    @property
    def violation_count(self) -> int:
        return sum(s["violations"] for s in self.summary.values())

    @property
    def ok(self) -> bool:
        return self.violation_count == 0

    def to_dict(self) -> dict:
        return asdict(self)

    @classmethod
    def from_dict(cls, d: dict) -> "VerificationReport":
        return cls(dict(d["meta"]), [TrialRecord.from_dict(t) for t in d["trials"]],
                   dict(d["summary"]), dict(d["case_counts"]), list(d["counterexamples"]))

    def to_json(self, indent: int | None = 1) -> str:
        return json.dumps(self.to_dict(), indent=indent, allow_nan=False)

    @classmethod
    def from_json(cls, text: str) -> "VerificationReport":
        return cls.from_dict(json.loads(text))

    def rows(self) -> list[dict]:
        out = []
        for t in self.trials:
            for c in t.checks:
                if c.skipped is None:
                    out.append({"trial": t.trial, "degree": t.degree, "bound_kind": c.label,
                                "radius": c.radius, "max_root_norm": c.max_root_norm,
                                "tightness": c.tightness, "contained": c.contained})
        return out

    def to_csv(self) -> str:
        return rows_to_csv(self.rows())


def rows_to_csv(rows) -> str:
    buf = io.StringIO()
    w = csv.DictWriter(buf, fieldnames=CSV_COLUMNS, lineterminator="\n")
    w.writeheader()
    for r in rows:
        w.writerow({k: ("" if r[k] is None else r[k]) for k in CSV_COLUMNS})
    return buf.getvalue()


def parse_csv(text: str) -> list[dict]:
    out = []
    for r in csv.DictReader(io.StringIO(text)):
        out.append({
            "trial": int(r["trial"]),
            "degree": int(r["degree"]),
            "bound_kind": r["bound_kind"],
            "radius": float(r["radius"]),
            "max_root_norm": float(r["max_root_norm"]),
            "tightness": float(r["tightness"]) if r["tightness"] else None,
            "contained": r["contained"] == "True",
        })
    return out


def _summarise(trials: list[TrialRecord]) -> dict:
    summary = {}
    for label in BOUND_LABELS:
        checks = [c for t in trials for c in t.checks if c.label == label]
        done = [c for c in checks if c.skipped is None]
        tight = [c.tightness for c in done if c.tightness is not None]
        summary[label] = {
            "checked": len(done),
            "skipped": len(checks) - len(done),
            "violations": sum(1 for c in done if not c.contained),
            "mean_tightness": float(np.mean(tight)) if tight else None,
            "max_tightness": float(np.max(tight)) if tight else None,
        }
    return summary


def _counterexamples(rec: TrialRecord, seed, model) -> list[dict]:
    return [{"seed": seed, "trial": rec.trial, "model": model, "bound": c.label,
             "radius": c.radius, "radii": c.radii, "max_root_norm": c.max_root_norm,
             "min_root_norm": c.min_root_norm, "coefficients": rec.coefficients}
            for c in rec.checks if c.skipped is None and not c.contained]


def _build_report(meta, trials, seed=None, model=None) -> VerificationReport:
    cases: dict[str, int] = {c.value: 0 for c in RootCase}
    for t in trials:
        cases[t.case] += 1
    cex = [x for t in trials for x in _counterexamples(t, seed, model)]
    return VerificationReport(meta, trials, _summarise(trials), cases, cex)


def _timestamp() -> str:
    return _dt.datetime.now(_dt.timezone.utc).isoformat(timespec="seconds")


def verify_polynomial(p: BCPoly, cfg: SolverConfig = DEFAULT_SOLVER,
                      tol: float = DEFAULT_TOL) -> VerificationReport:
    rec = verify_trial(p, cfg, tol)
    meta = {"kind": "verify", "tol": tol, "solver": asdict(cfg), "created": _timestamp()}
    return _build_report(meta, [rec])


def stress(cfg: EnsembleConfig, solver: SolverConfig = DEFAULT_SOLVER,
           tol: float = DEFAULT_TOL, include_roots: bool = True) -> VerificationReport:
    trials = [verify_trial(random_polynomial(cfg, i), solver, tol, trial=i,
                           include_roots=include_roots)
              for i in range(cfg.trials)]
    meta = {"kind": "stress", "ensemble": asdict(cfg), "tol": tol,
            "solver": asdict(solver), "created": _timestamp()}
    return _build_report(meta, trials, cfg.seed, cfg.coefficient_model)


def replay_counterexample(record: dict, cfg: SolverConfig = DEFAULT_SOLVER,
                          tol: float = DEFAULT_TOL) -> bool:
    """True when re-verifying the recorded polynomial violates the same bound again."""
    rec = verify_trial(BCPoly.from_json({"coefficients": record["coefficients"]}), cfg, tol)
    return any(c.label == record["bound"] and c.skipped is None and not c.contained
               for c in rec.checks)


# -- Gershgorin ensemble --------------------------------------------------------

FIXED_COUNTEREXAMPLE = ((E, E_DAG), (ZERO, E_DAG * 2))


def fixed_counterexample_matrix() -> BCMatrix:
    """``[[e, e'], [0, 2e']]``: every eigenvalue is in the product region but
    ``e + 2e'`` lies outside both same-row Euclidean Gershgorin balls."""
    return BCMatrix.from_entries(FIXED_COUNTEREXAMPLE)


def random_matrix(cfg: EnsembleConfig, trial: int, size: int, structure: str = "dense") -> BCMatrix:
    rng = trial_rng(cfg.seed, trial)
    n = int(rng.integers(1, size + 1))
    z1, z2 = random_coefficients(rng, n * n, cfg.coeff_scale, cfg.coefficient_model)
    z1, z2 = z1.reshape(n, n), z2.reshape(n, n)
    if structure == "diagonal":
        mask = np.eye(n, dtype=bool)
        z1, z2 = np.where(mask, z1, 0), np.where(mask, z2, 0)
    elif structure != "dense":
        raise ValueError(f"unknown structure {structure!r}")
    return BCMatrix(z1, z2)


@dataclass
class GershgorinReport:
    meta: dict
    matrices: int
    eigenvalues: int
    product_region_hits: int
    ball_union_hits: int
    discus_union_hits: int
    product_region_failures: list[dict]
    fixed_counterexample: dict

    @property
    def product_region_rate(self) -> float:
        return self.product_region_hits / self.eigenvalues

    @property
    def ball_union_rate(self) -> float:
        return self.ball_union_hits / self.eigenvalues

    @property
    def discus_union_rate(self) -> float:
        return self.discus_union_hits / self.eigenvalues

    @property
    def ok(self) -> bool:
        fx = self.fixed_counterexample
        return (not self.product_region_failures and fx["product_region"]
                and not fx["ball_union"])

    def to_dict(self) -> dict:
        d = asdict(self)
        d.update(product_region_rate=self.product_region_rate,
                 ball_union_rate=self.ball_union_rate,
                 discus_union_rate=self.discus_union_rate, ok=self.ok)
        return d


def gershgorin_suite(cfg: EnsembleConfig, size: int = 6, structure: str = "dense",
                     solver: SolverConfig = DEFAULT_SOLVER) -> GershgorinReport:
    if not 1 <= size <= 6:
        raise ValueError("matrix size must be between 1 and 6")
    counts = [0, 0, 0, 0]
    failures = []
    for i in range(cfg.trials):
        a = random_matrix(cfg, i, size, structure)
        chk = check_gershgorin(a, solver)
        counts[0] += len(chk.records)
        for r in chk.records:
            counts[1] += r.product_region
            counts[2] += r.ball_union
            counts[3] += r.discus_union
            if not r.product_region:
                failures.append({"seed": cfg.seed, "trial": i, "matrix": a.to_json(),
                                 "eigenvalue": list(r.eigenvalue.quad)})
    fixed = check_gershgorin(fixed_counterexample_matrix(), solver)
    misses = [list(r.eigenvalue.quad) for r in fixed.records if not r.ball_union]
    meta = {"kind": "gershgorin", "ensemble": asdict(cfg), "size": size,
            "structure": structure, "created": _timestamp()}
    return GershgorinReport(meta, cfg.trials, counts[0], counts[1], counts[2], counts[3], failures,
                            {"product_region": fixed.product_region_ok,
                             "ball_union": fixed.ball_union_ok,
                             "discus_union": fixed.discus_union_ok,
                             "ball_union_misses": misses})
