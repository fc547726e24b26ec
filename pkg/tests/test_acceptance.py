"""Acceptance criteria for the package, one PASS/FAIL line per criterion.

    pytest tests/test_acceptance.py -v
    python tests/test_acceptance.py

Criteria 6, 7 and 9 share one 10,000-trial stress run.
"""

from __future__ import annotations

import functools
import json
import math
import sys
import tempfile
import time
from dataclasses import dataclass
from pathlib import Path

import numpy as np
import pytest

from bcbounds import bounds as B
from bcbounds.cli import EXIT_VIOLATION, main as cli_main
from bcbounds.core import (E, E_DAG, I, J, K, ONE, ZERO, BiComplex, from_idempotent,
                           pair_norm, to_idempotent, to_idempotent_j)
from bcbounds.linalg import check_gershgorin, eigenvalues, gershgorin
from bcbounds.poly import BCPoly, companion, match_multisets, scaled_companion
from bcbounds.roots import bc_roots, positive_root
from bcbounds.verify import (EnsembleConfig, fixed_counterexample_matrix, gershgorin_suite,
                             random_polynomial, replay_counterexample, stress, trial_rng)

SQ2 = math.sqrt(2)
STRESS = EnsembleConfig(seed=0, trials=10_000)
PROVABLE = ("discus_cauchy", "discus_positive_root")
STATED = ("cauchy", "lacunary_r0.5", "lacunary_r1", "lacunary_r2", "lacunary_opt", "kojima",
          "ballieu_unit", "ballieu_coeff", "positive_root", "fujiwara_geometric",
          "fujiwara_uniform", "walsh", "landau_t0.5", "landau_t1", "landau_t2")


@dataclass
class Outcome:
    ok: bool
    detail: str
    seconds: float


class Timer:
    def __enter__(self):
        self.start = time.perf_counter()
        return self

    def __exit__(self, *exc):
        self.seconds = time.perf_counter() - self.start


def line(number: int, title: str, out: Outcome) -> str:
    tag = "PASS" if out.ok else "FAIL"
    return f"{tag} [{number:2d}] {title} ({out.seconds:.2f}s): {out.detail}"


# -- 1 ---------------------------------------------------------------------------

def identities_and_roundtrip() -> Outcome:
    with Timer() as t:
        ident = (E + E_DAG == ONE and E * E_DAG == ZERO and E - E_DAG == I * J
                 and K * K == ONE)
        rng = np.random.default_rng([1, 0])
        x0, x1, x2, x3 = rng.uniform(-10, 10, (4, 100_000))
        z1, z2 = x0 + 1j * x1, x2 + 1j * x3
        b1, b2 = to_idempotent(z1, z2)
        w1, w2 = from_idempotent(b1, b2)
        c1, c2 = to_idempotent(w1, w2)
        forward = (w1 == z1) & (w2 == z2)
        backward = (c1 == b1) & (c2 == b2)
        exact = forward & backward
        scale = np.spacing(np.max(np.abs([x0, x1, x2, x3]), axis=0))
        err = np.max(np.abs([w1.real - x0, w1.imag - x1, w2.real - x2, w2.imag - x3]), axis=0)
        n_quad = np.hypot(np.hypot(x0, x1), np.hypot(x2, x3))
        n_i = pair_norm(b1, b2)
        n_j = pair_norm(*to_idempotent_j(x0, x1, x2, x3))
        ulp = np.spacing(n_quad)
        norm_ok = bool(np.all(np.abs(n_i - n_quad) <= 4 * ulp)
                       and np.all(np.abs(n_j - n_quad) <= 4 * ulp))
    ok = ident and bool(exact.all()) and norm_ok and t.seconds < 1.0
    detail = (f"identities {'exact' if ident else 'BROKEN'}; bit-exact round-trips "
              f"{int(exact.sum())}/100000 (worst {float((err / scale).max()):.0f} ulp); "
              f"three norms within 4 ulp: {norm_ok}")
    return Outcome(ok, detail, t.seconds)


# -- 2 ---------------------------------------------------------------------------

def product_inequality() -> Outcome:
    with Timer() as t:
        rng = np.random.default_rng([2, 0])
        q = rng.uniform(-10, 10, (8, 100_000))
        z1, z2 = q[0] + 1j * q[1], q[2] + 1j * q[3]
        w1, w2 = q[4] + 1j * q[5], q[6] + 1j * q[7]
        p1, p2 = z1 * w1 - z2 * w2, z1 * w2 + z2 * w1
        lhs = np.hypot(np.abs(p1), np.abs(p2))
        rhs = SQ2 * np.hypot(np.abs(z1), np.abs(z2)) * np.hypot(np.abs(w1), np.abs(w2))
        bulk = bool(np.all(lhs <= rhs * (1 + 1e-12)))
        eq_gap = abs((E * E).norm() - SQ2 * E.norm() * E.norm())
    ok = bulk and eq_gap <= 1e-15 and t.seconds < 1.0
    detail = (f"max ratio {float((lhs / rhs).max()):.15f}; equality gap at e {eq_gap:.1e}")
    return Outcome(ok, detail, t.seconds)


# -- 3 ---------------------------------------------------------------------------

def root_oracle() -> Outcome:
    cfg = EnsembleConfig(seed=3, trials=1000)
    bad_res = bad_match = not_case_one = 0
    worst = 0.0
    with Timer() as t:
        for k in range(cfg.trials):
            p = random_polynomial(cfg, k)
            rs = bc_roots(p)
            if rs.case.value != "CaseI":
                not_case_one += 1
                continue
            n, scale = p.degree, float(p.coefficient_norms().max())
            for z in rs.combined:
                ratio = p(z).norm() / (scale * max(1.0, z.norm()) ** n)
                worst = max(worst, ratio)
                bad_res += ratio > 1e-6
            spectrum = eigenvalues(companion(p))
            eig = [BiComplex.from_idempotent(a, b) for a, b in spectrum.pairs()]
            bad_match += not match_multisets(rs.combined, eig, 1e-6)
    ok = bad_res == 0 and bad_match == 0 and not_case_one == 0 and t.seconds < 30
    detail = (f"1000 polynomials; residual failures {bad_res} (worst {worst:.1e} of scale); "
              f"spectrum mismatches {bad_match}")
    return Outcome(ok, detail, t.seconds)


# -- 4 ---------------------------------------------------------------------------

def scaled_companion_spectrum() -> Outcome:
    cfg = EnsembleConfig(seed=4, trials=500)
    mismatches = 0
    with Timer() as t:
        for k in range(cfg.trials):
            p = random_polynomial(cfg, k)
            d = 10.0 ** trial_rng(cfg.seed + 1, k).uniform(-1, 1, p.degree)
            spectrum = eigenvalues(scaled_companion(p, d))
            eig = [BiComplex.from_idempotent(a, b) for a, b in spectrum.pairs()]
            mismatches += not match_multisets(bc_roots(p).combined, eig, 1e-6)
    ok = mismatches == 0 and t.seconds < 30
    return Outcome(ok, f"500 scaled companions; mismatches {mismatches}", t.seconds)


# -- 5 ---------------------------------------------------------------------------

def gershgorin_membership() -> Outcome:
    with Timer() as t:
        rep = gershgorin_suite(EnsembleConfig(seed=5, trials=1000), size=6)
        a = fixed_counterexample_matrix()
        chk = check_gershgorin(a)
        rows = gershgorin(a)
        lam = E + 2 * E_DAG
        d1 = (lam - rows[0].center).norm()
        d2 = (lam - rows[1].center).norm()
        fixed_ok = (chk.product_region_ok and not chk.ball_union_ok
                    and abs(d1 - SQ2) < 1e-15 and abs(rows[0].euclid_radius - 1 / SQ2) < 1e-15
                    and abs(d2 - 1 / SQ2) < 1e-15 and rows[1].euclid_radius == 0.0)
    ok = rep.product_region_rate == 1.0 and fixed_ok and t.seconds < 30
    detail = (f"{rep.matrices} matrices, {rep.eigenvalues} eigenvalues; product region "
              f"{rep.product_region_rate:.2%}, same-row ball {rep.ball_union_rate:.2%}, "
              f"same-row discus {rep.discus_union_rate:.2%}; fixed matrix distance "
              f"{d1:.6f} vs radius {rows[0].euclid_radius:.6f}, ball union fails: "
              f"{not chk.ball_union_ok}")
    return Outcome(ok, detail, t.seconds)


# -- shared stress run ---------------------------------------------------------------

@functools.lru_cache(maxsize=1)
def shared_stress():
    with Timer() as t:
        rep = stress(STRESS, include_roots=False)
    return rep, t.seconds


def _violations(rep, labels) -> dict:
    return {k: rep.summary[k]["violations"] for k in labels if rep.summary[k]["violations"]}


# -- 6 ---------------------------------------------------------------------------

def discus_containment() -> Outcome:
    rep, seconds = shared_stress()
    checked = {k: rep.summary[k]["checked"] for k in PROVABLE}
    viol = _violations(rep, PROVABLE)
    ok = not viol and all(v == STRESS.trials for v in checked.values()) and seconds < 120
    detail = (f"{STRESS.trials} trials, checked {checked}, violations {viol or 0}; "
              f"max tightness {max(rep.summary[k]['max_tightness'] for k in PROVABLE):.4f}")
    return Outcome(ok, detail, seconds)


# -- 7 ---------------------------------------------------------------------------

def stated_bounds_containment(artifacts: Path) -> Outcome:
    rep, seconds = shared_stress()
    with Timer() as t:
        viol = _violations(rep, STATED)
        cex = [c for c in rep.counterexamples if c["bound"] in STATED]
        replayed = all(replay_counterexample(c) for c in cex)
        artifacts.mkdir(parents=True, exist_ok=True)
        (artifacts / "counterexamples.json").write_text(json.dumps(cex, indent=1))
        exit_code = None
        if cex:
            poly = artifacts / "counterexample_0.json"
            poly.write_text(json.dumps({"coefficients": cex[0]["coefficients"]}))
            exit_code = cli_main(["verify", str(poly), "--out", str(artifacts / "verify_0.json")])
    machinery = replayed and (not cex or exit_code == EXIT_VIOLATION)
    checked = min(rep.summary[k]["checked"] for k in STATED if k != "ballieu_coeff")
    total = seconds + t.seconds
    ok = not viol and machinery and checked == STRESS.trials and total < 180
    detail = (f"violations {viol or 0}; {len(cex)} counterexample records, replay "
              f"{'reproduces' if replayed else 'DOES NOT reproduce'} every verdict, CLI exit "
              f"{exit_code}; records in {artifacts / 'counterexamples.json'}")
    return Outcome(ok, detail, total)


# -- 8 ---------------------------------------------------------------------------

def _literal_unit_form(p: BCPoly) -> float:
    n, a = p.degree, p.coeffs
    q = [(a[i] / a[n]).norm() for i in range(n)]
    return max([q[0]] + [1 + x for x in q[1:]])


def _literal_coefficient_form(p: BCPoly) -> float:
    n, a = p.degree, p.coeffs
    return max([(a[0] / a[1]).norm()] + [2 * (a[i] / a[i + 1]).norm() for i in range(1, n)])


def ballieu_specialisations() -> Outcome:
    cfg = EnsembleConfig(seed=8, trials=1000)
    unit_bad = coeff_bad = rewritten_bad = 0
    worst = 0.0
    with Timer() as t:
        for k in range(cfg.trials):
            p = random_polynomial(cfg, k)
            unit = B.ballieu_unit(p).radius
            coeff = B.ballieu_coefficient_weights(p).radius
            lit_u, lit_c = _literal_unit_form(p), _literal_coefficient_form(p)
            unit_bad += abs(unit - lit_u) > 1e-12 * max(1.0, lit_u)
            gap = abs(coeff - lit_c) / max(1.0, lit_c)
            worst = max(worst, gap)
            coeff_bad += gap > 1e-12
            w = B.quotient_norms(p)
            rewritten_bad += abs(coeff - B.ballieu_coefficient_display(w)) > 1e-12 * max(1.0, coeff)
    ok = unit_bad == 0 and coeff_bad == 0
    detail = (f"unit-weight form mismatches {unit_bad}/1000; coefficient-weight form "
              f"mismatches {coeff_bad}/1000 (worst relative gap {worst:.2e}); "
              f"W-ratio rewrite mismatches {rewritten_bad}/1000")
    return Outcome(ok, detail, t.seconds)


# -- 9 ---------------------------------------------------------------------------

def positive_root_dominance() -> Outcome:
    rep, _ = shared_stress()
    with Timer() as t:
        worse = 0
        for trial in rep.trials:
            r = {c.label: c.radius for c in trial.checks if c.skipped is None}
            worse += r["positive_root"] > r["cauchy"] * (1 + 1e-12)
    return Outcome(worse == 0, f"{len(rep.trials)} trials; positive root above Cauchy in "
                               f"{worse}", t.seconds)


# -- 10 ----------------------------------------------------------------------------

def named_values() -> Outcome:
    with Timer() as t:
        phi = positive_root([-1, -1, 1])
        walsh = B.walsh_region(BCPoly([ONE, 2 * ONE, ONE]))
        mixed = BCPoly([-E_DAG, E, ONE])
        cauchy = B.cauchy_bound(mixed).radius
        top = bc_roots(mixed).max_root_norm()
    checks = {
        "golden": abs(phi - 1.6180339887) <= 1e-9 and abs(phi - (1 + math.sqrt(5)) / 2) <= 1e-12,
        "walsh": (walsh.region.center - BiComplex(-1, 0)).norm() < 1e-15
        and abs(walsh.radius - 2) < 1e-15,
        "cauchy": abs(cauchy - (1 + 1 / SQ2)) < 1e-15 and abs(top - 1) < 1e-12,
    }
    detail = (f"phi {phi:.12f}; Walsh center {walsh.region.center.quad[0]:g} radius "
              f"{walsh.radius:g}; Cauchy {cauchy:.10f} with max root norm {top:.12f}")
    return Outcome(all(checks.values()), detail, t.seconds)


CRITERIA = [
    (1, "algebraic identities, round-trips, norm agreement", identities_and_roundtrip),
    (2, "product inequality", product_inequality),
    (3, "root solver against companion spectrum", root_oracle),
    (4, "diagonally scaled companion spectrum", scaled_companion_spectrum),
    (5, "Gershgorin product region and fixed counterexample", gershgorin_membership),
    (6, "component discus contains every root", discus_containment),
    (7, "stated bound regions contain every root", None),
    (8, "weighted-bound specialisation identities", ballieu_specialisations),
    (9, "positive-root radius below Cauchy radius", positive_root_dominance),
    (10, "named values", named_values),
]


# -- pytest glue -----------------------------------------------------------------------

@pytest.fixture
def emit(capsys):
    def _emit(number, title, out):
        with capsys.disabled():
            print("\n" + line(number, title, out))
        assert out.ok, out.detail
    return _emit


@pytest.fixture(scope="module")
def artifacts(tmp_path_factory):
    return tmp_path_factory.mktemp("acceptance")


def test_identities_roundtrip_and_norms(emit):
    emit(*CRITERIA[0][:2], identities_and_roundtrip())


def test_product_inequality(emit):
    emit(*CRITERIA[1][:2], product_inequality())


def test_roots_match_companion_spectrum(emit):
    emit(*CRITERIA[2][:2], root_oracle())


def test_scaled_companion_spectrum(emit):
    emit(*CRITERIA[3][:2], scaled_companion_spectrum())


def test_gershgorin_membership(emit):
    emit(*CRITERIA[4][:2], gershgorin_membership())


def test_discus_contains_all_roots(emit):
    emit(*CRITERIA[5][:2], discus_containment())


def test_stated_bounds_contain_all_roots(emit, artifacts):
    emit(*CRITERIA[6][:2], stated_bounds_containment(artifacts))


def test_weighted_bound_specialisations(emit):
    emit(*CRITERIA[7][:2], ballieu_specialisations())


def test_positive_root_below_cauchy(emit):
    emit(*CRITERIA[8][:2], positive_root_dominance())


def test_named_values(emit):
    emit(*CRITERIA[9][:2], named_values())


if __name__ == "__main__":
    failed = 0
    art = Path(tempfile.mkdtemp(prefix="bcbounds-acceptance-"))
    for number, title, fn in CRITERIA:
        out = stated_bounds_containment(art) if fn is None else fn()
        print(line(number, title, out), flush=True)
        failed += not out.ok
    sys.exit(1 if failed else 0)
