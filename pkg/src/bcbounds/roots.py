"""Numerical root oracles.

* :func:`cx_roots` -- every root of a complex polynomial (Durand-Kerner).
* :func:`positive_root` -- the unique positive zero of a real polynomial with
  one sign change (``+, -, ..., -``), by bracketing bisection plus Newton polish.
* :func:`bc_roots` -- the zero set of a bicomplex polynomial, assembled from
  the roots of its two idempotent component polynomials.

Coefficient arrays are ascending: ``p[0] + p[1] z + ... + p[n] z**n``.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DegenerateAllZero, InvalidSignPattern, NoConvergence


@dataclass(frozen=True)
class SolverConfig:
    max_iterations: int = 500
    residual_tol: float = 1e-12
    restart_perturbation: float = 1e-3
    max_restarts: int = 4
    seed: int = 20240601
    # extra sweeps after the residual test passes; they only ever keep a root
    # if its residual drops, which sharpens clustered/multiple roots
    polish_sweeps: int = 40

    def __post_init__(self):
        if self.max_iterations <= 0 or self.residual_tol <= 0 or self.restart_perturbation <= 0:
            raise ValueError("solver settings must be positive")
        if self.max_restarts < 0 or self.polish_sweeps < 0:
            raise ValueError("restart/polish counts must be non-negative")


DEFAULT_SOLVER = SolverConfig()


def trim(p) -> np.ndarray:
    """Drop exact-zero high-order coefficients."""
    p = np.asarray(p, dtype=complex)
    nz = np.flatnonzero(p)
    if nz.size == 0:
        return p[:0]
    return p[: nz[-1] + 1]


def horner(p, z):
    """Evaluate ascending coefficients ``p`` at ``z`` (scalar or array)."""
    acc = np.zeros_like(np.asarray(z, dtype=complex)) + p[-1]
    for c in p[-2::-1]:
        acc = acc * z + c
    return acc


def residual_scale(p, z) -> np.ndarray:
    """``max|p_i| * max(1, |z|)**n`` -- the yardstick for root residuals."""
    n = len(p) - 1
    return np.max(np.abs(p)) * np.maximum(1.0, np.abs(z)) ** n


def _durand_kerner(a: np.ndarray, cfg: SolverConfig, rng: np.random.Generator) -> np.ndarray:
    # a is monic, degree >= 2, a[0] != 0
    n = len(a) - 1
    radius = 1.0 + np.max(np.abs(a[:-1]))
    angles = 2 * np.pi * np.arange(n) / n + 0.4
    z = radius * np.exp(1j * angles)
    off = ~np.eye(n, dtype=bool)

    def residual_ok(z, r):
        return np.all(np.abs(r) <= cfg.residual_tol * residual_scale(a, z))

    for attempt in range(cfg.max_restarts + 1):
        with np.errstate(all="ignore"):
            for _ in range(cfg.max_iterations):
                r = horner(a, z)
                if residual_ok(z, r):
                    return _polish(a, z, r, off, cfg)
                diff = z[:, None] - z[None, :]
                denom = np.prod(np.where(off, diff, 1.0), axis=1)
                if not np.all(np.isfinite(denom)) or np.any(denom == 0):
                    break
                z = z - r / denom
                if not np.all(np.isfinite(z)):
                    break
        # restart from a perturbed copy of the initial circle
        jitter = rng.standard_normal(n) + 1j * rng.standard_normal(n)
        z = radius * np.exp(1j * angles) * (1 + cfg.restart_perturbation * (attempt + 1) * jitter)
    raise NoConvergence(f"Durand-Kerner did not converge for degree {n} "
                        f"after {cfg.max_restarts} restarts")


def _polish(a, z, r, off, cfg):
    best, best_r = z.copy(), np.abs(r)
    with np.errstate(all="ignore"):
        for _ in range(cfg.polish_sweeps):
            diff = z[:, None] - z[None, :]
            denom = np.prod(np.where(off, diff, 1.0), axis=1)
            step = r / denom
            if not np.all(np.isfinite(step)):
                break
            z = z - step
            r = horner(a, z)
            ar = np.abs(r)
            better = ar < best_r
            if not better.any():
                break
            best[better] = z[better]
            best_r[better] = ar[better]
    return best


def cx_roots(p, cfg: SolverConfig = DEFAULT_SOLVER) -> np.ndarray:
    """All roots of the complex polynomial ``p`` (ascending), with multiplicity.

    Exact-zero low-order coefficients are peeled off as exact roots at 0.
    """
    p = trim(p)
    n = len(p) - 1
    if n < 1:
        raise ValueError("polynomial must have degree >= 1")
    m = int(np.flatnonzero(p)[0])  # multiplicity of the root at zero
    q = p[m:]
    d = len(q) - 1
    zeros = np.zeros(m, dtype=complex)
    if d == 0:
        return zeros
    if d == 1:
        return np.concatenate([zeros, [-q[0] / q[1]]])
    a = q / q[-1]
    a[-1] = 1.0
    rng = np.random.default_rng(cfg.seed)
    return np.concatenate([zeros, _durand_kerner(a, cfg, rng)])


# -- real positive root ------------------------------------------------------

def _check_sign_pattern(c: np.ndarray) -> None:
    if not np.all(np.isfinite(c)):
        raise InvalidSignPattern("non-finite coefficient")
    if len(c) < 2 or c[-1] <= 0:
        raise InvalidSignPattern("leading coefficient must be positive and degree >= 1")
    if np.any(c[:-1] > 0):
        raise InvalidSignPattern("all non-leading coefficients must be <= 0")
    if not np.any(c[:-1] < 0):
        raise DegenerateAllZero("no negative coefficient: the only non-negative zero is 0")


def _real_horner(c, x: float) -> float:
    acc = 0.0
    for ci in c[::-1]:
        acc = acc * x + ci
    return acc


def positive_root(coeffs) -> float:
    """Unique positive zero of ``c_n x^n - |c_{n-1}| x^{n-1} - ... - |c_0|``.

    ``coeffs`` is ascending with ``coeffs[-1] > 0`` and every other entry
    ``<= 0`` (at least one strictly negative).
    """
    c = np.asarray(coeffs, dtype=float)
    _check_sign_pattern(c)
    c = c[np.flatnonzero(c)[0]:]  # divide out x**m; now c[0] < 0
    # G > 0 on (1 + max|c_i/c_n|, inf) and G(0) < 0; bisect down to adjacent floats
    lo, hi = 0.0, 1.0 + float(np.max(-c[:-1]) / c[-1])
    for _ in range(2200):
        mid = 0.5 * (lo + hi)
        if not lo < mid < hi:
            break
        if _real_horner(c, mid) < 0:
            lo = mid
        else:
            hi = mid
    return hi


def majorant_scale(coeffs, x: float) -> float:
    """``sum |c_i| x**i`` -- the yardstick for :func:`positive_root` residuals."""
    return float(sum(abs(ci) * x ** i for i, ci in enumerate(coeffs)))


# -- bicomplex ---------------------------------------------------------------

def bc_roots(P, cfg: SolverConfig = DEFAULT_SOLVER):
    """Zero set of the bicomplex polynomial ``P`` as a :class:`RootStructure`."""
    from .poly import classify_roots, split_poly

    f, g = split_poly(P)
    s1 = _component_roots(f, cfg)
    s2 = _component_roots(g, cfg)
    return classify_roots(P, s1, s2)


def _component_roots(p, cfg):
    p = trim(p)
    if len(p) == 0:
        return None  # identically zero: every complex number is a root
    if len(p) == 1:
        return np.zeros(0, dtype=complex)
    return cx_roots(p, cfg)


def reconstruct(roots) -> np.ndarray:
    """Ascending coefficients of the monic polynomial with the given roots."""
    out = np.array([1.0 + 0j])
    for r in roots:
        out = np.concatenate([[0j], out]) - r * np.concatenate([out, [0j]])
    return out

