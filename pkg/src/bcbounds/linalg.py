"""Dense bicomplex matrices.

A :class:`BCMatrix` keeps the ``(z1, z2)`` parts as two complex numpy arrays.
Its idempotent split ``A = A1 e + A2 e'`` gives two ordinary complex matrices
on which determinants, spectra and Gershgorin disks are computed.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from itertools import product

import numpy as np

from .core import BiComplex, Region, from_idempotent, to_idempotent
from .errors import ShapeError, SizeLimitExceeded
from .roots import DEFAULT_SOLVER, SolverConfig, cx_roots

MAX_EIG_SIZE = 12


def _frozen(a) -> np.ndarray:
    a = np.array(a, dtype=complex)
    a.setflags(write=False)
    return a


class BCMatrix:
    """Immutable ``n_rows x n_cols`` matrix of bicomplex numbers."""

    __slots__ = ("z1", "z2")

    def __init__(self, z1, z2=None):
        z1 = _frozen(z1)
        z2 = _frozen(np.zeros_like(z1) if z2 is None else z2)
        if z1.ndim != 2 or z1.shape != z2.shape or 0 in z1.shape:
            raise ShapeError(f"bad matrix parts with shapes {z1.shape}, {z2.shape}")
        if not (np.all(np.isfinite(z1)) and np.all(np.isfinite(z2))):
            raise ValueError("non-finite matrix entry")
        object.__setattr__(self, "z1", z1)
        object.__setattr__(self, "z2", z2)

    def __setattr__(self, name, value):
        raise AttributeError("BCMatrix is immutable")

    @classmethod
    def from_entries(cls, rows) -> "BCMatrix":
        """Build from nested rows of BiComplex / scalars / ``[x0, x1, x2, x3]``."""
        rows = [[BiComplex.coerce(v) for v in row] for row in rows]
        if not rows or any(len(r) != len(rows[0]) for r in rows):
            raise ShapeError("rows must be non-empty and equally long")
        return cls([[v.z1 for v in r] for r in rows], [[v.z2 for v in r] for r in rows])

    @classmethod
    def from_components(cls, m1, m2) -> "BCMatrix":
        m1, m2 = np.asarray(m1, dtype=complex), np.asarray(m2, dtype=complex)
        if m1.shape != m2.shape:
            raise ShapeError(f"component shapes differ: {m1.shape} vs {m2.shape}")
        return cls(*from_idempotent(m1, m2))

    @classmethod
    def identity(cls, n: int) -> "BCMatrix":
        return cls(np.eye(n))

    @property
    def shape(self) -> tuple[int, int]:
        return self.z1.shape

    @property
    def n_rows(self) -> int:
        return self.shape[0]

    @property
    def n_cols(self) -> int:
        return self.shape[1]

    def __getitem__(self, ij) -> BiComplex:
        return BiComplex(self.z1[ij], self.z2[ij])

    @property
    def entries(self) -> list[BiComplex]:
        """Row-major entries."""
        return [BiComplex(a, b) for a, b in zip(self.z1.ravel(), self.z2.ravel())]

    def split(self) -> tuple[np.ndarray, np.ndarray]:
        return to_idempotent(self.z1, self.z2)

    def entry_norms(self) -> np.ndarray:
        return np.sqrt(np.abs(self.z1) ** 2 + np.abs(self.z2) ** 2)

    def __add__(self, other: "BCMatrix") -> "BCMatrix":
        return BCMatrix(self.z1 + other.z1, self.z2 + other.z2)

    def __sub__(self, other: "BCMatrix") -> "BCMatrix":
        return BCMatrix(self.z1 - other.z1, self.z2 - other.z2)

    def __matmul__(self, other: "BCMatrix") -> "BCMatrix":
        if self.n_cols != other.n_rows:
            raise ShapeError(f"cannot multiply {self.shape} by {other.shape}")
        return BCMatrix(self.z1 @ other.z1 - self.z2 @ other.z2,
                        self.z1 @ other.z2 + self.z2 @ other.z1)

    def scale(self, c: BiComplex) -> "BCMatrix":
        return BCMatrix(self.z1 * c.z1 - self.z2 * c.z2, self.z1 * c.z2 + self.z2 * c.z1)

    def __eq__(self, other) -> bool:
        if not isinstance(other, BCMatrix):
            return NotImplemented
        return (self.shape == other.shape and np.array_equal(self.z1, other.z1)
                and np.array_equal(self.z2, other.z2))

    __hash__ = None

    def __repr__(self) -> str:
        return f"BCMatrix(shape={self.shape})"

    # interchange: {"rows": n, "cols": m, "entries": [[x0, x1, x2, x3], ...]}
    def to_json(self) -> dict:
        return {"rows": self.n_rows, "cols": self.n_cols,
                "entries": [list(v.quad) for v in self.entries]}

    @classmethod
    def from_json(cls, obj: dict) -> "BCMatrix":
        n, m = int(obj["rows"]), int(obj["cols"])
        entries = obj["entries"]
        if n <= 0 or m <= 0 or len(entries) != n * m:
            raise ShapeError(f"expected {n}x{m} entries, got {len(entries)}")
        vals = [BiComplex.coerce(e) for e in entries]
        return cls.from_entries([vals[i * m:(i + 1) * m] for i in range(n)])


def split(a: BCMatrix) -> tuple[np.ndarray, np.ndarray]:
    return a.split()


def compose(m1, m2) -> BCMatrix:
    return BCMatrix.from_components(m1, m2)


def _require_square(a: BCMatrix) -> int:
    if a.n_rows != a.n_cols:
        raise ShapeError(f"square matrix required, got {a.shape}")
    return a.n_rows


def determinant(a: BCMatrix) -> BiComplex:
    """``det(A1) e + det(A2) e'`` (LAPACK LU on each component)."""
    n = _require_square(a)
    if n == 1:
        return a[0, 0]
    m1, m2 = a.split()
    return BiComplex.from_idempotent(np.linalg.det(m1), np.linalg.det(m2))


def charpoly(m) -> np.ndarray:
    """Ascending characteristic polynomial ``det(xI - M)`` by Faddeev-LeVerrier."""
    m = np.asarray(m, dtype=complex)
    n = m.shape[0]
    c = np.zeros(n + 1, dtype=complex)
    c[n] = 1.0
    mk = np.zeros_like(m)
    eye = np.eye(n)
    for k in range(1, n + 1):
        mk = m @ mk + c[n - k + 1] * eye
        c[n - k] = -np.trace(m @ mk) / k
    return c


def cx_eigenvalues(m, cfg: SolverConfig = DEFAULT_SOLVER) -> np.ndarray:
    m = np.asarray(m, dtype=complex)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ShapeError(f"square matrix required, got {m.shape}")
    if m.shape[0] > MAX_EIG_SIZE:
        raise SizeLimitExceeded(f"n={m.shape[0]} exceeds {MAX_EIG_SIZE}")
    return cx_roots(charpoly(m), cfg)


def dedupe(values, rtol: float = 1e-8) -> list[BiComplex]:
    """Drop values within ``rtol * max(1, |a|, |b|)`` of an earlier one."""
    kept: list[BiComplex] = []
    for v in values:
        nv = v.norm()
        if all((v - w).norm() > rtol * max(1.0, nv, w.norm()) for w in kept):
            kept.append(v)
    return kept


@dataclass(frozen=True)
class Spectrum:
    component1: np.ndarray
    component2: np.ndarray
    combined: tuple[BiComplex, ...] = field(repr=False)

    def pairs(self):
        """Every ``(l1, l2)`` component pair, duplicates included."""
        return list(product(self.component1, self.component2))


def combine(s1, s2) -> list[BiComplex]:
    return [BiComplex.from_idempotent(a, b) for a, b in product(s1, s2)]


def eigenvalues(a: BCMatrix, cfg: SolverConfig = DEFAULT_SOLVER) -> Spectrum:
    _require_square(a)
    m1, m2 = a.split()
    s1, s2 = cx_eigenvalues(m1, cfg), cx_eigenvalues(m2, cfg)
    return Spectrum(s1, s2, tuple(dedupe(combine(s1, s2))))


# -- Gershgorin ----------------------------------------------------------------

@dataclass(frozen=True)
class GershgorinRegion:
    row_index: int
    center: BiComplex
    euclid_radius: float
    hyp_radii: tuple[float, float]

    def ball(self) -> Region:
        return Region.ball(self.center, self.euclid_radius)

    def discus(self) -> Region:
        return Region.discus(self.center, *self.hyp_radii)


def _offdiag_row_sums(mags: np.ndarray) -> np.ndarray:
    return mags.sum(axis=1) - np.diag(mags)


def gershgorin(a: BCMatrix) -> list[GershgorinRegion]:
    _require_square(a)
    m1, m2 = a.split()
    euclid = _offdiag_row_sums(a.entry_norms())
    h1, h2 = _offdiag_row_sums(np.abs(m1)), _offdiag_row_sums(np.abs(m2))
    return [GershgorinRegion(i, a[i, i], float(euclid[i]), (float(h1[i]), float(h2[i])))
            for i in range(a.n_rows)]


@dataclass(frozen=True)
class EigenMembership:
    eigenvalue: BiComplex
    product_region: bool
    ball_union: bool
    discus_union: bool


@dataclass(frozen=True)
class GershgorinCheck:
    """Membership verdicts for every combined eigenvalue.

    ``product_region`` (each component eigenvalue in its own component's disk
    union) is the guaranteed statement; the ball and discus unions pair both
    components with the same row and are only reported.
    """

    regions: tuple[GershgorinRegion, ...]
    records: tuple[EigenMembership, ...]

    @property
    def product_region_ok(self) -> bool:
        return all(r.product_region for r in self.records)

    @property
    def ball_union_ok(self) -> bool:
        return all(r.ball_union for r in self.records)

    @property
    def discus_union_ok(self) -> bool:
        return all(r.discus_union for r in self.records)


def _in_disk_union(lam, centers, radii, slack) -> bool:
    return bool(np.any(np.abs(lam - centers) <= radii + slack))


def check_gershgorin(a: BCMatrix, cfg: SolverConfig = DEFAULT_SOLVER,
                     tol: float = 1e-6) -> GershgorinCheck:
    """Closed-membership slack is ``tol * (1 + max entry norm)``."""
    regions = gershgorin(a)
    m1, m2 = a.split()
    c1, c2 = np.diag(m1), np.diag(m2)
    r1 = np.array([g.hyp_radii[0] for g in regions])
    r2 = np.array([g.hyp_radii[1] for g in regions])
    slack = tol * (1.0 + float(a.entry_norms().max()))
    spectrum = eigenvalues(a, cfg)
    records = []
    for l1, l2 in spectrum.pairs():
        lam = BiComplex.from_idempotent(l1, l2)
        prod_ok = _in_disk_union(l1, c1, r1, slack) and _in_disk_union(l2, c2, r2, slack)
        ball_ok = any((lam - g.center).norm() <= g.euclid_radius + slack for g in regions)
        disc_ok = bool(np.any((np.abs(l1 - c1) <= r1 + slack) & (np.abs(l2 - c2) <= r2 + slack)))
        records.append(EigenMembership(lam, prod_ok, ball_ok, disc_ok))
    return GershgorinCheck(tuple(regions), tuple(records))


def minkowski_gap(region: GershgorinRegion) -> float:
    """``euclid_radius - sqrt((h1^2 + h2^2)/2)``; never negative beyond rounding."""
    h1, h2 = region.hyp_radii
    return region.euclid_radius - math.sqrt(0.5 * (h1 * h1 + h2 * h2))
