"""Bicomplex polynomials, their idempotent split and companion matrices."""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from itertools import product

import numpy as np

from .core import ONE, ZERO, BiComplex, from_idempotent, to_idempotent
from .errors import NonInvertibleLeading, NotMonic, ShapeError, ZeroDegree
from .linalg import BCMatrix


class BCPoly:
    """``A_0 + A_1 Z + ... + A_n Z^n`` with bicomplex coefficients (ascending)."""

    __slots__ = ("z1", "z2")

    def __init__(self, coeffs):
        vals = [BiComplex.coerce(c) for c in coeffs]
        if not vals:
            vals = [ZERO]
        z1 = np.array([v.z1 for v in vals], dtype=complex)
        z2 = np.array([v.z2 for v in vals], dtype=complex)
        z1.setflags(write=False)
        z2.setflags(write=False)
        object.__setattr__(self, "z1", z1)
        object.__setattr__(self, "z2", z2)

    def __setattr__(self, name, value):
        raise AttributeError("BCPoly is immutable")

    @classmethod
    def from_components(cls, f, g) -> "BCPoly":
        """Polynomial whose idempotent components are ``f`` and ``g``."""
        f = np.asarray(f, dtype=complex)
        g = np.asarray(g, dtype=complex)
        size = max(len(f), len(g))
        f = np.pad(f, (0, size - len(f)))
        g = np.pad(g, (0, size - len(g)))
        z1, z2 = from_idempotent(f, g)
        return cls([BiComplex(a, b) for a, b in zip(z1, z2)])

    @property
    def coeffs(self) -> tuple[BiComplex, ...]:
        return tuple(BiComplex(a, b) for a, b in zip(self.z1, self.z2))

    def __len__(self) -> int:
        return len(self.z1)

    def __getitem__(self, i: int) -> BiComplex:
        return BiComplex(self.z1[i], self.z2[i])

    @property
    def degree(self) -> int:
        """Index of the highest coefficient that is not exactly zero (0 for the zero polynomial)."""
        nz = np.flatnonzero((self.z1 != 0) | (self.z2 != 0))
        return int(nz[-1]) if nz.size else 0

    @property
    def leading(self) -> BiComplex:
        return self[self.degree]

    def is_zero(self) -> bool:
        return not (np.any(self.z1) or np.any(self.z2))

    def split(self) -> tuple[np.ndarray, np.ndarray]:
        return to_idempotent(self.z1, self.z2)

    def coefficient_norms(self) -> np.ndarray:
        return np.sqrt(np.abs(self.z1) ** 2 + np.abs(self.z2) ** 2)

    def evaluate(self, z) -> BiComplex:
        z = BiComplex.coerce(z)
        acc = self[self.degree]
        for i in range(self.degree - 1, -1, -1):
            acc = acc * z + self[i]
        return acc

    __call__ = evaluate

    def __eq__(self, other) -> bool:
        if not isinstance(other, BCPoly):
            return NotImplemented
        return self.coeffs[: self.degree + 1] == other.coeffs[: other.degree + 1]

    __hash__ = None

    def __repr__(self) -> str:
        return f"BCPoly(degree={self.degree}, coeffs={list(self.coeffs)!r})"

    # interchange: {"coefficients": [[x0, x1, x2, x3] | real, ...]} ascending
    def to_json(self) -> dict:
        return {"coefficients": [list(c.quad) for c in self.coeffs]}

    @classmethod
    def from_json(cls, obj) -> "BCPoly":
        coeffs = obj["coefficients"] if isinstance(obj, dict) else obj
        if not isinstance(coeffs, list) or not coeffs:
            raise ValueError("'coefficients' must be a non-empty list")
        out = []
        for c in coeffs:
            if isinstance(c, bool):
                raise ValueError(f"bad coefficient {c!r}")
            if isinstance(c, (int, float)):
                out.append(BiComplex.from_quad(float(c), 0.0, 0.0, 0.0))
            elif isinstance(c, list) and len(c) == 4 and all(
                    isinstance(x, (int, float)) and not isinstance(x, bool) for x in c):
                out.append(BiComplex.from_quad(*(float(x) for x in c)))
            else:
                raise ValueError(f"bad coefficient {c!r}: expected a real or [x0, x1, x2, x3]")
        return cls(out)


def split_poly(p: BCPoly) -> tuple[np.ndarray, np.ndarray]:
    """Component coefficient arrays ``(f, g)`` with ``P(Z) = f(b1) e + g(b2) e'``."""
    return p.split()


def evaluate(p: BCPoly, z: BiComplex) -> BiComplex:
    return p.evaluate(z)


def _cx_degree(c: np.ndarray) -> int:
    """Degree of a complex coefficient array; -1 when identically zero."""
    nz = np.flatnonzero(c)
    return int(nz[-1]) if nz.size else -1


class RootCase(str, enum.Enum):
    CASE_I = "CaseI"
    CASE_II_F_ZERO = "CaseII_f_zero"
    CASE_II_G_ZERO = "CaseII_g_zero"
    CASE_III = "CaseIII_no_roots"


@dataclass(frozen=True)
class RootStructure:
    """Zero set of a bicomplex polynomial.

    ``s1``/``s2`` are the component root multisets; ``None`` stands for "all of
    C" on the side whose component polynomial vanishes identically (Case II).
    ``combined`` lists every ``b1 e + b2 e'`` pair and is filled only in Case I.
    """

    case: RootCase
    s1: tuple[complex, ...] | None
    s2: tuple[complex, ...] | None
    combined: tuple[BiComplex, ...] = field(default=(), repr=False)

    @property
    def has_roots(self) -> bool:
        return self.case is not RootCase.CASE_III

    def combined_arrays(self) -> tuple[np.ndarray, np.ndarray]:
        """Idempotent parts ``(b1, b2)`` of ``combined`` as arrays."""
        if self.case is not RootCase.CASE_I:
            return np.zeros(0, complex), np.zeros(0, complex)
        b1, b2 = zip(*product(self.s1, self.s2))
        return np.array(b1, dtype=complex), np.array(b2, dtype=complex)

    def max_root_norm(self) -> float:
        b1, b2 = self.combined_arrays()
        if b1.size == 0:
            return float("nan")
        return float(np.sqrt(0.5 * (np.abs(b1) ** 2 + np.abs(b2) ** 2)).max())


def classify_roots(p: BCPoly, s1, s2) -> RootStructure:
    """Sort the zero set of ``p`` into Case I / II / III.

    ``s1``/``s2`` are root multisets of the split components (``None`` for an
    identically-zero component).  A component that is a nonzero constant
    has no roots, so neither does ``p``.
    """
    f, g = p.split()
    df, dg = _cx_degree(f), _cx_degree(g)
    if df < 0 and dg < 0:
        raise ValueError("the zero polynomial vanishes everywhere")
    if df == 0 or dg == 0:
        return RootStructure(RootCase.CASE_III, (), ())
    if df < 0:
        return RootStructure(RootCase.CASE_II_F_ZERO, None, tuple(complex(x) for x in s2))
    if dg < 0:
        return RootStructure(RootCase.CASE_II_G_ZERO, tuple(complex(x) for x in s1), None)
    s1 = tuple(complex(x) for x in s1)
    s2 = tuple(complex(x) for x in s2)
    if len(s1) != df or len(s2) != dg:
        raise ValueError(f"expected {df} and {dg} component roots, got {len(s1)} and {len(s2)}")
    combined = tuple(BiComplex.from_idempotent(a, b) for a, b in product(s1, s2))
    return RootStructure(RootCase.CASE_I, s1, s2, combined)


def normalize_monic(p: BCPoly) -> BCPoly:
    n = p.degree
    if n < 1:
        raise ZeroDegree("polynomial of degree 0 has no monic form")
    lead = p[n]
    if not lead.is_invertible():
        raise NonInvertibleLeading(f"leading coefficient {lead} is zero or a zero divisor")
    inv = lead.inverse()
    return BCPoly([c * inv for c in p.coeffs[:n]] + [ONE])


def _require_monic(p: BCPoly) -> int:
    n = p.degree
    if n < 1:
        raise ZeroDegree("degree must be at least 1")
    if p[n] != ONE:
        raise NotMonic(f"leading coefficient is {p[n]}, not 1")
    return n


def companion(p: BCPoly) -> BCMatrix:
    """Ones on the superdiagonal, ``-A_0 .. -A_{n-1}`` across the last row."""
    return scaled_companion(p, np.ones(_require_monic(p)))


def scaled_companion(p: BCPoly, d) -> BCMatrix:
    """``D^{-1} C_P D`` for ``D = diag(d)`` with positive ``d``."""
    n = _require_monic(p)
    d = np.asarray(d, dtype=float)
    if d.shape != (n,):
        raise ShapeError(f"need {n} scale factors, got shape {d.shape}")
    if not np.all(d > 0) or not np.all(np.isfinite(d)):
        raise ValueError("scale factors must be positive and finite")
    z1 = np.zeros((n, n), dtype=complex)
    z2 = np.zeros((n, n), dtype=complex)
    idx = np.arange(n - 1)
    z1[idx, idx + 1] = d[1:] / d[:-1]
    z1[n - 1, :] = -p.z1[:n] * d / d[n - 1]
    z2[n - 1, :] = -p.z2[:n] * d / d[n - 1]
    return BCMatrix(z1, z2)


def match_multisets(a, b, tol: float = 1e-6) -> bool:
    """Greedy nearest-neighbour matching of two bicomplex multisets.

    Each pair may differ by at most ``tol * max(1, |x|)``.
    """
    a, b = list(a), list(b)
    if len(a) != len(b):
        return False
    if not a:
        return True
    xa = np.array([z.decompose_i() for z in a], dtype=complex)
    yb = np.array([z.decompose_i() for z in b], dtype=complex)
    free = np.ones(len(b), dtype=bool)
    for x in xa:
        d = np.sqrt(0.5 * (np.abs(yb[:, 0] - x[0]) ** 2 + np.abs(yb[:, 1] - x[1]) ** 2))
        d[~free] = np.inf
        k = int(np.argmin(d))
        if not d[k] <= tol * max(1.0, math.sqrt(0.5 * (abs(x[0]) ** 2 + abs(x[1]) ** 2))):
            return False
        free[k] = False
    return True
