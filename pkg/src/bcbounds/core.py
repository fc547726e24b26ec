"""Bicomplex numbers, their idempotent representations, norms and regions.

A bicomplex number is stored as ``Z = z1 + j*z2`` with ``z1, z2`` ordinary
Python complex numbers over C(i).  The idempotent basis

    e  = (1 + ij) / 2,    e' = (1 - ij) / 2

diagonalises multiplication: ``Z = b1*e + b2*e'`` with ``b1 = z1 - i*z2`` and
``b2 = z1 + i*z2``, and products/inverses act on ``(b1, b2)`` componentwise.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import NamedTuple, Sequence, Union

import numpy as np

from .errors import ZeroDivisorError

Scalar = Union[int, float, complex]
_SQRT2 = math.sqrt(2.0)


def to_idempotent(z1, z2):
    """``(z1, z2) -> (b1, b2)``.  Works elementwise on numpy arrays too."""
    iz2 = 1j * z2
    return z1 - iz2, z1 + iz2


def from_idempotent(b1, b2):
    """Inverse of :func:`to_idempotent`.  Works elementwise on numpy arrays too."""
    return 0.5 * (b1 + b2), 0.5j * (b1 - b2)


def to_idempotent_j(x0, x1, x2, x3):
    """Quad components to the C(j) pair, ``j`` carried in the imaginary slot.

    Elementwise on numpy arrays.
    """
    return (x0 + x3) + 1j * (x2 - x1), (x0 - x3) + 1j * (x2 + x1)


def pair_norm(c1, c2):
    """``sqrt((|c1|^2 + |c2|^2) / 2)`` without squaring; elementwise on arrays."""
    return np.hypot(np.abs(c1), np.abs(c2)) / _SQRT2


class IdemPair(NamedTuple):
    b1: complex
    b2: complex


class HypModulus(NamedTuple):
    m1: float
    m2: float

    @property
    def euclidean_norm(self) -> float:
        return math.sqrt(0.5 * (self.m1 * self.m1 + self.m2 * self.m2))


def _finite(c: complex) -> bool:
    return math.isfinite(c.real) and math.isfinite(c.imag)


@dataclass(frozen=True, slots=True)
class BiComplex:
    """Immutable bicomplex number ``z1 + j*z2``."""

    z1: complex = 0j
    z2: complex = 0j

    def __post_init__(self):
        z1 = complex(self.z1)
        z2 = complex(self.z2)
        if not (_finite(z1) and _finite(z2)):
            raise ValueError(f"non-finite bicomplex component: {z1!r}, {z2!r}")
        object.__setattr__(self, "z1", z1)
        object.__setattr__(self, "z2", z2)

    # -- construction -------------------------------------------------------

    @classmethod
    def from_quad(cls, x0: float, x1: float, x2: float, x3: float) -> "BiComplex":
        """``x0 + i*x1 + j*x2 + k*x3``."""
        for x in (x0, x1, x2, x3):
            if not math.isfinite(x):
                raise ValueError(f"non-finite component {x!r}")
        return cls(complex(x0, x1), complex(x2, x3))

    @classmethod
    def from_idempotent(cls, b1: complex, b2: complex) -> "BiComplex":
        b1, b2 = complex(b1), complex(b2)
        z1, z2 = from_idempotent(b1, b2)
        return cls(z1, z2)

    @classmethod
    def coerce(cls, value) -> "BiComplex":
        if isinstance(value, BiComplex):
            return value
        if isinstance(value, (int, float, complex)):
            return cls(complex(value), 0j)
        if isinstance(value, Sequence) and len(value) == 4:
            return cls.from_quad(*(float(x) for x in value))
        raise TypeError(f"cannot interpret {value!r} as a bicomplex number")

    # -- views --------------------------------------------------------------

    @property
    def quad(self) -> tuple[float, float, float, float]:
        return (self.z1.real, self.z1.imag, self.z2.real, self.z2.imag)

    def decompose_i(self) -> IdemPair:
        return IdemPair(*to_idempotent(self.z1, self.z2))

    def decompose_j(self) -> IdemPair:
        """C(j) idempotent pair ``(g1, g2)``.

        The C(j) components are returned as Python complex numbers whose
        imaginary part is the coefficient of ``j`` (not ``i``).
        """
        x0, x1, x2, x3 = self.quad
        return IdemPair(complex(x0 + x3, x2 - x1), complex(x0 - x3, x2 + x1))

    def norm(self) -> float:
        return math.hypot(self.z1.real, self.z1.imag, self.z2.real, self.z2.imag)

    def hyp_modulus(self) -> HypModulus:
        b1, b2 = self.decompose_i()
        return HypModulus(abs(b1), abs(b2))

    def is_invertible(self) -> bool:
        b1, b2 = self.decompose_i()
        return b1 != 0 and b2 != 0

    def is_zero(self) -> bool:
        return self.z1 == 0 and self.z2 == 0

    def inverse(self) -> "BiComplex":
        b1, b2 = self.decompose_i()
        if b1 == 0 or b2 == 0:
            raise ZeroDivisorError(f"{self} is not invertible (idempotent parts {b1}, {b2})")
        return BiComplex.from_idempotent(1 / b1, 1 / b2)

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other):
        o = _as_bc(other)
        if o is None:
            return NotImplemented
        return BiComplex(self.z1 + o.z1, self.z2 + o.z2)

    __radd__ = __add__

    def __sub__(self, other):
        o = _as_bc(other)
        if o is None:
            return NotImplemented
        return BiComplex(self.z1 - o.z1, self.z2 - o.z2)

    def __rsub__(self, other):
        o = _as_bc(other)
        if o is None:
            return NotImplemented
        return o - self

    def __neg__(self):
        return BiComplex(-self.z1, -self.z2)

    def __pos__(self):
        return self

    def __mul__(self, other):
        if isinstance(other, (int, float, complex)):
            return BiComplex(self.z1 * other, self.z2 * other)
        if not isinstance(other, BiComplex):
            return NotImplemented
        # (z1 + j z2)(w1 + j w2) with j^2 = -1
        z1, z2, w1, w2 = self.z1, self.z2, other.z1, other.z2
        return BiComplex(z1 * w1 - z2 * w2, z1 * w2 + z2 * w1)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, float)):
            return BiComplex(self.z1 / other, self.z2 / other)
        o = _as_bc(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = _as_bc(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            return NotImplemented
        out, base = ONE, self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __abs__(self) -> float:
        return self.norm()

    def __repr__(self) -> str:
        x0, x1, x2, x3 = self.quad
        return f"BiComplex({x0!r} + {x1!r}i + {x2!r}j + {x3!r}k)"


def _as_bc(value) -> BiComplex | None:
    if isinstance(value, BiComplex):
        return value
    if isinstance(value, (int, float, complex)):
        return BiComplex(complex(value), 0j)
    return None


ZERO = BiComplex(0j, 0j)
ONE = BiComplex(1 + 0j, 0j)
I = BiComplex(1j, 0j)
J = BiComplex(0j, 1 + 0j)
K = BiComplex(0j, 1j)
E = BiComplex.from_idempotent(1, 0)
E_DAG = BiComplex.from_idempotent(0, 1)


# Free-function spellings of the methods above.

def from_quad(x0: float, x1: float, x2: float, x3: float) -> BiComplex:
    return BiComplex.from_quad(x0, x1, x2, x3)


def decompose_i(z: BiComplex) -> IdemPair:
    return z.decompose_i()


def compose_i(pair) -> BiComplex:
    b1, b2 = pair
    return BiComplex.from_idempotent(b1, b2)


def decompose_j(z: BiComplex) -> IdemPair:
    return z.decompose_j()


def compose_j(pair) -> BiComplex:
    """Inverse of :func:`decompose_j` (components carry ``j`` in the imaginary slot)."""
    g1, g2 = complex(pair[0]), complex(pair[1])
    x0 = 0.5 * (g1.real + g2.real)
    x3 = 0.5 * (g1.real - g2.real)
    x2 = 0.5 * (g1.imag + g2.imag)
    x1 = 0.5 * (g2.imag - g1.imag)
    return BiComplex.from_quad(x0, x1, x2, x3)


def norm(z: BiComplex) -> float:
    return z.norm()


def norm_idempotent(z: BiComplex) -> float:
    b1, b2 = z.decompose_i()
    return math.hypot(abs(b1), abs(b2)) / _SQRT2


def norm_cj(z: BiComplex) -> float:
    g1, g2 = z.decompose_j()
    return math.hypot(abs(g1), abs(g2)) / _SQRT2


def hyp_modulus(z: BiComplex) -> HypModulus:
    return z.hyp_modulus()


def is_invertible(z: BiComplex) -> bool:
    return z.is_invertible()


def inverse(z: BiComplex) -> BiComplex:
    return z.inverse()


def discus_enclosing_ball(r1: float, r2: float) -> float:
    """Radius of the smallest centred ball containing a discus with radii ``r1, r2``."""
    if r1 < 0 or r2 < 0:
        raise ValueError("radii must be non-negative")
    return math.sqrt(0.5 * (r1 * r1 + r2 * r2))


# -- regions -----------------------------------------------------------------

class RegionKind(str, enum.Enum):
    BALL = "ball"
    DISCUS = "discus"
    EXTERIOR_BALL = "exterior_ball"


DEFAULT_RTOL = 1e-9
DEFAULT_ATOL = 1e-12


def _slack(r: float, rtol: float, atol: float) -> float:
    return max(rtol * r, atol)


@dataclass(frozen=True)
class Region:
    """Closed ball, closed discus, or closed exterior of a ball.

    Discus membership is tested on the idempotent components:
    ``|b1 - c1| <= r1`` and ``|b2 - c2| <= r2``.
    """

    kind: RegionKind
    center: BiComplex
    radius: float = 0.0
    radii: tuple[float, float] | None = None

    def __post_init__(self):
        if self.kind is RegionKind.DISCUS:
            if self.radii is None or min(self.radii) < 0:
                raise ValueError("discus needs two non-negative radii")
        elif not self.radius >= 0:
            raise ValueError(f"radius must be non-negative, got {self.radius}")

    @classmethod
    def ball(cls, center, radius: float) -> "Region":
        return cls(RegionKind.BALL, BiComplex.coerce(center), float(radius))

    @classmethod
    def exterior_ball(cls, center, radius: float) -> "Region":
        return cls(RegionKind.EXTERIOR_BALL, BiComplex.coerce(center), float(radius))

    @classmethod
    def discus(cls, center, r1: float, r2: float) -> "Region":
        r1, r2 = float(r1), float(r2)
        return cls(RegionKind.DISCUS, BiComplex.coerce(center),
                   discus_enclosing_ball(r1, r2), (r1, r2))

    def contains(self, z: BiComplex, rtol: float = DEFAULT_RTOL,
                 atol: float = DEFAULT_ATOL) -> bool:
        if self.kind is RegionKind.DISCUS:
            b1, b2 = (z - self.center).decompose_i()
            r1, r2 = self.radii
            return (abs(b1) <= r1 + _slack(r1, rtol, atol)
                    and abs(b2) <= r2 + _slack(r2, rtol, atol))
        d = (z - self.center).norm()
        slack = _slack(self.radius, rtol, atol)
        if self.kind is RegionKind.BALL:
            return d <= self.radius + slack
        return d >= self.radius - slack

    def __contains__(self, z) -> bool:
        return self.contains(BiComplex.coerce(z))


def region_contains(region: Region, z: BiComplex, rtol: float = DEFAULT_RTOL,
                    atol: float = DEFAULT_ATOL) -> bool:
    return region.contains(z, rtol, atol)
