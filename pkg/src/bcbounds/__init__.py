"""Bicomplex arithmetic, polynomials, matrices and zero-localisation bounds."""

from .core import (E, E_DAG, I, J, K, ONE, ZERO, BiComplex, HypModulus, IdemPair, Region,
                   RegionKind, compose_i, decompose_i, decompose_j, discus_enclosing_ball,
                   from_quad, hyp_modulus, inverse, is_invertible, norm, region_contains)
from .linalg import (BCMatrix, GershgorinRegion, Spectrum, check_gershgorin, determinant,
                     eigenvalues, gershgorin)
from .poly import (BCPoly, RootCase, RootStructure, classify_roots, companion, normalize_monic,
                   scaled_companion, split_poly)
from .roots import SolverConfig, bc_roots, cx_roots, positive_root
from .bounds import BoundKind, BoundResult, bound_catalog

__version__ = "0.1.0"
