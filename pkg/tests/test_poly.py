import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bcbounds.core import E, E_DAG, J, ONE, ZERO, BiComplex, compose_i
from bcbounds.errors import NonInvertibleLeading, NotMonic, ShapeError, ZeroDegree
from bcbounds.linalg import eigenvalues
from bcbounds.poly import (BCPoly, RootCase, classify_roots, companion, match_multisets,
                           normalize_monic, scaled_companion, split_poly)
from bcbounds.roots import bc_roots

from conftest import bicomplex, cx


def test_degree_and_leading():
    p = BCPoly([ONE, J, ZERO, ZERO])
    assert p.degree == 1
    assert p.leading == J
    assert BCPoly([ZERO]).is_zero()


def test_split_roundtrip():
    p = BCPoly([compose_i((1, 2)), compose_i((3, 4)), ONE])
    f, g = split_poly(p)
    np.testing.assert_array_equal(f, [1, 3, 1])
    np.testing.assert_array_equal(g, [2, 4, 1])
    assert BCPoly.from_components(f, g) == p


@settings(max_examples=50, deadline=None)
@given(st.lists(bicomplex, min_size=1, max_size=6), bicomplex)
def test_horner_matches_split_evaluation(coeffs, z):
    p = BCPoly(coeffs)
    f, g = p.split()
    b1, b2 = z.decompose_i()
    ref = compose_i((np.polyval(f[::-1], b1), np.polyval(g[::-1], b2)))
    val = p(z)
    scale = sum(c.norm() for c in coeffs) * max(1.0, z.norm()) ** len(coeffs)
    assert (val - ref).norm() <= 1e-10 * scale


def test_json_roundtrip_and_validation():
    p = BCPoly([BiComplex.from_quad(1, 2, 3, 4), 2.0])
    assert BCPoly.from_json(p.to_json()) == p
    assert BCPoly.from_json({"coefficients": [1, [0, 0, 1, 0], 1]}).coeffs[1] == J
    for bad in ({"coefficients": [True, 1]}, {"coefficients": [[1, 2, 3]]}, {"coeffs": [1]}):
        with pytest.raises((KeyError, TypeError, ValueError)):
            BCPoly.from_json(bad)


def test_case_classification():
    # Z^2 + 1: both components nonconstant
    assert bc_roots(BCPoly([ONE, ZERO, ONE])).case is RootCase.CASE_I
    # e Z - e: second component vanishes
    rs = bc_roots(BCPoly([-E, E]))
    assert rs.case is RootCase.CASE_II_G_ZERO and rs.s2 is None
    assert rs.s1 == (1 + 0j,)
    # e' Z + e': first component vanishes
    assert bc_roots(BCPoly([E_DAG, E_DAG])).case is RootCase.CASE_II_F_ZERO
    # e Z + e': g is the constant 1
    assert bc_roots(BCPoly([E_DAG, E])).case is RootCase.CASE_III
    with pytest.raises(ValueError):
        classify_roots(BCPoly([ZERO, ZERO]), None, None)


def test_z_squared_plus_one_has_four_roots():
    rs = bc_roots(BCPoly([ONE, ZERO, ONE]))
    p = BCPoly([ONE, ZERO, ONE])
    assert len(rs.combined) == 4
    assert all(p(z).norm() < 1e-14 for z in rs.combined)
    expected = [BiComplex(1j, 0), BiComplex(-1j, 0), BiComplex(0, 1), BiComplex(0, -1)]
    assert match_multisets(rs.combined, expected, 1e-12)


@settings(max_examples=30, deadline=None)
@given(st.lists(cx, min_size=3, max_size=7), st.lists(cx, min_size=3, max_size=7))
def test_cross_product_cardinality(f, g):
    f, g = f[:-1] + [1], g[:-1] + [1]
    p = BCPoly.from_components(f, g)
    rs = bc_roots(p)
    assert rs.case is RootCase.CASE_I
    assert len(rs.combined) == (len(f) - 1) * (len(g) - 1)


def test_normalize_monic():
    p = BCPoly([ONE, 2 * J])
    m = normalize_monic(p)
    assert m.leading == ONE
    assert (m[0] - (-0.5 * J)).norm() < 1e-15
    with pytest.raises(NonInvertibleLeading):
        normalize_monic(BCPoly([ONE, E]))
    with pytest.raises(ZeroDegree):
        normalize_monic(BCPoly([ONE]))


def test_companion_layout():
    a0, a1 = BiComplex.from_quad(1, 2, 3, 4), J
    c = companion(BCPoly([a0, a1, ONE]))
    assert c.shape == (2, 2)
    assert c[0, 1] == ONE and c[0, 0] == ZERO
    assert c[1, 0] == -a0 and c[1, 1] == -a1
    with pytest.raises(NotMonic):
        companion(BCPoly([ONE, 2 * ONE]))
    with pytest.raises(ShapeError):
        scaled_companion(BCPoly([ONE, ZERO, ONE]), [1.0])


def test_companion_spectrum_matches_roots():
    rng = np.random.default_rng(3)
    for _ in range(30):
        n = int(rng.integers(2, 7))
        f = np.append(rng.normal(size=n) + 1j * rng.normal(size=n), 1)
        g = np.append(rng.normal(size=n) + 1j * rng.normal(size=n), 1)
        p = BCPoly.from_components(f, g)
        m1, m2 = companion(p).split()
        # independent oracle: LAPACK eigenvalues of each component
        ref = [compose_i((a, b)) for a in np.linalg.eigvals(m1) for b in np.linalg.eigvals(m2)]
        assert match_multisets(bc_roots(p).combined, ref, 1e-6)
        spectrum = eigenvalues(companion(p))
        assert match_multisets([compose_i(pr) for pr in spectrum.pairs()], ref, 1e-6)


def test_scaled_companion_similarity():
    p = BCPoly([BiComplex.from_quad(1, 2, 3, 4), J, ONE, ONE])
    d = np.array([0.5, 2.0, 3.0])
    m1, m2 = scaled_companion(p, d).split()
    c1, c2 = companion(p).split()
    D = np.diag(d)
    np.testing.assert_allclose(m1, np.linalg.inv(D) @ c1 @ D, atol=1e-14)
    np.testing.assert_allclose(m2, np.linalg.inv(D) @ c2 @ D, atol=1e-14)


def test_match_multisets():
    a = [ONE, J]
    assert match_multisets(a, [J, ONE])
    assert not match_multisets(a, [ONE])
    assert not match_multisets(a, [ONE, ONE])
    assert match_multisets(a, [ONE + BiComplex(1e-8, 0), J])
