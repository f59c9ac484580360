import pytest
from hypothesis import given, settings, strategies as st

from chernnumbers.chern_algebra import ChernVector
from chernnumbers.manifolds import SurfaceData, fake_partner, times_cp1
from chernnumbers.projbundle import (ProjBundleData, canonical_plus_trivial, p1_sphere_bundle, projectivize,
                                     projectivize_closed_form, ruled_canonical, ruled_tangent,
                                     tangent_bundle, trivial_bundle)

X = SurfaceData(9, 3)
Y = fake_partner(X)


def vals(v):
    return tuple(int(x) for x in v.values)


def test_projectivize_examples():
    assert vals(projectivize(ProjBundleData(9, 0, 0, 3, 0))) == (6, 24, 54)
    assert projectivize(trivial_bundle(X)) == times_cp1(X.vector)
    assert vals(projectivize(ProjBundleData(3, 3, 3, 3, 3))) == (6, 12, 0)
    assert vals(projectivize(ProjBundleData(9, -9, 9, 3, 0))) == (6, 24, 72)


def test_flag_variety():
    # P(T CP^2) is the flag manifold F(1,2;3): Euler number 6, c1 = 2H, H^3 = 6
    assert vals(ruled_tangent(SurfaceData(9, 3))) == (6, 24, 48)


def test_trivial_over_cp2_is_product():
    assert projectivize(trivial_bundle(SurfaceData(9, 3))) == ChernVector(3, (6, 24, 54))


def test_p1_examples():
    assert p1_sphere_bundle(trivial_bundle(X)) == 0
    assert p1_sphere_bundle(tangent_bundle(Y)) == -9
    assert p1_sphere_bundle(ProjBundleData(9, -9, 9, 3, 0)) == 9


def test_ruled_examples():
    assert vals(ruled_tangent(Y)) == (6, 12, 0)
    assert vals(ruled_tangent(X)) == (6, 24, 48)
    assert ruled_tangent(SurfaceData(3, 3))[(1, 1, 1)] == 0
    assert vals(ruled_canonical(X)) == (6, 24, 72)
    assert vals(ruled_canonical(Y)) == (6, 12, 24)
    assert vals(ruled_canonical(SurfaceData(0, 6))) == (12, 12, 0)


ints = st.integers(-1000, 1000)
bundles = st.builds(ProjBundleData, ints, ints, ints, ints, ints)


@settings(max_examples=200)
@given(bundles, ints)
def test_leray_hirsch_matches_closed_form_and_ignores_b_f(d, new_b_f):
    result = projectivize(d)
    assert result == projectivize_closed_form(d)
    assert result == projectivize(ProjBundleData(d.b_sq, new_b_f, d.f_sq, d.c2B, d.c2E))


surfaces = st.builds(lambda c2, s: SurfaceData(2 * c2 + 3 * s, c2),
                     st.integers(-30, 30), st.integers(-20, 20))


@given(surfaces)
def test_ruled_pair_closed_forms(x):
    y = fake_partner(x)
    m, n = ruled_tangent(y), ruled_canonical(x)
    a, e = x.c1_sq, x.c2
    assert m[(3,)] == n[(3,)] == 2 * e
    assert m[(2, 1)] == 2 * (-a + 5 * e)
    assert m[(1, 1, 1)] == 8 * (-a + 3 * e)
    assert n[(2, 1)] == 2 * (a + e)
    assert n[(1, 1, 1)] == 8 * a
    assert p1_sphere_bundle(tangent_bundle(y)) == -a
    assert p1_sphere_bundle(canonical_plus_trivial(x)) == a


@given(surfaces)
def test_m_n_gap_is_four_c1_squared(x):
    m, n = ruled_tangent(fake_partner(x)), ruled_canonical(x)
    combo = lambda v: 3 * v[(2, 1)] - v[(1, 1, 1)]
    assert combo(m) - combo(n) == 4 * x.c1_sq


def test_desk_separation_values():
    m, n = ruled_tangent(Y), ruled_canonical(X)
    assert 3 * m[(2, 1)] - m[(1, 1, 1)] == 36
    assert 3 * n[(2, 1)] - n[(1, 1, 1)] == 0


def test_bundle_data_validation():
    with pytest.raises(TypeError):
        ProjBundleData(1, 2, 3, 4, 5.0)
    d = ProjBundleData(1, 2, 3, 4, 5)
    assert ProjBundleData.from_json(d.to_json()) == d
