from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from chernnumbers.chern_algebra import ChernVector
from chernnumbers.invariance import (ExamplePair, Functional, annihilator, difference,
                                     euler_functional, matches_lift_pattern, nullspace,
                                     pontryagin_functionals, rank, rref, span_contains, span_equals,
                                     threefold_pairs, universal_coefficients, verify_3fold_theorem,
                                     verify_4fold_theorem, verify_higher)
from chernnumbers.manifolds import SurfaceData


def coeffs(basis):
    return [tuple(int(x) if x.denominator == 1 else x for x in f.coefficients) for f in basis]


def test_difference():
    pair = ExamplePair("Z/T", ChernVector(3, (6, 24, 54)), ChernVector(3, (6, 12, 18)))
    assert difference(pair) == (0, -12, -36)
    with pytest.raises(ValueError):
        ExamplePair("bad", ChernVector(3, (0, 0, 0)), ChernVector(2, (0, 0)))


def test_annihilator_examples():
    assert coeffs(annihilator([(0, -12, -36), (0, -12, -72)], 3)) == [(1, 0, 0)]
    assert coeffs(annihilator([], 2)) == [(1, 0), (0, 1)]
    assert annihilator([(1, 0), (0, 1)], 2) == []
    assert coeffs(annihilator([(0, -12, -36)], 3)) == [(1, 0, 0), (0, 1, Fraction(-1, 3))]


def test_span_membership():
    basis = annihilator([(0, -12, -36)], 3)
    assert span_contains(basis, Functional(3, (0, 3, -1)))
    assert span_contains(basis, Functional(3, (5, -6, 2)))
    assert not span_contains(basis, Functional(3, (0, 1, 0)))
    assert span_contains(basis, Functional(3, (0, 0, 0)))


def test_rref_example():
    rows, pivots = rref([(2, 4, 6), (1, 1, 1)], 3)
    assert rows == [(1, 0, -1), (0, 1, 2)]
    assert pivots == [0, 1]
    assert rank([(1, 2), (2, 4)], 2) == 1


int_matrix = st.integers(1, 5).flatmap(
    lambda cols: st.lists(st.lists(st.integers(-6, 6), min_size=cols, max_size=cols), min_size=0, max_size=5)
    .map(lambda rows: (rows, cols)))


def _sympy_annihilator(rows, cols):
    m = sympy.Matrix(rows) if rows else sympy.zeros(0, cols)
    ns = m.nullspace() if rows else [sympy.eye(cols)[:, i] for i in range(cols)]
    if not ns:
        return []
    r, _ = sympy.Matrix.hstack(*ns).T.rref()
    out = []
    for i in range(r.rows):
        row = tuple(Fraction(int(sympy.numer(x)), int(sympy.denom(x))) for x in r.row(i))
        if any(row):
            out.append(row)
    return out


@settings(max_examples=150, deadline=None)
@given(int_matrix)
def test_annihilator_matches_sympy(data):
    rows, cols = data
    ours = [f.coefficients for f in annihilator(rows, _dim_for(cols))] if cols in _DIMS else None
    basis = nullspace(rows, cols)
    assert len(basis) == cols - rank(rows, cols)
    for v in basis:
        assert all(sum(Fraction(a) * b for a, b in zip(r, v)) == 0 for r in rows)
    if ours is not None:
        assert ours == _sympy_annihilator(rows, cols)


# annihilator takes a manifold dimension; p(n) for n = 1..4 is 1, 2, 3, 5
_DIMS = {1: 1, 2: 2, 3: 3, 5: 4}


def _dim_for(cols):
    return _DIMS[cols]


@settings(max_examples=100, deadline=None)
@given(st.lists(st.lists(st.integers(-6, 6), min_size=5, max_size=5), max_size=4),
       st.permutations(range(4)), st.lists(st.integers(1, 9), min_size=4, max_size=4))
def test_annihilator_canonical_under_reordering_and_rescaling(rows, perm, scales):
    rows = rows[:4]
    shuffled = [[Fraction(x, scales[i]) for x in rows[j]] for i, j in enumerate(perm) if j < len(rows)]
    assert annihilator(rows, 4) == annihilator(shuffled, 4)


@settings(max_examples=100, deadline=None)
@given(st.lists(st.lists(st.integers(-6, 6), min_size=3, max_size=3), max_size=3))
def test_span_equals_is_reflexive_and_detects_growth(rows):
    basis = annihilator(rows, 3)
    assert span_equals(basis, list(reversed(basis)))
    bigger = annihilator(rows[:-1], 3) if rows else basis
    assert span_equals(basis, bigger) == (len(basis) == len(bigger))


def test_pontryagin_functionals():
    f = pontryagin_functionals(4)
    assert coeffs([f["p_1_1"]]) == [(0, 0, 4, -4, 1)]
    assert coeffs([f["p_2"]]) == [(2, -2, 1, 0, 0)]
    assert set(pontryagin_functionals(2)) == {"p_1"}
    with pytest.raises(ValueError):
        pontryagin_functionals(3)


@pytest.mark.parametrize("seed", [(9, 3), (21, 6), (3, 3), (-3, 6)])
def test_3fold_theorem(seed):
    r = verify_3fold_theorem(SurfaceData(*seed))
    assert r.passed
    assert coeffs(r.annihilator_basis) == [(1, 0, 0)]


def test_3fold_desk_values():
    products, ruled = threefold_pairs(SurfaceData(9, 3))
    assert products.left.values == (6, 24, 54) and products.right.values == (6, 12, 18)
    assert ruled.left.values == (6, 24, 72) and ruled.right.values == (6, 12, 0)


def test_signature_zero_rejected():
    with pytest.raises(ValueError):
        verify_3fold_theorem(SurfaceData(8, 4))
    with pytest.raises(ValueError):
        verify_4fold_theorem(SurfaceData(8, 4))


@pytest.mark.parametrize("seed", [(9, 3), (21, 6), (-3, 6)])
def test_4fold_theorem(seed):
    r = verify_4fold_theorem(SurfaceData(*seed))
    assert r.passed
    assert len(r.annihilator_basis) == 3
    for f in [euler_functional(4)] + list(pontryagin_functionals(4).values()):
        assert span_contains(r.annihilator_basis, f)


def test_seed_with_vanishing_c1_squared_is_not_enough():
    # N - M differs from Z - T only through c1^2 of the seed
    x = SurfaceData(0, 6)
    r3, r4 = verify_3fold_theorem(x), verify_4fold_theorem(x)
    assert not r3.passed and len(r3.annihilator_basis) == 2
    assert not r4.passed and len(r4.annihilator_basis) == 4


def test_4fold_desk_differences():
    r = verify_4fold_theorem(SurfaceData(9, 3))
    assert [tuple(d) for d in r.difference_vectors] == [(0, -24, -48, -120, -288), (0, -24, -48, -192, -576)]


def test_lift_pattern():
    assert matches_lift_pattern((0, -12, -36), (0, -24, -48, -120, -288))
    assert not matches_lift_pattern((0, -12, -36), (0, -24, -48, -120, -289))


def test_universal_coefficients_examples():
    u4 = universal_coefficients(4)
    assert u4[(4,)] == (0, 4)
    assert u4[(3, 1)] == (4, 8)
    assert u4[(2, 2)] == (8, 8)
    assert u4[(2, 1, 1)] == (20, 8)
    assert u4[(1, 1, 1, 1)] == (48, 0)
    assert universal_coefficients(3) == {(3,): (0, 2), (2, 1): (2, 2), (1, 1, 1): (6, 0)}


@pytest.mark.parametrize("n", range(3, 7))
def test_verify_higher(n):
    r = verify_higher(n)
    assert r.passed, r.details
    u = universal_coefficients(n)
    # c1^n is a pure multiple of c1^2 of the base surface
    assert u[(1,) * n][1] == 0


def test_report_json_shape():
    j = verify_3fold_theorem(SurfaceData(9, 3)).to_json()
    assert set(j) == {"theorem", "inputs", "difference_vectors", "annihilator_basis",
                      "expected_basis", "pass", "details"}
    assert j["annihilator_basis"] == [["1", "0", "0"]]
