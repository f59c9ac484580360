from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from chernnumbers.chern_algebra import (ChernPolynomial, ChernVector, chern_class, constant,
                                        elementary_from_power_sums, evaluate, monomial, poly_add,
                                        poly_exp, poly_mul, pontryagin_class,
                                        pontryagin_number_functional, power_sum)
from chernnumbers.partitions import partitions_of

c1, c2, c3, c4 = (chern_class(i, 4) for i in range(1, 5))


def test_add_examples():
    assert poly_add(c1, -c1).is_zero()
    assert poly_add(c1 ** 2 - c2 * 2, c2 * 2) == c1 ** 2
    half = c2 * Fraction(1, 2)
    assert poly_add(half, half) == c2


def test_add_truncation_mismatch():
    with pytest.raises(ValueError):
        poly_add(chern_class(1, 3), chern_class(1, 4))
    with pytest.raises(ValueError):
        poly_mul(chern_class(1, 3), chern_class(1, 4))


def test_mul_examples():
    assert poly_mul(c1 ** 2 - c2 * 2, c1 ** 2 - c2 * 2) == c1 ** 4 - c1 ** 2 * c2 * 4 + c2 ** 2 * 4
    assert constant(1, 4) * (c1 + c3) == c1 + c3
    assert (chern_class(1, 3) * chern_class(3, 3)).is_zero()


def test_no_zero_coefficients_stored():
    p = ChernPolynomial(4, [((2,), 1), ((2,), -1), ((1,), 0)])
    assert p.terms == {}
    assert ChernPolynomial(2, {(3,): 1}).is_zero()


def test_keys_are_multisets():
    assert monomial((1, 3), 4) == monomial((3, 1), 4)


def test_power_sums():
    assert power_sum(1, 4) == c1
    assert power_sum(2, 4) == c1 ** 2 - c2 * 2
    assert power_sum(3, 4) == c1 ** 3 - c1 * c2 * 3 + c3 * 3
    with pytest.raises(ValueError):
        power_sum(5, 4)


@pytest.mark.parametrize("m", range(1, 6))
def test_power_sums_against_symmetrization(m):
    """Oracle: symmetrize sum x_i^m over m explicit roots with sympy."""
    import sympy
    from sympy.polys.polyfuncs import symmetrize
    n = m
    xs = sympy.symbols(f"x1:{n + 1}")
    sym, rem, defs = symmetrize(sum(x ** m for x in xs), *xs, formal=True)
    assert rem == 0
    names = {s: i + 1 for i, (s, _) in enumerate(defs)}
    poly = sympy.Poly(sym, *[s for s, _ in defs])
    expected = {}
    for exps, coeff in poly.terms():
        key = tuple(sorted((names[s] for s, e in zip(poly.gens, exps) for _ in range(e)), reverse=True))
        expected[key] = Fraction(int(coeff.p), int(coeff.q))
    assert power_sum(m, 5).terms == expected


@pytest.mark.parametrize("N", range(1, 9))
def test_newton_inverse_recovers_generators(N):
    sums = [power_sum(m, N) for m in range(1, N + 1)]
    recovered = elementary_from_power_sums(sums, N)
    assert recovered == [chern_class(i, N) for i in range(1, N + 1)]


def test_pontryagin_classes():
    assert pontryagin_class(1, 4) == c1 ** 2 - c2 * 2
    assert pontryagin_class(2, 4) == c2 ** 2 - c1 * c3 * 2 + c4 * 2
    with pytest.raises(ValueError):
        pontryagin_class(3, 4)


def test_wu_identity_as_polynomials():
    a1, a2 = chern_class(1, 2), chern_class(2, 2)
    assert a1 ** 2 == a2 * 2 + pontryagin_class(1, 2)


def test_pontryagin_numbers():
    assert pontryagin_number_functional((1, 1), 4) == c1 ** 4 - c1 ** 2 * c2 * 4 + c2 ** 2 * 4
    assert pontryagin_number_functional((2,), 4) == c2 ** 2 - c1 * c3 * 2 + c4 * 2
    assert pontryagin_number_functional((1,), 2) == chern_class(1, 2) ** 2 - chern_class(2, 2) * 2
    with pytest.raises(ValueError):
        pontryagin_number_functional((1,), 3)
    with pytest.raises(ValueError):
        pontryagin_number_functional((2,), 2)


@pytest.mark.parametrize("n", [2, 4, 6, 8])
def test_pontryagin_coefficients_integral(n):
    for J in partitions_of(n // 2):
        f = pontryagin_number_functional(J, n)
        assert f.is_homogeneous(n)
        assert all(c.denominator == 1 for c in f.terms.values())


def test_evaluate_examples():
    surface = ChernVector(2, (3, 9))
    assert evaluate(chern_class(1, 2) ** 2 - chern_class(2, 2) * 2, surface) == 3
    assert evaluate(ChernPolynomial(4), ChernVector(4, (1, 2, 3, 4, 5))) == 0
    # other weights are ignored
    assert evaluate(c1 + c4, ChernVector(4, (7, 0, 0, 0, 0))) == 7
    with pytest.raises(ValueError):
        evaluate(chern_class(1, 1), surface)


def test_exp_of_c1():
    # exp(c1) truncated at weight 3
    e = poly_exp(chern_class(1, 3))
    assert e.coefficient((1, 1, 1)) == Fraction(1, 6)
    with pytest.raises(ValueError):
        poly_exp(constant(1, 3))


def test_render():
    assert str(c1 ** 2 - c2 * 2) == "c1^2 - 2*c2"
    assert str(chern_class(1, 3) * chern_class(2, 3) * Fraction(1, 24)) == "1/24*c1*c2"
    assert str(ChernPolynomial(3)) == "0"


def test_polynomial_records_roundtrip():
    p = c1 ** 4 * Fraction(-1, 720) + c2 * 3
    again = ChernPolynomial.from_records(4, p.to_records())
    assert again == p
    assert {"partition": [1, 1, 1, 1], "coeff": "-1/720"} in p.to_records()


def test_vector_json_roundtrip_and_validation():
    v = ChernVector(3, (Fraction(1, 2), -3, 4))
    assert v.to_json() == {"dim": 3, "values": ["1/2", "-3", "4"]}
    assert ChernVector.from_json(v.to_json()) == v
    with pytest.raises(ValueError):
        ChernVector(3, (1, 2))
    with pytest.raises(TypeError):
        ChernVector(1, (0.5,))


rationals = st.fractions(min_value=-5, max_value=5, max_denominator=6)


@st.composite
def small_polys(draw, N=4):
    keys = [p for w in range(N + 1) for p in partitions_of(w)]
    chosen = draw(st.lists(st.sampled_from(keys), max_size=5))
    return ChernPolynomial(N, [(k, draw(rationals)) for k in chosen])


@settings(max_examples=60, deadline=None)
@given(small_polys(), small_polys(), small_polys())
def test_ring_laws(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert (a - a).is_zero()
