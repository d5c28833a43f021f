from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lenewton import (InputError, Polynomial, PolynomialSyntaxError, augment,
                      parse_polynomial, pure_power_indices)
from lenewton.poly import from_terms, monomial


def test_parse_six():
    f = parse_polynomial("z1^2*z2^2 + z2^4 + z3^4", 3)
    assert f.support == {(2, 2, 0), (0, 4, 0), (0, 0, 4)}
    assert all(c == 1 for c in f.terms.values())
    assert f.is_homogeneous() and f.degree() == 4


def test_parse_coefficients_and_cancellation():
    f = parse_polynomial("3/2*z1*z2^7 - z1*z2^7 + 2 z1^2 - 2*z1^2 + z2", 2)
    assert f.terms == {(1, 7): Fraction(1, 2), (0, 1): 1}
    assert parse_polynomial("-z1 + z1^2", 1).coefficient((1,)) == -1


def test_repeated_variable_accumulates():
    assert parse_polynomial("z1*z1^2*z2", 2).support == {(3, 1)}


@pytest.mark.parametrize("text, pos", [
    ("z1^2 +", 6),
    ("z1^^2", 3),
    ("z1 z2", 3),
    ("2*", 2),
    ("z", 1),
    ("1/0*z1", 2),
])
def test_syntax_errors_report_position(text, pos):
    with pytest.raises(PolynomialSyntaxError) as info:
        parse_polynomial(text, 2)
    assert info.value.position == pos
    assert f"position {pos}" in str(info.value)


@pytest.mark.parametrize("text", ["z3^2", "1 + z1", "z1 - z1", "5"])
def test_semantic_errors(text):
    with pytest.raises(InputError):
        parse_polynomial(text, 2)


def test_constant_term_rejected_in_constructor():
    with pytest.raises(InputError):
        Polynomial(2, {(0, 0): 1, (1, 0): 1})
    with pytest.raises(InputError):
        Polynomial(2, {(1, 0, 0): 1})


def test_zero_coefficients_dropped():
    f = Polynomial(2, {(1, 0): 0, (0, 2): 3})
    assert f.support == {(0, 2)}
    assert f.coefficient((1, 0)) == 0


def test_str_is_canonical():
    f = parse_polynomial("z3^4 + z2^4 + z1^2*z2^2", 3)
    assert str(f) == "z1^2*z2^2 + z2^4 + z3^4"
    assert str(parse_polynomial("-3/2*z2^7*z1", 2)) == "-3/2*z1*z2^7"


def test_augment():
    f = parse_polynomial("z1^2*z2^2 + z2^4 + z3^4", 3)
    f1 = augment(f, [5])
    assert f1.support == f.support | {(5, 0, 0)}
    assert augment(f, [3, 3]).support == f.support | {(3, 0, 0), (0, 3, 0)}
    with pytest.raises(InputError):
        augment(f, [1])
    with pytest.raises(InputError):
        augment(f, [3, 3, 3, 3])


def test_augment_collision_warns():
    f = parse_polynomial("z1^5 + z2^2", 2)
    with pytest.warns(UserWarning):
        g = augment(f, [5])
    assert g.coefficient((5, 0)) == 2


def test_pure_power_indices():
    assert pure_power_indices(parse_polynomial("z1^3 + z2^2", 2), 1) == {1}
    assert pure_power_indices(parse_polynomial("z1*z2 + z2^2", 2), 1) == set()
    assert pure_power_indices(parse_polynomial("z1^3 + z2^2 + z3^2", 3), 2) == {1, 2}
    with pytest.raises(InputError):
        pure_power_indices(parse_polynomial("z1^3", 1), 2)


def test_permute():
    f = parse_polynomial("z1^2*z2 + z3^4", 3)
    g = f.permute([3, 1, 2])
    # new z1 is old z3
    assert g.support == {(0, 2, 1), (4, 0, 0)}
    with pytest.raises(InputError):
        f.permute([1, 1, 2])


def test_equality_and_hash():
    f = from_terms(2, [((1, 1), 1), ((0, 2), Fraction(1, 2)), ((0, 2), Fraction(1, 2))])
    g = monomial(2, (1, 1)) + monomial(2, (0, 2))
    assert f == g and hash(f) == hash(g)


exponents = st.tuples(st.integers(0, 6), st.integers(0, 6), st.integers(0, 6)).filter(any)
coeffs = st.fractions(min_value=-50, max_value=50, max_denominator=20).filter(bool)


@settings(max_examples=150, deadline=None)
@given(st.dictionaries(exponents, coeffs, min_size=1, max_size=8))
def test_round_trip(terms):
    f = Polynomial(3, terms)
    assert parse_polynomial(str(f), 3) == f


def test_like_terms_and_empty_augment():
    f = parse_polynomial("z1 + z1", 2)
    assert f.terms == {(1, 0): 2}
    assert augment(f, []) == f
    assert augment(parse_polynomial("z2^2", 2), [5]).support == {(0, 2), (5, 0)}
