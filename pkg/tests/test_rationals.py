import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hassewitt.rationals import (
    FactorizationLimitError,
    Place,
    REAL_PLACE,
    as_rational,
    factor,
    format_rational,
    is_prime,
    legendre_symbol,
    padic_valuation,
    smallest_nonresidue,
    squarefree_part,
    unit_part,
    unit_residue,
)

nonzero_rationals = st.fractions(
    min_value=-10**4, max_value=10**4, max_denominator=10**4
).filter(lambda q: q != 0)

small_primes = st.sampled_from((2, 3, 5, 7, 11, 13))


def test_as_rational_accepts_exact_inputs():
    assert as_rational(3) == 3
    assert as_rational("3/4") == Fraction(3, 4)
    assert as_rational(" -7 ") == -7
    assert as_rational(Fraction(1, 2)) == Fraction(1, 2)


def test_as_rational_rejects_floats_and_junk():
    with pytest.raises(TypeError):
        as_rational(0.5)
    with pytest.raises(TypeError):
        as_rational(True)
    with pytest.raises(ValueError):
        as_rational("1/0")
    with pytest.raises(ValueError):
        as_rational("pi")


def test_format_round_trip():
    for text in ("3/4", "-3/4", "7", "0", "-12"):
        assert format_rational(as_rational(text)) == text


def test_squarefree_part_fixed_values():
    assert squarefree_part(1) == 1
    assert squarefree_part(18) == 2
    assert squarefree_part(Fraction(-4, 9)) == -1
    assert squarefree_part(50) == 2
    assert squarefree_part(12) == 3
    assert squarefree_part(Fraction(5, 27)) == 15
    with pytest.raises(ValueError):
        squarefree_part(0)


def test_padic_valuation_fixed_values():
    assert padic_valuation(8, 2) == 3
    assert padic_valuation(Fraction(2, 9), 3) == -2
    assert padic_valuation(1, 5) == 0
    with pytest.raises(ValueError):
        padic_valuation(0, 3)
    with pytest.raises(ValueError):
        padic_valuation(4, 6)


def test_legendre_fixed_values():
    assert legendre_symbol(1, 7) == 1
    assert legendre_symbol(2, 5) == -1
    assert legendre_symbol(10, 5) == 0
    assert legendre_symbol(-1, 3) == -1
    assert legendre_symbol(-1, 5) == 1
    with pytest.raises(ValueError):
        legendre_symbol(3, 2)
    with pytest.raises(ValueError):
        legendre_symbol(3, 9)


def test_is_prime_basics():
    assert [n for n in range(20) if is_prime(n)] == [2, 3, 5, 7, 11, 13, 17, 19]
    assert is_prime(1000003)
    assert not is_prime(1000003 * 3)
    with pytest.raises(FactorizationLimitError):
        is_prime(10**13 + 1)


def test_factor_certification_boundary():
    # a square of a large prime is fine: the square-free part is clean anyway
    assert factor(1000003**2) == {1000003: 2}
    assert squarefree_part(1000003**2) == 1
    # a product of two distinct large primes cannot be certified
    with pytest.raises(FactorizationLimitError):
        factor(1000003 * 1000033)


def test_factor_fixed_values():
    assert factor(360) == {2: 3, 3: 2, 5: 1}
    assert factor(-7) == {7: 1}
    with pytest.raises(ValueError):
        factor(0)


@given(nonzero_rationals)
@settings(max_examples=200)
def test_squarefree_part_is_square_complement(q):
    s = squarefree_part(q)
    ratio = q / s
    # q/s must be the square of a rational
    assert ratio > 0
    assert math.isqrt(ratio.numerator) ** 2 == ratio.numerator
    assert math.isqrt(ratio.denominator) ** 2 == ratio.denominator
    # and s itself is square-free
    assert all(e == 1 for e in factor(s).values())


@given(nonzero_rationals, nonzero_rationals, small_primes)
@settings(max_examples=200)
def test_valuation_is_additive(a, b, p):
    assert padic_valuation(a * b, p) == padic_valuation(a, p) + padic_valuation(b, p)


@given(nonzero_rationals, small_primes)
@settings(max_examples=200)
def test_unit_part_decomposition(q, p):
    u = unit_part(q, p)
    assert padic_valuation(u, p) == 0
    assert u * Fraction(p) ** padic_valuation(q, p) == q


@given(nonzero_rationals, small_primes, st.integers(min_value=1, max_value=4))
@settings(max_examples=200)
def test_unit_residue_matches_unit_part(q, p, k):
    r = unit_residue(q, p, k)
    u = unit_part(q, p)
    # r * den = num mod p^k
    assert (r * u.denominator - u.numerator) % p**k == 0
    assert 0 < r < p**k and r % p != 0


@given(st.integers(min_value=-200, max_value=200), st.sampled_from((3, 5, 7, 11, 13)))
@settings(max_examples=200)
def test_legendre_is_multiplicative(a, p):
    assert legendre_symbol(a * a, p) == (0 if a % p == 0 else 1)
    assert legendre_symbol(a * p, p) == 0
    if a % p:
        assert legendre_symbol(a, p) in (1, -1)


def test_smallest_nonresidue():
    assert smallest_nonresidue(3) == 2
    assert smallest_nonresidue(7) == 3
    assert smallest_nonresidue(17) == 3
    with pytest.raises(ValueError):
        smallest_nonresidue(2)


def test_place_basics():
    assert REAL_PLACE.is_real
    assert str(REAL_PLACE) == "inf"
    assert str(Place.finite(7)) == "7"
    assert Place.parse("inf") == REAL_PLACE
    assert Place.parse("13") == Place.finite(13)
    with pytest.raises(ValueError):
        Place.finite(6)
    with pytest.raises(ValueError):
        Place.parse("xyz")
    with pytest.raises(ValueError):
        Place.parse("4")


def test_place_ordering():
    places = [Place.finite(7), REAL_PLACE, Place.finite(2), Place.finite(3)]
    assert sorted(places) == [REAL_PLACE, Place.finite(2), Place.finite(3), Place.finite(7)]
