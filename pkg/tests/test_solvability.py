import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hassewitt.forms import DiagonalForm
from hassewitt.rationals import REAL_PLACE, Place
from hassewitt.solvability import (
    _first_denominator_dfs,
    _first_denominator_mitm,
    local_oracle,
    ramified_odd_primes,
    relevant_places,
    search_point,
    solvable_over_Q,
    solvable_over_Qp,
    solvable_over_R,
)

coeff = st.fractions(min_value=-9, max_value=9, max_denominator=4).filter(
    lambda q: q != 0
)
forms = st.lists(coeff, min_size=1, max_size=3).map(lambda es: DiagonalForm(tuple(es)))
int_forms = st.lists(
    st.integers(min_value=-9, max_value=9).filter(lambda n: n != 0),
    min_size=1,
    max_size=3,
).map(lambda es: DiagonalForm.of(*es))


def test_solvable_over_R():
    assert solvable_over_R(DiagonalForm.of(-1, "1/7"))
    assert not solvable_over_R(DiagonalForm.of(-1, -2, -3))


@given(forms, st.sampled_from((2, 3, 5, 7, 13)))
@settings(max_examples=200, deadline=None)
def test_local_routes_agree(form, p):
    # closed-form isotropy criteria vs the brute-force residue oracle
    assert solvable_over_Qp(form, p) == local_oracle(form, p)


def test_local_fixed_verdicts():
    assert not solvable_over_Qp(DiagonalForm.of(2), 2)  # 1/2 is not a 2-adic square
    assert not solvable_over_Qp(DiagonalForm.of(2), 5)  # nor a residue mod 5
    assert solvable_over_Qp(DiagonalForm.of(2), 7)  # 1/2 = 4/8 = 4 * 8^-1... 4/2=2^2/2; 2 is a QR mod 7
    assert not solvable_over_Qp(DiagonalForm.of(-1, 3), 2)
    # -x^2 + 3y^2 = 1 forces x^2 = -1 mod 3 after sorting valuations
    assert not solvable_over_Qp(DiagonalForm.of(-1, 3), 3)
    assert solvable_over_Qp(DiagonalForm.of(-1, 3), 11)
    assert not solvable_over_Qp(DiagonalForm.of(3, 3), 2)
    # five variables never obstruct locally
    assert solvable_over_Qp(DiagonalForm.of(-7, -7, -7, -7), 7)


def test_ramified_and_relevant_places():
    f = DiagonalForm.of("2/3", 5)
    assert ramified_odd_primes(f) == [3, 5]
    assert [str(v) for v in relevant_places(f)] == ["inf", "2", "3", "5"]
    assert ramified_odd_primes(DiagonalForm.of(4)) == []
    assert [str(v) for v in relevant_places(DiagonalForm.of(-1))] == ["inf", "2"]


@given(int_forms.filter(lambda f: f.rank >= 2), st.sampled_from((11, 13, 17, 19)))
@settings(max_examples=100, deadline=None)
def test_unramified_odd_places_never_obstruct(form, p):
    # the reduction behind relevant_places: with two or more variables the
    # extended form has three unit entries at an odd unramified prime
    if p in ramified_odd_primes(form):
        return
    assert solvable_over_Qp(form, p)


def test_global_fixed_certificates():
    c = solvable_over_Q(DiagonalForm.of(-1, 3))
    assert not c.verdict
    assert c.failing_place == Place.finite(2)
    assert c.checked_places == (REAL_PLACE, Place.finite(2))
    assert c.witness is None

    c = solvable_over_Q(DiagonalForm.of(-1, -1))
    assert not c.verdict and c.failing_place == REAL_PLACE

    c = solvable_over_Q(DiagonalForm.of(3, 3))
    assert not c.verdict and c.failing_place == Place.finite(2)

    c = solvable_over_Q(DiagonalForm.of(5, 5))
    assert c.verdict and c.witness == (Fraction(1, 5), Fraction(2, 5))


def test_witness_is_height_bounded_not_semantics():
    # the verdict never depends on the search height; only the witness does
    lo = solvable_over_Q(DiagonalForm.of(13, 13), search_height=5)
    hi = solvable_over_Q(DiagonalForm.of(13, 13), search_height=13)
    assert lo.verdict and lo.witness is None
    assert hi.verdict and hi.witness == (Fraction(2, 13), Fraction(3, 13))


def test_search_fixed_points():
    assert search_point(DiagonalForm.of(1, 1), 3) == (Fraction(0), Fraction(1))
    assert search_point(DiagonalForm.of(5, 5), 5) == (Fraction(1, 5), Fraction(2, 5))
    assert search_point(DiagonalForm.of(2, 3, 5, 7), 20) == (
        Fraction(1, 3),
        Fraction(0),
        Fraction(0),
        Fraction(1, 3),
    )
    assert search_point(DiagonalForm.of(-1, -1), 30) is None
    with pytest.raises(ValueError):
        search_point(DiagonalForm.of(1), 0)


@given(forms, st.integers(min_value=1, max_value=8))
@settings(max_examples=120, deadline=None)
def test_search_results_satisfy_the_equation(form, height):
    pt = search_point(form, height)
    if pt is None:
        return
    assert sum(a * x * x for a, x in zip(form.entries, pt)) == 1
    assert all(x >= 0 for x in pt)
    d = math.lcm(*(x.denominator for x in pt))
    assert d <= height
    assert all(abs(x * d) <= height for x in pt)


@given(int_forms, st.integers(min_value=1, max_value=10))
@settings(max_examples=120, deadline=None)
def test_denominator_scan_routes_agree(form, height):
    coeffs = [int(a) for a in form.entries]
    mitm = _first_denominator_mitm(coeffs, 1, height)
    dfs = _first_denominator_dfs(coeffs, 1, height)
    assert mitm == dfs


@given(forms)
@settings(max_examples=80, deadline=None)
def test_false_verdict_means_no_point(form):
    c = solvable_over_Q(form, search_height=6)
    if not c.verdict:
        assert search_point(form, 6) is None
        assert c.failing_place is not None
    else:
        assert c.failing_place is None


@given(forms)
@settings(max_examples=60, deadline=None)
def test_certificate_verdict_matches_all_places(form):
    c = solvable_over_Q(form, search_height=1)
    every = solvable_over_R(form) and all(
        solvable_over_Qp(form, v.p) for v in relevant_places(form) if not v.is_real
    )
    assert c.verdict == every


def test_certificate_json():
    doc = solvable_over_Q(DiagonalForm.of(-1, 3)).to_json()
    assert doc == {
        "solvable": False,
        "witness": None,
        "failing_place": "2",
        "checked_places": ["inf", "2"],
    }
    doc = solvable_over_Q(DiagonalForm.of(5, 5)).to_json()
    assert doc["solvable"] is True
    assert doc["witness"] == ["1/5", "2/5"]
    assert doc["failing_place"] is None
