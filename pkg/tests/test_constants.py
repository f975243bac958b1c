import math
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from hookbias.constants import (
    Q_rs,
    S_rs,
    S_rs_reduced,
    beta_closed,
    beta_display,
    beta_from_S,
    beta_quadrature,
    beta_recurrence_check,
    closed_sum_even,
    closed_sum_odd,
    f1,
    f2,
    f3,
    gamma,
    half_to_one_integral,
    integral_I,
    lemma_binom_even,
    lemma_binom_odd,
    recurrence_step,
)
from hookbias.logrational import LOG2, LogRational
from hookbias.quadrature import QuadratureSpec, ToleranceNotReached, adaptive_simpson

HALF = Fraction(1, 2)


def test_logrational_arithmetic():
    x = LogRational(Fraction(1, 3), 2)
    assert x + x == x * 2 == LogRational(Fraction(2, 3), 4)
    assert (x - x).is_rational()
    assert not LogRational.log2().is_rational()
    assert math.isclose(float(x), 1 / 3 + 2 * LOG2)
    assert str(LogRational(Fraction(-1, 16), HALF)) == "-1/16 + 1/2*log(2)"
    assert x.as_json() == {"r": "1/3", "s": "2"}


@pytest.mark.parametrize(
    "a,c,want",
    [(2, 1, LOG2 / 2), (2, 2, 0.25), (4, 1, (1 - LOG2) / 2)],
)
def test_integral_I(a, c, want):
    assert abs(integral_I(a, c) - want) < 1e-12


def test_quadrature_gives_up():
    with pytest.raises(ToleranceNotReached):
        adaptive_simpson(lambda u: np.sin(1 / (u + 1e-6)), 0.0, 1.0, 1e-14, 8)
    with pytest.raises(ValueError):
        QuadratureSpec(abs_tol=0)


@pytest.mark.parametrize("t,want", [(3, 0.25), (2, LOG2 / 2), (1, LOG2 / 2)])
def test_beta_quadrature_examples(t, want):
    assert abs(beta_quadrature(t) - want) < 1e-11


def test_S_examples():
    assert S_rs(2, -1, 3) == LogRational()
    assert S_rs(1, 1, 3) == LogRational(Fraction(1, 4))
    assert S_rs(1, 0, 2) == LogRational(0, HALF)


def test_beta_closed_examples():
    assert beta_closed(3) == LogRational(Fraction(1, 4))
    assert beta_closed(2) == LogRational(0, HALF)
    assert beta_closed(6).is_rational()
    assert abs(float(beta_closed(6)) - beta_quadrature(6)) < 1e-11


@pytest.mark.parametrize("t,want", [(2, 1.4426950409), (3, 2.0), (10, 1.6259576185)])
def test_gamma_examples(t, want):
    assert abs(gamma(t) - want) < 5e-11


@pytest.mark.parametrize("t", range(2, 61))
def test_closed_form_routes_agree(t):
    # general Q_{r,s} form, the four specialised displays, and the S double sums
    assert beta_closed(t) == beta_display(t) == beta_from_S(t)


@given(st.sampled_from([(2, 0), (1, 0), (1, 1), (2, -1)]), st.integers(2, 150))
def test_S_reduces_to_Q_plus_integral(rs, t):
    r, s = rs
    t += (t + s) % 2  # S_{r,s}(t) needs t and s of equal parity
    assert S_rs(r, s, t) == S_rs_reduced(r, s, t)
    assert isinstance(Q_rs(r, s, t), Fraction)


@given(st.integers(0, 40))
def test_half_to_one_integral(m):
    exact = float(half_to_one_integral(m))
    numeric = adaptive_simpson(lambda x: (1 - x) ** m / x, 0.5, 1.0, 1e-13, 60)
    assert abs(exact - numeric) < 1e-12


@pytest.mark.parametrize("t", [1, 2, 5, 17, 40, 77, 120])
def test_beta_closed_vs_quadrature(t):
    assert abs(float(beta_closed(t)) - beta_quadrature(t)) < 1e-10


def test_rationality_and_positivity():
    for t in range(1, 301):
        b = beta_closed(t)
        assert b.is_rational() == (t % 3 == 0)
        assert 0 < float(b) <= 0.5


@pytest.mark.parametrize(
    "fn,n,want",
    [(lemma_binom_even, 1, 1), (lemma_binom_even, 6, Fraction(25, 6)), (lemma_binom_even, 4, Fraction(9, 4))],
)
def test_lemma_examples(fn, n, want):
    lhs, rhs = fn(n)
    assert lhs == rhs == want


@pytest.mark.parametrize("n", range(1, 301))
def test_lemmas(n):
    for fn in (lemma_binom_even, lemma_binom_odd):
        lhs, rhs = fn(n)
        assert lhs == rhs


@pytest.mark.parametrize("n", range(0, 301))
def test_closed_sums(n):
    for fn in (closed_sum_even, closed_sum_odd):
        direct, formula = fn(n)
        assert direct == formula


def test_closed_sum_examples():
    assert closed_sum_even(2) == (1, 1)
    assert closed_sum_even(3) == (1, 1)
    assert closed_sum_even(0) == (0, 0)


def test_f_examples():
    assert f3(6) == LogRational()
    assert f3(7) == LogRational(Fraction(-5, 8), 1)
    assert f1(2) == LogRational(Fraction(3, 8))


def test_f2_odd_term_sign():
    # f2(1): -1/(2*5/2) - (1/2)/(4*5/2) = -1/5 - 1/20
    assert f2(1) == LogRational(Fraction(-1, 4))


def test_printed_recurrence_does_not_hold():
    assert not any(beta_recurrence_check(t) for t in range(8, 60))


def test_corrected_recurrence_holds():
    for t in range(8, 301):
        assert beta_recurrence_check(t, form="corrected"), t


def test_recurrence_needs_t_at_least_8():
    with pytest.raises(ValueError):
        beta_recurrence_check(7)
    with pytest.raises(ValueError):
        recurrence_step(10, form="other")


def test_anchor_constants():
    assert abs(float(beta_closed(20)) - 0.30607337) < 1e-8
    # three independent routes put beta*_21 at 5463/17920
    assert beta_closed(21) == LogRational(Fraction(5463, 17920))
    assert abs(beta_quadrature(21) - 5463 / 17920) < 1e-11
