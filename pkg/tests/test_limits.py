import math

import mpmath
import pytest

from hookbias.constants import beta_closed
from hookbias.limits import LIMIT_G, G, g, limit_gamma
from hookbias.quadrature import ToleranceNotReached


def test_closed_values():
    assert abs(g(1, 0) - (1 - math.log(2)) / 3) < 1e-12
    assert abs(g(2, 0) + math.log(65 / 64) / 6) < 1e-12
    assert abs(g(3, 0) + 0.5 * math.log(0.75)) < 1e-12
    assert g(3, 1) == g(3, 2) == 0
    assert g(6, 1) == g(6, 2) == 0


@pytest.mark.parametrize("k", [0, 1, 2])
def test_g1_against_digamma(k):
    c = k % 3
    start = c if c else 3
    want = (mpmath.digamma((start + 1.5) / 3) - mpmath.digamma(start / 3)) / 6
    assert abs(g(1, k) - float(want)) < 1e-12


@pytest.mark.parametrize("i", [2, 3, 4, 5, 6])
@pytest.mark.parametrize("k", [0, 1, 2])
def test_geometric_series_against_mpmath(i, k):
    terms = {
        2: lambda n: (-1) ** (n // 2) / (n * mpmath.mpf(2) ** n) if n % 2 == 0 else 0,
        3: lambda n: mpmath.mpf(3) / 2 / (n * mpmath.mpf(2) ** (mpmath.mpf(2) * n / 3)) if n % 3 == 0 else 0,
        4: lambda n: (-1) ** (n // 2) / (4 * (n + mpmath.mpf(3) / 2) * mpmath.mpf(2) ** n) if n % 2 == 0 else 0,
        5: lambda n: (-1) ** ((n - 1) // 2) / (4 * (n + mpmath.mpf(3) / 2) * mpmath.mpf(2) ** n) if n % 2 else 0,
        6: lambda n: mpmath.mpf(3) / 4 / ((n + mpmath.mpf(3) / 2) * mpmath.mpf(2) ** (mpmath.mpf(2) * n / 3)) if n % 3 == 0 else 0,
    }[i]
    start = k % 3 or 3
    want = mpmath.fsum(terms(n) for n in range(start, 400, 3))
    assert abs(g(i, k) - float(want)) < 1e-13


@pytest.mark.parametrize("k", [0, 1, 2])
def test_G_is_constant(k):
    assert abs(G(k) - math.log(2.5) / 3) < 1e-9


def test_limit_gamma():
    assert abs(limit_gamma() - 1.6370350019) < 1e-9
    assert math.isclose(1 / limit_gamma(), 2 * LIMIT_G)
    assert abs(G(0) + G(1) - 2 * math.log(2.5) / 3) < 1e-9


def test_beta_approaches_limit():
    gaps = [abs(1 / (2 * float(beta_closed(10**j))) - limit_gamma()) for j in range(1, 5)]
    assert gaps == sorted(gaps, reverse=True)


def test_bad_arguments():
    with pytest.raises(ValueError):
        g(7, 0)
    with pytest.raises(ValueError):
        g(1, 0, tol=0)
    with pytest.raises(ToleranceNotReached):
        g(1, 0, tol=1e-300)
