"""Residue-class series whose sums give lim 2*beta*_t as t -> infinity."""
from __future__ import annotations

import math
from fractions import Fraction

from .quadrature import ToleranceNotReached

LIMIT_G = math.log(2.5) / 3

# B_2, B_4, ..., B_12
_BERNOULLI_EVEN = [
    Fraction(1, 6),
    Fraction(-1, 30),
    Fraction(1, 42),
    Fraction(-1, 30),
    Fraction(5, 66),
    Fraction(-691, 2730),
]


def _first(k: int) -> int:
    return k % 3 or 3


def _g1(k: int, tol: float) -> float:
    # sum over n = 3m + c (n > 0) of (1/2)(1/n - 1/(n + 3/2)): partial sum,
    # then an Euler-Maclaurin tail with an explicit remainder bound
    c = k % 3
    m0 = 0 if c else 1
    shifts = (c, c + 1.5)

    def h(m):
        return 0.5 * (1 / (3 * m + c) - 1 / (3 * m + c + 1.5))

    def deriv(order: int, m: float) -> float:
        # d^j/dm^j of h
        return 0.5 * sum(
            sign * (-1) ** order * math.factorial(order) * 3**order / (3 * m + s) ** (order + 1)
            for sign, s in zip((1, -1), shifts)
        )

    p = len(_BERNOULLI_EVEN)
    for cut in (16, 64, 256, 1024, 4096):
        head = math.fsum(h(m) for m in range(m0, cut))
        integral = math.log((3 * cut + c + 1.5) / (3 * cut + c)) / 6
        corr = [integral, h(cut) / 2]
        for j, b in enumerate(_BERNOULLI_EVEN, start=1):
            corr.append(-float(b) / math.factorial(2 * j) * deriv(2 * j - 1, cut))
        # |remainder| <= 2 zeta(2p) / (2 pi)^{2p} * int |h^{(2p)}|, and each
        # component of h^{(2p)} is single-signed, so the integral is bounded
        # by the components of h^{(2p-1)} at the cut
        comp = 0.5 * sum(
            math.factorial(2 * p - 1) * 3 ** (2 * p - 1) / (3 * cut + s) ** (2 * p) for s in shifts
        )
        bound = 2 * 1.01 / (2 * math.pi) ** (2 * p) * comp
        if bound < tol:
            return math.fsum([head] + corr)
    raise ToleranceNotReached(f"g1({k}) tail bound stayed above {tol:g}")


def _geometric(term, k: int, tol: float, max_terms: int = 10_000) -> float:
    # every term is bounded by 2^{-2n/3}; the tail from n on is at most
    # 2^{-2n/3} / (1 - 1/4)
    parts = []
    n = _first(k)
    for _ in range(max_terms):
        parts.append(term(n))
        n += 3
        if 2 ** (-2 * n / 3) / 0.75 < tol:
            return math.fsum(parts)
    raise ToleranceNotReached(f"series did not reach {tol:g}")


def _t2(n):
    return (-1) ** (n // 2) / (n * 2.0**n) if n % 2 == 0 else 0.0


def _t3(n):
    return 1.5 / (n * 2.0 ** (2 * n / 3)) if n % 3 == 0 else 0.0


def _t4(n):
    return (-1) ** (n // 2) / (4 * (n + 1.5) * 2.0**n) if n % 2 == 0 else 0.0


def _t5(n):
    return (-1) ** ((n - 1) // 2) / (4 * (n + 1.5) * 2.0**n) if n % 2 else 0.0


def _t6(n):
    return 0.75 / ((n + 1.5) * 2.0 ** (2 * n / 3)) if n % 3 == 0 else 0.0


_TERMS = {2: _t2, 3: _t3, 4: _t4, 5: _t5, 6: _t6}


def g(i: int, k: int, tol: float = 1e-13) -> float:
    """g_i(k): the i-th auxiliary series summed over n > 0 with n = k (mod 3)."""
    if not tol > 0:
        raise ValueError("tol must be positive")
    if i == 1:
        return _g1(k, tol)
    if i not in _TERMS:
        raise ValueError("i must be in 1..6")
    if i in (3, 6) and k % 3:
        return 0.0
    return _geometric(_TERMS[i], k, tol)


def G(k: int, tol: float = 1e-13) -> float:
    """g1 - g2 + g3 - g4 - g5 + g6 at residue k; each g to within tol."""
    return g(1, k, tol) - g(2, k, tol) + g(3, k, tol) - g(4, k, tol) - g(5, k, tol) + g(6, k, tol)


def limit_gamma() -> float:
    """lim gamma*_t = 3 / (2 log(5/2))."""
    return 3 / (2 * math.log(2.5))
