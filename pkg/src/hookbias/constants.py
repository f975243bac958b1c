"""The bias constants beta*_t and gamma*_t = 1/(2 beta*_t).

beta*_t is computed three ways that share no code past the term list:

* :func:`beta_quadrature` sums binomial-weighted integrals I(a, c) numerically,
* :func:`S_rs` evaluates each integral exactly in Q(log 2),
* :func:`beta_closed` uses the reduced single sums Q_{r,s}(t) plus one
  integral of (1-x)^m / x over [1/2, 1].
"""
from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .logrational import LogRational
from .quadrature import QuadratureSpec, adaptive_simpson

HALF = Fraction(1, 2)

# (r, s) pairs whose S_{r,s}(t) add up to beta*_t, by parity of t
BETA_PARTS = {0: ((2, 0), (1, 0)), 1: ((1, 1), (2, -1))}


def _binom(n: int, k: int) -> int:
    if n < 0 or k < 0 or k > n:
        return 0
    return math.comb(n, k)


def integral_I(a: int, c: int, spec: QuadratureSpec = QuadratureSpec()) -> float:
    """int_0^inf e^{-a x} / (1 + e^{-2x})^c dx, numerically.

    Evaluated as (1/2) int_0^1 u^{a/2 - 1} / (1 + u)^c du after u = e^{-2x}.
    """
    if a < 2 or a % 2:
        raise ValueError("a must be a positive even integer")
    if c < 1:
        raise ValueError("c must be positive")
    p = a // 2 - 1

    def f(u):
        return u**p / (1.0 + u) ** c

    return 0.5 * adaptive_simpson(f, 0.0, 1.0, 2 * spec.abs_tol, spec.max_depth)


def beta_terms(t: int) -> list[tuple[int, int, int]]:
    """(weight, a, c) triples with beta*_t = sum weight * I(a, c)."""
    if t < 1:
        raise ValueError("t must be positive")
    out = []
    for r, s in BETA_PARTS[t % 2]:
        for k in range(0, (t - 2 * r + s) // 6 + 1):
            w = _binom((t - 2 * k - 2 + s) // 2, 2 * k + r - 1)
            if w:
                out.append((w, 2 * (2 * k + r), (t - 2 * k + s) // 2))
    return out


def beta_quadrature(t: int, spec: QuadratureSpec = QuadratureSpec()) -> float:
    """beta*_t from its defining integrals; each weighted term is good to spec.abs_tol."""
    total = []
    for w, a, c in beta_terms(t):
        term_spec = QuadratureSpec(spec.abs_tol / w, spec.max_depth)
        total.append(w * integral_I(a, c, term_spec))
    return math.fsum(total)


@lru_cache(maxsize=None)
def half_to_one_integral(m: int) -> LogRational:
    """int_{1/2}^1 (1-x)^m / x dx = log 2 + sum_i C(m,i) (-1)^i / i * (1 - 2^-i)."""
    if m < 0:
        raise ValueError("m must be non-negative")
    r = sum(
        (Fraction((-1) ** i * math.comb(m, i), i) * (1 - Fraction(1, 2**i)) for i in range(1, m + 1)),
        Fraction(0),
    )
    return LogRational(r, 1)


def S_rs(r: int, s: int, t: int) -> LogRational:
    """S_{r,s}(t) with every integral done exactly.

    The (k, i) term integrates u^{-e-1} over [1, 2] with e = (t+s)/2 - 3k - r + i,
    giving (1 - 2^-e)/e, or log 2 for the single e = 0 term that appears when
    6 divides t - 2r + s.
    """
    if (t + s) % 2:
        raise ValueError("t and s must have the same parity")
    total = LogRational()
    for k in range(0, (t - 2 * r + s) // 6 + 1):
        outer = _binom((t - 2 * k - 2 + s) // 2, 2 * k + r - 1)
        if not outer:
            continue
        width = 2 * k + r - 1
        for i in range(width + 1):
            e = (t + s) // 2 - 3 * k - r + i
            weight = outer * _binom(width, i) * (-1) ** i
            if e == 0:
                total += LogRational.log2(Fraction(weight, 2))
            else:
                total += Fraction(weight, 2 * e) * (1 - Fraction(1, 2**e))
    return total


def _residue_range(x: int, upper: int):
    # n > 0 with n = x (mod 3) and n <= upper
    start = x % 3 or 3
    return range(start, upper + 1, 3)


def _bracket_n(n: int) -> Fraction:
    b = HALF
    if n % 2 == 0:
        b += Fraction((-1) ** (n // 2), 2**n)
    if n % 3 == 0:
        b -= Fraction(3, 2 * 4 ** (n // 3))
    return b


def _bracket_n32(n: int) -> Fraction:
    b = HALF
    if n % 2 == 0:
        b += Fraction((-1) ** (n // 2), 4 * 2**n)
    else:
        b += Fraction((-1) ** ((n - 1) // 2), 4 * 2**n)
    if n % 3 == 0:
        b -= Fraction(3, 4 * 4 ** (n // 3))
    return b


def Q_rs(r: int, s: int, t: int) -> Fraction:
    """The rational single-sum part of S_{r,s}(t)."""
    if (t + s) % 2:
        raise ValueError("t and s must have the same parity")
    x = (t + s) // 2 - r
    first = sum((Fraction(1, n) for n in _residue_range(x, x)), Fraction(0))
    second = sum(
        (_bracket_n(n) / n for n in _residue_range(x, x + 3 * ((r - 1) // 2))), Fraction(0)
    )
    third = sum(
        (_bracket_n32(n) / (n + Fraction(3, 2)) for n in _residue_range(x, x + 3 * ((r - 2) // 2))),
        Fraction(0),
    )
    return (first - second - third) / 2


def log_part_exponent(r: int, s: int, t: int) -> int | None:
    """Exponent m of the extra (1/2) int (1-x)^m/x term, or None if absent."""
    if (t - 2 * r + s) % 6:
        return None
    return (t + r + s) // 3 - 1


def S_rs_reduced(r: int, s: int, t: int) -> LogRational:
    """S_{r,s}(t) rebuilt from Q_{r,s}(t) and the isolated integral."""
    out = LogRational(Q_rs(r, s, t))
    m = log_part_exponent(r, s, t)
    if m is not None:
        out += half_to_one_integral(m) * HALF
    return out


@lru_cache(maxsize=None)
def beta_closed(t: int) -> LogRational:
    """beta*_t exactly, as r + s*log 2."""
    if t < 1:
        raise ValueError("t must be positive")
    total = LogRational()
    for r, s in BETA_PARTS[t % 2]:
        total += S_rs_reduced(r, s, t)
    return total


def beta_from_S(t: int) -> LogRational:
    """beta*_t from the unreduced double sums S_{r,s}(t)."""
    total = LogRational()
    for r, s in BETA_PARTS[t % 2]:
        total += S_rs(r, s, t)
    return total


def beta_display(t: int) -> LogRational:
    """beta*_t transcribed from the fully specialised even/odd displays.

    Kept separate from :func:`beta_closed` (which instantiates one
    parameterised formula) so transcription slips show up as disagreements.
    """

    def block(lo_res: int, top1: int, top2: int, ind: bool, m: int) -> LogRational:
        a = sum((Fraction(1, n) for n in _residue_range(lo_res, top1)), Fraction(0))
        b = sum((_bracket_n(n) / n for n in _residue_range(lo_res, top1)), Fraction(0))
        c = sum((_bracket_n32(n) / (n + Fraction(3, 2)) for n in _residue_range(lo_res, top2)), Fraction(0))
        out = LogRational(a - b - c)
        if ind:
            out += half_to_one_integral(m)
        return out

    if t % 2 == 0:
        h = t // 2
        total = block(h - 2, h - 2, h - 2, (t - 4) % 6 == 0, (t + 2) // 3 - 1)
        total += block(h - 1, h - 1, h - 4, (t - 2) % 6 == 0, (t + 1) // 3 - 1)
    else:
        h = (t - 1) // 2
        total = block(h, h, h - 3, (t - 1) % 6 == 0, (t + 2) // 3 - 1)
        g = (t - 5) // 2
        total += block(g, g, g, (t - 5) % 6 == 0, (t + 1) // 3 - 1)
    return total * HALF


def beta_numeric(t: int) -> float:
    return float(beta_closed(t))


def gamma(t: int) -> float:
    """Limiting ratio a*_t(n) / b*_t(n)."""
    return 1.0 / (2.0 * beta_numeric(t))


def lemma_binom_even(n: int) -> tuple[Fraction, Fraction]:
    """Both sides of sum_i C(n-i-1, 2i) 2^i / (n-3i) = (2^{n-1} + ...)/n."""
    if n < 1:
        raise ValueError("n must be positive")
    p, q = divmod(n, 3)
    top = p + (q - 1) // 3
    lhs = sum((Fraction(_binom(n - i - 1, 2 * i) * 2**i, n - 3 * i) for i in range(top + 1)), Fraction(0))
    rhs = Fraction(2 ** (n - 1))
    if n % 2 == 0:
        rhs += (-1) ** (n // 2)
    if n % 3 == 0:
        rhs -= 3 * Fraction(2 ** (n // 3), 2)
    return lhs, rhs / n


def lemma_binom_odd(n: int) -> tuple[Fraction, Fraction]:
    """Both sides of sum_i C(n-i, 2i+1) 2^i / (n-3i) = (2^n + ...)/(n + 3/2)."""
    if n < 1:
        raise ValueError("n must be positive")
    p, q = divmod(n, 3)
    top = p + (q - 1) // 3
    lhs = sum((Fraction(_binom(n - i, 2 * i + 1) * 2**i, n - 3 * i) for i in range(top + 1)), Fraction(0))
    rhs = Fraction(2**n)
    if n % 2 == 0:
        rhs += HALF * (-1) ** (n // 2)
    else:
        rhs += HALF * (-1) ** ((n - 1) // 2)
    if n % 3 == 0:
        rhs -= 3 * Fraction(2 ** (n // 3), 2)
    return lhs, rhs / (n + Fraction(3, 2))


def closed_sum_even(n: int) -> tuple[Fraction, Fraction]:
    """(sum_i C(n-i-1, 2i) 2^i, its closed form by parity of n)."""
    if n < 0:
        raise ValueError("n must be non-negative")
    direct = Fraction(sum(_binom(n - i - 1, 2 * i) * 2**i for i in range(n + 1)))
    k, odd = divmod(n, 2)
    if odd:
        formula = Fraction(2 ** (2 * k + 1) + 3 * (-1) ** k, 5)
    else:
        formula = Fraction(4**k - (-1) ** k, 5)
    return direct, formula


def closed_sum_odd(n: int) -> tuple[Fraction, Fraction]:
    """(sum_i C(n-i, 2i+1) 2^i, its closed form by parity of n)."""
    if n < 0:
        raise ValueError("n must be non-negative")
    direct = Fraction(sum(_binom(n - i, 2 * i + 1) * 2**i for i in range(n + 1)))
    k, odd = divmod(n, 2)
    if odd:
        formula = Fraction(2 ** (2 * k + 2) + (-1) ** k, 5)
    else:
        formula = Fraction(2 ** (2 * k + 1) - 2 * (-1) ** k, 5)
    return direct, formula


def f1(n: int) -> LogRational:
    if n < 1:
        raise ValueError("n must be positive")
    v = Fraction(1, 2 * n)
    if n % 2 == 0:
        v -= Fraction((-1) ** (n // 2), n * 2**n)
    if n % 3 == 0:
        v += Fraction(3, 2 * n * 4 ** (n // 3))
    return LogRational(v)


def f2(n: int) -> LogRational:
    if n < 1:
        raise ValueError("n must be positive")
    d = n + Fraction(3, 2)
    v = -1 / (2 * d)
    if n % 2 == 0:
        v -= Fraction((-1) ** (n // 2), 2**n) / (4 * d)
    else:
        # odd-n term; enters with the same sign as the even-n one
        v -= Fraction((-1) ** ((n - 1) // 2), 2**n) / (4 * d)
    if n % 3 == 0:
        v += Fraction(3, 4 ** (n // 3)) / (4 * d)
    return LogRational(v)


def f3(n: int) -> LogRational:
    if n < 1:
        raise ValueError("n must be positive")
    if n % 3 == 0:
        return LogRational()
    return half_to_one_integral(n // 3)


def _recurrence_args(t: int) -> tuple[list[int], list[int]]:
    if t % 2 == 0:
        return [t // 2 - 2, t // 2 - 1], [t // 2 - 2, t // 2 - 4]
    return [(t - 1) // 2, (t - 5) // 2], [(t - 1) // 2 - 3, (t - 5) // 2]


def recurrence_step(t: int, form: str = "printed") -> LogRational:
    """Right-hand side increment beta*_t - beta*_{t-6} under the chosen form.

    ``printed``: f1 + f1 + f2 + f2 + f3(t).
    ``corrected``: (f1 + f1 + f2 + f2 + f3(t) - f3(t-6)) / 2, which is what
    removing the top term of each single sum in Q_{r,s} actually gives.
    Arguments n <= 0 name empty sums and contribute nothing.
    """
    ones, twos = _recurrence_args(t)
    step = LogRational()
    for n in ones:
        if n >= 1:
            step += f1(n)
    for n in twos:
        if n >= 1:
            step += f2(n)
    step += f3(t)
    if form == "printed":
        return step
    if form == "corrected":
        return (step - f3(t - 6)) * HALF
    raise ValueError("form must be 'printed' or 'corrected'")


def beta_recurrence_check(t: int, form: str = "printed") -> bool:
    """Exact test of beta*_t == beta*_{t-6} + recurrence_step(t)."""
    if t < 8:
        raise ValueError("t must be at least 8")
    return beta_closed(t) == beta_closed(t - 6) + recurrence_step(t, form)
