"""Exact truncated q-series over the integers.

An :class:`IntSeries` holds coefficients of q^0 .. q^N as Python ints in a
numpy object array, so slice arithmetic stays vectorised while the values
never overflow.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

INFINITY = math.inf


class InvertNonUnit(ArithmeticError):
    """Raised when inverting a series whose constant term is not +1 or -1."""


class DegenerateDenominator(ZeroDivisionError):
    """Raised when a denominator vanishes identically after q = e^{-z}."""


def _zeros(n: int) -> np.ndarray:
    return np.zeros(n, dtype=object)


class IntSeries:
    """Power series in q with exact integer coefficients, valid through q^order."""

    __slots__ = ("_c",)

    def __init__(self, coeffs: Iterable[int], order: int | None = None):
        c = np.array([int(x) for x in coeffs], dtype=object)
        if order is not None:
            if order < 0:
                raise ValueError("order must be non-negative")
            if len(c) > order + 1:
                c = c[: order + 1]
            elif len(c) < order + 1:
                c = np.concatenate([c, _zeros(order + 1 - len(c))])
        if len(c) == 0:
            raise ValueError("a series needs at least the constant coefficient")
        c.flags.writeable = False
        self._c = c

    @classmethod
    def _wrap(cls, arr: np.ndarray) -> "IntSeries":
        out = object.__new__(cls)
        arr.flags.writeable = False
        out._c = arr
        return out

    @classmethod
    def monomial(cls, exp: int, order: int, coeff: int = 1) -> "IntSeries":
        arr = _zeros(order + 1)
        if 0 <= exp <= order:
            arr[exp] = int(coeff)
        return cls._wrap(arr)

    @classmethod
    def one(cls, order: int) -> "IntSeries":
        return cls.monomial(0, order)

    @classmethod
    def zero(cls, order: int) -> "IntSeries":
        return cls._wrap(_zeros(order + 1))

    @property
    def order(self) -> int:
        return len(self._c) - 1

    @property
    def coeffs(self) -> np.ndarray:
        return self._c

    def __len__(self) -> int:
        return len(self._c)

    def __getitem__(self, n):
        if isinstance(n, slice):
            return [int(x) for x in self._c[n]]
        if n < 0:
            return 0
        if n > self.order:
            raise IndexError(f"coefficient q^{n} is beyond the series order {self.order}")
        return int(self._c[n])

    def to_list(self) -> list[int]:
        return [int(x) for x in self._c]

    def __repr__(self) -> str:
        head = ", ".join(str(x) for x in self._c[:8])
        more = ", ..." if self.order >= 8 else ""
        return f"IntSeries([{head}{more}], order={self.order})"

    def __eq__(self, other) -> bool:
        if not isinstance(other, IntSeries):
            return NotImplemented
        return self.order == other.order and bool(np.all(self._c == other._c))

    def __hash__(self):
        return hash((self.order, tuple(self.to_list())))

    def truncate(self, order: int) -> "IntSeries":
        if order > self.order:
            raise ValueError("cannot extend a truncated series")
        return IntSeries._wrap(self._c[: order + 1].copy())

    def _common(self, other: "IntSeries") -> int:
        return min(self.order, other.order)

    def __add__(self, other):
        if isinstance(other, int):
            other = IntSeries.monomial(0, self.order, other)
        if not isinstance(other, IntSeries):
            return NotImplemented
        n = self._common(other) + 1
        return IntSeries._wrap(self._c[:n] + other._c[:n])

    __radd__ = __add__

    def __neg__(self):
        return IntSeries._wrap(-self._c)

    def __sub__(self, other):
        if isinstance(other, int):
            other = IntSeries.monomial(0, self.order, other)
        if not isinstance(other, IntSeries):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return IntSeries._wrap(self._c * other)
        if not isinstance(other, IntSeries):
            return NotImplemented
        n = self._common(other) + 1
        a, b = self._c[:n], other._c[:n]
        if np.count_nonzero(a) > np.count_nonzero(b):
            a, b = b, a
        out = _zeros(n)
        for i in np.flatnonzero(a):
            out[i:] += a[i] * b[: n - i]
        return IntSeries._wrap(out)

    __rmul__ = __mul__

    def invert(self) -> "IntSeries":
        a = self._c
        a0 = int(a[0])
        if a0 not in (1, -1):
            raise InvertNonUnit(f"constant term {a0} is not a unit in Z[[q]]")
        n = len(a)
        y = _zeros(n)
        y[0] = a0
        support = np.flatnonzero(a[1:]) + 1
        for k in range(1, n):
            idx = support[support <= k]
            if len(idx):
                y[k] = -a0 * int(np.dot(a[idx], y[k - idx]))
        return IntSeries._wrap(y)

    def __truediv__(self, other):
        if not isinstance(other, IntSeries):
            return NotImplemented
        n = self._common(other)
        return self.truncate(n) * other.truncate(n).invert()

    def shift(self, k: int) -> "IntSeries":
        """Multiply by q^k (k >= 0), keeping the order."""
        if k < 0:
            raise ValueError("shift must be non-negative")
        out = _zeros(len(self._c))
        if k <= self.order:
            out[k:] = self._c[: len(self._c) - k]
        return IntSeries._wrap(out)

    def stretch(self, m: int, order: int | None = None) -> "IntSeries":
        """Substitute q -> q^m."""
        order = self.order * m if order is None else order
        out = _zeros(order + 1)
        src = self._c[: order // m + 1]
        out[: len(src) * m : m] = src
        return IntSeries._wrap(out)

    def mul_binomial(self, sign: int, exp: int) -> "IntSeries":
        """Multiply by (1 + sign*q^exp)."""
        arr = self._c.copy()
        _mul_binomial_inplace(arr, sign, exp)
        return IntSeries._wrap(arr)

    def div_binomial(self, sign: int, exp: int) -> "IntSeries":
        """Divide by (1 + sign*q^exp), exp >= 1."""
        arr = self._c.copy()
        _div_binomial_inplace(arr, sign, exp)
        return IntSeries._wrap(arr)

    def csv_rows(self) -> list[str]:
        return [f"{n},{int(c)}" for n, c in enumerate(self._c)]


def _mul_binomial_inplace(arr: np.ndarray, sign: int, exp: int) -> None:
    if exp == 0:
        arr *= 1 + sign
        return
    n = len(arr)
    if exp < n:
        if sign == 1:
            arr[exp:] = arr[exp:] + arr[: n - exp]
        else:
            arr[exp:] = arr[exp:] - arr[: n - exp]


def _div_binomial_inplace(arr: np.ndarray, sign: int, exp: int, start: int = 0) -> None:
    # y[n] = x[n] - sign*y[n-exp]; arr is assumed zero below ``start``
    if exp < 1:
        raise InvertNonUnit("dividing by a binomial with a constant q-power")
    n = len(arr)
    for b in range(start + exp, n, exp):
        e = min(b + exp, n)
        if sign == 1:
            arr[b:e] -= arr[b - exp : e - exp]
        else:
            arr[b:e] += arr[b - exp : e - exp]


def series_add(a: IntSeries, b: IntSeries) -> IntSeries:
    return a + b


def series_mul(a: IntSeries, b: IntSeries) -> IntSeries:
    return a * b


def series_invert(a: IntSeries) -> IntSeries:
    return a.invert()


def pochhammer(x_exp: int, x_sign: int, q_step: int, count: int | float, order: int) -> IntSeries:
    """Truncated (x; q^step)_count with x = x_sign * q^x_exp.

    ``count`` may be :data:`INFINITY`; then only factors whose q-exponent is at
    most ``order`` are multiplied in, the rest being 1 modulo q^(order+1).
    """
    if x_sign not in (1, -1):
        raise ValueError("x_sign must be +1 or -1")
    if q_step < 1:
        raise ValueError("q_step must be positive")
    arr = _zeros(order + 1)
    arr[0] = 1
    if count == INFINITY:
        if x_exp < 1:
            raise ValueError("an infinite product needs x_exp >= 1 to truncate")
        exps = range(x_exp, order + 1, q_step)
    else:
        count = int(count)
        if count < 0:
            raise ValueError("count must be non-negative")
        exps = [x_exp + i * q_step for i in range(count)]
    for e in exps:
        # factor (1 - x q^{i step}) = 1 + (-x_sign) q^e
        _mul_binomial_inplace(arr, -x_sign, e)
    return IntSeries._wrap(arr)


def distinct_odd_product(order: int) -> IntSeries:
    """(-q; q^2)_infinity, the generating function of |DO(n)| = |SC(n)|."""
    return pochhammer(1, -1, 2, INFINITY, order)


def _times_distinct_odd_inplace(arr: np.ndarray) -> None:
    for e in range(1, len(arr), 2):
        _mul_binomial_inplace(arr, 1, e)


def q_binomial(n: int, k: int, order: int | None = None) -> IntSeries:
    """Gaussian binomial [n choose k]_q; the zero series when k is out of range."""
    if n < 0:
        raise ValueError("n must be non-negative")
    if k < 0 or k > n:
        return IntSeries.zero(0 if order is None else order)
    k = min(k, n - k)
    degree = k * (n - k)
    work = degree if order is None else min(order, degree)
    arr = _zeros(work + 1)
    arr[0] = 1
    for i in range(1, k + 1):
        _mul_binomial_inplace(arr, -1, n - k + i)
    for i in range(1, k + 1):
        _div_binomial_inplace(arr, -1, i)
    out = IntSeries._wrap(arr)
    if order is not None and order > work:
        out = IntSeries(out.to_list(), order)
    return out


def gen_A(t: int, order: int) -> IntSeries:
    """Generating function of a*_t(n): t-hooks summed over self-conjugate partitions."""
    if t < 1:
        raise ValueError("t must be positive")
    if order < 0:
        raise ValueError("order must be non-negative")
    arr = _zeros(order + 1)
    if t % 2 == 0:
        if 2 * t <= order:
            arr[2 * t] = t
        _div_binomial_inplace(arr, -1, 2 * t)
    else:
        for e, c in ((t, 1), (2 * t, t - 1), (3 * t, t)):
            if e <= order:
                arr[e] += c
        _div_binomial_inplace(arr, -1, 2 * t)
        _div_binomial_inplace(arr, 1, t)
    _times_distinct_odd_inplace(arr)
    return IntSeries._wrap(arr)


@dataclass(frozen=True)
class _BTerm:
    prefactor: int  # q-exponent of the outer monomial
    ell: int  # leg length; binomial [jp choose ell]_{q^2}
    jp: int
    step: int  # inner numerator q^{2 m step}
    poch_base: int  # inner denominator (-q^{2m + poch_base}; q^2)_count
    count: int


B_VARIANTS = ("derived", "proof", "statement")


def b_terms(t: int, variant: str = "derived") -> list[_BTerm]:
    """The (k, branch) terms of B*_t / (-q;q^2)_inf.

    ``derived`` uses prefactor exponents recomputed from the cell-by-cell
    product q^{(m+1)(l+1)+j} * q^{l(l-1)} (or q^{l^2}); ``proof`` and
    ``statement`` keep the exponents as printed, which differ for k >= 1.
    """
    if variant not in B_VARIANTS:
        raise ValueError(f"variant must be one of {B_VARIANTS}")
    printed = variant != "derived"
    terms = []
    if t % 2 == 0:
        for k in range(0, (t - 4) // 6 + 1):
            e = t + 4 * k * k + (4 * k if printed else 2 * k)
            terms.append(_BTerm(e, 2 * k + 1, (t - 2 * k - 2) // 2, 2 * k + 2, 1, (t - 2 * k) // 2))
        for k in range(0, (t - 2) // 6 + 1):
            e = t + 4 * k * k + (4 * k if printed else 2 * k) + 1
            terms.append(_BTerm(e, 2 * k, (t - 2 * k - 2) // 2, 2 * k + 1, 3, (t - 2 * k) // 2))
    else:
        for k in range(0, (t - 1) // 6 + 1):
            e = t + 4 * k * k - (4 * k if printed else 2 * k)
            terms.append(_BTerm(e, 2 * k, (t - 2 * k - 1) // 2, 2 * k + 1, 1, (t - 2 * k + 1) // 2))
        for k in range(0, (t - 5) // 6 + 1):
            e = t + 4 * k * k + 6 * k + 3
            terms.append(_BTerm(e, 2 * k + 1, (t - 2 * k - 3) // 2, 2 * k + 2, 3, (t - 2 * k - 1) // 2))
    return terms


def _inner_sum(term: _BTerm, order: int, variant: str) -> np.ndarray:
    acc = _zeros(order + 1)
    m = 0
    while 2 * m * term.step <= order:
        start = 2 * m * term.step
        y = _zeros(order + 1)
        y[start] = 1
        if variant == "statement":
            base = m + (term.poch_base + 1) // 2
        else:
            base = 2 * m + term.poch_base
        for i in range(term.count):
            _div_binomial_inplace(y, 1, base + 2 * i, start)
        acc += y
        m += 1
    return acc


def gen_L(t: int, order: int, variant: str = "derived") -> IntSeries:
    """B*_t(q) / (-q; q^2)_inf as a truncated series."""
    if t < 1:
        raise ValueError("t must be positive")
    total = _zeros(order + 1)
    for term in b_terms(t, variant):
        room = order - term.prefactor
        if room < 0:
            continue
        inner = IntSeries._wrap(_inner_sum(term, room, variant))
        binom = q_binomial(term.jp, term.ell).stretch(2)
        piece = (inner * IntSeries(binom.to_list(), room)).coeffs
        total[term.prefactor :] += piece
    return IntSeries._wrap(total)


def gen_B(t: int, order: int, variant: str = "derived") -> IntSeries:
    """Generating function of b*_t(n): t-hooks summed over distinct-odd partitions."""
    if order < 0:
        raise ValueError("order must be non-negative")
    arr = gen_L(t, order, variant).coeffs.copy()
    _times_distinct_odd_inplace(arr)
    return IntSeries._wrap(arr)


def a_rational_part(t: int) -> tuple[IntSeries, IntSeries]:
    """(numerator, denominator) polynomials of A*_t(q) / (-q; q^2)_inf."""
    if t % 2 == 0:
        num = IntSeries.monomial(2 * t, 2 * t, t)
        den = IntSeries([1] + [0] * (2 * t - 1) + [-1])
    else:
        num = IntSeries([0] * t + [1] + [0] * (t - 1) + [t - 1] + [0] * (t - 1) + [t])
        # (1 - q^{2t})(1 + q^t)
        den = IntSeries.one(3 * t).mul_binomial(-1, 2 * t).mul_binomial(1, t)
    return num, den


def pochhammer_inverse_identity_check(m: int, n: int, order: int) -> bool:
    """Compare 1/(-q^{2m+1}; q^2)_n with its q-binomial expansion through q^order."""
    lhs = pochhammer(2 * m + 1, -1, 2, n, order).invert()
    rhs = _zeros(order + 1)
    rhs[0] = 1
    if n > 0:
        j = 1
        while (2 * m + 1) * j <= order:
            coef = q_binomial(n + j - 1, j).stretch(2)
            piece = IntSeries(coef.to_list(), order).shift((2 * m + 1) * j)
            rhs += piece.coeffs * (-1) ** j
            j += 1
    return lhs == IntSeries._wrap(rhs)


@dataclass(frozen=True)
class RatLaurent:
    """Laurent series sum_{j=min_exp}^{order} coeffs[j-min_exp] z^j over Q."""

    min_exp: int
    order: int
    coeffs: tuple[Fraction, ...]

    def __getitem__(self, j: int) -> Fraction:
        if j > self.order:
            raise IndexError(f"z^{j} is beyond the expansion order {self.order}")
        if j < self.min_exp:
            return Fraction(0)
        return self.coeffs[j - self.min_exp]

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def terms(self) -> list[tuple[int, Fraction]]:
        return [(self.min_exp + i, c) for i, c in enumerate(self.coeffs)]


def _exp_coeffs(poly: Sequence[int], count: int, offset: int = 0) -> list[Fraction]:
    """z^j coefficients, j = offset .. offset+count-1, of sum_d c_d e^{-dz}."""
    out = []
    support = [(d, int(c)) for d, c in enumerate(poly) if c]
    for j in range(offset, offset + count):
        s = sum(c * (-d) ** j for d, c in support)
        out.append(Fraction(s, math.factorial(j)))
    return out


def _valuation(poly: Sequence[int]) -> int:
    # order of vanishing of P(e^{-z}) at z = 0 (= multiplicity of the root q = 1)
    support = [(d, int(c)) for d, c in enumerate(poly) if c]
    j = 0
    while sum(c * d**j for d, c in support) == 0:
        j += 1
    return j


def subst_exp_neg_z(p_num: IntSeries, p_den: IntSeries, z_order: int) -> RatLaurent:
    """Laurent expansion in z of p_num(e^{-z}) / p_den(e^{-z}) through z^z_order.

    Both arguments are read as polynomials in q (all stored coefficients are used).
    """
    num, den = p_num.to_list(), p_den.to_list()
    if not any(den):
        raise DegenerateDenominator("denominator polynomial is identically zero")
    if not any(num):
        return RatLaurent(0, z_order, ())
    u, v = _valuation(num), _valuation(den)
    lo = u - v
    length = z_order - lo + 1
    if length <= 0:
        return RatLaurent(lo, z_order, ())
    a = _exp_coeffs(num, length, u)
    b = _exp_coeffs(den, length, v)
    out: list[Fraction] = []
    for k in range(length):
        s = a[k] - sum((b[i] * out[k - i] for i in range(1, k + 1)), Fraction(0))
        out.append(s / b[0])
    return RatLaurent(lo, z_order, tuple(out))
