"""Verification suites shared by the CLI and the acceptance tests.

Each suite walks a finite range and stops at the first counterexample.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from . import asymptotics, constants, limits, partitions, qseries


@dataclass(frozen=True)
class SuiteResult:
    suite: str
    passed: bool
    checked: int
    counterexample: dict = field(default_factory=dict)

    def record(self) -> dict:
        return {
            "suite": self.suite,
            "status": "pass" if self.passed else "fail",
            "checked": self.checked,
            "counterexample": dict(self.counterexample),
        }


def _fail(suite: str, checked: int, **payload) -> SuiteResult:
    return SuiteResult(suite, False, checked, {k: str(v) for k, v in payload.items()})


def genfun(t_max: int = 8, n_max: int = 60, variant: str = "derived") -> SuiteResult:
    """gen_A and gen_B against the brute-force hook totals."""
    checked = 0
    for t in range(1, t_max + 1):
        a = qseries.gen_A(t, n_max)
        b = qseries.gen_B(t, n_max, variant)
        for n in range(n_max + 1):
            want_a, want_b = partitions.a_star_brute(t, n), partitions.b_star_brute(t, n)
            if a[n] != want_a:
                return _fail("genfun", checked, family="A", t=t, n=n, series=a[n], brute=want_a)
            if b[n] != want_b:
                return _fail("genfun", checked, family="B", t=t, n=n, series=b[n], brute=want_b)
            checked += 2
    return SuiteResult("genfun", True, checked)


def identities(n_max: int = 300, m_max: int = 5, p_max: int = 8, order: int = 40) -> SuiteResult:
    """Binomial-sum lemmas, their geometric closed forms, and the Pochhammer inverse identity."""
    checked = 0
    for n in range(1, n_max + 1):
        for name, fn in (("lemma_even", constants.lemma_binom_even), ("lemma_odd", constants.lemma_binom_odd)):
            lhs, rhs = fn(n)
            if lhs != rhs:
                return _fail("identities", checked, identity=name, n=n, lhs=lhs, rhs=rhs)
            checked += 1
    for n in range(0, n_max + 1):
        for name, fn in (("closed_even", constants.closed_sum_even), ("closed_odd", constants.closed_sum_odd)):
            direct, formula = fn(n)
            if direct != formula:
                return _fail("identities", checked, identity=name, n=n, direct=direct, formula=formula)
            checked += 1
    for m in range(m_max + 1):
        for p in range(p_max + 1):
            if not qseries.pochhammer_inverse_identity_check(m, p, order):
                return _fail("identities", checked, identity="pochhammer_inverse", m=m, n=p, order=order)
            checked += 1
    return SuiteResult("identities", True, checked)


def recurrence(t_max: int = 300, form: str = "printed") -> SuiteResult:
    checked = 0
    for t in range(8, t_max + 1):
        if not constants.beta_recurrence_check(t, form):
            lhs = constants.beta_closed(t)
            rhs = constants.beta_closed(t - 6) + constants.recurrence_step(t, form)
            return _fail("recurrence", checked, t=t, form=form, lhs=lhs, rhs=rhs, diff=lhs - rhs)
        checked += 1
    return SuiteResult("recurrence", True, checked)


def rationality(t_max: int = 300) -> SuiteResult:
    """beta*_t has no log 2 part exactly when 3 divides t."""
    for t in range(1, t_max + 1):
        b = constants.beta_closed(t)
        if b.is_rational() != (t % 3 == 0):
            return _fail("rationality", t - 1, t=t, beta=b)
    return SuiteResult("rationality", True, t_max)


def bound(t_max: int = 1000) -> SuiteResult:
    """0 < beta*_t < 1/2 for 2 <= t <= t_max (positivity also at t = 1)."""
    checked = 0
    for t in range(1, t_max + 1):
        b = constants.beta_closed(t)
        x = float(b)
        if x <= 0 or (t >= 2 and x >= 0.5):
            return _fail("bound", checked, t=t, beta=b, value=f"{x:.10f}")
        checked += 1
    return SuiteResult("bound", True, checked)


def laurent_printed(t: int) -> dict[int, Fraction]:
    """z^j coefficients j = -1..5 of A*_t / (-q; q^2)_inf, as displayed in the source."""
    t = Fraction(t)
    if t % 2 == 0:
        return {-1: Fraction(1, 2), 0: -t / 2, 1: t**2 / 6, 2: Fraction(0), 3: -(t**4) / 90,
                4: Fraction(0), 5: t**6 / 945}
    return {-1: Fraction(1, 2), 0: Fraction(1, 4) - t / 2, 1: t**2 / 6, 2: Fraction(0),
            3: -(t**4) / 90, 4: t**4 / 96, 5: t**6 / 945}


def laurent_derived(t: int) -> dict[int, Fraction]:
    """Same expansion with the odd-t z^2 term -t^2/16 restored."""
    out = laurent_printed(t)
    if t % 2:
        out[2] = -Fraction(t * t, 16)
    return out


def laurent(t_max: int = 10, table: str = "printed") -> SuiteResult:
    expected = {"printed": laurent_printed, "derived": laurent_derived}[table]
    checked = 0
    for t in range(1, t_max + 1):
        num, den = qseries.a_rational_part(t)
        series = qseries.subst_exp_neg_z(num, den, 5)
        for j, want in expected(t).items():
            if series[j] != want:
                return _fail("laurent", checked, t=t, power=j, computed=series[j], expected=want, table=table)
            checked += 1
    return SuiteResult("laurent", True, checked)


XI_POINTS = (0.2, 0.5, 1.0)


def xi(points=XI_POINTS, psi: str = "printed") -> SuiteResult:
    checked = 0
    for z in points:
        r = asymptotics.xi_bound(z, psi=psi)
        if not r.holds:
            return _fail("xi", checked, z=z, psi=psi, ratio=f"{r.ratio:.10e}", limit=214)
        checked += 1
    return SuiteResult("xi", True, checked)


LIMIT_PRINTED = 1.6370350019


def limit(tol: float = 1e-9) -> SuiteResult:
    checked = 0
    for k in range(3):
        v = limits.G(k)
        if abs(v - limits.LIMIT_G) >= tol:
            return _fail("limit", checked, k=k, G=f"{v:.15f}", expected=f"{limits.LIMIT_G:.15f}")
        checked += 1
    lg = limits.limit_gamma()
    if abs(lg - LIMIT_PRINTED) >= tol:
        return _fail("limit", checked, limit_gamma=f"{lg:.15f}", expected=LIMIT_PRINTED)
    via_series = 1 / (limits.G(0) + limits.G(1))
    if not math.isclose(via_series, lg, abs_tol=tol):
        return _fail("limit", checked + 1, from_series=f"{via_series:.15f}", closed=f"{lg:.15f}")
    return SuiteResult("limit", True, checked + 2)


SUITES = ("genfun", "identities", "recurrence", "rationality", "bound", "laurent", "xi", "limit")
