"""Leading asymptotic terms and desk-scale convergence diagnostics."""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from functools import lru_cache

import mpmath

from . import qseries
from .constants import beta_numeric


class OrderBudgetExceeded(ValueError):
    """Raised when an exact coefficient would need a series beyond the budget."""


class TruncationInsufficient(ArithmeticError):
    """Raised when the product for xi cannot be truncated to the target accuracy."""


class Family(enum.Enum):
    A_SC = "a"
    B_DO = "b"
    CLASS_SIZE = "size"
    AVG_SC = "avg_sc"
    AVG_DO = "avg_do"


_C4_3, _C4_2 = 3**0.25, 2**0.25


@dataclass(frozen=True)
class MainTermSpec:
    family: Family
    t: int = 1
    beta: float | None = None

    def __post_init__(self):
        object.__setattr__(self, "family", Family(self.family))
        if self.family in (Family.B_DO, Family.AVG_DO):
            b = beta_numeric(self.t) if self.beta is None else self.beta
            if not 0 < b <= 0.5:
                raise ValueError("beta must lie in (0, 1/2]")
            object.__setattr__(self, "beta", b)


def log_main_term(spec: MainTermSpec, n: int) -> float:
    """Natural log of the leading term; finite for any n >= 1."""
    if n < 1:
        raise ValueError("n must be positive")
    growth = math.pi * math.sqrt(n / 6)
    fam = spec.family
    if fam is Family.A_SC:
        return math.log(_C4_3 / (2 * math.pi * _C4_2)) - 0.25 * math.log(n) + growth
    if fam is Family.B_DO:
        return math.log(spec.beta * _C4_3 / (math.pi * _C4_2)) - 0.25 * math.log(n) + growth
    if fam is Family.CLASS_SIZE:
        return math.log(_C4_2 / (4 * _C4_3)) - 0.75 * math.log(n) + growth
    if fam is Family.AVG_SC:
        return math.log(2 / math.pi * math.sqrt(1.5 * n))
    return math.log(4 * spec.beta / math.pi * math.sqrt(1.5 * n))


def main_term(spec: MainTermSpec, n: int) -> float:
    """Leading term as a double (inf once it leaves double range, n ~ 3e5)."""
    try:
        return math.exp(log_main_term(spec, n))
    except OverflowError:
        return math.inf


@dataclass(frozen=True)
class RatioReport:
    family: Family
    t: int
    n: int
    exact: int
    main_term: float
    ratio: float

    def csv_row(self) -> str:
        return f"{self.family.value},{self.t},{self.n},{self.exact},{self.main_term:.10e},{self.ratio:.10f}"


@lru_cache(maxsize=32)
def _series(family: Family, t: int, order: int) -> qseries.IntSeries:
    if family is Family.A_SC:
        return qseries.gen_A(t, order)
    if family is Family.B_DO:
        return qseries.gen_B(t, order)
    return qseries.distinct_odd_product(order)


def exact_count(family: Family | str, t: int, n: int, max_order: int = 10_000) -> int:
    family = Family(family)
    if family not in (Family.A_SC, Family.B_DO, Family.CLASS_SIZE):
        raise ValueError(f"no exact count for {family}")
    if n > max_order:
        raise OrderBudgetExceeded(f"n={n} exceeds the series budget {max_order}")
    # round the order up so nearby n share one series build
    order = min(max_order, max(n, 1 << max(n, 1).bit_length()))
    return _series(family, t, order)[n]


def ratio_report(family: Family | str, t: int, n: int, max_order: int = 10_000) -> RatioReport:
    """Exact count against its leading term; ratio computed in log space."""
    family = Family(family)
    exact = exact_count(family, t, n, max_order)
    spec = MainTermSpec(family, t)
    log_main = log_main_term(spec, n)
    ratio = math.exp(math.log(exact) - log_main) if exact > 0 else 0.0
    return RatioReport(family, t, n, exact, main_term(spec, n), ratio)


def psi_eval(z) -> mpmath.mpc:
    """exp(pi^2/(24 z) + z/12), the main term as printed."""
    z = mpmath.mpmathify(z)
    return mpmath.exp(mpmath.pi**2 / (24 * z) + z / 12)


def psi_corrected(z) -> mpmath.mpc:
    """exp(pi^2/(24 z) - z/24).

    (-q; q^2)_inf = q^{1/24} eta(2tau)^2 / (eta(tau) eta(4tau)), so the
    q^{1/24} factor contributes -z/24 rather than +z/12.
    """
    z = mpmath.mpmathify(z)
    return mpmath.exp(mpmath.pi**2 / (24 * z) - z / 24)


PSI_FORMS = {"printed": psi_eval, "corrected": psi_corrected}


def xi_eval(z, order: int | None = None, tail_tol: float = 1e-18, max_order: int = 2_000_000) -> mpmath.mpc:
    """(-q; q^2)_inf at q = e^{-z}, Re z > 0, from the product itself.

    Without ``order`` the product is cut once sum_{j > N} |q|^j < tail_tol.
    Works at the current mpmath precision.
    """
    z = mpmath.mpmathify(z)
    x = float(mpmath.re(z))
    if x <= 0:
        raise ValueError("need Re(z) > 0")
    if order is None:
        # |q|^{N+1} / (1 - |q|) < tail_tol
        need = (math.log(1 / tail_tol) - math.log1p(-math.exp(-x))) / x
        if not math.isfinite(need) or need > max_order:
            raise TruncationInsufficient(f"z={z} needs more than {max_order} factors")
        order = int(need) + 1
    q = mpmath.exp(-z)
    q2 = q * q
    prod = mpmath.mpf(1)
    power = q
    for _ in range(1, order + 1, 2):
        prod *= 1 + power
        power *= q2
    return prod


@dataclass(frozen=True)
class XiBound:
    z: complex
    xi: complex
    psi: complex
    ratio: float  # |xi - psi| / |psi e^{-pi^2/z}|

    @property
    def holds(self) -> bool:
        return self.ratio < 214


def xi_bound(z, slack: float = 1e-6, psi: str = "printed") -> XiBound:
    """Compare xi(e^{-z}) with Psi(z) on the scale |Psi(z) e^{-pi^2/z}|.

    The difference is of relative size e^{-pi^2 Re(1/z)}, so both the working
    precision and the product truncation are set from that scale.
    """
    z = complex(z)
    omega = math.exp(-math.pi**2 * (1 / z).real)
    digits = 30 + int(math.pi**2 * (1 / z).real / math.log(10))
    with mpmath.workdps(digits):
        zz = mpmath.mpc(z.real, z.imag)
        xi = xi_eval(zz, tail_tol=slack * omega)
        psi = PSI_FORMS[psi](zz)
        scale = abs(psi * mpmath.exp(-mpmath.pi**2 / zz))
        ratio = float(abs(xi - psi) / scale)
        return XiBound(z, complex(xi), complex(psi), ratio)


def _qbinom_float(n: int, k: int, q: float) -> float:
    if k < 0 or k > n:
        return 0.0
    out = 1.0
    for i in range(1, k + 1):
        out *= (1 - q ** (n - k + i)) / (1 - q**i)
    return out


def k_eval(t: int, z: float) -> float:
    """A*_t / (-q; q^2)_inf at real q = e^{-z}."""
    num, den = qseries.a_rational_part(t)
    q = math.exp(-z)
    return sum(c * q**d for d, c in enumerate(num.to_list())) / sum(
        c * q**d for d, c in enumerate(den.to_list())
    )


def l_eval(t: int, z: float, rel_tol: float = 1e-16) -> float:
    """B*_t / (-q; q^2)_inf at real q = e^{-z}; z * l_eval(t, z) -> beta*_t."""
    q = math.exp(-z)
    total = 0.0
    for term in qseries.b_terms(t):
        inner, m = 0.0, 0
        while True:
            den = 1.0
            for i in range(term.count):
                den *= 1 + q ** (2 * m + term.poch_base + 2 * i)
            piece = q ** (2 * m * term.step) / den
            inner += piece
            m += 1
            if piece <= rel_tol * inner:
                break
        total += q**term.prefactor * _qbinom_float(term.jp, term.ell, q * q) * inner
    return total
