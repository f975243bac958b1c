"""Hook-length statistics for self-conjugate and distinct-odd partitions.

Brute-force enumeration, exact q-series generating functions, the bias
constants beta*_t and gamma*_t in Q(log 2), and their asymptotic diagnostics.
"""
from .asymptotics import (
    Family,
    MainTermSpec,
    OrderBudgetExceeded,
    RatioReport,
    TruncationInsufficient,
    main_term,
    psi_corrected,
    psi_eval,
    ratio_report,
    xi_bound,
    xi_eval,
)
from .constants import (
    S_rs,
    beta_closed,
    beta_numeric,
    beta_quadrature,
    beta_recurrence_check,
    f1,
    f2,
    f3,
    gamma,
    integral_I,
)
from .limits import G, g, limit_gamma
from .logrational import LogRational
from .partitions import (
    CellStats,
    Partition,
    PartitionClass,
    a_star_brute,
    b_star_brute,
    cell_stats,
    conjugate,
    enumerate_class,
    hook_tally,
    n_t,
)
from .qseries import (
    DegenerateDenominator,
    IntSeries,
    InvertNonUnit,
    RatLaurent,
    gen_A,
    gen_B,
    pochhammer,
    q_binomial,
    subst_exp_neg_z,
)
from .quadrature import QuadratureSpec, ToleranceNotReached

__version__ = "0.1.0"
