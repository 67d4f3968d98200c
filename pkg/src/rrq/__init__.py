"""Rogers-Ramanujan continued fraction, q-products and integrals of eta quotients."""

from __future__ import annotations

from .core import (BranchError, ConvergenceError, DivergenceError, DomainError, EvalResult,
                   NoSignChangeError, NoValidRouteError, PoleError, RRQError, Truncation)
from .qseries import (Nome, dedekind_eta, euler_product_f, pentagonal_series_f, rr_cf_oracle,
                      rr_value, u_of_q, y_of_q)
from .roots import RootSpec, solve_complex, solve_real

__version__ = "0.1.0"

__all__ = [
    "BranchError", "ConvergenceError", "DivergenceError", "DomainError", "EvalResult",
    "NoSignChangeError", "NoValidRouteError", "PoleError", "RRQError", "Truncation",
    "Nome", "dedekind_eta", "euler_product_f", "pentagonal_series_f", "rr_cf_oracle",
    "rr_value", "u_of_q", "y_of_q", "RootSpec", "solve_complex", "solve_real",
]
