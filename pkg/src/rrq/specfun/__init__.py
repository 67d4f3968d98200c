"""Special functions used by the closed forms."""

from __future__ import annotations

from .elliptic import (EllipticArgs, agm, carlson_rd, carlson_rf, crosses_cut,
                       elliptic_e, elliptic_f, elliptic_k, elliptic_k_agm)
from .functional import (ALPHA, BETA, TripleFParams, gr_3197, theorem1_series,
                         triple_f)
from .gamma import beta_fn, digamma, gamma, lngamma, rgamma
from .hypergeometric import F1Params, HyperParams, appell_f1, gauss_2f1, hyp2f1

__all__ = [
    "EllipticArgs", "agm", "carlson_rd", "carlson_rf", "crosses_cut",
    "elliptic_e", "elliptic_f", "elliptic_k", "elliptic_k_agm",
    "ALPHA", "BETA", "TripleFParams", "gr_3197", "theorem1_series", "triple_f",
    "beta_fn", "digamma", "gamma", "lngamma", "rgamma",
    "F1Params", "HyperParams", "appell_f1", "gauss_2f1", "hyp2f1",
]
