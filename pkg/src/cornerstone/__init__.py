"""cornerstone: a standard-basis kernel for polynomial rings under global,
local and mixed monomial orderings, with an ideal/module operation layer,
singularity invariants and a deterministic session language."""

from .orders import (
    GLOBAL, LOCAL, MIXED, LT, EQ, GT,
    OrderSpec, lp, dp, ds, block, matrix_order,
    compare, classify, leading, ecart, make_elim_order, extend_to_module,
)
from .rings import RingContext, Polynomial, RingError, QQ
from .reduce import ReductionRecord, spoly, nf_buchberger, nf_mora, divide_exact
from .basis import (
    StandardBasis, MonomialIdeal, standard_basis, leading_ideal,
    interreduce, is_standard_basis, highest_corner, nf_fast,
    CancelToken, Cancelled,
)

__version__ = "0.1.0"
