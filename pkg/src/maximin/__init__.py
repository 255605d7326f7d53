"""The divide-and-conquer maximin recurrence, its hypercubic bipartitions and h(n)."""

from .abr import AbrError, abr_format, abr_greedy, abr_runs, abr_value
from .core import (
    Bipartition,
    MaximinResult,
    ceil_lg,
    d,
    deficit,
    digit_sum,
    f,
    f_dc,
    f_digit,
    f_maximin,
)
from .genfunc import SeriesCoeffs, c_i_indicator, c_via_slices, expand_c, expand_h
from .grid import (
    BitPoint,
    BudgetExceeded,
    PointSet,
    beta_prefix,
    coordinate_splits,
    exhaustive_max_edges,
    induced_edge_count,
)
from .hcbp import (
    HcbpSet,
    c_count,
    enumerate_hcbp,
    extremal_pairs,
    h,
    h_abr,
    h_enum,
    h_mod8,
    h_reflect,
    strata,
    strata_table,
)

__version__ = "0.1.0"
