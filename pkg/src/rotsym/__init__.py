"""Exact analysis toolkit for rotation-symmetric Boolean functions.

Truth-table functions up to a configurable size cap, exact Walsh spectra
(naive and fast), nonlinearity, rotation-orbit machinery, and an O(n)
recurrence engine that evaluates single Walsh coefficients of the cyclic
degree-3 family far beyond explicit-table sizes.
"""

from .boolfn import (
    DEFAULT_MAX_VARS,
    AnfForm,
    BooleanFunction,
    DimensionError,
    LinearMask,
    TableSizeError,
    anf_to_table,
    distance,
    is_rotation_symmetric,
    reverse_variables,
    rotate_bits,
    rotate_variables,
    table_to_anf,
    weight,
)
from .walsh import NonlinearityReport, WalshSpectrum, nonlinearity, walsh_point, walsh_spectrum
from .rsbf import (
    F2,
    F3,
    OrbitSet,
    SubFamily,
    chain_triples,
    compose_F3_point,
    generate_rsbf,
    orbit_representatives,
    realize,
    restricted_sum_oracle,
    subfunction_family,
)
from .recurrence import (
    BASE_THRESHOLD,
    F3_weight_and_nonlinearity,
    F3_zero_value,
    check_sandwich_bounds,
    check_subfamily_quarter_bound,
    eval_F3_point,
    eval_restricted_sum,
    eval_subfunction_point,
)

__version__ = "0.1.0"
