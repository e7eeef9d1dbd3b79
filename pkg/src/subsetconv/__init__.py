"""Fast subset convolution and friends: exact subset-lattice products.

Dense set functions over exact rings, fast zeta/Möbius and
Walsh–Hadamard transforms, the full product family (subset convolution,
covering, packing, intersecting covering, exact-intersection, XOR),
min/max-sum semiring versions via digit embedding, and exact solvers
built on them: Dreyfus–Wagner Steiner trees, partition/coloring/clique
counting, branching-process expectations, color-coding pathway search,
and spanning-subhypergraph optimization.

Hot kernels run in a compiled extension when available, with a
pure-Python fallback selected at import (see ``subsetconv._backend``).
"""

from ._backend import has_compiled
from .core import (
    GroundSet,
    SetFunction,
    all_ones,
    delta_empty,
    iterate_subsets,
    make_set_function,
)
from .errors import (
    FormatError,
    GuardError,
    InexactDivisionError,
    InfeasibleError,
    RingOverflowError,
    SubsetConvError,
)
from .rings import (
    BIGINT,
    I64,
    RATIONAL,
    CountingRing,
    OpCounter,
    counter_snapshot,
)
from .transform import (
    RankedTable,
    mobius_inversion,
    ranked_mobius,
    ranked_zeta,
    walsh_hadamard,
    zeta_transform,
)
from .products import (
    COVER,
    INTERSECT_COVER,
    PACK,
    SUBSET,
    XOR,
    ProductMode,
    convolve_power,
    cover_product,
    exact_intersection,
    exact_intersection_product,
    intersect_cover_product,
    packing_product,
    rank_convolve,
    subset_convolve,
    xor_convolve,
)
from .optimize import (
    INF,
    MAX_SUM,
    MIN_SUM,
    NEG_INF,
    ExtendedWeightFunction,
    OptMode,
    is_finite,
    make_weight_function,
    opt_convolve,
    opt_product,
    opt_solution_counts,
    opt_witness,
)
from .oracle import direct_opt_product, direct_product

__version__ = "0.1.0"
