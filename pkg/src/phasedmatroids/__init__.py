"""Phased matroids: phirotopes, canonical forms and realizability.

The package decides, in polynomial time, whether a uniform phased matroid
that is not essentially oriented is realizable over the complex numbers, and
if so produces its unique canonical realization.
"""

from .canonical import (
    AssociatedBipartiteGraph,
    CanonicalizationResult,
    SpanningForest,
    associated_bipartite_graph,
    canonical_spanning_forest,
    canonicalize,
    entry_phase,
    is_canonical,
    is_essentially_oriented,
    minor_phase,
    shuffle_sign,
)
from .errors import (
    DegenerateTriangleError,
    DisconnectedGraphError,
    EssentiallyOrientedError,
    FirstSubsetNotBasisError,
    IndexOutOfRangeError,
    InfeasibleTriangleError,
    InvalidPhirotopeError,
    NonSpanningForestError,
    NotAMatroidError,
    NotCanonicalError,
    PhasedMatroidError,
    RankDeficientError,
    SingularLeadingBlockError,
    UnsupportedMinorSizeError,
    ZeroScalarError,
)
from .matrices import (
    ComplexMatrix,
    all_maximal_minors,
    maximal_minor,
    scale,
    to_standard_form,
)
from .phases import (
    DEFAULT_TOLERANCE,
    MINUS_ONE,
    ONE,
    ZERO,
    HypersumSet,
    Phase,
    Tolerance,
    TriangleEquation,
    circular_distance,
    contains_zero,
    hypersum,
    phase_of,
    triangle_solve,
    zero_in_hypersum,
)
from .phirotopes import (
    Phirotope,
    Rephasing,
    UnderlyingMatroid,
    from_matrix,
    is_uniform,
    rephase,
    scale_global,
    sort_with_sign,
    underlying_matroid,
)
from .realization import (
    NormGrid,
    NotRealizable,
    Realizable,
    RealizabilityVerdict,
    Unsupported,
    Witness,
    decide_realizability,
    normalize_to_tree,
    rank2_norm,
    reconstruct,
    verify,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
