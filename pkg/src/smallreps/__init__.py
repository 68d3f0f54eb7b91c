"""Small representations of simple Lie algebras and osp(1|2m).

Exact computation of characters, symmetric and alternating squares, and
the classification of representations whose squares are (nearly)
irreducible.
"""

from .classify import (
    CIRCLE,
    NOT_SMALL,
    STAR,
    IndexReport,
    SmallnessVerdict,
    casimir_c,
    check_index_identity,
    classify_all,
    identify_tannaka_candidates,
    index_of,
    kappa,
    smallness,
)
from .reps import (
    DominantWeight,
    GradedCharacter,
    IrrepLabel,
    character,
    dim_total,
    dimension,
    enumerate_dominant_up_to_dim,
    kacweyl_superdim,
    superdim,
    weyl_dim,
)
from .rootsys import (
    DynkinType,
    RootSystem,
    WeightVec,
    build,
    coroot_norm_max,
    diagram_automorphisms,
    inner,
    is_dominant,
    r_ratio,
    to_dominant,
)
from .squares import (
    Decomposition,
    DecompositionError,
    contains_highest_weight,
    decompose,
    square_character,
    square_decompose,
)

__version__ = "0.1.0"

__all__ = [
    "CIRCLE",
    "NOT_SMALL",
    "STAR",
    "Decomposition",
    "DecompositionError",
    "DominantWeight",
    "DynkinType",
    "GradedCharacter",
    "IndexReport",
    "IrrepLabel",
    "RootSystem",
    "SmallnessVerdict",
    "WeightVec",
    "build",
    "casimir_c",
    "character",
    "check_index_identity",
    "classify_all",
    "contains_highest_weight",
    "coroot_norm_max",
    "decompose",
    "diagram_automorphisms",
    "dim_total",
    "dimension",
    "enumerate_dominant_up_to_dim",
    "identify_tannaka_candidates",
    "index_of",
    "inner",
    "is_dominant",
    "kacweyl_superdim",
    "kappa",
    "r_ratio",
    "smallness",
    "square_character",
    "square_decompose",
    "superdim",
    "to_dominant",
    "weyl_dim",
]
