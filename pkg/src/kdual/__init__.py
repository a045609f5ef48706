"""kdual: exact computations in involutive equivariant cohomology and
K-theory, including the T-duality transform for Real circle bundles."""

from .exact_abelian import (
    ClassificationError,
    FGAbelianGroup,
    GroupHom,
    IntegerMatrix,
    RModule,
    SmithDecomposition,
    cokernel,
    exactness_check,
    rmodule_classify,
    smith_normal_form,
)
from .graded_algebra import (
    EQ,
    PM,
    Degree,
    GeneratorSpec,
    PresentedRing,
    RingElement,
    degree_component,
    mul,
    normalize,
    verify_ring_hom,
)
from .paper_rings import (
    ExteriorKClass,
    FOracleImage,
    build_ring,
    dictionary,
    f_oracle,
    verify_f_injective,
    verify_relation_via_oracle,
)
from .expressions import ParseError, parse_expression
from .transforms import (
    GradedGroupTable,
    ModuleMap,
    group_cohomology_z2,
    gysin_cohomology,
    kunneth_split,
    pushforward_torus2,
    t_power_table,
    t_transform,
)
from .tduality import (
    Pair,
    RealCircleBundle,
    TDualResult,
    TwistedKTable,
    enumerate_pair_classes,
    gauge_orbit,
    tdual,
    twisted_k_mv,
    verify_theorem_T,
)
from .suites import Report, run_suite

__version__ = "0.1.0"

__all__ = [
    "ClassificationError", "FGAbelianGroup", "GroupHom", "IntegerMatrix",
    "RModule", "SmithDecomposition", "cokernel", "exactness_check",
    "rmodule_classify", "smith_normal_form",
    "EQ", "PM", "Degree", "GeneratorSpec", "PresentedRing", "RingElement",
    "degree_component", "mul", "normalize", "verify_ring_hom",
    "ExteriorKClass", "FOracleImage", "build_ring", "dictionary", "f_oracle",
    "verify_f_injective", "verify_relation_via_oracle",
    "ParseError", "parse_expression",
    "GradedGroupTable", "ModuleMap", "group_cohomology_z2", "gysin_cohomology",
    "kunneth_split", "pushforward_torus2", "t_power_table", "t_transform",
    "Pair", "RealCircleBundle", "TDualResult", "TwistedKTable",
    "enumerate_pair_classes", "gauge_orbit", "tdual", "twisted_k_mv",
    "verify_theorem_T",
    "Report", "run_suite",
]
