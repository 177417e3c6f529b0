"""Exact combinatorics for U'-quotients of horospherical varieties."""

from .cones import Cone, ConeError, SpaceMismatch, cone_from, contains, dual_cone, extreme_rays, interior_contains
from .quotient_analysis import (
    AnalysisReport,
    CofreeVerdict,
    ContractionVerdict,
    HmVerdict,
    HvReport,
    MonoidSpec,
    NodeSet,
    NullconeWitness,
    check_contraction_hypotheses,
    classify_cofree,
    enumerate_sparse_sets,
    hm_admissible,
    hm_verdict,
    hv_report,
    is_sparse,
    minimal_generators,
    nullcone_codim2_witness,
    s_variety_report,
)
from .repdata import (
    MultiplicityTable,
    WeightSet,
    chain_weight,
    freudenthal_multiplicity,
    multiplicity_table,
    u2_invariant_dim,
    u2_weight_set,
    weyl_dimension,
)
from .rootsystem import (
    Coweight,
    RootSystem,
    RootSystemError,
    SimpleType,
    Weight,
    build_root_system,
    cartan_inverse_diagonal,
    pairing,
    to_root_basis,
)
from .weylgroup import (
    CosetReps,
    WeylElement,
    WeylOrderError,
    enumerate_weyl,
    min_length_satisfying,
    minimal_coset_reps,
    simple_reflection,
    weyl_orbit,
)
