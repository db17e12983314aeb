"""Finite groups, power quandles, and the adjunction between them."""

from .errors import (
    AxiomViolation,
    CentralityFailure,
    ConsistencyError,
    KernelNotCentral,
    LimitExceeded,
    PowqError,
    SectionNotPqMorphism,
    SizeBound,
    UnknownName,
    Unrealizable,
    UnsupportedFormat,
    UnsupportedSize,
)
from .groups import (
    AbelianInvariants,
    FiniteGroup,
    GroupHom,
    Subgroup,
    abelian_from_fingerprint,
    abelian_invariants_of,
    abelian_sum,
    abelianization,
    alternating,
    catalog,
    center,
    commutator_subgroup,
    conjugacy_classes,
    count_group_homs,
    cyclic,
    dicyclic,
    dihedral,
    direct_product,
    exponent,
    group_from_json,
    group_iso,
    group_to_json,
    heisenberg,
    klein,
    parse_group_spec,
    power_fingerprint,
    quotient,
    subgroup_closure,
    symmetric,
    validate_group,
)
from .intlinalg import (
    IntMatrix,
    SNFResult,
    b_group,
    b_group_matrix,
    bar_homology,
    cokernel_invariants,
    det,
    h1_matches_abelianization,
    lattice_coordinates,
    row_lattice_basis,
    smith_normal_form,
    snf_diagonal,
)
from .pq import (
    PowerQuandle,
    PqFingerprint,
    PqMorphism,
    canonical_exponent,
    count_pq_morphisms,
    fingerprint,
    is_pq_morphism,
    orbits,
    pq_abelianization,
    pq_center,
    pq_from_json,
    pq_iso,
    pq_of_group,
    pq_to_json,
    validate_pq,
)
from .presentation import (
    CentralExtension,
    EnumeratedGroup,
    FiveTermReport,
    Presentation,
    abelian_adjoint_summary,
    check_split,
    extend_section,
    gr_pq,
    presentation_of_pq,
    todd_coxeter,
    verify_five_term,
)
from .sweeps import (
    VERSION,
    VerificationReport,
    abelian_types,
    catalog_families,
    emit_report,
    sweep_adjoint,
    sweep_forgetful,
)

__version__ = VERSION
