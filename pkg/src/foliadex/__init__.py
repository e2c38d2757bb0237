"""Exact invariants of foliated projective bundles, cones and weighted
projective spaces: closed forms, constructive synthesis, and machine
verification against an enumeration oracle.
"""

__version__ = "0.1.0"

from .errors import (
    DomainError,
    FoliadexError,
    NotFanoError,
    ParseError,
    UnsupportedRequest,
)
from .lattice import (
    Class2,
    Cone2,
    Membership,
    Rational,
    cone2_membership,
    content,
    parse_rational,
    render_rational,
)
from .bundle import (
    BundleVariety,
    DivisorClass,
    IndexWitness,
    Positivity,
    classify_divisor,
    fano_index,
    generalized_index,
    nef_cone,
    pseff_cone,
    relative_anticanonical,
    seshadri_polarization,
)
from .rankone import (
    GeneralizedCone,
    PolarizedBase,
    RankOneClass,
    SingularityClass,
    WeightedProjectiveSpace,
    cartier_index,
    cone_foliation_invariants,
    index_pair,
    projective_space,
    projective_space_base,
    pushforward_to_cone,
    rank_one_positivity,
    seshadri_of_generator,
)
from .foliation import (
    ConeInduced,
    CoordinateProjection,
    FibrationInduced,
    FoliationDescriptor,
    LeafStatus,
    PnCatalogCase1,
    PnCatalogCase2,
    PullbackOverBundle,
    TranscendentalRankOne,
    cone_foliation,
    fibration_foliation,
    pn_foliation,
    pullback_over_bundle,
    transcendental_rank1,
    wps_coordinate_foliation,
)
from .invariants import ambient_is_smooth, compute_invariants
from .oracle import kernel_backend, oracle_generalized_index
from .report import (
    CheckOutcome,
    CheckReport,
    CheckStatus,
    InvariantReport,
    SweepReport,
)
from .synthesis import (
    CaseParameters,
    ExampleRecord,
    SynthesisRequest,
    SynthKind,
    case1_parameters,
    synth_fano_index,
    synth_generalized_index,
    synth_seshadri,
    synthesize,
)
from .families import (
    cone_table_record,
    mixed_record,
    rc_flat_record,
    rc_genus_record,
    wps1_record,
    wps2_record,
    wps3_record,
    wps4_record,
)
from .verification import (
    EmptyGrid,
    OracleGrid,
    StandardGrid,
    SynthGrid,
    check_record,
    run_sweep,
    verify_catalog,
    verify_record,
)
from .catalog import (
    SCHEMA_VERSION,
    Catalog,
    export_catalog,
    import_catalog,
    record_to_json,
    standard_catalog,
)
from .tables import FAMILY_PARAMS, TableRow, parse_range, table_rows

__all__ = [
    "__version__",
    "FoliadexError",
    "ParseError",
    "DomainError",
    "NotFanoError",
    "UnsupportedRequest",
    "Rational",
    "parse_rational",
    "render_rational",
    "Class2",
    "Cone2",
    "Membership",
    "cone2_membership",
    "content",
    "BundleVariety",
    "DivisorClass",
    "Positivity",
    "IndexWitness",
    "nef_cone",
    "pseff_cone",
    "classify_divisor",
    "relative_anticanonical",
    "generalized_index",
    "fano_index",
    "seshadri_polarization",
    "GeneralizedCone",
    "PolarizedBase",
    "RankOneClass",
    "SingularityClass",
    "WeightedProjectiveSpace",
    "projective_space",
    "projective_space_base",
    "cartier_index",
    "seshadri_of_generator",
    "rank_one_positivity",
    "index_pair",
    "pushforward_to_cone",
    "cone_foliation_invariants",
    "ConeInduced",
    "CoordinateProjection",
    "FibrationInduced",
    "FoliationDescriptor",
    "PnCatalogCase1",
    "PnCatalogCase2",
    "PullbackOverBundle",
    "TranscendentalRankOne",
    "LeafStatus",
    "fibration_foliation",
    "pullback_over_bundle",
    "pn_foliation",
    "transcendental_rank1",
    "wps_coordinate_foliation",
    "cone_foliation",
    "ambient_is_smooth",
    "compute_invariants",
    "oracle_generalized_index",
    "kernel_backend",
    "InvariantReport",
    "CheckStatus",
    "CheckOutcome",
    "CheckReport",
    "SweepReport",
    "SynthKind",
    "SynthesisRequest",
    "CaseParameters",
    "ExampleRecord",
    "case1_parameters",
    "synthesize",
    "synth_generalized_index",
    "synth_fano_index",
    "synth_seshadri",
    "wps1_record",
    "wps2_record",
    "wps3_record",
    "wps4_record",
    "cone_table_record",
    "mixed_record",
    "rc_genus_record",
    "rc_flat_record",
    "check_record",
    "verify_record",
    "verify_catalog",
    "run_sweep",
    "OracleGrid",
    "SynthGrid",
    "StandardGrid",
    "EmptyGrid",
    "Catalog",
    "SCHEMA_VERSION",
    "export_catalog",
    "import_catalog",
    "record_to_json",
    "standard_catalog",
    "FAMILY_PARAMS",
    "TableRow",
    "parse_range",
    "table_rows",
]
