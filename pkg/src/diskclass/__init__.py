"""Numerical toolkit for a class of normalized analytic functions on the
unit disk defined by a bounded deviation functional, with Hankel
determinant bounds, membership and radius tests, and seeded randomized
campaigns."""

from .catalog import (
    DiskFunction,
    SchwarzGenerator,
    build_member,
    catalog_ids,
    count_zeros_on_disk,
    make_catalog,
    sample_schwarz,
    seed_key,
)
from .errors import (
    ArgumentOutOfDomain,
    BoundaryTooClose,
    DenominatorVanishes,
    DiskClassError,
    EvalNearZeroDenominator,
    InsufficientOrder,
    NearZeroConstantTerm,
    NonzeroInnerConstant,
    ParamOutOfRange,
    PartCPrecondition,
    ReplayMismatch,
    SecondCoefficientVanishes,
    UnknownId,
)
from .explorer import (CampaignConfig, catalog_prepends, replay,
                       run_campaign, write_rows_csv)
from .hankel import (
    HankelReport,
    PSRecord,
    c3_envelope,
    coeffs_from_c,
    h3_profile_bound,
    hankel_det,
    prokhorov_szynal_check,
    reduced_h2,
    reduced_h3,
    write_sweep_csv,
)
from .membership import (
    MembershipReport,
    RadiusResult,
    ScanPolicy,
    Theorem2Record,
    extremal_on_circle,
    radius_of,
    test_class,
    theorem2_check,
    theorem3_check,
)
from .operators import (
    OmegaDecomposition,
    convex_quotient,
    decompose,
    g_deviation,
    g_starlike_deviation,
    g_transform,
    mocanu_functional,
    phi_profile,
    schwarz_growth_bound,
    starlike_quotient,
    turning_derivative,
    u_operator,
)
from .serialize import canonical_json
from .series import ComplexSeries

__version__ = "0.1.0"

__all__ = [
    "ComplexSeries",
    "DiskFunction",
    "SchwarzGenerator",
    "CampaignConfig",
    "write_rows_csv",
    "MembershipReport",
    "RadiusResult",
    "ScanPolicy",
    "Theorem2Record",
    "HankelReport",
    "PSRecord",
    "OmegaDecomposition",
    "DiskClassError",
    "ArgumentOutOfDomain",
    "BoundaryTooClose",
    "DenominatorVanishes",
    "EvalNearZeroDenominator",
    "InsufficientOrder",
    "NearZeroConstantTerm",
    "NonzeroInnerConstant",
    "ParamOutOfRange",
    "PartCPrecondition",
    "ReplayMismatch",
    "SecondCoefficientVanishes",
    "UnknownId",
    "build_member",
    "c3_envelope",
    "canonical_json",
    "catalog_ids",
    "catalog_prepends",
    "coeffs_from_c",
    "convex_quotient",
    "count_zeros_on_disk",
    "decompose",
    "extremal_on_circle",
    "g_deviation",
    "g_starlike_deviation",
    "g_transform",
    "h3_profile_bound",
    "hankel_det",
    "make_catalog",
    "mocanu_functional",
    "phi_profile",
    "prokhorov_szynal_check",
    "radius_of",
    "reduced_h2",
    "reduced_h3",
    "replay",
    "run_campaign",
    "sample_schwarz",
    "schwarz_growth_bound",
    "seed_key",
    "starlike_quotient",
    "test_class",
    "theorem2_check",
    "theorem3_check",
    "turning_derivative",
    "u_operator",
    "write_sweep_csv",
]
