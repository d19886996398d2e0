"""Self-dual codes from composite group-ring matrices and F2+uF2 lifts.

The pipeline: build an 18x18 composite matrix omega from a coefficient
vector (constructions omega1/omega2/omega3), take the generator [I | omega],
search the binary coefficient space for self-dual [36,18] codes, lift hits
over F2+uF2, and certify each Gray image's distance and weight-enumerator
parameters (gamma, beta).
"""

from ._version import __version__
from .analysis import (
    CodeParams,
    DistanceCertificate,
    EnumeratorMismatch,
    analyze_code,
    certify_min_distance,
    classify_type,
    extract_family_gamma_beta,
    extremal_bound,
    full_weight_spectrum,
    low_weight_codewords,
    standard_form,
    weight_counts,
    weight_spectrum_low,
)
from .bitmatrix import BitMatrix, circulant
from .composite import CompositeSpec, omega, preset, sigma, sigma_pattern
from .constructions import (
    CONSTRUCTIONS,
    ConditionReport,
    FirstRows,
    check_selfdual_blocks,
    explicit_pattern,
    gen_matrix,
    gen_matrix_r1,
    is_selfdual_direct,
    omega_f2,
    omega_r1,
)
from .groups import GroupTable, build_group, c3xc6, cyclic, dihedral
from .r1 import R1Matrix, gray_generator, gray_map, lee_distance, lee_weight, project
from .records import read_records, to_csv, to_table, write_records
from .search import (
    CodeRecord,
    LiftConfig,
    SearchConfig,
    fingerprint,
    lift_code,
    search_binary,
    verify_record,
)

__all__ = [
    "__version__",
    "BitMatrix",
    "circulant",
    "GroupTable",
    "build_group",
    "cyclic",
    "dihedral",
    "c3xc6",
    "CompositeSpec",
    "sigma",
    "sigma_pattern",
    "omega",
    "preset",
    "CONSTRUCTIONS",
    "FirstRows",
    "ConditionReport",
    "explicit_pattern",
    "omega_f2",
    "omega_r1",
    "gen_matrix",
    "gen_matrix_r1",
    "check_selfdual_blocks",
    "is_selfdual_direct",
    "R1Matrix",
    "gray_map",
    "gray_generator",
    "lee_weight",
    "lee_distance",
    "project",
    "CodeParams",
    "DistanceCertificate",
    "EnumeratorMismatch",
    "analyze_code",
    "certify_min_distance",
    "classify_type",
    "extract_family_gamma_beta",
    "extremal_bound",
    "full_weight_spectrum",
    "low_weight_codewords",
    "standard_form",
    "weight_counts",
    "weight_spectrum_low",
    "SearchConfig",
    "LiftConfig",
    "CodeRecord",
    "search_binary",
    "lift_code",
    "fingerprint",
    "verify_record",
    "read_records",
    "write_records",
    "to_csv",
    "to_table",
]
