"""Repeated-root cyclic codes of length 5 p^s over GF(p^m), p >= 7.

Exact minimum distances, weight distributions of the length-5 components,
MDS classification, duals, and quantum synchronizable code parameters, each
backed by a brute-force oracle.
"""

from .code import (
    UNSUPPORTED,
    ZERO_CODE,
    CodeSpec,
    SimpleRootCode,
    all_simple_codes,
    all_specs,
    component_code,
    dimension,
    dual_code,
    generator_poly,
    is_dual_containing,
    is_subcode,
    make_code,
    paired_dual,
    parity_check_poly,
    printed_dual,
    simple_code,
)
from .distance import (
    DistanceReport,
    discrepancy_report,
    distance_exact,
    distance_report,
    min_pt_at_least,
    pt_weight,
)
from .field import FieldCtx, FieldElement, make_field
from .mds import MdsVerdict, classify_mds, mds_scan, singleton_defect
from .oracle import Budget, brute_distance, brute_dual_check, brute_enumerator
from .poly import Poly, poly_gcd, poly_pow, poly_weight
from .qsc import QscParams, check_qsc_pair, qsc_params
from .spectrum import CaseTag, Spectrum, classify_case, factor_x5m1
from .tables import distance_paper_table, paper_table_lookups
from .weights import WeightEnumerator, macwilliams, simple_distance, weight_table

__version__ = "0.1.0"
