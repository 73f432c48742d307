"""Exact construction, certification, and enumeration of Salem numbers and
of additive linear relations among their conjugates."""

from .polyarith import (IntPoly, NotReciprocalError, OddDegreeError,
                        div_exact, format_poly, norm_form, pair_sum_lift,
                        pair_sum_trace_poly, poly_gcd, trace_lift,
                        trace_project)
from .realroots import (EndpointIsRootError, RootBox, count_roots,
                        cubic_all_in_band, cubic_salem_split, isolate_roots,
                        refine, root_bound, squarefree_part)
from .factorint import (Factorization, factor, is_irreducible,
                        kronecker_factor_oracle, squarefree_decomposition)
from .cyclo import (CandidateSet, CyclotomicHit, ProgressionEntry,
                    ProgressionSet, SalemSeq, cyclotomic,
                    cyclotomic_candidates, cyclotomic_part,
                    cyclotomic_progressions, seq_poly)
from .salemkit import (ConstructionFailed, FAMILIES, RejectionKind,
                       RejectionReason, SalemCertificate, bad_degrees,
                       build_salem_from_trace_poly, enum_deg6_trace0,
                       enum_deg6_trace0_detail, pair_sum_enum, salem_check,
                       trace, trace0_salem, trace0_salem_detail,
                       window_poly_search)
from .relations import (PairingViolation, RelationReport, RelationVector,
                        certify, find_relations, min_length_scan, pair_reduce)
from .parsing import EmptyInput, parse_poly

__version__ = "0.1.0"

__all__ = [
    "IntPoly", "NotReciprocalError", "OddDegreeError", "div_exact",
    "format_poly", "norm_form", "pair_sum_lift", "pair_sum_trace_poly",
    "poly_gcd", "trace_lift", "trace_project",
    "EndpointIsRootError", "RootBox", "count_roots", "cubic_all_in_band",
    "cubic_salem_split", "isolate_roots", "refine", "root_bound",
    "squarefree_part",
    "Factorization", "factor", "is_irreducible", "kronecker_factor_oracle",
    "squarefree_decomposition",
    "CandidateSet", "CyclotomicHit", "ProgressionEntry", "ProgressionSet",
    "SalemSeq", "cyclotomic", "cyclotomic_candidates", "cyclotomic_part",
    "cyclotomic_progressions", "seq_poly",
    "ConstructionFailed", "FAMILIES", "RejectionKind", "RejectionReason",
    "SalemCertificate", "bad_degrees", "build_salem_from_trace_poly",
    "enum_deg6_trace0", "enum_deg6_trace0_detail", "pair_sum_enum",
    "salem_check", "trace", "trace0_salem", "trace0_salem_detail",
    "window_poly_search",
    "PairingViolation", "RelationReport", "RelationVector", "certify",
    "find_relations", "min_length_scan", "pair_reduce",
    "EmptyInput", "parse_poly",
    "__version__",
]
