"""Exact combinatorics of special rim-hook tableaux and their applications:
signed inverse Kostka matrices, a rewrite-rule involution on rooted
tableaux, and chromatic symmetric functions of (3+1)-free orders."""

from .partitions import (
    Cell,
    Partition,
    cells,
    check_partition,
    conjugate,
    enumerate_partitions,
    format_multiplicity,
    format_partition,
    num_partitions,
    parse_partition,
    revlex_precedes,
)
from .tableaux import (
    RimHook,
    SemistandardTableau,
    SpecialRimHookTableau,
    enumerate_srht,
    enumerate_srht_all_types,
    enumerate_ssyt,
    kostka_number,
    permissible_cells,
    render_filling,
    render_hooks,
    render_tableau,
    sign,
)
from .involution import (
    HookClass,
    RootedTableau,
    Trace,
    apply_rule,
    check_sign_lemma,
    classify,
    enumerate_standard_pairs,
    inner_involution,
    iota,
    outer_involution,
    trace_to_json,
)
from .symfunc import (
    PartitionMatrix,
    SymFuncExpansion,
    VerificationReport,
    evaluate_at_ones,
    inverse_kostka_matrix,
    kostka_matrix,
    schur_to_e,
    verify_identities,
)
from .posets import (
    CsfResult,
    Graph,
    Poset,
    SSCensus,
    canonical_form,
    chromatic_polynomial,
    chromatic_polynomial_value,
    count_p_tableaux,
    csf,
    csf_monomial_from_colorings,
    enumerate_p_tableaux,
    enumerate_posets,
    evaluate_polynomial,
    height,
    incomparability_graph,
    is_ab_free,
    is_p_tableau,
    parse_poset,
    stanley_stembridge_involution,
)

__all__ = [
    "Cell",
    "CsfResult",
    "Graph",
    "HookClass",
    "Partition",
    "PartitionMatrix",
    "Poset",
    "RimHook",
    "RootedTableau",
    "SSCensus",
    "SemistandardTableau",
    "SpecialRimHookTableau",
    "SymFuncExpansion",
    "Trace",
    "VerificationReport",
    "apply_rule",
    "canonical_form",
    "cells",
    "check_partition",
    "check_sign_lemma",
    "chromatic_polynomial",
    "chromatic_polynomial_value",
    "classify",
    "conjugate",
    "count_p_tableaux",
    "csf",
    "csf_monomial_from_colorings",
    "enumerate_p_tableaux",
    "enumerate_partitions",
    "enumerate_posets",
    "enumerate_srht",
    "enumerate_srht_all_types",
    "enumerate_ssyt",
    "enumerate_standard_pairs",
    "evaluate_at_ones",
    "evaluate_polynomial",
    "format_multiplicity",
    "format_partition",
    "height",
    "incomparability_graph",
    "inner_involution",
    "inverse_kostka_matrix",
    "iota",
    "is_ab_free",
    "is_p_tableau",
    "kostka_matrix",
    "kostka_number",
    "num_partitions",
    "outer_involution",
    "parse_partition",
    "parse_poset",
    "permissible_cells",
    "render_filling",
    "render_hooks",
    "render_tableau",
    "revlex_precedes",
    "schur_to_e",
    "sign",
    "stanley_stembridge_involution",
    "trace_to_json",
    "verify_identities",
]

__version__ = "0.1.0"
