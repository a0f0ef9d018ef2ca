"""Exact graph invariants, binary codes and lattice theta series.

Thin python layer over the C++ core: state polynomials (symbolic and
prime-weighted) with their reconstruction algorithms, Tutte polynomials,
binary-code weight enumerators, Construction A theta series and the
matroid -> code -> lattice pipeline.
"""

import json as _json
from fractions import Fraction as _Fraction

from ._mclat import (
    BinaryCode,
    CapExceeded,
    ExactPoly,
    Matroid,
    Multigraph,
    PseudoStatePoly,
    QSeries,
    SymbolicStatePoly,
    WeightMatrix,
    a_index,
    admissible_matrix,
    automorphism_count,
    bpr_family,
    code_from_matroid,
    complete_graph,
    delta_series,
    disjoint_union,
    edge_count_w1,
    eisenstein_e4,
    eisenstein_e6,
    gram_determinant_str,
    incidence_matroid,
    is_isomorphic,
    join,
    negami_specialize,
    nth_prime,
    p8_polynomial,
    p24_polynomial,
    paper_weight_matrix,
    parse_graph,
    path_graph,
    reconstruct_pseudo,
    reconstruct_symbolic,
    representable_d,
    run_pipeline_json,
    search_tequivalent,
    subdivide_edge,
    theta2,
    theta3,
    theta_direct,
    theta_from_code,
    tutte_deletion_contraction,
    tutte_subset_expansion,
    weight_enumerator_enum,
    weight_enumerator_greene,
    z_state_symbolic,
    z_state_weighted,
)

__all__ = [name for name in dir() if not name.startswith("_")] + [
    "gram_determinant",
    "run_pipeline",
]


def gram_determinant(code):
    """Exact Gram determinant of the Construction A lattice, as a Fraction."""
    return _Fraction(gram_determinant_str(code))


def run_pipeline(g1, g2, precision_quarters=40, iso_cap=10):
    """Run the matroid -> code -> lattice chain; returns the report dict."""
    return _json.loads(run_pipeline_json(g1, g2, precision_quarters, iso_cap))
