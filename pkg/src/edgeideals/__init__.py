"""Edge-ideal workbench: vertex covers, generator certificates, radical checks.

For a finite simple graph whose cycles are pairwise vertex-disjoint, this
package computes the big height of the edge ideal, constructs an explicit
list of at most ``big_height + n`` polynomials (n = number of cycles) whose
radical is the edge ideal, and verifies the claim with an exact
Groebner-basis oracle.
"""

from edgeideals.graphs import (
    Graph,
    CycleStructure,
    EdgeRole,
    GraphError,
    GraphParseError,
    parse_graph,
    cycle_structure,
    classify_component,
    ComponentClass,
    is_fully_whiskered,
    add_whisker,
    glue_leaves,
    split_degree2_cycle_vertex,
    decompose_at_edge,
    free_neighbors,
    edge_roles,
)
from edgeideals.covers import (
    VertexCover,
    CoverSummary,
    CoverError,
    enumerate_minimal_covers,
    minimal_covers,
    maximum_minimal_covers,
    height,
    big_height,
    induced_cover,
    check_induced_minimality,
    redundant_neighbors,
    vertex_in_all_maximum_covers,
    classify_lemma3,
    Lemma3Outcome,
    union_cover_maximality,
)
from edgeideals.polynomials import Polynomial, PolynomialParseError, parse_polynomial
from edgeideals.groebner import (
    MonomialOrder,
    GroebnerBudgetError,
    groebner_basis,
    normal_form,
    radical_membership,
    monomial_radical_membership,
    verify_radical_equals_edge_ideal,
    VerificationResult,
)
from edgeideals.certificates import (
    GeneratorCertificate,
    SVArrangement,
    ConstructionError,
    SearchBudgetError,
    sv_check,
    sv_search,
    base_case_certificate,
    construct_generators,
    reduce_degree2,
    substitute_glue,
    combine_case1a,
    combine_case1d,
    combine_case2,
    combine_case3,
)

__version__ = "0.1.0"

__all__ = [
    "Graph",
    "CycleStructure",
    "EdgeRole",
    "GraphError",
    "GraphParseError",
    "parse_graph",
    "cycle_structure",
    "classify_component",
    "ComponentClass",
    "is_fully_whiskered",
    "add_whisker",
    "glue_leaves",
    "split_degree2_cycle_vertex",
    "decompose_at_edge",
    "free_neighbors",
    "edge_roles",
    "VertexCover",
    "CoverSummary",
    "CoverError",
    "enumerate_minimal_covers",
    "minimal_covers",
    "maximum_minimal_covers",
    "height",
    "big_height",
    "induced_cover",
    "check_induced_minimality",
    "redundant_neighbors",
    "vertex_in_all_maximum_covers",
    "classify_lemma3",
    "Lemma3Outcome",
    "union_cover_maximality",
    "Polynomial",
    "PolynomialParseError",
    "parse_polynomial",
    "MonomialOrder",
    "GroebnerBudgetError",
    "groebner_basis",
    "normal_form",
    "radical_membership",
    "monomial_radical_membership",
    "verify_radical_equals_edge_ideal",
    "VerificationResult",
    "GeneratorCertificate",
    "SVArrangement",
    "ConstructionError",
    "SearchBudgetError",
    "sv_check",
    "sv_search",
    "base_case_certificate",
    "construct_generators",
    "reduce_degree2",
    "substitute_glue",
    "combine_case1a",
    "combine_case1d",
    "combine_case2",
    "combine_case3",
]
