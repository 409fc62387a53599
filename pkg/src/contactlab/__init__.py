"""contactlab: contact numbers of sphere packings.

Exact planar and digital contact formulas, d-dimensional upper and lower
bounds, constructors attaining them (hexagonal spirals, fcc bipyramids,
quasi-square and quasi-cube polyominoes), total-separability checking,
Monte Carlo parallel-domain volumes, and a desk-scale enumeration
pipeline for maximum-contact rigid clusters of unit spheres.
"""

from .bounds import (BoundReport, UnsupportedBoundError, exact_formula,
                     fcc_octahedral_lower, gap_ratios, kissing_number,
                     table1, table1_csv, upper_bound)
from .cluster import (EmbeddingResult, SearchReport, SolverConfig,
                      brute_force_small, cayley_menger_determinant,
                      classify_rigidity, max_contact_search, prune,
                      solve_embedding)
from .constructors import (fcc_bipyramid, fcc_cluster, fcc_neighbors,
                           hex_spiral, twin_bipyramids)
from .digital import (Polyomino, facet_contacts, iso_quotient_check,
                      quasi_cube, quasi_square, surface_volume,
                      to_digital_packing)
from .geometry import (ContactGraph, InvalidPackingError, LatticeData,
                       MalformedInputError, Packing, ToleranceConfig,
                       contact_graph, parallel_volume_estimate,
                       unit_ball_volume, validate_packing)
from .graphs import (CandidateGraph, canonical_form, enumerate_candidates,
                     join_with_k2)
from .separability import (Hyperplane, SeparabilityReport, is_digital,
                           total_separability)

__version__ = "0.1.0"

__all__ = [
    "BoundReport", "CandidateGraph", "ContactGraph", "EmbeddingResult",
    "Hyperplane", "InvalidPackingError", "LatticeData",
    "MalformedInputError", "Packing", "Polyomino", "SearchReport",
    "SeparabilityReport", "SolverConfig", "ToleranceConfig",
    "UnsupportedBoundError", "brute_force_small",
    "cayley_menger_determinant", "canonical_form", "classify_rigidity",
    "contact_graph", "enumerate_candidates", "exact_formula",
    "facet_contacts", "fcc_bipyramid", "fcc_cluster", "fcc_neighbors",
    "fcc_octahedral_lower", "gap_ratios", "hex_spiral", "is_digital",
    "iso_quotient_check", "join_with_k2", "kissing_number",
    "max_contact_search", "parallel_volume_estimate", "prune",
    "quasi_cube", "quasi_square", "solve_embedding", "surface_volume",
    "table1", "table1_csv", "to_digital_packing", "total_separability",
    "twin_bipyramids", "unit_ball_volume", "upper_bound",
    "validate_packing",
]
