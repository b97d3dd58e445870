"""Exact construction and certification of nut graphs with prescribed
vertex, edge and arc orbit counts.

Everything runs in exact integer/rational arithmetic: nut certificates are
rational nullspace bases with zero residual, symbolic circulant criteria use
cyclotomic divisibility, and automorphism groups are searched and enumerated
from scratch.
"""

__version__ = "0.1.0"

from .automorphisms import (OrbitCensus, Permutation, PermutationGroup,
                            automorphism_group, is_vertex_transitive,
                            orbit_census, stabilizer)
from .constructions import (ConstructionParams, VerifiedNut, cayley_nut,
                            cayley_nut_edge_orbits, buset_connected,
                            buset_general, construct_with_orbits, fig3_graph,
                            nut_realizable, primes_from, prop1_graph,
                            prop2_graph, prop3_graph, subdivided_nut)
from .errors import (Graph6ParseError, HypothesisError, NotCoveredByThisPaper,
                     NotRealizable, ResourceCapError, SpecificationError,
                     VerificationError)
from .graphs import (AbelianCayleySpec, CirculantSpec, Graph,
                     cartesian_product, cayley_abelian, circulant,
                     complete_graph, read_graph6, subdivide_edges, write_dot,
                     write_graph6)
from .linalg import (NutVerdict, char_poly, integer_scaled, is_nut,
                     kernel_basis, kernel_vector_from_factors,
                     product_spectrum_check)
from .polynomials import (IntPoly, VanishingReport, circulant_is_nut_symbolic,
                          circulant_symbol, cyclotomic, exact_divide,
                          gcd_criterion, remainder_mod, resultant,
                          vanishing_orders)

__all__ = [
    "AbelianCayleySpec", "CirculantSpec", "ConstructionParams", "Graph",
    "Graph6ParseError", "HypothesisError", "IntPoly", "NotCoveredByThisPaper",
    "NotRealizable", "NutVerdict", "OrbitCensus", "Permutation",
    "PermutationGroup", "ResourceCapError", "SpecificationError",
    "VanishingReport", "VerificationError", "VerifiedNut",
    "automorphism_group", "buset_connected", "buset_general",
    "cartesian_product", "cayley_abelian", "cayley_nut",
    "cayley_nut_edge_orbits", "char_poly", "circulant",
    "circulant_is_nut_symbolic", "circulant_symbol", "complete_graph",
    "construct_with_orbits", "cyclotomic", "exact_divide", "fig3_graph",
    "gcd_criterion", "integer_scaled", "is_nut", "is_vertex_transitive",
    "kernel_basis", "kernel_vector_from_factors", "nut_realizable",
    "orbit_census", "primes_from", "product_spectrum_check", "prop1_graph",
    "prop2_graph", "prop3_graph", "read_graph6", "remainder_mod", "resultant",
    "stabilizer", "subdivide_edges", "subdivided_nut", "vanishing_orders",
    "write_dot", "write_graph6",
]
