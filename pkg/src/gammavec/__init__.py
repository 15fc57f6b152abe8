"""Exact combinatorics of simplicial spheres and gamma vectors.

Subpackages:
  complexes  facet-set simplicial complexes, links, contractions, subdivisions
  vectors    f/h/g/gamma transforms and the gamma-to-h/g matrices
  macaulay   Macaulay representations, pseudopowers, realizability checks
  realize    constructive extension of nonnegative gamma vectors
  links      local-global identities and link-condition inequality suite
  orthopath  unitary orthogonal polynomials, Motzkin paths, dimer covers
  intervals  exact-rational enclosures for rational powers
  cli        batch command-line interface
"""

from .complexes import (
    SimplicialComplex,
    check_link_condition,
    contract_edge,
    cross_polytope_boundary,
    cycle,
    from_facets,
    link,
    simplex_boundary,
    stellar_subdivide_edge,
    tchebyshev_subdivision,
)
from .macaulay import (
    MacaulayRep,
    check_cm_h,
    check_f_vector,
    check_sphere_g,
    macaulay_rep,
    pseudopower,
    pseudopower_bounds,
)
from .orthopath import (
    WeightScheme,
    chebyshev_scheme,
    formal_h,
    gamma_via_covers,
    mu_matrix,
    unitary_family,
)
from .realize import extend_gamma, gamma_extension_bound
from .vectors import (
    CountVector,
    dehn_sommerville_check,
    f_to_h,
    gamma_to_h,
    gamma_via_chebyshev,
    h_half_to_gamma,
    h_to_f,
    h_to_g,
)

__version__ = "0.1.0"

__all__ = [
    "SimplicialComplex",
    "check_link_condition",
    "contract_edge",
    "cross_polytope_boundary",
    "cycle",
    "from_facets",
    "link",
    "simplex_boundary",
    "stellar_subdivide_edge",
    "tchebyshev_subdivision",
    "MacaulayRep",
    "check_cm_h",
    "check_f_vector",
    "check_sphere_g",
    "macaulay_rep",
    "pseudopower",
    "pseudopower_bounds",
    "WeightScheme",
    "chebyshev_scheme",
    "formal_h",
    "gamma_via_covers",
    "mu_matrix",
    "unitary_family",
    "extend_gamma",
    "gamma_extension_bound",
    "CountVector",
    "dehn_sommerville_check",
    "f_to_h",
    "gamma_to_h",
    "gamma_via_chebyshev",
    "h_half_to_gamma",
    "h_to_f",
    "h_to_g",
    "__version__",
]
