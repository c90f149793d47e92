"""Well-edge-dominated graphs: exact edge domination and matching invariants,
the G* blow-up families, and bounded census checks of their characterisations."""

from __future__ import annotations

from .canon import canonical_code, is_isomorphic
from .census import (
    CensusFilter,
    InvariantReport,
    TheoremVerdict,
    enumerate_connected,
    invariant_report,
    verify,
)
from .edge_domination import (
    EdsCertificate,
    eds_certificate,
    enumerate_minimal_eds,
    gamma_prime,
    is_edge_dominating,
    is_minimal_eds,
    is_wed,
    private_edge_neighbors,
    upper_gamma_prime,
)
from .families import FamilySpec, build, parameter_grid
from .graph import (
    INFINITE,
    Graph,
    GraphError,
    blowup,
    cartesian_product,
    from_edge_list,
    girth,
    is_bipartite,
    is_connected,
    is_split,
)
from .graph6 import decode as graph6_decode
from .graph6 import encode as graph6_encode
from .matching import (
    MatchingProfile,
    is_equimatchable,
    is_randomly_matchable,
    matching_profile,
    maximum_matching,
    minimum_maximal_matching,
)

__version__ = "0.1.0"

__all__ = [
    "CensusFilter",
    "EdsCertificate",
    "FamilySpec",
    "Graph",
    "GraphError",
    "INFINITE",
    "InvariantReport",
    "MatchingProfile",
    "TheoremVerdict",
    "blowup",
    "build",
    "canonical_code",
    "cartesian_product",
    "eds_certificate",
    "enumerate_connected",
    "enumerate_minimal_eds",
    "from_edge_list",
    "gamma_prime",
    "girth",
    "graph6_decode",
    "graph6_encode",
    "invariant_report",
    "is_bipartite",
    "is_connected",
    "is_edge_dominating",
    "is_equimatchable",
    "is_isomorphic",
    "is_minimal_eds",
    "is_randomly_matchable",
    "is_split",
    "is_wed",
    "matching_profile",
    "maximum_matching",
    "minimum_maximal_matching",
    "parameter_grid",
    "private_edge_neighbors",
    "upper_gamma_prime",
    "verify",
]
