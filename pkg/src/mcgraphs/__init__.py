"""Multiplicative circulant graphs MC(2^h) and MC(3^h): distances, spectra, forwarding indices."""

from .circulant import CirculantGraph, build_mc, edge_count, neighbors
from .closed_forms import (
    ClosedFormReport, closed_form_report, diam_closed, diam_grc, errata_report, mu_closed,
    mu_old_definition, oeis_a045883, oeis_a212697, pi_bounds, rho_closed, rho_recursion_step,
    xi_closed,
)
from .distance import (
    BfsTree, DistanceRow, bfs_distances, diameter_of, distance_matrix, extend_row_base2,
    extend_row_base3, mirror_symmetry, recursive_row, thresholds_base2,
)
from .errors import ConsistencyError, DisconnectedGraphError, DomainError, RoutingError, SizeLimitError
from .routing import (
    Graph, LoadProfile, Routing, edge_loads, figure3_fixture, loads, translation_invariant_loads,
    translation_invariant_routing, validate_routing, vertex_loads,
)
from .spectral import Spectrum, circulant_spectrum, spectral_radius_check

__version__ = "0.1.0"
