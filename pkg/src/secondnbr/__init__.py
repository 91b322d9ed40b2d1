"""Tools for checking second-neighbourhood properties of oriented graphs."""

__version__ = "0.1.0"

from ._backend import ENV_FLAG, backend_name
from .constructions import (PeelingState, PeelStep, VertexOrdering, blow_up, find_good_ordering,
                            find_hall_violator, find_halfback_ordering, lift_seymour,
                            orient_without_seymour, peel, seymour_vertices_of_core)
from .gnp import (ClaimParameters, ClaimVerdict, MonteCarloResult, SamplerConfig, SuiteConfig,
                  check_common_neighbors_bound, check_cross_density_band, check_degree_band,
                  check_degree_upper, check_halfback_extension, check_internal_density,
                  chernoff_two_sided, chernoff_upper, codegree_matrix, degree_preset,
                  find_induced_copy, iter_induced_copies, monte_carlo_sets, parse_suite_config,
                  random_orientation, run_claim_suite, sample_disjoint_sets, sample_gnp)
from .graph import (Digraph, Graph, VertexSet, directed_edge_count, directed_two_path_count,
                    in_neighborhood, internal_edge_count, is_seymour_vertex, is_sullivan_vertex,
                    min_out_degree, out_neighborhood, qualifying_vertices, second_out_neighborhood,
                    set_out_neighborhood, seymour_vertices, strongly_connected, sullivan_vertices,
                    undirected_edge_count)
from .io import (FormatError, format_digraph, format_graph, parse_digraph, parse_graph,
                 read_digraph, read_graph, write_digraph, write_graph)
from .rng import stream
from .search import (PartialOrientation, SearchConfig, SearchOutcome, adversarial_search,
                     enumerate_orientations, exhaustive_without_count, out_degree_ordering,
                     prefix_backedge_profile, search_edge_order)
