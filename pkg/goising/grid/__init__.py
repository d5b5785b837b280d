from .rectilinear import build_board_edges, build_diagonal_edges
from .graph import edges_to_graph, board_graph, diagonal_graph, incidence_matrix
