from functools import lru_cache

import numpy as np
from scipy.sparse import coo_matrix, csr_matrix

from .rectilinear import build_board_edges, build_diagonal_edges


def edges_to_graph(edges, N=None, weights=None):
    """
    Convert list of pairs of adjacent nodes into a sparse matrix graph representation

    Parameters
    ----------
    edges : tuple
        If `edges = (a, b)`, the nodes whose linear indices are `a[i]` and
        `b[i]` are adjacent.

    N : int, Default None
        Number of nodes in the graph.
        If None, the number of nodes is assumed to be the largest value in
        `edges`, plus one since elements in `edges` are zero-indexed.

    weights : array, Default None
        Weights of the edges in the graph.
        If None, a weight of 1 is given for each edge.

    Returns
    -------
    G : csr_matrix
        Symmetric, sparse, `N` by `N` matrix representation of the undirected
        graph.  `G[m,n] = G[n,m] = weights[i]` where `i` is such that
        `edges[0][i] = m` and `edges[1][i] = n`.
    """
    a, b = edges
    E = len(a)
    if N is None:
        N = np.max((np.max(a), np.max(b))) + 1
    if weights is None:
        weights = np.ones(E, dtype=int)
    G = coo_matrix((weights, (a, b)), shape=(N, N))
    G = csr_matrix(G + G.T)
    G.sort_indices()
    return G


def _frozen(G):
    indptr = G.indptr.astype(np.int64)
    indices = G.indices.astype(np.int64)
    indptr.setflags(write=False)
    indices.setflags(write=False)
    return indptr, indices


@lru_cache(maxsize=32)
def board_graph(size):
    """
    Orthogonal adjacency of a `size` by `size` board in CSR form

    Returns
    -------
    indptr, indices : ndarray of int
        Point `m` is orthogonally adjacent to the points
        `indices[indptr[m] : indptr[m+1]]`.  The arrays are cached per board
        size and are read-only.
    """
    return _frozen(edges_to_graph(build_board_edges(size), size * size))


@lru_cache(maxsize=32)
def diagonal_graph(size):
    """As `board_graph`, but for diagonal neighbours."""
    return _frozen(edges_to_graph(build_diagonal_edges(size), size * size))


def incidence_matrix(rows, cols, shape):
    """
    Sparse 0/1 incidence matrix with ones at `(rows[i], cols[i])`

    Repeated pairs are counted once.
    """
    M = coo_matrix(
        (np.ones(len(rows), dtype=np.int64), (rows, cols)), shape=shape
    ).tocsr()
    M.data[:] = 1
    return M
