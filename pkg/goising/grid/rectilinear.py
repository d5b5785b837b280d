import numpy as np


def build_board_edges(size):
    """
    Build list of pairs of orthogonally adjacent points on a square Go board

    Points are numbered 0, ..., N-1 with `N = size * size`.  The point in
    column `col` and row `row` has linear index `col * size + row`, i.e. the
    board is stored with the column as the first dimension.

    Parameters
    ----------
    size : int
        Number of lines on each side of the board.

    Returns
    -------
    edges : tuple of length 2
        Each element is an array of int of length E, the number of pairs of
        orthogonally adjacent points.  If `edges = (a, b)`, the points whose
        linear indices are `a[i]` and `b[i]` are adjacent.
    """

    ni = nj = size
    N = ni * nj

    # Edges between successive columns, then between successive rows.
    # The board edge is never periodic.
    Ei = (ni - 1) * nj
    Ej = ni * (nj - 1)
    a, b = (np.empty(Ei + Ej, dtype=np.int64) for x in (0, 1))

    idx = np.arange(N).reshape((ni, nj))

    a[:Ei] = idx[1:, :].reshape(-1)
    b[:Ei] = idx[:-1, :].reshape(-1)

    a[Ei:] = idx[:, 1:].reshape(-1)
    b[Ei:] = idx[:, :-1].reshape(-1)

    return a, b


def build_diagonal_edges(size):
    """
    Build list of pairs of diagonally adjacent points on a square Go board

    Same numbering and return value as `build_board_edges`, but `a[i]` and
    `b[i]` touch at a corner rather than along a line.
    """
    idx = np.arange(size * size).reshape((size, size))
    a = np.concatenate((idx[1:, 1:].reshape(-1), idx[1:, :-1].reshape(-1)))
    b = np.concatenate((idx[:-1, :-1].reshape(-1), idx[:-1, 1:].reshape(-1)))
    return a.astype(np.int64), b.astype(np.int64)
