import numpy as np
import numba as nb

# Status codes returned by `play_stone`
PLAYED = 0
OCCUPIED = 1
SUICIDE = 2


@nb.njit
def bfs_chain(indptr, indices, root, board):
    """
    Find the chain containing 1 reference point, and its liberties, using
    Breadth-first Search

    Parameters
    ----------
    indptr, indices : ndarray of int

        Together, these specify the connectivity of the board.  Point `m` is
        orthogonally adjacent to the points `indices[indptr[m] : indptr[m+1]]`.
        These are the `indptr` and `indices` attributes of the board graph
        in csr_matrix format, as returned by `grid.board_graph`.

    root : int

        Linear index of the point where the BFS begins.

    board : ndarray of int8

        1D array of stone colours: -1 for black, +1 for white, 0 for empty.

    Returns
    -------
    qu : ndarray of int

        The BFS search queue, i.e. the linear indices of the stones in the
        chain containing `root`, in the order that the BFS discovered them.
        If `root` is empty, `qu` is an empty array.

    libs : ndarray of int

        Linear indices of the distinct empty points orthogonally adjacent to
        the chain, in the order that the BFS discovered them.
    """

    N = len(board)
    qu = np.empty(N, dtype=np.int64)
    libs = np.empty(N, dtype=np.int64)
    seen = np.zeros(N, dtype=np.bool_)

    qt = -1  # Queue Tail
    qh = -1  # Queue Head
    nl = 0  # Number of liberties found

    color = board[root]
    if color != 0:
        qt += 1  # Add root to queue
        qu[qt] = root
        seen[root] = True

        while qt > qh:
            qh += 1  # advance head of the queue
            m = qu[qh]  # me node; pop from head of queue

            for n in indices[indptr[m] : indptr[m + 1]]:
                if not seen[n]:
                    if board[n] == color:
                        qt += 1
                        qu[qt] = n
                        seen[n] = True
                    elif board[n] == 0:
                        libs[nl] = n
                        nl += 1
                        seen[n] = True

    return qu[0 : qt + 1], libs[0:nl]


@nb.njit
def label_chains(indptr, indices, board):
    """
    Label every stone with the id of its chain

    A chain's id is the smallest linear index among its stones.  Empty points
    are labelled -1.
    """
    N = len(board)
    labels = np.full(N, -1, dtype=np.int64)
    for root in range(N):
        if board[root] != 0 and labels[root] < 0:
            qu, _ = bfs_chain(indptr, indices, root, board)
            for m in qu:
                labels[m] = root
    return labels


@nb.njit
def chain_liberties(indptr, indices, board, root):
    """Liberties of the chain containing `root`, sorted by linear index."""
    _, libs = bfs_chain(indptr, indices, root, board)
    return np.sort(libs)


@nb.njit
def play_stone(indptr, indices, board, m, color):
    """
    Place a stone and resolve captures

    Parameters
    ----------
    indptr, indices, board :
        As in `bfs_chain`.  `board` is not modified.

    m : int
        Linear index of the point to play.

    color : int
        -1 for black, +1 for white.

    Returns
    -------
    out : ndarray of int8
        The board after the stone is placed and every adversary chain left
        without liberties is removed.  When the move is not played, `out`
        is a copy of `board`.

    ncap : int
        Number of adversary stones removed.

    cap : int
        Linear index of a removed stone, or -1 if none were removed.  When
        `ncap == 1` this is the point of the single captured stone.

    status : int
        `PLAYED`, `OCCUPIED` or `SUICIDE`.
    """
    out = board.copy()
    if out[m] != 0:
        return out, 0, -1, OCCUPIED

    out[m] = color
    ncap = 0
    cap = -1
    for n in indices[indptr[m] : indptr[m + 1]]:
        if out[n] == -color:
            qu, libs = bfs_chain(indptr, indices, n, out)
            if len(libs) == 0:
                for s in qu:
                    out[s] = 0
                ncap += len(qu)
                cap = qu[0]

    _, libs = bfs_chain(indptr, indices, m, out)
    if len(libs) == 0:
        return board.copy(), 0, -1, SUICIDE

    return out, ncap, cap, PLAYED


@nb.njit
def atari_neighbours(indptr, indices, board, root):
    """
    Capturing points next to the chain containing `root`

    Returns the sorted, distinct sole liberties of the adversary chains that
    touch the chain containing `root` and have exactly one liberty.
    """
    N = len(board)
    qu, _ = bfs_chain(indptr, indices, root, board)
    seen = np.zeros(N, dtype=np.bool_)
    pts = np.empty(N, dtype=np.int64)
    npts = 0
    opp = -board[root]
    for m in qu:
        for n in indices[indptr[m] : indptr[m + 1]]:
            if board[n] == opp and not seen[n]:
                oqu, olibs = bfs_chain(indptr, indices, n, board)
                for s in oqu:
                    seen[s] = True
                if len(olibs) == 1:
                    pts[npts] = olibs[0]
                    npts += 1
    return np.unique(pts[0:npts])
