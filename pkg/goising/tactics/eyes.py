import numpy as np

from ..grid import board_graph, diagonal_graph


def eye_points(state, atari_guard=False):
    """
    Empty points that are eyes, with the colour that owns them

    An empty point is an eye of colour `c` when all its orthogonal neighbours
    are stones of colour `c` and its diagonal neighbours pass the false-eye
    guard: at least 3 of the 4 diagonals of an interior point are stones of
    colour `c` or empty, and every diagonal of an edge or corner point is a
    stone of colour `c`.

    Parameters
    ----------
    state : BoardState

    atari_guard : bool, Default False
        Also reject points bordered by a chain in atari, which the adversary
        can play into with a capture.

    Returns
    -------
    eyes : dict
        Linear index of the eye point to the owning colour sign (-1 or +1).
    """
    indptr, indices = board_graph(state.size)
    dptr, dind = diagonal_graph(state.size)
    board = state.flat

    eyes = dict()
    for m in np.flatnonzero(board == 0):
        nbrs = board[indices[indptr[m] : indptr[m + 1]]]
        c = nbrs[0]
        if c == 0 or np.any(nbrs != c):
            continue
        diag = board[dind[dptr[m] : dptr[m + 1]]]
        if len(diag) == 4:
            if np.count_nonzero(diag == -c) > 1:
                continue
        elif np.any(diag != c):
            continue
        if atari_guard:
            labels = state.labels.reshape(-1)
            border = {int(labels[n]) for n in indices[indptr[m] : indptr[m + 1]]}
            if any(len(state.chains[cid].liberty_points) < 2 for cid in border):
                continue
        eyes[int(m)] = int(c)
    return eyes


def detect_eyes(state, atari_guard=False):
    """
    Count the eyes of every chain

    Returns
    -------
    k : dict
        Chain id to the number of distinct eye points that the chain borders.
        Every chain on the board is present, chains without eyes with 0.
    """
    indptr, indices = board_graph(state.size)
    labels = state.labels.reshape(-1)
    k = {cid: 0 for cid in state.chains}
    for m in eye_points(state, atari_guard):
        for cid in {int(labels[n]) for n in indices[indptr[m] : indptr[m + 1]]}:
            k[cid] += 1
    return k
