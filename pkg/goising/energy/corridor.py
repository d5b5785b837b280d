import numpy as np
import numba as nb


@nb.njit
def distance_maps(size, cidx, K):
    """
    Manhattan distance from every chain to every point

    Parameters
    ----------
    size : int
        Board size.

    cidx : ndarray of int
        Chain index, 0 to K-1, of each point in linear order; -1 where empty.

    K : int
        Number of chains.

    Returns
    -------
    D : ndarray of int
        `D[k, p]` is the smallest Manhattan distance from a stone of chain
        `k` to point `p`.  Obstacles are ignored.
    """
    N = size * size
    D = np.full((K, N), 4 * size, dtype=np.int64)
    for s in range(N):
        k = cidx[s]
        if k < 0:
            continue
        sc, sr = s // size, s % size
        for p in range(N):
            d = abs(p // size - sc) + abs(p % size - sr)
            if d < D[k, p]:
                D[k, p] = d
    return D


@nb.njit
def pair_distances(D, cidx):
    """`dmin[a, b]`: smallest Manhattan distance between chains a and b."""
    K = D.shape[0]
    dmin = np.full((K, K), np.iinfo(np.int64).max, dtype=np.int64)
    for s in range(len(cidx)):
        b = cidx[s]
        if b < 0:
            continue
        for a in range(K):
            if D[a, s] < dmin[a, b]:
                dmin[a, b] = D[a, s]
    return dmin


@nb.njit
def corridor_mask(Da, Db, d, cidx, a, b):
    """
    Points on shortest rectilinear paths between chains a and b

    `mask[p]` is True when `Da[p] + Db[p] == d` and `p` is not a stone of
    `a` or `b`.
    """
    N = len(cidx)
    mask = np.zeros(N, dtype=np.bool_)
    for p in range(N):
        if Da[p] + Db[p] == d and cidx[p] != a and cidx[p] != b:
            mask[p] = True
    return mask


@nb.njit
def pair_weight(Da, Db, d, cidx, a, b, colors, weights, r_sl, stamp, tag):
    """
    Interaction coefficient of chains a and b

    The sum runs over the corridor points from the point of view of `a`,
    then of `b`, and the two are averaged.  An empty point adds `r_sl`; a
    chain met in the corridor adds `weights[s]` when it has the colour of
    the viewing chain and subtracts it otherwise.  Each chain is counted
    once, however many of its stones lie in the corridor.

    `stamp` is scratch space of length K, and `tag` a value not yet stored
    in it.
    """
    n_empty = 0
    wa = 0.0
    wb = 0.0
    for p in range(len(cidx)):
        if Da[p] + Db[p] != d:
            continue
        s = cidx[p]
        if s < 0:
            n_empty += 1
        elif s != a and s != b and stamp[s] != tag:
            stamp[s] = tag
            wa += weights[s] if colors[s] == colors[a] else -weights[s]
            wb += weights[s] if colors[s] == colors[b] else -weights[s]
    wa += r_sl * n_empty
    wb += r_sl * n_empty
    return 0.5 * (wa + wb)


@nb.njit
def pair_weights(D, dmin, cidx, colors, weights, r_sl, d_max):
    """
    Interaction coefficients of all pairs of chains within `d_max`

    Returns
    -------
    ia, ib : ndarray of int
        Chain indices of each pair, `ia < ib`.

    w : ndarray of float
        Interaction coefficient of each pair.
    """
    K = D.shape[0]
    ia = np.empty(K * (K - 1) // 2, dtype=np.int64)
    ib = np.empty_like(ia)
    w = np.empty(len(ia), dtype=np.float64)
    stamp = np.full(K, -1, dtype=np.int64)
    e = 0
    for a in range(K):
        for b in range(a + 1, K):
            d = dmin[a, b]
            if d > d_max:
                continue
            ia[e] = a
            ib[e] = b
            w[e] = pair_weight(
                D[a], D[b], d, cidx, a, b, colors, weights, r_sl, stamp, e
            )
            e += 1
    return ia[:e], ib[:e], w[:e]
