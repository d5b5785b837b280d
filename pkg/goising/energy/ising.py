"""
Ising energy of a board position.

Each chain `i` is a spin with value `x_i`, the signed chain size plus an
eye bonus.  Pairs of chains interact with a coefficient `w_ij` summed over
the points lying on shortest rectilinear paths between them, and each chain
feels an external field `h_i`, its liberty count by default:

    H = - sum_{i<j} w_ij x_i x_j - mu sum_i h_i x_i
"""

from dataclasses import dataclass
from typing import NamedTuple

import numpy as np
from scipy.sparse import csr_matrix

from ..board import Point, UnknownChain
from ..lib import to_colrow
from ..tactics import PatternAnnotation, annotate
from .corridor import (
    corridor_mask,
    distance_maps,
    pair_distances,
    pair_weight,
    pair_weights,
)
from .params import _process_params

FIELDS = ("liberties", "homogeneous")


class StoneValue(NamedTuple):
    chain: int
    x: float


@dataclass(frozen=True)
class InteractionSet:
    """
    Interaction coefficients of chain pairs within the corridor cap

    Attributes
    ----------
    chain_ids : tuple of int
        Every chain of the position, in increasing id order.

    pairs : dict
        `(a, b) -> w` with chain ids `a < b`.  Pairs further apart than
        `d_max` are absent, and interact with coefficient 0.
    """

    chain_ids: tuple
    pairs: dict

    def get(self, a, b):
        if a > b:
            a, b = b, a
        return self.pairs.get((a, b), 0.0)

    def __len__(self):
        return len(self.pairs)

    def to_sparse(self):
        """Symmetric `csr_matrix` of `w` over chain indices (`chain_ids` order)."""
        K = len(self.chain_ids)
        pos = {cid: i for i, cid in enumerate(self.chain_ids)}
        i = np.array([pos[a] for a, _ in self.pairs], dtype=np.int64)
        j = np.array([pos[b] for _, b in self.pairs], dtype=np.int64)
        w = np.fromiter(self.pairs.values(), dtype=np.float64, count=len(i))
        return csr_matrix(
            (np.concatenate((w, w)), (np.concatenate((i, j)), np.concatenate((j, i)))),
            shape=(K, K),
        )


@dataclass(frozen=True)
class EnergyReport:
    """
    Energy of one position, with every intermediate

    Attributes
    ----------
    H : float
        Total energy, `pair_energy + field_energy`.

    S_black, S_white : float
        Strength of each colour; see `color_strength`.

    pair_energy : float
        `- sum_{i<j} w_ij x_i x_j`.

    field_energy : float
        `- mu sum_i h_i x_i`.

    chain_ids : tuple of int
        Chain ids, in increasing order.

    colors : ndarray of int
        Colour sign of each chain: -1 black, +1 white.

    x : ndarray of float
        Stone value of each chain.

    h : ndarray of float
        External field on each chain.

    interactions : InteractionSet

    mu : float
        Field magnitude used.
    """

    H: float
    S_black: float
    S_white: float
    pair_energy: float
    field_energy: float
    chain_ids: tuple
    colors: np.ndarray
    x: np.ndarray
    h: np.ndarray
    interactions: InteractionSet
    mu: float

    def stone_values(self):
        return [StoneValue(c, float(x)) for c, x in zip(self.chain_ids, self.x)]


def stone_value(chain, k, params=None):
    """
    Value of a chain as a spin

    `x = c (n + r_eye ** k)` when the chain has `k >= 1` eyes, else
    `x = c n`, with `c` the colour sign and `n` the number of stones.
    """
    params = _process_params(params)
    if k < 0:
        raise ValueError(f"Eye count must be >= 0; got {k}")
    n = chain.n + (params.r_eye**k if k >= 1 else 0)
    return StoneValue(chain.id, float(int(chain.color) * n))


class _ChainTable:
    """Per-chain arrays of a position, indexed 0 to K-1 in chain id order."""

    def __init__(self, state, annotations, params):
        chains = state.chains
        self.ids = tuple(chains)
        K = len(self.ids)
        self.colors = np.array(
            [int(ch.color) for ch in chains.values()], dtype=np.int64
        )
        self.x = np.array(
            [
                stone_value(ch, annotations.eye_count(cid), params).x
                for cid, ch in chains.items()
            ],
            dtype=np.float64,
        )
        self.weights = np.array(
            [
                params.coefficient(annotations.kind(cid)) * abs(x)
                for cid, x in zip(self.ids, self.x)
            ],
            dtype=np.float64,
        )
        self.nlibs = np.array(
            [len(ch.liberty_points) for ch in chains.values()], dtype=np.float64
        )

        lab = state.labels.reshape(-1)
        self.cidx = np.full(lab.shape, -1, dtype=np.int64)
        occupied = lab >= 0
        self.cidx[occupied] = np.searchsorted(
            np.array(self.ids, dtype=np.int64), lab[occupied]
        )
        self.D = distance_maps(state.size, self.cidx, K)
        self.dmin = pair_distances(self.D, self.cidx)

    def index(self, cid):
        try:
            return self.ids.index(cid)
        except ValueError:
            raise UnknownChain(f"chain {cid} is not on this board") from None


def _pair_indices(table, a, b):
    if a == b:
        raise ValueError(f"A chain does not interact with itself; got {a} twice")
    return table.index(a), table.index(b)


def corridor(state, a, b, d_max=6):
    """
    Points lying on shortest rectilinear paths between two chains

    Parameters
    ----------
    state : BoardState

    a, b : int
        Chain ids.

    d_max : int, Default 6
        Corridor cap.

    Returns
    -------
    pts : frozenset of Point
        With `d` the smallest Manhattan distance between a stone of `a` and a
        stone of `b`, the points `p`, other than stones of `a` or `b`, with
        `dist(a, p) + dist(p, b) == d`.  Empty when `d > d_max`.

    Raises
    ------
    UnknownChain
        If `a` or `b` is not a chain id of `state`.
    """
    table = _ChainTable(state, PatternAnnotation.empty(), _process_params(None))
    ia, ib = _pair_indices(table, a, b)
    d = table.dmin[ia, ib]
    if d > d_max:
        return frozenset()
    mask = corridor_mask(table.D[ia], table.D[ib], d, table.cidx, ia, ib)
    pts = np.flatnonzero(mask)
    return frozenset(Point(*to_colrow(int(p), state.size)) for p in pts)


def interaction_coefficient(state, a, b, annotations=None, params=None):
    """
    Interaction coefficient `w_ab` of two chains

    Each empty point of the corridor adds `r_sl`.  Each chain `s` met in the
    corridor is counted once and adds `r_t |x_s|` from the point of view of
    a chain of its colour, or subtracts it from the point of view of an
    adversary, where `t` is the strongest pattern of `s`.  The views of `a`
    and `b` are averaged, so for chains of opposite colours only the empty
    points remain.

    `annotations` defaults to `annotate(state)`.
    """
    params = _process_params(params)
    if annotations is None:
        annotations = annotate(state)
    table = _ChainTable(state, annotations, params)
    ia, ib = _pair_indices(table, a, b)
    d = table.dmin[ia, ib]
    if d > params.d_max:
        return 0.0
    stamp = np.full(len(table.ids), -1, dtype=np.int64)
    return float(
        pair_weight(
            table.D[ia],
            table.D[ib],
            d,
            table.cidx,
            ia,
            ib,
            table.colors,
            table.weights,
            params.r_sl,
            stamp,
            0,
        )
    )


def _interactions(table, params):
    ia, ib, w = pair_weights(
        table.D,
        table.dmin,
        table.cidx,
        table.colors,
        table.weights,
        params.r_sl,
        params.d_max,
    )
    return ia, ib, w


def interaction_set(state, annotations=None, params=None):
    """`InteractionSet` of every chain pair of `state` within `d_max`."""
    params = _process_params(params)
    if annotations is None:
        annotations = annotate(state)
    table = _ChainTable(state, annotations, params)
    ia, ib, w = _interactions(table, params)
    ids = table.ids
    return InteractionSet(
        ids, {(ids[i], ids[j]): float(v) for i, j, v in zip(ia, ib, w)}
    )


def _strengths(colors, x, h, mu, ia, ib, w):
    S = {-1: 0.0, 1: 0.0}
    for c in (-1, 1):
        mine = colors == c
        S[c] += mu * float(np.sum(h[mine] * np.abs(x[mine])))
    for i, j, v in zip(ia, ib, w):
        e = v * x[i] * x[j]
        if colors[i] == colors[j]:
            S[int(colors[i])] += e
        else:
            S[-1] += 0.5 * e
            S[1] += 0.5 * e
    return S[-1], S[1]


def hamiltonian(state, params=None, annotations=None, field="liberties"):
    """
    Energy of a position

    Parameters
    ----------
    state : BoardState

    params : ParameterSet or dict or str, Default None
        Model coefficients, or a path to a key=value file.  None uses the
        defaults.

    annotations : PatternAnnotation, Default None
        Tactic patterns of `state`.  None runs `annotate(state)`.

    field : str, Default "liberties"
        `"liberties"` sets `h_i` to the liberty count of chain `i`;
        `"homogeneous"` sets every `h_i` to 1.

    Returns
    -------
    report : EnergyReport
    """
    params = _process_params(params)
    if field not in FIELDS:
        raise ValueError(f"field must be one of {FIELDS}; got {field!r}")
    if annotations is None:
        annotations = annotate(state)

    table = _ChainTable(state, annotations, params)
    ia, ib, w = _interactions(table, params)
    x = table.x
    h = table.nlibs if field == "liberties" else np.ones_like(table.nlibs)

    pair_energy = 0.0 - float(np.sum(w * x[ia] * x[ib]))
    field_energy = 0.0 - params.mu * float(np.sum(h * x))
    S_black, S_white = _strengths(table.colors, x, h, params.mu, ia, ib, w)

    ids = table.ids
    interactions = InteractionSet(
        ids, {(ids[i], ids[j]): float(v) for i, j, v in zip(ia, ib, w)}
    )
    return EnergyReport(
        pair_energy + field_energy,
        S_black,
        S_white,
        pair_energy,
        field_energy,
        ids,
        table.colors,
        x,
        h,
        interactions,
        params.mu,
    )


def color_strength(report):
    """
    Strength of each colour

    `S_c = mu sum_{i of c} h_i |x_i| + sum_{pairs within c} w_ij x_i x_j
    + 1/2 sum_{pairs across colours} w_ij x_i x_j`

    Returns
    -------
    S_black, S_white : float
    """
    pos = {cid: i for i, cid in enumerate(report.chain_ids)}
    pairs = report.interactions.pairs
    ia = np.array([pos[a] for a, _ in pairs], dtype=np.int64)
    ib = np.array([pos[b] for _, b in pairs], dtype=np.int64)
    w = np.fromiter(pairs.values(), dtype=np.float64, count=len(ia))
    return _strengths(report.colors, report.x, report.h, report.mu, ia, ib, w)
