"""
Common Fate Graph of a board position.

Chains are the principal nodes, labelled with their colour and size.  Empty
points that are liberties of at least one chain are the secondary nodes,
one per point.  The chain / liberty incidence is held as a sparse 0/1
matrix whose rows are chains and whose columns are liberty points, so the
number of liberties shared by every pair of chains is the off-diagonal part
of `B @ B.T`.
"""

from dataclasses import dataclass

import numpy as np
from scipy.sparse import csr_matrix, triu

from .board import UnknownChain
from .grid import incidence_matrix


@dataclass(frozen=True)
class CommonFateGraph:
    """
    Attributes
    ----------
    principal_nodes : dict
        Chain id to `(Color, n)`, with `n` the number of stones.

    secondary_nodes : frozenset of Point
        Every empty point adjacent to at least one chain.

    chain_ids : tuple of int
        Chain id of each row of `incidence`.

    liberty_points : tuple of Point
        Point of each column of `incidence`.

    incidence : csr_matrix
        `incidence[i, j] == 1` when the chain `chain_ids[i]` has the liberty
        `liberty_points[j]`.
    """

    principal_nodes: dict
    secondary_nodes: frozenset
    chain_ids: tuple
    liberty_points: tuple
    incidence: csr_matrix

    @property
    def edges(self):
        """Set of `(chain id, Point)` incidence pairs."""
        B = self.incidence.tocoo()
        return frozenset(
            (self.chain_ids[i], self.liberty_points[j])
            for i, j in zip(B.row, B.col)
        )

    def row(self, cid):
        try:
            return self.chain_ids.index(cid)
        except ValueError:
            raise UnknownChain(f"chain {cid} is not in the graph") from None


def build_cfg(state):
    """
    Build the Common Fate Graph of `state`

    Parameters
    ----------
    state : BoardState

    Returns
    -------
    g : CommonFateGraph
        One principal node per chain, one secondary node per liberty point.
    """
    chains = state.chains
    chain_ids = tuple(chains)
    libs = sorted({p for ch in chains.values() for p in ch.liberty_points})
    col_of = {p: j for j, p in enumerate(libs)}

    rows, cols = [], []
    for i, ch in enumerate(chains.values()):
        for p in ch.liberty_points:
            rows.append(i)
            cols.append(col_of[p])

    B = incidence_matrix(
        np.array(rows, dtype=np.int64),
        np.array(cols, dtype=np.int64),
        (len(chain_ids), len(libs)),
    )
    return CommonFateGraph(
        {cid: (ch.color, ch.n) for cid, ch in chains.items()},
        frozenset(libs),
        chain_ids,
        tuple(libs),
        B,
    )


def shared_liberties(g, a, b):
    """Number of secondary nodes incident to both chain `a` and chain `b`."""
    i, j = g.row(a), g.row(b)
    return int(g.incidence[i].multiply(g.incidence[j]).sum())


def cfg_adjacency(g):
    """
    Shared-liberty adjacency between chains

    Returns
    -------
    adj : dict
        `(a, b) -> count` for every pair of chain ids `a < b` sharing at
        least one liberty.
    """
    B = g.incidence
    S = triu(B @ B.T, k=1).tocoo()
    ids = g.chain_ids
    adj = dict()
    for i, j, v in zip(S.row, S.col, S.data):
        if v > 0:
            a, b = sorted((ids[i], ids[j]))
            adj[(a, b)] = int(v)
    return dict(sorted(adj.items()))


def dump_cfg(g):
    """
    Plain-text adjacency listing, one principal node per line

    Each line reads `<id> <B|W> n=<size> libs=<count> shared=<id>:<count>,...`.
    """
    adj = cfg_adjacency(g)
    lines = []
    for i, (cid, (color, n)) in enumerate(g.principal_nodes.items()):
        shared = []
        for (a, b), v in adj.items():
            if a == cid:
                shared.append(f"{b}:{v}")
            elif b == cid:
                shared.append(f"{a}:{v}")
        nlibs = int(g.incidence[i].sum())
        lines.append(
            f"{cid} {color.letter} n={n} libs={nlibs} shared={','.join(shared)}"
        )
    return "\n".join(lines)
