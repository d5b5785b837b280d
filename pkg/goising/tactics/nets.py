import numpy as np

from ..bfs import PLAYED, atari_neighbours, chain_liberties, play_stone
from ..board import UnknownChain
from ..grid import board_graph
from .kinds import LadderStatus
from .ladder import ladder_status


class _NetSearch:
    """
    Bounded capture search against one chain, defender to move

    The defender may extend on any liberty or capture an adjacent chain in
    atari, and passes when it has no legal move.  The attacker plays on the
    chain's liberties.  The defender escapes as soon as the chain has more
    than `ceiling` liberties.
    """

    def __init__(self, size, root, ceiling):
        self.indptr, self.indices = board_graph(size)
        self.root = root
        self.ceiling = ceiling

    def libs(self, board):
        return chain_liberties(self.indptr, self.indices, board, self.root)

    def play(self, board, m, color):
        out, _, _, status = play_stone(self.indptr, self.indices, board, m, color)
        return out if status == PLAYED else None

    def defender_fails(self, board, depth):
        if depth == 0:
            return False
        defender = int(board[self.root])
        cands = np.union1d(
            self.libs(board),
            atari_neighbours(self.indptr, self.indices, board, self.root),
        )
        moved = False
        for m in cands:
            after = self.play(board, m, defender)
            if after is None:
                continue
            moved = True
            if len(self.libs(after)) > self.ceiling:
                return False
            if not self.attacker_captures(after, depth - 1):
                return False
        if not moved:
            return self.attacker_captures(board, depth - 1)
        return True

    def attacker_captures(self, board, depth):
        if depth == 0:
            return False
        attacker = -int(board[self.root])
        for m in self.libs(board):
            after = self.play(board, m, attacker)
            if after is None:
                continue
            if after[self.root] == 0:
                return True
            if self.defender_fails(after, depth - 1):
                return True
        return False


def is_netted(state, target, max_ply=6, lib_limit=3):
    """
    Whether chain `target` is caught in a net

    True when a search of `max_ply` plies, with the defender moving first,
    proves that the chain is captured before it ever has more liberties
    than it has now, or more than `lib_limit`.
    """
    if target not in state.chains:
        raise UnknownChain(f"no chain with id {target}")
    nlibs = len(state.chains[target].liberty_points)
    search = _NetSearch(state.size, target, min(nlibs, lib_limit))
    return search.defender_fails(state.flat, max_ply)


def detect_nets(state, max_ply=6, lib_limit=3, ladders=None, max_depth=64):
    """
    Find chains caught in nets

    Parameters
    ----------
    state : BoardState

    max_ply : int, Default 6
        Ply budget for each capture search.

    lib_limit : int, Default 3
        Only chains with at most this many liberties are searched.  A chain
        escapes once it has more liberties than it started with.

    ladders : dict, Default None
        Chain id to `LadderStatus`, when already read.  Chains with at most
        2 liberties that are missing are read with `ladder_status` and
        `max_depth`.

    Returns
    -------
    nets : set
        `(attacker Color, trapped chain id)` pairs.  Chains captured by a
        ladder are left out: the ladder takes precedence.
    """
    ladders = dict() if ladders is None else ladders
    nets = set()
    for cid, chain in state.chains.items():
        nlibs = len(chain.liberty_points)
        if nlibs == 0 or nlibs > lib_limit:
            continue
        if nlibs <= 2:
            status = ladders.get(cid)
            if status is None:
                status = ladder_status(state, cid, max_depth)
            if status is LadderStatus.CAPTURED:
                continue
        if is_netted(state, cid, max_ply, lib_limit):
            nets.add((chain.color.opponent, cid))
    return nets
