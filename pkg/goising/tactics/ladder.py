"""
Ladder reading.

The defender runs on its sole liberty and the attacker answers with the
atari that leaves the defender the fewest liberties, looking one extension
ahead.  The reading works on private copies of the board, so a
`BoardState` is never modified.
"""

from ..board import UnknownChain
from ..bfs import PLAYED, atari_neighbours, chain_liberties, play_stone
from ..grid import board_graph
from .kinds import LadderStatus

CAPTURED = LadderStatus.CAPTURED
ESCAPES = LadderStatus.ESCAPES
UNRESOLVED = LadderStatus.UNRESOLVED


def _combine(results):
    # The attacker picks its best line
    if CAPTURED in results:
        return CAPTURED
    if UNRESOLVED in results:
        return UNRESOLVED
    return ESCAPES


class _Reader:
    def __init__(self, size, root):
        self.indptr, self.indices = board_graph(size)
        self.root = root
        self.memo = dict()

    def libs(self, board):
        return chain_liberties(self.indptr, self.indices, board, self.root)

    def play(self, board, m, color):
        out, _, _, status = play_stone(self.indptr, self.indices, board, m, color)
        return out if status == PLAYED else None

    def run(self, board, depth):
        """Read from `board`, defender to move and in atari."""
        key = (board.tobytes(), depth)
        if key not in self.memo:
            self.memo[key] = self._run(board, depth)
        return self.memo[key]

    def _run(self, board, depth):
        defender = int(board[self.root])
        attacker = -defender

        libs = self.libs(board)
        if len(libs) == 0:
            return CAPTURED
        if len(libs) >= 2:
            return ESCAPES
        if len(atari_neighbours(self.indptr, self.indices, board, self.root)):
            return ESCAPES
        if depth == 0:
            return UNRESOLVED

        board = self.play(board, libs[0], defender)
        depth -= 1
        if board is None:
            # Extending is suicide; the attacker takes the chain next
            return CAPTURED if depth > 0 else UNRESOLVED

        libs = self.libs(board)
        if len(libs) >= 3:
            return ESCAPES
        if len(libs) <= 1:
            return CAPTURED if depth > 0 else UNRESOLVED

        # Attacker: atari from either side, preferring the one that leaves
        # the fewest liberties after the defender's next extension.
        # Equally good replies are all read.
        options = []
        for m in libs:
            after = self.play(board, m, attacker)
            if after is None:
                continue
            rem = self.libs(after)
            ext = self.play(after, rem[0], defender) if len(rem) == 1 else None
            ahead = len(self.libs(ext)) if ext is not None else 0
            options.append(((len(rem), ahead), after))
        if not options:
            return ESCAPES
        if depth == 0:
            return UNRESOLVED

        best = min(key for key, _ in options)
        return _combine(
            [self.run(after, depth - 1) for key, after in options if key == best]
        )


def ladder_status(state, target, max_depth=64):
    """
    Read out a ladder against a chain

    Parameters
    ----------
    state : BoardState
        Position with the defender to move.

    target : int
        Chain id of the defending chain.

    max_depth : int, Default 64
        Ply budget for the reading.

    Returns
    -------
    status : LadderStatus
        `CAPTURED` if the reading reaches a capture within `max_depth` plies,
        `UNRESOLVED` if the budget runs out first, else `ESCAPES`.  A chain
        with 2 liberties is read after each atari the attacker could play;
        a chain with more liberties escapes.

    Raises
    ------
    UnknownChain
        If `target` is not a chain id of `state`.

    Notes
    -----
    A larger `max_depth` can only turn `UNRESOLVED` into another status.
    """
    chain = state.chains.get(target)
    if chain is None:
        raise UnknownChain(f"chain {target} is not on this board")

    board = state.flat
    reader = _Reader(state.size, target)
    nlibs = len(chain.liberty_points)

    if nlibs == 1:
        return reader.run(board, max_depth)

    if nlibs == 2:
        attacker = -int(chain.color)
        results = []
        for m in reader.libs(board):
            after = reader.play(board, m, attacker)
            if after is None:
                continue
            if max_depth == 0:
                results.append(UNRESOLVED)
            else:
                results.append(reader.run(after, max_depth - 1))
        return _combine(results)

    return ESCAPES
