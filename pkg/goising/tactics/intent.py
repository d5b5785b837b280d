import numpy as np

from ..board import Color, apply_move
from .kinds import TacticKind


def _near(grid, col, row, radius, color):
    window = grid[
        max(col - radius, 0) : col + radius + 1,
        max(row - radius, 0) : row + radius + 1,
    ]
    return bool(np.any(window == int(color)))


def classify_move(before, move, invasion_radius=2, reach_radius=4):
    """
    Classify the intent of a move

    Parameters
    ----------
    before : BoardState
        Position before the move.

    move : Move
        A legal move on `before`.

    invasion_radius : int, Default 2
        Chebyshev radius of the neighbourhood that must hold no ally stone
        for an invasion, and that must hold an adversary stone for a
        reduction.

    reach_radius : int, Default 4
        Chebyshev radius within which an adversary stone must lie for an
        invasion.

    Returns
    -------
    kind : TacticKind
        `CONNECTION` if the stone joins 2 or more ally chains, else
        `INVASION`, `REDUCTION` or `NONE` by the radius rules.  A pass is
        `NONE`.

    Raises
    ------
    IllegalMove
        If `move` cannot be played on `before`.
    """
    if move.is_pass:
        return TacticKind.NONE
    apply_move(before, move)
    return _classify(before, move, invasion_radius, reach_radius)


def _classify(before, move, invasion_radius=2, reach_radius=4):
    # `move` is known to be legal on `before`
    color = Color(move.color)
    col, row = move.point
    grid = before.grid
    size = before.size

    allies = set()
    for c, r in ((col - 1, row), (col + 1, row), (col, row - 1), (col, row + 1)):
        if 0 <= c < size and 0 <= r < size and grid[c, r] == int(color):
            allies.add(int(before.labels[c, r]))
    if len(allies) >= 2:
        return TacticKind.CONNECTION

    adversary = color.opponent
    if not _near(grid, col, row, invasion_radius, color) and _near(
        grid, col, row, reach_radius, adversary
    ):
        return TacticKind.INVASION
    if _near(grid, col, row, invasion_radius, adversary):
        return TacticKind.REDUCTION
    return TacticKind.NONE
