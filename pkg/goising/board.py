"""
Go rules engine on immutable board snapshots.

Stones live on a `size` by `size` int8 array indexed `[col, row]`, holding
-1 for black, +1 for white and 0 for empty, so that a stone's value is the
colour sign used by the energy model.  Every move produces a new
`BoardState`; nothing is mutated in place.
"""

from dataclasses import dataclass, field, replace
from enum import IntEnum
from functools import cached_property
from typing import NamedTuple, Optional

import numpy as np

from .bfs import OCCUPIED, SUICIDE, label_chains, play_stone
from .grid import board_graph
from .lib import (
    _process_size,
    in_bounds,
    to_colrow,
    to_index,
    transform_coords,
    transform_grid,
)

EMPTY = 0


class Color(IntEnum):
    """Stone colour.  The value is the spin sign: black -1, white +1."""

    BLACK = -1
    WHITE = 1

    @property
    def opponent(self):
        return Color(-self.value)

    @property
    def letter(self):
        return "B" if self is Color.BLACK else "W"

    @classmethod
    def from_letter(cls, letter):
        if letter == "B":
            return cls.BLACK
        if letter == "W":
            return cls.WHITE
        raise ValueError(f"Expected 'B' or 'W'; got {letter!r}")


class Point(NamedTuple):
    col: int
    row: int


class Move(NamedTuple):
    """A move by `color`: a stone on `point`, or a pass when `point` is None."""

    color: Color
    point: Optional[Point] = None

    @property
    def is_pass(self):
        return self.point is None

    @classmethod
    def play(cls, color, col, row):
        return cls(Color(color), Point(col, row))

    @classmethod
    def pass_(cls, color):
        return cls(Color(color), None)


class Captures(NamedTuple):
    """Number of adversary stones removed by each colour."""

    black: int = 0
    white: int = 0

    def add(self, color, n):
        if color is Color.BLACK:
            return Captures(self.black + n, self.white)
        return Captures(self.black, self.white + n)


class IllegalMove(ValueError):
    pass


class OccupiedPoint(IllegalMove):
    pass


class SuicideMove(IllegalMove):
    pass


class KoViolation(IllegalMove):
    pass


class OutOfBounds(IllegalMove):
    pass


class StaleChain(ValueError):
    pass


class UnknownChain(ValueError):
    pass


@dataclass(frozen=True)
class Chain:
    """
    A maximal orthogonally connected group of same-colour stones.

    `id` is the smallest linear index (`col * size + row`) among the chain's
    stones, so a chain keeps its id for as long as its first stone does.
    """

    id: int
    color: Color
    points: frozenset
    liberty_points: frozenset

    @property
    def n(self):
        return len(self.points)


@dataclass(frozen=True, eq=False)
class BoardState:
    size: int = 19
    grid: np.ndarray = None
    captures: Captures = Captures()
    ko_point: Optional[Point] = None
    move_number: int = 0
    history: tuple = field(default=())

    def __post_init__(self):
        size = _process_size(self.size)
        if self.grid is None:
            grid = np.zeros((size, size), dtype=np.int8)
        else:
            grid = np.array(self.grid, dtype=np.int8)
            if grid.shape != (size, size):
                raise ValueError(
                    f"grid must have shape {(size, size)}; got {grid.shape}"
                )
            if not np.all(np.abs(grid) <= 1):
                raise ValueError("grid values must be -1, 0 or +1")
        grid.setflags(write=False)
        object.__setattr__(self, "size", size)
        object.__setattr__(self, "grid", grid)
        object.__setattr__(self, "captures", Captures(*self.captures))

    def __eq__(self, other):
        if not isinstance(other, BoardState):
            return NotImplemented
        return (
            self.size == other.size
            and self.move_number == other.move_number
            and self.captures == other.captures
            and self.ko_point == other.ko_point
            and self.history == other.history
            and np.array_equal(self.grid, other.grid)
        )

    def __hash__(self):
        return hash((self.size, self.move_number, self.grid.tobytes()))

    @property
    def flat(self):
        """Read-only 1D view of the grid in linear index order."""
        return self.grid.reshape(-1)

    @cached_property
    def labels(self):
        """Chain id of every point, -1 where empty; same shape as `grid`."""
        indptr, indices = board_graph(self.size)
        lab = label_chains(indptr, indices, self.flat).reshape(self.grid.shape)
        lab.setflags(write=False)
        return lab

    @cached_property
    def chains(self):
        """Dict of chain id to `Chain`, in increasing id order."""
        indptr, indices = board_graph(self.size)
        flat = self.flat
        lab = self.labels.reshape(-1)
        out = dict()
        for cid in np.unique(lab[lab >= 0]):
            stones = np.flatnonzero(lab == cid)
            nbrs = np.unique(
                np.concatenate(
                    [indices[indptr[m] : indptr[m + 1]] for m in stones]
                )
            )
            libs = nbrs[flat[nbrs] == EMPTY]
            out[int(cid)] = Chain(
                int(cid),
                Color(int(flat[cid])),
                frozenset(Point(*to_colrow(m, self.size)) for m in stones),
                frozenset(Point(*to_colrow(m, self.size)) for m in libs),
            )
        return out

    @property
    def n_stones(self):
        return int(np.count_nonzero(self.grid))

    def color_at(self, p):
        v = self.grid[p[0], p[1]]
        return None if v == EMPTY else Color(int(v))


def _check_point(state, p):
    if not in_bounds(p[0], p[1], state.size):
        raise OutOfBounds(f"{tuple(p)} is off the {state.size}x{state.size} board")


def apply_move(state, move):
    """
    Play `move` on `state` and return the resulting snapshot

    Parameters
    ----------
    state : BoardState
        Position before the move.  Whose turn it is is not checked.

    move : Move
        A stone placement or a pass.

    Returns
    -------
    state : BoardState
        Position after the stone is placed and adversary chains without
        liberties are removed.  A pass leaves the stones as they are,
        advances `move_number` and lifts any ko.

    Raises
    ------
    OutOfBounds, OccupiedPoint, SuicideMove, KoViolation

    Notes
    -----
    Simple ko: when a move captures exactly one stone, with a single stone
    that is left with exactly one liberty, the captured point becomes
    `ko_point`.  On the next move, a play on `ko_point` that captures exactly
    one stone is a `KoViolation`.
    """
    color = Color(move.color)
    if move.is_pass:
        return replace(
            state,
            ko_point=None,
            move_number=state.move_number + 1,
            history=state.history + (Move(color, None),),
        )

    p = Point(*move.point)
    _check_point(state, p)
    indptr, indices = board_graph(state.size)
    m = to_index(p.col, p.row, state.size)
    out, ncap, cap, status = play_stone(indptr, indices, state.flat, m, int(color))
    if status == OCCUPIED:
        raise OccupiedPoint(f"{tuple(p)} is already occupied")
    if status == SUICIDE:
        raise SuicideMove(f"{color.name} at {tuple(p)} would have no liberties")
    if ncap == 1 and p == state.ko_point:
        raise KoViolation(f"{color.name} at {tuple(p)} retakes the ko immediately")

    ko_point = None
    if ncap == 1:
        nbrs = indices[indptr[m] : indptr[m + 1]]
        lone = not np.any(out[nbrs] == int(color))
        if lone and np.count_nonzero(out[nbrs] == EMPTY) == 1:
            ko_point = Point(*to_colrow(cap, state.size))

    return BoardState(
        state.size,
        out.reshape(state.grid.shape),
        state.captures.add(color, int(ncap)),
        ko_point,
        state.move_number + 1,
        state.history + (Move(color, p),),
    )


def chain_at(state, p):
    """The chain containing point `p`, or None if `p` is empty."""
    _check_point(state, p)
    cid = state.labels[p[0], p[1]]
    return None if cid < 0 else state.chains[int(cid)]


def liberties(state, chain):
    """Number of distinct empty points orthogonally adjacent to `chain`."""
    if state.chains.get(chain.id) != chain:
        raise StaleChain(f"chain {chain.id} is not on this board")
    return len(chain.liberty_points)


def replay_setup(size, stones):
    """
    Board with setup stones placed, as given by SGF AB / AW properties

    Parameters
    ----------
    size : int
        Board size.

    stones : iterable of (Color, Point)
        Stones to place.  Only occupancy is checked; no captures happen.

    Returns
    -------
    state : BoardState
        With `move_number` 0 and no captures.
    """
    size = _process_size(size)
    grid = np.zeros((size, size), dtype=np.int8)
    for color, p in stones:
        if not in_bounds(p[0], p[1], size):
            raise OutOfBounds(f"{tuple(p)} is off the {size}x{size} board")
        if grid[p[0], p[1]] != EMPTY:
            raise OccupiedPoint(f"setup stone on occupied point {tuple(p)}")
        grid[p[0], p[1]] = int(Color(color))
    return BoardState(size, grid)


def swap_colors(state):
    """The same position with black and white exchanged."""

    def swap(mv):
        return Move(mv.color.opponent, mv.point)

    return BoardState(
        state.size,
        -state.grid,
        Captures(state.captures.white, state.captures.black),
        state.ko_point,
        state.move_number,
        tuple(swap(mv) for mv in state.history),
    )


def transform_point(p, size, k):
    return Point(*transform_coords(p[0], p[1], size, k))


def transform_state(state, k):
    """The same position under dihedral board symmetry `k` (0 to 7)."""

    def tp(p):
        return None if p is None else transform_point(p, state.size, k)

    return BoardState(
        state.size,
        transform_grid(state.grid, k),
        state.captures,
        tp(state.ko_point),
        state.move_number,
        tuple(Move(mv.color, tp(mv.point)) for mv in state.history),
    )


def to_ascii(state):
    """Text diagram: one line per row, X black, O white, . empty."""
    chars = {-1: "X", 0: ".", 1: "O"}
    return "\n".join(
        " ".join(chars[int(v)] for v in state.grid[:, row])
        for row in range(state.size)
    )
