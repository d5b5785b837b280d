"""
Replay recorded games through the energy model.

`replay` plays a game move by move, annotates every position with its
tactic patterns, and records the strength of each colour.  The verdict of
`predict_winner` is the colour with the larger final strength, White on a
tie, as komi would decide it.
"""

import os
import warnings
from dataclasses import dataclass, field, replace
from enum import Enum
from multiprocessing import Pool
from time import time
from typing import NamedTuple, Optional

import numpy as np
import xarray as xr

from .board import Color, IllegalMove, Move, apply_move, replay_setup
from .energy import hamiltonian
from .energy.params import _process_params
from .fetch import load_game
from .sgf import SgfError, sgf_coord, winner_from_result
from .tactics import TacticKind, annotate
from .tactics.intent import _classify


class IllegalRecordedMove(ValueError):
    """A recorded move that breaks the rules, or a bad setup (move 0)."""

    def __init__(self, move_number, reason):
        self.move_number = move_number
        self.reason = reason
        super().__init__(f"move {move_number}: {reason}")


class EmptySeries(ValueError):
    pass


class Agreement(Enum):
    EXACT = "Exact"
    DISAGREE = "Disagree"
    UNKNOWN = "Unknown"


class SeriesRecord(NamedTuple):
    move_number: int
    color: Color
    point: Optional[tuple]
    S_black: float
    S_white: float
    H: float
    intent: TacticKind


@dataclass(frozen=True, eq=False)
class StrengthSeries:
    """
    Strength of each colour after every move of a game

    Attributes
    ----------
    move_number : ndarray of int
        1, 2, ... one per recorded move, passes included.

    color : ndarray of int
        Colour sign of the player of each move.

    point : tuple
        `Point` played at each move, or None for a pass.

    intent : tuple of TacticKind
        Class of each move.

    S_black, S_white, H : ndarray of float
        Strengths and total energy of the position after each move.

    captures : ndarray of int
        Shape `(n, 2)`: stones captured so far by black and by white.

    params : ParameterSet

    metadata : dict
        Game information from the record.

    diags : dict
        Timers and counts, when `replay` ran with `diags=True`.
    """

    move_number: np.ndarray
    color: np.ndarray
    point: tuple
    intent: tuple
    S_black: np.ndarray
    S_white: np.ndarray
    H: np.ndarray
    captures: np.ndarray
    params: object
    metadata: dict
    diags: dict = field(default_factory=dict)

    def __len__(self):
        return len(self.move_number)

    def __eq__(self, other):
        if not isinstance(other, StrengthSeries):
            return NotImplemented
        return (
            self.point == other.point
            and self.intent == other.intent
            and self.params == other.params
            and self.metadata == other.metadata
            and all(
                np.array_equal(getattr(self, k), getattr(other, k))
                for k in (
                    "move_number",
                    "color",
                    "S_black",
                    "S_white",
                    "H",
                    "captures",
                )
            )
        )

    @property
    def gap(self):
        """`S_black - S_white` after each move."""
        return self.S_black - self.S_white

    @property
    def coord(self):
        """SGF letter coordinates of each move, "pass" for passes."""
        return tuple("pass" if p is None else sgf_coord(p) for p in self.point)

    def records(self):
        return [
            SeriesRecord(
                int(m), Color(int(c)), p, float(sb), float(sw), float(h), k
            )
            for m, c, p, sb, sw, h, k in zip(
                self.move_number,
                self.color,
                self.point,
                self.S_black,
                self.S_white,
                self.H,
                self.intent,
            )
        ]

    def to_xarray(self):
        """
        The series as an `xarray.Dataset` along dimension "move"

        Game metadata and parameters become attributes; entries that are
        None are left out.
        """
        move = ("move", self.move_number)
        ds = xr.Dataset(
            {
                "S_black": (("move",), self.S_black),
                "S_white": (("move",), self.S_white),
                "H": (("move",), self.H),
                "gap": (("move",), self.gap),
                "color": (("move",), self.color.astype(np.int8)),
                "coord": (("move",), np.array(self.coord, dtype=str)),
                "intent": (
                    ("move",),
                    np.array([k.name for k in self.intent], dtype=str),
                ),
                "captures_black": (("move",), self.captures[:, 0]),
                "captures_white": (("move",), self.captures[:, 1]),
            },
            coords={"move": move},
        )
        ds["S_black"].attrs["long_name"] = "strength of black"
        ds["S_white"].attrs["long_name"] = "strength of white"
        ds["H"].attrs["long_name"] = "total energy"
        ds.attrs.update(
            {k: str(v) for k, v in self.metadata.items() if v is not None}
        )
        ds.attrs.update({f"param_{k}": v for k, v in self.params.as_dict().items()})
        return ds


def game_metadata(game):
    return {
        "board_size": game.board_size,
        "komi": None if game.komi is None else str(game.komi),
        "result": game.result,
        "black_player": game.black_player,
        "white_player": game.white_player,
        "handicap": game.handicap,
        "date": game.date,
        "event": game.event,
    }


def replay(game, params=None, **kwargs):
    """
    Replay a game and record the strength of each colour after every move

    Parameters
    ----------
    game : SgfGame

    params : ParameterSet or dict or str, Default None
        Energy model coefficients, or a path to a key=value file.

    Returns
    -------
    series : StrengthSeries
        One record per move, passes included.  An empty game gives an empty
        series.

    Raises
    ------
    IllegalRecordedMove
        If a setup stone lands on an occupied point (move 0), or a recorded
        move is illegal.

    Other Parameters
    ----------------
    field : str, Default "liberties"
        External field of the energy; see `hamiltonian`.

    max_depth, net_ply, net_libs : int
        Reading budgets passed to `annotate`.

    eye_atari_guard : bool, Default False
        Passed to `annotate`.

    invasion_radius : int, Default 2

    reach_radius : int, Default 4
        Radii of the move classifier.

    diags : bool, Default False
        Attach per-move timers and counts of chains and stones to
        `series.diags`.

    output : bool, Default False
        Print a table with one line per move.  Requires `diags`.
    """
    params = _process_params(params)
    field_ = kwargs.get("field", "liberties")
    invasion_radius = kwargs.get("invasion_radius", 2)
    reach_radius = kwargs.get("reach_radius", 4)
    diags = kwargs.get("diags", False)
    output = kwargs.get("output", False)
    annotate_kw = {
        k: kwargs[k]
        for k in ("max_depth", "net_ply", "net_libs", "eye_atari_guard")
        if k in kwargs
    }

    try:
        state = replay_setup(game.board_size, game.setup)
    except IllegalMove as e:
        raise IllegalRecordedMove(0, str(e)) from None

    n = len(game.moves)
    move_number = np.arange(1, n + 1, dtype=np.int64)
    color = np.zeros(n, dtype=np.int8)
    S_black = np.zeros(n, dtype=np.float64)
    S_white = np.zeros(n, dtype=np.float64)
    H = np.zeros(n, dtype=np.float64)
    captures = np.zeros((n, 2), dtype=np.int64)
    points, kinds = [], []

    if diags:
        d = {
            "timer": np.zeros(n, dtype=np.float64),
            "timer_annotate": np.zeros(n, dtype=np.float64),
            "timer_energy": np.zeros(n, dtype=np.float64),
            "n_chains": np.zeros(n, dtype=int),
            "n_stones": np.zeros(n, dtype=int),
        }
        if output:
            print(
                "move | col | coord |  intent    |"
                "    S_black     |    S_white     | chains | time (s)"
            )
    else:
        d = dict()

    intents = dict()
    previous = None
    for i, mv in enumerate(game.moves):
        timer = time()
        mv = Move(Color(mv.color), mv.point)
        if previous is not None and mv.color == previous:
            warnings.warn(
                f"move {i + 1}: {mv.color.name} plays twice in a row",
                stacklevel=2,
            )
        previous = mv.color

        try:
            after = apply_move(state, mv)
        except IllegalMove as e:
            raise IllegalRecordedMove(i + 1, str(e)) from None

        if mv.is_pass:
            kind = TacticKind.NONE
        else:
            kind = _classify(state, mv, invasion_radius, reach_radius)
            intents[mv.point] = kind
        # Forget the intent of captured stones
        intents = {
            p: k for p, k in intents.items() if after.grid[p.col, p.row] != 0
        }
        state = after

        timer_loc = time()
        ann = annotate(state, intents, kind, **annotate_kw)
        timer_annotate = time() - timer_loc

        timer_loc = time()
        report = hamiltonian(state, params, ann, field_)
        timer_energy = time() - timer_loc

        color[i] = int(mv.color)
        points.append(mv.point)
        kinds.append(kind)
        S_black[i] = report.S_black
        S_white[i] = report.S_white
        H[i] = report.H
        captures[i] = state.captures

        if diags:
            d["timer"][i] = time() - timer
            d["timer_annotate"][i] = timer_annotate
            d["timer_energy"][i] = timer_energy
            d["n_chains"][i] = len(report.chain_ids)
            d["n_stones"][i] = state.n_stones
            if output:
                print(
                    f"{i + 1:4d} |"
                    f"  {mv.color.letter}  |"
                    f" {('pass' if mv.is_pass else sgf_coord(mv.point)):>5s} |"
                    f" {kind.name:10s} |"
                    f" {S_black[i]:.8e} |"
                    f" {S_white[i]:.8e} |"
                    f" {d['n_chains'][i]:6d} |"
                    f" {d['timer'][i]:.3f}"
                )

    return StrengthSeries(
        move_number,
        color,
        tuple(points),
        tuple(kinds),
        S_black,
        S_white,
        H,
        captures,
        params,
        game_metadata(game),
        d,
    )


@dataclass(frozen=True)
class GameVerdict:
    predicted: Color
    S_black: float
    S_white: float
    official: Optional[Color]
    agreement: Agreement

    def as_dict(self):
        return {
            "predicted": self.predicted.name,
            "S_black": self.S_black,
            "S_white": self.S_white,
            "official": None if self.official is None else self.official.name,
            "agreement": self.agreement.value,
        }


def predict_winner(series):
    """
    Predict the winner from the last record of a replayed game

    Black when its final strength is larger, else White.  The official
    winner is read from the result in `series.metadata`.

    Raises
    ------
    EmptySeries
        If the game has no moves.
    """
    if len(series) == 0:
        raise EmptySeries("Cannot predict the winner of a game with no moves")
    S_black = float(series.S_black[-1])
    S_white = float(series.S_white[-1])
    predicted = Color.BLACK if S_black > S_white else Color.WHITE
    official = winner_from_result(series.metadata.get("result"))
    if official is None:
        agreement = Agreement.UNKNOWN
    elif official == predicted:
        agreement = Agreement.EXACT
    else:
        agreement = Agreement.DISAGREE
    return GameVerdict(predicted, S_black, S_white, official, agreement)


def dominance_segments(series):
    """
    Maximal runs of moves in which one colour leads

    Returns
    -------
    segments : list of (int, int, Color)
        First move, last move and leading colour of each run.  White leads
        on a tie.
    """
    segments = []
    for m, g in zip(series.move_number, series.gap):
        leader = Color.BLACK if g > 0 else Color.WHITE
        if segments and segments[-1][2] == leader:
            segments[-1] = (segments[-1][0], int(m), leader)
        else:
            segments.append((int(m), int(m), leader))
    return segments


class BatchEntry(NamedTuple):
    label: str
    verdict: Optional[GameVerdict]
    series: Optional[StrengthSeries]
    error: Optional[str]
    error_kind: Optional[str]


@dataclass(frozen=True)
class BatchSummary:
    """
    Verdicts of a batch of games, in input order

    `rate` is `exact / (exact + disagree)`, the agreement over the games
    whose result is known, and NaN when there are none.
    """

    entries: tuple
    exact: int
    disagree: int
    unknown: int
    failed: int
    rate: float

    @property
    def verdicts(self):
        return [e.verdict for e in self.entries if e.verdict is not None]

    @property
    def failures(self):
        return [e for e in self.entries if e.verdict is None]

    def as_dict(self):
        return {
            "games": len(self.entries),
            "exact": self.exact,
            "disagree": self.disagree,
            "unknown": self.unknown,
            "failed": self.failed,
            "rate": None if np.isnan(self.rate) else self.rate,
            "verdicts": [
                dict(label=e.label, **e.verdict.as_dict())
                for e in self.entries
                if e.verdict is not None
            ],
            "failures": [
                {"label": e.label, "kind": e.error_kind, "error": e.error}
                for e in self.entries
                if e.verdict is None
            ],
        }


def _label(item, i):
    if isinstance(item, (str, os.PathLike)):
        return os.fspath(item)
    return f"game{i}"


def _evaluate_one(args):
    # Runs in a worker process; failures come back as entries
    label, item, params, kwargs = args
    try:
        if isinstance(item, (str, os.PathLike)):
            game = load_game(item)
        else:
            game = item
        size = kwargs.pop("size", None)
        if size is not None:
            game = replace(game, board_size=size)
    except (SgfError, OSError, ValueError) as e:
        return BatchEntry(label, None, None, str(e), "input")
    try:
        series = replay(game, params, **kwargs)
        verdict = predict_winner(series)
    except IllegalRecordedMove as e:
        return BatchEntry(label, None, None, str(e), "replay")
    except ValueError as e:
        # Unsupported board size, or no moves to judge
        return BatchEntry(label, None, None, str(e), "input")
    return BatchEntry(label, verdict, series, None, None)


def batch_evaluate(games, params=None, workers=1, **kwargs):
    """
    Replay many games and tally how often the prediction matches the result

    Parameters
    ----------
    games : list of SgfGame or path
        Games, or paths or URLs of SGF files read on the fly.

    params : ParameterSet or dict or str, Default None

    workers : int, Default 1
        Number of worker processes.  Results keep the input order.

    Returns
    -------
    summary : BatchSummary
        A game that cannot be read or replayed is recorded as a failure and
        does not stop the batch.

    Other Parameters
    ----------------
    size : int, Default None
        Board size replacing the one of every record.

    Remaining keyword arguments go to `replay`.
    """
    games = list(games)
    if len(games) == 0:
        raise ValueError("batch_evaluate needs at least one game")
    params = _process_params(params)
    kwargs = {k: v for k, v in kwargs.items() if k not in ("diags", "output")}
    jobs = [(_label(g, i), g, params, dict(kwargs)) for i, g in enumerate(games)]

    if workers > 1 and len(jobs) > 1:
        with Pool(min(workers, len(jobs))) as pool:
            entries = pool.map(_evaluate_one, jobs)
    else:
        entries = [_evaluate_one(job) for job in jobs]

    counts = {a: 0 for a in Agreement}
    for e in entries:
        if e.verdict is not None:
            counts[e.verdict.agreement] += 1
    exact = counts[Agreement.EXACT]
    disagree = counts[Agreement.DISAGREE]
    known = exact + disagree
    return BatchSummary(
        tuple(entries),
        exact,
        disagree,
        counts[Agreement.UNKNOWN],
        sum(e.verdict is None for e in entries),
        exact / known if known else float("nan"),
    )
