"""
Phase-transition events in the strength gap of a game.

A move is an event when the jump in `S_black - S_white` it causes is large
against the typical jump of the moves just before it, measured by the median
absolute successive difference.  The score is a ratio of jumps, so it is
unchanged by adding a constant to the gap or scaling it.
"""

from typing import NamedTuple

import numpy as np


class TransitionEvent(NamedTuple):
    move_number: int
    delta: float
    score: float


def _gap(series):
    if hasattr(series, "gap"):
        return np.asarray(series.gap, dtype=np.float64), np.asarray(
            series.move_number
        )
    g = np.asarray(series, dtype=np.float64)
    if g.ndim != 1:
        raise ValueError(f"Expected a 1D gap series; got shape {g.shape}")
    return g, np.arange(1, len(g) + 1)


def detect_transitions(series, window=20, kappa=6.0, eps=1.0):
    """
    Find abrupt jumps of the strength gap

    Parameters
    ----------
    series : StrengthSeries or array-like
        A replayed game, or the gap series `S_black - S_white` itself, in
        which case moves are numbered from 1.

    window : int, Default 20
        Number of preceding jumps that set the scale.  The first `window`
        moves never fire.

    kappa : float, Default 6.0
        A move fires when its jump exceeds `kappa` times the scale.

    eps : float, Default 1.0
        Floor on the scale.

    Returns
    -------
    events : list of TransitionEvent
        In move order.  `delta` is the signed jump of the gap and `score` is
        `abs(delta)` over the scale.
    """
    if int(window) != window or window < 2:
        raise ValueError(f"window must be an integer >= 2; got {window}")
    if not kappa > 0:
        raise ValueError(f"kappa must be positive; got {kappa}")
    if not eps > 0:
        raise ValueError(f"eps must be positive; got {eps}")
    window = int(window)

    g, move_number = _gap(series)
    jumps = np.diff(g)  # jumps[j] is the change from g[j] to g[j + 1]
    absj = np.abs(jumps)

    events = []
    for i in range(window, len(g)):
        scale = max(float(np.median(absj[max(0, i - 1 - window) : i - 1])), eps)
        score = absj[i - 1] / scale
        if score > kappa:
            events.append(
                TransitionEvent(int(move_number[i]), float(jumps[i - 1]), float(score))
            )
    return events


def transition_flags(move_number, events):
    """0/1 array marking the moves of `move_number` at which an event fired."""
    fired = {e.move_number for e in events}
    return np.array([int(m in fired) for m in move_number], dtype=np.int8)
