import pytest

from goising.board import Color, replay_setup

B, W = Color.BLACK, Color.WHITE


def position(size, blacks=(), whites=()):
    """Board with the given (col, row) stones placed, no captures."""
    return replay_setup(size, [(B, p) for p in blacks] + [(W, p) for p in whites])


@pytest.fixture
def corner_position():
    # A white chain of 11 stones with 6 liberties in the corner, a white chain
    # of 5 stones below it and a black wall of 18 stones beside it.
    whites = [(c, 0) for c in range(6)] + [(c, 1) for c in range(5)]
    whites += [(2, r) for r in range(3, 8)]
    blacks = [(6, r) for r in range(18)]
    return position(19, blacks, whites)


@pytest.fixture
def ladder_position():
    # White (3, 3) in atari, running towards the upper left corner
    return position(7, [(4, 3), (3, 4), (2, 3), (4, 2)], [(3, 3)])


@pytest.fixture
def broken_ladder_position():
    # As above, with a white stone waiting on the ladder's path
    return position(7, [(4, 3), (3, 4), (2, 3), (4, 2)], [(3, 3), (2, 1)])


@pytest.fixture
def net_position():
    # White (3, 1) has 3 liberties but cannot get out
    blacks = [(1, 0), (1, 1), (2, 2), (3, 2), (4, 2), (4, 0), (5, 0), (5, 1)]
    return position(7, blacks, [(3, 1)])


@pytest.fixture
def eye_ring_position():
    # 8 black stones around (2, 2)
    ring = [(c, r) for c in (1, 2, 3) for r in (1, 2, 3) if (c, r) != (2, 2)]
    return position(7, ring)


@pytest.fixture
def false_eye_position():
    return position(7, [(2, 1), (1, 2), (3, 2), (2, 3)], [(1, 1), (3, 3)])
