import numpy as np
import pytest

from goising.board import (
    BoardState,
    Captures,
    Color,
    KoViolation,
    Move,
    OccupiedPoint,
    OutOfBounds,
    Point,
    StaleChain,
    SuicideMove,
    apply_move,
    chain_at,
    liberties,
    replay_setup,
    swap_colors,
    to_ascii,
    transform_point,
    transform_state,
)
from goising.grid import board_graph, diagonal_graph

B, W = Color.BLACK, Color.WHITE


def position(size, blacks=(), whites=()):
    return replay_setup(size, [(B, p) for p in blacks] + [(W, p) for p in whites])


def play(state, *moves):
    for color, p in moves:
        state = apply_move(state, Move(color, None if p is None else Point(*p)))
    return state


def ko_position():
    # White (2, 2) has its last liberty at (3, 2), inside a white mouth
    return position(7, [(1, 2), (2, 1), (2, 3)], [(2, 2), (3, 1), (3, 3), (4, 2)])


def test_single_interior_stone():
    s = play(BoardState(), (B, (3, 3)))
    assert len(s.chains) == 1
    (ch,) = s.chains.values()
    assert ch.color is B
    assert ch.n == 1
    assert liberties(s, ch) == 4
    assert s.move_number == 1
    assert s.history == (Move(B, Point(3, 3)),)


def test_corner_capture():
    s = play(BoardState(), (W, (0, 0)), (B, (1, 0)), (B, (0, 1)))
    assert s.captures == Captures(black=1, white=0)
    assert s.color_at(Point(0, 0)) is None
    assert s.n_stones == 2


def test_suicide():
    ring = [(2, 1), (1, 2), (3, 2), (2, 3)]
    s = position(7, ring)
    with pytest.raises(SuicideMove):
        apply_move(s, Move(W, Point(2, 2)))


def test_capture_is_not_suicide():
    # The white stone at (0, 0) fills its last liberty but captures first
    s = position(7, [(0, 1), (1, 0)], [(0, 2), (1, 1), (2, 0)])
    s = play(s, (W, (0, 0)))
    assert s.captures.white == 2
    assert chain_at(s, Point(0, 0)).n == 1


@pytest.mark.parametrize(
    "move,err",
    [
        (Move(B, Point(3, 3)), OccupiedPoint),
        (Move(B, Point(7, 0)), OutOfBounds),
        (Move(B, Point(0, -1)), OutOfBounds),
    ],
)
def test_illegal_moves(move, err):
    s = position(7, [(3, 3)])
    with pytest.raises(err):
        apply_move(s, move)


def test_ko():
    s = play(ko_position(), (B, (3, 2)))
    assert s.captures.black == 1
    assert s.ko_point == Point(2, 2)
    with pytest.raises(KoViolation):
        apply_move(s, Move(W, Point(2, 2)))

    # A pass lifts the ko
    p = play(s, (W, None))
    assert p.ko_point is None
    assert p.move_number == s.move_number + 1
    assert np.array_equal(p.grid, s.grid)

    # Retaking after both sides pass is legal
    p = play(s, (W, None), (B, None), (W, (2, 2)))
    assert p.captures.white == 1
    assert p.ko_point == Point(3, 2)

    # A move elsewhere lifts it
    s = play(s, (W, (6, 6)), (B, (6, 0)), (W, (2, 2)))
    assert s.captures.white == 1
    assert s.ko_point == Point(3, 2)


def test_capturing_two_is_not_ko():
    s = position(
        7, [(1, 2), (1, 3), (2, 1), (2, 4), (3, 3)], [(2, 2), (2, 3), (3, 1), (4, 2)]
    )
    s = play(s, (B, (3, 2)))
    assert s.captures.black == 2
    assert s.ko_point is None


def test_chain_at():
    s = position(9, [(3, 3), (3, 4)])
    assert chain_at(s, Point(3, 3)) == chain_at(s, Point(3, 4))
    assert chain_at(s, Point(3, 3)).id == 3 * 9 + 3
    assert chain_at(s, Point(0, 0)) is None
    with pytest.raises(OutOfBounds):
        chain_at(s, Point(9, 0))


@pytest.mark.parametrize(
    "stones,expected",
    [
        ([(4, 4)], 4),
        ([(0, 0)], 2),
        ([(4, 4), (5, 4)], 6),
        ([(0, 4), (0, 5)], 4),
    ],
)
def test_liberties(stones, expected):
    s = position(9, stones)
    assert liberties(s, chain_at(s, Point(*stones[0]))) == expected


def test_stale_chain():
    s = position(9, [(4, 4)])
    ch = chain_at(s, Point(4, 4))
    s = play(s, (B, (4, 5)))
    with pytest.raises(StaleChain):
        liberties(s, ch)


def test_replay_setup():
    assert replay_setup(9, []).n_stones == 0
    s = replay_setup(9, [(B, (2, 2)), (B, (6, 6))])
    assert len(s.chains) == 2
    assert s.captures == Captures(0, 0)
    with pytest.raises(OccupiedPoint):
        replay_setup(9, [(B, (2, 2)), (W, (2, 2))])
    with pytest.raises(OutOfBounds):
        replay_setup(9, [(B, (9, 2))])


@pytest.mark.parametrize(
    "size,err", [(4, ValueError), (20, ValueError), (9.0, TypeError)]
)
def test_bad_size(size, err):
    with pytest.raises(err):
        BoardState(size)


def test_grid_is_read_only():
    s = position(9, [(4, 4)])
    with pytest.raises(ValueError):
        s.grid[0, 0] = 1


def test_chains_partition_stones():
    s = position(9, [(0, 0), (0, 1), (4, 4), (8, 8)], [(1, 0), (5, 5), (5, 6)])
    assert sum(ch.n for ch in s.chains.values()) == s.n_stones
    pts = [p for ch in s.chains.values() for p in ch.points]
    assert len(pts) == len(set(pts))


def test_swap_colors():
    s = play(ko_position(), (B, (3, 2)))
    t = swap_colors(s)
    assert np.array_equal(t.grid, -s.grid)
    assert t.captures == Captures(s.captures.white, s.captures.black)
    assert swap_colors(t) == s
    # Swapping commutes with playing
    m = Move(W, Point(5, 5))
    assert apply_move(t, Move(B, Point(5, 5))) == swap_colors(apply_move(s, m))


@pytest.mark.parametrize("k", range(8))
def test_symmetry_commutes_with_play(k):
    s = ko_position()
    m = Point(3, 2)
    expected = transform_state(apply_move(s, Move(B, m)), k)
    t = apply_move(transform_state(s, k), Move(B, transform_point(m, 7, k)))
    assert t == expected


def test_to_ascii():
    s = position(5, [(0, 0)], [(4, 0)])
    lines = to_ascii(s).splitlines()
    assert len(lines) == 5
    assert lines[0] == "X . . . O"


def test_board_graph():
    indptr, indices = board_graph(5)
    degree = np.diff(indptr).reshape(5, 5)
    assert degree[0, 0] == degree[4, 4] == 2
    assert degree[0, 2] == degree[2, 4] == 3
    assert degree[2, 2] == 4
    assert len(indices) == 80
    # (1, 1) has linear index 6
    assert list(indices[indptr[6] : indptr[7]]) == [1, 5, 7, 11]
    assert board_graph(5)[0] is indptr
    assert not indices.flags.writeable

    indptr, indices = diagonal_graph(5)
    degree = np.diff(indptr).reshape(5, 5)
    assert degree[0, 0] == 1
    assert degree[0, 2] == 2
    assert degree[2, 2] == 4
    assert list(indices[indptr[6] : indptr[7]]) == [0, 2, 10, 12]
