import pytest

from goising.board import (
    Color,
    IllegalMove,
    Move,
    Point,
    UnknownChain,
    replay_setup,
)
from goising.tactics import (
    LadderStatus,
    PatternAnnotation,
    TacticKind,
    annotate,
    classify_move,
    detect_eyes,
    detect_nets,
    eye_points,
    is_netted,
    ladder_status,
)
from goising.tactics.nets import _NetSearch

B, W = Color.BLACK, Color.WHITE

LADDER_TARGET = 3 * 7 + 3
NET_TARGET = 3 * 7 + 1


def position(size, blacks=(), whites=()):
    return replay_setup(size, [(B, p) for p in blacks] + [(W, p) for p in whites])


# --- eyes ---------------------------------------------------------------------


def test_eye_ring(eye_ring_position):
    assert eye_points(eye_ring_position) == {2 * 7 + 2: int(B)}
    assert detect_eyes(eye_ring_position) == {8: 1}


def test_false_eye(false_eye_position):
    assert eye_points(false_eye_position) == {}
    k = detect_eyes(false_eye_position)
    assert set(k.values()) == {0}
    assert len(k) == len(false_eye_position.chains)


def test_one_diagonal_adversary_is_tolerated_inside():
    s = position(7, [(2, 1), (1, 2), (3, 2), (2, 3)], [(1, 1)])
    assert eye_points(s) == {2 * 7 + 2: int(B)}


def test_corner_eye_needs_a_friendly_diagonal():
    s = position(7, [(1, 0), (0, 1), (1, 1)])
    assert eye_points(s) == {0: int(B)}
    # An empty diagonal is not enough on the edge
    s = position(7, [(1, 0), (0, 1)])
    assert eye_points(s) == {}
    s = position(7, [(1, 0), (0, 1)], [(1, 1)])
    assert eye_points(s) == {}


@pytest.mark.parametrize(
    "diagonals,is_eye",
    [([(2, 1), (4, 1)], True), ([(2, 1)], False), ([], False)],
)
def test_edge_eye_needs_both_diagonals(diagonals, is_eye):
    s = position(7, [(2, 0), (4, 0), (3, 1)] + diagonals)
    assert eye_points(s) == ({3 * 7: int(B)} if is_eye else {})


def test_atari_guard():
    # The black chain keeps two liberties, then one after white fills (0, 2)
    blacks = [(1, 0), (0, 1), (1, 1)]
    s = position(7, blacks, [(2, 0), (2, 1), (1, 2)])
    assert eye_points(s, atari_guard=True) == {0: int(B)}
    s = position(7, blacks, [(2, 0), (2, 1), (1, 2), (0, 2)])
    assert eye_points(s) == {0: int(B)}
    assert eye_points(s, atari_guard=True) == {}
    (cid,) = [c for c, ch in s.chains.items() if ch.color is B]
    assert detect_eyes(s)[cid] == 1
    assert detect_eyes(s, atari_guard=True)[cid] == 0


def test_two_eyes():
    holes = {(0, 0), (2, 0)}
    ring = [(c, r) for c in range(4) for r in range(3) if (c, r) not in holes]
    s = position(7, ring)
    (cid,) = s.chains
    assert detect_eyes(s) == {cid: 2}


# --- ladders ------------------------------------------------------------------


def test_ladder_captures(ladder_position):
    assert ladder_status(ladder_position, LADDER_TARGET) is LadderStatus.CAPTURED


def test_ladder_budget(ladder_position):
    status = ladder_status(ladder_position, LADDER_TARGET, max_depth=2)
    assert status is LadderStatus.UNRESOLVED


def test_broken_ladder_escapes(broken_ladder_position):
    status = ladder_status(broken_ladder_position, LADDER_TARGET)
    assert status is LadderStatus.ESCAPES


def test_ladder_depth_is_monotone(ladder_position):
    final = ladder_status(ladder_position, LADDER_TARGET)
    seen_final = False
    for depth in range(0, 16):
        status = ladder_status(ladder_position, LADDER_TARGET, max_depth=depth)
        if seen_final:
            assert status is final
        elif status is not LadderStatus.UNRESOLVED:
            assert status is final
            seen_final = True
    assert seen_final


def test_free_chain_escapes():
    s = position(7, [], [(3, 3)])
    assert ladder_status(s, LADDER_TARGET) is LadderStatus.ESCAPES


def test_ladder_does_not_modify_state(ladder_position):
    before = ladder_position.grid.copy()
    ladder_status(ladder_position, LADDER_TARGET)
    assert (ladder_position.grid == before).all()


def test_ladder_unknown_chain(ladder_position):
    with pytest.raises(UnknownChain):
        ladder_status(ladder_position, 0)


# --- nets ---------------------------------------------------------------------


def test_net(net_position):
    assert is_netted(net_position, NET_TARGET)
    assert detect_nets(net_position) == {(B, NET_TARGET)}


def test_net_escape_is_measured_from_current_liberties(net_position):
    # Same enclosure with white on (3, 0) and 2 liberties: extending to
    # (3, 1) gives 3 liberties, which is an escape
    blacks = [
        (c, r) for c in range(7) for r in range(7) if net_position.grid[c, r] == B
    ]
    s = position(7, blacks, [(3, 0)])
    assert len(s.chains[3 * 7].liberty_points) == 2
    assert not is_netted(s, 3 * 7)
    assert detect_nets(s) == set()
    # Against a fixed ceiling of 3 the chain would count as caught
    assert _NetSearch(7, 3 * 7, 3).defender_fails(s.flat, 6)


def test_open_stone_is_not_netted():
    s = position(7, [], [(3, 3)])
    assert not is_netted(s, LADDER_TARGET)
    assert detect_nets(s) == set()


def test_ladder_takes_precedence_over_net(ladder_position):
    nets = detect_nets(ladder_position)
    assert all(cid != LADDER_TARGET for _, cid in nets)


# --- move intent --------------------------------------------------------------


@pytest.mark.parametrize(
    "blacks,whites,move,expected",
    [
        ([], [], (4, 4), TacticKind.NONE),
        ([(2, 3), (4, 3)], [], (3, 3), TacticKind.CONNECTION),
        ([], [(4, 4)], (4, 1), TacticKind.INVASION),
        ([(4, 0)], [(4, 3)], (4, 1), TacticKind.REDUCTION),
        ([(4, 0)], [], (4, 1), TacticKind.NONE),
        ([], [(4, 8)], (4, 0), TacticKind.NONE),
    ],
)
def test_classify_move(blacks, whites, move, expected):
    s = position(9, blacks, whites)
    assert classify_move(s, Move(B, Point(*move))) is expected


def test_classify_pass():
    assert classify_move(position(9), Move(B, None)) is TacticKind.NONE


def test_classify_illegal_move():
    s = position(9, [(4, 4)])
    with pytest.raises(IllegalMove):
        classify_move(s, Move(W, Point(4, 4)))


def test_classify_radii():
    s = position(9, [], [(4, 4)])
    m = Move(B, Point(4, 1))
    assert classify_move(s, m, reach_radius=2) is TacticKind.NONE
    reduction = classify_move(s, m, invasion_radius=3, reach_radius=2)
    assert reduction is TacticKind.REDUCTION


# --- annotation ---------------------------------------------------------------


def test_annotate_ladder(ladder_position):
    ann = annotate(ladder_position)
    assert ann.ladders == {LADDER_TARGET: LadderStatus.CAPTURED}
    for cid in (4 * 7 + 2, 3 * 7 + 4, 2 * 7 + 3):
        assert ann.kind(cid) is TacticKind.LADDER
    assert ann.kind(LADDER_TARGET) is TacticKind.NONE
    assert ann.nets == frozenset()


def test_annotate_net(net_position):
    ann = annotate(net_position)
    assert ann.nets == frozenset({(B, NET_TARGET)})
    for cid in (1 * 7 + 0, 2 * 7 + 2, 4 * 7 + 0):
        assert ann.kind(cid) is TacticKind.NET


def test_annotate_eye(eye_ring_position):
    ann = annotate(eye_ring_position)
    assert ann.eye_count(8) == 1
    assert ann.kind(8) is TacticKind.EYE


def test_annotate_intents():
    s = position(9, [(4, 1)], [(4, 4)])
    ann = annotate(
        s, {Point(4, 1): TacticKind.INVASION}, move_intent=TacticKind.INVASION
    )
    assert ann.kind(4 * 9 + 1) is TacticKind.INVASION
    assert ann.kind(4 * 9 + 4) is TacticKind.NONE
    assert ann.move_intent is TacticKind.INVASION


def test_eye_beats_intent(eye_ring_position):
    ann = annotate(eye_ring_position, {Point(1, 1): TacticKind.INVASION})
    assert ann.kind(8) is TacticKind.EYE


def test_empty_annotation():
    ann = PatternAnnotation.empty()
    assert ann.eye_count(5) == 0
    assert ann.kind(5) is TacticKind.NONE
    assert annotate(position(9)) == PatternAnnotation.empty()


def test_annotate_leaves_state_alone(ladder_position):
    before = ladder_position.grid.copy()
    annotate(ladder_position)
    assert (ladder_position.grid == before).all()
