import os
from decimal import Decimal

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from goising.board import Color, Move, Point
from goising.sgf import (
    SgfError,
    SgfGame,
    parse_coord,
    parse_sgf,
    read_sgf,
    result_winner,
    serialize_sgf,
    sgf_coord,
)

B, W = Color.BLACK, Color.WHITE
DATA = os.path.join(os.path.dirname(__file__), "data")

GAME = (
    "(;FF[4]GM[1]SZ[9]KM[6.5]HA[0]RE[B+R]PB[Black \\] Player]PW[White]"
    "DT[2016-03-09]EV[Test]AB[aa][bb]AW[cc]"
    ";B[ee];W[gg](;B[dd];W[])(;B[ff]))"
)


def test_parse_game():
    g = parse_sgf(GAME)
    assert g.board_size == 9
    assert g.komi == Decimal("6.5")
    assert g.handicap == 0
    assert g.result == "B+R"
    assert g.players == ("Black ] Player", "White")
    assert g.date == "2016-03-09"
    assert g.event == "Test"
    assert g.setup == ((B, Point(0, 0)), (B, Point(1, 1)), (W, Point(2, 2)))
    # Main line follows the first variation
    assert g.moves == (
        Move(B, Point(4, 4)),
        Move(W, Point(6, 6)),
        Move(B, Point(3, 3)),
        Move(W, None),
    )
    assert result_winner(g) is B


def test_read_sgf():
    g = read_sgf(os.path.join(DATA, "short_game.sgf"))
    assert g.board_size == 9
    assert len(g.moves) == 12
    assert result_winner(g) is B


@pytest.mark.parametrize(
    "text,size,expected",
    [
        ("aa", 19, Point(0, 0)),
        ("sa", 19, Point(18, 0)),
        ("", 19, None),
        ("tt", 19, None),
        ("tt", 21, Point(19, 19)),
    ],
)
def test_parse_coord(text, size, expected):
    assert parse_coord(text, size) == expected


def test_sgf_coord():
    assert sgf_coord(Point(2, 3)) == "cd"
    assert sgf_coord(None) == ""


def test_compressed_point_list():
    g = parse_sgf("(;SZ[9]AB[aa:bc])")
    assert {p for _, p in g.setup} == {
        Point(c, r) for c in range(2) for r in range(3)
    }


def test_charsets():
    g = parse_sgf("(;PB[이세돌]PW[AlphaGo])".encode("utf-8"))
    assert g.black_player == "이세돌"
    g = parse_sgf(b"(;CA[ISO-8859-1]PB[Jos\xe9])")
    assert g.black_player == "Jos\xe9"
    g = parse_sgf("(;CA[EUC-KR]PB[이세돌])".encode("euc-kr"))
    assert g.black_player == "이세돌"
    # Without CA, text that is not UTF-8 is decoded with a guessed charset
    g = parse_sgf(b"(;PB[Jos\xe9]PW[AlphaGo])")
    assert g.black_player.startswith("Jos")
    assert g.white_player == "AlphaGo"


def test_unknown_charset():
    g = parse_sgf(b"(;CA[no-such-codec]PB[Lee])")
    assert g.black_player == "Lee"


def test_soft_line_break():
    g = parse_sgf("(;EV[Go \\\nSeigen])")
    assert g.event == "Go Seigen"


@pytest.mark.parametrize(
    "text,kind",
    [
        ("", "UnbalancedParens"),
        (";B[aa]", "UnbalancedParens"),
        ("(;B[aa]", "UnbalancedParens"),
        ("(;B[aa", "BadProperty"),
        ("(;B)", "BadProperty"),
        ("()", "BadProperty"),
        ("(;SZ[x])", "BadProperty"),
        ("(;KM[abc])", "BadProperty"),
        ("(;B[aa]W[bb])", "BadProperty"),
        ("(;SiZe[9])", "BadProperty"),
        ("(;[aa])", "BadProperty"),
        ("(;B[aa]((;W[bb])))", "BadProperty"),
        ("(;B[zz])", "BadCoordinate"),
        ("(;SZ[9];B[jj])", "BadCoordinate"),
        ("(;B[a])", "BadCoordinate"),
        ("(;GM[2])", "UnsupportedGame"),
        ("(;SZ[9:13])", "UnsupportedGame"),
        ("(;B[aa];AB[bb])", "UnsupportedGame"),
    ],
)
def test_errors(text, kind):
    with pytest.raises(SgfError) as e:
        parse_sgf(text)
    assert e.value.kind == kind


def test_error_offset():
    with pytest.raises(SgfError) as e:
        parse_sgf("(;SZ[9];B[jj])")
    assert e.value.offset == 10


@st.composite
def games(draw):
    size = draw(st.integers(5, 19))
    point = st.builds(Point, st.integers(0, size - 1), st.integers(0, size - 1))
    chars = st.characters(blacklist_categories=("Cs", "Cc"))
    text = st.one_of(st.none(), st.text(chars, max_size=12))
    blacks = draw(st.lists(point, max_size=4, unique=True))
    whites = draw(st.lists(point, max_size=4, unique=True))
    moves = draw(
        st.lists(
            st.builds(Move, st.sampled_from([B, W]), st.one_of(st.none(), point)),
            max_size=30,
        )
    )
    return SgfGame(
        board_size=size,
        komi=draw(
            st.one_of(
                st.none(),
                st.decimals(-50, 50, places=1, allow_nan=False, allow_infinity=False),
            )
        ),
        result=draw(text),
        black_player=draw(text),
        white_player=draw(text),
        setup=tuple((B, p) for p in blacks) + tuple((W, p) for p in whites),
        moves=tuple(moves),
        handicap=draw(st.one_of(st.none(), st.integers(0, 9))),
        date=draw(text),
        event=draw(text),
    )


@given(games())
@settings(max_examples=500, deadline=None)
def test_round_trip(game):
    assert parse_sgf(serialize_sgf(game)) == game


nodes = st.one_of(
    st.builds(
        lambda color, p: f";{color}[{p}]",
        st.sampled_from("BW"),
        st.sampled_from(["aa", "cd", "ii", ""]),
    ),
    st.just(";C[note]"),
    st.just(";"),
)
trees = st.recursive(
    st.tuples(st.lists(nodes, min_size=1, max_size=4), st.just(())),
    lambda kids: st.tuples(
        st.lists(nodes, min_size=1, max_size=4),
        st.lists(kids, min_size=1, max_size=3).map(tuple),
    ),
    max_leaves=8,
)


def _tree_text(tree):
    seq, kids = tree
    return "(" + "".join(seq) + "".join(_tree_text(k) for k in kids) + ")"


def _first_line(tree):
    seq, kids = tree
    return "".join(seq) + (_first_line(kids[0]) if kids else "")


@given(trees)
@settings(max_examples=300, deadline=None)
def test_side_variations_are_ignored(tree):
    full = "(;SZ[9]" + _tree_text(tree)[1:]
    pruned = "(;SZ[9]" + _first_line(tree) + ")"
    assert parse_sgf(full) == parse_sgf(pruned)


def test_mutated_records_raise_only_sgf_errors():
    rng = np.random.default_rng(0)
    with open(os.path.join(DATA, "short_game.sgf"), "rb") as f:
        base = bytearray(f.read())
    alphabet = np.frombuffer(b"()[];:\\BWABSZKMaz019 \n\xff", dtype=np.uint8)
    for _ in range(10_000):
        data = bytearray(base)
        for _ in range(rng.integers(1, 4)):
            op = rng.integers(3)
            i = int(rng.integers(len(data) + 1))
            if op == 0 and len(data):
                del data[min(i, len(data) - 1)]
            elif op == 1:
                data.insert(i, int(rng.choice(alphabet)))
            elif len(data):
                data[min(i, len(data) - 1)] = int(rng.choice(alphabet))
        try:
            parse_sgf(bytes(data))
        except SgfError:
            pass
