"""
Reading and writing SGF (FF[3] / FF[4]) Go game records.

Only the main line of the game tree is kept: at every branch the first
variation is followed.  The properties understood are B, W, AB, AW, SZ, KM,
RE, PB, PW, HA, DT, EV, GM and CA; every other property is skipped.

Tokens and text values come from `sgfmill.sgf_grammar`.  Text is decoded
with the CA charset when the record names one, else as UTF-8 when it is
valid UTF-8, else with the charset guessed by `chardet`.
"""

import re
from dataclasses import dataclass
from decimal import Decimal, InvalidOperation
from typing import Optional

import chardet
from sgfmill import sgf_grammar

from .board import Color, Move, Point

_KINDS = ("UnbalancedParens", "BadProperty", "BadCoordinate", "UnsupportedGame")

_LETTERS = "abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ"

_TEXT_PROPS = ("RE", "PB", "PW", "DT", "EV")

# sgfmill skips junk before the first "(;", which is not allowed here
_START = re.compile(rb"\s*\(\s*;")
_SPACE = re.compile(rb"\s*")


class SgfError(ValueError):
    """
    Malformed or unsupported SGF input

    Attributes
    ----------
    kind : str
        One of "UnbalancedParens", "BadProperty", "BadCoordinate",
        "UnsupportedGame".

    offset : int
        Byte offset into the input where the problem was found.
    """

    def __init__(self, kind, offset, message):
        if kind not in _KINDS:
            raise ValueError(f"Unknown SgfError kind {kind!r}")
        self.kind = kind
        self.offset = offset
        super().__init__(f"{kind} at byte {offset}: {message}")


@dataclass(frozen=True)
class SgfGame:
    board_size: int = 19
    komi: Optional[Decimal] = None
    result: Optional[str] = None
    black_player: Optional[str] = None
    white_player: Optional[str] = None
    setup: tuple = ()
    moves: tuple = ()
    handicap: Optional[int] = None
    date: Optional[str] = None
    event: Optional[str] = None

    @property
    def players(self):
        return self.black_player, self.white_player


def sgf_coord(p):
    """SGF letter coordinates of point `p`; "" for a pass (None)."""
    if p is None:
        return ""
    return _LETTERS[p[0]] + _LETTERS[p[1]]


def parse_coord(text, size, offset=0):
    """
    Decode SGF letter coordinates

    Returns a `Point`, or None for a pass: the empty value, or "tt" on
    boards up to 19x19.
    """
    if text == "" or (text == "tt" and size <= 19):
        return None
    if len(text) != 2 or text[0] not in _LETTERS or text[1] not in _LETTERS:
        raise SgfError("BadCoordinate", offset, f"bad point {text!r}")
    p = Point(_LETTERS.index(text[0]), _LETTERS.index(text[1]))
    if p.col >= size or p.row >= size:
        raise SgfError(
            "BadCoordinate", offset, f"{text!r} is off the {size}x{size} board"
        )
    return p


def _point_list(values, size):
    # Expands compressed "aa:cc" rectangles
    out = []
    for raw, off in values:
        text = raw.decode("latin-1").strip()
        if ":" in text:
            first, _, last = text.partition(":")
            p, q = parse_coord(first, size, off), parse_coord(last, size, off)
            if p is None or q is None:
                raise SgfError("BadCoordinate", off, f"bad rectangle {text!r}")
            for col in range(min(p.col, q.col), max(p.col, q.col) + 1):
                for row in range(min(p.row, q.row), max(p.row, q.row) + 1):
                    out.append(Point(col, row))
        else:
            p = parse_coord(text, size, off)
            if p is None:
                raise SgfError("BadCoordinate", off, "setup stone cannot pass")
            out.append(p)
    return out


def _tokens(data):
    """
    sgfmill tokens of the first game tree, each with its byte offset

    Returns
    -------
    tokens : list of (str, object, int)
        `("D", "(" | ";" | ")", offset)`, `("I", ident, offset)` or
        `("V", raw bytes, offset of the first byte inside the brackets)`.
    """
    if not _START.match(data):
        i = _SPACE.match(data).end()
        if data[i : i + 1] == b"(":
            raise SgfError("BadProperty", i + 1, "game tree has no node")
        raise SgfError("UnbalancedParens", i, "expected '('")

    raw_tokens, _ = sgf_grammar.tokenise(data)
    tokens = []
    depth = 0
    pos = 0
    for kind, contents in raw_tokens:
        if isinstance(contents, str):
            contents = contents.encode("ascii")
        pos = _SPACE.match(data, pos).end()
        if kind == "V":
            tokens.append((kind, contents, pos + 1))
            pos += len(contents) + 2
            continue
        tokens.append((kind, contents.decode("ascii"), pos))
        pos += len(contents)
        if contents == b"(":
            depth += 1
        elif contents == b")":
            depth -= 1

    if depth > 0:
        tail = _SPACE.match(data, pos).end()
        if tail < len(data):
            bad = data[tail : tail + 1]
            raise SgfError("BadProperty", tail, f"cannot read {bad!r}")
        raise SgfError("UnbalancedParens", len(data), "game tree is not closed")
    return tokens


def _main_line(tokens):
    """
    Property lists of the nodes on the main line of the game tree

    Each node is a list of `(ident, [(raw value, offset), ...], offset)` in
    file order.
    """
    stack = []  # one [on_main_line, n_variations, has_node] per open tree
    nodes = []
    props = None
    i, n = 0, len(tokens)
    while i < n:
        kind, value, off = tokens[i]
        if kind == "V":
            raise SgfError("BadProperty", off, "value without a property")
        if kind == "I":
            if props is None:
                raise SgfError("BadProperty", off, f"{value} outside a node")
            values = []
            i += 1
            while i < n and tokens[i][0] == "V":
                values.append(tokens[i][1:])
                i += 1
            if not values:
                raise SgfError("BadProperty", off, f"{value} has no value")
            props.append((value, values, off))
            continue

        if value == "(":
            if stack:
                parent = stack[-1]
                if not parent[2]:
                    raise SgfError("BadProperty", off, "variation before any node")
                main = parent[0] and parent[1] == 0
                parent[1] += 1
            else:
                main = True
            stack.append([main, 0, False])
            props = None
        elif value == ")":
            if not stack[-1][2]:
                raise SgfError("BadProperty", off, "empty game tree")
            stack.pop()
            props = None
            if not stack:
                return nodes
        else:
            top = stack[-1]
            if top[1] > 0:
                raise SgfError("BadProperty", off, "node after variations")
            top[2] = True
            props = []
            if top[0]:
                nodes.append(props)
        i += 1

    raise SgfError("UnbalancedParens", tokens[-1][2], "game tree is not closed")


def _usable(codec):
    try:
        b"".decode(codec)
    except LookupError:
        return False
    return True


def _decode(raw, codec):
    try:
        return raw.decode(codec, errors="replace")
    except (LookupError, UnicodeError):
        # Codecs such as idna only decode strictly
        return raw.decode("latin-1")


def _encoding(root, texts):
    """Codec for the text values of a record; see the module docstring."""
    if "CA" in root:
        codec = root["CA"][0][0].decode("latin-1").strip()
        if _usable(codec):
            return codec
    raw = b"".join(texts)
    try:
        raw.decode("utf-8")
        return "utf-8"
    except UnicodeDecodeError:
        pass
    codec = chardet.detect(raw)["encoding"]
    return codec if codec and _usable(codec) else "latin-1"


def parse_sgf(data):
    """
    Parse an SGF game record

    Parameters
    ----------
    data : bytes
        The whole file.  A str is encoded as UTF-8 first.

    Returns
    -------
    game : SgfGame
        Main line moves in file order.  Setup stones from AB / AW come black
        first, then white, each in file order.

    Raises
    ------
    SgfError
    """
    if isinstance(data, str):
        data = data.encode("utf-8")
    if not isinstance(data, (bytes, bytearray, memoryview)):
        raise TypeError(f"Expected bytes; got {type(data)}")
    data = bytes(data)

    nodes = _main_line(_tokens(data))
    root = {ident: values for ident, values, _ in nodes[0]}

    def number(ident):
        raw, off = root[ident][0]
        return raw.decode("latin-1").strip(), off

    if "GM" in root and number("GM")[0] != "1":
        raise SgfError("UnsupportedGame", root["GM"][0][1], "GM is not 1 (Go)")

    size = 19
    if "SZ" in root:
        raw, off = number("SZ")
        cols, _, rows = raw.partition(":")
        try:
            size, other = int(cols), int(rows or cols)
        except ValueError:
            raise SgfError("BadProperty", off, f"bad SZ {raw!r}") from None
        if other != size:
            raise SgfError("UnsupportedGame", off, "board is not square")
        if not 1 <= size <= len(_LETTERS):
            raise SgfError("UnsupportedGame", off, f"unsupported size {size}")

    komi = None
    if "KM" in root:
        raw, off = number("KM")
        try:
            komi = Decimal(raw)
        except InvalidOperation:
            raise SgfError("BadProperty", off, f"bad KM {raw!r}") from None
        if not komi.is_finite():
            raise SgfError("BadProperty", off, f"bad KM {raw!r}")

    handicap = None
    if "HA" in root:
        raw, off = number("HA")
        try:
            handicap = int(raw)
        except ValueError:
            raise SgfError("BadProperty", off, f"bad HA {raw!r}") from None

    texts = {
        ident: sgf_grammar.text_value(root[ident][0][0])
        for ident in _TEXT_PROPS
        if ident in root
    }
    codec = _encoding(root, texts.values())
    texts = {k: _decode(v, codec) for k, v in texts.items()}

    blacks, whites, moves = [], [], []
    for props in nodes:
        played = [(ident, off) for ident, _, off in props if ident in ("B", "W")]
        if len(played) > 1:
            raise SgfError("BadProperty", played[1][1], "node has two moves")
        for ident, values, off in props:
            if ident in ("AB", "AW"):
                if moves:
                    raise SgfError("UnsupportedGame", off, "setup stones after moves")
                (blacks if ident == "AB" else whites).extend(_point_list(values, size))
            elif ident in ("B", "W"):
                if len(values) != 1:
                    msg = f"{ident} has {len(values)} values"
                    raise SgfError("BadProperty", off, msg)
                raw, voff = values[0]
                point = parse_coord(raw.decode("latin-1").strip(), size, voff)
                moves.append(Move(Color.from_letter(ident), point))

    return SgfGame(
        board_size=size,
        komi=komi,
        result=texts.get("RE"),
        black_player=texts.get("PB"),
        white_player=texts.get("PW"),
        setup=tuple((Color.BLACK, p) for p in blacks)
        + tuple((Color.WHITE, p) for p in whites),
        moves=tuple(moves),
        handicap=handicap,
        date=texts.get("DT"),
        event=texts.get("EV"),
    )


def read_sgf(path):
    """Read a file whole and parse it with `parse_sgf`."""
    with open(path, "rb") as f:
        return parse_sgf(f.read())


def serialize_sgf(game):
    """
    Write the supported properties of `game` as a UTF-8 FF[4] record

    `parse_sgf(serialize_sgf(game)) == game` for every game whose setup lists
    black stones before white ones, and whose text holds no control
    characters.
    """
    parts = [f"(;FF[4]GM[1]CA[UTF-8]SZ[{game.board_size}]".encode("ascii")]
    if game.komi is not None:
        parts.append(f"KM[{game.komi}]".encode("ascii"))
    if game.handicap is not None:
        parts.append(f"HA[{game.handicap}]".encode("ascii"))
    for ident, value in (
        ("RE", game.result),
        ("PB", game.black_player),
        ("PW", game.white_player),
        ("DT", game.date),
        ("EV", game.event),
    ):
        if value is not None:
            escaped = sgf_grammar.escape_text(value.encode("utf-8"))
            parts.append(ident.encode("ascii") + b"[" + escaped + b"]")
    for color, ident in ((Color.BLACK, "AB"), (Color.WHITE, "AW")):
        pts = [p for c, p in game.setup if c is color]
        if pts:
            parts.append(
                (ident + "".join(f"[{sgf_coord(p)}]" for p in pts)).encode("ascii")
            )
    for mv in game.moves:
        node = f";{Color(mv.color).letter}[{sgf_coord(mv.point)}]"
        parts.append(node.encode("ascii"))
    parts.append(b")")
    return b"".join(parts)


def winner_from_result(result):
    """Black for "B+...", White for "W+...", else None."""
    text = (result or "").strip().upper()
    if text.startswith("B+"):
        return Color.BLACK
    if text.startswith("W+"):
        return Color.WHITE
    return None


def result_winner(game):
    """The official winner recorded in the RE property, if any."""
    return winner_from_result(game.result)
