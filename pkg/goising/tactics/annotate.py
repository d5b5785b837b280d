from ..grid import board_graph
from .eyes import detect_eyes
from .kinds import LadderStatus, PatternAnnotation, TacticKind
from .ladder import ladder_status
from .nets import detect_nets


def _attackers(state, trapped):
    """Ids of adversary chains touching `trapped` or one of its liberties."""
    indptr, indices = board_graph(state.size)
    labels = state.labels.reshape(-1)
    board = state.flat
    adversary = -int(trapped.color)
    out = set()
    for p in trapped.points | trapped.liberty_points:
        m = p.col * state.size + p.row
        for n in indices[indptr[m] : indptr[m + 1]]:
            if board[n] == adversary:
                out.add(int(labels[n]))
    return out


def annotate(state, intents=None, move_intent=TacticKind.NONE, **kwargs):
    """
    Run every tactic detector on `state`

    Parameters
    ----------
    state : BoardState

    intents : dict, Default None
        `Point -> TacticKind` giving the class of the move that placed each
        stone, as recorded while replaying a game.

    move_intent : TacticKind, Default NONE
        Class of the move that produced `state`.

    Returns
    -------
    ann : PatternAnnotation
        Each chain gets the strongest kind it takes part in: EYE when it
        has an eye, NET or LADDER when it is an attacker chain of a netted
        or ladder-captured chain, else the strongest intent among its stones.

    Other Parameters
    ----------------
    max_depth : int, Default 64
        Ply budget of the ladder reading.

    net_ply : int, Default 6
        Ply budget of the net search.

    net_libs : int, Default 3
        Liberty ceiling of the net search.

    eye_atari_guard : bool, Default False
        Passed to `detect_eyes` as `atari_guard`.
    """
    max_depth = kwargs.get("max_depth", 64)
    net_ply = kwargs.get("net_ply", 6)
    net_libs = kwargs.get("net_libs", 3)
    eye_atari_guard = kwargs.get("eye_atari_guard", False)
    intents = dict() if intents is None else intents

    chains = state.chains
    eyes = detect_eyes(state, eye_atari_guard)
    ladders = {
        cid: ladder_status(state, cid, max_depth)
        for cid, ch in chains.items()
        if 1 <= len(ch.liberty_points) <= 2
    }
    nets = detect_nets(state, net_ply, net_libs, ladders, max_depth)

    kinds = dict()

    def promote(cid, kind):
        if kind > kinds.get(cid, TacticKind.NONE):
            kinds[cid] = kind

    for cid, ch in chains.items():
        for p in ch.points:
            promote(cid, intents.get(p, TacticKind.NONE))
        if eyes[cid] >= 1:
            promote(cid, TacticKind.EYE)
    for cid, status in ladders.items():
        if status is LadderStatus.CAPTURED:
            for a in _attackers(state, chains[cid]):
                promote(a, TacticKind.LADDER)
    for _, cid in nets:
        for a in _attackers(state, chains[cid]):
            promote(a, TacticKind.NET)

    return PatternAnnotation(
        eyes=eyes,
        kinds=kinds,
        ladders=ladders,
        nets=frozenset(nets),
        move_intent=TacticKind(move_intent),
    )
