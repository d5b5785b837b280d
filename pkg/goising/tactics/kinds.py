from dataclasses import dataclass, field
from enum import Enum, IntEnum


class TacticKind(IntEnum):
    """
    Tactic patterns, ordered by power

    EYE > NET > LADDER > INVASION > REDUCTION > NONE.  CONNECTION only
    classifies moves; it ranks just above NONE and carries no coefficient of
    its own.
    """

    NONE = 0
    CONNECTION = 1
    REDUCTION = 2
    INVASION = 3
    LADDER = 4
    NET = 5
    EYE = 6


class LadderStatus(Enum):
    CAPTURED = "CapturedByLadder"
    ESCAPES = "Escapes"
    UNRESOLVED = "Unresolved"


@dataclass(frozen=True)
class PatternAnnotation:
    """
    Tactic patterns found on one position

    Attributes
    ----------
    eyes : dict
        Chain id to eye count `k`.

    kinds : dict
        Chain id to the strongest `TacticKind` the chain takes part in.
        Chains missing from the dict are `TacticKind.NONE`.

    ladders : dict
        Chain id to `LadderStatus`, for the chains that were read.

    nets : frozenset
        `(attacker Color, trapped chain id)` pairs.

    move_intent : TacticKind
        Class of the move that produced the position.
    """

    eyes: dict = field(default_factory=dict)
    kinds: dict = field(default_factory=dict)
    ladders: dict = field(default_factory=dict)
    nets: frozenset = frozenset()
    move_intent: TacticKind = TacticKind.NONE

    @classmethod
    def empty(cls):
        """No eyes and no patterns anywhere."""
        return cls()

    def eye_count(self, cid):
        return self.eyes.get(cid, 0)

    def kind(self, cid):
        return self.kinds.get(cid, TacticKind.NONE)
