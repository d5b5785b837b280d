from .kinds import TacticKind, LadderStatus, PatternAnnotation
from .eyes import detect_eyes, eye_points
from .ladder import ladder_status
from .nets import detect_nets, is_netted
from .intent import classify_move
from .annotate import annotate
