"""
Checks against professional game records.

The records are not shipped with the package.  Put them under
`tests/data/corpus/`:

    alphago/*.sgf                   the five AlphaGo - Lee Sedol games
    pro/*.sgf                       10 or more games with known results
    lee_changho_ryu_suhang.sgf      the Lee Changho - Ryu Suhang game
"""

import glob
import os
from time import time

import pytest

from goising.replay import Agreement, batch_evaluate, predict_winner, replay
from goising.sgf import read_sgf
from goising.transitions import detect_transitions

CORPUS = os.path.join(os.path.dirname(__file__), "data", "corpus")
ALPHAGO = sorted(glob.glob(os.path.join(CORPUS, "alphago", "*.sgf")))
PRO = sorted(glob.glob(os.path.join(CORPUS, "pro", "*.sgf")))
LEE_RYU = os.path.join(CORPUS, "lee_changho_ryu_suhang.sgf")

# Seconds allowed to replay one 19x19 game of up to 300 moves
MAX_SECONDS = 5.0


@pytest.mark.skipif(len(ALPHAGO) != 5, reason="AlphaGo - Lee Sedol records not found")
def test_alphago_lee_sedol():
    games = [read_sgf(p) for p in ALPHAGO]
    replay(games[0])  # compile

    agree = 0
    for g in games:
        tic = time()
        series = replay(g)
        elapsed = time() - tic
        if len(series) <= 300:
            assert elapsed < MAX_SECONDS
        agree += predict_winner(series).agreement is Agreement.EXACT
    assert agree >= 4


@pytest.mark.skipif(len(PRO) < 10, reason="fewer than 10 professional records found")
def test_professional_agreement_rate():
    summary = batch_evaluate(PRO, workers=os.cpu_count() or 1)
    assert summary.exact + summary.disagree >= 10
    assert summary.rate >= 0.6


@pytest.mark.skipif(
    not os.path.exists(LEE_RYU), reason="Lee Changho - Ryu Suhang record not found"
)
def test_lee_changho_ryu_suhang_transition():
    events = detect_transitions(replay(read_sgf(LEE_RYU)))
    assert any(abs(e.move_number - 73) <= 10 for e in events)
