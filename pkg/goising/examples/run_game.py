# In[Imports]

import os
import sys

from goising.fetch import load_game
from goising.output import strength_figure
from goising.replay import dominance_segments, predict_winner, replay
from goising.transitions import detect_transitions

# In[Load a game]

# Pass a path or an http(s) URL of an SGF record; URLs are downloaded once
# and cached by pooch.  Defaults to the short 9x9 game used by the tests.
if len(sys.argv) > 1:
    source = sys.argv[1]
else:
    source = os.path.join(
        os.path.dirname(__file__), "..", "tests", "data", "short_game.sgf"
    )
game = load_game(source)

# In[Replay]

# One line per move, with timers
series = replay(game, diags=True, output=True)
print(f"total time {series.diags['timer'].sum():.2f} s")

verdict = predict_winner(series)
print(
    f"predicted {verdict.predicted.name}, official "
    f"{verdict.official.name if verdict.official else 'unknown'}"
    f" ({verdict.agreement.value})"
)

# In[Phase transitions and dominance]

events = detect_transitions(series, window=20, kappa=6.0)
for e in events:
    print(f"transition at move {e.move_number}: delta {e.delta:+.1f}")

for first, last, leader in dominance_segments(series):
    print(f"moves {first} - {last}: {leader.name} leads")

# In[Plot]

fig = strength_figure(series, events, os.path.basename(str(source)))
fig.savefig("strength.png")
