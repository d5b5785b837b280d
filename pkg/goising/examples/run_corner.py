# In[Imports]

from goising.board import Color, replay_setup, to_ascii
from goising.cfg import build_cfg, dump_cfg
from goising.energy import hamiltonian, interaction_set
from goising.tactics import annotate

# In[Build the position]

# A white chain of 11 stones in the corner, a white chain of 5 stones below
# it and a black wall of 18 stones down the 7th column.
B, W = Color.BLACK, Color.WHITE
whites = [(c, 0) for c in range(6)] + [(c, 1) for c in range(5)]
whites += [(2, r) for r in range(3, 8)]
blacks = [(6, r) for r in range(18)]
state = replay_setup(19, [(B, p) for p in blacks] + [(W, p) for p in whites])
print(to_ascii(state))

# In[Common Fate Graph]

# One principal node per chain, one secondary node per liberty
g = build_cfg(state)
print(dump_cfg(g))

# In[Energy]

ann = annotate(state)
inter = interaction_set(state, ann)
for (a, b), w in inter.pairs.items():
    print(f"w[{a}, {b}] = {w}")

r = hamiltonian(state, annotations=ann)
for cid, x in r.stone_values():
    print(f"x[{cid}] = {x}")
print(f"H = {r.H}  (pairs {r.pair_energy}, field {r.field_energy})")
print(f"S_black = {r.S_black}, S_white = {r.S_white}")
