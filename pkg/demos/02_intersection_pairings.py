# %% [markdown]
# # Primitive loops and intersection numbers
#
# Smoothing the curve at crossing `a` splits it into two loops, one per side
# of the crossing.  Their pairings with each other and with the whole curve
# fill the augmented skew-symmetric matrix.

# %%
import numpy as np

from doodlekit import load_kishino
from doodlekit.gauss import parse
from doodlekit.homology import full_loop, pairing_interval, pairing_pushoff, pairing_table, primitive_loops
from doodlekit.surface import build_rotation_system

c = parse("a b c a b c | a=+1 b=+1 c=+1")
left, right = primitive_loops(c, "a")
print("D_a arcs", left.arcs, "complement arcs", right.arcs)

# %% [markdown]
# Two ways to compute pairing with the full curve: push the loops apart
# inside each vertex disk and count signed crossings, or read it straight
# from the word with the interval formula.

# %%
rs = build_rotation_system(c)
print(pairing_pushoff(rs, left, full_loop(c)), pairing_interval(c, "a"))

# %%
t = pairing_table(c)
print(t.labels)
print(t.P)
assert np.array_equal(t.P, -t.P.T)

# %% [markdown]
# The bundled 4-crossing example is a connected sum of two torus curves.

# %%
k = load_kishino()
print(pairing_table(k, ["a1", "a2", "a3", "a4"]).P)
