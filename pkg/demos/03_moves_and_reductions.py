# %% [markdown]
# # Monogon and bigon moves, matrix reductions
#
# Removing a monogon or bigon face from the curve deletes one or two rows of
# the matrix.  The irreducible form left after all such reductions is an
# invariant of the doodle.

# %%
import random

from doodlekit import load_kishino
from doodlekit.gauss import MoveKind, apply_reduction_move, find_moves, insert_move, parse, serialize
from doodlekit.skewmat import canonical_key, classify, format_matrix, matrix_of, reduce

c = parse("a b b a | a=+1 b=-1")
for site in find_moves(c):
    print(site.kind.value, site.labels, site.positions)

# %%
step = apply_reduction_move(c, find_moves(c)[0])
print(serialize(step))

# %% [markdown]
# Inflate the golden code with random insertions; the matrix grows but its
# reduction lands on the same canonical form.

# %%
k = load_kishino()
key = canonical_key(reduce(matrix_of(k))[0])
rng = random.Random(7)
big = k
for _ in range(6):
    if rng.random() < 0.5:
        big = insert_move(big, MoveKind.MONOGON, rng.randint(0, len(big)), rng.choice((1, -1)))
    else:
        g = sorted(rng.randint(0, len(big)) for _ in range(2))
        big = insert_move(big, MoveKind.BIGON, g, rng.choice((1, -1)), rng.random() < 0.5)
print(big.n, "crossings")
R, trace = reduce(matrix_of(big))
for s in trace.steps:
    print(" ", s)
print(canonical_key(R) == key)
print(format_matrix(R))
print(classify(big).value)
