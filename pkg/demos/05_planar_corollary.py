# %% [markdown]
# # Virtualizing a planar diagram
#
# For a planar curve the matrix is null.  After virtualizing one crossing,
# the rows of crossings met by only one loop form a fixed block pattern
# determined by two counts, k and m.  When k equals m the result reduces to
# nothing.

# %%
import random

from doodlekit.gauss import random_code, serialize
from doodlekit.skewmat import format_matrix
from doodlekit.surface import is_planar
from doodlekit.virtualize import corollary_shape_check, corollary_template

print(format_matrix(corollary_template(2, 1)))

# %%
rng = random.Random(11)
found = 0
while found < 4:
    c = random_code(rng.randint(3, 6), rng)
    if not is_planar(c):
        continue
    rep = corollary_shape_check(c)
    if not any(e.k for e in rep.entries):
        continue
    found += 1
    print(serialize(c))
    for e in rep.entries:
        print(f"  {e.crossing}: k={e.k} m={e.m} template={e.template_match} trivial={e.trivial}")
