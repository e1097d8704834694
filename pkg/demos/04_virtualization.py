# %% [markdown]
# # Virtualizing a crossing
#
# Flipping the intersection sign at one crossing changes the matrix in a way
# that depends only on how every other crossing sits relative to the two
# primitive loops.  We predict the new matrix and compare with recomputation.

# %%
from doodlekit.gauss import parse, virtualize
from doodlekit.skewmat import format_matrix, matrix_of
from doodlekit.virtualize import check_prediction, predict, profile

c = parse("a d b a c b d c | a=+1 d=+1 b=-1 c=+1")
p = profile(c, "d")
for label, prof in p.items():
    print(label, prof)

# %%
M = matrix_of(c, p.labels)
print(format_matrix(predict(M, p)))
print(format_matrix(matrix_of(virtualize(c, "d"), p.labels)))

# %%
for a in c.labels():
    print(a, check_prediction(c, a).match)
