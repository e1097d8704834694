# %% [markdown]
# # Signed Gauss codes and their surfaces
#
# A doodle diagram is written as a cyclic word in which every crossing label
# appears twice, plus one intersection sign per crossing.

# %%
from doodlekit.gauss import normalize, parse, serialize, to_structured
from doodlekit.surface import build_rotation_system, faces, minimal_genus

torus = parse("a b a b | a=+1 b=+1")
print(serialize(torus))
print(to_structured(torus))

# %% [markdown]
# The rotation system has one 4-valent vertex per crossing.  Tracing faces
# (cross an edge, then turn to the rotation successor) counts the boundary
# components of the ribbon surface, and capping them gives the genus.

# %%
rs = build_rotation_system(torus)
print("vertices", rs.n_vertices, "edges", rs.n_edges)
print("faces", faces(rs))
print(minimal_genus(torus))

# %%
for text in ["", "a a | a=+1", "a b b c c a | a=+1 b=+1 c=-1", "a b c a b c | +1 +1 +1"]:
    s = minimal_genus(parse(text))
    print(f"{text or '(empty)':32} m={s.n_crossings} boundary={s.boundary_components} genus={s.genus}")

# %% [markdown]
# Labels are arbitrary; `normalize` rotates and relabels into a fixed form
# without changing anything that depends only on the curve.

# %%
messy = parse("q z p q z p | z=+1 p=-1 q=+1")
print(serialize(normalize(messy)), minimal_genus(messy).genus)
