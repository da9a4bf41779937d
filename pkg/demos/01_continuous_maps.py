# %% [markdown]
# Continuous self-maps of small digital images
#
# A digital image is a finite set of lattice points with an adjacency.  A map
# is continuous when adjacent points land on adjacent-or-equal points.

# %%
from digitop import (enumerate_continuous_self_maps, identity, interval, is_reducible, is_rigid,
                     map_profile, render_text, simple_closed_curve)

# %% The segment [0,2] has 27 functions to itself; continuity keeps 17 of them.
I = interval(0, 2)
maps = enumerate_continuous_self_maps(I).solutions
print(f"{len(maps)} continuous self-maps of [0,2]")
for f in maps[:5]:
    print("  ", f.as_points())

# %% The segment can be squeezed toward an end one step at a time, so it is not rigid.
out = is_rigid(I)
print("rigid:", out.verdict.value, " first moving 1-map:", out.witness.assignment)

# %% An 8-point ring in the plane.
C = simple_closed_curve(8)
print(render_text(C))

# %% Rotating the ring by one step is a homotopy of the identity, so the ring is not rigid ...
print("rigid:", is_rigid(C).verdict.value)

# %% ... but nothing deforms it onto fewer points.
print("reducible:", is_reducible(C).verdict.value)

# %% The 4-point square is different: it collapses onto an edge in one step.
S = simple_closed_curve(4)
out = is_reducible(S)
print("square reducible:", out.verdict.value, " image of witness:", sorted(out.witness.image()))
print(map_profile(identity(S)))
