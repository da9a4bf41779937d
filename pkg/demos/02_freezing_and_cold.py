# %% [markdown]
# Freezing sets and cold sets
#
# A set A is freezing when the only continuous self-map fixing A pointwise is
# the identity.  A is s-cold when any such map moves points by at most s.

# %%
from digitop import (box, boundary, cold_sets_audit, interval, is_freezing, is_s_cold,
                     minimize_freezing, render_text)

# %% Fixing both ends of a segment pins down every point in between.
I = interval(0, 5)
print("{0,5} freezing on [0,5]:", is_freezing(I, [0, 5]).verdict.value)

# %% One end is not enough; the constant map is a counterexample.
J = interval(0, 1)
out = is_freezing(J, [0])
print("{0} freezing on [0,1]:", out.verdict.value, " witness:", out.witness.assignment)
print("{0} 1-cold on [0,1]:", is_s_cold(J, [0], 1).verdict.value)

# %% The boundary of a box is freezing, and greedy pruning leaves the four corners.
B = box([(0, 3), (0, 3)], 1)
print(render_text(B))
M = minimize_freezing(B, boundary(B))
print("minimal freezing subset of the boundary:", sorted(B.points[i] for i in M))

# %% On tiny images every subset can be audited.
audit = cold_sets_audit(interval(0, 2))
print("minimal cold sets:    ", [sorted(s) for s in audit.minimal_cold_sets])
print("minimal freezing sets:", [sorted(s) for s in audit.minimal_freezing_sets])
