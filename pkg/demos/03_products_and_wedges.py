# %% [markdown]
# Products, wedges and rigidity
#
# Gluing two rings at a single point yields a rigid image: no self-map other
# than the identity stays within one step of it.

# %%
import random

from digitop import (find_wedge_embedding, interval, is_freezing, is_reducible, is_rigid,
                     is_s_cold, product, render_text, simple_closed_curve)
from digitop.fixedpoint import sample_subsets
from digitop.theorems import verify_theorems

# %% A figure-eight made of two 8-point rings.
W, w, _ = find_wedge_embedding(simple_closed_curve(8), simple_closed_curve(8))
print(render_text(W))
print("wedge point:", W.points[w], " rigid:", is_rigid(W).verdict.value)

# %% On a rigid image, freezing and 1-cold coincide.  Spot check on random subsets.
rng = random.Random(1)
agree = sum(is_freezing(W, A).verdict is is_s_cold(W, A, 1).verdict
            for A in sample_subsets(W, 50, rng))
print(f"freezing and 1-cold agree on {agree}/50 sampled subsets")

# %% A product with a collapsible factor collapses too.
P = product([simple_closed_curve(8), interval(0, 1)], 2)
print(f"ring x segment: {len(P)} points, reducible:", is_reducible(P).verdict.value)

# %% The full claim suite over the generated corpus (takes a few seconds).
report = verify_theorems(seed=0)
for claim, counts in report.as_dict()["summary"].items():
    print(f"{claim:30s} {counts}")
for line in report.findings[:3]:
    print("finding:", line)
