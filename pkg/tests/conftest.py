import itertools
import os
import sys

import pytest
from hypothesis import strategies as st

sys.path.insert(0, os.path.dirname(__file__))

from digitop import CU, build_image  # noqa: E402


@st.composite
def lattice_images(draw, max_dim=2, side=3, min_points=1, max_points=8, connected=False):
    """Random subsets of ``[0, side)^n`` with a random c_u adjacency."""
    n = draw(st.integers(1, max_dim))
    u = draw(st.integers(1, n))
    cells = list(itertools.product(range(side), repeat=n))
    pts = draw(st.lists(st.sampled_from(cells), min_size=min_points,
                        max_size=min(max_points, len(cells)), unique=True))
    X = build_image(pts, CU(u))
    if connected:
        from digitop import components
        comp = components(X)[0]
        X = build_image([X.points[i] for i in comp], CU(u))
    return X


@pytest.fixture(scope="session")
def corpus():
    from digitop.theorems import build_corpus
    return build_corpus()


@pytest.fixture(scope="session")
def theorem_report(corpus):
    from digitop.theorems import verify_theorems
    return verify_theorems(seed=0, corpus=corpus)
