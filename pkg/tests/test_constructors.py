import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import lattice_images
from oracles import edge_set
from digitop import (AxisPermutation, Reflection, Translation, box, find_wedge_embedding,
                     interval, is_connected, is_isomorphism, lattice_symmetry, product,
                     simple_closed_curve, wedge)


def test_interval():
    assert interval(0, 0).points == ((0,),)
    assert interval(0, 2).edges() == [(0, 1), (1, 2)]
    assert interval(-1, 1).points == ((-1,), (0,), (1,))
    with pytest.raises(ValueError):
        interval(2, 1)


@pytest.mark.parametrize("axes, u, npoints, nedges", [
    ([(0, 1), (0, 1)], 1, 4, 4),
    ([(0, 1), (0, 1)], 2, 4, 6),
    ([(0, 2), (0, 2)], 1, 9, 12),
])
def test_box(axes, u, npoints, nedges):
    B = box(axes, u)
    assert (len(B), len(B.edges())) == (npoints, nedges)


def test_box_errors():
    with pytest.raises(ValueError):
        box([(0, 1)], 2)
    with pytest.raises(ValueError):
        box([(1, 0)], 1)


@pytest.mark.parametrize("u", [1, 2])
def test_product_of_intervals_matches_box(u):
    I = interval(0, 1)
    assert edge_set(product([I, I], u)) == edge_set(box([(0, 1), (0, 1)], u))


@pytest.mark.parametrize("a, b", [(1, 2), (2, 2), (3, 1)])
@pytest.mark.parametrize("u", [1, 2])
def test_np_on_intervals_is_cu_on_boxes(a, b, u):
    assert edge_set(product([interval(0, a), interval(0, b)], u)) == edge_set(box([(0, a), (0, b)], u))


def test_product_with_singleton_is_isomorphic():
    X = simple_closed_curve(8)
    P = product([X, interval(0, 0)], 1)
    F = [P.index(p + (0,)) for p in X.points]
    assert sorted(F) == list(range(len(P)))
    assert {frozenset((F[p], F[q])) for p, q in X.edges()} == edge_set(P)


def test_product_monotone_in_u():
    f = [interval(0, 1), simple_closed_curve(4), interval(0, 2)]
    e = [edge_set(product(f, u)) for u in (1, 2, 3)]
    assert e[0] <= e[1] <= e[2]
    with pytest.raises(ValueError):
        product(f, 4)


def test_wedge_of_intervals():
    W, w = wedge(interval(0, 2), interval(2, 4))
    assert len(W) == 5 and W.points[w] == (2,)
    with pytest.raises(ValueError):
        wedge(interval(0, 2), interval(1, 3))
    with pytest.raises(ValueError):
        wedge(interval(0, 2), interval(4, 5))


def test_wedge_rejects_cross_adjacency():
    A = box([(0, 1), (0, 0)], 2)
    B = box([(1, 2), (0, 1)], 2)  # shares (1,0); (0,0)-(1,1) would be c_2-adjacent
    with pytest.raises(ValueError):
        wedge(A, B)
    with pytest.raises(ValueError):
        wedge(box([(0, 1), (0, 0)], 1), box([(1, 2), (0, 0)], 2))


def test_wedge_of_two_rings():
    R = simple_closed_curve(8)
    R2, _ = lattice_symmetry(R, Translation((2, 2)))
    W, w = wedge(R, R2)
    assert len(W) == 15 and W.points[w] == (2, 2)
    assert is_connected(W)


def test_find_wedge_embedding():
    W, w, Yt = find_wedge_embedding(simple_closed_curve(8), simple_closed_curve(10))
    assert len(W) == 8 + 10 - 1
    assert W.points[w] in Yt


def test_symmetries():
    B = box([(0, 2), (0, 2)], 1)
    Y, F = lattice_symmetry(B, Translation((5, 7)))
    assert Y.points == tuple((x + 5, y + 7) for x, y in B.points)
    assert F.assignment == tuple(range(9))
    Y, F = lattice_symmetry(interval(0, 2), Reflection(1, (0,)))
    assert Y.points == ((-2,), (-1,), (0,))
    assert F.assignment == (2, 1, 0)
    Y, F = lattice_symmetry(box([(0, 1), (0, 2)], 1), AxisPermutation((1, 0)))
    assert Y == box([(0, 2), (0, 1)], 1)
    with pytest.raises(ValueError):
        lattice_symmetry(B, Translation((1,)))


@st.composite
def transforms(draw, n):
    kind = draw(st.sampled_from(["t", "p", "r"]))
    if kind == "t":
        return Translation(tuple(draw(st.lists(st.integers(-5, 5), min_size=n, max_size=n))))
    if kind == "p":
        return AxisPermutation(tuple(draw(st.permutations(range(n)))))
    return Reflection(n, tuple(draw(st.sets(st.integers(0, n - 1)))))


@settings(max_examples=60, deadline=None)
@given(st.data())
def test_symmetry_is_isomorphism(data):
    X = data.draw(lattice_images(max_dim=3, max_points=10))
    Y, F = lattice_symmetry(X, data.draw(transforms(X.dimension)))
    assert is_isomorphism(F)


@settings(max_examples=40, deadline=None)
@given(lattice_images(max_points=6, connected=True), lattice_images(max_points=6, connected=True))
def test_wedge_size_and_connectivity(X, Y):
    if X.dimension != Y.dimension or X.adjacency != Y.adjacency:
        return
    found = find_wedge_embedding(X, Y)
    if found is None:
        return
    W, w, Yt = found
    assert len(W) == len(X) + len(Yt) - 1
    assert is_connected(W)
