"""Standard images: intervals, boxes, normal products, wedges, lattice symmetries."""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Optional, Sequence, Tuple

from .lattice import CU, NP, DigitalImage, Explicit, boundary, build_image, cu_adjacent


def interval(a: int, b: int) -> DigitalImage:
    """The digital interval ``[a, b]_Z`` with c_1 adjacency."""
    if a > b:
        raise ValueError(f"empty interval [{a}, {b}]")
    return build_image([(z,) for z in range(a, b + 1)], CU(1))


def box(axis_intervals: Sequence[Tuple[int, int]], u: int) -> DigitalImage:
    """The product of digital intervals ``prod [a_i, b_i]_Z`` with c_u adjacency."""
    ranges = []
    for a, b in axis_intervals:
        if a > b:
            raise ValueError(f"empty interval [{a}, {b}]")
        ranges.append(range(a, b + 1))
    if not ranges:
        raise ValueError("a box needs at least one axis")
    return build_image(itertools.product(*ranges), CU(u))


def product(factors: Sequence[DigitalImage], u: int) -> DigitalImage:
    """Cartesian product of images with the normal product adjacency NP_u.

    Coordinates of the factors are concatenated, so the result lives in
    ``Z^(n_1 + ... + n_v)``.  The factor images are kept on the adjacency
    spec for factor-wise reasoning.
    """
    factors = tuple(factors)
    if not factors:
        raise ValueError("product needs at least one factor")
    if not 1 <= u <= len(factors):
        raise ValueError(f"NP_u needs 1 <= u <= {len(factors)}, got u={u}")
    pts = [sum(combo, ()) for combo in itertools.product(*(F.points for F in factors))]
    return build_image(pts, NP(u, factors))


def wedge(X: DigitalImage, Y: DigitalImage) -> Tuple[DigitalImage, int]:
    """Validate the union of two embedded images as a wedge ``X v Y``.

    Returns the union image and the index of the wedge point in it.  Both
    images must share the dimension and the adjacency family (the same c_u,
    or both explicit); the union is checked for a single common point and
    for the absence of any adjacency between ``X - {x0}`` and ``Y - {x0}``.
    """
    if X.dimension != Y.dimension:
        raise ValueError("wedge operands have different dimensions")
    common = set(X.points) & set(Y.points)
    if len(common) != 1:
        raise ValueError(f"wedge operands must meet in exactly one point, they share {len(common)}")
    (x0,) = common
    union = sorted(set(X.points) | set(Y.points))

    if isinstance(X.adjacency, CU) and isinstance(Y.adjacency, CU):
        if X.adjacency.u != Y.adjacency.u:
            raise ValueError("wedge operands use different c_u adjacencies")
        u = X.adjacency.u
        for x in X.points:
            if x == x0:
                continue
            for y in Y.points:
                if y != x0 and cu_adjacent(x, y, u):
                    raise ValueError(f"forbidden cross adjacency between {x} and {y}")
        W = build_image(union, CU(u))
    elif isinstance(X.adjacency, Explicit) and isinstance(Y.adjacency, Explicit):
        idx = {p: i for i, p in enumerate(union)}
        edges = [(idx[X.points[p]], idx[X.points[q]]) for p, q in X.edges()]
        edges += [(idx[Y.points[p]], idx[Y.points[q]]) for p, q in Y.edges()]
        W = build_image(union, Explicit(edges))
    else:
        raise ValueError("wedge operands must both be c_u images with the same u, or both explicit")
    return W, W.index(x0)


@dataclass(frozen=True)
class Translation:
    offset: Tuple[int, ...]

    def apply(self, p):
        return tuple(a + b for a, b in zip(p, self.offset))

    @property
    def dimension(self):
        return len(self.offset)


@dataclass(frozen=True)
class AxisPermutation:
    """Coordinate permutation: new coordinate ``i`` is old coordinate ``perm[i]``."""

    perm: Tuple[int, ...]

    def apply(self, p):
        return tuple(p[j] for j in self.perm)

    @property
    def dimension(self):
        return len(self.perm)


@dataclass(frozen=True)
class Reflection:
    """Negate the coordinates listed in ``axes`` (reflection about 0)."""

    dimension: int
    axes: Tuple[int, ...]

    def apply(self, p):
        return tuple(-c if i in self.axes else c for i, c in enumerate(p))


def lattice_symmetry(X: DigitalImage, transform):
    """Apply a lattice symmetry and return ``(Y, F)`` with ``F: X -> Y`` the
    induced bijection.

    c_u adjacency is invariant under translations, axis permutations and
    reflections, so c_u images are rebuilt with the same spec.  Other
    adjacencies are carried over as explicit edges.
    """
    from .maps import ImageMap

    if transform.dimension != X.dimension:
        raise ValueError("transform dimension does not match the image")
    if isinstance(transform, AxisPermutation) and sorted(transform.perm) != list(range(X.dimension)):
        raise ValueError(f"{transform.perm} is not a permutation of the axes")
    moved = [transform.apply(p) for p in X.points]
    if isinstance(X.adjacency, CU):
        Y = build_image(moved, X.adjacency)
    else:
        order = sorted(range(len(moved)), key=lambda i: moved[i])
        new_index = {old: new for new, old in enumerate(order)}
        Y = build_image(moved, Explicit((new_index[p], new_index[q]) for p, q in X.edges()))
    F = ImageMap(X, Y, tuple(Y.index(q) for q in moved))
    return Y, F


def ring(width: int, height: int, u: int = 1) -> DigitalImage:
    """Boundary of the box ``[0, width-1] x [0, height-1]``."""
    B = box([(0, width - 1), (0, height - 1)], 1)
    return build_image([B.points[i] for i in sorted(boundary(B))], CU(u))


def cycle_graph(n: int) -> DigitalImage:
    """An abstract n-cycle on the points ``(0,), ..., (n-1,)`` with explicit edges."""
    if n < 3:
        raise ValueError("a cycle needs at least 3 points")
    return build_image([(i,) for i in range(n)], Explicit((i, (i + 1) % n) for i in range(n)))


# Lattice realizations of simple closed curves, found by exhaustive search in
# small windows of Z^2.  No 5-point curve exists there, so size 5 (and any size
# not listed) falls back to an explicit cycle.
_CURVES = {
    4: ([(0, 0), (0, 1), (1, 1), (1, 0)], 1),
    6: ([(0, 1), (0, 2), (1, 3), (2, 2), (2, 1), (1, 0)], 2),
    7: ([(0, 1), (0, 2), (1, 3), (2, 2), (3, 1), (2, 0), (1, 0)], 2),
    8: ([(0, 0), (0, 1), (0, 2), (1, 2), (2, 2), (2, 1), (2, 0), (1, 0)], 1),
    9: ([(0, 1), (0, 2), (0, 3), (1, 4), (2, 3), (2, 2), (3, 1), (2, 0), (1, 0)], 2),
    10: ([(0, 0), (0, 1), (0, 2), (0, 3), (1, 3), (2, 3), (2, 2), (2, 1), (2, 0), (1, 0)], 1),
}


def simple_closed_curve(n: int) -> DigitalImage:
    """A simple closed curve with ``n`` points, embedded in Z^2 when possible."""
    if n in _CURVES:
        pts, u = _CURVES[n]
        return build_image(pts, CU(u))
    return cycle_graph(n)


def find_wedge_embedding(X: DigitalImage, Y: DigitalImage, at: Optional[Sequence[int]] = None):
    """Translate Y so that it forms a valid wedge with X.

    Candidate translations glue a point of Y onto a point of X (onto ``at``
    when given), tried in lexicographic order of (X point, Y point).  Returns
    ``(W, wedge_index, Y_translated)`` for the first valid wedge, or None.
    """
    targets = [tuple(at)] if at is not None else list(X.points)
    for x in targets:
        for y in Y.points:
            offset = tuple(a - b for a, b in zip(x, y))
            Yt, _ = lattice_symmetry(Y, Translation(offset))
            try:
                W, w = wedge(X, Yt)
            except ValueError:
                continue
            return W, w, Yt
    return None
