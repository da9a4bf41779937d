"""Lattice points, adjacency relations and finite digital images.

A digital image is a finite set of points of ``Z^n`` together with an
adjacency relation, i.e. a graph whose vertices are lattice points.  Points
are stored in strict lexicographic order and everything else (neighbor
tables, maps, witnesses, documents) refers to points by their index in that
order.

Neighbor tables are Python integers used as bitsets: bit ``q`` of
``X.nbr[p]`` is set when points ``p`` and ``q`` are adjacent.
"""
from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, Sequence, Tuple, Union

Point = Tuple[int, ...]


class Unreachable(enum.Enum):
    """Tag returned by distance queries between different components."""

    UNREACHABLE = "unreachable"

    def __repr__(self) -> str:
        return "UNREACHABLE"


UNREACHABLE = Unreachable.UNREACHABLE


@dataclass(frozen=True)
class CU:
    """The c_u adjacency of ``Z^n``: distinct points whose differing
    coordinates all differ by exactly 1, with at most ``u`` such coordinates."""

    u: int


@dataclass(frozen=True)
class NP:
    """Normal product adjacency NP_u over the retained factor images."""

    u: int
    factors: Tuple["DigitalImage", ...]


@dataclass(frozen=True)
class Explicit:
    """An arbitrary symmetric adjacency given as unordered index pairs."""

    edges: frozenset

    def __init__(self, edges: Iterable[Tuple[int, int]]):
        norm = frozenset((min(p, q), max(p, q)) for p, q in edges)
        object.__setattr__(self, "edges", norm)


AdjacencySpec = Union[CU, NP, Explicit]


def bits(mask: int) -> Iterator[int]:
    """Yield the indices of the set bits of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(indices: Iterable[int]) -> int:
    m = 0
    for i in indices:
        m |= 1 << i
    return m


def cu_adjacent(x: Sequence[int], y: Sequence[int], u: int) -> bool:
    differing = 0
    for a, b in zip(x, y):
        d = a - b
        if d == 0:
            continue
        if d != 1 and d != -1:
            return False
        differing += 1
    return 1 <= differing <= u


class DigitalImage:
    """A finite digital image ``(X, kappa)``.

    Use :func:`build_image` (or the constructors in :mod:`digitop.constructors`)
    rather than calling this class directly.  Instances are immutable.
    """

    __slots__ = ("dimension", "points", "adjacency", "nbr", "closed", "_index", "__dict__")

    def __init__(self, dimension: int, points: Tuple[Point, ...], adjacency: AdjacencySpec,
                 nbr: Tuple[int, ...]):
        self.dimension = dimension
        self.points = points
        self.adjacency = adjacency
        self.nbr = nbr
        self.closed = tuple(m | (1 << i) for i, m in enumerate(nbr))
        self._index = {p: i for i, p in enumerate(points)}

    def __len__(self) -> int:
        return len(self.points)

    def __contains__(self, point) -> bool:
        return tuple(point) in self._index

    def __repr__(self) -> str:
        return f"DigitalImage(n={self.dimension}, #X={len(self)}, adjacency={_spec_name(self.adjacency)})"

    def __eq__(self, other) -> bool:
        if not isinstance(other, DigitalImage):
            return NotImplemented
        return self.points == other.points and self.nbr == other.nbr

    def __hash__(self) -> int:
        return hash((self.points, self.nbr))

    def index(self, point: Sequence[int]) -> int:
        try:
            return self._index[tuple(point)]
        except KeyError:
            raise KeyError(f"point {tuple(point)} is not in the image") from None

    def check_index(self, p: int) -> None:
        if not 0 <= p < len(self.points):
            raise IndexError(f"point index {p} out of range for image of {len(self.points)} points")

    def neighbors(self, p: int) -> frozenset:
        self.check_index(p)
        return frozenset(bits(self.nbr[p]))

    def degree(self, p: int) -> int:
        return bin(self.nbr[p]).count("1")

    def edges(self) -> list:
        """All adjacent index pairs ``(p, q)`` with ``p < q``, sorted."""
        return [(p, q) for p in range(len(self)) for q in bits(self.nbr[p] >> (p + 1) << (p + 1))]

    @cached_property
    def distances(self) -> Tuple[Tuple[Union[int, Unreachable], ...], ...]:
        """All-pairs geodesic distances (BFS from every point)."""
        return tuple(tuple(_bfs_distances(self, p)) for p in range(len(self)))


def _spec_name(spec: AdjacencySpec) -> str:
    if isinstance(spec, CU):
        return f"c_{spec.u}"
    if isinstance(spec, NP):
        return f"NP_{spec.u}"
    return "explicit"


def _bfs_distances(X: DigitalImage, src: int) -> list:
    dist: list = [UNREACHABLE] * len(X)
    dist[src] = 0
    frontier = 1 << src
    seen = frontier
    d = 0
    while frontier:
        d += 1
        nxt = 0
        for p in bits(frontier):
            nxt |= X.nbr[p]
        nxt &= ~seen
        for q in bits(nxt):
            dist[q] = d
        seen |= nxt
        frontier = nxt
    return dist


def _split(point: Point, dims: Sequence[int]) -> list:
    out, start = [], 0
    for d in dims:
        out.append(point[start:start + d])
        start += d
    return out


def _np_adjacent(blocks_x, blocks_y, factors, u: int) -> bool:
    adjacent_blocks = 0
    for bx, by, F in zip(blocks_x, blocks_y, factors):
        if bx == by:
            continue
        if not F.nbr[F.index(bx)] >> F.index(by) & 1:
            return False
        adjacent_blocks += 1
    return 1 <= adjacent_blocks <= u


def build_image(points: Iterable[Sequence[int]], spec: AdjacencySpec) -> DigitalImage:
    """Build a digital image from a point set and an adjacency spec.

    Points are put into strict lexicographic order.  For :class:`Explicit`
    specs the edge indices refer to that canonical order.
    """
    pts = [tuple(int(c) for c in p) for p in points]
    if not pts:
        raise ValueError("a digital image needs at least one point")
    n = len(pts[0])
    if n < 1:
        raise ValueError("points must have at least one coordinate")
    if any(len(p) != n for p in pts):
        raise ValueError("all points must have the same dimension")
    canon = tuple(sorted(set(pts)))
    if len(canon) != len(pts):
        raise ValueError("duplicate points")
    N = len(canon)
    nbr = [0] * N

    if isinstance(spec, CU):
        if not 1 <= spec.u <= n:
            raise ValueError(f"c_u adjacency needs 1 <= u <= {n}, got u={spec.u}")
        index = {p: i for i, p in enumerate(canon)}
        offsets = [o for o in itertools.product((-1, 0, 1), repeat=n)
                   if 1 <= sum(1 for c in o if c) <= spec.u]
        if len(offsets) <= N:
            for i, p in enumerate(canon):
                for o in offsets:
                    j = index.get(tuple(a + b for a, b in zip(p, o)))
                    if j is not None:
                        nbr[i] |= 1 << j
        else:
            for i, j in itertools.combinations(range(N), 2):
                if cu_adjacent(canon[i], canon[j], spec.u):
                    nbr[i] |= 1 << j
                    nbr[j] |= 1 << i
    elif isinstance(spec, NP):
        factors = tuple(spec.factors)
        if not factors:
            raise ValueError("NP adjacency needs at least one factor")
        if not 1 <= spec.u <= len(factors):
            raise ValueError(f"NP_u adjacency needs 1 <= u <= {len(factors)}, got u={spec.u}")
        dims = [F.dimension for F in factors]
        if sum(dims) != n:
            raise ValueError("point dimension does not match the factor dimensions")
        blocks = [_split(p, dims) for p in canon]
        for b in blocks:
            for blk, F in zip(b, factors):
                if blk not in F:
                    raise ValueError(f"point block {blk} is not a point of its factor")
        for i, j in itertools.combinations(range(N), 2):
            if _np_adjacent(blocks[i], blocks[j], factors, spec.u):
                nbr[i] |= 1 << j
                nbr[j] |= 1 << i
        spec = NP(spec.u, factors)
    elif isinstance(spec, Explicit):
        for p, q in spec.edges:
            if not (0 <= p < N and 0 <= q < N) or p == q:
                raise ValueError(f"invalid explicit edge ({p}, {q})")
            nbr[p] |= 1 << q
            nbr[q] |= 1 << p
    else:
        raise TypeError(f"unknown adjacency spec {spec!r}")
    return DigitalImage(n, canon, spec, tuple(nbr))


def adjacent(X: DigitalImage, p: int, q: int) -> bool:
    X.check_index(p)
    X.check_index(q)
    return bool(X.nbr[p] >> q & 1)


def closed_neighborhood(X: DigitalImage, p: int) -> frozenset:
    X.check_index(p)
    return frozenset(bits(X.closed[p]))


def components(X: DigitalImage) -> list:
    """Connected components as sorted index lists, ordered by least index."""
    left = (1 << len(X)) - 1
    comps = []
    while left:
        start = left & -left
        seen = frontier = start
        while frontier:
            nxt = 0
            for p in bits(frontier):
                nxt |= X.nbr[p]
            frontier = nxt & ~seen
            seen |= frontier
        comps.append(list(bits(seen)))
        left &= ~seen
    return comps


def is_connected(X: DigitalImage) -> bool:
    return len(components(X)) == 1


def is_connected_subset(X: DigitalImage, mask: int) -> bool:
    """Whether the points in ``mask`` induce a connected subgraph of X."""
    if not mask:
        return True
    seen = frontier = mask & -mask
    while frontier:
        nxt = 0
        for p in bits(frontier):
            nxt |= X.nbr[p]
        frontier = nxt & mask & ~seen
        seen |= frontier
    return seen == mask


def geodesic_distance(X: DigitalImage, p: int, q: int) -> Union[int, Unreachable]:
    X.check_index(p)
    X.check_index(q)
    return X.distances[p][q]


def unique_shortest_path(X: DigitalImage, p: int, q: int):
    """The shortest path from p to q as a tuple of indices if it is unique,
    otherwise None (no path, or at least two shortest paths)."""
    X.check_index(p)
    X.check_index(q)
    dist = X.distances[p]
    if dist[q] is UNREACHABLE:
        return None
    # number of shortest paths from p, saturated at 2
    count = [0] * len(X)
    count[p] = 1
    order = sorted((d, i) for i, d in enumerate(dist) if d is not UNREACHABLE)
    for d, i in order:
        if i == p:
            continue
        c = sum(count[j] for j in bits(X.nbr[i]) if dist[j] is not UNREACHABLE and dist[j] == d - 1)
        count[i] = min(c, 2)
    if count[q] != 1:
        return None
    path = [q]
    cur = q
    while cur != p:
        cur = next(j for j in bits(X.nbr[cur])
                   if dist[j] is not UNREACHABLE and dist[j] == dist[cur] - 1 and count[j])
        path.append(cur)
    return tuple(reversed(path))


def boundary(X: DigitalImage) -> frozenset:
    """Indices of points having a c_1-neighbor in the complement of X."""
    out = set()
    for i, p in enumerate(X.points):
        for axis in range(X.dimension):
            for step in (-1, 1):
                y = p[:axis] + (p[axis] + step,) + p[axis + 1:]
                if y not in X:
                    out.add(i)
    return frozenset(out)


def is_simple_closed_curve(X: DigitalImage):
    """Return ``(True, order)`` if X is a simple closed curve, else ``(False, None)``.

    The size-3 case (a mutually adjacent triple) is accepted; callers who want
    the conventional minimum of 4 points check ``len(order) >= 4``.  The order
    starts at the least point and proceeds toward its lesser neighbor.
    """
    N = len(X)
    if N < 3 or any(X.degree(p) != 2 for p in range(N)):
        return False, None
    order = [0]
    prev, cur = 0, min(X.neighbors(0))
    while cur != 0:
        order.append(cur)
        a, b = X.neighbors(cur)
        prev, cur = cur, (b if a == prev else a)
    if len(order) != N:
        return False, None
    return True, tuple(order)
