"""Brute-force reference computations, independent of the search code.

These work directly from the definitions on tiny images: every function is
enumerated, every subset inspected, every path listed.
"""
import itertools
from collections import deque


def edge_set(X):
    return {frozenset((p, q)) for p in range(len(X)) for q in range(len(X))
            if p != q and q in X.neighbors(p)}


def close(X, a, b):
    return a == b or b in X.neighbors(a)


def all_functions(X):
    return itertools.product(range(len(X)), repeat=len(X))


def continuous_by_adjacency(X, f):
    return all(close(X, f[p], f[q]) for p in range(len(X)) for q in X.neighbors(p))


def connected_subset(X, S):
    S = set(S)
    if not S:
        return True
    start = next(iter(S))
    seen, todo = {start}, [start]
    while todo:
        p = todo.pop()
        for q in X.neighbors(p):
            if q in S and q not in seen:
                seen.add(q)
                todo.append(q)
    return seen == S


def continuous_by_connectedness(X, f):
    """Continuity as "connected subsets have connected images"."""
    n = len(X)
    for k in range(1, n + 1):
        for S in itertools.combinations(range(n), k):
            if connected_subset(X, S) and not connected_subset(X, {f[p] for p in S}):
                return False
    return True


def brute_continuous_maps(X):
    return [f for f in all_functions(X) if continuous_by_adjacency(X, f)]


def bfs_dist(X, p):
    dist = {p: 0}
    q = deque([p])
    while q:
        a = q.popleft()
        for b in X.neighbors(a):
            if b not in dist:
                dist[b] = dist[a] + 1
                q.append(b)
    return dist


def shortest_paths(X, p, q):
    """Every stutter-free path of minimum length from p to q (by listing)."""
    d = bfs_dist(X, p).get(q)
    if d is None:
        return []
    out = []

    def walk(path):
        if len(path) == d + 1:
            if path[-1] == q:
                out.append(tuple(path))
            return
        for b in sorted(X.neighbors(path[-1])):
            if b not in path:
                walk(path + [b])

    walk([p])
    return out


def lattice_boundary(X):
    pts = set(X.points)
    out = set()
    for i, p in enumerate(X.points):
        for axis in range(X.dimension):
            for s in (-1, 1):
                y = list(p)
                y[axis] += s
                if tuple(y) not in pts:
                    out.add(i)
    return out


def classify_subsets(X, s=1):
    """(cold subsets, freezing subsets) from the full list of continuous maps."""
    maps = brute_continuous_maps(X)
    n = len(X)
    ident = tuple(range(n))
    dist = [bfs_dist(X, p) for p in range(n)]
    cold, freezing = set(), set()
    for k in range(n + 1):
        for A in itertools.combinations(range(n), k):
            fixing = [f for f in maps if all(f[a] == a for a in A)]
            if all(f == ident for f in fixing):
                freezing.add(frozenset(A))
            if all(dist[x].get(f[x], float("inf")) <= s for f in fixing for x in range(n)):
                cold.add(frozenset(A))
    return cold, freezing


def minimal_sets(family):
    return {A for A in family if not any(B < A for B in family)}


def lattice_adjacent(p, q, u):
    """c_u adjacency straight from coordinates."""
    diff = [abs(a - b) for a, b in zip(p, q)]
    return all(d <= 1 for d in diff) and 1 <= sum(diff) <= u


def brute_maps_on_points(points, u):
    """Every continuous self-map as a dict, found without any library adjacency."""
    pts = sorted(points)
    adj = {(p, q) for p in pts for q in pts if lattice_adjacent(p, q, u)}
    out = []
    for img in itertools.product(pts, repeat=len(pts)):
        f = dict(zip(pts, img))
        if all(f[p] == f[q] or (f[p], f[q]) in adj for p, q in adj):
            out.append(f)
    return out
