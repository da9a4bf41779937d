"""Digital homotopies, map-space search, and the rigidity/reducibility deciders.

Two continuous self-maps f, g are homotopic in one step exactly when
``f(x)`` and ``g(x)`` are equal or adjacent for every x.  A homotopy of
length m is a chain of m such steps, so the homotopy class of a map is its
connected component in the "one step" graph on continuous self-maps.

The deciders do not walk that graph.  Rigidity reduces to asking whether some
continuous f != id has ``f(x)`` adjacent-or-equal to x everywhere, and
reducibility to asking whether some continuous f with the same property
misses a point; both are single constraint searches.  The breadth-first
walk over map space is kept as an independent route for cross-checks and
for :func:`are_homotopic`.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Callable, Dict, Iterator, Optional, Tuple

from .lattice import DigitalImage, bits
from .maps import (BudgetExhausted, ImageMap, MapConstraints, SearchBudget, SearchOutcome,
                   SearchStats, Verdict, find_continuous_map, identity, is_continuous,
                   not_identity)


@dataclass(frozen=True)
class Homotopy:
    """Frames ``f_0, ..., f_m`` of a homotopy: continuous self-maps with
    consecutive frames pointwise adjacent-or-equal."""

    frames: Tuple[ImageMap, ...]

    def __post_init__(self):
        frames = tuple(self.frames)
        object.__setattr__(self, "frames", frames)
        if not frames:
            raise ValueError("a homotopy needs at least one frame")
        for f in frames:
            if not is_continuous(f):
                raise ValueError(f"homotopy frame {f} is not continuous")
        for f, g in zip(frames, frames[1:]):
            if not _pointwise_close(f, g):
                raise ValueError(f"frames {f} and {g} are not one step apart")

    @property
    def steps(self) -> int:
        return len(self.frames) - 1

    @property
    def start(self) -> ImageMap:
        return self.frames[0]

    @property
    def end(self) -> ImageMap:
        return self.frames[-1]

    def at(self, x: int, t: int) -> int:
        return self.frames[t].assignment[x]


def _pointwise_close(f: ImageMap, g: ImageMap) -> bool:
    closed = f.target.closed
    return all(closed[a] >> b & 1 for a, b in zip(f.assignment, g.assignment))


def _require_continuous_pair(f: ImageMap, g: ImageMap) -> None:
    if f.source != f.target or g.source != g.target or f.source != g.source:
        raise ValueError("expected self-maps of the same image")
    if not (is_continuous(f) and is_continuous(g)):
        raise ValueError("homotopies are defined between continuous maps")


def one_step_homotopic(f: ImageMap, g: ImageMap) -> bool:
    _require_continuous_pair(f, g)
    return _pointwise_close(f, g)


# ------------------------------------------------------------ map-space walk


def one_step_neighbors(X: DigitalImage, a: Tuple[int, ...], stats: SearchStats,
                       budget: SearchBudget) -> Iterator[Tuple[int, ...]]:
    """Continuous self-maps one homotopy step away from the map ``a``.

    Plain backtracking that checks each new value against already assigned
    neighbors; deliberately independent of the propagating solver.
    """
    n = len(X)
    closed = X.closed
    earlier = [tuple(q for q in bits(X.nbr[p]) if q < p) for p in range(n)]
    g = [0] * n

    def extend(p):
        if p == n:
            yield tuple(g)
            return
        for v in bits(closed[a[p]]):
            stats.nodes += 1
            if stats.nodes > budget.max_nodes:
                raise BudgetExhausted("nodes", budget.max_nodes)
            if all(closed[v] >> g[q] & 1 for q in earlier[p]):
                g[p] = v
                yield from extend(p + 1)

    yield from extend(0)


def map_space_bfs(start: ImageMap, budget: Optional[SearchBudget] = None,
                  stop: Optional[Callable[[Tuple[int, ...]], bool]] = None,
                  stats: Optional[SearchStats] = None):
    """Breadth-first search of the homotopy class of ``start``.

    Returns ``(hit, parents)``: ``hit`` is the first visited assignment
    satisfying ``stop`` (None if the component was exhausted) and
    ``parents`` maps every visited assignment to its BFS predecessor.
    Raises :class:`BudgetExhausted` when more than ``max_states`` maps are
    visited.
    """
    X = start.source
    budget = budget or SearchBudget()
    stats = stats if stats is not None else SearchStats()
    root = start.assignment
    parents: Dict[Tuple[int, ...], Optional[Tuple[int, ...]]] = {root: None}
    stats.states = 1
    if stop is not None and stop(root):
        return root, parents
    queue = deque([root])
    while queue:
        cur = queue.popleft()
        for nxt in one_step_neighbors(X, cur, stats, budget):
            if nxt in parents:
                continue
            parents[nxt] = cur
            stats.states += 1
            if stats.states > budget.max_states:
                raise BudgetExhausted("states", budget.max_states)
            if stop is not None and stop(nxt):
                return nxt, parents
            queue.append(nxt)
    return None, parents


def _trace(X: DigitalImage, parents, hit) -> Homotopy:
    chain = []
    while hit is not None:
        chain.append(ImageMap(X, X, hit))
        hit = parents[hit]
    return Homotopy(tuple(reversed(chain)))


def homotopy_component(f: ImageMap, budget: Optional[SearchBudget] = None) -> frozenset:
    """All assignments of maps homotopic to f (raises BudgetExhausted)."""
    _, parents = map_space_bfs(f, budget)
    return frozenset(parents)


def are_homotopic(f: ImageMap, g: ImageMap, budget: Optional[SearchBudget] = None) -> SearchOutcome:
    _require_continuous_pair(f, g)
    stats = SearchStats()
    target = g.assignment
    try:
        hit, parents = map_space_bfs(f, budget, stop=lambda a: a == target, stats=stats)
    except BudgetExhausted as exc:
        return SearchOutcome.unknown(exc, stats)
    if hit is None:
        return SearchOutcome(Verdict.FALSE, stats=stats)
    H = _trace(f.source, parents, hit)
    return SearchOutcome(Verdict.TRUE, witness=g, stats=stats, homotopy=H)


# ------------------------------------------------------------------ deciders


def one_map_constraints(X: DigitalImage, excluded: Optional[int] = None) -> MapConstraints:
    return MapConstraints(domains={p: X.closed[p] for p in range(len(X))},
                          excluded_image_point=excluded)


def is_rigid(X: DigitalImage, budget: Optional[SearchBudget] = None) -> SearchOutcome:
    """TRUE iff the identity is the only continuous 1-map of X.

    When X is not rigid the witness is the lexicographically least
    non-identity 1-map, and ``homotopy`` is the one-step homotopy to it.
    """
    out = find_continuous_map(X, X, one_map_constraints(X), budget, predicate=not_identity)
    if out.verdict is Verdict.UNKNOWN:
        return out
    if out.verdict is Verdict.TRUE:
        H = Homotopy((identity(X), out.witness))
        return SearchOutcome(Verdict.FALSE, witness=out.witness, stats=out.stats, homotopy=H)
    return SearchOutcome(Verdict.TRUE, stats=out.stats)


def is_reducible(X: DigitalImage, budget: Optional[SearchBudget] = None) -> SearchOutcome:
    """TRUE iff the identity is one step from a nonsurjective continuous map.

    Tries each missing point in index order; the witness is the first map
    found (least missing point, then lexicographically least map).
    """
    stats = SearchStats()
    for y in range(len(X)):
        out = find_continuous_map(X, X, one_map_constraints(X, excluded=y), budget, stats=stats)
        if out.verdict is Verdict.UNKNOWN:
            return out
        if out.verdict is Verdict.TRUE:
            H = Homotopy((identity(X), out.witness))
            return SearchOutcome(Verdict.TRUE, witness=out.witness, stats=stats, homotopy=H)
    return SearchOutcome(Verdict.FALSE, stats=stats)


def is_rigid_bfs(X: DigitalImage, budget: Optional[SearchBudget] = None) -> SearchOutcome:
    """Rigidity straight from the definition: the homotopy class of id is {id}."""
    stats = SearchStats()
    ident = tuple(range(len(X)))
    try:
        hit, parents = map_space_bfs(identity(X), budget, stop=lambda a: a != ident, stats=stats)
    except BudgetExhausted as exc:
        return SearchOutcome.unknown(exc, stats)
    if hit is None:
        return SearchOutcome(Verdict.TRUE, stats=stats)
    H = _trace(X, parents, hit)
    return SearchOutcome(Verdict.FALSE, witness=H.end, stats=stats, homotopy=H)


def is_reducible_bfs(X: DigitalImage, budget: Optional[SearchBudget] = None) -> SearchOutcome:
    """Reducibility as "id is homotopic to a nonsurjective map", by BFS."""
    stats = SearchStats()
    n = len(X)
    try:
        hit, parents = map_space_bfs(identity(X), budget, stop=lambda a: len(set(a)) < n,
                                     stats=stats)
    except BudgetExhausted as exc:
        return SearchOutcome.unknown(exc, stats)
    if hit is None:
        return SearchOutcome(Verdict.FALSE, stats=stats)
    H = _trace(X, parents, hit)
    return SearchOutcome(Verdict.TRUE, witness=H.end, stats=stats, homotopy=H)
