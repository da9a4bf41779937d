"""Continuous maps between digital images and the search engine over them.

A map is continuous exactly when it sends adjacent points to adjacent-or-equal
points, which makes "find a continuous self-map with properties P" a binary
constraint satisfaction problem: one variable per source point, a domain of
candidate target points, and one constraint per source edge.  The solver here
keeps domains as bitsets, maintains arc consistency after every assignment and
branches on points in index order with values ascending, so solutions come out
in lexicographic order of their assignment tuples.
"""
from __future__ import annotations

import enum
from collections import deque
from dataclasses import dataclass, field
from typing import Callable, Dict, Iterable, Iterator, Mapping, Optional, Tuple, Union

from .lattice import UNREACHABLE, DigitalImage, Unreachable, bits, mask_of


@dataclass(frozen=True, eq=False)
class ImageMap:
    """A total function ``source -> target`` stored as target indices."""

    source: DigitalImage
    target: DigitalImage
    assignment: Tuple[int, ...]

    def __post_init__(self):
        a = tuple(int(v) for v in self.assignment)
        object.__setattr__(self, "assignment", a)
        if len(a) != len(self.source):
            raise ValueError(f"map assigns {len(a)} values for {len(self.source)} source points")
        if any(not 0 <= v < len(self.target) for v in a):
            raise ValueError("map assignment refers to a point outside the target")

    def __call__(self, p: int) -> int:
        return self.assignment[p]

    def __len__(self) -> int:
        return len(self.assignment)

    def __eq__(self, other):
        if not isinstance(other, ImageMap):
            return NotImplemented
        return (self.assignment == other.assignment and self.source == other.source
                and self.target == other.target)

    def __hash__(self):
        return hash(self.assignment)

    def __repr__(self):
        return f"ImageMap{self.assignment}"

    def image(self) -> frozenset:
        return frozenset(self.assignment)

    def as_points(self) -> Dict[tuple, tuple]:
        return {self.source.points[p]: self.target.points[q] for p, q in enumerate(self.assignment)}


def identity(X: DigitalImage) -> ImageMap:
    return ImageMap(X, X, tuple(range(len(X))))


def constant(X: DigitalImage, p: int, target: Optional[DigitalImage] = None) -> ImageMap:
    return ImageMap(X, target if target is not None else X, (p,) * len(X))


def is_continuous(f: ImageMap) -> bool:
    closed = f.target.closed
    a = f.assignment
    return all(closed[a[p]] >> a[q] & 1 for p, q in f.source.edges())


def compose(g: ImageMap, f: ImageMap) -> ImageMap:
    """``g o f``: apply f, then g."""
    if f.target != g.source:
        raise ValueError("cannot compose: target of f is not the source of g")
    return ImageMap(f.source, g.target, tuple(g.assignment[v] for v in f.assignment))


def is_isomorphism(f: ImageMap) -> bool:
    """Bijective, continuous, with continuous inverse."""
    if len(f.source) != len(f.target) or len(f.image()) != len(f.source):
        return False
    a = f.assignment
    S, T = f.source, f.target
    for p in range(len(S)):
        image_nbrs = mask_of(a[q] for q in bits(S.nbr[p]))
        if image_nbrs != T.nbr[a[p]]:
            return False
    return True


@dataclass(frozen=True)
class MapProfile:
    fixed_points: frozenset
    surjective: bool
    injective: bool
    retraction: bool
    max_displacement: Union[int, Unreachable]


def _require_self_map(f: ImageMap) -> None:
    if f.source != f.target:
        raise ValueError("expected a self-map (source == target)")


def displacement(f: ImageMap, p: int):
    return f.source.distances[p][f.assignment[p]]


def map_profile(f: ImageMap) -> MapProfile:
    _require_self_map(f)
    a = f.assignment
    img = f.image()
    disp = [displacement(f, p) for p in range(len(a))]
    max_disp = UNREACHABLE if UNREACHABLE in disp else max(disp)
    return MapProfile(
        fixed_points=frozenset(p for p, v in enumerate(a) if p == v),
        surjective=len(img) == len(a),
        injective=len(img) == len(a),
        retraction=all(a[y] == y for y in img),
        max_displacement=max_disp,
    )


def is_n_map(f: ImageMap, n: int) -> bool:
    """Whether every point moves to within geodesic distance ``n``."""
    _require_self_map(f)
    if not is_continuous(f):
        raise ValueError("n-maps are defined for continuous maps only")
    for p in range(len(f)):
        d = displacement(f, p)
        if d is UNREACHABLE or d > n:
            return False
    return True


# --------------------------------------------------------------------- search


class Verdict(enum.Enum):
    TRUE = "true"
    FALSE = "false"
    UNKNOWN = "unknown"

    @classmethod
    def of(cls, flag: bool) -> "Verdict":
        return cls.TRUE if flag else cls.FALSE


class Mode(enum.Enum):
    FIRST_WITNESS = "first_witness"
    EXHAUSTIVE = "exhaustive"


@dataclass(frozen=True)
class SearchBudget:
    max_nodes: int = 10**7
    max_states: int = 10**6

    def __post_init__(self):
        if self.max_nodes < 1 or self.max_states < 1:
            raise ValueError("search budgets must be positive")


@dataclass
class SearchStats:
    nodes: int = 0
    states: int = 0

    def as_dict(self):
        return {"nodes": self.nodes, "states": self.states}


class BudgetExhausted(Exception):
    def __init__(self, kind: str, limit: int):
        super().__init__(f"{kind} budget of {limit} exhausted")
        self.kind = kind
        self.limit = limit


@dataclass(frozen=True)
class SearchOutcome:
    verdict: Verdict
    witness: Optional[ImageMap] = None
    stats: SearchStats = field(default_factory=SearchStats)
    homotopy: Optional[object] = None
    solutions: Tuple[ImageMap, ...] = ()
    exhausted: Optional[BudgetExhausted] = None

    @classmethod
    def unknown(cls, exc: BudgetExhausted, stats: SearchStats) -> "SearchOutcome":
        return cls(Verdict.UNKNOWN, stats=stats, exhausted=exc)


@dataclass(frozen=True)
class MapConstraints:
    """Restrictions on the maps a search may return.

    ``pinned`` maps source indices to required target indices, ``domains``
    optionally restricts the candidates for individual source points, and
    ``excluded_image_point`` must not be hit by the map at all.
    """

    pinned: Mapping[int, int] = field(default_factory=dict)
    domains: Optional[Mapping[int, Iterable[int]]] = None
    excluded_image_point: Optional[int] = None

    @classmethod
    def fixing(cls, points: Iterable[int], **kw) -> "MapConstraints":
        return cls(pinned={p: p for p in points}, **kw)


def initial_domains(source: DigitalImage, target: DigitalImage,
                    constraints: Optional[MapConstraints]) -> list:
    full = (1 << len(target)) - 1
    dom = [full] * len(source)
    if constraints is None:
        return dom
    if constraints.domains is not None:
        for p, cands in constraints.domains.items():
            source.check_index(p)
            m = cands if isinstance(cands, int) else mask_of(cands)
            dom[p] = m & full
    for p, v in constraints.pinned.items():
        source.check_index(p)
        target.check_index(v)
        if not dom[p] >> v & 1:
            raise ValueError(f"pin {p} -> {v} lies outside the domain of {p}")
        dom[p] = 1 << v
    x = constraints.excluded_image_point
    if x is not None:
        target.check_index(x)
        if any(v == x for v in constraints.pinned.values()):
            raise ValueError(f"a pin maps onto the excluded image point {x}")
        dom = [d & ~(1 << x) for d in dom]
    return dom


class _Solver:
    def __init__(self, source: DigitalImage, target: DigitalImage, domains: list,
                 budget: SearchBudget, stats: SearchStats):
        self.n = len(source)
        self.adj = [tuple(bits(m)) for m in source.nbr]
        self.closed = target.closed
        self.domains = domains
        self.budget = budget
        self.stats = stats
        self._support: Dict[int, int] = {}

    def support(self, mask: int) -> int:
        # target points adjacent-or-equal to some member of mask
        s = self._support.get(mask)
        if s is None:
            s = 0
            for a in bits(mask):
                s |= self.closed[a]
            self._support[mask] = s
        return s

    def propagate(self, dom: list, changed: Iterable[int]) -> bool:
        queue = deque(changed)
        queued = set(queue)
        while queue:
            p = queue.popleft()
            queued.discard(p)
            allowed = self.support(dom[p])
            for q in self.adj[p]:
                d = dom[q]
                nd = d & allowed
                if nd != d:
                    if not nd:
                        return False
                    dom[q] = nd
                    if q not in queued:
                        queue.append(q)
                        queued.add(q)
        return True

    def solutions(self) -> Iterator[Tuple[int, ...]]:
        dom = list(self.domains)
        if any(d == 0 for d in dom):
            return
        if not self.propagate(dom, range(self.n)):
            return
        yield from self._extend(dom, 0)

    def _extend(self, dom: list, var: int) -> Iterator[Tuple[int, ...]]:
        if var == self.n:
            yield tuple(d.bit_length() - 1 for d in dom)
            return
        d = dom[var]
        for a in bits(d):
            self.stats.nodes += 1
            if self.stats.nodes > self.budget.max_nodes:
                raise BudgetExhausted("nodes", self.budget.max_nodes)
            if d == 1 << a:
                yield from self._extend(dom, var + 1)
                continue
            nd = list(dom)
            nd[var] = 1 << a
            if self.propagate(nd, (var,)):
                yield from self._extend(nd, var + 1)


def iter_continuous_maps(source: DigitalImage, target: Optional[DigitalImage] = None,
                         constraints: Optional[MapConstraints] = None,
                         budget: Optional[SearchBudget] = None,
                         stats: Optional[SearchStats] = None) -> Iterator[ImageMap]:
    """Yield every continuous map satisfying ``constraints`` in lexicographic order.

    Raises :class:`BudgetExhausted` once ``budget.max_nodes`` branching
    decisions have been made.
    """
    target = source if target is None else target
    budget = budget or SearchBudget()
    stats = stats if stats is not None else SearchStats()
    dom = initial_domains(source, target, constraints)
    for a in _Solver(source, target, dom, budget, stats).solutions():
        yield ImageMap(source, target, a)


def find_continuous_map(source: DigitalImage, target: Optional[DigitalImage] = None,
                        constraints: Optional[MapConstraints] = None,
                        budget: Optional[SearchBudget] = None,
                        predicate: Optional[Callable[[ImageMap], bool]] = None,
                        stats: Optional[SearchStats] = None) -> SearchOutcome:
    """Lexicographically least continuous map meeting the constraints and predicate.

    TRUE with the map as witness, FALSE when none exists, UNKNOWN when the
    node budget runs out first.
    """
    stats = stats if stats is not None else SearchStats()
    try:
        for f in iter_continuous_maps(source, target, constraints, budget, stats):
            if predicate is None or predicate(f):
                return SearchOutcome(Verdict.TRUE, witness=f, stats=stats)
    except BudgetExhausted as exc:
        return SearchOutcome.unknown(exc, stats)
    return SearchOutcome(Verdict.FALSE, stats=stats)


def enumerate_continuous_self_maps(X: DigitalImage, constraints: Optional[MapConstraints] = None,
                                   budget: Optional[SearchBudget] = None,
                                   mode: Mode = Mode.EXHAUSTIVE,
                                   predicate: Optional[Callable[[ImageMap], bool]] = None) -> SearchOutcome:
    """Search continuous self-maps of X.

    In ``EXHAUSTIVE`` mode every solution passing ``predicate`` is collected
    in ``outcome.solutions`` (lexicographic order); the verdict says whether
    there was at least one.  In ``FIRST_WITNESS`` mode the search stops at the
    least qualifying solution.
    """
    if mode is Mode.FIRST_WITNESS:
        return find_continuous_map(X, X, constraints, budget, predicate)
    stats = SearchStats()
    found = []
    try:
        for f in iter_continuous_maps(X, X, constraints, budget, stats):
            if predicate is None or predicate(f):
                found.append(f)
    except BudgetExhausted as exc:
        return SearchOutcome.unknown(exc, stats)
    return SearchOutcome(Verdict.of(bool(found)), witness=found[0] if found else None,
                         stats=stats, solutions=tuple(found))


def not_identity(f: ImageMap) -> bool:
    return any(p != v for p, v in enumerate(f.assignment))
