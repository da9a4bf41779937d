"""Freezing sets and s-cold sets.

A subset A of X is *freezing* when the only continuous self-map fixing A
pointwise is the identity, and *s-cold* when every continuous self-map fixing
A pointwise moves each point by geodesic distance at most s.  Both are
decided by searching for a violating map.
"""
from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from typing import Iterable, Optional, Tuple

from .lattice import UNREACHABLE, DigitalImage, bits, is_connected, mask_of
from .maps import (BudgetExhausted, MapConstraints, SearchBudget, SearchOutcome, SearchStats,
                   Verdict, find_continuous_map, map_profile, not_identity)

AUDIT_MAX_POINTS = 12


class PinRole(enum.Enum):
    FREEZING_CANDIDATE = "freezing"
    COLD_CANDIDATE = "cold"


@dataclass(frozen=True)
class PinSet:
    image: DigitalImage
    points: frozenset
    role: PinRole = PinRole.FREEZING_CANDIDATE
    s: Optional[int] = None

    def __post_init__(self):
        pts = frozenset(self.points)
        object.__setattr__(self, "points", pts)
        for p in pts:
            self.image.check_index(p)
        if self.role is PinRole.COLD_CANDIDATE and (self.s is None or self.s < 0):
            raise ValueError("cold candidates need a radius s >= 0")

    def verify(self, budget: Optional[SearchBudget] = None) -> SearchOutcome:
        if self.role is PinRole.FREEZING_CANDIDATE:
            return is_freezing(self.image, self.points, budget)
        return is_s_cold(self.image, self.points, self.s, budget)


def _pins(X: DigitalImage, A: Iterable[int]) -> frozenset:
    A = frozenset(A)
    for p in A:
        X.check_index(p)
    return A


def is_freezing(X: DigitalImage, A: Iterable[int], budget: Optional[SearchBudget] = None) -> SearchOutcome:
    """TRUE iff every continuous self-map fixing A is the identity.

    On FALSE the witness is the least non-identity map fixing A.
    """
    A = _pins(X, A)
    out = find_continuous_map(X, X, MapConstraints.fixing(A), budget, predicate=not_identity)
    if out.verdict is Verdict.UNKNOWN:
        return out
    if out.verdict is Verdict.TRUE:
        return SearchOutcome(Verdict.FALSE, witness=out.witness, stats=out.stats)
    return SearchOutcome(Verdict.TRUE, stats=out.stats)


def is_s_cold(X: DigitalImage, A: Iterable[int], s: int,
              budget: Optional[SearchBudget] = None) -> SearchOutcome:
    """TRUE iff every continuous self-map fixing A moves points at most s steps.

    The search for a violation is split by the violating point x: x's domain
    is cut down to the points farther than s from it.
    """
    if s < 0:
        raise ValueError("s must be a natural number")
    if not is_connected(X):
        raise ValueError("cold sets are defined for connected images")
    A = _pins(X, A)
    stats = SearchStats()
    for x in range(len(X)):
        if x in A:
            continue
        far = [q for q, d in enumerate(X.distances[x]) if d is UNREACHABLE or d > s]
        if not far:
            continue
        cons = MapConstraints(pinned={p: p for p in A}, domains={x: far})
        out = find_continuous_map(X, X, cons, budget, stats=stats)
        if out.verdict is Verdict.UNKNOWN:
            return out
        if out.verdict is Verdict.TRUE:
            return SearchOutcome(Verdict.FALSE, witness=out.witness, stats=stats)
    return SearchOutcome(Verdict.TRUE, stats=stats)


def minimize_freezing(X: DigitalImage, A: Iterable[int],
                      budget: Optional[SearchBudget] = None) -> frozenset:
    """Shrink a freezing set to a minimal one.

    Points are tried for removal in ascending order, starting over after each
    successful removal, so the result is one deterministic minimal freezing
    subset of A (not necessarily of least size).
    """
    current = set(_pins(X, A))
    first = is_freezing(X, current, budget)
    if first.verdict is Verdict.UNKNOWN:
        raise first.exhausted
    if first.verdict is Verdict.FALSE:
        raise ValueError("the starting set is not a freezing set")
    removed = True
    while removed:
        removed = False
        for p in sorted(current):
            out = is_freezing(X, current - {p}, budget)
            if out.verdict is Verdict.UNKNOWN:
                raise out.exhausted
            if out.verdict is Verdict.TRUE:
                current.discard(p)
                removed = True
                break
    return frozenset(current)


@dataclass(frozen=True)
class ColdSetAudit:
    """Classification of every subset of a small image."""

    minimal_cold_sets: Tuple[frozenset, ...]
    minimal_freezing_sets: Tuple[frozenset, ...]
    cold_count: int
    freezing_count: int
    s: int = 1

    @property
    def empty_set_freezing(self) -> bool:
        return frozenset() in self.minimal_freezing_sets


def _minimal(family) -> Tuple[frozenset, ...]:
    family = sorted(family, key=lambda m: (bin(m).count("1"), sorted(bits(m))))
    out = []
    for m in family:
        if not any(k & m == k for k in out):
            out.append(m)
    return tuple(frozenset(bits(m)) for m in out)


def cold_sets_audit(X: DigitalImage, budget: Optional[SearchBudget] = None, s: int = 1) -> ColdSetAudit:
    """Classify every subset of X as s-cold and/or freezing and report the
    minimal ones.

    Counterexample maps are cached: a map g fixing A and violating a property
    also fixes (and violates it for) every subset of ``Fix(g)``, so such
    subsets are classified without a new search.
    """
    n = len(X)
    if n > AUDIT_MAX_POINTS:
        raise ValueError(f"audit is limited to images of at most {AUDIT_MAX_POINTS} points")
    connected = is_connected(X)
    non_freezing_fix = []
    non_cold_fix = []
    freezing, cold = [], []
    for m in range(1 << n):
        A = list(bits(m))
        if any(m & f == m for f in non_freezing_fix):
            is_f = False
        else:
            out = is_freezing(X, A, budget)
            if out.verdict is Verdict.UNKNOWN:
                raise out.exhausted
            is_f = out.verdict is Verdict.TRUE
            if not is_f:
                non_freezing_fix.append(mask_of(map_profile(out.witness).fixed_points))
        if is_f:
            freezing.append(m)
        if not connected:
            continue
        if any(m & f == m for f in non_cold_fix):
            is_c = False
        else:
            out = is_s_cold(X, A, s, budget)
            if out.verdict is Verdict.UNKNOWN:
                raise out.exhausted
            is_c = out.verdict is Verdict.TRUE
            if not is_c:
                non_cold_fix.append(mask_of(map_profile(out.witness).fixed_points))
        if is_c:
            cold.append(m)
    return ColdSetAudit(_minimal(cold), _minimal(freezing), len(cold), len(freezing), s)


def sample_subsets(X: DigitalImage, count: int, rng) -> list:
    """``count`` random subsets of X (each point kept with probability 1/2)."""
    return [frozenset(p for p in range(len(X)) if rng.random() < 0.5) for _ in range(count)]


def all_subsets(X: DigitalImage):
    idx = range(len(X))
    return (frozenset(c) for k in range(len(X) + 1) for c in itertools.combinations(idx, k))
