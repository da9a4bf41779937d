"""A deterministic corpus of small images and executable checks of the
product, wedge, rigidity and cold/freezing-set theorems on it.

Every check tests an implication only in the direction it is claimed.  An
instance where a decider ran out of budget is reported as skipped, and a
theorem with no applicable instance gets a single skipped entry instead of
passing vacuously.
"""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from . import __version__
from .constructors import box, find_wedge_embedding, interval, product, simple_closed_curve
from .fixedpoint import cold_sets_audit, is_freezing, is_s_cold, sample_subsets
from .homotopy import is_reducible, is_reducible_bfs, is_rigid, is_rigid_bfs
from .lattice import (CU, DigitalImage, build_image, is_connected, is_connected_subset,
                      is_simple_closed_curve, mask_of)
from .maps import SearchBudget, Verdict


@dataclass(frozen=True)
class CorpusEntry:
    name: str
    image: DigitalImage
    kind: str
    parts: Tuple[str, ...] = ()
    wedge_point: Optional[int] = None


@dataclass(frozen=True)
class RigidSearchFinding:
    u: int
    k: int
    subsets_checked: int
    smallest_size: Optional[int]
    rigid_images: Tuple[Tuple[Tuple[int, ...], ...], ...]

    def describe(self) -> str:
        where = f"connected subsets of [0,{self.k}]^2 under c_{self.u}"
        if self.smallest_size is None:
            return f"no rigid image with at least 2 points among {self.subsets_checked} {where}"
        return (f"{len(self.rigid_images)} rigid image(s) of {self.smallest_size} points "
                f"among {self.subsets_checked} {where}")


@dataclass
class Corpus:
    entries: Dict[str, CorpusEntry] = field(default_factory=dict)
    findings: List[RigidSearchFinding] = field(default_factory=list)

    def add(self, entry: CorpusEntry) -> CorpusEntry:
        self.entries[entry.name] = entry
        return entry

    def __iter__(self):
        return iter(self.entries.values())

    def __getitem__(self, name: str) -> CorpusEntry:
        return self.entries[name]

    def of_kind(self, kind: str) -> List[CorpusEntry]:
        return [e for e in self if e.kind == kind]


def _normalize(points):
    lo = [min(c) for c in zip(*points)]
    return tuple(sorted(tuple(a - b for a, b in zip(p, lo)) for p in points))


def search_rigid_subsets(u: int, k: int, budget: Optional[SearchBudget] = None) -> RigidSearchFinding:
    """Smallest rigid connected subsets (at least 2 points) of ``[0,k]^2`` under c_u,
    up to translation."""
    pts = list(itertools.product(range(k + 1), repeat=2))
    B = build_image(pts, CU(u))
    checked = 0
    for size in range(2, len(pts) + 1):
        hits = set()
        for combo in itertools.combinations(range(len(pts)), size):
            if not is_connected_subset(B, mask_of(combo)):
                continue
            checked += 1
            X = build_image([pts[i] for i in combo], CU(u))
            if is_rigid(X, budget).verdict is Verdict.TRUE:
                hits.add(_normalize([pts[i] for i in combo]))
        if hits:
            return RigidSearchFinding(u, k, checked, size, tuple(sorted(hits)))
    return RigidSearchFinding(u, k, checked, None, ())


def build_corpus(budget: Optional[SearchBudget] = None, rigid_search_k: int = 3) -> Corpus:
    """Intervals, boxes, simple closed curves, search-embedded wedges of curves
    (and of the rigid ones among them), NP products, and the smallest rigid
    subsets of a small planar window."""
    C = Corpus()
    for b in range(5):
        C.add(CorpusEntry(f"interval[0,{b}]", interval(0, b), "interval"))
    for a in range(1, 4):
        for b in range(a, 4):
            for u in (1, 2):
                C.add(CorpusEntry(f"box[0,{a}]x[0,{b}]/c{u}", box([(0, a), (0, b)], u), "box"))
    for n in range(4, 11):
        C.add(CorpusEntry(f"curve{n}", simple_closed_curve(n), "curve"))
    C.add(CorpusEntry("segment3", box([(0, 2), (0, 0)], 1), "path"))

    for u in (1, 2):
        finding = search_rigid_subsets(u, rigid_search_k, budget)
        C.findings.append(finding)
        for i, pts in enumerate(finding.rigid_images):
            C.add(CorpusEntry(f"rigid-c{u}-{i}", build_image(pts, CU(u)), "rigid-search"))

    def add_wedge(a: CorpusEntry, b: CorpusEntry) -> Optional[CorpusEntry]:
        if a.image.dimension != b.image.dimension:
            return None
        found = find_wedge_embedding(a.image, b.image)
        if found is None:
            return None
        W, w, _ = found
        return C.add(CorpusEntry(f"({a.name} v {b.name})", W, "wedge", (a.name, b.name), w))

    curves = C.of_kind("curve")
    first_level = []
    for a, b in itertools.combinations_with_replacement(curves, 2):
        if a.image.adjacency == b.image.adjacency and a.image.dimension == b.image.dimension:
            e = add_wedge(a, b)
            if e is not None:
                first_level.append(e)
    seg = C["segment3"]
    for n in (4, 8):
        add_wedge(seg, C[f"curve{n}"])

    rigid_wedges = [e for e in first_level if is_rigid(e.image, budget).verdict is Verdict.TRUE]
    for Y in rigid_wedges:
        for S in curves:
            if len(S.image) >= 5 and Y.image.adjacency == S.image.adjacency \
                    and Y.image.dimension == S.image.dimension:
                add_wedge(Y, S)
                break
    by_family: Dict[object, List[CorpusEntry]] = {}
    for Y in rigid_wedges:
        by_family.setdefault((Y.image.dimension, Y.image.adjacency), []).append(Y)
    for group in by_family.values():
        if len(group) >= 2:
            add_wedge(group[0], group[1])
        add_wedge(group[0], group[0])

    pool = ["interval[0,1]", "interval[0,2]", "curve4", "curve5", "curve6", "curve8"]
    if rigid_wedges:
        pool.append(min(rigid_wedges, key=lambda e: len(e.image)).name)
    for a, b in itertools.combinations_with_replacement(pool, 2):
        P = product([C[a].image, C[b].image], 2)
        C.add(CorpusEntry(f"({a} x {b})", P, "product", (a, b)))
    for names in (("interval[0,1]", "interval[0,1]", "curve5"), ("interval[0,1]", "curve5", "curve6")):
        P = product([C[n].image for n in names], 3)
        C.add(CorpusEntry("(" + " x ".join(names) + ")", P, "product", names))
    return C


@dataclass(frozen=True)
class TheoremCheck:
    theorem: str
    instance: str
    status: str  # "pass" | "fail" | "skipped"
    detail: str = ""

    def as_dict(self):
        return {"theorem": self.theorem, "instance": self.instance, "status": self.status,
                "detail": self.detail}


@dataclass
class TheoremReport:
    checks: List[TheoremCheck]
    findings: List[str]
    seed: int
    corpus_size: int

    @property
    def failures(self) -> List[TheoremCheck]:
        return [c for c in self.checks if c.status == "fail"]

    def by_theorem(self, theorem: str) -> List[TheoremCheck]:
        return [c for c in self.checks if c.theorem == theorem]

    def as_dict(self):
        summary = {}
        for c in self.checks:
            s = summary.setdefault(c.theorem, {"pass": 0, "fail": 0, "skipped": 0})
            s[c.status] += 1
        return {"version": __version__, "seed": self.seed, "corpus_size": self.corpus_size,
                "findings": list(self.findings), "summary": summary,
                "checks": [c.as_dict() for c in self.checks]}


class _Verdicts:
    """Memoized decider verdicts per corpus entry (None = budget exhausted)."""

    def __init__(self, corpus: Corpus, budget: Optional[SearchBudget]):
        self.corpus = corpus
        self.budget = budget
        self._cache: Dict[Tuple[str, str], Optional[bool]] = {}

    def _get(self, name: str, what: str, fn) -> Optional[bool]:
        key = (name, what)
        if key not in self._cache:
            v = fn(self.corpus[name].image, self.budget).verdict
            self._cache[key] = None if v is Verdict.UNKNOWN else v is Verdict.TRUE
        return self._cache[key]

    def rigid(self, name):
        return self._get(name, "rigid", is_rigid)

    def reducible(self, name):
        return self._get(name, "reducible", is_reducible)


def _is_curve(X: DigitalImage, min_size: int) -> bool:
    ok, order = is_simple_closed_curve(X)
    return ok and len(order) >= min_size


THEOREMS = ("curve-deformation", "rigid-irreducible", "rigid-product-factors",
            "reducible-factor-product", "irreducible-product-factors", "rigid-wedge",
            "irreducible-wedge", "long-curve-irreducible", "rigid-curve-wedge",
            "rigid-cold-freezing", "one-map-rigidity", "interval-cold-audit")


def verify_theorems(seed: int = 0, budget: Optional[SearchBudget] = None,
                    corpus: Optional[Corpus] = None, subsets_per_image: int = 100,
                    bfs_max_points: int = 10) -> TheoremReport:
    """Check every theorem's implication on every applicable corpus instance."""
    corpus = corpus if corpus is not None else build_corpus(budget)
    V = _Verdicts(corpus, budget)
    checks: List[TheoremCheck] = []

    def record(theorem, instance, ok, detail=""):
        if ok is None:
            checks.append(TheoremCheck(theorem, instance, "skipped", "search budget exhausted"))
        else:
            checks.append(TheoremCheck(theorem, instance, "pass" if ok else "fail", detail))

    def known(*vals):
        return all(v is not None for v in vals)

    # simple closed curves: only the 4-point curve deforms off itself
    for e in corpus.of_kind("curve"):
        n = len(e.image)
        if n > 8:
            continue
        out = is_reducible_bfs(e.image, budget)
        if out.verdict is Verdict.UNKNOWN:
            record("curve-deformation", e.name, None)
            continue
        moved = out.verdict is Verdict.TRUE
        record("curve-deformation", e.name, moved == (n == 4),
               f"id reaches a map with f(S) != S: {moved} ({out.stats.states} maps visited)")

    for e in corpus:
        r = V.rigid(e.name)
        if r:
            red = V.reducible(e.name)
            record("rigid-irreducible", e.name, None if red is None else not red, "rigid, hence irreducible")

    for e in corpus.of_kind("curve"):
        if len(e.image) >= 5:
            r, red = V.rigid(e.name), V.reducible(e.name)
            record("long-curve-irreducible", e.name, (not r and not red) if known(r, red) else None,
                   "irreducible and not rigid")

    for e in corpus.of_kind("product"):
        pr, pred = V.rigid(e.name), V.reducible(e.name)
        fr = [V.rigid(n) for n in e.parts]
        fred = [V.reducible(n) for n in e.parts]
        if pr:
            record("rigid-product-factors", e.name, all(fr) if known(*fr) else None, "rigid product, rigid factors")
        if any(fred):
            record("reducible-factor-product", e.name, pred, "a reducible factor makes the product reducible")
        if pred is False:
            record("irreducible-product-factors", e.name, (not any(fred)) if known(*fred) else None,
                   "irreducible product, irreducible factors")

    for e in corpus.of_kind("wedge"):
        a, b = (corpus[n] for n in e.parts)
        big = len(a.image) > 1 and len(b.image) > 1
        wr, wred = V.rigid(e.name), V.reducible(e.name)
        if big and V.rigid(a.name) and V.rigid(b.name) and is_connected(a.image) and is_connected(b.image):
            record("rigid-wedge", e.name, wr, "wedge of rigid images is rigid")
        if big and V.reducible(a.name) is False and V.reducible(b.name) is False:
            record("irreducible-wedge", e.name, None if wred is None else not wred,
                   "wedge of irreducible images is irreducible")
        for Y, S in ((a, b), (b, a)):
            if len(Y.image) > 1 and V.rigid(Y.name) and _is_curve(S.image, 5):
                record("rigid-curve-wedge", e.name, wr, f"rigid {Y.name} wedged with curve {S.name}")
                break

    rng = random.Random(seed)
    for e in corpus:
        X = e.image
        if len(X) > 1 and is_connected(X) and V.rigid(e.name):
            mismatches, unknown = [], False
            for A in sample_subsets(X, subsets_per_image, rng):
                f = is_freezing(X, A, budget).verdict
                c = is_s_cold(X, A, 1, budget).verdict
                if Verdict.UNKNOWN in (f, c):
                    unknown = True
                    break
                if f is not c:
                    mismatches.append(sorted(A))
            record("rigid-cold-freezing", e.name, None if unknown else not mismatches,
                   f"{subsets_per_image} sampled subsets, mismatches: {mismatches[:3]}")

    for e in corpus:
        if len(e.image) <= bfs_max_points:
            csp = V.rigid(e.name)
            bfs = is_rigid_bfs(e.image, budget).verdict
            if csp is None or bfs is Verdict.UNKNOWN:
                record("one-map-rigidity", e.name, None)
            else:
                record("one-map-rigidity", e.name, csp == (bfs is Verdict.TRUE),
                       f"1-map search rigid={csp}, map-space BFS rigid={bfs is Verdict.TRUE}")

    X = corpus["interval[0,2]"].image
    audit = cold_sets_audit(X, budget)
    r = V.rigid("interval[0,2]")
    record("interval-cold-audit", "interval[0,2]",
           r is False and audit.minimal_cold_sets == audit.minimal_freezing_sets,
           f"not rigid; minimal cold sets {[sorted(s) for s in audit.minimal_cold_sets]}, "
           f"minimal freezing sets {[sorted(s) for s in audit.minimal_freezing_sets]}")

    for thm in THEOREMS:
        if not any(c.theorem == thm for c in checks):
            checks.append(TheoremCheck(thm, "-", "skipped", "no instance found in the corpus"))

    findings = [f.describe() for f in corpus.findings]
    for e in corpus:
        if e.kind in ("wedge", "rigid-search") and V.rigid(e.name):
            findings.append(f"rigid corpus image {e.name}: {[list(p) for p in e.image.points]}")
    order = {t: i for i, t in enumerate(THEOREMS)}
    checks.sort(key=lambda c: order[c.theorem])
    return TheoremReport(checks, findings, seed, len(corpus.entries))
