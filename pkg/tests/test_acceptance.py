"""Acceptance suite.

Each criterion prints one ``[PASS]``/``[FAIL]`` line with its wall time and
limit, then asserts.  Run alone with ``pytest tests/test_acceptance.py -v -s``
or ``python3 tests/test_acceptance.py``.
"""
import itertools
import random
import sys
import time

import numpy as np
import pytest

from oracles import brute_maps_on_points, lattice_boundary, shortest_paths
from digitop import (CU, Verdict, boundary, box, build_image, cold_sets_audit, components, constant,
                     enumerate_continuous_self_maps, homotopy_component, identity, interval,
                     is_freezing, is_reducible, is_rigid, is_rigid_bfs, is_s_cold, iter_continuous_maps,
                     minimize_freezing, simple_closed_curve)
from digitop.fixedpoint import sample_subsets


@pytest.fixture
def announce(capsys):
    def emit(number, title, ok, elapsed, limit=None, detail=""):
        within = limit is None or elapsed < limit
        status = "PASS" if ok and within else "FAIL"
        budget = f"{elapsed:.2f}s" + (f" < {limit}s" if limit else "")
        with capsys.disabled():
            print(f"\n[{status}] criterion {number:>2}: {title} ({budget}){' - ' + detail if detail else ''}")
        assert ok, detail
        assert within, f"took {elapsed:.1f}s, limit {limit}s"
    return emit


def random_connected(rng, side, n, u, max_points=None):
    cells = list(itertools.product(range(side), repeat=n))
    k = rng.randint(1, min(max_points or len(cells), len(cells)))
    X = build_image(rng.sample(cells, k), CU(u))
    comp = max(components(X), key=lambda c: (len(c), c))
    return build_image([X.points[i] for i in comp], CU(u))


def is_minimal_freezing(X, A):
    if is_freezing(X, A).verdict is not Verdict.TRUE:
        return False
    return all(is_freezing(X, set(A) - {a}).verdict is Verdict.FALSE for a in A)


def test_c01_interval_cold_audit(announce):
    t = time.perf_counter()
    X = interval(0, 2)
    rigid = is_rigid(X).verdict
    audit = cold_sets_audit(X)
    want = (frozenset({0, 2}),)
    ok = rigid is Verdict.FALSE and audit.minimal_cold_sets == want == audit.minimal_freezing_sets
    announce(1, "[0,2] is not rigid; minimal cold sets = minimal freezing sets = {{0,2}}",
             ok, time.perf_counter() - t, 1,
             f"cold {[sorted(s) for s in audit.minimal_cold_sets]}, "
             f"freezing {[sorted(s) for s in audit.minimal_freezing_sets]}")


def test_c02_cold_but_not_freezing(announce):
    t = time.perf_counter()
    X = interval(0, 1)
    cold = is_s_cold(X, {0}, 1).verdict
    fr = is_freezing(X, {0})
    ok = cold is Verdict.TRUE and fr.verdict is Verdict.FALSE and fr.witness == constant(X, 0)
    announce(2, "{0} is 1-cold but not freezing on [0,1], witness constant 0",
             ok, time.perf_counter() - t, 1, f"witness {fr.witness and fr.witness.assignment}")


def test_c03_freezing_examples(announce):
    t = time.perf_counter()
    I = interval(0, 5)
    ends = {I.index((0,)), I.index((5,))}
    ok_interval = is_minimal_freezing(I, ends) and minimize_freezing(I, range(len(I))) == ends
    B = box([(0, 2), (0, 2)], 1)
    corners = {B.index(p) for p in [(0, 0), (0, 2), (2, 0), (2, 2)]}
    ok_box = is_minimal_freezing(B, corners) and minimize_freezing(B, boundary(B)) == corners
    rng = random.Random(2024)
    bad = []
    for u in (1, 2):
        for _ in range(50):
            X = random_connected(rng, 4, 2, u)
            Bd = boundary(X)
            if Bd != set(lattice_boundary(X)) or \
                    is_freezing(X, Bd).verdict is not Verdict.TRUE:
                bad.append((u, X.points))
    announce(3, "{0,5} and box corners are minimal freezing; Bd(X) freezes 2x50 random X",
             ok_interval and ok_box and not bad, time.perf_counter() - t, 60,
             f"interval ok={ok_interval}, corners ok={ok_box}, boundary violations={len(bad)}")


def test_c04_long_curves(announce):
    t = time.perf_counter()
    rows = []
    for n in range(5, 11):
        C = simple_closed_curve(n)
        rows.append((n, is_reducible(C).verdict, is_rigid(C).verdict))
    ok = all(r is Verdict.FALSE and g is Verdict.FALSE for _, r, g in rows)
    announce(4, "curves of 5..10 points are irreducible and not rigid", ok,
             time.perf_counter() - t, 30,
             ", ".join(f"{n}:{r.value}/{g.value}" for n, r, g in rows))


def test_c05_curve_deformation(announce):
    t = time.perf_counter()
    moved = {}
    for n in range(4, 9):
        C = simple_closed_curve(n)
        comp = homotopy_component(identity(C))
        moved[n] = any(len(set(a)) < n for a in comp)
    ok = moved == {4: True, 5: False, 6: False, 7: False, 8: False}
    announce(5, "BFS from id leaves the curve only for the 4-point square", ok,
             time.perf_counter() - t, 60, f"{moved}")


def test_c06_products(announce, corpus):
    t = time.perf_counter()
    red = {}

    def reducible(name):
        if name not in red:
            red[name] = is_reducible(corpus[name].image).verdict
        return red[name]

    checked = violations = unknown = 0
    for e in corpus.of_kind("product"):
        pv = reducible(e.name)
        fv = [reducible(n) for n in e.parts]
        if Verdict.UNKNOWN in fv + [pv]:
            unknown += 1
            continue
        checked += 1
        if Verdict.TRUE in fv and pv is not Verdict.TRUE:
            violations += 1
        if pv is Verdict.FALSE and Verdict.TRUE in fv:
            violations += 1
    with_red = sum(1 for e in corpus.of_kind("product") if Verdict.TRUE in [red[n] for n in e.parts])
    ok = violations == 0 and unknown == 0 and with_red > 0
    announce(6, "a reducible factor makes an NP product reducible; irreducible products "
                "have irreducible factors", ok, time.perf_counter() - t, 300,
             f"{checked} products, {with_red} with a reducible factor, {violations} violations")


def test_c07_wedges(announce, corpus):
    t = time.perf_counter()
    checked = violations = 0
    for e in corpus.of_kind("wedge"):
        a, b = (corpus[n].image for n in e.parts)
        if is_reducible(a).verdict is Verdict.FALSE and is_reducible(b).verdict is Verdict.FALSE:
            checked += 1
            if is_reducible(e.image).verdict is not Verdict.FALSE:
                violations += 1
    announce(7, "wedges of irreducible images are irreducible", violations == 0 and checked > 0,
             time.perf_counter() - t, 300, f"{checked} wedges, {violations} violations")


def test_c08_rigidity_cross_validation(announce, corpus):
    t = time.perf_counter()
    checked, mismatches = 0, []
    for e in corpus:
        if len(e.image) <= 10:
            checked += 1
            a, b = is_rigid(e.image).verdict, is_rigid_bfs(e.image).verdict
            if a is not b or a is Verdict.UNKNOWN:
                mismatches.append(e.name)
    announce(8, "1-map CSP rigidity equals map-space BFS rigidity on corpus images <= 10 points",
             not mismatches and checked > 0, time.perf_counter() - t, 300,
             f"{checked} images, mismatches {mismatches}")


def test_c09_rigid_cold_equals_freezing(announce, corpus):
    t = time.perf_counter()
    findings = [f.describe() for f in corpus.findings]
    rng = random.Random(0)
    rigid, mismatches = [], 0
    for e in corpus:
        X = e.image
        if e.kind in ("rigid-search", "wedge") and len(X) > 1 and is_rigid(X).verdict is Verdict.TRUE:
            rigid.append(e.name)
            for A in sample_subsets(X, 100, rng):
                if is_freezing(X, A).verdict is not is_s_cold(X, A, 1).verdict:
                    mismatches += 1
    detail = (f"finding: {'; '.join(findings)}; {len(rigid)} rigid images found by wedge "
              f"embedding search, 100 subsets each, {mismatches} mismatches")
    announce(9, "on rigid images, freezing <=> 1-cold", mismatches == 0 and bool(rigid),
             time.perf_counter() - t, None, detail)


def small_images():
    """Every image of at most 5 points in small windows of Z, Z^2, Z^3 (up to translation)."""
    seen = set()
    for n, side in ((1, 5), (2, 3), (3, 2)):
        cells = list(itertools.product(range(side), repeat=n))
        for k in range(1, 6):
            for combo in itertools.combinations(cells, k):
                lo = [min(c) for c in zip(*combo)]
                key = tuple(sorted(tuple(a - b for a, b in zip(p, lo)) for p in combo))
                for u in range(1, n + 1):
                    if (key, u) not in seen:
                        seen.add((key, u))
                        yield key, u


def test_c10_oracle_equivalence(announce):
    t = time.perf_counter()
    images = mismatches = 0
    for pts, u in small_images():
        images += 1
        X = build_image(pts, CU(u))
        got = sorted(tuple(sorted((X.points[p], X.points[f(p)]) for p in range(len(X))))
                     for f in enumerate_continuous_self_maps(X).solutions)
        want = sorted(tuple(sorted(f.items())) for f in brute_maps_on_points(pts, u))
        mismatches += got != want
    counts = [len(enumerate_continuous_self_maps(interval(0, b)).solutions) for b in (1, 2)]
    oracle = [len(brute_maps_on_points([(i,) for i in range(b + 1)], 1)) for b in (1, 2)]
    ok = mismatches == 0 and counts == oracle == [4, 17]
    announce(10, "exhaustive enumeration equals brute force on every image <= 5 points",
             ok, time.perf_counter() - t, 60,
             f"{images} images, {mismatches} mismatches, counts {counts} (oracle {oracle})")


def property_violations(X):
    """Pulling and unique-path-fixing violations over every continuous self-map, vectorized."""
    n = len(X)
    P = np.array(X.points)
    pull = []
    for q in range(n):
        for q2 in X.neighbors(q):
            for i in range(X.dimension):
                if P[q, i] < P[q2, i]:
                    pull.append((q, q2, i, 1))
                elif P[q, i] > P[q2, i]:
                    pull.append((q, q2, i, -1))
    unique = []
    for x, y in itertools.combinations(range(n), 2):
        paths = shortest_paths(X, x, y)
        if len(paths) == 1:
            unique.append((x, y, list(paths[0])))
    maps = pulling = fixing = 0
    it = iter_continuous_maps(X)
    while True:
        chunk = [f.assignment for f in itertools.islice(it, 200000)]
        if not chunk:
            break
        F = np.array(chunk, dtype=np.int16)
        maps += len(F)
        C = P[F]
        for q, q2, i, s in pull:
            # s = +1: f(q)_i < q_i < q2_i forces f(q2)_i < q2_i; s = -1 mirrors it
            pulled = s * C[:, q, i] < s * P[q, i]
            pulling += int(np.count_nonzero(pulled & ~(s * C[:, q2, i] < s * P[q2, i])))
        fixed = F == np.arange(n)
        for x, y, path in unique:
            fixing += int(np.count_nonzero(fixed[:, x] & fixed[:, y] & ~fixed[:, path].all(axis=1)))
    return maps, pulling, fixing


def test_c11_property_suites(announce):
    t = time.perf_counter()
    rng = random.Random(11)
    maps = pulling = fixing = supersets = monotone = 0
    for _ in range(100):
        n = rng.randint(1, 3)
        X = random_connected(rng, 3, n, rng.randint(1, n), max_points=9)
        m, p, f = property_violations(X)
        maps, pulling, fixing = maps + m, pulling + p, fixing + f
        base = [minimize_freezing(X, range(len(X)))]
        base += [A for A in sample_subsets(X, 3, rng) if is_freezing(X, A).verdict is Verdict.TRUE]
        for A in base:
            for _ in range(3):
                B = set(A) | {x for x in range(len(X)) if rng.random() < 0.5}
                supersets += 1
                monotone += is_freezing(X, B).verdict is not Verdict.TRUE
    ok = pulling == 0 and fixing == 0 and monotone == 0 and maps > 0
    announce(11, "pulling, unique-path fixing and superset monotonicity on 100 random images",
             ok, time.perf_counter() - t, 300,
             f"{maps} maps, {pulling} pulling and {fixing} path-fixing violations, "
             f"{supersets} supersets with {monotone} violations")


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-v", "-s"]))
