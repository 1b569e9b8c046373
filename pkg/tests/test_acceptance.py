"""Acceptance gate: one test per criterion, each printing a PASS/FAIL line.

Every criterion function takes a worker count and returns ``(ok, detail, fingerprint)``.
The fingerprint holds the exact results, so criterion 10 can compare runs at
different worker counts without re-deriving anything.
"""

import random
import time
from fractions import Fraction
from functools import lru_cache
from pathlib import Path

import pytest

from avdom.critical import verify_all, verify_lemma_sum
from avdom.domination import Verdict, avd, check_bound, tally_bruteforce, tally_fast
from avdom.extremal import (SearchConstraint, canonical_code, generate_all_nonisomorphic, search,
                            verify_main_theorem)
from avdom.graph import (complete, cycle, disjoint_union, empty, from_edge_list, is_connected,
                         is_star_like, isolated_vertices, parse_graph6, path, popcount, read_lines,
                         star_like_from_base)
from avdom.parallel import ordered_map
from avdom.poly import analyze
from conftest import random_graph

DATA = Path(__file__).resolve().parent.parent / "data"
SEED = 20240611


def _g6(gs):
    return [g.to_graph6() for g in gs]


def _all_upto(n_max, n_min=1):
    return [g for n in range(n_min, n_max + 1) for g in generate_all_nonisomorphic(n)]


# --- per-graph workers (module level so they pickle) ------------------------------

def _avd_row(line):
    s = avd(parse_graph6(line))
    return s.n, s.avd


def _bound_row(line):
    g = parse_graph6(line)
    b = check_bound(g)
    r = popcount(isolated_vertices(g))
    direct = 3 * b.avd <= 2 * g.n + r
    return line, r, b.avd, b.verdict.value, direct and b.verdict != Verdict.VIOLATED and b.isolated == r


def _sum_row(line):
    rep = verify_lemma_sum(parse_graph6(line))
    w = rep.witness
    return line, rep.holds, str(rep.lhs), w["sum_N"]


def _lemma_rows(line):
    reps = verify_all(parse_graph6(line), ("a1n1", "deg2", "kstem", "restricted"))
    return line, [(r.check, r.holds, str(r.lhs), str(r.rhs)) for r in reps]


def _oracle_row(line):
    g = parse_graph6(line)
    fast = tally_fast(g)
    return line, fast, fast == tally_bruteforce(g)


def _darroch_row(line):
    rep = analyze(parse_graph6(line))
    return line, rep.real_rooted, rep.mode, rep.avd, rep.darroch


# --- criteria ----------------------------------------------------------------------

@lru_cache(maxsize=None)
def criterion_1(workers):
    t0 = time.perf_counter()
    rows = ordered_map(_avd_row, _g6(complete(n) for n in range(1, 17)), workers=workers)
    elapsed = time.perf_counter() - t0
    ok = all(a == Fraction(n * 2 ** (n - 1), 2 ** n - 1) for n, a in rows) and elapsed < 10
    return ok, f"avd(K_n) closed form for n=1..16 ({elapsed:.2f}s)", tuple(rows)


def _random_star_like(rng):
    k = rng.randint(1, 5)
    base = random_graph(rng, k)
    return star_like_from_base(base, [rng.choice((1, 2)) for _ in range(k)])


@lru_cache(maxsize=None)
def criterion_2(workers):
    rng = random.Random(SEED + 2)
    gs = [_random_star_like(rng) for _ in range(30)]
    rows = ordered_map(_avd_row, _g6(gs), workers=workers)
    ok = all(is_star_like(g) for g in gs) and all(a == Fraction(2 * n, 3) for n, a in rows)
    return ok, "avd = 2n/3 on 30 random star-like graphs", tuple(rows)


CONNECTED_STAR_LIKE_6 = (star_like_from_base(path(3), [1, 1, 1]),
            star_like_from_base(complete(3), [1, 1, 1]),
            star_like_from_base(complete(2), [2, 2]))


@lru_cache(maxsize=None)
def criterion_3(workers):
    t0 = time.perf_counter()
    reps = [verify_main_theorem(n, workers=workers) for n in range(2, 8)]
    elapsed = time.perf_counter() - t0
    six = next(r for r in reps if r.n == 6)
    connected_eq = {canonical_code(g) for g in map(parse_graph6, six.equality) if is_connected(g)}
    fig2 = connected_eq == {canonical_code(g) for g in CONNECTED_STAR_LIKE_6}
    ok = all(r.ok for r in reps) and fig2 and elapsed < 300
    examined = sum(r.examined for r in reps)
    return (ok, f"bound and equality characterisation on {examined} graphs of order 2..7, "
                f"order-6 connected equality set {'matches' if fig2 else 'differs from'} "
                f"the three expected graphs ({elapsed:.1f}s)",
            tuple((r.n, r.examined, tuple(r.violations), tuple(r.equality)) for r in reps))


@lru_cache(maxsize=None)
def criterion_4(workers):
    rng = random.Random(SEED + 4)
    gs = []
    for _ in range(50):
        n = rng.randint(2, 10)
        r = rng.randint(1, n - 1)
        gs.append(disjoint_union(random_graph(rng, n - r), empty(r)))
    rows = ordered_map(_bound_row, _g6(gs), workers=workers)
    ok = all(r[1] >= 1 for r in rows) and all(r[-1] for r in rows)
    return ok, "avd <= (2n+r)/3 on 50 random graphs with isolated vertices", tuple(rows)


@lru_cache(maxsize=None)
def criterion_5(workers):
    rng = random.Random(SEED + 5)
    gs = _all_upto(6) + [random_graph(rng, rng.randint(7, 12)) for _ in range(200)]
    rows = ordered_map(_sum_row, _g6(gs), workers=workers)
    ok = all(r[1] for r in rows)
    return ok, f"critical-vertex and outside-vertex sum identities on {len(rows)} graphs", tuple(rows)


@lru_cache(maxsize=None)
def criterion_6(workers):
    rows = ordered_map(_lemma_rows, _g6(_all_upto(6)), workers=workers)
    checks = [c for _, cs in rows for c in cs]
    failed = [c for c in checks if c[1] is False]
    return (not failed, f"{len(checks)} a1/N1, degree, k-stem and restricted checks on all graphs "
                        f"of order <= 6, {len(failed)} failed", tuple(rows))


@lru_cache(maxsize=None)
def criterion_7(workers):
    rng = random.Random(SEED + 7)
    gs = generate_all_nonisomorphic(7) + [random_graph(rng, rng.randint(8, 16)) for _ in range(500)]
    t0 = time.perf_counter()
    rows = ordered_map(_oracle_row, _g6(gs), workers=workers, chunksize=32)
    elapsed = time.perf_counter() - t0
    ok = len(rows) == 1544 and all(r[2] for r in rows) and elapsed < 600
    return ok, f"fast tally equals brute force on {len(rows)} graphs ({elapsed:.1f}s)", tuple(rows)


C4 = cycle(4)
BRIDGED_C4_PAIR = from_edge_list(8, list(C4.edges()) + [(u + 4, v + 4) for u, v in C4.edges()] + [(0, 4)])
STREAMS = {8: (DATA / "mindeg2_n8.g6", 7459), 9: (DATA / "mindeg2_n9.g6.gz", 197867)}


def _stream(n):
    path_, count = STREAMS[n]
    if not path_.exists():
        pytest.skip(f"{path_.name} missing; run scripts/make_streams.sh")
    lines = [line for _, line in read_lines(str(path_))]
    assert len(lines) == count, f"{path_.name}: {len(lines)} graphs, expected {count}"
    return lines


@lru_cache(maxsize=None)
def criterion_8(workers):
    t0 = time.perf_counter()
    cases = [(SearchConstraint(n, min_degree=2), generate_all_nonisomorphic(n), cycle(n))
             for n in range(3, 8)]
    cases.append((SearchConstraint(8, min_degree=2), _stream(8), disjoint_union(C4, C4)))
    cases.append((SearchConstraint(8, min_degree=2, connected=True), _stream(8), BRIDGED_C4_PAIR))
    cases.append((SearchConstraint(9, min_degree=2), _stream(9), disjoint_union(C4, cycle(5))))
    out, ok = [], True
    for cons, stream, want in cases:
        res = search(stream, cons, workers=workers)
        codes = [canonical_code(parse_graph6(x)) for x in res.argmax]
        ok &= codes == [canonical_code(want)] and res.best_avd == avd(want).avd
        out.append((cons.n, cons.connected, res.best_avd, tuple(res.argmax), res.examined))
    elapsed = time.perf_counter() - t0
    ok &= elapsed < 1800
    return (ok, f"unique extremal graphs under min degree 2 for n=3..9 and connected n=8 "
                f"({elapsed:.1f}s, workers={workers})", tuple(out))


@lru_cache(maxsize=None)
def criterion_9(workers):
    rows = ordered_map(_darroch_row, _g6(_all_upto(7)), workers=workers, chunksize=64)
    rr = [r for r in rows if r[1]]
    ok = all(r[4] for r in rr)
    return ok, f"mode at floor/ceil of avd for {len(rr)} real-rooted of {len(rows)} graphs", tuple(rows)


CRITERIA = {k: globals()[f"criterion_{k}"] for k in range(1, 10)}


@pytest.mark.parametrize("k", range(1, 10))
def test_criterion(k, acceptance):
    ok, detail, _ = CRITERIA[k](1)
    acceptance(k, detail, ok)
    assert ok, detail


@pytest.mark.slow
def test_criterion_10_determinism(acceptance):
    mismatched = [(k, w) for k in range(1, 10) for w in (4, 8)
                  if CRITERIA[k](w)[2] != CRITERIA[k](1)[2] or not CRITERIA[k](w)[0]]
    detail = "criteria 1-9 identical at workers 1, 4 and 8"
    if mismatched:
        detail += f"; mismatches {mismatched}"
    acceptance(10, detail, not mismatched)
    assert not mismatched
