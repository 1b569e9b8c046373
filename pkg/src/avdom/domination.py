"""Dominating-set tallies and the average order of dominating sets.

Two independent routes produce the per-size counts ``d[k]``:

* :func:`tally_bruteforce` walks all ``2**n`` subsets in Gray-code order,
  keeping per-vertex cover counts up to date one flip at a time.
* :func:`tally_fast` splits the graph into components, and on each component
  applies inclusion-exclusion over "undominated witness" sets T,
  ``d_k = sum_T (-1)^|T| C(m - |N[T]|, k)``, vectorised with numpy; component
  tallies are then convolved.

Counts are Python ints and ``avd`` is a :class:`fractions.Fraction`.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache, partial
from math import comb

import numpy as np

from .graph import (Graph, components, induced_subgraph, isolated_vertices, iter_bits,
                    popcount, stem_structure)
from .parallel import range_reduce

ORACLE_CAP = 24
FAST_CAP = 64
# low-bit block processed per numpy pass in tally_fast
_BLOCK_BITS = 18


class CapExceeded(ValueError):
    pass


def _check_cap(g: Graph, cap: int, what: str):
    if g.n > cap:
        raise CapExceeded(f"{what} refuses n={g.n} (cap {cap}); raise the cap explicitly if intended")


def is_dominating(g: Graph, s: int) -> bool:
    covered = 0
    for v in iter_bits(s):
        covered |= g.cn[v]
    return covered == g.full


# ---------------------------------------------------------------------------
# tallies


def _bruteforce_range(g: Graph, lo: int, hi: int) -> list[int]:
    """Tally dominating sets among Gray codes gray(lo) .. gray(hi - 1)."""
    n = g.n
    d = [0] * (n + 1)
    if lo >= hi:
        return d
    closed = [list(iter_bits(c)) for c in g.cn]
    s = lo ^ (lo >> 1)
    cover = [popcount(g.cn[u] & s) for u in range(n)]
    undominated = cover.count(0)
    size = popcount(s)
    if not undominated:
        d[size] += 1
    for i in range(lo + 1, hi):
        v = (i & -i).bit_length() - 1
        bit = 1 << v
        s ^= bit
        if s & bit:
            size += 1
            for u in closed[v]:
                if cover[u] == 0:
                    undominated -= 1
                cover[u] += 1
        else:
            size -= 1
            for u in closed[v]:
                cover[u] -= 1
                if cover[u] == 0:
                    undominated += 1
        if not undominated:
            d[size] += 1
    return d


def _add(a: list[int], b: list[int]) -> list[int]:
    return [x + y for x, y in zip(a, b)]


def tally_bruteforce(g: Graph, cap: int = ORACLE_CAP, workers: int = 1) -> list[int]:
    """``d[k]`` for k = 0..n by explicit enumeration of every vertex subset."""
    _check_cap(g, cap, "tally_bruteforce")
    total = 1 << g.n
    parts = max(1, workers) * 4 if workers > 1 else 1
    return range_reduce(partial(_bruteforce_range, g), total, _add, workers=workers, parts=parts)


@lru_cache(maxsize=None)
def _low_tables(bits: int) -> np.ndarray:
    size = np.zeros(1 << bits, dtype=np.int64)
    for b in range(bits):
        size[1 << b: 2 << b] = size[: 1 << b] + 1
    return size & 1


def _subset_unions(masks: list[int]) -> np.ndarray:
    out = np.zeros(1 << len(masks), dtype=np.uint64)
    for b, cn in enumerate(masks):
        out[1 << b: 2 << b] = out[: 1 << b] | np.uint64(cn)
    return out


def _signed_cover_counts(cn: list[int]) -> list[int]:
    """``w[c] = sum over T with |N[T]| = c of (-1)^|T|`` for a graph on m vertices."""
    m = len(cn)
    low = min(m, _BLOCK_BITS)
    low_union = _subset_unions(cn[:low])
    low_parity = _low_tables(low)
    width = m + 1
    hist = np.zeros(2 * width, dtype=np.int64)
    high_masks = cn[low:]
    high_union = [0]
    for mask in high_masks:
        high_union += [u | mask for u in high_union]
    for h, hu in enumerate(high_union):
        cover = np.bitwise_count(low_union | np.uint64(hu)).astype(np.int64)
        parity = low_parity ^ (popcount(h) & 1)
        hist += np.bincount(cover + width * parity, minlength=2 * width)
    return [int(e) - int(o) for e, o in zip(hist[:width], hist[width:])]


def _component_tally(g: Graph) -> list[int]:
    m = g.n
    if m == 1:
        return [0, 1]
    w = _signed_cover_counts(list(g.cn))
    return [sum(w[c] * comb(m - c, k) for c in range(m + 1) if w[c]) for k in range(m + 1)]


def convolve(a: list[int], b: list[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def tally_fast(g: Graph, cap: int = FAST_CAP) -> list[int]:
    """Same counts as :func:`tally_bruteforce`, by inclusion-exclusion per component."""
    _check_cap(g, cap, "tally_fast")
    d = [1]
    for comp in components(g):
        d = convolve(d, _component_tally(induced_subgraph(g, comp)))
    return d


def tally(g: Graph, method: str = "fast", cap: int | None = None, workers: int = 1) -> list[int]:
    if method == "fast":
        return tally_fast(g, cap=FAST_CAP if cap is None else cap)
    if method == "bruteforce":
        return tally_bruteforce(g, cap=ORACLE_CAP if cap is None else cap, workers=workers)
    raise ValueError(f"unknown tally method {method!r}")


# ---------------------------------------------------------------------------
# averages


def domination_number(d: list[int]) -> int:
    return next(k for k, x in enumerate(d) if x)


@dataclass(frozen=True)
class AvdSummary:
    n: int
    d: tuple[int, ...]
    gamma: int
    Gamma: int
    GammaPrime: int

    @property
    def avd(self) -> Fraction:
        return Fraction(self.GammaPrime, self.Gamma)

    @classmethod
    def from_tally(cls, d: list[int]) -> "AvdSummary":
        n = len(d) - 1
        if n < 1:
            raise ValueError("avd is undefined for the order-0 graph")
        return cls(n, tuple(d), domination_number(d), sum(d), sum(k * x for k, x in enumerate(d)))

    def to_json(self) -> dict:
        a = self.avd
        return {
            "n": self.n,
            "d": [str(x) for x in self.d],
            "gamma": self.gamma,
            "Gamma": str(self.Gamma),
            "GammaPrime": str(self.GammaPrime),
            "avd": {"num": str(a.numerator), "den": str(a.denominator)},
        }


def avd(g: Graph, method: str = "fast", workers: int = 1) -> AvdSummary:
    if g.n == 0:
        raise ValueError("avd is undefined for the order-0 graph")
    return AvdSummary.from_tally(tally(g, method=method, workers=workers))


def avd_value(g: Graph) -> Fraction:
    return avd(g).avd


class Verdict(str, enum.Enum):
    HOLDS_STRICT = "holds_strict"
    HOLDS_EQUALITY = "holds_equality"
    VIOLATED = "violated"
    NOT_APPLICABLE = "not_applicable"


@dataclass(frozen=True)
class BoundCheck:
    verdict: Verdict
    avd: Fraction | None = None
    bound: Fraction | None = None
    isolated: int = 0
    star_like: bool | None = None
    # equality <=> star-like; only meaningful without isolated vertices
    classification_ok: bool = True

    @property
    def ok(self) -> bool:
        return self.verdict != Verdict.VIOLATED and self.classification_ok


def check_bound(g: Graph, summary: AvdSummary | None = None) -> BoundCheck:
    """Compare avd(G) with 2n/3, or with (2n + r)/3 when G has r isolated vertices."""
    if g.n < 2:
        return BoundCheck(Verdict.NOT_APPLICABLE)
    summary = summary or avd(g)
    r = popcount(isolated_vertices(g))
    bound = Fraction(2 * g.n + r, 3)
    a = summary.avd
    if a > bound:
        verdict = Verdict.VIOLATED
    elif a == bound:
        verdict = Verdict.HOLDS_EQUALITY
    else:
        verdict = Verdict.HOLDS_STRICT
    if r:
        return BoundCheck(verdict, a, bound, r)
    sl = stem_structure(g).star_like
    return BoundCheck(verdict, a, bound, 0, sl, sl == (verdict == Verdict.HOLDS_EQUALITY))
