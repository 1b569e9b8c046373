"""Exhaustive extremal searches for avd over graph streams.

Small orders (n <= 7) come from a built-in generator of isomorphism-class
representatives; larger orders are read from graph6 streams produced by an
external generator such as nauty's ``geng``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache, partial
from itertools import permutations, product
from typing import Iterable

from .domination import AvdSummary, tally_fast
from .graph import (Graph, encode_graph6, is_connected, is_star_like, iter_bits, parse_graph6,
                    popcount)
from .parallel import ordered_map

GENERATOR_CAP = 7
KNOWN_COUNTS = (1, 1, 2, 4, 11, 34, 156, 1044)  # n = 0..7


# ---------------------------------------------------------------------------
# canonical forms


def _refine(g: Graph) -> list[int]:
    """Stable colour refinement starting from degrees; colours are invariant ranks."""
    colour = [popcount(nb) for nb in g.adj]
    ncol = len(set(colour))
    while True:
        sig = [(colour[v], tuple(sorted(colour[u] for u in iter_bits(g.adj[v])))) for v in range(g.n)]
        rank = {s: i for i, s in enumerate(sorted(set(sig)))}
        colour = [rank[s] for s in sig]
        if len(rank) == ncol:
            return colour
        ncol = len(rank)


def _code(g: Graph, order: tuple[int, ...]) -> int:
    code = 0
    for j in range(1, g.n):
        row = g.adj[order[j]]
        for i in range(j):
            code = (code << 1) | (row >> order[i] & 1)
    return code


def canonical_code(g: Graph) -> int:
    """Isomorphism invariant that is complete: equal codes iff isomorphic (same n).

    Vertices are ordered by refined colour; the code is the largest upper-
    triangle bit string over all orderings that permute only within colours.
    """
    colour = _refine(g)
    cells = [[v for v in range(g.n) if colour[v] == c] for c in sorted(set(colour))]
    best = -1
    for parts in product(*(permutations(c) for c in cells)):
        order = tuple(v for part in parts for v in part)
        best = max(best, _code(g, order))
    return best


def from_code(n: int, code: int) -> Graph:
    adj = [0] * n
    k = n * (n - 1) // 2 - 1
    for j in range(1, n):
        for i in range(j):
            if code >> k & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            k -= 1
    return Graph(n, tuple(adj))


def canonical_form(g: Graph) -> Graph:
    return from_code(g.n, canonical_code(g))


@lru_cache(maxsize=None)
def _classes(n: int) -> tuple[int, ...]:
    if n == 0:
        return (0,)
    seen = set()
    for code in _classes(n - 1):
        h = from_code(n - 1, code)
        for nbrs in range(1 << (n - 1)):
            adj = list(h.adj) + [nbrs]
            for u in iter_bits(nbrs):
                adj[u] |= 1 << (n - 1)
            seen.add(canonical_code(Graph(n, tuple(adj))))
    return tuple(sorted(seen))


def generate_all_nonisomorphic(n: int) -> list[Graph]:
    """One representative per isomorphism class of graphs on ``n`` vertices.

    Built by adding a vertex in every possible way to each class of order
    ``n - 1`` and keeping canonical forms.  Deterministic order.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n > GENERATOR_CAP:
        raise ValueError(f"built-in generator stops at n={GENERATOR_CAP}; "
                         f"supply a graph6 stream (e.g. from nauty geng) for n={n}")
    return [from_code(n, c) for c in _classes(n)]


# ---------------------------------------------------------------------------
# search


@dataclass(frozen=True)
class SearchConstraint:
    n: int
    min_degree: int = 0
    connected: bool = False
    no_isolated: bool = False

    def __post_init__(self):
        if self.min_degree >= 1 and not self.no_isolated:
            object.__setattr__(self, "no_isolated", True)

    def accepts(self, g: Graph) -> bool:
        if g.n != self.n:
            return False
        degs = g.degrees()
        if self.no_isolated and 0 in degs:
            return False
        if degs and min(degs) < self.min_degree:
            return False
        return not self.connected or is_connected(g)

    def to_json(self) -> dict:
        return {"n": self.n, "min_degree": self.min_degree, "connected": self.connected,
                "no_isolated": self.no_isolated}


@dataclass
class ExtremalResult:
    best_avd: Fraction | None = None
    argmax: list[str] = field(default_factory=list)
    examined: int = 0

    def offer(self, graph6: str, value: Fraction):
        self.examined += 1
        if self.best_avd is None or value > self.best_avd:
            self.best_avd, self.argmax = value, [graph6]
        elif value == self.best_avd:
            self.argmax.append(graph6)

    def merge(self, other: "ExtremalResult") -> "ExtremalResult":
        out = ExtremalResult(self.best_avd, list(self.argmax), self.examined + other.examined)
        if other.best_avd is None:
            return out
        if out.best_avd is None or other.best_avd > out.best_avd:
            out.best_avd, out.argmax = other.best_avd, list(other.argmax)
        elif other.best_avd == out.best_avd:
            out.argmax.extend(other.argmax)
        return out

    def to_json(self, constraint: SearchConstraint | None = None) -> dict:
        b = self.best_avd
        return {
            "constraint": None if constraint is None else constraint.to_json(),
            "best_avd": None if b is None else {"num": str(b.numerator), "den": str(b.denominator)},
            "argmax": list(self.argmax),
            "examined": self.examined,
        }


def _search_chunk(constraint: SearchConstraint, lines: list[str]) -> ExtremalResult:
    res = ExtremalResult()
    for line in lines:
        g = parse_graph6(line)
        if constraint.accepts(g):
            res.offer(line, AvdSummary.from_tally(tally_fast(g)).avd)
    return res


def search(stream: Iterable[Graph | str], constraint: SearchConstraint, workers: int = 1,
           chunk: int = 2000) -> ExtremalResult:
    """All graphs in ``stream`` that satisfy ``constraint`` and maximise avd."""
    lines = [x if isinstance(x, str) else encode_graph6(x) for x in stream]
    lines = [x.strip() for x in lines if x.strip()]
    chunks = [lines[i:i + chunk] for i in range(0, len(lines), chunk)]
    partials = ordered_map(partial(_search_chunk, constraint), chunks, workers=workers, chunksize=1)
    res = ExtremalResult()
    for p in partials:
        res = res.merge(p)
    if res.examined == 0:
        raise ValueError(f"no graph in the stream satisfies {constraint}")
    return res


@dataclass
class MainTheoremReport:
    n: int
    examined: int = 0
    violations: list[str] = field(default_factory=list)
    equality: list[str] = field(default_factory=list)
    star_like: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations and self.equality == self.star_like

    def to_json(self) -> dict:
        return {"n": self.n, "examined": self.examined, "holds": self.ok,
                "violations": self.violations, "equality": self.equality,
                "star_like": self.star_like}


def _theorem_row(line: str) -> tuple[str, int, bool]:
    g = parse_graph6(line)
    t = AvdSummary.from_tally(tally_fast(g))
    # sign of avd - 2n/3
    cmp = (3 * t.GammaPrime > 2 * g.n * t.Gamma) - (3 * t.GammaPrime < 2 * g.n * t.Gamma)
    return line, cmp, is_star_like(g)


def verify_main_theorem(n: int, workers: int = 1) -> MainTheoremReport:
    """avd <= 2n/3 with equality exactly on star-like graphs, over every class of order n."""
    if n < 2:
        raise ValueError("the bound concerns graphs with at least 2 vertices")
    cons = SearchConstraint(n, no_isolated=True)
    lines = [encode_graph6(g) for g in generate_all_nonisomorphic(n) if cons.accepts(g)]
    rep = MainTheoremReport(n)
    for line, cmp, sl in ordered_map(_theorem_row, lines, workers=workers):
        rep.examined += 1
        if cmp > 0:
            rep.violations.append(line)
        elif cmp == 0:
            rep.equality.append(line)
        if sl:
            rep.star_like.append(line)
    return rep
