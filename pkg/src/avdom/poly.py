"""Domination polynomial analytics: mode, unimodality, exact real-rootedness.

Polynomials are coefficient lists indexed by power (``p[k]`` is the
coefficient of ``x**k``).  Real-rootedness is decided with a Sturm sequence
over :class:`fractions.Fraction`, so repeated roots are handled exactly.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from .domination import AvdSummary, avd, tally_fast
from .graph import Graph, encode_graph6, isolated_vertices, is_star_like, parse_graph6
from .parallel import ordered_map


def _trim(p: list) -> list:
    while p and p[-1] == 0:
        p = p[:-1]
    return p


def _sign(x) -> int:
    return (x > 0) - (x < 0)


def poly_divmod(a: Sequence, b: Sequence) -> tuple[list[Fraction], list[Fraction]]:
    a = [Fraction(x) for x in a]
    b = _trim([Fraction(x) for x in b])
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 1)
    r = _trim(a)
    while len(r) >= len(b):
        shift = len(r) - len(b)
        c = r[-1] / b[-1]
        q[shift] = c
        for i, x in enumerate(b):
            r[shift + i] -= c * x
        r = _trim(r)
    return _trim(q), r


def derivative(p: Sequence) -> list:
    return [k * p[k] for k in range(1, len(p))]


def poly_gcd(a: Sequence, b: Sequence) -> list[Fraction]:
    a = _trim([Fraction(x) for x in a])
    b = _trim([Fraction(x) for x in b])
    while b:
        a, b = b, poly_divmod(a, b)[1]
    return [x / a[-1] for x in a] if a else a


def evaluate(p: Sequence, x):
    acc = 0
    for c in reversed(p):
        acc = acc * x + c
    return acc


def sturm_sequence(p: Sequence) -> list[list[Fraction]]:
    seq = [_trim([Fraction(x) for x in p])]
    seq.append(derivative(seq[0]))
    while _trim(seq[-1]):
        r = poly_divmod(seq[-2], seq[-1])[1]
        if not r:
            break
        seq.append([-x for x in r])
    return [s for s in seq if s]


def _variations(signs: Iterable[int]) -> int:
    signs = [s for s in signs if s]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def count_distinct_real_roots(p: Sequence) -> int:
    """Number of distinct real roots (Sturm's theorem evaluated at -inf and +inf)."""
    p = _trim(list(p))
    if len(p) <= 1:
        return 0
    seq = sturm_sequence(p)
    at_pos = _variations(_sign(s[-1]) for s in seq)
    at_neg = _variations(_sign(s[-1]) * (-1) ** (len(s) - 1) for s in seq)
    return at_neg - at_pos


def is_real_rooted(p: Sequence) -> bool:
    """True iff every complex root of the nonzero polynomial ``p`` is real."""
    p = _trim(list(p))
    if not p:
        raise ValueError("the zero polynomial has no well-defined roots")
    low = next(i for i, c in enumerate(p) if c)
    p = p[low:]  # x^low contributes real roots at 0
    if len(p) <= 1:
        return True
    squarefree, rem = poly_divmod(p, poly_gcd(p, derivative(p)))
    assert not rem
    return count_distinct_real_roots(p) == len(squarefree) - 1


def mode_indices(d: Sequence[int]) -> list[int]:
    top = max(d)
    return [k for k, x in enumerate(d) if x == top]


def is_unimodal(d: Sequence[int]) -> bool:
    """Non-decreasing then non-increasing: no strict rise after a strict fall."""
    fallen = False
    for prev, cur in zip(d, d[1:]):
        if cur < prev:
            fallen = True
        elif cur > prev and fallen:
            return False
    return True


def darroch_consistent(d: Sequence[int], mean: Fraction) -> bool:
    return bool({math.floor(mean), math.ceil(mean)} & set(mode_indices(d)))


@dataclass(frozen=True)
class PolyReport:
    coefficients: tuple[int, ...]
    mode: tuple[int, ...]
    unimodal: bool
    real_rooted: bool
    avd: Fraction
    darroch: bool | None  # only decided when real_rooted

    def to_json(self, graph6: str | None = None) -> dict:
        return {
            "graph6": graph6,
            "coeffs": [str(c) for c in self.coefficients],
            "mode": list(self.mode),
            "unimodal": self.unimodal,
            "real_rooted": self.real_rooted,
            "darroch": self.darroch,
        }


def analyze_tally(d: Sequence[int]) -> PolyReport:
    s = AvdSummary.from_tally(list(d))
    rr = is_real_rooted(d)
    return PolyReport(tuple(d), tuple(mode_indices(d)), is_unimodal(d), rr, s.avd,
                      darroch_consistent(d, s.avd) if rr else None)


def analyze(g: Graph) -> PolyReport:
    return analyze_tally(tally_fast(g))


def avd_equals_logderivative(g: Graph) -> bool:
    """D'(G, 1) / D(G, 1) agrees with avd(G)."""
    d = tally_fast(g)
    return Fraction(evaluate(derivative(d), 1), evaluate(d, 1)) == avd(g, method="bruteforce").avd


# ---------------------------------------------------------------------------
# mode survey


@dataclass
class SurveyRow:
    graph6: str
    coefficients: tuple[int, ...]
    mode: tuple[int, ...]
    star_like: bool

    @property
    def top_mode(self) -> int:
        return max(self.mode)


@dataclass
class SurveyReport:
    n: int
    max_mode_index: int
    attaining: list[str]
    star_like_attains: bool
    rows: list[SurveyRow] = field(default_factory=list)

    def to_json(self) -> dict:
        return {"n": self.n, "max_mode_index": self.max_mode_index, "attaining": self.attaining,
                "star_like_attains": self.star_like_attains, "examined": len(self.rows)}

    def csv_rows(self) -> list[list[str]]:
        out = [["graph6", "coeffs", "mode", "largest_mode", "star_like"]]
        for r in self.rows:
            out.append([r.graph6, " ".join(map(str, r.coefficients)), " ".join(map(str, r.mode)),
                        str(r.top_mode), str(r.star_like).lower()])
        out.append(["#summary", f"n={self.n}", f"attaining={len(self.attaining)}",
                    str(self.max_mode_index), str(self.star_like_attains).lower()])
        return out


def _survey_row(line: str) -> SurveyRow:
    g = parse_graph6(line)
    d = tally_fast(g)
    return SurveyRow(line, tuple(d), tuple(mode_indices(d)), is_star_like(g))


def max_mode_survey(graphs: Iterable[Graph | str], n: int, workers: int = 1) -> SurveyReport:
    """Largest mode index over a stream of order-n graphs without isolated vertices.

    Plateaus count at their largest index.  Reports whether a star-like graph
    attains the maximum.
    """
    lines = []
    for x in graphs:
        g = parse_graph6(x) if isinstance(x, str) else x
        if g.n != n:
            raise ValueError(f"graph {encode_graph6(g)} has order {g.n}, expected {n}")
        if isolated_vertices(g):
            raise ValueError(f"graph {encode_graph6(g)} has isolated vertices")
        lines.append(encode_graph6(g))
    if not lines:
        raise ValueError("mode survey needs at least one graph")
    rows = ordered_map(_survey_row, lines, workers=workers)
    best = max(r.top_mode for r in rows)
    attaining = [r for r in rows if r.top_mode == best]
    return SurveyReport(n, best, [r.graph6 for r in attaining],
                        any(r.star_like for r in attaining), rows)
