"""Critical vertices and neighbourhood partitions of dominating sets.

For a dominating set S:

* ``a``  -- vertices v in S such that S - v no longer dominates;
* ``N1`` / ``N2`` -- vertices outside S with exactly one / at least two
  members of S in their closed neighbourhood;
* ``a1`` / ``a2`` -- critical vertices with / without a neighbour in ``N1``.

The ``verify_*`` functions check the counting identities and inequalities
these sets satisfy by exhaustive enumeration, and return a
:class:`CheckReport` carrying both sides plus a witness on failure.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass, field
from functools import lru_cache
from itertools import combinations

from .domination import ORACLE_CAP, AvdSummary, CapExceeded, is_dominating, tally_fast
from .graph import Graph, iter_bits, mask_of, popcount, stem_structure


@dataclass(frozen=True)
class SetProfile:
    S: int
    a: int
    a1: int
    a2: int
    N1: int
    N2: int

    def to_json(self) -> dict:
        return {k: sorted(iter_bits(v)) for k, v in asdict(self).items()}


def profile(g: Graph, s: int) -> SetProfile:
    if s & ~g.full or not is_dominating(g, s):
        raise ValueError(f"{sorted(iter_bits(s))} is not a dominating set of {g}")
    a = mask_of(v for v in iter_bits(s) if not is_dominating(g, s & ~(1 << v)))
    n1 = n2 = 0
    for v in iter_bits(g.full & ~s):
        c = popcount(g.cn[v] & s)
        if c == 1:
            n1 |= 1 << v
        else:
            n2 |= 1 << v
    a1 = mask_of(v for v in iter_bits(a) if g.adj[v] & n1)
    return SetProfile(s, a, a1, a & ~a1, n1, n2)


def dominating_sets(g: Graph, cap: int = ORACLE_CAP) -> list[int]:
    if g.n > cap:
        raise CapExceeded(f"enumeration refuses n={g.n} (cap {cap})")
    union = [0] * (1 << g.n)
    out = []
    for s in range(1, 1 << g.n):
        low = s & -s
        union[s] = union[s ^ low] | g.cn[low.bit_length() - 1]
        if union[s] == g.full:
            out.append(s)
    if g.n == 0:
        out.append(0)
    return out


@lru_cache(maxsize=32)
def profiles(g: Graph) -> tuple[SetProfile, ...]:
    return tuple(profile(g, s) for s in dominating_sets(g))


# ---------------------------------------------------------------------------
# stem families


@lru_cache(maxsize=32)
def _closed_leaf_sets(g: Graph) -> tuple[tuple[int, int], ...]:
    return tuple((st.vertex, st.closed) for st in stem_structure(g).stems)


def family_index(g: Graph, s: int) -> int:
    """Stems t (as a mask) whose closed leaf set L[t] is not contained in S."""
    return mask_of(v for v, closed in _closed_leaf_sets(g) if closed & ~s)


@dataclass(frozen=True)
class StemFamily:
    I: int
    size: int
    V_I: int


def stem_families(g: Graph) -> list[StemFamily]:
    """All families X_I, one per subset I of the stems, with their sizes."""
    stems = stem_structure(g).stems
    counts: dict[int, int] = {}
    for p in profiles(g):
        i = family_index(g, p.S)
        counts[i] = counts.get(i, 0) + 1
    out = []
    for r in range(len(stems) + 1):
        for chosen in combinations(stems, r):
            i = mask_of(st.vertex for st in chosen)
            removed = 0
            for st in chosen:
                removed |= st.closed
            out.append(StemFamily(i, counts.get(i, 0), g.full & ~removed))
    return out


# ---------------------------------------------------------------------------
# aggregates


@dataclass(frozen=True)
class CriticalAggregates:
    sum_a1: int = 0
    sum_a2: int = 0
    sum_N1: int = 0
    sum_N2: int = 0
    family_size: int = 0
    X: int | None = None
    I: int | None = None

    @property
    def sum_a(self) -> int:
        return self.sum_a1 + self.sum_a2

    @property
    def sum_N(self) -> int:
        return self.sum_N1 + self.sum_N2


def aggregates(g: Graph, X: int | None = None, family: int | None = None) -> CriticalAggregates:
    """Pair counts |A_X,1|, |A_X,2|, |N_X,1|, |N_X,2| over a family of dominating sets.

    ``family=None`` means every dominating set; otherwise it is the stem mask I
    selecting X_I.  ``X=None`` means all of V.
    """
    x = g.full if X is None else X
    a1 = a2 = n1 = n2 = size = 0
    for p in profiles(g):
        if family is not None and family_index(g, p.S) != family:
            continue
        size += 1
        a1 += popcount(p.a1 & x)
        a2 += popcount(p.a2 & x)
        n1 += popcount(p.N1 & x)
        n2 += popcount(p.N2 & x)
    return CriticalAggregates(a1, a2, n1, n2, size, X, family)


# ---------------------------------------------------------------------------
# verification


@dataclass
class CheckReport:
    check: str
    graph6: str
    holds: bool | None  # None: not applicable
    lhs: int | None = None
    rhs: int | None = None
    witness: dict | None = field(default=None)

    def to_json(self) -> dict:
        return {
            "check": self.check,
            "graph6": self.graph6,
            "holds": self.holds,
            "lhs": None if self.lhs is None else str(self.lhs),
            "rhs": None if self.rhs is None else str(self.rhs),
            "witness": self.witness,
        }


def verify_lemma_sum(g: Graph) -> CheckReport:
    """sum |a(S)| == 2 Gamma' - n Gamma, and sum |N(S)| == n Gamma - Gamma'."""
    agg = aggregates(g)
    t = AvdSummary.from_tally(tally_fast(g))
    want_a = 2 * t.GammaPrime - g.n * t.Gamma
    want_n = g.n * t.Gamma - t.GammaPrime
    ok = agg.sum_a == want_a and agg.sum_N == want_n
    return CheckReport("lemma_sum", g.to_graph6(), ok, agg.sum_a, want_a,
                       {"sum_N": str(agg.sum_N), "n_Gamma_minus_GammaPrime": str(want_n)})


def verify_a1_le_N1(g: Graph) -> CheckReport:
    agg = aggregates(g)
    bad = next((p for p in profiles(g) if popcount(p.a1) > popcount(p.N1)), None)
    return CheckReport("a1_le_N1", g.to_graph6(), bad is None, agg.sum_a1, agg.sum_N1,
                       None if bad is None else bad.to_json())


def verify_deg2_inequality(g: Graph, v: int) -> CheckReport:
    """(2^deg - deg - 1) * |A_v,2| < |N_v,2| for deg(v) >= 2."""
    deg = g.degree(v)
    if deg < 2:
        return CheckReport("deg2", g.to_graph6(), None, witness={"vertex": v, "degree": deg})
    agg = aggregates(g, X=1 << v)
    lhs = (2 ** deg - deg - 1) * agg.sum_a2
    return CheckReport("deg2", g.to_graph6(), lhs < agg.sum_N2, lhs, agg.sum_N2,
                       {"vertex": v, "degree": deg, "A_v2": str(agg.sum_a2)})


def verify_kstem_inequality(g: Graph, I: int, s: int) -> CheckReport:
    """Over X_I and X = L[s]: |A| <= |N|, strictly when s has at least 3 leaves."""
    if not I >> s & 1:
        raise ValueError(f"stem {s} is not in I={sorted(iter_bits(I))}")
    st = stem_structure(g).stem(s)
    agg = aggregates(g, X=st.closed, family=I)
    witness = {"I": sorted(iter_bits(I)), "stem": s, "k": st.k, "family_size": agg.family_size}
    if agg.family_size == 0:
        return CheckReport("kstem", g.to_graph6(), True, 0, 0, witness)
    ok = agg.sum_a < agg.sum_N if st.k >= 3 else agg.sum_a <= agg.sum_N
    return CheckReport("kstem", g.to_graph6(), ok, agg.sum_a, agg.sum_N, witness)


def verify_restricted_a1(g: Graph, I: int) -> CheckReport:
    """Over X_I and X = V_I: |A_1| <= |N_1|."""
    removed = 0
    for st in stem_structure(g).stems:
        if I >> st.vertex & 1:
            removed |= st.closed
    v_i = g.full & ~removed
    agg = aggregates(g, X=v_i, family=I)
    return CheckReport("restricted_a1", g.to_graph6(), agg.sum_a1 <= agg.sum_N1, agg.sum_a1, agg.sum_N1,
                       {"I": sorted(iter_bits(I)), "V_I": sorted(iter_bits(v_i)),
                        "family_size": agg.family_size})


def verify_sum_bound_equivalence(g: Graph) -> CheckReport:
    """sum |a(S)| <= sum |N(S)| exactly when avd(G) <= 2n/3."""
    agg = aggregates(g)
    t = AvdSummary.from_tally(tally_fast(g))
    ok = (agg.sum_a <= agg.sum_N) == (3 * t.GammaPrime <= 2 * g.n * t.Gamma)
    return CheckReport("sum_bound_equivalence", g.to_graph6(), ok, agg.sum_a, agg.sum_N,
                       {"avd": str(t.avd)})


def verify_stem_partition(g: Graph) -> CheckReport:
    fams = stem_families(g)
    total = sum(f.size for f in fams)
    gamma = sum(tally_fast(g))
    return CheckReport("stem_partition", g.to_graph6(), total == gamma, total, gamma,
                       {"families": len(fams)})


CHECKS = ("sum", "a1n1", "deg2", "kstem", "restricted", "equivalence", "partition")


def verify_all(g: Graph, which: tuple[str, ...] = CHECKS) -> list[CheckReport]:
    """Every applicable check on ``g``; vertex- and stem-indexed checks are expanded."""
    out = []
    if "sum" in which:
        out.append(verify_lemma_sum(g))
    if "a1n1" in which:
        out.append(verify_a1_le_N1(g))
    if "deg2" in which:
        out.extend(verify_deg2_inequality(g, v) for v in range(g.n) if g.degree(v) >= 2)
    if "equivalence" in which:
        out.append(verify_sum_bound_equivalence(g))
    if "partition" in which:
        out.append(verify_stem_partition(g))
    if "kstem" in which or "restricted" in which:
        for fam in stem_families(g):
            if "kstem" in which:
                out.extend(verify_kstem_inequality(g, fam.I, s) for s in iter_bits(fam.I))
            if "restricted" in which:
                out.append(verify_restricted_a1(g, fam.I))
    return out
