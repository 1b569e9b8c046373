"""Simple graphs on at most 64 vertices, stored as closed-neighbourhood bitmasks.

Vertex sets are plain ``int`` bitmasks: bit ``v`` is set iff vertex ``v`` is
in the set.  Everything downstream (dominating sets, critical vertices, leaf
sets) uses that representation.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

MAX_VERTICES = 64
GRAPH6_HEADER = ">>graph6<<"


class GraphError(ValueError):
    """Invalid graph construction input."""


class Graph6Error(GraphError):
    """Malformed graph6 text."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


def popcount(mask: int) -> int:
    return mask.bit_count()


def iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph.

    ``adj[v]`` is the open neighbourhood N(v) as a bitmask; ``cn[v]`` the
    closed neighbourhood N[v].  Use :func:`from_edge_list` or
    :func:`parse_graph6` rather than calling the constructor directly.
    """

    n: int
    adj: tuple[int, ...]
    cn: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if not 0 <= self.n <= MAX_VERTICES:
            raise GraphError(f"vertex count {self.n} outside 0..{MAX_VERTICES}")
        if len(self.adj) != self.n:
            raise GraphError("adjacency length does not match n")
        full = self.full
        for v, nb in enumerate(self.adj):
            if nb & ~full:
                raise GraphError(f"vertex {v} has a neighbour outside 0..{self.n - 1}")
            if nb >> v & 1:
                raise GraphError(f"self-loop at vertex {v}")
            for u in iter_bits(nb):
                if not self.adj[u] >> v & 1:
                    raise GraphError(f"asymmetric adjacency between {v} and {u}")
        object.__setattr__(self, "cn", tuple(nb | (1 << v) for v, nb in enumerate(self.adj)))

    @property
    def full(self) -> int:
        return (1 << self.n) - 1

    def degree(self, v: int) -> int:
        return popcount(self.adj[v])

    def degrees(self) -> list[int]:
        return [popcount(nb) for nb in self.adj]

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for v in range(self.n) for u in iter_bits(self.adj[v]) if u < v]

    @property
    def m(self) -> int:
        return sum(self.degrees()) // 2

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def to_graph6(self) -> str:
        return encode_graph6(self)

    def __str__(self):
        return f"Graph(n={self.n}, edges={self.edges()})"


# ---------------------------------------------------------------------------
# construction


def from_edge_list(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph from ``n`` and a list of vertex pairs; duplicates collapse."""
    if not 0 <= n <= MAX_VERTICES:
        raise GraphError(f"vertex count {n} outside 0..{MAX_VERTICES} (bitmask kernel cap)")
    adj = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
        if u == v:
            raise GraphError(f"self-loop at vertex {u}")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, tuple(adj))


def parse_edge_list_text(text: str) -> Graph:
    """Parse the ``"n m\\nu v\\n..."`` edge-list format."""
    rows = [line.split() for line in text.splitlines()]
    rows = [r for r in rows if r and not r[0].startswith("#")]
    if not rows:
        raise GraphError("empty edge list")
    try:
        header = [int(x) for x in rows[0]]
        pairs = [(int(r[0]), int(r[1])) for r in rows[1:]]
    except (ValueError, IndexError) as exc:
        raise GraphError(f"malformed edge list: {exc}") from None
    if len(header) not in (1, 2):
        raise GraphError("edge list header must be 'n m'")
    if len(header) == 2 and header[1] != len(pairs):
        raise GraphError(f"edge list header declares {header[1]} edges, found {len(pairs)}")
    return from_edge_list(header[0], pairs)


def parse_graph6(text: str) -> Graph:
    line = text.strip()
    offset = 0
    if line.startswith(GRAPH6_HEADER):
        line = line[len(GRAPH6_HEADER):]
        offset = len(GRAPH6_HEADER)
    data = line.encode("ascii", errors="replace")
    for i, ch in enumerate(data):
        if not 63 <= ch <= 126:
            raise Graph6Error(f"character {chr(ch)!r} outside range 63..126", offset + i)
    if not data:
        raise Graph6Error("missing size header", offset)

    if data[0] != 126:
        n, pos = data[0] - 63, 1
    elif len(data) >= 4 and data[1] != 126:
        n = ((data[1] - 63) << 12) | ((data[2] - 63) << 6) | (data[3] - 63)
        pos = 4
    else:
        raise Graph6Error("unsupported or truncated size header", offset)
    if n > MAX_VERTICES:
        raise Graph6Error(f"order {n} exceeds bitmask kernel cap {MAX_VERTICES}", offset)

    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    body = data[pos:]
    if len(body) < need:
        raise Graph6Error(f"truncated edge data: expected {need} bytes, got {len(body)}", offset + len(data))
    if len(body) > need:
        raise Graph6Error("trailing garbage after edge data", offset + pos + need)

    bits = 0
    for ch in body:
        bits = (bits << 6) | (ch - 63)
    pad = need * 6 - nbits
    if bits & ((1 << pad) - 1):
        raise Graph6Error("nonzero padding bits", offset + len(data) - 1)
    bits >>= pad

    adj = [0] * n
    k = nbits - 1
    for j in range(1, n):
        for i in range(j):
            if bits >> k & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            k -= 1
    return Graph(n, tuple(adj))


def encode_graph6(g: Graph) -> str:
    n = g.n
    if n <= 62:
        out = [n + 63]
    else:
        out = [126, ((n >> 12) & 63) + 63, ((n >> 6) & 63) + 63, (n & 63) + 63]
    bits = []
    for j in range(1, n):
        for i in range(j):
            bits.append(g.adj[i] >> j & 1)
    bits.extend([0] * (-len(bits) % 6))
    for i in range(0, len(bits), 6):
        chunk = 0
        for b in bits[i:i + 6]:
            chunk = (chunk << 1) | b
        out.append(chunk + 63)
    return bytes(out).decode("ascii")


# ---------------------------------------------------------------------------
# generators


def path(n: int) -> Graph:
    return from_edge_list(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError("a cycle needs at least 3 vertices")
    return from_edge_list(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    return from_edge_list(n, [(i, j) for j in range(n) for i in range(j)])


def star(n: int) -> Graph:
    """K_{1,n-1} with centre 0."""
    return from_edge_list(n, [(0, i) for i in range(1, n)])


def empty(n: int) -> Graph:
    return from_edge_list(n, [])


GENERATORS = {"path": path, "cycle": cycle, "complete": complete, "star": star, "empty": empty}


def generate(kind: str, n: int) -> Graph:
    if n < 0:
        raise GraphError("n must be nonnegative")
    try:
        return GENERATORS[kind](n)
    except KeyError:
        raise GraphError(f"unknown graph kind {kind!r}; choose from {sorted(GENERATORS)}") from None


def disjoint_union(g: Graph, h: Graph) -> Graph:
    """G followed by H, with H's vertices shifted up by ``g.n``."""
    if g.n + h.n > MAX_VERTICES:
        raise GraphError(f"union order {g.n + h.n} exceeds {MAX_VERTICES}")
    return Graph(g.n + h.n, g.adj + tuple(nb << g.n for nb in h.adj))


def star_like_from_base(base: Graph, leaf_counts: Sequence[int]) -> Graph:
    """Attach one or two pendant leaves to every vertex of ``base``.

    Base vertices keep their labels; leaves are numbered from ``base.n`` up in
    base-vertex order.
    """
    if len(leaf_counts) != base.n:
        raise GraphError("need one leaf count per base vertex")
    edges = list(base.edges())
    nxt = base.n
    for v, k in enumerate(leaf_counts):
        if k not in (1, 2):
            raise GraphError(f"leaf count {k} at vertex {v} must be 1 or 2")
        for _ in range(k):
            edges.append((v, nxt))
            nxt += 1
    return from_edge_list(nxt, edges)


# ---------------------------------------------------------------------------
# structure queries


def min_degree(g: Graph) -> int:
    if g.n == 0:
        raise GraphError("minimum degree of the order-0 graph is undefined")
    return min(g.degrees())


def isolated_vertices(g: Graph) -> int:
    return mask_of(v for v in range(g.n) if g.adj[v] == 0)


def closed_neighborhood_of_set(g: Graph, s: int) -> int:
    out = 0
    for v in iter_bits(s):
        out |= g.cn[v]
    return out


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        return True
    seen = frontier = 1
    while frontier:
        nxt = 0
        for v in iter_bits(frontier):
            nxt |= g.adj[v]
        frontier = nxt & ~seen
        seen |= frontier
    return seen == g.full


def components(g: Graph) -> list[int]:
    """Vertex masks of connected components, ordered by smallest vertex."""
    out = []
    left = g.full
    while left:
        seen = frontier = left & -left
        while frontier:
            nxt = 0
            for v in iter_bits(frontier):
                nxt |= g.adj[v]
            frontier = nxt & ~seen
            seen |= frontier
        out.append(seen)
        left &= ~seen
    return out


def induced_subgraph(g: Graph, vertices: int) -> Graph:
    """Subgraph induced on ``vertices`` relabelled 0..k-1 in increasing order."""
    order = list(iter_bits(vertices))
    index = {v: i for i, v in enumerate(order)}
    adj = []
    for v in order:
        adj.append(mask_of(index[u] for u in iter_bits(g.adj[v] & vertices)))
    return Graph(len(order), tuple(adj))


@dataclass(frozen=True)
class Stem:
    vertex: int
    leaves: int  # L(s)

    @property
    def k(self) -> int:
        return popcount(self.leaves)

    @property
    def closed(self) -> int:  # L[s]
        return self.leaves | (1 << self.vertex)


@dataclass(frozen=True)
class StemStructure:
    leaves: int
    stems: tuple[Stem, ...]
    star_like: bool
    witness: int | None = None

    @property
    def omega(self) -> int:
        return len(self.stems)

    def stem(self, s: int) -> Stem:
        for st in self.stems:
            if st.vertex == s:
                return st
        raise KeyError(f"vertex {s} is not a stem")


def stem_structure(g: Graph) -> StemStructure:
    """Leaves, stems with their leaf sets, and the star-like verdict.

    Both ends of a K2 component are leaves and 1-stems at the same time.
    """
    leaves = mask_of(v for v in range(g.n) if popcount(g.adj[v]) == 1)
    stems = []
    witness = None
    for v in range(g.n):
        lv = g.adj[v] & leaves
        if lv:
            stems.append(Stem(v, lv))
        if witness is None:
            k = popcount(lv)
            if k >= 3 or (k == 0 and not leaves >> v & 1):
                witness = v
    star_like = g.n > 0 and witness is None
    return StemStructure(leaves, tuple(stems), star_like, witness)


def is_star_like(g: Graph) -> bool:
    return stem_structure(g).star_like


def read_lines(source: str) -> Iterator[tuple[int, str]]:
    """Yield ``(line_number, text)`` for nonblank lines of a file, ``-`` or a ``.gz`` file."""
    import gzip
    import sys

    if source == "-":
        fh = sys.stdin
    elif source.endswith(".gz"):
        fh = gzip.open(source, "rt", encoding="ascii")
    else:
        fh = open(source, encoding="ascii")
    try:
        for i, line in enumerate(fh, 1):
            line = line.strip()
            if line:
                yield i, line
    finally:
        if fh is not sys.stdin:
            fh.close()
