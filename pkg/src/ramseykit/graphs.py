"""Labeled graphs, red/blue edge colorings of complete graphs, and embeddings.

Vertices are dense integer labels 0..n-1.  Adjacency is stored as one
integer bit mask per vertex, so neighborhood intersection, candidate
filtering and degree counts are single machine-word operations for
n <= 64.  Python integers are arbitrary precision, so the same code path
works beyond 64 vertices (it merely stops being single-word); nothing in
this package assumes a hard cutoff.

Pair indexing: the unordered pair (i, j) with i < j of an n-vertex
complete graph lives at position

    i*n - i*(i+1)//2 + (j - i - 1)

in a flat array of C(n, 2) entries.  Coloring files and the exhaustive
enumeration order both rely on this fixed order.
"""

from __future__ import annotations

from typing import Iterable, Iterator

RED = "R"
BLUE = "B"


class GraphParseError(ValueError):
    """Raised on malformed edge-list input."""


def pair_index(i: int, j: int, n: int) -> int:
    """Flat index of the unordered pair (i, j), i != j, in K_n's pair order."""
    if i > j:
        i, j = j, i
    return i * n - i * (i + 1) // 2 + (j - i - 1)


def pair_list(n: int) -> list[tuple[int, int]]:
    """All pairs (i, j), i < j, in flat-index order."""
    return [(i, j) for i in range(n) for j in range(i + 1, n)]


def pair_count(n: int) -> int:
    return n * (n - 1) // 2


class Graph:
    """Immutable simple graph on vertices 0..n-1 with bit-mask adjacency."""

    __slots__ = ("n", "adj")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 1:
            raise ValueError(f"graph order must be >= 1, got {n}")
        adj = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range for n={n}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        self.n = n
        self.adj = tuple(adj)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def neighbors(self, v: int) -> Iterator[int]:
        m = self.adj[v]
        while m:
            b = m & -m
            yield b.bit_length() - 1
            m ^= b

    def edges(self) -> list[tuple[int, int]]:
        return [(i, j) for i in range(self.n) for j in self.neighbors(i) if i < j]

    @property
    def edge_count(self) -> int:
        return sum(self.adj[v].bit_count() for v in range(self.n)) // 2

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def is_connected(self) -> bool:
        if self.n == 1:
            return True
        seen = 1
        frontier = 1
        while frontier:
            nxt = 0
            while frontier:
                b = frontier & -frontier
                nxt |= self.adj[b.bit_length() - 1]
                frontier ^= b
            frontier = nxt & ~seen
            seen |= nxt
        return seen == self.full_mask

    def __eq__(self, other) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def __repr__(self) -> str:
        return f"{type(self).__name__}(n={self.n}, edges={self.edges()})"


def parse_graph(text: str) -> Graph:
    """Parse the newline-delimited edge-list format.

    First line: vertex count n >= 1.  Each following non-empty line holds
    two distinct labels in [0, n).  Duplicate edge lines are idempotent.
    """
    lines = text.splitlines()
    if not lines or not lines[0].strip():
        raise GraphParseError("missing vertex-count line")
    try:
        n = int(lines[0].strip())
    except ValueError:
        raise GraphParseError(f"bad vertex count: {lines[0]!r}") from None
    if n < 1:
        raise GraphParseError(f"vertex count must be >= 1, got {n}")
    edges = []
    for ln, line in enumerate(lines[1:], start=2):
        parts = line.split()
        if not parts:
            continue
        if len(parts) != 2:
            raise GraphParseError(f"line {ln}: expected two labels, got {line!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphParseError(f"line {ln}: non-integer label in {line!r}") from None
        if u == v:
            raise GraphParseError(f"line {ln}: self-loop at {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise GraphParseError(f"line {ln}: label out of range in {line!r}")
        edges.append((u, v))
    return Graph(n, edges)


def graph_to_text(g: Graph) -> str:
    """Canonical edge-list serialization (inverse of parse_graph)."""
    out = [str(g.n)]
    out.extend(f"{i} {j}" for i, j in g.edges())
    return "\n".join(out) + "\n"


def path_graph(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def star_graph(n: int) -> Graph:
    """Star on n vertices: center 0, leaves 1..n-1."""
    return Graph(n, [(0, i) for i in range(1, n)])


def complete_graph(n: int) -> Graph:
    return Graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def disjoint_union(graphs: Iterable[Graph]) -> tuple[Graph, list[int]]:
    """Disjoint union; returns the union graph and each part's label offset."""
    gs = list(graphs)
    offsets = []
    total = 0
    edges = []
    for g in gs:
        offsets.append(total)
        edges.extend((u + total, v + total) for u, v in g.edges())
        total += g.n
    return Graph(total, edges), offsets


class TwoColoring:
    """A red/blue assignment to every edge of K_n.

    Stored as an integer whose bit k gives the color of pair k in the
    fixed pair order (bit set = RED).  This matches the exhaustive
    enumeration encoding: coloring number x colors pair k red iff bit k
    of x is set.
    """

    __slots__ = ("n", "red_bits")

    def __init__(self, n: int, red_bits: int = 0):
        if n < 1:
            raise ValueError(f"coloring order must be >= 1, got {n}")
        npairs = pair_count(n)
        if red_bits < 0 or red_bits >> npairs:
            raise ValueError("red_bits has bits outside the pair range")
        self.n = n
        self.red_bits = red_bits

    @classmethod
    def all_red(cls, n: int) -> "TwoColoring":
        return cls(n, (1 << pair_count(n)) - 1)

    @classmethod
    def all_blue(cls, n: int) -> "TwoColoring":
        return cls(n, 0)

    @classmethod
    def from_pairs(cls, n: int, colors: dict[tuple[int, int], str]) -> "TwoColoring":
        """Build from an explicit pair->color dict; every pair must appear."""
        bits = 0
        seen = 0
        for (i, j), col in colors.items():
            k = pair_index(i, j, n)
            if seen >> k & 1:
                raise ValueError(f"pair ({i},{j}) given twice")
            seen |= 1 << k
            if col == RED:
                bits |= 1 << k
            elif col != BLUE:
                raise ValueError(f"bad color {col!r}")
        if seen != (1 << pair_count(n)) - 1:
            raise ValueError("not every pair was colored")
        return cls(n, bits)

    def color(self, i: int, j: int) -> str:
        return RED if self.red_bits >> pair_index(i, j, self.n) & 1 else BLUE

    def red_rows(self) -> list[int]:
        """Adjacency masks of the red subgraph."""
        rows = [0] * self.n
        bits = self.red_bits
        pairs = pair_list(self.n)
        while bits:
            b = bits & -bits
            i, j = pairs[b.bit_length() - 1]
            rows[i] |= 1 << j
            rows[j] |= 1 << i
            bits ^= b
        return rows

    def blue_rows(self) -> list[int]:
        full = self.full_mask
        red = self.red_rows()
        return [full & ~red[v] & ~(1 << v) for v in range(self.n)]

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def swapped(self) -> "TwoColoring":
        """The coloring with red and blue exchanged."""
        return TwoColoring(self.n, self.red_bits ^ (1 << pair_count(self.n)) - 1)

    def to_text(self) -> str:
        """Coloring file format: line 1 is N, line 2 is C(N,2) chars over {R,B}."""
        chars = []
        for k in range(pair_count(self.n)):
            chars.append(RED if self.red_bits >> k & 1 else BLUE)
        return f"{self.n}\n{''.join(chars)}\n"

    @classmethod
    def from_text(cls, text: str) -> "TwoColoring":
        lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
        if len(lines) < 1:
            raise ValueError("empty coloring file")
        n = int(lines[0])
        npairs = pair_count(n)
        body = lines[1] if len(lines) > 1 else ""
        if len(body) != npairs:
            raise ValueError(f"expected {npairs} color chars, got {len(body)}")
        bits = 0
        for k, ch in enumerate(body):
            if ch == RED:
                bits |= 1 << k
            elif ch != BLUE:
                raise ValueError(f"bad color char {ch!r} at position {k}")
        return cls(n, bits)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, TwoColoring)
            and self.n == other.n
            and self.red_bits == other.red_bits
        )

    def __hash__(self) -> int:
        return hash((self.n, self.red_bits))

    def __repr__(self) -> str:
        return f"TwoColoring(n={self.n}, red_bits={self.red_bits:#x})"


def color_subgraph(c: TwoColoring, which: str) -> Graph:
    """Spanning subgraph of K_n carrying the edges of one color."""
    if which not in (RED, BLUE):
        raise ValueError(f"color must be {RED!r} or {BLUE!r}")
    rows = c.red_rows() if which == RED else c.blue_rows()
    # rows are already symmetric and loop-free; skip the edge-list round trip
    out = Graph.__new__(Graph)
    out.n = c.n
    out.adj = tuple(rows)
    return out


def verify_embedding(pattern: Graph, host: Graph, mapping: dict[int, int]) -> bool:
    """True iff mapping is injective, total on pattern vertices, and carries
    every pattern edge to a host edge."""
    if len(mapping) != pattern.n:
        return False
    seen = 0
    for v in range(pattern.n):
        img = mapping.get(v)
        if img is None or not (0 <= img < host.n):
            return False
        b = 1 << img
        if seen & b:
            return False
        seen |= b
    for u, v in pattern.edges():
        if not host.has_edge(mapping[u], mapping[v]):
            return False
    return True
