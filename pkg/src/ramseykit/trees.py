"""Trees, the two rewriting operations, and plans between trees.

The two operations both delete one leaf and attach one new vertex, so
they preserve order, connectivity and acyclicity:

* stretch(t, a, b): a and b are distinct leaves; b's pendant edge is
  removed and a new vertex is attached to a (the pendant path at a gets
  one longer).
* expand(t, u, b): u has degree d with 2 <= d <= n-2, exactly one
  non-leaf neighbor, and all other neighbors leaves; b is a leaf outside
  u's closed neighborhood.  b is removed and a new vertex is attached to
  u (the star at u grows by one).

The new vertex reuses the deleted vertex's label, which keeps the vertex
set stable so plans compose without relabeling maps.

Planners: plan_to_path turns any tree into a path by stretches only
(one per off-path vertex relative to a fixed longest path);
plan_from_path builds any target tree from the canonical path
0-1-...-(n-1) by expanding branch vertices layer by layer and stretching
along the path segments in between; plan_between chains the two.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from typing import Iterator

from .graphs import Graph

STRETCH = "S"
EXPAND = "E"


class NotATreeError(ValueError):
    """Graph is not connected and acyclic."""


class NotALeafError(ValueError):
    """Operation vertex was required to be a leaf."""


class DegreeOutOfRangeError(ValueError):
    """Expand anchor degree outside [2, n-2]."""


class NeighborShapeError(ValueError):
    """Expand anchor must have exactly one non-leaf neighbor."""


class BNotEligibleError(ValueError):
    """Deleted vertex for expand must be a leaf outside N[u]."""


class OrderMismatchError(ValueError):
    """Planner endpoints have different vertex counts."""


class InvalidStepError(ValueError):
    """A plan step failed; carries the step index and the cause."""

    def __init__(self, index: int, cause: Exception):
        super().__init__(f"step {index}: {cause}")
        self.index = index
        self.cause = cause


class Tree(Graph):
    """Connected acyclic graph; validated on construction."""

    __slots__ = ()

    def __init__(self, n, edges=()):
        super().__init__(n, edges)
        if self.edge_count != n - 1:
            raise NotATreeError(f"{self.edge_count} edges on {n} vertices")
        if not self.is_connected():
            raise NotATreeError("not connected")

    def leaves(self) -> list[int]:
        return [v for v in range(self.n) if self.adj[v].bit_count() == 1]

    def is_path(self) -> bool:
        return self.n <= 2 or max(self.adj[v].bit_count() for v in range(self.n)) <= 2


def path_tree(n: int) -> Tree:
    return Tree(n, [(i, i + 1) for i in range(n - 1)])


def star_tree(n: int) -> Tree:
    return Tree(n, [(0, i) for i in range(1, n)])


def tree_from_graph(g: Graph) -> Tree:
    return Tree(g.n, g.edges())


@dataclass(frozen=True)
class OpStep:
    """One rewriting step.  anchor is the stretch leaf a or the expand
    vertex u; deleted is the removed leaf b.  The new vertex reuses the
    deleted label, so the added label equals deleted."""

    kind: str
    anchor: int
    deleted: int

    @property
    def added(self) -> int:
        return self.deleted

    def __str__(self) -> str:
        return f"{self.kind} {self.anchor} {self.deleted}"


Plan = list
"""A plan is a list of OpStep, each valid on the preceding prefix result."""


def stretch(t: Tree, a: int, b: int) -> Tree:
    """Delete leaf b and attach a new vertex (reusing label b) to leaf a."""
    if t.n < 3:
        raise ValueError(f"stretch needs n >= 3, got n={t.n}")
    if a == b:
        raise ValueError(f"stretch leaves must differ, got a=b={a}")
    if t.degree(a) != 1:
        raise NotALeafError(f"a={a} is not a leaf")
    if t.degree(b) != 1:
        raise NotALeafError(f"b={b} is not a leaf")
    edges = [(u, v) for u, v in t.edges() if b not in (u, v)]
    edges.append((a, b))
    return Tree(t.n, edges)


def expand(t: Tree, u: int, b: int) -> Tree:
    """Delete leaf b (outside N[u]) and attach a new vertex (reusing
    label b) to u, whose neighbors must be one non-leaf and d-1 leaves."""
    if t.n < 4:
        raise ValueError(f"expand needs n >= 4, got n={t.n}")
    d = t.degree(u)
    if not 2 <= d <= t.n - 2:
        raise DegreeOutOfRangeError(f"deg({u})={d} outside [2, {t.n - 2}]")
    non_leaf = [z for z in t.neighbors(u) if t.degree(z) > 1]
    if len(non_leaf) != 1:
        raise NeighborShapeError(
            f"vertex {u} has {len(non_leaf)} non-leaf neighbors, need exactly 1"
        )
    if t.degree(b) != 1 or b == u or t.has_edge(u, b):
        raise BNotEligibleError(f"b={b} must be a leaf outside N[{u}]")
    edges = [(x, y) for x, y in t.edges() if b not in (x, y)]
    edges.append((u, b))
    return Tree(t.n, edges)


def apply_step(t: Tree, step: OpStep) -> Tree:
    if step.kind == STRETCH:
        return stretch(t, step.anchor, step.deleted)
    if step.kind == EXPAND:
        return expand(t, step.anchor, step.deleted)
    raise ValueError(f"unknown step kind {step.kind!r}")


def apply_plan(t: Tree, plan: list[OpStep]) -> Tree:
    """Apply steps in order; errors carry the index of the first bad step."""
    cur = t
    for i, step in enumerate(plan):
        try:
            cur = apply_step(cur, step)
        except ValueError as e:
            raise InvalidStepError(i, e) from e
    return cur


def plan_to_text(plan: list[OpStep]) -> str:
    return "".join(f"{s}\n" for s in plan)


def plan_from_text(text: str) -> list[OpStep]:
    plan = []
    for ln, line in enumerate(text.splitlines(), start=1):
        parts = line.split()
        if not parts:
            continue
        if len(parts) != 3 or parts[0] not in (STRETCH, EXPAND):
            raise ValueError(f"line {ln}: bad plan step {line!r}")
        plan.append(OpStep(parts[0], int(parts[1]), int(parts[2])))
    return plan


# ---------------------------------------------------------------------------
# canonical forms and isomorphism


def tree_centers(t: Tree) -> list[int]:
    """The 1 or 2 middle vertices (iterated leaf removal)."""
    if t.n <= 2:
        return list(range(t.n))
    deg = [t.degree(v) for v in range(t.n)]
    layer = [v for v in range(t.n) if deg[v] == 1]
    remaining = t.n
    while remaining > 2:
        remaining -= len(layer)
        nxt = []
        for v in layer:
            deg[v] = 0
            for w in t.neighbors(v):
                if deg[w] > 1:
                    deg[w] -= 1
                    if deg[w] == 1:
                        nxt.append(w)
        layer = nxt
    return sorted(layer)


def _rooted_form(t: Tree, root: int) -> str:
    def rec(v: int, parent: int) -> str:
        subs = sorted(rec(w, v) for w in t.neighbors(v) if w != parent)
        return "(" + "".join(subs) + ")"

    return rec(root, -1)


def canonical_form(t: Tree) -> str:
    """Nested-parenthesis encoding, equal iff trees are isomorphic."""
    return min(_rooted_form(t, c) for c in tree_centers(t))


def is_isomorphic(a: Tree, b: Tree) -> bool:
    return a.n == b.n and canonical_form(a) == canonical_form(b)


def find_isomorphism(a: Tree, b: Tree) -> dict[int, int] | None:
    """An explicit vertex map a -> b realizing an isomorphism, or None."""
    if a.n != b.n:
        return None

    def forms(t: Tree) -> dict[tuple[int, int], str]:
        memo: dict[tuple[int, int], str] = {}

        def rec(v: int, parent: int) -> str:
            key = (v, parent)
            got = memo.get(key)
            if got is None:
                subs = sorted(rec(w, v) for w in t.neighbors(v) if w != parent)
                got = memo[key] = "(" + "".join(subs) + ")"
            return got

        for c in tree_centers(t):
            rec(c, -1)
        return memo

    fa, fb = forms(a), forms(b)
    for ca in tree_centers(a):
        for cb in tree_centers(b):
            if fa[(ca, -1)] != fb[(cb, -1)]:
                continue
            out: dict[int, int] = {}

            def match(va: int, pa: int, vb: int, pb: int) -> bool:
                out[va] = vb
                kids_a = sorted(
                    (fa[(w, va)], w) for w in a.neighbors(va) if w != pa
                )
                kids_b = sorted(
                    (fb[(w, vb)], w) for w in b.neighbors(vb) if w != pb
                )
                for (sa, wa), (sb, wb) in zip(kids_a, kids_b):
                    if sa != sb or not match(wa, va, wb, vb):
                        return False
                return True

            if match(ca, -1, cb, -1):
                return out
    return None


# ---------------------------------------------------------------------------
# longest paths and planners


def longest_path(t: Tree) -> list[int]:
    """The lexicographically least longest path, as a vertex sequence.

    All-pairs BFS plus a tie scan; paths in a tree are unique per endpoint
    pair, so comparing the (sequence, reversed sequence) minima over all
    diameter pairs is an exhaustive deterministic choice.
    """
    n = t.n
    if n == 1:
        return [0]
    dist = []
    par = []
    for s in range(n):
        d = [-1] * n
        p = [-1] * n
        d[s] = 0
        queue = [s]
        for v in queue:
            for w in t.neighbors(v):
                if d[w] < 0:
                    d[w] = d[v] + 1
                    p[w] = v
                    queue.append(w)
        dist.append(d)
        par.append(p)
    diam = max(max(row) for row in dist)
    best: list[int] | None = None
    for s in range(n):
        for e in range(n):
            if dist[s][e] != diam:
                continue
            seq = [e]
            while seq[-1] != s:
                seq.append(par[s][seq[-1]])
            seq.reverse()
            if best is None or seq < best:
                best = seq
    assert best is not None
    return best


def plan_to_path(t: Tree) -> list[OpStep]:
    """Stretch-only plan turning t into a path.

    Repeatedly stretches at the current end of a fixed longest path,
    deleting the largest-labeled leaf that is still off the path; the
    plan length equals the number of off-path vertices.
    """
    if t.n < 3 or t.is_path():
        return []
    path = longest_path(t)
    on_path = set(path)
    cur = t
    end = path[0]
    steps: list[OpStep] = []
    while True:
        off = [v for v in cur.leaves() if v not in on_path]
        if not off:
            return steps
        b = max(off)
        steps.append(OpStep(STRETCH, end, b))
        cur = stretch(cur, end, b)
        on_path.add(b)
        end = b


def _branch_layers(t: Tree, branch: int, on_path: set[int]) -> list[list[tuple[int, list[int]]]]:
    """Off-path subtree hanging at a branch vertex, as BFS layers.

    Each layer entry is (vertex, sorted children further from the path).
    """
    first = sorted(w for w in t.neighbors(branch) if w not in on_path)
    layers = []
    parent = {w: branch for w in first}
    layer = first
    while layer:
        entries = []
        nxt = []
        for v in layer:
            kids = sorted(w for w in t.neighbors(v) if w != parent[v])
            for w in kids:
                parent[w] = v
            entries.append((v, kids))
            nxt.extend(kids)
        layers.append(entries)
        layer = nxt
    return layers


def plan_from_path_with_map(target: Tree) -> tuple[list[OpStep], dict[int, int]]:
    """Plan applicable to the canonical path 0-1-...-(n-1) yielding a tree
    isomorphic to target, plus the realized map target vertex -> label in
    the plan's final tree.

    Layout on the canonical path: label 0 is the path vertex just past the
    first branch vertex, label 1 the first branch vertex, labels 2..q+1
    the segment back to the near path end, and labels q+2..n-1 the tail
    that the construction consumes from the largest label downward.  Each
    branch vertex gets its distance-1 vertices by expands; deeper layers
    get one stretch per layer vertex with children, then expands for the
    remaining children; path segments between branch vertices advance by
    stretches at the growing end.
    """
    n = target.n
    path = longest_path(target)
    if len(path) == n:
        return [], {path[i]: i for i in range(n)}
    qs = [i for i in range(len(path)) if target.degree(path[i]) > 2]
    q1 = qs[0]
    placement: dict[int, int] = {path[q1 + 1]: 0}
    for k in range(q1 + 1):
        placement[path[q1 - k]] = 1 + k
    tail = list(range(q1 + 2, n))
    on_path = set(path)
    steps: list[OpStep] = []
    cur = path_tree(n)
    frontier = 0

    def do_stretch(anchor: int) -> int:
        nonlocal cur
        b = tail.pop()
        steps.append(OpStep(STRETCH, anchor, b))
        cur = stretch(cur, anchor, b)
        return b

    def do_expand(anchor: int) -> int:
        nonlocal cur
        b = tail.pop()
        steps.append(OpStep(EXPAND, anchor, b))
        cur = expand(cur, anchor, b)
        return b

    prev_q = q1
    for bi, q in enumerate(qs):
        if bi > 0:
            for idx in range(prev_q + 2, q + 2):
                lbl = do_stretch(frontier)
                placement[path[idx]] = lbl
                frontier = lbl
        anchor = placement[path[q]]
        layers = _branch_layers(target, path[q], on_path)
        for w, _ in layers[0]:
            placement[w] = do_expand(anchor)
        for depth in range(len(layers)):
            with_kids = [(v, kids) for v, kids in layers[depth] if kids]
            for v, kids in with_kids:
                placement[kids[0]] = do_stretch(placement[v])
            for v, kids in with_kids:
                for w in kids[1:]:
                    placement[w] = do_expand(placement[v])
        prev_q = q
    for idx in range(prev_q + 2, len(path)):
        lbl = do_stretch(frontier)
        placement[path[idx]] = lbl
        frontier = lbl
    assert not tail
    return steps, placement


def plan_from_path(target: Tree) -> list[OpStep]:
    """Plan applicable to the canonical path 0-1-...-(n-1) whose result is
    isomorphic to target."""
    return plan_from_path_with_map(target)[0]


def plan_between(src: Tree, dst: Tree) -> list[OpStep]:
    """Plan turning src into a tree isomorphic to dst: src is first
    stretched down to a path, then the path is rebuilt into dst.  Not
    length-minimal."""
    if src.n != dst.n:
        raise OrderMismatchError(f"orders differ: {src.n} vs {dst.n}")
    if src.n < 3:
        return []
    head = plan_to_path(src)
    as_path = apply_plan(src, head)
    seq = longest_path(as_path)
    assert len(seq) == src.n
    tail = plan_from_path(dst)
    relabeled = [OpStep(s.kind, seq[s.anchor], seq[s.deleted]) for s in tail]
    return head + relabeled


# ---------------------------------------------------------------------------
# labeled-tree enumeration


def prufer_to_tree(seq: tuple[int, ...], n: int) -> Tree:
    """Decode a Pruefer sequence over labels 0..n-1 (length n-2).

    Uses the standard smallest-leaf rule, so decoding is a bijection from
    sequences to labeled trees.
    """
    if n == 1:
        return Tree(1)
    if n == 2:
        return Tree(2, [(0, 1)])
    if len(seq) != n - 2:
        raise ValueError(f"sequence length {len(seq)} != n-2 = {n - 2}")
    deg = [1] * n
    for v in seq:
        deg[v] += 1
    heap = [v for v in range(n) if deg[v] == 1]
    heapq.heapify(heap)
    edges = []
    for v in seq:
        leaf = heapq.heappop(heap)
        edges.append((leaf, v))
        deg[v] -= 1
        if deg[v] == 1:
            heapq.heappush(heap, v)
    edges.append((heapq.heappop(heap), heapq.heappop(heap)))
    return Tree(n, edges)


def labeled_trees(n: int) -> Iterator[Tree]:
    """All n^(n-2) labeled trees on 0..n-1, in Pruefer order."""
    if n <= 2:
        yield path_tree(n)
        return
    for seq in product(range(n), repeat=n - 2):
        yield prufer_to_tree(seq, n)


@lru_cache(maxsize=None)
def distinct_trees(n: int) -> tuple[Tree, ...]:
    """One representative per isomorphism class, ordered by canonical form."""
    reps: dict[str, Tree] = {}
    for t in labeled_trees(n):
        key = canonical_form(t)
        if key not in reps:
            reps[key] = t
    return tuple(reps[k] for k in sorted(reps))
