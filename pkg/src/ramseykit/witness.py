"""Witness extraction: given a coloring, produce a red forest embedding or
a blue clique-union embedding.

Two engines are provided.

The oracle (embed_red_forest / find_blue_cliques / search_witness) is a
complete backtracking search over bit masks: pattern vertices are tried
in BFS order from a max-degree root, host candidates in ascending label,
identical components and clique vertices in ascending-root order to cut
symmetric duplicates.  It returns None only when no embedding exists.

The proof-guided extractors mirror the threshold arguments behind the
closed-form values.  Their common skeleton: pull a red copy of a smaller
or earlier tree out of the host, recurse on the untouched remainder for a
smaller blue target, and then either re-attach the missing vertices
through red edges into the blue cliques found, or assemble the blue
cliques into the full blue target.  Every case exit appends a trace
entry, and every "there exists" in the argument is resolved by the
lowest-label candidate, so extraction is deterministic.

At or above the formula value the extractors always return a witness.
Strictly below it they delegate to the complete search and raise
BelowThresholdError only when no witness exists at all, so engine
verdicts agree with the oracle at every N.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from .graphs import (
    BLUE,
    Graph,
    RED,
    TwoColoring,
    color_subgraph,
    verify_embedding,
)
from .formulas import (
    CliqueUnion,
    ForestSpec,
    UnsupportedTargetError,
    ramsey_value,
)
from .trees import (
    EXPAND,
    OpStep,
    STRETCH,
    Tree,
    apply_step,
    canonical_form,
    expand,
    find_isomorphism,
    longest_path,
    path_tree,
    plan_from_path_with_map,
    stretch,
)


class BelowThresholdError(ValueError):
    """Host below the formula value and no witness exists on it."""


class ExtractionError(RuntimeError):
    """Internal contradiction: a step guaranteed by the threshold failed."""


@dataclass
class Witness:
    """A one-sided certificate: an embedding of the pattern into the red
    or blue subgraph, plus the extraction trace."""

    side: str
    pattern: Graph
    mapping: dict[int, int]
    trace: list[str] = field(default_factory=list)

    def validate(self, c: TwoColoring) -> bool:
        return verify_embedding(self.pattern, color_subgraph(c, self.side), self.mapping)

    def to_text(self) -> str:
        lines = ["RED" if self.side == RED else "BLUE"]
        lines.extend(f"{p} -> {self.mapping[p]}" for p in sorted(self.mapping))
        lines.append("# trace:")
        lines.extend(f"# {entry}" for entry in self.trace)
        return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# bit-mask plumbing


def _mask(vertices) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def _bits(mask: int):
    while mask:
        b = mask & -mask
        yield b.bit_length() - 1
        mask ^= b


@lru_cache(maxsize=None)
def _tree_struct(t: Tree) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """BFS order from a max-degree root plus parent indices into the order."""
    root = max(range(t.n), key=lambda v: (t.degree(v), -v))
    order = [root]
    parents = [-1]
    pos = {root: 0}
    for v in order:
        for w in sorted(t.neighbors(v)):
            if w not in pos:
                pos[w] = len(order)
                order.append(w)
                parents.append(pos[v])
    return tuple(order), tuple(parents)


def _struct_from_adj(adj: dict[int, list[int]]) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Same as _tree_struct for a subtree given as an adjacency dict."""
    root = max(adj, key=lambda v: (len(adj[v]), -v))
    order = [root]
    parents = [-1]
    pos = {root: 0}
    for v in order:
        for w in sorted(adj[v]):
            if w not in pos:
                pos[w] = len(order)
                order.append(w)
                parents.append(pos[v])
    return tuple(order), tuple(parents)


def _adj_minus(t: Graph, removed) -> dict[int, list[int]]:
    gone = set(removed)
    return {
        v: [w for w in t.neighbors(v) if w not in gone]
        for v in range(t.n)
        if v not in gone
    }


@lru_cache(maxsize=None)
def _comp_struct(t: Tree) -> tuple[tuple[int, ...], tuple[int, ...], str]:
    order, parents = _tree_struct(t)
    return order, parents, canonical_form(t)


# ---------------------------------------------------------------------------
# complete search (the oracle)


def _host_components(rows, allowed: int) -> list[int]:
    """Connected components of the host graph restricted to allowed."""
    comps = []
    rem = allowed
    while rem:
        comp = rem & -rem
        frontier = comp
        while frontier:
            nxt = 0
            m = frontier
            while m:
                b = m & -m
                nxt |= rows[b.bit_length() - 1]
                m ^= b
            frontier = nxt & allowed & ~comp
            comp |= frontier
        comps.append(comp)
        rem &= ~comp
    return comps


def _assignment_infeasible(red, allowed: int, structs) -> bool:
    """Necessary-condition prune for multi-component embeddings: each tree
    must land inside one host component, so if no assignment of trees to
    host components respects individual fits and capacities, the joint
    embedding cannot exist.  (The converse does not hold; a feasible
    assignment just hands over to the full search.)"""
    comps = _host_components(red, allowed)
    caps = [c.bit_count() for c in comps]
    orders = [len(s[0]) for s in structs]
    fit_memo: dict[tuple[str, int], bool] = {}
    fits = []
    for s in structs:
        row = []
        for cm, cap in zip(comps, caps):
            if len(s[0]) > cap:
                row.append(False)
                continue
            key = (s[2], cm)
            got = fit_memo.get(key)
            if got is None:
                got = _search_forest(red, cm, [s]) is not None
                fit_memo[key] = got
            row.append(got)
        fits.append(row)
    memo: dict[tuple[int, tuple[int, ...]], bool] = {}

    def assign(i: int, caps_t: tuple[int, ...]) -> bool:
        if i == len(orders):
            return True
        key = (i, caps_t)
        got = memo.get(key)
        if got is not None:
            return got
        ok = False
        for j in range(len(caps_t)):
            if fits[i][j] and orders[i] <= caps_t[j]:
                nxt = caps_t[:j] + (caps_t[j] - orders[i],) + caps_t[j + 1:]
                if assign(i + 1, nxt):
                    ok = True
                    break
        memo[key] = ok
        return ok

    return not assign(0, tuple(caps))


def _embed_forest_rows(red, allowed: int, structs) -> list[dict[int, int]] | None:
    """Complete backtracking embedding of every component into the red
    rows, vertex-disjoint.  structs: (bfs order, parent indices, canonical
    form) per component; identical consecutive components are forced into
    ascending root images."""
    if len(structs) > 1 and _assignment_infeasible(red, allowed, structs):
        return None
    return _search_forest(red, allowed, structs)


def _search_forest(red, allowed: int, structs) -> list[dict[int, int]] | None:
    imgs: list[dict[int, int]] = [{} for _ in structs]

    def comp(ci: int, used: int, prev_root: int) -> bool:
        if ci == len(structs):
            return True
        order, parents, canon = structs[ci]
        lo = prev_root + 1 if ci > 0 and structs[ci - 1][2] == canon else 0
        mp = imgs[ci]

        def vertex(vi: int, used2: int) -> bool:
            if vi == len(order):
                return comp(ci + 1, used2, mp[order[0]])
            p = parents[vi]
            if p < 0:
                cand = allowed & ~used2 & ~((1 << lo) - 1)
            else:
                cand = red[mp[order[p]]] & allowed & ~used2
            v = order[vi]
            m = cand
            while m:
                b = m & -m
                m ^= b
                mp[v] = b.bit_length() - 1
                if vertex(vi + 1, used2 | b):
                    return True
            return False

        return vertex(0, used)

    return imgs if comp(0, 0, -1) else None


def _find_cliques_rows(blue, allowed: int, sizes) -> list[list[int]] | None:
    """Vertex-disjoint blue cliques of the given sizes (descending), each
    listed ascending, or None.  Complete search; equal-size cliques are
    forced into ascending smallest-vertex order."""
    out: list[list[int]] = []

    def place(ci: int, used: int, lo: int) -> bool:
        if ci == len(sizes):
            return True
        size = sizes[ci]
        start = lo if ci > 0 and sizes[ci - 1] == size else 0
        base = allowed & ~used & ~((1 << start) - 1)

        def grow(clique: list[int], cand: int) -> bool:
            if len(clique) == size:
                out.append(clique[:])
                if place(ci + 1, used | _mask(clique), clique[0] + 1):
                    return True
                out.pop()
                return False
            need = size - len(clique)
            m = cand
            while m:
                if m.bit_count() < need:
                    return False
                b = m & -m
                v = b.bit_length() - 1
                m ^= b
                clique.append(v)
                if grow(clique, cand & blue[v] & ~((b << 1) - 1)):
                    return True
                clique.pop()
                cand = m | _mask(clique)  # keep cand's semantics: supersets pruned by m
            return False

        return grow([], base)

    return out if place(0, 0, 0) else None


def embed_red_forest(c: TwoColoring, f: ForestSpec) -> dict[int, int] | None:
    """Injective red embedding of every component of f, or None iff no
    such embedding exists.  Keys are the forest union-graph labels
    (components largest-first, consecutive blocks)."""
    structs = [_comp_struct(t) for t in f.components]
    got = _embed_forest_rows(c.red_rows(), c.full_mask, structs)
    if got is None:
        return None
    mapping = {}
    for off, mp in zip(f.offsets(), got):
        for v, hv in mp.items():
            mapping[off + v] = hv
    return mapping


def find_blue_cliques(c: TwoColoring, h: CliqueUnion) -> dict[int, int] | None:
    """Vertex-disjoint blue cliques of the required sizes, or None."""
    got = _find_cliques_rows(c.blue_rows(), c.full_mask, h.sizes)
    if got is None:
        return None
    mapping = {}
    for off, verts in zip(h.offsets(), got):
        for idx, hv in enumerate(verts):
            mapping[off + idx] = hv
    return mapping


def search_witness(c: TwoColoring, f: ForestSpec, h: CliqueUnion) -> Witness | None:
    """Ground-truth oracle: red search first, then blue; None iff both fail."""
    emb = embed_red_forest(c, f)
    if emb is not None:
        return Witness(RED, f.as_graph(), emb, ["complete search: red forest found"])
    emb = find_blue_cliques(c, h)
    if emb is not None:
        return Witness(BLUE, h.as_graph(), emb, ["complete search: blue cliques found"])
    return None


# ---------------------------------------------------------------------------
# proof-guided cores (all work on red/blue rows plus an allowed mask)


def _greedy_embed(red, allowed: int, order, parents) -> dict[int, int] | None:
    used = 0
    mp: dict[int, int] = {}
    for vi, v in enumerate(order):
        p = parents[vi]
        cand = (allowed & ~used) if p < 0 else (red[mp[order[p]]] & allowed & ~used)
        if not cand:
            return None
        b = cand & -cand
        mp[v] = b.bit_length() - 1
        used |= b
    return mp


def _chvatal(red, allowed: int, struct, m: int, trace: list[str]):
    """Red tree or blue K_m inside `allowed`.

    If some vertex has enough blue neighbors, recurse inside its blue
    neighborhood for K_{m-1} and extend; otherwise the red minimum degree
    admits a greedy tree embedding.
    """
    order, parents = struct
    n = len(order)
    if m == 1:
        v = (allowed & -allowed).bit_length() - 1
        return ("B", [v])
    blue_thr = (n - 1) * (m - 2) + 1
    a = allowed
    while a:
        b = a & -a
        v = b.bit_length() - 1
        a ^= b
        blue_nbhd = allowed & ~red[v] & ~b
        if blue_nbhd.bit_count() >= blue_thr:
            res = _chvatal(red, blue_nbhd, struct, m - 1, trace)
            if res[0] == "R":
                return res
            trace.append(f"blue clique grown through pivot {v}")
            return ("B", res[1] + [v])
    mp = _greedy_embed(red, allowed, order, parents)
    if mp is None:
        raise ExtractionError("greedy red embedding failed despite degree bound")
    trace.append("red degrees high everywhere: greedy tree embedding")
    return ("R", mp)


def _search_tree_vs_2km(ctx, allowed: int, tree: Tree, m: int):
    """Complete search base: red tree or blue pair of K_m inside allowed."""
    red, blue = ctx
    got = _embed_forest_rows(red, allowed, [_comp_struct(tree)])
    if got is not None:
        return ("R", got[0])
    cl = _find_cliques_rows(blue, allowed, (m, m))
    if cl is not None:
        return ("B", (cl[0], cl[1]))
    return None


def _path_2km(ctx, allowed: int, n: int, m: int, trace: list[str]):
    """Red host path on n vertices (as a host-vertex sequence) or a blue
    pair of K_m inside allowed."""
    red, blue = ctx
    if m == 2:
        res = _search_tree_vs_2km(ctx, allowed, path_tree(n), 2)
        if res is None:
            raise ExtractionError("base case found no witness at threshold")
        trace.append("base target (two blue edges): complete search")
        if res[0] == "R":
            mp = res[1]
            return ("R", [mp[i] for i in range(n)])
        return res
    r = _chvatal(red, allowed, _tree_struct(path_tree(n)), m, trace)
    if r[0] == "R":
        trace.append("full-length red path found directly")
        return ("R", [r[1][i] for i in range(n)])
    k_first = r[1]
    r2 = _chvatal(red, allowed & ~_mask(k_first), _tree_struct(path_tree(n - 1)), m, trace)
    if r2[0] == "B":
        trace.append("second disjoint blue clique: blue pair assembled")
        return ("B", (sorted(k_first), sorted(r2[1])))
    seq = [r2[1][i] for i in range(n - 1)]
    v1, v2 = seq[0], seq[-1]
    trace.append(f"red path on {n - 1} vertices with ends {v1},{v2}")
    sub = _path_2km(ctx, allowed & ~_mask(seq), n, m - 1, trace)
    if sub[0] == "R":
        return sub
    a_set, b_set = sub[1]
    for x in sorted(a_set) + sorted(b_set):
        if red[v1] >> x & 1:
            trace.append(f"red edge {v1}-{x} extends the path")
            return ("R", [x] + seq)
        if red[v2] >> x & 1:
            trace.append(f"red edge {v2}-{x} extends the path")
            return ("R", seq + [x])
    trace.append("both path ends blue to both cliques: blue pair grown")
    return ("B", (sorted(a_set) + [v1], sorted(b_set) + [v2]))


@lru_cache(maxsize=None)
def _plan_data(t: Tree):
    plan, placement = plan_from_path_with_map(t)
    trees = [path_tree(t.n)]
    for s in plan:
        trees.append(apply_step(trees[-1], s))
    return tuple(plan), tuple(trees), tuple(placement.items())


def _tree_2km(ctx, allowed: int, tree: Tree, m: int, trace: list[str]):
    """Red copy of `tree` (mapping on its labels) or a blue pair of K_m."""
    n = tree.n
    if m == 2:
        res = _search_tree_vs_2km(ctx, allowed, tree, 2)
        if res is None:
            raise ExtractionError("base case found no witness at threshold")
        trace.append("base target (two blue edges): complete search")
        return res
    if tree.is_path():
        r = _path_2km(ctx, allowed, n, m, trace)
        if r[0] == "B":
            return r
        seq = longest_path(tree)
        return ("R", {seq[i]: r[1][i] for i in range(n)})
    plan, prefix, placement = _plan_data(tree)
    res = _extract_along(ctx, allowed, plan, prefix, len(plan), m, trace)
    if res[0] == "B":
        return res
    mp = res[1]
    return ("R", {tv: mp[lbl] for tv, lbl in placement})


def _extract_along(ctx, allowed: int, plan, prefix, i: int, m: int, trace: list[str]):
    """Witness for the i-th tree of a rewriting plan versus a blue pair of
    K_m, by recursing down the plan."""
    if i == 0:
        n = prefix[0].n
        r = _path_2km(ctx, allowed, n, m, trace)
        if r[0] == "B":
            return r
        return ("R", {j: r[1][j] for j in range(n)})
    step = plan[i - 1]
    t_star = prefix[i - 1]

    def sub(al: int):
        return _extract_along(ctx, al, plan, prefix, i - 1, m, trace)

    if step.kind == STRETCH:
        return _stretch_core(ctx, allowed, t_star, step.anchor, step.deleted, m, sub, trace)
    return _expand_core(ctx, allowed, t_star, step.anchor, step.deleted, m, sub, trace)


def _delegate_via_iso(t_new: Tree, t_old: Tree, res):
    if res[0] == "B":
        return res
    iso = find_isomorphism(t_new, t_old)
    assert iso is not None
    return ("R", {v: res[1][iso[v]] for v in range(t_new.n)})


def _first_red(red, candidates, target: int):
    for x in candidates:
        if red[x] >> target & 1:
            return x
    return None


def _stretch_core(ctx, allowed, t_star, a, b, m, sub_tstar, trace):
    """Witness for the stretched tree, given an extractor for the base tree.

    The rewrite moved leaf b from its old support onto the anchor leaf a.
    After embedding the base tree minus b and finding a blue pair of
    K_{m-1} in the remainder, either a red edge from a's image reattaches
    the moved leaf, or a reduced tree (missing the moved leaf and one
    designated leaf c) embeds in the leftover block and two red edges into
    the blue cliques complete it, or a further blue clique forces a
    three-edge re-attachment through the anchor's support.
    """
    red, blue = ctx
    t_ss = stretch(t_star, a, b)
    n = t_star.n
    if m == 2:
        res = _search_tree_vs_2km(ctx, allowed, t_ss, 2)
        if res is None:
            raise ExtractionError("base case found no witness at threshold")
        trace.append("base target (two blue edges): complete search")
        return res
    if canonical_form(t_star) == canonical_form(t_ss):
        trace.append("stretch did not change the shape: delegating")
        return _delegate_via_iso(t_ss, t_star, sub_tstar(allowed))
    u = next(t_star.neighbors(a))
    c_leaf = min(v for v in t_star.leaves() if v not in (a, u, b))
    v_c = next(t_star.neighbors(c_leaf))
    trace.append(
        f"stretch step: anchor {a} (support {u}), moved leaf {b}, designated leaf {c_leaf}"
    )
    r1 = sub_tstar(allowed)
    if r1[0] == "B":
        trace.append("blue pair passthrough from base tree")
        return r1
    e1 = r1[1]
    keep = [x for x in range(n) if x != b]
    rest = allowed & ~_mask(e1[x] for x in keep)
    r2 = _tree_2km(ctx, rest, t_ss, m - 1, trace)
    if r2[0] == "R":
        trace.append("stretched tree embedded wholly in the remainder")
        return r2
    a_set, b_set = r2[1]
    ea = e1[a]
    x = _first_red(red, sorted(a_set) + sorted(b_set), ea)
    if x is not None:
        trace.append(f"red edge {ea}-{x} reattaches the moved leaf")
        mp = {y: e1[y] for y in keep}
        mp[b] = x
        return ("R", mp)
    f_block = (rest & ~_mask(a_set) & ~_mask(b_set)) | (1 << e1[c_leaf])
    # reduced tree: drop the moved-in leaf and the designated leaf
    # (the two pendant roles that get re-added through red edges)
    mid_struct = _struct_from_adj(_adj_minus(t_ss, (b, c_leaf)))
    r3 = _chvatal(red, f_block, mid_struct, m - 1, trace)
    if r3[0] == "R":
        e3 = r3[1]
        x_a = _first_red(red, sorted(a_set), e3[v_c])
        if x_a is None:
            trace.append("designated-leaf support blue to first clique: blue pair")
            return ("B", (sorted(a_set) + [e3[v_c]], sorted(b_set) + [ea]))
        x_b = _first_red(red, sorted(b_set), e3[a])
        if x_b is None:
            trace.append("anchor image blue to second clique: blue pair")
            return ("B", (sorted(b_set) + [e3[a]], sorted(a_set) + [ea]))
        trace.append(f"reduced tree in leftover block patched via {x_a},{x_b}")
        mp = dict(e3)
        mp[c_leaf] = x_a
        mp[b] = x_b
        return ("R", mp)
    c_set = r3[1]
    x_a = _first_red(red, sorted(a_set), e1[u])
    if x_a is None:
        trace.append("anchor support blue to first clique: blue pair")
        return ("B", (sorted(a_set) + [e1[u]], sorted(b_set) + [ea]))
    x_b = _first_red(red, sorted(b_set), e1[v_c])
    if x_b is None:
        trace.append("designated-leaf support blue to second clique: blue pair")
        return ("B", (sorted(b_set) + [e1[v_c]], sorted(a_set) + [ea]))
    x_c = _first_red(red, sorted(c_set), x_a)
    if x_c is None:
        trace.append("third blue clique fully blue to patch vertex: blue pair")
        return ("B", (sorted(c_set) + [x_a], sorted(b_set) + [ea]))
    trace.append(f"three-edge patch via {x_a},{x_c},{x_b}")
    mp = {y: e1[y] for y in range(n) if y not in (a, b, c_leaf)}
    mp[a] = x_a
    mp[b] = x_c
    mp[c_leaf] = x_b
    return ("R", mp)


def _expand_core(ctx, allowed, t_star, u, b, m, sub_tstar, trace):
    """Witness for the expanded tree, given an extractor for the base tree.

    The rewrite moved leaf b onto the star vertex u.  After embedding the
    base tree minus b and a blue pair of K_{m-1} in the remainder, blue
    cliques are peeled off shrinking leftover blocks, one per leaf of the
    star; either some block holds a reduced red tree that the peeled
    cliques re-complete through red edges at u's image, or the star is
    rebuilt on a fresh center drawn from the first peeled clique.
    """
    red, blue = ctx
    t_ss = expand(t_star, u, b)
    n = t_star.n
    if m == 2:
        res = _search_tree_vs_2km(ctx, allowed, t_ss, 2)
        if res is None:
            raise ExtractionError("base case found no witness at threshold")
        trace.append("base target (two blue edges): complete search")
        return res
    if canonical_form(t_star) == canonical_form(t_ss):
        trace.append("expand did not change the shape: delegating")
        return _delegate_via_iso(t_ss, t_star, sub_tstar(allowed))
    nbrs = sorted(t_star.neighbors(u))
    z0 = next(z for z in nbrs if t_star.degree(z) > 1)
    zs = [z for z in nbrs if z != z0]
    d = len(nbrs)
    trace.append(f"expand step: star vertex {u} (support {z0}), moved leaf {b}")
    r1 = sub_tstar(allowed)
    if r1[0] == "B":
        trace.append("blue pair passthrough from base tree")
        return r1
    e1 = r1[1]
    keep = [x for x in range(n) if x != b]
    rest = allowed & ~_mask(e1[x] for x in keep)
    r2 = _tree_2km(ctx, rest, t_ss, m - 1, trace)
    if r2[0] == "R":
        trace.append("expanded tree embedded wholly in the remainder")
        return r2
    a_set, b_set = r2[1]
    eu = e1[u]
    x = _first_red(red, sorted(a_set) + sorted(b_set), eu)
    if x is not None:
        trace.append(f"red edge {eu}-{x} reattaches the moved leaf")
        mp = {y: e1[y] for y in keep}
        mp[b] = x
        return ("R", mp)
    kids = sorted(zs + [b])
    block = (rest & ~_mask(a_set) & ~_mask(b_set)) | (1 << e1[zs[0]])
    peeled: list[list[int]] = []
    for i in range(1, d):
        removed = kids[: i + 1]
        mid_struct = _struct_from_adj(_adj_minus(t_ss, removed))
        r3 = _chvatal(red, block, mid_struct, m - 1, trace)
        if r3[0] == "R":
            e3 = r3[1]
            reps = []
            for s_set in [a_set, b_set] + peeled:
                rep = _first_red(red, sorted(s_set), e3[u])
                if rep is None:
                    partner = b_set if s_set is a_set else a_set
                    trace.append("star image blue to a peeled clique: blue pair")
                    return ("B", (sorted(s_set) + [e3[u]], sorted(partner) + [eu]))
                reps.append(rep)
            trace.append(f"reduced tree in block {i} patched via {reps}")
            mp = dict(e3)
            for leaf, rep in zip(removed, reps):
                mp[leaf] = rep
            return ("R", mp)
        peeled.append(r3[1])
        trace.append(f"peeled blue clique {i} of size {m - 1}")
        if i + 1 <= d - 1:
            block = (block & ~_mask(r3[1])) | (1 << e1[zs[i]])
    first = peeled[0]
    ez0 = e1[z0]
    x_center = _first_red(red, sorted(first), ez0)
    if x_center is None:
        trace.append("star support blue to first peeled clique: blue pair")
        return ("B", (sorted(first) + [ez0], sorted(b_set) + [eu]))
    reps = []
    for s_set in [a_set, b_set] + peeled[1:]:
        rep = _first_red(red, sorted(s_set), x_center)
        if rep is None:
            partner = b_set if s_set is a_set else a_set
            trace.append("fresh center blue to a clique: blue pair")
            return ("B", (sorted(s_set) + [x_center], sorted(partner) + [eu]))
        reps.append(rep)
    trace.append(f"star rebuilt on fresh center {x_center} with leaves {reps}")
    drop = set(zs) | {u, b}
    mp = {y: e1[y] for y in range(n) if y not in drop}
    mp[u] = x_center
    for leaf, rep in zip(kids, reps):
        mp[leaf] = rep
    return ("R", mp)


def _tree_kmkl(ctx, allowed, tree: Tree, m: int, l: int, trace: list[str]):
    """Red copy of `tree` or a blue pair of cliques of sizes (m, l)."""
    red, blue = ctx
    lv = tree.leaves()
    u_leaf, v_leaf = lv[0], lv[1]
    r1 = _tree_2km(ctx, allowed, tree, m - 1, trace)
    if r1[0] == "R":
        return r1
    a_set, b_set = r1[1]
    f_block = allowed & ~_mask(a_set) & ~_mask(b_set)
    mid_struct = _struct_from_adj(_adj_minus(tree, (u_leaf, v_leaf)))
    r2 = _chvatal(red, f_block, mid_struct, m, trace)
    if r2[0] == "B":
        trace.append("blue large clique beside an earlier blue clique")
        return ("B", (sorted(r2[1]), sorted(a_set)[:l]))
    e3 = r2[1]
    u_p = next(tree.neighbors(u_leaf))
    v_p = next(tree.neighbors(v_leaf))
    x_a = _first_red(red, sorted(a_set), e3[u_p])
    if x_a is None:
        trace.append("first leaf support blue to first clique: blue pair")
        return ("B", (sorted(a_set) + [e3[u_p]], sorted(b_set)[:l]))
    x_b = _first_red(red, sorted(b_set), e3[v_p])
    if x_b is None:
        trace.append("second leaf support blue to second clique: blue pair")
        return ("B", (sorted(b_set) + [e3[v_p]], sorted(a_set)[:l]))
    trace.append(f"two pendant leaves reattached via {x_a},{x_b}")
    mp = dict(e3)
    mp[u_leaf] = x_a
    mp[v_leaf] = x_b
    return ("R", mp)


def _single_tree_core(ctx, allowed, tree: Tree, h: CliqueUnion, trace: list[str]):
    """Dispatch one tree component against the blue target; blue results
    are returned as per-clique vertex lists matching h.sizes."""
    red, blue = ctx
    if len(h.sizes) == 1:
        res = _chvatal(red, allowed, _tree_struct(tree), h.sizes[0], trace)
        if res[0] == "B":
            return ("B", (sorted(res[1]),))
        return res
    m, l = h.sizes
    if m == l:
        res = _tree_2km(ctx, allowed, tree, m, trace)
        if res[0] == "B":
            return ("B", (sorted(res[1][0]), sorted(res[1][1])))
        return res
    return _tree_kmkl(ctx, allowed, tree, m, l, trace)


# ---------------------------------------------------------------------------
# public extractors


def _blue_witness(h: CliqueUnion, sets, trace) -> Witness:
    mapping = {}
    for off, size, verts in zip(h.offsets(), h.sizes, sets):
        vs = sorted(verts)
        if len(vs) != size:
            raise ExtractionError(f"blue clique has {len(vs)} vertices, wanted {size}")
        for idx, hv in enumerate(vs):
            mapping[off + idx] = hv
    return Witness(BLUE, h.as_graph(), mapping, trace)


def _checked(w: Witness, c: TwoColoring) -> Witness:
    if not w.validate(c):
        raise ExtractionError("extractor produced an invalid witness")
    return w


def _fallback_search(c: TwoColoring, f: ForestSpec, h: CliqueUnion, trace, need: int) -> Witness:
    trace.append(f"host has {c.n} < {need} vertices: complete search fallback")
    w = search_witness(c, f, h)
    if w is None:
        raise BelowThresholdError(
            f"host order {c.n} below formula value {need} and no witness exists"
        )
    w.trace = trace + w.trace
    return w


def _ctx(c: TwoColoring):
    red = c.red_rows()
    full = c.full_mask
    blue = [full & ~red[v] & ~(1 << v) for v in range(c.n)]
    return (red, blue)


def chvatal_extract(c: TwoColoring, t: Tree, m: int) -> Witness:
    """Red tree or blue K_m on a host of order >= (n-1)(m-1)+1."""
    if m < 1:
        raise ValueError(f"m must be >= 1, got {m}")
    need = (t.n - 1) * (m - 1) + 1
    trace: list[str] = []
    if c.n < need:
        return _fallback_search(c, ForestSpec([t]), CliqueUnion([m]), trace, need)
    red = c.red_rows()
    res = _chvatal(red, c.full_mask, _tree_struct(t), m, trace)
    if res[0] == "R":
        return _checked(Witness(RED, t, res[1], trace), c)
    if m == 1:
        return _checked(Witness(BLUE, Graph(1), {0: res[1][0]}, trace), c)
    return _checked(_blue_witness(CliqueUnion([m]), (res[1],), trace), c)


def path_2km_extract(c: TwoColoring, n: int, m: int) -> Witness:
    """Red path on n vertices or a blue pair of K_m at the path threshold."""
    if n < 3 or m < 2:
        raise ValueError(f"need n >= 3 and m >= 2, got n={n}, m={m}")
    h = CliqueUnion([m, m])
    need = (n - 1) * (m - 1) + 2
    trace: list[str] = []
    if c.n < need:
        return _fallback_search(c, ForestSpec([path_tree(n)]), h, trace, need)
    res = _path_2km(_ctx(c), c.full_mask, n, m, trace)
    if res[0] == "R":
        mapping = {i: res[1][i] for i in range(n)}
        return _checked(Witness(RED, path_tree(n), mapping, trace), c)
    return _checked(_blue_witness(h, res[1], trace), c)


def tree_2km_extract(c: TwoColoring, t: Tree, m: int) -> Witness:
    """Red tree or a blue pair of K_m at the tree threshold; recursion runs
    over m and over the rewriting plan that builds t from a path."""
    if t.n < 3 or m < 2:
        raise ValueError(f"need n >= 3 and m >= 2, got n={t.n}, m={m}")
    h = CliqueUnion([m, m])
    need = (t.n - 1) * (m - 1) + 2
    trace: list[str] = []
    if c.n < need:
        return _fallback_search(c, ForestSpec([t]), h, trace, need)
    res = _tree_2km(_ctx(c), c.full_mask, t, m, trace)
    if res[0] == "R":
        return _checked(Witness(RED, t, res[1], trace), c)
    return _checked(_blue_witness(h, res[1], trace), c)


def _step_extract(c: TwoColoring, t_star: Tree, step: OpStep, m: int, core) -> Witness:
    if m < 2:
        raise ValueError(f"m must be >= 2, got {m}")
    t_ss = apply_step(t_star, step)
    h = CliqueUnion([m, m])
    need = (t_star.n - 1) * (m - 1) + 2
    trace: list[str] = []
    if c.n < need:
        return _fallback_search(c, ForestSpec([t_ss]), h, trace, need)
    ctx = _ctx(c)

    def sub(al: int):
        return _tree_2km(ctx, al, t_star, m, trace)

    res = core(ctx, c.full_mask, t_star, step.anchor, step.deleted, m, sub, trace)
    if res[0] == "R":
        return _checked(Witness(RED, t_ss, res[1], trace), c)
    return _checked(_blue_witness(h, res[1], trace), c)


def stretch_step_extract(c: TwoColoring, t_star: Tree, step: OpStep, m: int) -> Witness:
    """Witness for the stretched tree, given that the base tree's threshold
    holds; step must be a valid stretch on t_star."""
    if step.kind != STRETCH:
        raise ValueError(f"expected a stretch step, got {step.kind!r}")
    return _step_extract(c, t_star, step, m, _stretch_core)


def expand_step_extract(c: TwoColoring, t_star: Tree, step: OpStep, m: int) -> Witness:
    """Witness for the expanded tree, given that the base tree's threshold
    holds; step must be a valid expand on t_star."""
    if step.kind != EXPAND:
        raise ValueError(f"expected an expand step, got {step.kind!r}")
    return _step_extract(c, t_star, step, m, _expand_core)


def tree_kmkl_extract(c: TwoColoring, t: Tree, m: int, l: int) -> Witness:
    """Red tree or blue pair of cliques of sizes m > l >= 2."""
    if not (m > l >= 2):
        raise ValueError(f"need m > l >= 2, got m={m}, l={l}")
    if t.n < 3:
        raise ValueError(f"need n >= 3, got {t.n}")
    h = CliqueUnion([m, l])
    need = (t.n - 1) * (m - 1) + 1
    trace: list[str] = []
    if c.n < need:
        return _fallback_search(c, ForestSpec([t]), h, trace, need)
    res = _tree_kmkl(_ctx(c), c.full_mask, t, m, l, trace)
    if res[0] == "R":
        return _checked(Witness(RED, t, res[1], trace), c)
    return _checked(_blue_witness(h, res[1], trace), c)


def forest_extract(c: TwoColoring, f: ForestSpec, h: CliqueUnion) -> Witness:
    """Red embedding of the whole forest or blue target, by embedding the
    components largest-first into shrinking residual hosts."""
    if len(h.sizes) > 2:
        raise UnsupportedTargetError(
            f"no extractor for {len(h.sizes)} clique components"
        )
    if len(h.sizes) == 2 and min(f.orders) < 3:
        raise UnsupportedTargetError(
            "components below 3 vertices have no extractor against two cliques"
        )
    need = ramsey_value(f, h)
    trace: list[str] = []
    if c.n < need:
        return _fallback_search(c, f, h, trace, need)
    ctx = _ctx(c)
    used = 0
    mapping: dict[int, int] = {}
    for off, t in zip(f.offsets(), f.components):
        sub_allowed = c.full_mask & ~used
        trace.append(
            f"embedding {t.n}-vertex component in residual host of {sub_allowed.bit_count()}"
        )
        res = _single_tree_core(ctx, sub_allowed, t, h, trace)
        if res[0] == "B":
            return _checked(_blue_witness(h, res[1], trace), c)
        for v, hv in res[1].items():
            mapping[off + v] = hv
            used |= 1 << hv
    return _checked(Witness(RED, f.as_graph(), mapping, trace), c)


def proof_witness(c: TwoColoring, f: ForestSpec, h: CliqueUnion) -> Witness:
    """Proof-guided engine dispatch over the shape of (f, h)."""
    if len(f.components) >= 2:
        return forest_extract(c, f, h)
    t = f.components[0]
    sizes = h.sizes
    if len(sizes) == 1:
        return chvatal_extract(c, t, sizes[0])
    if len(sizes) == 2:
        m, l = sizes
        if m == l:
            return tree_2km_extract(c, t, m)
        return tree_kmkl_extract(c, t, m, l)
    raise UnsupportedTargetError(f"no extractor for {len(sizes)} clique components")


# ---------------------------------------------------------------------------
# prepared per-coloring checkers for verification campaigns


def make_oracle_checker(f: ForestSpec, h: CliqueUnion, n_host: int):
    """check(red_rows, blue_rows) -> bool: does a witness exist?"""
    structs = [_comp_struct(t) for t in f.components]
    sizes = h.sizes
    full = (1 << n_host) - 1

    def check(red, blue) -> bool:
        if _embed_forest_rows(red, full, structs) is not None:
            return True
        return _find_cliques_rows(blue, full, sizes) is not None

    return check


def make_proof_checker(f: ForestSpec, h: CliqueUnion, n_host: int):
    """check(red_rows, blue_rows) -> bool: does the proof-guided engine
    produce a valid witness?  Below the formula value this is the oracle
    decision, matching the extractors' fallback."""
    need = ramsey_value(f, h)
    oracle = make_oracle_checker(f, h, n_host)
    if n_host < need:
        return oracle
    full = (1 << n_host) - 1
    forest_edges = f.as_graph().edges()
    offsets = f.offsets()
    sizes = h.sizes

    def check(red, blue) -> bool:
        ctx = (red, blue)
        trace: list[str] = []
        used = 0
        mapping: dict[int, int] = {}
        blue_sets = None
        for off, t in zip(offsets, f.components):
            res = _single_tree_core(ctx, full & ~used, t, h, trace)
            if res[0] == "B":
                blue_sets = res[1]
                break
            for v, hv in res[1].items():
                mapping[off + v] = hv
                used |= 1 << hv
        if blue_sets is not None:
            seen = 0
            for size, verts in zip(sizes, blue_sets):
                if len(verts) != size:
                    return False
                for x in verts:
                    if seen >> x & 1:
                        return False
                    seen |= 1 << x
                vs = list(verts)
                for ii in range(len(vs)):
                    for jj in range(ii + 1, len(vs)):
                        if not blue[vs[ii]] >> vs[jj] & 1:
                            return False
            return True
        seen = 0
        for hv in mapping.values():
            if seen >> hv & 1:
                return False
            seen |= 1 << hv
        for uu, vv in forest_edges:
            if not red[mapping[uu]] >> mapping[vv] & 1:
                return False
        return True

    return check
