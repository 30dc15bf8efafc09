"""Chromatic data of clique unions and the closed-form Ramsey values.

For H a disjoint union of complete graphs, chi(H) is the largest clique
size and the chromatic surplus s(H) is the number of cliques of that
size: every maximum clique meets every color class of a proper
chi-coloring, while smaller cliques can dodge any designated class.

Supported red targets are forests; supported blue targets have one or two
clique components.  The closed forms:

    single tree T_n vs K_m          (n-1)(m-1) + 1
    single tree T_n vs K_m u K_m    (n-1)(m-1) + 2
    single tree T_n vs K_m u K_l    (n-1)(m-1) + 1        (m > l >= 2)
    forest vs 1- or 2-clique H      p  (the block lower bound below)

with p = max_{j in I} {(j-1)(chi-2) + sum_{i>=j} i*k_i} + s - 1, where I
is the set of component orders, k_i the number of order-i components.
For a single component p collapses to the classical lower bound
(n-1)(chi-1) + s, so every supported value is p.

Targets with three or more cliques are refused: no exact formula is
implemented for them, and goodness can genuinely fail there (complete
graphs versus two independent edges already exceed the block bound).
"""

from __future__ import annotations

import os
import re
from dataclasses import dataclass
from typing import Callable, Mapping

from .graphs import Graph, disjoint_union
from .trees import Tree, canonical_form, path_tree, star_tree, tree_from_graph
from . import graphs as _graphs


class SurplusExceedsOrderError(ValueError):
    """Lower-bound formula needs v(G) >= s(H)."""


class UnsupportedTargetError(ValueError):
    """No formula is implemented for this blue target."""


class PreconditionViolatedError(ValueError):
    """Forest/target combination outside a formula's stated domain."""


class MissingComponentValueError(ValueError):
    """union_upper was not given a value for some component order."""

    def __init__(self, order: int):
        super().__init__(f"no Ramsey value supplied for component order {order}")
        self.order = order


class SpecParseError(ValueError):
    """Malformed clique-union or forest spec string."""


@dataclass(frozen=True)
class ChromaticData:
    chi: int
    s: int


class CliqueUnion:
    """A disjoint union of complete graphs, as a multiset of sizes >= 2."""

    __slots__ = ("sizes",)

    def __init__(self, sizes):
        sizes = tuple(sorted(sizes, reverse=True))
        if not sizes:
            raise ValueError("clique union needs at least one clique")
        if any(s < 2 for s in sizes):
            raise ValueError(f"clique sizes must be >= 2, got {sizes}")
        self.sizes = sizes

    @property
    def total_order(self) -> int:
        return sum(self.sizes)

    def as_graph(self) -> Graph:
        """The union graph; clique i occupies a consecutive label block in
        stored (descending-size) order."""
        g, _ = disjoint_union([_graphs.complete_graph(s) for s in self.sizes])
        return g

    def offsets(self) -> list[int]:
        out = []
        total = 0
        for s in self.sizes:
            out.append(total)
            total += s
        return out

    def __eq__(self, other) -> bool:
        return isinstance(other, CliqueUnion) and self.sizes == other.sizes

    def __hash__(self) -> int:
        return hash(self.sizes)

    def __str__(self) -> str:
        parts = []
        i = 0
        while i < len(self.sizes):
            j = i
            while j < len(self.sizes) and self.sizes[j] == self.sizes[i]:
                j += 1
            count = j - i
            parts.append(f"{count if count > 1 else ''}K{self.sizes[i]}")
            i = j
        return "+".join(parts)

    def __repr__(self) -> str:
        return f"CliqueUnion({list(self.sizes)})"


class ForestSpec:
    """A forest as a multiset of trees, stored largest-first."""

    __slots__ = ("components",)

    def __init__(self, components):
        comps = tuple(
            sorted(components, key=lambda t: (-t.n, canonical_form(t)))
        )
        if not comps:
            raise ValueError("forest needs at least one component")
        for t in comps:
            if not isinstance(t, Tree):
                raise TypeError(f"component {t!r} is not a Tree")
        self.components = comps

    @property
    def orders(self) -> list[int]:
        return [t.n for t in self.components]

    @property
    def order_set(self) -> list[int]:
        """I: the distinct component orders, ascending."""
        return sorted(set(self.orders))

    def count_of_order(self, i: int) -> int:
        """k_i: number of components with exactly i vertices."""
        return sum(1 for t in self.components if t.n == i)

    @property
    def max_order(self) -> int:
        return self.components[0].n

    @property
    def total_order(self) -> int:
        return sum(self.orders)

    def as_graph(self) -> Graph:
        g, _ = disjoint_union(self.components)
        return g

    def offsets(self) -> list[int]:
        out = []
        total = 0
        for t in self.components:
            out.append(total)
            total += t.n
        return out

    def __eq__(self, other) -> bool:
        return isinstance(other, ForestSpec) and self.components == other.components

    def __hash__(self) -> int:
        return hash(self.components)

    def __str__(self) -> str:
        return "+".join(f"{t.n}-tree" for t in self.components)

    def __repr__(self) -> str:
        return f"ForestSpec({list(self.components)})"


def chromatic_data(h: CliqueUnion) -> ChromaticData:
    """chi = largest clique size; s = multiplicity of the largest size."""
    chi = h.sizes[0]
    return ChromaticData(chi=chi, s=sum(1 for x in h.sizes if x == chi))


def burr_lower(vG: int, h: CliqueUnion) -> int:
    """Block lower bound (vG-1)(chi-1)+s for a connected red target."""
    cd = chromatic_data(h)
    if vG < cd.s:
        raise SurplusExceedsOrderError(f"v(G)={vG} < s(H)={cd.s}")
    return (vG - 1) * (cd.chi - 1) + cd.s


def gj_lower_p(f: ForestSpec, h: CliqueUnion) -> tuple[int, int]:
    """The disconnected block lower bound p and its largest maximizer j0."""
    cd = chromatic_data(h)
    best = None
    best_j = None
    for j in f.order_set:
        val = (j - 1) * (cd.chi - 2) + sum(
            i * f.count_of_order(i) for i in f.order_set if i >= j
        )
        if best is None or val > best or (val == best and j > best_j):
            best, best_j = val, j
    return best + cd.s - 1, best_j


def union_upper(
    f: ForestSpec, ramsey_of_component: Mapping[int, int] | Callable[[int], int]
) -> int:
    """Component-stitching upper bound.

    ramsey_of_component maps a component order j to the largest Ramsey
    value of any order-j component versus the target.
    """
    if callable(ramsey_of_component):
        get = ramsey_of_component
    else:
        table = dict(ramsey_of_component)

        def get(j: int) -> int:
            if j not in table:
                raise MissingComponentValueError(j)
            return table[j]

    best = None
    for j in f.order_set:
        tail = sum(i * f.count_of_order(i) for i in f.order_set if i >= j)
        val = get(j) + tail - j
        if best is None or val > best:
            best = val
    return best


def beta(f_component_value: int, vF: int, h: CliqueUnion) -> int:
    """Goodness defect: value - (vF-1)(chi-1) - s; zero iff the component
    attains the block lower bound."""
    cd = chromatic_data(h)
    if vF < cd.s:
        raise SurplusExceedsOrderError(f"v(F)={vF} < s(H)={cd.s}")
    return f_component_value - (vF - 1) * (cd.chi - 1) - cd.s


def ramsey_value(f: ForestSpec, h: CliqueUnion) -> int:
    """Exact Ramsey value of a forest versus a 1- or 2-clique union."""
    k = len(h.sizes)
    if k > 2:
        raise UnsupportedTargetError(
            f"no formula for {k} clique components (goodness can fail there)"
        )
    cd = chromatic_data(h)
    if k == 2 and min(f.orders) < 3:
        raise PreconditionViolatedError(
            "components must have >= 3 vertices against a two-clique target"
        )
    if min(f.orders) < cd.s:
        raise PreconditionViolatedError(
            f"component order {min(f.orders)} below surplus {cd.s}"
        )
    if len(f.components) == 1:
        n = f.max_order
        m = h.sizes[0]
        if k == 1:
            return (n - 1) * (m - 1) + 1
        if h.sizes[0] == h.sizes[1]:
            return (n - 1) * (m - 1) + 2
        return (n - 1) * (m - 1) + 1
    return gj_lower_p(f, h)[0]


# ---------------------------------------------------------------------------
# spec strings

_CLIQUE_TERM = re.compile(r"^(\d*)[Kk](\d+)$")
_PATH_TERM = re.compile(r"^[Pp](\d+)$")


def parse_clique_union(text: str) -> CliqueUnion:
    """Parse strings like "K3+K2", "2K4", "K5"; count prefix optional."""
    sizes = []
    for term in text.split("+"):
        term = term.strip()
        m = _CLIQUE_TERM.match(term)
        if not m:
            raise SpecParseError(f"bad clique term {term!r}")
        count = int(m.group(1)) if m.group(1) else 1
        size = int(m.group(2))
        if count < 1:
            raise SpecParseError(f"bad clique count in {term!r}")
        sizes.extend([size] * count)
    try:
        return CliqueUnion(sizes)
    except ValueError as e:
        raise SpecParseError(str(e)) from None


def parse_tree_term(term: str) -> Tree:
    """One forest term: "P4", "star:5" (5-vertex star), or "tree:<file>"."""
    term = term.strip()
    m = _PATH_TERM.match(term)
    if m:
        n = int(m.group(1))
        if n < 1:
            raise SpecParseError(f"bad path order in {term!r}")
        return path_tree(n)
    if term.startswith("star:"):
        n = int(term[5:])
        if n < 1:
            raise SpecParseError(f"bad star order in {term!r}")
        return star_tree(n) if n > 1 else path_tree(1)
    if term.startswith("tree:"):
        path = term[5:]
        if not os.path.exists(path):
            raise SpecParseError(f"tree file not found: {path}")
        with open(path) as fh:
            g = _graphs.parse_graph(fh.read())
        return tree_from_graph(g)
    raise SpecParseError(f"bad forest term {term!r}")


def parse_forest(text: str) -> ForestSpec:
    """Parse forest specs like "P3+P4", "star:5", "tree:<file>+P3"."""
    comps = [parse_tree_term(term) for term in text.split("+")]
    return ForestSpec(comps)
