"""Extremal lower-bound colorings and their machine certification.

Both constructions are block colorings: the host vertex set is split into
blocks, edges inside a block are red, edges across blocks are blue.  The
red graph is then a union of cliques too small to hold the red target,
and the blue graph is complete multipartite with too few usable parts to
hold the blue target.

The single-target construction uses chi(H)-1 blocks of size v(G)-1 plus
one block of size s(H)-1.  The forest construction replaces one of the
big blocks by a block of size (total order of all components of order
>= j0) - 1, where j0 is the maximizer of the block lower bound; the
remaining chi(H)-2 blocks have size j0-1.

The forest block structure is reconstructed from the bound's shape, so
every generated coloring is certified by a complete witness search before
being reported; a wrong reconstruction fails loudly instead of shipping.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import TwoColoring, pair_index
from .formulas import (
    CliqueUnion,
    ForestSpec,
    SurplusExceedsOrderError,
    chromatic_data,
    gj_lower_p,
)
from . import witness as _witness

EXHAUSTIVE = "EXHAUSTIVE"
SEARCH = "SEARCH"


@dataclass
class ExtremalReport:
    """Outcome of certifying a coloring against both targets."""

    coloring: TwoColoring
    red_embedding: dict[int, int] | None
    blue_embedding: dict[int, int] | None
    method: str = EXHAUSTIVE

    @property
    def no_red_target(self) -> bool:
        return self.red_embedding is None

    @property
    def no_blue_target(self) -> bool:
        return self.blue_embedding is None

    @property
    def certified(self) -> bool:
        return self.no_red_target and self.no_blue_target


def _block_coloring(block_sizes: list[int]) -> TwoColoring:
    """Red inside blocks, blue across; blocks descending, vertices
    consecutive.  Size-0 blocks are dropped."""
    sizes = sorted((s for s in block_sizes if s > 0), reverse=True)
    n = sum(sizes)
    if n < 1:
        raise ValueError("construction collapsed to an empty host")
    bits = 0
    start = 0
    for s in sizes:
        for i in range(start, start + s):
            for j in range(i + 1, start + s):
                bits |= 1 << pair_index(i, j, n)
        start += s
    return TwoColoring(n, bits)


def burr_blocks(vG: int, h: CliqueUnion) -> list[int]:
    """Block sizes of the single-target construction."""
    cd = chromatic_data(h)
    if vG < cd.s:
        raise SurplusExceedsOrderError(f"v(G)={vG} < s(H)={cd.s}")
    return [vG - 1] * (cd.chi - 1) + [cd.s - 1]


def burr_coloring(vG: int, h: CliqueUnion) -> TwoColoring:
    """Coloring on (vG-1)(chi-1)+s-1 vertices with no red connected graph
    on vG vertices and no blue h."""
    return _block_coloring(burr_blocks(vG, h))


def gj_blocks(f: ForestSpec, h: CliqueUnion) -> list[int]:
    """Block sizes of the forest construction, from the maximizing j0."""
    cd = chromatic_data(h)
    if min(f.orders) < cd.s:
        raise SurplusExceedsOrderError(
            f"component order {min(f.orders)} < s(H)={cd.s}"
        )
    _, j0 = gj_lower_p(f, h)
    big = sum(i * f.count_of_order(i) for i in f.order_set if i >= j0) - 1
    return [big] + [j0 - 1] * (cd.chi - 2) + [cd.s - 1]


def gj_coloring(f: ForestSpec, h: CliqueUnion) -> TwoColoring:
    """Coloring on p-1 vertices with no red f and no blue h (certify with
    verify_extremal before relying on it)."""
    return _block_coloring(gj_blocks(f, h))


def describe_blocks(block_sizes: list[int]) -> str:
    sizes = sorted((s for s in block_sizes if s > 0), reverse=True)
    n = sum(sizes)
    parts = []
    start = 0
    for s in sizes:
        parts.append(f"  red block K_{s}: vertices {start}..{start + s - 1}")
        start += s
    header = f"{n} vertices, {len(sizes)} red blocks, all cross edges blue"
    return "\n".join([header] + parts)


def verify_extremal(c: TwoColoring, f: ForestSpec, h: CliqueUnion) -> ExtremalReport:
    """Run the complete witness search for both sides on this coloring;
    certified means both searches came back empty."""
    red = _witness.embed_red_forest(c, f)
    blue = _witness.find_blue_cliques(c, h)
    return ExtremalReport(coloring=c, red_embedding=red, blue_embedding=blue)
