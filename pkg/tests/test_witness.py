"""Oracle completeness and proof-guided extraction."""

import random
from itertools import permutations

import pytest

from ramseykit.constructions import burr_coloring, gj_coloring
from ramseykit.formulas import CliqueUnion, ForestSpec, ramsey_value
from ramseykit.graphs import (
    BLUE,
    RED,
    TwoColoring,
    color_subgraph,
    pair_count,
    pair_index,
)
from ramseykit.trees import (
    EXPAND,
    OpStep,
    apply_plan,
    distinct_trees,
    path_tree,
    plan_from_path,
    star_tree,
)
from ramseykit.witness import (
    BelowThresholdError,
    chvatal_extract,
    embed_red_forest,
    expand_step_extract,
    find_blue_cliques,
    forest_extract,
    path_2km_extract,
    proof_witness,
    search_witness,
    stretch_step_extract,
    tree_2km_extract,
    tree_kmkl_extract,
)


def paths(*orders) -> ForestSpec:
    return ForestSpec([path_tree(n) for n in orders])


def brute_witness_exists(c: TwoColoring, f: ForestSpec, h: CliqueUnion) -> bool:
    """Independent oracle: try every injection of each pattern."""
    red = color_subgraph(c, RED)
    blue = color_subgraph(c, BLUE)
    for pattern, host in ((f.as_graph(), red), (h.as_graph(), blue)):
        if pattern.n > c.n:
            continue
        edges = pattern.edges()
        for perm in permutations(range(c.n), pattern.n):
            if all(host.has_edge(perm[u], perm[v]) for u, v in edges):
                return True
    return False


def rnd_coloring(rng: random.Random, n: int) -> TwoColoring:
    return TwoColoring(n, rng.getrandbits(pair_count(n)))


# -- the oracle ---------------------------------------------------------------


def test_embed_red_forest_examples():
    assert embed_red_forest(TwoColoring.all_red(4), paths(3)) is not None
    assert embed_red_forest(TwoColoring.all_blue(4), paths(3)) is None
    c = burr_coloring(3, CliqueUnion([2, 2]))
    assert embed_red_forest(c, paths(3)) is None


def test_find_blue_cliques_examples():
    assert find_blue_cliques(TwoColoring.all_blue(4), CliqueUnion([2, 2])) is not None
    assert find_blue_cliques(TwoColoring.all_red(6), CliqueUnion([2, 2])) is None
    c = gj_coloring(paths(3, 4), CliqueUnion([3]))  # blue K_{2,6}
    assert find_blue_cliques(c, CliqueUnion([3])) is None


def test_search_witness_examples_and_red_preference():
    f, h = paths(3), CliqueUnion([2, 2])
    w = search_witness(TwoColoring.all_red(4), f, h)
    assert w is not None and w.side == RED and w.validate(TwoColoring.all_red(4))
    w = search_witness(TwoColoring.all_blue(4), f, h)
    assert w is not None and w.side == BLUE
    assert search_witness(burr_coloring(3, h), f, h) is None
    # both sides exist: red K_3 inside an otherwise blue K_6
    bits = 0
    for i, j in ((0, 1), (0, 2), (1, 2)):
        bits |= 1 << pair_index(i, j, 6)
    c = TwoColoring(6, bits)
    w = search_witness(c, f, h)
    assert w is not None and w.side == RED


@pytest.mark.parametrize(
    "f,h,n",
    [
        (paths(3), CliqueUnion([2, 2]), 4),
        (paths(4), CliqueUnion([3]), 5),
        (ForestSpec([star_tree(4)]), CliqueUnion([2, 2]), 5),
    ],
)
def test_search_matches_brute_force_exhaustively(f, h, n):
    for bits in range(1 << pair_count(n)):
        c = TwoColoring(n, bits)
        got = search_witness(c, f, h)
        assert (got is not None) == brute_witness_exists(c, f, h)
        if got is not None:
            assert got.validate(c)


def test_search_matches_brute_force_sampled():
    rng = random.Random(23)
    cases = [
        (paths(3, 3), CliqueUnion([2, 2]), 7),
        (paths(3, 4), CliqueUnion([3]), 7),
        (ForestSpec([star_tree(4), path_tree(3)]), CliqueUnion([3, 2]), 7),
    ]
    for f, h, n in cases:
        for _ in range(150):
            c = rnd_coloring(rng, n)
            assert (search_witness(c, f, h) is not None) == brute_witness_exists(c, f, h)


def test_forest_embedding_is_disjoint_across_components():
    c = TwoColoring.all_red(9)
    emb = embed_red_forest(c, paths(3, 4))
    assert emb is not None and len(set(emb.values())) == 7


# -- chvatal ------------------------------------------------------------------


def test_chvatal_trivial_sides():
    t = star_tree(4)
    w = chvatal_extract(TwoColoring.all_red(6), t, 2)
    assert w.side == RED and w.validate(TwoColoring.all_red(6))
    c = TwoColoring.all_blue((4 - 1) * (3 - 1) + 1)
    w = chvatal_extract(c, t, 3)
    assert w.side == BLUE and w.validate(c)


def test_chvatal_single_blue_vertex_target():
    w = chvatal_extract(TwoColoring.all_red(3), path_tree(2), 1)
    assert w.side == BLUE and w.pattern.n == 1


def test_chvatal_sweep_always_valid_and_agrees():
    rng = random.Random(5)
    for n in range(2, 7):
        for t in distinct_trees(n):
            for m in (2, 3, 4):
                N = (n - 1) * (m - 1) + 1
                f, h = ForestSpec([t]), CliqueUnion([m])
                for trial in range(120):
                    c = rnd_coloring(rng, N)
                    w = chvatal_extract(c, t, m)
                    assert w.validate(c)
                    if trial < 10:
                        assert search_witness(c, f, h) is not None


# -- path and tree extraction vs a pair of equal cliques ----------------------


def test_path_2km_trivial_and_exhaustive():
    w = path_2km_extract(TwoColoring.all_red(4), 3, 2)
    assert w.side == RED
    w = path_2km_extract(TwoColoring.all_blue(4), 3, 2)
    assert w.side == BLUE
    for bits in range(1 << pair_count(4)):
        c = TwoColoring(4, bits)
        assert path_2km_extract(c, 3, 2).validate(c)


def test_path_2km_below_threshold():
    c = burr_coloring(3, CliqueUnion([2, 2]))
    with pytest.raises(BelowThresholdError):
        path_2km_extract(c, 3, 2)


def test_tree_2km_exhaustive_star_at_threshold():
    t = star_tree(4)
    for bits in range(1 << pair_count(5)):
        c = TwoColoring(5, bits)
        w = tree_2km_extract(c, t, 2)
        assert w.validate(c)


def test_tree_2km_below_threshold_consistent_with_oracle():
    t = star_tree(4)
    h = CliqueUnion([2, 2])
    c = burr_coloring(4, h)  # 4 vertices; threshold is 5
    assert search_witness(c, ForestSpec([t]), h) is None
    with pytest.raises(BelowThresholdError):
        tree_2km_extract(c, t, 2)
    # below threshold but a witness exists: fallback must find it
    w = tree_2km_extract(TwoColoring.all_blue(4), t, 2)
    assert w.side == BLUE and w.validate(TwoColoring.all_blue(4))


def test_tree_2km_below_threshold_agreement_exhaustive():
    t = star_tree(4)
    f, h = ForestSpec([t]), CliqueUnion([2, 2])
    for bits in range(1 << pair_count(4)):
        c = TwoColoring(4, bits)
        oracle = search_witness(c, f, h)
        try:
            w = tree_2km_extract(c, t, 2)
        except BelowThresholdError:
            w = None
        assert (w is None) == (oracle is None)
        if w is not None:
            assert w.validate(c)


def test_tree_2km_random_sweep_m3():
    rng = random.Random(17)
    for n in range(3, 7):
        for t in distinct_trees(n):
            N = (n - 1) * 2 + 2
            for _ in range(150):
                c = rnd_coloring(rng, N)
                assert tree_2km_extract(c, t, 3).validate(c)


# -- rewriting-step extractors -------------------------------------------------


def test_expand_step_trivial_cases():
    step = OpStep(EXPAND, 1, 3)
    c = TwoColoring.all_red(8)
    w = expand_step_extract(c, path_tree(4), step, 3)
    assert w.side == RED and w.validate(c)
    c = TwoColoring.all_blue(8)
    w = expand_step_extract(c, path_tree(4), step, 3)
    assert w.side == BLUE and w.validate(c)


def test_step_extractors_random_sweep():
    rng = random.Random(29)
    m = 3
    for n in range(4, 7):
        for t in distinct_trees(n):
            plan = plan_from_path(t)
            cur = path_tree(n)
            N = (n - 1) * (m - 1) + 2
            for step in plan:
                for _ in range(40):
                    c = rnd_coloring(rng, N)
                    if step.kind == EXPAND:
                        w = expand_step_extract(c, cur, step, m)
                    else:
                        w = stretch_step_extract(c, cur, step, m)
                    assert w.validate(c)
                cur = apply_plan(cur, [step])


def test_step_extractor_rejects_wrong_kind():
    with pytest.raises(ValueError):
        stretch_step_extract(TwoColoring.all_red(8), path_tree(4), OpStep(EXPAND, 1, 3), 3)


# -- unequal clique pairs -------------------------------------------------------


def test_tree_kmkl_trivial_sides():
    c = TwoColoring.all_blue(7)
    w = tree_kmkl_extract(c, path_tree(4), 3, 2)
    assert w.side == BLUE and w.validate(c)
    c = TwoColoring.all_red(7)
    w = tree_kmkl_extract(c, path_tree(4), 3, 2)
    assert w.side == RED and w.validate(c)


def test_tree_kmkl_random_sweep():
    rng = random.Random(31)
    for t in distinct_trees(4) + distinct_trees(5):
        n = t.n
        N = (n - 1) * 2 + 1
        for _ in range(300):
            c = rnd_coloring(rng, N)
            assert tree_kmkl_extract(c, t, 3, 2).validate(c)


def test_tree_kmkl_below_threshold():
    h = CliqueUnion([3, 2])
    c = burr_coloring(4, h)  # 6 vertices, threshold 7, witness-free
    with pytest.raises(BelowThresholdError):
        tree_kmkl_extract(c, path_tree(4), 3, 2)


def test_tree_kmkl_argument_validation():
    with pytest.raises(ValueError):
        tree_kmkl_extract(TwoColoring.all_red(7), path_tree(4), 2, 2)


# -- forests --------------------------------------------------------------------


def test_forest_extract_single_component_delegates():
    c = TwoColoring.all_red(7)
    w = forest_extract(c, paths(4), CliqueUnion([3]))
    assert w.side == RED and w.validate(c)


def test_forest_extract_all_red_disjoint():
    c = TwoColoring.all_red(9)
    w = forest_extract(c, paths(3, 4), CliqueUnion([3]))
    assert w.side == RED and w.validate(c)
    assert len(set(w.mapping.values())) == 7
    assert any("residual host" in line for line in w.trace)


def test_forest_extract_random_sweep():
    rng = random.Random(37)
    f = paths(3, 4)
    for h in (CliqueUnion([3]), CliqueUnion([3, 2])):
        N = ramsey_value(f, h)
        for _ in range(400):
            c = rnd_coloring(rng, N)
            assert forest_extract(c, f, h).validate(c)


def test_forest_extract_unsupported():
    from ramseykit.formulas import UnsupportedTargetError

    with pytest.raises(UnsupportedTargetError):
        forest_extract(TwoColoring.all_red(9), paths(3, 4), CliqueUnion([2, 2, 2]))
    with pytest.raises(UnsupportedTargetError):
        forest_extract(TwoColoring.all_red(9), paths(2, 4), CliqueUnion([3, 2]))


def test_proof_witness_dispatch():
    rng = random.Random(41)
    cases = [
        (paths(4), CliqueUnion([3]), 7),
        (paths(4), CliqueUnion([2, 2]), 5),
        (paths(4), CliqueUnion([3, 2]), 7),
        (paths(3, 3), CliqueUnion([3]), 8),
    ]
    for f, h, n in cases:
        assert ramsey_value(f, h) == n
        for _ in range(100):
            c = rnd_coloring(rng, n)
            w = proof_witness(c, f, h)
            assert w.validate(c)


# -- threshold sharpness ---------------------------------------------------------


def test_threshold_sharpness_small():
    """At R-1 the block coloring is witness-free; at R no coloring is
    (exhaustive up to 2^15 colorings, seeded sampling beyond)."""
    rng = random.Random(43)
    targets = [CliqueUnion(s) for s in [(2,), (3,), (2, 2), (3, 3), (3, 2)]]
    for n in range(3, 6):
        for t in distinct_trees(n):
            f = ForestSpec([t])
            for h in targets:
                r = ramsey_value(f, h)
                c = burr_coloring(n, h)
                assert c.n == r - 1
                assert search_witness(c, f, h) is None
                if pair_count(r) <= 15:
                    for bits in range(1 << pair_count(r)):
                        assert search_witness(TwoColoring(r, bits), f, h) is not None
                else:
                    for _ in range(600):
                        c2 = rnd_coloring(rng, r)
                        assert search_witness(c2, f, h) is not None
