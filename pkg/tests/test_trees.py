"""Rewriting operations, canonical forms, and the planners."""

import itertools

import pytest

from ramseykit.trees import (
    BNotEligibleError,
    DegreeOutOfRangeError,
    EXPAND,
    InvalidStepError,
    NeighborShapeError,
    NotALeafError,
    OpStep,
    OrderMismatchError,
    STRETCH,
    Tree,
    apply_plan,
    canonical_form,
    distinct_trees,
    expand,
    find_isomorphism,
    is_isomorphic,
    labeled_trees,
    longest_path,
    path_tree,
    plan_between,
    plan_from_path,
    plan_from_path_with_map,
    plan_to_path,
    plan_from_text,
    plan_to_text,
    star_tree,
    stretch,
)

UNLABELED_COUNTS = {1: 1, 2: 1, 3: 1, 4: 2, 5: 3, 6: 6, 7: 11, 8: 23}


def spider_112() -> Tree:
    # paths of lengths 1,1,2 glued at center 0
    return Tree(5, [(0, 1), (0, 2), (0, 3), (3, 4)])


# -- operations -------------------------------------------------------------


def test_stretch_p3():
    out = stretch(path_tree(3), 0, 2)
    assert is_isomorphic(out, path_tree(3))
    assert sorted(out.edges()) == [(0, 1), (0, 2)]


def test_stretch_star_gives_path():
    out = stretch(star_tree(4), 1, 3)
    assert is_isomorphic(out, path_tree(4))
    assert sorted(out.edges()) == [(0, 1), (0, 2), (1, 3)]


def test_stretch_path_end_stays_path():
    out = stretch(path_tree(4), 0, 3)
    assert is_isomorphic(out, path_tree(4))


def test_stretch_errors():
    with pytest.raises(NotALeafError):
        stretch(path_tree(4), 1, 3)
    with pytest.raises(NotALeafError):
        stretch(path_tree(4), 0, 2)
    with pytest.raises(ValueError):
        stretch(path_tree(3), 0, 0)
    with pytest.raises(ValueError):
        stretch(path_tree(2), 0, 1)


def test_expand_p4_to_star():
    out = expand(path_tree(4), 1, 3)
    assert is_isomorphic(out, star_tree(4))


def test_expand_spider_degree_grows():
    # 6-vertex spider: center 0 with two leaves and a hanging path of two
    t = Tree(6, [(0, 1), (0, 2), (0, 3), (3, 4), (4, 5)])
    assert t.degree(0) == 3
    out = expand(t, 0, 5)
    assert out.degree(0) == 4


def test_expand_errors_named():
    with pytest.raises(BNotEligibleError):
        expand(path_tree(4), 1, 0)  # b inside N[u]
    with pytest.raises(DegreeOutOfRangeError):
        expand(path_tree(4), 0, 3)  # u is a leaf
    # two non-leaf neighbors
    with pytest.raises(NeighborShapeError):
        expand(path_tree(5), 2, 0)
    with pytest.raises(ValueError):
        expand(path_tree(3), 1, 0)  # n < 4


def test_ops_preserve_tree_shape_invariants():
    for n in range(3, 7):
        for t in distinct_trees(n):
            leaves = t.leaves()
            for a in leaves:
                for b in leaves:
                    if a != b:
                        out = stretch(t, a, b)
                        assert out.n == n and out.edge_count == n - 1
            if n >= 4:
                for u in range(n):
                    for b in leaves:
                        try:
                            out = expand(t, u, b)
                        except ValueError:
                            continue
                        assert out.n == n and out.degree(u) == t.degree(u) + 1


# -- plans ------------------------------------------------------------------


def test_apply_plan_identity():
    t = spider_112()
    assert apply_plan(t, []) == t


def test_apply_plan_expand_example():
    out = apply_plan(path_tree(4), [OpStep(EXPAND, 1, 3)])
    assert is_isomorphic(out, star_tree(4))


def test_apply_plan_reports_bad_step_index():
    with pytest.raises(InvalidStepError) as exc:
        apply_plan(path_tree(3), [OpStep(EXPAND, 1, 2)])
    assert exc.value.index == 0


def test_plan_to_path_examples():
    assert plan_to_path(path_tree(6)) == []
    assert len(plan_to_path(star_tree(4))) == 1
    assert len(plan_to_path(spider_112())) == 1


def test_plan_to_path_properties():
    for n in range(3, 8):
        for t in distinct_trees(n):
            plan = plan_to_path(t)
            assert all(s.kind == STRETCH for s in plan)
            assert len(plan) == n - len(longest_path(t))
            out = apply_plan(t, plan)
            assert out.is_path()
            assert len(out.leaves()) == 2


def test_plan_from_path_examples():
    assert plan_from_path(path_tree(5)) == []
    plan = plan_from_path(star_tree(4))
    assert plan == [OpStep(EXPAND, 1, 3)]
    # double star: two adjacent centers with two leaves each
    ds = Tree(6, [(0, 1), (0, 2), (0, 3), (1, 4), (1, 5)])
    plan = plan_from_path(ds)
    out = apply_plan(path_tree(6), plan)
    assert is_isomorphic(out, ds)


def test_plan_from_path_map_is_an_isomorphism():
    for n in range(3, 8):
        for t in distinct_trees(n):
            plan, placement = plan_from_path_with_map(t)
            out = apply_plan(path_tree(n), plan)
            assert is_isomorphic(out, t)
            # placement pushes t's edges onto out's edges
            assert len(set(placement.values())) == n
            for u, v in t.edges():
                assert out.has_edge(placement[u], placement[v])


def test_expand_steps_respect_degree_window():
    for n in range(4, 8):
        for t in distinct_trees(n):
            cur = path_tree(n)
            for step in plan_from_path(t):
                if step.kind == EXPAND:
                    d = cur.degree(step.anchor)
                    assert 2 <= d <= n - 2
                cur = apply_plan(cur, [step])


def test_plan_between_examples():
    assert plan_between(path_tree(5), path_tree(5)) == []
    plan = plan_between(path_tree(4), star_tree(4))
    assert len(plan) == 1 and plan[0].kind == EXPAND
    plan = plan_between(star_tree(5), path_tree(5))
    assert len(plan) == 2 and all(s.kind == STRETCH for s in plan)


def test_plan_between_order_mismatch():
    with pytest.raises(OrderMismatchError):
        plan_between(path_tree(4), path_tree(5))


def test_plan_between_all_pairs_small():
    for n in range(3, 7):
        reps = distinct_trees(n)
        for a, b in itertools.product(reps, repeat=2):
            out = apply_plan(a, plan_between(a, b))
            assert is_isomorphic(out, b)


def test_plan_text_round_trip():
    plan = [OpStep(STRETCH, 0, 4), OpStep(EXPAND, 1, 3)]
    assert plan_from_text(plan_to_text(plan)) == plan
    with pytest.raises(ValueError):
        plan_from_text("X 0 1")


# -- canonical forms --------------------------------------------------------


def test_canonical_counts_small():
    for n, want in UNLABELED_COUNTS.items():
        if n > 7:
            continue  # n=8 is covered by the acceptance suite
        got = len({canonical_form(t) for t in labeled_trees(n)})
        assert got == want


def test_two_classes_on_four_vertices():
    forms = {canonical_form(t) for t in labeled_trees(4)}
    assert len(forms) == 2


def test_isomorphic_relabeled_path():
    t = Tree(4, [(2, 0), (0, 3), (3, 1)])
    assert is_isomorphic(t, path_tree(4))
    assert not is_isomorphic(path_tree(4), star_tree(4))


def test_find_isomorphism_valid_map():
    for n in range(2, 8):
        reps = distinct_trees(n)
        for t in reps:
            other = Tree(n, [(n - 1 - u, n - 1 - v) for u, v in t.edges()])
            iso = find_isomorphism(t, other)
            assert iso is not None
            assert sorted(iso.values()) == list(range(n))
            for u, v in t.edges():
                assert other.has_edge(iso[u], iso[v])
        assert find_isomorphism(reps[0], path_tree(n + 1)) is None


def test_longest_path_deterministic_and_longest():
    t = spider_112()
    p = longest_path(t)
    assert len(p) == 4
    assert p == min([p, p[::-1]])
