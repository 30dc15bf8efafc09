"""Command-line surface.

    ramsey compute  --forest <spec> --target <spec>
    ramsey construct --forest <spec> --target <spec> [--out <file>]
    ramsey witness  --coloring <file> --forest <spec> --target <spec> --engine oracle|proof
    ramsey verify   --forest <spec> --target <spec> --n <N>
                    (--exhaustive | --samples <k> --seed <s>) --engine oracle|proof
    ramsey transform --from <tree-file|spec> --to <tree-file|spec> [--out <plan-file>]

Exit codes: 0 pass/success, 1 verification failure (witness absent or
certification failed), 2 usage error.  Timing goes to stderr so reports
on stdout stay byte-identical across runs.
"""

from __future__ import annotations

import argparse
import os
import sys

from . import constructions, formulas, harness, trees, witness
from .graphs import TwoColoring, graph_to_text, parse_graph
from .trees import Tree, tree_from_graph


def _load_tree(spec: str) -> Tree:
    """A tree argument is either a forest-spec term or an edge-list file."""
    if os.path.sep in spec or os.path.exists(spec):
        with open(spec) as fh:
            return tree_from_graph(parse_graph(fh.read()))
    return formulas.parse_tree_term(spec)


def _cmd_compute(args) -> int:
    f = formulas.parse_forest(args.forest)
    h = formulas.parse_clique_union(args.target)
    value = formulas.ramsey_value(f, h)
    p, j0 = formulas.gj_lower_p(f, h)
    cd = formulas.chromatic_data(h)
    per_order = {}
    for t in f.components:
        single = formulas.ForestSpec([t])
        per_order[t.n] = formulas.ramsey_value(single, h)
    upper = formulas.union_upper(f, per_order)
    print(f"forest: {f}")
    print(f"target: {h}  (chi={cd.chi}, surplus={cd.s})")
    print(f"R = {value}")
    print(f"block lower bound p = {p} at j0 = {j0}")
    print(f"component-stitching upper bound = {upper}")
    for j in sorted(per_order):
        print(f"  component value at order {j}: {per_order[j]}")
    return 0


def _cmd_construct(args) -> int:
    f = formulas.parse_forest(args.forest)
    h = formulas.parse_clique_union(args.target)
    blocks = constructions.gj_blocks(f, h)
    coloring = constructions.gj_coloring(f, h)
    report = constructions.verify_extremal(coloring, f, h)
    print(constructions.describe_blocks(blocks))
    print(f"no red {f}: {report.no_red_target}")
    print(f"no blue {h}: {report.no_blue_target}")
    print(f"certified: {report.certified}")
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(coloring.to_text())
        print(f"coloring written to {args.out}")
    return 0 if report.certified else 1


def _cmd_witness(args) -> int:
    f = formulas.parse_forest(args.forest)
    h = formulas.parse_clique_union(args.target)
    with open(args.coloring) as fh:
        coloring = TwoColoring.from_text(fh.read())
    if args.engine == "oracle":
        w = witness.search_witness(coloring, f, h)
        if w is None:
            print("no witness: coloring contains neither target")
            return 1
    else:
        try:
            w = witness.proof_witness(coloring, f, h)
        except witness.BelowThresholdError as e:
            print(f"no witness: {e}")
            return 1
    sys.stdout.write(w.to_text())
    return 0


def _cmd_verify(args) -> int:
    f = formulas.parse_forest(args.forest)
    h = formulas.parse_clique_union(args.target)
    engine = harness.ORACLE if args.engine == "oracle" else harness.PROOF
    if args.exhaustive:
        result = harness.exhaustive_verify(f, h, args.n, engine)
    else:
        result = harness.sampled_verify(
            f, h, args.n, engine, trials=args.samples, seed=args.seed
        )
    sys.stdout.write(result.report())
    print(f"elapsed: {result.elapsed:.3f}s", file=sys.stderr)
    return 0 if result.passed else 1


def _cmd_transform(args) -> int:
    src = _load_tree(getattr(args, "from"))
    dst = _load_tree(args.to)
    plan = trees.plan_between(src, dst)
    text = trees.plan_to_text(plan)
    result = trees.apply_plan(src, plan)
    assert trees.is_isomorphic(result, dst)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
        print(f"{len(plan)} steps written to {args.out}")
    else:
        sys.stdout.write(text)
        print(f"# {len(plan)} steps; result isomorphic to target", file=sys.stderr)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ramsey",
        description="Ramsey values, extremal colorings, witnesses and "
        "verification campaigns for forests versus unions of complete graphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", help="print R and the formula breakdown")
    p.add_argument("--forest", required=True, help='e.g. "P3+P4", "star:5"')
    p.add_argument("--target", required=True, help='e.g. "2K3", "K3+K2"')
    p.set_defaults(func=_cmd_compute)

    p = sub.add_parser("construct", help="emit the extremal coloring and certify it")
    p.add_argument("--forest", required=True)
    p.add_argument("--target", required=True)
    p.add_argument("--out", help="write the coloring file here")
    p.set_defaults(func=_cmd_construct)

    p = sub.add_parser("witness", help="extract a witness from a coloring file")
    p.add_argument("--coloring", required=True)
    p.add_argument("--forest", required=True)
    p.add_argument("--target", required=True)
    p.add_argument("--engine", choices=["oracle", "proof"], required=True)
    p.set_defaults(func=_cmd_witness)

    p = sub.add_parser("verify", help="run an exhaustive or sampled campaign")
    p.add_argument("--forest", required=True)
    p.add_argument("--target", required=True)
    p.add_argument("--n", type=int, required=True, help="host order N")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--exhaustive", action="store_true")
    group.add_argument("--samples", type=int)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--engine", choices=["oracle", "proof"], default="oracle")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("transform", help="plan rewriting steps between two trees")
    p.add_argument("--from", required=True, metavar="TREE")
    p.add_argument("--to", required=True, metavar="TREE")
    p.add_argument("--out", help="write the plan file here")
    p.set_defaults(func=_cmd_transform)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
