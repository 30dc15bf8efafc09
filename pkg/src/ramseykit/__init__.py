"""Ramsey numbers of trees and forests versus unions of complete graphs:
closed-form values, tree rewriting plans, extremal colorings, witness
extraction, and desk-scale verification campaigns."""

from .graphs import (
    BLUE,
    Graph,
    RED,
    TwoColoring,
    color_subgraph,
    parse_graph,
    graph_to_text,
    verify_embedding,
)
from .trees import (
    EXPAND,
    OpStep,
    STRETCH,
    Tree,
    apply_plan,
    canonical_form,
    expand,
    is_isomorphic,
    path_tree,
    plan_between,
    plan_from_path,
    plan_to_path,
    star_tree,
    stretch,
)
from .formulas import (
    ChromaticData,
    CliqueUnion,
    ForestSpec,
    beta,
    burr_lower,
    chromatic_data,
    gj_lower_p,
    parse_clique_union,
    parse_forest,
    ramsey_value,
    union_upper,
)
from .constructions import (
    ExtremalReport,
    burr_coloring,
    gj_coloring,
    verify_extremal,
)
from .witness import (
    BelowThresholdError,
    Witness,
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
from .harness import (
    CampaignResult,
    CapExceededError,
    ORACLE,
    PROOF,
    exhaustive_verify,
    sampled_verify,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
