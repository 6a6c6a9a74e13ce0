"""Exact enumeration and bijection toolkit for semiorders of bounded length."""

from .bijection import (
    LevelLinkage,
    arrangement_to_semiorder,
    construction_stages,
    dyck_to_semiorder,
    level_linkage,
    semiorder_to_arrangement,
    semiorder_to_dyck,
    semiorder_to_tree,
    tree_to_semiorder,
)
from .core import (
    ComparabilityMatrix,
    EmptySemiorderError,
    LevelProfile,
    Semiorder,
    bad_elements,
    comparability,
    contraction,
    expansion,
    induced,
    join,
    level_profile,
    split,
)
from .counting import (
    catalan,
    count_by_good,
    count_exact,
    count_leq,
    p_polynomial,
    series_exact,
    series_leq,
)
from .labeled import (
    LabeledSemiorder,
    OrderedSetPartition,
    count_labeled_exact,
    count_labeled_leq,
    ordered_bell,
    partition_to_labeled_semiorder,
    labeled_semiorder_to_partition,
    substitute_one_minus_exp,
)
from .oracle import Pattern, enumerate_posets, enumerate_semiorders, has_pattern, oracle_counts
from .trees import DyckPath, OrderedTree, dyck_to_tree, tree_to_dyck
from .trunk import TrunkTree, count_trunk_trees, dyck_to_rtlm, narayana, rtl_minima, rtlm_to_dyck, trunk_tree

__all__ = [
    "ComparabilityMatrix",
    "DyckPath",
    "EmptySemiorderError",
    "LabeledSemiorder",
    "LevelLinkage",
    "LevelProfile",
    "OrderedSetPartition",
    "OrderedTree",
    "Pattern",
    "Semiorder",
    "TrunkTree",
    "arrangement_to_semiorder",
    "bad_elements",
    "catalan",
    "comparability",
    "construction_stages",
    "contraction",
    "count_by_good",
    "count_exact",
    "count_labeled_exact",
    "count_labeled_leq",
    "count_leq",
    "count_trunk_trees",
    "dyck_to_rtlm",
    "dyck_to_semiorder",
    "dyck_to_tree",
    "enumerate_posets",
    "enumerate_semiorders",
    "expansion",
    "has_pattern",
    "induced",
    "join",
    "labeled_semiorder_to_partition",
    "level_linkage",
    "level_profile",
    "narayana",
    "oracle_counts",
    "ordered_bell",
    "p_polynomial",
    "partition_to_labeled_semiorder",
    "rtl_minima",
    "rtlm_to_dyck",
    "semiorder_to_arrangement",
    "semiorder_to_dyck",
    "semiorder_to_tree",
    "series_exact",
    "series_leq",
    "split",
    "substitute_one_minus_exp",
    "tree_to_dyck",
    "tree_to_semiorder",
    "trunk_tree",
]
