"""Finite-union/finite-sum partition experiments: Python surface."""

from ._hindlab import (
    CnfOrdinal,
    Color,
    DeltaSystem,
    DisjointFamily,
    FinSet,
    FixedEndsFamily,
    GroupElem,
    SearchResult,
    SetColoring,
    SumSubsystem,
    Universe,
    Word,
    absorbs,
    binary_support,
    brute_force_oracle,
    coeff_sum_parity_coloring,
    concat_reduce,
    disjoint_union,
    enumerate_below,
    every_coloring_has_mono_pair_bitmask,
    every_coloring_has_mono_pair_naive,
    find_delta_system,
    fp_closure,
    fp_equals_set,
    from_binary_support,
    fs_closure,
    fu_closure,
    greedy_mono_sequence,
    group_add,
    log_block,
    log_block_of_count,
    max_mono_fu_family,
    max_semigroup_fs,
    merged_support_size,
    min_universe_for_mono_pair,
    ord_add,
    product_length_formula,
    seeded_ordinal_coloring,
    sum_subsystem_refine,
    times_omega,
    verify_block_injectivity,
    verify_support_additivity,
)

__all__ = [name for name in dir() if not name.startswith("_")]
