"""End-to-end smoke tests for the Python bindings."""

import pytest

import hindlab as hl


def test_log_parity_blocks_and_flip():
    u = hl.Universe(10)
    x = hl.FinSet(u, [0, 1])
    y = hl.FinSet(u, [2, 3])
    assert hl.log_block(x) == 1
    union = hl.disjoint_union(x, y)
    assert hl.log_block(union) == 2
    coloring = hl.SetColoring.log_parity()
    assert coloring.color(x) != coloring.color(union)


def test_fu_closure_counts():
    u = hl.Universe(6)
    family = hl.DisjointFamily([hl.FinSet(u, [0]), hl.FinSet(u, [1]), hl.FinSet(u, [2])])
    assert len(hl.fu_closure(family)) == 7


def test_search_matches_known_table():
    for n, expect in [(4, 1), (5, 2), (8, 2)]:
        result = hl.max_mono_fu_family(n, hl.SetColoring.log_parity())
        assert result.exhausted
        assert result.max_size == expect
    big = hl.max_mono_fu_family(21, hl.SetColoring.log_parity())
    assert big.max_size == 3
    assert big.witness.member_sizes == [1, 4, 16]


def test_oracle_agreement_sample():
    coloring = hl.SetColoring.seeded_random(5)
    result = hl.max_mono_fu_family(6, coloring)
    found = hl.brute_force_oracle(hl.Universe(6), coloring, 2)
    assert (found is not None) == (result.max_size >= 2)


def test_hindman_min_n_absent():
    assert hl.min_universe_for_mono_pair(3) is None
    assert not hl.every_coloring_has_mono_pair_naive(3)
    assert not hl.every_coloring_has_mono_pair_bitmask(3)


def test_binary_support_round_trip():
    u = hl.Universe(12)
    s = hl.binary_support(13, u)
    assert s.elements == [0, 2, 3]
    assert hl.from_binary_support(s) == 13


def test_group_refine_kills_torsion_root():
    family = [
        hl.GroupElem(
            [(0, 1, 2, "torsion"), (10 + 2 * i, 1, 4, "torsion"), (11 + 2 * i, 1, 8, "torsion")]
        )
        for i in range(8)
    ]
    ds = hl.DeltaSystem.of([0], family)
    refined = hl.sum_subsystem_refine(ds)
    assert len(refined.elements) == 4
    assert refined.root == []
    assert hl.verify_support_additivity(refined.elements)
    assert hl.merged_support_size(5, 1, 3) == 13


def test_word_length_formula():
    z = hl.Word.parse("g0 g1")
    w = hl.Word.parse("g1^-1 g0^-1")
    fam = hl.FixedEndsFamily.of(z, w, [hl.Word.parse("g5"), hl.Word.parse("g6 g6")])
    n = fam.junction_cancellation
    assert n == 4
    products = hl.fp_closure(fam.members)
    lengths = [m.length for m in fam.members]
    assert products[2].length == hl.product_length_formula(lengths, n)


def test_word_parse_rejects_unreduced():
    with pytest.raises(ValueError):
        hl.Word.parse("g0 g0^-1")


def test_greedy_ordinal_demo():
    seq = hl.greedy_mono_sequence(lambda o: hl.Color.zero, hl.CnfOrdinal.parse("w^3"), 3)
    assert [str(o) for o in seq] == ["1", "w+1", "w^2+1"]
    assert hl.fp_equals_set(seq)


def test_ordinal_arithmetic():
    a = hl.CnfOrdinal.parse("w*2+3")
    b = hl.CnfOrdinal.parse("w^2")
    assert hl.ord_add(a, b) == b
    assert hl.absorbs(a, b)
    assert str(hl.times_omega(a)) == "w^2"
    closed = hl.max_semigroup_fs([b, a, a])
    assert closed == [a, b]
