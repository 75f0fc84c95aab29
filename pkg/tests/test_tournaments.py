import itertools
from random import Random

import pytest

from conjlab.errors import CapExceeded
from conjlab.tournaments import (
    AdditivityReport,
    Tournament,
    additivity_probe,
    all_transitive,
    inv_table,
    invert_subset,
    is_transitive,
    join,
    num_pairs,
    pair_index,
    relabel,
    reverse_all,
    subset_mask,
    transitive_from_order,
)


def three_cycle():
    # 0 -> 1 -> 2 -> 0
    bits = (1 << pair_index(0, 1, 3)) | (1 << pair_index(1, 2, 3))
    return Tournament(3, bits)


def test_pair_index_lexicographic():
    n = 5
    expect = list(itertools.combinations(range(n), 2))
    assert [pair_index(i, j, n) for i, j in expect] == list(range(num_pairs(n)))


def test_text_roundtrip():
    t = three_cycle()
    assert Tournament.from_text(t.to_text()) == t
    assert t.to_text() == "3 101"
    with pytest.raises(ValueError):
        Tournament.from_text("3 10")
    with pytest.raises(ValueError):
        Tournament.from_text("3 10x")


def test_beats_and_edges():
    t = three_cycle()
    assert t.beats(0, 1) and t.beats(1, 2) and t.beats(2, 0)
    assert not t.beats(1, 0)
    assert sorted(t.edges()) == [(0, 1), (1, 2), (2, 0)]


def test_invert_subset_basics():
    t = three_cycle()
    assert invert_subset(t, []) == t
    assert invert_subset(t, [2]) == t
    flipped = invert_subset(t, [0, 1])
    assert is_transitive(flipped)
    assert sorted(flipped.edges()) == [(1, 0), (1, 2), (2, 0)]  # order 1 > 2 > 0


def test_invert_subset_is_involution():
    rng = Random(0)
    for _ in range(50):
        n = rng.randrange(2, 7)
        t = Tournament(n, rng.getrandbits(num_pairs(n)))
        subset = [v for v in range(n) if rng.random() < 0.5]
        assert invert_subset(invert_subset(t, subset), subset) == t


def test_inv_table_small():
    table = inv_table(3)
    for t in all_transitive(3):
        assert table.inv(t) == 0
    assert table.inv(three_cycle()) == 1
    assert table.max_value == 1
    assert sum(table.layers) == 1 << num_pairs(3)


def test_inv_table_layers_and_trivial_bound():
    for n in range(2, 7):
        table = inv_table(n)
        assert sum(table.layers) == 1 << num_pairs(n)
        assert table.max_value <= n - 1
        assert table.layers[0] == len({t.bits for t in all_transitive(n)})


def test_inv_zero_iff_transitive():
    table = inv_table(4)
    for bits in range(1 << num_pairs(4)):
        t = Tournament(4, bits)
        assert (table.inv(t) == 0) == is_transitive(t)


def test_inv_relabelling_invariance():
    rng = Random(1)
    table = inv_table(5)
    for _ in range(40):
        t = Tournament(5, rng.getrandbits(num_pairs(5)))
        perm = rng.sample(range(5), 5)
        assert table.inv(t) == table.inv(relabel(t, perm))


def test_inv_reversal_invariance():
    rng = Random(2)
    table = inv_table(5)
    for _ in range(40):
        t = Tournament(5, rng.getrandbits(num_pairs(5)))
        assert table.inv(t) == table.inv(reverse_all(t))


def test_inv_table_cap():
    with pytest.raises(CapExceeded):
        inv_table(8)           # needs allow_large
    with pytest.raises(CapExceeded):
        inv_table(9, allow_large=True)


def test_join_transitive():
    one = Tournament(1, 0)
    assert is_transitive(join(one, one))
    t3 = transitive_from_order([2, 0, 1])
    t2 = transitive_from_order([1, 0])
    assert is_transitive(join(t3, t2))


def test_join_of_cycles_inv():
    table = inv_table(6)
    j = join(three_cycle(), three_cycle())
    assert table.inv(j) == 2  # matches the zero-defect distribution below


def test_additivity_trivial_sizes():
    rep = additivity_probe(1, 1)
    assert rep.defects == {0: 1}
    rep = additivity_probe(2, 2)
    assert set(rep.defects) == {0}
    assert sum(rep.defects.values()) == 4


def test_additivity_three_three():
    rep = additivity_probe(3, 3)
    assert sum(rep.defects.values()) == 64
    assert rep.defects == {0: 64}
    assert rep.min_defect == 0 and rep.max_defect == 0
