"""Tests for partitions, permutations and cycle types."""
import logging

import numpy as np

from errors import PreconditionError
from partitions import (
    Partition,
    Permutation,
    canonical_permutation,
    class_size,
    cycle_type,
    multinomial,
    multiplicity,
    partition_count,
    partitions_of,
    z,
)

logging.basicConfig(
    level=logging.INFO,
    format='%(asctime)s - %(name)s - %(levelname)s - %(message)s'
)
logger = logging.getLogger(__name__)


def test_partitions_of_small():
    assert partitions_of(0) == [Partition()]
    assert partitions_of(4) == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]
    assert len(partitions_of(6)) == 11


def test_partitions_are_distinct_and_counted():
    for n in range(11):
        parts = partitions_of(n)
        assert len(set(parts)) == len(parts)
        assert all(p.weight == n for p in parts)
        assert len(parts) == partition_count(n)
        assert parts == sorted(parts, reverse=True)


def test_partition_rejects_bad_parts():
    for bad in [(1, 2), (2, 0), (-1,)]:
        try:
            Partition(bad)
        except PreconditionError:
            continue
        raise AssertionError(f"{bad} accepted as a partition")
    assert Partition.from_parts([1, 0, 3, 1]) == (3, 1, 1)


def test_z_values():
    assert z((1, 1, 1, 1)) == 24
    assert z((4,)) == 4
    assert z((2, 1)) == 2
    assert z(()) == 1


def test_class_sizes_sum_to_group_order():
    for n in range(1, 11):
        assert sum(class_size(lam) for lam in partitions_of(n)) == z([1] * n)


def test_multiplicity():
    assert multiplicity((2, 2, 1), 2) == 2
    assert multiplicity((2, 2, 1), 3) == 0
    assert multiplicity((1, 1, 1), 1) == 3
    assert Partition((2, 2, 1)).multiplicity(1) == 1


def test_canonical_permutation():
    assert canonical_permutation((1, 1, 1)) == Permutation([1, 2, 3])
    assert canonical_permutation((3,)) == Permutation([2, 3, 1])
    assert canonical_permutation((2, 1)) == Permutation([2, 1, 3])


def test_cycle_type():
    assert cycle_type(Permutation.identity(5)) == (1, 1, 1, 1, 1)
    assert cycle_type(Permutation([2, 1, 4, 3])) == (2, 2)
    assert cycle_type(canonical_permutation((3, 2, 1))) == (3, 2, 1)
    for n in range(1, 11):
        for lam in partitions_of(n):
            assert cycle_type(canonical_permutation(lam)) == lam


def test_multinomial():
    assert multinomial(4, [2, 2]) == 6
    assert multinomial(7, [7]) == 1
    assert multinomial(6, [3, 2, 1]) == 60
    try:
        multinomial(5, [2, 2])
    except PreconditionError:
        pass
    else:
        raise AssertionError("mismatched multinomial accepted")


def test_permutation_algebra():
    rng = np.random.default_rng(7)
    for _ in range(20):
        g = Permutation.random(6, rng)
        assert (g * g.inverse()).is_identity()
        assert cycle_type(g) == cycle_type(g.inverse())


def test_adjacent_word_spells_the_permutation():
    rng = np.random.default_rng(11)
    for _ in range(30):
        g = Permutation.random(5, rng)
        product = Permutation.identity(5)
        for i in g.adjacent_word():
            product = product * Permutation.transposition(5, i, i + 1)
        assert product == g


def test_permutation_rejects_non_bijection():
    try:
        Permutation([1, 1, 2])
    except PreconditionError:
        return
    raise AssertionError("non-bijection accepted")


def main():
    tests = [value for name, value in sorted(globals().items()) if name.startswith("test_")]
    for test in tests:
        test()
        logger.info(f"✅ {test.__name__}")


if __name__ == "__main__":
    main()
