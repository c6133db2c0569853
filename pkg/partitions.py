"""Integer partitions, permutations and the cycle-type correspondence."""
from collections import Counter
from functools import lru_cache
from itertools import permutations as _permutations
from typing import Iterable, Iterator, List, Optional, Sequence, Tuple

import numpy as np
from scipy.special import factorial

from errors import PreconditionError
import logging

logger = logging.getLogger(__name__)


def _fact(k: int) -> int:
    return int(factorial(k, exact=True))


class Partition(tuple):
    """Weakly decreasing tuple of positive parts. The empty tuple partitions 0."""

    def __new__(cls, parts: Iterable[int] = ()):
        parts = tuple(int(p) for p in parts)
        if any(p < 1 for p in parts):
            raise PreconditionError(f"partition parts must be positive: {list(parts)}")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise PreconditionError(f"partition parts must be weakly decreasing: {list(parts)}")
        return super().__new__(cls, parts)

    @classmethod
    def from_parts(cls, parts: Iterable[int]) -> "Partition":
        """Sort arbitrary positive parts into a partition, dropping zeros."""
        return cls(sorted((p for p in parts if p != 0), reverse=True))

    @property
    def weight(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    def multiplicity(self, s: int) -> int:
        return multiplicity(self, s)

    def __add__(self, other):
        # p_a * p_b: concatenate and re-sort
        return Partition.from_parts(tuple(self) + tuple(other))

    def __repr__(self):
        return f"Partition({list(self)})"

    def to_json(self) -> List[int]:
        return list(self)


class Permutation(tuple):
    """One-line notation of a bijection of {1..N}: self[i-1] is the image of i."""

    def __new__(cls, images: Iterable[int]):
        images = tuple(int(x) for x in images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise PreconditionError(f"not a permutation of 1..{len(images)}: {list(images)}")
        return super().__new__(cls, images)

    @classmethod
    def identity(cls, size: int) -> "Permutation":
        return cls(range(1, size + 1))

    @classmethod
    def transposition(cls, size: int, i: int, j: int) -> "Permutation":
        images = list(range(1, size + 1))
        images[i - 1], images[j - 1] = images[j - 1], images[i - 1]
        return cls(images)

    @classmethod
    def random(cls, size: int, rng: Optional[np.random.Generator] = None) -> "Permutation":
        rng = rng if rng is not None else np.random.default_rng()
        return cls(int(x) + 1 for x in rng.permutation(size))

    @property
    def size(self) -> int:
        return len(self)

    def __call__(self, x: int) -> int:
        return self[x - 1]

    def compose(self, other: "Permutation") -> "Permutation":
        """Return self ∘ other (apply other first)."""
        if other.size != self.size:
            raise PreconditionError(f"cannot compose permutations of sizes {self.size} and {other.size}")
        return Permutation(self[x - 1] for x in other)

    def __mul__(self, other):
        return self.compose(other)

    def inverse(self) -> "Permutation":
        inv = [0] * self.size
        for i, x in enumerate(self, 1):
            inv[x - 1] = i
        return Permutation(inv)

    def is_identity(self) -> bool:
        return all(x == i for i, x in enumerate(self, 1))

    def fixed_point_count(self) -> int:
        return sum(1 for i, x in enumerate(self, 1) if x == i)

    def cycles(self) -> List[Tuple[int, ...]]:
        seen = [False] * (self.size + 1)
        result = []
        for start in range(1, self.size + 1):
            if seen[start]:
                continue
            cycle = []
            x = start
            while not seen[x]:
                seen[x] = True
                cycle.append(x)
                x = self[x - 1]
            result.append(tuple(cycle))
        return result

    def adjacent_word(self) -> List[int]:
        """
        Indices i of adjacent transpositions s_i = (i, i+1) with
        self = s_{w[0]} s_{w[1]} ... s_{w[-1]}.

        Bubble-sorts the one-line notation; each swap of positions i, i+1
        right-multiplies by s_i, so the swaps read backwards spell the word.
        """
        images = list(self)
        swaps = []
        for end in range(len(images) - 1, 0, -1):
            for i in range(end):
                if images[i] > images[i + 1]:
                    images[i], images[i + 1] = images[i + 1], images[i]
                    swaps.append(i + 1)
        return swaps[::-1]

    def __repr__(self):
        return f"Permutation({list(self)})"


def multiplicity(lam: Sequence[int], s: int) -> int:
    """Number of parts of lam equal to s."""
    if s < 1:
        raise PreconditionError(f"part size must be positive, got {s}")
    return sum(1 for part in lam if part == s)


@lru_cache(maxsize=None)
def _partitions_bounded(n: int, largest: int) -> Tuple[Tuple[int, ...], ...]:
    if n == 0:
        return ((),)
    result = []
    for first in range(min(n, largest), 0, -1):
        for rest in _partitions_bounded(n - first, first):
            result.append((first,) + rest)
    return tuple(result)


def partitions_of(n: int) -> List[Partition]:
    """All partitions of n, largest first (reverse-lexicographic)."""
    if n < 0:
        raise PreconditionError(f"cannot partition a negative number: {n}")
    return [Partition(p) for p in _partitions_bounded(n, n)]


@lru_cache(maxsize=None)
def partition_count(n: int) -> int:
    """p(n) through Euler's pentagonal number recurrence."""
    if n < 0:
        return 0
    if n == 0:
        return 1
    total = 0
    k = 1
    while True:
        first = n - k * (3 * k - 1) // 2
        if first < 0:
            break
        sign = 1 if k % 2 else -1
        total += sign * (partition_count(first) + partition_count(first - k))
        k += 1
    return total


def z(lam: Sequence[int]) -> int:
    """Order of the centraliser of a permutation of cycle type lam."""
    result = 1
    for s, m in Counter(lam).items():
        result *= s ** m * _fact(m)
    return result


def class_size(lam: Partition) -> int:
    return _fact(lam.weight) // z(lam)


def canonical_permutation(lam: Sequence[int]) -> Permutation:
    """Consecutive blocks of lengths lam_1, lam_2, ... each cycled i -> i+1."""
    images = []
    start = 1
    for part in lam:
        images.extend(range(start + 1, start + part))
        images.append(start)
        start += part
    return Permutation(images)


def cycle_type(g: Permutation) -> Partition:
    return Partition.from_parts(len(c) for c in g.cycles())


def multinomial(top: int, bottoms: Sequence[int]) -> int:
    """top! / prod(b!) computed exactly."""
    if any(b < 0 for b in bottoms) or sum(bottoms) != top:
        raise PreconditionError(f"multinomial bottoms {list(bottoms)} do not sum to {top}")
    result = _fact(top)
    for b in bottoms:
        result //= _fact(b)
    return result


def all_permutations(size: int) -> Iterator[Permutation]:
    for images in _permutations(range(1, size + 1)):
        yield Permutation(images)
