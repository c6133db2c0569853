"""Parking functions: recognition, linear and circular parking, orbit counts."""
from collections import Counter
from fractions import Fraction
from itertools import combinations_with_replacement, product
from typing import Dict, Iterable, List, Optional, Tuple

from scipy.special import comb

from config import PARKING_ENUM_LIMIT, POLLAK_ENUM_LIMIT
from errors import ConsistencyError, PreconditionError, ResourceGuardError
from partitions import Partition
import logging

logger = logging.getLogger(__name__)


class PreferenceFunction:
    """Preferred spaces of cars 1..n on a street with ``capacity`` spaces."""

    __slots__ = ("prefs", "capacity")

    def __init__(self, prefs: Iterable[int], capacity: Optional[int] = None):
        prefs = tuple(int(p) for p in prefs)
        capacity = len(prefs) if capacity is None else capacity
        if any(not 1 <= p <= capacity for p in prefs):
            raise PreconditionError(f"preferences {list(prefs)} must lie in 1..{capacity}")
        self.prefs = prefs
        self.capacity = capacity

    @property
    def n(self) -> int:
        return len(self.prefs)

    def __eq__(self, other):
        if not isinstance(other, PreferenceFunction):
            return NotImplemented
        return self.prefs == other.prefs and self.capacity == other.capacity

    def __hash__(self):
        return hash((self.prefs, self.capacity))

    def __repr__(self):
        return f"PreferenceFunction({list(self.prefs)}, capacity={self.capacity})"


class ParkingOutcome:
    def __init__(self, success: bool, assignment: Optional[Tuple[int, ...]] = None, unoccupied: Optional[int] = None):
        self.success = success
        self.assignment = assignment
        self.unoccupied = unoccupied

    def __repr__(self):
        return f"ParkingOutcome(success={self.success}, assignment={self.assignment}, unoccupied={self.unoccupied})"


def _as_linear(f) -> PreferenceFunction:
    if not isinstance(f, PreferenceFunction):
        f = PreferenceFunction(f)
    if f.capacity != f.n:
        raise PreconditionError(f"linear street needs capacity {f.n}, got {f.capacity}")
    return f


def _as_circular(f) -> PreferenceFunction:
    if not isinstance(f, PreferenceFunction):
        f = PreferenceFunction(f, len(tuple(f)) + 1)
    if f.capacity != f.n + 1:
        raise PreconditionError(f"circular street needs capacity {f.n + 1}, got {f.capacity}")
    return f


def is_parking(f) -> bool:
    """At least k preferences are <= k, for every k."""
    f = _as_linear(f)
    at_most = Counter(f.prefs)
    running = 0
    for k in range(1, f.n + 1):
        running += at_most[k]
        if running < k:
            return False
    return True


def park_linear(f) -> ParkingOutcome:
    f = _as_linear(f)
    occupied = [False] * (f.n + 2)
    assignment = []
    for pref in f.prefs:
        space = pref
        while space <= f.n and occupied[space]:
            space += 1
        if space > f.n:
            return ParkingOutcome(False)
        occupied[space] = True
        assignment.append(space)
    return ParkingOutcome(True, tuple(assignment))


def park_circular(f) -> ParkingOutcome:
    """Spaces 1..n+1 in a cycle; every car parks and one space stays empty."""
    f = _as_circular(f)
    size = f.capacity
    occupied = [False] * (size + 1)
    assignment = []
    for pref in f.prefs:
        space = pref
        while occupied[space]:
            space = space % size + 1
        occupied[space] = True
        assignment.append(space)
    empty = [s for s in range(1, size + 1) if not occupied[s]]
    if len(empty) != 1:
        raise ConsistencyError(f"circular parking of {list(f.prefs)} left spaces {empty} empty")
    return ParkingOutcome(True, tuple(assignment), empty[0])


def rotate(f, shift: int) -> PreferenceFunction:
    """f(i) -> ((f(i) + shift - 1) mod (n+1)) + 1."""
    f = _as_circular(f)
    if not 0 <= shift <= f.n:
        raise PreconditionError(f"shift must lie in 0..{f.n}, got {shift}")
    size = f.capacity
    return PreferenceFunction(((p + shift - 1) % size + 1 for p in f.prefs), size)


def pollak_representative(f) -> Tuple[int, PreferenceFunction]:
    """The unique rotation of f that is a parking function, with its shift."""
    f = _as_circular(f)
    size = f.capacity
    # moving the empty space e to n+1 needs shift n+1-e
    shift = (size - park_circular(f).unoccupied) % size
    rotated = rotate(f, shift)
    return shift, PreferenceFunction(rotated.prefs, f.n)


def count_parking(n: int) -> int:
    if n < 1:
        raise PreconditionError(f"length must be positive, got {n}")
    return (n + 1) ** (n - 1)


def generate_all(n: int, limit: int = PARKING_ENUM_LIMIT) -> List[PreferenceFunction]:
    """All parking functions of length n, lexicographically, by filtering [n]^n."""
    if n < 1:
        raise PreconditionError(f"length must be positive, got {n}")
    if n > limit:
        raise ResourceGuardError("parking_enum_limit", limit, n)
    result = []
    for prefs in product(range(1, n + 1), repeat=n):
        ordered = sorted(prefs)
        if all(ordered[i] <= i + 1 for i in range(n)):
            result.append(PreferenceFunction(prefs, n))
    logger.info(f"enumerated {len(result)} parking functions of length {n}")
    return result


def nondecreasing_parking(n: int, limit: int = PARKING_ENUM_LIMIT) -> List[PreferenceFunction]:
    """Sorted parking functions: one per S_n-orbit."""
    return [f for f in generate_all(n, limit) if list(f.prefs) == sorted(f.prefs)]


def _check_mu(n: int, mu) -> Partition:
    mu = Partition.from_parts(mu)
    if n < 1 or mu.weight != n:
        raise PreconditionError(f"{list(mu)} is not a partition of {n}")
    return mu


def _multiset_total(n: int, mu: Partition) -> int:
    total = 1
    for part in mu:
        total *= int(comb(part + n, n, exact=True))
    return total


def orbit_count_formula(n: int, mu) -> int:
    """(1 / (n+1)) * prod_i binom(mu_i + n, n)."""
    mu = _check_mu(n, mu)
    value = Fraction(_multiset_total(n, mu), n + 1)
    if value.denominator != 1:
        raise ConsistencyError(f"orbit formula for {list(mu)} is not an integer: {value}")
    return int(value)


def orbit_count_pollak(n: int, mu, limit: int = POLLAK_ENUM_LIMIT) -> int:
    """
    Count S_mu-orbits on parking functions through tuples of multisets.

    A tuple of multisets over {1..n+1} (sizes mu_1, mu_2, ...) is the
    preference data of one orbit on the circular street. Rotations act
    freely on the tuples and each rotation class contains exactly one
    parking tuple. Up to ``limit`` the classes are enumerated explicitly;
    beyond it the class count is the product of multiset counts over n+1.
    """
    mu = _check_mu(n, mu)
    size = n + 1
    if n > limit:
        total = _multiset_total(n, mu)
        if total % size:
            raise ConsistencyError(f"{total} multiset tuples do not split into rotation classes of {size}")
        return total // size

    classes: Dict[Tuple, List[bool]] = {}
    blocks = [list(combinations_with_replacement(range(1, size + 1), part)) for part in mu]
    for choice in product(*blocks):
        rotations = [
            tuple(tuple(sorted((v + s - 1) % size + 1 for v in block)) for block in choice)
            for s in range(size)
        ]
        key = min(rotations)
        prefs = [v for block in choice for v in block]
        parks = max(prefs) <= n and is_parking(PreferenceFunction(prefs, n))
        classes.setdefault(key, []).append(parks)

    for key, members in classes.items():
        if len(members) != size or sum(members) != 1:
            raise ConsistencyError(
                f"rotation class {key} has {len(members)} members, {sum(members)} of them parking"
            )
    logger.debug(f"{len(classes)} rotation classes for n={n}, mu={list(mu)}")
    return len(classes)


def rotation_property_failures(n: int, limit: int = POLLAK_ENUM_LIMIT) -> List[Tuple[int, ...]]:
    """
    Preference functions [n] -> [n+1] whose rotations do not contain exactly
    one parking function, or whose parking rotation does not leave n+1 empty.
    """
    if n < 1:
        raise PreconditionError(f"length must be positive, got {n}")
    if n > limit:
        raise ResourceGuardError("pollak_enum_limit", limit, n)
    size = n + 1
    failures = []
    for prefs in product(range(1, size + 1), repeat=n):
        f = PreferenceFunction(prefs, size)
        parking_shifts = []
        for shift in range(size):
            g = rotate(f, shift)
            if max(g.prefs) <= n and is_parking(PreferenceFunction(g.prefs, n)):
                parking_shifts.append(shift)
        if len(parking_shifts) != 1 or park_circular(rotate(f, parking_shifts[0])).unoccupied != size:
            failures.append(prefs)
    logger.info(f"rotation property checked on {size ** n} preference functions of length {n}")
    return failures
