"""Finite S_n-sets given by images of adjacent transpositions.

An action is stored as the n-1 permutations of its ground set {1..m} that
the transpositions (i, i+1) act by. Everything else (images of arbitrary
elements, fixed points, orbits of Young subgroups, Frobenius characters)
is derived from those generators.
"""
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction
from itertools import combinations, product
from typing import Callable, Dict, Iterable, Iterator, List, NamedTuple, Optional, Sequence, Tuple

from scipy.special import comb, factorial

from config import ELEMENT_ORACLE_LIMIT
from errors import ActionValidationError, ConsistencyError, PreconditionError, ResourceGuardError
from partitions import (
    Partition,
    Permutation,
    all_permutations,
    canonical_permutation,
    partitions_of,
    z,
)
from symfunc import Basis, SymFunc, basis_element, convert, inner_product
import logging

logger = logging.getLogger(__name__)


class ValidationResult(NamedTuple):
    ok: bool
    relation: Optional[str] = None
    detail: Optional[str] = None

    def __bool__(self):
        return self.ok


class UnionFind:
    """Disjoint sets over the dense range {1..size}."""

    def __init__(self, size: int):
        self.parent = list(range(size + 1))
        self.rank = [0] * (size + 1)
        self.count = size

    def find(self, x: int) -> int:
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, x: int, y: int):
        x, y = self.find(x), self.find(y)
        if x == y:
            return
        if self.rank[x] < self.rank[y]:
            x, y = y, x
        elif self.rank[x] == self.rank[y]:
            self.rank[x] += 1
        self.parent[y] = x
        self.count -= 1

    def __len__(self):
        return self.count


class FiniteAction:
    """S_n acting on {1..m} through generator images gens[i] of (i+1, i+2)."""

    def __init__(
        self,
        n: int,
        m: int,
        gens: Sequence[Iterable[int]],
        name: str = "custom",
        labels: Optional[Sequence] = None,
    ):
        if n < 1:
            raise PreconditionError(f"rank n must be positive, got {n}")
        if m < 0:
            raise PreconditionError(f"ground set size must be nonnegative, got {m}")
        gens = tuple(g if isinstance(g, Permutation) else Permutation(g) for g in gens)
        if len(gens) != n - 1:
            raise PreconditionError(f"S_{n} needs {n - 1} generator images, got {len(gens)}")
        for i, g in enumerate(gens, 1):
            if g.size != m:
                raise PreconditionError(f"generator s{i} acts on {g.size} points, expected {m}")
        self.n = n
        self.m = m
        self.gens = gens
        self.name = name
        self.labels = tuple(labels) if labels is not None else None
        self._fixed: Dict[Partition, int] = {}

    def __repr__(self):
        return f"FiniteAction({self.name}, n={self.n}, m={self.m})"

    def validate(self) -> ValidationResult:
        return validate(self)

    def checked(self) -> "FiniteAction":
        result = validate(self)
        if not result.ok:
            raise ActionValidationError(result.relation, f"{self.name}: relation {result.relation} violated")
        return self

    def to_dict(self) -> Dict:
        return {"n": self.n, "m": self.m, "gens": [list(g) for g in self.gens]}


def validate(a: FiniteAction) -> ValidationResult:
    """Check the Coxeter relations of S_n on the generator images."""
    gens = a.gens
    for i, g in enumerate(gens, 1):
        if not (g * g).is_identity():
            return ValidationResult(False, f"s{i}^2", f"s{i} is not an involution")
    for i in range(len(gens) - 1):
        g, h = gens[i], gens[i + 1]
        if g * h * g != h * g * h:
            return ValidationResult(
                False, f"s{i + 1}s{i + 2}s{i + 1}=s{i + 2}s{i + 1}s{i + 2}", "braid relation fails"
            )
    for i in range(len(gens)):
        for j in range(i + 2, len(gens)):
            if gens[i] * gens[j] != gens[j] * gens[i]:
                return ValidationResult(False, f"s{i + 1}s{j + 1}=s{j + 1}s{i + 1}", "generators do not commute")
    logger.debug(f"{a.name}: relations hold on {a.m} points")
    return ValidationResult(True)


def image_of(a: FiniteAction, g: Permutation) -> Permutation:
    """Image of g in S_m, composed along a bubble-sort word of g."""
    if g.size != a.n:
        raise PreconditionError(f"element of S_{g.size} given to an S_{a.n}-action")
    return image_of_word(a, g.adjacent_word())


def image_of_word(a: FiniteAction, word: Sequence[int]) -> Permutation:
    """Image of s_{w[0]} s_{w[1]} ... ; indices are 1-based."""
    images = list(range(1, a.m + 1))
    for i in word:
        gen = a.gens[i - 1]
        images = [images[gen[x] - 1] for x in range(a.m)]
    return Permutation(images)


def fixed_points(a: FiniteAction, lam: Iterable[int]) -> int:
    lam = Partition.from_parts(lam)
    if lam.weight != a.n:
        raise PreconditionError(f"class {list(lam)} is not a partition of {a.n}")
    if lam not in a._fixed:
        a._fixed[lam] = image_of(a, canonical_permutation(lam)).fixed_point_count()
    return a._fixed[lam]


def frobenius_p(a: FiniteAction) -> SymFunc:
    """sum_lambda #Fix(lambda) p_lambda / z_lambda."""
    terms = {lam: Fraction(fixed_points(a, lam), z(lam)) for lam in partitions_of(a.n)}
    return SymFunc(Basis.P, terms, a.n)


class YoungSubgroup:
    """S_mu1 x S_mu2 x ... on consecutive blocks of {1..n}."""

    def __init__(self, mu: Iterable[int], ordered: bool = True):
        parts = tuple(int(p) for p in mu)
        if ordered:
            self.mu = Partition(parts)
        else:
            # conjugate Young subgroups: blocks in the given order
            if any(p < 1 for p in parts):
                raise PreconditionError(f"block sizes must be positive: {list(parts)}")
            self.mu = Partition.from_parts(parts)
        self.sizes = parts
        self.blocks: List[range] = []
        start = 1
        for size in parts:
            self.blocks.append(range(start, start + size))
            start += size

    @property
    def n(self) -> int:
        return sum(self.sizes)

    def interior_indices(self) -> List[int]:
        """Indices i with (i, i+1) inside one block."""
        return [i for block in self.blocks for i in block if i + 1 in block]

    def order(self) -> int:
        result = 1
        for size in self.sizes:
            result *= int(factorial(size, exact=True))
        return result

    def elements(self) -> Iterator[Permutation]:
        for pieces in product(*(all_permutations(size) for size in self.sizes)):
            images = []
            offset = 0
            for piece in pieces:
                images.extend(x + offset for x in piece)
                offset += piece.size
            yield Permutation(images)

    def __repr__(self):
        return f"YoungSubgroup({list(self.sizes)})"


class ClassProfile:
    """A conjugacy class of S_mu: one partition of mu_i per block."""

    def __init__(self, profile: Sequence[Iterable[int]], mu: Optional[Sequence[int]] = None):
        self.profile = tuple(Partition.from_parts(p) for p in profile)
        if mu is not None and [p.weight for p in self.profile] != list(mu):
            raise PreconditionError(
                f"profile weights {[p.weight for p in self.profile]} do not match {list(mu)}"
            )

    def centraliser_order(self) -> int:
        result = 1
        for piece in self.profile:
            result *= z(piece)
        return result

    def representative(self) -> Permutation:
        """Block i carries consecutive cycles of lengths profile[i]."""
        return canonical_permutation([part for piece in self.profile for part in piece])

    def cycle_type(self) -> Partition:
        return Partition.from_parts(part for piece in self.profile for part in piece)

    def __repr__(self):
        return f"ClassProfile({[list(p) for p in self.profile]})"


def class_profiles(y: YoungSubgroup) -> Iterator[ClassProfile]:
    for pieces in product(*(partitions_of(size) for size in y.sizes)):
        yield ClassProfile(pieces)


def _subgroup(mu) -> YoungSubgroup:
    return mu if isinstance(mu, YoungSubgroup) else YoungSubgroup(mu)


def young_orbits(a: FiniteAction, y) -> int:
    """#(M / S_mu) by union-find over the block-interior generators."""
    y = _subgroup(y)
    if y.n != a.n:
        raise PreconditionError(f"Young subgroup of S_{y.n} given to an S_{a.n}-action")
    uf = UnionFind(a.m)
    for i in y.interior_indices():
        gen = a.gens[i - 1]
        for x in range(1, a.m + 1):
            uf.union(x, gen[x - 1])
    return len(uf)


def burnside_orbits(a: FiniteAction, y) -> int:
    """#(M / S_mu) as a sum over conjugacy classes of S_mu of #Fix / centraliser order."""
    y = _subgroup(y)
    if y.n != a.n:
        raise PreconditionError(f"Young subgroup of S_{y.n} given to an S_{a.n}-action")
    total = Fraction(0)
    for profile in class_profiles(y):
        fix = image_of(a, profile.representative()).fixed_point_count()
        total += Fraction(fix, profile.centraliser_order())
    if total.denominator != 1:
        raise ConsistencyError(f"{a.name}: Burnside total {total} for {list(y.sizes)} is not an integer")
    return int(total)


def orbits_by_elements(a: FiniteAction, y, limit: int = ELEMENT_ORACLE_LIMIT) -> int:
    """Plain Burnside average over every element of S_mu."""
    y = _subgroup(y)
    if y.n > limit:
        raise ResourceGuardError("element_oracle_limit", limit, y.n)
    total = sum(image_of(a, g).fixed_point_count() for g in y.elements())
    orbits = Fraction(total, y.order())
    if orbits.denominator != 1:
        raise ConsistencyError(f"{a.name}: element average {orbits} for {list(y.sizes)} is not an integer")
    return int(orbits)


ROUTES: Dict[str, Callable[[FiniteAction, YoungSubgroup], int]] = {
    "unionfind": young_orbits,
    "burnside": burnside_orbits,
    "elements": orbits_by_elements,
}


class OrbitReport:
    """mu -> #(M / S_mu) for every mu |- n, in canonical order."""

    def __init__(self, n: int, counts: Dict[Partition, int], route: str = "unionfind"):
        self.n = n
        self.route = route
        self.counts = {mu: counts[mu] for mu in partitions_of(n)}

    def __getitem__(self, mu) -> int:
        return self.counts[Partition.from_parts(mu)]

    def items(self) -> List[Tuple[Partition, int]]:
        return list(self.counts.items())

    def to_records(self) -> List[Dict]:
        return [{"mu": list(mu), "orbits": str(count)} for mu, count in self.counts.items()]


def orbit_report(a: FiniteAction, route: str = "unionfind", workers: int = 1) -> OrbitReport:
    if route not in ROUTES:
        raise PreconditionError(f"unknown orbit route {route!r}; expected one of {sorted(ROUTES)}")
    count = ROUTES[route]
    parts = partitions_of(a.n)
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            values = list(pool.map(lambda mu: count(a, YoungSubgroup(mu)), parts))
    else:
        values = [count(a, YoungSubgroup(mu)) for mu in parts]
    logger.info(f"{a.name}: {route} orbit counts for {len(parts)} Young subgroups")
    return OrbitReport(a.n, dict(zip(parts, values)), route)


def frobenius_m(a: FiniteAction, workers: int = 1) -> SymFunc:
    """sum_mu #(M / S_mu) m_mu."""
    report = orbit_report(a, "unionfind", workers)
    return SymFunc(Basis.M, dict(report.counts), a.n)


def frobenius_m_via_inner_product(a: FiniteAction) -> SymFunc:
    """Coefficient of m_mu read off as <F, h_mu>."""
    character = frobenius_p(a)
    terms = {mu: inner_product(character, basis_element(Basis.H, mu)) for mu in partitions_of(a.n)}
    return SymFunc(Basis.M, terms, a.n)


def irreducible_multiplicities(a: FiniteAction) -> SymFunc:
    """Frobenius character in the Schur basis; coefficients are multiplicities."""
    in_s = convert(frobenius_p(a), Basis.S)
    for lam, c in in_s.items():
        if c.denominator != 1 or c < 0:
            raise ConsistencyError(f"{a.name}: multiplicity {c} of s{list(lam)} is not a natural number")
    return in_s


# ---------------------------------------------------------------------------
# Built-in actions
# ---------------------------------------------------------------------------

def _relabel_action(n: int, points: Sequence[Tuple[int, ...]], move: Callable, name: str) -> FiniteAction:
    index = {p: k for k, p in enumerate(points, 1)}
    gens = [[index[move(p, i)] for p in points] for i in range(1, n)]
    return FiniteAction(n, len(points), gens, name=name, labels=points)


def trivial(n: int) -> FiniteAction:
    if n < 1:
        raise PreconditionError(f"trivial action needs n >= 1, got {n}")
    return FiniteAction(n, 1, [[1]] * (n - 1), name=f"trivial:{n}")


def natural(n: int) -> FiniteAction:
    if n < 1:
        raise PreconditionError(f"natural action needs n >= 1, got {n}")
    gens = [Permutation.transposition(n, i, i + 1) for i in range(1, n)]
    return FiniteAction(n, n, gens, name=f"natural:{n}")


def klein_quotient() -> FiniteAction:
    """S_4 -> S_3 with kernel the Klein four-group."""
    return FiniteAction(4, 3, [[2, 1, 3], [1, 3, 2], [2, 1, 3]], name="klein")


def _swap_letters(subset: Tuple[int, ...], i: int) -> Tuple[int, ...]:
    swap = {i: i + 1, i + 1: i}
    return tuple(sorted(swap.get(x, x) for x in subset))


def subsets(n: int, k: int) -> FiniteAction:
    """S_n on the k-element subsets of [n], lexicographically indexed."""
    if n < 1 or not 0 <= k <= n:
        raise PreconditionError(f"subsets action needs n >= 1 and 0 <= k <= n, got n={n}, k={k}")
    points = list(combinations(range(1, n + 1), k))
    return _relabel_action(n, points, _swap_letters, f"subsets:{n}:{k}")


def _swap_arguments(f: Tuple[int, ...], i: int) -> Tuple[int, ...]:
    f = list(f)
    f[i - 1], f[i] = f[i], f[i - 1]
    return tuple(f)


def parking_action(n: int) -> FiniteAction:
    """S_n permuting the arguments of parking functions of length n."""
    from parking import generate_all

    if n < 1:
        raise PreconditionError(f"parking action needs n >= 1, got {n}")
    points = [tuple(f.prefs) for f in generate_all(n)]
    return _relabel_action(n, points, _swap_arguments, f"parking:{n}")


BUILTINS: Dict[str, Tuple[Callable[..., FiniteAction], int]] = {
    "trivial": (trivial, 1),
    "natural": (natural, 1),
    "subsets": (subsets, 2),
    "parking": (parking_action, 1),
    "klein": (klein_quotient, 0),
}


def _parse_builtin(spec: str) -> Tuple[str, List[int]]:
    name, *args = spec.strip().split(":")
    try:
        values = [int(v) for v in args]
    except ValueError:
        raise PreconditionError(f"built-in action {spec!r} has a non-integer argument")
    if name not in BUILTINS:
        raise PreconditionError(f"unknown built-in action {name!r}; expected one of {sorted(BUILTINS)}")
    arity = BUILTINS[name][1]
    if len(values) != arity:
        raise PreconditionError(f"built-in action {name!r} takes {arity} argument(s), got {len(values)}")
    return name, values


def builtin_size(spec: str) -> int:
    """Ground set size of a built-in action, without building it."""
    name, values = _parse_builtin(spec)
    if name == "trivial":
        return 1
    if name == "natural":
        return values[0]
    if name == "subsets":
        n, k = values
        return int(comb(n, k, exact=True)) if 0 <= k <= n else 0
    if name == "parking":
        return (values[0] + 1) ** (values[0] - 1) if values[0] >= 1 else 0
    return 3


def resolve_builtin(spec: str) -> FiniteAction:
    """Parse trivial:n, natural:n, subsets:n:k, parking:n or klein."""
    name, values = _parse_builtin(spec)
    return BUILTINS[name][0](*values).checked()


def builtin_catalogue(max_n: int) -> List[FiniteAction]:
    """Every built-in action with n <= max_n (subsets with k <= n/2)."""
    actions = []
    for n in range(1, max_n + 1):
        actions.append(trivial(n))
        actions.append(natural(n))
        actions.extend(subsets(n, k) for k in range(0, n // 2 + 1))
        actions.append(parking_action(n))
    if max_n >= 4:
        actions.append(klein_quotient())
    return actions
