"""Self-verification suite: every library invariant checked up to a degree bound."""
from itertools import permutations, product
import time
from fractions import Fraction
from typing import Callable, Dict, List, Optional

import numpy as np
import pandas as pd

from config import ELEMENT_ORACLE_LIMIT, POLLAK_ENUM_LIMIT, RANDOM_SEED, SELFTEST_MAX_N
from errors import FrobeniusError, PreconditionError
from parking import (
    count_parking,
    generate_all,
    is_parking,
    orbit_count_formula,
    orbit_count_pollak,
    park_linear,
    rotation_property_failures,
)
from partitions import (
    Partition,
    Permutation,
    canonical_permutation,
    class_size,
    cycle_type,
    partition_count,
    partitions_of,
    z,
)
from setaction import (
    YoungSubgroup,
    builtin_catalogue,
    burnside_orbits,
    fixed_points,
    frobenius_m,
    frobenius_m_via_inner_product,
    frobenius_p,
    image_of,
    klein_quotient,
    orbits_by_elements,
    parking_action,
    young_orbits,
)
from symfunc import (
    Basis,
    SymFunc,
    basis_element,
    character_table,
    convert,
    hook_dimension,
    inner_product,
    l_coefficient,
    l_via_splitting,
    multiply,
)
import logging

logger = logging.getLogger(__name__)

KLEIN_EXPANSIONS = {
    Basis.S: {(4,): 1, (2, 2): 1},
    Basis.H: {(4,): 1, (3, 1): -1, (2, 2): 1},
    Basis.E: {(4,): -1, (3, 1): 1, (2, 2): 2, (2, 1, 1): -3, (1, 1, 1, 1): 1},
}


class SuiteResult:
    def __init__(self, name: str):
        self.name = name
        self.checks = 0
        self.failures: List[str] = []

    def check(self, condition: bool, description: str):
        self.checks += 1
        if not condition:
            self.failures.append(description)
            logger.error(f"[{self.name}] {description}")

    @property
    def passed(self) -> bool:
        return not self.failures


class SelfTester:
    """Run the invariant suites and collect a timing summary."""

    def __init__(self, max_n: int = SELFTEST_MAX_N, seed: int = RANDOM_SEED):
        if not 1 <= max_n <= SELFTEST_MAX_N:
            raise PreconditionError(f"selftest max_n must lie in 1..{SELFTEST_MAX_N}, got {max_n}")
        self.max_n = max_n
        self.rng = np.random.default_rng(seed)
        self.suites: Dict[str, Callable[[SuiteResult], None]] = {
            "partitions": self.check_partitions,
            "l_matrix": self.check_l_matrix,
            "characters": self.check_characters,
            "conversions": self.check_conversions,
            "klein_example": self.check_klein_example,
            "main_theorem": self.check_main_theorem,
            "conjugacy": self.check_conjugacy,
            "young_subgroups": self.check_young_subgroups,
            "parking": self.check_parking,
        }

    def run(self, only: Optional[List[str]] = None) -> pd.DataFrame:
        names = only or list(self.suites)
        unknown = [name for name in names if name not in self.suites]
        if unknown:
            raise PreconditionError(f"unknown suite(s) {unknown}; expected some of {list(self.suites)}")
        rows = []
        for name in names:
            result = SuiteResult(name)
            started = time.perf_counter()
            try:
                self.suites[name](result)
            except FrobeniusError as e:
                result.failures.append(f"{type(e).__name__}: {e}")
                logger.error(f"[{name}] aborted: {e}")
            elapsed = time.perf_counter() - started
            logger.info(f"suite {name}: {result.checks} checks, {len(result.failures)} failures, {elapsed:.2f}s")
            rows.append({
                "suite": name,
                "checks": result.checks,
                "failures": len(result.failures),
                "seconds": round(elapsed, 3),
                "passed": result.passed,
                "first_failure": result.failures[0] if result.failures else "",
            })
        return pd.DataFrame(rows)

    def _degrees(self, cap: Optional[int] = None) -> range:
        return range(1, min(self.max_n, cap or self.max_n) + 1)

    def check_partitions(self, result: SuiteResult):
        for n in self._degrees():
            parts = partitions_of(n)
            result.check(len(set(parts)) == len(parts), f"duplicate partitions of {n}")
            result.check(all(p.weight == n for p in parts), f"wrong weight among partitions of {n}")
            result.check(len(parts) == partition_count(n), f"p({n}) disagrees with the recurrence")
            result.check(sum(class_size(p) for p in parts) == z([1] * n), f"class sizes of S_{n} do not sum to n!")
            for lam in parts:
                result.check(cycle_type(canonical_permutation(lam)) == lam, f"cycle type round trip fails at {list(lam)}")

    def check_l_matrix(self, result: SuiteResult):
        for n in self._degrees():
            for lam in partitions_of(n):
                result.check(l_coefficient(lam, [n]) == 1, f"L({list(lam)}, ({n})) != 1")
                result.check(l_coefficient(lam, lam) >= 1, f"L({list(lam)}, {list(lam)}) == 0")
                for mu in partitions_of(n):
                    result.check(
                        l_coefficient(lam, mu) == l_via_splitting(lam, mu),
                        f"L({list(lam)}, {list(mu)}) differs between mappings and splittings",
                    )

    def check_characters(self, result: SuiteResult):
        for n in self._degrees():
            table = character_table(n)
            result.check(table.column_orthogonality_holds(), f"column orthogonality fails for n={n}")
            identity = Partition([1] * n)
            power = basis_element(Basis.P, [1])
            for _ in range(n - 1):
                power = multiply(power, basis_element(Basis.P, [1]))
            in_s = convert(power, Basis.S)
            for lam in partitions_of(n):
                dimension = hook_dimension(lam)
                result.check(table.value(lam, identity) == dimension, f"chi^{list(lam)}(1^{n}) != hook dimension")
                result.check(in_s.coefficient(lam) == dimension, f"p_1^{n} has wrong s{list(lam)} coefficient")

    def check_conversions(self, result: SuiteResult):
        for n in self._degrees():
            parts = partitions_of(n)
            for source in Basis:
                for lam in parts:
                    x = basis_element(source, lam)
                    for target in Basis:
                        back = convert(convert(x, target), source)
                        result.check(
                            back.basis == source and back.terms == x.terms,
                            f"{source.value}->{target.value}->{source.value} round trip fails at {list(lam)}",
                        )
                    in_m = convert(x, Basis.M)
                    for mu in parts:
                        result.check(
                            inner_product(x, basis_element(Basis.H, mu)) == in_m.coefficient(mu),
                            f"<{source.value}{list(lam)}, h{list(mu)}> != m-coefficient",
                        )
            for lam in parts:
                for mu in parts:
                    expected = Fraction(1 if lam == mu else 0)
                    result.check(
                        inner_product(basis_element(Basis.S, lam), basis_element(Basis.S, mu)) == expected,
                        f"<s{list(lam)}, s{list(mu)}> != {expected}",
                    )
                result.check(
                    inner_product(basis_element(Basis.P, lam), basis_element(Basis.P, lam)) == z(lam),
                    f"<p{list(lam)}, p{list(lam)}> != z",
                )

    def check_klein_example(self, result: SuiteResult):
        if self.max_n < 4:
            return
        character = frobenius_p(klein_quotient().checked())
        for basis, expected in KLEIN_EXPANSIONS.items():
            result.check(
                convert(character, basis).terms == SymFunc(basis, expected, 4).terms,
                f"klein character in the {basis.value} basis",
            )

    def check_main_theorem(self, result: SuiteResult):
        for action in builtin_catalogue(self.max_n):
            result.check(action.validate().ok, f"{action.name} fails the Coxeter relations")
            by_orbits = frobenius_m(action)
            by_fixed_points = convert(frobenius_p(action), Basis.M)
            result.check(by_fixed_points.terms == by_orbits.terms, f"{action.name}: p-route and orbit route differ")
            result.check(
                frobenius_m_via_inner_product(action).terms == by_orbits.terms,
                f"{action.name}: inner-product route differs",
            )
            for mu in partitions_of(action.n):
                expected = young_orbits(action, mu)
                result.check(burnside_orbits(action, mu) == expected, f"{action.name}: class-profile Burnside differs at {list(mu)}")
                if action.n <= ELEMENT_ORACLE_LIMIT:
                    result.check(orbits_by_elements(action, mu) == expected, f"{action.name}: element Burnside differs at {list(mu)}")

    def check_conjugacy(self, result: SuiteResult):
        for action in builtin_catalogue(min(self.max_n, 5)):
            for lam in partitions_of(action.n):
                g = canonical_permutation(lam)
                expected = fixed_points(action, lam)
                for _ in range(20):
                    h = Permutation.random(action.n, self.rng)
                    conjugate = h * g * h.inverse()
                    result.check(
                        image_of(action, conjugate).fixed_point_count() == expected,
                        f"{action.name}: fixed points vary on class {list(lam)}",
                    )

    def check_young_subgroups(self, result: SuiteResult):
        for action in builtin_catalogue(min(self.max_n, 5)):
            for mu in partitions_of(action.n):
                expected = young_orbits(action, mu)
                for order in set(_orderings(mu)):
                    result.check(
                        young_orbits(action, YoungSubgroup(order, ordered=False)) == expected,
                        f"{action.name}: block order {list(order)} changes the orbit count",
                    )
                for coarser in _merges(mu):
                    result.check(
                        young_orbits(action, coarser) <= expected,
                        f"{action.name}: merging {list(mu)} into {list(coarser)} adds orbits",
                    )
            result.check(young_orbits(action, [1] * action.n) == action.m, f"{action.name}: trivial subgroup orbits != m")

    def check_parking(self, result: SuiteResult):
        for n in self._degrees():
            result.check(len(generate_all(n)) == count_parking(n), f"|PF_{n}| != (n+1)^(n-1)")
        for n in self._degrees(POLLAK_ENUM_LIMIT):
            result.check(not rotation_property_failures(n), f"rotation property fails for n={n}")
            for prefs in _all_functions(n):
                result.check(is_parking(prefs) == park_linear(prefs).success, f"{prefs}: recognition and process disagree")
        for n in self._degrees():
            action = parking_action(n)
            in_m = frobenius_m(action)
            for mu in partitions_of(n):
                formula = orbit_count_formula(n, mu)
                result.check(young_orbits(action, mu) == formula, f"parking:{n} union-find differs from formula at {list(mu)}")
                result.check(burnside_orbits(action, mu) == formula, f"parking:{n} Burnside differs from formula at {list(mu)}")
                result.check(orbit_count_pollak(n, mu) == formula, f"parking:{n} multiset count differs at {list(mu)}")
                result.check(in_m.coefficient(mu) == formula, f"parking:{n} m-coefficient differs at {list(mu)}")


def _all_functions(n: int):
    return product(range(1, n + 1), repeat=n)


def _orderings(mu: Partition):
    return permutations(tuple(mu))


def _merges(mu: Partition) -> List[Partition]:
    """Partitions obtained by merging two parts of mu."""
    merged = []
    for i in range(len(mu)):
        for j in range(i + 1, len(mu)):
            rest = [p for k, p in enumerate(mu) if k not in (i, j)]
            merged.append(Partition.from_parts(rest + [mu[i] + mu[j]]))
    return merged
