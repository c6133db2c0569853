"""Tests for finite S_n-sets, fixed points, orbit counts and Frobenius characters."""
from fractions import Fraction
from itertools import permutations
import logging

import numpy as np

from errors import ActionValidationError, PreconditionError, ResourceGuardError
from partitions import Partition, Permutation, canonical_permutation, partitions_of, z
from setaction import (
    ClassProfile,
    FiniteAction,
    YoungSubgroup,
    builtin_catalogue,
    builtin_size,
    burnside_orbits,
    class_profiles,
    fixed_points,
    frobenius_m,
    frobenius_m_via_inner_product,
    frobenius_p,
    image_of,
    image_of_word,
    irreducible_multiplicities,
    klein_quotient,
    natural,
    orbit_report,
    orbits_by_elements,
    parking_action,
    resolve_builtin,
    subsets,
    trivial,
    validate,
    young_orbits,
)
from symfunc import Basis, SymFunc, convert

logging.basicConfig(
    level=logging.INFO,
    format='%(asctime)s - %(name)s - %(levelname)s - %(message)s'
)
logger = logging.getLogger(__name__)


def test_validate_builtins():
    assert validate(natural(3)).ok
    assert validate(klein_quotient()).ok
    for action in builtin_catalogue(5):
        assert action.validate().ok, action.name


def test_validate_reports_first_relation():
    broken = FiniteAction(3, 3, [[2, 3, 1], [1, 3, 2]])
    result = validate(broken)
    assert not result.ok
    assert result.relation == "s1^2"
    try:
        broken.checked()
    except ActionValidationError as e:
        assert e.relation == "s1^2"
    else:
        raise AssertionError("invalid action passed checked()")


def test_validate_braid_and_commutation():
    # involutions that do not braid: s1 -> (1 2), s2 -> (3 4) on four points
    no_braid = FiniteAction(3, 4, [[2, 1, 3, 4], [1, 2, 4, 3]])
    assert validate(no_braid).relation == "s1s2s1=s2s1s2"
    # s1 and s3 move the shared point 2
    no_commute = FiniteAction(4, 3, [[2, 1, 3], [2, 1, 3], [1, 3, 2]])
    assert validate(no_commute).relation == "s1s3=s3s1"


def test_image_of_basics():
    action = natural(3)
    assert image_of(action, Permutation.identity(3)).is_identity()
    assert image_of(action, Permutation([2, 1, 3])) == Permutation([2, 1, 3])
    assert image_of_word(action, [1, 2, 1]) == image_of_word(action, [2, 1, 2])
    klein = klein_quotient()
    assert image_of_word(klein, [1, 2, 1]) == image_of_word(klein, [2, 1, 2])


def test_natural_action_is_a_homomorphism():
    action = natural(4)
    rng = np.random.default_rng(5)
    for _ in range(20):
        g = Permutation.random(4, rng)
        h = Permutation.random(4, rng)
        assert image_of(action, g) == g
        assert image_of(action, g * h) == image_of(action, g) * image_of(action, h)


def test_fixed_points_examples():
    assert fixed_points(natural(3), (1, 1, 1)) == 3
    assert fixed_points(natural(3), (2, 1)) == 1
    klein = klein_quotient()
    classes = [(1, 1, 1, 1), (2, 1, 1), (2, 2), (3, 1), (4,)]
    assert [fixed_points(klein, lam) for lam in classes] == [3, 1, 3, 0, 1]


def test_fixed_points_constant_on_classes():
    rng = np.random.default_rng(17)
    for action in builtin_catalogue(4):
        for lam in partitions_of(action.n):
            g = canonical_permutation(lam)
            for _ in range(20):
                h = Permutation.random(action.n, rng)
                conjugate = h * g * h.inverse()
                assert image_of(action, conjugate).fixed_point_count() == fixed_points(action, lam)


def test_frobenius_p_examples():
    for n in range(1, 5):
        expected = SymFunc("p", {lam: Fraction(1, z(lam)) for lam in partitions_of(n)})
        assert frobenius_p(trivial(n)).terms == expected.terms
    assert frobenius_p(natural(2)).terms == {Partition([1, 1]): 1}


def test_klein_example_expansions():
    character = frobenius_p(klein_quotient())
    assert convert(character, Basis.S).terms == SymFunc("s", {(4,): 1, (2, 2): 1}).terms
    assert convert(character, Basis.H).terms == SymFunc("h", {(4,): 1, (3, 1): -1, (2, 2): 1}).terms
    assert convert(character, Basis.E).terms == SymFunc(
        "e", {(4,): -1, (3, 1): 1, (2, 2): 2, (2, 1, 1): -3, (1, 1, 1, 1): 1}
    ).terms
    assert irreducible_multiplicities(klein_quotient()).terms == SymFunc("s", {(4,): 1, (2, 2): 1}).terms


def test_young_orbits_examples():
    for action in builtin_catalogue(4):
        assert young_orbits(action, [1] * action.n) == action.m
    assert young_orbits(natural(3), (3,)) == 1
    assert young_orbits(klein_quotient(), (2, 2)) == 2


def test_burnside_orbits_examples():
    assert burnside_orbits(natural(3), (2, 1)) == 2
    assert burnside_orbits(klein_quotient(), (1, 1, 1, 1)) == 3
    for action in builtin_catalogue(4):
        total = sum(Fraction(fixed_points(action, lam), z(lam)) for lam in partitions_of(action.n))
        assert burnside_orbits(action, (action.n,)) == total


def test_class_profiles():
    profiles = list(class_profiles(YoungSubgroup((2, 1))))
    assert [[list(p) for p in c.profile] for c in profiles] == [[[2], [1]], [[1, 1], [1]]]
    profile = ClassProfile([(2, 1), (2,)], mu=(3, 2))
    assert profile.representative() == canonical_permutation((2, 1, 2))
    assert profile.cycle_type() == (2, 2, 1)
    assert profile.centraliser_order() == 4
    try:
        ClassProfile([(2,), (1,)], mu=(1, 2))
    except PreconditionError:
        pass
    else:
        raise AssertionError("mismatched profile accepted")


def test_frobenius_m_examples():
    for n in range(1, 6):
        assert frobenius_m(trivial(n)).terms == {mu: 1 for mu in partitions_of(n)}
        assert frobenius_m(natural(n)).terms == {mu: mu.length for mu in partitions_of(n)}
    expected = {(4,): 1, (3, 1): 1, (2, 2): 2, (2, 1, 1): 2, (1, 1, 1, 1): 3}
    assert frobenius_m(klein_quotient()).terms == SymFunc("m", expected).terms


def test_main_theorem_all_routes():
    for action in builtin_catalogue(5):
        by_orbits = frobenius_m(action)
        assert convert(frobenius_p(action), Basis.M).terms == by_orbits.terms, action.name
        assert frobenius_m_via_inner_product(action).terms == by_orbits.terms, action.name
        for mu in partitions_of(action.n):
            expected = young_orbits(action, mu)
            assert burnside_orbits(action, mu) == expected, (action.name, mu)
            assert orbits_by_elements(action, mu) == expected, (action.name, mu)


def test_main_theorem_degree_six():
    actions = [action for action in builtin_catalogue(6) if action.n == 6]
    assert [action.name for action in actions] == [
        "trivial:6", "natural:6", "subsets:6:0", "subsets:6:1", "subsets:6:2", "subsets:6:3", "parking:6",
    ]
    for action in actions:
        by_orbits = frobenius_m(action)
        assert convert(frobenius_p(action), Basis.M).terms == by_orbits.terms, action.name
        for mu in partitions_of(6):
            assert burnside_orbits(action, mu) == by_orbits.coefficient(mu), (action.name, mu)


def test_orbits_invariant_under_block_order():
    for action in builtin_catalogue(5):
        for mu in partitions_of(action.n):
            expected = young_orbits(action, mu)
            for order in set(permutations(mu)):
                assert young_orbits(action, YoungSubgroup(order, ordered=False)) == expected


def test_orbits_decrease_under_merging():
    for action in builtin_catalogue(5):
        for mu in partitions_of(action.n):
            for i in range(len(mu)):
                for j in range(i + 1, len(mu)):
                    rest = [p for k, p in enumerate(mu) if k not in (i, j)]
                    coarser = Partition.from_parts(rest + [mu[i] + mu[j]])
                    assert young_orbits(action, mu) >= young_orbits(action, coarser)


def test_orbit_report_routes_and_workers():
    action = subsets(5, 2)
    serial = orbit_report(action, "unionfind")
    threaded = orbit_report(action, "unionfind", workers=4)
    burnside = orbit_report(action, "burnside")
    assert serial.counts == threaded.counts == burnside.counts
    assert serial[(1, 1, 1, 1, 1)] == 10
    assert serial.to_records()[0] == {"mu": [5], "orbits": "1"}


def test_irreducible_multiplicities_are_natural():
    for action in builtin_catalogue(5):
        for lam, c in irreducible_multiplicities(action).items():
            assert c.denominator == 1 and c > 0


def test_element_oracle_guard():
    try:
        orbits_by_elements(natural(6), (6,))
    except ResourceGuardError as e:
        assert e.limit == 5
    else:
        raise AssertionError("element oracle ran above its guard")


def test_builtins():
    assert natural(3).gens == (Permutation([2, 1, 3]), Permutation([1, 3, 2]))
    assert parking_action(2).m == 3
    assert subsets(4, 2).m == 6
    assert resolve_builtin("klein").m == 3
    assert resolve_builtin("subsets:4:1").m == 4
    assert builtin_size("parking:7") == 262144
    assert builtin_size("subsets:6:3") == 20
    for bad in ["subsets:3:4", "natural:0", "cube:3", "natural", "natural:x"]:
        try:
            resolve_builtin(bad)
        except PreconditionError:
            continue
        raise AssertionError(f"{bad} accepted")


def main():
    tests = [value for name, value in sorted(globals().items()) if name.startswith("test_")]
    for test in tests:
        test()
        logger.info(f"✅ {test.__name__}")


if __name__ == "__main__":
    main()
