"""Homogeneous symmetric functions over exact rationals and basis conversions.

Every conversion routes through the power sum basis P. Forward maps into P
come from closed formulas (h, e), the character table (s) or the inverse of
the L matrix (m); maps out of P use the L matrix (m), the character table (s)
or an exact solve against the forward matrix (h, e).
"""
from collections import Counter
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from itertools import product
from typing import Dict, Iterable, List, Mapping, Optional, Tuple, Union

import numpy as np
from scipy.special import factorial

from errors import ConsistencyError, PreconditionError
from partitions import Partition, multinomial, partitions_of, z
import logging

logger = logging.getLogger(__name__)


class Basis(str, Enum):
    P = "p"
    M = "m"
    H = "h"
    E = "e"
    S = "s"

    @classmethod
    def parse(cls, tag: Union[str, "Basis"]) -> "Basis":
        if isinstance(tag, Basis):
            return tag
        try:
            return cls(str(tag).lower())
        except ValueError:
            raise PreconditionError(f"unknown basis {tag!r}; expected one of p, m, h, e, s")


class SymFunc:
    """A homogeneous symmetric function written in one basis.

    Terms map partitions of ``degree`` to nonzero Fractions. Equality converts
    both sides to the power sum basis.
    """

    __slots__ = ("basis", "degree", "_terms")

    def __init__(self, basis: Union[str, Basis], terms: Optional[Mapping] = None, degree: Optional[int] = None):
        self.basis = Basis.parse(basis)
        clean: Dict[Partition, Fraction] = {}
        weights = {}
        for key, coeff in (terms or {}).items():
            lam = key if isinstance(key, Partition) else Partition.from_parts(key)
            weights.setdefault(lam.weight, lam)
            coeff = Fraction(coeff)
            if coeff != 0:
                clean[lam] = clean.get(lam, Fraction(0)) + coeff
                if clean[lam] == 0:
                    del clean[lam]
        if len(weights) > 1:
            a, b = sorted(weights)[:2]
            raise PreconditionError(
                f"inhomogeneous symmetric function: terms of weight {a} and {b}"
            )
        if weights:
            found = next(iter(weights))
            if degree is not None and degree != found:
                raise PreconditionError(
                    f"inhomogeneous symmetric function: terms of weight {found} and {degree}"
                )
            degree = found
        if degree is None or degree < 0:
            raise PreconditionError("the degree of a zero symmetric function must be given")
        self.degree = degree
        self._terms = clean

    @property
    def terms(self) -> Dict[Partition, Fraction]:
        return dict(self._terms)

    def items(self) -> List[Tuple[Partition, Fraction]]:
        """Terms in canonical (reverse-lexicographic) order."""
        return sorted(self._terms.items(), key=lambda kv: kv[0], reverse=True)

    def coefficient(self, lam: Iterable[int]) -> Fraction:
        return self._terms.get(Partition.from_parts(lam), Fraction(0))

    def is_zero(self) -> bool:
        return not self._terms

    def to(self, target: Union[str, Basis]) -> "SymFunc":
        return convert(self, target)

    def _aligned(self, other: "SymFunc") -> "SymFunc":
        if not isinstance(other, SymFunc):
            return NotImplemented
        if other.degree != self.degree:
            raise PreconditionError(f"degree mismatch: {self.degree} and {other.degree}")
        return other if other.basis == self.basis else convert(other, self.basis)

    def __add__(self, other):
        other = self._aligned(other)
        if other is NotImplemented:
            return other
        terms = dict(self._terms)
        for lam, c in other._terms.items():
            terms[lam] = terms.get(lam, Fraction(0)) + c
        return SymFunc(self.basis, terms, self.degree)

    def __neg__(self):
        return SymFunc(self.basis, {lam: -c for lam, c in self._terms.items()}, self.degree)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, SymFunc):
            return multiply(self, other)
        scalar = Fraction(other)
        return SymFunc(self.basis, {lam: scalar * c for lam, c in self._terms.items()}, self.degree)

    def __rmul__(self, other):
        return self * other

    def __eq__(self, other):
        if not isinstance(other, SymFunc):
            return NotImplemented
        if self.degree != other.degree:
            return False
        if self.basis == other.basis:
            return self._terms == other._terms
        return convert(self, Basis.P)._terms == convert(other, Basis.P)._terms

    __hash__ = None

    def __repr__(self):
        if not self._terms:
            return f"SymFunc({self.basis.value}, 0, degree={self.degree})"
        body = " + ".join(f"{c}*{self.basis.value}{list(lam)}" for lam, c in self.items())
        return f"SymFunc({body})"


def basis_element(basis: Union[str, Basis], lam: Iterable[int]) -> SymFunc:
    lam = Partition.from_parts(lam)
    return SymFunc(basis, {lam: 1}, lam.weight)


def zero(basis: Union[str, Basis], degree: int) -> SymFunc:
    return SymFunc(basis, {}, degree)


# ---------------------------------------------------------------------------
# L_{lambda mu}: p_lambda = sum_mu L_{lambda mu} m_mu
# ---------------------------------------------------------------------------

def _check_same_weight(lam: Partition, mu: Partition):
    if lam.weight != mu.weight:
        raise PreconditionError(f"weight mismatch: {list(lam)} has weight {lam.weight}, {list(mu)} has {mu.weight}")


def l_coefficient(lam: Iterable[int], mu: Iterable[int]) -> int:
    """Number of maps phi from parts of lam to parts of mu whose fibres sum to mu_j."""
    lam, mu = Partition.from_parts(lam), Partition.from_parts(mu)
    _check_same_weight(lam, mu)
    remaining = list(mu)

    def assign(i: int) -> int:
        if i == len(lam):
            return 1 if not any(remaining) else 0
        count = 0
        for j in range(len(remaining)):
            if remaining[j] >= lam[i]:
                remaining[j] -= lam[i]
                count += assign(i + 1)
                remaining[j] += lam[i]
        return count

    return assign(0)


def l_via_splitting(lam: Iterable[int], mu: Iterable[int]) -> int:
    """L_{lambda mu} as a sum over splittings (mu^(1), ..., mu^(l)) with mu^(i) |- mu_i."""
    lam, mu = Partition.from_parts(lam), Partition.from_parts(mu)
    _check_same_weight(lam, mu)
    target = Counter(lam)
    total = 0
    for pieces in product(*(partitions_of(part) for part in mu)):
        joint = Counter()
        for piece in pieces:
            joint.update(piece)
        if joint != target:
            continue
        term = 1
        for s, m in target.items():
            term *= multinomial(m, [piece.multiplicity(s) for piece in pieces])
        total += term
    return total


@lru_cache(maxsize=None)
def l_matrix(n: int) -> np.ndarray:
    """Rows index lambda, columns index mu, both in partitions_of(n) order."""
    parts = partitions_of(n)
    matrix = np.array(
        [[Fraction(l_coefficient(lam, mu)) for mu in parts] for lam in parts],
        dtype=object,
    ).reshape(len(parts), len(parts))
    logger.debug(f"L matrix filled for degree {n}")
    return matrix


# ---------------------------------------------------------------------------
# Characters of S_n (Murnaghan-Nakayama on beta-sets)
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def _mn_value(lam: Tuple[int, ...], mu: Tuple[int, ...]) -> int:
    if not mu:
        return 1 if not lam else 0
    r, rest = mu[0], mu[1:]
    length = len(lam)
    beta = [lam[i] + length - 1 - i for i in range(length)]
    present = set(beta)
    total = 0
    for b in beta:
        target = b - r
        if target < 0 or target in present:
            continue
        # rim hook of length r; its height is the number of beads jumped over
        height = sum(1 for c in beta if target < c < b)
        new_beta = sorted((c if c != b else target for c in beta), reverse=True)
        new_lam = tuple(
            part for part in (new_beta[i] - (length - 1 - i) for i in range(length)) if part > 0
        )
        total += (-1) ** height * _mn_value(new_lam, rest)
    return total


class CharacterTable:
    """chi^lambda(mu) for all lambda, mu |- n."""

    def __init__(self, n: int):
        if n < 1:
            raise PreconditionError(f"character table needs n >= 1, got {n}")
        self.n = n
        self.partitions = partitions_of(n)
        self.entries: Dict[Tuple[Partition, Partition], int] = {
            (lam, mu): _mn_value(tuple(lam), tuple(mu))
            for lam in self.partitions
            for mu in self.partitions
        }

    def value(self, lam: Iterable[int], mu: Iterable[int]) -> int:
        return self.entries[(Partition.from_parts(lam), Partition.from_parts(mu))]

    def as_matrix(self) -> np.ndarray:
        """Rows index lambda (irreducibles), columns index mu (classes)."""
        k = len(self.partitions)
        return np.array(
            [[Fraction(self.entries[(lam, mu)]) for mu in self.partitions] for lam in self.partitions],
            dtype=object,
        ).reshape(k, k)

    def column_orthogonality_holds(self) -> bool:
        for mu in self.partitions:
            for nu in self.partitions:
                total = sum(self.entries[(lam, mu)] * self.entries[(lam, nu)] for lam in self.partitions)
                if total != (z(mu) if mu == nu else 0):
                    logger.error(f"orthogonality fails at {list(mu)}, {list(nu)}: {total}")
                    return False
        return True


@lru_cache(maxsize=None)
def character_table(n: int) -> CharacterTable:
    table = CharacterTable(n)
    logger.debug(f"character table filled for degree {n}")
    return table


def hook_dimension(lam: Iterable[int]) -> int:
    """n! / product of hook lengths."""
    lam = Partition.from_parts(lam)
    hooks = 1
    for i, row in enumerate(lam):
        for j in range(row):
            below = sum(1 for other in lam[i + 1:] if other > j)
            hooks *= row - j + below
    return int(factorial(lam.weight, exact=True)) // hooks


# ---------------------------------------------------------------------------
# Exact linear algebra on object arrays of Fractions
# ---------------------------------------------------------------------------

def inverse_exact(matrix: np.ndarray) -> np.ndarray:
    """Gauss-Jordan inverse over the rationals."""
    n = matrix.shape[0]
    if matrix.shape != (n, n):
        raise PreconditionError(f"cannot invert a {matrix.shape} matrix")
    x = np.array([[Fraction(v) for v in row] for row in matrix], dtype=object).reshape(n, n)
    y = np.array([[Fraction(int(i == j)) for j in range(n)] for i in range(n)], dtype=object).reshape(n, n)

    for i in range(n):
        pivot = next((j for j in range(i, n) if x[j, i] != 0), None)
        if pivot is None:
            raise ConsistencyError("transition matrix is singular")
        if pivot != i:
            x[[i, pivot]] = x[[pivot, i]]
            y[[i, pivot]] = y[[pivot, i]]
        scale = x[i, i]
        x[i, :] = x[i, :] / scale
        y[i, :] = y[i, :] / scale
        for j in range(n):
            if j != i and x[j, i] != 0:
                factor = x[j, i]
                x[j, :] = x[j, :] - factor * x[i, :]
                y[j, :] = y[j, :] - factor * y[i, :]
    return y


# ---------------------------------------------------------------------------
# Transition matrices into P
# ---------------------------------------------------------------------------

def _p_expansion_of_h(k: int) -> Dict[Partition, Fraction]:
    return {lam: Fraction(1, z(lam)) for lam in partitions_of(k)}


def _p_expansion_of_e(k: int) -> Dict[Partition, Fraction]:
    return {lam: Fraction((-1) ** (k - lam.length), z(lam)) for lam in partitions_of(k)}


def _p_product(factors: Iterable[Mapping[Partition, Fraction]]) -> Dict[Partition, Fraction]:
    result: Dict[Partition, Fraction] = {Partition(): Fraction(1)}
    for factor in factors:
        step: Dict[Partition, Fraction] = {}
        for alpha, a in result.items():
            for beta, b in factor.items():
                key = alpha + beta
                step[key] = step.get(key, Fraction(0)) + a * b
        result = {k: v for k, v in step.items() if v != 0}
    return result


@lru_cache(maxsize=None)
def to_p_matrix(basis: Basis, n: int) -> np.ndarray:
    """Row lambda holds the p-coefficients of the basis element x_lambda."""
    basis = Basis.parse(basis)
    parts = partitions_of(n)
    index = {lam: i for i, lam in enumerate(parts)}
    k = len(parts)
    if basis == Basis.M:
        return inverse_exact(l_matrix(n))
    matrix = np.empty((k, k), dtype=object)
    matrix.fill(Fraction(0))
    for lam in parts:
        if basis == Basis.P:
            row = {lam: Fraction(1)}
        elif basis == Basis.H:
            row = _p_product(_p_expansion_of_h(part) for part in lam)
        elif basis == Basis.E:
            row = _p_product(_p_expansion_of_e(part) for part in lam)
        else:
            table = character_table(n)
            row = {mu: Fraction(table.value(lam, mu), z(mu)) for mu in parts}
        for mu, c in row.items():
            matrix[index[lam], index[mu]] = c
    logger.debug(f"{basis.value}->p matrix filled for degree {n}")
    return matrix


@lru_cache(maxsize=None)
def from_p_matrix(basis: Basis, n: int) -> np.ndarray:
    """Row mu holds the basis-coefficients of p_mu."""
    basis = Basis.parse(basis)
    if basis == Basis.M:
        return l_matrix(n)
    if basis == Basis.S:
        # p_mu = sum_lambda chi^lambda(mu) s_lambda
        return character_table(n).as_matrix().T
    return inverse_exact(to_p_matrix(basis, n))


def _apply(f: SymFunc, matrix: np.ndarray, target: Basis) -> SymFunc:
    parts = partitions_of(f.degree)
    vector = np.array([f.coefficient(lam) for lam in parts], dtype=object)
    image = vector.dot(matrix) if len(parts) else vector
    return SymFunc(target, {lam: image[i] for i, lam in enumerate(parts)}, f.degree)


def p_to_m(f: SymFunc) -> SymFunc:
    if f.basis != Basis.P:
        raise PreconditionError(f"p_to_m expects the p basis, got {f.basis.value}")
    parts = partitions_of(f.degree)
    index = {lam: i for i, lam in enumerate(parts)}
    matrix = l_matrix(f.degree)
    terms: Dict[Partition, Fraction] = {}
    for lam, c in f.items():
        for j, mu in enumerate(parts):
            count = matrix[index[lam], j]
            if count:
                terms[mu] = terms.get(mu, Fraction(0)) + c * count
    return SymFunc(Basis.M, terms, f.degree)


def convert(f: SymFunc, target: Union[str, Basis]) -> SymFunc:
    """Express f in the target basis, routing through P."""
    target = Basis.parse(target)
    if f.basis == target:
        return f
    if f.degree == 0:
        return SymFunc(target, f.terms, 0)
    in_p = f if f.basis == Basis.P else _apply(f, to_p_matrix(f.basis, f.degree), Basis.P)
    if target == Basis.P:
        return in_p
    if target == Basis.M:
        return p_to_m(in_p)
    return _apply(in_p, from_p_matrix(target, f.degree), target)


def multiply(f: SymFunc, g: SymFunc) -> SymFunc:
    """Product in the p basis."""
    fp, gp = convert(f, Basis.P), convert(g, Basis.P)
    terms = _p_product([fp.terms, gp.terms])
    return SymFunc(Basis.P, terms, f.degree + g.degree)


def inner_product(f: SymFunc, g: SymFunc) -> Fraction:
    """<p_lambda, p_mu> = z_lambda if lambda == mu else 0."""
    if f.degree != g.degree:
        raise PreconditionError(f"inner product of degrees {f.degree} and {g.degree}")
    fp, gp = convert(f, Basis.P), convert(g, Basis.P)
    return sum((c * gp.coefficient(lam) * z(lam) for lam, c in fp.items()), Fraction(0))


def is_nonnegative(f: SymFunc) -> bool:
    return all(c >= 0 for c in f.terms.values())
