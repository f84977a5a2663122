"""Brute-force cross-checks for every closed form in the package.

Two oracles, independent of each other and of the Hahn machinery:

* the character oracle averages Murnaghan-Nakayama values over an explicitly
  enumerated subgroup coset, straight from the definition;
* the module oracle realizes the irreducible module inside the space spanned
  by squarefree degree-k monomials, cut out by the vanishing of the divergence,
  and takes the trace of project-then-translate on its invariant vectors.

Both are exponential or worse in N and guarded accordingly; they exist to be
right, not fast.
"""
from __future__ import annotations

import functools
import itertools
import math
from collections import Counter
from fractions import Fraction
from typing import Iterable, Mapping

from . import linalg
from .characters import mn_character, two_row
from .core import (
    BlockTriple,
    Partition,
    Permutation,
    binom,
    compose,
    cycle_type,
    young_subgroup_elements,
)
from .hahn import CoeffTable, admissible_grid

__all__ = [
    "OracleBoundExceeded",
    "DEFAULT_BOUND",
    "phi_character_oracle",
    "two_factor_character_oracle",
    "VkVector",
    "build_Vk_basis",
    "invariants_in_Vk",
    "coeff_table_from_invariant",
    "project_to_invariant",
    "phi_module_oracle",
]

DEFAULT_BOUND = 10**6


class OracleBoundExceeded(Exception):
    """Raised when a brute-force enumeration would exceed the configured bound."""


@functools.lru_cache(maxsize=None)
def _coset_type_counts(
    sizes: tuple[int, int, int], g_images: tuple[int, ...]
) -> tuple[tuple[tuple[int, ...], int], ...]:
    """Cycle-type histogram of {g h : h in the block subgroup}, cached."""
    n = BlockTriple(*sizes)
    g = Permutation(g_images)
    counts: Counter = Counter()
    for h in young_subgroup_elements(n):
        counts[cycle_type(compose(g, h)).parts] += 1
    return tuple(sorted(counts.items()))


def phi_character_oracle(
    n: BlockTriple, k: int, g: Permutation, bound: int = DEFAULT_BOUND
) -> Fraction:
    """Average of the two-row character over the coset of g, by enumeration."""
    if g.N != n.N:
        raise ValueError(f"permutation acts on {g.N} points, blocks cover {n.N}")
    order = math.factorial(n.n1) * math.factorial(n.n2) * math.factorial(n.n3)
    if order > bound:
        raise OracleBoundExceeded(
            f"subgroup order {order} exceeds bound {bound} for n = {n.sizes}"
        )
    shape = two_row(n.N, k)
    total = 0
    for mu_parts, count in _coset_type_counts(n.sizes, g.images):
        total += count * mn_character(shape, Partition(mu_parts))
    return Fraction(total, order)


@functools.lru_cache(maxsize=None)
def _two_factor_type_counts(n1: int, n2: int) -> tuple[tuple[tuple[int, ...], int], ...]:
    N = n1 + n2
    g = Permutation.from_cycle([1, n1 + 1], N)
    blocks = [
        list(itertools.permutations(range(1, n1 + 1))),
        list(itertools.permutations(range(n1 + 1, N + 1))),
    ]
    counts: Counter = Counter()
    for part1, part2 in itertools.product(*blocks):
        h = Permutation(part1 + part2)
        counts[cycle_type(compose(g, h)).parts] += 1
    return tuple(sorted(counts.items()))


def two_factor_character_oracle(
    n1: int, n2: int, k: int, bound: int = DEFAULT_BOUND
) -> Fraction:
    """Same average for two blocks only, at the 2-cycle joining them.

    Enumerated directly here; the rest of the package stays three-block.
    """
    N = n1 + n2
    if k < 0 or 2 * k > N:
        raise ValueError(f"need 0 <= 2k <= N, got k = {k}, N = {N}")
    order = math.factorial(n1) * math.factorial(n2)
    if order > bound:
        raise OracleBoundExceeded(
            f"subgroup order {order} exceeds bound {bound} for n = ({n1}, {n2})"
        )
    shape = two_row(N, k)
    total = 0
    for mu_parts, count in _two_factor_type_counts(n1, n2):
        total += count * mn_character(shape, Partition(mu_parts))
    return Fraction(total, order)


class VkVector:
    """A divergence-free vector in the span of squarefree degree-k monomials.

    Coordinates are indexed by sorted k-tuples; absent subsets read as zero.
    The defining condition, that dropping one point from each subset sums to
    zero over every (k-1)-subset, is enforced at construction.
    """

    __slots__ = ("_N", "_k", "_coords")

    def __init__(self, N: int, k: int, coords: Mapping[tuple[int, ...], object]):
        self._N = N
        self._k = k
        cleaned: dict[tuple[int, ...], Fraction] = {}
        for subset, value in coords.items():
            key = tuple(sorted(subset))
            if len(key) != k or len(set(key)) != k or not all(1 <= i <= N for i in key):
                raise ValueError(f"not a k-subset of [1, {N}]: {subset}")
            value = Fraction(value)
            if value != 0:
                cleaned[key] = value
        self._coords = cleaned
        if not self._divergence_free():
            raise ValueError("coordinates violate the divergence condition")

    def _divergence_free(self) -> bool:
        sums: dict[tuple[int, ...], Fraction] = {}
        for subset, value in self._coords.items():
            for i in subset:
                smaller = tuple(j for j in subset if j != i)
                sums[smaller] = sums.get(smaller, Fraction(0)) + value
        return all(total == 0 for total in sums.values())

    @property
    def N(self) -> int:
        return self._N

    @property
    def k(self) -> int:
        return self._k

    def coord(self, subset: Iterable[int]) -> Fraction:
        return self._coords.get(tuple(sorted(subset)), Fraction(0))

    def items(self):
        return iter(sorted(self._coords.items()))

    def apply(self, g: Permutation) -> "VkVector":
        """Translate: the coordinate at E moves to g(E)."""
        if g.N != self._N:
            raise ValueError(f"permutation acts on {g.N} points, vector lives on {self._N}")
        return VkVector(
            self._N,
            self._k,
            {tuple(g(i) for i in subset): x for subset, x in self._coords.items()},
        )

    def __eq__(self, other) -> bool:
        if not isinstance(other, VkVector):
            return NotImplemented
        return (
            self._N == other._N
            and self._k == other._k
            and self._coords == other._coords
        )

    def __repr__(self) -> str:
        return f"VkVector(N={self._N}, k={self._k}, {len(self._coords)} nonzero)"


def _subsets(N: int, k: int) -> list[tuple[int, ...]]:
    return list(itertools.combinations(range(1, N + 1), k))


def _check_space_bound(N: int, k: int, bound: int) -> None:
    size = binom(N, k)
    if size > bound:
        raise OracleBoundExceeded(
            f"monomial space size C({N},{k}) = {size} exceeds bound {bound}"
        )


def build_Vk_basis(N: int, k: int, bound: int = DEFAULT_BOUND) -> list[VkVector]:
    """Basis of the divergence-free subspace, from the raw linear system.

    One equation per (k-1)-subset; the kernel has dimension
    C(N, k) - C(N, k-1). Small N only.
    """
    if k < 0 or 2 * k > N:
        raise ValueError(f"need 0 <= 2k <= N, got k = {k}, N = {N}")
    _check_space_bound(N, k, bound)
    if k == 0:
        return [VkVector(N, 0, {(): Fraction(1)})]
    columns = _subsets(N, k)
    column_index = {subset: j for j, subset in enumerate(columns)}
    rows = []
    for smaller in _subsets(N, k - 1):
        row = [Fraction(0)] * len(columns)
        for j in range(1, N + 1):
            if j not in smaller:
                row[column_index[tuple(sorted(smaller + (j,)))]] = Fraction(1)
        rows.append(row)
    kernel = linalg.nullspace(rows, ncols=len(columns))
    return [
        VkVector(N, k, {subset: value for subset, value in zip(columns, vec)})
        for vec in kernel
    ]


def _orbit_label(subset: tuple[int, ...], n: BlockTriple) -> tuple[int, int]:
    u = sum(1 for i in subset if i <= n.n1)
    v = sum(1 for i in subset if n.n1 < i <= n.n1 + n.n2)
    return u, v


def _invariant_tables(n: BlockTriple, k: int) -> list[CoeffTable]:
    """Orbit-constant solutions of the raw divergence system.

    Invariance under the block subgroup forces one unknown per orbit label;
    every (k-1)-subset then contributes one equation on those unknowns. All
    equations are imposed verbatim, without collapsing them into the label
    recurrence, so this stays independent of the difference-equation code.
    """
    if k == 0:
        return [CoeffTable(n, 0, {(0, 0): Fraction(1)})]
    labels = admissible_grid(n, k)
    label_index = {uv: j for j, uv in enumerate(labels)}
    seen: set[tuple[Fraction, ...]] = set()
    rows = []
    for smaller in _subsets(n.N, k - 1):
        row = [Fraction(0)] * len(labels)
        for j in range(1, n.N + 1):
            if j not in smaller:
                uv = _orbit_label(tuple(sorted(smaller + (j,))), n)
                row[label_index[uv]] += 1
        key = tuple(row)
        if key not in seen:  # repeated subsets give literally equal equations
            seen.add(key)
            rows.append(row)
    kernel = linalg.nullspace(rows, ncols=len(labels))
    return [
        CoeffTable(n, k, {uv: value for uv, value in zip(labels, vec)})
        for vec in kernel
    ]


def _table_to_vector(table: CoeffTable) -> VkVector:
    n, k = table.n, table.k
    return VkVector(
        n.N, k, {subset: table.get(*_orbit_label(subset, n)) for subset in _subsets(n.N, k)}
    )


def invariants_in_Vk(n: BlockTriple, k: int, bound: int = DEFAULT_BOUND) -> list[VkVector]:
    """Basis of the subgroup-invariant divergence-free vectors.

    The count equals the multiplicity of the two-row shape; each vector is
    constant on subset orbits and so corresponds to one coefficient table.
    """
    if k < 0 or 2 * k > n.N:
        raise ValueError(f"need 0 <= 2k <= N, got k = {k}, N = {n.N}")
    _check_space_bound(n.N, k, bound)
    return [_table_to_vector(table) for table in _invariant_tables(n, k)]


def coeff_table_from_invariant(vec: VkVector, n: BlockTriple) -> CoeffTable:
    """Read the orbit constants off an invariant vector; reject non-constant ones."""
    entries: dict[tuple[int, int], Fraction] = {}
    for subset in _subsets(n.N, vec.k):
        uv = _orbit_label(subset, n)
        value = vec.coord(subset)
        if uv in entries and entries[uv] != value:
            raise ValueError(f"vector is not constant on the orbit {uv}")
        entries[uv] = value
    return CoeffTable(n, vec.k, entries)


def project_to_invariant(vec: VkVector, n: BlockTriple) -> VkVector:
    """Average the vector over each subset orbit of the block subgroup."""
    if vec.N != n.N:
        raise ValueError(f"vector lives on {vec.N} points, blocks cover {n.N}")
    sums: dict[tuple[int, int], Fraction] = {}
    sizes: dict[tuple[int, int], int] = {}
    subsets = _subsets(n.N, vec.k)
    for subset in subsets:
        uv = _orbit_label(subset, n)
        sums[uv] = sums.get(uv, Fraction(0)) + vec.coord(subset)
        sizes[uv] = sizes.get(uv, 0) + 1
    means = {uv: sums[uv] / sizes[uv] for uv in sums}
    return VkVector(
        vec.N, vec.k, {subset: means[_orbit_label(subset, n)] for subset in subsets}
    )


def phi_module_oracle(
    n: BlockTriple, k: int, g: Permutation, bound: int = DEFAULT_BOUND
) -> Fraction:
    """Trace of translate-then-project on the invariant divergence-free vectors.

    Equals the coset character average because projecting onto subgroup
    invariants and averaging the character are the same operator trace.
    """
    if g.N != n.N:
        raise ValueError(f"permutation acts on {g.N} points, blocks cover {n.N}")
    if k < 0 or 2 * k > n.N:
        raise ValueError(f"need 0 <= 2k <= N, got k = {k}, N = {n.N}")
    _check_space_bound(n.N, k, bound)
    basis_tables = _invariant_tables(n, k)
    if not basis_tables:
        return Fraction(0)
    labels = admissible_grid(n, k)
    matrix = [[table.get(u, v) for table in basis_tables] for u, v in labels]
    trace = Fraction(0)
    for i, table in enumerate(basis_tables):
        moved = _table_to_vector(table).apply(g)
        projected = coeff_table_from_invariant(project_to_invariant(moved, n), n)
        rhs = [projected.get(u, v) for u, v in labels]
        coords = linalg.solve(matrix, rhs)
        trace += coords[i]
    return trace
