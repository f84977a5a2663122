"""Closed-form values of the averaged two-row characters at short cycles.

All values refer to the group of permutations of N = n1 + n2 + n3 points, the
subgroup preserving the three consecutive blocks, the irreducible character of
two-row shape [N - k, k], and its average over one subgroup coset:

    Phi(g) = (1 / |H|) * sum over h in H of chi(g h).

The closed forms below evaluate Phi at the identity, at the embedded 2-cycles
joining two blocks, and at the embedded 3-cycle through all three.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .characters import m_range, multiplicity
from .core import BlockTriple

__all__ = [
    "SphericalQuery",
    "phi_identity",
    "phi_2cycle",
    "zeta",
    "xi",
    "g3_diagonal_coeff",
    "phi_3cycle",
    "phi_special",
    "phi_2cycle_two_factor",
    "phi_closed_form",
]


@dataclass(frozen=True)
class SphericalQuery:
    """One evaluation request: block sizes, shape parameter k, cycle support.

    The cycle is the set of blocks the embedded cycle runs through: one block
    means the identity, two a transposition, three the 3-cycle.
    """

    n: BlockTriple
    k: int
    cycle: tuple[int, ...]

    def __post_init__(self):
        if self.k < 0 or 2 * self.k > self.n.N:
            raise ValueError(f"need 0 <= 2k <= N, got k = {self.k}, N = {self.n.N}")
        blocks = tuple(sorted(set(self.cycle)))
        if blocks != self.cycle or not blocks:
            raise ValueError(f"cycle must be sorted distinct blocks, got {self.cycle}")
        if any(b not in (1, 2, 3) for b in blocks):
            raise ValueError(f"cycle blocks must be within {{1, 2, 3}}, got {self.cycle}")


def phi_identity(n: BlockTriple, k: int) -> Fraction:
    """Phi at the identity: the number of invariant vectors in the module."""
    return Fraction(multiplicity(n, k))


def _pair_parameters(n: BlockTriple, pair: tuple[int, int]) -> tuple[int, int, int]:
    a, b = sorted(pair)
    if (a, b) not in {(1, 2), (1, 3), (2, 3)}:
        raise ValueError(f"pair must be two distinct blocks, got {pair}")
    (c,) = {1, 2, 3} - {a, b}
    return n.size(a), n.size(b), n.size(c)


def phi_2cycle(n: BlockTriple, k: int, pair: tuple[int, int] = (1, 2)) -> Fraction:
    """Phi at the 2-cycle joining the first points of two blocks.

    Equals the sum over the multiplicity range of the transposition
    eigenvalues ((m - na)(m - nb) - m) / (na nb); the sum telescopes into the
    cubic-free polynomial below. Empty range gives 0.
    """
    if k < 0 or 2 * k > n.N:
        raise ValueError(f"need 0 <= 2k <= N, got k = {k}, N = {n.N}")
    na, nb, nc = _pair_parameters(n, pair)
    m_lower = max(0, k - nc)
    m_upper = min(na, nb, k, na + nb - k)
    if m_lower > m_upper:
        return Fraction(0)
    mu = m_upper - m_lower
    inner = (
        Fraction(m_lower * m_lower + na * nb)
        - (m_lower + Fraction(mu, 2)) * (na + nb)
        + (m_lower + Fraction(mu, 3)) * (mu - 1)
    )
    return Fraction(mu + 1, na * nb) * inner


def zeta(n: BlockTriple, k: int, m: int) -> int:
    """Numerator of the diagonal 3-cycle entry before boundary correction."""
    n1, n2, n3 = n.sizes
    return (
        m * m * (3 * k - 2 * m)
        + m * (n3 * n3 - k * k)
        - (n3 - k + m) * (m * (n1 + n2 + n3) - n1 * n2)
    )


def xi(n: BlockTriple, k: int, m: int) -> Fraction:
    """Off-diagonal correction term; 0 whenever one of its linear factors is.

    The generic formula divides by n1 + n2 - 2m, which vanishes only when
    m = n1 = n2; there the pole cancels against n1 n2 - m^2 and the reduced
    product applies. Any other zero denominator would mean a caller bug.
    """
    n1, n2, n3 = n.sizes
    head = (m + 1) * (n3 - k + m + 1) * (k - m)
    if head == 0:
        return Fraction(0)
    if n1 + n2 - 2 * m != 0:
        return Fraction(head * (n1 * n2 - m * m), n1 + n2 - 2 * m)
    if m == n1 == n2:
        return Fraction(head * m)
    raise ValueError(f"xi undefined at m = {m} for n = {n.sizes}, k = {k}")


def g3_diagonal_coeff(n: BlockTriple, k: int, m: int) -> Fraction:
    """Diagonal entry of the averaged 3-cycle action on the m-th basis vector."""
    n1, n2, n3 = n.sizes
    return Fraction(1, n1 * n2 * n3) * (
        zeta(n, k, m) - xi(n, k, m) + xi(n, k, m - 1)
    )


def _phi_3cycle_redundant(n: BlockTriple, k: int) -> Fraction:
    """Independent regrouping of the 3-cycle sum, kept as a cross-check."""
    n1, n2, n3 = n.sizes
    N = n.N
    m_lower, m_upper = m_range(n, k)
    nu = m_lower
    delta = k - m_upper
    mu = m_upper - m_lower
    s2 = n1 * n2 + n1 * n3 + n2 * n3
    bracket = (
        Fraction(N * mu * (mu - 1), 6)
        + Fraction(N * (mu * nu + mu * delta + 2 * nu * delta), 2)
        - Fraction((mu + 2 * nu) * s2, 2)
        + n1 * n2 * n3
        + Fraction(mu * nu * (nu - 1), 2)
        + (nu - delta) * (n1 * n2 + nu * delta)
        - Fraction(mu * delta * (delta - 1), 2)
        - xi(n, k, m_upper) / (mu + 1)
    )
    return Fraction(mu + 1, n1 * n2 * n3) * bracket


def phi_3cycle(n: BlockTriple, k: int) -> Fraction:
    """Phi at the 3-cycle through the first points of the three blocks.

    The sum of the diagonal entries telescopes: all xi terms cancel except at
    the top of the range. The result is checked on every call against a
    second, differently grouped expression of the same sum.
    """
    if k < 0 or 2 * k > n.N:
        raise ValueError(f"need 0 <= 2k <= N, got k = {k}, N = {n.N}")
    n1, n2, n3 = n.sizes
    m_lower, m_upper = m_range(n, k)
    if m_lower > m_upper:
        return Fraction(0)
    total = sum(zeta(n, k, m) for m in range(m_lower, m_upper + 1))
    value = Fraction(1, n1 * n2 * n3) * (total - xi(n, k, m_upper))
    redundant = _phi_3cycle_redundant(n, k)
    if value != redundant:
        raise AssertionError(
            f"3-cycle regroupings disagree for n = {n.sizes}, k = {k}: "
            f"{value} vs {redundant}"
        )
    return value


def phi_special(n: BlockTriple, k: int, cycle: tuple[int, ...] = (1, 2, 3)) -> Optional[Fraction]:
    """Boundary and symmetric shortcut values, or None when no shortcut applies.

    Covered: k equal to the sum of two block sizes, k = N/2, and all blocks
    equal (2-cycle shortcuts exist for the first two families only). These
    duplicate the general formulas and exist to cross-check them.

    The two-block-sum cases have multiplicity one automatically whenever the
    query is admissible; k = N/2 does not, so that display is only offered
    when its multiplicity-one hypothesis holds.
    """
    n1, n2, n3 = n.sizes
    N = n.N
    if k < 0 or 2 * k > N:
        raise ValueError(f"need 0 <= 2k <= N, got k = {k}, N = {N}")
    m_lower, m_upper = m_range(n, k)
    if cycle == (1, 2, 3):
        if k == n1 + n3:
            return Fraction(-1, n2)
        if k == n2 + n3:
            return Fraction(-1, n1)
        if k == n1 + n2:
            return Fraction(-1, n3)
        if 2 * k == N and m_lower == m_upper:
            half = N // 2
            prod = (half - n1) * (half - n2) * (half - n3)
            pairs = (
                (half - n1) * (half - n2)
                + (half - n1) * (half - n3)
                + (half - n2) * (half - n3)
            )
            return Fraction(-prod - pairs, n1 * n2 * n3)
        if n1 == n2 == n3:
            b = n1
            inner = b * b - Fraction(3 * b * k, 2) + Fraction(k * (k - 1), 2)
            if k <= b:
                return Fraction(k + 1, b * b) * inner
            return Fraction(3 * b - 2 * k + 1, b * b) * inner
        return None
    if cycle == (1, 2):
        if k == n1 + n3:
            return Fraction(-1, n2)
        if k == n2 + n3:
            return Fraction(-1, n1)
        if k == n1 + n2:
            return Fraction(1)
        if 2 * k == N and m_lower == m_upper:
            half = N // 2
            return Fraction((half - n1) * (half - n2) - half + n3, n1 * n2)
        return None
    return None


def phi_2cycle_two_factor(n1: int, n2: int, k: int) -> Fraction:
    """Two-block analogue: subgroup of two consecutive blocks, 2-cycle between.

    The invariant here is unique for 0 <= k <= min(n1, n2) and the value is a
    single quadratic. Kept separate from the three-block machinery; the core
    grids and operators stay three-block throughout.
    """
    if not 0 <= k <= min(n1, n2):
        raise ValueError(f"need 0 <= k <= min(n1, n2), got k = {k}, n = ({n1}, {n2})")
    return Fraction(n1 * n2 - (n1 + n2) * k + k * (k - 1), n1 * n2)


def phi_closed_form(query: SphericalQuery) -> Fraction:
    """Dispatch a query to the matching closed form."""
    if len(query.cycle) == 1:
        return phi_identity(query.n, query.k)
    if len(query.cycle) == 2:
        return phi_2cycle(query.n, query.k, query.cycle)
    return phi_3cycle(query.n, query.k)
