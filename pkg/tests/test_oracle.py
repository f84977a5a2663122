import itertools
from fractions import Fraction

import pytest

from sphfn import linalg
from sphfn.characters import mn_character, multiplicity, two_row
from sphfn.closed_form import phi_2cycle_two_factor, phi_closed_form, SphericalQuery
from sphfn.core import (
    BlockTriple,
    Permutation,
    binom,
    cycle_type,
    embed_cycle,
    young_subgroup_elements,
)
from sphfn.invariant_calculus import check_difference_equation
from sphfn.oracle import (
    OracleBoundExceeded,
    VkVector,
    build_Vk_basis,
    coeff_table_from_invariant,
    invariants_in_Vk,
    phi_character_oracle,
    phi_module_oracle,
    project_to_invariant,
    two_factor_character_oracle,
)

CYCLES = [(1,), (1, 2), (1, 3), (2, 3), (1, 2, 3)]


def small_triples(max_block):
    return [
        BlockTriple(*sizes)
        for sizes in itertools.product(range(1, max_block + 1), repeat=3)
    ]


def action_trace(basis, g):
    """Trace of the translation action of g in the given basis, by solving."""
    if not basis:
        return Fraction(0)
    N, k = basis[0].N, basis[0].k
    subsets = list(itertools.combinations(range(1, N + 1), k))
    matrix = [[vec.coord(subset) for vec in basis] for subset in subsets]
    trace = Fraction(0)
    for i, vec in enumerate(basis):
        rhs = [vec.apply(g).coord(subset) for subset in subsets]
        trace += linalg.solve(matrix, rhs)[i]
    return trace


class TestCharacterOracle:
    def test_smallest_case(self):
        n = BlockTriple(1, 1, 1)
        assert phi_character_oracle(n, 1, embed_cycle((1, 2, 3), n)) == -1
        assert phi_character_oracle(n, 1, embed_cycle((1, 2), n)) == 0
        assert phi_character_oracle(n, 1, embed_cycle((1,), n)) == 2

    def test_doubled_blocks(self):
        n = BlockTriple(2, 2, 2)
        assert phi_character_oracle(n, 1, embed_cycle((1, 2), n)) == 1
        assert phi_character_oracle(n, 1, embed_cycle((1, 2, 3), n)) == Fraction(1, 2)

    def test_matches_closed_forms(self):
        for n in small_triples(2):
            for k in range(n.N // 2 + 1):
                for cycle in CYCLES:
                    expected = phi_closed_form(SphericalQuery(n, k, cycle))
                    observed = phi_character_oracle(n, k, embed_cycle(cycle, n))
                    assert observed == expected, (n, k, cycle)

    def test_bound_refusal(self):
        n = BlockTriple(3, 2, 2)
        with pytest.raises(OracleBoundExceeded):
            phi_character_oracle(n, 1, embed_cycle((1, 2), n), bound=10)

    def test_rejects_mismatched_permutation(self):
        with pytest.raises(ValueError):
            phi_character_oracle(BlockTriple(1, 1, 1), 1, Permutation.identity(4))


class TestTwoFactorOracle:
    def test_example(self):
        assert two_factor_character_oracle(3, 2, 1) == Fraction(1, 6)

    def test_matches_closed_form(self):
        for n1 in range(1, 8):
            for n2 in range(1, 9 - n1):
                for k in range(min(n1, n2) + 1):
                    assert two_factor_character_oracle(n1, n2, k) == (
                        phi_2cycle_two_factor(n1, n2, k)
                    ), (n1, n2, k)

    def test_bound_refusal(self):
        with pytest.raises(OracleBoundExceeded):
            two_factor_character_oracle(4, 3, 2, bound=100)

    def test_rejects_bad_k(self):
        with pytest.raises(ValueError):
            two_factor_character_oracle(2, 2, 3)
        with pytest.raises(ValueError):
            two_factor_character_oracle(2, 2, -1)


class TestVkVector:
    def test_normalizes_and_drops_zeros(self):
        vec = VkVector(4, 2, {(3, 1): 1, (4, 1): -1, (3, 2): -1, (4, 2): 1, (1, 2): 0})
        assert vec.coord((1, 3)) == 1
        assert vec.coord((4, 2)) == 1
        assert vec.coord((1, 2)) == 0
        assert list(vec.items()) == [
            ((1, 3), Fraction(1)),
            ((1, 4), Fraction(-1)),
            ((2, 3), Fraction(-1)),
            ((2, 4), Fraction(1)),
        ]

    @pytest.mark.parametrize(
        "coords", [{(1,): 1, (2,): 1}, {(1, 2): 1}, {(0,): 1}, {(5,): 1}, {(1, 1): 1}]
    )
    def test_rejects_bad_coordinates(self, coords):
        with pytest.raises(ValueError):
            VkVector(4, 1, coords)

    def test_rejects_divergence_violation(self):
        with pytest.raises(ValueError):
            VkVector(3, 1, {(1,): 1})
        with pytest.raises(ValueError):
            VkVector(4, 2, {(1, 2): 1, (3, 4): -1})

    def test_apply_transposition(self):
        vec = VkVector(4, 1, {(1,): 1, (2,): -1})
        g = Permutation.from_cycle([1, 2], 4)
        assert vec.apply(g) == VkVector(4, 1, {(1,): -1, (2,): 1})

    def test_apply_rejects_wrong_size(self):
        vec = VkVector(4, 1, {(1,): 1, (2,): -1})
        with pytest.raises(ValueError):
            vec.apply(Permutation.identity(5))


class TestBasis:
    @pytest.mark.parametrize("N,k,dim", [(3, 1, 2), (4, 2, 2), (6, 2, 9), (5, 0, 1)])
    def test_dimensions(self, N, k, dim):
        assert len(build_Vk_basis(N, k)) == dim

    def test_dimension_formula(self):
        for N in range(1, 7):
            for k in range(N // 2 + 1):
                expected = binom(N, k) - binom(N, k - 1)
                assert len(build_Vk_basis(N, k)) == expected, (N, k)

    def test_degree_zero_vector(self):
        (vec,) = build_Vk_basis(5, 0)
        assert vec.coord(()) == 1

    def test_basis_is_independent(self):
        basis = build_Vk_basis(5, 2)
        subsets = list(itertools.combinations(range(1, 6), 2))
        matrix = [[vec.coord(subset) for vec in basis] for subset in subsets]
        assert linalg.rank(matrix) == len(basis)

    def test_bound_refusal(self):
        with pytest.raises(OracleBoundExceeded):
            build_Vk_basis(20, 10, bound=100)

    def test_rejects_bad_k(self):
        with pytest.raises(ValueError):
            build_Vk_basis(3, 2)

    @pytest.mark.parametrize("N", [4, 5])
    def test_action_trace_is_two_row_character(self, N):
        """The divergence-free span really carries the two-row module."""
        moves = [
            Permutation.identity(N),
            Permutation.from_cycle([1, 2], N),
            Permutation.from_cycle([1, 2, 3], N),
            Permutation.from_cycle(list(range(1, N + 1)), N),
        ]
        for k in range(N // 2 + 1):
            basis = build_Vk_basis(N, k)
            shape = two_row(N, k)
            for g in moves:
                expected = mn_character(shape, cycle_type(g))
                assert action_trace(basis, g) == expected, (N, k, g)


class TestInvariants:
    def test_count_equals_multiplicity(self):
        for n in small_triples(3):
            for k in range(n.N // 2 + 1):
                assert len(invariants_in_Vk(n, k)) == multiplicity(n, k), (n, k)

    def test_fixed_by_the_subgroup(self):
        for n in [BlockTriple(2, 1, 2), BlockTriple(1, 2, 2)]:
            for k in range(n.N // 2 + 1):
                for vec in invariants_in_Vk(n, k):
                    for h in young_subgroup_elements(n):
                        assert vec.apply(h) == vec, (n, k)

    def test_tables_satisfy_difference_equation(self):
        for n in small_triples(2):
            for k in range(n.N // 2 + 1):
                for vec in invariants_in_Vk(n, k):
                    table = coeff_table_from_invariant(vec, n)
                    assert check_difference_equation(table), (n, k)

    def test_table_rejects_non_constant_vector(self):
        n = BlockTriple(2, 2, 2)
        vec = VkVector(6, 1, {(1,): 1, (2,): -1})
        with pytest.raises(ValueError):
            coeff_table_from_invariant(vec, n)

    def test_projection_kills_mean_zero_orbits(self):
        n = BlockTriple(2, 2, 2)
        vec = VkVector(6, 1, {(1,): 1, (2,): -1})
        assert project_to_invariant(vec, n) == VkVector(6, 1, {})

    def test_projection_is_idempotent(self):
        n = BlockTriple(2, 2, 2)
        for vec in build_Vk_basis(6, 2):
            once = project_to_invariant(vec, n)
            assert project_to_invariant(once, n) == once

    def test_projection_fixes_invariants(self):
        n = BlockTriple(2, 1, 2)
        for k in range(n.N // 2 + 1):
            for vec in invariants_in_Vk(n, k):
                assert project_to_invariant(vec, n) == vec

    def test_projection_rejects_wrong_size(self):
        vec = VkVector(4, 1, {(1,): 1, (2,): -1})
        with pytest.raises(ValueError):
            project_to_invariant(vec, BlockTriple(1, 1, 1))

    def test_bound_refusal(self):
        with pytest.raises(OracleBoundExceeded):
            invariants_in_Vk(BlockTriple(7, 7, 6), 10, bound=1000)


class TestModuleOracle:
    def test_smallest_case(self):
        n = BlockTriple(1, 1, 1)
        assert phi_module_oracle(n, 1, embed_cycle((1, 2, 3), n)) == -1

    def test_zero_multiplicity(self):
        n = BlockTriple(1, 1, 4)
        assert phi_module_oracle(n, 3, embed_cycle((1, 2, 3), n)) == 0

    def test_matches_character_oracle(self):
        for n in small_triples(2):
            for k in range(n.N // 2 + 1):
                for cycle in CYCLES:
                    g = embed_cycle(cycle, n)
                    assert phi_module_oracle(n, k, g) == phi_character_oracle(n, k, g), (
                        n,
                        k,
                        cycle,
                    )

    def test_bound_refusal(self):
        n = BlockTriple(7, 7, 6)
        with pytest.raises(OracleBoundExceeded):
            phi_module_oracle(n, 10, embed_cycle((1, 2), n), bound=1000)

    def test_rejects_bad_input(self):
        n = BlockTriple(1, 1, 1)
        with pytest.raises(ValueError):
            phi_module_oracle(n, 2, Permutation.identity(3))
        with pytest.raises(ValueError):
            phi_module_oracle(n, 1, Permutation.identity(5))
