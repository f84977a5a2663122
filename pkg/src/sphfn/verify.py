"""Exhaustive small-parameter sweeps comparing closed forms with the oracles.

Each suite enumerates every block triple up to a size cap, runs one exact
comparison per query, and reports the counterexamples verbatim. A sweep that
returns no failures is a machine-checked proof of the formulas on that range.
"""
from __future__ import annotations

import itertools
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterator, Optional

from .characters import m_range
from .closed_form import phi_2cycle, phi_3cycle
from .core import BlockTriple, embed_cycle
from .hahn import HahnContext, psi_table
from .invariant_calculus import (
    apply_rho_g2,
    check_difference_equation,
    g2_eigenvalue,
)
from .oracle import (
    DEFAULT_BOUND,
    coeff_table_from_invariant,
    invariants_in_Vk,
    phi_character_oracle,
)

__all__ = ["SweepReport", "SUITES", "run_suite", "run_suites"]

PAIRS = ((1, 2), (1, 3), (2, 3))


@dataclass
class SweepReport:
    suite: str
    comparisons: int = 0
    failures: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def summary(self) -> str:
        line = f"{self.suite}: {self.comparisons} comparisons, {len(self.failures)} failures"
        if self.failures:
            line += f"\n  first counterexample: {self.failures[0]}"
        return line


def block_triples(max_block: int) -> Iterator[BlockTriple]:
    for sizes in itertools.product(range(1, max_block + 1), repeat=3):
        yield BlockTriple(*sizes)


def _k_values(n: BlockTriple) -> range:
    return range(0, n.N // 2 + 1)


def _check_twocycle(args: tuple[BlockTriple, int, tuple[int, int], int]) -> Optional[str]:
    n, k, pair, bound = args
    closed = phi_2cycle(n, k, pair)
    oracle = phi_character_oracle(n, k, embed_cycle(pair, n), bound)
    if closed != oracle:
        return f"n={n.sizes} k={k} pair={pair}: closed {closed} != oracle {oracle}"
    return None


def _check_threecycle(args: tuple[BlockTriple, int, int]) -> Optional[str]:
    n, k, bound = args
    closed = phi_3cycle(n, k)
    oracle = phi_character_oracle(n, k, embed_cycle((1, 2, 3), n), bound)
    if closed != oracle:
        return f"n={n.sizes} k={k}: closed {closed} != oracle {oracle}"
    return None


def _check_eigen(args: tuple[BlockTriple, int, int]) -> Optional[str]:
    n, k, m = args
    table = psi_table(HahnContext(n, k, m))
    expected = table.scaled(g2_eigenvalue(m, n.n1, n.n2))
    if apply_rho_g2(table) != expected:
        return f"n={n.sizes} k={k} m={m}: averaged 2-cycle action is not scalar"
    return None


def _check_diffeq_psi(args: tuple[BlockTriple, int, int]) -> Optional[str]:
    n, k, m = args
    if not check_difference_equation(psi_table(HahnContext(n, k, m))):
        return f"n={n.sizes} k={k} m={m}: basis table fails the difference equation"
    return None


def _check_diffeq_module(args: tuple[BlockTriple, int, int]) -> Optional[str]:
    n, k, bound = args
    for i, vec in enumerate(invariants_in_Vk(n, k, bound)):
        if not check_difference_equation(coeff_table_from_invariant(vec, n)):
            return f"n={n.sizes} k={k} vector {i}: fails the difference equation"
    return None


def _map(check: Callable, queries: list, threads: Optional[int]) -> list[Optional[str]]:
    if threads is None:
        threads = os.cpu_count() or 1
    if threads <= 1 or len(queries) <= 1:
        return [check(q) for q in queries]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(check, queries))


def verify_twocycle(
    max_block: int = 3, bound: int = DEFAULT_BOUND, threads: Optional[int] = None
) -> SweepReport:
    queries = [
        (n, k, pair, bound)
        for n in block_triples(max_block)
        for k in _k_values(n)
        for pair in PAIRS
    ]
    results = _map(_check_twocycle, queries, threads)
    return SweepReport("twocycle", len(queries), [r for r in results if r])


def verify_threecycle(
    max_block: int = 3, bound: int = DEFAULT_BOUND, threads: Optional[int] = None
) -> SweepReport:
    queries = [(n, k, bound) for n in block_triples(max_block) for k in _k_values(n)]
    results = _map(_check_threecycle, queries, threads)
    return SweepReport("threecycle", len(queries), [r for r in results if r])


def verify_eigen(
    max_block: int = 3, bound: int = DEFAULT_BOUND, threads: Optional[int] = None
) -> SweepReport:
    queries = []
    for n in block_triples(max_block):
        for k in _k_values(n):
            m_lower, m_upper = m_range(n, k)
            queries.extend((n, k, m) for m in range(m_lower, m_upper + 1))
    results = _map(_check_eigen, queries, threads)
    return SweepReport("eigen", len(queries), [r for r in results if r])


def verify_diffeq(
    max_block: int = 3, bound: int = DEFAULT_BOUND, threads: Optional[int] = None
) -> SweepReport:
    psi_queries = []
    module_queries = []
    for n in block_triples(max_block):
        for k in _k_values(n):
            m_lower, m_upper = m_range(n, k)
            psi_queries.extend((n, k, m) for m in range(m_lower, m_upper + 1))
            module_queries.append((n, k, bound))
    results = _map(_check_diffeq_psi, psi_queries, threads)
    results += _map(_check_diffeq_module, module_queries, threads)
    total = len(psi_queries) + len(module_queries)
    return SweepReport("diffeq", total, [r for r in results if r])


SUITES: dict[str, Callable[..., SweepReport]] = {
    "twocycle": verify_twocycle,
    "threecycle": verify_threecycle,
    "eigen": verify_eigen,
    "diffeq": verify_diffeq,
}


def run_suite(
    name: str, max_block: int = 3, bound: int = DEFAULT_BOUND, threads: Optional[int] = None
) -> SweepReport:
    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r}; choose from {sorted(SUITES)}")
    return SUITES[name](max_block, bound, threads)


def run_suites(
    names: list[str],
    max_block: int = 3,
    bound: int = DEFAULT_BOUND,
    threads: Optional[int] = None,
) -> list[SweepReport]:
    return [run_suite(name, max_block, bound, threads) for name in names]
