"""Shared corpus and independent brute-force oracles."""

from __future__ import annotations

import sys
from itertools import combinations, permutations

import numpy as np
import pytest
from hypothesis import settings

from dezagraphs import families
from dezagraphs.deza import deza_from, i_automorphism, pair_automorphism_t
from dezagraphs.graph import Graph, complement

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


def cycle(n: int) -> Graph:
    return Graph.from_edges(n, [(v, (v + 1) % n) for v in range(n)])


def complete(n: int) -> Graph:
    return Graph.from_edges(n, combinations(range(n), 2))


def star(leaves: int) -> Graph:
    return Graph.from_edges(leaves + 1, [(0, v) for v in range(1, leaves + 1)])


def small_corpus() -> dict[str, Graph]:
    """Named graphs with at most 12 vertices."""
    return {
        "C5": cycle(5),
        "C6": cycle(6),
        "K4": complete(4),
        "star3": star(3),
        "petersen": families.petersen(),
        "T5": families.triangular(5),
        "L3": families.lattice(3),
        "coL3": complement(families.lattice(3)),
        "K3x2": families.complete_multipartite_nx2(3),
        "K4x2": families.complete_multipartite_nx2(4),
        "K5x2": families.complete_multipartite_nx2(5),
        "K6x2": families.complete_multipartite_nx2(6),
        "L1(3)'": deza_from(complement(families.lattice(3)), i_automorphism(3, 1)),
        "T(5)'": deza_from(complement(families.triangular(5)), pair_automorphism_t(5)),
    }


def _connected_without(g: Graph, removed: int) -> bool:
    alive = ((1 << g.n) - 1) & ~removed
    if alive == 0:
        return True
    start = alive & -alive
    seen, frontier = start, start
    while frontier:
        nxt = 0
        while frontier:
            low = frontier & -frontier
            nxt |= g.rows[low.bit_length() - 1]
            frontier ^= low
        frontier = nxt & alive & ~seen
        seen |= frontier
    return seen == alive


def brute_force_kappa(g: Graph) -> int:
    """Smallest vertex set whose removal disconnects ``g``; ``n - 1`` for complete graphs."""
    n = g.n
    if n <= 1:
        return 0
    for size in range(n - 1):
        for cut in combinations(range(n), size):
            removed = sum(1 << v for v in cut)
            if not _connected_without(g, removed):
                return size
    return n - 1


def naive_automorphisms(g: Graph) -> set[tuple[int, ...]]:
    """Filter all ``n!`` permutations; numpy-vectorized, feasible up to ``n = 10``."""
    n = g.n
    a = g.matrix
    out = set()
    if n <= 2:
        if n == 0:
            return {()}
        chunks = [np.array(list(permutations(range(n))), dtype=np.int64)]
    else:
        tail = np.array(list(permutations(range(n - 2))), dtype=np.int64)
        chunks = []
        for x, y in permutations(range(n), 2):
            rest = np.array([v for v in range(n) if v not in (x, y)])
            chunk = np.empty((len(tail), n), dtype=np.int64)
            chunk[:, 0], chunk[:, 1] = x, y
            chunk[:, 2:] = rest[tail]
            chunks.append(chunk)
    for chunk in chunks:
        ok = (a[chunk[:, :, None], chunk[:, None, :]] == a).all(axis=(1, 2))
        out.update(tuple(int(v) for v in row) for row in chunk[ok])
    return out


@pytest.fixture(scope="session")
def corpus() -> dict[str, Graph]:
    return small_corpus()


def pytest_terminal_summary(terminalreporter):
    module = sys.modules.get("test_acceptance")
    if module is None or not module.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in module.RESULTS:
        terminalreporter.write_line(line)
