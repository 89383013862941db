"""Immutable simple graphs on dense vertex indices with exact combinatorial queries.

Adjacency is stored as one Python ``int`` bitset per vertex, so common-neighbour
counts are ``(row_x & row_y).bit_count()`` and everything stays in exact integer
arithmetic.  Vertices are ``0..n-1``; optional labels live in a parallel tuple.
"""

from __future__ import annotations

import math
from collections import Counter, deque
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Iterable, Iterator, Sequence

import numpy as np

from .errors import InfeasibleParameters, InvalidArgument

INFINITY = math.inf


def _bits(vertices: Iterable[int]) -> int:
    out = 0
    for v in vertices:
        out |= 1 << v
    return out


def _members(bits: int) -> list[int]:
    out = []
    while bits:
        low = bits & -bits
        out.append(low.bit_length() - 1)
        bits ^= low
    return out


@dataclass(frozen=True, eq=False)
class Graph:
    """Simple undirected graph with packed bit rows.

    Use :meth:`from_edges`, :meth:`from_rule` or :meth:`from_matrix` rather than
    building ``rows`` by hand.
    """

    n: int
    rows: tuple[int, ...]
    labels: tuple[str, ...] | None = field(default=None)

    def __post_init__(self) -> None:
        if len(self.rows) != self.n:
            raise InvalidArgument(f"expected {self.n} rows, got {len(self.rows)}")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.rows):
            if row >> v & 1:
                raise InvalidArgument(f"loop at vertex {v}")
            if row & ~full:
                raise InvalidArgument(f"row {v} refers to vertices outside 0..{self.n - 1}")
            for u in _members(row):
                if not self.rows[u] >> v & 1:
                    raise InvalidArgument(f"adjacency not symmetric at ({v}, {u})")
        if self.labels is not None:
            if len(self.labels) != self.n:
                raise InvalidArgument("label count differs from vertex count")
            if len(set(self.labels)) != self.n:
                raise InvalidArgument("labels are not distinct")

    # -- construction -------------------------------------------------------

    @classmethod
    def from_edges(
        cls, n: int, edges: Iterable[tuple[int, int]], labels: Sequence[str] | None = None
    ) -> Graph:
        rows = [0] * n
        for u, v in edges:
            if u == v:
                raise InvalidArgument(f"loop at vertex {u}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows), None if labels is None else tuple(labels))

    @classmethod
    def from_rule(cls, vertices: Sequence, adjacent, labels: Sequence[str] | None = None) -> Graph:
        """Build a graph on ``range(len(vertices))`` where ``i ~ j`` iff
        ``adjacent(vertices[i], vertices[j])``."""
        n = len(vertices)
        edges = [(i, j) for i, j in combinations(range(n), 2) if adjacent(vertices[i], vertices[j])]
        return cls.from_edges(n, edges, labels)

    @classmethod
    def from_matrix(cls, matrix, labels: Sequence[str] | None = None) -> Graph:
        a = np.asarray(matrix, dtype=bool)
        if a.ndim != 2 or a.shape[0] != a.shape[1]:
            raise InvalidArgument("adjacency matrix must be square")
        rows = tuple(_bits(np.flatnonzero(r).tolist()) for r in a)
        return cls(a.shape[0], rows, None if labels is None else tuple(labels))

    # -- basic queries ------------------------------------------------------

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.rows[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        return _members(self.rows[v])

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    def edges(self) -> Iterator[tuple[int, int]]:
        for u in range(self.n):
            for v in _members(self.rows[u] >> (u + 1) << (u + 1)):
                yield u, v

    def num_edges(self) -> int:
        return sum(r.bit_count() for r in self.rows) // 2

    def label(self, v: int) -> str:
        return self.labels[v] if self.labels is not None else str(v)

    def index(self, label: str) -> int:
        if self.labels is None:
            raise InvalidArgument("graph has no labels")
        try:
            return self._label_index[label]
        except KeyError:
            raise InvalidArgument(f"unknown vertex label {label!r}") from None

    @cached_property
    def _label_index(self) -> dict[str, int]:
        return {lab: i for i, lab in enumerate(self.labels or ())}

    @cached_property
    def matrix(self) -> np.ndarray:
        """Read-only boolean adjacency matrix."""
        a = np.zeros((self.n, self.n), dtype=bool)
        for u in range(self.n):
            a[u, _members(self.rows[u])] = True
        a.setflags(write=False)
        return a

    def relabel(self, labels: Sequence[str] | None) -> Graph:
        return Graph(self.n, self.rows, None if labels is None else tuple(labels))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.rows == other.rows

    def __hash__(self) -> int:
        return hash((self.n, self.rows))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.num_edges()})"


# -- parameter records ------------------------------------------------------


@dataclass(frozen=True)
class Spectrum:
    """The three distinct eigenvalues ``k > r > 0 > s`` of a strongly regular graph."""

    k: int
    r: int
    s: int


@dataclass(frozen=True)
class SrgParams:
    v: int
    k: int
    lambda_: int
    mu: int

    @property
    def feasible(self) -> bool:
        """``k(k - lambda - 1) == (v - k - 1) mu`` and nonnegativity."""
        if min(self.v, self.k, self.lambda_, self.mu) < 0:
            return False
        return self.k * (self.k - self.lambda_ - 1) == (self.v - self.k - 1) * self.mu

    def as_tuple(self) -> tuple[int, int, int, int]:
        return (self.v, self.k, self.lambda_, self.mu)

    @property
    def spectrum(self) -> Spectrum | None:
        return srg_spectrum(self)


@dataclass(frozen=True)
class DezaParams:
    v: int
    k: int
    b: int
    a: int
    strict: bool

    def as_tuple(self) -> tuple[int, int, int, int]:
        return (self.v, self.k, self.b, self.a)


def srg_spectrum(p: SrgParams) -> Spectrum | None:
    """Roots of ``x^2 + (mu - lambda) x + (mu - k) = 0`` as integers.

    Returns ``None`` when the roots are irrational (conference graphs such as
    the pentagon), since only integral spectra are represented.
    """
    if p.mu in (0, p.k):
        return None
    disc = (p.mu - p.lambda_) ** 2 - 4 * (p.mu - p.k)
    root = math.isqrt(disc)
    if root * root != disc or (root - (p.mu - p.lambda_)) % 2:
        return None
    r = (root - (p.mu - p.lambda_)) // 2
    s = (-root - (p.mu - p.lambda_)) // 2
    assert r * r + (p.mu - p.lambda_) * r + (p.mu - p.k) == 0
    assert s * s + (p.mu - p.lambda_) * s + (p.mu - p.k) == 0
    return Spectrum(p.k, r, s)


# -- graph operations -------------------------------------------------------


def complement(g: Graph) -> Graph:
    full = (1 << g.n) - 1
    rows = tuple(full & ~row & ~(1 << v) for v, row in enumerate(g.rows))
    return Graph(g.n, rows, g.labels)


def common_neighbors(g: Graph, x: int, y: int) -> int:
    if x == y:
        raise InvalidArgument("common_neighbors needs two distinct vertices")
    return (g.rows[x] & g.rows[y]).bit_count()


def regular_degree(g: Graph) -> int | None:
    """The common degree of a regular graph, ``None`` otherwise."""
    degrees = {r.bit_count() for r in g.rows}
    return degrees.pop() if len(degrees) == 1 else None


def _pair_counts(g: Graph) -> tuple[Counter, Counter]:
    """Common-neighbour count histograms over adjacent / non-adjacent pairs."""
    adjacent: Counter = Counter()
    nonadjacent: Counter = Counter()
    rows = g.rows
    for x in range(g.n):
        rx = rows[x]
        for y in range(x + 1, g.n):
            c = (rx & rows[y]).bit_count()
            if rx >> y & 1:
                adjacent[c] += 1
            else:
                nonadjacent[c] += 1
    return adjacent, nonadjacent


def bfs_distances(g: Graph, source: int, removed: int = 0) -> list[float]:
    """Distances from ``source``; vertices in the ``removed`` bitset are skipped."""
    dist: list[float] = [INFINITY] * g.n
    dist[source] = 0
    seen = (1 << source) | removed
    frontier = 1 << source
    d = 0
    while frontier:
        d += 1
        nxt = 0
        for v in _members(frontier):
            nxt |= g.rows[v]
        nxt &= ~seen
        seen |= nxt
        for v in _members(nxt):
            dist[v] = d
        frontier = nxt
    return dist


def is_connected(g: Graph) -> bool:
    return g.n <= 1 or all(d != INFINITY for d in bfs_distances(g, 0))


def diameter(g: Graph) -> float:
    """Largest BFS distance; ``INFINITY`` for a disconnected graph."""
    if g.n == 0:
        return 0
    best = 0
    for v in range(g.n):
        far = max(bfs_distances(g, v))
        if far == INFINITY:
            return INFINITY
        best = max(best, far)
    return best


def classify_srg(g: Graph) -> SrgParams | None:
    """SRG parameters of ``g``, or ``None`` if it is not strongly regular.

    Only connected graphs with ``0 < mu < k`` qualify, so complete graphs,
    disjoint unions of cliques and complete multipartite graphs return ``None``.
    """
    k = regular_degree(g)
    if k is None or not is_connected(g):
        return None
    adjacent, nonadjacent = _pair_counts(g)
    if len(adjacent) > 1 or len(nonadjacent) != 1:
        return None
    lam = next(iter(adjacent), 0)
    mu = next(iter(nonadjacent))
    if not 0 < mu < k:
        return None
    return SrgParams(g.n, k, lam, mu)


def complement_srg_params(p: SrgParams) -> SrgParams:
    if not p.feasible:
        raise InfeasibleParameters(f"{p.as_tuple()} is not a feasible SRG parameter tuple")
    out = SrgParams(p.v, p.v - p.k - 1, p.v - 2 * p.k + p.mu - 2, p.v - 2 * p.k + p.lambda_)
    if out.lambda_ < 0 or out.mu < 0:
        raise InfeasibleParameters(f"complement of {p.as_tuple()} has negative parameters")
    return out


def classify_deza(g: Graph) -> DezaParams | None:
    """Deza parameters ``(v, k, b, a)`` if every pair has ``a`` or ``b`` common neighbours."""
    k = regular_degree(g)
    if k is None:
        return None
    adjacent, nonadjacent = _pair_counts(g)
    values = set(adjacent) | set(nonadjacent)
    if len(values) > 2:
        return None
    if not values:
        b = a = 0
    else:
        b, a = max(values), min(values)
    # strictness excludes every graph with constant lambda and mu, including
    # the complete multipartite ones that classify_srg rejects
    raw_srg = len(adjacent) <= 1 and len(nonadjacent) <= 1
    strict = diameter(g) == 2 and not raw_srg
    return DezaParams(g.n, k, b, a, strict)


def is_edge_regular(g: Graph) -> bool:
    adjacent, _ = _pair_counts(g)
    return len(adjacent) <= 1


def is_co_edge_regular(g: Graph) -> bool:
    _, nonadjacent = _pair_counts(g)
    return len(nonadjacent) <= 1


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> Graph:
    """Subgraph on ``sorted(vertices)``; vertex ``i`` of the result is the ``i``-th smallest."""
    keep = sorted(set(vertices))
    pos = {v: i for i, v in enumerate(keep)}
    mask = _bits(keep)
    rows = tuple(_bits(pos[u] for u in _members(g.rows[v] & mask)) for v in keep)
    labels = None if g.labels is None else tuple(g.labels[v] for v in keep)
    return Graph(len(keep), rows, labels)


def connected_components(g: Graph) -> list[list[int]]:
    """Components as sorted vertex lists, ordered by smallest member."""
    left = (1 << g.n) - 1
    out = []
    while left:
        start = (left & -left).bit_length() - 1
        comp = frontier = 1 << start
        while frontier:
            nxt = 0
            for v in _members(frontier):
                nxt |= g.rows[v]
            frontier = nxt & ~comp
            comp |= frontier
        out.append(_members(comp))
        left &= ~comp
    return out


def second_neighborhood(g: Graph, x: int) -> set[int]:
    """Vertices at distance exactly 2 from ``x``."""
    return {v for v, d in enumerate(bfs_distances(g, x)) if d == 2}


def second_neighborhood_components(g: Graph, x: int) -> list[list[int]]:
    """Components of the subgraph induced on the second neighbourhood, in ``g``'s indices."""
    keep = sorted(second_neighborhood(g, x))
    sub = induced_subgraph(g, keep)
    return [[keep[i] for i in comp] for comp in connected_components(sub)]


def is_clique(g: Graph, vertices: Iterable[int]) -> bool:
    vs = list(vertices)
    return all(g.has_edge(u, v) for u, v in combinations(vs, 2))
