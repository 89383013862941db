"""Certified vertex connectivity via unit-capacity max-flow.

Each vertex ``v`` is split into ``v_in = 2v`` and ``v_out = 2v + 1`` joined by a
capacity-1 arc; graph edges become uncapacitated arcs ``u_out -> v_in`` in both
directions, so every minimum cut of the network consists of split arcs and reads
off directly as a vertex cut.  Flows are found with Dinic's level-graph blocking
flow.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import InvalidArgument, SearchBoundExceeded
from .graph import Graph, _bits, _members, bfs_distances, connected_components, INFINITY


@dataclass(frozen=True)
class PathSet:
    paths: list[tuple[int, ...]]

    def __len__(self) -> int:
        return len(self.paths)


@dataclass(frozen=True)
class ConnectivityCertificate:
    kappa: int
    cut: tuple[int, ...]
    separated_pair: tuple[int, int] | None
    paths: list[tuple[int, ...]] = field(default_factory=list)
    degenerate: bool = False

    def to_json(self) -> dict:
        return {
            "kappa": self.kappa,
            "cut": list(self.cut),
            "pair": list(self.separated_pair) if self.separated_pair else None,
            "paths": [list(p) for p in self.paths],
            "degenerate": self.degenerate,
        }


def path_problems(g: Graph, x: int, y: int, paths: Sequence[Sequence[int]]) -> list[str]:
    """Violations of the disjoint x-y path invariants; empty when all hold."""
    problems = []
    used: dict[int, int] = {}
    for k, p in enumerate(paths):
        if len(p) < 2 or p[0] != x or p[-1] != y:
            problems.append(f"path {k} does not run from {x} to {y}")
            continue
        if len(set(p)) != len(p):
            problems.append(f"path {k} repeats a vertex")
        for u, v in zip(p, p[1:]):
            if not g.has_edge(u, v):
                problems.append(f"path {k} uses non-edge ({u}, {v})")
        for v in p[1:-1]:
            if v in (x, y):
                problems.append(f"path {k} revisits an endpoint")
            elif v in used:
                problems.append(f"paths {used[v]} and {k} share vertex {v}")
            else:
                used[v] = k
    return problems


class FlowNetwork:
    """Vertex-split network of ``g``, reusable across source/sink pairs."""

    def __init__(self, g: Graph):
        self.g = g
        n = g.n
        big = n + 1
        head: list[int] = []
        cap0: list[int] = []
        adj: list[list[int]] = [[] for _ in range(2 * n)]

        def arc(u: int, v: int, c: int) -> None:
            adj[u].append(len(head))
            head.append(v)
            cap0.append(c)
            adj[v].append(len(head))
            head.append(u)
            cap0.append(0)

        for v in range(n):
            arc(2 * v, 2 * v + 1, 1)
        for u, v in g.edges():
            arc(2 * u + 1, 2 * v, big)
            arc(2 * v + 1, 2 * u, big)
        self.head = head
        self.cap0 = cap0
        self.adj = adj
        self.cap: list[int] = []
        self.source = self.sink = -1

    def _levels(self) -> list[int]:
        level = [-1] * len(self.adj)
        level[self.source] = 0
        queue = deque([self.source])
        head, cap, adj = self.head, self.cap, self.adj
        while queue:
            u = queue.popleft()
            for e in adj[u]:
                if cap[e] > 0 and level[head[e]] < 0:
                    level[head[e]] = level[u] + 1
                    queue.append(head[e])
        return level

    def _augment(self, level: list[int], it: list[int]) -> bool:
        """Push one unit along a shortest augmenting path; ``False`` when blocked."""
        head, cap, adj = self.head, self.cap, self.adj
        s, t = self.source, self.sink
        stack = [s]
        arcs: list[int] = []
        while stack:
            u = stack[-1]
            if u == t:
                for e in arcs:
                    cap[e] -= 1
                    cap[e ^ 1] += 1
                return True
            edges = adj[u]
            while it[u] < len(edges):
                e = edges[it[u]]
                v = head[e]
                if cap[e] > 0 and level[v] == level[u] + 1:
                    break
                it[u] += 1
            else:
                stack.pop()
                if arcs:
                    it[stack[-1]] += 1
                    arcs.pop()
                continue
            stack.append(v)
            arcs.append(e)
        return False

    def max_flow(self, x: int, y: int, cutoff: int | None = None) -> int:
        """Number of internally disjoint x-y paths, stopping early at ``cutoff``."""
        self.cap = list(self.cap0)
        self.cap[2 * x] = 0
        self.cap[2 * y] = 0
        self.source, self.sink = 2 * x + 1, 2 * y
        flow = 0
        limit = cutoff if cutoff is not None else self.g.n
        while flow < limit:
            level = self._levels()
            if level[self.sink] < 0:
                break
            it = [0] * len(self.adj)
            while flow < limit and self._augment(level, it):
                flow += 1
        return flow

    def paths(self) -> list[tuple[int, ...]]:
        """Decompose the current flow into vertex sequences."""
        head, cap, cap0, adj = self.head, self.cap, self.cap0, self.adj
        used = [cap0[e] - cap[e] if e % 2 == 0 else 0 for e in range(len(head))]
        out = []
        for e0 in adj[self.source]:
            if e0 % 2 or used[e0] <= 0:
                continue
            used[e0] -= 1
            path = [self.source // 2]
            node = head[e0]
            while node != self.sink:
                v = node // 2
                path.append(v)
                node = 2 * v + 1
                for e in adj[node]:
                    if e % 2 == 0 and used[e] > 0:
                        used[e] -= 1
                        node = head[e]
                        break
                else:
                    raise AssertionError("flow decomposition got stuck")
            path.append(self.sink // 2)
            out.append(tuple(path))
        return out

    def cut(self) -> tuple[int, ...]:
        """Vertices whose split arc leaves the residual source side."""
        head, cap, adj = self.head, self.cap, self.adj
        seen = [False] * len(adj)
        seen[self.source] = True
        queue = deque([self.source])
        while queue:
            u = queue.popleft()
            for e in adj[u]:
                if cap[e] > 0 and not seen[head[e]]:
                    seen[head[e]] = True
                    queue.append(head[e])
        return tuple(v for v in range(self.g.n) if seen[2 * v] and not seen[2 * v + 1])


def _check_pair(g: Graph, x: int, y: int) -> None:
    if x == y:
        raise InvalidArgument("x and y must differ")
    if g.has_edge(x, y):
        raise InvalidArgument(f"vertices {x} and {y} are adjacent")


def max_disjoint_paths(g: Graph, x: int, y: int) -> PathSet:
    _check_pair(g, x, y)
    net = FlowNetwork(g)
    net.max_flow(x, y)
    return PathSet(net.paths())


def min_vertex_cut(g: Graph, x: int, y: int) -> tuple[int, ...]:
    _check_pair(g, x, y)
    net = FlowNetwork(g)
    net.max_flow(x, y)
    return net.cut()


def verify_cut(g: Graph, cut: Iterable[int], x: int, y: int) -> bool:
    """True iff deleting ``cut`` leaves no x-y path."""
    removed = _bits(cut)
    if removed >> x & 1 or removed >> y & 1:
        raise InvalidArgument("x and y must not belong to the cut")
    return bfs_distances(g, x, removed)[y] == INFINITY


def candidate_pairs(g: Graph) -> list[tuple[int, int]]:
    """Pairs whose local connectivities have ``kappa(g)`` as their minimum.

    With ``v0`` of minimum degree and ``S`` a minimum cut: if ``v0`` is outside
    ``S`` it is separated from some non-neighbour; otherwise some neighbour
    ``u`` of ``v0`` is outside ``S`` (``|S| <= deg v0``) and is separated from
    a non-neighbour of its own.
    """
    v0 = min(range(g.n), key=lambda v: (g.degree(v), v))
    full = (1 << g.n) - 1
    pairs = set()
    for y in _members(full & ~g.rows[v0] & ~(1 << v0)):
        pairs.add((min(v0, y), max(v0, y)))
    for u in g.neighbors(v0):
        for w in _members(full & ~g.rows[u] & ~(1 << u)):
            pairs.add((min(u, w), max(u, w)))
    return sorted(pairs)


DEFAULT_MAX_VERTICES = 100


def vertex_connectivity(g: Graph, max_vertices: int = DEFAULT_MAX_VERTICES) -> ConnectivityCertificate:
    """kappa(g) with a minimum cut, the pair it separates and a matching path family.

    Among minimizing pairs the lexicographically smallest is reported.
    """
    n = g.n
    if n > max_vertices:
        raise SearchBoundExceeded(f"connectivity limited to {max_vertices} vertices, got {n}")
    if n <= 1:
        return ConnectivityCertificate(0, (), None, degenerate=True)
    comps = connected_components(g)
    if len(comps) > 1:
        return ConnectivityCertificate(0, (), (comps[0][0], comps[1][0]))
    if g.num_edges() == n * (n - 1) // 2:
        return ConnectivityCertificate(n - 1, tuple(range(n - 1)), None, degenerate=True)

    net = FlowNetwork(g)
    best, best_pair = n, None
    for x, y in candidate_pairs(g):
        value = net.max_flow(x, y, cutoff=best)
        if value < best:
            best, best_pair = value, (x, y)
    x, y = best_pair
    net.max_flow(x, y)
    return ConnectivityCertificate(best, net.cut(), (x, y), net.paths())


def lattice_disconnecting_set(n: int, i: int, j: int) -> tuple[int, ...]:
    """All lattice vertices outside rows ``2j-1`` and ``2j`` (``n^2 - 2n`` of them)."""
    if not 1 <= j <= i <= n // 2:
        raise InvalidArgument(f"need 1 <= j <= i <= {n // 2}, got i={i}, j={j}")
    keep = {2 * j - 1, 2 * j}
    return tuple(
        (a - 1) * n + (b - 1) for a in range(1, n + 1) if a not in keep for b in range(1, n + 1)
    )

