"""Delta-automorphisms of strongly regular graphs and the Deza graphs they induce.

A delta-automorphism is a non-identity involutive automorphism whose 2-cycles
join non-adjacent vertices.  Swapping the adjacency rows of every 2-cycle gives
a strictly Deza graph whenever the SRG has ``k != mu`` and ``lambda != mu``.
Two delta-automorphisms are equivalent when they are conjugate in the full
automorphism group.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Sequence

import numpy as np

from .automorphism import DEFAULT_MAX_VERTICES, automorphism_group, invert
from .errors import ConstructionError, InvalidArgument
from .families import lattice, t_label, triangular
from .graph import Graph, classify_srg, complement


@dataclass(frozen=True)
class Involution:
    perm: tuple[int, ...]

    def __post_init__(self) -> None:
        p = self.perm
        if sorted(p) != list(range(len(p))):
            raise InvalidArgument("not a permutation")
        if any(p[p[x]] != x for x in range(len(p))):
            raise InvalidArgument("permutation is not an involution")

    @classmethod
    def from_cycles(cls, n: int, cycles: Iterable[tuple[int, int]]) -> Involution:
        perm = list(range(n))
        for x, y in cycles:
            if perm[x] != x or perm[y] != y or x == y:
                raise InvalidArgument(f"overlapping or degenerate 2-cycle ({x}, {y})")
            perm[x], perm[y] = y, x
        return cls(tuple(perm))

    @property
    def moved(self) -> frozenset[int]:
        return frozenset(x for x, y in enumerate(self.perm) if x != y)

    @property
    def cycles(self) -> list[tuple[int, int]]:
        return [(x, y) for x, y in enumerate(self.perm) if x < y]

    def __call__(self, x: int) -> int:
        return self.perm[x]


def _as_perm(phi: Involution | Sequence[int]) -> tuple[int, ...]:
    return phi.perm if isinstance(phi, Involution) else tuple(phi)


def delta_violations(g: Graph, phi: Involution | Sequence[int]) -> list[str]:
    """Reasons ``phi`` fails to be a delta-automorphism of ``g``; empty when it is one."""
    p = _as_perm(phi)
    if sorted(p) != list(range(g.n)):
        return ["not a permutation of the vertex set"]
    problems = []
    if any(p[p[x]] != x for x in range(g.n)):
        problems.append("not an involution")
    if all(p[x] == x for x in range(g.n)):
        problems.append("identity moves no vertex")
    if any(not g.has_edge(p[u], p[v]) for u, v in g.edges()):
        problems.append("not an automorphism")
    swapped = [(x, p[x]) for x in range(g.n) if x < p[x] and g.has_edge(x, p[x])]
    if swapped:
        problems.append(f"swaps adjacent vertices {swapped[0]}")
    return problems


def is_delta_automorphism(g: Graph, phi: Involution | Sequence[int]) -> bool:
    return not delta_violations(g, phi)


def deza_from(g: Graph, phi: Involution | Sequence[int]) -> Graph:
    """The Deza graph whose adjacency matrix is ``P M``: row ``x`` becomes row ``phi(x)``.

    A vertex fixed by ``phi`` keeps its neighbourhood and a moved vertex takes
    over the neighbourhood of its image.
    """
    problems = delta_violations(g, phi)
    srg = classify_srg(g)
    if srg is None:
        problems.append("input graph is not strongly regular")
    else:
        if srg.k == srg.mu:
            problems.append("k == mu")
        if srg.lambda_ == srg.mu:
            problems.append("lambda == mu")
    if problems:
        raise ConstructionError("cannot build Deza graph: " + "; ".join(problems))
    p = _as_perm(phi)
    return Graph(g.n, tuple(g.rows[p[x]] for x in range(g.n)), g.labels)


@dataclass(frozen=True)
class DeltaAutoCensus:
    all: list[Involution]
    classes: list[list[Involution]]
    class_reps: list[Involution] = field(default_factory=list)
    group_order: int = 0

    @property
    def count(self) -> int:
        return len(self.classes)


def enumerate_delta_automorphisms(
    g: Graph, max_vertices: int = DEFAULT_MAX_VERTICES
) -> DeltaAutoCensus:
    """All delta-automorphisms of ``g``, grouped into conjugacy classes of ``Aut(g)``.

    The search filters the elements of the automorphism group, so it is exact
    and never touches the ``n!`` permutations of the vertex set.
    """
    group = automorphism_group(g, max_vertices)
    n = g.n
    ident = np.arange(n)
    a = g.matrix
    found: list[tuple[int, ...]] = []
    for chunk in group.iter_chunks():
        rows = np.arange(len(chunk))[:, None]
        invol = (chunk[rows, chunk] == ident).all(axis=1)
        nontrivial = (chunk != ident).any(axis=1)
        nonadjacent = ~a[ident[None, :], chunk].any(axis=1)
        keep = chunk[invol & nontrivial & nonadjacent]
        found.extend(tuple(int(x) for x in row) for row in keep)
    found.sort()

    index = {p: i for i, p in enumerate(found)}
    gens = [np.asarray(s) for s in group.generators]
    gens_inv = [invert(s) for s in gens]
    seen = [False] * len(found)
    classes = []
    for start in range(len(found)):
        if seen[start]:
            continue
        seen[start] = True
        members, queue = [start], [start]
        while queue:
            phi = np.asarray(found[queue.pop()])
            for s, si in zip(gens, gens_inv):
                key = tuple(int(x) for x in s[phi[si]])
                j = index[key]
                if not seen[j]:
                    seen[j] = True
                    members.append(j)
                    queue.append(j)
        classes.append([Involution(found[i]) for i in sorted(members)])
    return DeltaAutoCensus(
        all=[Involution(p) for p in found],
        classes=classes,
        class_reps=[c[0] for c in classes],
        group_order=group.order,
    )


def i_automorphism(n: int, i: int) -> Involution:
    """Swap rows ``2j-1`` and ``2j`` of the lattice vertex set for ``j = 1..i``.

    Vertex ``(a, b)`` has index ``(a-1) n + (b-1)``, matching :func:`families.lattice`.
    """
    if not 1 <= i <= n // 2:
        raise InvalidArgument(f"i must lie in 1..{n // 2}, got {i}")
    cycles = []
    for j in range(1, i + 1):
        for z in range(1, n + 1):
            cycles.append(((2 * j - 2) * n + z - 1, (2 * j - 1) * n + z - 1))
    return Involution.from_cycles(n * n, cycles)


def pair_automorphism_t(n: int) -> Involution:
    """Swap ``{1,z}`` with ``{2,z}`` for ``z = 3..n`` on the triangular vertex set."""
    if n < 5:
        raise InvalidArgument(f"n must be at least 5, got {n}")
    index = {t_label(a, b): k for k, (a, b) in enumerate(combinations(range(1, n + 1), 2))}
    return Involution.from_cycles(
        len(index), [(index[t_label(1, z)], index[t_label(2, z)]) for z in range(3, n + 1)]
    )


def lattice_index(n: int, a: int, b: int) -> int:
    return (a - 1) * n + (b - 1)


def describe(phi: Involution, g: Graph) -> list[list[str]]:
    """2-cycles of ``phi`` in terms of ``g``'s vertex labels."""
    return [[g.label(x), g.label(y)] for x, y in phi.cycles]



def deza_triangular(n: int) -> Graph:
    """The Deza graph of the complement of ``T(n)`` under the {1,2}-automorphism."""
    return deza_from(complement(triangular(n)), pair_automorphism_t(n))


def deza_lattice(n: int, i: int) -> Graph:
    """The Deza graph of the complement of ``L(n)`` under the i-automorphism."""
    return deza_from(complement(lattice(n)), i_automorphism(n, i))
