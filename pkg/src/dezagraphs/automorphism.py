"""Automorphism groups and isomorphisms by individualization and refinement.

Colour refinement counts, for every vertex, its neighbours in each colour class
and splits classes whose vertices disagree.  Two graphs are refined in lockstep
with a shared colour naming so that their partitions stay comparable.  The
search individualizes one vertex of the first smallest non-singleton cell in the
source graph and tries every vertex of the matching cell in the target graph.

The automorphism group is described by a base ``b_0, b_1, ...`` and, for each
level ``j``, a transversal: one automorphism fixing ``b_0..b_{j-1}`` pointwise
for every image of ``b_j``.  Every group element is then uniquely
``t_0 o t_1 o ... o t_{m-1}``, which makes enumeration a sequence of numpy
gathers.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import prod
from typing import Iterator

import numpy as np

from .errors import SearchBoundExceeded
from .graph import Graph

DEFAULT_MAX_VERTICES = 32


def _refine(mats: list[np.ndarray], colors: list[np.ndarray]) -> list[np.ndarray] | None:
    """Equitable refinement of each ``colors[i]`` on ``mats[i]``; ``None`` if incompatible."""
    n = mats[0].shape[0]
    ncolors = int(colors[0].max()) + 1 if n else 0
    while True:
        sigs = []
        for a, c in zip(mats, colors):
            onehot = np.zeros((n, ncolors), dtype=np.int32)
            onehot[np.arange(n), c] = 1
            sigs.append(np.column_stack([c, a @ onehot]))
        uniq, inv = np.unique(np.vstack(sigs), axis=0, return_inverse=True)
        inv = inv.reshape(-1)
        new = [inv[i * n:(i + 1) * n] for i in range(len(mats))]
        first = np.bincount(new[0], minlength=len(uniq))
        if any((np.bincount(c, minlength=len(uniq)) != first).any() for c in new[1:]):
            return None
        if len(uniq) == ncolors:
            return new
        colors, ncolors = new, len(uniq)


def _individualize(c: np.ndarray, v: int) -> np.ndarray:
    out = c.copy()
    out[v] = c.max() + 1
    return out


def _target_cell(c: np.ndarray) -> int | None:
    """Colour of the first smallest non-singleton cell, or ``None`` if discrete."""
    counts = np.bincount(c)
    big = np.flatnonzero(counts > 1)
    if len(big) == 0:
        return None
    return int(big[np.argmin(counts[big])])


def _search(a: np.ndarray, b: np.ndarray, ca: np.ndarray, cb: np.ndarray) -> np.ndarray | None:
    refined = _refine([a, b], [ca, cb])
    if refined is None:
        return None
    ca, cb = refined
    cell = _target_cell(ca)
    if cell is None:
        f = np.empty(len(ca), dtype=np.int64)
        f[np.argsort(ca)] = np.argsort(cb)
        return f if np.array_equal(b[np.ix_(f, f)], a) else None
    v = int(np.flatnonzero(ca == cell)[0])
    ia = _individualize(ca, v)
    for w in np.flatnonzero(cb == cell):
        f = _search(a, b, ia, _individualize(cb, int(w)))
        if f is not None:
            return f
    return None


def find_isomorphism(g: Graph, h: Graph) -> tuple[int, ...] | None:
    """A bijection ``f`` with ``u ~ v`` in ``g`` iff ``f[u] ~ f[v]`` in ``h``."""
    if g.n != h.n or g.num_edges() != h.num_edges():
        return None
    a = g.matrix.astype(np.int32)
    b = h.matrix.astype(np.int32)
    zero = np.zeros(g.n, dtype=np.int64)
    f = _search(a, b, zero, zero)
    return None if f is None else tuple(int(x) for x in f)


def is_isomorphic(g: Graph, h: Graph) -> bool:
    return find_isomorphism(g, h) is not None


def compose(p: np.ndarray, q: np.ndarray) -> np.ndarray:
    """``p o q``: apply ``q`` first."""
    return p[q]


def invert(p: np.ndarray) -> np.ndarray:
    out = np.empty_like(p)
    out[p] = np.arange(len(p), dtype=p.dtype)
    return out


@dataclass(frozen=True)
class AutomorphismGroup:
    n: int
    base: tuple[int, ...]
    # transversals[j] maps each image c of base[j] to an automorphism fixing
    # base[:j] pointwise and sending base[j] to c
    transversals: tuple[dict[int, np.ndarray], ...]
    generators: tuple[np.ndarray, ...]

    @property
    def order(self) -> int:
        return prod(len(t) for t in self.transversals)

    def orbit_sizes(self) -> list[int]:
        return [len(t) for t in self.transversals]

    def _stabilizer_elements(self, level: int) -> np.ndarray:
        elems = np.arange(self.n, dtype=np.int16)[None, :]
        for t in reversed(self.transversals[level:]):
            reps = np.stack([t[c] for c in sorted(t)]).astype(np.int16)
            elems = reps[:, elems].reshape(-1, self.n)
        return elems

    def iter_chunks(self) -> Iterator[np.ndarray]:
        """All elements as ``(m, n)`` arrays, one chunk per top-level coset."""
        if not self.transversals:
            yield np.arange(self.n, dtype=np.int16)[None, :]
            return
        rest = self._stabilizer_elements(1)
        top = self.transversals[0]
        for c in sorted(top):
            yield top[c].astype(np.int16)[rest]

    def elements(self) -> np.ndarray:
        return np.concatenate(list(self.iter_chunks()))


def _orbit_transversal(point: int, gens: list[np.ndarray], n: int) -> dict[int, np.ndarray]:
    trans = {point: np.arange(n, dtype=np.int64)}
    queue = [point]
    while queue:
        p = queue.pop()
        for s in gens:
            q = int(s[p])
            if q not in trans:
                trans[q] = s[trans[p]]
                queue.append(q)
    return trans


def automorphism_group(g: Graph, max_vertices: int = DEFAULT_MAX_VERTICES) -> AutomorphismGroup:
    if g.n > max_vertices:
        raise SearchBoundExceeded(f"automorphism search limited to {max_vertices} vertices, got {g.n}")
    n = g.n
    a = g.matrix.astype(np.int32)
    colors = _refine([a], [np.zeros(n, dtype=np.int64)])[0] if n else np.zeros(0, dtype=np.int64)

    # Base along the leftmost branch of the search tree, with the partition at each level.
    base: list[int] = []
    levels: list[tuple[np.ndarray, list[int]]] = []
    while n and (cell := _target_cell(colors)) is not None:
        members = [int(v) for v in np.flatnonzero(colors == cell)]
        v = members[0]
        base.append(v)
        levels.append((colors, members))
        colors = _refine([a], [_individualize(colors, v)])[0]

    gens: list[np.ndarray] = []
    transversals: list[dict[int, np.ndarray]] = [{}] * len(base)
    for j in reversed(range(len(base))):
        colors_j, members = levels[j]
        b = base[j]
        trans = _orbit_transversal(b, gens, n)
        ib = _individualize(colors_j, b)
        for c in members:
            if c in trans:
                continue
            f = _search(a, a, ib, _individualize(colors_j, c))
            if f is not None:
                gens.append(f)
                trans = _orbit_transversal(b, gens, n)
        transversals[j] = trans
    return AutomorphismGroup(n, tuple(base), tuple(transversals), tuple(gens))


def automorphisms(g: Graph, max_vertices: int = DEFAULT_MAX_VERTICES) -> list[tuple[int, ...]]:
    """Every automorphism of ``g`` as a permutation tuple, sorted lexicographically."""
    elems = automorphism_group(g, max_vertices).elements()
    return sorted(tuple(int(x) for x in row) for row in elems)
