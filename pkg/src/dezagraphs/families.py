"""Constructors for the strongly regular graphs with smallest eigenvalue -2.

Vertex orders are fixed so graph6 output is reproducible:

* ``triangular(n)``: 2-subsets ``{a,b}`` of ``1..n`` (``a < b``) in lexicographic order.
* ``lattice(n)``: ordered pairs ``(a,b)`` in row-major order; row ``a`` is
  ``{(a, j)}`` and column ``b`` is ``{(j, b)}``.
* ``shrikhande()``: pairs ``(a,b)`` of ``Z4 x Z4`` in row-major order.
* ``folded_5cube()``: the integers ``0..15`` read as 4-bit vectors.
* ``schlafli_complement()``: ``a1..a6, b1..b6`` then ``c_ij`` in lexicographic order.

The Chang graphs are Seidel switchings of ``T(8)`` with respect to the vertex
sets of three edge sets of ``K8``:

* variant 1: the perfect matching ``12, 34, 56, 78``
* variant 2: the triangle ``123`` plus the pentagon ``45678``
* variant 3: the octagon ``12345678``
"""

from __future__ import annotations

from itertools import combinations, product
from typing import Iterable

from .errors import InvalidArgument
from .graph import Graph, complement

CHANG_SWITCHING_SETS: dict[int, tuple[tuple[int, int], ...]] = {
    1: ((1, 2), (3, 4), (5, 6), (7, 8)),
    2: ((1, 2), (2, 3), (1, 3), (4, 5), (5, 6), (6, 7), (7, 8), (4, 8)),
    3: ((1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (7, 8), (1, 8)),
}


def t_label(a: int, b: int) -> str:
    a, b = sorted((a, b))
    return f"{{{a},{b}}}"


def l_label(a: int, b: int) -> str:
    return f"({a},{b})"


def triangular(n: int) -> Graph:
    if n < 5:
        raise InvalidArgument(f"triangular graph needs n >= 5, got {n}")
    verts = list(combinations(range(1, n + 1), 2))
    return Graph.from_rule(
        verts,
        lambda u, v: len(set(u) & set(v)) == 1,
        [t_label(a, b) for a, b in verts],
    )


def lattice(n: int) -> Graph:
    if n < 3:
        raise InvalidArgument(f"lattice graph needs n >= 3, got {n}")
    verts = list(product(range(1, n + 1), repeat=2))
    return Graph.from_rule(
        verts,
        lambda u, v: (u[0] == v[0]) != (u[1] == v[1]),
        [l_label(a, b) for a, b in verts],
    )


def complete_multipartite_nx2(n: int) -> Graph:
    """``K_{n x 2}``: vertex ``v`` lies in part ``v // 2``."""
    if n < 2:
        raise InvalidArgument(f"K_(n x 2) needs n >= 2, got {n}")
    return Graph.from_rule(
        list(range(2 * n)),
        lambda u, v: u // 2 != v // 2,
        [f"{v // 2 + 1}.{v % 2 + 1}" for v in range(2 * n)],
    )


def petersen() -> Graph:
    return complement(triangular(5))


def folded_5cube() -> Graph:
    """SRG(16,5,0,2): 4-bit vectors adjacent at Hamming distance 1 or 4."""
    verts = list(range(16))
    return Graph.from_rule(
        verts,
        lambda u, v: (u ^ v).bit_count() in (1, 4),
        [format(v, "04b") for v in verts],
    )


def clebsch_seidel() -> Graph:
    """The Clebsch graph with smallest eigenvalue -2, SRG(16,10,6,6)."""
    return complement(folded_5cube())


def shrikhande() -> Graph:
    verts = list(product(range(4), repeat=2))
    diffs = {(1, 0), (3, 0), (0, 1), (0, 3), (1, 1), (3, 3)}
    return Graph.from_rule(
        verts,
        lambda u, v: ((u[0] - v[0]) % 4, (u[1] - v[1]) % 4) in diffs,
        [l_label(a, b) for a, b in verts],
    )


def schlafli_complement() -> Graph:
    """SRG(27,10,1,5): the 27 lines on a cubic surface, adjacent when they meet."""
    verts = [("a", i) for i in range(1, 7)] + [("b", i) for i in range(1, 7)]
    verts += [("c", ij) for ij in combinations(range(1, 7), 2)]

    def meet(u, v):
        (s, x), (t, y) = sorted((u, v))
        if s == "a" and t == "b":
            return x != y
        if s in "ab" and t == "c":
            return x in y
        if s == t == "c":
            return not set(x) & set(y)
        return False

    labels = [f"{s}{x}" if s != "c" else f"c{x[0]}{x[1]}" for s, x in verts]
    return Graph.from_rule(verts, meet, labels)


def schlafli() -> Graph:
    """The Schläfli graph SRG(27,16,10,8)."""
    return complement(schlafli_complement())


def seidel_switching(g: Graph, s: Iterable[int]) -> Graph:
    """Toggle every pair with exactly one end in ``s``."""
    mask = 0
    for v in s:
        if not 0 <= v < g.n:
            raise InvalidArgument(f"vertex {v} not in graph")
        mask |= 1 << v
    full = (1 << g.n) - 1
    rows = []
    for v, row in enumerate(g.rows):
        other = full & ~mask if mask >> v & 1 else mask
        rows.append(row ^ other)
    return Graph(g.n, tuple(rows), g.labels)


def chang(variant: int) -> Graph:
    if variant not in CHANG_SWITCHING_SETS:
        raise InvalidArgument(f"Chang variant must be 1, 2 or 3, got {variant}")
    t8 = triangular(8)
    s = [t8.index(t_label(a, b)) for a, b in CHANG_SWITCHING_SETS[variant]]
    return seidel_switching(t8, s)


FAMILIES = {
    "triangular": triangular,
    "lattice": lattice,
    "multipartite": complete_multipartite_nx2,
    "petersen": petersen,
    "clebsch": clebsch_seidel,
    "folded5cube": folded_5cube,
    "shrikhande": shrikhande,
    "schlafli": schlafli,
    "schlafli-complement": schlafli_complement,
    "chang": chang,
}
PARAMETRIZED = {"triangular", "lattice", "multipartite", "chang"}


def by_name(name: str, n: int | None = None) -> Graph:
    """Look up a family by name; ``n`` is the size parameter (the variant for ``chang``)."""
    try:
        ctor = FAMILIES[name]
    except KeyError:
        raise InvalidArgument(f"unknown family {name!r}; choose from {sorted(FAMILIES)}") from None
    if name in PARAMETRIZED:
        if n is None:
            raise InvalidArgument(f"family {name!r} needs a size parameter")
        return ctor(n)
    return ctor()
