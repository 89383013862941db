import numpy as np
import pytest

from conftest import complete, cycle, naive_automorphisms, small_corpus
from dezagraphs import families
from dezagraphs.automorphism import (
    automorphism_group,
    automorphisms,
    find_isomorphism,
    invert,
    is_isomorphic,
)
from dezagraphs.errors import SearchBoundExceeded
from dezagraphs.graph import Graph, complement


def test_small_groups():
    assert len(automorphisms(complete(4))) == 24
    assert len(automorphisms(cycle(5))) == 10
    assert automorphism_group(families.petersen()).order == 120


@pytest.mark.parametrize("name", ["petersen", "L3", "C6", "K3x2", "T(5)'", "L1(3)'"])
def test_matches_naive_filter(name):
    g = small_corpus()[name]
    assert set(automorphisms(g)) == naive_automorphisms(g)


@pytest.mark.parametrize(
    "g,order",
    [
        (families.lattice(4), 1152),
        (families.shrikhande(), 192),
        (families.folded_5cube(), 1920),
        (families.schlafli_complement(), 51840),
        (families.chang(1), 384),
        (families.chang(2), 360),
        (families.chang(3), 96),
        (families.triangular(8), 40320),
    ],
)
def test_group_orders(g, order):
    grp = automorphism_group(g)
    assert grp.order == order
    elems = grp.elements()
    assert len({tuple(r) for r in elems.tolist()}) == order
    # every element preserves adjacency
    a = g.matrix
    sample = elems[:: max(1, order // 500)].astype(np.int64)
    assert (a[sample[:, :, None], sample[:, None, :]] == a).all()


def test_bound():
    with pytest.raises(SearchBoundExceeded):
        automorphism_group(families.lattice(6))
    assert automorphism_group(families.lattice(6), max_vertices=36).order == 2 * 720 * 720


def test_isomorphism_witness():
    g = families.petersen()
    perm = np.array([3, 7, 1, 0, 9, 2, 5, 8, 6, 4])
    h = Graph.from_edges(g.n, [(int(perm[u]), int(perm[v])) for u, v in g.edges()])
    f = find_isomorphism(g, h)
    assert f is not None
    assert all(h.has_edge(f[u], f[v]) for u, v in g.edges())
    assert list(invert(perm)[perm]) == list(range(10))


def test_non_isomorphic():
    assert not is_isomorphic(families.shrikhande(), families.lattice(4))
    assert not is_isomorphic(families.petersen(), complement(families.petersen()))
    assert not is_isomorphic(cycle(6), Graph.from_edges(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]))
