import networkx as nx
import pytest

from conftest import small_corpus
from dezagraphs import families
from dezagraphs.errors import Graph6Error
from dezagraphs.graph import Graph
from dezagraphs.graph6 import from_graph6, labels_from_json, labels_to_json, to_graph6


def named_graphs():
    out = dict(small_corpus())
    out.update({
        "shrikhande": families.shrikhande(),
        "schlafli": families.schlafli(),
        "chang2": families.chang(2),
        "L8": families.lattice(8),  # 64 vertices, long size field
        "empty": Graph(0, ()),
        "single": Graph(1, (0,)),
    })
    return out


@pytest.mark.parametrize("name", sorted(named_graphs()))
def test_round_trip(name):
    g = named_graphs()[name]
    assert from_graph6(to_graph6(g)) == g


@pytest.mark.parametrize("name", sorted(named_graphs()))
def test_matches_networkx(name):
    g = named_graphs()[name]
    ours = to_graph6(g)
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    theirs = nx.to_graph6_bytes(h, nodes=list(range(g.n)), header=False).decode().strip()
    assert ours == theirs
    back = nx.from_graph6_bytes(ours.encode())
    assert sorted(tuple(sorted(e)) for e in back.edges()) == sorted(g.edges())


def test_known_strings():
    assert to_graph6(families.triangular(5)) == "I~qkzXZLw"
    assert to_graph6(Graph.from_edges(2, [(0, 1)])) == "A_"


def test_header_and_newline_accepted():
    g = families.petersen()
    assert from_graph6(">>graph6<<" + to_graph6(g) + "\n") == g


@pytest.mark.parametrize(
    "text",
    ["", "I~qkz", "I~qkzXZLw?", "A\x10", "A`", "~?"],
)
def test_malformed(text):
    with pytest.raises(Graph6Error):
        from_graph6(text)


def test_labels_sidecar():
    g = families.lattice(3)
    text = labels_to_json(g)
    assert labels_from_json(text) == list(g.labels)
    assert labels_from_json("null") is None
    with pytest.raises(Graph6Error):
        labels_from_json("[1, 2]")
