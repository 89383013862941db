import pytest

from dezagraphs import families
from dezagraphs.automorphism import is_isomorphic
from dezagraphs.errors import InvalidArgument
from dezagraphs.graph import classify_srg, complement, regular_degree


class TestTriangular:
    def test_parameters(self):
        assert classify_srg(families.triangular(5)).as_tuple() == (10, 6, 3, 4)
        g = families.triangular(6)
        assert g.n == 15 and regular_degree(g) == 8

    def test_labels_and_adjacency(self):
        g = families.triangular(6)
        assert g.labels[:3] == ("{1,2}", "{1,3}", "{1,4}")
        assert g.has_edge(g.index("{1,2}"), g.index("{2,3}"))
        assert not g.has_edge(g.index("{1,2}"), g.index("{3,4}"))

    def test_too_small(self):
        with pytest.raises(InvalidArgument):
            families.triangular(4)


class TestLattice:
    def test_parameters(self):
        assert classify_srg(families.lattice(3)).as_tuple() == (9, 4, 1, 2)
        assert classify_srg(families.lattice(4)).as_tuple() == (16, 6, 2, 2)

    def test_row_major_adjacency(self):
        g = families.lattice(5)
        v = g.index("(1,1)")
        assert v == 0 and g.index("(2,1)") == 5
        assert g.has_edge(v, g.index("(1,5)")) and g.has_edge(v, g.index("(4,1)"))
        assert not g.has_edge(v, g.index("(2,2)"))

    def test_too_small(self):
        with pytest.raises(InvalidArgument):
            families.lattice(2)


class TestMultipartite:
    def test_square(self):
        g = families.complete_multipartite_nx2(2)
        assert g.n == 4 and regular_degree(g) == 2 and g.num_edges() == 4

    def test_mu_equals_k_is_rejected_by_srg_gate(self):
        assert classify_srg(families.complete_multipartite_nx2(3)) is None

    def test_complement_is_one_regular(self):
        assert regular_degree(complement(families.complete_multipartite_nx2(5))) == 1

    def test_too_small(self):
        with pytest.raises(InvalidArgument):
            families.complete_multipartite_nx2(1)


@pytest.mark.parametrize(
    "ctor,params",
    [
        (families.petersen, (10, 3, 0, 1)),
        (families.clebsch_seidel, (16, 10, 6, 6)),
        (families.folded_5cube, (16, 5, 0, 2)),
        (families.shrikhande, (16, 6, 2, 2)),
        (families.schlafli, (27, 16, 10, 8)),
        (families.schlafli_complement, (27, 10, 1, 5)),
    ],
)
def test_sporadic_parameters(ctor, params):
    assert classify_srg(ctor()).as_tuple() == params


def test_petersen_is_complement_of_t5():
    assert families.petersen() == complement(families.triangular(5))


def test_shrikhande_is_not_the_4x4_lattice():
    assert not is_isomorphic(families.shrikhande(), families.lattice(4))


def test_complements_of_named_seidel_graphs_have_r_one():
    for g in (families.petersen(), families.clebsch_seidel(), families.shrikhande(), families.schlafli(),
              families.chang(1), families.triangular(7), families.lattice(5)):
        assert classify_srg(complement(g)).spectrum.r == 1


class TestChang:
    @pytest.mark.parametrize("variant", [1, 2, 3])
    def test_parameters_and_not_triangular(self, variant):
        g = families.chang(variant)
        assert classify_srg(g).as_tuple() == (28, 12, 6, 4)
        assert not is_isomorphic(g, families.triangular(8))

    def test_pairwise_non_isomorphic(self):
        graphs = [families.chang(v) for v in (1, 2, 3)]
        for a in range(3):
            for b in range(a + 1, 3):
                assert not is_isomorphic(graphs[a], graphs[b])

    def test_bad_variant(self):
        with pytest.raises(InvalidArgument):
            families.chang(4)


class TestSeidelSwitching:
    def test_trivial_sets(self):
        g = families.triangular(6)
        assert families.seidel_switching(g, []) == g
        assert families.seidel_switching(g, range(g.n)) == g

    def test_involution(self):
        g = families.lattice(4)
        s = [0, 5, 6, 11]
        assert families.seidel_switching(families.seidel_switching(g, s), s) == g

    def test_matching_switch_of_t8(self):
        t8 = families.triangular(8)
        s = [t8.index(families.t_label(a, b)) for a, b in families.CHANG_SWITCHING_SETS[1]]
        assert classify_srg(families.seidel_switching(t8, s)).as_tuple() == (28, 12, 6, 4)

    def test_out_of_range(self):
        with pytest.raises(InvalidArgument):
            families.seidel_switching(families.petersen(), [10])


class TestRegistry:
    def test_lookup(self):
        assert families.by_name("triangular", 7).n == 21
        assert families.by_name("petersen") == families.petersen()

    def test_unknown(self):
        with pytest.raises(InvalidArgument):
            families.by_name("heawood")

    def test_missing_size(self):
        with pytest.raises(InvalidArgument):
            families.by_name("lattice")
