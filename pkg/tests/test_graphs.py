"""Graph kernel: parsing, neighborhoods, complement, components, triangles."""

import itertools
from random import Random

import pytest
from hypothesis import given

from domkit.graphs import (
    Graph,
    GraphParseError,
    VertexSet,
    closed_neighborhood,
    complement,
    connected_components,
    enumerate_triangles,
    induced_subgraph,
    induces_c6_complement,
    is_complete,
    is_edgeless,
    isolated_vertices,
    neighborhood_of_set,
    open_neighborhood,
    parse_graph,
    write_graph,
)
from domkit.families import complete_graph, cycle_graph, edgeless_graph, random_graph

from conftest import graph_with_subset, graphs


P5_DOC = "5 4\n0 1\n1 2\n2 3\n3 4\n"


class TestVertexSet:
    def test_ascending_iteration(self):
        s = VertexSet(6, [4, 1, 3])
        assert list(s) == [1, 3, 4]
        assert s.members == (1, 3, 4)
        assert len(s) == 3
        assert 3 in s and 0 not in s and 9 not in s

    def test_out_of_universe_rejected(self):
        with pytest.raises(ValueError):
            VertexSet(3, [3])
        with pytest.raises(ValueError):
            VertexSet.from_mask(3, 1 << 5)

    def test_immutable(self):
        s = VertexSet(3, [0])
        with pytest.raises(AttributeError):
            s.mask = 7

    def test_set_algebra(self):
        a = VertexSet(5, [0, 1, 3])
        b = VertexSet(5, [1, 2])
        assert a.union(b).members == (0, 1, 2, 3)
        assert a.intersection(b).members == (1,)
        assert a.difference(b).members == (0, 3)
        assert VertexSet(5, [1]).issubset(a)


class TestParse:
    def test_p5(self):
        g = parse_graph(P5_DOC)
        assert g.n == 5
        assert g.edges == ((0, 1), (1, 2), (2, 3), (3, 4))

    def test_single_vertex(self):
        g = parse_graph("1 0\n")
        assert g.n == 1 and g.edges == ()

    def test_k3(self):
        g = parse_graph("3 3\n0 1\n1 2\n0 2\n")
        assert is_complete(g)

    def test_comments_and_blank_lines(self):
        g = parse_graph("# a path\n\n5 4\n0 1\n# middle\n1 2\n2 3\n\n3 4\n")
        assert g == parse_graph(P5_DOC)

    def test_zero_vertex_graph_accepted(self):
        assert parse_graph("0 0\n").n == 0

    @pytest.mark.parametrize(
        "doc,line_no",
        [
            ("5 4\n0 1\n1 2\n2 x\n3 4\n", 4),          # malformed token
            ("3 1\n0 7\n", 2),                          # index out of range
            ("3 1\n1 1\n", 2),                          # self-loop
            ("3 2\n0 1\n1 0\n", 3),                     # duplicate edge
            ("2 1\n0 1\n0 1\n", 3),                     # trailing content
            ("4 2\n0 1 2\n0 1\n", 2),                   # wrong arity
        ],
    )
    def test_errors_carry_line_numbers(self, doc, line_no):
        with pytest.raises(GraphParseError) as err:
            parse_graph(doc)
        assert err.value.line_no == line_no

    def test_missing_edges_rejected(self):
        with pytest.raises(GraphParseError, match="expected 4 edges"):
            parse_graph("5 4\n0 1\n")

    def test_missing_header_rejected(self):
        with pytest.raises(GraphParseError, match="header"):
            parse_graph("# nothing else\n")

    @given(graphs(max_n=8))
    def test_write_parse_round_trip(self, g):
        assert parse_graph(write_graph(g)) == g

    def test_writer_deterministic_and_sorted(self):
        g = Graph(4, [(2, 3), (0, 3), (0, 1)])
        assert write_graph(g) == "4 3\n0 1\n0 3\n2 3\n"
        assert write_graph(g, comments=["hello"]).startswith("# hello\n4 3\n")


class TestNeighborhoods:
    def test_path_examples(self, p5):
        assert closed_neighborhood(p5, 1).members == (0, 1, 2)
        assert open_neighborhood(p5, 0).members == (1,)

    def test_isolated_vertex(self):
        g = Graph(3, [(0, 1)])
        assert open_neighborhood(g, 2).members == ()
        assert closed_neighborhood(g, 2).members == (2,)

    def test_out_of_range(self, p5):
        with pytest.raises(ValueError):
            closed_neighborhood(p5, 5)

    def test_set_neighborhoods(self, p5, k3):
        assert neighborhood_of_set(p5, VertexSet(5, [1, 3])).members == (0, 1, 2, 3, 4)
        assert neighborhood_of_set(p5, VertexSet(5, [])).members == ()
        # an open set neighborhood need not contain the set itself
        assert neighborhood_of_set(k3, VertexSet(3, [0]), closed=False).members == (1, 2)

    def test_universe_mismatch(self, p5):
        with pytest.raises(ValueError):
            neighborhood_of_set(p5, VertexSet(4, [1]))

    @given(graph_with_subset(max_n=8))
    def test_closed_is_set_union_open(self, gs):
        g, s = gs
        closed = neighborhood_of_set(g, s, closed=True)
        opened = neighborhood_of_set(g, s, closed=False)
        assert closed.mask == s.mask | opened.mask

    @given(graphs(max_n=8))
    def test_vertex_neighborhood_invariants(self, g):
        for v in range(g.n):
            assert len(closed_neighborhood(g, v)) == len(open_neighborhood(g, v)) + 1
            assert v in closed_neighborhood(g, v)
            assert v not in open_neighborhood(g, v)


class TestComplement:
    def test_c6_complement_is_prism(self):
        got = complement(cycle_graph(6))
        want = Graph(
            6,
            [(0, 2), (0, 3), (0, 4), (1, 3), (1, 4), (1, 5), (2, 4), (2, 5), (3, 5)],
        )
        assert got == want
        assert [t.members for t in enumerate_triangles(got)] == [(0, 2, 4), (1, 3, 5)]

    def test_complete_to_edgeless(self):
        assert is_edgeless(complement(complete_graph(5)))

    @given(graphs(max_n=8))
    def test_involution_and_edge_counts(self, g):
        co = complement(g)
        assert complement(co) == g
        assert len(g.edges) + len(co.edges) == g.n * (g.n - 1) // 2


class TestComponents:
    def test_path(self, p5):
        assert len(connected_components(p5)) == 1
        assert isolated_vertices(p5).members == ()
        assert not is_complete(p5)

    def test_complete(self):
        assert is_complete(complete_graph(4))

    def test_two_isolated_vertices(self):
        g = edgeless_graph(2)
        comps = connected_components(g)
        assert [c.members for c in comps] == [(0,), (1,)]
        assert isolated_vertices(g).members == (0, 1)
        assert is_edgeless(g)

    def test_component_order_by_minimum(self):
        g = Graph(5, [(1, 3), (0, 4)])
        assert [c.members for c in connected_components(g)] == [(0, 4), (1, 3), (2,)]

    def test_induced_subgraph(self, p5):
        sub, verts = induced_subgraph(p5, VertexSet(5, [1, 2, 4]))
        assert verts == (1, 2, 4)
        assert sub == Graph(3, [(0, 1)])


class TestTriangles:
    def test_c4_triangle_free(self, c4):
        assert enumerate_triangles(c4) == []

    def test_k4_has_four(self):
        assert len(enumerate_triangles(complete_graph(4))) == 4

    def test_prism_exhaustive(self, prism):
        got = {t.members for t in enumerate_triangles(prism)}
        want = {
            trip
            for trip in itertools.combinations(range(6), 3)
            if all(prism.adjacent(a, b) for a, b in itertools.combinations(trip, 2))
        }
        assert got == want == {(0, 2, 4), (1, 3, 5)}


def _induces_prism_oracle(graph, t, t2):
    """Generic induced-subgraph isomorphism against the 6-vertex prism."""
    prism = complement(cycle_graph(6))
    verts = sorted(t.members + t2.members)
    for perm in itertools.permutations(range(6)):
        if all(
            graph.adjacent(verts[perm[i]], verts[perm[j]]) == prism.adjacent(i, j)
            for i in range(6)
            for j in range(i + 1, 6)
        ):
            return True
    return False


class TestC6Complement:
    def test_prism_pair(self, prism):
        assert induces_c6_complement(prism, VertexSet(6, [0, 2, 4]), VertexSet(6, [1, 3, 5]))

    def test_k6_is_not(self):
        g = complete_graph(6)
        assert not induces_c6_complement(g, VertexSet(6, [0, 1, 2]), VertexSet(6, [3, 4, 5]))

    def test_c6_is_not(self):
        g = cycle_graph(6)
        assert not induces_c6_complement(g, VertexSet(6, [0, 2, 4]), VertexSet(6, [1, 3, 5]))

    def test_size_and_overlap_rejected(self, prism):
        with pytest.raises(ValueError):
            induces_c6_complement(prism, VertexSet(6, [0, 2]), VertexSet(6, [1, 3, 5]))
        with pytest.raises(ValueError):
            induces_c6_complement(prism, VertexSet(6, [0, 2, 4]), VertexSet(6, [0, 3, 5]))

    def test_matches_generic_isomorphism_on_random_instances(self):
        rng = Random(0)
        checked = 0
        while checked < 500:
            n = rng.randint(6, 9)
            g = random_graph(n, rng)
            verts = rng.sample(range(n), 6)
            t = VertexSet(n, verts[:3])
            t2 = VertexSet(n, verts[3:])
            assert induces_c6_complement(g, t, t2) == _induces_prism_oracle(g, t, t2)
            checked += 1
