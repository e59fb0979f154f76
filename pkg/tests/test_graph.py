import pytest
from hypothesis import given, strategies as st

from stmgraph import (Graph, InputError, LinearOrder, bfs_sssp_oracle,
                      graphs_equal, symmetric_difference)


def path(n):
    return Graph(n, [(i, i + 1) for i in range(1, n)])


class TestGraph:
    def test_basic(self):
        g = path(3)
        assert g.n == 3 and g.m == 2
        assert g.neighbors(2) == (1, 3)
        assert g.has_edge(1, 2) and not g.has_edge(1, 3)
        assert list(g.edges()) == [(1, 2), (2, 3)]

    def test_rejects_bad_edges(self):
        with pytest.raises(InputError):
            Graph(3, [(1, 4)])
        with pytest.raises(InputError):
            Graph(3, [(2, 2)])

    def test_duplicate_edges_collapse(self):
        g = Graph(3, [(1, 2), (2, 1), (1, 2)])
        assert g.m == 1


class TestLinearOrder:
    def test_identity_roundtrip(self):
        o = LinearOrder.identity(4)
        assert all(o.pos(v) == v and o.at(v) == v for v in range(1, 5))

    def test_from_vertex_sequence(self):
        o = LinearOrder.from_vertex_sequence([2, 1, 3])
        assert o.pos(2) == 1 and o.at(1) == 2 and o.at(3) == 3

    def test_rejects_non_permutation(self):
        with pytest.raises(InputError):
            LinearOrder([1, 1, 3])


class TestBfsOracle:
    def test_path(self):
        assert bfs_sssp_oracle(path(3), 1) == [0, 1, 2]

    def test_edgeless(self):
        g = Graph(3)
        assert bfs_sssp_oracle(g, 2) == [3, 0, 3]

    def test_source_out_of_range(self):
        with pytest.raises(InputError):
            bfs_sssp_oracle(path(3), 4)

    @given(st.integers(2, 20), st.data())
    def test_triangle_property(self, n, data):
        edges = data.draw(st.sets(
            st.tuples(st.integers(1, n), st.integers(1, n)).filter(lambda e: e[0] < e[1]),
            max_size=3 * n))
        g = Graph(n, edges)
        dist = bfs_sssp_oracle(g, 1)
        for u, v in g.edges():
            if dist[u - 1] < n and dist[v - 1] < n:
                assert abs(dist[u - 1] - dist[v - 1]) <= 1


class TestSymmetricDifference:
    def test_twins(self):
        g = Graph(4, [(1, 3), (1, 4), (2, 3), (2, 4)])
        assert symmetric_difference(g, 1, 2) == 0

    def test_path_endpoints(self):
        assert symmetric_difference(path(3), 1, 3) == 0

    def test_path4_value(self):
        # N(1)\{2} = {} and N(2)\{1} = {3}, so the answer is 1
        assert symmetric_difference(path(4), 1, 2) == 1

    def test_symmetry(self):
        g = path(5)
        for u in range(1, 6):
            for v in range(u + 1, 6):
                assert symmetric_difference(g, u, v) == symmetric_difference(g, v, u)

    def test_equal_endpoints_rejected(self):
        with pytest.raises(InputError):
            symmetric_difference(path(3), 2, 2)


class TestGraphsEqual:
    def test_reflexive(self):
        g = path(3)
        assert graphs_equal(g, g)

    def test_differs(self):
        assert not graphs_equal(path(3), Graph(3, [(1, 2)]))
