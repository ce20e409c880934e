"""Graph core: local complements, pivots, canonical keys, isomorphism."""

import json
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from helpers import random_connected_graph
from lcsplit.errors import InvalidVertexError, NotAnEdgeError
from lcsplit.graphs import (
    SimpleGraph,
    apply_sequence,
    canonical_key,
    degree,
    edge_count,
    edge_pivot,
    find_isomorphism,
    from_json_dict,
    induced_subgraph,
    is_connected,
    is_isomorphic,
    local_complement,
    max_degree,
    neighborhood,
    to_dot,
    to_json_dict,
)


@st.composite
def connected_graphs(draw, max_n=8):
    n = draw(st.integers(min_value=1, max_value=max_n))
    seed = draw(st.integers(min_value=0, max_value=2**32 - 1))
    p = draw(st.floats(min_value=0.1, max_value=0.9))
    return random_connected_graph(n, random.Random(seed), p)


class TestSimpleGraph:
    def test_basic_accessors(self):
        g = SimpleGraph(4, [(1, 2), (2, 3), (1, 3)])
        assert g.n == 4
        assert g.edges() == [(1, 2), (1, 3), (2, 3)]
        assert g.has_edge(3, 2) and not g.has_edge(1, 4)
        assert neighborhood(g, 2) == {1, 3}
        assert degree(g, 4) == 0
        assert edge_count(g) == 3 and max_degree(g) == 2

    def test_rejects_bad_edges(self):
        with pytest.raises(InvalidVertexError):
            SimpleGraph(3, [(1, 4)])
        with pytest.raises(InvalidVertexError):
            SimpleGraph(3, [(0, 1)])
        with pytest.raises(InvalidVertexError):
            SimpleGraph(3, [(2, 2)])

    def test_equality_and_hash(self):
        g = SimpleGraph(3, [(1, 2), (2, 3)])
        h = SimpleGraph(3, [(2, 3), (1, 2)])
        assert g == h and hash(g) == hash(h)
        assert g != SimpleGraph(3, [(1, 2)])

    def test_connectivity(self):
        assert is_connected(SimpleGraph(1))
        assert is_connected(SimpleGraph(3, [(1, 2), (2, 3)]))
        assert not is_connected(SimpleGraph(3, [(1, 2)]))

    def test_induced_subgraph_relabels(self):
        g = SimpleGraph(5, [(1, 3), (3, 5), (1, 5)])
        sub, mapping = induced_subgraph(g, {1, 3, 5})
        assert sub == SimpleGraph(3, [(1, 2), (1, 3), (2, 3)])
        assert mapping == {1: 1, 2: 3, 3: 5}


class TestLocalComplement:
    def test_triangle_toggle(self):
        path = SimpleGraph(3, [(1, 2), (2, 3)])
        assert local_complement(path, 2) == SimpleGraph(3, [(1, 2), (1, 3), (2, 3)])
        assert local_complement(path, 1) == path

    @settings(max_examples=200, deadline=None)
    @given(connected_graphs(), st.integers(min_value=0, max_value=63))
    def test_self_inverse(self, g, pick):
        v = pick % g.n + 1
        assert local_complement(local_complement(g, v), v) == g

    @settings(max_examples=200, deadline=None)
    @given(connected_graphs(), st.integers(min_value=0, max_value=63))
    def test_preserves_connectivity_and_neighborhood(self, g, pick):
        v = pick % g.n + 1
        h = local_complement(g, v)
        assert is_connected(h)
        assert neighborhood(h, v) == neighborhood(g, v)

    def test_sequence_inverse_is_reversal(self):
        rng = random.Random(11)
        for _ in range(50):
            g = random_connected_graph(rng.randint(2, 8), rng)
            seq = [rng.randint(1, g.n) for _ in range(rng.randint(0, 6))]
            h = apply_sequence(g, seq)
            assert apply_sequence(h, list(reversed(seq))) == g

    def test_vertex_bounds(self):
        with pytest.raises(InvalidVertexError):
            local_complement(SimpleGraph(3), 4)


class TestEdgePivot:
    def test_requires_edge(self):
        g = SimpleGraph(3, [(1, 2)])
        with pytest.raises(NotAnEdgeError):
            edge_pivot(g, 1, 3)
        with pytest.raises(NotAnEdgeError):
            edge_pivot(g, 2, 2)

    def test_matches_triple_composition(self):
        rng = random.Random(5)
        for _ in range(100):
            g = random_connected_graph(rng.randint(2, 8), rng)
            i, j = rng.choice(g.edges())
            assert edge_pivot(g, i, j) == apply_sequence(g, [i, j, i])

    def test_symmetric_in_endpoints(self):
        rng = random.Random(6)
        for _ in range(100):
            g = random_connected_graph(rng.randint(2, 8), rng)
            i, j = rng.choice(g.edges())
            assert edge_pivot(g, i, j) == edge_pivot(g, j, i)


class TestCanonicalKeyAndIsomorphism:
    @settings(max_examples=100, deadline=None)
    @given(connected_graphs())
    def test_key_round_trips(self, g):
        assert canonical_key(g) == canonical_key(SimpleGraph(g.n, g.edges()))

    def test_isomorphism_on_relabelings(self):
        rng = random.Random(7)
        for _ in range(100):
            g = random_connected_graph(rng.randint(2, 8), rng)
            perm = list(range(1, g.n + 1))
            rng.shuffle(perm)
            h = SimpleGraph(g.n, [(perm[a - 1], perm[b - 1]) for a, b in g.edges()])
            phi = find_isomorphism(g, h)
            assert phi is not None
            for a, b in g.edges():
                assert h.has_edge(phi[a], phi[b])

    def test_non_isomorphic(self):
        assert not is_isomorphic(
            SimpleGraph(4, [(1, 2), (2, 3), (3, 4)]),
            SimpleGraph(4, [(1, 2), (1, 3), (1, 4)]),
        )
        assert not is_isomorphic(SimpleGraph(3), SimpleGraph(4))


class TestSerialization:
    @settings(max_examples=100, deadline=None)
    @given(connected_graphs())
    def test_json_round_trip(self, g):
        assert from_json_dict(json.loads(json.dumps(to_json_dict(g)))) == g

    def test_dot_mentions_all_edges(self):
        g = SimpleGraph(3, [(1, 2), (2, 3)])
        dot = to_dot(g)
        assert "1 -- 2" in dot and "2 -- 3" in dot
