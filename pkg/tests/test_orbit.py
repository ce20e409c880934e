"""Brute-force orbit oracle: enumeration, equivalence, representatives."""

import random

import pytest

from helpers import random_connected_graph
from lcsplit.errors import BudgetExceededError, NotEquivalentError
from lcsplit.families import complete_bipartite_graph, complete_graph, star_graph
from lcsplit.graphs import (
    SimpleGraph,
    apply_sequence,
    canonical_key,
    edge_count,
    is_isomorphic,
    local_complement,
    max_degree,
)
from lcsplit.orbit import (
    are_lc_equivalent,
    enumerate_orbit,
    min_edge_member,
    min_max_degree_member,
    orbit_iso_classes,
    transformation_between,
)


class TestEnumeration:
    def test_singleton_orbits(self):
        assert len(enumerate_orbit(SimpleGraph(1))) == 1
        # K2's only LCs are identities.
        assert len(enumerate_orbit(complete_graph(2))) == 1

    def test_complete_graph_orbits(self):
        # K_n moves to n star relabelings plus itself.
        for n in range(3, 9):
            assert len(enumerate_orbit(complete_graph(n))) == n + 1

    def test_orbit_is_closed(self):
        o = enumerate_orbit(complete_bipartite_graph(2, 2))
        for g in o.sorted_members():
            for v in range(1, g.n + 1):
                assert local_complement(g, v) in o

    def test_base_membership_and_determinism(self):
        g = complete_bipartite_graph(2, 3)
        o1, o2 = enumerate_orbit(g), enumerate_orbit(g)
        assert g in o1
        assert list(o1.members) == list(o2.members)

    def test_budget(self):
        with pytest.raises(BudgetExceededError) as info:
            enumerate_orbit(complete_bipartite_graph(3, 3), limit=5)
        assert info.value.partial_count >= 5
        assert info.value.limit == 5


class TestEquivalence:
    def test_star_and_complete_are_equivalent(self):
        assert are_lc_equivalent(star_graph(3), complete_graph(4))

    def test_different_sizes_are_not(self):
        assert not are_lc_equivalent(complete_graph(3), complete_graph(4))

    def test_transformation_is_replayable(self):
        rng = random.Random(3)
        for _ in range(30):
            g = random_connected_graph(rng.randint(2, 6), rng)
            h = apply_sequence(g, [rng.randint(1, g.n) for _ in range(4)])
            seq = transformation_between(g, h)
            assert apply_sequence(g, seq) == h

    def test_transformation_rejects_non_equivalent(self):
        with pytest.raises(NotEquivalentError):
            transformation_between(
                complete_graph(5), SimpleGraph(5, [(1, 2), (2, 3), (3, 4), (4, 5)])
            )


class TestRepresentatives:
    def test_iso_classes_partition_orbit(self):
        o = enumerate_orbit(complete_bipartite_graph(2, 2))
        classes = orbit_iso_classes(o)
        assert sum(mult for _, mult in classes) == len(o)
        reps = [rep for rep, _ in classes]
        for a in range(len(reps)):
            for b in range(a + 1, len(reps)):
                assert not is_isomorphic(reps[a], reps[b])

    def test_minima_are_attained(self):
        o = enumerate_orbit(complete_bipartite_graph(2, 3))
        best_e, edges = min_edge_member(o)
        assert edges == min(edge_count(g) for g in o.sorted_members())
        assert edge_count(best_e) == edges
        best_d, delta = min_max_degree_member(o)
        assert delta == min(max_degree(g) for g in o.sorted_members())
        assert max_degree(best_d) == delta

    def test_tie_break_is_canonical(self):
        o = enumerate_orbit(complete_bipartite_graph(2, 2))
        best, edges = min_edge_member(o)
        candidates = [g for g in o.sorted_members() if edge_count(g) == edges]
        assert canonical_key(best) == min(canonical_key(g) for g in candidates)
