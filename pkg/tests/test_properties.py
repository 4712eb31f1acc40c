"""Property tests for cross-module invariants."""

import random

from hypothesis import given, settings
from hypothesis import strategies as st

from edgesym.aut import (
    AutConstraint,
    automorphism_generators,
    edge_orbits,
    find_automorphism,
    vertex_orbits,
)
from edgesym.catalog import connected_regular_upto
from edgesym.distinguishing import (
    NOT_DISTINGUISHABLE,
    distinguishing_index,
    is_distinguishing,
    search_colouring,
)
from edgesym.graph import Graph, is_connected

from oracles import constraint_holds_naive


def _random_graph(data, max_n=8):
    n = data.draw(st.integers(min_value=1, max_value=max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = data.draw(st.sets(st.sampled_from(pairs))) if pairs else set()
    return Graph(n, chosen)


@settings(max_examples=60, deadline=None)
@given(st.data())
def test_orbits_partition_and_closure(data):
    g = _random_graph(data)
    gens = automorphism_generators(g)
    orbits = vertex_orbits(g, gens)
    seen = [v for o in orbits for v in o]
    assert sorted(seen) == list(range(g.n))  # disjoint cover
    for orbit in orbits:
        members = set(orbit)
        for p in gens:
            assert {p(v) for v in members} == members or {p(v) for v in members} <= set(
                seen
            )
            assert all(_orbit_of(v, orbits) == _orbit_of(p(v), orbits) for v in members)
    eorbs = edge_orbits(g, gens)
    eseen = [e for o in eorbs for e in o]
    assert sorted(eseen) == sorted(g.edges)
    for orbit in eorbs:
        members = set(orbit)
        for p in gens:
            assert {p.edge_image(e) for e in members} == members


def _orbit_of(v, orbits):
    for i, o in enumerate(orbits):
        if v in o:
            return i
    raise AssertionError


@settings(max_examples=40, deadline=None)
@given(st.data())
def test_witness_soundness(data):
    g = _random_graph(data, max_n=7)
    rng = random.Random(data.draw(st.integers(min_value=0, max_value=10**6)))
    from oracles import random_constraint

    c = random_constraint(g, rng)
    w = find_automorphism(g, c)
    if w is not None:
        assert constraint_holds_naive(g, c.normalised(), w.images)


@settings(max_examples=25, deadline=None)
@given(st.data())
def test_search_colouring_witness_always_verifies(data):
    g = _random_graph(data, max_n=7)
    if not is_connected(g) or g.n < 2:
        return
    k = data.draw(st.integers(min_value=1, max_value=3))
    c = search_colouring(g, k)
    if c is not None:
        assert is_distinguishing(g, c)
        assert len(c.colours_used()) <= k


def test_not_distinguishable_exactly_single_edge_over_corpus():
    for g in connected_regular_upto(8):
        value = distinguishing_index(g)
        assert (value is NOT_DISTINGUISHABLE) == (g.n == 2)
