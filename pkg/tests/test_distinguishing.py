import itertools

import pytest

from edgesym.colouring import BLUE, GREEN, RED, EdgeColouring
from edgesym.distinguishing import (
    NOT_DISTINGUISHABLE,
    BudgetExceededError,
    ChordlessPathError,
    MaxColoursExceededError,
    cycle_colouring,
    distinguishing_index,
    distinguishing_index_with_witness,
    hamiltonian_colouring,
    hamiltonian_path,
    is_distinguishing,
    scan_conjecture,
    search_colouring,
)
from edgesym.graph import (
    complete,
    complete_bipartite,
    cycle,
    edge,
    petersen,
    random_regular,
    spider,
)

from oracles import (
    automorphisms_by_backtracking,
    distinguishing_index_brute,
    exists_distinguishing_colouring_brute,
)


def _mono(g, colour=RED):
    return EdgeColouring({e: colour for e in g.edges})


def test_is_distinguishing_asymmetric_tree():
    g = spider([1, 2, 3])
    assert is_distinguishing(g, _mono(g))


def test_is_distinguishing_k2_false_for_every_colouring():
    g = complete(2)
    for col in (RED, GREEN, BLUE):
        assert not is_distinguishing(g, EdgeColouring({(0, 1): col}))


def test_is_distinguishing_c6_pattern():
    # red on cyclic positions {0,1,3}: distinct circular gaps kill the
    # dihedral group; cross-checked against all 12 elements by brute force
    g = cycle(6)
    red = {(0, 1), (1, 2), (3, 4)}
    c = EdgeColouring({e: (RED if e in red else GREEN) for e in g.edges})
    assert is_distinguishing(g, c)
    for p in automorphisms_by_backtracking(g):
        preserved = all(
            (tuple(sorted((p[u], p[v]))) in red) == ((u, v) in red) for u, v in g.edges
        )
        assert preserved == all(p[v] == v for v in range(6))


def test_is_distinguishing_rejects_partial():
    g = cycle(4)
    with pytest.raises(ValueError):
        is_distinguishing(g, EdgeColouring({(0, 1): RED}))


def test_index_cited_small_values():
    assert distinguishing_index(complete(6)) == 2
    assert distinguishing_index(cycle(4)) == 3
    assert distinguishing_index(complete_bipartite(2, 4)) == 3
    assert distinguishing_index(complete(2)) is NOT_DISTINGUISHABLE


def test_index_c4_matches_brute_force():
    assert distinguishing_index_brute(cycle(4)) == 3
    assert not exists_distinguishing_colouring_brute(cycle(4), 2)
    assert exists_distinguishing_colouring_brute(cycle(4), 3)


def test_index_k24_matches_brute_force():
    g = complete_bipartite(2, 4)
    assert not exists_distinguishing_colouring_brute(g, 2)
    assert exists_distinguishing_colouring_brute(g, 3)


def test_index_witness_verified():
    for g in (complete(6), cycle(7), petersen(), complete_bipartite(4, 4)):
        k, w = distinguishing_index_with_witness(g)
        assert isinstance(k, int) and w is not None
        assert is_distinguishing(g, w)
        assert len(w.colours_used()) <= k


def test_index_asymmetric_graph_is_one():
    assert distinguishing_index(spider([1, 2, 3])) == 1


def test_index_requires_connected():
    from edgesym.graph import disjoint_union

    with pytest.raises(ValueError):
        distinguishing_index(disjoint_union([cycle(3), cycle(3)]))


def test_index_max_colours_exceeded():
    with pytest.raises(MaxColoursExceededError):
        distinguishing_index(cycle(4), max_colours=2)


def test_index_budget():
    with pytest.raises(BudgetExceededError):
        distinguishing_index(cycle(5), budget=2)


def test_index_brute_agreement_named():
    # n <= 7 sample: production search vs unpruned enumeration
    for g in (
        cycle(3),
        cycle(4),
        cycle(5),
        cycle(6),
        cycle(7),
        complete(4),
        complete(5),
        complete_bipartite(3, 3),
        complete_bipartite(2, 4),
        spider([1, 2, 3]),
    ):
        assert distinguishing_index(g, max_colours=3) == distinguishing_index_brute(g)
    # the 5-edge star needs one colour per edge: both sides run out at 3
    star5 = complete_bipartite(1, 5)
    assert distinguishing_index_brute(star5) == ">3"
    with pytest.raises(MaxColoursExceededError):
        distinguishing_index(star5, max_colours=3)


def test_search_colouring_k3_star():
    c = search_colouring(complete(3), 3, star_constraint=True)
    assert c is not None
    assert c.colours_used() == {RED, GREEN, BLUE}
    from edgesym.colouring import all_blue_vertices

    assert all_blue_vertices(complete(3), c) == []


def test_search_colouring_absent_cases():
    assert search_colouring(complete(2), 3) is None
    assert search_colouring(cycle(5), 2) is None


def test_search_colouring_witness_passes_verifier():
    for g, k in ((cycle(6), 2), (complete(5), 3), (petersen(), 2)):
        c = search_colouring(g, k, star_constraint=True)
        assert c is not None and is_distinguishing(g, c)


def test_cycle_colouring_positions():
    c = cycle_colouring(6)
    red = {e for e, col in c.assignment.items() if col == RED}
    assert red == {(0, 1), (1, 2), (3, 4)}
    assert c.colours_used() == {RED, GREEN}
    assert is_distinguishing(cycle(6), c)


def test_cycle_colouring_gap_sequence_12():
    c = cycle_colouring(12)
    red_positions = sorted(
        i for i in range(12) if c.get(edge(i, (i + 1) % 12)) == RED
    )
    assert red_positions == [0, 1, 3]
    gaps = [
        (b - a) % 12
        for a, b in zip(red_positions, red_positions[1:] + [red_positions[0] + 12])
    ]
    assert sorted(gaps) == [1, 2, 9]
    assert is_distinguishing(cycle(12), c)


def test_cycle_colouring_small_uses_three():
    for n in (3, 4, 5):
        c = cycle_colouring(n)
        assert len(c.colours_used()) == 3
        assert is_distinguishing(cycle(n), c)
    with pytest.raises(ValueError):
        cycle_colouring(2)


def test_cycle_colouring_two_colours_up_to_64():
    for n in list(range(6, 21)) + [40, 64]:
        c = cycle_colouring(n)
        assert c.colours_used() == {RED, GREEN}
        assert is_distinguishing(cycle(n), c)


def test_hamiltonian_colouring_k7():
    g = complete(7)
    c = hamiltonian_colouring(g, list(range(7)))
    assert c.colours_used() == {RED, GREEN}
    assert is_distinguishing(g, c)


def test_hamiltonian_colouring_cycle_has_no_chord():
    with pytest.raises(ChordlessPathError):
        hamiltonian_colouring(cycle(7), list(range(7)))


def test_hamiltonian_colouring_k8_legs():
    g = complete(8)
    c = hamiltonian_colouring(g, list(range(8)))
    red = [e for e, col in c.assignment.items() if col == RED]
    tree_deg = {}
    for u, v in red:
        tree_deg[u] = tree_deg.get(u, 0) + 1
        tree_deg[v] = tree_deg.get(v, 0) + 1
    assert sorted(tree_deg.values()) == [1, 1, 1, 2, 2, 2, 2, 3]
    # chord at k=4 gives legs 1, 2, 4
    centre = [v for v, d in tree_deg.items() if d == 3][0]
    assert centre == 3
    assert is_distinguishing(g, c)


def test_hamiltonian_colouring_bad_path():
    with pytest.raises(ValueError):
        hamiltonian_colouring(complete(7), [0, 1, 2, 3, 4, 5, 5])
    with pytest.raises(ValueError):
        hamiltonian_colouring(complete(5), [0, 1, 2, 3, 4])


def test_hamiltonian_path_finder():
    p = hamiltonian_path(petersen())
    assert p is not None and sorted(p) == list(range(10))
    assert all(petersen().has_edge(a, b) for a, b in zip(p, p[1:]))
    assert hamiltonian_path(spider([2, 2, 2])) is None


def test_scan_small_named_corpus():
    report = scan_conjecture([complete(4), complete(5), complete(6)])
    statuses = {r["graph6"]: r["status"] for r in report.rows}
    dprimes = {r["graph6"]: r["dprime"] for r in report.rows}
    from edgesym.graph import serialize_graph6

    k4, k5, k6 = (serialize_graph6(complete(i)) for i in (4, 5, 6))
    assert statuses[k4] == "known_exception" and dprimes[k4] == 3
    assert statuses[k5] == "known_exception" and dprimes[k5] == 3
    assert statuses[k6] == "ok" and dprimes[k6] == 2
    assert report.ok


def test_scan_two_regular_up_to_12():
    report = scan_conjecture([cycle(n) for n in range(3, 13)], max_n=12)
    flagged = sorted(r["n"] for r in report.exceptions)
    assert flagged == [3, 4, 5]
    assert all(r["status"] == "known_exception" for r in report.exceptions)
    assert report.ok


def test_scan_flags_k2_not_distinguishable():
    report = scan_conjecture([complete(2)])
    row = report.rows[0]
    assert row["dprime"] == "not_distinguishable"
    assert row["status"] == "known_exception"


def test_scan_skips_bad_inputs():
    from edgesym.graph import disjoint_union

    report = scan_conjecture(
        [disjoint_union([cycle(3), cycle(3)]), spider([1, 2, 3]), cycle(20)],
        max_n=10,
    )
    assert [r["status"] for r in report.rows] == [
        "skipped_disconnected",
        "skipped_not_regular",
        "skipped_too_large",
    ]


def test_scan_parallel_matches_serial():
    graphs = [cycle(5), complete(4), petersen(), complete_bipartite(3, 3)]
    serial = scan_conjecture(graphs)
    par = scan_conjecture(graphs, jobs=2)
    assert [r["graph6"] for r in serial.rows] == [r["graph6"] for r in par.rows]
    assert [r["dprime"] for r in serial.rows] == [r["dprime"] for r in par.rows]


def test_monotone_witness_property():
    # any witness returned at k colours certifies the index is <= k
    for g in (cycle(8), petersen(), complete_bipartite(4, 4)):
        c = search_colouring(g, 2)
        assert c is not None
        assert distinguishing_index(g) <= 2


def test_determinism():
    g = petersen()
    a = distinguishing_index_with_witness(g)
    b = distinguishing_index_with_witness(g)
    assert a[0] == b[0] and a[1].assignment == b[1].assignment
