"""Independent brute-force oracles for the test suite.

Everything here avoids the production search kernel on purpose: permutations
are enumerated naively (or with plain adjacency pruning), colourings are
enumerated exhaustively, and graph6 is re-encoded from the published format
definition. Expected values frozen in the tests were computed with these.
"""

from __future__ import annotations

import itertools
from typing import Iterable, Optional

import numpy as np

from edgesym.graph import Edge, Graph, edge


# -- graph6 reference encoder (independent re-implementation) ---------------


def encode_graph6_reference(n: int, edges: Iterable[Edge]) -> str:
    es = {tuple(sorted(e)) for e in edges}
    bits = []
    for v in range(1, n):
        for u in range(v):
            bits.append(1 if (u, v) in es else 0)
    while len(bits) % 6:
        bits.append(0)
    out = [chr(n + 63)]
    for i in range(0, len(bits), 6):
        val = 0
        for b in bits[i : i + 6]:
            val = val * 2 + b
        out.append(chr(val + 63))
    return "".join(out)


# -- automorphisms by explicit enumeration -----------------------------------


def automorphisms_by_full_enumeration(g: Graph) -> list[tuple[int, ...]]:
    """All automorphisms by trying all n! permutations. Keep n <= 7."""
    out = []
    es = set(g.edges)
    for p in itertools.permutations(range(g.n)):
        if all(tuple(sorted((p[u], p[v]))) in es for u, v in es):
            out.append(p)
    return out


def automorphisms_by_backtracking(g: Graph) -> list[tuple[int, ...]]:
    """All automorphisms by depth-first assignment with adjacency pruning.

    No partition refinement, no kernel; usable up to n ~ 16 on the graphs in
    this suite.
    """
    n = g.n
    degs = [g.degree(v) for v in range(n)]
    out: list[tuple[int, ...]] = []
    images = [-1] * n
    used = [False] * n

    def extend(v: int) -> None:
        if v == n:
            out.append(tuple(images))
            return
        for w in range(n):
            if used[w] or degs[w] != degs[v]:
                continue
            ok = True
            for u in range(v):
                if g.has_edge(u, v) != g.has_edge(images[u], w):
                    ok = False
                    break
            if ok:
                images[v] = w
                used[w] = True
                extend(v + 1)
                used[w] = False
        images[v] = -1

    extend(0)
    return out


def constraint_holds_naive(g: Graph, c, p: tuple[int, ...]) -> bool:
    """Field-by-field constraint check used by the brute-force side."""
    es = set(g.edges)

    def img(e: Edge) -> Edge:
        return tuple(sorted((p[e[0]], p[e[1]])))

    if any(img(e) not in es for e in es):
        return False
    for v, w in c.pinned.items():
        if p[v] != w:
            return False
    for v in c.pointwise_fixed:
        if p[v] != v:
            return False
    for a, b in c.setwise_pairs:
        if {p[v] for v in a} != set(b):
            return False
    for a, b in c.edge_setwise_pairs:
        if {img(e) for e in a} != set(b):
            return False
    if c.colour_preserve is not None:
        cmap = c.colour_preserve
        if hasattr(cmap, "assignment"):
            cmap = cmap.assignment
        cmap = {tuple(sorted(k)): v for k, v in cmap.items()}
        for e in es:
            if cmap.get(e) != cmap.get(img(e)):
                return False
    if c.nontrivial_on is not None and all(p[v] == v for v in c.nontrivial_on):
        return False
    return True


def find_automorphism_brute(g: Graph, c) -> Optional[tuple[int, ...]]:
    for p in itertools.permutations(range(g.n)):
        if constraint_holds_naive(g, c, p):
            return p
    return None


def random_constraint(g: Graph, rng):
    """Randomised AutConstraint touching every field with some probability."""
    from edgesym.aut import AutConstraint
    from edgesym.colouring import BLUE, GREEN, RED, EdgeColouring

    n = g.n
    c = AutConstraint()
    if rng.random() < 0.4 and n:
        v = rng.randrange(n)
        c.pinned = {v: rng.randrange(n)}
    if rng.random() < 0.4 and n:
        c.pointwise_fixed = frozenset(rng.sample(range(n), rng.randint(0, min(2, n))))
    if rng.random() < 0.3 and n >= 2:
        k = rng.randint(1, 2)
        c.setwise_pairs = [
            (frozenset(rng.sample(range(n), k)), frozenset(rng.sample(range(n), k)))
        ]
    if g.edge_count and rng.random() < 0.3:
        k = rng.randint(1, min(2, g.edge_count))
        c.edge_setwise_pairs = [
            (frozenset(rng.sample(list(g.edges), k)), frozenset(rng.sample(list(g.edges), k)))
        ]
    if g.edge_count and rng.random() < 0.5:
        cols = {}
        for e in g.edges:
            if rng.random() < 0.7:
                cols[e] = rng.choice((RED, GREEN, BLUE))
        c.colour_preserve = EdgeColouring(cols)
    if rng.random() < 0.5 and n:
        c.nontrivial_on = frozenset(rng.sample(range(n), rng.randint(1, n)))
    return c


# -- distinguishing index by unpruned colouring enumeration ------------------


def _edge_perms(g: Graph, perms: list[tuple[int, ...]]) -> np.ndarray:
    index = {e: i for i, e in enumerate(g.edges)}
    rows = []
    for p in perms:
        rows.append([index[edge(p[u], p[v])] for u, v in g.edges])
    return np.array(rows, dtype=np.int64)


def exists_distinguishing_colouring_brute(
    g: Graph, k: int, perms: Optional[list[tuple[int, ...]]] = None
) -> bool:
    """Scan every k-colouring of the edges; True once one kills all nontrivial
    automorphisms. Vectorised over chunks, early exit on the first witness."""
    if perms is None:
        perms = automorphisms_by_backtracking(g)
    nontrivial = [p for p in perms if any(p[v] != v for v in range(g.n))]
    m = g.edge_count
    if not nontrivial:
        return True
    if m == 0:
        return False
    eperms = _edge_perms(g, nontrivial)
    total = k**m
    chunk = 1 << 14
    # digits matrix built per chunk: colouring index -> per-edge colours
    weights = k ** np.arange(m, dtype=np.int64)
    start = 0
    while start < total:
        stop = min(start + chunk, total)
        idx = np.arange(start, stop, dtype=np.int64)
        digits = (idx[:, None] // weights[None, :]) % k
        alive = np.arange(stop - start)
        for row in eperms:
            if alive.size == 0:
                break
            sub = digits[alive]
            preserved = (sub[:, row] == sub).all(axis=1)
            alive = alive[~preserved]
        if alive.size:
            return True
        start = stop
    return False


def distinguishing_index_brute(g: Graph, max_colours: int = 3):
    """Exact distinguishing index by unpruned exhaustive search. Returns
    "not_distinguishable" when a nontrivial automorphism fixes every edge
    setwise (connected: exactly the single-edge graph), or ">k" when the
    palette runs out."""
    perms = automorphisms_by_backtracking(g)
    es = list(g.edges)
    for p in perms:
        if any(p[v] != v for v in range(g.n)) and all(
            tuple(sorted((p[u], p[v]))) == (u, v) for u, v in es
        ):
            return "not_distinguishable"
    for k in range(1, max_colours + 1):
        if exists_distinguishing_colouring_brute(g, k, perms):
            return k
    return f">{max_colours}"


# -- misc ----------------------------------------------------------------------


def bfs_girth(g: Graph) -> Optional[int]:
    """Shortest cycle length by per-root BFS (independent of graph.girth)."""
    best = None
    for s in range(g.n):
        dist = {s: 0}
        par = {s: -1}
        q = [s]
        while q:
            u = q.pop(0)
            for w in g.neighbours(u):
                if w not in dist:
                    dist[w] = dist[u] + 1
                    par[w] = u
                    q.append(w)
                elif par[u] != w:
                    c = dist[u] + dist[w] + 1
                    if best is None or c < best:
                        best = c
    return best


def canonical_small(g: Graph) -> tuple:
    """Canonical form as the lexicographically least adjacency bitstring over
    all n! relabellings. Only for n <= 7."""
    best = None
    for p in itertools.permutations(range(g.n)):
        bits = tuple(
            1 if g.has_edge(p[u], p[v]) else 0
            for u in range(g.n)
            for v in range(u + 1, g.n)
        )
        if best is None or bits < best:
            best = bits
    return (g.n, best)


def all_connected_graphs_upto(n_max: int) -> list[Graph]:
    """Every connected graph on 1..n_max vertices up to isomorphism (n_max <= 5
    stays cheap)."""
    from edgesym.graph import is_connected

    out = []
    for n in range(1, n_max + 1):
        seen = set()
        pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
        for mask in range(1 << len(pairs)):
            es = [pairs[i] for i in range(len(pairs)) if mask >> i & 1]
            g = Graph(n, es)
            if not is_connected(g):
                continue
            key = canonical_small(g)
            if key not in seen:
                seen.add(key)
                out.append(g)
    return out
