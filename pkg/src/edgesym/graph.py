"""Finite simple undirected graphs on vertices 0..n-1.

Graphs are immutable after construction and safe to share. Edge identity is
the ordered pair (min, max) everywhere in this package.
"""

from __future__ import annotations

import random
from collections import deque
from typing import Iterable, Iterator, Optional

Edge = tuple[int, int]

_G6_MAX_SHORT = 62


class GraphError(ValueError):
    """Invalid graph construction or encoding input."""


def edge(u: int, v: int) -> Edge:
    """Canonical form of the undirected edge {u, v}."""
    if u == v:
        raise GraphError(f"self-loop at vertex {u}")
    return (u, v) if u < v else (v, u)


class Graph:
    """Immutable simple graph with bitmask adjacency rows."""

    __slots__ = ("n", "_adj", "_edges")

    def __init__(self, n: int, edges: Iterable[Edge] = ()):
        if n < 0:
            raise GraphError("vertex count must be non-negative")
        adj = [0] * n
        canon: set[Edge] = set()
        for u, v in edges:
            e = edge(u, v)
            if not (0 <= e[0] and e[1] < n):
                raise GraphError(f"edge {e} outside vertex range 0..{n - 1}")
            canon.add(e)
        for u, v in canon:
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        self.n = n
        self._adj = tuple(adj)
        self._edges = tuple(sorted(canon))

    # -- basic queries ----------------------------------------------------

    @property
    def edges(self) -> tuple[Edge, ...]:
        return self._edges

    @property
    def edge_count(self) -> int:
        return len(self._edges)

    def adjacency_mask(self, v: int) -> int:
        return self._adj[v]

    def has_edge(self, u: int, v: int) -> bool:
        return u != v and bool(self._adj[u] >> v & 1)

    def neighbours(self, v: int) -> list[int]:
        m = self._adj[v]
        out = []
        while m:
            low = m & -m
            out.append(low.bit_length() - 1)
            m ^= low
        return out

    def degree(self, v: int) -> int:
        return bin(self._adj[v]).count("1")

    def vertices(self) -> range:
        return range(self.n)

    def __eq__(self, other) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self._adj == other._adj

    def __hash__(self) -> int:
        return hash((self.n, self._adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.edge_count})"

    def complement(self) -> "Graph":
        es = [
            (u, v)
            for u in range(self.n)
            for v in range(u + 1, self.n)
            if not self.has_edge(u, v)
        ]
        return Graph(self.n, es)

    def induced(self, vertices: Iterable[int]) -> tuple["Graph", list[int]]:
        """Induced subgraph relabelled to 0..k-1; returns (graph, old labels)."""
        keep = sorted(set(vertices))
        index = {v: i for i, v in enumerate(keep)}
        es = [
            (index[u], index[v])
            for u, v in self._edges
            if u in index and v in index
        ]
        return Graph(len(keep), es), keep


# -- traversal -------------------------------------------------------------


def distances_from(g: Graph, r: int) -> dict[int, int]:
    """BFS distance map from r. Vertices absent from the map are unreachable."""
    if not 0 <= r < g.n:
        raise GraphError(f"root {r} outside vertex range")
    dist = {r: 0}
    q = deque([r])
    while q:
        u = q.popleft()
        for w in g.neighbours(u):
            if w not in dist:
                dist[w] = dist[u] + 1
                q.append(w)
    return dist


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        return True
    return len(distances_from(g, 0)) == g.n


def regularity(g: Graph) -> Optional[int]:
    """The common degree if g is regular, otherwise None."""
    if g.n == 0:
        return 0
    degs = {g.degree(v) for v in g.vertices()}
    if len(degs) == 1:
        return degs.pop()
    return None


def girth(g: Graph) -> Optional[int]:
    """Length of a shortest cycle, or None for forests."""
    best: Optional[int] = None
    for s in g.vertices():
        dist = {s: 0}
        parent = {s: -1}
        q = deque([s])
        while q:
            u = q.popleft()
            for w in g.neighbours(u):
                if w not in dist:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    q.append(w)
                elif parent[u] != w:
                    cyc = dist[u] + dist[w] + 1
                    if best is None or cyc < best:
                        best = cyc
    return best


# -- graph6 interchange format ---------------------------------------------
# Short form only (n <= 62): byte n+63, then the upper triangle read
# column-by-column, packed 6 bits per byte, each byte offset by 63.


def parse_graph6(text: str) -> Graph:
    s = text.rstrip("\n")
    if not s:
        raise GraphError("empty graph6 string")
    if any(not (63 <= ord(ch) <= 126) for ch in s):
        raise GraphError("character outside the printable graph6 alphabet")
    n = ord(s[0]) - 63
    if n > _G6_MAX_SHORT:
        raise GraphError("only the short graph6 form (n <= 62) is supported")
    body = s[1:]
    need = n * (n - 1) // 2
    if len(body) != (need + 5) // 6:
        raise GraphError(
            f"graph6 bit field length mismatch: n={n} needs {(need + 5) // 6} bytes, got {len(body)}"
        )
    bits = 0
    for ch in body:
        bits = bits << 6 | (ord(ch) - 63)
    pad = len(body) * 6 - need
    if pad and bits & ((1 << pad) - 1):
        raise GraphError("nonzero padding bits in graph6 encoding")
    bits >>= pad
    edges = []
    pos = need - 1
    for v in range(1, n):
        for u in range(v):
            if pos >= 0 and bits >> pos & 1:
                edges.append((u, v))
            pos -= 1
    return Graph(n, edges)


def serialize_graph6(g: Graph) -> str:
    if g.n > _G6_MAX_SHORT:
        raise GraphError("only the short graph6 form (n <= 62) is supported")
    bits = 0
    for v in range(1, g.n):
        for u in range(v):
            bits = bits << 1 | (1 if g.has_edge(u, v) else 0)
    need = g.n * (g.n - 1) // 2
    nbytes = (need + 5) // 6
    bits <<= nbytes * 6 - need
    out = [chr(g.n + 63)]
    for i in range(nbytes - 1, -1, -1):
        out.append(chr((bits >> (6 * i) & 63) + 63))
    return "".join(out)


# -- generators -------------------------------------------------------------


def complete(n: int) -> Graph:
    if n < 1:
        raise GraphError("complete graph needs at least one vertex")
    return Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def complete_bipartite(p: int, q: int) -> Graph:
    if p < 1 or q < 1:
        raise GraphError("both parts must be non-empty")
    return Graph(p + q, [(u, p + w) for u in range(p) for w in range(q)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError("cycle needs at least 3 vertices")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Graph:
    if n < 1:
        raise GraphError("path needs at least one vertex")
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph(10, outer + spokes + inner)


def circulant(n: int, steps: Iterable[int]) -> Graph:
    if n < 1:
        raise GraphError("circulant needs at least one vertex")
    norm = set()
    for s in steps:
        s %= n
        if s == 0:
            raise GraphError("circulant step 0 would create loops")
        norm.add(min(s, n - s))
    edges = [(i, (i + s) % n) for s in norm for i in range(n)]
    return Graph(n, edges)


def spider(legs: Iterable[int]) -> Graph:
    """Tree with one centre and paths of the given lengths attached to it."""
    lens = [l for l in legs if l > 0]
    edges = []
    nxt = 1
    for length in lens:
        prev = 0
        for _ in range(length):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
    return Graph(nxt, edges)


def random_regular(n: int, d: int, seed: int, max_retries: int = 1000) -> Graph:
    """d-regular simple graph from the pairing model; rejection sampling.

    Deterministic for a fixed seed. Raises GraphError when the degree
    sequence is infeasible or the retry budget runs out.
    """
    if d < 0 or d >= n or (n * d) % 2:
        raise GraphError(f"no {d}-regular simple graph on {n} vertices")
    rng = random.Random(seed)
    stubs = [v for v in range(n) for _ in range(d)]
    for _ in range(max_retries):
        rng.shuffle(stubs)
        seen: set[Edge] = set()
        ok = True
        for i in range(0, len(stubs), 2):
            u, v = stubs[i], stubs[i + 1]
            if u == v:
                ok = False
                break
            e = edge(u, v)
            if e in seen:
                ok = False
                break
            seen.add(e)
        if ok:
            return Graph(n, seen)
    raise GraphError(
        f"pairing model failed to produce a simple {d}-regular graph in {max_retries} tries"
    )


def disjoint_union(graphs: Iterable[Graph]) -> Graph:
    n = 0
    edges: list[Edge] = []
    for g in graphs:
        edges.extend((u + n, v + n) for u, v in g.edges)
        n += g.n
    return Graph(n, edges)


def read_graph6_lines(lines: Iterable[str]) -> Iterator[Graph]:
    for line in lines:
        line = line.strip()
        if line:
            yield parse_graph6(line)
