"""Constrained automorphism search and orbit machinery.

One declarative query type (AutConstraint) and one search primitive
(find_automorphism) underlie everything else here: stabiliser generators,
orbits, group order, and graph isomorphism all reduce to it.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping, Optional, Sequence

from . import kernel
from .graph import Edge, Graph, edge

_MAX_SEARCH_N = 64  # kernel bitmask width


class ConstraintError(ValueError):
    """Malformed AutConstraint for the given graph."""


class SizeGuardError(ValueError):
    """Graph exceeds the configured size guard for an exhaustive operation."""


@dataclass(frozen=True)
class Permutation:
    """Vertex bijection in one-line notation; acts on edges by endpoints."""

    images: tuple[int, ...]

    def __call__(self, v: int) -> int:
        return self.images[v]

    def edge_image(self, e: Edge) -> Edge:
        return edge(self.images[e[0]], self.images[e[1]])

    def compose(self, other: "Permutation") -> "Permutation":
        """self after other: (self * other)(v) = self(other(v))."""
        return Permutation(tuple(self.images[w] for w in other.images))

    def inverse(self) -> "Permutation":
        inv = [0] * len(self.images)
        for v, w in enumerate(self.images):
            inv[w] = v
        return Permutation(tuple(inv))

    @property
    def is_identity(self) -> bool:
        return all(w == v for v, w in enumerate(self.images))

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(n)))

    def moved(self) -> list[int]:
        return [v for v, w in enumerate(self.images) if w != v]


@dataclass
class AutConstraint:
    """Declarative description of an automorphism-existence query.

    pinned            required vertex images
    pointwise_fixed   vertices that must map to themselves
    setwise_pairs     (source vertex set, required image vertex set) pairs
    edge_setwise_pairs(source edge set, required image edge set) pairs
    colour_preserve   partial edge colouring the map must preserve;
                      uncoloured edges must map to uncoloured edges
    nontrivial_on     vertex set on which the map must not be the identity
    """

    pinned: dict[int, int] = field(default_factory=dict)
    pointwise_fixed: frozenset[int] = frozenset()
    setwise_pairs: list[tuple[frozenset[int], frozenset[int]]] = field(default_factory=list)
    edge_setwise_pairs: list[tuple[frozenset[Edge], frozenset[Edge]]] = field(default_factory=list)
    colour_preserve: Optional[Mapping[Edge, str]] = None
    nontrivial_on: Optional[frozenset[int]] = None

    def normalised(self) -> "AutConstraint":
        return AutConstraint(
            pinned=dict(self.pinned),
            pointwise_fixed=frozenset(self.pointwise_fixed),
            setwise_pairs=[(frozenset(a), frozenset(b)) for a, b in self.setwise_pairs],
            edge_setwise_pairs=[
                (frozenset(a), frozenset(b)) for a, b in self.edge_setwise_pairs
            ],
            colour_preserve=_colour_map(self.colour_preserve),
            nontrivial_on=None if self.nontrivial_on is None else frozenset(self.nontrivial_on),
        )


def _colour_map(c) -> Optional[dict[Edge, str]]:
    if c is None:
        return None
    if hasattr(c, "assignment"):
        c = c.assignment
    return {edge(u, v): col for (u, v), col in c.items()}


def _validate(g: Graph, c: AutConstraint) -> None:
    n = g.n
    if n > _MAX_SEARCH_N:
        raise SizeGuardError(f"search supports at most {_MAX_SEARCH_N} vertices")

    def check_vertex(v, what):
        if not (isinstance(v, int) and 0 <= v < n):
            raise ConstraintError(f"{what} {v!r} is not a vertex of the graph")

    for v, w in c.pinned.items():
        check_vertex(v, "pinned source")
        check_vertex(w, "pinned image")
    if len(set(c.pinned.values())) != len(c.pinned):
        raise ConstraintError("pinned images are not distinct")
    for v in c.pointwise_fixed:
        check_vertex(v, "pointwise-fixed vertex")
    for a, b in c.setwise_pairs:
        for v in a | b:
            check_vertex(v, "setwise-pair vertex")
        if len(a) != len(b):
            raise ConstraintError("setwise pair with unequal cardinalities")
    for a, b in c.edge_setwise_pairs:
        for e in a | b:
            if not g.has_edge(*e):
                raise ConstraintError(f"edge-setwise pair references non-edge {e}")
        if len(a) != len(b):
            raise ConstraintError("edge-setwise pair with unequal cardinalities")
    if c.colour_preserve is not None:
        for e in c.colour_preserve:
            if not g.has_edge(*e):
                raise ConstraintError(f"colouring references non-edge {e}")
    if c.nontrivial_on is not None:
        for v in c.nontrivial_on:
            check_vertex(v, "nontrivial_on vertex")


def _build_query(g: Graph, c: AutConstraint):
    """Label matrices and candidate masks encoding every positive constraint."""
    n = g.n
    full = (1 << n) - 1

    colours = c.colour_preserve
    colour_ids: dict[str, int] = {}
    if colours is not None:
        for col in sorted(set(colours.values())):
            colour_ids[col] = len(colour_ids) + 1  # 0 = uncoloured edge

    src_bits: dict[Edge, int] = {}
    dst_bits: dict[Edge, int] = {}
    for j, (a, b) in enumerate(c.edge_setwise_pairs):
        for e in a:
            src_bits[e] = src_bits.get(e, 0) | 1 << j
        for e in b:
            dst_bits[e] = dst_bits.get(e, 0) | 1 << j

    ids: dict[tuple, int] = {}

    def label(tup) -> int:
        if tup not in ids:
            ids[tup] = len(ids)
        return ids[tup]

    nonedge = label((0, 0, 0))
    src = [nonedge] * (n * n)
    dst = [nonedge] * (n * n)
    for u, v in g.edges:
        col = 0
        if colours is not None and (u, v) in colours:
            col = colour_ids[colours[(u, v)]]
        ls = label((1, col, src_bits.get((u, v), 0)))
        ld = label((1, col, dst_bits.get((u, v), 0)))
        src[u * n + v] = src[v * n + u] = ls
        dst[u * n + v] = dst[v * n + u] = ld

    allowed = [full] * n
    for v, w in c.pinned.items():
        allowed[v] &= 1 << w
    for v in c.pointwise_fixed:
        allowed[v] &= 1 << v
    for a, b in c.setwise_pairs:
        bmask = 0
        for w in b:
            bmask |= 1 << w
        for v in range(n):
            if v in a:
                allowed[v] &= bmask
            else:
                allowed[v] &= ~bmask
    return src, dst, allowed


def satisfies(g: Graph, c: AutConstraint, p: Permutation) -> bool:
    """Naive field-by-field check that p meets the constraint; used to vet
    every witness the search returns."""
    n = g.n
    if sorted(p.images) != list(range(n)):
        return False
    for u, v in g.edges:
        if not g.has_edge(p(u), p(v)):
            return False
    for v, w in c.pinned.items():
        if p(v) != w:
            return False
    for v in c.pointwise_fixed:
        if p(v) != v:
            return False
    for a, b in c.setwise_pairs:
        if {p(v) for v in a} != set(b):
            return False
    for a, b in c.edge_setwise_pairs:
        if {p.edge_image(e) for e in a} != set(b):
            return False
    colours = c.colour_preserve
    if colours is not None:
        for e in g.edges:
            ie = p.edge_image(e)
            if colours.get(e) != colours.get(ie):
                return False
    if c.nontrivial_on is not None:
        if all(p(v) == v for v in c.nontrivial_on):
            return False
    return True


def find_automorphism(g: Graph, c: Optional[AutConstraint] = None) -> Optional[Permutation]:
    """Witness automorphism satisfying every constraint field, or None.

    The search is complete: None means no such automorphism exists.
    """
    c = (c or AutConstraint()).normalised()
    _validate(g, c)
    for a, b in c.edge_setwise_pairs:
        if len(a) != len(b):
            return None
    src, dst, allowed = _build_query(g, c)

    def run(masks) -> Optional[Permutation]:
        res = kernel.search_mapping(g.n, src, dst, masks)
        if res is None:
            return None
        p = Permutation(tuple(res))
        if not satisfies(g, c, p):
            raise RuntimeError(f"kernel returned an invalid witness {p.images}")
        return p

    if c.nontrivial_on is None:
        return run(allowed)

    # a negative condition becomes a ladder of positive searches: the k-th
    # branch fixes the first k-1 probe vertices and moves the k-th
    probes = sorted(c.nontrivial_on)
    for k, x in enumerate(probes):
        masks = list(allowed)
        dead = False
        for y in probes[:k]:
            masks[y] &= 1 << y
            if masks[y] == 0:
                dead = True
                break
        masks[x] &= ~(1 << x)
        if dead or masks[x] == 0:
            continue
        found = run(masks)
        if found is not None:
            return found
    return None


# -- groups via stabiliser chains -------------------------------------------


def _chain_transversals(g: Graph, start_fixed: Sequence[int]) -> list[Permutation]:
    """Transversal witnesses along the chain of pointwise stabilisers.

    The union of level transversals generates the pointwise stabiliser of
    start_fixed (the whole automorphism group when start_fixed is empty).
    """
    gens: list[Permutation] = []
    fixed = list(dict.fromkeys(start_fixed))
    fixed_set = set(fixed)
    for b in range(g.n):
        if b in fixed_set:
            continue
        for w in range(g.n):
            if w == b:
                continue
            witness = find_automorphism(
                g,
                AutConstraint(pinned={b: w}, pointwise_fixed=frozenset(fixed)),
            )
            if witness is not None:
                gens.append(witness)
        fixed.append(b)
        fixed_set.add(b)
    return gens


def automorphism_generators(g: Graph) -> list[Permutation]:
    """Generating set for the full automorphism group."""
    return _chain_transversals(g, [])


def stabiliser_generators(g: Graph, r: int) -> list[Permutation]:
    """Generators of the subgroup fixing vertex r."""
    if not 0 <= r < g.n:
        raise ConstraintError(f"root {r} outside vertex range")
    return _chain_transversals(g, [r])


def pointwise_stabiliser_generators(g: Graph, fixed: Iterable[int]) -> list[Permutation]:
    """Generators of the subgroup fixing every listed vertex."""
    return _chain_transversals(g, sorted(set(fixed)))


def group_order(g: Graph, max_n: int = 16) -> int:
    """|Aut(G)| by an orbit-stabiliser chain. Guarded by max_n."""
    if g.n > max_n:
        raise SizeGuardError(f"group_order guard: n={g.n} exceeds {max_n}")
    order = 1
    fixed: list[int] = []
    for b in range(g.n):
        orbit = 1
        for w in range(g.n):
            if w == b:
                continue
            witness = find_automorphism(
                g, AutConstraint(pinned={b: w}, pointwise_fixed=frozenset(fixed))
            )
            if witness is not None:
                orbit += 1
        order *= orbit
        fixed.append(b)
    return order


def all_automorphisms(g: Graph, limit: int = 1_000_000) -> Optional[list[Permutation]]:
    """Every automorphism by closure over generators; None if more than limit."""
    gens = automorphism_generators(g)
    seen = {tuple(range(g.n))}
    frontier = [Permutation.identity(g.n)]
    out = list(frontier)
    while frontier:
        nxt = []
        for p in frontier:
            for q in gens:
                r = q.compose(p)
                if r.images not in seen:
                    seen.add(r.images)
                    if len(seen) > limit:
                        return None
                    nxt.append(r)
                    out.append(r)
        frontier = nxt
    return out


# -- orbits ------------------------------------------------------------------


def vertex_orbits(
    g: Graph, gens: Sequence[Permutation], domain: Optional[Iterable[int]] = None
) -> list[list[int]]:
    """Orbit partition of domain under the generated group, ordered by least
    element. The empty generator list yields singletons."""
    dom = sorted(set(domain)) if domain is not None else list(range(g.n))
    dom_set = set(dom)
    for p in gens:
        for v in dom:
            if p(v) not in dom_set:
                raise ConstraintError(f"generator moves {v} out of the domain")
    return _closure(dom, dom_set, gens, lambda p, x: p(x))


def edge_orbits(
    g: Graph, gens: Sequence[Permutation], domain: Optional[Iterable[Edge]] = None
) -> list[list[Edge]]:
    """Orbit partition of an edge set under the generated group."""
    dom = sorted({edge(*e) for e in domain}) if domain is not None else list(g.edges)
    dom_set = set(dom)
    for e in dom:
        if not g.has_edge(*e):
            raise ConstraintError(f"domain references non-edge {e}")
    for p in gens:
        for e in dom:
            if p.edge_image(e) not in dom_set:
                raise ConstraintError(f"generator moves {e} out of the domain")
    return _closure(dom, dom_set, gens, lambda p, e: p.edge_image(e))


def _closure(dom, dom_set, gens, act):
    remaining = set(dom)
    orbits = []
    for x in dom:
        if x not in remaining:
            continue
        orbit = {x}
        queue = [x]
        while queue:
            y = queue.pop()
            for p in gens:
                z = act(p, y)
                if z not in orbit:
                    orbit.add(z)
                    queue.append(z)
        orbits.append(sorted(orbit))
        remaining -= orbit
    return orbits


# -- isomorphism --------------------------------------------------------------


def find_isomorphism(g: Graph, h: Graph) -> Optional[Permutation]:
    """Vertex bijection carrying g onto h, or None. Same kernel, two graphs."""
    if g.n != h.n or g.edge_count != h.edge_count:
        return None
    if sorted(g.degree(v) for v in g.vertices()) != sorted(h.degree(v) for v in h.vertices()):
        return None
    n = g.n
    if n > _MAX_SEARCH_N:
        raise SizeGuardError(f"search supports at most {_MAX_SEARCH_N} vertices")
    src = [0] * (n * n)
    dst = [0] * (n * n)
    for u, v in g.edges:
        src[u * n + v] = src[v * n + u] = 1
    for u, v in h.edges:
        dst[u * n + v] = dst[v * n + u] = 1
    res = kernel.search_mapping(n, src, dst, [(1 << n) - 1] * n)
    if res is None:
        return None
    p = Permutation(tuple(res))
    for u, v in g.edges:
        if not h.has_edge(*p.edge_image((u, v))):
            raise RuntimeError("kernel returned an invalid isomorphism")
    return p


def is_isomorphic(g: Graph, h: Graph) -> bool:
    return find_isomorphism(g, h) is not None
