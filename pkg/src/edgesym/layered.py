"""Constructive 3-colour distinguishing edge colouring for regular graphs.

Strategy: root the graph, slice the vertices into orbits of the root
stabiliser ordered by distance, and walk the slices outward. Each step first
colours the edges inside the current slice (recursing into regular
components where needed), then breaks the remaining symmetry by recolouring
forward and back edges of the slice with small "decorations" chosen so that
no two symmetric components receive interchangeable patterns.

Degrees 3 and 4 keep a fallback ladder (exhaustive per-layer recolouring,
then a global search); degree >= 5 must succeed outright and asserts the
supply-vs-demand count for decorations at every assignment point.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Optional, Sequence

from .aut import (
    AutConstraint,
    Permutation,
    find_automorphism,
    pointwise_stabiliser_generators,
    stabiliser_generators,
    edge_orbits,
    vertex_orbits,
)
from .colouring import (
    BLUE,
    GREEN,
    PALETTE,
    RED,
    EdgeColouring,
    all_blue_vertices,
    satisfies_blue_rule,
)
from .distinguishing import (
    BudgetExceededError,
    is_distinguishing,
    search_colouring,
)
from .graph import Edge, Graph, distances_from, edge, is_connected, regularity


class NotColourableError(ValueError):
    """The single-edge graph: every colouring is preserved by the swap."""


class DecorationShortageError(RuntimeError):
    def __init__(self, layer: int, component, orbit_size: int, available: int):
        super().__init__(
            f"layer {layer}: component {component} has {available} usable "
            f"decorations for an orbit of {orbit_size}"
        )
        self.layer = layer
        self.component = component
        self.orbit_size = orbit_size
        self.available = available


class StepPropertyError(RuntimeError):
    def __init__(self, layer: int, violations: list[str]):
        super().__init__(f"layer {layer}: " + "; ".join(violations))
        self.layer = layer
        self.violations = violations


class FallbackExhaustedError(RuntimeError):
    pass


class VerificationError(RuntimeError):
    pass


# -- layering ------------------------------------------------------------------


@dataclass
class OrbitLayering:
    """Vertex slices (root-stabiliser orbits ordered by distance) with their
    incident edge sets, the furthest slice each prefix of slices touches, and
    the edge sets settled once a prefix is coloured."""

    root: int
    layers: list[list[int]]
    incident_edges: list[list[Edge]]
    reach: list[int]
    settled_edges: list[frozenset[Edge]]
    layer_of: dict[int, int]

    @property
    def count(self) -> int:
        return len(self.layers)

    def earlier_vertices(self, i: int) -> list[int]:
        return [v for layer in self.layers[:i] for v in layer]


def build_layering(g: Graph, r: int) -> OrbitLayering:
    """Orbits of the root stabiliser, ordered by (distance from root, least
    vertex). Ties between orbits at the same distance break by least vertex."""
    if not 0 <= r < g.n:
        raise ValueError(f"root {r} outside vertex range")
    if not is_connected(g):
        raise ValueError("layering requires a connected graph")
    dist = distances_from(g, r)
    gens = stabiliser_generators(g, r)
    orbits = vertex_orbits(g, gens)
    layers = sorted(orbits, key=lambda o: (dist[o[0]], o[0]))
    if layers[0] != [r]:
        raise AssertionError("root is not alone in its orbit")
    layer_of = {v: i for i, layer in enumerate(layers) for v in layer}

    incident = []
    for layer in layers:
        members = set(layer)
        incident.append(sorted(e for e in g.edges if e[0] in members or e[1] in members))

    touch = []  # furthest layer each single layer touches by an edge
    for i, es in enumerate(incident):
        furthest = i
        for u, v in es:
            furthest = max(furthest, layer_of[u], layer_of[v])
        touch.append(furthest)
    reach = []
    for i in range(len(layers)):
        reach.append(max(touch[: i + 1]))
        if i + 1 < len(layers) and reach[i] < i + 1:
            raise AssertionError(f"reach({i}) = {reach[i]} below {i + 1}")

    settled = []
    for i in range(len(layers)):
        inside = {v for layer in layers[: reach[i] + 1] for v in layer}
        settled.append(
            frozenset(e for e in g.edges if e[0] in inside and e[1] in inside)
        )
        if i and not settled[i - 1] <= settled[i]:
            raise AssertionError("settled edge sets are not nested")
        if not set(incident[i]) <= settled[i]:
            raise AssertionError(f"incident edges of layer {i} escape settlement")

    return OrbitLayering(r, layers, incident, reach, settled, layer_of)


@dataclass
class LayerEdgeClasses:
    back: list[Edge]
    forward: list[Edge]
    horizontal: list[Edge]
    f: int
    b: int
    h: int


def classify_layer(g: Graph, layering: OrbitLayering, i: int) -> LayerEdgeClasses:
    """Split the edges at slice i by direction; per-vertex counts must be
    uniform across the slice (orbit property), else the layering is broken."""
    if not 0 <= i < layering.count:
        raise ValueError(f"layer index {i} out of range")
    members = set(layering.layers[i])
    back, forward, horizontal = [], [], []
    per_vertex: dict[int, list[int]] = {v: [0, 0, 0] for v in members}
    for e in layering.incident_edges[i]:
        u, v = e
        lu, lv = layering.layer_of[u], layering.layer_of[v]
        if lu == lv == i:
            horizontal.append(e)
            per_vertex[u][2] += 1
            per_vertex[v][2] += 1
        else:
            inside, outside = (u, v) if lu == i else (v, u)
            if layering.layer_of[outside] < i:
                back.append(e)
                per_vertex[inside][1] += 1
            else:
                forward.append(e)
                per_vertex[inside][0] += 1
    counts = {tuple(c) for c in per_vertex.values()}
    if len(counts) != 1:
        raise AssertionError(f"non-uniform (f,b,h) across layer {i}: {sorted(counts)}")
    f, b, h = counts.pop()
    if i > 0 and b == 0:
        raise AssertionError(f"layer {i} has no back edges")
    return LayerEdgeClasses(sorted(back), sorted(forward), sorted(horizontal), f, b, h)


# -- step state -----------------------------------------------------------------


@dataclass
class StepState:
    graph: Graph
    layering: OrbitLayering
    degree: int
    colouring: dict[Edge, str]
    step: int = 0
    horizontal_colours: dict[int, dict[Edge, str]] = field(default_factory=dict)
    classes: dict[int, LayerEdgeClasses] = field(default_factory=dict)
    previous: Optional[dict[Edge, str]] = None
    audit: list[dict] = field(default_factory=list)

    def layer_classes(self, i: int) -> LayerEdgeClasses:
        if i not in self.classes:
            self.classes[i] = classify_layer(self.graph, self.layering, i)
        return self.classes[i]


def initial_colouring(g: Graph, r: int) -> StepState:
    """Blue at the root, green everywhere else."""
    layering = build_layering(g, r)
    colours = {e: (BLUE if r in e else GREEN) for e in g.edges}
    deg = regularity(g)
    if deg is None:
        raise ValueError("layered colouring expects a regular graph")
    state = StepState(g, layering, deg, colours)
    state.audit.append({"layer": 0, "rule": "root", "decorations": [], "fallback": False})
    return state


# -- horizontal step -------------------------------------------------------------


def _matching_orbit_colours(orbits: Sequence[Sequence[Edge]]) -> dict[Edge, str]:
    """Cyclic red/green/blue over each orbit keeps every colour to at most
    half of any orbit with two or more edges; singletons stay green."""
    out: dict[Edge, str] = {}
    for orbit in orbits:
        if len(orbit) == 1:
            out[orbit[0]] = GREEN
        else:
            for j, e in enumerate(sorted(orbit)):
                out[e] = PALETTE[j % 3]
    return out


def _horizontal_components(state: StepState, i: int) -> list[tuple[int, ...]]:
    cls = state.layer_classes(i)
    members = state.layering.layers[i]
    if cls.h == 0:
        return [(v,) for v in members]
    adj: dict[int, set[int]] = {v: set() for v in members}
    for u, v in cls.horizontal:
        adj[u].add(v)
        adj[v].add(u)
    seen: set[int] = set()
    comps = []
    for v in members:
        if v in seen:
            continue
        comp = {v}
        queue = [v]
        while queue:
            x = queue.pop()
            for w in adj[x]:
                if w not in comp:
                    comp.add(w)
                    queue.append(w)
        seen |= comp
        comps.append(tuple(sorted(comp)))
    return sorted(comps)


def colour_horizontal(g: Graph, state: StepState, i: int, verify: bool = False,
                      budget: int = 10**8) -> StepState:
    """Colour the edges inside slice i.

    h = 0: nothing to do. h = 1: the slice's matching edges get a balanced
    colouring over their orbits under the pointwise stabiliser of everything
    earlier. h >= 2: every component is a regular graph of smaller degree;
    recurse and install.
    """
    cls = state.layer_classes(i)
    installed: dict[Edge, str] = {}
    if cls.h == 0:
        rule = "H0"
    elif cls.h == 1:
        rule = "H1"
        earlier = state.layering.earlier_vertices(i)
        gens = pointwise_stabiliser_generators(g, earlier)
        orbits = edge_orbits(g, gens, cls.horizontal)
        installed = _matching_orbit_colours(orbits)
    else:
        rule = "H2plus"
        if not 2 <= cls.h < state.degree:
            raise AssertionError(f"horizontal degree {cls.h} out of range at layer {i}")
        hgraph = Graph(g.n, cls.horizontal)
        for comp in _horizontal_components(state, i):
            sub, labels = hgraph.induced(comp)
            try:
                sub_colouring = colour_regular(sub, verify=verify, budget=budget)
            except Exception as exc:
                exc.args = (*exc.args, f"while colouring component {comp} inside layer {i}")
                raise
            for (a, b), col in sub_colouring.assignment.items():
                installed[edge(labels[a], labels[b])] = col
    state.colouring.update(installed)
    state.horizontal_colours[i] = installed
    state.audit.append(
        {"layer": i, "rule": rule, "decorations": [], "fallback": False}
    )
    return state


# -- persistence ------------------------------------------------------------------


def persistent_exists(
    g: Graph, state: StepState, i: int, extra: Optional[AutConstraint] = None
) -> Optional[Permutation]:
    """Witness automorphism fixing every earlier slice pointwise and
    preserving slice i's internal colouring, under extra constraints."""
    extra = extra or AutConstraint()
    horiz = state.horizontal_colours.get(i, {})
    colour_preserve = dict(horiz)
    if extra.colour_preserve is not None:
        more = extra.colour_preserve
        if hasattr(more, "assignment"):
            more = more.assignment
        for e, col in more.items():
            e = edge(*e)
            if colour_preserve.get(e, col) != col:
                return None  # contradictory requirement
            colour_preserve[e] = col
    c = AutConstraint(
        pinned=dict(extra.pinned),
        pointwise_fixed=frozenset(state.layering.earlier_vertices(i))
        | frozenset(extra.pointwise_fixed),
        setwise_pairs=list(extra.setwise_pairs),
        edge_setwise_pairs=list(extra.edge_setwise_pairs),
        colour_preserve=colour_preserve,
        nontrivial_on=extra.nontrivial_on,
    )
    return find_automorphism(g, c)


# -- decorations --------------------------------------------------------------------


@dataclass(frozen=True)
class Decoration:
    """Recolouring recipe for one component: forward edges in forward_red
    turn red (the rest green), back edges in back_blue turn blue."""

    component: tuple[int, ...]
    forward_red: tuple[Edge, ...]
    back_blue: tuple[Edge, ...]


def _decoration_sites(state: StepState, i: int, comp: tuple[int, ...]) -> list[int]:
    cls = state.layer_classes(i)
    if cls.h == 0:
        return list(comp)
    if cls.h == 1:
        return [min(comp)]
    horiz = state.horizontal_colours[i]
    sites = []
    for v in comp:
        own = [e for e in horiz if v in e]
        if any(horiz[e] != BLUE for e in own):
            sites.append(v)
    return sites


def enumerate_decorations(
    g: Graph, state: StepState, i: int, comp: tuple[int, ...]
) -> list[Decoration]:
    """Candidate decorations at a component: one forward subset per size
    (lexicographically least), crossed with the allowed back-edge shapes
    (empty, one currently-red edge, two currently-green edges) drawn from
    back edges no persistent automorphism can move onto each other."""
    cls = state.layer_classes(i)
    sites = set(_decoration_sites(state, i, comp))
    fwd = sorted(e for e in cls.forward if e[0] in sites or e[1] in sites)
    raw_back = sorted(
        e
        for e in cls.back
        if (e[0] in sites or e[1] in sites) and state.colouring[e] != BLUE
    )
    kept: list[Edge] = []
    for e in raw_back:
        movable = False
        for e0 in kept:
            for a, b in ((e0, e), (e, e0)):
                w = persistent_exists(
                    g, state, i,
                    AutConstraint(edge_setwise_pairs=[(frozenset({a}), frozenset({b}))]),
                )
                if w is not None:
                    movable = True
                    break
            if movable:
                break
        if not movable:
            kept.append(e)

    forward_choices = [tuple(fwd[:s]) for s in range(len(fwd) + 1)]
    reds = [e for e in kept if state.colouring[e] == RED]
    greens = [e for e in kept if state.colouring[e] == GREEN]
    back_choices: list[tuple[Edge, ...]] = [()]
    back_choices += [(e,) for e in reds]
    back_choices += [pair for pair in itertools.combinations(greens, 2)]
    return [
        Decoration(comp, F, B) for F in forward_choices for B in back_choices
    ]


def decoration_is_asymmetric(
    g: Graph, state: StepState, i: int, d: Decoration
) -> bool:
    """No nontrivial persistent automorphism fixes the component setwise
    while mapping the decoration onto itself."""
    comp = frozenset(d.component)
    if len(comp) == 1:
        return True
    pairs = []
    if d.forward_red:
        pairs.append((frozenset(d.forward_red), frozenset(d.forward_red)))
    if d.back_blue:
        pairs.append((frozenset(d.back_blue), frozenset(d.back_blue)))
    w = persistent_exists(
        g,
        state,
        i,
        AutConstraint(
            setwise_pairs=[(comp, comp)],
            edge_setwise_pairs=pairs,
            nontrivial_on=comp,
        ),
    )
    return w is None


def decorations_similar(
    g: Graph, state: StepState, i: int, d1: Decoration, d2: Decoration
) -> bool:
    """True iff a persistent automorphism carries one decorated component
    onto the other, decoration included."""
    if d1 == d2:
        return True
    if len(d1.forward_red) != len(d2.forward_red):
        return False
    if len(d1.back_blue) != len(d2.back_blue):
        return False
    if len(d1.component) != len(d2.component):
        return False
    pairs = []
    if d1.forward_red or d2.forward_red:
        pairs.append((frozenset(d1.forward_red), frozenset(d2.forward_red)))
    if d1.back_blue or d2.back_blue:
        pairs.append((frozenset(d1.back_blue), frozenset(d2.back_blue)))
    w = persistent_exists(
        g,
        state,
        i,
        AutConstraint(
            setwise_pairs=[(frozenset(d1.component), frozenset(d2.component))],
            edge_setwise_pairs=pairs,
        ),
    )
    return w is not None


def _would_leave_all_blue(state: StepState, i: int, d: Decoration) -> bool:
    """Local guard for candidate decorations: would some component vertex end
    up seeing only blue edges? Only possible when the slice has no forward
    edges (forward edges come out red or green)."""
    cls = state.layer_classes(i)
    if cls.f > 0:
        return False
    horiz = state.horizontal_colours.get(i, {})
    blue_b = set(d.back_blue)
    for v in d.component:
        own_h = [e for e in horiz if v in e]
        if any(horiz[e] != BLUE for e in own_h):
            continue
        own_b = [e for e in cls.back if v in e]
        if all(state.colouring[e] == BLUE or e in blue_b for e in own_b):
            return True
    return False


def assign_decorations(g: Graph, state: StepState, i: int) -> StepState:
    """Greedy decoration assignment: components are grouped into orbits under
    persistent automorphisms; within an orbit each component receives an
    asymmetric decoration not similar to any earlier one, the first taking
    the empty decoration whenever it qualifies."""
    comps = _horizontal_components(state, i)
    cls = state.layer_classes(i)

    orbits: list[list[tuple[int, ...]]] = []
    for comp in comps:
        placed = False
        for orbit in orbits:
            rep = orbit[0]
            if len(rep) != len(comp):
                continue
            w = persistent_exists(
                g,
                state,
                i,
                AutConstraint(setwise_pairs=[(frozenset(comp), frozenset(rep))]),
            )
            if w is not None:
                orbit.append(comp)
                placed = True
                break
        if not placed:
            orbits.append([comp])

    entries = []
    for orbit in orbits:
        n_k = len(orbit)
        chosen: list[Decoration] = []
        for comp in orbit:
            cands = enumerate_decorations(g, state, i, comp)
            asym = [d for d in cands if decoration_is_asymmetric(g, state, i, d)]
            if state.degree >= 5:
                if len(asym) < n_k:
                    raise AssertionError(
                        f"decoration supply {len(asym)} below orbit size {n_k} "
                        f"at layer {i} (degree {state.degree})"
                    )
                if cls.h == 0 and cls.b > 1 and n_k > state.degree - 1:
                    raise AssertionError(
                        f"orbit size {n_k} exceeds degree-1 bound at layer {i}"
                    )
            usable = [d for d in asym if not _would_leave_all_blue(state, i, d)]
            pick = None
            for d in usable:
                if all(not decorations_similar(g, state, i, d, prev) for prev in chosen):
                    pick = d
                    break
            if pick is None:
                raise DecorationShortageError(i, comp, n_k, len(usable))
            chosen.append(pick)
            fset = set(pick.forward_red)
            sites_all = set(comp)
            for e in cls.forward:
                if e[0] in sites_all or e[1] in sites_all:
                    state.colouring[e] = RED if e in fset else GREEN
            for e in pick.back_blue:
                state.colouring[e] = BLUE
            entries.append(
                {
                    "component": list(comp),
                    "forward_red": [list(e) for e in pick.forward_red],
                    "back_blue": [list(e) for e in pick.back_blue],
                    "orbit_size": n_k,
                    "candidates": len(cands),
                    "asymmetric": len(asym),
                }
            )
    for entry in state.audit:
        if entry["layer"] == i:
            entry["decorations"] = entries
            break
    return state


# -- step property checks -----------------------------------------------------------


def check_step_properties(g: Graph, state: StepState) -> list[str]:
    """Audit the invariants that keep the construction on track after the
    current step; an empty list means the step is clean."""
    i = state.step
    lay = state.layering
    r = lay.root
    col = state.colouring
    violations = []

    blue_only = all_blue_vertices(g, EdgeColouring(col))
    if blue_only != [r]:
        violations.append(f"all-blue vertices {blue_only} instead of [{r}]")

    if state.previous is not None and i > 0:
        allowed = set(lay.incident_edges[i])
        diff = [e for e in g.edges if col[e] != state.previous[e]]
        if not set(diff) <= allowed:
            violations.append(f"colours changed outside the layer: {sorted(set(diff) - allowed)}")

    coloured_layers = {e for j in range(i + 1) for e in lay.incident_edges[j]}
    for e in g.edges:
        if e not in coloured_layers and col[e] != GREEN:
            violations.append(f"untouched edge {e} is {col[e]}, not green")
            break

    inside = {v for layer in lay.layers[: i + 1] for v in layer}
    for e, c in col.items():
        if c == BLUE and r not in e and not (e[0] in inside and e[1] in inside):
            violations.append(f"blue edge {e} escapes the settled region")
            break

    for j in range(i + 1):
        restricted = {e: col[e] for e in lay.settled_edges[j]}
        w = find_automorphism(
            g,
            AutConstraint(
                pinned={r: r},
                colour_preserve=restricted,
                nontrivial_on=frozenset(lay.layers[j]),
            ),
        )
        if w is not None:
            violations.append(
                f"a root-fixing map preserving the settled colouring moves layer {j}"
            )
    return violations


# -- fallbacks ------------------------------------------------------------------------


def _recolour_layer_exhaustive(
    g: Graph, state: StepState, i: int, budget: int
) -> None:
    """Try every 3-colouring of the layer's edges (forward edges never blue)
    until the step invariants hold. Used only for degrees 3 and 4."""
    assert state.previous is not None
    lay = state.layering
    cls = state.layer_classes(i)
    layer_edges = sorted(lay.incident_edges[i])
    forward = set(cls.forward)
    domains = [
        (RED, GREEN) if e in forward else (RED, GREEN, BLUE) for e in layer_edges
    ]
    base = dict(state.previous)
    spent = 0
    for combo in itertools.product(*domains):
        spent += 1
        if spent > budget:
            raise FallbackExhaustedError(f"layer {i}: fallback budget exhausted")
        trial = dict(base)
        for e, c in zip(layer_edges, combo):
            trial[e] = c
        tc = EdgeColouring(trial)
        if all_blue_vertices(g, tc) != [lay.root]:
            continue
        ok = True
        for j in range(i + 1):
            restricted = {e: trial[e] for e in lay.settled_edges[j]}
            w = find_automorphism(
                g,
                AutConstraint(
                    pinned={lay.root: lay.root},
                    colour_preserve=restricted,
                    nontrivial_on=frozenset(lay.layers[j]),
                ),
            )
            if w is not None:
                ok = False
                break
        if ok:
            state.colouring = trial
            state.horizontal_colours[i] = {e: trial[e] for e in cls.horizontal}
            return
    raise FallbackExhaustedError(f"layer {i}: no admissible recolouring")


# -- the headline procedure ------------------------------------------------------------


def _layered_pipeline(
    g: Graph,
    root: int,
    verify: bool,
    strict: bool,
    budget: int,
    audit: Optional[list],
) -> EdgeColouring:
    state = initial_colouring(g, root)
    if verify:
        bad = check_step_properties(g, state)
        if bad:
            raise StepPropertyError(0, bad)
    for i in range(1, state.layering.count):
        state.previous = dict(state.colouring)
        state.step = i
        try:
            colour_horizontal(g, state, i, verify=verify, budget=budget)
            assign_decorations(g, state, i)
            bad = check_step_properties(g, state) if verify else []
            if bad:
                raise StepPropertyError(i, bad)
        except (DecorationShortageError, StepPropertyError):
            if strict:
                raise
            _recolour_layer_exhaustive(g, state, i, budget)
            for entry in state.audit:
                if entry["layer"] == i:
                    entry["fallback"] = True
                    break
            else:
                state.audit.append(
                    {"layer": i, "rule": "fallback", "decorations": [], "fallback": True}
                )
            if verify:
                bad = check_step_properties(g, state)
                if bad:
                    raise StepPropertyError(i, bad)
    if audit is not None:
        audit.extend(state.audit)
    return EdgeColouring(state.colouring)


def _cycle_walk(g: Graph) -> list[int]:
    order = [0]
    nxt = min(g.neighbours(0))
    prev = 0
    while nxt != 0:
        order.append(nxt)
        a, b = g.neighbours(nxt)
        prev, nxt = nxt, (b if a == prev else a)
    return order


def _colour_cycle_graph(g: Graph, budget: int) -> EdgeColouring:
    n = g.n
    if n >= 6:
        walk = _cycle_walk(g)
        red_positions = {0, 1, 3}
        assignment = {}
        for idx in range(n):
            e = edge(walk[idx], walk[(idx + 1) % n])
            assignment[e] = RED if idx in red_positions else GREEN
        return EdgeColouring(assignment)
    found = search_colouring(g, 3, star_constraint=True, budget=budget)
    if found is None:
        raise VerificationError(f"no 3-colouring found for a {n}-cycle")
    return found


def colour_regular(
    g: Graph,
    root: int = 0,
    verify: bool = False,
    budget: int = 10**8,
    audit: Optional[list] = None,
) -> EdgeColouring:
    """Distinguishing edge colouring with at most three colours for any
    connected regular graph except the single edge.

    The result always verifies: distinguishing, within the palette, and with
    at most one vertex (none on complete graphs) seeing only blue.
    """
    deg = regularity(g)
    if deg is None:
        raise ValueError("colour_regular expects a regular graph")
    if not is_connected(g):
        raise ValueError("colour_regular expects a connected graph")
    if g.n == 0:
        raise ValueError("empty graph")

    is_complete_graph = g.n >= 2 and deg == g.n - 1

    if g.n == 1:
        return EdgeColouring({})
    if g.n == 2:
        raise NotColourableError("the single edge cannot be distinguished")

    if is_complete_graph:
        result = search_colouring(g, 3, star_constraint=True, budget=budget)
        if result is None:
            raise VerificationError("complete graph search found no colouring")
        if audit is not None:
            audit.append({"layer": None, "rule": "complete-search", "decorations": [],
                          "fallback": False})
    elif deg == 2:
        result = _colour_cycle_graph(g, budget)
        if audit is not None:
            audit.append({"layer": None, "rule": "cycle", "decorations": [],
                          "fallback": False})
    elif deg >= 5:
        result = _layered_pipeline(g, root, verify, strict=True, budget=budget, audit=audit)
    else:
        try:
            result = _layered_pipeline(
                g, root, verify, strict=False, budget=budget, audit=audit
            )
        except (FallbackExhaustedError, BudgetExceededError):
            result = search_colouring(g, 3, star_constraint=True, budget=budget)
            if result is None:
                raise VerificationError("global fallback search found no colouring")
            if audit is not None:
                audit.append({"layer": None, "rule": "global-fallback",
                              "decorations": [], "fallback": True})

    if not result.is_total(g):
        raise VerificationError("colouring is not total")
    if not result.colours_used() <= set(PALETTE):
        raise VerificationError("colouring leaves the palette")
    if not satisfies_blue_rule(g, result, is_complete_graph):
        raise VerificationError("blue-star rule violated")
    if not is_distinguishing(g, result):
        raise VerificationError("final colouring is not distinguishing")
    return result
