"""Named diagrams and seeded generators used by the verification sweeps.

Besides the standard trefoil and figure-eight codes, two frozen PD
codes are provided: a nine-crossing diagram of the knot 9_42 (two
alternating tangles joined by four non-alternating edges, so its
decomposition graph is a doubled two-cycle) and an eight-crossing
connected two-component diagram with an annular alternating region
(whose decomposition graph is a disjoint union of two doubled
two-cycles, disconnected even though the diagram is connected).
"""

from __future__ import annotations

import random

from . import families
from .adgraph import AdGraph, validate_adg
from .construct import embed_planar, realize_diagram
from .diagram import PlanarDiagram, classify_arcs, link_component_count, parse_pd
from .errors import TuraevError
from .families import FamilySpec, make_family

TREFOIL = "X 1 4 2 5 / X 3 6 4 1 / X 5 2 6 3"

FIGURE_EIGHT = "X 4 2 5 1 / X 8 6 1 5 / X 6 3 7 4 / X 2 7 3 8"

#: nine-crossing diagram of 9_42: an inner alternating two-tangle and an
#: outer one joined by four non-alternating edges
NINE_42 = (
    "X 2 16 3 15 / X 16 4 17 3 / X 14 2 15 1 / X 17 10 18 11 / "
    "X 11 18 12 1 / X 4 9 5 10 / X 12 8 13 7 / X 6 14 7 13 / X 8 5 9 6"
)

#: connected two-component diagram whose alternating decomposition has an
#: annular alternating region, so its decomposition graph is disconnected
ANNULAR_LINK = (
    "X 13 8 14 7 / X 4 13 5 16 / X 3 8 4 9 / X 11 6 12 7 / "
    "X 5 12 6 1 / X 15 2 16 1 / X 9 2 10 3 / X 10 15 11 14"
)


def trefoil() -> PlanarDiagram:
    return parse_pd(TREFOIL)


def figure_eight() -> PlanarDiagram:
    return parse_pd(FIGURE_EIGHT)


def nine_42() -> PlanarDiagram:
    return parse_pd(NINE_42)


def annular_link() -> PlanarDiagram:
    return parse_pd(ANNULAR_LINK)


def named_diagrams() -> dict[str, PlanarDiagram]:
    return {
        "trefoil": trefoil(),
        "figure-eight": figure_eight(),
        "9_42": nine_42(),
        "annular-link": annular_link(),
    }


def torus_2k(k: int) -> PlanarDiagram:
    """Standard alternating diagram of the (2, k) torus link: a closed
    twist region of k crossings."""
    if k < 1:
        raise ValueError("need k >= 1")
    if k == 1:
        return parse_pd("X 1 1 2 2")
    crossings = []
    for i in range(k):
        l_prev, l_cur = 1 + (i - 1) % k, 1 + i
        r_prev, r_cur = k + 1 + (i - 1) % k, k + 1 + i
        crossings.append((l_prev, l_cur, r_cur, r_prev))
    return PlanarDiagram(crossings)


def make_alternating(diagram: PlanarDiagram) -> PlanarDiagram:
    """Redecorate the crossings of a diagram so that every arc becomes
    alternating, keeping the underlying 4-valent plane graph.

    Swapping the strands of a crossing rotates its slot tuple by one.
    The arc constraints form a 2-colorable system on every planar
    diagram (checkerboard colorability of 4-valent plane graphs).
    """
    n = diagram.crossing_count
    swap = [None] * n
    adj: list[list[tuple[int, int]]] = [[] for _ in range(n)]
    for arc, (h1, h2) in diagram.arc_ends.items():
        c1, s1 = h1 >> 2, h1 & 3
        c2, s2 = h2 >> 2, h2 & 3
        want = (s1 + s2 + 1) % 2  # swap_1 + swap_2 must equal this mod 2
        adj[c1].append((c2, want))
        adj[c2].append((c1, want))
    for seed in range(n):
        if swap[seed] is not None:
            continue
        swap[seed] = 0
        stack = [seed]
        while stack:
            c = stack.pop()
            for d, want in adj[c]:
                need = (want - swap[c]) % 2
                if swap[d] is None:
                    swap[d] = need
                    stack.append(d)
                elif swap[d] != need:
                    raise TuraevError("diagram is not checkerboard colorable")
    crossings = []
    for ci, (a, b, c, d) in enumerate(diagram.crossings):
        crossings.append((b, c, d, a) if swap[ci] else (a, b, c, d))
    return PlanarDiagram(crossings, diagram.free_loops)


def is_alternating(diagram: PlanarDiagram) -> bool:
    return all(k.alternating for k in classify_arcs(diagram).values())


#: families whose instances are always bipartite (hence valid
#: decomposition graphs) for the listed parameter choices
def random_adgraph(rng: random.Random, max_edges: int = 12) -> AdGraph:
    """A seeded random validated, embedded alternating decomposition
    graph, mixing family instances, disjoint unions, and one-sums."""
    def atom() -> FamilySpec:
        roll = rng.randrange(8)
        if roll == 0:
            return FamilySpec("DoubledPath", (rng.randint(1, 3),))
        if roll == 1:
            return FamilySpec("DoubledCycle", (2 * rng.randint(1, 3),))
        if roll == 2:
            base = rng.choice((1, 2))
            return FamilySpec(
                "Theta", tuple(base + 2 * rng.randint(0, 1) for _ in range(3))
            )
        if roll == 3:
            return FamilySpec(
                "K4pq", (2 * rng.randint(1, 2), 2 * rng.randint(1, 2))
            )
        if roll == 4:
            return FamilySpec("K4TwoSum", (2, 2))
        if roll == 5:
            return FamilySpec(
                "C4Legs", tuple(rng.randint(0, 2) for _ in range(4))
            )
        if roll == 6:
            return FamilySpec(
                "K4tildeTwoSum", tuple(rng.randint(0, 1) for _ in range(4))
            )
        parents = tuple(rng.randrange(max(1, i)) for i in range(rng.randint(1, 4)))
        return FamilySpec("DoubledTree", parents)

    while True:
        spec = atom()
        graph = make_family(spec)
        if rng.random() < 0.3:
            other = make_family(atom())
            if graph.edge_count + other.edge_count <= max_edges:
                if rng.random() < 0.5:
                    graph = AdGraph(
                        graph.n + other.n,
                        graph.edges
                        + tuple((u + graph.n, v + graph.n) for u, v in other.edges),
                    )
                else:
                    merged = AdGraph(graph.n, graph.edges).disjoint_union(
                        AdGraph(other.n, other.edges)
                    )
                    graph = families.one_sum_components(
                        merged,
                        rng.randrange(graph.n),
                        graph.n + rng.randrange(other.n),
                    )
        if graph.edge_count <= max_edges:
            return embed_planar(validate_adg(AdGraph(graph.n, graph.edges)))


def random_diagram(rng: random.Random, max_edges: int = 12) -> PlanarDiagram:
    """Seeded random realized diagram."""
    return realize_diagram(random_adgraph(rng, max_edges))


def alternating_knot_corpus(
    max_crossings: int = 12,
) -> list[tuple[str, PlanarDiagram]]:
    """Reduced alternating knot diagrams with at most ``max_crossings``
    crossings: odd (2, k) torus diagrams, the figure eight, and
    alternating redecorations of their connected sums.

    Connected sums of reduced alternating knot diagrams keep a reduced
    underlying map with one strand, so the redecorated diagram is again
    a reduced alternating diagram of a known non-split knot.
    """
    from .diagram import connected_sum, is_adequate

    basics: list[tuple[str, PlanarDiagram]] = [
        (f"torus-2-{k}", torus_2k(k)) for k in range(3, max_crossings + 1, 2)
    ]
    basics.append(("figure-eight", figure_eight()))
    out = list(basics)
    summands = [
        ("torus-2-3", "torus-2-3"),
        ("torus-2-3", "torus-2-5"),
        ("torus-2-3", "torus-2-7"),
        ("torus-2-3", "torus-2-9"),
        ("torus-2-5", "torus-2-5"),
        ("torus-2-5", "torus-2-7"),
        ("figure-eight", "torus-2-3"),
        ("figure-eight", "torus-2-5"),
        ("figure-eight", "torus-2-7"),
        ("figure-eight", "figure-eight"),
        ("torus-2-3", "torus-2-3", "torus-2-3"),
        ("torus-2-3", "torus-2-3", "torus-2-5"),
        ("figure-eight", "torus-2-3", "torus-2-3"),
        ("figure-eight", "figure-eight", "torus-2-3"),
        ("figure-eight", "figure-eight", "figure-eight"),
        ("torus-2-3", "torus-2-3", "torus-2-3", "torus-2-3"),
    ]
    table = dict(basics)
    for combo in summands:
        diagram = table[combo[0]]
        for name in combo[1:]:
            other = table[name]
            diagram = connected_sum(
                diagram, next(iter(diagram.arc_ends)), other,
                next(iter(other.arc_ends)),
            )
        if diagram.crossing_count > max_crossings:
            continue
        alt = make_alternating(diagram)
        assert link_component_count(alt) == 1 and is_adequate(alt)
        out.append(("#".join(combo), alt))
    return out
