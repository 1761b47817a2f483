"""Ribbon graphs: rotation systems with twist bits per edge band.

A ribbon graph is a vertex set, each vertex carrying a cyclic sequence
of half-edges, together with edges pairing the half-edges.  An edge band
may be flat or carry a half-twist.  Boundary components are traced on a
double cover of the half-edges, which handles twisted (and hence
possibly non-orientable) bands uniformly.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import NonOrientableError, ParityError


@dataclass(frozen=True)
class RibbonGraph:
    """``vertices[i]`` is the counterclockwise cyclic order of half-edge
    ids at vertex ``i``; ``edges`` pairs the half-edges, with a twist
    flag per band."""

    vertices: tuple[tuple[int, ...], ...]
    edges: tuple[tuple[int, int, bool], ...]

    def __post_init__(self):
        at_vertex = [h for rot in self.vertices for h in rot]
        in_edges = [h for (a, b, _) in self.edges for h in (a, b)]
        if sorted(at_vertex) != sorted(in_edges) or len(set(at_vertex)) != len(at_vertex):
            raise ValueError("half-edges must appear once in rotations, once in edges")

    @property
    def vertex_count(self) -> int:
        return len(self.vertices)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def component_count(self) -> int:
        owner = {}
        for vi, rot in enumerate(self.vertices):
            for h in rot:
                owner[h] = vi
        parent = list(range(len(self.vertices)))

        def find(i):
            while parent[i] != i:
                parent[i] = parent[parent[i]]
                i = parent[i]
            return i

        for a, b, _ in self.edges:
            ra, rb = find(owner[a]), find(owner[b])
            if ra != rb:
                parent[ra] = rb
        return len({find(i) for i in range(len(self.vertices))})


def twist_all(graph: RibbonGraph) -> RibbonGraph:
    """Set every twist bit; idempotent."""
    return RibbonGraph(
        graph.vertices, tuple((a, b, True) for (a, b, _) in graph.edges)
    )


def boundary_count(graph: RibbonGraph) -> int:
    """Number of boundary circles of the ribbon surface.

    Tokens are (half-edge, direction); crossing a flat band flips the
    local direction, a twisted band preserves it, and at a vertex the
    walk steps to the rotation successor in the current direction.
    Every boundary circle is traced once per direction, so the orbit
    count halves.  Isolated vertices are disks and add one circle each.
    """
    succ: dict[int, int] = {}
    pred: dict[int, int] = {}
    isolated = 0
    for rot in graph.vertices:
        if not rot:
            isolated += 1
            continue
        for i, h in enumerate(rot):
            succ[h] = rot[(i + 1) % len(rot)]
            pred[rot[(i + 1) % len(rot)]] = h
    partner: dict[int, int] = {}
    twisted: dict[int, bool] = {}
    for a, b, t in graph.edges:
        partner[a], partner[b] = b, a
        twisted[a] = twisted[b] = t

    def step(token: tuple[int, int]) -> tuple[int, int]:
        h, direction = token
        p = partner[h]
        d2 = -direction if twisted[h] else direction
        nh = succ[p] if d2 > 0 else pred[p]
        return (nh, d2)

    seen: set[tuple[int, int]] = set()
    orbits = 0
    for h in succ:
        for d in (1, -1):
            if (h, d) in seen:
                continue
            orbits += 1
            tok = (h, d)
            while tok not in seen:
                seen.add(tok)
                tok = step(tok)
    assert orbits % 2 == 0
    return orbits // 2 + isolated


def is_orientable(graph: RibbonGraph) -> bool:
    """A ribbon graph is orientable iff some set of vertex flips makes
    every band flat; a twisted loop can never be flattened."""
    owner = {}
    for vi, rot in enumerate(graph.vertices):
        for h in rot:
            owner[h] = vi
    n = len(graph.vertices)
    parent = list(range(n))
    parity = [0] * n  # parity relative to the class representative

    def find(i: int) -> tuple[int, int]:
        p = 0
        while parent[i] != i:
            p ^= parity[i]
            i = parent[i]
        return i, p

    for a, b, t in graph.edges:
        u, v = owner[a], owner[b]
        want = 1 if t else 0
        ru, pu = find(u)
        rv, pv = find(v)
        if ru == rv:
            if pu ^ pv != want:
                return False
        else:
            parent[ru] = rv
            parity[ru] = pu ^ pv ^ want
    return True


def euler_genus(graph: RibbonGraph) -> int:
    """2k - v + e - f, valid in both the orientable and non-orientable case."""
    return (
        2 * graph.component_count()
        - graph.vertex_count
        + graph.edge_count
        - boundary_count(graph)
    )


def ribbon_genus(graph: RibbonGraph) -> int:
    """Orientable genus (2k - v + e - f) / 2."""
    eg = euler_genus(graph)
    if not is_orientable(graph):
        raise NonOrientableError(eg)
    if eg % 2 or eg < 0:
        raise ParityError(f"Euler genus {eg} is not twice an orientable genus")
    return eg // 2
