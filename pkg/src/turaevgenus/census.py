"""Exhaustive census of small alternating decomposition graphs.

Connected candidates are generated in two stages: first all connected
simple bipartite planar graphs up to isomorphism (vertex-by-vertex
augmentation with Weisfeiler-Lehman bucketing and exact isomorphism
rejection), then all edge-multiplicity assignments that make every
degree even, deduplicated up to automorphisms of the simple graph.
Disconnected graphs are multisets of connected atoms plus isolated
vertices.  Determinism and completeness within the bounds are
contractual; speed is desk-scale.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field, replace

import networkx as nx

from .adgraph import AdGraph, turaev_genus_graph, validate_adg
from .errors import BoundsTooLargeError
from .families import (
    automorphisms,
    canonical_contract,
    classify_genus,
    is_reduced,
    isomorphic,
    wl_hash,
)

MAX_FEASIBLE_EDGES = 16
MAX_FEASIBLE_VERTICES = 16


@dataclass(frozen=True)
class CensusFilter:
    max_vertices: int
    max_edges: int
    require_reduced: bool = False
    require_no_deg2: bool = False
    genus_equals: int | None = None
    allow_isolated: bool = True

    def __post_init__(self):
        if self.max_vertices < 0 or self.max_edges < 0:
            raise BoundsTooLargeError("bounds must be nonnegative")
        if (
            self.max_edges > MAX_FEASIBLE_EDGES
            or self.max_vertices > MAX_FEASIBLE_VERTICES
        ):
            raise BoundsTooLargeError(
                f"bounds beyond feasibility limits "
                f"({MAX_FEASIBLE_VERTICES} vertices / {MAX_FEASIBLE_EDGES} edges)"
            )


# ---------------------------------------------------------------------------
# stage 1: connected simple bipartite planar graphs up to isomorphism


def _is_bipartite_planar(n: int, edges: tuple[tuple[int, int], ...]) -> bool:
    g = nx.Graph()
    g.add_nodes_from(range(n))
    g.add_edges_from(edges)
    if not nx.is_bipartite(g):
        return False
    ok, _ = nx.check_planarity(g)
    return ok


class _IsoSet:
    """Set of multigraphs up to isomorphism, WL-bucketed."""

    def __init__(self):
        self.buckets: dict[tuple, list[AdGraph]] = {}

    def add(self, graph: AdGraph) -> bool:
        key = wl_hash(graph)
        bucket = self.buckets.setdefault(key, [])
        for other in bucket:
            if isomorphic(graph, other)[0]:
                return False
        bucket.append(graph)
        return True

    def items(self) -> list[AdGraph]:
        out = []
        for key in sorted(self.buckets):
            out.extend(self.buckets[key])
        return out


_SIMPLE_CACHE: dict[tuple[int, int], list[AdGraph]] = {}
_ATOM_CACHE: dict[tuple[int, int, int], list[AdGraph]] = {}


def simple_connected_graphs(max_v: int, max_e: int) -> list[AdGraph]:
    """All connected simple bipartite planar graphs with at most the
    given vertices and edges, one per isomorphism class."""
    cached = _SIMPLE_CACHE.get((max_v, max_e))
    if cached is not None:
        return cached
    levels: list[list[AdGraph]] = [[AdGraph(1, ())]]
    out = [AdGraph(1, ())]
    for v in range(2, max_v + 1):
        nxt = _IsoSet()
        for parent in levels[-1]:
            budget = max_e - parent.edge_count
            if budget < 1:
                continue
            for size in range(1, min(v - 1, budget) + 1):
                for nbrs in itertools.combinations(range(v - 1), size):
                    edges = parent.edges + tuple((u, v - 1) for u in nbrs)
                    if not _is_bipartite_planar(v, edges):
                        continue
                    nxt.add(AdGraph(v, edges))
        level = nxt.items()
        if not level:
            break
        levels.append(level)
        out.extend(level)
    _SIMPLE_CACHE[(max_v, max_e)] = out
    return out


# ---------------------------------------------------------------------------
# stage 2: multiplicity assignments


def _even_multiplicity_assignments(
    simple: AdGraph, max_e: int, min_degree: int
) -> list[tuple[int, ...]]:
    """All per-edge multiplicities >= 1 with total <= max_e making every
    vertex degree even and at least ``min_degree``, up to Aut."""
    edges = list(simple.edges)
    m = len(edges)
    if m == 0:
        return [()] if simple.n == 1 and min_degree == 0 else []
    last_at: dict[int, int] = {}
    for i, (u, v) in enumerate(edges):
        last_at[u] = i
        last_at[v] = i
    auts = automorphisms(simple)
    edge_pos = {e: i for i, e in enumerate(edges)}

    def orbit_minimal(assign: tuple[int, ...]) -> bool:
        for perm in auts:
            image = [0] * m
            for i, (u, v) in enumerate(edges):
                a, b = perm[u], perm[v]
                image[edge_pos[(min(a, b), max(a, b))]] = assign[i]
            if tuple(image) < assign:
                return False
        return True

    results: list[tuple[int, ...]] = []
    degree = [0] * simple.n

    def rec(i: int, used: int):
        if i == m:
            results.append(tuple(current))
            return
        u, v = edges[i]
        remaining = m - i - 1
        for mult in range(1, max_e - used - remaining + 1):
            ok = True
            for w in (u, v):
                if last_at[w] == i:
                    d = degree[w] + mult
                    if d % 2 or d < min_degree:
                        ok = False
                        break
            if not ok:
                continue
            degree[u] += mult
            degree[v] += mult
            current.append(mult)
            rec(i + 1, used + mult)
            current.pop()
            degree[u] -= mult
            degree[v] -= mult

    current: list[int] = []
    rec(0, 0)
    return [a for a in results if orbit_minimal(a)]


def connected_atoms(max_v: int, max_e: int, min_degree: int = 2) -> list[AdGraph]:
    """Connected validated alternating decomposition graphs (and the
    single vertex) up to isomorphism within the bounds."""
    cached = _ATOM_CACHE.get((max_v, max_e, min_degree))
    if cached is not None:
        return cached
    atoms: list[AdGraph] = [AdGraph(1, ())]
    for simple in simple_connected_graphs(max_v, max_e):
        if simple.edge_count == 0:
            continue
        for assign in _even_multiplicity_assignments(simple, max_e, min_degree):
            edges = []
            for e, mult in zip(simple.edges, assign):
                edges.extend([e] * mult)
            atoms.append(AdGraph(simple.n, tuple(sorted(edges))))
    atoms.sort(key=lambda g: (g.n, g.edge_count, wl_hash(g)))
    _ATOM_CACHE[(max_v, max_e, min_degree)] = atoms
    return atoms


# ---------------------------------------------------------------------------
# the census proper


def enumerate_adgs(filt: CensusFilter) -> list[AdGraph]:
    """All validated alternating decomposition graphs within the bounds,
    one per isomorphism class, in a deterministic order."""
    min_degree = 4 if (filt.require_reduced or filt.require_no_deg2) else 2
    atoms = [
        a for a in connected_atoms(filt.max_vertices, filt.max_edges, min_degree)
        if a.edge_count > 0
    ]
    combos: list[tuple[AdGraph, ...]] = []

    def rec(start: int, used_v: int, used_e: int, picked: list[AdGraph]):
        combos.append(tuple(picked))
        for i in range(start, len(atoms)):
            a = atoms[i]
            if used_v + a.n > filt.max_vertices or used_e + a.edge_count > filt.max_edges:
                continue
            picked.append(a)
            rec(i, used_v + a.n, used_e + a.edge_count, picked)
            picked.pop()

    rec(0, 0, 0, [])
    out: list[AdGraph] = []
    for combo in combos:
        used_v = sum(a.n for a in combo)
        used_e = sum(a.edge_count for a in combo)
        isolated_options: tuple[int, ...]
        if filt.allow_isolated:
            isolated_options = tuple(range(0, filt.max_vertices - used_v + 1))
        else:
            isolated_options = (0,)
        for extra in isolated_options:
            n = used_v + extra
            if n == 0 or n > filt.max_vertices:
                continue
            graph = AdGraph(0, ())
            for a in combo:
                graph = graph.disjoint_union(a)
            if extra:
                graph = graph.disjoint_union(AdGraph(extra, ()))
            out.append(graph)
    filtered = []
    for graph in out:
        if filt.require_no_deg2 and any(d == 2 for d in graph.degrees()):
            continue
        if filt.require_reduced and not is_reduced(graph):
            continue
        validated = validate_adg(graph)
        if filt.genus_equals is not None:
            if turaev_genus_graph(validated) != filt.genus_equals:
                continue
        filtered.append(validated)
    filtered.sort(key=lambda g: (g.n, g.edge_count, wl_hash(g)))
    return filtered


@dataclass
class CensusClass:
    """One doubled-path equivalence class found in the census."""

    representative: AdGraph
    contracted: AdGraph
    family: str | None
    parameters: tuple
    count: int = 1
    members: list[AdGraph] = field(default_factory=list)


def census(genus: int, filt: CensusFilter) -> list[CensusClass]:
    """Group the reduced census graphs of the given genus into doubled
    path equivalence classes via canonical contraction."""
    filt = replace(filt, require_reduced=True, genus_equals=genus)
    classes: list[CensusClass] = []
    for graph in enumerate_adgs(filt):
        contracted = canonical_contract(graph)
        for cls in classes:
            if isomorphic(contracted, cls.contracted)[0]:
                cls.count += 1
                cls.members.append(graph)
                break
        else:
            info = classify_genus(graph)
            classes.append(
                CensusClass(
                    representative=graph,
                    contracted=contracted,
                    family=info.family,
                    parameters=info.parameters,
                    count=1,
                    members=[graph],
                )
            )
    return classes
