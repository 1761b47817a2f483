"""Abstract alternating decomposition graphs.

An alternating decomposition graph is a loopless multigraph that is
planar and bipartite with every vertex of even degree.  Its Turaev genus
is computed by a recursion that never references link diagrams:

* isolated vertices contribute zero;
* contracting the two edges at a degree-two vertex preserves the genus;
* deleting a parallel pair adds one when the deletion keeps the
  component count, and nothing when it splits the component.

The recursion terminates because each step removes two edges, and a
graph with edges but no degree-two vertex always contains a parallel
pair.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, replace
from typing import Iterable, Sequence

import networkx as nx

from .errors import (
    HasLoopError,
    MalformedLineError,
    NotBipartiteError,
    NotEmbeddedError,
    NotPlanarError,
    NotValidatedError,
    OddDegreeError,
    TuraevError,
)
from .ribbon import RibbonGraph


@dataclass(frozen=True)
class AdGraph:
    """Loopless multigraph, optionally annotated with a bipartition and a
    per-component sphere embedding.

    ``edges`` keeps one entry per parallel copy.  ``rotations`` gives, for
    each vertex, the cyclic counterclockwise order of incident edge
    indices; every edge index appears exactly twice overall.
    """

    n: int
    edges: tuple[tuple[int, int], ...]
    bipartition: tuple[int, ...] | None = None
    rotations: tuple[tuple[int, ...], ...] | None = None

    def __post_init__(self):
        for u, v in self.edges:
            if u == v:
                raise HasLoopError(f"loop at vertex {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ValueError(f"edge ({u},{v}) out of range")
        if any(u > v for u, v in self.edges):
            object.__setattr__(
                self,
                "edges",
                tuple((min(u, v), max(u, v)) for u, v in self.edges),
            )
        if self.rotations is not None:
            seen: dict[int, int] = {}
            for rot in self.rotations:
                for e in rot:
                    seen[e] = seen.get(e, 0) + 1
            if len(self.rotations) != self.n or any(
                seen.get(i, 0) != 2 for i in range(len(self.edges))
            ):
                raise ValueError("rotation system inconsistent with edge list")

    # -- structure ---------------------------------------------------------

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def degrees(self) -> list[int]:
        deg = [0] * self.n
        for u, v in self.edges:
            deg[u] += 1
            deg[v] += 1
        return deg

    def components(self) -> list[list[int]]:
        parent = list(range(self.n))

        def find(i):
            while parent[i] != i:
                parent[i] = parent[parent[i]]
                i = parent[i]
            return i

        for u, v in self.edges:
            ru, rv = find(u), find(v)
            if ru != rv:
                parent[ru] = rv
        comps: dict[int, list[int]] = {}
        for i in range(self.n):
            comps.setdefault(find(i), []).append(i)
        return sorted(comps.values())

    def component_count(self) -> int:
        return len(self.components())

    def multiplicity(self) -> dict[tuple[int, int], int]:
        mult: dict[tuple[int, int], int] = {}
        for u, v in self.edges:
            key = (min(u, v), max(u, v))
            mult[key] = mult.get(key, 0) + 1
        return mult

    def relabeled(self, perm: Sequence[int]) -> "AdGraph":
        """Apply vertex permutation ``perm`` (old index -> new index)."""
        return AdGraph(self.n, tuple(
            (min(perm[u], perm[v]), max(perm[u], perm[v])) for u, v in self.edges
        ))

    def disjoint_union(self, other: "AdGraph") -> "AdGraph":
        shifted = tuple((u + self.n, v + self.n) for u, v in other.edges)
        return AdGraph(self.n + other.n, self.edges + shifted)

    def __repr__(self) -> str:
        return f"<AdGraph n={self.n} e={self.edge_count}>"


@dataclass(frozen=True)
class SimpleGraph:
    """Loopless graph without parallel edges."""

    n: int
    edges: frozenset[tuple[int, int]]

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def component_count(self) -> int:
        return AdGraph(self.n, tuple(self.edges)).component_count()


def simplify(graph: AdGraph | SimpleGraph) -> SimpleGraph:
    """Collapse every parallel class to a single edge."""
    if isinstance(graph, SimpleGraph):
        return graph
    return SimpleGraph(graph.n, frozenset(
        (min(u, v), max(u, v)) for u, v in graph.edges
    ))


def nullity(graph: AdGraph | SimpleGraph) -> int:
    """e - v + k, the rank of the cycle space."""
    return graph.edge_count - graph.n + graph.component_count()


# -- validation ------------------------------------------------------------------

def _bipartition_or_odd_cycle(graph: AdGraph) -> tuple[int, ...]:
    color = [-1] * graph.n
    adj: list[list[int]] = [[] for _ in range(graph.n)]
    for u, v in graph.edges:
        adj[u].append(v)
        adj[v].append(u)
    parent = [-1] * graph.n
    for start in range(graph.n):
        if color[start] >= 0:
            continue
        color[start] = 0
        queue = [start]
        while queue:
            u = queue.pop()
            for w in adj[u]:
                if color[w] < 0:
                    color[w] = color[u] ^ 1
                    parent[w] = u
                    queue.append(w)
                elif color[w] == color[u]:
                    # walk both vertices to the root to exhibit the odd cycle
                    pu, pw = [u], [w]
                    while parent[pu[-1]] >= 0:
                        pu.append(parent[pu[-1]])
                    while parent[pw[-1]] >= 0:
                        pw.append(parent[pw[-1]])
                    common = (set(pu) & set(pw))
                    cut = next(i for i, x in enumerate(pu) if x in common)
                    meet = pu[cut]
                    cyc = pu[: cut + 1] + list(
                        reversed(pw[: pw.index(meet)])
                    )
                    raise NotBipartiteError(cyc)
    return tuple(color)


def _component_planar(graph: AdGraph, comp: list[int]) -> bool:
    g = nx.Graph()
    g.add_nodes_from(comp)
    members = set(comp)
    for u, v in graph.edges:
        if u in members:
            g.add_edge(u, v)
    ok, _ = nx.check_planarity(g)
    return ok


def validate_adg(graph: AdGraph) -> AdGraph:
    """Check even degrees, bipartiteness, and per-component planarity.

    Returns the graph annotated with a bipartition.  Loops are already
    rejected at construction.
    """
    for v, d in enumerate(graph.degrees()):
        if d % 2:
            raise OddDegreeError(v, d)
    color = _bipartition_or_odd_cycle(graph)
    for comp in graph.components():
        if not _component_planar(graph, comp):
            raise NotPlanarError(comp)
    if graph.rotations is not None:
        check_sphere_embedding(graph)
    return replace(graph, bipartition=color)


def is_validated(graph: AdGraph) -> bool:
    return graph.bipartition is not None


# -- embeddings -----------------------------------------------------------------

def _half_edges(graph: AdGraph) -> tuple[dict, dict]:
    """Half-edge maps for an embedded graph.

    A half-edge is a (vertex, position) slot of the rotation tables;
    ``partner`` pairs the two slots of each edge, ``succ`` steps to the
    next slot counterclockwise at the same vertex.
    """
    if graph.rotations is None:
        raise NotEmbeddedError("graph carries no rotation system")
    occurrences: dict[int, list[tuple[int, int]]] = {}
    succ: dict[tuple[int, int], tuple[int, int]] = {}
    for v, rot in enumerate(graph.rotations):
        for i, e in enumerate(rot):
            occurrences.setdefault(e, []).append((v, i))
            succ[(v, i)] = (v, (i + 1) % len(rot))
    partner = {}
    for e, occ in occurrences.items():
        a, b = occ
        partner[a], partner[b] = b, a
    return partner, succ


def embedded_face_count(graph: AdGraph) -> dict[int, int]:
    """Faces per component root vertex, from the rotation system."""
    partner, succ = _half_edges(graph)
    comp_root = {}
    for comp in graph.components():
        for v in comp:
            comp_root[v] = comp[0]
    counts = {comp[0]: 0 for comp in graph.components()}
    seen = set()
    for h0 in partner:
        if h0 in seen:
            continue
        counts[comp_root[h0[0]]] += 1
        h = h0
        while h not in seen:
            seen.add(h)
            h = succ[partner[h]]
    # an isolated vertex has a single disk face
    for comp in graph.components():
        if all(not graph.rotations[v] for v in comp):
            counts[comp[0]] = 1
    return counts


def check_sphere_embedding(graph: AdGraph) -> None:
    """Euler check V - E + F = 2 on every component."""
    faces = embedded_face_count(graph)
    mult_by_comp: dict[int, int] = {}
    for comp in graph.components():
        members = set(comp)
        e = sum(1 for u, v in graph.edges if u in members)
        chi = len(comp) - e + faces[comp[0]]
        if chi != 2:
            raise NotPlanarError(comp)


def planar_rotations(graph: AdGraph) -> tuple[tuple[int, ...], ...]:
    """Compute a sphere rotation system from a planarity certificate.

    networkx embeds the simplification; parallel copies are then bundled
    next to each other, ascending at the lower endpoint and descending at
    the other, which closes each extra copy into a bigon face.
    """
    g = nx.Graph()
    g.add_nodes_from(range(graph.n))
    by_pair: dict[tuple[int, int], list[int]] = {}
    for i, (u, v) in enumerate(graph.edges):
        key = (min(u, v), max(u, v))
        by_pair.setdefault(key, []).append(i)
    g.add_edges_from(by_pair)
    ok, emb = nx.check_planarity(g)
    if not ok:
        raise NotPlanarError(list(range(graph.n)))
    data = emb.get_data()
    rotations = []
    for v in range(graph.n):
        rot: list[int] = []
        for w in data.get(v, []):
            key = (min(v, w), max(v, w))
            bundle = sorted(by_pair[key])
            rot.extend(bundle if v == key[0] else reversed(bundle))
        rotations.append(tuple(rot))
    embedded = replace(graph, rotations=tuple(rotations))
    check_sphere_embedding(embedded)
    return tuple(rotations)


def to_ribbon(graph: AdGraph, twisted: bool = False) -> RibbonGraph:
    """Ribbon graph of an embedded AdGraph; half-edge ids are 2e and
    2e+1 for the first and second rotation occurrence of edge e."""
    if graph.rotations is None:
        raise NotEmbeddedError("graph carries no rotation system")
    seen: dict[int, int] = {}
    vertices = []
    for rot in graph.rotations:
        row = []
        for e in rot:
            side = seen.get(e, 0)
            seen[e] = side + 1
            row.append(2 * e + side)
        vertices.append(tuple(row))
    edges = tuple((2 * e, 2 * e + 1, twisted) for e in range(len(graph.edges)))
    return RibbonGraph(tuple(vertices), edges)


# -- the genus recursion ------------------------------------------------------------


class _FirstChoice:
    """Deterministic tie-breaking: lowest vertex, then lowest edge index."""

    def pick(self, options):
        return options[0]


class RandomChoice:
    def __init__(self, seed: int):
        self.rng = random.Random(seed)

    def pick(self, options):
        return options[self.rng.randrange(len(options))]


def _connected_after(edges: list[tuple[int, int]], skip: tuple[int, int],
                     source: int, target: int) -> bool:
    adj: dict[int, list[int]] = {}
    for i, (u, v) in enumerate(edges):
        if i in skip:
            continue
        adj.setdefault(u, []).append(v)
        adj.setdefault(v, []).append(u)
    if source == target:
        return True
    seen = {source}
    stack = [source]
    while stack:
        u = stack.pop()
        for w in adj.get(u, ()):
            if w == target:
                return True
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return False


def turaev_genus_graph(graph: AdGraph, chooser=None) -> int:
    """Turaev genus of a validated alternating decomposition graph.

    ``chooser`` may randomize which degree-two vertex or parallel pair is
    processed; the result is choice-independent.
    """
    if not is_validated(graph):
        raise NotValidatedError("call validate_adg first")
    return _genus_recursion(graph.edges, chooser or _FirstChoice())


def _genus_recursion(edge_list: Iterable[tuple[int, int]], chooser) -> int:
    edges = list(edge_list)
    genus = 0
    while edges:
        deg: dict[int, int] = {}
        for u, v in edges:
            deg[u] = deg.get(u, 0) + 1
            deg[v] = deg.get(v, 0) + 1
        deg2 = sorted(v for v, d in deg.items() if d == 2)
        if deg2:
            v = chooser.pick(deg2)
            inc = [i for i, e in enumerate(edges) if v in e]
            i1, i2 = inc
            a = edges[i1][0] if edges[i1][1] == v else edges[i1][1]
            b = edges[i2][0] if edges[i2][1] == v else edges[i2][1]
            target = a if a == b else min(a, b)
            merged = {v: target, a: target, b: target}
            nxt = []
            for i, (x, y) in enumerate(edges):
                if i in (i1, i2):
                    continue
                x, y = merged.get(x, x), merged.get(y, y)
                if x == y:
                    raise TuraevError(
                        "degree-two contraction created a loop; "
                        "input was not bipartite"
                    )
                nxt.append((min(x, y), max(x, y)))
            edges = nxt
        else:
            mult: dict[tuple[int, int], list[int]] = {}
            for i, (u, v) in enumerate(edges):
                mult.setdefault((min(u, v), max(u, v)), []).append(i)
            pairs = sorted(k for k, idx in mult.items() if len(idx) >= 2)
            if not pairs:
                raise TuraevError(
                    "no degree-two vertex and no parallel pair; "
                    "input was not a valid alternating decomposition graph"
                )
            u, v = chooser.pick(pairs)
            i1, i2 = mult[(u, v)][:2]
            if _connected_after(edges, (i1, i2), u, v):
                genus += 1
            edges = [e for i, e in enumerate(edges) if i not in (i1, i2)]
    return genus


# -- graph file format -----------------------------------------------------------------

def parse_graph_file(text: str) -> AdGraph:
    """Parse the graph file format.

    ``v N`` once, then ``e i j`` lines with 1-based endpoints, then
    optional ``rot i : k1 k2 ...`` lines giving the cyclic edge order at
    vertex i (edge indices 1-based in file order).
    """
    n = None
    edges: list[tuple[int, int]] = []
    rot_lines: dict[int, tuple[int, ...]] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.replace(":", " : ").split()
        if parts[0] == "v" and len(parts) == 2:
            n = int(parts[1])
        elif parts[0] == "e" and len(parts) == 3:
            if n is None:
                raise MalformedLineError(lineno, line, "edge before 'v' line")
            i, j = int(parts[1]), int(parts[2])
            if i == j:
                raise HasLoopError(f"line {lineno}: loop at vertex {i}")
            if not (1 <= i <= n and 1 <= j <= n):
                raise MalformedLineError(lineno, line, "vertex out of range")
            edges.append((min(i, j) - 1, max(i, j) - 1))
        elif parts[0] == "rot" and len(parts) >= 3 and parts[2] == ":":
            rot_lines[int(parts[1]) - 1] = tuple(int(p) - 1 for p in parts[3:])
        else:
            raise MalformedLineError(lineno, line, "unknown directive")
    if n is None:
        raise MalformedLineError(0, text[:30], "missing 'v' line")
    rotations = None
    if rot_lines:
        rotations = tuple(rot_lines.get(v, ()) for v in range(n))
    return AdGraph(n, tuple(edges), rotations=rotations)


def write_graph_file(graph: AdGraph) -> str:
    lines = [f"v {graph.n}"]
    lines += [f"e {u + 1} {v + 1}" for u, v in graph.edges]
    if graph.rotations is not None:
        for v, rot in enumerate(graph.rotations):
            if rot:
                lines.append(f"rot {v + 1} : " + " ".join(str(e + 1) for e in rot))
    return "\n".join(lines) + "\n"
