"""Graph families, moves, reducedness, isomorphism, and classification.

The constructors build the named families of alternating decomposition
graphs: doubled paths and cycles, doubled theta graphs, the two
K4-based genus-two families, and the genus-zero shapes (doubled trees,
four-cycles with legs, and the two-sum of K4-minus-an-edge pieces).
Family graphs are not necessarily bipartite; bipartiteness depends on
the parameters and is checked by the caller when needed.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, replace
from typing import Iterable, Sequence

from .adgraph import (
    AdGraph,
    planar_rotations,
    simplify,
    turaev_genus_graph,
    validate_adg,
)
from .errors import (
    BadParametersError,
    ClassificationFailureError,
    InvalidSiteError,
)

# ---------------------------------------------------------------------------
# constructors


def _with_embedding(graph: AdGraph) -> AdGraph:
    return replace(graph, rotations=planar_rotations(graph))


def _doubled(edges: Iterable[tuple[int, int]]) -> list[tuple[int, int]]:
    out = []
    for u, v in edges:
        out += [(u, v), (u, v)]
    return out


def doubled_path(k: int) -> AdGraph:
    """k+1 vertices in a chain, every edge doubled; k = 0 is a vertex."""
    if k < 0:
        raise BadParametersError("doubled path length must be >= 0")
    return _with_embedding(
        AdGraph(k + 1, tuple(_doubled((i, i + 1) for i in range(k))))
    )


def doubled_cycle(i: int) -> AdGraph:
    """Doubled cycle of length i >= 2 (i = 1 would need loops)."""
    if i < 2:
        raise BadParametersError("doubled cycle length must be >= 2")
    return _with_embedding(
        AdGraph(i, tuple(_doubled((j, (j + 1) % i) for j in range(i))))
    )


def doubled_theta(i: int, j: int, k: int) -> AdGraph:
    """Doubled version of the graph made of two junction vertices tied by
    three paths of lengths i, j, k (identify two paths of length k in the
    cycles of lengths i+k and j+k)."""
    if min(i, j, k) < 1:
        raise BadParametersError("theta path lengths must be >= 1")
    edges: list[tuple[int, int]] = []
    n = 2
    for length in (i, j, k):
        prev = 0
        for step in range(length):
            nxt = 1 if step == length - 1 else n
            if nxt == n:
                n += 1
            edges.append((prev, nxt))
            prev = nxt
    return _with_embedding(AdGraph(n, tuple(_doubled(edges))))


def _k4_with_paths(replaced: Sequence[tuple[int, int, int]],
                   removed: Sequence[tuple[int, int]] = ()) -> AdGraph:
    """K4 on vertices 0..3 with the listed edges replaced by doubled
    paths (u, v, length) and the listed edges removed."""
    k4 = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]
    skip = {tuple(sorted(e[:2])) for e in replaced} | {
        tuple(sorted(e)) for e in removed
    }
    edges = [e for e in k4 if e not in skip]
    n = 4
    doubled: list[tuple[int, int]] = []
    for u, v, length in replaced:
        prev = u
        for step in range(length):
            nxt = v if step == length - 1 else n
            if nxt == n:
                n += 1
            doubled.append((prev, nxt))
            prev = nxt
    return AdGraph(n, tuple(edges + _doubled(doubled)))


def k4_doubled_paths(p: int, q: int) -> AdGraph:
    """K4 with two non-adjacent edges replaced by doubled paths."""
    if p < 1 or q < 1:
        raise BadParametersError("path lengths must be >= 1")
    return _with_embedding(_k4_with_paths([(0, 1, p), (2, 3, q)]))


def k4_one_path(p: int) -> AdGraph:
    """K4 with a single edge replaced by a doubled path of length p."""
    if p < 1:
        raise BadParametersError("path length must be >= 1")
    return _with_embedding(_k4_with_paths([(0, 1, p)]))


def k4_two_sum(p: int, q: int) -> AdGraph:
    """Two-sum of K4(p) and K4(q) along the edge opposite the paths."""
    g1, g2 = k4_one_path(p), k4_one_path(q)
    e1 = g1.edges.index((2, 3))
    e2 = g2.edges.index((2, 3))
    return _with_embedding(two_sum(g1, e1, g2, e2))


def c4_legs(p: int, q: int, r: int, s: int) -> AdGraph:
    """Four-cycle with pendant doubled paths of the given lengths
    attached at its vertices in cyclic order."""
    if min(p, q, r, s) < 0:
        raise BadParametersError("leg lengths must be >= 0")
    edges = [(0, 1), (1, 2), (2, 3), (0, 3)]
    n = 4
    doubled: list[tuple[int, int]] = []
    for corner, length in enumerate((p, q, r, s)):
        prev = corner
        for _ in range(length):
            doubled.append((prev, n))
            prev = n
            n += 1
    return _with_embedding(AdGraph(n, tuple(edges + _doubled(doubled))))


def k4_tilde(p: int, q: int) -> AdGraph:
    """K4 minus one edge, with pendant doubled paths of lengths p and q
    at the two vertices that lost the edge (vertices 2 and 3)."""
    if p < 0 or q < 0:
        raise BadParametersError("leg lengths must be >= 0")
    base = _k4_with_paths([], removed=[(2, 3)])
    edges = list(base.edges)
    n = base.n
    doubled: list[tuple[int, int]] = []
    for corner, length in ((2, p), (3, q)):
        prev = corner
        for _ in range(length):
            doubled.append((prev, n))
            prev = n
            n += 1
    return _with_embedding(AdGraph(n, tuple(edges + _doubled(doubled))))


def k4_tilde_two_sum(p: int, q: int, r: int, s: int) -> AdGraph:
    """Two-sum of K4~(p, q) and K4~(r, s) along their hub edges (0, 1)."""
    g1, g2 = k4_tilde(p, q), k4_tilde(r, s)
    e1 = g1.edges.index((0, 1))
    e2 = g2.edges.index((0, 1))
    return _with_embedding(two_sum(g1, e1, g2, e2))


def doubled_tree(parents: Sequence[int]) -> AdGraph:
    """Doubled tree from a parent list: vertex i+1 hangs under
    parents[i] (so a tree on len(parents)+1 vertices)."""
    n = len(parents) + 1
    edges = []
    for i, p in enumerate(parents, start=1):
        if not 0 <= p < i:
            raise BadParametersError("parents[i] must be an earlier vertex")
        edges.append((p, i))
    return _with_embedding(AdGraph(n, tuple(_doubled(edges))))


def isolated_vertices(n: int) -> AdGraph:
    if n < 0:
        raise BadParametersError("need n >= 0 vertices")
    return AdGraph(n, (), rotations=tuple(() for _ in range(n)))


@dataclass(frozen=True)
class FamilySpec:
    """Named family plus integer parameters, e.g. ('DoubledCycle', (4,))."""

    tag: str
    params: tuple = ()


_FAMILY_BUILDERS = {
    "DoubledPath": doubled_path,
    "DoubledCycle": doubled_cycle,
    "Theta": doubled_theta,
    "K4pq": k4_doubled_paths,
    "K4p": k4_one_path,
    "K4TwoSum": k4_two_sum,
    "C4Legs": c4_legs,
    "K4tilde": k4_tilde,
    "K4tildeTwoSum": k4_tilde_two_sum,
    "DoubledTree": lambda *ps: doubled_tree(ps),
    "IsolatedVertices": isolated_vertices,
}


def make_family(spec: FamilySpec) -> AdGraph:
    if spec.tag == "DisjointUnion":
        parts = [make_family(s) for s in spec.params]
        if not parts:
            raise BadParametersError("empty disjoint union")
        out = parts[0]
        for part in parts[1:]:
            out = out.disjoint_union(part)
        return _with_embedding(AdGraph(out.n, out.edges))
    if spec.tag == "OneSum":
        specs, picks = spec.params
        parts = [make_family(s) for s in specs]
        out = parts[0]
        for part, (v_here, v_there) in zip(parts[1:], picks):
            merged = out.disjoint_union(part)
            out = one_sum_components(merged, v_here, out.n + v_there)
        return _with_embedding(AdGraph(out.n, out.edges))
    builder = _FAMILY_BUILDERS.get(spec.tag)
    if builder is None:
        raise BadParametersError(f"unknown family tag {spec.tag!r}")
    return builder(*spec.params)


# ---------------------------------------------------------------------------
# moves


@dataclass(frozen=True)
class Move:
    kind: str
    site: tuple = ()


def _remove_vertex(n: int, edges: list[tuple[int, int]], gone: int) -> AdGraph:
    relabel = [v - (v > gone) for v in range(n)]
    return AdGraph(
        n - 1,
        tuple(
            (min(relabel[u], relabel[v]), max(relabel[u], relabel[v]))
            for u, v in edges
        ),
    )


def doubled_pendant(graph: AdGraph, v: int) -> AdGraph:
    if not 0 <= v < graph.n:
        raise InvalidSiteError(f"vertex {v} out of range")
    w = graph.n
    return AdGraph(graph.n + 1, graph.edges + ((v, w), (v, w)))


def two_path_extend(graph: AdGraph, v: int, edge_set_a: Iterable[int]) -> AdGraph:
    """Split vertex v into v and a new vertex, route the edge sets A and
    its complement to the two halves, and bridge them through a fresh
    degree-two vertex.  Both sets must have odd size."""
    inc = [i for i, e in enumerate(graph.edges) if v in e]
    a = set(edge_set_a)
    if not a <= set(inc):
        raise InvalidSiteError("edge set A must consist of edges at v")
    b = [i for i in inc if i not in a]
    if len(a) % 2 == 0 or len(b) % 2 == 0:
        raise InvalidSiteError("both edge sets must have odd size")
    v2 = graph.n
    v3 = graph.n + 1
    edges = []
    for i, (x, y) in enumerate(graph.edges):
        if i in a or i not in inc:
            edges.append((x, y))
        else:
            x2, y2 = (v2, y) if x == v else (x, v2)
            edges.append((min(x2, y2), max(x2, y2)))
    edges += [(v, v3), (v2, v3)]
    return AdGraph(graph.n + 2, tuple(edges))


def one_sum_components(graph: AdGraph, v1: int, v2: int) -> AdGraph:
    """Identify two vertices that lie in different components."""
    comp_of = {}
    for idx, comp in enumerate(graph.components()):
        for v in comp:
            comp_of[v] = idx
    if v1 == v2 or comp_of[v1] == comp_of[v2]:
        raise InvalidSiteError("one-sum vertices must lie in different components")
    lo, hi = min(v1, v2), max(v1, v2)
    edges = [
        (lo if x == hi else x, lo if y == hi else y) for x, y in graph.edges
    ]
    edges = [(min(x, y), max(x, y)) for x, y in edges]
    return _remove_vertex(graph.n, edges, hi)


def two_sum(g1: AdGraph, e1: int, g2: AdGraph, e2: int) -> AdGraph:
    """Glue g2 onto g1 by identifying the endpoints of edge e1 with the
    endpoints of edge e2 (low with low), then delete the glued edge."""
    u1, v1 = g1.edges[e1]
    u2, v2 = g2.edges[e2]
    mapping = {}
    nxt = g1.n
    for w in range(g2.n):
        if w == u2:
            mapping[w] = u1
        elif w == v2:
            mapping[w] = v1
        else:
            mapping[w] = nxt
            nxt += 1
    edges = [e for i, e in enumerate(g1.edges) if i != e1]
    for i, (x, y) in enumerate(g2.edges):
        if i == e2:
            continue
        a, b = mapping[x], mapping[y]
        edges.append((min(a, b), max(a, b)))
    return AdGraph(nxt, tuple(edges))


def _pendant_ineligible(graph: AdGraph, v: int) -> str | None:
    """Interior doubled-path vertex test: degree 4, exactly two distinct
    neighbors, two parallel edges to each."""
    nbrs: dict[int, int] = {}
    for u, w in graph.edges:
        if v == u:
            nbrs[w] = nbrs.get(w, 0) + 1
        elif v == w:
            nbrs[u] = nbrs.get(u, 0) + 1
    if sum(nbrs.values()) != 4 or len(nbrs) != 2 or set(nbrs.values()) != {2}:
        return "vertex is not an interior doubled-path vertex"
    return None


def doubled_path_contract(graph: AdGraph, v: int, neighbor: int) -> AdGraph:
    """Contract the doubled pair between interior vertex v and one of its
    two neighbors, merging v into the neighbor."""
    why = _pendant_ineligible(graph, v)
    if why:
        raise InvalidSiteError(why)
    pair = [i for i, e in enumerate(graph.edges)
            if set(e) == {v, neighbor}]
    if len(pair) != 2:
        raise InvalidSiteError(f"no doubled pair between {v} and {neighbor}")
    edges = [
        e for i, e in enumerate(graph.edges) if i not in pair
    ]
    edges = [
        (neighbor if x == v else x, neighbor if y == v else y) for x, y in edges
    ]
    edges = [(min(x, y), max(x, y)) for x, y in edges]
    return _remove_vertex(graph.n, edges, v)


def doubled_path_extend(graph: AdGraph, u: int, v: int) -> AdGraph:
    """Lengthen the doubled path through the parallel pair (u, v) by
    inserting a fresh interior vertex."""
    pair = [i for i, e in enumerate(graph.edges) if set(e) == {u, v}]
    if len(pair) < 2:
        raise InvalidSiteError(f"no parallel pair between {u} and {v}")
    keep = [e for i, e in enumerate(graph.edges) if i not in pair[:2]]
    w = graph.n
    return AdGraph(graph.n + 1, tuple(keep + [(u, w), (u, w), (v, w), (v, w)]))


def apply_move(graph: AdGraph, move: Move) -> AdGraph:
    kind = move.kind
    if kind == "DoubledPendant":
        return doubled_pendant(graph, *move.site)
    if kind == "TwoPathExtend":
        v, edge_set = move.site
        return two_path_extend(graph, v, edge_set)
    if kind == "OneSumComponents":
        return one_sum_components(graph, *move.site)
    if kind == "TwoSum":
        e1, other, e2 = move.site
        return two_sum(graph, e1, other, e2)
    if kind == "DoubledPathContract":
        return doubled_path_contract(graph, *move.site)
    if kind == "DoubledPathExtend":
        return doubled_path_extend(graph, *move.site)
    raise InvalidSiteError(f"unknown move kind {kind!r}")


# ---------------------------------------------------------------------------
# canonical contraction and reducedness


def contractible_sites(graph: AdGraph) -> list[int]:
    return [v for v in range(graph.n) if _pendant_ineligible(graph, v) is None]


def canonical_contract(graph: AdGraph, chooser=None) -> AdGraph:
    """Contract interior doubled-path vertices until none remain.

    Deterministic site order (lowest vertex, merged into its lower
    neighbor); a chooser may randomize the order, and the result is
    independent of it up to isomorphism.
    """
    g = AdGraph(graph.n, graph.edges)
    while True:
        sites = contractible_sites(g)
        if not sites:
            return g
        v = sites[0] if chooser is None else chooser.pick(sites)
        nbrs = sorted({u for e in g.edges if v in e for u in e if u != v})
        g = doubled_path_contract(g, v, nbrs[0])


def is_reduced(graph: AdGraph) -> bool:
    """A single vertex, or every component 3-edge-connected; single-vertex
    components are only allowed when the whole graph is one vertex."""
    if graph.n == 1 and not graph.edges:
        return True
    comps = graph.components()
    for comp in comps:
        if len(comp) == 1:
            return False
        members = set(comp)
        idx = [i for i, e in enumerate(graph.edges) if e[0] in members]
        if not _k_edge_connected(members, [graph.edges[i] for i in idx], 3):
            return False
    return True


def _k_edge_connected(vertices: set[int], edges: list[tuple[int, int]], k: int) -> bool:
    """Brute-force: survives deletion of any fewer-than-k edges."""
    import itertools

    def connected(skip: set[int]) -> bool:
        adj: dict[int, list[int]] = {v: [] for v in vertices}
        for i, (u, w) in enumerate(edges):
            if i in skip:
                continue
            adj[u].append(w)
            adj[w].append(u)
        start = next(iter(vertices))
        seen = {start}
        stack = [start]
        while stack:
            u = stack.pop()
            for w in adj[u]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == len(vertices)

    for size in range(1, k):
        for combo in itertools.combinations(range(len(edges)), size):
            if not connected(set(combo)):
                return False
    return True


# ---------------------------------------------------------------------------
# multigraph isomorphism


def _mult_adj(graph: AdGraph) -> list[dict[int, int]]:
    adj: list[dict[int, int]] = [dict() for _ in range(graph.n)]
    for u, v in graph.edges:
        adj[u][v] = adj[u].get(v, 0) + 1
        adj[v][u] = adj[v].get(u, 0) + 1
    return adj


def _wl_colors(graph: AdGraph, rounds: int | None = None) -> list[int]:
    """Weisfeiler-Lehman refinement with edge multiplicities."""
    adj = _mult_adj(graph)
    colors = [sum(adj[v].values()) for v in range(graph.n)]
    rounds = graph.n if rounds is None else rounds
    for _ in range(rounds):
        sigs = [
            (colors[v], tuple(sorted((m, colors[w]) for w, m in adj[v].items())))
            for v in range(graph.n)
        ]
        table = {s: i for i, s in enumerate(sorted(set(sigs)))}
        nxt = [table[s] for s in sigs]
        if nxt == colors:
            break
        colors = nxt
    return colors


def wl_hash(graph: AdGraph) -> tuple:
    """Isomorphism-invariant bucket key (collisions possible, exact
    matching required within a bucket)."""
    colors = _wl_colors(graph)
    return (graph.n, graph.edge_count, tuple(sorted(colors)))


def _find_isomorphisms(g1: AdGraph, g2: AdGraph, all_maps: bool) -> list[list[int]]:
    if g1.n != g2.n or g1.edge_count != g2.edge_count:
        return []
    adj1, adj2 = _mult_adj(g1), _mult_adj(g2)
    col1, col2 = _wl_colors(g1), _wl_colors(g2)
    if sorted(col1) != sorted(col2):
        return []
    by_color: dict[int, list[int]] = {}
    for v, c in enumerate(col2):
        by_color.setdefault(c, []).append(v)
    # map rare colors first, preferring vertices attached to mapped ones
    order = sorted(range(g1.n), key=lambda v: (len(by_color[col1[v]]), v))
    ordered: list[int] = []
    pending = set(order)
    while pending:
        anchored = [v for v in order if v in pending and any(
            w not in pending for w in adj1[v]
        )]
        pick = anchored[0] if anchored else next(v for v in order if v in pending)
        ordered.append(pick)
        pending.discard(pick)
    mapping = [-1] * g1.n
    used = [False] * g2.n
    found: list[list[int]] = []

    def extend(i: int) -> bool:
        if i == len(ordered):
            found.append(mapping.copy())
            return not all_maps
        v = ordered[i]
        for w in by_color[col1[v]]:
            if used[w]:
                continue
            ok = True
            for x, m in adj1[v].items():
                if mapping[x] >= 0 and adj2[w].get(mapping[x], 0) != m:
                    ok = False
                    break
            if ok and sum(adj2[w].values()) == sum(adj1[v].values()):
                mapping[v] = w
                used[w] = True
                if extend(i + 1):
                    return True
                mapping[v] = -1
                used[w] = False
        return False

    extend(0)
    return found


def isomorphic(g1: AdGraph, g2: AdGraph) -> tuple[bool, list[int] | None]:
    """Multigraph isomorphism respecting multiplicities; returns a vertex
    bijection witness when one exists."""
    maps = _find_isomorphisms(g1, g2, all_maps=False)
    return (True, maps[0]) if maps else (False, None)


def automorphisms(graph: AdGraph) -> list[list[int]]:
    return _find_isomorphisms(graph, graph, all_maps=True)


# ---------------------------------------------------------------------------
# recognizers and classification


def recognize_doubled_path(graph: AdGraph) -> int | None:
    """Length when the graph is a single doubled path (0 = one vertex)."""
    if graph.n == 1 and not graph.edges:
        return 0
    mult = graph.multiplicity()
    if any(m != 2 for m in mult.values()) or len(mult) != graph.n - 1:
        return None
    si = simplify(graph)
    if si.component_count() != 1:
        return None
    deg = AdGraph(graph.n, tuple(si.edges)).degrees()
    if sorted(deg) != [1, 1] + [2] * (graph.n - 2):
        return None
    return graph.n - 1


def recognize_doubled_cycle(graph: AdGraph) -> int | None:
    """Cycle length when the graph is a single doubled cycle."""
    if graph.n == 2:
        mult = graph.multiplicity()
        if list(mult.values()) == [4]:
            return 2
        return None
    mult = graph.multiplicity()
    if any(m != 2 for m in mult.values()) or len(mult) != graph.n:
        return None
    if graph.component_count() != 1:
        return None
    deg = AdGraph(graph.n, tuple(simplify(graph).edges)).degrees()
    if any(d != 2 for d in deg):
        return None
    return graph.n


def recognize_doubled_tree(graph: AdGraph) -> tuple[int, ...] | None:
    """Parent list when the graph is a doubled tree (connected, every
    edge doubled, underlying graph acyclic)."""
    mult = graph.multiplicity()
    if any(m != 2 for m in mult.values()):
        return None
    if len(mult) != graph.n - 1 or graph.component_count() != 1:
        return None
    adj: dict[int, list[int]] = {v: [] for v in range(graph.n)}
    for u, v in mult:
        adj[u].append(v)
        adj[v].append(u)
    parent = {0: None}
    order = [0]
    stack = [0]
    while stack:
        u = stack.pop()
        for w in adj[u]:
            if w not in parent:
                parent[w] = u
                order.append(w)
                stack.append(w)
    if len(parent) != graph.n:
        return None
    rank = {v: i for i, v in enumerate(order)}
    return tuple(rank[parent[v]] for v in order[1:])


def _maximal_doubled_paths(graph: AdGraph):
    """Split the doubled part into maximal doubled paths.

    Returns (segments, singles) where each segment is the vertex chain
    of one maximal doubled path.
    """
    mult = graph.multiplicity()
    doubled_adj: dict[int, list[int]] = {}
    for (u, v), m in mult.items():
        if m == 2:
            doubled_adj.setdefault(u, []).append(v)
            doubled_adj.setdefault(v, []).append(u)
    interior = set(contractible_sites(graph))
    segments = []
    seen_pairs = set()
    for start in sorted(doubled_adj):
        if start in interior:
            continue
        for first in sorted(doubled_adj[start]):
            if (start, first) in seen_pairs:
                continue
            chain = [start, first]
            seen_pairs.add((start, first))
            seen_pairs.add((first, start))
            while chain[-1] in interior:
                nxt = next(
                    w for w in doubled_adj[chain[-1]] if w != chain[-2]
                )
                seen_pairs.add((chain[-1], nxt))
                seen_pairs.add((nxt, chain[-1]))
                chain.append(nxt)
            segments.append(chain)
    # each path found twice, once from each end
    unique = []
    listed = set()
    for seg in segments:
        key = (seg[0], seg[1], seg[-1], len(seg))
        rkey = (seg[-1], seg[-2], seg[0], len(seg))
        if key in listed or rkey in listed:
            continue
        listed.add(key)
        unique.append(seg)
    singles = [(u, v) for (u, v), m in mult.items() if m == 1]
    return unique, singles


@dataclass(frozen=True)
class Classification:
    genus: int
    is_reduced: bool
    family: str | None = None
    parameters: tuple = ()


_GENUS2_FORMS = (
    ("doubled-cycles-disjoint",
     lambda: make_family(FamilySpec("DisjointUnion", (
         FamilySpec("DoubledCycle", (2,)), FamilySpec("DoubledCycle", (2,))))),
     ),
    ("doubled-cycles-one-sum",
     lambda: make_family(FamilySpec("OneSum", (
         (FamilySpec("DoubledCycle", (2,)), FamilySpec("DoubledCycle", (2,))),
         ((0, 0),)))),
     ),
    ("doubled-theta", lambda: doubled_theta(1, 1, 1)),
    ("k4-doubled-paths", lambda: k4_doubled_paths(1, 1)),
    ("k4-two-sum", lambda: k4_two_sum(1, 1)),
)


def genus2_minimal_forms() -> list[tuple[str, AdGraph]]:
    return [(tag, build()) for tag, build in _GENUS2_FORMS]


def _classify_genus2(graph: AdGraph) -> tuple[str, tuple]:
    contracted = canonical_contract(graph)
    matches = [
        tag for tag, form in genus2_minimal_forms()
        if isomorphic(contracted, AdGraph(form.n, form.edges))[0]
    ]
    if len(matches) != 1:
        raise ClassificationFailureError(
            f"reduced genus-2 graph matched {matches or 'no'} minimal forms; "
            f"this contradicts the classification"
        )
    tag = matches[0]
    segments, _ = _maximal_doubled_paths(graph)
    lengths = tuple(sorted(len(s) - 1 for s in segments))
    if tag == "doubled-cycles-disjoint":
        comps = graph.components()
        params = tuple(sorted(
            recognize_doubled_cycle(_induced(graph, comp)) for comp in comps
        ))
    elif tag == "doubled-cycles-one-sum":
        deg = graph.degrees()
        hub = deg.index(8)
        params = _one_sum_cycle_lengths(graph, hub)
    elif tag == "doubled-theta":
        params = _theta_params(graph)
    else:
        params = lengths
    rebuilt = {
        "doubled-cycles-disjoint": lambda: make_family(
            FamilySpec("DisjointUnion", tuple(
                FamilySpec("DoubledCycle", (i,)) for i in params))),
        "doubled-cycles-one-sum": lambda: make_family(
            FamilySpec("OneSum", (
                tuple(FamilySpec("DoubledCycle", (i,)) for i in params),
                ((0, 0),)))),
        "doubled-theta": lambda: doubled_theta(*params),
        "k4-doubled-paths": lambda: k4_doubled_paths(*params),
        "k4-two-sum": lambda: k4_two_sum(*params),
    }[tag]()
    ok, _ = isomorphic(graph, AdGraph(rebuilt.n, rebuilt.edges))
    if not ok:
        raise ClassificationFailureError(
            f"parameter recovery for {tag} with {params} failed verification"
        )
    return tag, params


def _induced(graph: AdGraph, comp: list[int]) -> AdGraph:
    members = {v: i for i, v in enumerate(sorted(comp))}
    edges = tuple(
        (members[u], members[v]) for u, v in graph.edges if u in members
    )
    return AdGraph(len(comp), edges)


def _one_sum_cycle_lengths(graph: AdGraph, hub: int) -> tuple:
    """Cycle lengths of two doubled cycles glued at ``hub``: deleting the
    hub leaves one doubled path per cycle, one vertex shorter."""
    keep = [v for v in range(graph.n) if v != hub]
    index = {v: i for i, v in enumerate(keep)}
    edges = tuple(
        (index[u], index[v]) for u, v in graph.edges if hub not in (u, v)
    )
    rest = AdGraph(len(keep), edges)
    sizes = sorted(len(c) for c in rest.components())
    return tuple(s + 1 for s in sizes)


def _theta_params(graph: AdGraph) -> tuple:
    """Path lengths (i, j, k) of a doubled theta: walk the doubled-path
    chains between the two degree-six junctions; a multiplicity of 2m
    directly between them accounts for m paths of length one."""
    deg = graph.degrees()
    junctions = [v for v in range(graph.n) if deg[v] == 6]
    if len(junctions) != 2:
        raise ClassificationFailureError("doubled theta needs two junctions")
    j1, j2 = junctions
    mult = graph.multiplicity()
    direct = mult.get((min(j1, j2), max(j1, j2)), 0)
    lengths = [1] * (direct // 2)
    seen = set()
    for (u, v), m in sorted(mult.items()):
        if m != 2 or j1 not in (u, v):
            continue
        start = u if v == j1 else v
        if start in seen or start == j2:
            continue
        length = 1
        prev, cur = j1, start
        while cur != j2:
            seen.add(cur)
            nxt = next(
                w
                for (a, b), mm in mult.items()
                if mm == 2 and cur in (a, b)
                for w in (a, b)
                if w != cur and w != prev
            )
            prev, cur = cur, nxt
            length += 1
        lengths.append(length)
    return tuple(sorted(lengths))


def _classify_genus0_shape(graph: AdGraph) -> tuple[str, tuple] | None:
    """Match against the genus-zero shapes with at most four degree-two
    vertices: two doubled paths, a doubled tree, a four-cycle with legs,
    or the two-sum of two K4-minus-an-edge pieces."""
    comps = graph.components()
    if len(comps) == 2:
        lens = [recognize_doubled_path(_induced(graph, c)) for c in comps]
        if all(l is not None and l >= 1 for l in lens):
            return "two-doubled-paths", tuple(sorted(lens))
    if len(comps) != 1:
        return None
    parents = recognize_doubled_tree(graph)
    if parents is not None:
        rebuilt = doubled_tree(parents)
        if isomorphic(graph, AdGraph(rebuilt.n, rebuilt.edges))[0]:
            leaves = sum(1 for d in graph.degrees() if d == 2)
            return "doubled-tree", (leaves,) + tuple(parents)
    shape = _recognize_core_with_legs(graph)
    if shape is not None:
        return shape
    return None


def _recognize_core_with_legs(graph: AdGraph) -> tuple[str, tuple] | None:
    mult = graph.multiplicity()
    singles = [(u, v) for (u, v), m in mult.items() if m == 1]
    if any(m not in (1, 2) for m in mult.values()):
        return None
    core_vertices = sorted({v for e in singles for v in e})
    deg_single: dict[int, int] = {}
    for u, v in singles:
        deg_single[u] = deg_single.get(u, 0) + 1
        deg_single[v] = deg_single.get(v, 0) + 1

    def leg_length(corner: int) -> int | None:
        """Length of the pendant doubled path hanging at a core vertex."""
        doubled_nbrs = lambda x: [
            w
            for (u, v), m in mult.items()
            if m == 2 and x in (u, v)
            for w in (u, v)
            if w != x
        ]
        length = 0
        prev, cur = None, corner
        while True:
            nxt = [w for w in doubled_nbrs(cur) if w != prev]
            if not nxt:
                return length
            if len(nxt) > 1:
                return None
            prev, cur = cur, nxt[0]
            length += 1

    if len(singles) == 4 and len(core_vertices) == 4 and all(
        deg_single.get(v) == 2 for v in core_vertices
    ):
        # candidate C4(p, q, r, s): walk the 4-cycle in embedding order
        adj = {v: [w for e in singles for w in e if v in e and w != v]
               for v in core_vertices}
        cyc = [core_vertices[0]]
        while len(cyc) < 4:
            nxt = [w for w in adj[cyc[-1]] if len(cyc) < 2 or w != cyc[-2]]
            if not nxt:
                return None
            cyc.append(nxt[0])
        if sorted(cyc) != core_vertices:
            return None
        legs = [leg_length(c) for c in cyc]
        if None in legs:
            return None
        params = tuple(legs)
        rebuilt = c4_legs(*params)
        if isomorphic(graph, AdGraph(rebuilt.n, rebuilt.edges))[0]:
            return "four-cycle-legs", params
        return None

    if len(singles) == 8 and len(core_vertices) == 6:
        hubs = [v for v in core_vertices if deg_single.get(v) == 4]
        junctions = [v for v in core_vertices if deg_single.get(v) == 2]
        if len(hubs) != 2 or len(junctions) != 4:
            return None
        legs = [leg_length(j) for j in junctions]
        if None in legs:
            return None
        params = tuple(sorted(legs))
        rebuilt = k4_tilde_two_sum(*params)
        if isomorphic(graph, AdGraph(rebuilt.n, rebuilt.edges))[0]:
            return "k4tilde-two-sum", params
    return None


def classify_genus(graph: AdGraph) -> Classification:
    """Genus, reducedness, and the recognized family for genus 0, 1, 2.

    A reduced graph of genus one must be a doubled even cycle; a reduced
    graph of genus two must contract to one of the five minimal forms.
    Anything else in those cases would refute the classification theorems
    and raises ClassificationFailureError.
    """
    validated = validate_adg(AdGraph(graph.n, graph.edges))
    genus = turaev_genus_graph(validated)
    reduced = is_reduced(graph)
    if genus == 0:
        if graph.n == 1 and not graph.edges:
            return Classification(0, True, "single-vertex", ())
        degs = graph.degrees()
        if all(d > 0 for d in degs) and sum(1 for d in degs if d == 2) <= 4:
            shape = _classify_genus0_shape(graph)
            if shape:
                return Classification(0, reduced, shape[0], shape[1])
        return Classification(0, reduced)
    if genus == 1 and reduced:
        length = recognize_doubled_cycle(graph)
        if length is None or length % 2:
            raise ClassificationFailureError(
                "reduced genus-1 graph is not a doubled even cycle"
            )
        return Classification(1, True, "doubled-even-cycle", (length,))
    if genus == 2 and reduced:
        tag, params = _classify_genus2(graph)
        return Classification(2, True, tag, params)
    return Classification(genus, reduced)


# ---------------------------------------------------------------------------
# seeded genus-zero generator


def random_genus0(moves: int, seed: int, start_vertices: int | None = None):
    """Random sequence of doubled pendant moves, two-path extensions, and
    cross-component one-sums, starting from isolated vertices.

    Returns the resulting graph and a replayable line script.
    """
    rng = random.Random(seed)
    n0 = start_vertices if start_vertices is not None else rng.randint(1, 3)
    graph = isolated_vertices(max(1, n0))
    script = [f"start {max(1, n0)}"]
    for _ in range(moves):
        options = ["pendant"]
        degs = graph.degrees()
        if any(d >= 2 for d in degs):
            options.append("twopath")
        if graph.component_count() >= 2:
            options.append("onesum")
        op = rng.choice(options)
        if op == "pendant":
            v = rng.randrange(graph.n)
            graph = doubled_pendant(graph, v)
            script.append(f"pendant {v}")
        elif op == "twopath":
            v = rng.choice([u for u in range(graph.n) if degs[u] >= 2])
            inc = [i for i, e in enumerate(graph.edges) if v in e]
            size = rng.choice([s for s in range(1, len(inc)) if s % 2 == 1])
            a = rng.sample(inc, size)
            graph = two_path_extend(graph, v, a)
            script.append("twopath {} : {}".format(v, " ".join(map(str, sorted(a)))))
        else:
            comps = graph.components()
            c1, c2 = rng.sample(range(len(comps)), 2)
            v1 = rng.choice(comps[c1])
            v2 = rng.choice(comps[c2])
            graph = one_sum_components(graph, v1, v2)
            script.append(f"onesum {v1} {v2}")
    return graph, "\n".join(script) + "\n"


def replay_script(text: str) -> AdGraph:
    graph = None
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.replace(":", " : ").split()
        if parts[0] == "start":
            graph = isolated_vertices(int(parts[1]))
        elif parts[0] == "pendant":
            graph = doubled_pendant(graph, int(parts[1]))
        elif parts[0] == "twopath":
            v = int(parts[1])
            a = [int(p) for p in parts[3:]]
            graph = two_path_extend(graph, v, a)
        elif parts[0] == "onesum":
            graph = one_sum_components(graph, int(parts[1]), int(parts[2]))
        else:
            raise InvalidSiteError(f"unknown script line {line!r}")
    if graph is None:
        raise InvalidSiteError("empty move script")
    return graph
