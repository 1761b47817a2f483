"""Alternating decompositions of link diagrams.

Every non-alternating arc is marked with two points, one near each
endpoint.  Walking around a face, consecutive marked points that do not
belong to the same arc traversal are joined by an arc inside the face.
The joins close up into disjoint simple curves; each curve becomes a
vertex of the alternating decomposition graph and each non-alternating
arc an edge between the two curves crossing it.

The face walks all inherit one handedness from the rotation system, so
reading the crossed arcs along each curve yields rotation tables that
are consistent on every component sphere; the Euler check is run on the
result as a guard.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from . import adgraph
from .adgraph import AdGraph
from .diagram import PlanarDiagram, classify_arcs, turaev_genus_diagram
from .errors import TuraevError
from .ribbon import ribbon_genus


class MarkedPoint(NamedTuple):
    """A transversal intersection of a decomposition curve with a
    non-alternating arc, near endpoint ``end`` (0 or 1) of the arc."""

    arc: int
    end: int


class FaceArc(NamedTuple):
    """Directed join between consecutive marked points inside a face."""

    source: MarkedPoint
    target: MarkedPoint
    face: int


@dataclass(frozen=True)
class CurveSystem:
    curves: tuple[tuple[MarkedPoint, ...], ...]
    face_arcs: tuple[FaceArc, ...]


@dataclass(frozen=True)
class Decomposition:
    diagram: PlanarDiagram
    curve_system: CurveSystem
    graph: AdGraph
    #: curve index per graph vertex; None marks the isolated vertex of an
    #: alternating split component
    vertex_curves: tuple[int | None, ...]
    #: non-alternating arc id per graph edge
    edge_arcs: tuple[int, ...]
    #: '+' / '-' per graph edge
    signs: tuple[str, ...]
    r_alt: int
    #: per alternating region, the sorted curve indices on its boundary
    region_curves: tuple[tuple[int, ...], ...]


def decompose(diagram: PlanarDiagram) -> Decomposition:
    kinds = classify_arcs(diagram)
    na_arcs = sorted(a for a, k in kinds.items() if not k.alternating)
    na_set = set(na_arcs)

    faces = diagram.faces()

    # emissions[face] = list of (marked point, traversal position, emission slot)
    emissions: list[list[tuple[MarkedPoint, int, int]]] = []
    for face in faces:
        row = []
        for pos, h in enumerate(face):
            arc = diagram.arc_at(h)
            if arc in na_set:
                ends = diagram.arc_ends[arc]
                near = 0 if ends[0] == h else 1
                row.append((MarkedPoint(arc, near), pos, 0))
                row.append((MarkedPoint(arc, 1 - near), pos, 1))
        emissions.append(row)

    # joins: from the closing emission of one traversal to the opening
    # emission of the next non-alternating traversal around the face
    succ: dict[MarkedPoint, MarkedPoint] = {}
    face_arcs: list[FaceArc] = []
    for fi, row in enumerate(emissions):
        m = len(row)
        for i in range(m):
            mp, pos, slot = row[i]
            mp2, pos2, slot2 = row[(i + 1) % m]
            if pos == pos2 and slot == 0 and slot2 == 1:
                continue  # the gap runs along the arc's own middle
            succ[mp] = mp2
            face_arcs.append(FaceArc(mp, mp2, fi))

    # curves: cycles of the join successor, in first-encounter order
    curves: list[tuple[MarkedPoint, ...]] = []
    curve_of: dict[MarkedPoint, int] = {}
    for arc in na_arcs:
        for end in (0, 1):
            start = MarkedPoint(arc, end)
            if start in curve_of:
                continue
            cycle = []
            mp = start
            while mp not in curve_of:
                curve_of[mp] = len(curves)
                cycle.append(mp)
                mp = succ[mp]
            if mp != start:
                raise TuraevError("curve tracing did not close up")
            curves.append(tuple(cycle))

    # graph: one vertex per curve, plus one isolated vertex per
    # alternating split component (including free loops)
    arcs_of_comp: dict[int, set[int]] = {}
    comp_of_crossing = {}
    for idx, comp in enumerate(diagram._components):
        for ci in comp:
            comp_of_crossing[ci] = idx
    for arc, (h1, h2) in diagram.arc_ends.items():
        arcs_of_comp.setdefault(comp_of_crossing[h1 >> 2], set()).add(arc)
    alternating_components = [
        idx
        for idx in range(len(diagram._components))
        if not (arcs_of_comp.get(idx, set()) & na_set)
    ]
    n_vertices = len(curves) + len(alternating_components) + diagram.free_loops
    vertex_curves: list[int | None] = list(range(len(curves)))
    vertex_curves += [None] * (n_vertices - len(curves))

    edges = []
    signs = []
    for arc in na_arcs:
        cu = curve_of[MarkedPoint(arc, 0)]
        cv = curve_of[MarkedPoint(arc, 1)]
        if cu == cv:
            raise TuraevError(f"non-alternating arc {arc} met a single curve")
        edges.append((min(cu, cv), max(cu, cv)))
        signs.append(kinds[arc].sign)
    edge_of_arc = {arc: i for i, arc in enumerate(na_arcs)}

    rotations = [
        tuple(edge_of_arc[mp.arc] for mp in cycle) for cycle in curves
    ]
    rotations += [()] * (n_vertices - len(curves))

    graph = AdGraph(n_vertices, tuple(edges), rotations=tuple(rotations))
    graph = adgraph.validate_adg(graph)

    r_alt, region_curves = _alternating_regions(
        diagram, faces, emissions, curve_of, na_set
    )

    return Decomposition(
        diagram=diagram,
        curve_system=CurveSystem(tuple(curves), tuple(face_arcs)),
        graph=graph,
        vertex_curves=tuple(vertex_curves),
        edge_arcs=tuple(na_arcs),
        signs=tuple(signs),
        r_alt=r_alt,
        region_curves=region_curves,
    )


def _alternating_regions(diagram, faces, emissions, curve_of, na_set):
    """Count regions of the sphere complement of the curves that contain
    crossings, and record which curves bound each.

    The chords of a face cut it into one central piece (bounded by chords
    and arc middles only, hence crossing-free) and one outer piece per
    chord; pieces merge across crossings and, for central pieces, across
    the middles of non-alternating arcs.
    """
    pieces: dict[tuple, int] = {}

    def piece_id(key) -> int:
        if key not in pieces:
            pieces[key] = len(pieces)
        return pieces[key]

    parent: list[int] = []

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    def union(i, j):
        ri, rj = find(i), find(j)
        if ri != rj:
            parent[ri] = rj

    corner_piece: dict[int, int] = {}  # arrival half-edge -> piece
    curve_touch: list[tuple[int, int]] = []  # (piece, curve)

    for fi, face in enumerate(faces):
        row = emissions[fi]
        na_positions = sorted({pos for (_, pos, _) in row})
        if not na_positions:
            pid = piece_id(("whole", fi))
            while len(parent) < len(pieces):
                parent.append(len(parent))
            for h in face:
                corner_piece[diagram.partner(h)] = pid
            continue
        piece_id(("central", fi))
        while len(parent) < len(pieces):
            parent.append(len(parent))
        # the outer piece after non-alternating traversal p holds the
        # corners up to (and excluding) the next non-alternating traversal
        r = len(face)
        for k, p in enumerate(na_positions):
            q = na_positions[(k + 1) % len(na_positions)]
            pid = piece_id(("outer", fi, p))
            while len(parent) < len(pieces):
                parent.append(len(parent))
            pos = p
            while True:
                corner_piece[diagram.partner(face[pos])] = pid
                pos = (pos + 1) % r
                if pos == q:
                    break
            mp_here = next(mp for (mp, pp, slot) in row if pp == p and slot == 1)
            curve_touch.append((pid, curve_of[mp_here]))

    # glue the four corners around each crossing
    for ci in range(diagram.crossing_count):
        base = corner_piece[4 * ci]
        for s in (1, 2, 3):
            union(base, corner_piece[4 * ci + s])
    # glue central pieces across the middles of non-alternating arcs
    face_of_start: dict[int, int] = {}
    for fi, face in enumerate(faces):
        for h in face:
            face_of_start[h] = fi
    for arc in na_set:
        h1, h2 = diagram.arc_ends[arc]
        union(
            piece_id(("central", face_of_start[h1])),
            piece_id(("central", face_of_start[h2])),
        )

    crossing_regions: dict[int, set[int]] = {}
    for pid in corner_piece.values():
        crossing_regions.setdefault(find(pid), set())
    for pid, curve in curve_touch:
        root = find(pid)
        if root in crossing_regions:
            crossing_regions[root].add(curve)
    region_curves = tuple(
        sorted(tuple(sorted(cs)) for cs in crossing_regions.values())
    )
    return len(crossing_regions) + diagram.free_loops, region_curves


def twisted_genus(diagram: PlanarDiagram) -> int:
    """Genus of the all-twisted ribbon graph of the induced sphere
    embedding; equals the Turaev genus of the diagram."""
    dec = decompose(diagram)
    return ribbon_genus(adgraph.to_ribbon(dec.graph, twisted=True))


def cross_check_genus(diagram: PlanarDiagram) -> int:
    """Turaev genus via the state formula, asserting agreement with the
    twisted-embedding route."""
    direct = turaev_genus_diagram(diagram)
    via_graph = twisted_genus(diagram)
    if direct != via_graph:
        raise TuraevError(
            f"genus mismatch: state formula {direct}, twisted embedding {via_graph}"
        )
    return direct
