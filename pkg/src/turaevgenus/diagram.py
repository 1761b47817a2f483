"""Link diagrams as 4-valent combinatorial maps with over/under data.

A diagram is stored as a PD code: each crossing lists its four incident
arc identifiers counterclockwise, starting at the incoming under-strand.
This carries both the rotation system (the plane embedding up to mirror)
and the over/under decoration, which is exactly the data the Turaev
genus formula and the alternating decomposition need.

Half-edges are encoded as ``4 * crossing_index + slot``.  Slots 0 and 2
belong to the under-strand, slots 1 and 3 to the over-strand.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .errors import (
    ArcMultiplicityError,
    ArcNotFoundError,
    DisconnectedError,
    InternalParityError,
    MalformedLineError,
    NoCrossingsError,
    NonPlanarMapError,
    TooLargeError,
)

Crossing = tuple[int, int, int, int]

#: Slot pairings for the two smoothings.  In the standard convention the
#: A-resolution joins slots 0-1 and 2-3, the B-resolution joins 0-3 and 1-2.
#: The swapped convention exchanges the two; the genus formula is symmetric
#: in s_A and s_B, so swapping must not change any genus output.
_SMOOTHINGS = {
    "standard": {"A": (1, 0, 3, 2), "B": (3, 2, 1, 0)},
    "swapped": {"A": (3, 2, 1, 0), "B": (1, 0, 3, 2)},
}

DEFAULT_STATE_LIMIT = 18


def _state_limit() -> int:
    raw = os.environ.get("ADG_MAX_STATES")
    if raw is None:
        return DEFAULT_STATE_LIMIT
    try:
        return int(raw)
    except ValueError:
        return DEFAULT_STATE_LIMIT


class PlanarDiagram:
    """An immutable link diagram on a disjoint union of spheres.

    ``free_loops`` counts crossingless unknot components.  They cannot be
    written in the PD file format but arise naturally as resolution
    by-products and split summands.
    """

    __slots__ = ("crossings", "free_loops", "arc_ends", "_components")

    def __init__(self, crossings: Sequence[Crossing], free_loops: int = 0):
        if free_loops < 0:
            raise ValueError("free_loops must be nonnegative")
        self.crossings: tuple[Crossing, ...] = tuple(
            tuple(int(a) for a in x) for x in crossings
        )
        for x in self.crossings:
            if len(x) != 4:
                raise MalformedLineError(0, str(x), "crossing needs 4 arcs")
        self.free_loops = int(free_loops)

        ends: dict[int, list[int]] = {}
        for ci, x in enumerate(self.crossings):
            for slot, arc in enumerate(x):
                ends.setdefault(arc, []).append(4 * ci + slot)
        for arc, occ in ends.items():
            if len(occ) != 2:
                raise ArcMultiplicityError(arc, len(occ))
        self.arc_ends: dict[int, tuple[int, int]] = {
            a: (occ[0], occ[1]) for a, occ in sorted(ends.items())
        }
        self._components = self._split_components()
        self._check_genus_zero()

    # -- basic structure -----------------------------------------------------

    @property
    def crossing_count(self) -> int:
        return len(self.crossings)

    @property
    def arcs(self) -> tuple[int, ...]:
        return tuple(self.arc_ends)

    def partner(self, h: int) -> int:
        """The other half-edge on the same arc."""
        a, b = self.arc_ends[self.arc_at(h)]
        return b if h == a else a

    def arc_at(self, h: int) -> int:
        return self.crossings[h >> 2][h & 3]

    def _split_components(self) -> list[list[int]]:
        n = len(self.crossings)
        parent = list(range(n))

        def find(i: int) -> int:
            while parent[i] != i:
                parent[i] = parent[parent[i]]
                i = parent[i]
            return i

        for a, (h1, h2) in self.arc_ends.items():
            r1, r2 = find(h1 >> 2), find(h2 >> 2)
            if r1 != r2:
                parent[r1] = r2
        comps: dict[int, list[int]] = {}
        for i in range(n):
            comps.setdefault(find(i), []).append(i)
        return sorted(comps.values())

    @property
    def split_components(self) -> int:
        """k(D): split components of the 4-valent graph plus free loops."""
        return len(self._components) + self.free_loops

    def faces(self) -> list[list[int]]:
        """Face walks of the rotation system.

        Each face is the cyclic list of half-edges at which its boundary
        traversal leaves a crossing; successive traversals follow
        ``h -> rotate(partner(h))``.
        """
        seen = set()
        out = []
        for h0 in range(4 * len(self.crossings)):
            if h0 in seen:
                continue
            face = []
            h = h0
            while h not in seen:
                seen.add(h)
                face.append(h)
                p = self.partner(h)
                h = (p & ~3) | ((p + 1) & 3)
            out.append(face)
        return out

    def _check_genus_zero(self) -> None:
        # Euler's formula per split component: each lives on its own sphere.
        face_comp: dict[int, int] = {}
        comp_of = {}
        for idx, comp in enumerate(self._components):
            for ci in comp:
                comp_of[ci] = idx
        fcount = [0] * len(self._components)
        for face in self.faces():
            fcount[comp_of[face[0] >> 2]] += 1
        for idx, comp in enumerate(self._components):
            v = len(comp)
            e = 2 * v
            if v - e + fcount[idx] != 2:
                raise NonPlanarMapError(
                    f"component {comp} fails Euler check: "
                    f"V-E+F = {v - e + fcount[idx]} != 2"
                )

    # -- derived invariants ----------------------------------------------------

    def mirror(self) -> "PlanarDiagram":
        """Reverse all rotations and swap over/under at every crossing."""
        return PlanarDiagram(
            [(b, a, d, c) for (a, b, c, d) in self.crossings], self.free_loops
        )

    def disjoint_union(self, other: "PlanarDiagram") -> "PlanarDiagram":
        shift = max(self.arc_ends, default=0)
        moved = [tuple(a + shift for a in x) for x in other.crossings]
        return PlanarDiagram(
            list(self.crossings) + moved, self.free_loops + other.free_loops
        )

    def __repr__(self) -> str:
        body = " / ".join("X " + " ".join(map(str, x)) for x in self.crossings)
        extra = f" + {self.free_loops} loops" if self.free_loops else ""
        return f"<PlanarDiagram c={self.crossing_count} [{body}]{extra}>"


EMPTY_DIAGRAM = PlanarDiagram([])


# -- PD file format ------------------------------------------------------------

def parse_pd(text: str) -> PlanarDiagram:
    """Parse the PD file format.

    One crossing per line, ``X a b c d`` with positive integer arc ids in
    counterclockwise order, slot 0 the incoming under-strand.  Lines
    starting with ``#`` and blank lines are ignored.  Crossings may also
    be separated by ``/`` on a single line.
    """
    crossings: list[Crossing] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        for chunk in line.split("/"):
            chunk = chunk.strip()
            if not chunk:
                continue
            parts = chunk.split()
            if parts[0] != "X":
                raise MalformedLineError(lineno, chunk, "expected leading 'X'")
            if len(parts) != 5:
                raise MalformedLineError(lineno, chunk, "expected 4 arc ids")
            try:
                arcs = tuple(int(p) for p in parts[1:])
            except ValueError:
                raise MalformedLineError(lineno, chunk, "arc ids must be integers")
            if any(a <= 0 for a in arcs):
                raise MalformedLineError(lineno, chunk, "arc ids must be positive")
            crossings.append(arcs)
    return PlanarDiagram(crossings)


def write_pd(diagram: PlanarDiagram) -> str:
    lines = ["X " + " ".join(map(str, x)) for x in diagram.crossings]
    return "\n".join(lines) + ("\n" if lines else "")


# -- Kauffman states -------------------------------------------------------------

def resolve_state(
    diagram: PlanarDiagram,
    choice: Mapping[int, str] | Sequence[str],
    convention: str = "standard",
) -> int:
    """Number of circles after smoothing every crossing per ``choice``.

    ``choice`` maps crossing index to 'A' or 'B' (a sequence indexed by
    crossing position works too).
    """
    n = diagram.crossing_count
    if isinstance(choice, Mapping):
        labels = [choice[i] for i in range(n)]
    else:
        labels = list(choice)
    if len(labels) != n:
        raise ValueError("choice must label every crossing")
    pairings = _SMOOTHINGS[convention]
    nh = 4 * n
    nxt = [0] * nh
    for ci in range(n):
        pair = pairings[labels[ci]]
        for s in range(4):
            nxt[4 * ci + s] = 4 * ci + pair[s]
    return _count_cycles(diagram, nxt) + diagram.free_loops


def _count_cycles(diagram: PlanarDiagram, smooth: list[int]) -> int:
    """Circles of a full smoothing: orbits of arc-hop alternated with
    the within-crossing pairing."""
    nh = 4 * diagram.crossing_count
    seen = bytearray(nh)
    circles = 0
    for h0 in range(nh):
        if seen[h0]:
            continue
        circles += 1
        h = h0
        while not seen[h]:
            seen[h] = 1
            h2 = smooth[h]
            seen[h2] = 1
            h = diagram.partner(h2)
    return circles


def state_circle_counts(
    diagram: PlanarDiagram, convention: str = "standard"
) -> tuple[int, int]:
    """(s_A, s_B) for the all-A and all-B states."""
    n = diagram.crossing_count
    s_a = resolve_state(diagram, ["A"] * n, convention)
    s_b = resolve_state(diagram, ["B"] * n, convention)
    return s_a, s_b


def turaev_genus_diagram(
    diagram: PlanarDiagram, convention: str = "standard"
) -> int:
    """Genus of the Turaev surface: (2k + c - s_A - s_B) / 2."""
    if diagram.crossing_count == 0:
        return 0
    s_a, s_b = state_circle_counts(diagram, convention)
    val = 2 * diagram.split_components + diagram.crossing_count - s_a - s_b
    if val < 0 or val % 2:
        raise InternalParityError(
            f"2k + c - sA - sB = {val}; smoothing convention is broken"
        )
    return val // 2


# -- arc alternation ---------------------------------------------------------------

@dataclass(frozen=True)
class ArcKind:
    """Per-arc label: alternating, or non-alternating with a sign.

    The sign is '+' when both endpoints are over-strands, '-' when both
    are under-strands.
    """

    alternating: bool
    sign: str | None = None


def classify_arcs(diagram: PlanarDiagram) -> dict[int, ArcKind]:
    out = {}
    for arc, (h1, h2) in diagram.arc_ends.items():
        unders = (h1 & 1 == 0) + (h2 & 1 == 0)
        if unders == 1:
            out[arc] = ArcKind(True)
        elif unders == 2:
            out[arc] = ArcKind(False, "-")
        else:
            out[arc] = ArcKind(False, "+")
    return out


def nonalternating_arcs(diagram: PlanarDiagram) -> list[int]:
    kinds = classify_arcs(diagram)
    return [a for a, k in kinds.items() if not k.alternating]


# -- surgery operations ---------------------------------------------------------------

def _relabel(crossings: Iterable[Crossing], shift: int) -> list[Crossing]:
    return [tuple(a + shift for a in x) for x in crossings]


def connected_sum(
    d1: PlanarDiagram, a1: int, d2: PlanarDiagram, a2: int
) -> PlanarDiagram:
    """Cut arc ``a1`` of ``d1`` and arc ``a2`` of ``d2`` and splice them.

    Exactly one of the two splicings is compatible with the fixed
    rotations (the other would glue the spheres into a torus); the
    planar one is selected by the Euler check.
    """
    if a1 not in d1.arc_ends:
        raise ArcNotFoundError(f"arc {a1} not in first diagram")
    if a2 not in d2.arc_ends:
        raise ArcNotFoundError(f"arc {a2} not in second diagram")
    shift = max(d1.arc_ends, default=0)
    fresh = shift + max(d2.arc_ends, default=0) + 1
    c1 = list(d1.crossings)
    c2 = _relabel(d2.crossings, shift)
    a2s = a2 + shift
    x1, y1 = d1.arc_ends[a1]
    x2, y2 = (h + 4 * len(c1) for h in d2.arc_ends[a2])

    def build(swap: bool) -> PlanarDiagram:
        new = [list(x) for x in c1 + c2]
        pa, pb = (y2, x2) if swap else (x2, y2)
        for h, arc in ((x1, fresh), (pa, fresh), (y1, fresh + 1), (pb, fresh + 1)):
            new[h >> 2][h & 3] = arc
        return PlanarDiagram([tuple(x) for x in new],
                             d1.free_loops + d2.free_loops)

    try:
        return build(False)
    except NonPlanarMapError:
        return build(True)


def insert_twist(diagram: PlanarDiagram, arc: int) -> PlanarDiagram:
    """Replace ``arc`` with a one-crossing kink.

    The handedness of the kink is chosen so that the count of
    non-alternating arcs is preserved: the passage adjacent to the lower
    endpoint gets the strand type opposite to that endpoint.  This keeps
    the alternating decomposition graph of the result isomorphic to the
    input's.
    """
    if arc not in diagram.arc_ends:
        raise ArcNotFoundError(f"arc {arc} not in diagram")
    h1, h2 = diagram.arc_ends[arc]
    fresh = max(diagram.arc_ends) + 1
    p_arc, loop_arc, q_arc = fresh, fresh + 1, fresh + 2
    new = [list(x) for x in diagram.crossings]
    new[h1 >> 2][h1 & 3] = p_arc
    new[h2 >> 2][h2 & 3] = q_arc
    h1_under = (h1 & 1) == 0
    if h1_under:
        # first passage over: p on the over-strand of the kink
        kink = (loop_arc, p_arc, q_arc, loop_arc)
    else:
        # first passage under: p enters at slot 0
        kink = (p_arc, loop_arc, loop_arc, q_arc)
    new.append(list(kink))
    return PlanarDiagram([tuple(x) for x in new], diagram.free_loops)


# -- Kauffman bracket and Jones span ---------------------------------------------------

class LaurentPoly:
    """Sparse integer Laurent polynomial in one variable."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Mapping[int, int] | None = None):
        self.coeffs = {e: c for e, c in (coeffs or {}).items() if c != 0}

    def __eq__(self, other) -> bool:
        return isinstance(other, LaurentPoly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        out = dict(self.coeffs)
        for e, c in other.coeffs.items():
            out[e] = out.get(e, 0) + c
        return LaurentPoly(out)

    def __mul__(self, other: "LaurentPoly") -> "LaurentPoly":
        out: dict[int, int] = {}
        for e1, c1 in self.coeffs.items():
            for e2, c2 in other.coeffs.items():
                out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
        return LaurentPoly(out)

    @staticmethod
    def monomial(exp: int, coeff: int = 1) -> "LaurentPoly":
        return LaurentPoly({exp: coeff})

    @property
    def span(self) -> int:
        if not self.coeffs:
            return 0
        return max(self.coeffs) - min(self.coeffs)

    def __repr__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = [f"{c}*A^{e}" for e, c in sorted(self.coeffs.items())]
        return " + ".join(terms)


def _components_of_link(diagram: PlanarDiagram) -> list[list[int]]:
    """Link components as orbits of strand continuation (slot s -> s+2)."""
    seen = set()
    comps = []
    for h0 in range(4 * diagram.crossing_count):
        if h0 in seen:
            continue
        comp = []
        h = h0
        while h not in seen:
            seen.add(h)
            comp.append(h)
            out = (h & ~3) | ((h + 2) & 3)
            seen.add(out)
            h = diagram.partner(out)
        comps.append(comp)
    return comps


def link_component_count(diagram: PlanarDiagram) -> int:
    return len(_components_of_link(diagram)) + diagram.free_loops


def writhe(diagram: PlanarDiagram) -> int:
    """Writhe under a deterministic orientation of each link component.

    Components are oriented in first-trace order.  The sign convention is
    calibrated so that the normalized bracket of standard table diagrams
    reproduces their Jones polynomial.
    """
    incoming = set()
    for comp in _components_of_link(diagram):
        incoming.update(comp)
    w = 0
    for ci in range(diagram.crossing_count):
        under_in = 4 * ci if 4 * ci in incoming else 4 * ci + 2
        over_in = 4 * ci + 1 if 4 * ci + 1 in incoming else 4 * ci + 3
        # positive when the over-strand enters one slot clockwise of the
        # incoming under-strand
        w += 1 if (over_in - under_in) & 3 == 3 else -1
    return w


def kauffman_bracket(diagram: PlanarDiagram, convention: str = "standard") -> LaurentPoly:
    """Bracket state sum over all 2^c resolutions, delta = -A^2 - A^-2."""
    n = diagram.crossing_count
    limit = _state_limit()
    if n > limit:
        raise TooLargeError(f"{n} crossings exceeds state-sum limit {limit}")
    delta = LaurentPoly({2: -1, -2: -1})
    delta_pows = [LaurentPoly({0: 1})]
    for _ in range(n + diagram.free_loops + 2):
        delta_pows.append(delta_pows[-1] * delta)
    pairings = _SMOOTHINGS[convention]
    pair_a = [pairings["A"][s] for s in range(4)]
    pair_b = [pairings["B"][s] for s in range(4)]
    total: dict[int, int] = {}
    smooth = [0] * (4 * n)
    for mask in range(1 << n):
        a_count = 0
        for ci in range(n):
            if mask >> ci & 1:
                pair = pair_b
            else:
                pair = pair_a
                a_count += 1
        # rebuild the smoothing map for this state
        for ci in range(n):
            pair = pair_a if not (mask >> ci & 1) else pair_b
            base = 4 * ci
            smooth[base] = base + pair[0]
            smooth[base + 1] = base + pair[1]
            smooth[base + 2] = base + pair[2]
            smooth[base + 3] = base + pair[3]
        circles = _count_cycles(diagram, smooth) + diagram.free_loops
        exp = 2 * a_count - n
        for e, c in delta_pows[circles - 1].coeffs.items():
            total[e + exp] = total.get(e + exp, 0) + c
    return LaurentPoly(total)


def jones_polynomial(diagram: PlanarDiagram, convention: str = "standard") -> LaurentPoly:
    """Writhe-normalized bracket, in the bracket variable A.

    Substituting t = A^-4 gives the Jones polynomial; exponents of the
    returned polynomial are therefore multiples of 4 for knots.
    """
    w = writhe(diagram)
    norm = LaurentPoly.monomial(-3 * w, -1 if w % 2 else 1)
    return kauffman_bracket(diagram, convention) * norm


def bracket_span(diagram: PlanarDiagram, convention: str = "standard") -> int:
    """Span of the Jones polynomial in the variable t.

    Requires a connected diagram; the span in A is always a multiple
    of 4.
    """
    if diagram.crossing_count == 0 and diagram.free_loops <= 1:
        return 0
    if diagram.split_components > 1:
        raise DisconnectedError("bracket span needs a connected diagram")
    poly = jones_polynomial(diagram, convention)
    span_a = poly.span
    if span_a % 4:
        raise InternalParityError(f"bracket span {span_a} not divisible by 4")
    return span_a // 4


# -- adequacy ------------------------------------------------------------------

def is_adequate(diagram: PlanarDiagram, convention: str = "standard") -> bool:
    """True when every single flip away from the all-A and the all-B
    state strictly decreases the circle count."""
    n = diagram.crossing_count
    if n == 0:
        raise NoCrossingsError("adequacy needs at least one crossing")
    for base, flip in (("A", "B"), ("B", "A")):
        labels = [base] * n
        base_count = resolve_state(diagram, labels, convention)
        for ci in range(n):
            labels[ci] = flip
            if resolve_state(diagram, labels, convention) >= base_count:
                return False
            labels[ci] = base
    return True
