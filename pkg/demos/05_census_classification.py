"""Classification of reduced decomposition graphs of genus one and two.

A reduced graph (single vertex, or every component 3-edge-connected)
of genus one is a doubled even cycle.  In genus two there are exactly
five doubled-path equivalence classes.  The census enumerates all small
decomposition graphs up to isomorphism and groups the reduced ones of a
given genus by canonical contraction.
"""

from turaevgenus.census import CensusFilter, census
from turaevgenus.families import classify_genus, doubled_cycle, k4_two_sum

print("genus one, up to 12 edges:")
for cls in census(1, CensusFilter(max_vertices=6, max_edges=12)):
    members = ", ".join(f"v={m.n},e={m.edge_count}" for m in cls.members)
    print(f"  {cls.family} {cls.parameters}: members {members}")

print()
print("genus two, up to 16 edges (all five classes appear):")
for cls in census(2, CensusFilter(max_vertices=8, max_edges=16)):
    print(f"  {cls.family} {cls.parameters}: {cls.count} member(s), "
          f"smallest v={cls.representative.n} e={cls.representative.edge_count}")

print()
print("classifying individual graphs:")
for graph in (doubled_cycle(10), k4_two_sum(2, 2)):
    info = classify_genus(graph)
    print(f"  v={graph.n} e={graph.edge_count}: genus {info.genus}, "
          f"reduced {info.is_reduced}, family {info.family} {info.parameters}")

print()
print("the fifth class needs 16 edges: bipartite members of the")
print("k4-two-sum class are K4(p) +2 K4(q) with p, q even, and the")
print("smallest of these, K4(2) +2 K4(2), has 8 vertices and 16 edges.")
