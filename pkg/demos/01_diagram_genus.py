"""Turaev genus of link diagrams from their PD codes.

The genus of the Turaev surface of a diagram D is
(2k(D) + c(D) - s_A(D) - s_B(D)) / 2, where s_A and s_B count the
circles of the all-A and all-B Kauffman states and k counts split
components.  A connected diagram has genus zero exactly when it is a
connected sum of alternating diagrams.
"""

from turaevgenus import corpus
from turaevgenus.diagram import (
    bracket_span,
    connected_sum,
    insert_twist,
    is_adequate,
    jones_polynomial,
    state_circle_counts,
    turaev_genus_diagram,
)

for name, d in corpus.named_diagrams().items():
    s_a, s_b = state_circle_counts(d)
    print(f"{name}: c = {d.crossing_count}, k = {d.split_components}, "
          f"(s_A, s_B) = ({s_a}, {s_b}), g_T = {turaev_genus_diagram(d)}")

print()
trefoil = corpus.trefoil()
print("the trefoil is alternating, so its genus is",
      turaev_genus_diagram(trefoil))
print("its Jones polynomial (bracket variable A, t = A^-4):",
      jones_polynomial(trefoil))
print("span in t:", bracket_span(trefoil),
      "= crossing number, the alternating equality")
print("adequate:", is_adequate(trefoil))

print()
print("genus is additive under connected sum:")
granny = connected_sum(trefoil, 1, trefoil, 1)
print(f"  trefoil # trefoil: c = {granny.crossing_count}, "
      f"g_T = {turaev_genus_diagram(granny)}")

print("and invariant under twist insertion:")
twisted = insert_twist(corpus.nine_42(), 1)
print(f"  9_42 with an extra kink: c = {twisted.crossing_count}, "
      f"g_T = {turaev_genus_diagram(twisted)}")
