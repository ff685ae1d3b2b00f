"""The stability dichotomy and the r-component structure report.

For one color class with e(g) = (1 - delta) mn / r, either a double star
already reaches (m+n)/r (case i) or nearly all degrees sit close to the
average (case ii).  When delta is small enough and no component reaches
(m+n)/r, the class splits into exactly r large components plus a small
leftover set; the report checks all five structural properties on a
concrete instance with several million edges.
"""

from fractions import Fraction

from monocomp import (
    complete,
    from_edge_list,
    from_rows,
    main_lemma_report,
    stability_report,
)

# Dense class: delta clamps to zero and the double star wins immediately.
rep = stability_report(complete(4, 4), 2)
print("K44 as a color class, r=2:")
print(f"  delta={rep.delta} alpha={rep.alpha} exceptional: {rep.k_x}+{rep.k_y}")
print(f"  double star={rep.double_star_order}  case_i={rep.case_i}")

# A perfect matching is far from case i; with enough slack it lands in
# case ii because no vertex drops far below the (tiny) average degree.
g = from_edge_list(3, 3, [(0, 0), (1, 1), (2, 2)])
rep = stability_report(g, 2, delta=Fraction(1, 2))
print("\nperfect matching on 3+3 at delta=1/2:")
print(f"  case_i={rep.case_i} case_ii={rep.case_ii} (k_x={rep.k_x}, k_y={rep.k_y})")

# The two-block instance: two disjoint K_{k,k} plus one isolated vertex per
# side.  k = 2048 is the smallest k whose deficiency clears the lemma's
# threshold, found by exact rational comparison.
bound = Fraction(1, 2048)
k = 1
while Fraction(4 * k + 1, (2 * k + 1) ** 2) > bound:
    k += 1
print(f"\nminimal k for the two-block instance: {k}")
m = n = 2 * k + 1
rows = [(1 << k) - 1] * k + [((1 << k) - 1) << k] * k + [0]
g = from_rows(m, n, rows)
rep = main_lemma_report(g, 2)
print(f"  edges={g.edge_count}  precondition={rep.precondition_ok} "
      f"hypothesis={rep.hypothesis_ok}")
print(f"  components: {[c.order for c in rep.components]}  "
      f"leftovers: {len(rep.z_x)}+{len(rep.z_y)}")
print(f"  properties a-e: {rep.a}, {rep.b}, {rep.c}, {rep.d}, {rep.e}")
