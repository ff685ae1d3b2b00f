"""Running the per-instance theorem checkers.

A Verdict separates "does the degree hypothesis hold" (applicable) from
"does the conclusion hold" (holds), so boundary instances can be recorded
without being mistaken for counterexamples.
"""

from monocomp import (
    check_additive_theorem,
    check_conjecture_instance,
    check_theorem_two_colors,
    coloring_from_triples,
    complete_minus_circulant,
    lower_bound_construction,
)


def block_coloring(host):
    return coloring_from_triples(
        host.m, host.n, 2,
        [(x, y, ((x // 2) + (y // 2)) % 2) for x, y in host.edges()],
    )


# K_{4,4} minus a perfect matching has both minimum degrees 3 > (2/3)*4,
# so the two-color theorem applies; the block coloring realizes a
# component of exactly (m+n)/2 = 4.
host = complete_minus_circulant(4, 4, 1)
v = check_theorem_two_colors(host, block_coloring(host))
print("two-color theorem on K44 minus matching, block coloring:")
print(f"  applicable={v.applicable} holds={v.holds} "
      f"witness order={v.witness.order} margin={v.margin}")

# The sharpness host sits exactly on the degree boundary: not applicable,
# and indeed its largest component (2) misses (m+n)/2 = 3.
host, col = lower_bound_construction(2, 1, 1)
v = check_theorem_two_colors(host, col)
print("\nsame check on the boundary host (informational miss):")
print(f"  applicable={v.applicable} holds={v.holds} "
      f"largest order={v.witness.order} target={v.target}")

# The general-r version of the degree condition, on the same host.
v = check_conjecture_instance(host, col, 2)
print(f"\nconjecture check, r=2: applicable={v.applicable} margin={v.margin}")

# Additive degrees: circulant(8,8,2) sits exactly at delta = |Y| - n/8.
host = complete_minus_circulant(8, 8, 2)
col = coloring_from_triples(8, 8, 2, [(x, y, (x + y) % 2) for x, y in host.edges()])
v = check_additive_theorem(host, col)
print("\nadditive theorem on circulant(8,8,2), parity coloring:")
print(f"  applicable={v.applicable} holds={v.holds} "
      f"witness holds {len(v.witness.xs)} of X and {len(v.witness.ys)} of Y")
