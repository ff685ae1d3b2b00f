"""From general graphs back to bipartite ones, and the slack frontier.

High-minimum-degree general graphs reduce to bipartite instances: when one
color's components are all small, grouping them splits the vertices into
two sides with no edge of that color across, and the remaining colors form
a bipartite instance for the other checkers.  The frontier scan then probes
how much additive degree slack the half-the-vertices conclusion survives.
"""

import itertools
import random

from fractions import Fraction

from monocomp import (
    SearchConfig,
    alpha_frontier,
    bipartition_avoiding_color,
    check_corollary,
    general_from_edge_list,
)

# A 3-colored K16 with min degree 15 >= 7*16/8: the corollary predicts a
# monochromatic component on half the vertices.
rng = random.Random(4)
edges = [(u, v, rng.randrange(3)) for u, v in itertools.combinations(range(16), 2)]
gg = general_from_edge_list(16, 3, edges)
v = check_corollary(gg, 3, variant="seven-eighths")
print("corollary (7n/8 variant) on a random 3-colored K16:")
print(f"  applicable={v.applicable} holds={v.holds} witness order={v.witness.order}")
if v.detail.get("reduction"):
    print(f"  reduction chain: sides {v.detail['reduction']['side_sizes']}, "
          f"bipartite check holds={v.detail['bipartite_check']['holds']}")

# The reduction on its own: green spans little, so the split exists.
gg = general_from_edge_list(8, 2, [(0, 1, 0), (2, 3, 0), (4, 5, 1), (0, 7, 1)])
red = bipartition_avoiding_color(gg, 0, 3)
print(f"\nbipartition avoiding green: sides {red.side_a} / {red.side_b}")

# Exploratory frontier: at alpha = 1/8 the additive theorem guarantees a
# clean row; larger alpha leaves room for colorings with only small
# components.  These rows are evidence, not proof.
table = alpha_frontier(
    16,
    [Fraction(1, 8), Fraction(1, 4), Fraction(3, 8)],
    cfg=SearchConfig(seed=12, budget=4000),
)
print("\nfrontier at n=16 (exploratory):")
for row in table["rows"]:
    hosts = ", ".join(f"({h['m']}+{h['n']}, d={h['d']})" for h in row["hosts"])
    print(f"  alpha={row['alpha']:>4}: {row['verdict']}  hosts: {hosts}")
