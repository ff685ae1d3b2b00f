"""Tour of the extremal constructions and their recomputed certificates.

Each generator yields a concrete (host, coloring) pair; the certificate
numbers printed here are re-derived from the graph by the library's own
degree/component/double-star operations, not read off the defining formula.
"""

from monocomp import (
    construction_certificate,
    cyclic_one_factorization,
    degree_profile,
    double_star_gap_construction,
    lower_bound_construction,
    meets_conjecture_degrees,
)


def show(title, host, col):
    cert = construction_certificate(host, col)
    print(f"{title}: m={host.m} n={host.n} edges={host.edge_count}")
    print(f"  delta(X,Y)={cert.delta_xy}  delta(Y,X)={cert.delta_yx}")
    print(f"  largest mono component={cert.largest_component}"
          f"  largest double star={cert.largest_double_star}")


# The cyclic 1-factorization of K_{k,k}: color (i, j) with (i + j) mod k.
# Every color class is a perfect matching, so all components have order 2.
host, col = cyclic_one_factorization(4)
show("cyclic 1-factorization, k=4", host, col)

# Drop one matching and blow up: minimum degrees land exactly on the
# (1 - 1/(r+1)) boundary, and no monochromatic component can beat
# (m+n)/(r+1).  This is why the strict inequalities in the degree
# conjecture cannot be weakened on both sides.
host, col = lower_bound_construction(2, 2, 3)
show("\nlower-bound host, r=2, t1=2, t2=3", host, col)
print(f"  strictly clears the conjecture degrees? {meets_conjecture_degrees(host, 2)}")
print(f"  (m+n)/(r+1) = {(host.m + host.n) // 3}")

# Remove a matching inside every blown block instead: components keep the
# full (m+n)/r order but the best double star drops to (m+n)/r - 1, so
# components genuinely beat double stars on non-complete hosts.
host, col = double_star_gap_construction(2, 2, 3)
show("\ndouble-star-gap host, r=2, t1=2, t2=3", host, col)
print(f"  (m+n)/r = {(host.m + host.n) // 2}, best double star is one less")

prof = degree_profile(host)
print(f"  degree check: delta(X,Y) = n - r = {prof.delta_xy}")
