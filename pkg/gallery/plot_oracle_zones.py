"""
Geodesic distances and influence zones
======================================

The oracle computes the same quantities by brute force: geodesic distances
by breadth-first search, influence zones as the points strictly closest to
one seed, and the ambiguous set where the nearest seeds tie.
"""

import numpy as np

from seedgrow import (
    GridDomain,
    ambiguous_set,
    decomposition_check,
    geodesic_distances,
    grow,
    influence_zones,
    standard_neighborhood,
)

rng = np.random.default_rng(3)
mask = rng.random((10, 18)) < 0.75
domain = GridDomain(mask)
pts = sorted(domain.points())
seeds = [("a", [pts[0]]), ("b", [pts[len(pts) // 2]]), ("c", [pts[-1]])]
V = standard_neighborhood(2, 8)

d = geodesic_distances(domain, [p for _, ps in seeds for p in ps], V)
print("distance to the nearest seed (x = unreachable):")
for row in d:
    print(" ".join("x" if np.isinf(v) else f"{int(v) % 10}" for v in row))

zones = influence_zones(domain, seeds, V)
A = ambiguous_set(domain, seeds, V)
print("\nzone sizes:", [len(z) for z in zones], " ambiguous points:", len(A))
print("zones and ambiguous set partition the reachable points:", bool(decomposition_check(domain, seeds, V)))

result = grow("ambiguous", domain, seeds, V)
B = result.boundary()
print("grown boundary equals the ambiguous set:", B == A)
print("ambiguous but not boundary:", sorted(A - B))
print("boundary but not ambiguous:", sorted(B - A))
