"""
Three ways to grow regions from seeds
=====================================

Two seeds on a small grid, grown with each of the three modes. The maps are
printed as characters: ``.`` is outside the domain, ``?`` is unlabeled,
``#`` is the boundary, and letters are seed regions.
"""

import numpy as np

from seedgrow import GridDomain, grow, standard_neighborhood


def show(result, domain):
    rows = []
    for r in range(domain.dims[0]):
        line = ""
        for c in range(domain.dims[1]):
            x = (r, c)
            if not domain.contains(x):
                line += "."
            elif x in result.boundary():
                line += "#"
            else:
                owner = [sid for sid in result.seed_order if x in result.region(sid)]
                line += owner[0] if owner else "?"
        rows.append(line)
    print("\n".join(rows))


# a 9x15 box with a pillar in the middle
mask = np.ones((9, 15), dtype=bool)
mask[3:6, 6:9] = False
domain = GridDomain(mask)
seeds = [("a", [(0, 0)]), ("b", [(8, 14)])]
V = standard_neighborhood(2, 4)

for mode in ("simple", "vboundary", "ambiguous"):
    result = grow(mode, domain, seeds, V)
    print(f"\n{mode}: {result.stats.growths} growths, {result.stats.skips} skipped pops")
    show(result, domain)

# simple mode partitions the reachable points; the other two leave a
# one-pixel boundary between the regions
