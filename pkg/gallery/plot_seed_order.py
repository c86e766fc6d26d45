"""
Does the seed order matter?
===========================

The order in which seeds are initialised decides who wins a tie in simple
mode. Ambiguous mode puts tied points on the boundary instead, which makes
the two-seed case order free. With three or more seeds that can break down,
as the last example shows.
"""

import itertools

from seedgrow import GridDomain, Neighborhood, canonical_relabel, run_with_order, standard_neighborhood

line = GridDomain.full([7])
V1 = Neighborhood([(-1,), (1,)])
seeds = [("left", [(0,)]), ("right", [(6,)])]

for mode in ("simple", "ambiguous"):
    maps = [canonical_relabel(run_with_order(mode, line, seeds, V1, order)) for order in ([0, 1], [1, 0])]
    print(f"{mode:9s} {maps[0].values.tolist()} vs {maps[1].values.tolist()} -> differs at {maps[0].diff(maps[1])}")

# canonical codes: 0 boundary, 1.. seeds sorted by id, -1 unlabeled

# A 2x4 box with three seeds. (0,1) is tied between s0 and s2, but its cover
# set also picks up s1 through a same-distance neighbour, which changes the
# tie-break.
box = GridDomain.full([2, 4])
three = [("s0", [(0, 0)]), ("s1", [(0, 3)]), ("s2", [(1, 1)])]
V4 = standard_neighborhood(2, 4)
print()
for order in itertools.permutations(range(3)):
    m = canonical_relabel(run_with_order("ambiguous", box, three, V4, list(order)))
    print(order, m.values.tolist())
