"""
Points the boundary hides
=========================

The boundary region is passive: it never grows. A point whose only route to
the seeds runs through boundary points is never queued, and stays unlabeled.
Here three seeds along the diagonal of a 3x3 box leave two corners untouched.
"""

from seedgrow import GridDomain, grow, reachable, standard_neighborhood

domain = GridDomain.full([3, 3])
seeds = [("a", [(0, 0)]), ("b", [(1, 1)]), ("c", [(2, 2)])]
V = standard_neighborhood(2, 4)

for mode in ("simple", "vboundary", "ambiguous"):
    r = grow(mode, domain, seeds, V)
    missing = reachable(domain, [(0, 0), (1, 1), (2, 2)], V) - r.labelmap.labeled()
    print(f"{mode:9s} boundary={sorted(r.boundary())} unlabeled={sorted(missing)}")

# the four points next to the middle seed are each tied between it and a
# corner seed. In vboundary mode every tie joins the boundary. In ambiguous
# mode each of them is first popped with the smaller label of its pair, so it
# joins the boundary as well, and (0,2) and (2,0) are sealed off. Simple mode
# has no boundary and labels everything.
