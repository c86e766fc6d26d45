"""Brute-force ground truth for the growers.

Geodesic distance is the number of V-steps of a shortest path inside Omega,
computed by breadth-first search independently of the queue/population
machinery. Influence zones and the ambiguous set follow from the per-seed
distance maps. The partition validators check set axioms directly.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from itertools import combinations

import numpy as np

from .grid import GridDomain, Neighborhood, _as_point, erode, reachable
from .growers import GrowResult, validate_seeds
from .population import UNLABELED, LabelMap, TribePolicy

__all__ = [
    "INFINITY",
    "PartitionReport",
    "geodesic_distances",
    "seed_distances",
    "influence_zones",
    "ambiguous_set",
    "is_simple_partition",
    "is_v_boundary_partition",
    "decomposition_check",
    "canonical_relabel",
    "CANONICAL_BOUNDARY",
]

INFINITY = np.inf
CANONICAL_BOUNDARY = 0


def geodesic_distances(domain: GridDomain, source, V: Neighborhood) -> np.ndarray:
    """Multi-source unit-step distances inside Omega.

    Returns a float array of shape ``domain.dims``; unreachable points and
    points off Omega hold ``inf``.
    """
    src = [_as_point(s) for s in source]
    for s in src:
        if not domain.contains(s):
            raise ValueError(f"source point {s} is not in Omega")
    table = domain.neighbor_table(V)
    dist = [-1] * domain.size
    todo = deque()
    for s in src:
        k = domain.index(s)
        if dist[k] != 0:
            dist[k] = 0
            todo.append(k)
    while todo:
        k = todo.popleft()
        d = dist[k] + 1
        for j in table[k]:
            if dist[j] < 0:
                dist[j] = d
                todo.append(j)
    out = np.array(dist, dtype=float)
    out[out < 0] = INFINITY
    return out.reshape(domain.dims)


def seed_distances(domain: GridDomain, seeds, V: Neighborhood) -> np.ndarray:
    """Stack of distance maps, one per seed, in SeedList order."""
    seeds = validate_seeds(domain, seeds)
    if not seeds:
        return np.full((0,) + domain.dims, INFINITY)
    return np.stack([geodesic_distances(domain, pts, V) for _, pts in seeds])


def _to_points(mask: np.ndarray) -> frozenset:
    return frozenset(map(tuple, np.argwhere(mask).tolist()))


def influence_zones(domain: GridDomain, seeds, V: Neighborhood) -> list:
    """Per seed, the points strictly closer to it than to every other seed."""
    D = seed_distances(domain, seeds, V)
    zones = []
    for i in range(len(D)):
        others = np.delete(D, i, axis=0)
        closer = np.isfinite(D[i])
        if len(others):
            closer &= np.all(D[i] < others, axis=0)
        zones.append(_to_points(closer))
    return zones


def ambiguous_set(domain: GridDomain, seeds, V: Neighborhood) -> frozenset:
    """Reachable points whose minimal seed distance is attained at least twice."""
    D = seed_distances(domain, seeds, V)
    if len(D) < 2:
        return frozenset()
    dmin = D.min(axis=0)
    ties = (D == dmin).sum(axis=0) >= 2
    return _to_points(ties & np.isfinite(dmin))


@dataclass
class PartitionReport:
    """Outcome of a partition check; ``violations`` holds (axiom, witnesses)."""

    violations: list = field(default_factory=list)

    @property
    def verdict(self) -> bool:
        return not self.violations

    def __bool__(self):
        return self.verdict

    def axioms(self) -> set:
        return {a for a, _ in self.violations}

    def __str__(self):
        if self.verdict:
            return "partition OK"
        lines = ["partition FAILED"]
        for axiom, wit in self.violations:
            shown = ", ".join(map(str, wit[:8])) + (" ..." if len(wit) > 8 else "")
            lines.append(f"  {axiom}: {len(wit)} point(s): {shown}")
        return "\n".join(lines)


def _cover(report, sets, universe):
    union = frozenset().union(*sets) if sets else frozenset()
    gap = sorted(universe - union)
    extra = sorted(union - universe)
    if gap:
        report.violations.append(("cover-gap", gap))
    if extra:
        report.violations.append(("cover-excess", extra))


def is_simple_partition(blocks, universe) -> PartitionReport:
    """Blocks cover ``universe`` exactly and are pairwise disjoint."""
    blocks = [frozenset(map(_as_point, b)) for b in blocks]
    universe = frozenset(map(_as_point, universe))
    report = PartitionReport()
    _cover(report, blocks, universe)
    for (i, a), (j, b) in combinations(enumerate(blocks), 2):
        shared = sorted(a & b)
        if shared:
            report.violations.append((f"disjoint[{i},{j}]", shared))
    return report


def is_v_boundary_partition(blocks, boundary, V: Neighborhood, universe) -> PartitionReport:
    """Blocks plus boundary cover ``universe``; blocks are mutually non-adjacent;
    the boundary erodes to nothing.
    """
    blocks = [frozenset(map(_as_point, b)) for b in blocks]
    boundary = frozenset(map(_as_point, boundary))
    universe = frozenset(map(_as_point, universe))
    report = PartitionReport()
    _cover(report, blocks + [boundary], universe)
    # separation is tested on the full lattice, not just inside the box
    for i, a in enumerate(blocks):
        grown = set(a)
        for x in a:
            for v in V:
                grown.add(tuple(p + q for p, q in zip(x, v)))
        for j, b in enumerate(blocks):
            if i != j:
                touched = sorted(b & grown)
                if touched:
                    report.violations.append((f"separation[{i},{j}]", touched))
    thick = sorted(erode(boundary, V))
    if thick:
        report.violations.append(("thickness", thick))
    return report


def decomposition_check(domain: GridDomain, seeds, V: Neighborhood) -> bool:
    """Zones and the ambiguous set are disjoint and tile the reachable set."""
    seeds = validate_seeds(domain, seeds)
    zones = influence_zones(domain, seeds, V)
    amb = ambiguous_set(domain, seeds, V)
    universe = reachable(domain, [p for _, pts in seeds for p in pts], V)
    return is_simple_partition(zones + [amb], universe).verdict


def _id_key(sid):
    return (type(sid).__name__, str(sid))


def canonical_relabel(result: GrowResult) -> LabelMap:
    """Replace run-local labels by a code that depends only on seed identity.

    Unlabeled stays ``UNLABELED``, the boundary becomes
    :data:`CANONICAL_BOUNDARY`, and the seed region with the k-th smallest id
    (ids ordered by type name, then ``str``) becomes ``k + 1``.
    """
    ids = sorted(result.seed_ids.values(), key=_id_key)
    if len({_id_key(s) for s in ids}) != len(ids):
        raise ValueError("seed ids are not distinguishable by their string form")
    code = {sid: n + 1 for n, sid in enumerate(ids)}
    lut_size = len(result.labelmap.policies) + 1
    lut = np.full(lut_size, UNLABELED, dtype=np.int32)
    for label, sid in result.seed_ids.items():
        lut[label] = code[sid]
    if result.boundary_label is not None:
        lut[result.boundary_label] = CANONICAL_BOUNDARY
    # index -1 (UNLABELED) hits the spare last slot, which stays UNLABELED
    values = lut[result.labelmap.values]
    head = TribePolicy.make_passive() if result.boundary_label is not None else None
    policies = [head] + [result.labelmap.policies[lab] for lab in sorted(result.seed_ids, key=lambda l: code[result.seed_ids[l]])]
    return LabelMap(values, policies)
