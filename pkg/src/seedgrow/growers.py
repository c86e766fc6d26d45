"""Seeded region growing by geodesic dilation, in three variants.

``grow_simple``
    every popped couple grows its region; the result is a simple partition.
``grow_vboundary``
    a point covered by two or more zones of influence joins a passive
    boundary region, which separates the regions by a one-point-thick wall.
``grow_ambiguous``
    such a point joins the boundary only when the popped label is the
    smallest label covering it; otherwise the popped region takes it. The
    boundary then consists of the points equidistant to several seeds and
    the result no longer depends on the seed order.

All three use a single FIFO bucket, so points are reached in order of
geodesic distance from the seeds.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Hashable, NamedTuple, Optional, Sequence

from .grid import GridDomain, Neighborhood, _as_point
from .population import UNLABELED, LabelMap, Population, TribePolicy
from .queues import Discipline, SystemQueue, in_domain_key

__all__ = [
    "Seed",
    "GrowStats",
    "GrowResult",
    "MODES",
    "grow_simple",
    "grow_vboundary",
    "grow_ambiguous",
    "grow",
    "run_with_order",
    "validate_seeds",
]

MODES = ("simple", "vboundary", "ambiguous")


class Seed(NamedTuple):
    id: Hashable
    points: tuple


@dataclass
class GrowStats:
    pops: int = 0
    skips: int = 0
    growths: int = 0
    boundary_growths: int = 0


@dataclass
class GrowResult:
    labelmap: LabelMap
    seed_ids: dict
    boundary_label: Optional[int]
    stats: GrowStats = field(default_factory=GrowStats)
    mode: str = "simple"
    seed_list: list = field(default_factory=list)

    @property
    def seed_order(self) -> list:
        """Seed ids in the order their regions were created.

        ``seed_list`` instead keeps the caller's SeedList order, which differs
        from this one after :func:`run_with_order`.
        """
        return [self.seed_ids[k] for k in sorted(self.seed_ids)]

    def region(self, seed_id) -> frozenset:
        for k, sid in self.seed_ids.items():
            if sid == seed_id:
                return self.labelmap.points(k)
        raise KeyError(seed_id)

    def boundary(self) -> frozenset:
        if self.boundary_label is None:
            return frozenset()
        return self.labelmap.points(self.boundary_label)


def _normalize(seeds) -> list:
    out = []
    for s in seeds:
        sid, pts = s
        if isinstance(pts, (set, frozenset)):
            pts = sorted(_as_point(p) for p in pts)
        elif isinstance(pts, int) or (len(pts) and isinstance(pts[0], int)):
            pts = (pts,)
        out.append(Seed(sid, tuple(_as_point(p) for p in pts)))
    return out


def validate_seeds(domain: GridDomain, seeds, V: Optional[Neighborhood] = None) -> list:
    """Check seed ids are unique, seeds lie in Omega and do not overlap.

    With ``V`` given, distinct seeds must also be non-adjacent.
    Returns the seeds as a list of :class:`Seed`.
    """
    seeds = _normalize(seeds)
    owner = {}
    ids = set()
    for sid, pts in seeds:
        if sid in ids:
            raise ValueError(f"duplicate seed id {sid!r}")
        ids.add(sid)
        if not pts:
            raise ValueError(f"seed {sid!r} has no points")
        for p in pts:
            if len(p) != domain.ndim:
                raise ValueError(f"seed {sid!r}: point {p} has dimension {len(p)}, domain has {domain.ndim}")
            if not domain.contains(p):
                raise ValueError(f"seed {sid!r}: point {p} is not in Omega")
            if p in owner:
                raise ValueError(f"seed {sid!r}: point {p} already belongs to seed {owner[p]!r}")
            owner[p] = sid
    if V is not None:
        for p, sid in owner.items():
            for v in V:
                q = tuple(a + b for a, b in zip(p, v))
                other = owner.get(q)
                if other is not None and other != sid:
                    raise ValueError(f"seeds {sid!r} and {other!r} are adjacent at {p}/{q}")
    return seeds


def grow(
    mode: str,
    domain: GridDomain,
    seeds,
    V: Neighborhood,
    *,
    trace: Optional[Callable] = None,
    debug: bool = False,
) -> GrowResult:
    """Run one of the three growing processes; see the module docstring.

    ``trace``, when given, is called as ``trace(step, point, label, cause)``
    after every growth (cause ``seed``, ``region`` or ``boundary``; ``step``
    counts growths from 1) and for every discarded stale couple (cause
    ``skip``, ``step`` being the number of growths so far).
    """
    if mode not in MODES:
        raise ValueError(f"unknown mode {mode!r}; expected one of {MODES}")
    if V.dimension != domain.ndim:
        raise ValueError("neighborhood and domain dimensions differ")
    seeds = validate_seeds(domain, seeds, V if mode == "vboundary" else None)

    sq = SystemQueue(in_domain_key(domain.inside_flat()), Discipline.FIFO)
    pop = Population(domain, sq, debug=debug)
    stats = GrowStats()
    point = domain.point

    boundary = None
    if mode != "simple":
        boundary = pop.growth_tribe(TribePolicy.make_passive())
    tribe = TribePolicy.make_active(V)
    seed_ids = {}
    for sid, pts in seeds:
        ref = pop.growth_tribe(tribe)
        seed_ids[ref] = sid
        for p in pts:
            pop.growth(p, ref)
            stats.growths += 1
            if trace is not None:
                trace(stats.growths, p, ref, "seed")

    labels = pop._labels
    zi = pop._zi
    grow_at = pop._growth
    sq.select_queue(0)
    while not sq.empty():
        k, i = sq.pop()
        stats.pops += 1
        if labels[k] != UNLABELED:
            stats.skips += 1
            if trace is not None:
                trace(stats.growths, point(k), i, "skip")
            continue
        cover = zi[k]
        if mode == "simple" or len(cover) < 2:
            target = i
        elif mode == "vboundary":
            target = boundary
        else:
            target = boundary if i == cover[0] else i
        grow_at(k, target)
        stats.growths += 1
        if target == boundary:
            stats.boundary_growths += 1
        if trace is not None:
            trace(stats.growths, point(k), target, "boundary" if target == boundary else "region")

    return GrowResult(pop.labels(), seed_ids, boundary, stats, mode, [sid for sid, _ in seeds])


def grow_simple(domain: GridDomain, seeds, V: Neighborhood, **kw) -> GrowResult:
    """Geodesic dilation from the seeds; each popped couple grows its region."""
    return grow("simple", domain, seeds, V, **kw)


def grow_vboundary(domain: GridDomain, seeds, V: Neighborhood, **kw) -> GrowResult:
    """Geodesic dilation with a one-point-thick boundary region.

    Seeds must be pairwise non-adjacent under ``V``.
    """
    return grow("vboundary", domain, seeds, V, **kw)


def grow_ambiguous(domain: GridDomain, seeds, V: Neighborhood, **kw) -> GrowResult:
    """Geodesic dilation whose boundary gathers the equidistant points.

    A point covered by at least two zones of influence goes to the boundary
    when the couple popped for it carries the smallest covering label.
    """
    return grow("ambiguous", domain, seeds, V, **kw)


def run_with_order(mode: str, domain: GridDomain, seeds: Sequence, V: Neighborhood, order: Sequence[int], **kw) -> GrowResult:
    """Run ``mode`` with the seeds initialized in ``order`` (indices into ``seeds``)."""
    seeds = list(seeds)
    order = [int(o) for o in order]
    if sorted(order) != list(range(len(seeds))):
        raise ValueError(f"{order} is not a permutation of range({len(seeds)})")
    result = grow(mode, domain, [seeds[o] for o in order], V, **kw)
    result.seed_list = [sid for sid, _ in validate_seeds(domain, seeds)]
    return result
