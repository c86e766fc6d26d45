"""Regions, their zones of influence, and the growth step.

A region's zone of influence is its outer border minus every labeled point:
``Z_j = (X_j + V) minus (union of all X_k)``. Rather than recomputing it,
:class:`Population` keeps for every point the sorted list of active labels
whose zone currently covers it, updated on each growth. The system queue
receives a ``(point, label)`` couple the first time a point enters a zone.

Internally points are flat indices of the domain; the public methods take
coordinate tuples.
"""

from __future__ import annotations

import bisect
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .grid import GridDomain, Neighborhood, dilate
from .queues import Discipline, SystemQueue, in_domain_key

__all__ = ["UNLABELED", "TribePolicy", "LabelMap", "Population"]

UNLABELED = -1


@dataclass(frozen=True)
class TribePolicy:
    """Growth policy of a region: active (expands through V) or passive."""

    active: bool
    V: Optional[Neighborhood] = None

    def __post_init__(self):
        if self.active and self.V is None:
            raise ValueError("an active tribe needs a neighborhood")
        if not self.active and self.V is not None:
            raise ValueError("a passive tribe has no neighborhood")

    @classmethod
    def make_active(cls, V: Neighborhood) -> "TribePolicy":
        return cls(True, V)

    @classmethod
    def make_passive(cls) -> "TribePolicy":
        return cls(False, None)


class LabelMap:
    """Immutable label image plus the label -> policy table of its run."""

    __slots__ = ("values", "policies")

    def __init__(self, values, policies=()):
        v = np.array(values, dtype=np.int32, copy=True)
        v.setflags(write=False)
        self.values = v
        self.policies = tuple(policies)

    @property
    def dims(self) -> tuple:
        return self.values.shape

    @property
    def boundary_label(self) -> Optional[int]:
        passive = [k for k, p in enumerate(self.policies) if p is not None and not p.active]
        return passive[0] if len(passive) == 1 else None

    def __eq__(self, other):
        return isinstance(other, LabelMap) and np.array_equal(self.values, other.values)

    __hash__ = None

    def __repr__(self):
        return f"LabelMap(dims={self.dims}, labels={len(self.policies)})"

    def points(self, label: int) -> frozenset:
        return frozenset(map(tuple, np.argwhere(self.values == label).tolist()))

    def labeled(self) -> frozenset:
        return frozenset(map(tuple, np.argwhere(self.values != UNLABELED).tolist()))

    def diff(self, other: "LabelMap") -> list:
        """Sorted coordinates where the two maps disagree."""
        if self.dims != other.dims:
            raise ValueError("label maps have different dims")
        return sorted(map(tuple, np.argwhere(self.values != other.values).tolist()))


class Population:
    """Owner of all regions and zones of influence.

    Parameters
    ----------
    domain : GridDomain
    sq : SystemQueue, optional
        Defaults to a single FIFO bucket keyed 0 on Omega, OUT elsewhere.
    debug : bool
        Recompute every zone from its definition after each growth and
        assert it matches the incremental cover.
    """

    def __init__(self, domain: GridDomain, sq: Optional[SystemQueue] = None, *, debug: bool = False):
        self.domain = domain
        if sq is None:
            sq = SystemQueue(in_domain_key(domain.inside_flat()), Discipline.FIFO)
        self.sq = sq
        self.debug = debug
        self._inside = domain.inside_flat()
        self._labels = [UNLABELED] * domain.size
        self._zi = [None] * domain.size
        self._policies: list[TribePolicy] = []
        self._tables: list = []
        self._members: list[list[int]] = []
        self.pushes = 0

    # tribes

    def growth_tribe(self, policy: TribePolicy) -> int:
        self._policies.append(policy)
        self._tables.append(self.domain.neighbor_table(policy.V) if policy.active else None)
        self._members.append([])
        return len(self._policies) - 1

    @property
    def policies(self) -> tuple:
        return tuple(self._policies)

    # growth

    def growth(self, x, i: int) -> None:
        d = self.domain
        if len(x) != d.ndim:
            raise ValueError(f"point {x} has wrong dimension")
        if not d.contains(x):
            raise ValueError(f"point {tuple(x)} is not in Omega")
        self._growth(d.index(x), i)

    def _growth(self, k: int, i: int) -> None:
        if not 0 <= i < len(self._policies):
            raise KeyError(f"unknown label {i}")
        if not self._inside[k]:
            raise ValueError(f"point {self.domain.point(k)} is not in Omega")
        labels = self._labels
        if labels[k] != UNLABELED:
            raise ValueError(f"point {self.domain.point(k)} already carries label {labels[k]}")
        labels[k] = i
        self._members[i].append(k)
        zi = self._zi
        zi[k] = None
        table = self._tables[i]
        if table is not None:
            push = self.sq.push
            for j in table[k]:
                if labels[j] == UNLABELED:
                    cover = zi[j]
                    if cover is None:
                        zi[j] = [i]
                    elif i not in cover:
                        bisect.insort(cover, i)
                    else:
                        continue
                    push(j, i)
                    self.pushes += 1
        if self.debug:
            self.check_zones()

    # queries

    def label_at(self, x) -> int:
        return self._labels[self.domain.index(x)]

    def zi_at(self, x) -> frozenset:
        if not self.domain.in_box(x):
            raise ValueError(f"point {tuple(x)} outside the box")
        return frozenset(self._zi[self.domain.index(x)] or ())

    def region(self, i: int) -> frozenset:
        pt = self.domain.point
        return frozenset(pt(k) for k in self._members[i])

    def labels(self) -> LabelMap:
        return LabelMap(np.reshape(self._labels, self.domain.dims), self._policies)

    def zones_from_definition(self) -> dict:
        """Z_j recomputed from scratch for every active label j."""
        labeled = {self.domain.point(k) for k, v in enumerate(self._labels) if v != UNLABELED}
        out = {}
        for j, pol in enumerate(self._policies):
            if pol.active:
                out[j] = dilate(self.region(j), pol.V, self.domain) - labeled
        return out

    def zones_incremental(self) -> dict:
        out = {j: set() for j, pol in enumerate(self._policies) if pol.active}
        for k, cover in enumerate(self._zi):
            for j in cover or ():
                out[j].add(self.domain.point(k))
        return {j: frozenset(s) for j, s in out.items()}

    def check_zones(self) -> None:
        ref = self.zones_from_definition()
        got = self.zones_incremental()
        if ref != got:
            bad = sorted(j for j in ref if ref[j] != got.get(j))
            raise AssertionError(f"zone of influence mismatch for labels {bad}")
