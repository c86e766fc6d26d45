"""Discrete lattice primitives: points, neighborhoods, binary domains.

Points are plain tuples of ints. A :class:`GridDomain` stores its mask as a
dense row-major boolean array (last axis fastest); the flat index of a point
is its position in that array.
"""

from __future__ import annotations

import itertools
from collections import deque
from typing import Iterable, Sequence

import numpy as np

Point = tuple

__all__ = [
    "Point",
    "Neighborhood",
    "GridDomain",
    "standard_neighborhood",
    "contains",
    "neighbors",
    "dilate",
    "erode",
    "reachable",
]


def _as_point(x) -> tuple:
    if isinstance(x, (int, np.integer)):
        return (int(x),)
    return tuple(int(c) for c in x)


class Neighborhood:
    """Finite set of nonzero integer offsets (the structuring element V).

    Offsets are kept sorted lexicographically; that order is the enumeration
    order used everywhere downstream.
    """

    __slots__ = ("offsets", "dimension")

    def __init__(self, offsets: Iterable):
        offs = [_as_point(v) for v in offsets]
        if not offs:
            raise ValueError("a neighborhood needs at least one offset")
        dims = {len(v) for v in offs}
        if len(dims) != 1:
            raise ValueError(f"offsets of mixed dimension: {sorted(dims)}")
        if len(set(offs)) != len(offs):
            raise ValueError("duplicate offsets")
        if any(not any(v) for v in offs):
            raise ValueError("the zero offset is not allowed")
        self.offsets = tuple(sorted(offs))
        self.dimension = dims.pop()

    def __iter__(self):
        return iter(self.offsets)

    def __len__(self):
        return len(self.offsets)

    def __eq__(self, other):
        return isinstance(other, Neighborhood) and self.offsets == other.offsets

    def __hash__(self):
        return hash(self.offsets)

    def __repr__(self):
        return f"Neighborhood({list(self.offsets)!r})"

    @property
    def radius(self) -> int:
        return max(abs(c) for v in self.offsets for c in v)

    def is_symmetric(self) -> bool:
        s = set(self.offsets)
        return all(tuple(-c for c in v) in s for v in self.offsets)


_KINDS = {4: 2, 8: 2, 6: 3, 26: 3}


def standard_neighborhood(dimension: int, kind: int) -> Neighborhood:
    """Return the 4/8 (2D) or 6/26 (3D) neighborhood.

    >>> standard_neighborhood(2, 4)
    Neighborhood([(-1, 0), (0, -1), (0, 1), (1, 0)])
    """
    if _KINDS.get(kind) != dimension:
        raise ValueError(f"{kind}-neighborhood is not defined in dimension {dimension}")
    cube = [v for v in itertools.product((-1, 0, 1), repeat=dimension) if any(v)]
    if kind in (4, 6):
        cube = [v for v in cube if sum(map(abs, v)) == 1]
    return Neighborhood(cube)


class GridDomain:
    """Binary domain Omega = {x in box : mask(x)} over the box [0, dims).

    The mask is copied and frozen at construction.
    """

    def __init__(self, mask):
        m = np.array(mask, dtype=bool, copy=True)
        if m.ndim == 0 or 0 in m.shape:
            raise ValueError("mask must have at least one axis and no empty axis")
        m.setflags(write=False)
        self.mask = m
        self.dims = tuple(m.shape)
        self.ndim = m.ndim
        self.size = m.size
        self._flat = m.ravel()
        self._strides = tuple(int(s) for s in np.cumprod((1,) + self.dims[:0:-1])[::-1])
        self._tables = {}

    @classmethod
    def full(cls, dims: Sequence[int]) -> "GridDomain":
        return cls(np.ones(tuple(dims), dtype=bool))

    def __repr__(self):
        return f"GridDomain(dims={self.dims}, |Omega|={int(self._flat.sum())})"

    def __eq__(self, other):
        return isinstance(other, GridDomain) and np.array_equal(self.mask, other.mask)

    __hash__ = None

    def in_box(self, x) -> bool:
        return all(0 <= c < d for c, d in zip(x, self.dims))

    def contains(self, x) -> bool:
        x = _as_point(x)
        if len(x) != self.ndim:
            raise ValueError(f"point {x} has dimension {len(x)}, domain has {self.ndim}")
        return self.in_box(x) and bool(self.mask[x])

    def points(self) -> frozenset:
        """All points of Omega."""
        return frozenset(map(tuple, np.argwhere(self.mask).tolist()))

    def omega_size(self) -> int:
        return int(self._flat.sum())

    # flat-index plumbing shared by the propagation code

    def index(self, x) -> int:
        return sum(c * s for c, s in zip(x, self._strides))

    def point(self, idx: int) -> tuple:
        out = []
        for s in self._strides:
            q, idx = divmod(idx, s)
            out.append(q)
        return tuple(out)

    def inside_flat(self) -> np.ndarray:
        return self._flat

    def neighbor_table(self, V: Neighborhood) -> list:
        """Per flat index, the flat indices of its V-neighbors lying in Omega.

        Entries follow V's enumeration order. Off-Omega points get an empty
        tuple. Cached per neighborhood.
        """
        table = self._tables.get(V)
        if table is not None:
            return table
        if V.dimension != self.ndim:
            raise ValueError("neighborhood and domain dimensions differ")
        coords = np.indices(self.dims).reshape(self.ndim, -1)
        idx = np.arange(self.size)
        cols = []
        for v in V.offsets:
            shifted = coords + np.array(v).reshape(-1, 1)
            ok = np.all((shifted >= 0) & (shifted < np.array(self.dims).reshape(-1, 1)), axis=0)
            nb = np.where(ok, idx + self.index(v), -1)
            nb[ok] = np.where(self._flat[nb[ok]], nb[ok], -1)
            cols.append(nb)
        stacked = np.stack(cols, axis=1).tolist()
        inside = self._flat.tolist()
        table = [tuple(j for j in row if j >= 0) if inside[k] else () for k, row in enumerate(stacked)]
        self._tables[V] = table
        return table


def contains(domain: GridDomain, x) -> bool:
    return domain.contains(x)


def neighbors(x, V: Neighborhood) -> list:
    """Translates x + v for v in V, lexicographic over offsets, unfiltered."""
    x = _as_point(x)
    if len(x) != V.dimension:
        raise ValueError("point and neighborhood dimensions differ")
    return [tuple(a + b for a, b in zip(x, v)) for v in V.offsets]


def dilate(S: Iterable, V: Neighborhood, within: GridDomain) -> frozenset:
    """(S u S+V) restricted to Omega."""
    S = {_as_point(s) for s in S}
    out = set(S)
    for s in S:
        out.update(neighbors(s, V))
    return frozenset(x for x in out if within.in_box(x) and within.mask[x])


def erode(S: Iterable, V: Neighborhood) -> frozenset:
    """Points of S whose every V-translate is also in S."""
    S = {_as_point(s) for s in S}
    return frozenset(x for x in S if all(y in S for y in neighbors(x, V)))


def reachable(domain: GridDomain, seeds: Iterable, V: Neighborhood) -> frozenset:
    """Points of Omega linked to some seed by a V-path inside Omega."""
    table = domain.neighbor_table(V)
    seen = bytearray(domain.size)
    todo = deque()
    for s in seeds:
        s = _as_point(s)
        if not domain.contains(s):
            raise ValueError(f"seed {s} lies outside the domain")
        k = domain.index(s)
        if not seen[k]:
            seen[k] = 1
            todo.append(k)
    while todo:
        k = todo.popleft()
        for j in table[k]:
            if not seen[j]:
                seen[j] = 1
                todo.append(j)
    return frozenset(domain.point(k) for k in range(domain.size) if seen[k])
