"""System of queues: (point, label) couples bucketed by an integer key.

Each bucket keeps entering-time order; ``pop`` takes the oldest (FIFO) or
newest (LIFO) entry of the currently selected bucket. A key function that
returns :data:`OUT` filters the couple out entirely.
"""

from __future__ import annotations

import enum
import itertools
from collections import deque
from typing import Callable, Hashable, NamedTuple

__all__ = ["OUT", "Discipline", "PushResult", "QueueEntry", "SystemQueue", "in_domain_key"]


class _Out:
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "OUT"


OUT = _Out()


class Discipline(enum.Enum):
    FIFO = "fifo"
    LIFO = "lifo"


class PushResult(enum.Enum):
    ACCEPTED = "accepted"
    FILTERED_OUT = "filtered_out"


class QueueEntry(NamedTuple):
    seq: int
    point: Hashable
    label: int


class SystemQueue:
    """Bucketed queue of (point, label) couples.

    Parameters
    ----------
    key : callable
        ``key(point, label)`` returning an int bucket key or :data:`OUT`.
    discipline : Discipline
        Pop order within a bucket.

    Entries are not deduplicated; callers discard stale couples themselves.
    """

    def __init__(self, key: Callable, discipline: Discipline = Discipline.FIFO):
        self.key = key
        self.discipline = Discipline(discipline)
        self.buckets: dict[int, deque] = {}
        self.selected = 0
        self._seq = itertools.count()
        self._lifo = self.discipline is Discipline.LIFO

    def push(self, x, i: int) -> PushResult:
        k = self.key(x, i)
        if k is OUT:
            return PushResult.FILTERED_OUT
        bucket = self.buckets.get(k)
        if bucket is None:
            bucket = self.buckets[k] = deque()
        bucket.append(QueueEntry(next(self._seq), x, i))
        return PushResult.ACCEPTED

    def select_queue(self, k: int) -> None:
        self.selected = k

    def empty(self) -> bool:
        return not self.buckets.get(self.selected)

    def pop(self) -> tuple:
        bucket = self.buckets.get(self.selected)
        if not bucket:
            raise IndexError(f"pop from empty bucket {self.selected}")
        e = bucket.pop() if self._lifo else bucket.popleft()
        return e.point, e.label

    def __len__(self):
        return sum(len(b) for b in self.buckets.values())

    def entries(self, k: int) -> list:
        """Snapshot of bucket ``k`` in seq order."""
        return list(self.buckets.get(k, ()))


def in_domain_key(inside) -> Callable:
    """Key 0 for points whose ``inside[x]`` is truthy, OUT otherwise.

    ``inside`` is any indexable membership table (flat mask, set wrapper...).
    """

    def key(x, i):
        return 0 if inside[x] else OUT

    return key
