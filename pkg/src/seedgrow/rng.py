"""xorshift64* generator used for reproducible seed-order shuffles.

State update (Vigna 2014, the ``xorshift64*`` variant)::

    x ^= x >> 12
    x ^= x << 25   (mod 2**64)
    x ^= x >> 27
    out = x * 0x2545F4914F6CDD1D  (mod 2**64)

A zero seed is replaced by ``0x9E3779B97F4A7C15`` (the state must be nonzero).
Shuffles are Fisher-Yates from the last index down, drawing ``j = next() %
(i + 1)``. The modulo bias is below 2**-50 for any realistic seed count.
"""

_MASK = (1 << 64) - 1
_MULT = 0x2545F4914F6CDD1D
_ZERO_SEED = 0x9E3779B97F4A7C15


class XorShift64Star:
    def __init__(self, seed: int):
        seed &= _MASK
        self.state = seed or _ZERO_SEED

    def next(self) -> int:
        x = self.state
        x ^= x >> 12
        x ^= (x << 25) & _MASK
        x ^= x >> 27
        self.state = x
        return (x * _MULT) & _MASK

    def shuffle(self, items: list) -> list:
        """Shuffle ``items`` in place and return it."""
        for i in range(len(items) - 1, 0, -1):
            j = self.next() % (i + 1)
            items[i], items[j] = items[j], items[i]
        return items

    def permutation(self, n: int) -> list:
        return self.shuffle(list(range(n)))
