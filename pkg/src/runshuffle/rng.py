"""Portable seeded randomness.

Every random decision in the package goes through :class:`RngStream`, a
SplitMix64 generator (Steele, Lea & Flood, "Fast splittable pseudorandom
number generators", OOPSLA 2014; the reference C code is Vigna's
``splitmix64.c``).  The algorithm is fixed so any implementation can
reproduce the same shuffles from the same seed.

Reference vectors for seed 1234567, first five outputs::

    6457827717110365317
    3203168211198807973
    9817491932198370423
    4593380528125082431
    16408922859458223821

Bounded draws use modulo reduction with rejection of the biased tail, so
``below(n)`` is exactly uniform on ``[0, n)``.
"""

from __future__ import annotations

MASK64 = (1 << 64) - 1
GOLDEN_GAMMA = 0x9E3779B97F4A7C15

REFERENCE_SEED = 1234567
REFERENCE_OUTPUTS = (
    6457827717110365317,
    3203168211198807973,
    9817491932198370423,
    4593380528125082431,
    16408922859458223821,
)


def _mix(z: int) -> int:
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
    return z ^ (z >> 31)


class RngStream:
    """SplitMix64 stream.  ``position`` counts 64-bit words consumed."""

    __slots__ = ("seed", "position", "_state")

    def __init__(self, seed: int) -> None:
        self.seed = seed & MASK64
        self.position = 0
        self._state = self.seed

    def next_u64(self) -> int:
        self._state = (self._state + GOLDEN_GAMMA) & MASK64
        self.position += 1
        return _mix(self._state)

    def below(self, n: int) -> int:
        """Uniform integer in ``[0, n)``."""
        if n <= 0:
            raise ValueError(f"bound must be positive, got {n}")
        # reject draws from the last partial block of size 2**64 mod n
        limit = (1 << 64) - ((1 << 64) % n)
        while True:
            x = self.next_u64()
            if x < limit:
                return x % n

    def random(self) -> float:
        """Uniform float in ``[0, 1)`` built from the top 53 bits."""
        return (self.next_u64() >> 11) * (1.0 / (1 << 53))

    def shuffle(self, items: list) -> None:
        """In-place Fisher-Yates shuffle (Durstenfeld, descending index)."""
        for i in range(len(items) - 1, 0, -1):
            j = self.below(i + 1)
            items[i], items[j] = items[j], items[i]

    def sample(self, population: int, count: int) -> list[int]:
        """``count`` distinct integers from ``range(population)``, in draw order."""
        if not 0 <= count <= population:
            raise ValueError(f"cannot sample {count} from {population}")
        # partial Fisher-Yates over a lazily materialised index table
        swapped: dict[int, int] = {}
        out = []
        for i in range(count):
            j = i + self.below(population - i)
            vi = swapped.get(i, i)
            vj = swapped.get(j, j)
            swapped[j] = vi
            out.append(vj)
        return out


def derive_seed(seed: int, index: int) -> int:
    """Seed of the ``index``-th independent sub-stream of ``seed``.

    Defined as ``RngStream(seed + (index + 1) * GOLDEN_GAMMA).next_u64()``,
    arithmetic modulo 2**64.
    """
    if index < 0:
        raise ValueError("sub-stream index must be nonnegative")
    return _mix((seed + (index + 1) * GOLDEN_GAMMA + GOLDEN_GAMMA) & MASK64)
