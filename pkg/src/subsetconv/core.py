"""Ground sets, bitmask subsets, and dense set-function tables.

A ground set of ``n`` elements is canonically ``{1, ..., n}`` with
element ``i`` stored in bit ``i - 1`` of a mask, so subsets are the
integers ``0 .. 2**n - 1`` and a set function is a dense table indexed
by mask.  ``n`` is capped at 28 so every algorithm's ``2**n`` tables
stay within desk memory.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .errors import GuardError
from .rings import Ring

MAX_GROUND_ELEMENTS = 28


@dataclass(frozen=True)
class GroundSet:
    """An n-element universe, 0 <= n <= 28."""

    n: int

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 0:
            raise ValueError(f"ground set size must be a nonnegative integer, got {self.n!r}")
        if self.n > MAX_GROUND_ELEMENTS:
            raise GuardError(
                f"ground set size {self.n} exceeds the cap of {MAX_GROUND_ELEMENTS}"
            )

    @property
    def size(self) -> int:
        """Number of subsets, 2**n."""
        return 1 << self.n

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def check_mask(self, s: int) -> int:
        if not isinstance(s, int) or s < 0 or s >= (1 << self.n):
            raise ValueError(f"mask {s!r} is out of range for a {self.n}-element ground set")
        return s

    def elements(self, s: int) -> list[int]:
        """1-based elements of a mask, ascending."""
        self.check_mask(s)
        return [i + 1 for i in range(self.n) if s >> i & 1]

    def mask_of(self, elements: Iterable[int]) -> int:
        m = 0
        for e in elements:
            if not 1 <= e <= self.n:
                raise ValueError(f"element {e} is outside 1..{self.n}")
            m |= 1 << (e - 1)
        return m


def iterate_subsets(s: int) -> Iterator[int]:
    """Yield every submask of ``s`` in strictly decreasing order.

    Starts at ``s`` itself and ends at 0; visits exactly
    ``2**popcount(s)`` masks.
    """
    if s < 0:
        raise ValueError("mask must be nonnegative")
    t = s
    while True:
        yield t
        if t == 0:
            return
        t = (t - 1) & s


class SetFunction:
    """Dense table of ``2**n`` ring values, index = subset mask.

    Values are copied on construction and must be treated as immutable
    afterwards; all operations on set functions are pure.
    """

    __slots__ = ("ground", "ring", "values")

    def __init__(self, ground: GroundSet, ring: Ring, values: Sequence):
        expected = ground.size
        if len(values) != expected:
            raise ValueError(
                f"expected {expected} values for a {ground.n}-element ground set, "
                f"got {len(values)}"
            )
        self.ground = ground
        self.ring = ring
        self.values = [ring.coerce(v) for v in values]

    @classmethod
    def _trusted(cls, ground: GroundSet, ring: Ring, values: list) -> "SetFunction":
        # Internal: takes ownership of a list of ring-closed values, skipping
        # per-entry coercion.  Callers must not retain references to `values`.
        sf = object.__new__(cls)
        sf.ground = ground
        sf.ring = ring
        sf.values = values
        return sf

    def __len__(self) -> int:
        return len(self.values)

    def __getitem__(self, mask: int):
        return self.values[mask]

    def __iter__(self):
        return iter(self.values)

    def __eq__(self, other) -> bool:
        if not isinstance(other, SetFunction):
            return NotImplemented
        return (
            self.ground == other.ground
            and self.ring is other.ring
            and self.values == other.values
        )

    def __repr__(self) -> str:
        if len(self.values) <= 8:
            body = repr(self.values)
        else:
            body = f"[{self.values[0]!r}, ...{len(self.values)} entries]"
        return f"SetFunction(n={self.ground.n}, ring={self.ring.name}, values={body})"

    def with_values(self, values: Sequence) -> "SetFunction":
        return SetFunction(self.ground, self.ring, values)


def make_set_function(ground: GroundSet, values: Sequence, ring: Ring) -> SetFunction:
    """Build a dense set function; ``values`` must have exactly ``2**n`` entries."""
    return SetFunction(ground, ring, values)


def delta_empty(ground: GroundSet, ring: Ring) -> SetFunction:
    """The convolution identity: 1 at the empty set, 0 elsewhere."""
    values = [ring.zero] * ground.size
    values[0] = ring.one
    return SetFunction(ground, ring, values)


def all_ones(ground: GroundSet, ring: Ring) -> SetFunction:
    return SetFunction(ground, ring, [ring.one] * ground.size)


def popcounts(n: int) -> list[int]:
    """Table of popcount(mask) for all masks of an n-element ground set."""
    pc = [0] * (1 << n)
    for m in range(1, 1 << n):
        pc[m] = pc[m >> 1] + (m & 1)
    return pc
