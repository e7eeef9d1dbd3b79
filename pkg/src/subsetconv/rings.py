"""Exact coefficient rings for set-function tables.

Three concrete rings are shipped, all exact (no floating point):

* ``I64`` -- signed 64-bit integers where any overflow raises
  :class:`~subsetconv.errors.RingOverflowError` instead of wrapping;
* ``BIGINT`` -- arbitrary-precision integers (Python ``int``);
* ``RATIONAL`` -- arbitrary-precision rationals (``fractions.Fraction``,
  which keeps values canonical so equal values always compare equal).

The ring interface deliberately does not assume multiplicative
commutativity; the shipped rings all happen to be commutative.

``CountingRing`` wraps any ring and counts additions/subtractions and
multiplications.  Counting is opt-in: plain rings dispatch to the fast
kernels, counting rings always run the instrumented generic loops, so
the hot paths pay nothing when counting is disabled.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import InexactDivisionError, RingOverflowError

I64_MAX = 2**63 - 1
I64_MIN = -(2**63)


class Ring:
    """Interface shared by the concrete rings.

    An instance provides ``zero``, ``one`` and exact ``add``, ``sub``,
    ``neg``, ``mul``, plus ``coerce`` for validating externally supplied
    values.  Elements are ordinary Python objects compared with ``==``.
    """

    name: str = "abstract"
    #: True when elements are plain integers (needed by XOR convolution).
    integral: bool = False

    @property
    def zero(self):
        raise NotImplementedError

    @property
    def one(self):
        raise NotImplementedError

    def add(self, a, b):
        raise NotImplementedError

    def sub(self, a, b):
        raise NotImplementedError

    def neg(self, a):
        raise NotImplementedError

    def mul(self, a, b):
        raise NotImplementedError

    def coerce(self, value):
        """Validate and normalize an externally supplied element."""
        raise NotImplementedError

    def divexact_pow2(self, a, n: int):
        """Divide by 2**n, raising if the quotient would be inexact."""
        raise NotImplementedError

    def __repr__(self):
        return f"<ring {self.name}>"


class CheckedWordRing(Ring):
    """Signed 64-bit integers; any overflow is an error, never a wrap."""

    name = "i64"
    integral = True

    @property
    def zero(self):
        return 0

    @property
    def one(self):
        return 1

    def _check(self, v):
        if v > I64_MAX or v < I64_MIN:
            raise RingOverflowError(f"i64 overflow: {v}")
        return v

    def add(self, a, b):
        return self._check(a + b)

    def sub(self, a, b):
        return self._check(a - b)

    def neg(self, a):
        return self._check(-a)

    def mul(self, a, b):
        return self._check(a * b)

    def coerce(self, value):
        if isinstance(value, bool) or not isinstance(value, int):
            raise TypeError(f"i64 ring holds integers, got {value!r}")
        return self._check(value)

    def divexact_pow2(self, a, n):
        if a & ((1 << n) - 1):
            raise InexactDivisionError(f"{a} is not divisible by 2**{n}")
        return a >> n


class BigIntRing(Ring):
    """Arbitrary-precision integers."""

    name = "big"
    integral = True

    @property
    def zero(self):
        return 0

    @property
    def one(self):
        return 1

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a * b

    def coerce(self, value):
        if isinstance(value, bool) or not isinstance(value, int):
            raise TypeError(f"bigint ring holds integers, got {value!r}")
        return value

    def divexact_pow2(self, a, n):
        if a & ((1 << n) - 1):
            raise InexactDivisionError(f"{a} is not divisible by 2**{n}")
        return a >> n


class RationalRing(Ring):
    """Exact rationals; ``Fraction`` keeps every value in lowest terms."""

    name = "rational"
    integral = False

    @property
    def zero(self):
        return Fraction(0)

    @property
    def one(self):
        return Fraction(1)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a * b

    def coerce(self, value):
        if isinstance(value, Fraction):
            return value
        if isinstance(value, int) and not isinstance(value, bool):
            return Fraction(value)
        raise TypeError(f"rational ring holds Fractions or ints, got {value!r}")

    def divexact_pow2(self, a, n):
        return a / (1 << n)


I64 = CheckedWordRing()
BIGINT = BigIntRing()
RATIONAL = RationalRing()


@dataclass
class OpCounter:
    """Running totals of ring additions/subtractions and multiplications."""

    adds: int = 0
    muls: int = 0

    def copy(self) -> "OpCounter":
        return OpCounter(self.adds, self.muls)

    def total(self) -> int:
        return self.adds + self.muls

    def __iter__(self):
        return iter((self.adds, self.muls))


class CountingRing(Ring):
    """Instrumented wrapper counting every add/sub/neg and mul.

    Negation and subtraction are tallied together with additions.  A
    counting ring never dispatches to compiled kernels, so the counts
    reflect the exact number of ring operations the generic algorithms
    perform.
    """

    def __init__(self, base: Ring):
        if isinstance(base, CountingRing):
            raise ValueError("refusing to nest counting rings")
        self.base = base
        self.counter = OpCounter()
        self.name = f"counting({base.name})"
        self.integral = base.integral

    @property
    def zero(self):
        return self.base.zero

    @property
    def one(self):
        return self.base.one

    def add(self, a, b):
        self.counter.adds += 1
        return self.base.add(a, b)

    def sub(self, a, b):
        self.counter.adds += 1
        return self.base.sub(a, b)

    def neg(self, a):
        self.counter.adds += 1
        return self.base.neg(a)

    def mul(self, a, b):
        self.counter.muls += 1
        return self.base.mul(a, b)

    def coerce(self, value):
        return self.base.coerce(value)

    def divexact_pow2(self, a, n):
        return self.base.divexact_pow2(a, n)

    def reset(self) -> None:
        self.counter = OpCounter()

    def snapshot(self) -> OpCounter:
        return self.counter.copy()


def counter_snapshot(ring: Ring) -> OpCounter:
    """Return the current (adds, muls) of a counting-enabled ring.

    Reading does not reset the counter.
    """
    if not isinstance(ring, CountingRing):
        raise TypeError("counter_snapshot requires a CountingRing context")
    return ring.snapshot()
