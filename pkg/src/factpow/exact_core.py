"""Exact big-integer arithmetic: factorials, a^n versus n!, and the n_a oracle.

Everything here is integer or rational arithmetic. No floating point is
used, so the results serve as ground truth for the interval routes.
"""

from __future__ import annotations

import enum
import threading
from fractions import Fraction
from numbers import Rational

__all__ = [
    "DEFAULT_GUARD",
    "FactorialCache",
    "GuardExceeded",
    "Ordering",
    "as_rational",
    "cmp_pow_factorial",
    "exact_na",
    "factorial",
]

DEFAULT_GUARD = 10**6


class GuardExceeded(MemoryError):
    """Raised when a request would push the factorial cache past its guard."""

    def __init__(self, n: int, guard: int):
        super().__init__(f"factorial index {n} exceeds the memory guard {guard}")
        self.n = n
        self.guard = guard


class Ordering(enum.Enum):
    LT = -1
    EQ = 0
    GT = 1

    @classmethod
    def of(cls, left: int, right: int) -> "Ordering":
        return cls.LT if left < right else cls.GT if left > right else cls.EQ


def as_rational(a) -> Fraction:
    """Coerce ``a`` to a reduced Fraction; floats are rejected."""
    if isinstance(a, float):
        raise TypeError("floating-point bases are not accepted; pass a Fraction or a string")
    if isinstance(a, (Rational, str)):
        return Fraction(a)
    raise TypeError(f"cannot interpret {a!r} as a rational number")


class FactorialCache:
    """Monotone table of k! for k = 0..high_water.

    Readers never block each other once an entry exists; extension takes a
    lock so two threads never append the same entry twice.
    """

    def __init__(self, guard: int = DEFAULT_GUARD):
        self.guard = guard
        self._entries = [1]
        self._lock = threading.Lock()

    @property
    def high_water(self) -> int:
        return len(self._entries) - 1

    def __len__(self) -> int:
        return len(self._entries)

    def __getitem__(self, n: int) -> int:
        if n < 0:
            raise ValueError("factorial of a negative integer")
        if n > self.guard:
            raise GuardExceeded(n, self.guard)
        entries = self._entries
        if n < len(entries):
            return entries[n]
        with self._lock:
            value = entries[-1]
            for k in range(len(entries), n + 1):
                value *= k
                entries.append(value)
            return entries[n]


_cache = FactorialCache()


def factorial(n: int, cache: FactorialCache | None = None) -> int:
    """Return n!, extending the shared cache as needed."""
    return (cache or _cache)[n]


def _check_index(n: int, guard: int) -> None:
    if n > guard:
        raise GuardExceeded(n, guard)


def cmp_pow_factorial(a, n: int, cache: FactorialCache | None = None) -> Ordering:
    """Exact ordering of a^n against n!.

    With a = p/q in lowest terms this compares p^n with q^n * n!.
    """
    a = as_rational(a)
    if a <= 1:
        raise ValueError("a must exceed 1")
    if n < 1:
        raise ValueError("n must be a positive integer")
    cache = cache or _cache
    p, q = a.numerator, a.denominator
    return Ordering.of(pow(p, n), pow(q, n) * cache[n])


def exact_na(a, guard: int | None = None) -> int:
    """Least n with a^n <= n!, found by an upward scan from n = 2.

    The scan keeps the running products p^n and q^n * n! rather than
    recomputing powers, so each step costs two small multiplications.
    """
    a = as_rational(a)
    if a <= 1:
        raise ValueError("a must exceed 1")
    guard = _cache.guard if guard is None else guard
    p, q = a.numerator, a.denominator
    lhs, rhs = p, q  # p^1, q^1 * 1!
    n = 1
    while lhs > rhs:
        n += 1
        _check_index(n, guard)
        lhs *= p
        rhs *= q * n
    return n
