"""Arbitrary-precision interval arithmetic over MPFR (via gmpy2).

Every endpoint is an ``mpfr``; the lower endpoint is always produced in a
round-toward-minus-infinity context and the upper endpoint in a
round-toward-plus-infinity context. MPFR's elementary functions are
correctly rounded in the requested direction, so ``exp`` and ``log`` are
exact enclosures with at most one ulp of slack per endpoint.

Precision is chosen by the escalation drivers :func:`resolve` and
:func:`refine`; callers pass ``bits`` through but never pick it themselves.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterator, Optional

import gmpy2
from gmpy2 import RoundDown, RoundUp, mpfr, mpq

__all__ = [
    "DomainError",
    "Interval",
    "PrecisionConfig",
    "RangeError",
    "Unresolved",
    "const_interval",
    "exp_interval",
    "ln_interval",
    "pow_interval",
    "refine",
    "resolve",
]

DEFAULT_BITS = 128
CONSTANTS = ("e", "pi", "ln_pi", "ln_2pi")


class DomainError(ValueError):
    """Argument outside the domain of the requested function."""


class RangeError(OverflowError):
    """Result not representable at the working exponent range."""


class Unresolved(ArithmeticError):
    """A decision stayed UNKNOWN up to the maximum precision."""

    def __init__(self, bits: int, enclosure: "Interval | None" = None, what: str = ""):
        msg = f"undecided at {bits} bits"
        if what:
            msg = f"{what}: {msg}"
        if enclosure is not None:
            msg += f" (enclosure {enclosure})"
        super().__init__(msg)
        self.bits = bits
        self.enclosure = enclosure


@dataclass(frozen=True)
class PrecisionConfig:
    start_bits: int = 128
    max_bits: int = 8192
    growth_factor: int = 2

    def __post_init__(self):
        if self.start_bits < 53:
            raise ValueError("start_bits must be at least 53")
        if self.max_bits < self.start_bits:
            raise ValueError("max_bits must be at least start_bits")
        if self.growth_factor < 2:
            raise ValueError("growth_factor must be at least 2")

    def schedule(self) -> Iterator[int]:
        bits = self.start_bits
        while bits < self.max_bits:
            yield bits
            bits *= self.growth_factor
        yield self.max_bits


DEFAULT_CONFIG = PrecisionConfig()


@functools.lru_cache(maxsize=None)
def _down(bits: int):
    return gmpy2.context(precision=bits, round=RoundDown)


@functools.lru_cache(maxsize=None)
def _up(bits: int):
    return gmpy2.context(precision=bits, round=RoundUp)


def _to_mpfr(value, bits: int, upward: bool):
    ctx = _up(bits) if upward else _down(bits)
    if isinstance(value, Fraction):
        value = mpq(value.numerator, value.denominator)
    return mpfr(value, bits, ctx)


def _neg_down(x, bits: int):
    """-x rounded toward minus infinity (exact when x fits in ``bits``)."""
    return _down(bits).minus(x)


def _neg_up(x, bits: int):
    return _up(bits).minus(x)


def _floor(x) -> int:
    """Exact floor of an mpfr; math.floor would go through a double."""
    num, den = x.as_integer_ratio()
    return int(num // den)


def _check_finite(lo, hi):
    if gmpy2.is_nan(lo) or gmpy2.is_nan(hi):
        raise DomainError("operation produced NaN")
    if gmpy2.is_infinite(lo) or gmpy2.is_infinite(hi):
        raise RangeError("interval endpoint overflowed")


class Interval:
    """Closed interval ``[lo, hi]`` with MPFR endpoints at ``bits`` precision.

    Arithmetic with ints and Fractions converts them to enclosures first, so
    ``x + Fraction(1, 3)`` is sound.
    """

    __slots__ = ("lo", "hi", "bits")

    def __init__(self, lo, hi=None, bits: int = DEFAULT_BITS):
        if hi is None:
            hi = lo
        if isinstance(lo, mpfr) and lo.precision <= bits:
            self.lo = lo
        else:
            self.lo = _to_mpfr(lo, bits, upward=False)
        if isinstance(hi, mpfr) and hi.precision <= bits:
            self.hi = hi
        else:
            self.hi = _to_mpfr(hi, bits, upward=True)
        self.bits = bits
        _check_finite(self.lo, self.hi)
        if self.lo > self.hi:
            raise ValueError(f"empty interval [{self.lo}, {self.hi}]")

    @classmethod
    def _raw(cls, lo, hi, bits):
        obj = cls.__new__(cls)
        obj.lo, obj.hi, obj.bits = lo, hi, bits
        _check_finite(lo, hi)
        return obj

    @classmethod
    def coerce(cls, value, bits: int) -> "Interval":
        if isinstance(value, Interval):
            return value
        if isinstance(value, float):
            raise TypeError("floats are not accepted as interval inputs; use Fraction or str")
        if isinstance(value, str):
            value = Fraction(value)
        return cls(value, value, bits)

    # -- inspection -------------------------------------------------------

    def __repr__(self):
        return f"Interval({self.lo_str()}, {self.hi_str()}, bits={self.bits})"

    def digits(self) -> int:
        return int(self.bits * 0.30103) + 2

    def lo_str(self, digits: int | None = None) -> str:
        """Lower endpoint as a decimal rounded toward minus infinity."""
        return "{:.{d}Dg}".format(self.lo, d=digits or self.digits())

    def hi_str(self, digits: int | None = None) -> str:
        """Upper endpoint as a decimal rounded toward plus infinity."""
        return "{:.{d}Ug}".format(self.hi, d=digits or self.digits())

    @property
    def width(self):
        return _up(self.bits).sub(self.hi, self.lo)

    @property
    def mid(self):
        return _down(self.bits + 1).div(_down(self.bits + 1).add(self.lo, self.hi), 2)

    def is_thin(self) -> bool:
        return self.lo == self.hi

    def contains(self, value) -> bool:
        if isinstance(value, Interval):
            return self.lo <= value.lo and value.hi <= self.hi
        if isinstance(value, Fraction):
            value = mpq(value.numerator, value.denominator)
        return self.lo <= value <= self.hi

    __contains__ = contains

    def overlaps(self, other: "Interval") -> bool:
        return self.lo <= other.hi and other.lo <= self.hi

    def hull(self, other: "Interval") -> "Interval":
        other = Interval.coerce(other, self.bits)
        return Interval._raw(min(self.lo, other.lo), max(self.hi, other.hi), max(self.bits, other.bits))

    def floor_bounds(self) -> tuple[int, int]:
        return _floor(self.lo), _floor(self.hi)

    # -- tri-state comparisons: True, False, or None when undecided -------

    def lt(self, other) -> Optional[bool]:
        other = Interval.coerce(other, self.bits)
        if self.hi < other.lo:
            return True
        if self.lo >= other.hi:
            return False
        return None

    def le(self, other) -> Optional[bool]:
        other = Interval.coerce(other, self.bits)
        if self.hi <= other.lo:
            return True
        if self.lo > other.hi:
            return False
        return None

    def gt(self, other) -> Optional[bool]:
        return Interval.coerce(other, self.bits).lt(self)

    def ge(self, other) -> Optional[bool]:
        return Interval.coerce(other, self.bits).le(self)

    def sign(self) -> Optional[int]:
        if self.lo > 0:
            return 1
        if self.hi < 0:
            return -1
        if self.lo == 0 == self.hi:
            return 0
        return None

    # -- arithmetic ----------------------------------------------------------

    def _bits_with(self, other: "Interval") -> int:
        return max(self.bits, other.bits)

    def __neg__(self):
        return Interval._raw(_neg_down(self.hi, self.bits), _neg_up(self.lo, self.bits), self.bits)

    def __pos__(self):
        return self

    def __abs__(self):
        if self.lo >= 0:
            return self
        if self.hi <= 0:
            return -self
        return Interval._raw(mpfr(0), max(_neg_up(self.lo, self.bits), self.hi), self.bits)

    def __add__(self, other):
        other = Interval.coerce(other, self.bits)
        b = self._bits_with(other)
        return Interval._raw(_down(b).add(self.lo, other.lo), _up(b).add(self.hi, other.hi), b)

    __radd__ = __add__

    def __sub__(self, other):
        other = Interval.coerce(other, self.bits)
        b = self._bits_with(other)
        return Interval._raw(_down(b).sub(self.lo, other.hi), _up(b).sub(self.hi, other.lo), b)

    def __rsub__(self, other):
        return Interval.coerce(other, self.bits) - self

    def __mul__(self, other):
        other = Interval.coerce(other, self.bits)
        b = self._bits_with(other)
        d, u = _down(b), _up(b)
        a0, a1, b0, b1 = self.lo, self.hi, other.lo, other.hi
        if a0 >= 0 and b0 >= 0:
            return Interval._raw(d.mul(a0, b0), u.mul(a1, b1), b)
        pairs = ((a0, b0), (a0, b1), (a1, b0), (a1, b1))
        lo = min(d.mul(x, y) for x, y in pairs)
        hi = max(u.mul(x, y) for x, y in pairs)
        return Interval._raw(lo, hi, b)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = Interval.coerce(other, self.bits)
        if other.lo <= 0 <= other.hi:
            raise DomainError(f"division by an interval containing zero: {other!r}")
        b = self._bits_with(other)
        d, u = _down(b), _up(b)
        a0, a1, b0, b1 = self.lo, self.hi, other.lo, other.hi
        pairs = ((a0, b0), (a0, b1), (a1, b0), (a1, b1))
        lo = min(d.div(x, y) for x, y in pairs)
        hi = max(u.div(x, y) for x, y in pairs)
        return Interval._raw(lo, hi, b)

    def __rtruediv__(self, other):
        return Interval.coerce(other, self.bits) / self

    def __pow__(self, k):
        if isinstance(k, int):
            return self._ipow(k)
        return pow_interval(self, Interval.coerce(k, self.bits))

    def _ipow(self, k: int) -> "Interval":
        if k < 0:
            return 1 / self._ipow(-k)
        if k == 0:
            return Interval(1, 1, self.bits)
        d, u = _down(self.bits), _up(self.bits)
        if self.lo >= 0:
            return Interval._raw(d.pow(self.lo, k), u.pow(self.hi, k), self.bits)
        if self.hi <= 0:
            lo = d.pow(_neg_down(self.hi, self.bits), k)
            hi = u.pow(_neg_up(self.lo, self.bits), k)
            if k % 2:
                return Interval._raw(_neg_down(hi, self.bits), _neg_up(lo, self.bits), self.bits)
            return Interval._raw(lo, hi, self.bits)
        if k % 2:
            return Interval._raw(d.pow(self.lo, k), u.pow(self.hi, k), self.bits)
        return Interval._raw(mpfr(0), u.pow(max(_neg_up(self.lo, self.bits), self.hi), k), self.bits)

    def sqrt(self) -> "Interval":
        if self.lo < 0:
            raise DomainError("sqrt of an interval with negative part")
        return Interval._raw(_down(self.bits).sqrt(self.lo), _up(self.bits).sqrt(self.hi), self.bits)

    def exp(self) -> "Interval":
        return exp_interval(self)

    def ln(self) -> "Interval":
        return ln_interval(self)

    def with_bits(self, bits: int) -> "Interval":
        """Round outward to ``bits`` (never narrows the enclosure)."""
        return Interval._raw(mpfr(self.lo, bits, _down(bits)), mpfr(self.hi, bits, _up(bits)), bits)


def exp_interval(x: Interval) -> Interval:
    try:
        lo, hi = _down(x.bits).exp(x.lo), _up(x.bits).exp(x.hi)
    except OverflowError as exc:  # pragma: no cover - depends on context traps
        raise RangeError(str(exc)) from None
    if gmpy2.is_infinite(hi):
        raise RangeError(f"exp overflow at {x.bits} bits")
    return Interval._raw(lo, hi, x.bits)


def ln_interval(x: Interval) -> Interval:
    if x.lo <= 0:
        raise DomainError(f"ln needs a positive lower endpoint, got {x.lo_str()}")
    return Interval._raw(_down(x.bits).log(x.lo), _up(x.bits).log(x.hi), x.bits)


def pow_interval(x: Interval, y) -> Interval:
    """x**y as exp(y * ln x); x must be strictly positive."""
    y = Interval.coerce(y, x.bits)
    return exp_interval(y * ln_interval(x))


@functools.lru_cache(maxsize=256)
def const_interval(name: str, bits: int = DEFAULT_BITS) -> Interval:
    """Enclosure of e, pi, ln(pi) or ln(2 pi).

    Derived constants are computed 16 bits wider and rounded outward so the
    final width stays within a couple of ulps.
    """
    if name not in CONSTANTS:
        raise ValueError(f"unknown constant {name!r}; expected one of {', '.join(CONSTANTS)}")
    if name == "e":
        one = mpfr(1)
        return Interval._raw(_down(bits).exp(one), _up(bits).exp(one), bits)
    if name == "pi":
        return Interval._raw(_down(bits).const_pi(), _up(bits).const_pi(), bits)
    wide = bits + 16
    pi = const_interval("pi", wide)
    if name == "ln_2pi":
        pi = pi * 2
    return ln_interval(pi).with_bits(bits)


def resolve(predicate: Callable[[int], Optional[bool]], config: PrecisionConfig | None = None) -> bool:
    """Evaluate ``predicate(bits)`` at growing precision until it decides.

    The predicate returns True, False, or None for UNKNOWN.
    """
    config = config or DEFAULT_CONFIG
    bits = config.start_bits
    for bits in config.schedule():
        verdict = predicate(bits)
        if verdict is not None:
            return verdict
    raise Unresolved(bits)


def refine(compute: Callable[[int], Interval], decide: Callable[[Interval], object],
           config: PrecisionConfig | None = None, what: str = ""):
    """Like :func:`resolve` but keeps the enclosure.

    ``decide`` maps an enclosure to a verdict or None. Returns
    ``(verdict, enclosure, bits)`` for the first decided evaluation.
    """
    config = config or DEFAULT_CONFIG
    enclosure = None
    bits = config.start_bits
    for bits in config.schedule():
        enclosure = compute(bits)
        verdict = decide(enclosure)
        if verdict is not None:
            return verdict, enclosure, bits
    raise Unresolved(bits, enclosure, what)
