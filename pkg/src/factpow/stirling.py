"""Interval evaluation of the Robbins/Stirling family of functions.

Named functions of a real variable x > 0::

    L(x) = pi^(1/2x) e^(1/((12x+1)x))      R(x) = pi^(1/2x) e^(1/(12x^2))
    P(x) = x^(1/x)                         T(x) = x P(x)

together with their logarithmic derivatives ell and r, the derivatives of T,
the normalised excess a_F(x) = (F(x) - 1) x, and the auxiliary sign
functions used to pin down where the Prop-style inequalities switch on.

Sequence terms (``s_n``, ``S_n``, ``e * (n!)^(1/n)``) are computed from
integer arguments; ``ln n!`` comes from a running table of ``ln k`` sums up
to :data:`EXACT_LIMIT` and from the Robbins bracket beyond it.
"""

from __future__ import annotations

import enum
import threading
from fractions import Fraction

import gmpy2

from .exact_core import as_rational, factorial
from .mpinterval import (
    DEFAULT_BITS,
    DomainError,
    Interval,
    _down,
    _up,
    const_interval,
)

__all__ = [
    "EXACT_LIMIT",
    "SPECIAL_CASES",
    "FunctionTag",
    "S_n",
    "a_S_at",
    "af_special",
    "af_special_bounds",
    "classical_delta",
    "digamma_interval",
    "eroot_factorial_bounds",
    "eval_tag",
    "ln_factorial",
    "robbins_capsn",
    "s_n",
    "t_of",
]

EXACT_LIMIT = 10**4


class FunctionTag(str, enum.Enum):
    L = "L"
    R = "R"
    ell = "ell"
    r = "r"
    P = "P"
    T = "T"
    Tprime = "Tprime"
    Tdoubleprime = "Tdoubleprime"
    aL = "aL"
    aR = "aR"
    aP = "aP"
    a_s = "a_s"
    delta = "delta"
    K_prop22_upper = "K_prop22_upper"
    K_prop22_lower = "K_prop22_lower"
    K_as = "K_as"
    G_prop22_upper = "G_prop22_upper"
    G_prop22_lower = "G_prop22_lower"
    G_as = "G_as"


def _x(x, bits: int) -> Interval:
    return Interval.coerce(x, bits)


def _half_ln_pi_over(x: Interval) -> Interval:
    return const_interval("ln_pi", x.bits) / (2 * x)


def _L(x):
    return (_half_ln_pi_over(x) + 1 / ((12 * x + 1) * x)).exp()


def _R(x):
    return (_half_ln_pi_over(x) + 1 / (12 * x**2)).exp()


def _ell(x):
    x2 = x**2
    return const_interval("ln_pi", x.bits) / (2 * x2) + (24 * x + 1) / ((12 * x + 1) ** 2 * x2)


def _r(x):
    return const_interval("ln_pi", x.bits) / (2 * x**2) + 1 / (6 * x**3)


def _P(x):
    return (x.ln() / x).exp()


def _T(x):
    return x * _P(x)


def _Tprime(x):
    return _P(x) * (x + 1 - x.ln()) / x


def _Tdoubleprime(x):
    return _T(x) * (((x.ln() - 1) ** 2 - x) / x**4)


def _a_s(x):
    return _P(x) * (x + 1 - x.ln()) - x


def _K_prop22(y):
    return y.exp() * (1 - y / (y - 1) ** 2)


def _K_as(y):
    return y.exp() * (4 - y) / (y - 1) ** 2


def _G_prop22_upper(x):
    lx = x.ln()
    return lx / x - ((x + 1) / (x + 1 - lx)).ln()


def _G_prop22_lower(x):
    lx = x.ln()
    return lx / x - (1 + lx / (x - 1)).ln()


def _G_as(x):
    lx = x.ln()
    return lx / x - 2 * lx + (x**2 + (lx - 1) ** 2 - x * lx).ln()


def _delta(x):
    if not x.is_thin() or not gmpy2.is_integer(x.lo):
        raise DomainError("delta is defined on positive integers only")
    return classical_delta(int(x.lo), x.bits)


_FORMULAS = {
    FunctionTag.L: _L,
    FunctionTag.R: _R,
    FunctionTag.ell: _ell,
    FunctionTag.r: _r,
    FunctionTag.P: _P,
    FunctionTag.T: _T,
    FunctionTag.Tprime: _Tprime,
    FunctionTag.Tdoubleprime: _Tdoubleprime,
    FunctionTag.aL: lambda x: (_L(x) - 1) * x,
    FunctionTag.aR: lambda x: (_R(x) - 1) * x,
    FunctionTag.aP: lambda x: (_P(x) - 1) * x,
    FunctionTag.a_s: _a_s,
    FunctionTag.delta: _delta,
    FunctionTag.K_prop22_upper: _K_prop22,
    FunctionTag.K_prop22_lower: _K_prop22,
    FunctionTag.K_as: _K_as,
    FunctionTag.G_prop22_upper: _G_prop22_upper,
    FunctionTag.G_prop22_lower: _G_prop22_lower,
    FunctionTag.G_as: _G_as,
}

# Open lower bound of each tag's domain. The K family takes y = ln x.
_DOMAIN_FLOOR = {
    FunctionTag.K_prop22_upper: 1,
    FunctionTag.K_prop22_lower: 1,
    FunctionTag.K_as: 1,
    FunctionTag.G_prop22_upper: 1,
    FunctionTag.G_prop22_lower: 1,
    FunctionTag.G_as: 1,
}


def eval_tag(tag, x, bits: int = DEFAULT_BITS) -> Interval:
    """Enclosure of the named function at ``x`` (an Interval, int or Fraction)."""
    tag = FunctionTag(tag)
    x = _x(x, bits)
    floor = _DOMAIN_FLOOR.get(tag, 0)
    if x.lo <= floor:
        raise DomainError(f"{tag.value} needs an argument above {floor}, got {x!r}")
    return _FORMULAS[tag](x)


# -- a_F for the three single-exponential factors --------------------------

# F(x) = exp(A / (B x^2 + C x)); keys name the factor.
SPECIAL_CASES = {
    "pi_root": ("ln_pi", 0, 2),
    "robbins_lower": (1, 12, 1),
    "robbins_upper": (1, 12, 0),
}


def _special_abc(case: str, bits: int):
    A, B, C = SPECIAL_CASES[case]
    A = const_interval("ln_pi", bits) if A == "ln_pi" else Interval(A, A, bits)
    return A, B, C


def af_special(case: str, x, bits: int = DEFAULT_BITS) -> Interval:
    """a_F(x) = (exp(A/(Bx^2+Cx)) - 1) x for one of :data:`SPECIAL_CASES`."""
    x = _x(x, bits)
    A, B, C = _special_abc(case, x.bits)
    return ((A / (B * x**2 + C * x)).exp() - 1) * x


def af_special_bounds(case: str, x, bits: int = DEFAULT_BITS) -> tuple[Interval, Interval]:
    """The pair A/(Bx+C) and A/(Bx+C-A/x) that sandwich a_F(x)."""
    x = _x(x, bits)
    A, B, C = _special_abc(case, x.bits)
    base = B * x + C
    return A / base, A / (base - A / x)


# -- ln n! -------------------------------------------------------------------


class _LogFactorialTable:
    """Running enclosures of ln k! = sum_{j<=k} ln j, one table per precision."""

    def __init__(self):
        self._tables: dict[int, tuple[list, list]] = {}
        self._lock = threading.Lock()

    def get(self, n: int, bits: int) -> Interval:
        table = self._tables.get(bits)
        if table is None or len(table[0]) <= n:
            with self._lock:
                table = self._extend(n, bits)
        return Interval._raw(table[0][n], table[1][n], bits)

    def _extend(self, n: int, bits: int):
        table = self._tables.setdefault(bits, ([gmpy2.mpfr(0)], [gmpy2.mpfr(0)]))
        los, his = table
        d, u = _down(bits), _up(bits)
        for k in range(len(los), n + 1):
            los.append(d.add(los[-1], d.log(k)))
            his.append(u.add(his[-1], u.log(k)))
        return table


_log_factorials = _LogFactorialTable()


def robbins_ln_factorial(n: int, bits: int = DEFAULT_BITS) -> Interval:
    """ln n! enclosed by the Robbins bracket; never forms n!."""
    if n < 1:
        raise DomainError("Robbins bracket needs n >= 1")
    half_ln_2pi = const_interval("ln_2pi", bits) / 2
    nn = Interval(n, n, bits)
    base = half_ln_2pi + (nn + Fraction(1, 2)) * nn.ln() - nn
    lower = base + 1 / Interval(12 * n + 1, 12 * n + 1, bits)
    upper = base + 1 / Interval(12 * n, 12 * n, bits)
    return Interval._raw(lower.lo, upper.hi, bits)


def ln_factorial(n: int, bits: int = DEFAULT_BITS) -> Interval:
    """Enclosure of ln n!: summed logarithms up to EXACT_LIMIT, Robbins above."""
    if n < 0:
        raise DomainError("ln n! needs n >= 0")
    if n <= EXACT_LIMIT:
        return _log_factorials.get(n, bits)
    return robbins_ln_factorial(n, bits)


def eroot_factorial_bounds(n: int, bits: int = DEFAULT_BITS) -> Interval:
    """Enclosure of e * (n!)^(1/n), computed as exp(1 + ln(n!)/n)."""
    if n < 1:
        raise DomainError("n must be a positive integer")
    return (1 + ln_factorial(n, bits) / n).exp()


def robbins_capsn(n: int, bits: int = DEFAULT_BITS) -> tuple[Interval, Interval]:
    """(L(n) T(2n) / 2, R(n) T(2n) / 2), the Robbins bracket of e (n!)^(1/n)."""
    x = Interval(n, n, bits)
    t2n = _T(2 * x)
    return _L(x) * t2n / 2, _R(x) * t2n / 2


def t_of(n: int, bits: int = DEFAULT_BITS) -> Interval:
    """T(n) = n^(1 + 1/n)."""
    return _T(Interval(n, n, bits))


def s_n(n: int, bits: int = DEFAULT_BITS) -> Interval:
    """s_n = T(n+1) - T(n)."""
    if n < 1:
        raise DomainError("n must be a positive integer")
    return t_of(n + 1, bits) - t_of(n, bits)


def S_n(n: int, bits: int = DEFAULT_BITS) -> Interval:
    """S_n = e ((n+1)!)^(1/(n+1)) - e (n!)^(1/n)."""
    if n < 1:
        raise DomainError("n must be a positive integer")
    return eroot_factorial_bounds(n + 1, bits) - eroot_factorial_bounds(n, bits)


def classical_delta(n: int, bits: int = DEFAULT_BITS) -> Interval:
    """delta_n = (n+1)^n / (n! e^n), with the rational factor kept exact."""
    if n < 1:
        raise DomainError("n must be a positive integer")
    ratio = Fraction((n + 1) ** n, factorial(n))
    return Interval(ratio, ratio, bits) * (-Interval(n, n, bits)).exp()


# -- digamma and a_S -----------------------------------------------------------

# B_2k / (2k) for k = 1..5, and the first omitted one (k = 6).
_ASYMPTOTIC = [Fraction(1, 6) / 2, Fraction(-1, 30) / 4, Fraction(1, 42) / 6,
               Fraction(-1, 30) / 8, Fraction(5, 66) / 10]
_OMITTED = Fraction(-691, 2730) / 12
_SHIFT_TO = 16


def _digamma_point(x, bits: int) -> Interval:
    x = Interval(x, x, bits)
    shift = Interval(0, 0, bits)
    while x.lo < _SHIFT_TO:
        shift = shift + 1 / x
        x = x + 1
    inv2 = 1 / x**2
    series = x.ln() - 1 / (2 * x)
    power = inv2
    for coeff in _ASYMPTOTIC:
        series = series - coeff * power
        power = power * inv2
    tail = abs(_OMITTED * power)
    series = series + (tail.hull(-tail))
    return series - shift


def digamma_interval(x, bits: int = DEFAULT_BITS) -> Interval:
    """Enclosure of psi(x) for x > 0.

    psi is increasing on (0, inf), so each endpoint is evaluated separately:
    recurrence up to x >= 16, then the asymptotic series through B_10 with
    the B_12 term as error bound.
    """
    x = _x(x, bits)
    if x.lo <= 0:
        raise DomainError("digamma needs x > 0 here")
    lo = _digamma_point(x.lo, x.bits)
    hi = lo if x.is_thin() else _digamma_point(x.hi, x.bits)
    return Interval._raw(lo.lo, hi.hi, x.bits)


def a_S_at(n: int, bits: int = DEFAULT_BITS) -> Interval:
    """a_S(n) = (e G'(n) - 1) n with G(x) = Gamma(x+1)^(1/x)."""
    if n < 1:
        raise DomainError("n must be a positive integer")
    lnf = ln_factorial(n, bits)
    g = (lnf / n).exp()
    g_prime = g * (digamma_interval(n + 1, bits) / n - lnf / (n * n))
    return (const_interval("e", bits) * g_prime - 1) * n


def rational_interval(a, bits: int = DEFAULT_BITS) -> Interval:
    a = as_rational(a)
    return Interval(a, a, bits)
