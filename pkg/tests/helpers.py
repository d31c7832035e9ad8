"""Independent reference values for the tests (mpmath, brute force)."""

from __future__ import annotations

import random
from fractions import Fraction

import mpmath

from factpow.mpinterval import DomainError, Interval


def to_fraction(x) -> Fraction:
    """Exact value of an mpfr or mpmath number."""
    if hasattr(x, "_mpf_"):  # mpmath numbers and lazily evaluated constants
        sign, man, exp, _ = x._mpf_
        value = Fraction(int(man)) * Fraction(2) ** int(exp)
        return -value if sign else value
    return Fraction(*x.as_integer_ratio())


def encloses(iv: Interval, ref, rel_slack_bits: int) -> bool:
    """``ref`` lies in ``iv`` up to a relative slack of 2^-rel_slack_bits."""
    r = to_fraction(ref)
    slack = abs(r) / 2**rel_slack_bits
    return to_fraction(iv.lo) - slack <= r <= to_fraction(iv.hi) + slack


def brute_na(a: Fraction) -> int:
    n, lhs, rhs = 1, a, Fraction(1)
    while lhs > rhs:
        n += 1
        lhs *= a
        rhs *= n
    return n


def mp_T_e(n: int, dps: int = 60):
    with mpmath.workdps(dps):
        return mpmath.e * mpmath.exp(mpmath.loggamma(n + 1) / n)


# -- random expression trees -------------------------------------------------

UNARY = ("exp", "ln", "sqrt", "neg", "sq")
BINARY = ("add", "sub", "mul", "div")


def random_expr(rng: random.Random, depth: int):
    if depth == 0 or rng.random() < 0.25:
        return ("const", Fraction(rng.randint(-50, 50), rng.randint(1, 20)))
    if rng.random() < 0.4:
        return (rng.choice(UNARY), random_expr(rng, depth - 1))
    return (rng.choice(BINARY), random_expr(rng, depth - 1), random_expr(rng, depth - 1))


class Skip(Exception):
    """Expression leaves the domain or the sane range; not a failure."""


def eval_interval(expr, bits: int) -> Interval:
    op = expr[0]
    if op == "const":
        return Interval(expr[1], bits=bits)
    if op in UNARY:
        x = eval_interval(expr[1], bits)
        try:
            if op == "exp":
                if x.hi > 50 or x.lo < -50:
                    raise Skip
                return x.exp()
            if op == "ln":
                return x.ln()
            if op == "sqrt":
                return x.sqrt()
        except DomainError:
            raise Skip from None
        return -x if op == "neg" else x * x
    x, y = eval_interval(expr[1], bits), eval_interval(expr[2], bits)
    if op == "add":
        return x + y
    if op == "sub":
        return x - y
    if op == "mul":
        return x * y
    try:
        return x / y
    except DomainError:
        raise Skip from None


def eval_mp(expr, magnitudes: list | None = None):
    """Point evaluation with mpmath at the ambient precision.

    ``magnitudes`` collects |value| of every node, which bounds the absolute
    rounding error of the reference under cancellation.
    """
    op = expr[0]
    if op == "const":
        v = mpmath.mpf(expr[1].numerator) / expr[1].denominator
    elif op in UNARY:
        x = eval_mp(expr[1], magnitudes)
        v = {"exp": mpmath.exp, "ln": mpmath.log, "sqrt": mpmath.sqrt,
             "neg": lambda t: -t, "sq": lambda t: t * t}[op](x)
    else:
        x, y = eval_mp(expr[1], magnitudes), eval_mp(expr[2], magnitudes)
        v = {"add": lambda: x + y, "sub": lambda: x - y,
             "mul": lambda: x * y, "div": lambda: x / y}[op]()
    if magnitudes is not None:
        magnitudes.append(abs(v))
    return v


def check_expr(expr, bits: int) -> bool | None:
    """True if the interval image contains the 4x-precision value; None if skipped."""
    try:
        iv = eval_interval(expr, bits)
    except Skip:
        return None
    if not iv.lo.is_finite() or not iv.hi.is_finite() or abs(iv.hi) > 2**200:
        return None
    mags: list = []
    with mpmath.workprec(4 * bits):
        ref = eval_mp(expr, mags)
    scale = max(max(mags), mpmath.mpf(1))
    # Each of at most 2^depth nodes contributes a few ulps at 4x precision;
    # 2^-(3 bits) relative to the largest node is a generous envelope.
    slack = to_fraction(scale) / 2 ** (3 * bits)
    r = to_fraction(ref)
    return to_fraction(iv.lo) - slack <= r <= to_fraction(iv.hi) + slack
