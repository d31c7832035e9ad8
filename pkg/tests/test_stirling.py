from fractions import Fraction

import gmpy2
import mpmath
import pytest
from hypothesis import given, settings, strategies as st

from factpow.mpinterval import DomainError, Interval
from factpow.stirling import (EXACT_LIMIT, FunctionTag, af_special, af_special_bounds,
                              a_S_at, classical_delta, digamma_interval, eroot_factorial_bounds,
                              eval_tag, ln_factorial, robbins_capsn, robbins_ln_factorial,
                              S_n, s_n, t_of)
from helpers import encloses

BITS = 128


def _ref(tag, x):
    """mpmath transcription of each tagged function, evaluated at 4x precision."""
    x = mpmath.mpf(x.numerator) / x.denominator if isinstance(x, Fraction) else mpmath.mpf(x)
    lp = mpmath.log(mpmath.pi)
    L = mpmath.exp(lp / (2 * x) + 1 / ((12 * x + 1) * x))
    R = mpmath.exp(lp / (2 * x) + 1 / (12 * x**2))
    P = x ** (1 / x)
    lx = mpmath.log(x)
    return {
        "L": lambda: L,
        "R": lambda: R,
        "ell": lambda: lp / (2 * x**2) + (24 * x + 1) / ((12 * x + 1) ** 2 * x**2),
        "r": lambda: lp / (2 * x**2) + 1 / (6 * x**3),
        "P": lambda: P,
        "T": lambda: x * P,
        "Tprime": lambda: mpmath.diff(lambda t: t ** (1 + 1 / t), x),
        "Tdoubleprime": lambda: mpmath.diff(lambda t: t ** (1 + 1 / t), x, 2),
        "aL": lambda: (L - 1) * x,
        "aR": lambda: (R - 1) * x,
        "aP": lambda: (P - 1) * x,
        "a_s": lambda: P * (x + 1 - lx) - x,
        "G_prop22_upper": lambda: lx / x - mpmath.log((x + 1) / (x + 1 - lx)),
        "G_prop22_lower": lambda: lx / x - mpmath.log(1 + lx / (x - 1)),
        "G_as": lambda: lx / x - 2 * lx + mpmath.log(x**2 + (lx - 1) ** 2 - x * lx),
        "K_prop22_upper": lambda: mpmath.exp(x) * (1 - x / (x - 1) ** 2),
        "K_prop22_lower": lambda: mpmath.exp(x) * (1 - x / (x - 1) ** 2),
        "K_as": lambda: mpmath.exp(x) * (4 - x) / (x - 1) ** 2,
    }[tag]()


POINTS = [Fraction(3, 2), 2, Fraction(27, 10), 5, Fraction(101, 7), 100, 10**6]
TAGS = [t for t in FunctionTag if t is not FunctionTag.delta]


@pytest.mark.parametrize("tag", TAGS, ids=lambda t: t.value)
@pytest.mark.parametrize("x", POINTS, ids=str)
def test_tags_against_mpmath(tag, x):
    with mpmath.workprec(4 * BITS):
        ref = _ref(tag.value, x)
    iv = eval_tag(tag, x, BITS)
    # numerical differentiation in mpmath is less accurate than 4x precision
    slack = 200 if "prime" in tag.value else 3 * BITS
    assert encloses(iv, ref, slack), (tag, x, iv, ref)


def test_domain_floors():
    with pytest.raises(DomainError):
        eval_tag("L", 0)
    with pytest.raises(DomainError):
        eval_tag("G_as", 1)
    with pytest.raises(DomainError):
        eval_tag("K_as", Fraction(1, 2))
    with pytest.raises(DomainError):
        eval_tag("delta", Fraction(5, 2))
    with pytest.raises(ValueError):
        eval_tag("nope", 2)


def test_exact_values_at_one():
    assert eval_tag("a_s", 1).is_thin() and eval_tag("a_s", 1).contains(1)
    assert eval_tag("Tprime", 1).contains(2)


def test_R_at_one():
    r1 = eval_tag("R", 1)
    assert r1.gt(Fraction("1.92648")) and r1.lt(Fraction("1.92649"))


@pytest.mark.parametrize("n", [1, 2, 17, 500, EXACT_LIMIT, EXACT_LIMIT + 1, 10**8])
def test_ln_factorial_against_lgamma(n):
    iv = ln_factorial(n, BITS)
    with mpmath.workprec(4 * BITS):
        ref = mpmath.loggamma(n + 1)
    if n <= EXACT_LIMIT:
        assert encloses(iv, ref, 3 * BITS)
        mpfr_ref = gmpy2.context(precision=4 * BITS).lgamma(n + 1)[0]
        assert encloses(iv, mpfr_ref, 3 * BITS)
    else:
        # Robbins bracket: width about 1/(144 n^2), always containing the truth
        assert encloses(iv, ref, 3 * BITS)
        assert iv.width < Fraction(1, 100 * n * n)


@pytest.mark.parametrize("n", [1, 5, 50, 5000])
def test_robbins_bracket_contains_summed_logs(n):
    assert robbins_ln_factorial(n, BITS).contains(ln_factorial(n, BITS))


def test_eroot_factorial_at_huge_n():
    n = 10**12
    t = eroot_factorial_bounds(n)
    assert t.gt(n + 14) and t.lt(n + 15)
    with mpmath.workdps(60):
        ref = mpmath.e * mpmath.exp(mpmath.loggamma(n + 1) / n)
    assert encloses(t, ref, 150)


def test_e_fifth_root_of_120():
    t = eroot_factorial_bounds(5)
    with mpmath.workprec(512):
        assert encloses(t, mpmath.e * mpmath.mpf(120) ** (mpmath.mpf(1) / 5), 380)


@pytest.mark.parametrize("n", [1, 7, 100, 10**4])
def test_capsn_brackets_eroot(n):
    lower, upper = robbins_capsn(n)
    t = eroot_factorial_bounds(n)
    assert lower.lt(t) and t.lt(upper)


@pytest.mark.parametrize("n", [1, 2, 10, 1000])
def test_sequences_against_mpmath(n):
    with mpmath.workprec(512):
        T = mpmath.e * mpmath.exp(mpmath.loggamma(n + 1) / n)
        T1 = mpmath.e * mpmath.exp(mpmath.loggamma(n + 2) / (n + 1))
        t = mpmath.mpf(n) ** (1 + mpmath.mpf(1) / n)
        t1 = mpmath.mpf(n + 1) ** (1 + mpmath.mpf(1) / (n + 1))
        assert encloses(t_of(n), t, 380)
        assert encloses(s_n(n), t1 - t, 300)
        assert encloses(S_n(n), T1 - T, 300)


def test_s1_and_S1_values():
    s1 = s_n(1)
    assert s1.gt(Fraction("1.828427")) and s1.lt(Fraction("1.828428"))
    S1 = S_n(1)
    assert S1.gt(Fraction("1.125949")) and S1.lt(Fraction("1.125950"))


@pytest.mark.parametrize("n", [1, 2, 3, 30, 200])
def test_classical_delta(n):
    with mpmath.workprec(512):
        ref = mpmath.mpf(n + 1) ** n / mpmath.factorial(n) / mpmath.e**n
    d = classical_delta(n)
    assert encloses(d, ref, 380)
    assert d.gt(0) and d.lt(1)
    assert eval_tag("delta", n).contains(d)


@given(st.fractions(min_value=Fraction(1, 50), max_value=Fraction(400), max_denominator=500))
@settings(max_examples=150, deadline=None)
def test_digamma_encloses_mpmath(x):
    iv = digamma_interval(x)
    with mpmath.workprec(256):
        ref = mpmath.digamma(mpmath.mpf(x.numerator) / x.denominator)
    assert encloses(iv, ref, 200)
    assert iv.width < Fraction(1, 10**15)


def test_digamma_against_mpfr():
    ctx = gmpy2.context(precision=300)
    for x in (1, 2, 16, 1000):
        assert digamma_interval(x).contains(ctx.digamma(x))


def test_digamma_interval_argument_is_monotone_hull():
    iv = digamma_interval(Interval(2, 3))
    assert iv.contains(digamma_interval(2)) and iv.contains(digamma_interval(3))


@pytest.mark.parametrize("n", [1, 10, 100, 10**4])
def test_a_S_against_mpmath(n):
    with mpmath.workprec(256):
        G = mpmath.exp(mpmath.loggamma(n + 1) / n)
        dG = G * (mpmath.digamma(n + 1) / n - mpmath.loggamma(n + 1) / n**2)
        ref = (mpmath.e * dG - 1) * n
    iv = a_S_at(n)
    assert encloses(iv, ref, 40)
    assert iv.width < Fraction(1, 10**10)


@pytest.mark.parametrize("case", ["pi_root", "robbins_lower", "robbins_upper"])
@pytest.mark.parametrize("x", [1, 3, 50])
def test_af_special_bracket(case, x):
    lo, hi = af_special_bounds(case, x)
    v = af_special(case, x)
    assert lo.lt(v) and v.lt(hi)
