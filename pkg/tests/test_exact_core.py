import math
import threading
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from factpow.exact_core import (FactorialCache, GuardExceeded, Ordering, as_rational,
                                cmp_pow_factorial, exact_na, factorial)
from helpers import brute_na


rationals_above_one = st.builds(
    lambda q, extra: Fraction(q + extra, q),
    st.integers(min_value=1, max_value=40),
    st.integers(min_value=1, max_value=1200),
).filter(lambda a: a <= 40)


def test_factorial_matches_math():
    cache = FactorialCache()
    for n in (0, 1, 2, 10, 57, 300):
        assert factorial(n, cache) == math.factorial(n)
    assert cache.high_water == 300


def test_cache_guard():
    cache = FactorialCache(guard=50)
    assert cache[50] == math.factorial(50)
    with pytest.raises(GuardExceeded) as info:
        cache[51]
    assert info.value.n == 51 and info.value.guard == 50


def test_cache_concurrent_readers():
    cache = FactorialCache()
    errors = []

    def worker(top):
        for n in range(top):
            if cache[n] != math.factorial(n):
                errors.append(n)

    threads = [threading.Thread(target=worker, args=(400 - 37 * i,)) for i in range(8)]
    for t in threads:
        t.start()
    for t in threads:
        t.join()
    assert not errors


@pytest.mark.parametrize("a, n, expected", [
    (2, 3, Ordering.GT),
    (2, 4, Ordering.LT),
    (6, 3, Ordering.GT),
    (Fraction(3, 2), 2, Ordering.GT),
    (Fraction(3, 2), 3, Ordering.LT),
])
def test_cmp_examples(a, n, expected):
    assert cmp_pow_factorial(a, n) is expected


def test_ordering_of():
    # For n >= 2, n! is never a perfect n-th power, so EQ cannot arise from a
    # rational base; the three-way primitive still reports it.
    assert Ordering.of(7, 7) is Ordering.EQ
    assert Ordering.of(6, 7) is Ordering.LT
    assert Ordering.of(8, 7) is Ordering.GT


def test_cmp_against_fraction_arithmetic():
    for a in (Fraction(11, 10), Fraction(5, 2), Fraction(7), Fraction(100, 3)):
        for n in range(1, 60):
            lhs, rhs = a**n, math.factorial(n)
            want = Ordering.LT if lhs < rhs else Ordering.GT if lhs > rhs else Ordering.EQ
            assert cmp_pow_factorial(a, n) is want


def test_cmp_preconditions():
    with pytest.raises(ValueError):
        cmp_pow_factorial(1, 3)
    with pytest.raises(ValueError):
        cmp_pow_factorial(2, 0)
    with pytest.raises(GuardExceeded):
        cmp_pow_factorial(2, 100, FactorialCache(guard=10))


@pytest.mark.parametrize("a, expected", [(2, 4), (3, 7), (10, 25), (Fraction(11, 10), 2)])
def test_exact_na_examples(a, expected):
    assert exact_na(a) == expected
    assert brute_na(Fraction(a)) == expected


def test_exact_na_input_forms():
    assert exact_na("5/2") == exact_na(Fraction(5, 2)) == brute_na(Fraction(5, 2))
    assert exact_na("2.5") == exact_na(Fraction(5, 2))
    with pytest.raises(TypeError):
        exact_na(2.5)
    with pytest.raises(ValueError):
        exact_na(1)
    with pytest.raises(ValueError):
        exact_na(Fraction(1, 2))


def test_exact_na_guard():
    with pytest.raises(GuardExceeded):
        exact_na(1000, guard=100)


def test_as_rational_reduces():
    assert as_rational("6/4") == Fraction(3, 2)
    with pytest.raises(TypeError):
        as_rational(object())


@given(rationals_above_one)
@settings(max_examples=200, deadline=None)
def test_na_matches_brute_force_and_definition(a):
    n = exact_na(a)
    assert n == brute_na(a)
    assert n >= 2
    assert cmp_pow_factorial(a, n) in (Ordering.LT, Ordering.EQ)
    assert cmp_pow_factorial(a, n - 1) is Ordering.GT


@given(rationals_above_one, rationals_above_one)
@settings(max_examples=200, deadline=None)
def test_na_monotone(a, b):
    if a > b:
        a, b = b, a
    assert exact_na(a) <= exact_na(b)


@given(st.integers(min_value=2, max_value=60), st.integers(min_value=1, max_value=10**6))
@settings(max_examples=100, deadline=None)
def test_uniqueness_window(n, seed):
    """A rational just below (n!)^(1/n) but above ((n-1)!)^(1/(n-1)) has n_a = n."""
    step = Fraction(1, 10**6)
    a = Fraction(round(math.exp(math.lgamma(n + 1) / n) * 10**6), 10**6) + (seed % 5) * step
    while a**n > math.factorial(n):
        a -= step
    if a ** (n - 1) <= math.factorial(n - 1):
        return
    assert exact_na(a) == n


@given(st.integers(min_value=2, max_value=40), st.integers(min_value=1, max_value=40))
@settings(max_examples=100, deadline=None)
def test_factorial_below_power_when_n_below_a(n, bump):
    a = Fraction(n * bump + 1, bump)  # strictly above n
    assert math.factorial(n) < a**n
    assert cmp_pow_factorial(a, n) is Ordering.GT
