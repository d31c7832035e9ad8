"""Predict n_a from the position of a among the intervals (n/e, (n+1)/e].

For n >= 3 the segment sigma_{n-m}, ..., sigma_n of the E_SEQ staircase
(m = sigma_n) pins n_a down to one or two consecutive candidates. Below
3/e the answer is always 2.
"""

from __future__ import annotations

import collections
import concurrent.futures
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .exact_core import GuardExceeded, as_rational, exact_na
from .mpinterval import DEFAULT_CONFIG, Interval, PrecisionConfig, const_interval, refine, resolve
from .sigma import CaseLabel, SeqKind, _floor_if_decided, segment

__all__ = [
    "PredictionOutcome",
    "VerifyReport",
    "candidates_for",
    "interval_samples",
    "locate_n",
    "predict_na",
    "verify_range",
]

SAMPLE_DENOMINATOR = 10**6


@dataclass(frozen=True)
class PredictionOutcome:
    a: Fraction
    n: int
    m: Optional[int]
    case_label: Optional[CaseLabel]
    candidates: tuple[int, ...]
    exact: Optional[int] = None
    agrees: Optional[bool] = None

    @property
    def confirmed(self) -> bool:
        return self.exact is not None


def _a_times_e(a: Fraction):
    return lambda bits: Interval(a, a, bits) * const_interval("e", bits)


def below_three_over_e(a, config: PrecisionConfig | None = None) -> bool:
    """Certify a <= 3/e (equality is impossible for rational a)."""
    a = as_rational(a)
    return resolve(lambda bits: _a_times_e(a)(bits).le(3), config)


def locate_n(a, config: PrecisionConfig | None = None) -> int:
    """The unique n with n/e < a <= (n+1)/e, i.e. n = floor(a e).

    a e is irrational for rational a, so refinement always separates it from
    the neighbouring integers.
    """
    a = as_rational(a)
    if a <= 0:
        raise ValueError("a must be positive")
    n, _, _ = refine(_a_times_e(a), _floor_if_decided, config, what=f"floor({a} * e)")
    return n


def candidates_for(n: int, m: int, label: CaseLabel) -> tuple[int, ...]:
    if label in (CaseLabel.ONE_VALUE, CaseLabel.TWO_ELL_EQ_NM):
        return (n - m + 1, n - m + 2)
    if label is CaseLabel.TWO_ELL_EQ_NM1:
        return (n - m + 2,)
    return (n - m + 2, n - m + 3)


def predict_na(a, with_oracle: bool = True, config: PrecisionConfig | None = None,
               guard: int | None = None) -> PredictionOutcome:
    """Candidate set for n_a, optionally checked against :func:`exact_na`."""
    a = as_rational(a)
    if a <= 1:
        raise ValueError("a must exceed 1")
    if below_three_over_e(a, config):
        n, m, label, cands = 2, None, None, (2,)
    else:
        n = locate_n(a, config)
        seg = segment(SeqKind.E_SEQ, n, config)
        if seg.falsified:
            raise ArithmeticError(f"segment at n={n} has {seg.value_count} values")
        n, m, label = seg.n, seg.m, seg.case_label
        cands = candidates_for(n, m, label)
    exact = agrees = None
    if with_oracle:
        try:
            exact = exact_na(a, guard)
        except GuardExceeded:
            exact = None
        else:
            agrees = exact in cands
    return PredictionOutcome(a, n, m, label, cands, exact, agrees)


def interval_samples(n: int, k: int, config: PrecisionConfig | None = None) -> list[Fraction]:
    """k rationals inside (n/e, (n+1)/e], the first and last near the endpoints.

    Endpoint samples have denominator 10^6 and are nudged inward until
    interval arithmetic certifies membership.
    """
    if k < 1:
        raise ValueError("need at least one sample")
    D = SAMPLE_DENOMINATOR
    config = config or DEFAULT_CONFIG
    e64 = const_interval("e", 64)
    lo_num = (Interval(n * D, n * D, 64) / e64).floor_bounds()[0] + 1
    while not resolve(lambda bits: (Interval(Fraction(lo_num, D), bits=bits)
                                    * const_interval("e", bits)).gt(n), config):
        lo_num += 1
    hi_num = (Interval((n + 1) * D, (n + 1) * D, 64) / e64).floor_bounds()[1]
    while not resolve(lambda bits: (Interval(Fraction(hi_num, D), bits=bits)
                                    * const_interval("e", bits)).le(n + 1), config):
        hi_num -= 1
    low, high = Fraction(lo_num, D), Fraction(hi_num, D)
    if k == 1:
        return [low]
    return [low + (high - low) * j / (k - 1) for j in range(k)]


@dataclass
class VerifyReport:
    n_lo: int
    n_hi: int
    samples_per_interval: int
    predictions: int = 0
    agreements: int = 0
    disagreements: list[Fraction] = field(default_factory=list)
    singleton_outside_nm1: list[Fraction] = field(default_factory=list)
    case_counts: collections.Counter = field(default_factory=collections.Counter)
    # For two-candidate predictions, how often n_a was the smaller candidate.
    lower_candidate_hits: collections.Counter = field(default_factory=collections.Counter)
    unconfirmed: int = 0

    @property
    def passed(self) -> bool:
        return not self.disagreements and not self.singleton_outside_nm1 and self.unconfirmed == 0

    def add(self, outcome: PredictionOutcome) -> None:
        self.predictions += 1
        self.case_counts[outcome.case_label.value if outcome.case_label else "TRIVIAL"] += 1
        if len(outcome.candidates) == 1 and outcome.case_label is not CaseLabel.TWO_ELL_EQ_NM1:
            self.singleton_outside_nm1.append(outcome.a)
        if outcome.exact is None:
            self.unconfirmed += 1
            return
        if outcome.agrees:
            self.agreements += 1
            if len(outcome.candidates) == 2:
                key = outcome.case_label.value
                self.lower_candidate_hits[key] += outcome.exact == outcome.candidates[0]
        else:
            self.disagreements.append(outcome.a)


def _verify_chunk(ns, k, config, guard):
    out = []
    for n in ns:
        for a in interval_samples(n, k, config):
            out.append(predict_na(a, True, config, guard))
    return out


def verify_range(n_lo: int, n_hi: int, samples_per_interval: int = 2,
                 config: PrecisionConfig | None = None, guard: int | None = None,
                 workers: int = 1) -> VerifyReport:
    """Check exact n_a against the predicted candidates for sampled a.

    Samples are drawn inside (n/e, (n+1)/e] for n_lo <= n <= n_hi. With
    ``workers > 1`` chunks of n run in separate processes; the report is
    assembled in n order either way.
    """
    if not 3 <= n_lo <= n_hi:
        raise ValueError("need 3 <= n_lo <= n_hi")
    report = VerifyReport(n_lo, n_hi, samples_per_interval)
    ns = list(range(n_lo, n_hi + 1))
    if workers <= 1:
        results = _verify_chunk(ns, samples_per_interval, config, guard)
    else:
        chunks = [ns[i::workers] for i in range(workers)]
        with concurrent.futures.ProcessPoolExecutor(workers) as pool:
            parts = pool.map(_verify_chunk, chunks, [samples_per_interval] * workers,
                             [config] * workers, [guard] * workers)
            results = sorted((o for part in parts for o in part), key=lambda o: o.a)
    for outcome in results:
        report.add(outcome)
    return report
