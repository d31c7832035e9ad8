"""The sigma staircase of a slowly growing sequence T_1, T_2, ...

For a sequence with 1 <= T_{n+1} - T_n < 2, sigma_n is the unique integer
with ``n + sigma_n - 1 <= T_n < n + sigma_n``. Two concrete sequences are
supported:

* ``S_SEQ``: T_n = n * n^(1/n)         (T_1 = 1, growth constant 1)
* ``E_SEQ``: T_n = e * (n!)^(1/n)      (T_1 = e, growth constant 3/2)

where the growth constant a bounds the increments: T_{n+1} - T_n < 1 + a/n.
"""

from __future__ import annotations

import enum
import functools
from dataclasses import dataclass, field
from fractions import Fraction
from math import floor
from typing import Optional

from .mpinterval import DEFAULT_CONFIG, Interval, PrecisionConfig, refine
from .stirling import eroot_factorial_bounds, t_of

__all__ = [
    "AxiomReport",
    "BudgetExceeded",
    "CaseLabel",
    "SegmentReport",
    "SeqKind",
    "SigmaRecord",
    "axiom_check",
    "breakpoints",
    "placement_checks",
    "segment",
    "sigma",
    "sigma_values",
    "t_enclosure",
]


class SeqKind(enum.Enum):
    S_SEQ = "S_SEQ"
    E_SEQ = "E_SEQ"

    @property
    def growth_constant(self) -> Fraction:
        return Fraction(1) if self is SeqKind.S_SEQ else Fraction(3, 2)

    @classmethod
    def parse(cls, text: str) -> "SeqKind":
        key = text.strip().upper()
        aliases = {"S": "S_SEQ", "E": "E_SEQ", "NROOTN": "S_SEQ", "FACT": "E_SEQ"}
        try:
            return cls(aliases.get(key, key))
        except ValueError:
            raise ValueError(f"unknown sequence kind {text!r}; expected S_SEQ or E_SEQ") from None


class CaseLabel(str, enum.Enum):
    ONE_VALUE = "ONE_VALUE"
    TWO_ELL_EQ_NM = "TWO_ELL_EQ_NM"
    TWO_ELL_EQ_NM1 = "TWO_ELL_EQ_NM1"
    TWO_ELL_EQ_NM2 = "TWO_ELL_EQ_NM2"
    TWO_ELL_GE_NM3 = "TWO_ELL_GE_NM3"


class BudgetExceeded(RuntimeError):
    def __init__(self, message: str, found: list[int]):
        super().__init__(message)
        self.found = found


def t_enclosure(kind: SeqKind, n: int, bits: int) -> Interval:
    if n < 1:
        raise ValueError("n must be a positive integer")
    if kind is SeqKind.S_SEQ:
        return t_of(n, bits)
    return eroot_factorial_bounds(n, bits)


@dataclass(frozen=True)
class SigmaRecord:
    kind: SeqKind
    n: int
    sigma: int
    t_enclosure: Interval = field(compare=False)
    bits: int = field(compare=False)

    @property
    def nu(self) -> int:
        return self.n + self.sigma

    def certifies(self) -> bool:
        lo_ok = self.t_enclosure.lo >= self.n + self.sigma - 1
        return lo_ok and self.t_enclosure.hi < self.n + self.sigma


def _floor_if_decided(enclosure: Interval) -> Optional[int]:
    lo, hi = enclosure.floor_bounds()
    return lo if lo == hi else None


@functools.lru_cache(maxsize=1 << 16)
def _sigma_cached(kind: SeqKind, n: int, config: PrecisionConfig) -> SigmaRecord:
    fl, enc, bits = refine(
        lambda b: t_enclosure(kind, n, b),
        _floor_if_decided,
        config,
        what=f"sigma({kind.value}, {n})",
    )
    return SigmaRecord(kind, n, fl - n + 1, enc, bits)


def sigma(kind: SeqKind, n: int, config: PrecisionConfig | None = None) -> SigmaRecord:
    """Resolve sigma_n; raises :class:`Unresolved` if T_n straddles an integer."""
    if n < 1:
        raise ValueError("n must be a positive integer")
    return _sigma_cached(SeqKind(kind), n, config or DEFAULT_CONFIG)


def sigma_values(kind: SeqKind, start: int, stop: int, config=None) -> list[int]:
    """sigma_k for start <= k <= stop."""
    return [sigma(kind, k, config).sigma for k in range(start, stop + 1)]


@dataclass(frozen=True)
class SegmentReport:
    kind: SeqKind
    n: int
    m: int
    values: tuple[int, ...]
    value_count: int
    ell: Optional[int]
    case_label: Optional[CaseLabel]

    @property
    def start(self) -> int:
        return self.n - self.m

    @property
    def falsified(self) -> bool:
        """More than two distinct values: the one-or-two-values property fails here."""
        return self.value_count > 2


def segment(kind: SeqKind, n: int, config: PrecisionConfig | None = None) -> SegmentReport:
    kind = SeqKind(kind)
    if n < 3:
        raise ValueError("segments are defined for n >= 3")
    m = sigma(kind, n, config).sigma
    if not 2 <= m < n:
        raise ArithmeticError(f"sigma_{n} = {m} violates 2 <= m < n for {kind.value}")
    start = n - m
    values = tuple(sigma_values(kind, start, n, config))
    distinct = len(set(values))
    steps = [start + i for i in range(m) if values[i + 1] == values[i] + 1]
    ell = steps[0] if distinct == 2 else None
    if distinct == 1:
        label = CaseLabel.ONE_VALUE
    elif distinct == 2:
        offset = ell - start
        label = (CaseLabel.TWO_ELL_EQ_NM, CaseLabel.TWO_ELL_EQ_NM1,
                 CaseLabel.TWO_ELL_EQ_NM2)[offset] if offset < 3 else CaseLabel.TWO_ELL_GE_NM3
    else:
        label = None
    return SegmentReport(kind, n, m, values, distinct, ell, label)


def placement_checks(report: SegmentReport, config=None) -> list[tuple[str, bool]]:
    """Interval placements of T_{n-m}, T_{n-m+1}, ... implied by the segment shape.

    Each entry is (description, holds). A one-value segment needs
    n-1 <= T_{n-m} < n <= T_{n-m+1} < n+1 <= T_{n-m+2} < n+2; two-value
    segments need the placements of the matching case.
    """
    n, start = report.n, report.start
    label = report.case_label
    # (index offset from n-m, lower integer bound relative to n)
    if label is CaseLabel.ONE_VALUE:
        wanted = [(0, -1), (1, 0), (2, 1)]
    elif label is CaseLabel.TWO_ELL_EQ_NM:
        wanted = [(0, -2), (1, 0), (2, 1)]
    elif label is CaseLabel.TWO_ELL_EQ_NM1:
        wanted = [(0, -2), (1, -1), (2, 1)]
    elif label is CaseLabel.TWO_ELL_EQ_NM2:
        wanted = [(0, -2), (1, -1), (2, 0), (3, 2)]
    elif label is CaseLabel.TWO_ELL_GE_NM3:
        wanted = [(0, -2), (1, -1), (2, 0), (3, 1)]
    else:
        return [(f"segment at n={n} has {report.value_count} values", False)]
    results = []
    for offset, low in wanted:
        k = start + offset
        rec = sigma(report.kind, k, config)
        t = rec.t_enclosure
        bound = n + low
        ok = t.lo >= bound and t.hi < bound + 1
        results.append((f"{bound} <= T_{k} < {bound + 1}", bool(ok)))
    return results


def _next_lower_bound(prev: int, a: Fraction) -> int:
    # After a step at prev, the next one needs r + 1 > prev / a.
    return prev + max(1, floor(Fraction(prev) / a))


def breakpoints(kind: SeqKind, count: int, config: PrecisionConfig | None = None,
                budget: int = 10_000) -> list[int]:
    """n_i = largest u with sigma_u = sigma_1 + (i - 1), for i = 1..count.

    Jumps straight to the rarity lower bound after each breakpoint, doubles
    until sigma exceeds the target, then bisects (sigma is monotone).
    """
    kind = SeqKind(kind)
    if count < 1:
        raise ValueError("count must be positive")
    evaluations = 0
    found: list[int] = []

    def sig(u: int) -> int:
        nonlocal evaluations
        evaluations += 1
        if evaluations > budget:
            raise BudgetExceeded(
                f"breakpoint scan for {kind.value} exceeded {budget} sigma evaluations "
                f"after finding {len(found)} of {count}", list(found))
        return sigma(kind, u, config).sigma

    base = sig(1)
    lo = 1
    for i in range(1, count + 1):
        target = base + i - 1
        if found:
            guess = _next_lower_bound(found[-1], kind.growth_constant)
            lo = guess if sig(guess) <= target else found[-1] + 1
        step = max(1, lo)
        hi = lo + step
        while sig(hi) <= target:
            lo, step = hi, step * 2
            hi = lo + step
        while hi - lo > 1:
            mid = (lo + hi) // 2
            if sig(mid) <= target:
                lo = mid
            else:
                hi = mid
        found.append(lo)
        lo = hi
    return found


@dataclass
class AxiomReport:
    kind: SeqKind
    n_max: int
    checked: int = 0
    failures: list[str] = field(default_factory=list)
    segments_checked: int = 0
    more_than_two: list[int] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures and not self.more_than_two

    def fail(self, message: str) -> None:
        self.failures.append(message)


def _increment_ok(kind: SeqKind, n: int, config) -> tuple[bool, bool]:
    """Certify 1 <= s_n < 2 and s_n < 1 + a/n for the increment s_n."""
    a = kind.growth_constant

    def compute(bits):
        return t_enclosure(kind, n + 1, bits) - t_enclosure(kind, n, bits)

    def decide(s):
        lower = s.ge(1)
        upper = s.lt(2)
        growth = s.lt(1 + a / n)
        if None in (lower, upper, growth):
            return None
        return (lower and upper, growth)

    verdict, _, _ = refine(compute, decide, config, what=f"increment {kind.value} n={n}")
    return verdict


def axiom_check(kind: SeqKind, n_max: int, config: PrecisionConfig | None = None,
                segments: bool = True) -> AxiomReport:
    """Verify the staircase facts for every n <= n_max.

    Checks (s.1), (s.2) with the kind's growth constant, n <= T_n < T_1 + 2(n-1),
    unit steps of sigma, the nu recursion, sigma_1 = 1 and sigma_n < n for
    S_SEQ, the rarity bound between consecutive steps, and (optionally)
    that every segment for 3 <= n <= n_max has one or two values with the
    matching T placements.
    """
    kind = SeqKind(kind)
    if n_max < 2:
        raise ValueError("n_max must be at least 2")
    report = AxiomReport(kind, n_max)
    a = kind.growth_constant
    t1 = sigma(kind, 1, config).t_enclosure
    records = [None] + [sigma(kind, k, config) for k in range(1, n_max + 2)]
    last_step = None
    for n in range(1, n_max + 1):
        rec, nxt = records[n], records[n + 1]
        report.checked += 1
        if not rec.certifies():
            report.fail(f"sigma record at n={n} does not certify its defining condition")
        t = rec.t_enclosure
        if not t.lo >= n:
            report.fail(f"n <= T_n fails at n={n}")
        if n > 1 and not (t - t1).hi < 2 * (n - 1):
            report.fail(f"T_n < T_1 + 2(n-1) fails at n={n}")
        step = nxt.sigma - rec.sigma
        if step not in (0, 1):
            report.fail(f"sigma step {step} at n={n}")
        if nxt.nu != rec.nu + 1 + step:
            report.fail(f"nu recursion fails at n={n}")
        s1_ok, s2_ok = _increment_ok(kind, n, config)
        if not s1_ok:
            report.fail(f"(s.1) 1 <= s_n < 2 fails at n={n}")
        if not s2_ok:
            report.fail(f"(s.2) s_n < 1 + {a}/n fails at n={n}")
        if step == 1:
            if last_step is not None:
                r = n - last_step
                if not r + 1 > Fraction(last_step) / a:
                    report.fail(f"rarity bound r + 1 > n/a fails for steps at {last_step} and {n}")
            last_step = n
    if kind is SeqKind.S_SEQ:
        if records[1].sigma != 1:
            report.fail("sigma_1 != 1 for S_SEQ")
        bad = [n for n in range(2, n_max + 1) if not records[n].sigma < n]
        if bad:
            report.fail(f"sigma_n < n fails at n={bad[:5]}")
    if segments:
        for n in range(3, n_max + 1):
            seg = segment(kind, n, config)
            report.segments_checked += 1
            if seg.falsified:
                report.more_than_two.append(n)
                continue
            for desc, ok in placement_checks(seg, config):
                if not ok:
                    report.fail(f"placement {desc} fails for segment n={n}")
    return report
