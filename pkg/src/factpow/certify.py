"""Certification suites: every inequality and numeric bracket, checked by intervals.

Each suite is a function returning a list of :class:`CheckResult`. A check
passes only when interval arithmetic separates the two sides; an undecided
comparison at the maximum precision counts as a failure.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Optional

import gmpy2

from .exact_core import exact_na, factorial
from .mpinterval import (
    DEFAULT_CONFIG,
    Interval,
    PrecisionConfig,
    Unresolved,
    const_interval,
    refine,
)
from .predictor import interval_samples, predict_na
from .sigma import SeqKind, axiom_check, breakpoints, placement_checks, segment, sigma
from .stirling import (
    EXACT_LIMIT,
    SPECIAL_CASES,
    S_n,
    a_S_at,
    af_special,
    af_special_bounds,
    classical_delta,
    eroot_factorial_bounds,
    eval_tag,
    ln_factorial,
    robbins_capsn,
    s_n,
)

__all__ = ["CheckResult", "SUITES", "run_suites"]

F = Fraction


@dataclass
class CheckResult:
    suite: str
    name: str
    passed: bool
    detail: str = ""
    enclosures: dict[str, tuple[str, str]] = field(default_factory=dict)
    bits: Optional[int] = None

    def as_dict(self) -> dict:
        return {
            "suite": self.suite,
            "name": self.name,
            "passed": self.passed,
            "detail": self.detail,
            "enclosures": {k: list(v) for k, v in self.enclosures.items()},
            "bits": self.bits,
        }


def _ends(enc: Interval) -> tuple[str, str]:
    return enc.lo_str(25), enc.hi_str(25)


class _Suite:
    """Collects CheckResults for one suite."""

    def __init__(self, name: str, config: PrecisionConfig):
        self.name = name
        self.config = config
        self.results: list[CheckResult] = []

    def add(self, name: str, passed: bool, detail: str = "", enclosures=None, bits=None):
        self.results.append(CheckResult(self.name, name, bool(passed), detail, enclosures or {}, bits))

    def prove(self, name: str, compute: Callable[[int], Interval],
              decide: Callable[[Interval], Optional[bool]], label: str = "value") -> bool:
        """Record one interval-decided check; Unresolved counts as failure."""
        try:
            verdict, enc, bits = refine(compute, decide, self.config, what=name)
        except Unresolved as exc:
            encl = {label: _ends(exc.enclosure)} if exc.enclosure is not None else {}
            self.add(name, False, f"unresolved at {exc.bits} bits", encl, exc.bits)
            return False
        self.add(name, verdict, "", {label: _ends(enc)}, bits)
        return verdict

    def inside(self, name: str, compute, lo, hi, label: str = "value") -> bool:
        """Certify lo < value < hi for rational lo, hi."""
        def decide(enc):
            a, b = enc.gt(lo), enc.lt(hi)
            if a is False or b is False:
                return False
            if a and b:
                return True
            return None
        return self.prove(name, compute, decide, label)

    def sweep(self, name: str, items: Iterable, test: Callable[[object, int], Optional[bool]]) -> bool:
        """Certify ``test(item, bits)`` for every item; one result for the batch."""
        failures = []
        count = 0
        for item in items:
            count += 1
            try:
                verdict = _resolve_item(test, item, self.config)
            except Unresolved:
                verdict = False
            if not verdict:
                failures.append(item)
        detail = f"{count} points"
        if failures:
            shown = ", ".join(str(f) for f in failures[:10])
            more = "" if len(failures) <= 10 else f", ... ({len(failures)} total)"
            detail += f"; fails at {shown}{more}"
        self.add(name, not failures, detail)
        return not failures


def _resolve_item(test, item, config):
    for bits in config.schedule():
        verdict = test(item, bits)
        if verdict is not None:
            return verdict
    raise Unresolved(bits)


def _all(*verdicts) -> Optional[bool]:
    if any(v is False for v in verdicts):
        return False
    if all(v is True for v in verdicts):
        return True
    return None


def _x(value, bits) -> Interval:
    return Interval.coerce(value, bits)


def _ln_of(value):
    """y = ln(value) as an interval-valued function of bits."""
    return lambda bits: _x(value, bits).ln()


# -- section 2 ----------------------------------------------------------------


def suite_constants(config):
    s = _Suite("constants", config)
    s.inside("0.5723 < ln(pi)/2 < 0.5724", lambda b: const_interval("ln_pi", b) / 2, F("0.5723"), F("0.5724"))
    s.inside("e ~ 2.718281828459045", lambda b: const_interval("e", b), F("2.718281828459045"), F("2.718281828459046"))
    s.inside("pi ~ 3.141592653589793", lambda b: const_interval("pi", b), F("3.141592653589793"), F("3.141592653589794"))
    s.prove("0.447 > 2 / e^(3/2)", lambda b: 2 / (const_interval("e", b) ** 3).sqrt(), lambda v: v.lt(F("0.447")))
    return s.results


def suite_robbins(config):
    s = _Suite("robbins", config)

    def capsn_holds(n, bits):
        low, high = robbins_capsn(n, bits)
        t = eroot_factorial_bounds(n, bits)
        return _all(low.lt(t), t.lt(high))

    grid = list(range(1, 201)) + [500, 1000, 5000, EXACT_LIMIT]
    s.sweep("L(n)T(2n)/2 < e (n!)^(1/n) < R(n)T(2n)/2", grid, capsn_holds)
    n = 10**12
    s.inside("n + 14 < e (n!)^(1/n) < n + 15 at n = 10^12",
             lambda b: eroot_factorial_bounds(n, b), n + 14, n + 15)

    def exact_root(n, bits):
        # (n!)^(1/n) from the summed logarithms must bracket the integer root.
        t = (ln_factorial(n, bits) / n).exp()
        r, _ = gmpy2.iroot(factorial(n), n)
        r = int(r)
        return _all(t.ge(r), t.lt(r + 1))

    s.sweep("floor((n!)^(1/n)) agrees with integer root", range(1, 301), exact_root)
    return s.results


def suite_basic(config):
    s = _Suite("basic", config)
    s.sweep("1 < L(x) < R(x) for x = 1..1000", range(1, 1001),
            lambda x, b: _all(eval_tag("L", x, b).gt(1), eval_tag("L", x, b).lt(eval_tag("R", x, b))))
    xs = [F(1, 4), F(1, 2)] + list(range(1, 201))
    offsets = [F(1, 24), F(1, 2), 1, 10]
    pairs = [(x, x + d) for x in xs for d in offsets]
    s.sweep("R(y) < L(x) for y >= x + 1/24", pairs,
            lambda p, b: eval_tag("R", p[1], b).lt(eval_tag("L", p[0], b)))
    s.sweep("r(y) < ell(x) for y >= x + 1/24", [p for p in pairs if p[0] >= 1],
            lambda p, b: eval_tag("r", p[1], b).lt(eval_tag("ell", p[0], b)))
    # Near y = x the inequality reverses because ell(x) < r(x).
    s.prove("ell(x) < r(x) at x = 2 (so r(y) < ell(x) needs y bounded away from x)",
            lambda b: eval_tag("r", 2, b) - eval_tag("ell", 2, b), lambda v: v.gt(0))
    s.sweep("ell(x) < r(x) for x = 1..1000", range(1, 1001),
            lambda x, b: eval_tag("ell", x, b).lt(eval_tag("r", x, b)))
    grid = [F(k, 10) for k in range(11, 100)] + list(range(10, 1001))
    s.sweep("(ln x - 1)^2 < x for x > 1", grid,
            lambda x, b: ((_x(x, b).ln() - 1) ** 2).lt(_x(x, b)))
    e_grid = [F(2719, 1000)] + [F(k, 10) for k in range(28, 100)] + list(range(10, 1001))
    s.sweep("(ln x - 1)^2 < 0.2 x for x >= e", e_grid,
            lambda x, b: ((_x(x, b).ln() - 1) ** 2).lt(_x(x, b) / 5))
    s.sweep("ln x < 1 + 0.447 sqrt(x)", [F(k, 10) for k in range(1, 1000)],
            lambda x, b: _x(x, b).ln().lt(1 + F("0.447") * _x(x, b).sqrt()))
    s.sweep("T''(x) < 0 for x > 1", grid, lambda x, b: eval_tag("Tdoubleprime", x, b).lt(0))
    tp_grid = [1] + grid
    s.sweep("T'(x) > 1 and strictly decreasing on [1, 1000]", list(zip(tp_grid, tp_grid[1:])),
            lambda p, b: _all(eval_tag("Tprime", p[1], b).gt(1),
                              eval_tag("Tprime", p[1], b).lt(eval_tag("Tprime", p[0], b))))
    s.sweep("P(x) < P(e) for x != e", [F(k, 10) for k in range(1, 27)] + [F(k, 10) for k in range(28, 200)],
            lambda x, b: eval_tag("P", x, b).lt(eval_tag("P", const_interval("e", b), b)))
    return s.results


def _fd_check(s: _Suite, name: str, f, fprime, x, h=F(1, 10**4), slack=F(1, 10**8)):
    """Central difference of f against the closed-form derivative fprime."""
    def compute(bits):
        fd = (f(x + h, bits) - f(x - h, bits)) / (2 * h)
        return fd - fprime(x, bits)

    s.prove(f"{name} at x={x}", compute, lambda v: _all(v.gt(-slack), v.lt(slack)), label="difference")


def suite_derivatives(config):
    s = _Suite("derivatives", config)
    tag = lambda t: (lambda x, b: eval_tag(t, x, b))
    for x in (2, 5, 10):
        _fd_check(s, "L' = -ell L", tag("L"), lambda x, b: -eval_tag("ell", x, b) * eval_tag("L", x, b), x)
        _fd_check(s, "R' = -r R", tag("R"), lambda x, b: -eval_tag("r", x, b) * eval_tag("R", x, b), x)
        _fd_check(s, "T' identity", tag("T"), tag("Tprime"), x)
        _fd_check(s, "T'' identity", tag("Tprime"), tag("Tdoubleprime"), x)
        _fd_check(s, "P' = p P", tag("P"),
                  lambda x, b: (1 - _x(x, b).ln()) / _x(x, b) ** 2 * eval_tag("P", x, b), x)
        _fd_check(s, "a_s' identity", tag("a_s"), _as_prime, x)
    return s.results


def suite_lemma21(config):
    s = _Suite("lemma21", config)
    bases = [1 + F(i, 4) for i in range(1, 101)]
    pairs = [(a, j) for a in bases for j in range(1, 101)]

    def sandwich(p, bits):
        a, j = p
        la = _x(a, bits).ln()
        c = la + F(j, 10)
        root = (la / c).exp()
        return _all(((c + la) / c).lt(root), root.lt(c / (c - la)))

    s.sweep("(c + ln a)/c < a^(1/c) < c/(c - ln a), 100x100 grid", pairs, sandwich)
    grid = [F(k, 10) for k in range(11, 100)] + list(range(10, 1001))
    s.sweep("1 + ln x/x < x^(1/x) < x/(x - ln x) for x > 1", grid,
            lambda x, b: _all((1 + _x(x, b).ln() / x).lt(eval_tag("P", x, b)),
                              eval_tag("P", x, b).lt(_x(x, b) / (_x(x, b) - _x(x, b).ln()))))
    return s.results


def suite_prop22(config):
    s = _Suite("prop22", config)
    s.prove("G(6.7536) > 0 (upper estimate fails)", lambda b: eval_tag("G_prop22_upper", F("6.7536"), b), lambda v: v.gt(0))
    s.prove("G(6.7537) < 0 (upper estimate holds)", lambda b: eval_tag("G_prop22_upper", F("6.7537"), b), lambda v: v.lt(0))
    s.prove("G(8.0844) < 0 (lower estimate fails)", lambda b: eval_tag("G_prop22_lower", F("8.0844"), b), lambda v: v.lt(0))
    s.prove("G(8.0845) > 0 (lower estimate holds)", lambda b: eval_tag("G_prop22_lower", F("8.0845"), b), lambda v: v.gt(0))
    k = lambda x: (lambda b: eval_tag("K_prop22_upper", _ln_of(x)(b), b))
    s.prove("K(ln 12.5690) < -1", k(F("12.5690")), lambda v: v.lt(-1))
    s.prove("K(ln 12.5691) > -1", k(F("12.5691")), lambda v: v.gt(-1))
    k = lambda x: (lambda b: eval_tag("K_prop22_lower", _ln_of(x)(b), b))
    s.prove("K(ln 14.9063) < 1", k(F("14.9063")), lambda v: v.lt(1))
    s.prove("K(ln 14.9064) > 1", k(F("14.9064")), lambda v: v.gt(1))
    upper_grid = [F("6.7537")] + [F(k, 10) for k in range(68, 100)] + list(range(10, 2001))
    s.sweep("x^(1/x) < (x+1)/(x+1-ln x) for x >= 6.7537", upper_grid,
            lambda x, b: eval_tag("P", x, b).lt((_x(x, b) + 1) / (_x(x, b) + 1 - _x(x, b).ln())))
    lower_grid = [F("8.0845")] + [F(k, 10) for k in range(81, 100)] + list(range(10, 2001))
    s.sweep("1 + ln x/(x-1) < x^(1/x) for x >= 8.0845", lower_grid,
            lambda x, b: (1 + _x(x, b).ln() / (_x(x, b) - 1)).lt(eval_tag("P", x, b)))
    ys = [1 + F(k, 20) for k in range(1, 200)]
    s.sweep("K(y) = e^y (1 - y/(y-1)^2) strictly increasing on (1, 11)", list(zip(ys, ys[1:])),
            lambda p, b: eval_tag("K_prop22_upper", p[0], b).lt(eval_tag("K_prop22_upper", p[1], b)))
    return s.results


def _prop31_grid():
    return [F(3, 5), F(3, 4)] + list(range(1, 101)) + list(range(110, 10001, 10))


def suite_prop31(config):
    s = _Suite("prop31", config)
    grid = _prop31_grid()
    for tag in ("aL", "aR"):
        s.sweep(f"{tag} strictly decreasing on ((ln pi)/2, 10^4]", list(zip(grid, grid[1:])),
                lambda p, b, t=tag: eval_tag(t, p[1], b).lt(eval_tag(t, p[0], b)))
        s.sweep(f"{tag}(x) > (ln pi)/2 on the same grid", grid,
                lambda x, b, t=tag: eval_tag(t, x, b).gt(const_interval("ln_pi", b) / 2))
        s.prove(f"{tag}(10^4) within 1e-3 of (ln pi)/2 (limit trend)",
                lambda b, t=tag: eval_tag(t, 10**4, b) - const_interval("ln_pi", b) / 2,
                lambda v: _all(v.gt(0), v.lt(F(1, 1000))))
    return s.results


def suite_cor32(config):
    s = _Suite("cor32", config)
    s.inside("1.92648 < R(1) < 1.92649", lambda b: eval_tag("R", 1, b), F("1.92648"), F("1.92649"))
    s.inside("1.05978 < R(10) < 1.05979", lambda b: eval_tag("R", 10, b), F("1.05978"), F("1.05979"))
    s.inside("1.005748 < R(100) < 1.005749", lambda b: eval_tag("R", 100, b), F("1.005748"), F("1.005749"))
    grid = _prop31_grid()
    s.sweep("1 + (ln pi)/(2x) < R(x)", grid,
            lambda x, b: (1 + const_interval("ln_pi", b) / (2 * _x(x, b))).lt(eval_tag("R", x, b)))
    for a, lo in ((F("0.9265"), 1), (F("0.5979"), 10), (F("0.5749"), 100)):
        pts = [x for x in grid if x >= lo]
        s.sweep(f"R(x) < 1 + {a}/x for x >= {lo}", pts,
                lambda x, b, a=a: eval_tag("R", x, b).lt(1 + a / _x(x, b)))
    return s.results


def suite_af_estimates(config):
    s = _Suite("af_estimates", config)
    grid = list(range(1, 1001))
    for case in SPECIAL_CASES:
        def holds(x, b, case=case):
            lo, hi = af_special_bounds(case, x, b)
            v = af_special(case, x, b)
            return _all(lo.lt(v), v.lt(hi))

        s.sweep(f"A/(Bx+C) < a_F(x) < A/(Bx+C-A/x) [{case}]", grid, holds)

    def l_product(x, b):
        # L is the product of the pi-root and robbins_lower factors.
        return eval_tag("L", x, b) - (af_special("pi_root", x, b) / x + 1) * (af_special("robbins_lower", x, b) / x + 1)

    s.sweep("L = product of its two factors", [1, 2, 10, 100],
            lambda x, b: (lambda d: d.contains(0))(l_product(x, b)))
    ints = list(range(2, 10**4 + 1))
    s.sweep("a_P strictly increasing on integers [2, 10^4]", list(zip(ints, ints[1:])),
            lambda p, b: eval_tag("aP", p[0], b).lt(eval_tag("aP", p[1], b)))
    s.sweep("P(x) > x/(x+1-ln x) for x > 1", [F(k, 10) for k in range(11, 100)] + list(range(10, 1001)),
            lambda x, b: eval_tag("P", x, b).gt(_x(x, b) / (_x(x, b) + 1 - _x(x, b).ln())))
    return s.results


def suite_as_min(config):
    s = _Suite("as_min", config)
    s.prove("G(25.8679) < 0", lambda b: eval_tag("G_as", F("25.8679"), b), lambda v: v.lt(0))
    s.prove("G(25.8680) > 0", lambda b: eval_tag("G_as", F("25.8680"), b), lambda v: v.gt(0))
    s.prove("K(ln 45.8750) > 1", lambda b: eval_tag("K_as", _ln_of(F("45.8750"))(b), b), lambda v: v.gt(1))
    s.prove("K(ln 45.8751) < 1", lambda b: eval_tag("K_as", _ln_of(F("45.8751"))(b), b), lambda v: v.lt(1))
    for x in (F("25.8679"), F("25.8680"), 26):
        s.inside(f"0.9114 < a_s({x}) < 0.9115", lambda b, x=x: eval_tag("a_s", x, b), F("0.9114"), F("0.9115"))
    return s.results


def suite_thm41(config, n_max: int = EXACT_LIMIT):
    s = _Suite("thm41", config)
    s.inside("1 < s_1 < 2", lambda b: s_n(1, b), 1, 2)
    s.sweep(f"s_(n+1) < s_n for n < {n_max}", range(1, n_max), lambda n, b: s_n(n + 1, b).lt(s_n(n, b)))
    s.sweep(f"1 < s_n < 2 for n <= {n_max}", range(1, n_max + 1),
            lambda n, b: _all(s_n(n, b).gt(1), s_n(n, b).lt(2)))

    def sandwich(n, b):
        v = s_n(n, b)
        low = 1 + eval_tag("a_s", n + 1, b) / (n + 1)
        high = 1 + eval_tag("a_s", n, b) / n
        return _all(low.lt(v), v.lt(high))

    s.sweep(f"1 + a_s(n+1)/(n+1) < s_n < 1 + a_s(n)/n for n <= {n_max}", range(1, n_max + 1), sandwich)
    s.sweep(f"s_n < 1 + 1/n for n <= {n_max}", range(1, n_max + 1),
            lambda n, b: s_n(n, b).lt(1 + F(1, n)))
    return s.results


def suite_as_bound(config, n_max: int = EXACT_LIMIT):
    s = _Suite("as_bound", config)
    s.prove("a_s(1) = 1 exactly", lambda b: eval_tag("a_s", 1, b), lambda v: v.is_thin() and v.contains(1))
    s.sweep(f"a_s(n) < 1 for 1 <= n <= {n_max}", range(1, n_max + 1),
            lambda n, b: eval_tag("a_s", n, b).lt(1))
    s.sweep(f"a_s(n) > 0.9114 for 1 <= n <= {n_max}", range(1, n_max + 1),
            lambda n, b: eval_tag("a_s", n, b).gt(F("0.9114")))
    s.sweep(f"0.9114 < a_s(n) < 1 for 7 <= n <= {n_max}", range(7, n_max + 1),
            lambda n, b: _all(eval_tag("a_s", n, b).gt(F("0.9114")), eval_tag("a_s", n, b).lt(1)))
    s.sweep("a_s(n) > 1 for 2 <= n <= 6", range(2, 7), lambda n, b: eval_tag("a_s", n, b).gt(1))
    return s.results


def suite_thm5(config, n_max: int = EXACT_LIMIT):
    s = _Suite("thm5", config)
    s.inside("1 < S_1 < 1.15", lambda b: S_n(1, b), 1, F("1.15"))
    s.sweep(f"S_(n+1) < S_n for n < {n_max}", range(1, n_max), lambda n, b: S_n(n + 1, b).lt(S_n(n, b)))
    s.sweep(f"S_n > 1 for n <= {n_max}", range(1, n_max + 1), lambda n, b: S_n(n, b).gt(1))
    s.sweep(f"S_n < 1 + 1.1/n for n <= {n_max}", range(1, n_max + 1),
            lambda n, b: S_n(n, b).lt(1 + F(11, 10) / n))
    s.sweep("S_n < R(n+1)(1 + 1/(2n)) for n <= 1000", range(1, 1001),
            lambda n, b: S_n(n, b).lt(eval_tag("R", n + 1, b) * (1 + F(1, 2 * n))))

    def sandwich(n, b):
        v = S_n(n, b)
        return _all((1 + a_S_at(n + 1, b) / (n + 1)).lt(v), v.lt(1 + a_S_at(n, b) / n))

    s.sweep("1 + a_S(n+1)/(n+1) < S_n < 1 + a_S(n)/n for 18 <= n <= 500", range(18, 501), sandwich)
    return s.results


def suite_delta(config):
    s = _Suite("delta", config)
    s.prove("delta_1 = 2/e", lambda b: classical_delta(1, b) - 2 / const_interval("e", b), lambda v: v.contains(0))
    s.sweep("0 < delta_n < 1 for n <= 100", range(1, 101),
            lambda n, b: _all(classical_delta(n, b).gt(0), classical_delta(n, b).lt(1)))

    def root_identity(n, b):
        root = (classical_delta(n, b) * factorial(n)) ** F(1, n)
        target = (n + 1) / const_interval("e", b)
        return root.overlaps(target)

    s.sweep("(delta_n n!)^(1/n) encloses (n+1)/e for n <= 50", range(1, 51), root_identity)
    s.sweep("n + 1 < e (n!)^(1/n) for n <= 1000", range(1, 1001),
            lambda n, b: eroot_factorial_bounds(n, b).gt(n + 1))
    return s.results


def suite_sigma(config, n_max: int = 1000, seg_max: int = 2000):
    s = _Suite("sigma", config)
    E, S = SeqKind.E_SEQ, SeqKind.S_SEQ
    landmarks = [(E, 1, 2), (E, 2, 2), (E, 3, 2), (E, 4, 3), (E, 54, 3), (E, 55, 4),
                 (S, 1, 1), (S, 2, 1), (S, 3, 2), (S, 5, 2), (S, 6, 3), (S, 15, 3), (S, 16, 4)]
    for kind, n, want in landmarks:
        got = sigma(kind, n, config).sigma
        s.add(f"sigma_{n} = {want} ({kind.value})", got == want, f"got {got}")
    s.add("sigma_4..sigma_54 all 3 (E_SEQ)",
          all(sigma(E, n, config).sigma == 3 for n in range(4, 55)))
    s.add("sigma_6..sigma_15 all 3 (S_SEQ)",
          all(sigma(S, n, config).sigma == 3 for n in range(6, 16)))
    for kind in (S, E):
        rep = axiom_check(kind, n_max, config, segments=False)
        s.add(f"axioms for {kind.value} up to n = {n_max}", rep.passed,
              "; ".join(rep.failures[:5]) or f"{rep.checked} indices")
        more, placement_failures = [], []
        for n in range(3, seg_max + 1):
            seg = segment(kind, n, config)
            if seg.falsified:
                more.append(n)
                continue
            placement_failures += [f"n={n}: {d}" for d, ok in placement_checks(seg, config) if not ok]
        s.add(f"segments of {kind.value} have one or two values, 3 <= n <= {seg_max}", not more,
              f"more than two values at {more[:10]}" if more else f"{seg_max - 2} segments")
        s.add(f"segment T-placements hold for {kind.value}, 3 <= n <= {seg_max}", not placement_failures,
              "; ".join(placement_failures[:5]))
    e_bp = breakpoints(E, 6, config)
    s_bp = breakpoints(S, 6, config)
    s.add("E_SEQ breakpoints start 3, 54", e_bp[:2] == [3, 54], f"{e_bp}")
    s.add("S_SEQ breakpoints start 2, 5, 15", s_bp[:3] == [2, 5, 15], f"{s_bp}")
    s.add("n_i >= 2(5/3)^(i-1) + 1 for E_SEQ",
          all(n >= 2 * F(5, 3) ** (i - 1) + 1 for i, n in enumerate(e_bp, 1)), f"{e_bp}")
    s.add("n_i >= 2^i for S_SEQ", all(n >= 2**i for i, n in enumerate(s_bp, 1)), f"{s_bp}")
    return s.results


TABLE = [3, 4, 5, 6, 7, 8, 9, 11, 12, 13, 14, 15]


def suite_main(config):
    s = _Suite("main", config)
    got = [sigma(SeqKind.E_SEQ, 10**k, config).sigma for k in range(1, 13)]
    s.add("sigma_(10^k) table for k = 1..12", got == TABLE, f"{got}")
    n = 10**12
    s.add("m = sigma_n = 15 at n = 10^12", got[-1] == 15)
    T = lambda k: (lambda b: eroot_factorial_bounds(k, b))
    s.prove("T_(n-15) < n", T(n - 15), lambda v: v.lt(n))
    s.inside("n < T_(n-14) < n + 1", T(n - 14), n, n + 1)
    s.prove("n + 1 < T_(n-13)", T(n - 13), lambda v: v.gt(n + 1))
    a = interval_samples(n, 1, config)[0]
    out = predict_na(a, with_oracle=False, config=config)
    s.add("candidates for a in (n/e, (n+1)/e] are {n-14, n-13}",
          out.candidates == (n - 14, n - 13), f"a = {a}, case {out.case_label.value}")
    for a, want in ((F(11, 10), 2), (F(109, 100), 2)):
        out = predict_na(a, config=config)
        s.add(f"a = {a} <= 3/e gives n_a = 2", out.candidates == (want,) and out.exact == want)
    return s.results


def _root_delta(n, b):
    # delta_n^(1/n) = (n+1) / (e (n!)^(1/n)), kept in log space.
    return (Interval(n + 1, n + 1, b).ln() - 1 - ln_factorial(n, b) / n).exp()


def _as_prime(x, b):
    xi = _x(x, b)
    lx = xi.ln()
    return (xi**2 + (lx - 1) ** 2 - xi * lx) / xi**2 * eval_tag("P", x, b) - 1


def suite_limits(config):
    """Finite-range surrogates for the limit statements (calibrated tolerances)."""
    s = _Suite("limits", config)
    s.prove("|a_S(10^4) - 1/2| < 0.01", lambda b: a_S_at(10**4, b) - F(1, 2),
            lambda v: _all(v.gt(F(-1, 100)), v.lt(F(1, 100))))
    na = exact_na(300)
    s.prove("|n_a/a - e| < 0.01 at a = 300", lambda b: F(na, 300) - const_interval("e", b),
            lambda v: _all(v.gt(F(-1, 100)), v.lt(F(1, 100))), label="n_a/a - e")
    s.prove("|n/(n!)^(1/n) - e| < 0.01 at n = 10^4",
            lambda b: 10**4 / (ln_factorial(10**4, b) / 10**4).exp() - const_interval("e", b),
            lambda v: _all(v.gt(F(-1, 100)), v.lt(F(1, 100))))
    gaps = []
    for a in (10, 50, 100, 300):
        gaps.append(abs(F(exact_na(a), a) - F("2.718281828459045")))
    s.add("|n_a/a - e| decreases along a = 10, 50, 100, 300",
          all(x > y for x, y in zip(gaps, gaps[1:])), ", ".join(f"{float(g):.5f}" for g in gaps))
    checkpoints = (10**2, 10**3, 10**4)

    def shrinking(name, f, target):
        vals = []
        for n in checkpoints:
            _, enc, _ = refine(lambda b: abs(f(n, b) - target(b)), lambda v: True, config)
            vals.append(enc)
        ok = all(x.hi < y.lo for y, x in zip(vals, vals[1:]))
        s.add(name, ok, ", ".join(v.hi_str(6) for v in vals))

    one = lambda b: Interval(1, 1, b)
    shrinking("|s_n - 1| shrinks at n = 10^2, 10^3, 10^4", s_n, one)
    shrinking("|S_n - 1| shrinks at n = 10^2, 10^3, 10^4", S_n, one)
    shrinking("|a_s(n) - 1| shrinks at n = 10^2, 10^3, 10^4", lambda n, b: eval_tag("a_s", n, b), one)
    shrinking("|a_S(n) - 1/2| shrinks at n = 10^2, 10^3, 10^4", a_S_at, lambda b: Interval(F(1, 2), bits=b))
    shrinking("|delta_n^(1/n) - 1| shrinks at n = 10^2, 10^3, 10^4", _root_delta, one)
    shrinking("|a_s'(x)| shrinks at x = 10^2, 10^3, 10^4", _as_prime, lambda b: Interval(0, 0, b))
    return s.results


SUITES: dict[str, Callable[[PrecisionConfig], list[CheckResult]]] = {
    "constants": suite_constants,
    "robbins": suite_robbins,
    "basic": suite_basic,
    "derivatives": suite_derivatives,
    "lemma21": suite_lemma21,
    "prop22": suite_prop22,
    "prop31": suite_prop31,
    "cor32": suite_cor32,
    "af_estimates": suite_af_estimates,
    "as_min": suite_as_min,
    "thm41": suite_thm41,
    "as_bound": suite_as_bound,
    "thm5": suite_thm5,
    "delta": suite_delta,
    "sigma": suite_sigma,
    "main": suite_main,
    "limits": suite_limits,
}


def run_suites(names: Iterable[str] | None = None, config: PrecisionConfig | None = None) -> list[CheckResult]:
    config = config or DEFAULT_CONFIG
    names = list(SUITES) if not names else list(names)
    unknown = [n for n in names if n not in SUITES]
    if unknown:
        raise KeyError(f"unknown suite(s): {', '.join(unknown)}; known: {', '.join(SUITES)}")
    results = []
    for name in names:
        results.extend(SUITES[name](config))
    return results
