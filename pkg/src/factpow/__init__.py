"""Certified comparison of a^n with n!, the staircase sigma_n, and n_a."""

from .exact_core import GuardExceeded, Ordering, cmp_pow_factorial, exact_na, factorial
from .mpinterval import DomainError, Interval, PrecisionConfig, RangeError, Unresolved
from .predictor import PredictionOutcome, VerifyReport, predict_na, verify_range
from .sigma import (BudgetExceeded, CaseLabel, SeqKind, SegmentReport, SigmaRecord,
                    axiom_check, breakpoints, segment, sigma)
from .stirling import FunctionTag, eval_tag

__version__ = "0.1.0"

__all__ = [
    "BudgetExceeded", "CaseLabel", "DomainError", "FunctionTag", "GuardExceeded",
    "Interval", "Ordering", "PrecisionConfig", "PredictionOutcome", "RangeError",
    "SegmentReport", "SeqKind", "SigmaRecord", "Unresolved", "VerifyReport",
    "axiom_check", "breakpoints", "cmp_pow_factorial", "eval_tag", "exact_na",
    "factorial", "predict_na", "segment", "sigma", "verify_range",
]
