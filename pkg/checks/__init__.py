from .suites import SUITES, TABLE_HEADER, CheckResult, check, run_suite
from . import density_checks, transitivity_checks, mahavier_checks, fans_checks

__all__ = [
    "SUITES", "TABLE_HEADER", "CheckResult", "check", "run_suite",
    "density_checks", "transitivity_checks", "mahavier_checks", "fans_checks"
]
