from .suite import DEFAULT_SEED, check_names, run_suite
from .types import CheckResult, SuiteReport, UnknownCheckError, VerifyError

__all__ = [
    "DEFAULT_SEED",
    "check_names",
    "run_suite",
    "CheckResult",
    "SuiteReport",
    "UnknownCheckError",
    "VerifyError",
]
