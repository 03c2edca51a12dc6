"""The ``mereon`` command line: verify, report, mesh, mckay and knot."""
from mereon.cli.config import RunConfig, UsageError, build_config
from mereon.cli.main import main
from mereon.cli.report import CheckResult, VerifyReport
from mereon.cli.verify import run_verify

__all__ = [
    "CheckResult",
    "RunConfig",
    "UsageError",
    "VerifyReport",
    "build_config",
    "main",
    "run_verify",
]
