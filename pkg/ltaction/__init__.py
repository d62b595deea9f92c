from .config import RunConfig
from .golden import GoldenSeries, load_golden, golden_names
from .verify import Check, CheckResult, SUITES, run_checks, run_suite
