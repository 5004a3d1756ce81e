"""Enumeration, replay of the named cases, oracle suites and the command line."""

from .config import DEFAULT, LARGE, GridConfig, load_config
from .enumeration import Dedup, EnumerationSpec, enumerate_forms, forms_of
from .pipelines import oracle_check, run_enumeration, verify_paper
from .report import CSV_COLUMNS, CaseResult, RunReport, SuiteResult

# ``enumerate`` is the public name; the alias avoids shadowing the builtin here
enumerate = enumerate_forms  # noqa: A001

__all__ = [
    "CSV_COLUMNS", "CaseResult", "DEFAULT", "Dedup", "EnumerationSpec", "GridConfig", "LARGE",
    "RunReport", "SuiteResult", "enumerate", "enumerate_forms", "forms_of", "load_config",
    "oracle_check", "run_enumeration", "verify_paper",
]
