from .checks import Check, compare_series, compare_table, compare_values, first_difference
from .cases import Case
from .harness import (
    CASE_TIMEOUT,
    DEFAULT_SEED,
    CaseResult,
    Verifier,
    render_results,
    results_to_dict,
)

__all__ = (
    'Check',
    'compare_series',
    'compare_table',
    'compare_values',
    'first_difference',
    'Case',
    'CASE_TIMEOUT',
    'DEFAULT_SEED',
    'CaseResult',
    'Verifier',
    'render_results',
    'results_to_dict',
)
