from .arithmetic import mobius_upto, totients_upto, divisors, generalized_binomial
from .logarithms import (
    LogCWeights,
    exp_P,
    log_series,
    binomial_series,
    sym_exp,
    log_c,
    lie_log,
    hcfree,
    free_lie_series,
    hcfree_rule9_rhs,
    check_integral,
)
from .necklaces import serre_free_lie, necklace_counts
from .free_product import free_product_hc

__all__ = (
    'mobius_upto',
    'totients_upto',
    'divisors',
    'generalized_binomial',
    'LogCWeights',
    'exp_P',
    'log_series',
    'binomial_series',
    'sym_exp',
    'log_c',
    'lie_log',
    'hcfree',
    'free_lie_series',
    'hcfree_rule9_rhs',
    'check_integral',
    'serre_free_lie',
    'necklace_counts',
    'free_product_hc',
)
