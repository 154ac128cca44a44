"""Exponentials and logarithms between the series groups P (constant term 0,
under addition) and U (constant term 1, under multiplication).

The Frobenius-type substitutions psi_k = ``substitute_power(., k)`` are ring
endomorphisms, so every logarithm of the form

    log_c(X) = sum_k c_k * log(psi_k X)

is a group homomorphism U -> P. The Möbius weights c_k = mu(k)/k invert the
symmetric-algebra exponential ``sym_exp``; the weights -phi(k)/k applied to
1 - V give the series of V-necklaces, ``hcfree``.
"""
import logging
from fractions import Fraction
from math import factorial

from necklace.component.series import SignedSeries, compose, power, substitute_power
from necklace.exceptions import IntegralityError, SeriesDomainError

from .arithmetic import generalized_binomial, mobius_upto, totients_upto


def _require_zero_constant(X, operation):
    if not X.has_zero_constant():
        raise SeriesDomainError('{} needs a series with constant term 0, got {}'
                                .format(operation, tuple(X.constant_term())))


def _require_unit_constant(X, operation):
    if not X.has_unit_constant():
        raise SeriesDomainError('{} needs a series with constant term 1, got {}'
                                .format(operation, tuple(X.constant_term())))


def check_integral(series, nonnegative=False, what='series'):
    """Raise IntegralityError at the first non-integer (or negative, when
    ``nonnegative``) coefficient. Never rounds.
    """
    for (q, sign), value in series.items():
        if value.denominator != 1:
            raise IntegralityError(
                '{} has non-integer coefficient {} at weight {}, sign {}'
                .format(what, value, q, sign), weight=q, sign=sign,
            )
        if nonnegative and value < 0:
            raise IntegralityError(
                '{} has negative coefficient {} at weight {}, sign {}'
                .format(what, value, q, sign), weight=q, sign=sign,
            )
    return series


def exp_P(X):
    """sum_k X^k / k!"""
    _require_zero_constant(X, 'exp')
    return compose([Fraction(1, factorial(k)) for k in range(X.trunc + 1)], X)


def log_series(X):
    """log(X) = -sum_{k>=1} (1 - X)^k / k"""
    _require_unit_constant(X, 'log')
    coefficients = [0] + [Fraction(-1, k) for k in range(1, X.trunc + 1)]
    return compose(coefficients, 1 - X)


def binomial_series(alpha, u):
    """(1 + u)^alpha for rational alpha, by its Taylor expansion"""
    _require_zero_constant(u, 'binomial_series')
    return compose([generalized_binomial(alpha, k) for k in range(u.trunc + 1)], u)


def sym_exp(X, allow_rational=False):
    """Series of the free graded-commutative algebra on a space with series X:

        S(X) = prod_k (1 + y z^k)^(b_k) / (1 - z^k)^(a_k)

    Integer exponents are taken as exact powers. Rational exponents need
    ``allow_rational`` and go through ``binomial_series``.
    """
    _require_zero_constant(X, 'sym_exp')
    if not allow_rational and not X.is_integral():
        raise SeriesDomainError('sym_exp needs integer coefficients unless '
                                'allow_rational is set, got {}'.format(X))
    trunc = X.trunc
    result = SignedSeries.one(trunc)
    for k in range(1, trunc + 1):
        a, b = X.coef(k)
        if a:
            even_factor = SignedSeries.monomial(k, 0, -1, trunc)
            if a.denominator == 1:
                result = result * power(1 + even_factor, -int(a))
            else:
                result = result * binomial_series(-a, even_factor)
        if b:
            odd_factor = SignedSeries.monomial(k, 1, 1, trunc)
            if b.denominator == 1:
                result = result * power(1 + odd_factor, int(b))
            else:
                result = result * binomial_series(b, odd_factor)
    return result


class LogCWeights(object):
    """A weight sequence c_1, c_2, ... (c_1 != 0) defining log_c

    Only the first ``trunc`` weights matter on a series known to weight
    ``trunc``; missing weights count as zero.
    """

    def __init__(self, weights):
        self.weights = tuple(Fraction(c) for c in weights)
        if not self.weights or self.weights[0] == 0:
            raise SeriesDomainError('Log_c weights need c_1 != 0, got {!r}'
                                    .format(self.weights[:1]))

    def __getitem__(self, k):
        if k < 1:
            raise IndexError('Log_c weights are indexed from 1, got {}'.format(k))
        if k > len(self.weights):
            return Fraction(0)
        return self.weights[k - 1]

    def __len__(self):
        return len(self.weights)

    def __repr__(self):
        return 'LogCWeights({})'.format(', '.join(str(c) for c in self.weights))

    @classmethod
    def plain(cls):
        return cls([1])

    @classmethod
    def mobius(cls, limit):
        mu = mobius_upto(limit)
        return cls([Fraction(mu[k], k) for k in range(1, limit + 1)])

    @classmethod
    def necklace(cls, limit):
        phi = totients_upto(limit)
        return cls([Fraction(-phi[k], k) for k in range(1, limit + 1)])


def log_c(X, c):
    _require_unit_constant(X, 'log_c')
    result = SignedSeries.zero(X.trunc)
    for k in range(1, X.trunc + 1):
        if c[k]:
            result = result + log_series(substitute_power(X, k)).scale(c[k])
    return result


def lie_log(X):
    """Inverse of ``sym_exp``: sum_k mu(k)/k log(psi_k X). Integral input
    gives integral output.
    """
    _require_unit_constant(X, 'lie_log')
    result = log_c(X, LogCWeights.mobius(max(X.trunc, 1)))
    if X.is_integral():
        check_integral(result, what='lie_log({})'.format(X))
    return result


def hcfree(V):
    """-sum_k phi(k)/k log(1 - psi_k V), the series of T(V)^+/[T(V), T(V)]
    when V is the series of a graded space
    """
    _require_zero_constant(V, 'hcfree')
    result = log_c(1 - V, LogCWeights.necklace(max(V.trunc, 1)))
    if V.is_integral():
        check_integral(result, nonnegative=V.is_nonnegative(),
                       what='hcfree({})'.format(V))
    logging.debug('hcfree(%s) = %s', V, result)
    return result


def free_lie_series(X):
    """Series of the free Lie algebra on a space with series X"""
    _require_zero_constant(X, 'free_lie_series')
    return lie_log(power(1 - X, -1))


def hcfree_rule9_rhs(V1, V2):
    """hcfree(V1) + hcfree(V2) + hcfree(V1 V2 / ((1 - V1)(1 - V2))),
    which equals hcfree(V1 + V2)
    """
    cross = V1 * V2 * power((1 - V1) * (1 - V2), -1)
    return hcfree(V1) + hcfree(V2) + hcfree(cross)
