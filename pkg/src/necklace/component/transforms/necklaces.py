"""Closed counting formulas that the logarithms must reproduce"""
from fractions import Fraction

from necklace.component.series import SignedSeries

from .arithmetic import divisors, mobius_upto, totients_upto


def serre_free_lie(d, trunc):
    """Dimensions of the free Lie algebra on d even generators of weight 1:
    (1/n) sum_{j | n} mu(n/j) d^j
    """
    mu = mobius_upto(trunc)
    even = [0] + [
        Fraction(sum(mu[n // j] * d ** j for j in divisors(n)), n)
        for n in range(1, trunc + 1)
    ]
    return SignedSeries(trunc, even)


def necklace_counts(d, trunc):
    """Number of necklaces of length q over d colours:
    (1/q) sum_{k | q} phi(k) d^(q/k)
    """
    phi = totients_upto(trunc)
    even = [0] + [
        Fraction(sum(phi[k] * d ** (q // k) for k in divisors(q)), q)
        for q in range(1, trunc + 1)
    ]
    return SignedSeries(trunc, even)
