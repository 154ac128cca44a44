"""Monomial quotients of free algebras and the strongly-free criterion"""
from collections import namedtuple

from necklace.component.series import SignedSeries, invert

from .automaton import FactorAutomaton
from .words import has_overlap, is_factor

StronglyFreeReport = namedtuple(
    'StronglyFreeReport',
    ['equal', 'first_discrepancy', 'counted', 'expected'],
)


def is_strongly_free_monomials(omega):
    """No proper suffix of a member is a proper prefix of a member (a word
    paired with itself included), and no member is a factor of another
    """
    words = list(omega)
    for u in words:
        for v in words:
            if has_overlap(u, v):
                return False
            if u != v and is_factor(u, v):
                return False
    return True


def count_normal_words(alphabet, omega, trunc):
    """Series of the words over ``alphabet`` avoiding every member of omega
    as a factor, i.e. of T(V)/(omega)
    """
    return FactorAutomaton(omega, len(alphabet)).count(alphabet, trunc)


def strongly_free_series_check(alphabet, omega, trunc):
    """Compare the quotient series with the minimal 1/(1 - V + omega)"""
    counted = count_normal_words(alphabet, omega, trunc)
    expected = invert(SignedSeries.one(trunc) - alphabet.series(trunc) +
                      omega.series(alphabet, trunc))
    for q in range(trunc + 1):
        for sign in (0, 1):
            if counted.coef(q)[sign] != expected.coef(q)[sign]:
                return StronglyFreeReport(
                    equal=False,
                    first_discrepancy=(q, sign, counted.coef(q)[sign], expected.coef(q)[sign]),
                    counted=counted,
                    expected=expected,
                )
    return StronglyFreeReport(equal=True, first_discrepancy=None,
                              counted=counted, expected=expected)
