"""Series consequences of dividing out strongly free elements"""
from necklace.component.series import (
    HC_SUPPORT,
    SignedSeries,
    TriSeries,
    invert,
)
from necklace.component.transforms import hcfree
from necklace.exceptions import SeriesDomainError


def _check_quotient_input(a, omega):
    if not a.has_unit_constant():
        raise SeriesDomainError('Algebra series needs constant term 1, got {}'
                                .format(tuple(a.constant_term())))
    if not omega.has_zero_constant():
        raise SeriesDomainError('Relation series needs constant term 0, got {}'
                                .format(tuple(omega.constant_term())))


def quotient_series_strongly_free(a, omega):
    """B = A / (1 + omega A), the series of A/(omega) when omega is strongly
    free in A (otherwise a coefficientwise lower bound)
    """
    _check_quotient_input(a, omega)
    return a * invert(1 + omega * a)


def quotient_series_strongly_free_set(a, omegas):
    """A / (1 + omega_1 A + ... + omega_m A), one element at a time"""
    result = a
    for omega in omegas:
        result = quotient_series_strongly_free(result, omega)
    return result


def a_omega_series(a, omega_degree):
    """Series 1 + z^w y^s A of k (+) s^omega A, omega_degree = (w, s)"""
    weight, sign = omega_degree
    if not a.has_unit_constant():
        raise SeriesDomainError('Algebra series needs constant term 1, got {}'
                                .format(tuple(a.constant_term())))
    if weight < 1:
        raise SeriesDomainError('Relation weight must be positive, got {}'.format(weight))
    return 1 + SignedSeries.monomial(weight, sign, 1, a.trunc) * a


def freeset_hc(v, omega, hc1):
    """Cyclic series of T(V)/(omega) for a strongly free set omega:
    degree 0 is y HC_1 + hcfree(V - omega), degree 1 is HC_1, nothing above.
    """
    degree_zero = hc1.times_y() + hcfree(v - omega)
    return TriSeries.from_slices(
        {0: degree_zero, 1: hc1},
        min(v.trunc, omega.trunc, hc1.trunc),
    ).check_support(HC_SUPPORT)


def strong_quotient_hc_difference(hc0_a, hc1_a, a, omega):
    """HC_0(B) - y HC_1(B) for B = A/(omega), omega strongly free in A:

        HC_0(A) - y HC_1(A) - hcfree(omega B)

    since A^omega is free on s^omega B.
    """
    b = quotient_series_strongly_free(a, omega)
    return hc0_a - hc1_a.times_y() - hcfree(omega * b)
