"""Passing between Hochschild and cyclic homology series, and the index
transport that Koszul duality induces on them.

Hochschild and cyclic series are tied by HH = 1 + (1 + xy) HC; slotwise

    HH[n, q, e] = HC[n, q, e] + HC[n - 1, q, e + 1]   (plus 1 at (0, 0, 0))
"""
import logging
from fractions import Fraction

from necklace.component.series import (
    HC_SUPPORT,
    HH_SUPPORT,
    SignedSeries,
    TriSeries,
)
from necklace.exceptions import DivisibilityError, SeriesDomainError, SupportError


class DualityRemap(object):
    """Koszul duality on homology series, as a map of slots.

    HH-dual sends (n, q, e) to (q - n, q, e); HC-dual sends (n, q, e) to
    (q - n - 1, q, e + 1). Both are involutions on their support region.
    """

    HH = 'HH-dual'
    HC = 'HC-dual'

    def __init__(self, kind):
        if kind not in (self.HH, self.HC):
            raise ValueError('Unknown duality remap {!r}, expected {!r} or {!r}'
                             .format(kind, self.HH, self.HC))
        self.kind = kind

    @property
    def support(self):
        return HH_SUPPORT if self.kind == self.HH else HC_SUPPORT

    def __call__(self, slot):
        n, q, sign = slot
        if self.kind == self.HH:
            target = (q - n, q, sign)
        else:
            target = (q - n - 1, q, (sign + 1) % 2)
        if target[0] < 0:
            raise SupportError(
                '{} sends slot (n={}, q={}, sign={}) to homological degree {}'
                .format(self.kind, n, q, sign, target[0]), slot=slot,
            )
        return target

    def __eq__(self, other):
        return isinstance(other, DualityRemap) and self.kind == other.kind

    def __hash__(self):
        return hash(self.kind)

    def __repr__(self):
        return 'DualityRemap({!r})'.format(self.kind)


HH_DUAL = DualityRemap(DualityRemap.HH)
HC_DUAL = DualityRemap(DualityRemap.HC)


def hh_from_hc(hc):
    hc.check_support(HC_SUPPORT)
    xy = TriSeries.monomial(1, 0, 1, 1, hc.trunc)
    return (1 + hc + xy * hc).check_support(HH_SUPPORT)


def hc_from_hh(hh):
    """Solve HH = 1 + (1 + xy) HC for HC degree by degree.

    Raises DivisibilityError at the first slot (by weight, then degree)
    where the solution would leave the cyclic support n <= q - 1.
    """
    if hh.coef(0, 0, 0) != 1:
        raise SeriesDomainError('A Hochschild series has constant term 1, got {}'
                                .format(hh.coef(0, 0, 0)))
    hh.check_support(HH_SUPPORT)
    coef = {}
    for q in range(hh.trunc + 1):
        for n in range(min(q, hh.trunc) + 1):
            for sign in (0, 1):
                value = hh.coef(n, q, sign) - coef.get((n - 1, q, 1 - sign), Fraction(0))
                if (n, q, sign) == (0, 0, 0):
                    value -= 1
                if not value:
                    continue
                if n >= q:
                    raise DivisibilityError(
                        'Series is not divisible by 1+xy: remainder {} at slot '
                        '(n={}, q={}, sign={})'.format(value, n, q, sign),
                        slot=(n, q, sign),
                    )
                coef[(n, q, sign)] = value
    logging.debug('Recovered cyclic series with %s nonzero slots', len(coef))
    return TriSeries(hh.trunc, coef)


def koszul_dual(series, remap):
    """Transport coefficients along a duality remap"""
    if not isinstance(remap, DualityRemap):
        remap = DualityRemap(remap)
    series.check_support(remap.support)
    return TriSeries(
        series.trunc,
        {remap(slot): value for slot, value in series.items()},
    )


def diag_hh(hh):
    """The diagonal slots (q, q, e) as a series in (z, y)"""
    return SignedSeries.from_terms(
        {(q, sign): value for (n, q, sign), value in hh.items() if n == q},
        hh.trunc,
    )
