"""Exact comparisons reported slot by slot

Every comparison produces a Check: whether the two sides agree and, if not,
the first slot (in weight order) where they differ with both values there.
"""
from collections import namedtuple

from necklace.component.oracle import verify_against
from necklace.component.series import SignedSeries, TriSeries, render, tri_from_signed

Check = namedtuple('Check', ['label', 'equal', 'slot', 'computed', 'expected'])


def _signed_slots(f, g, trunc):
    for q in range(trunc + 1):
        for sign in (0, 1):
            yield (q, sign), f.coef(q)[sign], g.coef(q)[sign]


def _tri_slots(f, g, trunc):
    slots = set(f.slots()) | set(g.slots())
    for n, q, sign in sorted(slots, key=lambda slot: (slot[1], slot[0], slot[2])):
        if q <= trunc:
            yield (n, q, sign), f.coef(n, q, sign), g.coef(n, q, sign)


def first_difference(computed, expected):
    """(slot, computed value, expected value) of the first disagreement over
    the weights both series know, or None
    """
    trunc = min(computed.trunc, expected.trunc)
    if isinstance(computed, TriSeries) or isinstance(expected, TriSeries):
        computed, expected = _as_tri(computed), _as_tri(expected)
        slots = _tri_slots(computed, expected, trunc)
    else:
        slots = _signed_slots(computed, expected, trunc)
    for slot, left, right in slots:
        if left != right:
            return slot, left, right
    return None


def _as_tri(series):
    if isinstance(series, SignedSeries):
        return tri_from_signed(series)
    return series


def compare_series(label, computed, expected):
    difference = first_difference(computed, expected)
    if difference is None:
        return Check(label, True, None, render(computed), render(expected))
    slot, left, right = difference
    return Check(label, False, slot, left, right)


def compare_table(label, table, expected, kind):
    """A computed homology table against a predicted series on every slot the
    table covers
    """
    report = verify_against(table, expected, kind)
    if report.equal:
        return Check(label, True, None, '{} slots'.format(report.compared), render(expected))
    slot, computed, predicted = report.first_discrepancy
    return Check(label, False, slot, computed, predicted)


def compare_values(label, computed, expected):
    return Check(label, computed == expected, None, computed, expected)
