"""Homology tables: storage, comparison and display"""
from collections import namedtuple

from necklace.component.series import TriSeries

ComparisonReport = namedtuple('ComparisonReport', ['equal', 'first_discrepancy', 'compared'])

Discrepancy = namedtuple('Discrepancy', ['slot', 'computed', 'expected'])

HH = 'hh'
HC = 'hc'


class HomologyTable(object):
    """Dimensions of HH_{n,q,e} and HC_{n,q,e} for 1 <= q <= trunc and
    n <= max_hdeg. Slots absent from ``hh``/``hc`` are zero.
    """

    def __init__(self, presentation_hash, trunc, max_hdeg, hh, hc):
        self.presentation_hash = presentation_hash
        self.trunc = trunc
        self.max_hdeg = max_hdeg
        self.hh = {slot: dim for slot, dim in hh.items() if dim}
        self.hc = {slot: dim for slot, dim in hc.items() if dim}
        self.hh[(0, 0, 0)] = 1

    def __eq__(self, other):
        return (isinstance(other, HomologyTable) and
                (self.trunc, self.max_hdeg, self.hh, self.hc) ==
                (other.trunc, other.max_hdeg, other.hh, other.hc))

    def __ne__(self, other):
        return not self == other

    def __repr__(self):
        return 'HomologyTable({}, trunc={}, max_hdeg={})'.format(
            self.presentation_hash, self.trunc, self.max_hdeg)

    def dims(self, kind):
        return self.hh if kind == HH else self.hc

    def covers(self, slot):
        n, q, _ = slot
        return q <= self.trunc and n <= self.max_hdeg

    def slots(self):
        """Every slot the table has computed, by weight then degree"""
        return [(n, q, sign) for q in range(0, self.trunc + 1)
                for n in range(0, min(q, self.max_hdeg) + 1) for sign in (0, 1)]

    def series(self, kind):
        return TriSeries(self.trunc, self.dims(kind))

    def hh_series(self):
        return self.series(HH)

    def hc_series(self):
        return self.series(HC)

    def to_dict(self):
        return {
            'presentation_hash': self.presentation_hash,
            'N': self.trunc,
            'max_hdeg': self.max_hdeg,
            'hh': [[n, q, sign, dim] for (n, q, sign), dim in sorted(self.hh.items())],
            'hc': [[n, q, sign, dim] for (n, q, sign), dim in sorted(self.hc.items())],
        }

    @classmethod
    def from_dict(cls, config):
        return cls(
            config['presentation_hash'],
            config['N'],
            config['max_hdeg'],
            {(n, q, sign): dim for n, q, sign, dim in config['hh']},
            {(n, q, sign): dim for n, q, sign, dim in config['hc']},
        )


def verify_against(table, predicted, kind=HC):
    """Exact slotwise comparison of a table with a predicted series, over
    the slots both cover
    """
    dims = table.dims(kind)
    compared = 0
    for slot in table.slots():
        if slot[1] > predicted.trunc:
            continue
        compared += 1
        computed = dims.get(slot, 0)
        expected = predicted.coef(*slot)
        if computed != expected:
            return ComparisonReport(False, Discrepancy(slot, computed, expected), compared)
    return ComparisonReport(True, None, compared)


def bookkeeping_report(table):
    """HH_{n,q,e} = HC_{n,q,e} + HC_{n-1,q,e+1} on every computed slot of
    positive weight
    """
    compared = 0
    for slot in table.slots():
        n, q, sign = slot
        if q == 0:
            continue
        compared += 1
        expected = table.hc.get(slot, 0) + table.hc.get((n - 1, q, 1 - sign), 0)
        computed = table.hh.get(slot, 0)
        if computed != expected:
            return ComparisonReport(False, Discrepancy(slot, computed, expected), compared)
    return ComparisonReport(True, None, compared)


def render_table(table):
    """Aligned text: one row per (q, sign), HH_n and HC_n columns"""
    degrees = range(0, table.max_hdeg + 1)
    header = ['q', 'e'] + ['HH_{}'.format(n) for n in degrees] + ['HC_{}'.format(n) for n in degrees]
    rows = []
    for q in range(1, table.trunc + 1):
        for sign in (0, 1):
            rows.append(
                [str(q), str(sign)] +
                [_cell(table.hh, (n, q, sign), n <= q) for n in degrees] +
                [_cell(table.hc, (n, q, sign), n < q) for n in degrees]
            )
    widths = [max(len(row[i]) for row in [header] + rows) for i in range(len(header))]
    lines = ['# presentation {}, N={}, max_hdeg={}'.format(
        table.presentation_hash, table.trunc, table.max_hdeg)]
    for row in [header] + rows:
        lines.append('  '.join(cell.rjust(width) for cell, width in zip(row, widths)))
    return '\n'.join(lines)


def _cell(dims, slot, supported):
    if not supported:
        return '.'
    return str(dims.get(slot, 0))
