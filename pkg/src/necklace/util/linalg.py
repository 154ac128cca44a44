"""Exact rank of sparse rational matrices

Rows are dicts {column index: rational}. Each row is scaled to a primitive
integer vector and eliminated against stored pivot rows with gcd-based
fraction-free row operations, so no rational arithmetic happens inside the
elimination loop.
"""
from fractions import Fraction
from functools import reduce
from math import gcd


def _lcm(a, b):
    return a * b // gcd(a, b)


def primitive_row(row):
    """Integer multiple of ``row`` with coprime entries and positive leading
    (smallest column) entry; zero entries are dropped
    """
    row = {column: Fraction(value) for column, value in row.items() if value}
    if not row:
        return {}
    denominator = reduce(_lcm, (value.denominator for value in row.values()), 1)
    integral = {column: int(value * denominator) for column, value in row.items()}
    return _normalize(integral)


def _normalize(row):
    content = reduce(gcd, (abs(value) for value in row.values()), 0)
    if row[min(row)] < 0:
        content = -content
    return {column: value // content for column, value in row.items()}


class IncrementalRank(object):
    """Row space of the rows added so far, in echelon form by pivot column"""

    def __init__(self):
        self.pivots = {}

    @property
    def rank(self):
        return len(self.pivots)

    def reduce(self, row):
        row = primitive_row(row)
        while row:
            column = min(row)
            pivot = self.pivots.get(column)
            if pivot is None:
                return row
            a, b = pivot[column], row[column]
            g = gcd(a, b)
            alpha, beta = b // g, a // g
            combined = {key: value * beta for key, value in row.items()}
            for key, value in pivot.items():
                new_value = combined.get(key, 0) - alpha * value
                if new_value:
                    combined[key] = new_value
                else:
                    combined.pop(key, None)
            row = _normalize(combined) if combined else {}
        return row

    def add(self, row):
        """Add a row; True when it raised the rank"""
        row = self.reduce(row)
        if not row:
            return False
        self.pivots[min(row)] = row
        return True

    def contains(self, row):
        return not self.reduce(row)


def rank(rows):
    """Rank of a matrix given as an iterable of sparse rows"""
    echelon = IncrementalRank()
    for row in rows:
        echelon.add(row)
    return echelon.rank
