"""Plain-text and JSON renderings of series

Plain text uses the expression syntax, so every rendering parses back to the
same series:

    1 + 2*z + (3 + 4*y)*z^2 - 1/2*y*z^3

JSON coefficients are integers when integral and "p/q" strings otherwise.
"""
from fractions import Fraction

from .signed import SignedSeries
from .tri import TriSeries


def format_rational(value):
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return '{}/{}'.format(value.numerator, value.denominator)


def json_rational(value):
    value = Fraction(value)
    if value.denominator == 1:
        return value.numerator
    return format_rational(value)


def parse_rational(value):
    if isinstance(value, bool):
        raise ValueError('Not a rational literal: {!r}'.format(value))
    if isinstance(value, (int, Fraction)):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    raise ValueError('Not a rational literal: {!r}'.format(value))


def _power(symbol, exponent):
    if exponent == 0:
        return None
    if exponent == 1:
        return symbol
    return '{}^{}'.format(symbol, exponent)


def _term(coefficient, symbols):
    """(negative, body) for coefficient * symbols"""
    symbols = [s for s in symbols if s]
    magnitude = abs(coefficient)
    if not symbols:
        body = format_rational(magnitude)
    elif magnitude == 1:
        body = '*'.join(symbols)
    else:
        body = '*'.join([format_rational(magnitude)] + symbols)
    return coefficient < 0, body


def _join(terms):
    if not terms:
        return '0'
    pieces = []
    for index, (negative, body) in enumerate(terms):
        if index == 0:
            pieces.append('-' + body if negative else body)
        else:
            pieces.append((' - ' if negative else ' + ') + body)
    return ''.join(pieces)


def _pair_terms(even, odd, symbols):
    if even and odd and any(symbols):
        inner = _join([_term(even, []), _term(odd, ['y'])])
        return [(False, '({})*{}'.format(inner, '*'.join(s for s in symbols if s)))]
    terms = []
    if even:
        terms.append(_term(even, symbols))
    if odd:
        terms.append(_term(odd, ['y'] + symbols))
    return terms


def render_signed(f):
    terms = []
    for q in range(f.trunc + 1):
        even, odd = f.coef(q)
        terms.extend(_pair_terms(even, odd, [_power('z', q)]))
    return _join(terms)


def render_tri(f):
    grouped = {}
    for (n, q, sign), value in f.items():
        grouped.setdefault((q, n), [Fraction(0), Fraction(0)])[sign] = value
    terms = []
    for q, n in sorted(grouped):
        even, odd = grouped[(q, n)]
        terms.extend(_pair_terms(even, odd, [_power('x', n), _power('z', q)]))
    return _join(terms)


def render(series):
    if isinstance(series, TriSeries):
        return render_tri(series)
    return render_signed(series)


def signed_to_dict(f):
    return {
        'trunc': f.trunc,
        'coefficients': [
            [q, json_rational(even), json_rational(odd)]
            for q, (even, odd) in enumerate(f.pairs())
        ],
    }


def signed_from_dict(data):
    trunc = int(data['trunc'])
    even = [0] * (trunc + 1)
    odd = [0] * (trunc + 1)
    for q, a, b in data['coefficients']:
        even[q] = parse_rational(a)
        odd[q] = parse_rational(b)
    return SignedSeries(trunc, even, odd)


def tri_to_dict(f):
    return {
        'trunc': f.trunc,
        'coefficients': [
            [n, q, sign, json_rational(value)]
            for (n, q, sign), value in f.items()
        ],
    }


def tri_from_dict(data):
    return TriSeries(
        int(data['trunc']),
        {(n, q, sign): parse_rational(value) for n, q, sign, value in data['coefficients']},
    )


def to_dict(series):
    if isinstance(series, TriSeries):
        return tri_to_dict(series)
    return signed_to_dict(series)


def _aligned(rows):
    widths = [max(len(row[i]) for row in rows) for i in range(len(rows[0]))]
    return '\n'.join('  '.join(cell.rjust(width) for cell, width in zip(row, widths))
                     for row in rows)


def render_coefficients(series):
    """Aligned coefficient table: (q, even, odd) rows for a series in (z, y),
    (n, q, e, coefficient) rows for a series in (x, z, y); zero rows skipped
    """
    if isinstance(series, TriSeries):
        rows = [['n', 'q', 'e', 'coefficient']]
        rows.extend([str(n), str(q), str(sign), format_rational(value)]
                    for (n, q, sign), value in series.items())
        return _aligned(rows)
    rows = [['q', 'even', 'odd']]
    rows.extend([str(q), format_rational(even), format_rational(odd)]
                for q, (even, odd) in enumerate(series.pairs()) if even or odd)
    return _aligned(rows)
