"""Truncated series in Q[[x, z]][y]/(y^2 - 1)

x counts homological degree n, z counts weight q and y the sign. Storage is
sparse: a mapping (n, q, sign) -> Fraction holding only nonzero
coefficients with q <= trunc and n <= trunc.

Homology series live in the region n <= q (Hochschild) or n <= q - 1
(cyclic). Intermediate expressions such as 1/(1 - x^2 z^2) or a bare x are
allowed to step outside that region; ``check_support`` enforces it where a
homology series is produced or consumed.
"""
from fractions import Fraction
from numbers import Rational

from necklace.exceptions import SeriesDomainError, SupportError

from .signed import SignedSeries, _fraction

HH_SUPPORT = 'hh'
HC_SUPPORT = 'hc'


class TriSeries(object):
    __slots__ = ('trunc', '_coef')

    def __init__(self, trunc, coef=None):
        if trunc < 0:
            raise ValueError('Truncation bound must be nonnegative, got {}'.format(trunc))
        self.trunc = trunc
        cleaned = {}
        for (n, q, sign), value in (coef or {}).items():
            if n < 0 or q < 0:
                raise ValueError('Negative index in slot {}'.format((n, q, sign)))
            if n > trunc or q > trunc:
                continue
            value = _fraction(value)
            if value:
                key = (n, q, sign % 2)
                cleaned[key] = cleaned.get(key, Fraction(0)) + value
                if not cleaned[key]:
                    del cleaned[key]
        self._coef = cleaned

    @classmethod
    def zero(cls, trunc):
        return cls(trunc)

    @classmethod
    def one(cls, trunc):
        return cls(trunc, {(0, 0, 0): 1})

    @classmethod
    def monomial(cls, n, q, sign, coefficient, trunc):
        return cls(trunc, {(n, q, sign): coefficient})

    @classmethod
    def x(cls, trunc):
        return cls.monomial(1, 0, 0, 1, trunc)

    @classmethod
    def from_slices(cls, slices, trunc):
        """Build from {n: SignedSeries}, the inverse of ``slice``"""
        coef = {}
        for n, series in slices.items():
            for (q, sign), value in series.items():
                coef[(n, q, sign)] = value
        return cls(trunc, coef)

    def coef(self, n, q, sign):
        return self._coef.get((n, q, sign % 2), Fraction(0))

    def __getitem__(self, slot):
        return self.coef(*slot)

    def items(self):
        """Nonzero coefficients sorted by (q, n, sign)"""
        for key in sorted(self._coef, key=lambda k: (k[1], k[0], k[2])):
            yield key, self._coef[key]

    def slots(self):
        return dict(self._coef)

    def max_degree(self):
        return max((n for n, _, _ in self._coef), default=0)

    def is_zero(self):
        return not self._coef

    def is_integral(self):
        return all(c.denominator == 1 for c in self._coef.values())

    def slice(self, n):
        """The homological degree n part, as a series in (z, y)"""
        return SignedSeries.from_terms(
            {(q, sign): c for (m, q, sign), c in self._coef.items() if m == n},
            self.trunc,
        )

    def truncate(self, trunc):
        if trunc > self.trunc:
            raise ValueError('Cannot extend a series known up to weight {} to weight {}'
                             .format(self.trunc, trunc))
        return TriSeries(trunc, self._coef)

    def check_support(self, kind=HH_SUPPORT):
        """Raise SupportError on the first slot with n > q (Hochschild) or
        n >= q (cyclic) holding a nonzero coefficient
        """
        offset = 0 if kind == HH_SUPPORT else 1
        for (n, q, sign), value in self.items():
            if n > q - offset:
                raise SupportError(
                    'Nonzero coefficient {} at slot (n={}, q={}, sign={}) outside the {} '
                    'support region'.format(value, n, q, sign, kind.upper()),
                    slot=(n, q, sign),
                )
        return self

    # arithmetic

    def _coerce(self, other):
        if isinstance(other, TriSeries):
            return other
        if isinstance(other, SignedSeries):
            return tri_from_signed(other)
        if isinstance(other, (int, Rational)):
            return TriSeries(self.trunc, {(0, 0, 0): other})
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return tri_add(self, other)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return tri_sub(self, other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return tri_sub(other, self)

    def __mul__(self, other):
        if isinstance(other, (int, Rational)):
            return tri_scale(self, other)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return tri_mul(self, other)

    __rmul__ = __mul__

    def __neg__(self):
        return tri_scale(self, -1)

    def __pow__(self, exponent):
        return tri_power(self, exponent)

    def __eq__(self, other):
        if isinstance(other, (int, Rational, SignedSeries)):
            other = self._coerce(other)
        if not isinstance(other, TriSeries):
            return NotImplemented
        return self.trunc == other.trunc and self._coef == other._coef

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    def __hash__(self):
        return hash((self.trunc, frozenset(self._coef.items())))

    def __repr__(self):
        from .render import render_tri
        return 'TriSeries({}, trunc={})'.format(render_tri(self), self.trunc)

    __str__ = __repr__


def tri_from_signed(f):
    """Embed a series in (z, y) at homological degree 0"""
    return TriSeries(f.trunc, {(0, q, sign): c for (q, sign), c in f.items()})


def tri_add(f, g):
    trunc = min(f.trunc, g.trunc)
    coef = dict(f._coef)
    for key, value in g._coef.items():
        coef[key] = coef.get(key, Fraction(0)) + value
    return TriSeries(trunc, coef)


def tri_sub(f, g):
    return tri_add(f, tri_scale(g, -1))


def tri_scale(f, factor):
    factor = _fraction(factor)
    return TriSeries(f.trunc, {key: value * factor for key, value in f._coef.items()})


def tri_mul(f, g):
    """Graded convolution in (n, q, sign) with y^2 = 1"""
    trunc = min(f.trunc, g.trunc)
    coef = {}
    for (n1, q1, s1), c1 in f._coef.items():
        for (n2, q2, s2), c2 in g._coef.items():
            n, q = n1 + n2, q1 + q2
            if n > trunc or q > trunc:
                continue
            key = (n, q, (s1 + s2) % 2)
            coef[key] = coef.get(key, Fraction(0)) + c1 * c2
    return TriSeries(trunc, coef)


def tri_invert(f):
    """Inverse of a series with constant term 1 through the Neumann series.

    Every term of u = 1 - f has n + q >= 1, and n + q <= 2 trunc on stored
    slots, so the geometric sum stops after 2 trunc terms.
    """
    if f.coef(0, 0, 0) != 1 or f.coef(0, 0, 1) != 0:
        raise SeriesDomainError(
            'Only series with constant term 1 are invertible here, got constant term {}'
            .format((f.coef(0, 0, 0), f.coef(0, 0, 1)))
        )
    u = tri_sub(TriSeries.one(f.trunc), f)
    result = TriSeries.one(f.trunc)
    for _ in range(2 * f.trunc):
        result = tri_add(TriSeries.one(f.trunc), tri_mul(result, u))
    return result


def tri_invert_unit(f):
    """Inverse of a series whose constant term is a nonzero rational c (no y
    part): 1/f = (1/c) · tri_invert(f/c)
    """
    a, b = f.coef(0, 0, 0), f.coef(0, 0, 1)
    if b != 0 or a == 0:
        raise SeriesDomainError('Series with constant term {} is not an invertible unit'
                                .format((a, b)))
    return tri_scale(tri_invert(tri_scale(f, 1 / a)), 1 / a)


def tri_power(f, exponent):
    if not isinstance(exponent, int):
        raise SeriesDomainError('Exponents must be integers, got {!r}'.format(exponent))
    if exponent < 0:
        return tri_power(tri_invert_unit(f), -exponent)
    result = TriSeries.one(f.trunc)
    base = f
    while exponent:
        if exponent & 1:
            result = tri_mul(result, base)
        exponent >>= 1
        if exponent:
            base = tri_mul(base, base)
    return result
