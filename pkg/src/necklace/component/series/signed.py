"""Truncated series in Q[[z]][y]/(y^2 - 1)

A ``SignedSeries`` stores, for every weight q in [0..trunc], the pair
(a_q, b_q) of the coefficients of z^q and y·z^q. The relation y^2 = 1 is
structural: there are exactly two sign components per weight and products
combine them as (a + by)(c + dy) = (ac + bd) + (ad + bc)y.

Every value is immutable. Binary operations on series with different bounds
truncate to the smaller bound.
"""
from collections import namedtuple
from fractions import Fraction
from numbers import Rational

from necklace.exceptions import SeriesDomainError


class CoefPair(namedtuple('CoefPair', ['even', 'odd'])):
    """Coefficients of z^q (even) and y·z^q (odd) at one weight"""
    __slots__ = ()

    def __add__(self, other):
        return CoefPair(self.even + other.even, self.odd + other.odd)

    def __sub__(self, other):
        return CoefPair(self.even - other.even, self.odd - other.odd)

    def __mul__(self, other):
        return CoefPair(
            self.even * other.even + self.odd * other.odd,
            self.even * other.odd + self.odd * other.even,
        )

    def __neg__(self):
        return CoefPair(-self.even, -self.odd)

    def is_zero(self):
        return self.even == 0 and self.odd == 0


ZERO_PAIR = CoefPair(Fraction(0), Fraction(0))
ONE_PAIR = CoefPair(Fraction(1), Fraction(0))


def _fraction(value):
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, Rational)):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value)
    raise TypeError('Coefficients must be exact rationals, got {!r}'.format(value))


class SignedSeries(object):
    """An element of Q[[z]][y]/(y^2-1) known up to weight ``trunc``"""

    __slots__ = ('trunc', '_even', '_odd')

    def __init__(self, trunc, even=(), odd=()):
        if trunc < 0:
            raise ValueError('Truncation bound must be nonnegative, got {}'.format(trunc))
        even = [_fraction(c) for c in list(even)[:trunc + 1]]
        odd = [_fraction(c) for c in list(odd)[:trunc + 1]]
        even.extend([Fraction(0)] * (trunc + 1 - len(even)))
        odd.extend([Fraction(0)] * (trunc + 1 - len(odd)))
        self.trunc = trunc
        self._even = tuple(even)
        self._odd = tuple(odd)

    # construction helpers

    @classmethod
    def zero(cls, trunc):
        return cls(trunc)

    @classmethod
    def one(cls, trunc):
        return cls.constant(1, trunc)

    @classmethod
    def constant(cls, value, trunc):
        return cls(trunc, [value])

    @classmethod
    def monomial(cls, weight, sign, coefficient, trunc):
        """coefficient · y^sign · z^weight (zero when weight > trunc)"""
        if weight < 0:
            raise ValueError('Weights are nonnegative, got {}'.format(weight))
        even = [0] * (trunc + 1)
        odd = [0] * (trunc + 1)
        if weight <= trunc:
            (odd if sign % 2 else even)[weight] = coefficient
        return cls(trunc, even, odd)

    @classmethod
    def from_pairs(cls, pairs, trunc):
        """Build from a sequence of (even, odd) pairs indexed by weight"""
        pairs = list(pairs)
        return cls(trunc, [p[0] for p in pairs], [p[1] for p in pairs])

    @classmethod
    def from_terms(cls, terms, trunc):
        """Build from a mapping {(weight, sign): coefficient}"""
        even = [0] * (trunc + 1)
        odd = [0] * (trunc + 1)
        for (weight, sign), coefficient in terms.items():
            if weight <= trunc:
                target = odd if sign % 2 else even
                target[weight] += _fraction(coefficient)
        return cls(trunc, even, odd)

    from_polynomial = from_terms

    # access

    def coef(self, weight):
        if weight < 0 or weight > self.trunc:
            raise IndexError('Weight {} outside [0..{}]'.format(weight, self.trunc))
        return CoefPair(self._even[weight], self._odd[weight])

    def __getitem__(self, weight):
        return self.coef(weight)

    @property
    def even(self):
        return self._even

    @property
    def odd(self):
        return self._odd

    def pairs(self):
        return [CoefPair(a, b) for a, b in zip(self._even, self._odd)]

    def items(self):
        """Nonzero coefficients as ((weight, sign), value), by weight then sign"""
        for q in range(self.trunc + 1):
            if self._even[q]:
                yield (q, 0), self._even[q]
            if self._odd[q]:
                yield (q, 1), self._odd[q]

    def constant_term(self):
        return self.coef(0)

    def has_unit_constant(self):
        return self._even[0] == 1 and self._odd[0] == 0

    def has_zero_constant(self):
        return self._even[0] == 0 and self._odd[0] == 0

    def ord(self):
        """Lowest weight with a nonzero coefficient, None for the zero series"""
        for q in range(self.trunc + 1):
            if self._even[q] or self._odd[q]:
                return q
        return None

    def is_zero(self):
        return self.ord() is None

    def is_integral(self):
        return all(c.denominator == 1 for c in self._even + self._odd)

    def is_nonnegative(self):
        return all(c >= 0 for c in self._even + self._odd)

    def even_part(self):
        return SignedSeries(self.trunc, self._even)

    def odd_part(self):
        return SignedSeries(self.trunc, (), self._odd)

    def truncate(self, trunc):
        if trunc > self.trunc:
            raise ValueError('Cannot extend a series known up to weight {} to weight {}'
                             .format(self.trunc, trunc))
        return SignedSeries(trunc, self._even, self._odd)

    # arithmetic

    def _coerce(self, other):
        if isinstance(other, SignedSeries):
            return other
        if isinstance(other, (int, Rational)):
            return SignedSeries.constant(other, self.trunc)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return add(self, other)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return sub(self, other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return sub(other, self)

    def __mul__(self, other):
        if isinstance(other, (int, Rational)):
            return self.scale(other)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return mul(self, other)

    __rmul__ = __mul__

    def __neg__(self):
        return self.scale(-1)

    def __pow__(self, exponent):
        return power(self, exponent)

    def scale(self, factor):
        factor = _fraction(factor)
        return SignedSeries(
            self.trunc,
            [c * factor for c in self._even],
            [c * factor for c in self._odd],
        )

    def times_y(self):
        """Multiplication by y swaps the sign components"""
        return SignedSeries(self.trunc, self._odd, self._even)

    def __eq__(self, other):
        if isinstance(other, (int, Rational)):
            other = SignedSeries.constant(other, self.trunc)
        if not isinstance(other, SignedSeries):
            return NotImplemented
        return (self.trunc == other.trunc and
                self._even == other._even and
                self._odd == other._odd)

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    def __hash__(self):
        return hash((self.trunc, self._even, self._odd))

    def __repr__(self):
        from .render import render_signed
        return 'SignedSeries({}, trunc={})'.format(render_signed(self), self.trunc)

    __str__ = __repr__


def add(f, g):
    trunc = min(f.trunc, g.trunc)
    return SignedSeries(
        trunc,
        [f._even[q] + g._even[q] for q in range(trunc + 1)],
        [f._odd[q] + g._odd[q] for q in range(trunc + 1)],
    )


def sub(f, g):
    trunc = min(f.trunc, g.trunc)
    return SignedSeries(
        trunc,
        [f._even[q] - g._even[q] for q in range(trunc + 1)],
        [f._odd[q] - g._odd[q] for q in range(trunc + 1)],
    )


def mul(f, g):
    """Weight convolution with y^2 = 1"""
    trunc = min(f.trunc, g.trunc)
    fa, fb, ga, gb = f._even, f._odd, g._even, g._odd
    f_support = [i for i in range(trunc + 1) if fa[i] or fb[i]]
    g_support = [j for j in range(trunc + 1) if ga[j] or gb[j]]
    even = [Fraction(0)] * (trunc + 1)
    odd = [Fraction(0)] * (trunc + 1)
    for i in f_support:
        a, b = fa[i], fb[i]
        for j in g_support:
            if i + j > trunc:
                break
            c, d = ga[j], gb[j]
            even[i + j] += a * c + b * d
            odd[i + j] += a * d + b * c
    return SignedSeries(trunc, even, odd)


def compose(coefficients, f):
    """Insert ``f`` (zero constant term) into the univariate power series with
    the given coefficient sequence: sum_k coefficients[k] · f^k.

    Only the first ``trunc + 1`` coefficients can contribute, since
    ord(f^k) >= k. Evaluated by Horner's rule.
    """
    if not f.has_zero_constant():
        raise SeriesDomainError('Can only compose with a series of zero constant term, '
                                'got constant term {}'.format(tuple(f.constant_term())))
    coefficients = [_fraction(c) for c in list(coefficients)[:f.trunc + 1]]
    result = SignedSeries.zero(f.trunc)
    for c in reversed(coefficients):
        result = mul(result, f) + c
    return result


def invert(f):
    """Inverse of a series with constant term 1, by the Neumann series
    1/(1 - u) = 1 + u + u^2 + ... with u = 1 - f
    """
    if not f.has_unit_constant():
        raise SeriesDomainError('Only series with constant term 1 are invertible here, '
                                'got constant term {}'.format(tuple(f.constant_term())))
    return compose([1] * (f.trunc + 1), sub(SignedSeries.one(f.trunc), f))


def invert_unit(f):
    """Inverse of a series whose constant term is a nonzero rational c (no y
    part): 1/f = (1/c) · invert(f/c)
    """
    a, b = f.constant_term()
    if b != 0 or a == 0:
        raise SeriesDomainError('Series with constant term {} is not an invertible unit'
                                .format(tuple(f.constant_term())))
    return invert(f.scale(1 / a)).scale(1 / a)


def power(f, exponent):
    """f^k for integer k; negative k requires an invertible constant term"""
    if not isinstance(exponent, int):
        raise SeriesDomainError('Exponents must be integers, got {!r}'.format(exponent))
    if exponent < 0:
        return power(invert_unit(f), -exponent)
    result = SignedSeries.one(f.trunc)
    base = f
    while exponent:
        if exponent & 1:
            result = mul(result, base)
        exponent >>= 1
        if exponent:
            base = mul(base, base)
    return result


def substitute_power(f, k):
    """The substitution z -> z^k, y -> (-1)^(k+1) y^k.

    For odd k the pair at weight q moves to weight kq unchanged; for even k
    it becomes (a_q - b_q, 0), since then y^k = 1 and (-1)^(k+1) = -1.
    """
    if k < 1:
        raise SeriesDomainError('Substitution exponent must be positive, got {}'.format(k))
    trunc = f.trunc
    even = [Fraction(0)] * (trunc + 1)
    odd = [Fraction(0)] * (trunc + 1)
    for q in range(trunc // k + 1):
        a, b = f._even[q], f._odd[q]
        if k % 2:
            even[k * q] = a
            odd[k * q] = b
        else:
            even[k * q] = a - b
    return SignedSeries(trunc, even, odd)


def free_product_series(a, b):
    """Series of the free product of two connected algebras,
    1/(1/A + 1/B - 1)
    """
    return invert(invert(a) + invert(b) - 1)
