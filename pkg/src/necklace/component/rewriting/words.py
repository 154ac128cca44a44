"""Weighted signed alphabets, words and linear combinations of words

A word is a tuple of generator indices; the empty tuple is the unit. Linear
combinations are plain dicts {word: Fraction} without zero values.
"""
from collections import namedtuple
from fractions import Fraction

from necklace.exceptions import PresentationError

Generator = namedtuple('Generator', ['name', 'weight', 'parity'])


class Alphabet(object):
    """Generators with positive weights and parities in {0, 1}"""

    def __init__(self, generators):
        generators = [Generator(*generator) for generator in generators]
        names = [generator.name for generator in generators]
        if len(set(names)) != len(names):
            duplicates = sorted(set(name for name in names if names.count(name) > 1))
            raise PresentationError('Duplicate generator names: {}'.format(duplicates))
        for generator in generators:
            if not isinstance(generator.weight, int) or generator.weight < 1:
                raise PresentationError('Generator {} needs a positive integer weight, got {!r}'
                                        .format(generator.name, generator.weight))
            if generator.parity not in (0, 1):
                raise PresentationError('Generator {} needs parity 0 or 1, got {!r}'
                                        .format(generator.name, generator.parity))
        self.generators = tuple(generators)
        self._index = {name: i for i, name in enumerate(names)}

    def __len__(self):
        return len(self.generators)

    def __iter__(self):
        return iter(self.generators)

    def __getitem__(self, index):
        return self.generators[index]

    def __eq__(self, other):
        return isinstance(other, Alphabet) and self.generators == other.generators

    def __hash__(self):
        return hash(self.generators)

    def __repr__(self):
        return 'Alphabet({})'.format(', '.join(
            '{}:{}{}'.format(g.name, g.weight, 'o' if g.parity else 'e')
            for g in self.generators
        ))

    @property
    def names(self):
        return [generator.name for generator in self.generators]

    def index(self, name):
        try:
            return self._index[name]
        except KeyError:
            raise PresentationError('Unknown generator {!r}; known generators: {}'
                                    .format(name, ', '.join(self.names)))

    def word(self, names):
        """Word from a sequence of generator names"""
        return tuple(self.index(name) for name in names)

    def weight(self, word):
        return sum(self.generators[letter].weight for letter in word)

    def parity(self, word):
        return sum(self.generators[letter].parity for letter in word) % 2

    def render(self, word):
        if not word:
            return '1'
        return '*'.join(self.generators[letter].name for letter in word)

    def names_of(self, word):
        return [self.generators[letter].name for letter in word]

    def series(self, trunc):
        """The series V(z, y) of the span of the generators"""
        from necklace.component.series import SignedSeries
        return SignedSeries.from_terms(
            _count_by_degree(((g.weight, g.parity) for g in self.generators)),
            trunc,
        )


def _count_by_degree(degrees):
    counts = {}
    for degree in degrees:
        counts[degree] = counts.get(degree, 0) + 1
    return counts


class MonomialSet(object):
    """A finite set of nonempty words"""

    def __init__(self, words):
        words = [tuple(word) for word in words]
        if any(not word for word in words):
            raise PresentationError('Monomial sets cannot contain the empty word')
        self.words = tuple(sorted(set(words)))

    def __iter__(self):
        return iter(self.words)

    def __len__(self):
        return len(self.words)

    def __repr__(self):
        return 'MonomialSet({!r})'.format(self.words)

    def series(self, alphabet, trunc):
        from necklace.component.series import SignedSeries
        return SignedSeries.from_terms(
            _count_by_degree((alphabet.weight(w), alphabet.parity(w)) for w in self.words),
            trunc,
        )


class DegLex(object):
    """Degree-lexicographic order: weight first, then letters compared by
    their position in ``order`` (first name is the largest letter)
    """

    def __init__(self, alphabet, order=None):
        order = list(order) if order else alphabet.names
        if sorted(order) != sorted(alphabet.names):
            raise PresentationError('Order {} must list every generator of {} exactly once'
                                    .format(order, alphabet.names))
        self.alphabet = alphabet
        self.order = order
        self._rank = {alphabet.index(name): len(order) - i for i, name in enumerate(order)}

    def key(self, word):
        return (self.alphabet.weight(word), tuple(self._rank[letter] for letter in word))

    def leading_word(self, combination):
        if not combination:
            return None
        return max(combination, key=self.key)

    def sorted(self, words, reverse=False):
        return sorted(words, key=self.key, reverse=reverse)


# linear combinations

def lc_add(target, combination, factor=1):
    """In-place target += factor * combination"""
    for word, value in combination.items():
        new_value = target.get(word, Fraction(0)) + factor * value
        if new_value:
            target[word] = new_value
        else:
            target.pop(word, None)
    return target


def lc_scale(combination, factor):
    factor = Fraction(factor)
    if not factor:
        return {}
    return {word: value * factor for word, value in combination.items()}


def lc_sandwich(left, combination, right):
    """left * combination * right for words left and right"""
    return {left + word + right: value for word, value in combination.items()}


def lc_is_homogeneous(alphabet, combination):
    return len({(alphabet.weight(w), alphabet.parity(w)) for w in combination}) <= 1


def has_overlap(u, v):
    """True iff a proper nonempty suffix of u equals a proper nonempty prefix of v"""
    for length in range(1, min(len(u), len(v))):
        if u[len(u) - length:] == v[:length]:
            return True
    return False


def is_factor(u, v):
    """True iff u occurs as a contiguous factor of v"""
    length = len(u)
    return any(v[i:i + length] == u for i in range(len(v) - length + 1))


def overlaps(u, v):
    """Lengths k of the proper nonempty suffixes of u equal to prefixes of v"""
    return [length for length in range(1, min(len(u), len(v)))
            if u[len(u) - length:] == v[:length]]
