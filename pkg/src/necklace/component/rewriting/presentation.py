"""Finitely presented graded algebras and their file format

A presentation file (YAML or JSON) reads::

    name: symmetric witness
    generators:
      - {name: a, weight: 1, parity: 1}
      - ...
    relations:
      - [{coef: 1, word: [a, b]}, {coef: 1, word: [b, a]}, {coef: 1, word: [c, c]}]
    order: [a, b, c]
    trunc: 6
"""
from fractions import Fraction
from textwrap import dedent

from necklace.component.series.render import json_rational
from necklace.exceptions import PresentationError
from necklace.util.batch import canonical_md5
from necklace.util.conf import convert_to_rational, load_config

from .words import Alphabet, DegLex, lc_add, lc_is_homogeneous


class Presentation(object):
    """Generators, homogeneous relations, generator order and weight bound.
    Relations are stored monic with respect to the degree-lexicographic order.
    """

    def __init__(self, alphabet, relations, order=None, trunc=10, name=None):
        self.alphabet = alphabet
        self.order = list(order) if order else alphabet.names
        self.trunc = trunc
        self.name = name
        deglex = DegLex(alphabet, self.order)
        monic = []
        for relation in relations:
            relation = {word: Fraction(value) for word, value in relation.items() if value}
            if not relation:
                continue
            if not lc_is_homogeneous(alphabet, relation):
                raise PresentationError(dedent('''Section: relations -
                Relation {} is not homogeneous in weight and parity'''.format(
                    _render(alphabet, relation))))
            lead = deglex.leading_word(relation)
            monic.append({word: value / relation[lead] for word, value in relation.items()})
        self.relations = monic

    def __repr__(self):
        return 'Presentation({!r}, {} generators, {} relations, trunc {})'.format(
            self.name, len(self.alphabet), len(self.relations), self.trunc)

    def with_trunc(self, trunc):
        return Presentation(self.alphabet, self.relations, self.order, trunc, self.name)

    @property
    def hash(self):
        return presentation_hash(self)


def _render(alphabet, relation):
    from .completion import render_combination
    return render_combination(alphabet, relation)


def relation(alphabet, *terms):
    """Linear combination from (coefficient, names) pairs; names is a string
    of one-letter generator names or a sequence of names
    """
    combination = {}
    for coefficient, names in terms:
        lc_add(combination, {alphabet.word(names): Fraction(1)}, Fraction(coefficient))
    return combination


def presentation_from_dict(config):
    if not isinstance(config, dict):
        raise PresentationError(dedent('''Section: presentation -
        Expected a mapping at the top level, got {!r}'''.format(config)))
    if 'generators' not in config:
        raise PresentationError(dedent('''Section: generators -
        'generators' required as key: presentation config: {}'''.format(config)))
    generators = []
    for generator in config['generators']:
        missing = [key for key in ('name', 'weight', 'parity') if key not in generator]
        if missing:
            raise PresentationError(dedent('''Section: generators -
            Generator {} is missing {}'''.format(generator, ', '.join(missing))))
        generators.append((str(generator['name']), generator['weight'], generator['parity']))
    if not generators:
        raise PresentationError(dedent('''Section: generators -
        At least one generator is needed'''))
    try:
        alphabet = Alphabet(generators)
    except PresentationError as e:
        raise PresentationError(dedent('''Section: generators -
        {}'''.format(e)))

    relations = []
    for index, raw_relation in enumerate(config.get('relations') or []):
        combination = {}
        for term in raw_relation:
            if 'coef' not in term or 'word' not in term:
                raise PresentationError(dedent('''Section: relations -
                Term {} of relation {} needs both 'coef' and 'word' '''.format(term, index)))
            try:
                coefficient = convert_to_rational(term['coef'])
                word = alphabet.word(term['word'])
            except (PresentationError, ValueError) as e:
                raise PresentationError(dedent('''Section: relations -
                Could not read term {} of relation {}.
                Full error: {}'''.format(term, index, e)))
            if not word:
                raise PresentationError(dedent('''Section: relations -
                Relation {} has a constant term; relations live in the augmentation ideal'''
                                               .format(index)))
            lc_add(combination, {word: Fraction(1)}, coefficient)
        relations.append(combination)

    trunc = config.get('trunc', 10)
    if not isinstance(trunc, int) or isinstance(trunc, bool) or trunc < 1:
        raise PresentationError(dedent('''Section: trunc -
        Weight bound must be a positive integer, got {!r}'''.format(trunc)))
    try:
        return Presentation(alphabet, relations, config.get('order'), trunc, config.get('name'))
    except PresentationError as e:
        if str(e).startswith('Section:'):
            raise
        raise PresentationError(dedent('''Section: order -
        {}'''.format(e)))


def presentation_to_dict(presentation):
    alphabet = presentation.alphabet
    return {
        'name': presentation.name,
        'generators': [
            {'name': g.name, 'weight': g.weight, 'parity': g.parity} for g in alphabet
        ],
        'relations': [
            [
                {'coef': json_rational(value), 'word': alphabet.names_of(word)}
                for word, value in sorted(relation.items())
            ]
            for relation in presentation.relations
        ],
        'order': list(presentation.order),
        'trunc': presentation.trunc,
    }


def load_presentation(path):
    return presentation_from_dict(load_config(path))


def presentation_hash(presentation):
    """md5 of the canonical JSON of the presentation; the weight bound and
    name are left out so tables of the same algebra share a hash
    """
    config = presentation_to_dict(presentation)
    config.pop('trunc')
    config.pop('name')
    return canonical_md5(config)
