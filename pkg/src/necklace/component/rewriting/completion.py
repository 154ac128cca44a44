"""Degree-truncated completion of homogeneous noncommutative presentations

Relations are oriented by the degree-lexicographic order into rules
``leading word -> tail``. Overlaps of leading words are resolved up to the
requested weight; new rules are interreduced against the old ones, so rule
leading words never contain each other and tails are always normal.
"""
import heapq
import logging
from fractions import Fraction

from descriptors import cachedproperty

from necklace.exceptions import IncompleteCompletionError, PresentationError

from .automaton import FactorAutomaton
from .monomials import is_strongly_free_monomials
from .words import (
    DegLex,
    MonomialSet,
    lc_add,
    lc_is_homogeneous,
    lc_sandwich,
    lc_scale,
    overlaps,
)


class RewritingSystem(object):
    """Rules {leading word: tail} complete for all words of weight at most
    ``complete_up_to``. Immutable once built.
    """

    def __init__(self, alphabet, order, rules, complete_up_to):
        self.alphabet = alphabet
        self.order = order
        self.rules = dict(rules)
        self.complete_up_to = complete_up_to

    def __repr__(self):
        return 'RewritingSystem({} rules, complete up to weight {})'.format(
            len(self.rules), self.complete_up_to)

    @cachedproperty
    def automaton(self):
        return FactorAutomaton(self.rules.keys(), len(self.alphabet))

    @cachedproperty
    def _normal_words(self):
        return self.automaton.enumerate(self.alphabet, self.complete_up_to)

    def normal_words(self, weight, parity):
        """Normal words of one weight and parity, lexicographic in letters"""
        if weight > self.complete_up_to:
            raise IncompleteCompletionError(
                'Rewriting system is complete up to weight {}, asked for weight {}'
                .format(self.complete_up_to, weight))
        return list(self._normal_words.get((weight, parity), []))

    def hilbert_series(self, trunc=None):
        trunc = self.complete_up_to if trunc is None else trunc
        if trunc > self.complete_up_to:
            raise IncompleteCompletionError(
                'Rewriting system is complete up to weight {}, asked for weight {}'
                .format(self.complete_up_to, trunc))
        return self.automaton.count(self.alphabet, trunc)

    def render_rules(self):
        alphabet = self.alphabet
        lines = []
        for lead in self.order.sorted(self.rules):
            tail = self.rules[lead]
            lines.append('{} -> {}'.format(alphabet.render(lead), render_combination(alphabet, tail)))
        return lines


def render_combination(alphabet, combination):
    if not combination:
        return '0'
    pieces = []
    for word in sorted(combination):
        value = combination[word]
        body = alphabet.render(word)
        magnitude = abs(value)
        if magnitude != 1:
            body = '{}*{}'.format(magnitude, body)
        pieces.append(('-' if value < 0 else '+', body))
    text = ('-' if pieces[0][0] == '-' else '') + pieces[0][1]
    for sign, body in pieces[1:]:
        text += ' {} {}'.format(sign, body)
    return text


def _reduce(combination, rules, lengths):
    """Full reduction of a linear combination against ``rules`` until no
    word contains a leading word
    """
    combination = dict(combination)
    while True:
        for word in list(combination):
            hit = _find_lead(word, rules, lengths)
            if hit is None:
                continue
            start, lead = hit
            value = combination.pop(word)
            lc_add(combination, lc_sandwich(word[:start], rules[lead], word[start + len(lead):]),
                   value)
            break
        else:
            return combination


def _find_lead(word, rules, lengths):
    for start in range(len(word)):
        for length in lengths:
            piece = word[start:start + length]
            if len(piece) == length and piece in rules:
                return start, piece
    return None


def complete(presentation):
    """Truncated noncommutative Buchberger completion of a presentation

    Returns a RewritingSystem whose normal words of weight up to
    ``presentation.trunc`` form a basis of the quotient algebra.
    """
    alphabet = presentation.alphabet
    order = DegLex(alphabet, presentation.order)
    trunc = presentation.trunc
    rules = {}
    counter = 0
    pending = []

    def push(combination):
        nonlocal counter
        if not combination:
            return
        weight = alphabet.weight(next(iter(combination)))
        if weight > trunc:
            return
        heapq.heappush(pending, (weight, counter, combination))
        counter += 1

    for relation in presentation.relations:
        if not lc_is_homogeneous(alphabet, relation):
            raise PresentationError('Relation {} is not homogeneous in weight and parity'
                                    .format(render_combination(alphabet, relation)))
        push(relation)

    critical_pairs = 0
    while pending:
        _, _, combination = heapq.heappop(pending)
        lengths = sorted({len(lead) for lead in rules})
        combination = _reduce(combination, rules, lengths)
        if not combination:
            continue
        lead = order.leading_word(combination)
        monic = lc_scale(combination, Fraction(1) / combination[lead])
        tail = lc_scale({w: v for w, v in monic.items() if w != lead}, -1)

        # old rules whose leading word contains the new one go back to pending
        for old_lead in [old for old in rules if _contains(old, lead)]:
            old_tail = rules.pop(old_lead)
            requeued = lc_scale(old_tail, -1)
            requeued[old_lead] = Fraction(1)
            push(requeued)
        rules[lead] = tail
        lengths = sorted({len(old) for old in rules})
        for old_lead in list(rules):
            if old_lead != lead:
                rules[old_lead] = _reduce(rules[old_lead], rules, lengths)

        for other in list(rules):
            for first, second in ((lead, other), (other, lead)):
                for length in overlaps(first, second):
                    overlap_word = first + second[length:]
                    if alphabet.weight(overlap_word) > trunc:
                        continue
                    critical_pairs += 1
                    s_poly = lc_sandwich((), rules[first], second[length:])
                    lc_add(s_poly, lc_sandwich(first[:len(first) - length], rules[second], ()), -1)
                    push(s_poly)
                if first == second:
                    break
        logging.debug('Added rule %s -> %s', alphabet.render(lead),
                      render_combination(alphabet, tail))

    logging.info('Completed rewriting system with %s rules up to weight %s '
                 '(%s critical pairs)', len(rules), trunc, critical_pairs)
    return RewritingSystem(alphabet, order, rules, trunc)


def _contains(word, factor):
    return word != factor and any(
        word[i:i + len(factor)] == factor for i in range(len(word) - len(factor) + 1))


def normal_form(rs, element):
    """Normal form of a word or a linear combination {word: coefficient}"""
    if isinstance(element, tuple):
        element = {element: Fraction(1)}
    for word in element:
        if rs.alphabet.weight(word) > rs.complete_up_to:
            raise IncompleteCompletionError(
                'Word {} has weight {} above the completion bound {}'
                .format(rs.alphabet.render(word), rs.alphabet.weight(word), rs.complete_up_to))
    automaton = rs.automaton
    combination = {word: Fraction(value) for word, value in element.items() if value}
    result = {}
    while combination:
        word, value = combination.popitem()
        hit = automaton.find_factor(word)
        if hit is None:
            lc_add(result, {word: value})
            continue
        start, lead = hit
        lc_add(combination, lc_sandwich(word[:start], rs.rules[lead], word[start + len(lead):]),
               value)
    return result


def normal_words(rs, trunc):
    """{(weight, parity): [normal words]} for weights 1..trunc"""
    return {(q, parity): rs.normal_words(q, parity)
            for q in range(1, trunc + 1) for parity in (0, 1)
            if rs.normal_words(q, parity)}


def has_strongly_free_leading_monomials(presentation):
    """True when the leading words of the monic relations form a strongly
    free monomial set (a sufficient condition for strong freeness)
    """
    order = DegLex(presentation.alphabet, presentation.order)
    leads = [order.leading_word(relation) for relation in presentation.relations if relation]
    if len(set(leads)) != len(leads):
        return False
    return is_strongly_free_monomials(MonomialSet(leads))
