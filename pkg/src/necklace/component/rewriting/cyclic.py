"""HC_0 = I/[I, I] straight from a completed rewriting system

The graded commutators [u, v] = uv - (-1)^{|u||v|} vu of normal words span
the same space as the commutators [x, m] of a generator x with a normal word
m, since [xu, m] = [x, um] + (-1)^{|x|(|u|+|m|)} [u, mx]. Only the latter are
built.
"""
import logging

from necklace.component.series import SignedSeries
from necklace.util.linalg import IncrementalRank

from .completion import normal_form


def commutator_rows(rs, weight, parity):
    """Normal forms of the generator commutators landing in one (weight,
    parity) block, as sparse rows over the block's normal words
    """
    alphabet = rs.alphabet
    columns = {word: i for i, word in enumerate(rs.normal_words(weight, parity))}
    rows = []
    for letter, generator in enumerate(alphabet):
        rest = weight - generator.weight
        if rest < 1:
            continue
        rest_parity = (parity - generator.parity) % 2
        for word in rs.normal_words(rest, rest_parity):
            sign = -1 if generator.parity and rest_parity else 1
            commutator = normal_form(rs, {(letter,) + word: 1})
            for normal, value in normal_form(rs, word + (letter,)).items():
                commutator[normal] = commutator.get(normal, 0) - sign * value
            row = {columns[normal]: value for normal, value in commutator.items() if value}
            if row:
                rows.append(row)
    return rows


def hc0_dimension(rs, weight, parity):
    echelon = IncrementalRank()
    for row in commutator_rows(rs, weight, parity):
        echelon.add(row)
    return len(rs.normal_words(weight, parity)) - echelon.rank


def hc0_direct(rs, trunc):
    """Series of HC_0 of the quotient algebra, weights 1..trunc"""
    terms = {}
    for q in range(1, trunc + 1):
        for parity in (0, 1):
            dimension = hc0_dimension(rs, q, parity)
            if dimension:
                terms[(q, parity)] = dimension
        logging.debug('HC_0 at weight %s: %s', q, (terms.get((q, 0), 0), terms.get((q, 1), 0)))
    return SignedSeries.from_terms(terms, trunc)
