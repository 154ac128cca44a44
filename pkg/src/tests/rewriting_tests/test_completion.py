import pytest

from necklace.component.rewriting import (
    Alphabet,
    Presentation,
    complete,
    has_strongly_free_leading_monomials,
    normal_form,
    normal_words,
    relation,
)
from necklace.component.rewriting.witnesses import (
    exterior_algebra,
    monomial_quotient,
    polynomial_ring,
    symmetric_witness,
)
from necklace.component.series import SignedSeries, invert
from necklace.exceptions import IncompleteCompletionError, PresentationError


def test_symmetric_witness_has_a_single_rule():
    rs = complete(symmetric_witness(trunc=4))
    assert rs.rules == {(0, 1): {(1, 0): -1, (2, 2): -1}}
    assert rs.render_rules() == ['a*b -> -b*a - c*c']
    assert rs.hilbert_series() == invert(SignedSeries(4, [1, 0, 1], [0, -3]))


def test_polynomial_ring_normal_words_are_sorted_monomials():
    rs = complete(polynomial_ring(2, trunc=4))
    assert rs.hilbert_series() == SignedSeries(4, [1, 2, 3, 4, 5])
    assert rs.normal_words(2, 0) == [(0, 0), (0, 1), (1, 1)]
    assert normal_form(rs, (1, 1, 0)) == {(0, 1, 1): 1}


def test_exterior_algebra():
    rs = complete(exterior_algebra(2, trunc=4))
    assert rs.hilbert_series() == SignedSeries(4, [1, 0, 1], [0, 2])
    assert normal_form(rs, {(0, 1): 2, (0, 0): 5}) == {(1, 0): -2}


def test_completion_adds_rules():
    alphabet = Alphabet([('a', 1, 0), ('b', 1, 0)])
    presentation = Presentation(alphabet, [relation(alphabet, (1, 'aa'), (-1, 'ab'))], trunc=3)
    rs = complete(presentation)
    assert rs.rules[(0, 0)] == {(0, 1): 1}
    assert rs.rules[(0, 1, 0)] == {(0, 1, 1): 1}
    assert rs.hilbert_series() == SignedSeries(3, [1, 2, 3, 4])


def test_completion_bound_is_enforced():
    rs = complete(polynomial_ring(2, trunc=3))
    with pytest.raises(IncompleteCompletionError):
        rs.normal_words(4, 0)
    with pytest.raises(IncompleteCompletionError):
        normal_form(rs, (0, 1, 1, 0))
    with pytest.raises(IncompleteCompletionError):
        rs.hilbert_series(4)


def test_normal_words_by_degree():
    rs = complete(monomial_quotient(['a', 'b'], 1, [['a', 'b']], trunc=2))
    assert normal_words(rs, 2) == {
        (1, 1): [(0,), (1,)],
        (2, 0): [(0, 0), (1, 0), (1, 1)],
    }


def test_non_homogeneous_relation():
    alphabet = Alphabet([('a', 1, 0), ('b', 2, 0)])
    with pytest.raises(PresentationError):
        Presentation(alphabet, [relation(alphabet, (1, 'aa'), (1, 'ab'))])


def test_strongly_free_leading_monomials():
    assert has_strongly_free_leading_monomials(symmetric_witness())
    assert not has_strongly_free_leading_monomials(exterior_algebra(2))
