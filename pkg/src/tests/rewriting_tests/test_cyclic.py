import pytest

from necklace.component.rewriting import complete, hc0_direct
from necklace.component.rewriting.witnesses import (
    free_algebra,
    monomial_quotient,
    polynomial_ring,
    symmetric_witness,
)
from necklace.component.series import SignedSeries
from necklace.component.transforms import hcfree


def test_single_odd_generator():
    rs = complete(free_algebra([('a', 1, 1)], trunc=6))
    assert hc0_direct(rs, 6) == SignedSeries(6, [], [0, 1, 0, 1, 0, 1])


def test_odd_monomial_quotient():
    rs = complete(monomial_quotient(['a', 'b'], 1, [['a', 'b']], trunc=6))
    assert hc0_direct(rs, 6) == SignedSeries(6, [], [0, 2, 0, 2, 0, 2])


def test_commutative_algebra_is_its_own_hc0():
    rs = complete(polynomial_ring(2, trunc=4))
    assert hc0_direct(rs, 4) == SignedSeries(4, [0, 2, 3, 4, 5])


@pytest.mark.parametrize('generators', [
    [('a', 1, 0), ('b', 1, 0)],
    [('a', 1, 0), ('b', 2, 1)],
    [('a', 1, 1), ('b', 1, 1), ('c', 2, 0)],
])
def test_free_algebras_match_hcfree(generators):
    rs = complete(free_algebra(generators, trunc=6))
    assert hc0_direct(rs, 6) == hcfree(rs.alphabet.series(6))


def test_symmetric_witness():
    rs = complete(symmetric_witness(trunc=5))
    expected = SignedSeries.monomial(2, 0, 1, 5) + hcfree(SignedSeries(5, [0, 0, -1], [0, 3]))
    assert hc0_direct(rs, 5) == expected
