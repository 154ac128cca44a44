import pytest

from necklace.component.oracle import (
    ChainMaps,
    GradedBasis,
    assemble_maps,
    chain_maps,
    cyclic_orbits,
)
from necklace.component.rewriting import complete
from necklace.component.rewriting.witnesses import (
    exterior_algebra,
    free_algebra,
    symmetric_witness,
)
from necklace.exceptions import ChainComplexError


class RotationWithoutSigns(ChainMaps):
    def t(self, tensor):
        return 1, (tensor[-1],) + tensor[:-1]


@pytest.fixture
def free_even():
    return complete(free_algebra([('a', 1, 0), ('b', 1, 0)], trunc=3))


def test_block_sizes(free_even):
    basis = GradedBasis(free_even, 3, 3)
    assert basis.dimension(1, 3, 0) == 8
    assert basis.dimension(2, 3, 0) == 16
    assert basis.dimension(3, 3, 0) == 8
    assert basis.dimension(2, 3, 1) == 0
    assert basis.dimension(4, 3, 0) == 0
    assert basis.block(2, 2, 0) == [((0,), (0,)), ((0,), (1,)), ((1,), (0,)), ((1,), (1,))]
    assert basis.index(2, 2, 0)[((1,), (0,))] == 2


def test_maps_on_two_letters(free_even):
    maps = chain_maps(free_even, 3, 1)
    a, b = (0,), (1,)
    assert maps.b_prime((a, b)) == {((0, 1),): 1}
    assert maps.b((a, b)) == {((0, 1),): 1, ((1, 0),): -1}
    assert maps.t((a, b)) == (-1, (b, a))
    assert maps.one_minus_t((a, b)) == {(a, b): 1, (b, a): 1}


def test_odd_rotation_sign():
    rs = complete(free_algebra([('a', 1, 1), ('b', 1, 1)], trunc=3))
    maps = chain_maps(rs, 3, 1)
    assert maps.t(((0,), (1,))) == (1, ((1,), (0,)))
    assert maps.t(((0,), (1,), (1,)))[0] == 1


@pytest.mark.parametrize('presentation', [
    free_algebra([('a', 1, 0), ('b', 1, 1)], trunc=4),
    exterior_algebra(2, trunc=4),
    symmetric_witness(trunc=4),
])
def test_identities_hold(presentation):
    rs = complete(presentation)
    assemble_maps(rs, GradedBasis(rs, 4, 4))


def test_identities_catch_sign_errors(free_even):
    maps = RotationWithoutSigns(free_even, GradedBasis(free_even, 3, 3))
    with pytest.raises(ChainComplexError) as error:
        maps.check_block(2, 2, 0)
    assert error.value.identity == "b(1-t) = (1-t)b'"
    assert error.value.block == (2, 2, 0)


@pytest.mark.parametrize('parity,survivors', [(0, 0), (1, 1)])
def test_orbits_of_a_square(parity, survivors):
    rs = complete(free_algebra([('a', 1, parity)], trunc=2))
    maps = chain_maps(rs, 2, 1)
    orbits = cyclic_orbits(maps, 2, 2, 0)
    assert len(orbits.representatives) == survivors


def test_orbit_coordinates(free_even):
    maps = chain_maps(free_even, 3, 1)
    orbits = cyclic_orbits(maps, 2, 2, 0)
    # (a, a) and (b, b) rotate to minus themselves
    assert orbits.representatives == [((0,), (1,))]
    assert orbits.coordinates[((1,), (0,))] == (0, -1)
