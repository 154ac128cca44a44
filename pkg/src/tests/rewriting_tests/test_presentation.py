from fractions import Fraction

import pytest
import yaml

from necklace.component.rewriting import (
    load_presentation,
    presentation_from_dict,
    presentation_hash,
    presentation_to_dict,
)
from necklace.component.rewriting.witnesses import symmetric_witness
from necklace.exceptions import PresentationError

CONFIG = {
    'name': 'symmetric witness',
    'generators': [
        {'name': 'a', 'weight': 1, 'parity': 1},
        {'name': 'b', 'weight': 1, 'parity': 1},
        {'name': 'c', 'weight': 1, 'parity': 1},
    ],
    'relations': [
        [{'coef': 2, 'word': ['a', 'b']}, {'coef': 2, 'word': ['b', 'a']},
         {'coef': '2', 'word': ['c', 'c']}],
    ],
    'order': ['a', 'b', 'c'],
    'trunc': 6,
}


def test_from_dict():
    presentation = presentation_from_dict(CONFIG)
    assert presentation.name == 'symmetric witness'
    assert presentation.alphabet.names == ['a', 'b', 'c']
    assert presentation.relations == [{(0, 1): 1, (1, 0): 1, (2, 2): 1}]
    assert presentation.trunc == 6


def test_to_dict_and_back():
    presentation = symmetric_witness(trunc=5)
    config = presentation_to_dict(presentation)
    assert config['trunc'] == 5
    assert config['relations'][0][0] == {'coef': 1, 'word': ['a', 'b']}
    again = presentation_from_dict(config)
    assert again.relations == presentation.relations
    assert again.order == presentation.order


def test_hash_ignores_bound_and_name():
    presentation = presentation_from_dict(CONFIG)
    assert presentation_hash(presentation) == presentation_hash(symmetric_witness(trunc=3))
    assert presentation.hash == presentation_hash(presentation.with_trunc(2))


def test_rational_coefficients():
    config = dict(CONFIG, relations=[[{'coef': '1/2', 'word': ['a', 'b']},
                                      {'coef': -3, 'word': ['c', 'c']}]])
    presentation = presentation_from_dict(config)
    assert presentation.relations == [{(0, 1): 1, (2, 2): -6}]
    assert presentation_to_dict(presentation)['relations'][0][1]['coef'] == -6
    assert isinstance(presentation.relations[0][(2, 2)], Fraction)


@pytest.mark.parametrize('config,section', [
    ([], 'presentation'),
    ({'relations': []}, 'generators'),
    (dict(CONFIG, generators=[]), 'generators'),
    (dict(CONFIG, generators=[{'name': 'a', 'weight': 1}]), 'generators'),
    (dict(CONFIG, generators=[{'name': 'a', 'weight': 0, 'parity': 0}]), 'generators'),
    (dict(CONFIG, relations=[[{'coef': 1, 'word': ['a', 'd']}]]), 'relations'),
    (dict(CONFIG, relations=[[{'coef': 'x', 'word': ['a']}]]), 'relations'),
    (dict(CONFIG, relations=[[{'word': ['a']}]]), 'relations'),
    (dict(CONFIG, relations=[[{'coef': 1, 'word': []}]]), 'relations'),
    (dict(CONFIG, relations=[[{'coef': 1, 'word': ['a']},
                              {'coef': 1, 'word': ['b', 'c']}]]), 'relations'),
    (dict(CONFIG, trunc=0), 'trunc'),
    (dict(CONFIG, trunc='6'), 'trunc'),
    (dict(CONFIG, order=['a', 'b']), 'order'),
])
def test_malformed(config, section):
    with pytest.raises(PresentationError) as error:
        presentation_from_dict(config)
    assert str(error.value).startswith('Section: {} -'.format(section))


def test_load_presentation(tmpdir):
    path = tmpdir.join('presentation.yaml')
    path.write(yaml.dump(CONFIG))
    presentation = load_presentation(str(path))
    assert presentation.relations == presentation_from_dict(CONFIG).relations
