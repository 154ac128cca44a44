from contextlib import contextmanager
from tempfile import NamedTemporaryFile

import yaml

from necklace.oracles import CONFIG_VERSION


def sample_config(trunc=4):
    """Presentation config of k<a, b, c>/(ab + ba + c^2), a, b, c odd"""
    return {
        'config_version': CONFIG_VERSION,
        'name': 'symmetric witness',
        'generators': [
            {'name': 'a', 'weight': 1, 'parity': 1},
            {'name': 'b', 'weight': 1, 'parity': 1},
            {'name': 'c', 'weight': 1, 'parity': 1},
        ],
        'relations': [
            [
                {'coef': 1, 'word': ['a', 'b']},
                {'coef': 1, 'word': ['b', 'a']},
                {'coef': 1, 'word': ['c', 'c']},
            ],
        ],
        'order': ['a', 'b', 'c'],
        'trunc': trunc,
    }


def free_config(names, parity=0, trunc=4):
    return {
        'config_version': CONFIG_VERSION,
        'name': 'free',
        'generators': [{'name': name, 'weight': 1, 'parity': parity} for name in names],
        'relations': [],
        'trunc': trunc,
    }


@contextmanager
def config_file(config):
    with NamedTemporaryFile(mode='w', suffix='.yaml') as f:
        yaml.dump(config, f)
        f.flush()
        yield f.name
