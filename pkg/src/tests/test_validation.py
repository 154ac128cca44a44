import pytest

from necklace.exceptions import PresentationError
from necklace.oracles import SingleThreadedOracleRun
from necklace.oracles.validate import OracleRunValidator
from necklace.validation_primitives import (
    keys_should_be_known,
    section_should_be_list,
    value_should_be_in_range,
    value_should_be_positive_int,
)

from tests.utils import sample_config


def test_oracle_run_validator(capsys):
    OracleRunValidator().run(sample_config())
    assert 'no errors' in capsys.readouterr().out


def test_quiet_validation(capsys):
    SingleThreadedOracleRun(config=sample_config()).validate(echo=False)
    assert capsys.readouterr().out == ''


@pytest.mark.parametrize('change,section', [
    ({'colour': 'blue'}, 'presentation'),
    ({'generators': {'name': 'a'}}, 'generators'),
    ({'relations': 'ab + ba'}, 'relations'),
    ({'order': 'abc'}, 'order'),
    ({'relations': [[{'coef': 1, 'word': ['a', 'x']}]]}, 'relations'),
])
def test_malformed_presentation(change, section):
    config = dict(sample_config(), **change)
    with pytest.raises(PresentationError) as error:
        OracleRunValidator().run(config)
    assert str(error.value).startswith('Section: {} -'.format(section))


@pytest.mark.parametrize('trunc,max_hdeg,section', [
    (0, None, 'trunc'),
    (4, 5, 'max_hdeg'),
    (4, -1, 'max_hdeg'),
])
def test_bad_bounds(trunc, max_hdeg, section):
    with pytest.raises(ValueError) as error:
        OracleRunValidator().run(sample_config(), trunc=trunc, max_hdeg=max_hdeg)
    assert str(error.value).startswith('Section: {} -'.format(section))


def test_primitives():
    value_should_be_positive_int('trunc', 3)
    with pytest.raises(ValueError):
        value_should_be_positive_int('trunc', True)
    value_should_be_in_range('max_hdeg', 0, 0, 4)
    with pytest.raises(ValueError):
        value_should_be_in_range('max_hdeg', 2.0, 0, 4)
    keys_should_be_known({'a': 1}, ['a', 'b'])
    with pytest.raises(ValueError) as error:
        keys_should_be_known({'a': 1, 'c': 2}, ['a', 'b'])
    assert "['c']" in str(error.value)
    section_should_be_list('generators', [])
    with pytest.raises(ValueError):
        section_should_be_list('generators', {})
