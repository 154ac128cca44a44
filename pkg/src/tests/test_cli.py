import json

from click.testing import CliRunner

from necklace.cli import cli

from tests.utils import config_file, sample_config


def invoke(*args):
    return CliRunner().invoke(cli, list(args))


def test_eval():
    result = invoke('eval', 'hcfree(2*z)', '--trunc', '5')
    assert result.exit_code == 0
    assert result.output.split('\n')[0] == '2*z + 3*z^2 + 4*z^3 + 6*z^4 + 8*z^5'


def test_eval_json():
    result = invoke('eval', '1/(1 - y*z)', '--trunc', '2', '--format', 'json')
    assert result.exit_code == 0
    assert json.loads(result.output) == {
        'trunc': 2,
        'coefficients': [[0, 1, 0], [1, 0, 1], [2, 1, 0]],
    }


def test_eval_syntax_error():
    result = invoke('eval', 'hcfree(')
    assert result.exit_code == 2
    assert 'column 8' in result.output
    assert '       ^' in result.output


def test_eval_domain_error():
    result = invoke('eval', 'hcfree(1 + z)')
    assert result.exit_code == 2


def test_predict():
    result = invoke('predict', 'polynomial_generic', '7', '3', '1', '3', '--trunc', '5',
                    '--format', 'json')
    assert result.exit_code == 0
    assert json.loads(result.output)['coefficients'][0] == [0, 1, 0, 7]


def test_predict_exceptional():
    result = invoke('predict', 'exceptional', 'A0', '1', '--trunc', '3')
    assert result.exit_code == 0
    assert result.output.startswith('z + x^2*z^3')


def test_predict_bad_parameters():
    assert invoke('predict', 'generic_symmetric', '2').exit_code == 2
    assert invoke('predict', 'generic_symmetric', 'three').exit_code == 2
    assert invoke('predict', 'no_such_preset').exit_code == 2


def test_list_presets():
    result = invoke('list-presets')
    assert result.exit_code == 0
    assert 'generic_symmetric(n)  n >= 3' in result.output


def test_oracle_matches():
    with config_file(sample_config(trunc=3)) as path:
        result = invoke('oracle', path, '--max-hdeg', '2',
                        '--expect', 'generic_symmetric(3)')
    assert result.exit_code == 0
    assert 'HC matches generic_symmetric(3)' in result.output


def test_oracle_mismatch():
    with config_file(sample_config(trunc=3)) as path:
        result = invoke('oracle', path, '--max-hdeg', '1', '--expect', 'hcfree(3*y*z)',
                        '--format', 'json')
    assert result.exit_code == 1
    output = json.loads(result.output)
    assert output['N'] == 3
    assert output['comparison']['equal'] is False
    assert output['comparison']['first_discrepancy'] is not None


def test_oracle_bad_file():
    with config_file({'generators': 'abc'}) as path:
        result = invoke('oracle', path)
    assert result.exit_code == 2
    assert 'Section: generators' in result.output


def test_oracle_missing_file():
    assert invoke('oracle', '/nonexistent/presentation.yaml').exit_code == 2


def test_verify():
    result = invoke('verify', 'final-example', 'serre')
    assert result.exit_code == 0
    assert result.output.strip().endswith('2 of 2 cases passed')


def test_verify_usage():
    assert invoke('verify').exit_code == 2
    assert invoke('verify', 'no-such-case').exit_code == 2


def test_verify_list():
    result = invoke('verify', '--list', '--format', 'json')
    assert result.exit_code == 0
    names = [case['name'] for case in json.loads(result.output)]
    assert 'parse-round-trip' in names
    assert names == sorted(names)
