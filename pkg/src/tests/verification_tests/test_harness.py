import json
import time

import pytest

from necklace.exceptions import UnknownCaseError
from necklace.verification import (
    Case,
    Verifier,
    compare_values,
    render_results,
    results_to_dict,
)
from necklace.verification import cases


@Case(randomized=False)
def always_wrong(_):
    """Expects 1 to equal 2"""
    return [compare_values('one is two', 1, 2)]


@Case(randomized=False)
def divides_by_zero(_):
    return [compare_values('never', 1 / 0, 0)]


@Case(randomized=False)
def sleeps(_):
    time.sleep(5)
    return []


@Case(randomized=True)
def draws(rng):
    return [compare_values('draw', rng.randint(0, 10 ** 9), None)]


CUSTOM = {
    'always-wrong': always_wrong,
    'divides-by-zero': divides_by_zero,
    'sleeps': sleeps,
    'draws': draws,
}


def test_case_directionality():
    for name, case in Verifier.available_cases.items():
        assert case.randomized in (True, False), name
        assert case.__doc__, name


def test_randomized_flags():
    assert cases.free_product.randomized
    assert not cases.hkr_n2.randomized
    with pytest.raises(ValueError):
        Case(randomized='yes')


def test_names_and_describe():
    verifier = Verifier()
    assert 'hkr-n2' in verifier.names()
    assert verifier.names() == sorted(verifier.names())
    described = dict((name, (randomized, text)) for name, randomized, text in verifier.describe())
    assert described['final-example'] == (
        False, 'hcfree(7yz - 3z^2) and polynomial_generic(7, 3, 1, 3) to weight 5')


def test_unknown_case():
    with pytest.raises(UnknownCaseError):
        Verifier().run(['hkr-n2', 'no-such-case'])


@pytest.mark.parametrize('name', [
    'final-example',
    'hcfree-geometric',
    'serre',
    'necklaces',
    'parse-round-trip',
])
def test_cheap_cases_pass(name):
    result = Verifier().run_case(name)
    assert result.passed, render_results([result], verbose=True)
    assert result.error is None
    assert result.checks


@pytest.mark.slow
@pytest.mark.parametrize('name', [
    'hkr-n2',
    'symmetric-form-abc',
    'koszul',
    'complex-identities',
    'exceptional-a0',
    'strongly-free-monomials',
])
def test_oracle_cases_pass(name):
    result = Verifier().run_case(name)
    assert result.passed, render_results([result], verbose=True)


def test_failures_are_reported():
    verifier = Verifier(case_timeout=1, custom_cases=CUSTOM)
    wrong, raised, slept = verifier.run(['always-wrong', 'divides-by-zero', 'sleeps'])
    assert not wrong.passed and wrong.error is None
    assert raised.error.startswith('ZeroDivisionError')
    assert slept.error == 'timed out after 1 s'

    text = render_results([wrong, raised, slept])
    assert 'FAIL always-wrong' in text
    assert 'one is two: computed 1, expected 2' in text
    assert text.endswith('0 of 3 cases passed')


def test_custom_cases_stay_local():
    assert 'always-wrong' not in Verifier().available_cases
    assert 'always-wrong' in Verifier(custom_cases=CUSTOM).available_cases


def test_seeds():
    first = Verifier(seed=3, custom_cases=CUSTOM).run_case('draws')
    again = Verifier(seed=3, custom_cases=CUSTOM).run_case('draws')
    other = Verifier(seed=4, custom_cases=CUSTOM).run_case('draws')
    assert first.checks[0].computed == again.checks[0].computed
    assert first.checks[0].computed != other.checks[0].computed


def test_results_to_dict_is_json():
    results = Verifier(custom_cases=CUSTOM).run(['final-example', 'always-wrong'])
    output = results_to_dict(results)
    assert json.loads(json.dumps(output)) == output
    assert output[0]['passed']
    assert output[1]['checks'][0] == {
        'label': 'one is two', 'equal': False, 'slot': None, 'computed': 1, 'expected': 2,
    }


def test_parallel_run_keeps_order():
    names = ['serre', 'necklaces', 'final-example']
    results = Verifier().run(names, n_processes=2)
    assert [result.name for result in results] == names
    assert all(result.passed for result in results)
