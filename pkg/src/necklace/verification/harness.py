import logging
import random
import time
import traceback
from collections import namedtuple
from fractions import Fraction
from functools import partial
from multiprocessing import Pool

from timeout import timeout

from necklace.component.series import format_rational
from necklace.exceptions import UnknownCaseError
from necklace.util.batch import Batch

from . import cases

CaseResult = namedtuple('CaseResult', ['name', 'passed', 'checks', 'error'])

CASE_TIMEOUT = 60  # seconds

DEFAULT_SEED = 0


class Verifier(object):
    """Runs named verification cases, each under its own time limit and with
    its own seeded random generator, so results do not depend on which cases
    run or in what order.
    """
    available_cases = {
        'hkr-n2': cases.hkr_n2,
        'symmetric-form-abc': cases.symmetric_form_abc,
        'final-example': cases.final_example,
        'hcfree-geometric': cases.hcfree_geometric,
        'hc0-free-algebras': cases.hc0_free_algebras,
        'symmetric-lie-inverse': cases.symmetric_lie_inverse,
        'hcfree-rule9': cases.hcfree_rule9,
        'hcfree-logarithm-law': cases.hcfree_logarithm_law,
        'strongly-free-monomials': cases.strongly_free_monomials,
        'freeset': cases.freeset,
        'free-algebra-oracle': cases.free_algebra_oracle,
        'exceptional-a0': cases.exceptional_a0,
        'exceptional-a1': cases.exceptional_a1,
        'exceptional-b0': cases.exceptional_b0,
        'exceptional-b1': cases.exceptional_b1,
        'koszul': cases.koszul,
        'complex-identities': cases.complex_identities,
        'serre': cases.serre,
        'necklaces': cases.necklaces,
        'free-product': cases.free_product,
        'symmetric-preset-consistency': cases.symmetric_preset_consistency,
        'polynomial-generic-dual': cases.polynomial_generic_dual,
        'quotient-identity': cases.quotient_identity,
        'parse-round-trip': cases.parse_round_trip,
    }

    def __init__(self, seed=DEFAULT_SEED, case_timeout=CASE_TIMEOUT, custom_cases=None):
        """
        Args:
            seed (int) seeds the random generator of every randomized case
            case_timeout (int) seconds a single case may run
            custom_cases (dict) optional, name -> @Case-decorated callable,
                added to the available cases
        """
        self.seed = seed
        self.case_timeout = case_timeout
        self.available_cases = dict(self.available_cases)
        if custom_cases:
            self.available_cases.update(custom_cases)

    def names(self):
        return sorted(self.available_cases)

    def describe(self):
        """[(name, randomized, first docstring line)] in name order"""
        return [
            (name, case.randomized, (case.__doc__ or '').strip().split('\n')[0])
            for name, case in sorted(self.available_cases.items())
        ]

    def check_names(self, names):
        unknown = [name for name in names if name not in self.available_cases]
        if unknown:
            raise UnknownCaseError('Unknown verification case(s) {}; run verify --list'
                                   .format(', '.join(unknown)))

    def run_case(self, name):
        self.check_names([name])
        case = self.available_cases[name]
        rng = random.Random('{}:{}'.format(self.seed, name))
        start = time.time()
        try:
            with timeout(self.case_timeout):
                checks = list(case(rng))
        except TimeoutError:
            logging.warning('Case %s timed out after %s seconds', name, self.case_timeout)
            return CaseResult(name, False, [], 'timed out after {} s'.format(self.case_timeout))
        except Exception as e:
            logging.exception('Case %s raised', name)
            return CaseResult(name, False, [], '{}: {}'.format(type(e).__name__, e))
        passed = all(check.equal for check in checks)
        logging.info('Case %s %s in %.1f s (%s checks)', name,
                     'passed' if passed else 'failed', time.time() - start, len(checks))
        return CaseResult(name, passed, checks, None)

    def run(self, names, n_processes=1):
        """Results of the named cases, in the order given"""
        self.check_names(names)
        custom = [name for name in names if name not in Verifier.available_cases]
        if custom and n_processes > 1:
            logging.warning('Custom cases %s cannot be sent to worker processes; '
                            'running serially', ', '.join(custom))
        if n_processes == 1 or custom:
            return [self.run_case(name) for name in names]
        partial_run = partial(
            run_case_batch,
            seed=self.seed,
            case_timeout=self.case_timeout,
        )
        logging.info('Starting parallel verification: %s cases, %s processes',
                     len(names), n_processes)
        results = []
        for batch_results in self.parallelize(partial_run, names, n_processes):
            results += batch_results
        return results

    def parallelize(self, partially_bound_function, tasks, n_processes, chunksize=1):
        with Pool(n_processes, maxtasksperchild=1) as pool:
            for result in pool.map(
                partially_bound_function,
                [list(task_batch) for task_batch in Batch(tasks, chunksize)]
            ):
                yield result


def run_case_batch(names, seed, case_timeout):
    try:
        verifier = Verifier(seed=seed, case_timeout=case_timeout)
        return [verifier.run_case(name) for name in names]
    except Exception:
        logging.error('Child error: %s', traceback.format_exc())
        return [CaseResult(name, False, [], 'child process failed') for name in names]


def _plain(value):
    if isinstance(value, Fraction):
        return format_rational(value)
    if isinstance(value, tuple):
        return [_plain(item) for item in value]
    if isinstance(value, dict):
        return {str(key): _plain(item) for key, item in value.items()}
    return value


def results_to_dict(results):
    return [
        {
            'name': result.name,
            'passed': result.passed,
            'error': result.error,
            'checks': [
                {
                    'label': check.label,
                    'equal': check.equal,
                    'slot': _plain(check.slot),
                    'computed': _plain(check.computed),
                    'expected': _plain(check.expected),
                }
                for check in result.checks
            ],
        }
        for result in results
    ]


def render_results(results, verbose=False):
    """One PASS/FAIL line per case; failing checks show the first differing
    slot with the computed and expected values there
    """
    lines = []
    for result in results:
        lines.append('{} {}'.format('PASS' if result.passed else 'FAIL', result.name))
        if result.error:
            lines.append('    error: {}'.format(result.error))
        for check in result.checks:
            if check.equal and not verbose:
                continue
            if check.equal:
                lines.append('    ok {}'.format(check.label))
            elif check.slot is None:
                lines.append('    {}: computed {}, expected {}'.format(
                    check.label, _plain(check.computed), _plain(check.expected)))
            else:
                lines.append('    {}: first discrepancy at {}: computed {}, expected {}'.format(
                    check.label, check.slot, _plain(check.computed), _plain(check.expected)))
    passed = sum(result.passed for result in results)
    lines.append('{} of {} cases passed'.format(passed, len(results)))
    return '\n'.join(lines)
