"""Command line: evaluate formulas, predict preset series, run the homology
oracle on presentation files and run verification cases

Exit codes: 0 on success or pass, 1 on a mismatch or failed verification,
2 on a usage error (including malformed formulas and presentation files).
"""
import json
import logging

import click
import yaml

from necklace.component.calculus import list_presets, predict
from necklace.component.oracle import HC, HH, render_table, verify_against
from necklace.component.series import (
    SignedSeries, render, render_coefficients, to_dict, tri_from_signed,
)
from necklace.exceptions import (
    ChainComplexError,
    ExpressionSyntaxError,
    IncompleteCompletionError,
    OracleConsistencyError,
)
from necklace.expressions import evaluate_text
from necklace.oracles import MultiCoreOracleRun, SingleThreadedOracleRun
from necklace.util.conf import load_config
from necklace.verification import (
    CASE_TIMEOUT,
    DEFAULT_SEED,
    Verifier,
    render_results,
    results_to_dict,
)

TABLE = 'table'
JSON = 'json'

LOG_LEVELS = ['DEBUG', 'INFO', 'WARNING', 'ERROR']

format_option = click.option('--format', 'output_format', type=click.Choice([TABLE, JSON]),
                             default=TABLE, show_default=True)


def _syntax_message(error):
    lines = error.text.split('\n')
    line = lines[error.lineno - 1] if error.lineno <= len(lines) else ''
    return '{} (line {}, column {})\n{}\n{}^'.format(
        error.message, error.lineno, error.column, line, ' ' * (error.column - 1))


def _evaluate(formula, trunc):
    try:
        return evaluate_text(formula, trunc)
    except ExpressionSyntaxError as e:
        raise click.UsageError(_syntax_message(e))
    except (ValueError, ArithmeticError) as e:
        raise click.UsageError(str(e))


def _echo_series(series, output_format):
    if output_format == JSON:
        click.echo(json.dumps(to_dict(series), indent=2))
    else:
        click.echo(render(series))
        click.echo(render_coefficients(series))


@click.group()
@click.option('--log-level', type=click.Choice(LOG_LEVELS), default='WARNING',
              show_default=True)
def cli(log_level):
    """Cyclic and Hochschild homology series of graded algebras"""
    logging.basicConfig(level=getattr(logging, log_level),
                        format='%(asctime)s %(levelname)s %(message)s')


@cli.command('eval')
@click.argument('formula')
@click.option('--trunc', type=click.IntRange(0), default=10, show_default=True)
@format_option
def eval_command(formula, trunc, output_format):
    """Evaluate FORMULA up to weight --trunc"""
    _echo_series(_evaluate(formula, trunc), output_format)


@cli.command('predict')
@click.argument('preset')
@click.argument('parameters', nargs=-1)
@click.option('--trunc', type=click.IntRange(0), default=10, show_default=True)
@format_option
def predict_command(preset, parameters, trunc, output_format):
    """Cyclic series of PRESET with integer PARAMETERS

    For 'exceptional' the first parameter names the case: A0, A1, B0 or B1.
    """
    values = list(parameters)
    start = 1 if preset == 'exceptional' and values else 0
    try:
        values[start:] = [int(value) for value in values[start:]]
        series = predict(preset, values, trunc)
    except ValueError as e:
        raise click.UsageError(str(e))
    _echo_series(series, output_format)


@cli.command('oracle')
@click.argument('presentation', type=click.Path(exists=True, dir_okay=False))
@click.option('--trunc', type=click.IntRange(1), default=None,
              help='Weight bound; defaults to the trunc of the presentation file.')
@click.option('--max-hdeg', type=click.IntRange(0), default=None,
              help='Largest homological degree; defaults to the weight bound.')
@click.option('--processes', type=click.IntRange(1), default=1, show_default=True)
@click.option('--expect', default=None,
              help='Formula to compare the table with; exit code 1 on a mismatch.')
@click.option('--kind', type=click.Choice([HC, HH]), default=HC, show_default=True,
              help='Which homology --expect describes.')
@format_option
def oracle_command(presentation, trunc, max_hdeg, processes, expect, kind, output_format):
    """Homology table of the algebra in PRESENTATION (YAML or JSON)"""
    try:
        config = load_config(presentation)
        if processes > 1:
            run = MultiCoreOracleRun(n_processes=processes, config=config,
                                     trunc=trunc, max_hdeg=max_hdeg)
        else:
            run = SingleThreadedOracleRun(config=config, trunc=trunc, max_hdeg=max_hdeg)
        run.validate(echo=False)
    except yaml.YAMLError as e:
        raise click.UsageError('Cannot read {}: {}'.format(presentation, e))
    except ValueError as e:
        raise click.UsageError(str(e))
    expected = _evaluate(expect, run.trunc) if expect is not None else None
    if isinstance(expected, SignedSeries):
        expected = tri_from_signed(expected)
    try:
        table = run()
    except (ChainComplexError, OracleConsistencyError, IncompleteCompletionError) as e:
        raise click.ClickException(str(e))

    report = verify_against(table, expected, kind) if expected is not None else None
    if output_format == JSON:
        output = table.to_dict()
        if report is not None:
            discrepancy = report.first_discrepancy
            output['comparison'] = {
                'kind': kind,
                'equal': report.equal,
                'compared': report.compared,
                'first_discrepancy': None if discrepancy is None else {
                    'slot': list(discrepancy.slot),
                    'computed': discrepancy.computed,
                    'expected': discrepancy.expected,
                },
            }
        click.echo(json.dumps(output, indent=2, default=str))
    else:
        click.echo(render_table(table))
        if report is not None:
            if report.equal:
                click.echo('{} matches {} on {} slots'.format(kind.upper(), expect,
                                                              report.compared))
            else:
                slot, computed, predicted = report.first_discrepancy
                click.echo('{} differs from {} at {}: computed {}, expected {}'.format(
                    kind.upper(), expect, slot, computed, predicted))
    if report is not None and not report.equal:
        raise SystemExit(1)


@cli.command('verify')
@click.argument('names', nargs=-1)
@click.option('--list', 'list_cases', is_flag=True, help='List the cases and exit.')
@click.option('--all', 'run_all', is_flag=True, help='Run every case.')
@click.option('--seed', type=int, default=DEFAULT_SEED, show_default=True,
              help='Seed for the randomized cases.')
@click.option('--processes', type=click.IntRange(1), default=1, show_default=True)
@click.option('--timeout', 'case_timeout', type=click.IntRange(1), default=CASE_TIMEOUT,
              show_default=True, help='Seconds per case.')
@click.option('--verbose', is_flag=True, help='Show passing checks too.')
@format_option
def verify_command(names, list_cases, run_all, seed, processes, case_timeout, verbose,
                   output_format):
    """Run the named verification cases"""
    verifier = Verifier(seed=seed, case_timeout=case_timeout)
    if list_cases:
        described = verifier.describe()
        if output_format == JSON:
            click.echo(json.dumps([
                {'name': name, 'randomized': randomized, 'description': description}
                for name, randomized, description in described
            ], indent=2))
        else:
            width = max(len(name) for name, _, _ in described)
            for name, randomized, description in described:
                click.echo('{}  {}  {}'.format(name.ljust(width),
                                               'random' if randomized else '      ',
                                               description))
        return
    if run_all:
        names = verifier.names()
    if not names:
        raise click.UsageError('Name at least one case, or pass --all or --list')
    try:
        verifier.check_names(names)
    except ValueError as e:
        raise click.UsageError(str(e))
    results = verifier.run(list(names), n_processes=processes)
    if output_format == JSON:
        click.echo(json.dumps(results_to_dict(results), indent=2, default=str))
    else:
        click.echo(render_results(results, verbose=verbose))
    if not all(result.passed for result in results):
        raise SystemExit(1)


@cli.command('list-presets')
@format_option
def list_presets_command(output_format):
    """Preset names with their parameters and constraints"""
    presets = list_presets()
    if output_format == JSON:
        click.echo(json.dumps([
            {'name': name, 'parameters': parameters, 'constraints': constraints}
            for name, parameters, constraints in presets
        ], indent=2))
        return
    for name, parameters, constraints in presets:
        click.echo('{}({})  {}'.format(name, ', '.join(parameters), ', '.join(constraints)))


if __name__ == '__main__':
    cli()
