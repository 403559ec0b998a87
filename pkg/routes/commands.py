#!/usr/bin/env python3
"""
Conflict Lattice - Command Routes
Flask blueprint carrying the command-line interface: lattice, identify,
stream and gen. Data goes to stdout, diagnostics to stderr.
"""

import click
from flask import Blueprint, current_app

from errors import ConflictError
from measures.formats import (
    LATTICE_FORMATS,
    emit_conflict_series,
    emit_lattice,
    emit_scenario,
    emit_series,
    format_value,
    load_scenario,
    parse_series,
)
from measures.lattice import check_monotone, check_normal, full_lattice, leave_one_out, rank_increments
from measures.scenarios import BUILTIN_EXAMPLES, gen_drift, paper_example
from measures.stream import conflict_series, summarize, window_len_for_seconds
from models import DriftScenarioConfig, SourceSubset, WindowConfig
from utils.event_log import log_event

# cli_group=None puts the commands at the top level of the app's CLI
commands_bp = Blueprint('commands', __name__, cli_group=None)


class ValidationFailed(click.ClickException):
    """Input data was rejected; exits with status 1."""

    exit_code = 1


def parse_subset(text):
    """Parse ``x1,x2`` (or ``1,2``) into a SourceSubset."""
    ids = []
    for token in text.split(','):
        token = token.strip().lower()
        if not token:
            continue
        digits = token[1:] if token.startswith('x') else token
        if not digits.isdigit() or int(digits) < 1:
            raise click.BadParameter(f'{token!r} is not a source such as x1', param_hint='--subset')
        ids.append(int(digits))
    if not ids:
        raise click.BadParameter('no sources given', param_hint='--subset')
    return SourceSubset.from_ids(ids)


def _fmt(value):
    return format_value(value, current_app.config['DECIMAL_PLACES'])


def _run(action, work):
    """Run ``work`` and turn library errors into exit status 1."""
    try:
        return work()
    except ConflictError as exc:
        log_event('WARNING', 'CLI', action, f'{type(exc).__name__}: {exc}')
        raise ValidationFailed(str(exc)) from exc


def _lattice_for(scenario_file):
    scenario = load_scenario(scenario_file.read())
    lattice = full_lattice(
        scenario.evidence,
        max_sources=current_app.config['MAX_LATTICE_SOURCES'],
        workers=current_app.config['LATTICE_WORKERS'],
    )
    return scenario, lattice


@commands_bp.cli.command('lattice')
@click.argument('scenario_file', type=click.File('r'), default='-')
@click.option('--format', 'fmt', type=click.Choice(LATTICE_FORMATS), default='table',
              show_default=True, help='Human table or JSON document.')
def lattice_command(scenario_file, fmt):
    """Print the conflict value of every subset of a scenario's sources."""
    _, lattice = _run('lattice', lambda: _lattice_for(scenario_file))
    click.echo(emit_lattice(lattice, fmt, current_app.config['DECIMAL_PLACES']), nl=False)


@commands_bp.cli.command('identify')
@click.argument('scenario_file', type=click.File('r'), default='-')
def identify_command(scenario_file):
    """Flag the most conflicting source and check the measure properties."""
    tol = current_app.config['MEASURE_TOLERANCE']

    def work():
        scenario, lattice = _lattice_for(scenario_file)
        return scenario, lattice, leave_one_out(lattice, tol)

    scenario, lattice, report = _run('identify', work)
    normal = check_normal(lattice, tol)
    monotone = check_monotone(lattice, tol)
    increments = rank_increments(lattice)

    click.echo('source,delta')
    for source_id, delta in sorted(report.deltas.items()):
        click.echo(f'x{source_id},{_fmt(delta)}')
    click.echo(f"argmax: {' '.join(f'x{i}' for i in report.argmax_ids)}")
    click.echo(f'normal: minimal_ok={str(normal.minimal_ok).lower()} '
               f'max_value={_fmt(normal.max_value)} attains_one={str(normal.attains_one).lower()}')
    click.echo(f'monotone: {str(monotone.is_monotone).lower()} ({len(monotone.violations)} violations)')
    for violation in monotone.violations:
        click.echo(f'  {violation.subset.label}={_fmt(violation.subset_value)} > '
                   f'{violation.superset.label}={_fmt(violation.superset_value)}')
    if increments:
        steepest = increments[0]
        click.echo(f'steepest: {steepest.subset.label} -> {steepest.superset.label} '
                   f'(+x{steepest.added_source}) {_fmt(steepest.delta)}')

    log_event('INFO', 'CLI', 'identify', f'{scenario.name}: argmax {report.argmax_ids}')


@commands_bp.cli.command('stream')
@click.argument('series_file', type=click.File('r'))
@click.option('--window', type=click.IntRange(min=1), default=None,
              help='Window length in samples.')
@click.option('--window-seconds', type=click.FloatRange(min=0, min_open=True), default=None,
              help='Window length in seconds, converted with the median sampling interval.')
@click.option('--stride', type=click.IntRange(min=1), default=None, help='Window step in samples.')
@click.option('--subset', default=None, help='Sources to evaluate, e.g. x2,x3,x4 (default: all).')
@click.option('--summary', is_flag=True, help='Append mean, variance and maximum.')
def stream_command(series_file, window, window_seconds, stride, subset, summary):
    """Print the conflict of each sliding window as time,cf rows."""
    if window is not None and window_seconds is not None:
        raise click.UsageError('use either --window or --window-seconds, not both')
    subset = parse_subset(subset) if subset else None
    places = current_app.config['DECIMAL_PLACES']

    def work():
        series = parse_series(series_file.read())
        if window_seconds is not None:
            window_len = window_len_for_seconds(series, window_seconds)
        else:
            window_len = window or current_app.config['DEFAULT_WINDOW']
        cfg = WindowConfig(window_len, stride or current_app.config['DEFAULT_STRIDE'], subset)
        cs = conflict_series(series, cfg)
        return cs, summarize(cs)

    cs, stats = _run('stream', work)
    click.echo(emit_conflict_series(cs, places), nl=False)
    if summary:
        click.echo(f'# mean={_fmt(stats.mean)} variance={_fmt(stats.variance)} '
                   f'max={_fmt(stats.max)} argmax_time={stats.argmax_time!r}')


@commands_bp.cli.command('gen')
@click.option('--example', type=click.IntRange(1, len(BUILTIN_EXAMPLES)), default=None,
              help='Write built-in example 1, 2 or 3 as a scenario file.')
@click.option('--drift', is_flag=True, help='Write a synthetic drift series file.')
@click.option('--sensors', type=int, default=DriftScenarioConfig.n_sensors, show_default=True)
@click.option('--duration', type=int, default=DriftScenarioConfig.duration_samples, show_default=True,
              help='Samples per sensor.')
@click.option('--baseline', type=float, default=DriftScenarioConfig.baseline, show_default=True)
@click.option('--noise', type=float, default=DriftScenarioConfig.noise_amplitude, show_default=True,
              help='Uniform noise amplitude.')
@click.option('--drifting-sensor', type=int, default=DriftScenarioConfig.drifting_sensor, show_default=True)
@click.option('--drift-start', type=int, default=DriftScenarioConfig.drift_start, show_default=True)
@click.option('--drift-end', type=int, default=DriftScenarioConfig.drift_end, show_default=True)
@click.option('--drift-magnitude', type=float, default=DriftScenarioConfig.drift_magnitude, show_default=True)
@click.option('--seed', type=int, default=DriftScenarioConfig.seed, show_default=True)
@click.option('--sample-period', type=float, default=DriftScenarioConfig.sample_period, show_default=True,
              help='Seconds between samples.')
@click.option('--out', type=click.File('w'), default='-', help='Output path (default: stdout).')
def gen_command(example, drift, sensors, duration, baseline, noise, drifting_sensor,
                drift_start, drift_end, drift_magnitude, seed, sample_period, out):
    """Write a built-in scenario or a generated drift series."""
    if (example is None) == (not drift):
        raise click.UsageError('choose exactly one of --example or --drift')

    if example is not None:
        text = _run('gen', lambda: emit_scenario(paper_example(example), f'example{example}'))
    else:
        cfg = DriftScenarioConfig(
            n_sensors=sensors, duration_samples=duration, baseline=baseline,
            noise_amplitude=noise, drifting_sensor=drifting_sensor,
            drift_start=drift_start, drift_end=drift_end,
            drift_magnitude=drift_magnitude, seed=seed, sample_period=sample_period,
        )
        text = _run('gen', lambda: emit_series(gen_drift(cfg)))

    out.write(text)
    log_event('INFO', 'CLI', 'gen', f'wrote {len(text)} characters to {out.name}')
