from collections.abc import Callable
from pathlib import Path
import sys

import click
from pydantic import ValidationError
from rich.console import Console

from coxinv.algebra.format import poly_to_json
from coxinv.commands.handler import CommandHandler, tool_version
from coxinv.commands.render import (
    BenchRecordRenderer,
    CLIExceptionRenderer,
    EmissionRenderer,
    VerifyReportJSONRenderer,
    VerifyReportTextRenderer,
    emission_text,
)
from coxinv.coxeter.generators import GroupType, Variant
from coxinv.exceptions import CLIException
from coxinv.files import config_file_override, get_config_file
from coxinv.frobenius.prepotentials import PrepotentialName
from coxinv.frobenius.transforms import Y_W0_BOUNDS
from coxinv.invariants.basic import INVARIANT_NAMES
from coxinv.models import Emission
from coxinv.suites import ALL_SUITES, SUITES

console = Console()

FORMATS = click.Choice(['json', 'text'])


def _handler(**overrides) -> CommandHandler:
    """Builds the command handler; configuration problems end the command with exit status 1."""
    try:
        return CommandHandler(**overrides)
    except FileNotFoundError as e:
        console.print(e)
        sys.exit(1)
    except ValidationError as e:
        console.print('There are misconfigured values. Make sure your config file is correct.')
        for _e in e.errors():
            if location := _e.get('loc'):
                console.print(f'Misconfigured setting {location[0]}: {_e.get("msg")}')
        sys.exit(1)


def _fail(e: CLIException) -> None:
    console.print(str(e))
    renderer = CLIExceptionRenderer()
    renderer.render(console, e.get_extra_details())
    sys.exit(1)


def _emit(build: Callable[[CommandHandler], Emission], output_format: str, out: Path | None):
    handler = _handler()
    with console.status('Computing...'):
        try:
            emission = build(handler)
        except CLIException as e:
            _fail(e)
            return
    if out is not None:
        out.write_text(emission_text(emission, output_format) + '\n', encoding='utf-8')
        console.print(f'Wrote {emission.name} to {out}')
        return
    EmissionRenderer().render(console, emission, output_format=output_format)


@click.group()
def cli():
    pass


@cli.command('version', help='Shows the version of the tool.')
def version():
    console.print(tool_version())


@cli.command('config', help='Shows the location of the configuration file.')
def config():
    if (conf_file := config_file_override()) is not None:
        console.print(f'Using COXINV_CONFIG_FILE: {conf_file}')
    else:
        conf_file = get_config_file()
        status = '' if conf_file.exists() else ' (not present, defaults apply)'
        console.print(f'Using: {conf_file}{status}')


@cli.command('verify')
@click.option(
    '--suite',
    '-s',
    required=True,
    type=click.Choice([*SUITES, ALL_SUITES]),
    help='The verification suite to run; "all" runs every suite.',
)
@click.option(
    '--exact',
    is_flag=True,
    default=False,
    help='Check every identity by full expansion instead of modular evaluation.',
)
@click.option('--seed', type=int, default=None, help='Seeds the random evaluation points.')
@click.option(
    '--points', type=click.IntRange(min=1), default=None, help='Modular points per prime.'
)
@click.option('--format', 'output_format', type=FORMATS, default='json', help='Report format.')
def verify(
    suite: str,
    exact: bool = False,
    seed: int | None = None,
    points: int | None = None,
    output_format: str = 'json',
) -> None:
    """Runs a verification suite and prints its report.

    The exit status is 0 when every check passed and 1 otherwise.
    """
    handler = _handler(seed=seed, points=points, exact=exact)
    with console.status(f'Running {suite}...'):
        try:
            reports = handler.verify(suite)
        except CLIException as e:
            _fail(e)
            return
    if output_format == 'text':
        VerifyReportTextRenderer().render(console, reports)
    else:
        VerifyReportJSONRenderer().render(console, reports)
    sys.exit(0 if all(report.passed for report in reports) else 1)


@cli.group(help='Prints groups, invariants, discriminants, prepotentials and derived polynomials.')
def emit():
    pass


def _output_options(function):
    function = click.option(
        '--out', type=click.Path(dir_okay=False, path_type=Path), help='Write to this file.'
    )(function)
    return click.option(
        '--format', 'output_format', type=FORMATS, default='text', help='Output format.'
    )(function)


@emit.command('group')
@click.option('--type', 'group_type', required=True, type=click.Choice(['h3', 'h4']))
@click.option('--variant', default='plain', type=click.Choice(['plain', 'star']))
@_output_options
def emit_group(group_type: str, variant: str, output_format: str, out: Path | None) -> None:
    """Order, elements per trace and reflection forms of W(H3) or W(H4)."""
    _emit(
        lambda h: h.emit_group(GroupType(group_type), Variant(variant)), output_format, out
    )


@emit.command('invariant')
@click.option('--name', required=True, type=click.Choice(INVARIANT_NAMES))
@_output_options
def emit_invariant(name: str, output_format: str, out: Path | None) -> None:
    """A basic invariant as a polynomial in u."""
    _emit(lambda h: h.emit_invariant(name), output_format, out)


@emit.command('disc')
@click.option('--name', required=True, type=click.Choice([p.value for p in PrepotentialName]))
@_output_options
def emit_disc(name: str, output_format: str, out: Path | None) -> None:
    """The discriminant of a prepotential."""
    _emit(lambda h: h.emit_discriminant(PrepotentialName(name)), output_format, out)


@emit.command('prepotential')
@click.option('--name', required=True, type=click.Choice([p.value for p in PrepotentialName]))
@_output_options
def emit_prepotential(name: str, output_format: str, out: Path | None) -> None:
    """A prepotential in its working coordinates."""
    _emit(lambda h: h.emit_prepotential(PrepotentialName(name)), output_format, out)


@emit.command('y-in-t')
@click.option(
    '--j', 'weight', required=True, type=click.Choice([str(w) for w in Y_W0_BOUNDS])
)
@_output_options
def emit_y_in_t(weight: str, output_format: str, out: Path | None) -> None:
    """A star invariant of the septic map in the H4(9) coordinates, its w0 denominator cleared."""
    _emit(lambda h: h.emit_y_in_t(int(weight)), output_format, out)


@cli.command('solve')
@click.option(
    '--target',
    required=True,
    type=click.Path(exists=True, dir_okay=False, path_type=Path),
    help='A golden-format file holding an invariant polynomial in u.',
)
@click.option('--basis', required=True, type=click.Choice(['h3', 'h4']))
@click.option('--format', 'output_format', type=FORMATS, default='text', help='Output format.')
def solve(target: Path, basis: str, output_format: str = 'text') -> None:
    """Rewrites an invariant polynomial in the basic invariants of W(H3) or W(H4)."""
    handler = _handler()
    with console.status('Solving...'):
        try:
            result = handler.solve(target, GroupType(basis))
        except CLIException as e:
            _fail(e)
            return
    emission = Emission(target.name, str(result), poly_to_json(result.expr))
    EmissionRenderer().render(console, emission, output_format=output_format)


@cli.command('bench')
@click.option(
    '--workload', required=True, type=click.Choice(['mul210', 'theorem32', 'ddet'])
)
@click.option('--seed', type=int, default=None, help='Seeds the random inputs.')
def bench(workload: str, seed: int | None = None) -> None:
    """Times a kernel workload and prints a JSON record."""
    handler = _handler(seed=seed)
    with console.status(f'Running {workload}...'):
        try:
            record = handler.bench(workload)
        except CLIException as e:
            _fail(e)
            return
    BenchRecordRenderer().render(console, record)


def coxinvcli():
    cli()


if __name__ == '__main__':
    coxinvcli()
