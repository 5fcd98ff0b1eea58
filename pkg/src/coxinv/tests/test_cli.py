import json
from pathlib import Path

from click.testing import CliRunner
import pytest

from coxinv.algebra.format import format_poly
from coxinv.algebra.parse import golden_poly
from coxinv.algebra.poly import Poly
from coxinv.cli import cli
from coxinv.invariants.basic import basic_invariants_h3


@pytest.fixture
def runner(isolated_environment: Path) -> CliRunner:
    return CliRunner()


def test_version(runner: CliRunner):
    # WHEN
    result = runner.invoke(cli, ['version'])
    # THEN
    assert result.exit_code == 0
    assert result.output.strip()


def test_verify_kernel(runner: CliRunner):
    # WHEN
    result = runner.invoke(cli, ['verify', '--suite', 'kernel', '--seed', '4', '--points', '2'])
    # THEN
    assert result.exit_code == 0, result.output
    report = json.loads(result.output)
    assert report['suite'] == 'kernel'
    assert report['status'] == 'pass'
    assert report['seed'] == 4
    assert report['points'] == 2
    assert report['mode'] == 'modular'
    assert report['checks']



def test_verify_fails_on_a_perturbed_golden(runner: CliRunner, monkeypatch: pytest.MonkeyPatch):
    # GIVEN
    original = golden_poly('disc_h4')
    perturbed = original + Poly.variable(original.ring, 'x4') ** 4
    monkeypatch.setattr(
        'coxinv.frobenius.suites._golden_in',
        lambda name, ring: (perturbed if name == 'disc_h4' else golden_poly(name)).to_ring(ring),
    )
    # WHEN
    result = runner.invoke(cli, ['verify', '--suite', 'h4-disc'])
    # THEN
    assert result.exit_code == 1
    report = json.loads(result.output)
    assert report['status'] == 'fail'
    failing = [check for check in report['checks'] if check['status'] == 'fail']
    assert [check['detail'] for check in failing] == ['first differing term -1*x4^4']

def test_verify_text_format(runner: CliRunner):
    # WHEN
    result = runner.invoke(cli, ['verify', '-s', 'kernel', '--points', '1', '--format', 'text'])
    # THEN
    assert result.exit_code == 0
    assert 'Status: pass' in result.output


@pytest.mark.parametrize(
    'arguments',
    [
        ['verify', '--suite', 'h5-invariants'],
        ['verify'],
        ['verify', '--suite', 'kernel', '--points', '0'],
        ['emit', 'group', '--type', 'h5'],
        ['emit', 'y-in-t', '--j', '7'],
        ['bench', '--workload', 'unknown'],
    ],
)
def test_usage_errors(runner: CliRunner, arguments: list[str]):
    # WHEN
    result = runner.invoke(cli, arguments)
    # THEN
    assert result.exit_code == 2


def test_missing_config_file_fails(runner: CliRunner, monkeypatch: pytest.MonkeyPatch):
    # GIVEN
    monkeypatch.setenv('COXINV_CONFIG_FILE', '/nonexistent/coxinv.yaml')
    # WHEN
    result = runner.invoke(cli, ['verify', '--suite', 'kernel'])
    # THEN
    assert result.exit_code == 1


def test_invalid_thread_count_fails(runner: CliRunner, monkeypatch: pytest.MonkeyPatch):
    # GIVEN
    monkeypatch.setenv('COXINV_THREADS', '0')
    # WHEN
    result = runner.invoke(cli, ['verify', '--suite', 'kernel'])
    # THEN
    assert result.exit_code == 1
    assert 'threads' in result.output


def test_emit_group(runner: CliRunner):
    # WHEN
    result = runner.invoke(cli, ['emit', 'group', '--type', 'h3'])
    # THEN
    assert result.exit_code == 0
    lines = result.output.splitlines()
    assert 'order 120' in lines
    assert 'reflections 15' in lines


def test_emit_group_as_json(runner: CliRunner):
    # WHEN
    result = runner.invoke(
        cli, ['emit', 'group', '--type', 'h3', '--variant', 'star', '--format', 'json']
    )
    # THEN
    assert result.exit_code == 0
    payload = json.loads(result.output)
    assert payload['name'] == 'h3/star'
    assert payload['value']['order'] == 120
    assert len(payload['value']['reflection_forms']) == 15


def test_emit_disc_h3(runner: CliRunner):
    # WHEN
    result = runner.invoke(cli, ['emit', 'disc', '--name', 'h3'])
    # THEN
    assert result.exit_code == 0
    assert result.output.strip() == format_poly(golden_poly('disc_h3'))  # type: ignore[arg-type]


def test_emit_is_reproducible(runner: CliRunner, tmp_path: Path):
    # GIVEN
    first = tmp_path / 'first.txt'
    second = tmp_path / 'second.txt'
    # WHEN
    runner.invoke(cli, ['emit', 'invariant', '--name', 'I2', '--out', str(first)])
    runner.invoke(cli, ['emit', 'invariant', '--name', 'I2', '--out', str(second)])
    # THEN
    assert first.read_bytes() == second.read_bytes()
    assert first.read_text().strip() == format_poly(basic_invariants_h3()['I2'])


def test_emit_prepotential_has_a_provenance_header(runner: CliRunner):
    # WHEN
    result = runner.invoke(cli, ['emit', 'prepotential', '--name', 'h3'])
    # THEN
    assert result.exit_code == 0
    assert result.output.startswith('# coxinv ')
    assert 'seed=0 mode=modular' in result.output.splitlines()[0]


def test_emit_y2_in_working_coordinates(runner: CliRunner):
    # WHEN
    result = runner.invoke(cli, ['emit', 'y-in-t', '--j', '2', '--format', 'json'])
    # THEN
    assert result.exit_code == 0
    payload = json.loads(result.output)
    assert payload['name'] == 'w0^0*Y2'
    assert payload['value']['ring'] == ['t1', 't2', 't4', 'w0']
    assert payload['provenance'].startswith('coxinv ')


def test_solve(runner: CliRunner, tmp_path: Path):
    # GIVEN
    i1, i2, _ = basic_invariants_h3().polys
    target = tmp_path / 'target.txt'
    target.write_text(f'# ring: u1 u2 u3\n{format_poly(i1**3 - i2 * 2)}\n')
    # WHEN
    result = runner.invoke(cli, ['solve', '--target', str(target), '--basis', 'h3'])
    # THEN
    assert result.exit_code == 0, result.output
    assert result.output.strip() == 'I1^3-2*I2'


def test_solve_rejects_a_non_invariant(runner: CliRunner, tmp_path: Path):
    # GIVEN
    target = tmp_path / 'target.txt'
    target.write_text('# ring: u1 u2 u3\nu1^2\n')
    # WHEN
    result = runner.invoke(cli, ['solve', '--target', str(target), '--basis', 'h3'])
    # THEN
    assert result.exit_code == 1


def test_solve_rejects_the_wrong_ring(runner: CliRunner, tmp_path: Path):
    # GIVEN
    target = tmp_path / 'target.txt'
    target.write_text('# ring: x y\nx^2+y^2\n')
    # WHEN
    result = runner.invoke(cli, ['solve', '--target', str(target), '--basis', 'h3'])
    # THEN
    assert result.exit_code == 1


def test_bench_mul210(runner: CliRunner, monkeypatch: pytest.MonkeyPatch):
    # GIVEN
    monkeypatch.setattr('coxinv.commands.handler.BENCH_TERMS', 12)
    monkeypatch.setattr('coxinv.commands.handler.BENCH_DEGREE', 6)
    # WHEN
    result = runner.invoke(cli, ['bench', '--workload', 'mul210', '--seed', '2'])
    # THEN
    assert result.exit_code == 0, result.output
    record = json.loads(result.output)
    assert record['workload'] == 'mul210'
    assert record['peak_terms']['factor'] <= 12
    assert 'multiply' in record['timings_ms']
