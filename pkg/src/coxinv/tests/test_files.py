from pathlib import Path

import pytest

from coxinv.files import get_log_file, resolve_config_file, resolve_log_file


def test_no_config_file(isolated_environment: Path):
    # THEN
    assert resolve_config_file() is None


def test_config_file_override(isolated_environment: Path, monkeypatch: pytest.MonkeyPatch):
    # GIVEN
    config_file = isolated_environment / 'custom.yaml'
    config_file.write_text('seed: 1\n')
    monkeypatch.setenv('COXINV_CONFIG_FILE', str(config_file))
    # WHEN/THEN
    assert resolve_config_file() == config_file.resolve()


def test_log_file_variable_wins(isolated_environment: Path):
    # THEN
    assert resolve_log_file('/tmp/other.log') == (isolated_environment / 'coxinv.log').resolve()


@pytest.mark.parametrize(
    'configured, expected',
    [
        ('', None),
        ('/tmp/coxinv-test.log', Path('/tmp/coxinv-test.log').resolve()),
    ],
)
def test_configured_log_file(
    isolated_environment: Path,
    monkeypatch: pytest.MonkeyPatch,
    configured: str,
    expected: Path | None,
):
    # GIVEN
    monkeypatch.delenv('COXINV_LOG_FILE')
    # WHEN/THEN
    assert resolve_log_file(configured) == expected


def test_default_log_file_lives_in_the_state_directory(
    isolated_environment: Path, monkeypatch: pytest.MonkeyPatch
):
    # GIVEN
    monkeypatch.delenv('COXINV_LOG_FILE')
    # WHEN
    log_file = resolve_log_file(None)
    # THEN
    assert log_file == get_log_file()
    assert log_file.parent.name == 'coxinv'
