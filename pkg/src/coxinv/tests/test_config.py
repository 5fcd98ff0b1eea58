from pathlib import Path

from pydantic import ValidationError
import pytest

from coxinv.config import ApplicationConfiguration
from coxinv.constants import DEFAULT_POINTS_PER_PRIME, DEFAULT_SEED
from coxinv.files import get_config_file
from coxinv.models import Mode


def test_defaults(isolated_environment: Path):
    # WHEN
    settings = ApplicationConfiguration()  # type: ignore[call-arg]
    # THEN
    assert settings.seed == DEFAULT_SEED
    assert settings.points == DEFAULT_POINTS_PER_PRIME
    assert settings.mode == Mode.MODULAR
    assert settings.threads is None
    assert settings.worker_threads() >= 1


def test_threads_from_the_environment(
    isolated_environment: Path, monkeypatch: pytest.MonkeyPatch
):
    # GIVEN
    monkeypatch.setenv('COXINV_THREADS', '3')
    # WHEN
    settings = ApplicationConfiguration()  # type: ignore[call-arg]
    # THEN
    assert settings.threads == 3
    assert settings.worker_threads() == 3


@pytest.mark.parametrize('threads', ['0', '-2', 'many'])
def test_invalid_threads(isolated_environment: Path, monkeypatch: pytest.MonkeyPatch, threads):
    # GIVEN
    monkeypatch.setenv('COXINV_THREADS', threads)
    # WHEN/THEN
    with pytest.raises(ValidationError):
        ApplicationConfiguration()  # type: ignore[call-arg]


def test_default_config_file_is_read(isolated_environment: Path):
    # GIVEN
    get_config_file().write_text('seed: 17\nexact: true\n')
    # WHEN
    settings = ApplicationConfiguration()  # type: ignore[call-arg]
    # THEN
    assert settings.seed == 17
    assert settings.mode == Mode.EXACT


def test_environment_overrides_the_config_file(
    isolated_environment: Path, monkeypatch: pytest.MonkeyPatch
):
    # GIVEN
    config_file = isolated_environment / 'custom.yaml'
    config_file.write_text('seed: 17\npoints: 5\n')
    monkeypatch.setenv('COXINV_CONFIG_FILE', str(config_file))
    monkeypatch.setenv('COXINV_SEED', '23')
    # WHEN
    settings = ApplicationConfiguration()  # type: ignore[call-arg]
    # THEN
    assert settings.seed == 23
    assert settings.points == 5


def test_missing_config_file(isolated_environment: Path, monkeypatch: pytest.MonkeyPatch):
    # GIVEN
    monkeypatch.setenv('COXINV_CONFIG_FILE', str(isolated_environment / 'missing.yaml'))
    # WHEN/THEN
    with pytest.raises(FileNotFoundError):
        ApplicationConfiguration()  # type: ignore[call-arg]


def test_init_values_take_precedence(isolated_environment: Path, monkeypatch: pytest.MonkeyPatch):
    # GIVEN
    monkeypatch.setenv('COXINV_POINTS', '9')
    # WHEN
    settings = ApplicationConfiguration(points=2)  # type: ignore[call-arg]
    # THEN
    assert settings.points == 2
