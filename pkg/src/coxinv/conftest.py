from pathlib import Path

import pytest

from coxinv.algebra.poly import Poly
from coxinv.algebra.rings import VarRing
from coxinv.config import CONFIGURATION, ApplicationConfiguration
from coxinv.models import Mode, SuiteSpec


@pytest.fixture
def xy_ring() -> VarRing:
    return VarRing.of('x', 'y')


@pytest.fixture
def xyz_ring() -> VarRing:
    return VarRing.of('x', 'y', 'z')


@pytest.fixture
def xy(xy_ring: VarRing) -> tuple[Poly, Poly]:
    return Poly.variables(xy_ring)  # type: ignore[return-value]


@pytest.fixture
def modular_spec() -> SuiteSpec:
    return SuiteSpec(name='test', mode=Mode.MODULAR, seed=7, points=4)


@pytest.fixture
def exact_spec() -> SuiteSpec:
    return SuiteSpec(name='test', mode=Mode.EXACT, seed=7, points=4)


@pytest.fixture
def isolated_environment(tmp_path: Path, monkeypatch: pytest.MonkeyPatch) -> Path:
    """Points the configuration and log locations into a temporary directory."""
    for name in (
        'COXINV_CONFIG_FILE',
        'COXINV_THREADS',
        'COXINV_SEED',
        'COXINV_POINTS',
        'COXINV_EXACT',
        'COXINV_LOG_LEVEL',
    ):
        monkeypatch.delenv(name, raising=False)
    monkeypatch.setenv('XDG_CONFIG_HOME', str(tmp_path / 'config'))
    monkeypatch.setenv('XDG_STATE_HOME', str(tmp_path / 'state'))
    monkeypatch.setenv('COXINV_LOG_FILE', str(tmp_path / 'coxinv.log'))
    return tmp_path


@pytest.fixture
def configuration(isolated_environment: Path) -> ApplicationConfiguration:
    settings = ApplicationConfiguration()  # type: ignore[call-arg]
    CONFIGURATION.set(settings)
    return settings
