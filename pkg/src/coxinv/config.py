from contextvars import ContextVar
import os

from pydantic import Field
from pydantic_settings import (
    BaseSettings,
    PydanticBaseSettingsSource,
    SettingsConfigDict,
    YamlConfigSettingsSource,
)

from coxinv.constants import (
    DEFAULT_HOLDOUT_POINTS,
    DEFAULT_POINTS_PER_PRIME,
    DEFAULT_SEED,
    DEFAULT_SOLVER_POINT_CAP,
)
from coxinv.files import resolve_config_file
from coxinv.models import Mode


class ApplicationConfiguration(BaseSettings):
    threads: int | None = Field(default=None, ge=1)
    """The largest number of worker threads. Defaults to the number of CPUs. Set it with the
    `COXINV_THREADS` environment variable."""
    seed: int = DEFAULT_SEED
    """Seeds every random stream: modular sample points, solver points and random kernel
    instances."""
    points: int = Field(default=DEFAULT_POINTS_PER_PRIME, ge=1)
    """The number of random points drawn for each of the three primes in a modular check."""
    exact: bool = False
    """If `True` every identity is checked by full expansion instead of modular evaluation. This may be
    very slow for the degree-140 and degree-210 identities of W(H4)."""
    solver_point_cap: int = Field(default=DEFAULT_SOLVER_POINT_CAP, ge=1)
    """The largest number of evaluation points the invariant solver draws before giving up."""
    holdout_points: int = Field(default=DEFAULT_HOLDOUT_POINTS, ge=0)
    """Extra points at which a solver result is validated."""
    log_file: str | None = None
    """The filename of the log file to use. If you set an empty string logging to a file is disabled."""
    log_level: str = 'WARNING'
    """The log level to use. Use Python's `logging` names: `CRITICAL`, `FATAL`, `ERROR`, `WARN`, `WARNING`, `INFO`,
    `DEBUG` and `NOTSET`."""

    model_config = SettingsConfigDict(
        env_prefix='COXINV_',
        extra='allow',
    )

    @property
    def mode(self) -> Mode:
        return Mode.EXACT if self.exact else Mode.MODULAR

    def worker_threads(self) -> int:
        return self.threads or os.cpu_count() or 1

    @classmethod
    def settings_customise_sources(
        cls,
        settings_cls: type[BaseSettings],
        init_settings: PydanticBaseSettingsSource,
        env_settings: PydanticBaseSettingsSource,
        dotenv_settings: PydanticBaseSettingsSource,
        file_secret_settings: PydanticBaseSettingsSource,
    ) -> tuple[PydanticBaseSettingsSource, ...]:
        conf_file = resolve_config_file()

        # earlier sources take precedence
        sources: list[PydanticBaseSettingsSource] = [init_settings, env_settings, dotenv_settings]
        if conf_file is not None:
            sources.append(YamlConfigSettingsSource(settings_cls, yaml_file=conf_file))
        return tuple(sources)


CONFIGURATION: ContextVar[ApplicationConfiguration] = ContextVar('configuration')
