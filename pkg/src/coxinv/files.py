"""Locations of the configuration file and the log file."""

import os
from pathlib import Path

from xdg_base_dirs import xdg_config_home, xdg_state_home

from coxinv.constants import (
    APP_DIRECTORY_NAME,
    CONFIG_FILE_NAME,
    CONFIG_FILE_VARIABLE,
    LOG_FILE_FILE_NAME,
    LOG_FILE_VARIABLE,
)


def _app_directory(root: Path) -> Path:
    directory = root / APP_DIRECTORY_NAME
    directory.mkdir(exist_ok=True, parents=True)
    return directory


def get_config_file() -> Path:
    """The default config file, `$XDG_CONFIG_HOME/coxinv/config.yaml`. It may not exist."""
    return _app_directory(xdg_config_home()) / CONFIG_FILE_NAME


def get_log_file() -> Path:
    return _app_directory(xdg_state_home()) / LOG_FILE_FILE_NAME


def config_file_override() -> Path | None:
    if value := os.getenv(CONFIG_FILE_VARIABLE):
        return Path(value).resolve()
    return None


def resolve_config_file() -> Path | None:
    """Finds the YAML file the configuration is read from.

    Returns:
        The file named by `COXINV_CONFIG_FILE`, else the default config file if it exists, else
        `None`.

    Raises:
        FileNotFoundError: if `COXINV_CONFIG_FILE` names a file that does not exist.
    """
    if (override := config_file_override()) is not None:
        if not override.exists():
            raise FileNotFoundError(f'Unable to find the config file you provided: {override}')
        return override
    default = get_config_file()
    return default if default.exists() else None


def resolve_log_file(configured: str | None) -> Path | None:
    """Finds the JSON log file.

    `COXINV_LOG_FILE` wins over the configured `log_file`, which wins over the XDG state
    directory. An empty configured value disables file logging and returns `None`.
    """
    if value := os.getenv(LOG_FILE_VARIABLE):
        return Path(value).resolve()
    if configured is not None:
        return Path(configured).resolve() if configured else None
    return get_log_file()
