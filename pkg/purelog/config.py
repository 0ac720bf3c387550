"""Session settings, with defaults taken from the environment or a `purelog.env` file"""

import os
from dataclasses import dataclass, field

from dotenv import find_dotenv, load_dotenv

from .errors import DomainError

TRUTHY = {"1", "true", "yes", "on"}
FALSY = {"0", "false", "no", "off", ""}


@dataclass
class SessionConfig:
    files: list[str] = field(default_factory=list)
    goal: str | None = None
    occur_check: bool = False
    steps: int | None = None
    quiet: bool = False

    @property
    def batch(self) -> bool:
        return self.goal is not None


def _flag(name: str, default: bool) -> bool:
    value = os.getenv(name)
    if value is None:
        return default
    value = value.strip().lower()
    if value in TRUTHY:
        return True
    if value in FALSY:
        return False
    raise DomainError(name, value)


def _positive_int(name: str) -> int | None:
    value = os.getenv(name)
    if value is None or not value.strip():
        return None
    try:
        number = int(value)
    except ValueError:
        raise DomainError(name, value) from None
    if number <= 0:
        raise DomainError(name, value)
    return number


def load_defaults(env_file: str = "purelog.env") -> SessionConfig:
    """Read PURELOG_* variables, loading `env_file` first if one can be found"""
    if dotenv_path := find_dotenv(env_file, usecwd=True):
        load_dotenv(dotenv_path)

    return SessionConfig(
        occur_check=_flag("PURELOG_OCCUR_CHECK", False),
        steps=_positive_int("PURELOG_STEPS"),
        quiet=_flag("PURELOG_QUIET", False),
    )
