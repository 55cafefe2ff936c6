"""
Runtime defaults, overridable through EDGEDECOMP_* environment variables
"""
import logging
import os
from dataclasses import dataclass
from typing import Mapping, Optional

from graph_core.errors import ParameterError

ENV_PREFIX = "EDGEDECOMP_"
LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL")


def _positive_int(env: Mapping[str, str], name: str, default: int) -> int:
    raw = env.get(ENV_PREFIX + name)
    if raw is None or raw.strip() == "":
        return default
    try:
        value = int(raw)
    except ValueError:
        raise ParameterError(f"{ENV_PREFIX}{name} must be an integer, got {raw!r}") from None
    if value < 1:
        raise ParameterError(f"{ENV_PREFIX}{name} must be positive, got {value}")
    return value


@dataclass(frozen=True)
class Settings:
    budget: int = 2_000_000
    jobs: int = 1
    log_level: str = "WARNING"

    @classmethod
    def from_env(cls, env: Optional[Mapping[str, str]] = None) -> "Settings":
        """
        Read settings from the environment

        Args:
            env: Mapping to read instead of os.environ

        Returns:
            Settings with defaults for unset variables
        """
        env = os.environ if env is None else env
        level = env.get(ENV_PREFIX + "LOG_LEVEL", cls.log_level).strip().upper() or cls.log_level
        if level not in LOG_LEVELS:
            raise ParameterError(f"{ENV_PREFIX}LOG_LEVEL must be one of {', '.join(LOG_LEVELS)}, got {level!r}")
        return cls(
            budget=_positive_int(env, "BUDGET", cls.budget),
            jobs=_positive_int(env, "JOBS", cls.jobs),
            log_level=level,
        )

    @property
    def logging_level(self) -> int:
        return getattr(logging, self.log_level)
