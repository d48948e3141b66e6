# sympow/config.py
"""
Configuration file management.
"""

import os
from pathlib import Path
from typing import Any, Optional

import yaml
from pydantic import BaseModel, Field

from .utils.guards import Guards


class SympowConfig(BaseModel):
    """Complete sympow configuration; every section is optional."""

    guards: Guards = Field(default_factory=Guards)
    log_level: Optional[str] = Field(default=None, description="Overrides SYMPOW_LOG_LEVEL when set")
    default_strategy: str = Field(default="auto", description="Strategy used when a command names none; \"auto\" picks by ideal shape")
    default_justification: Optional[str] = Field(default=None, description="Justification paired with the default strategy")

    @classmethod
    def from_yaml(cls, config_path: str) -> "SympowConfig":
        """
        Load configuration from YAML file.

        Args:
            config_path: Path to YAML configuration file

        Returns:
            SympowConfig instance

        Raises:
            FileNotFoundError: If config file not found
            ValueError: If config format is invalid
        """
        path = Path(config_path)
        if not path.exists():
            raise FileNotFoundError(f"Configuration file not found: {config_path}")

        with open(path, 'r', encoding='utf-8') as f:
            data = yaml.safe_load(f)

        if data is None:
            return cls()
        if not isinstance(data, dict):
            raise ValueError(f"Configuration must be a mapping: {config_path}")

        unknown = set(data) - set(cls.model_fields)
        if unknown:
            raise ValueError(f"Unknown configuration sections: {sorted(unknown)}")

        return cls(**_resolve(data))

    def with_overrides(self, **guard_overrides) -> "SympowConfig":
        """Copy with CLI guard flags applied; None values are ignored."""
        update = {k: v for k, v in guard_overrides.items() if v is not None}
        if not update:
            return self
        return self.model_copy(update={"guards": self.guards.model_copy(update=update)})


def _resolve(value: Any) -> Any:
    """Resolve ``${ENV_VAR}`` strings recursively."""
    if isinstance(value, dict):
        return {k: _resolve(v) for k, v in value.items()}
    if isinstance(value, list):
        return [_resolve(v) for v in value]
    if isinstance(value, str) and value.startswith("${") and value.endswith("}"):
        return os.getenv(value[2:-1].strip())
    return value


def load_config(config_path: Optional[str] = None) -> SympowConfig:
    """Config from ``config_path``, else from $SYMPOW_CONFIG, else defaults."""
    path = config_path or os.getenv("SYMPOW_CONFIG")
    if not path:
        return SympowConfig()
    return SympowConfig.from_yaml(path)


__all__ = ["SympowConfig", "load_config"]
