"""Experiment config loading.

The config file is JSON. Relative data paths resolve against the config
file's directory so a config works from any working directory.
"""

import json
import logging
from pathlib import Path
from typing import Any

from pydantic import ValidationError

from asdbench.exceptions import ConfigError
from asdbench.models.experiment_model import ExperimentConfig


logger = logging.getLogger(__name__)


def describe_validation_error(exc: ValidationError) -> str:
    """One line per problem, naming the offending key path."""
    lines = []
    for error in exc.errors():
        location = ".".join(str(part) for part in error["loc"]) or "<root>"
        if error["type"] == "extra_forbidden":
            lines.append(f"unknown key '{location}'")
        else:
            lines.append(f"{location}: {error['msg']}")
    return "; ".join(lines)


def _resolve_paths(document: dict[str, Any], base_dir: Path) -> dict[str, Any]:
    data = document.get("data")
    if not isinstance(data, list):
        return document

    def resolve(value: Any) -> Any:
        if isinstance(value, str) and not Path(value).is_absolute():
            return str(base_dir / value)
        return value

    resolved = []
    for entry in data:
        if isinstance(entry, str):
            resolved.append(resolve(entry))
        elif isinstance(entry, dict):
            entry = dict(entry)
            for key in ("path", "schema"):
                if key in entry:
                    entry[key] = resolve(entry[key])
            resolved.append(entry)
        else:
            resolved.append(entry)
    return {**document, "data": resolved}


def parse_config(document: Any, *, base_dir: Path | None = None) -> ExperimentConfig:
    """Validate an already-decoded config document.

    Raises:
        ConfigError: Unknown key, wrong type or out-of-range value.
    """
    if not isinstance(document, dict):
        raise ConfigError("config must be a JSON object")
    if base_dir is not None:
        document = _resolve_paths(document, base_dir)
    try:
        return ExperimentConfig.model_validate(document)
    except ValidationError as exc:
        raise ConfigError(describe_validation_error(exc)) from exc


def load_config(path: str | Path) -> ExperimentConfig:
    """Read and validate the JSON config at ``path``, applying defaults.

    Raises:
        ConfigError: Missing or unreadable file, invalid JSON, or an
            invalid document.
    """
    config_path = Path(path)
    try:
        text = config_path.read_text(encoding="utf-8")
    except OSError as exc:
        raise ConfigError(f"cannot read config '{config_path}': {exc.strerror}") from exc
    try:
        document = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ConfigError(
            f"{config_path}: invalid JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}"
        ) from exc

    config = parse_config(document, base_dir=config_path.resolve().parent)
    logger.debug("Loaded config %s", config_path)
    return config


def apply_overrides(
    config: ExperimentConfig,
    *,
    seed: int | None = None,
    repeat: int | None = None,
    output_dir: Path | None = None,
) -> ExperimentConfig:
    """Copy of ``config`` with CLI overrides applied and re-validated."""
    document = config.to_document()
    if seed is not None:
        document["seed"] = seed
    if repeat is not None:
        document["repeat"] = repeat
    if output_dir is not None:
        document["output_dir"] = str(output_dir)
    return parse_config(document)
