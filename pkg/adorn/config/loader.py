import json
import tomllib
from dataclasses import fields
from pathlib import Path
from typing import Any, Callable, Mapping

import yaml

from .types import Budgets, ConfigError, FileConfig, ProbeParams, UnsupportedConfigFormatError


def load_config(path: str | Path) -> FileConfig:
    pure_path = Path(path).expanduser().resolve()

    if not pure_path.exists():
        raise ConfigError(f"Config file not found: {pure_path}")

    if not pure_path.is_file():
        raise ConfigError(f"Config path is not a file: {pure_path}")

    fmt = _detect_format(pure_path)
    raw_file = _parse_file(pure_path, fmt)
    return _build_file_config(raw_file)


def load_budgets(path: str | Path) -> Budgets:
    return load_config(path).budgets


def _detect_format(path: Path) -> str:
    fmt = path.suffix
    match fmt:
        case ".yaml" | ".yml":
            return "yaml"
        case ".toml":
            return "toml"
        case ".json":
            return "json"
        case _:
            raise UnsupportedConfigFormatError(
                f"Unsupported file extension: {fmt or '(none)'}; expected .yml/.yaml, .toml or .json"
            )


def _parse_file(path: Path, fmt: str) -> Mapping[str, Any]:
    match fmt:
        case "yaml":
            return _parse_with(path, yaml.safe_load, yaml.YAMLError, "YAML")
        case "toml":
            return _parse_with(path, tomllib.loads, tomllib.TOMLDecodeError, "TOML")
        case "json":
            return _parse_with(path, json.loads, json.JSONDecodeError, "JSON")
        case _:
            raise AssertionError("Unreachable")


def _parse_with(
    path: Path,
    parse_fn: Callable[[str], Any],
    exc_types: type[Exception] | tuple[type[Exception], ...],
    label: str,
) -> Mapping[str, Any]:
    try:
        raw_file = parse_fn(path.read_text(encoding="utf-8"))
    except exc_types as exc:
        raise ConfigError(f"{path}: invalid {label}") from exc

    # An empty YAML document means "all defaults".
    if raw_file is None and label == "YAML":
        return {}

    if not isinstance(raw_file, Mapping):
        raise ConfigError(
            f"{path}: {label} parsed but the top-level value is not a mapping: {type(raw_file).__name__}"
        )

    return raw_file


def _build_file_config(raw: Mapping[str, Any]) -> FileConfig:
    for key in raw:
        if key not in ("budgets", "probe"):
            raise ConfigError(f"Unknown top-level field '{key}'")

    budgets = _build_section(raw, "budgets", Budgets)
    probe = _build_section(raw, "probe", ProbeParams)
    return FileConfig(budgets=budgets, probe=probe)


def _build_section(raw: Mapping[str, Any], name: str, cls: type) -> Any:
    if name not in raw:
        return cls()

    section = raw[name]
    if not isinstance(section, Mapping):
        raise ConfigError(f"'{name}' must be a mapping, got {type(section).__name__}")

    known = {f.name for f in fields(cls)}
    for key in section:
        if key not in known:
            raise ConfigError(f"{name}: unknown field '{key}'")

    return cls(**dict(section))
